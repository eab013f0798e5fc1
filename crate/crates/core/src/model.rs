//! Instances, allocations and player preferences.
//!
//! Teams and players are addressed by 0-based indices everywhere, including
//! the JSON formats. Team valuations are exact 64-bit integers; player
//! preferences are weak orders stored as canonical rank vectors, where the
//! rank of a team is 1 plus the number of teams the player strictly prefers
//! to it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One player of an instance: the value every team assigns to the player and
/// the player's rank for every team.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlayerSpec {
    pub id: String,
    /// `values[i]` is team `i`'s value for this player.
    pub values: Vec<i64>,
    /// `ranks[i]` is this player's rank for team `i` (1 = most preferred).
    pub ranks: Vec<u32>,
}

#[derive(Clone, Serialize, Deserialize)]
struct InstanceDoc {
    teams: usize,
    players: Vec<PlayerSpec>,
}

/// Teams, players, team valuations and player preferences.
///
/// Instances are validated on construction and immutable afterwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InstanceDoc", into = "InstanceDoc")]
pub struct Instance {
    num_teams: usize,
    ids: Vec<String>,
    /// `values[i][p]`: team `i`'s value for player `p`.
    values: Vec<Vec<i64>>,
    /// `ranks[p][i]`: player `p`'s rank for team `i`.
    ranks: Vec<Vec<u32>>,
}

impl TryFrom<InstanceDoc> for Instance {
    type Error = Error;

    fn try_from(doc: InstanceDoc) -> Result<Self> {
        Instance::new(doc.teams, doc.players)
    }
}

impl From<Instance> for InstanceDoc {
    fn from(instance: Instance) -> Self {
        InstanceDoc {
            teams: instance.num_teams,
            players: (0..instance.num_players())
                .map(|p| instance.player_spec(p))
                .collect(),
        }
    }
}

/// Outcome of asking whether a player prefers one team to another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Better,
    Equal,
    Worse,
}

/// Canonical ranks for a weak order given by sort keys (lower key = more
/// preferred): `rank[i] = 1 + |{j : key[j] < key[i]}|`.
pub fn canonical_ranks<K: Ord>(keys: &[K]) -> Vec<u32> {
    keys.iter()
        .map(|k| 1 + keys.iter().filter(|other| *other < k).count() as u32)
        .collect()
}

fn check_rank_law(ranks: &[u32], field: impl Fn() -> String) -> Result<()> {
    let n = ranks.len() as u32;
    for (i, &r) in ranks.iter().enumerate() {
        if r < 1 || r > n {
            return Err(Error::invalid(
                field(),
                format!("rank {r} of team {i} is outside [1, {n}]"),
            ));
        }
    }
    if canonical_ranks(ranks) != ranks {
        return Err(Error::invalid(
            field(),
            format!(
                "ranks {ranks:?} are not canonical; expected {:?} (rank = 1 + number of strictly preferred teams)",
                canonical_ranks(ranks)
            ),
        ));
    }
    Ok(())
}

impl Instance {
    pub fn new(num_teams: usize, players: Vec<PlayerSpec>) -> Result<Self> {
        if num_teams == 0 {
            return Err(Error::invalid("teams", "must be a positive integer"));
        }
        let m = players.len();
        let mut values = vec![Vec::with_capacity(m); num_teams];
        let mut ranks = Vec::with_capacity(m);
        let mut ids = Vec::with_capacity(m);
        let mut max_abs: u64 = 0;
        for (p, spec) in players.into_iter().enumerate() {
            if spec.values.len() != num_teams {
                return Err(Error::invalid(
                    format!("players[{p}].values"),
                    format!("expected {num_teams} entries, found {}", spec.values.len()),
                ));
            }
            if spec.ranks.len() != num_teams {
                return Err(Error::invalid(
                    format!("players[{p}].ranks"),
                    format!("expected {num_teams} entries, found {}", spec.ranks.len()),
                ));
            }
            check_rank_law(&spec.ranks, || format!("players[{p}].ranks"))?;
            for (i, &v) in spec.values.iter().enumerate() {
                max_abs = max_abs.max(v.unsigned_abs());
                values[i].push(v);
            }
            ranks.push(spec.ranks);
            ids.push(spec.id);
        }
        // Every bundle sum, and every sum with one extra player removed or
        // added, must stay inside i64.
        let fits = (m as u64 + 1)
            .checked_mul(max_abs)
            .is_some_and(|total| total <= i64::MAX as u64);
        if !fits {
            return Err(Error::Overflow {
                num_players: m,
                max_abs,
            });
        }
        Ok(Instance {
            num_teams,
            ids,
            values,
            ranks,
        })
    }

    /// Builds an instance from a team-major value matrix (`values[i][p]`) and
    /// a player-major rank matrix (`ranks[p][i]`). Player ids default to
    /// `p1, p2, ...`.
    pub fn from_matrices(values: Vec<Vec<i64>>, ranks: Vec<Vec<u32>>) -> Result<Self> {
        let n = values.len();
        let m = ranks.len();
        for (i, row) in values.iter().enumerate() {
            if row.len() != m {
                return Err(Error::invalid(
                    format!("values[{i}]"),
                    format!("expected {m} entries, found {}", row.len()),
                ));
            }
        }
        let players = ranks
            .into_iter()
            .enumerate()
            .map(|(p, r)| PlayerSpec {
                id: format!("p{}", p + 1),
                values: values.iter().map(|row| row[p]).collect(),
                ranks: r,
            })
            .collect();
        Instance::new(n, players)
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let doc: InstanceDoc = serde_json::from_slice(bytes)?;
        Instance::try_from(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serialization is infallible")
    }

    pub fn num_teams(&self) -> usize {
        self.num_teams
    }

    pub fn num_players(&self) -> usize {
        self.ranks.len()
    }

    pub fn player_id(&self, player: usize) -> &str {
        &self.ids[player]
    }

    pub fn player_spec(&self, player: usize) -> PlayerSpec {
        PlayerSpec {
            id: self.ids[player].clone(),
            values: self.values.iter().map(|row| row[player]).collect(),
            ranks: self.ranks[player].clone(),
        }
    }

    /// Team `team`'s value for `player`. Panics on out-of-range indices.
    #[inline]
    pub fn value(&self, team: usize, player: usize) -> i64 {
        self.values[team][player]
    }

    /// Player `player`'s rank for `team`. Panics on out-of-range indices.
    #[inline]
    pub fn rank(&self, player: usize, team: usize) -> u32 {
        self.ranks[player][team]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn ranks(&self) -> &[Vec<u32>] {
        &self.ranks
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().flatten().all(|&v| v >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.values.iter().flatten().all(|&v| v <= 0)
    }

    pub fn is_binary(&self) -> bool {
        self.values.iter().flatten().all(|&v| v == 0 || v == 1)
    }

    /// All teams share one valuation.
    pub fn has_identical_valuations(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn max_abs_value(&self) -> u64 {
        self.values
            .iter()
            .flatten()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn check_team(&self, team: usize) -> Result<()> {
        if team >= self.num_teams {
            return Err(Error::TeamOutOfRange {
                team,
                num_teams: self.num_teams,
            });
        }
        Ok(())
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.num_players() {
            return Err(Error::PlayerOutOfRange {
                player,
                num_players: self.num_players(),
            });
        }
        Ok(())
    }

    /// Whether `player` prefers `team_a` to `team_b`.
    pub fn prefers(&self, player: usize, team_a: usize, team_b: usize) -> Result<Comparison> {
        self.check_player(player)?;
        self.check_team(team_a)?;
        self.check_team(team_b)?;
        Ok(self.compare_teams(player, team_a, team_b))
    }

    #[inline]
    pub(crate) fn compare_teams(&self, player: usize, team_a: usize, team_b: usize) -> Comparison {
        let (ra, rb) = (self.rank(player, team_a), self.rank(player, team_b));
        match ra.cmp(&rb) {
            std::cmp::Ordering::Less => Comparison::Better,
            std::cmp::Ordering::Equal => Comparison::Equal,
            std::cmp::Ordering::Greater => Comparison::Worse,
        }
    }

    /// Team `team`'s utility for its bundle under `allocation`.
    pub fn team_utility(&self, allocation: &Allocation, team: usize) -> Result<i64> {
        self.check_team(team)?;
        self.check_allocation(allocation)?;
        Ok(allocation.members(team).map(|p| self.value(team, p)).sum())
    }

    /// Utility of every team for its own bundle.
    pub fn utilities(&self, allocation: &Allocation) -> Vec<i64> {
        let mut u = vec![0i64; self.num_teams];
        for (p, &t) in allocation.assignment().iter().enumerate() {
            u[t] += self.value(t, p);
        }
        u
    }

    /// Ensures `allocation` assigns exactly this instance's players to this
    /// instance's teams.
    pub fn check_allocation(&self, allocation: &Allocation) -> Result<()> {
        if allocation.num_teams() != self.num_teams {
            return Err(Error::invalid(
                "allocation",
                format!(
                    "built for {} teams but the instance has {}",
                    allocation.num_teams(),
                    self.num_teams
                ),
            ));
        }
        if allocation.num_players() != self.num_players() {
            return Err(Error::invalid(
                "assignment",
                format!(
                    "has {} entries but the instance has {} players",
                    allocation.num_players(),
                    self.num_players()
                ),
            ));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AllocationDoc {
    assignment: Vec<usize>,
}

/// A total assignment of players to teams: `assignment[p]` is `p`'s team.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Allocation {
    num_teams: usize,
    assignment: Vec<usize>,
}

impl Allocation {
    pub fn new(num_teams: usize, assignment: Vec<usize>) -> Result<Self> {
        if num_teams == 0 {
            return Err(Error::invalid("teams", "must be a positive integer"));
        }
        if let Some((p, &t)) = assignment.iter().enumerate().find(|(_, &t)| t >= num_teams) {
            return Err(Error::invalid(
                format!("assignment[{p}]"),
                format!("team {t} out of range for {num_teams} teams"),
            ));
        }
        Ok(Allocation {
            num_teams,
            assignment,
        })
    }

    /// Builds an allocation from explicit bundles, `bundles[i]` being team
    /// `i`'s players. Every player in `0..num_players` must appear once.
    pub fn from_bundles(num_players: usize, bundles: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![usize::MAX; num_players];
        for (team, bundle) in bundles.iter().enumerate() {
            for &p in bundle {
                if p >= num_players {
                    return Err(Error::PlayerOutOfRange {
                        player: p,
                        num_players,
                    });
                }
                if assignment[p] != usize::MAX {
                    return Err(Error::invalid(
                        format!("bundles[{team}]"),
                        format!("player {p} assigned twice"),
                    ));
                }
                assignment[p] = team;
            }
        }
        if let Some(p) = assignment.iter().position(|&t| t == usize::MAX) {
            return Err(Error::invalid(
                "bundles",
                format!("player {p} is unassigned"),
            ));
        }
        Allocation::new(bundles.len(), assignment)
    }

    pub fn from_json(bytes: &[u8], num_teams: usize) -> Result<Self> {
        let doc: AllocationDoc = serde_json::from_slice(bytes)?;
        Allocation::new(num_teams, doc.assignment)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&AllocationDoc {
            assignment: self.assignment.clone(),
        })
        .expect("allocation serialization is infallible")
    }

    pub fn num_teams(&self) -> usize {
        self.num_teams
    }

    pub fn num_players(&self) -> usize {
        self.assignment.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    #[inline]
    pub fn team_of(&self, player: usize) -> usize {
        self.assignment[player]
    }

    /// Players assigned to `team`, in increasing index order.
    pub fn members(&self, team: usize) -> impl Iterator<Item = usize> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter(move |(_, &t)| t == team)
            .map(|(p, _)| p)
    }

    pub fn bundles(&self) -> Vec<Vec<usize>> {
        let mut bundles = vec![Vec::new(); self.num_teams];
        for (p, &t) in self.assignment.iter().enumerate() {
            bundles[t].push(p);
        }
        bundles
    }

    pub fn bundle_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_teams];
        for &t in &self.assignment {
            sizes[t] += 1;
        }
        sizes
    }
}
