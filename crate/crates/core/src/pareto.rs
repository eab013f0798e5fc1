//! EF1 and Pareto-optimal allocations: the adjusted-winner procedure for two
//! teams, the least-value-team procedure for three teams with identical
//! valuations, a pseudopolynomial table over utility vectors, and a
//! brute-force maximum-Nash-welfare search.

use std::cmp::Ordering;
use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::model::{Allocation, Comparison, Instance};
use crate::verify::{check_enumeration_budget, for_each_allocation, is_ef1};

/// Default number of table cells the utility-vector table may hold.
pub const DEFAULT_TABLE_BUDGET: u64 = 100_000_000;

/// Nash welfare with the degenerate-case rule: first the number of teams
/// with nonzero utility, then the product of those utilities. Orders like
/// the welfare it represents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NashWelfare {
    pub nonzero_teams: usize,
    pub product: BigUint,
}

impl NashWelfare {
    /// Utilities must be nonnegative.
    pub fn of(utilities: &[i64]) -> Self {
        let mut product = BigUint::from(1u32);
        let mut nonzero_teams = 0;
        for &u in utilities.iter().filter(|&&u| u != 0) {
            debug_assert!(u > 0);
            nonzero_teams += 1;
            product *= u as u64;
        }
        NashWelfare {
            nonzero_teams,
            product,
        }
    }
}

fn require_nonnegative(instance: &Instance, what: &str) -> Result<()> {
    for i in 0..instance.num_teams() {
        for p in 0..instance.num_players() {
            if instance.value(i, p) < 0 {
                return Err(Error::precondition(format!(
                    "{what} needs nonnegative values, but team {i} values player {p} at {}",
                    instance.value(i, p)
                )));
            }
        }
    }
    Ok(())
}

/// Sort key for players both teams value with the same sign.
///
/// `numerator / denominator` is `|v_1(p)| / |v_2(p)|`; ratios are compared by
/// cross-multiplication. Equal ratios are ordered by `tie_class`: 1 for
/// players who gain by switching sides (goods preferring team 2, chores
/// preferring team 1), 2 for indifferent players, 3 for the rest.
#[derive(Clone, Copy, Debug)]
pub struct RatioKey {
    pub numerator: u64,
    pub denominator: u64,
    pub tie_class: u8,
}

impl RatioKey {
    fn cmp_ratio(&self, other: &Self) -> Ordering {
        (self.numerator as u128 * other.denominator as u128)
            .cmp(&(other.numerator as u128 * self.denominator as u128))
    }
}

impl PartialEq for RatioKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RatioKey {}

impl Ord for RatioKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_ratio(other)
            .then(self.tie_class.cmp(&other.tie_class))
    }
}

impl PartialOrd for RatioKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Whether team 2 (index 1) envies team 1 (index 0) by more than one player.
fn second_envies_first(instance: &Instance, assignment: &[usize]) -> bool {
    let (mut own, mut other) = (0i128, 0i128);
    let (mut worst_own, mut best_other) = (0i64, 0i64);
    for (p, &t) in assignment.iter().enumerate() {
        let v = instance.value(1, p);
        if t == 1 {
            own += v as i128;
            worst_own = worst_own.min(v);
        } else {
            other += v as i128;
            best_other = best_other.max(v);
        }
    }
    !(own >= other || own - worst_own as i128 >= other || own >= other - best_other as i128)
}

/// EF1, PO and team-PO allocation for two teams with arbitrary values.
pub fn alg_adjusted_winner_two_teams(instance: &Instance) -> Result<Allocation> {
    if instance.num_teams() != 2 {
        return Err(Error::precondition(format!(
            "the adjusted-winner procedure needs exactly 2 teams, got {}",
            instance.num_teams()
        )));
    }
    let m = instance.num_players();
    let mut assignment = vec![0usize; m];
    let mut contested: Vec<(RatioKey, usize)> = Vec::new();
    for (p, slot) in assignment.iter_mut().enumerate() {
        let (v1, v2) = (instance.value(0, p), instance.value(1, p));
        let pref = instance.compare_teams(p, 0, 1);
        *slot = match (v1.signum(), v2.signum()) {
            // Worthless to both: go to a favourite, team 1 on ties.
            (0, 0) => usize::from(pref == Comparison::Worse),
            (s1, s2) if s1 >= 0 && s2 <= 0 => 0,
            (s1, s2) if s1 <= 0 && s2 >= 0 => 1,
            (s1, _) => {
                let good = s1 > 0;
                let tie_class = match (good, pref) {
                    (_, Comparison::Equal) => 2,
                    (true, Comparison::Worse) | (false, Comparison::Better) => 1,
                    _ => 3,
                };
                let key = RatioKey {
                    numerator: v1.unsigned_abs(),
                    denominator: v2.unsigned_abs(),
                    tie_class,
                };
                contested.push((key, p));
                if good {
                    0
                } else {
                    1
                }
            }
        };
    }
    contested.sort();

    for &(_, p) in &contested {
        if !second_envies_first(instance, &assignment) {
            break;
        }
        assignment[p] = 1 - assignment[p];
    }
    let allocation = Allocation::new(2, assignment)?;
    assert!(
        is_ef1(instance, &allocation).holds,
        "adjusted-winner output must be EF1"
    );
    Ok(allocation)
}

fn validate_three_teams(instance: &Instance) -> Result<Vec<usize>> {
    if instance.num_teams() != 3 {
        return Err(Error::precondition(format!(
            "the three-team procedure needs exactly 3 teams, got {}",
            instance.num_teams()
        )));
    }
    if let Some(i) = (1..3).find(|&i| instance.values()[i] != instance.values()[0]) {
        let p = (0..instance.num_players())
            .find(|&p| instance.value(i, p) != instance.value(0, p))
            .expect("rows differ");
        return Err(Error::precondition(format!(
            "teams must share one valuation, but team {i} values player {p} at {} and team 0 at {}",
            instance.value(i, p),
            instance.value(0, p)
        )));
    }
    require_nonnegative(instance, "the three-team procedure")?;
    (0..instance.num_players())
        .map(|p| {
            let mut sorted = instance.ranks()[p].clone();
            sorted.sort_unstable();
            if sorted != [1, 2, 2] {
                return Err(Error::precondition(format!(
                    "player {p} must prefer one team and be indifferent between the other two, but has ranks {:?}",
                    instance.ranks()[p]
                )));
            }
            Ok(instance.ranks()[p].iter().position(|&r| r == 1).expect("one favourite"))
        })
        .collect()
}

/// EF1 and PO allocation for three teams sharing a nonnegative valuation
/// when every player has one favourite team and is indifferent between the
/// other two.
pub fn alg_three_teams_identical(instance: &Instance) -> Result<Allocation> {
    let favourite = validate_three_teams(instance)?;
    let m = instance.num_players();
    let value = |p: usize| instance.value(0, p);
    let mut assignment: Vec<Option<usize>> = vec![None; m];
    let mut utility = [0i64; 3];

    for p in 0..m {
        if value(p) == 0 {
            assignment[p] = Some(favourite[p]);
        }
    }
    // Unassigned players of each type, most valuable first, ties by index.
    let mut remaining: [Vec<usize>; 3] = Default::default();
    for p in (0..m).filter(|&p| assignment[p].is_none()) {
        remaining[favourite[p]].push(p);
    }
    for list in &mut remaining {
        list.sort_by_key(|&p| (std::cmp::Reverse(value(p)), p));
        list.reverse(); // pop() yields the front
    }

    while remaining.iter().any(|r| !r.is_empty()) {
        let least = *utility.iter().min().expect("three teams");
        let tied: Vec<usize> = (0..3).filter(|&i| utility[i] == least).collect();
        let team = tied
            .iter()
            .copied()
            .find(|&i| !remaining[i].is_empty())
            .unwrap_or(tied[0]);

        let source = if !remaining[team].is_empty() {
            team
        } else {
            let left: Vec<usize> = (0..3).filter(|&t| !remaining[t].is_empty()).collect();
            if left.len() == 1 {
                left[0]
            } else {
                // Potential of a type: what its own team would reach if it got
                // every remaining player of that type.
                let potential =
                    |t: usize| utility[t] + remaining[t].iter().map(|&p| value(p)).sum::<i64>();
                let (j, k) = (left[0], left[1]);
                if potential(k) > potential(j) {
                    k
                } else {
                    j
                }
            }
        };
        let p = remaining[source].pop().expect("source type is nonempty");
        assignment[p] = Some(team);
        utility[team] += value(p);
    }
    Allocation::new(
        3,
        assignment
            .into_iter()
            .map(|t| t.expect("all assigned"))
            .collect(),
    )
}

/// Utility-vector table: `choice[j][cell]` is the team player `j` joins in the
/// stored allocation of the first `j + 1` players reaching utility vector
/// `cell`, or `DEAD` when that vector is unreachable.
struct UtilityTable<'a> {
    instance: &'a Instance,
    /// Mixed-radix strides; utility of team `i` ranges over `0..=caps[i]`.
    strides: Vec<usize>,
    caps: Vec<usize>,
    cells: usize,
    choice: Vec<Vec<u16>>,
}

const DEAD: u16 = u16::MAX;

impl UtilityTable<'_> {
    fn decode(&self, cell: usize) -> Vec<usize> {
        self.strides
            .iter()
            .zip(&self.caps)
            .map(|(&s, &c)| (cell / s) % (c + 1))
            .collect()
    }

    /// Cell reached by `column` players before player `column - 1` joined `team`.
    fn predecessor(&self, cell: usize, column: usize, team: usize) -> usize {
        cell - self.instance.value(team, column - 1) as usize * self.strides[team]
    }

    fn alive(&self, column: usize, cell: usize) -> bool {
        if column == 0 {
            cell == 0
        } else {
            self.choice[column - 1][cell] != DEAD
        }
    }

    /// Compares the stored allocations of two live cells of `column` by the
    /// ranks of players `column-1, column-2, ..., 0` (lower is better).
    fn compare_stored(&self, column: usize, mut a: usize, mut b: usize) -> Ordering {
        for col in (1..=column).rev() {
            if a == b {
                return Ordering::Equal;
            }
            let (ta, tb) = (
                self.choice[col - 1][a] as usize,
                self.choice[col - 1][b] as usize,
            );
            let player = col - 1;
            let by_rank = self
                .instance
                .rank(player, ta)
                .cmp(&self.instance.rank(player, tb));
            if by_rank != Ordering::Equal {
                return by_rank;
            }
            a = self.predecessor(a, col, ta);
            b = self.predecessor(b, col, tb);
        }
        Ordering::Equal
    }

    fn fill(&mut self) {
        for column in 1..=self.instance.num_players() {
            let player = column - 1;
            let mut col = vec![DEAD; self.cells];
            for (cell, slot) in col.iter_mut().enumerate() {
                let u = self.decode(cell);
                let mut best: Option<(usize, usize)> = None;
                for (team, &have) in u.iter().enumerate() {
                    let v = self.instance.value(team, player) as usize;
                    if have < v {
                        continue;
                    }
                    let prev = cell - v * self.strides[team];
                    if !self.alive(column - 1, prev) {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bt, bprev)) => {
                            let by_rank = self
                                .instance
                                .rank(player, team)
                                .cmp(&self.instance.rank(player, bt));
                            by_rank == Ordering::Less
                                || (by_rank == Ordering::Equal
                                    && self.compare_stored(column - 1, prev, bprev)
                                        == Ordering::Less)
                        }
                    };
                    if better {
                        best = Some((team, prev));
                    }
                }
                if let Some((team, _)) = best {
                    *slot = team as u16;
                }
            }
            self.choice.push(col);
        }
    }

    fn allocation_at(&self, mut cell: usize) -> Vec<usize> {
        let m = self.instance.num_players();
        let mut assignment = vec![0; m];
        for column in (1..=m).rev() {
            let team = self.choice[column - 1][cell] as usize;
            assignment[column - 1] = team;
            cell = self.predecessor(cell, column, team);
        }
        assignment
    }
}

/// EF1 and PO allocation for nonnegative integer values, via a table over
/// all reachable team-utility vectors. Among maximum-Nash-welfare vectors
/// the lexicographically greatest is chosen; its stored allocation is the
/// one best for the players in reverse index order.
///
/// The table holds `(m + 1) · ∏(1 + Σ_p v_i(p))` cells, which must not
/// exceed `budget`.
pub fn alg_dp_const_teams(instance: &Instance, budget: u64) -> Result<Allocation> {
    require_nonnegative(instance, "the utility-vector table")?;
    let n = instance.num_teams();
    let m = instance.num_players();
    if n >= DEAD as usize {
        return Err(Error::precondition(format!(
            "too many teams for the utility-vector table: {n}"
        )));
    }
    let caps: Vec<usize> = (0..n)
        .map(|i| (0..m).map(|p| instance.value(i, p) as u128).sum::<u128>())
        .map(|c| usize::try_from(c).unwrap_or(usize::MAX))
        .collect();
    let mut cells: u128 = 1;
    let mut strides = Vec::with_capacity(n);
    for &cap in &caps {
        strides.push(cells as usize);
        cells = cells.saturating_mul(cap as u128 + 1);
    }
    let required = cells.saturating_mul(m as u128 + 1);
    if required > budget as u128 {
        return Err(Error::Capacity {
            what: "utility-vector table",
            required: required.to_string(),
            budget,
        });
    }
    let mut table = UtilityTable {
        instance,
        strides,
        caps,
        cells: cells as usize,
        choice: Vec::with_capacity(m),
    };
    table.fill();

    let mut best: Option<(NashWelfare, Vec<usize>, usize)> = None;
    for cell in (0..table.cells).filter(|&c| table.alive(m, c)) {
        let u = table.decode(cell);
        let utilities: Vec<i64> = u.iter().map(|&x| x as i64).collect();
        let key = NashWelfare::of(&utilities);
        let better = match &best {
            None => true,
            Some((bk, bu, _)) => (&key, &u) > (bk, bu),
        };
        if better {
            best = Some((key, u, cell));
        }
    }
    let (_, _, cell) =
        best.expect("the all-zero vector is reachable when m = 0; otherwise some vector is");
    Allocation::new(n, table.allocation_at(cell))
}

/// Maximum-Nash-welfare allocation by enumeration. Among all maximizers,
/// returns the lexicographically first one with the least total player rank,
/// which no other maximizer Pareto dominates.
pub fn mnw_bruteforce(instance: &Instance, budget: u64) -> Result<Allocation> {
    require_nonnegative(instance, "maximum Nash welfare")?;
    check_enumeration_budget(instance, budget, "maximum-Nash-welfare search")?;
    let n = instance.num_teams();
    let mut best: Option<(NashWelfare, u64, Vec<usize>)> = None;
    let mut utilities = vec![0i64; n];
    for_each_allocation::<()>(instance, |assignment| {
        utilities.iter_mut().for_each(|u| *u = 0);
        let mut rank_sum = 0u64;
        for (p, &t) in assignment.iter().enumerate() {
            utilities[t] += instance.value(t, p);
            rank_sum += instance.rank(p, t) as u64;
        }
        let nonzero = utilities.iter().filter(|&&u| u != 0).count();
        if best
            .as_ref()
            .is_some_and(|(k, _, _)| nonzero < k.nonzero_teams)
        {
            return ControlFlow::Continue(());
        }
        let key = NashWelfare::of(&utilities);
        let better = match &best {
            None => true,
            Some((bk, brank, _)) => match key.cmp(bk) {
                Ordering::Greater => true,
                Ordering::Equal => rank_sum < *brank,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((key, rank_sum, assignment.to_vec()));
        }
        ControlFlow::Continue(())
    });
    let (_, _, assignment) = best.expect("at least one allocation exists");
    Allocation::new(n, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_po_bruteforce, DominanceScope, DEFAULT_ENUMERATION_BUDGET};

    fn prop12() -> Instance {
        Instance::from_matrices(
            vec![vec![3, 3, 2, 2], vec![1, 1, 0, 0]],
            vec![vec![1, 2]; 4],
        )
        .unwrap()
    }

    fn po(instance: &Instance, a: &Allocation, scope: DominanceScope) -> bool {
        is_po_bruteforce(instance, a, scope, DEFAULT_ENUMERATION_BUDGET)
            .unwrap()
            .holds
    }

    #[test]
    fn nash_welfare_order() {
        assert!(NashWelfare::of(&[2, 3]) > NashWelfare::of(&[5, 1]));
        assert!(NashWelfare::of(&[1, 1]) > NashWelfare::of(&[100, 0]));
        assert_eq!(NashWelfare::of(&[0, 0]).nonzero_teams, 0);
    }

    #[test]
    fn ratio_key_cross_multiplies() {
        let a = RatioKey {
            numerator: 1,
            denominator: 3,
            tie_class: 3,
        };
        let b = RatioKey {
            numerator: 2,
            denominator: 6,
            tie_class: 1,
        };
        let c = RatioKey {
            numerator: 1,
            denominator: 2,
            tie_class: 1,
        };
        assert!(b < a);
        assert!(a < c);
    }

    #[test]
    fn adjusted_winner_eight_players() {
        let v = vec![4, 4, 3, 3, 2, 2, 1, 1];
        let ranks = [0, 0, 1, 1, 1, 1, 0, 0]
            .iter()
            .map(|&f| if f == 0 { vec![1, 2] } else { vec![2, 1] })
            .collect();
        let inst = Instance::from_matrices(vec![v.clone(), v], ranks).unwrap();
        let a = alg_adjusted_winner_two_teams(&inst).unwrap();
        assert_eq!(a.bundles(), vec![vec![0, 1, 5, 6, 7], vec![2, 3, 4]]);
        assert_eq!(inst.utilities(&a), vec![12, 8]);
        assert!(po(&inst, &a, DominanceScope::AllParties));
        assert!(po(&inst, &a, DominanceScope::TeamsOnly));
    }

    #[test]
    fn adjusted_winner_single_split_player() {
        let inst = Instance::from_matrices(vec![vec![3], vec![-2]], vec![vec![2, 1]]).unwrap();
        assert_eq!(
            alg_adjusted_winner_two_teams(&inst).unwrap().assignment(),
            &[0]
        );
    }

    #[test]
    fn adjusted_winner_mixed_signs() {
        let inst =
            Instance::from_matrices(vec![vec![1, -1], vec![1, -1]], vec![vec![1, 1], vec![1, 1]])
                .unwrap();
        let a = alg_adjusted_winner_two_teams(&inst).unwrap();
        assert_eq!(a.assignment(), &[1, 1]);
        assert!(is_ef1(&inst, &a).holds);
        assert!(po(&inst, &a, DominanceScope::AllParties));
    }

    #[test]
    fn adjusted_winner_zero_players_follow_preference() {
        let inst = Instance::from_matrices(
            vec![vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![2, 1], vec![1, 2], vec![1, 1]],
        )
        .unwrap();
        assert_eq!(
            alg_adjusted_winner_two_teams(&inst).unwrap().assignment(),
            &[1, 0, 0]
        );
    }

    #[test]
    fn adjusted_winner_needs_two_teams() {
        let inst = Instance::from_matrices(vec![vec![1]; 3], vec![vec![1, 1, 1]]).unwrap();
        assert!(matches!(
            alg_adjusted_winner_two_teams(&inst),
            Err(Error::Precondition(_))
        ));
    }

    fn single_favourite(favourites: &[usize]) -> Vec<Vec<u32>> {
        favourites
            .iter()
            .map(|&f| (0..3).map(|t| if t == f { 1 } else { 2 }).collect())
            .collect()
    }

    #[test]
    fn three_teams_hand_trace() {
        let v = vec![4, 3, 2, 1];
        let inst = Instance::from_matrices(
            vec![v.clone(), v.clone(), v],
            single_favourite(&[0, 1, 2, 2]),
        )
        .unwrap();
        let a = alg_three_teams_identical(&inst).unwrap();
        assert_eq!(a.bundles(), vec![vec![0], vec![1], vec![2, 3]]);
        assert_eq!(inst.utilities(&a), vec![4, 3, 3]);
        assert!(is_ef1(&inst, &a).holds);
        assert!(po(&inst, &a, DominanceScope::AllParties));
    }

    #[test]
    fn three_teams_zero_values() {
        let inst =
            Instance::from_matrices(vec![vec![0; 3]; 3], single_favourite(&[2, 0, 1])).unwrap();
        assert_eq!(
            alg_three_teams_identical(&inst).unwrap().assignment(),
            &[2, 0, 1]
        );
    }

    #[test]
    fn three_teams_single_type() {
        let inst =
            Instance::from_matrices(vec![vec![1; 3]; 3], single_favourite(&[0, 0, 0])).unwrap();
        let a = alg_three_teams_identical(&inst).unwrap();
        assert_eq!(a.bundle_sizes(), vec![1, 1, 1]);
        assert!(is_ef1(&inst, &a).holds);
    }

    #[test]
    fn three_teams_preconditions() {
        let inst = Instance::from_matrices(vec![vec![1], vec![2], vec![1]], single_favourite(&[0]))
            .unwrap();
        assert!(
            matches!(alg_three_teams_identical(&inst), Err(Error::Precondition(msg)) if msg.contains("team 1"))
        );
        let inst = Instance::from_matrices(vec![vec![1]; 3], vec![vec![1, 2, 3]]).unwrap();
        assert!(
            matches!(alg_three_teams_identical(&inst), Err(Error::Precondition(msg)) if msg.contains("player 0"))
        );
        let inst = Instance::from_matrices(vec![vec![-1]; 3], single_favourite(&[0])).unwrap();
        assert!(alg_three_teams_identical(&inst).is_err());
    }

    #[test]
    fn dp_on_ranked_pair() {
        let inst = prop12();
        let a = alg_dp_const_teams(&inst, DEFAULT_TABLE_BUDGET).unwrap();
        assert_eq!(a.bundles(), vec![vec![2, 3], vec![0, 1]]);
        assert_eq!(inst.utilities(&a), vec![4, 2]);
    }

    #[test]
    fn dp_empty() {
        let inst = Instance::from_matrices(vec![vec![], vec![]], vec![]).unwrap();
        assert_eq!(
            alg_dp_const_teams(&inst, DEFAULT_TABLE_BUDGET)
                .unwrap()
                .num_players(),
            0
        );
    }

    #[test]
    fn dp_rejects_negative_and_capacity() {
        let inst = Instance::from_matrices(vec![vec![-1], vec![1]], vec![vec![1, 2]]).unwrap();
        assert!(matches!(
            alg_dp_const_teams(&inst, DEFAULT_TABLE_BUDGET),
            Err(Error::Precondition(_))
        ));
        let inst =
            Instance::from_matrices(vec![vec![1000; 10]; 3], vec![vec![1, 1, 1]; 10]).unwrap();
        assert!(matches!(
            alg_dp_const_teams(&inst, 1_000_000),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn dp_breaks_ties_for_later_players_first() {
        // Identical teams, values (1, 1): both (p1→A, p2→B) splits reach
        // (1, 1). Player 2 is served first: it prefers team 1.
        let inst =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 2], vec![1, 2]])
                .unwrap();
        let a = alg_dp_const_teams(&inst, DEFAULT_TABLE_BUDGET).unwrap();
        assert_eq!(a.assignment(), &[1, 0]);
    }

    #[test]
    fn mnw_examples() {
        let budget = DEFAULT_ENUMERATION_BUDGET;
        let inst = prop12();
        let a = mnw_bruteforce(&inst, budget).unwrap();
        assert_eq!(a.bundles(), vec![vec![2, 3], vec![0, 1]]);
        assert_eq!(
            NashWelfare::of(&inst.utilities(&a)).product,
            BigUint::from(8u32)
        );

        let single = Instance::from_matrices(vec![vec![1], vec![2]], vec![vec![1, 2]]).unwrap();
        assert_eq!(mnw_bruteforce(&single, budget).unwrap().assignment(), &[1]);

        let zero = Instance::from_matrices(
            vec![vec![0; 3]; 2],
            vec![vec![2, 1], vec![1, 2], vec![1, 1]],
        )
        .unwrap();
        assert_eq!(
            mnw_bruteforce(&zero, budget).unwrap().assignment(),
            &[1, 0, 0]
        );
    }

    #[test]
    fn mnw_rejects_negative() {
        let inst = Instance::from_matrices(vec![vec![-1], vec![1]], vec![vec![1, 2]]).unwrap();
        assert!(mnw_bruteforce(&inst, DEFAULT_ENUMERATION_BUDGET).is_err());
    }
}
