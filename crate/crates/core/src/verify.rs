//! Fairness and stability predicates with witness extraction, plus
//! brute-force deciders for the properties that have no efficient test.
//!
//! Witness scans are deterministic: team pairs and player pairs are visited
//! in lexicographic order, and brute-force searches visit allocations in
//! lexicographic order of the assignment vector (player 0 most significant).

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Allocation, Comparison, Instance};

/// Default number of allocations a brute-force search may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Property {
    EF1,
    EF11,
    Balanced,
    SwapStable,
    IndividuallyStable,
    JustifiedEF,
    PO,
    TeamPO,
    PlayerPO,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::EF1,
        Property::EF11,
        Property::Balanced,
        Property::SwapStable,
        Property::IndividuallyStable,
        Property::JustifiedEF,
        Property::PO,
        Property::TeamPO,
        Property::PlayerPO,
    ];

    /// Short command-line name, e.g. `team-po`.
    pub fn short_name(self) -> &'static str {
        match self {
            Property::EF1 => "ef1",
            Property::EF11 => "ef11",
            Property::Balanced => "balanced",
            Property::SwapStable => "swap",
            Property::IndividuallyStable => "is",
            Property::JustifiedEF => "jef",
            Property::PO => "po",
            Property::TeamPO => "team-po",
            Property::PlayerPO => "player-po",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.short_name() == name)
    }
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A concrete demonstration that a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Team `envious` envies team `envied` beyond what the property allows.
    TeamEnvy { envious: usize, envied: usize },
    /// Bundle sizes of the two teams differ by more than one.
    SizeGap { larger: usize, smaller: usize },
    /// Exchanging players `p` and `q` is a beneficial swap.
    Swap { p: usize, q: usize },
    /// Moving `player` to `team` is a beneficial deviation.
    Deviation { player: usize, team: usize },
    /// Player `envious` has justified envy toward player `envied`.
    JustifiedEnvy { envious: usize, envied: usize },
    /// The allocation is dominated by this assignment.
    Dominated { by: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn from_witness(property: Property, witness: Option<Witness>) -> Self {
        PropertyReport {
            property,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Which parties are compared in Pareto dominance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominanceScope {
    AllParties,
    TeamsOnly,
    PlayersOnly,
}

impl DominanceScope {
    pub fn property(self) -> Property {
        match self {
            DominanceScope::AllParties => Property::PO,
            DominanceScope::TeamsOnly => Property::TeamPO,
            DominanceScope::PlayersOnly => Property::PlayerPO,
        }
    }

    fn compares_teams(self) -> bool {
        self != DominanceScope::PlayersOnly
    }

    fn compares_players(self) -> bool {
        self != DominanceScope::TeamsOnly
    }
}

#[derive(Clone, Copy, Default)]
struct BundleStats {
    sum: i128,
    min: Option<i64>,
    max: Option<i64>,
}

/// `stats[i][j]`: team `i`'s valuation of team `j`'s bundle.
fn bundle_stats(instance: &Instance, allocation: &Allocation) -> Vec<Vec<BundleStats>> {
    let n = instance.num_teams();
    let mut stats = vec![vec![BundleStats::default(); n]; n];
    for (p, &j) in allocation.assignment().iter().enumerate() {
        for (i, row) in stats.iter_mut().enumerate() {
            let v = instance.value(i, p);
            let s = &mut row[j];
            s.sum += v as i128;
            s.min = Some(s.min.map_or(v, |m| m.min(v)));
            s.max = Some(s.max.map_or(v, |m| m.max(v)));
        }
    }
    stats
}

/// `(own, own with its worst player removed, other, other with its best player removed)`
fn envy_terms(stats: &[Vec<BundleStats>], i: usize, j: usize) -> (i128, i128, i128, i128) {
    let own = stats[i][i];
    let other = stats[i][j];
    let own_drop = own.sum - own.min.unwrap_or(0).min(0) as i128;
    let other_drop = other.sum - other.max.unwrap_or(0).max(0) as i128;
    (own.sum, own_drop, other.sum, other_drop)
}

fn first_team_pair(n: usize, mut violated: impl FnMut(usize, usize) -> bool) -> Option<Witness> {
    for i in 0..n {
        for j in 0..n {
            if i != j && violated(i, j) {
                return Some(Witness::TeamEnvy {
                    envious: i,
                    envied: j,
                });
            }
        }
    }
    None
}

/// Envy-freeness up to one player: each team's envy disappears after
/// removing one player from either its own bundle or the envied bundle.
pub fn is_ef1(instance: &Instance, allocation: &Allocation) -> PropertyReport {
    let stats = bundle_stats(instance, allocation);
    let witness = first_team_pair(instance.num_teams(), |i, j| {
        let (own, own_drop, other, other_drop) = envy_terms(&stats, i, j);
        !(own >= other || own_drop >= other || own >= other_drop)
    });
    PropertyReport::from_witness(Property::EF1, witness)
}

/// EF[1,1]: envy disappears after removing up to one player from each side.
pub fn is_ef11(instance: &Instance, allocation: &Allocation) -> PropertyReport {
    let stats = bundle_stats(instance, allocation);
    let witness = first_team_pair(instance.num_teams(), |i, j| {
        let (_, own_drop, _, other_drop) = envy_terms(&stats, i, j);
        own_drop < other_drop
    });
    PropertyReport::from_witness(Property::EF11, witness)
}

pub fn is_balanced(allocation: &Allocation) -> PropertyReport {
    let sizes = allocation.bundle_sizes();
    let mut witness = None;
    'scan: for (i, &a) in sizes.iter().enumerate() {
        for (j, &b) in sizes.iter().enumerate() {
            if a > b + 1 {
                witness = Some(Witness::SizeGap {
                    larger: i,
                    smaller: j,
                });
                break 'scan;
            }
        }
    }
    PropertyReport::from_witness(Property::Balanced, witness)
}

/// Whether exchanging `p` and `q` (on different teams) makes no party worse
/// off and some party better off.
pub fn is_beneficial_swap(
    instance: &Instance,
    allocation: &Allocation,
    p: usize,
    q: usize,
) -> bool {
    let (i, j) = (allocation.team_of(p), allocation.team_of(q));
    if i == j {
        return false;
    }
    let team_i = instance.value(i, q).cmp(&instance.value(i, p));
    let team_j = instance.value(j, p).cmp(&instance.value(j, q));
    let player_p = instance.compare_teams(p, j, i);
    let player_q = instance.compare_teams(q, i, j);
    use std::cmp::Ordering::*;
    if team_i == Less
        || team_j == Less
        || player_p == Comparison::Worse
        || player_q == Comparison::Worse
    {
        return false;
    }
    team_i == Greater
        || team_j == Greater
        || player_p == Comparison::Better
        || player_q == Comparison::Better
}

/// First beneficial swap `(p, q)` with `p < q`, or `None` if the allocation
/// is swap stable.
pub fn find_beneficial_swap(
    instance: &Instance,
    allocation: &Allocation,
) -> Option<(usize, usize)> {
    let m = instance.num_players();
    (0..m)
        .flat_map(|p| (p + 1..m).map(move |q| (p, q)))
        .find(|&(p, q)| is_beneficial_swap(instance, allocation, p, q))
}

pub fn is_beneficial_deviation(
    instance: &Instance,
    allocation: &Allocation,
    player: usize,
    team: usize,
) -> bool {
    let from = allocation.team_of(player);
    from != team
        && instance.compare_teams(player, team, from) == Comparison::Better
        && instance.value(from, player) <= 0
        && instance.value(team, player) >= 0
}

/// First beneficial deviation `(player, team)`, or `None` if the allocation
/// is individually stable.
pub fn find_beneficial_deviation(
    instance: &Instance,
    allocation: &Allocation,
) -> Option<(usize, usize)> {
    let n = instance.num_teams();
    (0..instance.num_players())
        .flat_map(|p| (0..n).map(move |t| (p, t)))
        .find(|&(p, t)| is_beneficial_deviation(instance, allocation, p, t))
}

pub fn has_justified_envy(
    instance: &Instance,
    allocation: &Allocation,
    p: usize,
    q: usize,
) -> bool {
    let (i, j) = (allocation.team_of(p), allocation.team_of(q));
    i != j
        && instance.compare_teams(p, j, i) == Comparison::Better
        && instance.value(j, p) > instance.value(j, q)
}

/// First pair `(p, q)` where `p` has justified envy toward `q`.
pub fn find_justified_envy(instance: &Instance, allocation: &Allocation) -> Option<(usize, usize)> {
    let m = instance.num_players();
    (0..m)
        .flat_map(|p| (0..m).map(move |q| (p, q)))
        .find(|&(p, q)| has_justified_envy(instance, allocation, p, q))
}

pub fn swap_stability(instance: &Instance, allocation: &Allocation) -> PropertyReport {
    PropertyReport::from_witness(
        Property::SwapStable,
        find_beneficial_swap(instance, allocation).map(|(p, q)| Witness::Swap { p, q }),
    )
}

pub fn individual_stability(instance: &Instance, allocation: &Allocation) -> PropertyReport {
    PropertyReport::from_witness(
        Property::IndividuallyStable,
        find_beneficial_deviation(instance, allocation)
            .map(|(player, team)| Witness::Deviation { player, team }),
    )
}

pub fn justified_ef(instance: &Instance, allocation: &Allocation) -> PropertyReport {
    PropertyReport::from_witness(
        Property::JustifiedEF,
        find_justified_envy(instance, allocation)
            .map(|(envious, envied)| Witness::JustifiedEnvy { envious, envied }),
    )
}

fn player_ranks<'a>(
    instance: &'a Instance,
    assignment: &'a [usize],
) -> impl Iterator<Item = u32> + 'a {
    assignment
        .iter()
        .enumerate()
        .map(|(p, &t)| instance.rank(p, t))
}

/// Whether `candidate` Pareto dominates `baseline` within `scope`: nobody in
/// scope is worse off and somebody in scope is better off. Players compare
/// only the rank of their own team.
pub fn pareto_dominates(
    instance: &Instance,
    candidate: &Allocation,
    baseline: &Allocation,
    scope: DominanceScope,
) -> bool {
    let base_utils = instance.utilities(baseline);
    dominates_assignment(
        instance,
        candidate.assignment(),
        baseline.assignment(),
        &base_utils,
        scope,
    )
}

fn dominates_assignment(
    instance: &Instance,
    candidate: &[usize],
    baseline: &[usize],
    base_utils: &[i64],
    scope: DominanceScope,
) -> bool {
    let mut strict = false;
    if scope.compares_players() {
        for (new, old) in player_ranks(instance, candidate).zip(player_ranks(instance, baseline)) {
            if new > old {
                return false;
            }
            strict |= new < old;
        }
    }
    if scope.compares_teams() {
        let mut utils = vec![0i64; instance.num_teams()];
        for (p, &t) in candidate.iter().enumerate() {
            utils[t] += instance.value(t, p);
        }
        for (new, old) in utils.iter().zip(base_utils) {
            if new < old {
                return false;
            }
            strict |= new > old;
        }
    }
    strict
}

/// `n^m`, or `None` when it does not fit in a `u64`.
pub fn allocation_count(num_teams: usize, num_players: usize) -> Option<u64> {
    u32::try_from(num_players)
        .ok()
        .and_then(|m| (num_teams as u64).checked_pow(m))
}

pub(crate) fn check_enumeration_budget(
    instance: &Instance,
    budget: u64,
    what: &'static str,
) -> Result<()> {
    let (n, m) = (instance.num_teams(), instance.num_players());
    match allocation_count(n, m) {
        Some(count) if count <= budget => Ok(()),
        count => Err(Error::Capacity {
            what,
            required: count.map_or_else(|| format!("{n}^{m}"), |c| c.to_string()),
            budget,
        }),
    }
}

/// Visits every assignment with `assignment[p] ∈ domains[p]` in lexicographic
/// order. Domains must be sorted ascending.
pub(crate) fn for_each_assignment<B>(
    domains: &[Vec<usize>],
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    if domains.iter().any(|d| d.is_empty()) {
        return None;
    }
    let m = domains.len();
    let mut cursor = vec![0usize; m];
    let mut assignment: Vec<usize> = domains.iter().map(|d| d[0]).collect();
    loop {
        if let ControlFlow::Break(b) = visit(&assignment) {
            return Some(b);
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < domains[pos].len() {
                assignment[pos] = domains[pos][cursor[pos]];
                break;
            }
            cursor[pos] = 0;
            assignment[pos] = domains[pos][0];
        }
    }
}

/// Visits all `n^m` allocations in lexicographic order.
pub(crate) fn for_each_allocation<B>(
    instance: &Instance,
    visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let all: Vec<usize> = (0..instance.num_teams()).collect();
    let domains = vec![all; instance.num_players()];
    for_each_assignment(&domains, visit)
}

/// Decides Pareto optimality within `scope` by enumerating all `n^m`
/// allocations. The witness is the lexicographically first dominating
/// allocation.
pub fn is_po_bruteforce(
    instance: &Instance,
    allocation: &Allocation,
    scope: DominanceScope,
    budget: u64,
) -> Result<PropertyReport> {
    instance.check_allocation(allocation)?;
    check_enumeration_budget(instance, budget, "Pareto-optimality check")?;
    let baseline = allocation.assignment();
    let base_utils = instance.utilities(allocation);
    let n = instance.num_teams();
    // A dominating allocation never moves a player to a worse team when
    // players are in scope, so those teams can be skipped outright.
    let domains: Vec<Vec<usize>> = (0..instance.num_players())
        .map(|p| {
            (0..n)
                .filter(|&t| {
                    !scope.compares_players()
                        || instance.rank(p, t) <= instance.rank(p, baseline[p])
                })
                .collect()
        })
        .collect();
    let witness = for_each_assignment(&domains, |candidate| {
        if dominates_assignment(instance, candidate, baseline, &base_utils, scope) {
            ControlFlow::Break(Witness::Dominated {
                by: candidate.to_vec(),
            })
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(PropertyReport::from_witness(scope.property(), witness))
}

/// Searches all allocations for one that is both EF1 and justified EF,
/// returning the lexicographically first.
pub fn exists_ef1_jef_bruteforce(instance: &Instance, budget: u64) -> Result<Option<Allocation>> {
    check_enumeration_budget(instance, budget, "EF1 + justified-EF search")?;
    let n = instance.num_teams();
    let found = for_each_allocation(instance, |assignment| {
        let a = Allocation::new(n, assignment.to_vec()).expect("enumerated teams are in range");
        if find_justified_envy(instance, &a).is_none() && is_ef1(instance, &a).holds {
            ControlFlow::Break(a)
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// Evaluates one property. The Pareto variants are decided by brute force
/// under `budget`.
pub fn check_property(
    instance: &Instance,
    allocation: &Allocation,
    property: Property,
    budget: u64,
) -> Result<PropertyReport> {
    instance.check_allocation(allocation)?;
    Ok(match property {
        Property::EF1 => is_ef1(instance, allocation),
        Property::EF11 => is_ef11(instance, allocation),
        Property::Balanced => is_balanced(allocation),
        Property::SwapStable => swap_stability(instance, allocation),
        Property::IndividuallyStable => individual_stability(instance, allocation),
        Property::JustifiedEF => justified_ef(instance, allocation),
        Property::PO => is_po_bruteforce(instance, allocation, DominanceScope::AllParties, budget)?,
        Property::TeamPO => {
            is_po_bruteforce(instance, allocation, DominanceScope::TeamsOnly, budget)?
        }
        Property::PlayerPO => {
            is_po_bruteforce(instance, allocation, DominanceScope::PlayersOnly, budget)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alloc(m: usize, bundles: &[Vec<usize>]) -> Allocation {
        Allocation::from_bundles(m, bundles).unwrap()
    }

    fn example1() -> Instance {
        let ranks = vec![
            vec![1, 2, 2],
            vec![1, 2, 2],
            vec![2, 2, 1],
            vec![2, 1, 2],
            vec![2, 1, 2],
            vec![2, 2, 1],
        ];
        Instance::from_matrices(vec![vec![0; 6], vec![0; 6], vec![1, 1, 0, 0, 0, 0]], ranks)
            .unwrap()
    }

    fn prop8() -> Instance {
        Instance::from_matrices(vec![vec![1, -1], vec![1, -1]], vec![vec![1, 1], vec![1, 1]])
            .unwrap()
    }

    #[test]
    fn ef1_prop8() {
        let inst = prop8();
        let r = is_ef1(&inst, &alloc(2, &[vec![0], vec![1]]));
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness::TeamEnvy {
                envious: 1,
                envied: 0
            })
        );
        // Removing p2 from team 2 and p1 from team 1 gives 0 >= 0.
        assert!(is_ef11(&inst, &alloc(2, &[vec![0], vec![1]])).holds);
        let r = is_ef1(&inst, &alloc(2, &[vec![1], vec![0]]));
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness::TeamEnvy {
                envious: 0,
                envied: 1
            })
        );
    }

    #[test]
    fn ef1_example1() {
        let inst = example1();
        let before = alloc(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert!(is_ef1(&inst, &before).holds);
        let after = alloc(6, &[vec![0, 1], vec![3, 4], vec![2, 5]]);
        let r = is_ef1(&inst, &after);
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness::TeamEnvy {
                envious: 2,
                envied: 0
            })
        );
    }

    #[test]
    fn ef1_vacuous_without_players() {
        let inst = Instance::from_matrices(vec![vec![], vec![]], vec![]).unwrap();
        let a = Allocation::new(2, vec![]).unwrap();
        assert!(is_ef1(&inst, &a).holds);
        assert!(is_ef11(&inst, &a).holds);
        assert!(is_balanced(&a).holds);
    }

    #[test]
    fn balanced_examples() {
        assert!(is_balanced(&alloc(2, &[vec![0], vec![1]])).holds);
        let r = is_balanced(&alloc(3, &[vec![0, 1, 2], vec![]]));
        assert!(!r.holds);
        assert_eq!(
            r.witness,
            Some(Witness::SizeGap {
                larger: 0,
                smaller: 1
            })
        );
    }

    #[test]
    fn swaps_example1() {
        let inst = example1();
        let before = alloc(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(find_beneficial_swap(&inst, &before), Some((1, 3)));
        let all: Vec<_> = (0..6)
            .flat_map(|p| (p + 1..6).map(move |q| (p, q)))
            .filter(|&(p, q)| is_beneficial_swap(&inst, &before, p, q))
            .collect();
        assert_eq!(all, vec![(1, 3)]);
        let after = alloc(6, &[vec![0, 1], vec![3, 4], vec![2, 5]]);
        assert_eq!(find_beneficial_swap(&inst, &after), None);
    }

    #[test]
    fn swap_needs_two_teams() {
        let inst = Instance::from_matrices(vec![vec![1, 2]], vec![vec![1], vec![1]]).unwrap();
        assert_eq!(find_beneficial_swap(&inst, &alloc(2, &[vec![0, 1]])), None);
        let inst = Instance::from_matrices(vec![vec![1], vec![2]], vec![vec![2, 1]]).unwrap();
        assert_eq!(
            find_beneficial_swap(&inst, &alloc(1, &[vec![0], vec![]])),
            None
        );
    }

    #[test]
    fn deviation_found_and_checked() {
        let inst =
            Instance::from_matrices(vec![vec![1, 1], vec![0, 0]], vec![vec![1, 2], vec![1, 2]])
                .unwrap();
        assert_eq!(
            find_beneficial_deviation(&inst, &alloc(2, &[vec![0], vec![1]])),
            Some((1, 0))
        );
        assert_eq!(
            find_beneficial_deviation(&inst, &alloc(2, &[vec![0, 1], vec![]])),
            None
        );
    }

    #[test]
    fn deviation_none_at_favourites() {
        let inst =
            Instance::from_matrices(vec![vec![-3, 5], vec![2, 0]], vec![vec![1, 2], vec![2, 1]])
                .unwrap();
        assert_eq!(
            find_beneficial_deviation(&inst, &alloc(2, &[vec![0], vec![1]])),
            None
        );
    }

    #[test]
    fn justified_envy_examples() {
        let prop12 = Instance::from_matrices(
            vec![vec![3, 3, 2, 2], vec![1, 1, 0, 0]],
            vec![vec![1, 2]; 4],
        )
        .unwrap();
        let a = alloc(4, &[vec![0, 2], vec![1, 3]]);
        assert_eq!(find_justified_envy(&prop12, &a), Some((1, 2)));

        let identical = Instance::from_matrices(
            vec![vec![2; 3], vec![2; 3]],
            vec![vec![1, 2], vec![2, 1], vec![1, 2]],
        )
        .unwrap();
        assert_eq!(
            find_justified_envy(&identical, &alloc(3, &[vec![1], vec![0, 2]])),
            None
        );

        let single = Instance::from_matrices(vec![vec![1], vec![0]], vec![vec![1, 2]]).unwrap();
        assert_eq!(
            find_justified_envy(&single, &alloc(1, &[vec![], vec![0]])),
            None
        );
    }

    #[test]
    fn dominance_props_3_and_4() {
        let prop3 =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 0]], vec![vec![1, 2], vec![2, 1]])
                .unwrap();
        let a = alloc(2, &[vec![0], vec![1]]);
        let b = alloc(2, &[vec![0, 1], vec![]]);
        assert!(pareto_dominates(&prop3, &b, &a, DominanceScope::TeamsOnly));
        assert!(!pareto_dominates(
            &prop3,
            &b,
            &a,
            DominanceScope::AllParties
        ));

        let prop4 =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 2], vec![1, 2]])
                .unwrap();
        assert!(pareto_dominates(
            &prop4,
            &b,
            &a,
            DominanceScope::PlayersOnly
        ));
        assert!(!pareto_dominates(
            &prop4,
            &b,
            &a,
            DominanceScope::AllParties
        ));

        for scope in [
            DominanceScope::AllParties,
            DominanceScope::TeamsOnly,
            DominanceScope::PlayersOnly,
        ] {
            assert!(!pareto_dominates(&prop3, &a, &a, scope));
        }
    }

    #[test]
    fn po_bruteforce_props_3_and_4() {
        let budget = DEFAULT_ENUMERATION_BUDGET;
        let a = alloc(2, &[vec![0], vec![1]]);
        let prop3 =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 0]], vec![vec![1, 2], vec![2, 1]])
                .unwrap();
        assert!(
            is_po_bruteforce(&prop3, &a, DominanceScope::AllParties, budget)
                .unwrap()
                .holds
        );
        let r = is_po_bruteforce(&prop3, &a, DominanceScope::TeamsOnly, budget).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Witness::Dominated { by: vec![0, 0] }));

        let prop4 =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 2], vec![1, 2]])
                .unwrap();
        assert!(
            is_po_bruteforce(&prop4, &a, DominanceScope::AllParties, budget)
                .unwrap()
                .holds
        );
        assert!(
            !is_po_bruteforce(&prop4, &a, DominanceScope::PlayersOnly, budget)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn po_bruteforce_capacity() {
        let inst =
            Instance::from_matrices(vec![vec![1; 30], vec![1; 30]], vec![vec![1, 2]; 30]).unwrap();
        let a = Allocation::new(2, vec![0; 30]).unwrap();
        let err = is_po_bruteforce(&inst, &a, DominanceScope::AllParties, 1000).unwrap_err();
        assert!(matches!(err, Error::Capacity { budget: 1000, .. }));
        assert!(matches!(
            exists_ef1_jef_bruteforce(&inst, 1000),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn ef1_jef_bruteforce_examples() {
        let budget = DEFAULT_ENUMERATION_BUDGET;
        let prop12 = Instance::from_matrices(
            vec![vec![3, 3, 2, 2], vec![1, 1, 0, 0]],
            vec![vec![1, 2]; 4],
        )
        .unwrap();
        assert_eq!(exists_ef1_jef_bruteforce(&prop12, budget).unwrap(), None);

        let split =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 2], vec![2, 1]])
                .unwrap();
        let found = exists_ef1_jef_bruteforce(&split, budget).unwrap().unwrap();
        assert_eq!(found.assignment(), &[0, 1]);

        let empty = Instance::from_matrices(vec![vec![], vec![]], vec![]).unwrap();
        let found = exists_ef1_jef_bruteforce(&empty, budget).unwrap().unwrap();
        assert_eq!(found.num_players(), 0);
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_assignment::<()>(&[vec![0, 2], vec![1], vec![0, 1]], |a| {
            seen.push(a.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(
            seen,
            vec![vec![0, 1, 0], vec![0, 1, 1], vec![2, 1, 0], vec![2, 1, 1]]
        );
    }

    #[test]
    fn report_json_shape() {
        let inst = prop8();
        let r = is_ef1(&inst, &alloc(2, &[vec![0], vec![1]]));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["property"], "EF1");
        assert_eq!(json["holds"], false);
        assert_eq!(json["witness"]["kind"], "team_envy");
        let ok = serde_json::to_value(is_ef11(&inst, &alloc(2, &[vec![0], vec![1]]))).unwrap();
        assert!(ok["witness"].is_null());
    }
}
