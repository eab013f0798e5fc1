//! Two-team allocations that are both EF1 and free of justified envy.

use crate::error::{Error, Result};
use crate::model::{Allocation, Comparison, Instance};
use crate::verify::{find_justified_envy, is_ef1};

/// Guess for one side of the threshold search: the highest value (to its
/// preferred team) of a player placed on the other team, and how many such
/// players share that value. `value == None` stands for "no such player"
/// and forces `count == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Threshold {
    pub value: Option<i64>,
    pub count: usize,
}

/// Both thresholds of one candidate in the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThresholdProfile {
    pub team1: Threshold,
    pub team2: Threshold,
}

/// `(-∞, 0)` followed by `(x, c)` for every distinct value `x` ascending and
/// `c` in `1..=m`.
fn thresholds(values: impl Iterator<Item = i64>, m: usize) -> Vec<Threshold> {
    let mut distinct: Vec<i64> = values.collect();
    distinct.sort_unstable();
    distinct.dedup();
    std::iter::once(Threshold {
        value: None,
        count: 0,
    })
    .chain(distinct.into_iter().flat_map(|x| {
        (1..=m).map(move |count| Threshold {
            value: Some(x),
            count,
        })
    }))
    .collect()
}

fn below(v: i64, x: Option<i64>) -> bool {
    x.is_some_and(|x| v < x)
}

fn above(v: i64, x: Option<i64>) -> bool {
    x.is_none_or(|x| v > x)
}

/// Forced part of the allocation for a pair of threshold values, with the
/// undecided players of each side ordered most-valuable-to-the-other-team
/// first (ties by index).
struct Forced {
    assignment: Vec<Option<usize>>,
    pending: [Vec<usize>; 2],
}

fn force(
    instance: &Instance,
    prefers_first: &[bool],
    x1: Option<i64>,
    x2: Option<i64>,
) -> Option<Forced> {
    let m = instance.num_players();
    let mut assignment: Vec<Option<usize>> = vec![None; m];
    let put = |p: usize, team: usize, assignment: &mut Vec<Option<usize>>| -> bool {
        match assignment[p] {
            Some(t) if t != team => false,
            _ => {
                assignment[p] = Some(team);
                true
            }
        }
    };
    for p in 0..m {
        // Anyone a stronger fan would have justified envy toward.
        if below(instance.value(0, p), x1) && !put(p, 1, &mut assignment) {
            return None;
        }
        if below(instance.value(1, p), x2) && !put(p, 0, &mut assignment) {
            return None;
        }
    }
    for (p, &first) in prefers_first.iter().enumerate() {
        let home = if first { 0 } else { 1 };
        let threshold = if home == 0 { x1 } else { x2 };
        if above(instance.value(home, p), threshold) && !put(p, home, &mut assignment) {
            return None;
        }
    }
    let mut pending: [Vec<usize>; 2] = Default::default();
    for p in (0..m).filter(|&p| assignment[p].is_none()) {
        pending[if prefers_first[p] { 0 } else { 1 }].push(p);
    }
    for (home, list) in pending.iter_mut().enumerate() {
        let away = 1 - home;
        list.sort_by_key(|&p| (std::cmp::Reverse(instance.value(away, p)), p));
    }
    Some(Forced {
        assignment,
        pending,
    })
}

fn validate_two_team_search(instance: &Instance) -> Result<Vec<bool>> {
    if instance.num_teams() != 2 {
        return Err(Error::precondition(format!(
            "the threshold search needs exactly 2 teams, got {}",
            instance.num_teams()
        )));
    }
    (0..instance.num_players())
        .map(|p| {
            if let Some(i) = (0..2).find(|&i| instance.value(i, p) < 0) {
                return Err(Error::precondition(format!(
                    "team {i} values player {p} at {}; values must be nonnegative",
                    instance.value(i, p)
                )));
            }
            match instance.compare_teams(p, 0, 1) {
                Comparison::Better => Ok(true),
                Comparison::Worse => Ok(false),
                Comparison::Equal => Err(Error::precondition(format!(
                    "player {p} is indifferent between the teams; strict preferences are required"
                ))),
            }
        })
        .collect()
}

/// Decides whether an EF1 and justified-EF allocation exists for two teams,
/// nonnegative values and strict player preferences, returning one if so.
///
/// Every threshold profile is tried in ascending order; fixing the profile
/// forces all but the threshold-valued players, and among those the ones
/// most valuable to the other team are sent across. `O(m^5)` in the worst
/// case.
pub fn alg_jef_two_teams_search(instance: &Instance) -> Result<Option<Allocation>> {
    let prefers_first = validate_two_team_search(instance)?;
    let m = instance.num_players();
    let side1 = thresholds((0..m).map(|p| instance.value(0, p)), m);
    let side2 = thresholds((0..m).map(|p| instance.value(1, p)), m);
    let distinct2 = 1 + side2.len().saturating_sub(1) / m.max(1);

    // The forced part depends only on the two threshold values, i.e. on
    // which block of `m` counts each threshold falls in.
    let block = |idx: usize| if idx == 0 { 0 } else { 1 + (idx - 1) / m };
    let mut cache: Vec<Option<Option<Forced>>> = Vec::new();
    cache.resize_with(
        (1 + side1.len().saturating_sub(1) / m.max(1)) * distinct2,
        || None,
    );

    for (i1, t1) in side1.iter().enumerate() {
        for (i2, t2) in side2.iter().enumerate() {
            let key = block(i1) * distinct2 + block(i2);
            let forced = cache[key]
                .get_or_insert_with(|| force(instance, &prefers_first, t1.value, t2.value));
            let Some(forced) = forced else { continue };
            if t1.count > forced.pending[0].len() || t2.count > forced.pending[1].len() {
                continue;
            }
            let mut assignment = forced.assignment.clone();
            for (home, count) in [(0usize, t1.count), (1usize, t2.count)] {
                for (rank, &p) in forced.pending[home].iter().enumerate() {
                    assignment[p] = Some(if rank < count { 1 - home } else { home });
                }
            }
            let allocation = Allocation::new(
                2,
                assignment
                    .into_iter()
                    .map(|t| t.expect("all placed"))
                    .collect(),
            )?;
            if is_ef1(instance, &allocation).holds {
                debug_assert!(find_justified_envy(instance, &allocation).is_none());
                return Ok(Some(allocation));
            }
        }
    }
    Ok(None)
}

/// Players laid out along a path together with their common value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValleyPath {
    pub players: Vec<usize>,
    /// `prefix[k]` is the total value of the first `k` players on the path.
    pub prefix: Vec<i64>,
}

impl ValleyPath {
    pub fn new(players: Vec<usize>, values: &[i64]) -> Self {
        let prefix = std::iter::once(0)
            .chain(players.iter().scan(0i64, |acc, &p| {
                *acc += values[p];
                Some(*acc)
            }))
            .collect();
        ValleyPath { players, prefix }
    }

    /// Fans of team 1 by decreasing value, then fans of team 2 by increasing
    /// value. Players indifferent between the teams count as fans of team 1;
    /// equal values keep index order on each side.
    pub fn valley(instance: &Instance) -> Self {
        let values: Vec<i64> = (0..instance.num_players())
            .map(|p| instance.value(0, p))
            .collect();
        let (mut first, mut second): (Vec<usize>, Vec<usize>) = (0..instance.num_players())
            .partition(|&p| instance.compare_teams(p, 0, 1) != Comparison::Worse);
        first.sort_by_key(|&p| (values[p], p));
        second.sort_by_key(|&p| (values[p], p));
        first.reverse();
        first.extend(second);
        ValleyPath::new(first, &values)
    }

    pub fn len(&self) -> usize {
        self.players.len()
    }

    pub fn is_empty(&self) -> bool {
        self.players.is_empty()
    }

    fn total(&self) -> i64 {
        *self.prefix.last().expect("prefix starts with 0")
    }

    /// Value of path positions `start..end`.
    pub fn value_of(&self, start: usize, end: usize) -> i64 {
        self.prefix[end] - self.prefix[start]
    }

    /// 0-based position of the leftmost lumpy tie: the first `j` whose
    /// prefix through `j` is worth at least the suffix after `j`.
    pub fn lumpy_tie(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::precondition("a lumpy tie needs a nonempty path"));
        }
        let t = self.len();
        let total = self.total();
        let j = (0..t)
            .find(|&j| self.prefix[j + 1] >= total - self.prefix[j + 1])
            .expect("the full prefix always dominates the empty suffix");
        assert!(
            self.prefix[j] <= total - self.prefix[j],
            "leftmost lumpy tie must also satisfy the strict-prefix inequality"
        );
        Ok(j)
    }
}

/// EF1 and justified-EF allocation for two teams sharing a nonnegative
/// valuation: cut the valley path at its leftmost lumpy tie and give the
/// tie player to the lighter side.
pub fn alg_cut_and_choose_identical(instance: &Instance) -> Result<Allocation> {
    if instance.num_teams() != 2 {
        return Err(Error::precondition(format!(
            "cut-and-choose needs exactly 2 teams, got {}",
            instance.num_teams()
        )));
    }
    if let Some(p) =
        (0..instance.num_players()).find(|&p| instance.value(0, p) != instance.value(1, p))
    {
        return Err(Error::precondition(format!(
            "teams must share one valuation, but player {p} is valued {} and {}",
            instance.value(0, p),
            instance.value(1, p)
        )));
    }
    if let Some(p) = (0..instance.num_players()).find(|&p| instance.value(0, p) < 0) {
        return Err(Error::precondition(format!(
            "player {p} has negative value {}",
            instance.value(0, p)
        )));
    }
    let m = instance.num_players();
    let path = ValleyPath::valley(instance);
    if path.is_empty() {
        return Allocation::new(2, Vec::new());
    }
    let j = path.lumpy_tie()?;
    let left = path.value_of(0, j);
    let right = path.value_of(j + 1, m);
    let cut = if left >= right { j } else { j + 1 };
    let mut assignment = vec![0; m];
    for &p in &path.players[cut..] {
        assignment[p] = 1;
    }
    Allocation::new(2, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prop12() -> Instance {
        Instance::from_matrices(
            vec![vec![3, 3, 2, 2], vec![1, 1, 0, 0]],
            vec![vec![1, 2]; 4],
        )
        .unwrap()
    }

    fn path(values: &[i64]) -> ValleyPath {
        ValleyPath::new((0..values.len()).collect(), values)
    }

    #[test]
    fn search_reports_no_when_none_exists() {
        assert_eq!(alg_jef_two_teams_search(&prop12()).unwrap(), None);
    }

    #[test]
    fn search_simple_split() {
        let inst =
            Instance::from_matrices(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 2], vec![2, 1]])
                .unwrap();
        let a = alg_jef_two_teams_search(&inst).unwrap().unwrap();
        assert_eq!(a.assignment(), &[0, 1]);
    }

    #[test]
    fn search_empty() {
        let inst = Instance::from_matrices(vec![vec![], vec![]], vec![]).unwrap();
        let a = alg_jef_two_teams_search(&inst).unwrap().unwrap();
        assert_eq!(a.num_players(), 0);
    }

    #[test]
    fn search_preconditions() {
        let three = Instance::from_matrices(vec![vec![1]; 3], vec![vec![1, 2, 3]]).unwrap();
        assert!(alg_jef_two_teams_search(&three).is_err());
        let negative = Instance::from_matrices(vec![vec![-1], vec![1]], vec![vec![1, 2]]).unwrap();
        assert!(alg_jef_two_teams_search(&negative).is_err());
        let indifferent =
            Instance::from_matrices(vec![vec![1], vec![1]], vec![vec![1, 1]]).unwrap();
        assert!(
            matches!(alg_jef_two_teams_search(&indifferent), Err(Error::Precondition(m)) if m.contains("indifferent"))
        );
    }

    #[test]
    fn threshold_grid_order() {
        let t = thresholds([5, 2, 5].into_iter(), 2);
        let expected = vec![
            Threshold {
                value: None,
                count: 0,
            },
            Threshold {
                value: Some(2),
                count: 1,
            },
            Threshold {
                value: Some(2),
                count: 2,
            },
            Threshold {
                value: Some(5),
                count: 1,
            },
            Threshold {
                value: Some(5),
                count: 2,
            },
        ];
        assert_eq!(t, expected);
        let mut sorted = t.clone();
        sorted.sort();
        assert_eq!(sorted, t);
    }

    #[test]
    fn lumpy_tie_examples() {
        assert_eq!(path(&[1, 1, 1, 1]).lumpy_tie().unwrap(), 1);
        assert_eq!(path(&[3, 1, 1]).lumpy_tie().unwrap(), 0);
        assert_eq!(path(&[7]).lumpy_tie().unwrap(), 0);
        assert!(path(&[]).lumpy_tie().is_err());
    }

    #[test]
    fn cut_and_choose_four_players() {
        let inst =
            Instance::from_matrices(vec![vec![1; 4], vec![1; 4]], vec![vec![1, 2]; 4]).unwrap();
        let path = ValleyPath::valley(&inst);
        assert_eq!(path.players, vec![3, 2, 1, 0]);
        assert_eq!(path.lumpy_tie().unwrap(), 1);
        let a = alg_cut_and_choose_identical(&inst).unwrap();
        assert_eq!(a.bundles(), vec![vec![2, 3], vec![0, 1]]);
        assert!(is_ef1(&inst, &a).holds);
        assert_eq!(find_justified_envy(&inst, &a), None);
    }

    #[test]
    fn cut_and_choose_single_player() {
        // Both sides of the tie are empty, so the tie player goes right.
        let inst = Instance::from_matrices(vec![vec![4], vec![4]], vec![vec![1, 2]]).unwrap();
        let a = alg_cut_and_choose_identical(&inst).unwrap();
        assert_eq!(a.assignment(), &[1]);
        assert_eq!(find_justified_envy(&inst, &a), None);
    }

    #[test]
    fn cut_and_choose_all_prefer_second() {
        let inst =
            Instance::from_matrices(vec![vec![2, 1], vec![2, 1]], vec![vec![2, 1], vec![2, 1]])
                .unwrap();
        let path = ValleyPath::valley(&inst);
        assert_eq!(path.players, vec![1, 0]);
        assert_eq!(path.lumpy_tie().unwrap(), 1);
        let a = alg_cut_and_choose_identical(&inst).unwrap();
        assert_eq!(a.bundles(), vec![vec![1], vec![0]]);
        assert!(is_ef1(&inst, &a).holds);
        assert_eq!(find_justified_envy(&inst, &a), None);
    }

    #[test]
    fn cut_and_choose_preconditions() {
        let inst = Instance::from_matrices(vec![vec![2], vec![1]], vec![vec![1, 2]]).unwrap();
        assert!(alg_cut_and_choose_identical(&inst).is_err());
        let inst = Instance::from_matrices(vec![vec![-2], vec![-2]], vec![vec![1, 2]]).unwrap();
        assert!(alg_cut_and_choose_identical(&inst).is_err());
    }
}
