//! Round-robin over values with rank-minimizing reassignment, and its
//! two-phase variant for mixed-sign instances.

use crate::matching::{lexicographic_matching, min_cost_perfect_matching, WeightedBipartite};
use crate::model::{Allocation, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotOrder {
    /// Slots cycle through teams `0, 1, ..., n-1`.
    Forward,
    /// Slots cycle through teams `n-1, ..., 1, 0`.
    Backward,
}

/// Maps pick positions (slots) to teams. The slots of a team, in increasing
/// order, form that team's pick sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotMap {
    pub num_teams: usize,
    pub order: SlotOrder,
}

impl SlotMap {
    pub fn team_of(&self, slot: usize) -> usize {
        let t = slot % self.num_teams;
        match self.order {
            SlotOrder::Forward => t,
            SlotOrder::Backward => self.num_teams - 1 - t,
        }
    }
}

/// Players taking part in one run; `None` entries are dummies that every
/// team values at 0 and that are indifferent between all teams.
struct Pool<'a> {
    instance: &'a Instance,
    members: Vec<Option<usize>>,
}

impl Pool<'_> {
    fn value(&self, team: usize, idx: usize) -> i64 {
        self.members[idx].map_or(0, |p| self.instance.value(team, p))
    }

    fn rank(&self, idx: usize, team: usize) -> i64 {
        self.members[idx].map_or(1, |p| self.instance.rank(p, team) as i64)
    }

    /// Team for each pool member.
    fn assign(&self, slots: SlotMap) -> Vec<usize> {
        let k = self.members.len();
        if k == 0 {
            return Vec::new();
        }
        let weights: Vec<Vec<i64>> = (0..k)
            .map(|q| (0..k).map(|p| self.value(slots.team_of(q), p)).collect())
            .collect();
        let graph = WeightedBipartite::new(weights).expect("square by construction");
        let profile = lexicographic_matching(&graph)
            .expect("complete graph")
            .per_vertex_weights;

        // Keep the edges that are as good for each slot's team as the
        // lexicographic matching, then minimize the players' total rank.
        let mask: Vec<Vec<bool>> = (0..k)
            .map(|q| {
                (0..k)
                    .map(|p| graph.weights()[q][p] == profile[q])
                    .collect()
            })
            .collect();
        let costs: Vec<Vec<i64>> = (0..k)
            .map(|q| (0..k).map(|p| self.rank(p, slots.team_of(q))).collect())
            .collect();
        let restricted = WeightedBipartite::new(costs)
            .and_then(|g| g.with_mask(mask))
            .expect("square by construction");
        let matching = min_cost_perfect_matching(&restricted)
            .expect("the lexicographic matching lies inside the mask");

        let mut team = vec![0; k];
        for (q, &p) in matching.pairs.iter().enumerate() {
            team[p] = slots.team_of(q);
        }
        team
    }
}

/// Balanced, EF[1,1] and swap-stable allocation: one slot per player, slots
/// assigned to teams in round-robin order.
pub fn alg_swap_stable_balanced(instance: &Instance) -> Allocation {
    let pool = Pool {
        instance,
        members: (0..instance.num_players()).map(Some).collect(),
    };
    let assignment = pool.assign(SlotMap {
        num_teams: instance.num_teams(),
        order: SlotOrder::Forward,
    });
    Allocation::new(instance.num_teams(), assignment).expect("slot teams are in range")
}

/// EF1, swap-stable and individually stable allocation.
///
/// Players some team values nonnegatively are allocated in forward team
/// order, the rest in backward order. Each phase is padded with
/// `(n-1)·|phase| + n` dummies, appended after the real players, so every
/// team receives at least one dummy in each phase.
pub fn alg_double_round_robin(instance: &Instance) -> Allocation {
    let n = instance.num_teams();
    let (positive, negative): (Vec<usize>, Vec<usize>) =
        (0..instance.num_players()).partition(|&p| (0..n).any(|i| instance.value(i, p) >= 0));

    let padded = |players: &[usize]| Pool {
        instance,
        members: players
            .iter()
            .copied()
            .map(Some)
            .chain(std::iter::repeat_n(None, (n - 1) * players.len() + n))
            .collect(),
    };
    let (plus, minus) = (padded(&positive), padded(&negative));
    let (plus_teams, minus_teams) = rayon::join(
        || {
            plus.assign(SlotMap {
                num_teams: n,
                order: SlotOrder::Forward,
            })
        },
        || {
            minus.assign(SlotMap {
                num_teams: n,
                order: SlotOrder::Backward,
            })
        },
    );

    let mut assignment = vec![0; instance.num_players()];
    for (pool, teams) in [(&plus, plus_teams), (&minus, minus_teams)] {
        for (member, team) in pool.members.iter().zip(teams) {
            if let Some(p) = member {
                assignment[*p] = team;
            }
        }
    }
    Allocation::new(n, assignment).expect("slot teams are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{
        find_beneficial_deviation, find_beneficial_swap, is_balanced, is_ef1, is_ef11,
    };

    #[test]
    fn slot_map_orders() {
        let fwd = SlotMap {
            num_teams: 3,
            order: SlotOrder::Forward,
        };
        let bwd = SlotMap {
            num_teams: 3,
            order: SlotOrder::Backward,
        };
        assert_eq!(
            (0..7).map(|q| fwd.team_of(q)).collect::<Vec<_>>(),
            vec![0, 1, 2, 0, 1, 2, 0]
        );
        assert_eq!(
            (0..7).map(|q| bwd.team_of(q)).collect::<Vec<_>>(),
            vec![2, 1, 0, 2, 1, 0, 2]
        );
    }

    #[test]
    fn balanced_on_two_fans() {
        let inst =
            Instance::from_matrices(vec![vec![1, -1], vec![1, -1]], vec![vec![1, 1], vec![1, 1]])
                .unwrap();
        let a = alg_swap_stable_balanced(&inst);
        assert_eq!(a.bundles(), vec![vec![0], vec![1]]);
        assert!(is_balanced(&a).holds);
        assert!(is_ef11(&inst, &a).holds);
        assert!(!is_ef1(&inst, &a).holds);
        assert_eq!(find_beneficial_swap(&inst, &a), None);
    }

    #[test]
    fn balanced_on_example1() {
        let ranks = vec![
            vec![1, 2, 2],
            vec![1, 2, 2],
            vec![2, 2, 1],
            vec![2, 1, 2],
            vec![2, 1, 2],
            vec![2, 2, 1],
        ];
        let inst =
            Instance::from_matrices(vec![vec![0; 6], vec![0; 6], vec![1, 1, 0, 0, 0, 0]], ranks)
                .unwrap();
        let a = alg_swap_stable_balanced(&inst);
        assert_eq!(a.bundles(), vec![vec![2, 5], vec![3, 4], vec![0, 1]]);
    }

    #[test]
    fn balanced_single_player() {
        let inst = Instance::from_matrices(vec![vec![5], vec![0]], vec![vec![1, 1]]).unwrap();
        assert_eq!(alg_swap_stable_balanced(&inst).assignment(), &[0]);
    }

    #[test]
    fn double_round_robin_small_case() {
        let inst =
            Instance::from_matrices(vec![vec![1, 1], vec![0, 0]], vec![vec![1, 2], vec![1, 2]])
                .unwrap();
        let a = alg_double_round_robin(&inst);
        assert_eq!(a.bundles(), vec![vec![0, 1], vec![]]);
        assert!(is_ef1(&inst, &a).holds);
        assert_eq!(find_beneficial_swap(&inst, &a), None);
        assert_eq!(find_beneficial_deviation(&inst, &a), None);
        assert!(!is_balanced(&a).holds);
    }

    #[test]
    fn double_round_robin_all_zero() {
        let inst = Instance::from_matrices(vec![vec![0; 4]; 3], vec![vec![1, 1, 1]; 4]).unwrap();
        let a = alg_double_round_robin(&inst);
        assert!(is_ef1(&inst, &a).holds);
        assert_eq!(find_beneficial_swap(&inst, &a), None);
        assert_eq!(find_beneficial_deviation(&inst, &a), None);
    }

    #[test]
    fn double_round_robin_all_negative_matches_backward_phase() {
        let values = vec![vec![-3, -1, -2], vec![-1, -4, -2]];
        let ranks = vec![vec![1, 2], vec![2, 1], vec![1, 1]];
        let inst = Instance::from_matrices(values, ranks).unwrap();
        let a = alg_double_round_robin(&inst);

        let pool = Pool {
            instance: &inst,
            members: (0..3)
                .map(Some)
                .chain(std::iter::repeat_n(None, 5))
                .collect(),
        };
        let backward = pool.assign(SlotMap {
            num_teams: 2,
            order: SlotOrder::Backward,
        });
        assert_eq!(a.assignment(), &backward[..3]);
        assert!(is_ef1(&inst, &a).holds);
        assert_eq!(find_beneficial_swap(&inst, &a), None);
        assert_eq!(find_beneficial_deviation(&inst, &a), None);
    }

    #[test]
    fn empty_instance() {
        let inst = Instance::from_matrices(vec![vec![], vec![]], vec![]).unwrap();
        assert_eq!(alg_swap_stable_balanced(&inst).num_players(), 0);
        assert_eq!(alg_double_round_robin(&inst).num_players(), 0);
    }
}
