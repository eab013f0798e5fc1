//! Small hand-made instances with known facts, used for regression checks.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Allocation, Instance};
use crate::solve::Algorithm;
use crate::verify::{
    check_property, find_beneficial_swap, for_each_allocation, is_beneficial_swap,
    pareto_dominates, DominanceScope, Property, DEFAULT_ENUMERATION_BUDGET,
};

/// A checkable statement about a fixture instance. Allocations are given as
/// team-per-player assignments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fact {
    /// `allocation` has `property` exactly when `holds`.
    Satisfies {
        allocation: Vec<usize>,
        property: Property,
        holds: bool,
    },
    /// `(p, q)` is the only beneficial swap in `allocation`.
    UniqueBeneficialSwap {
        allocation: Vec<usize>,
        swap: (usize, usize),
    },
    /// No allocation has all of `properties`.
    NoAllocationSatisfies { properties: Vec<Property> },
    /// `allocation` is the only one with `property`.
    OnlyAllocationSatisfying {
        property: Property,
        allocation: Vec<usize>,
    },
    /// `by` Pareto dominates `allocation` within `scope`.
    DominatedBy {
        allocation: Vec<usize>,
        by: Vec<usize>,
        scope: DominanceScope,
    },
    /// Every output of `algorithm` has all of `properties`; a decision
    /// algorithm answering "no" violates the fact.
    AlgorithmSatisfies {
        algorithm: Algorithm,
        properties: Vec<Property>,
    },
    /// `algorithm` answers "no".
    AlgorithmFindsNone { algorithm: Algorithm },
    /// `algorithm` places the two players of every pair on different teams.
    AlgorithmSplitsPairs {
        algorithm: Algorithm,
        pairs: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub instance: Instance,
    pub facts: Vec<Fact>,
}

/// Outcome of checking one fact.
#[derive(Clone, Debug, Serialize)]
pub struct FactCheck {
    pub fact: Fact,
    pub holds: bool,
}

pub const FIXTURE_NAMES: [&str; 8] = [
    "example1", "prop3", "prop4", "prop8", "prop9", "prop12", "prop13", "rr8",
];

fn inst(values: Vec<Vec<i64>>, ranks: Vec<Vec<u32>>) -> Instance {
    Instance::from_matrices(values, ranks).expect("fixture instances are valid")
}

pub fn paper_instance(name: &str) -> Result<Fixture> {
    use Property::*;
    let fixture = match name {
        "example1" => {
            let ranks = vec![
                vec![1, 2, 2],
                vec![1, 2, 2],
                vec![2, 2, 1],
                vec![2, 1, 2],
                vec![2, 1, 2],
                vec![2, 2, 1],
            ];
            let seed = vec![0, 1, 2, 0, 1, 2];
            let swapped = vec![0, 0, 2, 1, 1, 2];
            Fixture {
                name: "example1",
                description: "Repeatedly applying beneficial swaps can destroy EF1: the unique swap in an EF1 allocation leads to a swap-stable allocation that is not EF1.",
                instance: inst(vec![vec![0; 6], vec![0; 6], vec![1, 1, 0, 0, 0, 0]], ranks),
                facts: vec![
                    Fact::Satisfies { allocation: seed.clone(), property: EF1, holds: true },
                    Fact::UniqueBeneficialSwap { allocation: seed, swap: (1, 3) },
                    Fact::Satisfies { allocation: swapped.clone(), property: SwapStable, holds: true },
                    Fact::Satisfies { allocation: swapped, property: EF1, holds: false },
                ],
            }
        }
        "prop3" => Fixture {
            name: "prop3",
            description: "PO does not imply team-PO: ({p1},{p2}) is PO but team-dominated by ({p1,p2},{}).",
            instance: inst(vec![vec![1, 1], vec![1, 0]], vec![vec![1, 2], vec![2, 1]]),
            facts: vec![
                Fact::Satisfies { allocation: vec![0, 1], property: PO, holds: true },
                Fact::Satisfies { allocation: vec![0, 1], property: TeamPO, holds: false },
                Fact::DominatedBy { allocation: vec![0, 1], by: vec![0, 0], scope: DominanceScope::TeamsOnly },
            ],
        },
        "prop4" => Fixture {
            name: "prop4",
            description: "PO does not imply player-PO: ({p1},{p2}) is PO but player-dominated by ({p1,p2},{}).",
            instance: inst(vec![vec![1, 1], vec![1, 1]], vec![vec![1, 2], vec![1, 2]]),
            facts: vec![
                Fact::Satisfies { allocation: vec![0, 1], property: PO, holds: true },
                Fact::Satisfies { allocation: vec![0, 1], property: PlayerPO, holds: false },
                Fact::DominatedBy { allocation: vec![0, 1], by: vec![0, 0], scope: DominanceScope::PlayersOnly },
            ],
        },
        "prop8" => Fixture {
            name: "prop8",
            description: "No balanced allocation is EF1 when both teams value p1 at 1 and p2 at -1.",
            instance: inst(vec![vec![1, -1], vec![1, -1]], vec![vec![1, 1], vec![1, 1]]),
            facts: vec![
                Fact::Satisfies { allocation: vec![0, 1], property: EF1, holds: false },
                Fact::Satisfies { allocation: vec![1, 0], property: EF1, holds: false },
                Fact::NoAllocationSatisfies { properties: vec![Balanced, EF1] },
                Fact::AlgorithmSatisfies {
                    algorithm: Algorithm::SwapStableBalanced,
                    properties: vec![Balanced, EF11, SwapStable],
                },
            ],
        },
        "prop9" => Fixture {
            name: "prop9",
            description: "No balanced allocation is individually stable: both players want team 1, which values them while team 2 does not.",
            instance: inst(vec![vec![1, 1], vec![0, 0]], vec![vec![1, 2], vec![1, 2]]),
            facts: vec![
                Fact::OnlyAllocationSatisfying { property: IndividuallyStable, allocation: vec![0, 0] },
                Fact::NoAllocationSatisfies { properties: vec![Balanced, IndividuallyStable] },
            ],
        },
        "prop12" => Fixture {
            name: "prop12",
            description: "No allocation is both EF1 and justified EF, even with two teams and every player preferring team 1.",
            instance: inst(vec![vec![3, 3, 2, 2], vec![1, 1, 0, 0]], vec![vec![1, 2]; 4]),
            facts: vec![
                Fact::NoAllocationSatisfies { properties: vec![EF1, JustifiedEF] },
                Fact::AlgorithmFindsNone { algorithm: Algorithm::JefTwoTeams },
            ],
        },
        "prop13" => Fixture {
            name: "prop13",
            description: "No allocation is both EF1 and player-PO: four players valued 1 by both teams all prefer team 1.",
            instance: inst(vec![vec![1; 4], vec![1; 4]], vec![vec![1, 2]; 4]),
            facts: vec![
                Fact::OnlyAllocationSatisfying { property: PlayerPO, allocation: vec![0; 4] },
                Fact::NoAllocationSatisfies { properties: vec![EF1, PlayerPO] },
                Fact::AlgorithmSatisfies { algorithm: Algorithm::CutAndChoose, properties: vec![EF1, JustifiedEF] },
            ],
        },
        "rr8" => {
            let values = vec![4, 4, 3, 3, 2, 2, 1, 1];
            let ranks = [1u32, 1, 2, 2, 2, 2, 1, 1]
                .iter()
                .map(|&r| if r == 1 { vec![1, 2] } else { vec![2, 1] })
                .collect();
            let pairs = vec![(0, 1), (2, 3), (4, 5), (6, 7)];
            Fixture {
                name: "rr8",
                description: "Round-robin picking splits every equal-value pair across the teams, which is Pareto dominated by grouping players with the team they prefer.",
                instance: inst(vec![values.clone(), values], ranks),
                facts: vec![
                    Fact::DominatedBy {
                        allocation: vec![0, 1, 0, 1, 0, 1, 0, 1],
                        by: vec![0, 0, 1, 1, 1, 1, 0, 0],
                        scope: DominanceScope::AllParties,
                    },
                    Fact::Satisfies { allocation: vec![0, 1, 0, 1, 0, 1, 0, 1], property: PO, holds: false },
                    Fact::AlgorithmSplitsPairs { algorithm: Algorithm::SwapStableBalanced, pairs: pairs.clone() },
                    Fact::AlgorithmSplitsPairs { algorithm: Algorithm::DoubleRoundRobin, pairs },
                    Fact::AlgorithmSatisfies { algorithm: Algorithm::AdjustedWinner, properties: vec![EF1, PO, TeamPO] },
                ],
            }
        }
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(fixture)
}

fn all_with(
    instance: &Instance,
    properties: &[Property],
    mut visit: impl FnMut(&Allocation) -> bool,
) -> Result<()> {
    let n = instance.num_teams();
    let mut failure = None;
    for_each_allocation(instance, |assignment| {
        let a = Allocation::new(n, assignment.to_vec()).expect("enumerated teams are in range");
        let mut all = true;
        for &p in properties {
            match check_property(instance, &a, p, DEFAULT_ENUMERATION_BUDGET) {
                Ok(r) if r.holds => {}
                Ok(_) => {
                    all = false;
                    break;
                }
                Err(e) => {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            }
        }
        if all && !visit(&a) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    failure.map_or(Ok(()), Err)
}

pub fn check_fact(instance: &Instance, fact: &Fact) -> Result<bool> {
    let n = instance.num_teams();
    let alloc = |a: &[usize]| Allocation::new(n, a.to_vec());
    let budget = DEFAULT_ENUMERATION_BUDGET;
    Ok(match fact {
        Fact::Satisfies {
            allocation,
            property,
            holds,
        } => check_property(instance, &alloc(allocation)?, *property, budget)?.holds == *holds,
        Fact::UniqueBeneficialSwap { allocation, swap } => {
            let a = alloc(allocation)?;
            let m = instance.num_players();
            let swaps: Vec<(usize, usize)> = (0..m)
                .flat_map(|p| (p + 1..m).map(move |q| (p, q)))
                .filter(|&(p, q)| is_beneficial_swap(instance, &a, p, q))
                .collect();
            swaps == [*swap] && find_beneficial_swap(instance, &a) == Some(*swap)
        }
        Fact::NoAllocationSatisfies { properties } => {
            let mut found = false;
            all_with(instance, properties, |_| {
                found = true;
                false
            })?;
            !found
        }
        Fact::OnlyAllocationSatisfying {
            property,
            allocation,
        } => {
            let mut seen = Vec::new();
            all_with(instance, &[*property], |a| {
                seen.push(a.assignment().to_vec());
                true
            })?;
            seen == [allocation.clone()]
        }
        Fact::DominatedBy {
            allocation,
            by,
            scope,
        } => pareto_dominates(instance, &alloc(by)?, &alloc(allocation)?, *scope),
        Fact::AlgorithmSatisfies {
            algorithm,
            properties,
        } => match algorithm.run(instance, budget)? {
            None => false,
            Some(a) => {
                let mut all = true;
                for &p in properties {
                    all &= check_property(instance, &a, p, budget)?.holds;
                }
                all
            }
        },
        Fact::AlgorithmFindsNone { algorithm } => algorithm.run(instance, budget)?.is_none(),
        Fact::AlgorithmSplitsPairs { algorithm, pairs } => match algorithm.run(instance, budget)? {
            None => false,
            Some(a) => pairs.iter().all(|&(p, q)| a.team_of(p) != a.team_of(q)),
        },
    })
}

pub fn check_fixture(fixture: &Fixture) -> Result<Vec<FactCheck>> {
    fixture
        .facts
        .iter()
        .map(|fact| {
            Ok(FactCheck {
                fact: fact.clone(),
                holds: check_fact(&fixture.instance, fact)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fact_holds() {
        for name in FIXTURE_NAMES {
            let fixture = paper_instance(name).unwrap();
            assert_eq!(fixture.name, name);
            for check in check_fixture(&fixture).unwrap() {
                assert!(check.holds, "{name}: {:?}", check.fact);
            }
        }
    }

    #[test]
    fn example1_shape() {
        let f = paper_instance("example1").unwrap();
        assert_eq!((f.instance.num_teams(), f.instance.num_players()), (3, 6));
        assert_eq!((f.instance.value(2, 0), f.instance.value(2, 1)), (1, 1));
    }

    #[test]
    fn false_facts_are_detected() {
        let f = paper_instance("prop12").unwrap();
        let wrong = Fact::Satisfies {
            allocation: vec![0, 1, 0, 0],
            property: Property::EF1,
            holds: false,
        };
        assert!(!check_fact(&f.instance, &wrong).unwrap());
        let wrong = Fact::AlgorithmSatisfies {
            algorithm: Algorithm::JefTwoTeams,
            properties: vec![],
        };
        assert!(!check_fact(&f.instance, &wrong).unwrap());
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(paper_instance("prop99"), Err(Error::UnknownFixture(n)) if n == "prop99"));
    }
}
