//! Name-addressable registry of the allocation algorithms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{PrefMode, SignMode};
use crate::justified::{alg_cut_and_choose_identical, alg_jef_two_teams_search};
use crate::model::{Allocation, Instance};
use crate::pareto::{
    alg_adjusted_winner_two_teams, alg_dp_const_teams, alg_three_teams_identical, mnw_bruteforce,
};
use crate::stability::{alg_double_round_robin, alg_swap_stable_balanced};
use crate::verify::Property;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    SwapStableBalanced,
    DoubleRoundRobin,
    AdjustedWinner,
    ThreeTeams,
    Dp,
    MnwBrute,
    JefTwoTeams,
    CutAndChoose,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::SwapStableBalanced,
        Algorithm::DoubleRoundRobin,
        Algorithm::AdjustedWinner,
        Algorithm::ThreeTeams,
        Algorithm::Dp,
        Algorithm::MnwBrute,
        Algorithm::JefTwoTeams,
        Algorithm::CutAndChoose,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::SwapStableBalanced => "swap-stable-balanced",
            Algorithm::DoubleRoundRobin => "double-round-robin",
            Algorithm::AdjustedWinner => "adjusted-winner",
            Algorithm::ThreeTeams => "three-teams",
            Algorithm::Dp => "dp",
            Algorithm::MnwBrute => "mnw-brute",
            Algorithm::JefTwoTeams => "jef-two-teams",
            Algorithm::CutAndChoose => "cut-and-choose",
        }
    }

    /// Properties every output is guaranteed to have.
    pub fn guarantees(self) -> &'static [Property] {
        use Property::*;
        match self {
            Algorithm::SwapStableBalanced => &[Balanced, EF11, SwapStable],
            Algorithm::DoubleRoundRobin => &[EF1, SwapStable, IndividuallyStable],
            Algorithm::AdjustedWinner => &[EF1, PO, TeamPO],
            Algorithm::ThreeTeams | Algorithm::Dp | Algorithm::MnwBrute => &[EF1, PO],
            Algorithm::JefTwoTeams | Algorithm::CutAndChoose => &[EF1, JustifiedEF],
        }
    }

    /// Whether the algorithm answers a yes/no question and may return no
    /// allocation.
    pub fn is_decision(self) -> bool {
        self == Algorithm::JefTwoTeams
    }

    /// Runs the algorithm. `budget` bounds the table and enumeration sizes of
    /// the algorithms that have one and is ignored by the others.
    pub fn run(self, instance: &Instance, budget: u64) -> Result<Option<Allocation>> {
        match self {
            Algorithm::SwapStableBalanced => Ok(Some(alg_swap_stable_balanced(instance))),
            Algorithm::DoubleRoundRobin => Ok(Some(alg_double_round_robin(instance))),
            Algorithm::AdjustedWinner => alg_adjusted_winner_two_teams(instance).map(Some),
            Algorithm::ThreeTeams => alg_three_teams_identical(instance).map(Some),
            Algorithm::Dp => alg_dp_const_teams(instance, budget).map(Some),
            Algorithm::MnwBrute => mnw_bruteforce(instance, budget).map(Some),
            Algorithm::JefTwoTeams => alg_jef_two_teams_search(instance),
            Algorithm::CutAndChoose => alg_cut_and_choose_identical(instance).map(Some),
        }
    }

    /// Checks that every instance drawn with the given shape meets the
    /// algorithm's preconditions.
    pub fn check_compatible(
        self,
        teams: (usize, usize),
        lo: i64,
        signs: SignMode,
        prefs: PrefMode,
    ) -> Result<()> {
        let fail = |reason: &str| Err(Error::invalid("algorithms", format!("{self} {reason}")));
        let exactly = |k: usize| teams == (k, k);
        let nonnegative = lo >= 0 || matches!(signs, SignMode::NonNegative | SignMode::Binary);
        match self {
            Algorithm::SwapStableBalanced | Algorithm::DoubleRoundRobin => Ok(()),
            Algorithm::AdjustedWinner if !exactly(2) => fail("needs exactly 2 teams"),
            Algorithm::AdjustedWinner => Ok(()),
            Algorithm::ThreeTeams if !exactly(3) => fail("needs exactly 3 teams"),
            Algorithm::ThreeTeams if signs != SignMode::IdenticalTeams || !nonnegative => {
                fail("needs identical nonnegative valuations")
            }
            Algorithm::ThreeTeams if prefs != PrefMode::SingleFavorite => {
                fail("needs single-favorite preferences")
            }
            Algorithm::ThreeTeams => Ok(()),
            Algorithm::Dp | Algorithm::MnwBrute if !nonnegative => fail("needs nonnegative values"),
            Algorithm::Dp | Algorithm::MnwBrute => Ok(()),
            Algorithm::JefTwoTeams if !exactly(2) => fail("needs exactly 2 teams"),
            Algorithm::JefTwoTeams if !nonnegative => fail("needs nonnegative values"),
            Algorithm::JefTwoTeams if prefs != PrefMode::Strict => fail("needs strict preferences"),
            Algorithm::JefTwoTeams => Ok(()),
            Algorithm::CutAndChoose if !exactly(2) => fail("needs exactly 2 teams"),
            Algorithm::CutAndChoose if signs != SignMode::IdenticalTeams || !nonnegative => {
                fail("needs identical nonnegative valuations")
            }
            Algorithm::CutAndChoose => Ok(()),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
                Error::invalid(
                    "algorithm",
                    format!("unknown name '{s}', expected one of: {}", names.join(", ")),
                )
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
            assert_eq!(
                serde_json::to_string(&a).unwrap(),
                format!("\"{}\"", a.name())
            );
        }
        assert!("greedy".parse::<Algorithm>().is_err());
    }

    #[test]
    fn compatibility() {
        use PrefMode::*;
        use SignMode::*;
        assert!(Algorithm::DoubleRoundRobin
            .check_compatible((1, 5), -9, Any, Weak)
            .is_ok());
        assert!(Algorithm::AdjustedWinner
            .check_compatible((2, 3), -9, Any, Weak)
            .is_err());
        assert!(Algorithm::Dp
            .check_compatible((2, 3), -1, Any, Weak)
            .is_err());
        assert!(Algorithm::Dp
            .check_compatible((2, 3), -1, NonNegative, Weak)
            .is_ok());
        assert!(Algorithm::JefTwoTeams
            .check_compatible((2, 2), 0, Any, Weak)
            .is_err());
        assert!(Algorithm::JefTwoTeams
            .check_compatible((2, 2), 0, Any, Strict)
            .is_ok());
        assert!(Algorithm::ThreeTeams
            .check_compatible((3, 3), 0, IdenticalTeams, SingleFavorite)
            .is_ok());
        assert!(Algorithm::CutAndChoose
            .check_compatible((2, 2), 0, Any, Strict)
            .is_err());
    }
}
