//! Seeded random instances.
//!
//! All randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`), so a seed names the same instance
//! on every platform. Integers in `[lo, hi]` are drawn by the widening
//! multiply `lo + ((x as u128 * span) >> 64)` on one 64-bit output `x`.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{canonical_ranks, Instance, PlayerSpec};

pub type Rng = Xoshiro256PlusPlus;

pub fn rng_from_seed(seed: u64) -> Rng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignMode {
    /// Every value drawn independently from the range.
    Any,
    /// The range is clipped to `[0, ∞)`.
    #[serde(rename = "nonneg")]
    NonNegative,
    /// The range is clipped to `(-∞, 0]`.
    #[serde(rename = "nonpos")]
    NonPositive,
    /// Values in `{0, 1}`; the range must lie inside it.
    Binary,
    /// One value per player, shared by all teams.
    #[serde(rename = "identical")]
    IdenticalTeams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrefMode {
    /// A uniformly random strict order.
    Strict,
    /// Each team gets a random level in `0..n`; equal levels tie.
    Weak,
    /// One random favourite at rank 1, every other team at rank 2.
    SingleFavorite,
}

macro_rules! named_enum {
    ($ty:ty, $($variant:path => $name:literal),+ $(,)?) => {
        impl $ty {
            pub fn name(self) -> &'static str {
                match self { $($variant => $name),+ }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($variant),)+
                    _ => Err(Error::invalid(
                        stringify!($ty),
                        format!("unknown name '{s}', expected one of: {}", [$($name),+].join(", ")),
                    )),
                }
            }
        }
    };
}

named_enum!(SignMode,
    SignMode::Any => "any",
    SignMode::NonNegative => "nonneg",
    SignMode::NonPositive => "nonpos",
    SignMode::Binary => "binary",
    SignMode::IdenticalTeams => "identical",
);

named_enum!(PrefMode,
    PrefMode::Strict => "strict",
    PrefMode::Weak => "weak",
    PrefMode::SingleFavorite => "single-favorite",
);

/// Inclusive integer interval, written `lo..hi` on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for ValueRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid("values", format!("expected 'lo..hi', got '{s}'"));
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Ok(ValueRange { lo, hi })
    }
}

impl fmt::Display for ValueRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub num_teams: usize,
    pub num_players: usize,
    pub values: ValueRange,
    pub signs: SignMode,
    pub prefs: PrefMode,
    pub seed: u64,
}

impl GeneratorConfig {
    /// The range values are actually drawn from.
    pub fn effective_range(&self) -> Result<ValueRange> {
        let ValueRange { lo, hi } = self.values;
        if lo > hi {
            return Err(Error::invalid("values", format!("empty range {lo}..{hi}")));
        }
        let clipped = match self.signs {
            SignMode::Any | SignMode::IdenticalTeams => self.values,
            SignMode::NonNegative => ValueRange { lo: lo.max(0), hi },
            SignMode::NonPositive => ValueRange { lo, hi: hi.min(0) },
            SignMode::Binary => {
                if lo < 0 || hi > 1 {
                    return Err(Error::invalid(
                        "values",
                        format!("binary values need a range inside 0..1, got {lo}..{hi}"),
                    ));
                }
                self.values
            }
        };
        if clipped.lo > clipped.hi {
            return Err(Error::invalid(
                "values",
                format!("range {lo}..{hi} has no {} values", self.signs),
            ));
        }
        Ok(clipped)
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_teams == 0 {
            return Err(Error::invalid("n", "must be a positive integer"));
        }
        self.effective_range().map(|_| ())
    }
}

pub(crate) fn uniform(rng: &mut Rng, lo: i64, hi: i64) -> i64 {
    debug_assert!(lo <= hi);
    let span = (hi as i128 - lo as i128 + 1) as u128;
    let offset = ((rng.next_u64() as u128 * span) >> 64) as i128;
    (lo as i128 + offset) as i64
}

pub(crate) fn uniform_index(rng: &mut Rng, len: usize) -> usize {
    uniform(rng, 0, len as i64 - 1) as usize
}

fn random_ranks(rng: &mut Rng, n: usize, mode: PrefMode) -> Vec<u32> {
    match mode {
        PrefMode::Strict => {
            // Fisher-Yates over the teams, then rank = position + 1.
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, uniform_index(rng, i + 1));
            }
            let mut ranks = vec![0; n];
            for (pos, &team) in order.iter().enumerate() {
                ranks[team] = pos as u32 + 1;
            }
            ranks
        }
        PrefMode::Weak => {
            let levels: Vec<usize> = (0..n).map(|_| uniform_index(rng, n)).collect();
            canonical_ranks(&levels)
        }
        PrefMode::SingleFavorite => {
            let favourite = uniform_index(rng, n);
            (0..n).map(|i| if i == favourite { 1 } else { 2 }).collect()
        }
    }
}

/// Generates an instance using `rng`, ignoring `config.seed`. Values are
/// drawn player by player, teams in order, before the player's ranks.
pub fn gen_with_rng(config: &GeneratorConfig, rng: &mut Rng) -> Result<Instance> {
    config.validate()?;
    let ValueRange { lo, hi } = config.effective_range()?;
    let n = config.num_teams;
    let players = (0..config.num_players)
        .map(|p| {
            let values = if config.signs == SignMode::IdenticalTeams {
                vec![uniform(rng, lo, hi); n]
            } else {
                (0..n).map(|_| uniform(rng, lo, hi)).collect()
            };
            PlayerSpec {
                id: format!("p{}", p + 1),
                values,
                ranks: random_ranks(rng, n, config.prefs),
            }
        })
        .collect();
    Instance::new(n, players)
}

pub fn gen_random_instance(config: &GeneratorConfig) -> Result<Instance> {
    gen_with_rng(config, &mut rng_from_seed(config.seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(signs: SignMode, prefs: PrefMode, lo: i64, hi: i64) -> GeneratorConfig {
        GeneratorConfig {
            num_teams: 3,
            num_players: 6,
            values: ValueRange { lo, hi },
            signs,
            prefs,
            seed: 42,
        }
    }

    #[test]
    fn same_seed_same_bytes() {
        let c = config(SignMode::Binary, PrefMode::Weak, 0, 1);
        let a = gen_random_instance(&c).unwrap().to_json();
        let b = gen_random_instance(&c).unwrap().to_json();
        assert_eq!(a, b);
        let other = gen_random_instance(&GeneratorConfig { seed: 43, ..c })
            .unwrap()
            .to_json();
        assert_ne!(a, other);
    }

    #[test]
    fn sign_modes_respected() {
        for seed in 0..50 {
            let c = GeneratorConfig {
                seed,
                ..config(SignMode::NonNegative, PrefMode::Strict, -5, 5)
            };
            assert!(gen_random_instance(&c).unwrap().is_nonnegative());
            let c = GeneratorConfig {
                seed,
                ..config(SignMode::NonPositive, PrefMode::Strict, -5, 5)
            };
            assert!(gen_random_instance(&c).unwrap().is_nonpositive());
            let c = GeneratorConfig {
                seed,
                ..config(SignMode::Binary, PrefMode::Strict, 0, 1)
            };
            assert!(gen_random_instance(&c).unwrap().is_binary());
            let c = GeneratorConfig {
                seed,
                ..config(SignMode::IdenticalTeams, PrefMode::Strict, -5, 5)
            };
            assert!(gen_random_instance(&c).unwrap().has_identical_valuations());
        }
    }

    #[test]
    fn pref_modes_respected() {
        for seed in 0..50 {
            let c = GeneratorConfig {
                seed,
                ..config(SignMode::Any, PrefMode::SingleFavorite, -5, 5)
            };
            for r in gen_random_instance(&c).unwrap().ranks() {
                assert_eq!(r.iter().filter(|&&x| x == 1).count(), 1);
                assert_eq!(r.iter().filter(|&&x| x == 2).count(), 2);
            }
            let c = GeneratorConfig {
                seed,
                ..config(SignMode::Any, PrefMode::Strict, -5, 5)
            };
            for r in gen_random_instance(&c).unwrap().ranks() {
                let mut sorted = r.clone();
                sorted.sort();
                assert_eq!(sorted, vec![1, 2, 3]);
            }
        }
    }

    #[test]
    fn uniform_covers_range() {
        let mut rng = rng_from_seed(7);
        let mut seen = [false; 5];
        for _ in 0..500 {
            let x = uniform(&mut rng, -2, 2);
            seen[(x + 2) as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(uniform(&mut rng, i64::MIN, i64::MIN), i64::MIN);
        let x = uniform(&mut rng, i64::MIN, i64::MAX);
        let _ = x;
    }

    #[test]
    fn inconsistent_configs_rejected() {
        assert!(config(SignMode::Binary, PrefMode::Weak, 0, 2)
            .validate()
            .is_err());
        assert!(config(SignMode::NonNegative, PrefMode::Weak, -3, -1)
            .validate()
            .is_err());
        assert!(config(SignMode::Any, PrefMode::Weak, 3, 1)
            .validate()
            .is_err());
        assert!(GeneratorConfig {
            num_teams: 0,
            ..config(SignMode::Any, PrefMode::Weak, 0, 1)
        }
        .validate()
        .is_err());
    }

    #[test]
    fn names_round_trip() {
        for s in ["any", "nonneg", "nonpos", "binary", "identical"] {
            assert_eq!(s.parse::<SignMode>().unwrap().name(), s);
        }
        for s in ["strict", "weak", "single-favorite"] {
            assert_eq!(s.parse::<PrefMode>().unwrap().name(), s);
        }
        assert!("both".parse::<SignMode>().is_err());
        assert_eq!(
            "-9..9".parse::<ValueRange>().unwrap(),
            ValueRange { lo: -9, hi: 9 }
        );
        assert!("9".parse::<ValueRange>().is_err());
        let json = serde_json::to_string(&SignMode::NonNegative).unwrap();
        assert_eq!(json, "\"nonneg\"");
    }
}
