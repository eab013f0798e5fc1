//! Randomized sweeps: generate instances, run algorithms, verify their
//! guarantees.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{
    gen_with_rng, rng_from_seed, uniform, GeneratorConfig, PrefMode, SignMode, ValueRange,
};
use crate::model::Instance;
use crate::solve::Algorithm;
use crate::verify::{check_property, exists_ef1_jef_bruteforce, DEFAULT_ENUMERATION_BUDGET};

/// Verdict key recording whether a decision algorithm agrees with the
/// brute-force decider.
pub const DECISION_KEY: &str = "decision-matches-oracle";

/// Inclusive size range; `min == max` fixes the size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRange {
    pub min: usize,
    pub max: usize,
}

impl SizeRange {
    pub fn fixed(k: usize) -> Self {
        SizeRange { min: k, max: k }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub teams: SizeRange,
    pub players: SizeRange,
    pub values: ValueRange,
    pub signs: SignMode,
    pub prefs: PrefMode,
    pub seed: u64,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
    /// Enumeration and table budget for PO checks and budgeted algorithms.
    #[serde(default = "default_budget")]
    pub budget: u64,
}

fn default_budget() -> u64 {
    DEFAULT_ENUMERATION_BUDGET
}

impl ExperimentConfig {
    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let config: ExperimentConfig = serde_json::from_slice(bytes)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.teams.min == 0 || self.teams.min > self.teams.max {
            return Err(Error::invalid(
                "teams",
                format!(
                    "need 1 <= min <= max, got {}..{}",
                    self.teams.min, self.teams.max
                ),
            ));
        }
        if self.players.min > self.players.max {
            return Err(Error::invalid(
                "players",
                format!(
                    "need min <= max, got {}..{}",
                    self.players.min, self.players.max
                ),
            ));
        }
        let range = self
            .trial_generator(self.teams.min, self.players.min, 0)
            .effective_range()?;
        for algorithm in &self.algorithms {
            algorithm.check_compatible(
                (self.teams.min, self.teams.max),
                range.lo,
                self.signs,
                self.prefs,
            )?;
        }
        Ok(())
    }

    fn trial_generator(&self, n: usize, m: usize, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            num_teams: n,
            num_players: m,
            values: self.values,
            signs: self.signs,
            prefs: self.prefs,
            seed,
        }
    }

    /// Instance of trial `trial`. Sizes and contents are drawn from one
    /// stream seeded with `seed + trial`; the generator config recorded in
    /// the row regenerates it.
    pub fn trial_instance(&self, trial: usize) -> Result<(GeneratorConfig, Instance)> {
        let sub_seed = self.seed.wrapping_add(trial as u64);
        let mut rng = rng_from_seed(sub_seed);
        let n = uniform(&mut rng, self.teams.min as i64, self.teams.max as i64) as usize;
        let m = uniform(&mut rng, self.players.min as i64, self.players.max as i64) as usize;
        let config = self.trial_generator(n, m, sub_seed);
        let instance = gen_with_rng(&config, &mut rng)?;
        Ok((config, instance))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRow {
    pub algorithm: Algorithm,
    pub trial: usize,
    pub seed: u64,
    pub instance: Instance,
    /// `None` when the algorithm errored or answered "no".
    pub assignment: Option<Vec<usize>>,
    pub utilities: Option<Vec<i64>>,
    /// Property short name to verdict. Properties whose check exceeded the
    /// budget are listed in `skipped` instead.
    pub verdicts: BTreeMap<String, bool>,
    pub skipped: Vec<String>,
    pub error: Option<String>,
    pub wall_ms: f64,
}

impl TrialRow {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.verdicts.values().all(|&v| v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmSummary {
    pub runs: usize,
    pub passed: usize,
    pub errors: usize,
    pub no_answers: usize,
    /// Property short name to (holds, checked).
    pub property_counts: BTreeMap<String, (usize, usize)>,
    /// Seeds of trials that failed a verdict or errored.
    pub failing_seeds: Vec<u64>,
}

impl AlgorithmSummary {
    pub fn pass_rate(&self) -> f64 {
        if self.runs == 0 {
            1.0
        } else {
            self.passed as f64 / self.runs as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rows: Vec<TrialRow>,
    pub summary: BTreeMap<String, AlgorithmSummary>,
}

fn run_trial(
    config: &ExperimentConfig,
    algorithm: Algorithm,
    trial: usize,
    instance: &Instance,
    seed: u64,
) -> TrialRow {
    let start = Instant::now();
    let outcome = algorithm.run(instance, config.budget);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut row = TrialRow {
        algorithm,
        trial,
        seed,
        instance: instance.clone(),
        assignment: None,
        utilities: None,
        verdicts: BTreeMap::new(),
        skipped: Vec::new(),
        error: None,
        wall_ms,
    };
    let allocation = match outcome {
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
        Ok(a) => a,
    };
    if algorithm.is_decision() {
        match exists_ef1_jef_bruteforce(instance, config.budget) {
            Ok(oracle) => {
                row.verdicts.insert(
                    DECISION_KEY.to_string(),
                    oracle.is_some() == allocation.is_some(),
                );
            }
            Err(Error::Capacity { .. }) => row.skipped.push(DECISION_KEY.to_string()),
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    let Some(allocation) = allocation else {
        return row;
    };
    for &property in algorithm.guarantees() {
        match check_property(instance, &allocation, property, config.budget) {
            Ok(report) => {
                row.verdicts
                    .insert(property.short_name().to_string(), report.holds);
            }
            Err(Error::Capacity { .. }) => row.skipped.push(property.short_name().to_string()),
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    row.utilities = Some(instance.utilities(&allocation));
    row.assignment = Some(allocation.assignment().to_vec());
    row
}

/// Runs every algorithm on every trial instance. Trials run in parallel;
/// rows are ordered by trial, then by the algorithm order of the config.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let per_trial: Vec<Vec<TrialRow>> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let (generator, instance) = config.trial_instance(trial)?;
            Ok(config
                .algorithms
                .iter()
                .map(|&a| run_trial(config, a, trial, &instance, generator.seed))
                .collect())
        })
        .collect::<Result<_>>()?;
    let rows: Vec<TrialRow> = per_trial.into_iter().flatten().collect();

    let mut summary: BTreeMap<String, AlgorithmSummary> = config
        .algorithms
        .iter()
        .map(|a| (a.name().to_string(), AlgorithmSummary::default()))
        .collect();
    for row in &rows {
        let s = summary
            .get_mut(row.algorithm.name())
            .expect("summary per algorithm");
        s.runs += 1;
        if row.passed() {
            s.passed += 1;
        } else {
            s.failing_seeds.push(row.seed);
        }
        s.errors += row.error.is_some() as usize;
        s.no_answers += (row.error.is_none() && row.assignment.is_none()) as usize;
        for (name, &holds) in &row.verdicts {
            let entry = s.property_counts.entry(name.clone()).or_default();
            entry.0 += holds as usize;
            entry.1 += 1;
        }
    }
    Ok(ExperimentReport {
        config: config.clone(),
        rows,
        summary,
    })
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// One line per row; verdict columns cover every property seen in the
    /// report and are empty where not checked.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> std::io::Result<()> {
        let mut columns: Vec<&str> = self
            .rows
            .iter()
            .flat_map(|r| r.verdicts.keys().map(String::as_str))
            .collect();
        columns.sort_unstable();
        columns.dedup();
        let mut writer = csv::Writer::from_writer(out);
        let mut header = vec![
            "algorithm",
            "trial",
            "seed",
            "teams",
            "players",
            "utilities",
            "assignment",
        ];
        header.extend(&columns);
        header.extend(["error", "wall_ms"]);
        writer.write_record(&header)?;
        let join = |xs: &[String]| xs.join(" ");
        for row in &self.rows {
            let mut record = vec![
                row.algorithm.name().to_string(),
                row.trial.to_string(),
                row.seed.to_string(),
                row.instance.num_teams().to_string(),
                row.instance.num_players().to_string(),
                row.utilities.as_deref().map_or(String::new(), |u| {
                    join(&u.iter().map(i64::to_string).collect::<Vec<_>>())
                }),
                row.assignment.as_deref().map_or(String::new(), |a| {
                    join(&a.iter().map(usize::to_string).collect::<Vec<_>>())
                }),
            ];
            record.extend(
                columns
                    .iter()
                    .map(|c| row.verdicts.get(*c).map_or(String::new(), bool::to_string)),
            );
            record.push(row.error.clone().unwrap_or_default());
            record.push(format!("{:.3}", row.wall_ms));
            writer.write_record(&record)?;
        }
        writer.flush()
    }
}
