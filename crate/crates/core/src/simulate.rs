//! Monte Carlo (or exhaustive) estimates of how often rules are anchor-proof.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::enumerate::{Budget, DomainFilter, OrderSpace, ProfileSpace};
use crate::error::{Error, Result};
use crate::model::{Alt, Alternatives, PreferenceApproval, Profile};
use crate::planner::{search_manipulation, InfoFunction, PlannerPreference};
use crate::rules::RuleId;
use crate::table::outcome_row;

const BATCH: usize = 256;
const REJECTION_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct SimulationConfig {
    pub n: usize,
    pub m: usize,
    pub samples: usize,
    pub seed: u64,
    pub rules: Vec<RuleId>,
    pub domain: DomainFilter,
    /// Enumerate the whole domain instead of sampling.
    pub exact: bool,
    /// Also estimate how often a planner with this information and one of
    /// these preferences can manipulate.
    pub manipulation: Option<(InfoFunction, Vec<PlannerPreference>)>,
    pub budget: Budget,
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 6 {
            return Err(Error::InvalidConfig(format!(
                "n must be in 1..=6, got {}",
                self.n
            )));
        }
        if !(2..=6).contains(&self.m) {
            return Err(Error::InvalidConfig(format!(
                "m must be in 2..=6, got {}",
                self.m
            )));
        }
        if self.rules.is_empty() {
            return Err(Error::InvalidConfig("at least one rule is required".into()));
        }
        for r in &self.rules {
            r.validate(self.m)?;
        }
        OrderSpace::new(self.n, self.m, self.budget)?;
        Ok(())
    }
}

fn sample_voter(
    rng: &mut ChaCha8Rng,
    m: usize,
    domain: DomainFilter,
) -> Result<PreferenceApproval> {
    let mut ranking: Vec<Alt> = (0..m as Alt).collect();
    for _ in 0..REJECTION_LIMIT {
        ranking.shuffle(rng);
        let t = rng.gen_range(1..=m);
        let p = PreferenceApproval::new(ranking.clone(), t)?;
        if domain.admits(&p) {
            return Ok(p);
        }
    }
    Err(Error::InvalidConfig(
        "domain filter rejected every sample".into(),
    ))
}

/// `samples` profiles drawn from `seed`; batches use independent streams so
/// the result does not depend on scheduling.
pub fn sample_profiles(
    n: usize,
    m: usize,
    samples: usize,
    seed: u64,
    domain: DomainFilter,
) -> Result<Vec<Profile>> {
    let batches = samples.div_ceil(BATCH);
    let parts: Vec<Vec<Profile>> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let size = BATCH.min(samples - b * BATCH);
            (0..size)
                .map(|_| {
                    Profile::new(
                        (0..n)
                            .map(|_| sample_voter(&mut rng, m, domain))
                            .collect::<Result<_>>()?,
                    )
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRow {
    pub rule: String,
    pub statistic: &'static str,
    pub numerator: u64,
    pub denominator: u64,
}

impl StatRow {
    pub fn value(&self) -> f64 {
        if self.denominator == 0 {
            0.0
        } else {
            self.numerator as f64 / self.denominator as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationReport {
    pub comment: String,
    pub rows: Vec<StatRow>,
}

pub const CSV_HEADER: &str = "rule,statistic,numerator,denominator,value";

impl SimulationReport {
    pub fn to_csv(&self) -> String {
        let mut out = format!("# {}\n{CSV_HEADER}\n", self.comment);
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{:.6}\n",
                r.rule,
                r.statistic,
                r.numerator,
                r.denominator,
                r.value()
            ));
        }
        out
    }

    pub fn find(&self, rule: &str, statistic: &str) -> Option<&StatRow> {
        self.rows
            .iter()
            .find(|r| r.rule == rule && r.statistic == statistic)
    }
}

pub fn run_simulation(config: &SimulationConfig) -> Result<SimulationReport> {
    config.validate()?;
    let alts = Alternatives::default_labels(config.m)?;
    let profiles = if config.exact {
        let space = ProfileSpace::new(config.n, config.m, config.domain, config.budget)?;
        space.iter().collect()
    } else {
        sample_profiles(
            config.n,
            config.m,
            config.samples,
            config.seed,
            config.domain,
        )?
    };
    let orders = OrderSpace::new(config.n, config.m, config.budget)?;
    config
        .budget
        .check(profiles.len() as u128 * orders.len() as u128 * config.rules.len() as u128)?;
    let mode = if config.exact {
        format!("exact enumeration of the {} domain", config.domain)
    } else {
        format!(
            "{} samples, seed {}, ranking uniform over permutations and threshold uniform over 1..={} per voter, {} domain by rejection",
            config.samples, config.seed, config.m, config.domain
        )
    };
    let comment = format!("n={} m={} {mode}", config.n, config.m);

    let denominator = profiles.len() as u64;
    let mut rows = Vec::new();
    if denominator == 0 {
        return Ok(SimulationReport { comment, rows });
    }
    for rule in &config.rules {
        let sizes: Vec<usize> = profiles
            .par_iter()
            .map(|p| {
                let mut row = outcome_row(rule, p, &orders)?;
                row.sort();
                row.dedup();
                Ok(row.len())
            })
            .collect::<Result<_>>()?;
        let name = rule.display(&alts);
        rows.push(StatRow {
            rule: name.clone(),
            statistic: "anchor_proof_fraction",
            numerator: sizes.iter().filter(|&&s| s == 1).count() as u64,
            denominator,
        });
        rows.push(StatRow {
            rule: name.clone(),
            statistic: "mean_outcome_set_size",
            numerator: sizes.iter().sum::<usize>() as u64,
            denominator,
        });
        if let Some((info, prefs)) = &config.manipulation {
            let hits = profiles
                .par_iter()
                .map(|p| Ok(search_manipulation(rule, *info, p, prefs, config.budget)?.is_some()))
                .collect::<Result<Vec<bool>>>()?;
            rows.push(StatRow {
                rule: name,
                statistic: "manipulation_rate",
                numerator: hits.iter().filter(|&&h| h).count() as u64,
                denominator,
            });
        }
    }
    Ok(SimulationReport { comment, rows })
}
