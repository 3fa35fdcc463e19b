//! Verification suites run by `anchorvote verify`.

use std::time::Instant;

use crate::anchor::{anchor_proof_for_profile, nom_char, sav_char, weakuna_char, DomainFilter};
use crate::ballots::{
    generate_ballot, order_for_target, preference_for_target, tolerant_preference_for_target,
};
use crate::enumerate::{permutations, preferences, Budget, ProfileSpace};
use crate::error::{Error, Result};
use crate::model::{AltSet, PresentationOrder};
use crate::planner::{
    all_preferences, informativeness_cmp, is_optimal_strategy, InfoFunction, Informativeness,
};
use crate::ranked::{generate_truncated, rank_anchor_proof, tops_only_check, RankRuleId};
use crate::reproduce::{
    full_information_mismatches, manipulation_cases, run_reproduction, zero_information_hits,
    Check, Report,
};
use crate::rules::RuleId;
use crate::simulate::{run_simulation, SimulationConfig};

pub const SUITES: [&str; 15] = [
    "example1",
    "example2",
    "sav-char",
    "nom-char",
    "weakuna-char",
    "fig1",
    "remark1",
    "order-switch",
    "zero-info",
    "manipulation",
    "example9",
    "informativeness",
    "tops-only",
    "shadow",
    "simulation",
];

/// Runs one suite, or every suite for `all`.
pub fn run_suite(name: &str, budget: Budget) -> Result<Vec<Report>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, budget)).collect();
    }
    Ok(vec![run_one(name, budget)?])
}

fn run_one(name: &str, budget: Budget) -> Result<Report> {
    let start = Instant::now();
    let mut report = match name {
        "example1" | "example2" | "example9" => run_reproduction(name)?,
        "sav-char" => characterization(name, RuleId::Sav, sav_char, budget)?,
        "nom-char" => characterization(name, RuleId::Nom, nom_char, budget)?,
        "weakuna-char" => weak_unanimity(budget)?,
        "fig1" => run_reproduction("fig1")?,
        "remark1" => remark1()?,
        "order-switch" => order_switch()?,
        "zero-info" => zero_info(budget)?,
        "manipulation" => manipulation(budget)?,
        "informativeness" => informativeness(budget)?,
        "tops-only" => tops_only(budget)?,
        "shadow" => shadow()?,
        "simulation" => simulation(budget)?,
        other => return Err(Error::UnknownCase(other.into())),
    };
    report.case = name.into();
    report
        .notes
        .push(format!("{:.2}s", start.elapsed().as_secs_f64()));
    Ok(report)
}

fn report(case: &str, checks: Vec<Check>) -> Report {
    Report {
        case: case.into(),
        checks,
        notes: Vec::new(),
    }
}

fn characterization(
    case: &str,
    rule: RuleId,
    predicate: fn(&crate::model::Profile) -> bool,
    budget: Budget,
) -> Result<Report> {
    let mut checks = Vec::new();
    for n in 1..=3 {
        let space = ProfileSpace::new(n, 3, DomainFilter::All, budget)?;
        let mut bad = 0usize;
        for p in space.iter() {
            if predicate(&p) != anchor_proof_for_profile(&rule, &p, budget)?.holds {
                bad += 1;
            }
        }
        checks.push(Check::new(
            format!("n={n}, m=3: disagreements with brute force"),
            "0",
            bad.to_string(),
        ));
    }
    Ok(report(case, checks))
}

fn weak_unanimity(budget: Budget) -> Result<Report> {
    let rules = [RuleId::Sav, RuleId::UnanOrAll, RuleId::UnanOrLargest];
    let space = ProfileSpace::new(2, 3, DomainFilter::All, budget)?;
    let (mut forward, mut backward) = (0usize, 0usize);
    for p in space.iter() {
        let proofs = rules
            .iter()
            .map(|r| Ok(anchor_proof_for_profile(r, &p, budget)?.holds))
            .collect::<Result<Vec<bool>>>()?;
        if weakuna_char(&p) {
            forward += proofs.iter().filter(|&&h| !h).count();
        } else if proofs.iter().all(|&h| h) {
            backward += 1;
        }
    }
    Ok(report(
        "weakuna-char",
        vec![
            Check::new(
                "profiles meeting the condition yet not anchor-proof",
                "0",
                forward.to_string(),
            ),
            Check::new(
                "profiles violating the condition yet anchor-proof for all three rules",
                "0",
                backward.to_string(),
            ),
        ],
    ))
}

fn remark1() -> Result<Report> {
    let mut checks = Vec::new();
    for m in [3usize, 4] {
        let subsets: Vec<AltSet> = (0..=AltSet::full(m).bits())
            .map(AltSet::from_bits)
            .collect();
        let orders: Vec<PresentationOrder> = permutations(m)
            .into_iter()
            .map(PresentationOrder::new)
            .collect::<Result<_>>()?;
        let mut bad = [0usize; 3];
        for p in preferences(m, DomainFilter::All) {
            for &a in &subsets {
                let o = order_for_target(&p, a)?;
                if generate_ballot(&p, &o)? != a.intersection(p.acceptable()).with(p.top()) {
                    bad[0] += 1;
                }
            }
        }
        for o in &orders {
            for &a in &subsets {
                if !a.is_empty() && generate_ballot(&preference_for_target(o, a)?, o)? != a {
                    bad[1] += 1;
                }
                let q = tolerant_preference_for_target(o, a)?;
                if !q.is_tolerant() || generate_ballot(&q, o)? != a.with(o.first()) {
                    bad[2] += 1;
                }
            }
        }
        for (name, b) in [
            "order for target",
            "preference for target",
            "tolerant preference for target",
        ]
        .iter()
        .zip(bad)
        {
            checks.push(Check::new(
                format!("m={m}, {name}: failures"),
                "0",
                b.to_string(),
            ));
        }
    }
    Ok(report("remark1", checks))
}

/// Checks the order-switch property at `m = 3`; returns (tuples, failures).
pub fn order_switch_counts() -> Result<(usize, usize)> {
    let m = 3;
    let full = AltSet::full(m);
    let orders: Vec<PresentationOrder> = permutations(m)
        .into_iter()
        .map(PresentationOrder::new)
        .collect::<Result<_>>()?;
    let prefs = preferences(m, DomainFilter::All);
    let (mut tuples, mut failures) = (0usize, 0usize);
    for sigma in &orders {
        for pi in &orders {
            for p in &prefs {
                if generate_ballot(p, sigma)? != full {
                    continue;
                }
                let a = generate_ballot(p, pi)?;
                if a == full {
                    continue;
                }
                for q in &prefs {
                    if !a.is_subset(generate_ballot(q, sigma)?) {
                        continue;
                    }
                    tuples += 1;
                    if generate_ballot(q, pi)? != a {
                        failures += 1;
                    }
                }
            }
        }
    }
    Ok((tuples, failures))
}

fn order_switch() -> Result<Report> {
    let (tuples, failures) = order_switch_counts()?;
    Ok(report(
        "order-switch",
        vec![
            Check::flag(
                "tuples meeting the three conditions",
                tuples > 0,
                tuples.to_string(),
            ),
            Check::new(
                "tuples where the switched ballot differs",
                "0",
                failures.to_string(),
            ),
        ],
    ))
}

fn zero_info(budget: Budget) -> Result<Report> {
    let prefs = all_preferences(3)?;
    let mut checks = Vec::new();
    for rule in [RuleId::Sav, RuleId::Nom] {
        let hits = zero_information_hits(rule, &prefs, budget)?;
        checks.push(Check::new(
            format!("{rule}: preferences with an optimal strategy"),
            "0",
            hits.to_string(),
        ));
    }
    Ok(report("zero-info", checks))
}

fn manipulation(budget: Budget) -> Result<Report> {
    let mut checks = Vec::new();
    for c in manipulation_cases()? {
        let v = is_optimal_strategy(
            &c.rule,
            &c.preference,
            c.info,
            &c.profile,
            &c.sigma_star,
            budget,
        )?;
        checks.push(Check::flag(
            c.label,
            v.is_optimal(),
            format!("{v:?}").chars().take(60).collect::<String>(),
        ));
    }
    let prefs = all_preferences(3)?;
    for rule in [RuleId::Sav, RuleId::Nom] {
        let mismatches = full_information_mismatches(rule, &prefs, budget)?;
        checks.push(Check::new(
            format!("{rule}: full information manipulable iff not anchor-proof, mismatches"),
            "0",
            mismatches.to_string(),
        ));
    }
    Ok(report("manipulation", checks))
}

fn informativeness(budget: Budget) -> Result<Report> {
    use InfoFunction::*;
    let mut checks = Vec::new();
    for (f, g) in [
        (Full, AccSets),
        (AccSets, AccPoints),
        (AccPoints, Zero),
        (Full, PlSets),
        (PlSets, PlPoints),
        (PlPoints, Zero),
    ] {
        let v = informativeness_cmp(f, g, 2, 3, budget)?;
        checks.push(Check::flag(
            format!("{f} at least as informative as {g}"),
            v.against_f.is_none(),
            format!("{:?}", v.relation),
        ));
    }
    let v = informativeness_cmp(PlPoints, AccPoints, 2, 3, budget)?;
    checks.push(Check::new(
        "pl versus acc",
        "Incomparable",
        format!("{:?}", v.relation),
    ));
    checks.push(Check::flag(
        "both incomparability witnesses present",
        v.relation == Informativeness::Incomparable
            && v.against_f.is_some()
            && v.against_g.is_some(),
        "witnesses",
    ));
    Ok(report("informativeness", checks))
}

fn tops_only(budget: Budget) -> Result<Report> {
    let mut checks = Vec::new();
    for (rule, expected) in [
        (RankRuleId::Plurality, true),
        (RankRuleId::FirstVoterSecond, false),
    ] {
        let t = tops_only_check(rule, 2, 3, budget)?.holds;
        let a = rank_anchor_proof(rule, 2, 3, budget)?.holds;
        checks.push(Check::new(
            format!("{rule}: tops-only"),
            expected.to_string(),
            t.to_string(),
        ));
        checks.push(Check::new(
            format!("{rule}: anchor-proof"),
            expected.to_string(),
            a.to_string(),
        ));
    }
    Ok(report("tops-only", checks))
}

fn shadow() -> Result<Report> {
    let mut checks = Vec::new();
    for m in [3usize, 4] {
        let mut bad = 0usize;
        for p in preferences(m, DomainFilter::All) {
            for o in permutations(m) {
                let o = PresentationOrder::new(o)?;
                if generate_truncated(&p, &o)?.members() != generate_ballot(&p, &o)? {
                    bad += 1;
                }
            }
        }
        checks.push(Check::new(
            format!("m={m}: ranked members differ from approval ballot"),
            "0",
            bad.to_string(),
        ));
    }
    Ok(report("shadow", checks))
}

fn simulation(budget: Budget) -> Result<Report> {
    let base = SimulationConfig {
        n: 3,
        m: 3,
        samples: 2000,
        seed: 42,
        rules: vec![RuleId::Sav],
        domain: DomainFilter::All,
        exact: false,
        manipulation: None,
        budget,
    };
    let a = run_simulation(&base)?.to_csv();
    let b = run_simulation(&base)?.to_csv();
    let exact = run_simulation(&SimulationConfig {
        exact: true,
        ..base
    })?;
    let row = exact.find("sav", "anchor_proof_fraction").expect("sav row");
    let space = ProfileSpace::new(3, 3, DomainFilter::All, budget)?;
    let mut proof = 0u64;
    for p in space.iter() {
        if anchor_proof_for_profile(&RuleId::Sav, &p, budget)?.holds {
            proof += 1;
        }
    }
    Ok(report(
        "simulation",
        vec![
            Check::flag(
                "same seed gives identical bytes",
                a == b,
                format!("{} bytes", a.len()),
            ),
            Check::new(
                "exact anchor-proof fraction for sav",
                format!("{proof}/{}", space.len()),
                format!("{}/{}", row.numerator, row.denominator),
            ),
        ],
    ))
}
