//! Worked cases recomputed from primitives, each with PASS/FAIL checks.

use std::fmt::Write as _;

use crate::anchor::{
    cautious_equalizing_profile, first_position_pair, nomination_order_pair,
    pair_equalized_somewhere, pair_preserves_everywhere, quantifier_check, DomainFilter, Question,
};
use crate::ballots::{best_first_orders, generate_ballot, generate_ballot_profile};
use crate::enumerate::{Budget, OrderSpace, ProfileSpace};
use crate::error::{Error, Result};
use crate::format::{format_orders, format_profile};
use crate::model::{
    Alt, AltSet, Alternatives, OrderVector, PreferenceApproval, PresentationOrder, Profile,
};
use crate::planner::{
    all_preferences, is_optimal_strategy, lex_pref, possible_worlds, search_manipulation,
    singleton_first, InfoFunction, Optimality, PlannerPreference, WorldTable,
};
use crate::rules::{eval_rule, RuleId};

pub const CASES: [&str; 5] = ["example1", "example2", "example9", "table3", "fig1"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        label: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        let expected = expected.into();
        let actual = actual.into();
        Check {
            label: label.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn flag(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            expected: "true".into(),
            actual: detail.into(),
            pass,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub case: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(case: &str) -> Self {
        Report {
            case: case.into(),
            ..Report::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for note in &self.notes {
            for line in note.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            if c.expected == "true" {
                let _ = writeln!(out, "{status} {}: {}", c.label, c.actual);
            } else {
                let _ = writeln!(
                    out,
                    "{status} {}: expected {}, got {}",
                    c.label, c.expected, c.actual
                );
            }
        }
        let _ = writeln!(
            out,
            "{} {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.case
        );
        out
    }
}

pub fn run_reproduction(case: &str) -> Result<Report> {
    match case {
        "example1" => example1(),
        "example2" => example2(),
        "example9" => example9(Budget::DEFAULT),
        "table3" => table3(Budget::DEFAULT),
        "fig1" => fig1(2, 3, Budget::DEFAULT).map(|g| g.report()),
        other => Err(Error::UnknownCase(other.into())),
    }
}

fn pa(ranking: &[Alt], t: usize) -> PreferenceApproval {
    PreferenceApproval::new(ranking.to_vec(), t).expect("valid preference")
}

fn profile(voters: &[(&[Alt], usize)]) -> Profile {
    Profile::new(voters.iter().map(|(r, t)| pa(r, *t)).collect()).expect("valid profile")
}

fn ballots_text(alts: &Alternatives, ballots: &[AltSet]) -> String {
    ballots
        .iter()
        .map(|&b| alts.format_set(b))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Two voters prefer x, three prefer y, everyone accepts both.
pub fn example1_profile() -> Profile {
    profile(&[
        (&[0, 1], 2),
        (&[0, 1], 2),
        (&[1, 0], 2),
        (&[1, 0], 2),
        (&[1, 0], 2),
    ])
}

fn example1() -> Result<Report> {
    let alts = Alternatives::from_strs(&["x", "y"])?;
    let p = example1_profile();
    let mut r = Report::new("example1");
    let own = best_first_orders(&p);
    let shared = OrderVector::uniform(PresentationOrder::identity(2), 5);
    for (label, orders, ballots, winner) in [
        ("own top first", &own, "{x} {x} {y} {y} {y}", "{y}"),
        (
            "everyone sees x then y",
            &shared,
            "{x} {x} {x,y} {x,y} {x,y}",
            "{x}",
        ),
    ] {
        let b = generate_ballot_profile(&p, orders)?;
        r.checks.push(Check::new(
            format!("{label}: ballots"),
            ballots,
            ballots_text(&alts, b.ballots()),
        ));
        let w = eval_rule(&RuleId::Sav, &b)?;
        r.checks.push(Check::new(
            format!("{label}: approval winner"),
            winner,
            alts.format_set(w),
        ));
    }
    Ok(r)
}

fn example2() -> Result<Report> {
    let alts = Alternatives::from_strs(&["x", "y", "z"])?;
    let b = generate_ballot(&pa(&[0, 1, 2], 3), &PresentationOrder::new(vec![2, 0, 1])?)?;
    let mut r = Report::new("example2");
    r.checks.push(Check::new(
        "ballot of (x,y,z) tolerant shown z,x,y",
        "{x,z}",
        alts.format_set(b),
    ));
    Ok(r)
}

/// Voter 1 accepts her top two, the others only their top; voters 1 and 2
/// share a top, voters 3 and 4 top voter 1's second choice.
pub fn example9_profile() -> Profile {
    profile(&[
        (&[0, 1, 2], 2),
        (&[0, 1, 2], 1),
        (&[1, 0, 2], 1),
        (&[1, 0, 2], 1),
    ])
}

/// Searches completions of `sigma_1 = (a,b,c)` in index order.
pub fn example9_completion(budget: Budget) -> Result<(usize, Option<OrderVector>)> {
    let p = example9_profile();
    let pref = lex_pref(&[0, 1, 2])?;
    let worlds = possible_worlds(InfoFunction::AltStructure, &p, budget)?;
    let count = worlds.len();
    let table = WorldTable::from_worlds(&RuleId::Sav, worlds, budget)?;
    let space = OrderSpace::new(3, 3, budget)?;
    let first = PresentationOrder::identity(3);
    for idx in 0..space.len() {
        let rest = space.order_vector(idx);
        let mut orders = vec![first.clone()];
        orders.extend(rest.orders().iter().cloned());
        let sigma = OrderVector::new(orders)?;
        if table.check(&pref, &sigma)?.is_optimal() {
            return Ok((count, Some(sigma)));
        }
    }
    Ok((count, None))
}

fn example9(budget: Budget) -> Result<Report> {
    let alts = Alternatives::default_labels(3)?;
    let mut r = Report::new("example9");
    r.notes.push(format!(
        "profile\n{}",
        format_profile(&alts, &example9_profile()).trim_end()
    ));
    let (count, found) = example9_completion(budget)?;
    r.checks.push(Check::flag(
        "at most six possible worlds",
        count <= 6,
        format!("{count} worlds"),
    ));
    match found {
        Some(sigma) => {
            r.notes.push(format!(
                "optimal completion\n{}",
                format_orders(&alts, &sigma).trim_end()
            ));
            r.checks.push(Check::flag(
                "a completion with voter 1 shown a,b,c is optimal",
                true,
                "found",
            ));
        }
        None => r.checks.push(Check::flag(
            "a completion with voter 1 shown a,b,c is optimal",
            false,
            "no completion is optimal",
        )),
    }
    Ok(r)
}

/// One constructed manipulation: rule, information, true profile, planner
/// preference and the strategy claimed optimal.
#[derive(Clone, Debug)]
pub struct ManipulationCase {
    pub label: &'static str,
    pub rule: RuleId,
    pub info: InfoFunction,
    pub profile: Profile,
    pub preference: PlannerPreference,
    pub sigma_star: OrderVector,
}

fn uniform(order: &[Alt], n: usize) -> OrderVector {
    OrderVector::uniform(
        PresentationOrder::new(order.to_vec()).expect("valid order"),
        n,
    )
}

/// `{first}` on top, then the lexicographic order along `a, b, c`.
fn preference_with_first(first: AltSet) -> Result<PlannerPreference> {
    let base = lex_pref(&[0, 1, 2])?;
    let mut order = vec![first];
    order.extend(base.order().iter().copied().filter(|&s| s != first));
    PlannerPreference::new(3, order)
}

/// The four constructed witnesses at three voters and three alternatives.
pub fn manipulation_cases() -> Result<Vec<ManipulationCase>> {
    // a accepted by all, b and c by two voters each
    let acc_unanimous = profile(&[(&[0, 1, 2], 2), (&[0, 2, 1], 2), (&[1, 2, 0], 3)]);
    // a accepted by all, b by one, c by none
    let acc_nom = profile(&[(&[0, 1, 2], 2), (&[0, 1, 2], 1), (&[0, 2, 1], 1)]);
    // everyone ranks a first
    let all_top_a = profile(&[(&[0, 1, 2], 3), (&[0, 2, 1], 2), (&[0, 1, 2], 1)]);
    Ok(vec![
        ManipulationCase {
            label: "sav under acceptability points",
            rule: RuleId::Sav,
            info: InfoFunction::AccPoints,
            profile: acc_unanimous,
            preference: singleton_first(0, 3)?,
            sigma_star: uniform(&[0, 1, 2], 3),
        },
        ManipulationCase {
            label: "sav under plurality points",
            rule: RuleId::Sav,
            info: InfoFunction::PlPoints,
            profile: all_top_a.clone(),
            preference: singleton_first(0, 3)?,
            sigma_star: uniform(&[0, 1, 2], 3),
        },
        ManipulationCase {
            label: "nom under acceptability points",
            rule: RuleId::Nom,
            info: InfoFunction::AccPoints,
            profile: acc_nom,
            preference: preference_with_first(AltSet::from_alts([0, 1]))?,
            sigma_star: uniform(&[1, 0, 2], 3),
        },
        ManipulationCase {
            label: "nom under plurality points",
            rule: RuleId::Nom,
            info: InfoFunction::PlPoints,
            profile: all_top_a,
            preference: singleton_first(0, 3)?,
            sigma_star: uniform(&[0, 1, 2], 3),
        },
    ])
}

fn describe(o: &Optimality) -> String {
    match o {
        Optimality::Optimal(_) => "optimal".into(),
        Optimality::NotDominant { .. } => "beaten in some world".into(),
        Optimality::NoStrictImprovement => "never strictly better".into(),
    }
}

/// Per profile at `n=2, m=3`: manipulable under full information for some
/// preference exactly when not anchor-proof. Returns the mismatches.
pub fn full_information_mismatches(
    rule: RuleId,
    prefs: &[PlannerPreference],
    budget: Budget,
) -> Result<usize> {
    let space = ProfileSpace::new(2, 3, DomainFilter::All, budget)?;
    let mut mismatches = 0;
    for p in space.iter() {
        let manipulable =
            search_manipulation(&rule, InfoFunction::Full, &p, prefs, budget)?.is_some();
        let anchor_proof = crate::anchor::anchor_proof_for_profile(&rule, &p, budget)?.holds;
        if manipulable == anchor_proof {
            mismatches += 1;
        }
    }
    Ok(mismatches)
}

/// Number of planner preferences admitting an optimal strategy under zero
/// information at `n=2, m=3`.
pub fn zero_information_hits(
    rule: RuleId,
    prefs: &[PlannerPreference],
    budget: Budget,
) -> Result<usize> {
    let any = profile(&[(&[0, 1, 2], 1), (&[0, 1, 2], 1)]);
    let table = WorldTable::build(&rule, InfoFunction::Zero, &any, budget)?;
    Ok(prefs
        .iter()
        .filter(|p| table.first_optimal(p).is_some())
        .count())
}

fn table3(budget: Budget) -> Result<Report> {
    let mut r = Report::new("table3");
    let prefs = all_preferences(3)?;
    let mut rows: Vec<(&str, &str, bool)> = Vec::new();

    let mut full_ok = true;
    for rule in [RuleId::Sav, RuleId::Nom] {
        let mismatches = full_information_mismatches(rule, &prefs, budget)?;
        r.checks.push(Check::new(
            format!("full information, {rule}: profiles where manipulable differs from not anchor-proof"),
            "0",
            mismatches.to_string(),
        ));
        full_ok &= mismatches == 0;
    }
    rows.push(("full", "yes, unless anchor-proof", full_ok));

    let mut zero_ok = true;
    for rule in [RuleId::Sav, RuleId::Nom] {
        let hits = zero_information_hits(rule, &prefs, budget)?;
        r.checks.push(Check::new(
            format!("zero information, {rule}: preferences with an optimal strategy"),
            "0",
            hits.to_string(),
        ));
        zero_ok &= hits == 0;
    }
    rows.push(("zero", "no", zero_ok));

    let cases = manipulation_cases()?;
    for (info, name) in [
        (InfoFunction::AccPoints, "acc"),
        (InfoFunction::PlPoints, "pl"),
    ] {
        let mut ok = true;
        for case in cases.iter().filter(|c| c.info == info) {
            let v = is_optimal_strategy(
                &case.rule,
                &case.preference,
                case.info,
                &case.profile,
                &case.sigma_star,
                budget,
            )?;
            r.checks
                .push(Check::new(case.label, "optimal", describe(&v)));
            ok &= v.is_optimal();
        }
        rows.push((name, "yes", ok));
    }

    let mut table = String::from("info      manipulation possible?\n");
    for (info, answer, ok) in &rows {
        let _ = writeln!(
            table,
            "{info:<9} {answer}{}",
            if *ok { "" } else { "  (not reproduced)" }
        );
    }
    r.notes.push(table.trim_end().into());
    Ok(r)
}

/// One cell of the quantifier grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub rule: RuleId,
    pub question: Question,
    pub domain: DomainFilter,
    pub holds: bool,
    pub expected: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct QuantifierGrid {
    pub n: usize,
    pub m: usize,
    pub cells: Vec<GridCell>,
    pub extra: Vec<Check>,
}

pub fn fig1_rules() -> Vec<RuleId> {
    vec![
        RuleId::Sav,
        RuleId::Nom,
        RuleId::FixedX(0),
        RuleId::SavCautious,
        RuleId::Constant(AltSet::singleton(0)),
    ]
}

/// The answer the theory gives, where it gives one.
pub fn fig1_expected(rule: RuleId, q: Question, domain: DomainFilter) -> Option<bool> {
    let tolerant = domain == DomainFilter::Tolerant;
    if let RuleId::Constant(_) = rule {
        return Some(true);
    }
    match q {
        Question::Q1 => Some(false),
        Question::Q2 if !tolerant => Some(true),
        Question::Q2 => match rule {
            RuleId::Sav => Some(false),
            RuleId::FixedX(_) => Some(true),
            _ => None,
        },
        Question::Q3 => match (rule, tolerant) {
            (RuleId::Sav, _) => Some(false),
            (RuleId::Nom, t) => Some(t),
            _ => None,
        },
        Question::Q4 | Question::Q6 => Some(true),
        Question::Q5 if !tolerant => Some(true),
        Question::Q5 => match rule {
            RuleId::Sav => Some(false),
            RuleId::SavCautious => Some(true),
            _ => None,
        },
    }
}

pub fn fig1(n: usize, m: usize, budget: Budget) -> Result<QuantifierGrid> {
    let mut cells = Vec::new();
    for rule in fig1_rules() {
        for q in Question::ALL {
            for domain in [DomainFilter::All, DomainFilter::Tolerant] {
                let v = quantifier_check(&rule, q, n, m, domain, budget)?;
                cells.push(GridCell {
                    rule,
                    question: q,
                    domain,
                    holds: v.holds,
                    expected: fig1_expected(rule, q, domain),
                });
            }
        }
    }

    let mut extra = Vec::new();
    let (s, t) = nomination_order_pair(3, 3)?;
    let v = pair_preserves_everywhere(&RuleId::Nom, &s, &t, DomainFilter::Tolerant, budget)?;
    extra.push(Check::flag(
        "nom keeps its outcome under the constructed order pair on every tolerant profile (n=3, m=3)",
        v.holds,
        if v.holds { "holds" } else { "separated" },
    ));

    let (s, t) = first_position_pair(n, m, 0, 1)?;
    let v = pair_equalized_somewhere(&RuleId::Sav, &s, &t, DomainFilter::Tolerant, budget)?;
    extra.push(Check::flag(
        "sav never agrees on a tolerant profile when everyone sees a first versus b first",
        !v.holds,
        if v.holds {
            "some profile agrees"
        } else {
            "no profile agrees"
        },
    ));

    let orders = OrderSpace::new(n, m, budget)?;
    let mut failures = 0usize;
    for i in 0..orders.len() {
        for j in (i + 1)..orders.len() {
            let (s, t) = (orders.order_vector(i), orders.order_vector(j));
            let p = cautious_equalizing_profile(&s, &t)?;
            let a = eval_rule(&RuleId::SavCautious, &generate_ballot_profile(&p, &s)?)?;
            let b = eval_rule(&RuleId::SavCautious, &generate_ballot_profile(&p, &t)?)?;
            if a != b || !p.is_tolerant() {
                failures += 1;
            }
        }
    }
    extra.push(Check::new(
        "order pairs the cautious rule's constructed tolerant profile fails to equalize",
        "0",
        failures.to_string(),
    ));
    Ok(QuantifierGrid { n, m, cells, extra })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

impl QuantifierGrid {
    pub fn render(&self) -> String {
        let alts = Alternatives::default_labels(self.m).expect("valid m");
        let mut out = format!(
            "n={} m={}; cells read general/tolerant, '*' marks a mismatch\n",
            self.n, self.m
        );
        let _ = write!(out, "{:<16}", "rule");
        for q in Question::ALL {
            let _ = write!(out, "{:<12}", q.to_string());
        }
        out.push('\n');
        for rule in fig1_rules() {
            let _ = write!(out, "{:<16}", rule.display(&alts));
            for q in Question::ALL {
                let cell = |d| {
                    let c = self
                        .cells
                        .iter()
                        .find(|c| c.rule == rule && c.question == q && c.domain == d)
                        .expect("cell");
                    let mark = match c.expected {
                        Some(e) if e != c.holds => "*",
                        _ => "",
                    };
                    format!("{}{mark}", yes_no(c.holds))
                };
                let _ = write!(
                    out,
                    "{:<12}",
                    format!(
                        "{}/{}",
                        cell(DomainFilter::All),
                        cell(DomainFilter::Tolerant)
                    )
                );
            }
            out.push('\n');
        }
        out
    }

    pub fn report(&self) -> Report {
        let alts = Alternatives::default_labels(self.m).expect("valid m");
        let mut r = Report::new("fig1");
        r.notes.push(self.render().trim_end().into());
        for c in &self.cells {
            if let Some(e) = c.expected {
                r.checks.push(Check::new(
                    format!("{} {} {}", c.rule.display(&alts), c.question, c.domain),
                    yes_no(e),
                    yes_no(c.holds),
                ));
            }
        }
        r.checks.extend(self.extra.iter().cloned());
        r
    }
}
