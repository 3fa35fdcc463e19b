//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Derived values are recomputed here with a literal set-based ballot
//! procedure and local rule definitions that share no code with the crate.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anchorvote::anchor::{
    anchor_proof_for_profile, cautious_equalizing_profile, first_position_pair, nom_char,
    nomination_order_pair, sav_char, weakuna_char, DomainFilter,
};
use anchorvote::ballots::{
    best_first_orders, generate_ballot, generate_ballot_profile, order_for_target,
    preference_for_target, tolerant_preference_for_target,
};
use anchorvote::enumerate::Budget;
use anchorvote::planner::{
    all_preferences, find_optimal_strategy, info_view, informativeness_cmp, is_optimal_strategy,
    lex_pref, InfoFunction, Informativeness, PlannerPreference,
};
use anchorvote::ranked::{generate_truncated, rank_anchor_proof, tops_only_check, RankRuleId};
use anchorvote::reproduce::{
    example9_completion, example9_profile, fig1, manipulation_cases, run_reproduction,
};
use anchorvote::rules::eval_rule;
use anchorvote::simulate::{run_simulation, SimulationConfig};
use anchorvote::{AltSet, OrderVector, PreferenceApproval, PresentationOrder, Profile, RuleId};

type Set = BTreeSet<u8>;

// ---------- local oracle ----------

fn perms(m: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, left: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..m as u8).collect(), &mut out);
    out
}

#[derive(Clone)]
struct Voter {
    ranking: Vec<u8>,
    t: usize,
}

impl Voter {
    fn pos(&self, x: u8) -> usize {
        self.ranking.iter().position(|&y| y == x).unwrap()
    }

    fn acceptable(&self, x: u8) -> bool {
        self.pos(x) < self.t
    }

    fn lib(&self) -> PreferenceApproval {
        PreferenceApproval::new(self.ranking.clone(), self.t).unwrap()
    }
}

fn all_voters(m: usize) -> Vec<Voter> {
    perms(m)
        .into_iter()
        .flat_map(|r| {
            (1..=m).map(move |t| Voter {
                ranking: r.clone(),
                t,
            })
        })
        .collect()
}

fn product<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect()
    })
}

/// Step k approves the k-th shown alternative iff it is acceptable and
/// preferred to every alternative already approved.
fn oracle_ballot(v: &Voter, order: &[u8]) -> Set {
    let mut approved = Set::new();
    for &x in order {
        if v.acceptable(x) && approved.iter().all(|&a| v.pos(x) < v.pos(a)) {
            approved.insert(x);
        }
    }
    approved
}

fn to_altset(s: &Set) -> AltSet {
    AltSet::from_alts(s.iter().copied())
}

fn full(m: usize) -> Set {
    (0..m as u8).collect()
}

#[derive(Clone, Copy, PartialEq)]
enum R {
    Sav,
    Nom,
    UnanOrAll,
    UnanOrLargest,
    SavCautious,
}

fn oracle_rule(r: R, ballots: &[Set], m: usize) -> Set {
    let count = |x: u8| ballots.iter().filter(|b| b.contains(&x)).count();
    let sav = || {
        let best = (0..m as u8).map(count).max().unwrap();
        (0..m as u8).filter(|&x| count(x) == best).collect::<Set>()
    };
    let unanimous: Set = (0..m as u8)
        .filter(|&x| count(x) == ballots.len())
        .collect();
    match r {
        R::Sav => sav(),
        R::Nom => ballots.iter().flatten().copied().collect(),
        R::UnanOrAll if unanimous.is_empty() => full(m),
        R::UnanOrAll => unanimous,
        R::UnanOrLargest if unanimous.is_empty() => {
            let mut best = &ballots[0];
            for b in ballots {
                if b.len() > best.len() {
                    best = b;
                }
            }
            best.clone()
        }
        R::UnanOrLargest => unanimous,
        R::SavCautious if ballots.iter().any(|b| b.len() >= 2) => full(m),
        R::SavCautious => sav(),
    }
}

/// All outcomes of `r` on `profile` over every order vector.
fn oracle_outcomes(r: R, profile: &[Voter], m: usize) -> BTreeSet<Set> {
    let ps = perms(m);
    product(&ps, profile.len())
        .into_iter()
        .map(|orders| {
            let ballots: Vec<Set> = profile
                .iter()
                .zip(&orders)
                .map(|(v, o)| oracle_ballot(v, o))
                .collect();
            oracle_rule(r, &ballots, m)
        })
        .collect()
}

fn oracle_anchor_proof(r: R, profile: &[Voter], m: usize) -> bool {
    oracle_outcomes(r, profile, m).len() == 1
}

fn lib_profile(voters: &[Voter]) -> Profile {
    Profile::new(voters.iter().map(Voter::lib).collect()).unwrap()
}

fn from_lib(p: &Profile) -> Vec<Voter> {
    p.voters()
        .iter()
        .map(|v| Voter {
            ranking: v.ranking().to_vec(),
            t: v.threshold(),
        })
        .collect()
}

fn order_vector(orders: &[Vec<u8>]) -> OrderVector {
    OrderVector::new(
        orders
            .iter()
            .map(|o| PresentationOrder::new(o.clone()).unwrap())
            .collect(),
    )
    .unwrap()
}

fn oracle_eval(r: R, profile: &[Voter], orders: &OrderVector, m: usize) -> Set {
    let ballots: Vec<Set> = profile
        .iter()
        .zip(orders.orders())
        .map(|(v, o)| oracle_ballot(v, o.as_slice()))
        .collect();
    oracle_rule(r, &ballots, m)
}

// ---------- harness ----------

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "example 1 winners under both order regimes",
            limit: Duration::from_secs(1),
            run: c01,
        },
        Criterion {
            id: 2,
            name: "example 2 ballot",
            limit: Duration::from_secs(1),
            run: c02,
        },
        Criterion {
            id: 3,
            name: "sav characterization matches brute force",
            limit: Duration::from_secs(60),
            run: c03,
        },
        Criterion {
            id: 4,
            name: "nomination characterization matches brute force",
            limit: Duration::from_secs(60),
            run: c04,
        },
        Criterion {
            id: 5,
            name: "weakly unanimous characterization",
            limit: Duration::from_secs(60),
            run: c05,
        },
        Criterion {
            id: 6,
            name: "quantifier grid",
            limit: Duration::from_secs(120),
            run: c06,
        },
        Criterion {
            id: 7,
            name: "target constructors",
            limit: Duration::from_secs(60),
            run: c07,
        },
        Criterion {
            id: 8,
            name: "order switch",
            limit: Duration::from_secs(10),
            run: c08,
        },
        Criterion {
            id: 9,
            name: "zero information admits no optimal strategy",
            limit: Duration::from_secs(300),
            run: c09,
        },
        Criterion {
            id: 10,
            name: "constructed manipulations and the information table",
            limit: Duration::from_secs(300),
            run: c10,
        },
        Criterion {
            id: 11,
            name: "alternative-structure manipulation",
            limit: Duration::from_secs(60),
            run: c11,
        },
        Criterion {
            id: 12,
            name: "informativeness preorder",
            limit: Duration::from_secs(60),
            run: c12,
        },
        Criterion {
            id: 13,
            name: "ranked: anchor-proof iff tops-only",
            limit: Duration::from_secs(60),
            run: c13,
        },
        Criterion {
            id: 14,
            name: "ranked ballot members equal approval ballot",
            limit: Duration::from_secs(60),
            run: c14,
        },
        Criterion {
            id: 15,
            name: "simulation determinism and exact calibration",
            limit: Duration::from_secs(120),
            run: c15,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let out = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.limit;
        let pass = out.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "{} [{:02}] {}: {} ({:.2}s, limit {}s{})",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            out.detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if in_time { "" } else { ", exceeded" }
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

// ---------- criteria ----------

fn c01() -> Outcome {
    let voters = |t: [&[u8]; 5]| {
        Profile::new(
            t.iter()
                .map(|r| PreferenceApproval::new(r.to_vec(), 2).unwrap())
                .collect(),
        )
        .unwrap()
    };
    let p = voters([&[0, 1], &[0, 1], &[1, 0], &[1, 0], &[1, 0]]);
    let own = eval_rule(
        &RuleId::Sav,
        &generate_ballot_profile(&p, &best_first_orders(&p)).unwrap(),
    )
    .unwrap();
    let shared = OrderVector::uniform(PresentationOrder::identity(2), 5);
    let uni = eval_rule(&RuleId::Sav, &generate_ballot_profile(&p, &shared).unwrap()).unwrap();
    let pass = own == AltSet::singleton(1)
        && uni == AltSet::singleton(0)
        && run_reproduction("example1").unwrap().passed();
    ok(
        pass,
        format!("own-top-first {own:?}, shared x,y {uni:?}; exact"),
    )
}

fn c02() -> Outcome {
    let b = generate_ballot(
        &PreferenceApproval::new(vec![0, 1, 2], 3).unwrap(),
        &PresentationOrder::new(vec![2, 0, 1]).unwrap(),
    )
    .unwrap();
    ok(b == AltSet::from_alts([0, 2]), format!("{b:?}; exact"))
}

fn characterization(r: R, predicate: fn(&Profile) -> bool, lib_rule: RuleId) -> Outcome {
    let voters = all_voters(3);
    let mut detail = Vec::new();
    let mut pass = true;
    for n in 1..=3 {
        let mut bad = 0;
        let mut lib_bad = 0;
        let profiles = product(&voters, n);
        for p in &profiles {
            let lp = lib_profile(p);
            let truth = oracle_anchor_proof(r, p, 3);
            if predicate(&lp) != truth {
                bad += 1;
            }
            if anchor_proof_for_profile(&lib_rule, &lp, Budget::DEFAULT)
                .unwrap()
                .holds
                != truth
            {
                lib_bad += 1;
            }
        }
        pass &= bad == 0 && lib_bad == 0;
        detail.push(format!(
            "n={n}: {} profiles, {bad} discrepancies",
            profiles.len()
        ));
        if lib_bad > 0 {
            detail.push(format!("library brute force disagrees on {lib_bad}"));
        }
    }
    ok(pass, detail.join(", "))
}

fn c03() -> Outcome {
    characterization(R::Sav, sav_char, RuleId::Sav)
}

fn c04() -> Outcome {
    characterization(R::Nom, nom_char, RuleId::Nom)
}

fn c05() -> Outcome {
    let rules = [R::Sav, R::UnanOrAll, R::UnanOrLargest];
    let (mut forward, mut backward, mut total) = (0, 0, 0);
    for p in product(&all_voters(3), 2) {
        total += 1;
        let proofs: Vec<bool> = rules
            .iter()
            .map(|&r| oracle_anchor_proof(r, &p, 3))
            .collect();
        if weakuna_char(&lib_profile(&p)) {
            forward += proofs.iter().filter(|&&h| !h).count();
        } else if proofs.iter().all(|&h| h) {
            backward += 1;
        }
    }
    ok(
        forward == 0 && backward == 0,
        format!("{total} profiles; {forward} forward and {backward} reverse discrepancies"),
    )
}

fn c06() -> Outcome {
    use anchorvote::anchor::Question::*;
    let grid = fig1(2, 3, Budget::DEFAULT).unwrap();
    let cell = |rule: RuleId, q, d| {
        grid.cells
            .iter()
            .find(|c| c.rule == rule && c.question == q && c.domain == d)
            .unwrap()
            .holds
    };
    let (all, tol) = (DomainFilter::All, DomainFilter::Tolerant);
    let rules = [
        RuleId::Sav,
        RuleId::Nom,
        RuleId::FixedX(0),
        RuleId::SavCautious,
        RuleId::Constant(AltSet::singleton(0)),
    ];
    let mut expected: Vec<(RuleId, _, DomainFilter, bool)> = vec![
        (RuleId::Sav, Q1, all, false),
        (RuleId::Nom, Q1, all, false),
        (RuleId::Constant(AltSet::singleton(0)), Q1, all, true),
        (RuleId::Sav, Q2, tol, false),
        (RuleId::Sav, Q3, all, false),
        (RuleId::Sav, Q3, tol, false),
        (RuleId::Nom, Q3, tol, true),
        (RuleId::Sav, Q5, tol, false),
        (RuleId::SavCautious, Q5, tol, true),
    ];
    for r in rules {
        expected.push((r, Q2, all, true));
        for d in [all, tol] {
            expected.push((r, Q4, d, true));
            expected.push((r, Q6, d, true));
        }
    }
    let mismatched: Vec<String> = expected
        .iter()
        .filter(|(r, q, d, e)| cell(*r, *q, *d) != *e)
        .map(|(r, q, d, _)| format!("{r} {q} {d}"))
        .collect();

    // constructed certificates, rechecked with the local oracle
    let (s, t) = nomination_order_pair(3, 3).unwrap();
    let tolerant: Vec<Voter> = perms(3)
        .into_iter()
        .map(|r| Voter { ranking: r, t: 3 })
        .collect();
    let nom_pair_ok = s != t
        && product(&tolerant, 3)
            .iter()
            .all(|p| oracle_eval(R::Nom, p, &s, 3) == oracle_eval(R::Nom, p, &t, 3));
    let (s, t) = first_position_pair(2, 3, 0, 1).unwrap();
    let sav_pair_ok = product(&tolerant, 2)
        .iter()
        .all(|p| oracle_eval(R::Sav, p, &s, 3) != oracle_eval(R::Sav, p, &t, 3));
    let ps = perms(3);
    let vectors = product(&ps, 2);
    let mut cautious_ok = true;
    for i in 0..vectors.len() {
        for j in (i + 1)..vectors.len() {
            let (s, t) = (order_vector(&vectors[i]), order_vector(&vectors[j]));
            let p = cautious_equalizing_profile(&s, &t).unwrap();
            let local = from_lib(&p);
            cautious_ok &= p.is_tolerant()
                && oracle_eval(R::SavCautious, &local, &s, 3)
                    == oracle_eval(R::SavCautious, &local, &t, 3);
        }
    }
    let pass = mismatched.is_empty() && nom_pair_ok && sav_pair_ok && cautious_ok;
    ok(
        pass,
        format!(
            "{} asserted cells, mismatches [{}]; nom pair n=3 {}; first-position pair {}; cautious profiles {}",
            expected.len(),
            mismatched.join("; "),
            nom_pair_ok,
            sav_pair_ok,
            cautious_ok
        ),
    )
}

fn c07() -> Outcome {
    let mut failures = 0;
    let mut checked = 0;
    for m in [3usize, 4] {
        let subsets: Vec<Set> = (0..1u32 << m)
            .map(|bits| (0..m as u8).filter(|&x| bits >> x & 1 == 1).collect())
            .collect();
        for v in all_voters(m) {
            for a in &subsets {
                let o = order_for_target(&v.lib(), to_altset(a)).unwrap();
                let mut want: Set = a.iter().copied().filter(|&x| v.acceptable(x)).collect();
                want.insert(v.ranking[0]);
                checked += 1;
                failures += usize::from(oracle_ballot(&v, o.as_slice()) != want);
            }
        }
        for o in perms(m) {
            let order = PresentationOrder::new(o.clone()).unwrap();
            for a in &subsets {
                if !a.is_empty() {
                    let p = preference_for_target(&order, to_altset(a)).unwrap();
                    let local = Voter {
                        ranking: p.ranking().to_vec(),
                        t: p.threshold(),
                    };
                    checked += 1;
                    failures += usize::from(oracle_ballot(&local, &o) != *a);
                }
                let q = tolerant_preference_for_target(&order, to_altset(a)).unwrap();
                let local = Voter {
                    ranking: q.ranking().to_vec(),
                    t: q.threshold(),
                };
                let mut want = a.clone();
                want.insert(o[0]);
                checked += 1;
                failures += usize::from(local.t != m || oracle_ballot(&local, &o) != want);
            }
        }
    }
    ok(
        failures == 0,
        format!("{checked} constructions, {failures} failures"),
    )
}

fn c08() -> Outcome {
    let m = 3;
    let voters = all_voters(m);
    let orders = perms(m);
    let (mut tuples, mut failures) = (0, 0);
    for sigma in &orders {
        for pi in &orders {
            for p in &voters {
                if oracle_ballot(p, sigma) != full(m) {
                    continue;
                }
                let a = oracle_ballot(p, pi);
                if a == full(m) {
                    continue;
                }
                for q in &voters {
                    if !a.is_subset(&oracle_ballot(q, sigma)) {
                        continue;
                    }
                    tuples += 1;
                    let lib =
                        generate_ballot(&q.lib(), &PresentationOrder::new(pi.clone()).unwrap())
                            .unwrap();
                    if oracle_ballot(q, pi) != a || lib != to_altset(&a) {
                        failures += 1;
                    }
                }
            }
        }
    }
    ok(
        tuples > 0 && failures == 0,
        format!("{tuples} qualifying tuples, {failures} failures"),
    )
}

fn local_preferences() -> Vec<Vec<Set>> {
    let subsets: Vec<Set> = (1..8u32)
        .map(|bits| (0..3u8).filter(|&x| bits >> x & 1 == 1).collect())
        .collect();
    perms(7)
        .into_iter()
        .map(|p| p.into_iter().map(|i| subsets[i as usize].clone()).collect())
        .collect()
}

/// Optimal strategies over `worlds` under a best-first subset ranking.
fn oracle_optimal_columns(
    r: R,
    worlds: &[Vec<Voter>],
    pref: &[Set],
    m: usize,
    n: usize,
) -> Vec<usize> {
    let ps = perms(m);
    let vectors = product(&ps, n);
    let table: Vec<Vec<Set>> = worlds
        .iter()
        .map(|w| {
            vectors
                .iter()
                .map(|o| {
                    let b: Vec<Set> = w.iter().zip(o).map(|(v, o)| oracle_ballot(v, o)).collect();
                    oracle_rule(r, &b, m)
                })
                .collect()
        })
        .collect();
    let rank = |s: &Set| pref.iter().position(|x| x == s).unwrap();
    let contested = table.iter().any(|row| row.iter().any(|o| *o != row[0]));
    if !contested {
        return Vec::new();
    }
    let best: Vec<usize> = table
        .iter()
        .map(|row| row.iter().map(rank).min().unwrap())
        .collect();
    (0..vectors.len())
        .filter(|&c| table.iter().zip(&best).all(|(row, &b)| rank(&row[c]) == b))
        .collect()
}

fn lib_pref(pref: &[Set]) -> PlannerPreference {
    PlannerPreference::new(3, pref.iter().map(to_altset).collect()).unwrap()
}

fn c09() -> Outcome {
    let prefs = local_preferences();
    let all_worlds = product(&all_voters(3), 2);
    let probe = lib_profile(&all_worlds[0]);
    let mut detail = Vec::new();
    let mut pass = prefs.len() == 5040 && all_preferences(3).unwrap().len() == 5040;
    for (r, lib_rule) in [(R::Sav, RuleId::Sav), (R::Nom, RuleId::Nom)] {
        let mut oracle_hits = 0;
        let mut lib_hits = 0;
        for pref in &prefs {
            oracle_hits +=
                usize::from(!oracle_optimal_columns(r, &all_worlds, pref, 3, 2).is_empty());
            lib_hits += usize::from(
                find_optimal_strategy(
                    &lib_rule,
                    &lib_pref(pref),
                    InfoFunction::Zero,
                    &probe,
                    Budget::DEFAULT,
                )
                .unwrap()
                .is_some(),
            );
        }
        pass &= oracle_hits == 0 && lib_hits == 0;
        detail.push(format!(
            "{lib_rule}: {} preferences, {oracle_hits} oracle / {lib_hits} library hits",
            prefs.len()
        ));
    }
    ok(pass, detail.join("; "))
}

fn worlds_matching(
    n: usize,
    key: impl Fn(&[Voter]) -> Vec<u32>,
    target: &[Voter],
) -> Vec<Vec<Voter>> {
    let want = key(target);
    product(&all_voters(3), n)
        .into_iter()
        .filter(|p| key(p) == want)
        .collect()
}

fn acc_points(p: &[Voter]) -> Vec<u32> {
    (0..3u8)
        .map(|x| p.iter().filter(|v| v.acceptable(x)).count() as u32)
        .collect()
}

fn pl_points(p: &[Voter]) -> Vec<u32> {
    (0..3u8)
        .map(|x| p.iter().filter(|v| v.ranking[0] == x).count() as u32)
        .collect()
}

fn c10() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    let ps = perms(3);
    let vectors = product(&ps, 3);
    for case in manipulation_cases().unwrap() {
        let lib = is_optimal_strategy(
            &case.rule,
            &case.preference,
            case.info,
            &case.profile,
            &case.sigma_star,
            Budget::DEFAULT,
        )
        .unwrap()
        .is_optimal();
        let local = from_lib(&case.profile);
        let key: fn(&[Voter]) -> Vec<u32> = if case.info == InfoFunction::AccPoints {
            acc_points
        } else {
            pl_points
        };
        let worlds = worlds_matching(3, key, &local);
        let r = if case.rule == RuleId::Sav {
            R::Sav
        } else {
            R::Nom
        };
        let pref: Vec<Set> = case
            .preference
            .order()
            .iter()
            .map(|s| s.iter().collect())
            .collect();
        let star: Vec<Vec<u8>> = case
            .sigma_star
            .orders()
            .iter()
            .map(|o| o.as_slice().to_vec())
            .collect();
        let col = vectors.iter().position(|v| *v == star).unwrap();
        let oracle = oracle_optimal_columns(r, &worlds, &pref, 3, 3).contains(&col);
        pass &= lib && oracle;
        detail.push(format!(
            "{}: {}",
            case.label,
            if lib && oracle {
                "optimal"
            } else {
                "not optimal"
            }
        ));
    }
    let table = run_reproduction("table3").unwrap();
    pass &= table.passed();
    detail.push(format!(
        "table rows {}",
        if table.passed() {
            "regenerated"
        } else {
            "differ"
        }
    ));
    ok(pass, detail.join("; "))
}

fn c11() -> Outcome {
    let (count, found) = example9_completion(Budget::DEFAULT).unwrap();
    let Some(sigma) = found else {
        return ok(
            false,
            format!("{count} worlds; no completion with voter 1 shown a,b,c is optimal"),
        );
    };
    let base = from_lib(&example9_profile());
    let mut orbit: Vec<Vec<Vec<u8>>> = perms(3)
        .into_iter()
        .map(|map| {
            base.iter()
                .map(|v| v.ranking.iter().map(|&x| map[x as usize]).collect())
                .collect()
        })
        .collect();
    orbit.sort();
    orbit.dedup();
    let worlds: Vec<Vec<Voter>> = orbit
        .iter()
        .map(|rs| {
            rs.iter()
                .zip(&base)
                .map(|(r, v)| Voter {
                    ranking: r.clone(),
                    t: v.t,
                })
                .collect()
        })
        .collect();
    let pref: Vec<Set> = lex_pref(&[0, 1, 2])
        .unwrap()
        .order()
        .iter()
        .map(|s| s.iter().collect())
        .collect();
    let expected_chain: Vec<Set> = [
        &[0u8][..],
        &[0, 1],
        &[0, 2],
        &[0, 1, 2],
        &[1],
        &[1, 2],
        &[2],
    ]
    .iter()
    .map(|s| s.iter().copied().collect())
    .collect();
    let ps = perms(3);
    let vectors = product(&ps, 4);
    let star: Vec<Vec<u8>> = sigma
        .orders()
        .iter()
        .map(|o| o.as_slice().to_vec())
        .collect();
    let col = vectors.iter().position(|v| *v == star).unwrap();
    let oracle = oracle_optimal_columns(R::Sav, &worlds, &pref, 3, 4).contains(&col);
    let shown: Vec<String> = star
        .iter()
        .map(|o| o.iter().map(|&x| (b'a' + x) as char).collect())
        .collect();
    ok(
        count <= 6
            && worlds.len() == count
            && pref == expected_chain
            && star[0] == [0, 1, 2]
            && oracle,
        format!("{count} worlds; optimal completion ({})", shown.join(", ")),
    )
}

fn c12() -> Outcome {
    use InfoFunction::*;
    let chains = [
        (Full, AccSets),
        (AccSets, AccPoints),
        (AccPoints, Zero),
        (Full, PlSets),
        (PlSets, PlPoints),
        (PlPoints, Zero),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (f, g) in chains {
        let v = informativeness_cmp(f, g, 2, 3, Budget::DEFAULT).unwrap();
        let at_least = matches!(
            v.relation,
            Informativeness::FAtLeastG | Informativeness::Equal
        );
        pass &= at_least;
        if !at_least {
            detail.push(format!("{f} >= {g} refuted"));
        }
    }
    let v = informativeness_cmp(PlPoints, AccPoints, 2, 3, Budget::DEFAULT).unwrap();
    let local_witness_ok = |w: &Option<anchorvote::planner::RefinementWitness>,
                            same: fn(&[Voter]) -> Vec<u32>,
                            diff: fn(&[Voter]) -> Vec<u32>| {
        w.as_ref().is_some_and(|w| {
            let (a, b) = (from_lib(&w.first), from_lib(&w.second));
            same(&a) == same(&b) && diff(&a) != diff(&b)
        })
    };
    let witnesses = local_witness_ok(&v.against_f, pl_points, acc_points)
        && local_witness_ok(&v.against_g, acc_points, pl_points);
    let views_ok = v
        .against_f
        .as_ref()
        .is_some_and(|w| info_view(PlPoints, &w.first) == info_view(PlPoints, &w.second));
    pass &= v.relation == Informativeness::Incomparable && witnesses && views_ok;
    detail.push(format!(
        "pl vs acc {:?} with witnesses both ways: {}",
        v.relation, witnesses
    ));
    ok(pass, format!("both chains hold; {}", detail.join("; ")))
}

fn c13() -> Outcome {
    let b = Budget::DEFAULT;
    let mut pass = true;
    let mut detail = Vec::new();
    for (rule, expected) in [
        (RankRuleId::Plurality, true),
        (RankRuleId::FirstVoterSecond, false),
    ] {
        let t = tops_only_check(rule, 2, 3, b).unwrap().holds;
        let a = rank_anchor_proof(rule, 2, 3, b).unwrap().holds;
        pass &= t == expected && a == expected;
        detail.push(format!("{rule}: tops-only {t}, anchor-proof {a}"));
    }
    ok(pass, detail.join("; "))
}

fn c14() -> Outcome {
    let mut failures = 0;
    let mut checked = 0;
    for m in [3usize, 4] {
        for v in all_voters(m) {
            for o in perms(m) {
                let order = PresentationOrder::new(o.clone()).unwrap();
                let t = generate_truncated(&v.lib(), &order).unwrap();
                let members: Set = t.as_slice().iter().copied().collect();
                let ordered = t.as_slice().windows(2).all(|w| v.pos(w[0]) < v.pos(w[1]));
                checked += 1;
                if members != oracle_ballot(&v, &o)
                    || t.members() != generate_ballot(&v.lib(), &order).unwrap()
                    || !ordered
                    || t.top() != v.ranking[0]
                {
                    failures += 1;
                }
            }
        }
    }
    ok(
        failures == 0,
        format!("{checked} pairs, {failures} failures"),
    )
}

fn c15() -> Outcome {
    let config = SimulationConfig {
        n: 3,
        m: 3,
        samples: 5000,
        seed: 2024,
        rules: vec![RuleId::Sav, RuleId::Nom],
        domain: DomainFilter::All,
        exact: false,
        manipulation: None,
        budget: Budget::DEFAULT,
    };
    let a = run_simulation(&config).unwrap().to_csv();
    let b = run_simulation(&config).unwrap().to_csv();
    let exact = run_simulation(&SimulationConfig {
        exact: true,
        ..config
    })
    .unwrap();
    let row = exact.find("sav", "anchor_proof_fraction").unwrap();
    let profiles = product(&all_voters(3), 3);
    let proof = profiles
        .iter()
        .filter(|p| oracle_anchor_proof(R::Sav, p, 3))
        .count() as u64;
    let pass = a == b && row.numerator == proof && row.denominator == profiles.len() as u64;
    ok(
        pass,
        format!(
            "byte-identical {}; exact fraction {}/{} vs oracle {}/{}",
            a == b,
            row.numerator,
            row.denominator,
            proof,
            profiles.len()
        ),
    )
}
