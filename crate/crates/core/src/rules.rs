//! The closed registry of approval rules and exhaustive axiom checks.

use std::fmt;

use itertools::Itertools;

use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::model::{Alt, AltSet, Alternatives, BallotProfile, Outcome};

/// A rule in the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    /// Standard approval voting: maximal approval count.
    Sav,
    /// Nomination: every approved alternative wins.
    Nom,
    /// Always the given nonempty set.
    Constant(AltSet),
    /// `{x}` when every ballot approves `x`, otherwise everything.
    FixedX(Alt),
    /// Unanimously approved set if nonempty, otherwise everything.
    UnanOrAll,
    /// Unanimously approved set if nonempty, otherwise the largest ballot
    /// (lowest voter index on ties).
    UnanOrLargest,
    /// Everything as soon as some ballot has two members, SAV otherwise.
    SavCautious,
}

/// Anything that maps a ballot profile to a winning set.
///
/// Registry rules implement it; [`CustomRule`] wraps arbitrary closures for
/// experiments outside the registry.
pub trait ApprovalRule: Sync {
    /// `ballots` are nonempty subsets of `0..m`.
    fn apply(&self, ballots: &[AltSet], m: usize) -> Outcome;

    fn name(&self) -> String;
}

fn unanimous(ballots: &[AltSet], m: usize) -> AltSet {
    ballots
        .iter()
        .fold(AltSet::full(m), |u, &b| u.intersection(b))
}

fn approval_winners(ballots: &[AltSet], m: usize) -> AltSet {
    let mut counts = [0u32; crate::model::MAX_ALTERNATIVES];
    for b in ballots {
        for x in b.iter() {
            counts[x as usize] += 1;
        }
    }
    let max = counts[..m].iter().copied().max().unwrap_or(0);
    AltSet::from_alts((0..m as Alt).filter(|&x| counts[x as usize] == max))
}

impl ApprovalRule for RuleId {
    fn apply(&self, ballots: &[AltSet], m: usize) -> Outcome {
        match *self {
            RuleId::Sav => approval_winners(ballots, m),
            RuleId::Nom => ballots.iter().fold(AltSet::EMPTY, |u, &b| u.union(b)),
            RuleId::Constant(c) => c,
            RuleId::FixedX(x) => {
                if ballots.iter().all(|b| b.contains(x)) {
                    AltSet::singleton(x)
                } else {
                    AltSet::full(m)
                }
            }
            RuleId::UnanOrAll => {
                let u = unanimous(ballots, m);
                if u.is_empty() {
                    AltSet::full(m)
                } else {
                    u
                }
            }
            RuleId::UnanOrLargest => {
                let u = unanimous(ballots, m);
                if !u.is_empty() {
                    return u;
                }
                // max_by_key keeps the last maximum; scan manually for the first.
                let mut best = ballots[0];
                for &b in &ballots[1..] {
                    if b.len() > best.len() {
                        best = b;
                    }
                }
                best
            }
            RuleId::SavCautious => {
                if ballots.iter().any(|b| b.len() >= 2) {
                    AltSet::full(m)
                } else {
                    approval_winners(ballots, m)
                }
            }
        }
    }

    fn name(&self) -> String {
        match self {
            RuleId::Sav => "sav".into(),
            RuleId::Nom => "nom".into(),
            RuleId::Constant(c) => format!("constant:{}", c.iter().join(",")),
            RuleId::FixedX(x) => format!("fixedx:{x}"),
            RuleId::UnanOrAll => "unan-or-all".into(),
            RuleId::UnanOrLargest => "unan-or-largest".into(),
            RuleId::SavCautious => "sav-cautious".into(),
        }
    }
}

impl RuleId {
    /// Parses the CLI syntax
    /// `sav | nom | constant:<subset> | fixedx:<label> | unan-or-all | unan-or-largest | sav-cautious`.
    pub fn parse(text: &str, alts: &Alternatives) -> Result<Self> {
        let rule = match text.split_once(':') {
            None => match text {
                "sav" => RuleId::Sav,
                "nom" => RuleId::Nom,
                "unan-or-all" => RuleId::UnanOrAll,
                "unan-or-largest" => RuleId::UnanOrLargest,
                "sav-cautious" => RuleId::SavCautious,
                other => return Err(Error::InvalidRule(format!("unknown rule '{other}'"))),
            },
            Some(("constant", set)) => RuleId::Constant(
                alts.parse_set(set)
                    .map_err(|e| Error::InvalidRule(e.to_string()))?,
            ),
            Some(("fixedx", label)) => RuleId::FixedX(
                alts.index_of(label.trim())
                    .ok_or_else(|| Error::InvalidRule(format!("unknown alternative '{label}'")))?,
            ),
            Some((other, _)) => return Err(Error::InvalidRule(format!("unknown rule '{other}'"))),
        };
        rule.validate(alts.len())?;
        Ok(rule)
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        match *self {
            RuleId::Constant(c) if c.is_empty() || !c.is_subset(AltSet::full(m)) => {
                Err(Error::InvalidRule(
                    "constant rule needs a nonempty subset of the alternatives".into(),
                ))
            }
            RuleId::FixedX(x) if x as usize >= m => Err(Error::InvalidRule(format!(
                "fixed alternative {x} out of range"
            ))),
            _ => Ok(()),
        }
    }

    /// CLI spelling with labels.
    pub fn display(&self, alts: &Alternatives) -> String {
        match *self {
            RuleId::Constant(c) => format!("constant:{}", alts.join_set(c, ",")),
            RuleId::FixedX(x) => format!("fixedx:{}", alts.label(x)),
            _ => self.name(),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ApprovalRule::name(self))
    }
}

/// A rule outside the registry, backed by a plain function.
pub struct CustomRule<F> {
    name: String,
    f: F,
}

impl<F> CustomRule<F>
where
    F: Fn(&[AltSet], usize) -> Outcome + Sync,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        CustomRule {
            name: name.into(),
            f,
        }
    }
}

impl<F> ApprovalRule for CustomRule<F>
where
    F: Fn(&[AltSet], usize) -> Outcome + Sync,
{
    fn apply(&self, ballots: &[AltSet], m: usize) -> Outcome {
        (self.f)(ballots, m)
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

/// Evaluates `rule`; empty outcomes are reported as errors.
pub fn eval_rule<R: ApprovalRule + ?Sized>(rule: &R, ballots: &BallotProfile) -> Result<Outcome> {
    if let Some(i) = ballots.ballots().iter().position(|b| b.is_empty()) {
        return Err(Error::EmptyBallot { voter: i + 1 });
    }
    checked_apply(rule, ballots.ballots(), ballots.m())
}

pub(crate) fn checked_apply<R: ApprovalRule + ?Sized>(
    rule: &R,
    ballots: &[AltSet],
    m: usize,
) -> Result<Outcome> {
    let out = rule.apply(ballots, m);
    if out.is_empty() {
        Err(Error::EmptyOutcome { rule: rule.name() })
    } else {
        Ok(out)
    }
}

/// Axioms over approval rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Anonymity,
    Neutrality,
    WeakUnanimity,
    TotalUnanimity,
    Unanimity,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Anonymity,
        Axiom::Neutrality,
        Axiom::WeakUnanimity,
        Axiom::TotalUnanimity,
        Axiom::Unanimity,
    ];
}

/// A ballot profile (and permutation, for anonymity/neutrality) violating
/// an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub ballots: Vec<AltSet>,
    /// Voter permutation (anonymity) or alternative permutation (neutrality).
    pub permutation: Option<Vec<usize>>,
    pub outcome: Outcome,
    /// What the axiom demanded, or the outcome on the permuted profile.
    pub required: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub holds: bool,
    pub witness: Option<AxiomWitness>,
}

/// Nonempty subsets of `0..m`, lexicographic over members.
pub fn nonempty_subsets(m: usize) -> Vec<AltSet> {
    let mut subsets: Vec<AltSet> = (1..=AltSet::full(m).bits())
        .map(AltSet::from_bits)
        .collect();
    subsets.sort();
    subsets
}

/// Exhaustively checks `axiom` for `rule` over all `(2^m - 1)^n` ballot profiles.
pub fn check_axiom<R: ApprovalRule + ?Sized>(
    rule: &R,
    axiom: Axiom,
    n: usize,
    m: usize,
    budget: Budget,
) -> Result<AxiomVerdict> {
    if n == 0 || !(2..=8).contains(&m) {
        return Err(Error::InvalidConfig(format!(
            "axiom check needs n >= 1 and 2 <= m <= 8, got n={n}, m={m}"
        )));
    }
    let subsets = nonempty_subsets(m);
    let profiles = (0..n).fold(1u128, |acc, _| acc.saturating_mul(subsets.len() as u128));
    let perms_factor = match axiom {
        Axiom::Anonymity => crate::enumerate::factorial(n),
        Axiom::Neutrality => crate::enumerate::factorial(m),
        _ => 1,
    };
    budget.check(profiles.saturating_mul(perms_factor))?;

    let voter_perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let alt_perms: Vec<Vec<Alt>> = (0..m as Alt).permutations(m).collect();
    let full = AltSet::full(m);
    let mut digits = vec![0usize; n];
    let mut ballots = vec![AltSet::EMPTY; n];
    for idx in 0..profiles as usize {
        crate::enumerate::decode(idx, subsets.len(), &mut digits);
        for (b, &d) in ballots.iter_mut().zip(&digits) {
            *b = subsets[d];
        }
        let out = checked_apply(rule, &ballots, m)?;
        let fail = |permutation: Option<Vec<usize>>, required: Outcome| AxiomWitness {
            ballots: ballots.clone(),
            permutation,
            outcome: out,
            required,
        };
        let witness = match axiom {
            Axiom::Anonymity => voter_perms.iter().find_map(|lambda| {
                let permuted: Vec<AltSet> = lambda.iter().map(|&i| ballots[i]).collect();
                let other = rule.apply(&permuted, m);
                (other != out).then(|| fail(Some(lambda.clone()), other))
            }),
            Axiom::Neutrality => alt_perms.iter().find_map(|mu| {
                let permuted: Vec<AltSet> = ballots.iter().map(|b| b.map(mu)).collect();
                let other = rule.apply(&permuted, m);
                (other != out.map(mu))
                    .then(|| fail(Some(mu.iter().map(|&x| x as usize).collect()), other))
            }),
            Axiom::WeakUnanimity => {
                let u = unanimous(&ballots, m);
                (!u.is_empty() && !out.is_subset(u)).then(|| fail(None, u))
            }
            Axiom::TotalUnanimity => {
                (ballots.iter().all(|&b| b == full) && out != full).then(|| fail(None, full))
            }
            Axiom::Unanimity => {
                let u = unanimous(&ballots, m);
                (!u.is_empty() && out != u).then(|| fail(None, u))
            }
        };
        if let Some(w) = witness {
            return Ok(AxiomVerdict {
                holds: false,
                witness: Some(w),
            });
        }
    }
    Ok(AxiomVerdict {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[u8]) -> AltSet {
        AltSet::from_alts(xs.iter().copied())
    }

    #[test]
    fn sav_examples() {
        let x = s(&[0]);
        let y = s(&[1]);
        let xy = s(&[0, 1]);
        assert_eq!(RuleId::Sav.apply(&[x, x, xy, xy, xy], 2), x);
        assert_eq!(RuleId::Sav.apply(&[x, x, y, y, y], 2), y);
    }

    #[test]
    fn registry_definitions() {
        assert_eq!(
            RuleId::Nom.apply(&[s(&[0, 2]), s(&[1])], 3),
            AltSet::full(3)
        );
        assert_eq!(RuleId::FixedX(0).apply(&[s(&[0, 1]), s(&[0])], 3), s(&[0]));
        assert_eq!(
            RuleId::FixedX(0).apply(&[s(&[1]), s(&[0])], 3),
            AltSet::full(3)
        );
        assert_eq!(
            RuleId::SavCautious.apply(&[s(&[0, 1]), s(&[2])], 3),
            AltSet::full(3)
        );
        assert_eq!(RuleId::SavCautious.apply(&[s(&[0]), s(&[0])], 3), s(&[0]));
        assert_eq!(
            RuleId::UnanOrAll.apply(&[s(&[0, 1]), s(&[1, 2])], 3),
            s(&[1])
        );
        assert_eq!(
            RuleId::UnanOrAll.apply(&[s(&[0]), s(&[1])], 3),
            AltSet::full(3)
        );
        assert_eq!(
            RuleId::UnanOrLargest.apply(&[s(&[0]), s(&[1, 2]), s(&[0, 2])], 3),
            s(&[1, 2])
        );
        assert_eq!(RuleId::Constant(s(&[2])).apply(&[s(&[0])], 3), s(&[2]));
    }

    #[test]
    fn empty_ballot_is_rejected() {
        let bp = BallotProfile::new(3, vec![s(&[0])]).unwrap();
        assert_eq!(eval_rule(&RuleId::Sav, &bp).unwrap(), s(&[0]));
        assert!(BallotProfile::new(3, vec![s(&[0]), AltSet::EMPTY]).is_err());
    }

    #[test]
    fn custom_rule_empty_outcome_is_an_error() {
        let empty = CustomRule::new("empty", |_: &[AltSet], _| AltSet::EMPTY);
        let bp = BallotProfile::new(3, vec![s(&[0])]).unwrap();
        assert!(matches!(
            eval_rule(&empty, &bp),
            Err(Error::EmptyOutcome { .. })
        ));
    }

    #[test]
    fn parse_rule_ids() {
        let alts = Alternatives::default_labels(3).unwrap();
        assert_eq!(RuleId::parse("sav", &alts).unwrap(), RuleId::Sav);
        assert_eq!(
            RuleId::parse("constant:a,c", &alts).unwrap(),
            RuleId::Constant(s(&[0, 2]))
        );
        assert_eq!(RuleId::parse("fixedx:b", &alts).unwrap(), RuleId::FixedX(1));
        assert!(RuleId::parse("constant:", &alts).is_err());
        assert!(RuleId::parse("fixedx:q", &alts).is_err());
        assert!(RuleId::parse("borda", &alts).is_err());
        for r in [
            "sav",
            "nom",
            "unan-or-all",
            "unan-or-largest",
            "sav-cautious",
            "constant:a,b",
            "fixedx:c",
        ] {
            assert_eq!(RuleId::parse(r, &alts).unwrap().display(&alts), r);
        }
    }

    #[test]
    fn axiom_examples() {
        let b = Budget::DEFAULT;
        assert!(
            check_axiom(&RuleId::Sav, Axiom::Unanimity, 2, 3, b)
                .unwrap()
                .holds
        );
        let v = check_axiom(&RuleId::Nom, Axiom::WeakUnanimity, 2, 3, b).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.ballots, vec![s(&[0]), s(&[0, 1])]);
        assert_eq!(w.outcome, s(&[0, 1]));
        assert_eq!(w.required, s(&[0]));
        let v = check_axiom(&RuleId::Constant(s(&[0])), Axiom::TotalUnanimity, 2, 3, b).unwrap();
        assert_eq!(v.witness.unwrap().ballots, vec![AltSet::full(3); 2]);
    }

    #[test]
    fn registry_axiom_profile() {
        let b = Budget::DEFAULT;
        for n in 1..=3 {
            for ax in Axiom::ALL {
                assert!(
                    check_axiom(&RuleId::Sav, ax, n, 3, b).unwrap().holds,
                    "SAV {ax:?} n={n}"
                );
            }
            assert!(
                check_axiom(&RuleId::Nom, Axiom::TotalUnanimity, n, 3, b)
                    .unwrap()
                    .holds
            );
            assert!(
                check_axiom(&RuleId::Nom, Axiom::Anonymity, n, 3, b)
                    .unwrap()
                    .holds
            );
            assert!(
                check_axiom(&RuleId::Nom, Axiom::Neutrality, n, 3, b)
                    .unwrap()
                    .holds
            );
            assert!(
                !check_axiom(&RuleId::FixedX(0), Axiom::Neutrality, n, 3, b)
                    .unwrap()
                    .holds
            );
            for r in [RuleId::UnanOrAll, RuleId::UnanOrLargest] {
                assert!(
                    check_axiom(&r, Axiom::WeakUnanimity, n, 3, b)
                        .unwrap()
                        .holds
                );
                assert!(
                    check_axiom(&r, Axiom::TotalUnanimity, n, 3, b)
                        .unwrap()
                        .holds
                );
            }
        }
        for n in 2..=3 {
            assert!(
                !check_axiom(&RuleId::Nom, Axiom::WeakUnanimity, n, 3, b)
                    .unwrap()
                    .holds
            );
            // tie-break by voter index breaks anonymity
            assert!(
                !check_axiom(&RuleId::UnanOrLargest, Axiom::Anonymity, n, 3, b)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn axiom_budget() {
        assert!(matches!(
            check_axiom(&RuleId::Sav, Axiom::Anonymity, 3, 3, Budget(10)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
