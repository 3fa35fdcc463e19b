//! Anchor-proofness: brute-force deciders for the six quantifier questions,
//! closed-form characterizations for SAV, nomination and the weakly
//! unanimous class, and the order-pair / profile constructions used to
//! certify individual cells.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use crate::enumerate::DomainFilter;
use crate::enumerate::{order_vector_count, profile_count, Budget, OrderSpace, ProfileSpace};
use crate::error::{Error, Result};
use crate::format::{format_orders, format_profile};
use crate::model::{
    Alt, Alternatives, OrderVector, Outcome, PreferenceApproval, PresentationOrder, Profile,
};
use crate::rules::ApprovalRule;
use crate::table::{outcome_row, OutcomeTable};
use crate::tally::{support_sets, tally_points, unanimously_accepted};

/// Certificate attached to a [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub profile: Option<Profile>,
    pub orders: Option<(OrderVector, OrderVector)>,
    pub outcomes: Option<(Outcome, Outcome)>,
}

impl Witness {
    pub fn render(&self, alts: &Alternatives) -> String {
        let mut out = String::new();
        if let Some(p) = &self.profile {
            out.push_str("# profile\n");
            out.push_str(&format_profile(alts, p));
        }
        if let Some((s, t)) = &self.orders {
            out.push_str("# first order vector\n");
            out.push_str(&format_orders(alts, s));
            out.push_str("# second order vector\n");
            out.push_str(&format_orders(alts, t));
        }
        if let Some((a, b)) = self.outcomes {
            out.push_str(&format!(
                "# outcomes: {} vs {}\n",
                alts.format_set(a),
                alts.format_set(b)
            ));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn holds_with(witness: Option<Witness>) -> Self {
        Verdict {
            holds: true,
            witness,
        }
    }

    fn fails_with(witness: Option<Witness>) -> Self {
        Verdict {
            holds: false,
            witness,
        }
    }
}

/// The six quantifier patterns over profiles and distinct order pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Question {
    /// ∀p ∀(σ,π)
    Q1,
    /// ∃p ∀(σ,π)
    Q2,
    /// ∃(σ,π) ∀p
    Q3,
    /// ∀p ∃(σ,π)
    Q4,
    /// ∀(σ,π) ∃p
    Q5,
    /// ∃p ∃(σ,π)
    Q6,
}

impl Question {
    pub const ALL: [Question; 6] = [
        Question::Q1,
        Question::Q2,
        Question::Q3,
        Question::Q4,
        Question::Q5,
        Question::Q6,
    ];

    pub fn pattern(self) -> &'static str {
        match self {
            Question::Q1 => "forall p forall (s,t)",
            Question::Q2 => "exists p forall (s,t)",
            Question::Q3 => "exists (s,t) forall p",
            Question::Q4 => "forall p exists (s,t)",
            Question::Q5 => "forall (s,t) exists p",
            Question::Q6 => "exists p exists (s,t)",
        }
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Question {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q1" => Ok(Question::Q1),
            "q2" => Ok(Question::Q2),
            "q3" => Ok(Question::Q3),
            "q4" => Ok(Question::Q4),
            "q5" => Ok(Question::Q5),
            "q6" => Ok(Question::Q6),
            other => Err(Error::InvalidConfig(format!("unknown question '{other}'"))),
        }
    }
}

/// Distinct outcomes of `rule` on `profile` over all order vectors.
pub fn outcome_set<R: ApprovalRule + ?Sized>(
    rule: &R,
    profile: &Profile,
    budget: Budget,
) -> Result<BTreeSet<Outcome>> {
    let orders = OrderSpace::new(profile.n(), profile.m(), budget)?;
    Ok(outcome_row(rule, profile, &orders)?.into_iter().collect())
}

pub fn anchor_proof_for_profile<R: ApprovalRule + ?Sized>(
    rule: &R,
    profile: &Profile,
    budget: Budget,
) -> Result<Verdict> {
    let orders = OrderSpace::new(profile.n(), profile.m(), budget)?;
    let row = outcome_row(rule, profile, &orders)?;
    match row.iter().position(|&o| o != row[0]) {
        None => Ok(Verdict::holds_with(None)),
        Some(j) => Ok(Verdict::fails_with(Some(Witness {
            profile: Some(profile.clone()),
            orders: Some((orders.order_vector(0), orders.order_vector(j))),
            outcomes: Some((row[0], row[j])),
        }))),
    }
}

fn first_duplicate(row: &[Outcome]) -> Option<(usize, usize)> {
    let mut seen: Vec<(Outcome, usize)> = Vec::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, &o) in row.iter().enumerate() {
        if let Some(&(_, i)) = seen.iter().find(|(p, _)| *p == o) {
            // smallest (i, j) lexicographically: first i with any repeat wins
            match best {
                Some((bi, _)) if bi <= i => {}
                _ => best = Some((i, j)),
            }
        } else {
            seen.push((o, j));
        }
    }
    best
}

/// Decides `question` for `rule` over all profiles of `domain` with `n`
/// voters and `m` alternatives.
///
/// Order pairs are unordered and distinct. Witnesses are the
/// lexicographically smallest certificates.
pub fn quantifier_check<R: ApprovalRule + ?Sized>(
    rule: &R,
    question: Question,
    n: usize,
    m: usize,
    domain: DomainFilter,
    budget: Budget,
) -> Result<Verdict> {
    let n_profiles = profile_count(n, m, domain);
    let n_orders = order_vector_count(n, m);
    let mut required = n_profiles.saturating_mul(n_orders);
    if matches!(question, Question::Q3 | Question::Q5) {
        required =
            required.saturating_add(n_profiles.saturating_mul(n_orders * (n_orders - 1) / 2));
    }
    budget.check(required)?;

    let space = ProfileSpace::new(n, m, domain, budget)?;
    let orders = OrderSpace::new(n, m, budget)?;
    let profiles: Vec<Profile> = space.iter().collect();
    let table = OutcomeTable::build(rule, &profiles, orders)?;
    let cols = table.cols();
    let pair_witness = |r: usize, i: usize, j: usize, with_profile: bool| Witness {
        profile: with_profile.then(|| profiles[r].clone()),
        orders: Some((
            table.orders().order_vector(i),
            table.orders().order_vector(j),
        )),
        outcomes: Some((table.get(r, i), table.get(r, j))),
    };

    let verdict = match question {
        Question::Q1 => {
            let bad = (0..table.rows())
                .into_par_iter()
                .find_first(|&r| table.row(r).iter().any(|&o| o != table.get(r, 0)));
            match bad {
                None => Verdict::holds_with(None),
                Some(r) => {
                    let j = table
                        .row(r)
                        .iter()
                        .position(|&o| o != table.get(r, 0))
                        .expect("non-constant row");
                    Verdict::fails_with(Some(pair_witness(r, 0, j, true)))
                }
            }
        }
        Question::Q2 => {
            let good = (0..table.rows())
                .into_par_iter()
                .find_first(|&r| table.row(r).iter().all(|&o| o == table.get(r, 0)));
            match good {
                Some(r) => Verdict::holds_with(Some(Witness {
                    profile: Some(profiles[r].clone()),
                    ..Witness::default()
                })),
                None => Verdict::fails_with(None),
            }
        }
        Question::Q4 => {
            let bad = (0..table.rows())
                .into_par_iter()
                .find_first(|&r| first_duplicate(table.row(r)).is_none());
            match bad {
                None => Verdict::holds_with(None),
                Some(r) => Verdict::fails_with(Some(Witness {
                    profile: Some(profiles[r].clone()),
                    ..Witness::default()
                })),
            }
        }
        Question::Q6 => {
            let good = (0..table.rows())
                .into_par_iter()
                .find_first(|&r| first_duplicate(table.row(r)).is_some());
            match good {
                Some(r) => {
                    let (i, j) = first_duplicate(table.row(r)).expect("duplicate");
                    Verdict::holds_with(Some(pair_witness(r, i, j, true)))
                }
                None => Verdict::fails_with(None),
            }
        }
        Question::Q3 => {
            let equal_everywhere =
                |i: usize, j: usize| (0..table.rows()).all(|r| table.get(r, i) == table.get(r, j));
            let found = (0..cols)
                .into_par_iter()
                .filter_map(|i| {
                    ((i + 1)..cols)
                        .find(|&j| equal_everywhere(i, j))
                        .map(|j| (i, j))
                })
                .find_first(|_| true);
            match found {
                Some((i, j)) => Verdict::holds_with(Some(Witness {
                    profile: None,
                    orders: Some((
                        table.orders().order_vector(i),
                        table.orders().order_vector(j),
                    )),
                    outcomes: None,
                })),
                None => Verdict::fails_with(None),
            }
        }
        Question::Q5 => {
            let never_equal =
                |i: usize, j: usize| (0..table.rows()).all(|r| table.get(r, i) != table.get(r, j));
            let found = (0..cols)
                .into_par_iter()
                .filter_map(|i| ((i + 1)..cols).find(|&j| never_equal(i, j)).map(|j| (i, j)))
                .find_first(|_| true);
            match found {
                None => Verdict::holds_with(None),
                Some((i, j)) => Verdict::fails_with(Some(Witness {
                    profile: None,
                    orders: Some((
                        table.orders().order_vector(i),
                        table.orders().order_vector(j),
                    )),
                    outcomes: None,
                })),
            }
        }
    };
    Ok(verdict)
}

fn pair_rows<R: ApprovalRule + ?Sized>(
    rule: &R,
    sigma: &OrderVector,
    pi: &OrderVector,
    domain: DomainFilter,
    budget: Budget,
) -> Result<Vec<(Profile, Outcome, Outcome)>> {
    if sigma == pi {
        return Err(Error::InvalidConfig("order pair must be distinct".into()));
    }
    if sigma.n() != pi.n() || sigma.m() != pi.m() {
        return Err(Error::LengthMismatch {
            expected: sigma.n(),
            found: pi.n(),
        });
    }
    let space = ProfileSpace::new(sigma.n(), sigma.m(), domain, budget)?;
    budget.check(space.len() as u128 * 2)?;
    (0..space.len())
        .into_par_iter()
        .map(|idx| {
            let p = space.profile(idx);
            let a = crate::rules::eval_rule(
                rule,
                &crate::ballots::generate_ballot_profile(&p, sigma)?,
            )?;
            let b =
                crate::rules::eval_rule(rule, &crate::ballots::generate_ballot_profile(&p, pi)?)?;
            Ok((p, a, b))
        })
        .collect()
}

/// Does the fixed pair `(sigma, pi)` give equal outcomes on every profile?
/// On failure the witness is the first separating profile.
pub fn pair_preserves_everywhere<R: ApprovalRule + ?Sized>(
    rule: &R,
    sigma: &OrderVector,
    pi: &OrderVector,
    domain: DomainFilter,
    budget: Budget,
) -> Result<Verdict> {
    let rows = pair_rows(rule, sigma, pi, domain, budget)?;
    Ok(match rows.into_iter().find(|(_, a, b)| a != b) {
        None => Verdict::holds_with(Some(Witness {
            profile: None,
            orders: Some((sigma.clone(), pi.clone())),
            outcomes: None,
        })),
        Some((p, a, b)) => Verdict::fails_with(Some(Witness {
            profile: Some(p),
            orders: Some((sigma.clone(), pi.clone())),
            outcomes: Some((a, b)),
        })),
    })
}

/// Is there some profile on which `(sigma, pi)` give equal outcomes?
pub fn pair_equalized_somewhere<R: ApprovalRule + ?Sized>(
    rule: &R,
    sigma: &OrderVector,
    pi: &OrderVector,
    domain: DomainFilter,
    budget: Budget,
) -> Result<Verdict> {
    let rows = pair_rows(rule, sigma, pi, domain, budget)?;
    Ok(match rows.into_iter().find(|(_, a, b)| a == b) {
        Some((p, a, b)) => Verdict::holds_with(Some(Witness {
            profile: Some(p),
            orders: Some((sigma.clone(), pi.clone())),
            outcomes: Some((a, b)),
        })),
        None => Verdict::fails_with(Some(Witness {
            profile: None,
            orders: Some((sigma.clone(), pi.clone())),
            outcomes: None,
        })),
    })
}

/// SAV is anchor-proof on `profile` iff, for every plurality winner `x` and
/// every other alternative `y`, `plur(x) >= acc(y)`, with equality exactly
/// when `y` is itself a plurality winner.
pub fn sav_char(profile: &Profile) -> bool {
    let t = tally_points(profile);
    let max = t.plur.iter().copied().max().unwrap_or(0);
    let winners: Vec<usize> = (0..profile.m()).filter(|&x| t.plur[x] == max).collect();
    winners.iter().all(|&x| {
        (0..profile.m()).filter(|&y| y != x).all(|y| {
            if t.plur[y] == max {
                t.acc[y] == t.plur[x]
            } else {
                t.acc[y] < t.plur[x]
            }
        })
    })
}

/// Nomination is anchor-proof on `profile` iff `PLUR(p) = ACC(p)`.
pub fn nom_char(profile: &Profile) -> bool {
    let s = support_sets(profile);
    s.plur == s.acc
}

/// Every weakly unanimous rule is anchor-proof on `profile` iff it is
/// intolerant or has exactly one unanimously accepted alternative and that
/// alternative tops every ranking.
pub fn weakuna_char(profile: &Profile) -> bool {
    if profile.is_intolerant() {
        return true;
    }
    let u = unanimously_accepted(profile);
    u.len() == 1 && profile.voters().iter().all(|p| u.contains(p.top()))
}

fn order_with_prefix(prefix: &[Alt], m: usize) -> PresentationOrder {
    let mut seq = prefix.to_vec();
    seq.extend((0..m as Alt).filter(|x| !prefix.contains(x)));
    PresentationOrder::new(seq).expect("valid order")
}

/// Every voter is shown `x` first (`sigma`) or `y` first (`pi`), the rest in
/// index order.
pub fn first_position_pair(
    n: usize,
    m: usize,
    x: Alt,
    y: Alt,
) -> Result<(OrderVector, OrderVector)> {
    if x == y || x as usize >= m || y as usize >= m {
        return Err(Error::InvalidConfig(
            "need two distinct alternatives".into(),
        ));
    }
    Ok((
        OrderVector::uniform(order_with_prefix(&[x], m), n),
        OrderVector::uniform(order_with_prefix(&[y], m), n),
    ))
}

/// A distinct order pair under which nomination agrees on every tolerant
/// profile.
///
/// With `n >= m` every alternative is shown first to some voter in both
/// vectors and voter 1's tail is reversed in the second. With `n < m` the
/// first `n` alternatives are shown first (one per voter, rotated between
/// the vectors) and before all others; the others follow in index order.
pub fn nomination_order_pair(n: usize, m: usize) -> Result<(OrderVector, OrderVector)> {
    if m < 2 || n == 0 {
        return Err(Error::InvalidConfig("need n >= 1 and m >= 2".into()));
    }
    if n >= m {
        if m < 3 {
            return Err(Error::Unsupported(
                "with n >= m the construction needs m >= 3".into(),
            ));
        }
        let firsts: Vec<Alt> = (0..n).map(|i| if i < m { i as Alt } else { 0 }).collect();
        let sigma: Vec<PresentationOrder> =
            firsts.iter().map(|&f| order_with_prefix(&[f], m)).collect();
        let mut pi = sigma.clone();
        let mut tail: Vec<Alt> = pi[0].as_slice()[1..].to_vec();
        tail.reverse();
        let mut seq = vec![firsts[0]];
        seq.extend(tail);
        pi[0] = PresentationOrder::new(seq)?;
        Ok((OrderVector::new(sigma)?, OrderVector::new(pi)?))
    } else {
        if n < 2 {
            return Err(Error::Unsupported(
                "with n < m the construction needs n >= 2".into(),
            ));
        }
        let build = |shift: usize| -> Result<OrderVector> {
            let orders = (0..n)
                .map(|i| {
                    let first = ((i + shift) % n) as Alt;
                    let mut prefix = vec![first];
                    prefix.extend((0..n as Alt).filter(|&x| x != first));
                    order_with_prefix(&prefix, m)
                })
                .collect();
            OrderVector::new(orders)
        };
        Ok((build(0)?, build(1)?))
    }
}

/// A tolerant profile on which the cautious SAV variant returns every
/// alternative under both `sigma` and `pi`: voter 1 approves her first two
/// alternatives under `sigma`, voter 2 hers under `pi`.
pub fn cautious_equalizing_profile(sigma: &OrderVector, pi: &OrderVector) -> Result<Profile> {
    let n = sigma.n();
    let m = sigma.m();
    if n < 2 || pi.n() != n {
        return Err(Error::InvalidConfig(
            "construction needs at least two voters".into(),
        ));
    }
    let swapped = |o: &PresentationOrder| {
        let s = o.as_slice();
        let mut r = vec![s[1], s[0]];
        r.extend_from_slice(&s[2..]);
        PreferenceApproval::tolerant(r)
    };
    let mut voters = vec![swapped(sigma.order(0))?, swapped(pi.order(1))?];
    voters.extend(
        (2..n).map(|_| PreferenceApproval::tolerant((0..m as Alt).collect()).expect("valid")),
    );
    Profile::new(voters)
}

/// For distinct `sigma`, `pi`: a profile on which nomination differs.
///
/// Picks the first voter `i` and pair `x, y` with `x` before `y` in
/// `sigma_i` but after it in `pi_i`; voter `i` ranks `y, x` on top with both
/// acceptable, everyone else accepts only an alternative other than `x`.
pub fn nomination_separating_profile(sigma: &OrderVector, pi: &OrderVector) -> Result<Profile> {
    let m = sigma.m();
    let (i, x, y) = (0..sigma.n())
        .find_map(|i| {
            let s = sigma.order(i);
            let t = pi.order(i);
            s.as_slice().iter().enumerate().find_map(|(k, &x)| {
                s.as_slice()[k + 1..]
                    .iter()
                    .find(|&&y| t.shows_before(y, x))
                    .map(|&y| (i, x, y))
            })
        })
        .ok_or_else(|| Error::InvalidConfig("order vectors are identical".into()))?;
    let mut ranking_i = vec![y, x];
    ranking_i.extend((0..m as Alt).filter(|&z| z != x && z != y));
    let other_top = if x == 0 { 1 } else { 0 };
    let mut ranking_other = vec![other_top];
    ranking_other.extend((0..m as Alt).filter(|&z| z != other_top));
    let voters = (0..sigma.n())
        .map(|j| {
            if j == i {
                PreferenceApproval::new(ranking_i.clone(), 2)
            } else {
                PreferenceApproval::new(ranking_other.clone(), 1)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(voters)
}

/// Rules used by the three cases of the weakly unanimous characterization.
pub const WEAK_UNANIMITY_PROOF_RULES: [crate::rules::RuleId; 3] = [
    crate::rules::RuleId::Sav,
    crate::rules::RuleId::UnanOrAll,
    crate::rules::RuleId::UnanOrLargest,
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballots::{best_first_orders, generate_ballot_profile};
    use crate::model::AltSet;
    use crate::rules::{eval_rule, RuleId};

    fn pa(r: &[u8], t: usize) -> PreferenceApproval {
        PreferenceApproval::new(r.to_vec(), t).unwrap()
    }

    fn example_one() -> Profile {
        Profile::new(vec![
            pa(&[0, 1], 2),
            pa(&[0, 1], 2),
            pa(&[1, 0], 2),
            pa(&[1, 0], 2),
            pa(&[1, 0], 2),
        ])
        .unwrap()
    }

    #[test]
    fn outcome_sets() {
        let b = Budget::DEFAULT;
        let intolerant = Profile::new(vec![pa(&[0, 1, 2], 1), pa(&[2, 1, 0], 1)]).unwrap();
        assert_eq!(outcome_set(&RuleId::Sav, &intolerant, b).unwrap().len(), 1);
        let set = outcome_set(&RuleId::Sav, &example_one(), b).unwrap();
        let expected: BTreeSet<_> =
            [AltSet::singleton(0), AltSet::singleton(1), AltSet::full(2)].into();
        assert_eq!(set, expected);
        let c = RuleId::Constant(AltSet::singleton(0));
        assert_eq!(
            outcome_set(&c, &example_one(), b).unwrap(),
            [AltSet::singleton(0)].into()
        );
    }

    #[test]
    fn example_one_not_anchor_proof() {
        let v = anchor_proof_for_profile(&RuleId::Sav, &example_one(), Budget::DEFAULT).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        let (a, b) = w.outcomes.unwrap();
        assert_ne!(a, b);
        // the pair from the motivating tables also separates
        let p = example_one();
        let own = eval_rule(
            &RuleId::Sav,
            &generate_ballot_profile(&p, &best_first_orders(&p)).unwrap(),
        )
        .unwrap();
        let uniform = OrderVector::uniform(PresentationOrder::identity(2), 5);
        let shared = eval_rule(
            &RuleId::Sav,
            &generate_ballot_profile(&p, &uniform).unwrap(),
        )
        .unwrap();
        assert_eq!((own, shared), (AltSet::singleton(1), AltSet::singleton(0)));
    }

    #[test]
    fn characterization_examples() {
        let all_a = Profile::new(vec![pa(&[0, 1, 2], 1), pa(&[0, 2, 1], 1)]).unwrap();
        assert!(sav_char(&all_a) && nom_char(&all_a) && weakuna_char(&all_a));

        let tolerant = Profile::new(vec![pa(&[0, 1, 2], 3), pa(&[1, 0, 2], 3)]).unwrap();
        assert!(!sav_char(&tolerant));
        assert!(!weakuna_char(&tolerant));

        let one = Profile::new(vec![pa(&[0, 1, 2], 2)]).unwrap();
        assert!(!nom_char(&one));

        let distinct = Profile::new(vec![
            pa(&[0, 1, 2], 1),
            pa(&[1, 0, 2], 1),
            pa(&[2, 0, 1], 1),
        ])
        .unwrap();
        assert!(nom_char(&distinct));

        let a_top = Profile::new(vec![pa(&[0, 1, 2], 2), pa(&[0, 2, 1], 2)]).unwrap();
        assert!(weakuna_char(&a_top));
    }

    #[test]
    fn unique_plurality_winner_may_exceed_its_plurality() {
        // a tops two voters, the third ranks b over a with both acceptable:
        // plur(a) = 2 < acc(a) = 3, yet a wins under every order.
        let p = Profile::new(vec![
            pa(&[0, 1, 2], 1),
            pa(&[0, 1, 2], 1),
            pa(&[1, 0, 2], 2),
        ])
        .unwrap();
        assert!(
            anchor_proof_for_profile(&RuleId::Sav, &p, Budget::DEFAULT)
                .unwrap()
                .holds
        );
        assert!(sav_char(&p));
    }

    #[test]
    fn nomination_pair_shapes() {
        let (s, t) = nomination_order_pair(2, 3).unwrap();
        assert_eq!(s.order(0).as_slice(), &[0, 1, 2]);
        assert_eq!(s.order(1).as_slice(), &[1, 0, 2]);
        assert_eq!(t.order(0).as_slice(), &[1, 0, 2]);
        assert_eq!(t.order(1).as_slice(), &[0, 1, 2]);
        let (s, t) = nomination_order_pair(3, 3).unwrap();
        assert_ne!(s, t);
        assert!(nomination_order_pair(1, 3).is_err());
        assert!(nomination_order_pair(3, 2).is_err());
    }

    #[test]
    fn nomination_pair_preserves_tolerant_outcomes() {
        for (n, m) in [(2, 3), (3, 3), (4, 3), (2, 4), (3, 4)] {
            let (s, t) = nomination_order_pair(n, m).unwrap();
            let v = pair_preserves_everywhere(
                &RuleId::Nom,
                &s,
                &t,
                DomainFilter::Tolerant,
                Budget::DEFAULT,
            )
            .unwrap();
            assert!(v.holds, "n={n} m={m}");
        }
    }

    #[test]
    fn separating_constructions() {
        let b = Budget::DEFAULT;
        let (s, t) = first_position_pair(2, 3, 0, 1).unwrap();
        assert!(
            !pair_equalized_somewhere(&RuleId::Sav, &s, &t, DomainFilter::Tolerant, b)
                .unwrap()
                .holds
        );

        let orders = OrderSpace::new(2, 3, b).unwrap();
        for i in 0..orders.len() {
            for j in (i + 1)..orders.len() {
                let (s, t) = (orders.order_vector(i), orders.order_vector(j));
                let p = nomination_separating_profile(&s, &t).unwrap();
                let a = eval_rule(&RuleId::Nom, &generate_ballot_profile(&p, &s).unwrap()).unwrap();
                let c = eval_rule(&RuleId::Nom, &generate_ballot_profile(&p, &t).unwrap()).unwrap();
                assert_ne!(a, c);

                let q = cautious_equalizing_profile(&s, &t).unwrap();
                assert!(q.is_tolerant());
                let a = eval_rule(
                    &RuleId::SavCautious,
                    &generate_ballot_profile(&q, &s).unwrap(),
                )
                .unwrap();
                let c = eval_rule(
                    &RuleId::SavCautious,
                    &generate_ballot_profile(&q, &t).unwrap(),
                )
                .unwrap();
                assert_eq!((a, c), (AltSet::full(3), AltSet::full(3)));
            }
        }
    }

    #[test]
    fn quantifier_spot_checks() {
        let b = Budget::DEFAULT;
        let q1 = quantifier_check(&RuleId::Sav, Question::Q1, 2, 3, DomainFilter::All, b).unwrap();
        assert!(!q1.holds);
        let w = q1.witness.unwrap();
        let (x, y) = w.outcomes.unwrap();
        assert_ne!(x, y);
        assert!(
            quantifier_check(
                &RuleId::Constant(AltSet::singleton(1)),
                Question::Q1,
                2,
                3,
                DomainFilter::All,
                b
            )
            .unwrap()
            .holds
        );
        let q2 = quantifier_check(&RuleId::Sav, Question::Q2, 2, 3, DomainFilter::All, b).unwrap();
        assert!(q2.holds && q2.witness.unwrap().profile.unwrap().is_intolerant());
        assert!(
            !quantifier_check(&RuleId::Sav, Question::Q2, 2, 3, DomainFilter::Tolerant, b)
                .unwrap()
                .holds
        );
        assert!(
            !quantifier_check(&RuleId::Sav, Question::Q5, 2, 3, DomainFilter::Tolerant, b)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            quantifier_check(
                &RuleId::Sav,
                Question::Q3,
                3,
                3,
                DomainFilter::All,
                Budget(1_000)
            ),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn question_parsing() {
        assert_eq!("q3".parse::<Question>().unwrap(), Question::Q3);
        assert!("q7".parse::<Question>().is_err());
    }
}
