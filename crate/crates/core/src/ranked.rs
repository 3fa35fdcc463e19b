//! Top-truncated ranked ballots formed under the same anchoring pass, and
//! the rank rules evaluated on them.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::enumerate::{
    decode, permutations, preferences, Budget, DomainFilter, OrderSpace, ProfileSpace,
};
use crate::error::{Error, Result};
use crate::model::{
    Alt, AltSet, Alternatives, OrderVector, Outcome, PreferenceApproval, PresentationOrder, Profile,
};

/// A ranking of some alternatives, best first; unlisted ones rank below.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncatedBallot(Vec<Alt>);

impl TruncatedBallot {
    pub fn new(ranking: Vec<Alt>) -> Result<Self> {
        if ranking.is_empty() {
            return Err(Error::EmptyBallot { voter: 0 });
        }
        let members = AltSet::from_alts(ranking.iter().copied());
        if members.len() != ranking.len() {
            return Err(Error::InvalidOrder(
                "repeated alternative in ranked ballot".into(),
            ));
        }
        Ok(TruncatedBallot(ranking))
    }

    pub fn as_slice(&self) -> &[Alt] {
        &self.0
    }

    pub fn top(&self) -> Alt {
        self.0[0]
    }

    pub fn members(&self) -> AltSet {
        AltSet::from_alts(self.0.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display(&self, alts: &Alternatives) -> String {
        alts.format_sequence(&self.0)
    }
}

fn truncated_unchecked(p: &PreferenceApproval, order: &[Alt]) -> TruncatedBallot {
    let rank = p.positions();
    let threshold = p.threshold() as u8;
    let mut ballot: Vec<Alt> = Vec::with_capacity(p.m());
    for &x in order {
        let r = rank[x as usize];
        if ballot.iter().any(|&y| rank[y as usize] < r) || r >= threshold {
            continue;
        }
        let at = ballot
            .iter()
            .position(|&y| rank[y as usize] > r)
            .unwrap_or(ballot.len());
        ballot.insert(at, x);
    }
    TruncatedBallot(ballot)
}

/// Presents `order` to `p`: an alternative below something already ranked
/// is dropped, otherwise it is inserted at its place in `p` if acceptable.
pub fn generate_truncated(
    p: &PreferenceApproval,
    order: &PresentationOrder,
) -> Result<TruncatedBallot> {
    if p.m() != order.m() {
        return Err(Error::DimensionMismatch {
            expected: p.m(),
            found: order.m(),
        });
    }
    Ok(truncated_unchecked(p, order.as_slice()))
}

pub fn generate_truncated_profile(
    profile: &Profile,
    orders: &OrderVector,
) -> Result<Vec<TruncatedBallot>> {
    if profile.n() != orders.n() {
        return Err(Error::LengthMismatch {
            expected: profile.n(),
            found: orders.n(),
        });
    }
    profile
        .voters()
        .iter()
        .zip(orders.orders())
        .map(|(p, o)| generate_truncated(p, o))
        .collect()
}

/// Rules over truncated ballots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankRuleId {
    /// Alternatives ranked first most often.
    Plurality,
    /// Voter 1's second entry, or her top if she ranks only one.
    FirstVoterSecond,
    /// Always the given nonempty set.
    Constant(AltSet),
}

impl RankRuleId {
    pub fn parse(text: &str, alts: &Alternatives) -> Result<Self> {
        match text.split_once(':') {
            None if text == "plurality" => Ok(RankRuleId::Plurality),
            None if text == "first-voter-second" => Ok(RankRuleId::FirstVoterSecond),
            Some(("constant", set)) => {
                let c = alts
                    .parse_set(set)
                    .map_err(|e| Error::InvalidRule(e.to_string()))?;
                if c.is_empty() {
                    return Err(Error::InvalidRule("constant set must be nonempty".into()));
                }
                Ok(RankRuleId::Constant(c))
            }
            _ => Err(Error::InvalidRule(format!("unknown rank rule '{text}'"))),
        }
    }
}

impl fmt::Display for RankRuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankRuleId::Plurality => f.write_str("plurality"),
            RankRuleId::FirstVoterSecond => f.write_str("first-voter-second"),
            RankRuleId::Constant(c) => write!(f, "constant:{c:?}"),
        }
    }
}

fn apply_rank_rule(rule: RankRuleId, ballots: &[TruncatedBallot], m: usize) -> Outcome {
    match rule {
        RankRuleId::Plurality => {
            let mut counts = vec![0u32; m];
            for b in ballots {
                counts[b.top() as usize] += 1;
            }
            let max = counts.iter().copied().max().unwrap_or(0);
            AltSet::from_alts((0..m as Alt).filter(|&x| counts[x as usize] == max))
        }
        RankRuleId::FirstVoterSecond => {
            let first = ballots[0].as_slice();
            AltSet::singleton(*first.get(1).unwrap_or(&first[0]))
        }
        RankRuleId::Constant(c) => c,
    }
}

pub fn eval_rank_rule(rule: RankRuleId, ballots: &[TruncatedBallot], m: usize) -> Result<Outcome> {
    if ballots.is_empty() {
        return Err(Error::InvalidConfig("no ballots".into()));
    }
    if let Some(i) = ballots.iter().position(|b| b.is_empty()) {
        return Err(Error::EmptyBallot { voter: i + 1 });
    }
    if let Some(b) = ballots
        .iter()
        .find(|b| b.as_slice().iter().any(|&x| x as usize >= m))
    {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: b.as_slice().iter().max().map_or(0, |&x| x as usize + 1),
        });
    }
    Ok(apply_rank_rule(rule, ballots, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankWitness {
    /// Two ballot profiles with the same tops but different outcomes.
    Ballots {
        first: Vec<TruncatedBallot>,
        second: Vec<TruncatedBallot>,
        outcomes: (Outcome, Outcome),
    },
    /// A profile whose outcome depends on the order vector.
    Orders {
        profile: Profile,
        sigma: OrderVector,
        pi: OrderVector,
        outcomes: (Outcome, Outcome),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankVerdict {
    pub holds: bool,
    pub witness: Option<RankWitness>,
}

/// Every truncated ballot some preference-approval produces under some order.
pub fn inducible_ballots(m: usize) -> Vec<TruncatedBallot> {
    let perms = permutations(m);
    let mut all: Vec<TruncatedBallot> = preferences(m, DomainFilter::All)
        .iter()
        .flat_map(|p| perms.iter().map(move |o| truncated_unchecked(p, o)))
        .collect();
    all.sort();
    all.dedup();
    all
}

/// Do any two inducible ballot profiles with equal tops get different
/// outcomes?
pub fn tops_only_check(
    rule: RankRuleId,
    n: usize,
    m: usize,
    budget: Budget,
) -> Result<RankVerdict> {
    if n == 0 || !(2..=8).contains(&m) {
        return Err(Error::InvalidConfig(format!(
            "need n >= 1 and 2 <= m <= 8, got n={n}, m={m}"
        )));
    }
    budget.check(crate::enumerate::profile_count(n, m, DomainFilter::All))?;
    let ballots = inducible_ballots(m);
    let total = (0..n).fold(1u128, |acc, _| acc.saturating_mul(ballots.len() as u128));
    budget.check(total)?;
    let mut first_by_tops: BTreeMap<Vec<Alt>, (Vec<TruncatedBallot>, Outcome)> = BTreeMap::new();
    let mut digits = vec![0usize; n];
    for idx in 0..total as usize {
        decode(idx, ballots.len(), &mut digits);
        let profile: Vec<TruncatedBallot> = digits.iter().map(|&d| ballots[d].clone()).collect();
        let out = apply_rank_rule(rule, &profile, m);
        let tops: Vec<Alt> = profile.iter().map(TruncatedBallot::top).collect();
        match first_by_tops.get(&tops) {
            Some((first, o)) if *o != out => {
                return Ok(RankVerdict {
                    holds: false,
                    witness: Some(RankWitness::Ballots {
                        first: first.clone(),
                        second: profile,
                        outcomes: (*o, out),
                    }),
                })
            }
            Some(_) => {}
            None => {
                first_by_tops.insert(tops, (profile, out));
            }
        }
    }
    Ok(RankVerdict {
        holds: true,
        witness: None,
    })
}

/// Is every intrinsic profile's outcome independent of the order vector?
pub fn rank_anchor_proof(
    rule: RankRuleId,
    n: usize,
    m: usize,
    budget: Budget,
) -> Result<RankVerdict> {
    let space = ProfileSpace::new(n, m, DomainFilter::All, budget)?;
    let orders = OrderSpace::new(n, m, budget)?;
    budget.check(space.len() as u128 * orders.len() as u128)?;
    let perms = orders.permutations();
    let found = (0..space.len()).into_par_iter().find_map_first(|idx| {
        let profile = space.profile(idx);
        let per_voter: Vec<Vec<TruncatedBallot>> = profile
            .voters()
            .iter()
            .map(|p| perms.iter().map(|o| truncated_unchecked(p, o)).collect())
            .collect();
        let mut digits = vec![0usize; n];
        let mut ballots = Vec::with_capacity(n);
        let mut first = None;
        for j in 0..orders.len() {
            decode(j, perms.len(), &mut digits);
            ballots.clear();
            ballots.extend(digits.iter().zip(&per_voter).map(|(&d, b)| b[d].clone()));
            let out = apply_rank_rule(rule, &ballots, m);
            match first {
                None => first = Some(out),
                Some(o) if o != out => {
                    return Some(RankWitness::Orders {
                        profile,
                        sigma: orders.order_vector(0),
                        pi: orders.order_vector(j),
                        outcomes: (o, out),
                    })
                }
                Some(_) => {}
            }
        }
        None
    });
    Ok(RankVerdict {
        holds: found.is_none(),
        witness: found,
    })
}
