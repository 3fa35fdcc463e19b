//! Anchored ballot formation.
//!
//! A voter walks through her presentation order and approves an alternative
//! iff it is acceptable and strictly preferred to everything she has
//! approved so far. Acceptable alternatives always outrank unacceptable ones,
//! so the best approved alternative is the only state the pass needs.

use crate::error::{Error, Result};
use crate::model::{
    Alt, AltSet, ApprovalBallot, BallotProfile, OrderVector, PreferenceApproval, PresentationOrder,
    Profile,
};

/// Single pass over `order`; no dimension checks.
#[inline]
pub(crate) fn ballot_unchecked(p: &PreferenceApproval, order: &[Alt]) -> ApprovalBallot {
    let rank = p.positions();
    let threshold = p.threshold() as u8;
    let mut best = u8::MAX;
    let mut ballot = AltSet::EMPTY;
    for &x in order {
        let r = rank[x as usize];
        if r < threshold && r < best {
            ballot = ballot.with(x);
            best = r;
        }
    }
    ballot
}

pub fn generate_ballot(
    p: &PreferenceApproval,
    order: &PresentationOrder,
) -> Result<ApprovalBallot> {
    if p.m() != order.m() {
        return Err(Error::DimensionMismatch {
            expected: p.m(),
            found: order.m(),
        });
    }
    Ok(ballot_unchecked(p, order.as_slice()))
}

fn check_dims(profile: &Profile, orders: &OrderVector) -> Result<()> {
    if profile.n() != orders.n() {
        return Err(Error::LengthMismatch {
            expected: profile.n(),
            found: orders.n(),
        });
    }
    if profile.m() != orders.m() {
        return Err(Error::DimensionMismatch {
            expected: profile.m(),
            found: orders.m(),
        });
    }
    Ok(())
}

pub fn generate_ballot_profile(profile: &Profile, orders: &OrderVector) -> Result<BallotProfile> {
    check_dims(profile, orders)?;
    let ballots = profile
        .voters()
        .iter()
        .zip(orders.orders())
        .map(|(p, o)| ballot_unchecked(p, o.as_slice()))
        .collect();
    BallotProfile::new(profile.m(), ballots)
}

/// Approval points of every alternative under `orders`.
pub fn app_points(profile: &Profile, orders: &OrderVector) -> Result<Vec<u32>> {
    let ballots = generate_ballot_profile(profile, orders)?;
    let mut app = vec![0u32; profile.m()];
    for b in ballots.ballots() {
        for x in b.iter() {
            app[x as usize] += 1;
        }
    }
    Ok(app)
}

/// The two extremal orders of a voter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOrders {
    /// Least preferred first; yields `ACC(p)`.
    pub worst_first: PresentationOrder,
    /// Most preferred first; yields `{top}`.
    pub best_first: PresentationOrder,
}

pub fn derived_orders(p: &PreferenceApproval) -> DerivedOrders {
    let best = p.ranking().to_vec();
    let mut worst = best.clone();
    worst.reverse();
    DerivedOrders {
        worst_first: PresentationOrder::from_vec_unchecked(worst),
        best_first: PresentationOrder::from_vec_unchecked(best),
    }
}

/// Per-voter best-first orders.
pub fn best_first_orders(profile: &Profile) -> OrderVector {
    OrderVector::new(
        profile
            .voters()
            .iter()
            .map(|p| derived_orders(p).best_first)
            .collect(),
    )
    .expect("nonempty profile")
}

/// Per-voter worst-first orders.
pub fn worst_first_orders(profile: &Profile) -> OrderVector {
    OrderVector::new(
        profile
            .voters()
            .iter()
            .map(|p| derived_orders(p).worst_first)
            .collect(),
    )
    .expect("nonempty profile")
}

fn check_subset(target: AltSet, m: usize) -> Result<()> {
    if target.is_subset(AltSet::full(m)) {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: m,
            found: target.iter().max().map_or(0, |x| x as usize + 1),
        })
    }
}

/// An order under which `p` approves exactly `(target ∩ ACC(p)) ∪ {top}`.
///
/// Targets and the top are shown worst first, everything else afterwards.
pub fn order_for_target(p: &PreferenceApproval, target: AltSet) -> Result<PresentationOrder> {
    check_subset(target, p.m())?;
    let wanted = target.with(p.top());
    let mut seq: Vec<Alt> = p
        .ranking()
        .iter()
        .rev()
        .copied()
        .filter(|&x| wanted.contains(x))
        .collect();
    seq.extend((0..p.m() as Alt).filter(|&x| !wanted.contains(x)));
    PresentationOrder::new(seq)
}

/// Ranks `members` by reverse order of appearance in `order`, then the rest
/// by index.
fn ranking_for(order: &PresentationOrder, members: AltSet) -> Vec<Alt> {
    let mut ranking: Vec<Alt> = order
        .as_slice()
        .iter()
        .rev()
        .copied()
        .filter(|&x| members.contains(x))
        .collect();
    ranking.extend((0..order.m() as Alt).filter(|&x| !members.contains(x)));
    ranking
}

/// A preference-approval that approves exactly `target` under `order`.
pub fn preference_for_target(
    order: &PresentationOrder,
    target: AltSet,
) -> Result<PreferenceApproval> {
    check_subset(target, order.m())?;
    if target.is_empty() {
        return Err(Error::EmptyTarget);
    }
    PreferenceApproval::new(ranking_for(order, target), target.len())
}

/// A tolerant preference-approval approving `target ∪ {first shown}`.
pub fn tolerant_preference_for_target(
    order: &PresentationOrder,
    target: AltSet,
) -> Result<PreferenceApproval> {
    check_subset(target, order.m())?;
    PreferenceApproval::tolerant(ranking_for(order, target.with(order.first())))
}
