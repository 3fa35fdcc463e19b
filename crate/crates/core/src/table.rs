//! Outcome tables: the rule's winning set for every (profile, order vector)
//! pair of a finite world, built once and then read-only.

use rayon::prelude::*;

use crate::enumerate::{decode, voter_ballots, OrderSpace};
use crate::error::{Error, Result};
use crate::model::{AltSet, Outcome, Profile};
use crate::rules::ApprovalRule;

/// Outcomes of one profile under every order vector of `orders`, in
/// enumeration order.
pub fn outcome_row<R: ApprovalRule + ?Sized>(
    rule: &R,
    profile: &Profile,
    orders: &OrderSpace,
) -> Result<Vec<Outcome>> {
    if profile.n() != orders.n() || profile.m() != orders.m() {
        return Err(Error::LengthMismatch {
            expected: orders.n(),
            found: profile.n(),
        });
    }
    let m = profile.m();
    let per_voter = voter_ballots(profile, orders.permutations());
    let base = orders.permutations().len();
    let mut digits = vec![0usize; profile.n()];
    let mut ballots = vec![AltSet::EMPTY; profile.n()];
    let mut row = Vec::with_capacity(orders.len());
    for idx in 0..orders.len() {
        decode(idx, base, &mut digits);
        for ((b, &d), table) in ballots.iter_mut().zip(&digits).zip(&per_voter) {
            *b = table[d];
        }
        let out = rule.apply(&ballots, m);
        if out.is_empty() {
            return Err(Error::EmptyOutcome { rule: rule.name() });
        }
        row.push(out);
    }
    Ok(row)
}

/// `rows x orders` outcome matrix.
#[derive(Clone, Debug)]
pub struct OutcomeTable {
    orders: OrderSpace,
    rows: usize,
    data: Vec<Outcome>,
}

impl OutcomeTable {
    pub fn build<R: ApprovalRule + ?Sized>(
        rule: &R,
        profiles: &[Profile],
        orders: OrderSpace,
    ) -> Result<Self> {
        let rows: Vec<Vec<Outcome>> = profiles
            .par_iter()
            .map(|p| outcome_row(rule, p, &orders))
            .collect::<Result<_>>()?;
        let data = rows.into_iter().flatten().collect();
        Ok(OutcomeTable {
            orders,
            rows: profiles.len(),
            data,
        })
    }

    pub fn orders(&self) -> &OrderSpace {
        &self.orders
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.orders.len()
    }

    pub fn row(&self, r: usize) -> &[Outcome] {
        let w = self.cols();
        &self.data[r * w..(r + 1) * w]
    }

    pub fn get(&self, r: usize, s: usize) -> Outcome {
        self.data[r * self.cols() + s]
    }
}
