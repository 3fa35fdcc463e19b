//! Canonical enumeration of preference-approvals, profiles and order vectors.
//!
//! Everything is enumerated lexicographically over alternative indices:
//! permutations in lexicographic order, preference-approvals by ranking then
//! threshold, and vectors with voter 1 as the most significant digit.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::ballots::ballot_unchecked;
use crate::error::{Error, Result};
use crate::model::{Alt, AltSet, OrderVector, PreferenceApproval, PresentationOrder, Profile};

/// Upper bound on enumeration steps an operation may take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(2_000_000_000);

    pub fn check(self, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            Err(Error::BudgetExceeded {
                required,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Restricts profile enumeration by threshold pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainFilter {
    All,
    Tolerant,
    Intolerant,
}

impl DomainFilter {
    pub fn admits(self, p: &PreferenceApproval) -> bool {
        match self {
            DomainFilter::All => true,
            DomainFilter::Tolerant => p.is_tolerant(),
            DomainFilter::Intolerant => p.is_intolerant(),
        }
    }

    pub fn admits_profile(self, profile: &Profile) -> bool {
        profile.voters().iter().all(|p| self.admits(p))
    }

    pub fn name(self) -> &'static str {
        match self {
            DomainFilter::All => "all",
            DomainFilter::Tolerant => "tolerant",
            DomainFilter::Intolerant => "intolerant",
        }
    }
}

impl fmt::Display for DomainFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DomainFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(DomainFilter::All),
            "tolerant" => Ok(DomainFilter::Tolerant),
            "intolerant" => Ok(DomainFilter::Intolerant),
            other => Err(Error::InvalidConfig(format!("unknown domain '{other}'"))),
        }
    }
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<Alt>> {
    (0..m as Alt).permutations(m).collect()
}

pub fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// Preference-approvals over `0..m` admitted by `domain`, ranking-major.
pub fn preferences(m: usize, domain: DomainFilter) -> Vec<PreferenceApproval> {
    permutations(m)
        .into_iter()
        .flat_map(|r| (1..=m).map(move |t| PreferenceApproval::new(r.clone(), t).expect("valid")))
        .filter(|p| domain.admits(p))
        .collect()
}

fn checked_power(base: usize, n: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Number of profiles of `n` voters over `m` alternatives in `domain`.
pub fn profile_count(n: usize, m: usize, domain: DomainFilter) -> u128 {
    let per_voter = match domain {
        DomainFilter::All => factorial(m) * m as u128,
        DomainFilter::Tolerant | DomainFilter::Intolerant => factorial(m),
    };
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(per_voter))
}

pub fn order_vector_count(n: usize, m: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(factorial(m)))
}

fn check_shape(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidConfig("n must be at least 1".into()));
    }
    if !(2..=8).contains(&m) {
        return Err(Error::InvalidConfig(format!(
            "enumeration needs 2 <= m <= 8, got {m}"
        )));
    }
    Ok(())
}

/// Mixed-radix decode with voter 1 most significant.
pub(crate) fn decode(mut idx: usize, base: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = idx % base;
        idx /= base;
    }
}

/// All profiles of a domain, addressed by index.
#[derive(Clone, Debug)]
pub struct ProfileSpace {
    n: usize,
    m: usize,
    prefs: Vec<PreferenceApproval>,
    len: usize,
}

impl ProfileSpace {
    pub fn new(n: usize, m: usize, domain: DomainFilter, budget: Budget) -> Result<Self> {
        check_shape(n, m)?;
        budget.check(profile_count(n, m, domain))?;
        let prefs = preferences(m, domain);
        let len = checked_power(prefs.len(), n) as usize;
        Ok(ProfileSpace { n, m, prefs, len })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn preferences(&self) -> &[PreferenceApproval] {
        &self.prefs
    }

    pub fn digits(&self, idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.n];
        decode(idx, self.prefs.len(), &mut d);
        d
    }

    pub fn profile(&self, idx: usize) -> Profile {
        let voters = self
            .digits(idx)
            .into_iter()
            .map(|d| self.prefs[d].clone())
            .collect();
        Profile::new(voters).expect("valid profile")
    }

    pub fn index_of(&self, profile: &Profile) -> Option<usize> {
        if profile.n() != self.n || profile.m() != self.m {
            return None;
        }
        profile.voters().iter().try_fold(0usize, |acc, p| {
            let d = self.prefs.binary_search(p).ok()?;
            Some(acc * self.prefs.len() + d)
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = Profile> + '_ {
        (0..self.len).map(move |i| self.profile(i))
    }
}

/// All order vectors of `n` voters over `m` alternatives, addressed by index.
#[derive(Clone, Debug)]
pub struct OrderSpace {
    n: usize,
    m: usize,
    perms: Vec<Vec<Alt>>,
    len: usize,
}

impl OrderSpace {
    pub fn new(n: usize, m: usize, budget: Budget) -> Result<Self> {
        check_shape(n, m)?;
        budget.check(order_vector_count(n, m))?;
        let perms = permutations(m);
        let len = checked_power(perms.len(), n) as usize;
        Ok(OrderSpace { n, m, perms, len })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn permutations(&self) -> &[Vec<Alt>] {
        &self.perms
    }

    pub fn digits(&self, idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.n];
        decode(idx, self.perms.len(), &mut d);
        d
    }

    pub fn order_vector(&self, idx: usize) -> OrderVector {
        let orders = self
            .digits(idx)
            .into_iter()
            .map(|d| PresentationOrder::from_vec_unchecked(self.perms[d].clone()))
            .collect();
        OrderVector::new(orders).expect("valid order vector")
    }

    pub fn index_of(&self, orders: &OrderVector) -> Option<usize> {
        if orders.n() != self.n || orders.m() != self.m {
            return None;
        }
        orders.orders().iter().try_fold(0usize, |acc, o| {
            let d = self
                .perms
                .binary_search_by(|p| p.as_slice().cmp(o.as_slice()))
                .ok()?;
            Some(acc * self.perms.len() + d)
        })
    }
}

/// `ballots[i][k]`: ballot of voter `i` under the `k`-th permutation.
pub(crate) fn voter_ballots(profile: &Profile, perms: &[Vec<Alt>]) -> Vec<Vec<AltSet>> {
    profile
        .voters()
        .iter()
        .map(|p| perms.iter().map(|o| ballot_unchecked(p, o)).collect())
        .collect()
}
