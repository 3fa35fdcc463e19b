//! Domain types: alternatives, preference-approvals, profiles, presentation
//! orders and approval ballots.
//!
//! Alternatives are plain indices `0..m`; labels only matter for text I/O and
//! live in [`Alternatives`]. Subsets of alternatives are bitmasks ([`AltSet`]).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index of an alternative.
pub type Alt = u8;

/// Largest number of alternatives a subset bitmask can hold.
pub const MAX_ALTERNATIVES: usize = 16;

/// A subset of alternatives, stored as a bitmask.
///
/// Ordering is lexicographic over the ascending member lists, so
/// `{0} < {0,1} < {0,1,2} < {0,2} < {1} < {1,2} < {2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct AltSet(u16);

impl AltSet {
    pub const EMPTY: AltSet = AltSet(0);

    pub fn from_bits(bits: u16) -> Self {
        AltSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// All alternatives `0..m`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_ALTERNATIVES);
        if m >= 16 {
            AltSet(u16::MAX)
        } else {
            AltSet((1u16 << m) - 1)
        }
    }

    pub fn singleton(x: Alt) -> Self {
        AltSet(1 << x)
    }

    pub fn from_alts<I: IntoIterator<Item = Alt>>(alts: I) -> Self {
        alts.into_iter().fold(AltSet::EMPTY, |s, x| s.with(x))
    }

    pub fn contains(self, x: Alt) -> bool {
        self.0 & (1 << x) != 0
    }

    #[must_use]
    pub fn with(self, x: Alt) -> Self {
        AltSet(self.0 | (1 << x))
    }

    #[must_use]
    pub fn without(self, x: Alt) -> Self {
        AltSet(self.0 & !(1 << x))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[must_use]
    pub fn union(self, other: AltSet) -> Self {
        AltSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: AltSet) -> Self {
        AltSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: AltSet) -> Self {
        AltSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AltSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = Alt> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as Alt;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    /// Image of this set under a relabeling `x -> map[x]`.
    #[must_use]
    pub fn map(self, map: &[Alt]) -> Self {
        AltSet::from_alts(self.iter().map(|x| map[x as usize]))
    }
}

impl Ord for AltSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for AltSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// An approval ballot: the set of approved alternatives.
pub type ApprovalBallot = AltSet;

/// The winning set returned by a rule. Never empty for registry rules.
pub type Outcome = AltSet;

/// Labels of the alternatives `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alternatives {
    labels: Vec<String>,
}

impl Alternatives {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::InvalidAlternatives(format!(
                "need at least 2 alternatives, got {}",
                labels.len()
            )));
        }
        if labels.len() > MAX_ALTERNATIVES {
            return Err(Error::InvalidAlternatives(format!(
                "at most {MAX_ALTERNATIVES} alternatives are supported, got {}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidAlternatives("empty label".into()));
            }
            if label
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '|' | ',' | '#' | ':'))
            {
                return Err(Error::InvalidAlternatives(format!(
                    "label '{label}' contains a reserved character"
                )));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidAlternatives(format!(
                    "duplicate label '{label}'"
                )));
            }
        }
        Ok(Alternatives { labels })
    }

    /// Labels `a, b, c, ...`.
    pub fn default_labels(m: usize) -> Result<Self> {
        if m > 26 {
            return Err(Error::InvalidAlternatives(format!("m = {m} too large")));
        }
        Self::new(
            (0..m)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect(),
        )
    }

    pub fn from_strs(labels: &[&str]) -> Result<Self> {
        Self::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: Alt) -> &str {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Alt> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Alt)
    }

    /// `{a,b}` style rendering.
    pub fn format_set(&self, set: AltSet) -> String {
        format!("{{{}}}", self.join_set(set, ","))
    }

    /// Members joined with `sep`, in index order.
    pub fn join_set(&self, set: AltSet, sep: &str) -> String {
        set.iter()
            .map(|x| self.label(x))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a comma-separated label list such as `a,c` (braces optional).
    pub fn parse_set(&self, text: &str) -> Result<AltSet> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = AltSet::EMPTY;
        for token in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let x = self.index_of(token).ok_or_else(|| Error::UnknownLabel {
                line: 0,
                label: token.to_string(),
            })?;
            set = set.with(x);
        }
        Ok(set)
    }

    pub fn format_sequence(&self, seq: &[Alt]) -> String {
        seq.iter()
            .map(|&x| self.label(x))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn check_permutation(seq: &[Alt], m: usize) -> std::result::Result<(), String> {
    if seq.len() != m {
        return Err(format!("expected {m} entries, got {}", seq.len()));
    }
    let mut seen = AltSet::EMPTY;
    for &x in seq {
        if x as usize >= m {
            return Err(format!("alternative {x} out of range 0..{m}"));
        }
        if seen.contains(x) {
            return Err(format!("alternative {x} appears twice"));
        }
        seen = seen.with(x);
    }
    Ok(())
}

/// A strict ranking of the alternatives with an acceptability threshold.
///
/// The first `threshold` ranking positions are acceptable, so the top
/// alternative is always acceptable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreferenceApproval {
    ranking: Vec<Alt>,
    threshold: u8,
}

impl PreferenceApproval {
    pub fn new(ranking: Vec<Alt>, threshold: usize) -> Result<Self> {
        let m = ranking.len();
        if !(2..=MAX_ALTERNATIVES).contains(&m) {
            return Err(Error::InvalidPreference(format!("m = {m} out of range")));
        }
        check_permutation(&ranking, m).map_err(Error::InvalidPreference)?;
        if threshold == 0 || threshold > m {
            return Err(Error::InvalidPreference(format!(
                "threshold {threshold} outside 1..={m}"
            )));
        }
        Ok(PreferenceApproval {
            ranking,
            threshold: threshold as u8,
        })
    }

    pub fn tolerant(ranking: Vec<Alt>) -> Result<Self> {
        let m = ranking.len();
        Self::new(ranking, m)
    }

    pub fn m(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[Alt] {
        &self.ranking
    }

    pub fn threshold(&self) -> usize {
        self.threshold as usize
    }

    pub fn top(&self) -> Alt {
        self.ranking[0]
    }

    /// `ACC(p)`: the first `threshold` ranking positions.
    pub fn acceptable(&self) -> AltSet {
        AltSet::from_alts(self.ranking[..self.threshold()].iter().copied())
    }

    pub fn is_acceptable(&self, x: Alt) -> bool {
        self.position(x) < self.threshold()
    }

    /// Zero-based ranking position of `x`.
    pub fn position(&self, x: Alt) -> usize {
        self.ranking
            .iter()
            .position(|&y| y == x)
            .expect("alternative in range")
    }

    /// `rank[x]` is the zero-based position of `x`.
    pub fn positions(&self) -> [u8; MAX_ALTERNATIVES] {
        let mut rank = [0u8; MAX_ALTERNATIVES];
        for (k, &x) in self.ranking.iter().enumerate() {
            rank[x as usize] = k as u8;
        }
        rank
    }

    /// Strict preference of `x` over `y`.
    pub fn prefers(&self, x: Alt, y: Alt) -> bool {
        self.position(x) < self.position(y)
    }

    pub fn is_tolerant(&self) -> bool {
        self.threshold() == self.m()
    }

    pub fn is_intolerant(&self) -> bool {
        self.threshold == 1
    }

    /// Same ranking, every alternative acceptable.
    pub fn to_tolerant(&self) -> Self {
        PreferenceApproval {
            ranking: self.ranking.clone(),
            threshold: self.ranking.len() as u8,
        }
    }

    /// Applies the relabeling `x -> map[x]`; the threshold is unchanged.
    pub fn relabel(&self, map: &[Alt]) -> Self {
        PreferenceApproval {
            ranking: self.ranking.iter().map(|&x| map[x as usize]).collect(),
            threshold: self.threshold,
        }
    }
}

/// One preference-approval per voter, all over the same `m` alternatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    voters: Vec<PreferenceApproval>,
}

impl Profile {
    pub fn new(voters: Vec<PreferenceApproval>) -> Result<Self> {
        let Some(first) = voters.first() else {
            return Err(Error::InvalidPreference(
                "profile needs at least one voter".into(),
            ));
        };
        let m = first.m();
        if let Some(bad) = voters.iter().find(|p| p.m() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.m(),
            });
        }
        Ok(Profile { voters })
    }

    pub fn n(&self) -> usize {
        self.voters.len()
    }

    pub fn m(&self) -> usize {
        self.voters[0].m()
    }

    pub fn voters(&self) -> &[PreferenceApproval] {
        &self.voters
    }

    pub fn voter(&self, i: usize) -> &PreferenceApproval {
        &self.voters[i]
    }

    pub fn is_tolerant(&self) -> bool {
        self.voters.iter().all(PreferenceApproval::is_tolerant)
    }

    pub fn is_intolerant(&self) -> bool {
        self.voters.iter().all(PreferenceApproval::is_intolerant)
    }

    pub fn to_tolerant(&self) -> Self {
        Profile {
            voters: self
                .voters
                .iter()
                .map(PreferenceApproval::to_tolerant)
                .collect(),
        }
    }

    pub fn relabel(&self, map: &[Alt]) -> Self {
        Profile {
            voters: self.voters.iter().map(|p| p.relabel(map)).collect(),
        }
    }

    pub fn thresholds(&self) -> Vec<u8> {
        self.voters.iter().map(|p| p.threshold).collect()
    }
}

/// The sequence in which one voter is shown the alternatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresentationOrder(Vec<Alt>);

impl PresentationOrder {
    pub fn new(seq: Vec<Alt>) -> Result<Self> {
        let m = seq.len();
        if !(2..=MAX_ALTERNATIVES).contains(&m) {
            return Err(Error::InvalidOrder(format!("m = {m} out of range")));
        }
        check_permutation(&seq, m).map_err(Error::InvalidOrder)?;
        Ok(PresentationOrder(seq))
    }

    /// `0, 1, ..., m-1`.
    pub fn identity(m: usize) -> Self {
        PresentationOrder((0..m as Alt).collect())
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Alt] {
        &self.0
    }

    pub fn first(&self) -> Alt {
        self.0[0]
    }

    /// True when `x` is shown before `y`.
    pub fn shows_before(&self, x: Alt, y: Alt) -> bool {
        let px = self.0.iter().position(|&z| z == x);
        let py = self.0.iter().position(|&z| z == y);
        px < py
    }

    pub(crate) fn from_vec_unchecked(seq: Vec<Alt>) -> Self {
        PresentationOrder(seq)
    }
}

/// One presentation order per voter: the planner's strategy object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderVector(Vec<PresentationOrder>);

impl OrderVector {
    pub fn new(orders: Vec<PresentationOrder>) -> Result<Self> {
        let Some(first) = orders.first() else {
            return Err(Error::InvalidOrder(
                "order vector needs at least one voter".into(),
            ));
        };
        let m = first.m();
        if let Some(bad) = orders.iter().find(|o| o.m() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.m(),
            });
        }
        Ok(OrderVector(orders))
    }

    /// The same order for every voter.
    pub fn uniform(order: PresentationOrder, n: usize) -> Self {
        OrderVector(vec![order; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn m(&self) -> usize {
        self.0[0].m()
    }

    pub fn orders(&self) -> &[PresentationOrder] {
        &self.0
    }

    pub fn order(&self, i: usize) -> &PresentationOrder {
        &self.0[i]
    }
}

/// One approval ballot per voter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotProfile {
    m: usize,
    ballots: Vec<ApprovalBallot>,
}

impl BallotProfile {
    /// Every ballot must be a nonempty subset of `0..m`.
    pub fn new(m: usize, ballots: Vec<ApprovalBallot>) -> Result<Self> {
        if !(2..=MAX_ALTERNATIVES).contains(&m) {
            return Err(Error::InvalidAlternatives(format!("m = {m} out of range")));
        }
        if ballots.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        for (i, b) in ballots.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::EmptyBallot { voter: i + 1 });
            }
            if !b.is_subset(AltSet::full(m)) {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: b.iter().max().map_or(0, |x| x as usize + 1),
                });
            }
        }
        Ok(BallotProfile { m, ballots })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.ballots.len()
    }

    pub fn ballots(&self) -> &[ApprovalBallot] {
        &self.ballots
    }
}
