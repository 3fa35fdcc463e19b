//! The social planner: information functions, possible worlds, strict
//! preferences over outcomes, and the optimal-strategy search.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::enumerate::{permutations, Budget, DomainFilter, OrderSpace, ProfileSpace};
use crate::error::{Error, Result};
use crate::model::{Alt, AltSet, Alternatives, OrderVector, Outcome, Profile};
use crate::rules::{nonempty_subsets, ApprovalRule};
use crate::table::OutcomeTable;
use crate::tally::tally_points;

/// What the planner observes about a profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfoFunction {
    Zero,
    AccPoints,
    AccSets,
    PlPoints,
    PlSets,
    Full,
    /// The profile up to renaming of alternatives.
    AltStructure,
    /// Only the thresholds of every voter.
    Thresholds,
}

impl InfoFunction {
    pub const ALL: [InfoFunction; 8] = [
        InfoFunction::Zero,
        InfoFunction::AccPoints,
        InfoFunction::AccSets,
        InfoFunction::PlPoints,
        InfoFunction::PlSets,
        InfoFunction::Full,
        InfoFunction::AltStructure,
        InfoFunction::Thresholds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InfoFunction::Zero => "zero",
            InfoFunction::AccPoints => "acc",
            InfoFunction::AccSets => "acc-sets",
            InfoFunction::PlPoints => "pl",
            InfoFunction::PlSets => "pl-sets",
            InfoFunction::Full => "full",
            InfoFunction::AltStructure => "alt-structure",
            InfoFunction::Thresholds => "thresholds",
        }
    }
}

impl fmt::Display for InfoFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InfoFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InfoFunction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown info function '{s}'")))
    }
}

/// The value of an information function on one profile.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InfoView {
    Nothing,
    /// Count per alternative.
    Points(Vec<u32>),
    /// Voter bitmask per alternative.
    Sets(Vec<u64>),
    Profile(Profile),
    Canonical(Profile),
    Thresholds(Vec<u8>),
}

fn voter_sets(
    profile: &Profile,
    include: impl Fn(&crate::model::PreferenceApproval, Alt) -> bool,
) -> Vec<u64> {
    (0..profile.m() as Alt)
        .map(|x| {
            profile
                .voters()
                .iter()
                .enumerate()
                .filter(|(_, p)| include(p, x))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

pub fn info_view(f: InfoFunction, profile: &Profile) -> InfoView {
    match f {
        InfoFunction::Zero => InfoView::Nothing,
        InfoFunction::AccPoints => InfoView::Points(tally_points(profile).acc),
        InfoFunction::PlPoints => InfoView::Points(tally_points(profile).plur),
        InfoFunction::AccSets => InfoView::Sets(voter_sets(profile, |p, x| p.is_acceptable(x))),
        InfoFunction::PlSets => InfoView::Sets(voter_sets(profile, |p, x| p.top() == x)),
        InfoFunction::Full => InfoView::Profile(profile.clone()),
        InfoFunction::AltStructure => InfoView::Canonical(canonical_relabel(profile).0),
        InfoFunction::Thresholds => InfoView::Thresholds(profile.thresholds()),
    }
}

/// The lexicographically smallest relabeling of `profile`, with the map
/// `x -> map[x]` producing it.
pub fn canonical_relabel(profile: &Profile) -> (Profile, Vec<Alt>) {
    permutations(profile.m())
        .into_iter()
        .map(|map| (profile.relabel(&map), map))
        .min()
        .expect("at least one permutation")
}

/// Every profile of the full domain with the same view as `profile`.
pub fn possible_worlds(f: InfoFunction, profile: &Profile, budget: Budget) -> Result<Vec<Profile>> {
    match f {
        InfoFunction::Full => return Ok(vec![profile.clone()]),
        InfoFunction::AltStructure => {
            let mut orbit: Vec<Profile> = permutations(profile.m())
                .iter()
                .map(|map| profile.relabel(map))
                .collect();
            orbit.sort();
            orbit.dedup();
            return Ok(orbit);
        }
        _ => {}
    }
    let space = ProfileSpace::new(profile.n(), profile.m(), DomainFilter::All, budget)?;
    let target = info_view(f, profile);
    Ok((0..space.len())
        .into_par_iter()
        .map(|i| space.profile(i))
        .filter(|p| info_view(f, p) == target)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Informativeness {
    FAtLeastG,
    GAtLeastF,
    Equal,
    Incomparable,
}

/// Two profiles sharing one function's view but not the other's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementWitness {
    pub first: Profile,
    pub second: Profile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformativenessVerdict {
    pub relation: Informativeness,
    /// Same `f` view, different `g` view: refutes `f >= g`.
    pub against_f: Option<RefinementWitness>,
    /// Same `g` view, different `f` view: refutes `g >= f`.
    pub against_g: Option<RefinementWitness>,
}

fn refinement_failure(
    coarse_key: &[InfoView],
    fine_key: &[InfoView],
    profiles: &[Profile],
) -> Option<RefinementWitness> {
    let mut seen: HashMap<&InfoView, usize> = HashMap::new();
    for (i, key) in coarse_key.iter().enumerate() {
        match seen.get(key) {
            Some(&j) if fine_key[j] != fine_key[i] => {
                return Some(RefinementWitness {
                    first: profiles[j].clone(),
                    second: profiles[i].clone(),
                })
            }
            Some(_) => {}
            None => {
                seen.insert(key, i);
            }
        }
    }
    None
}

/// Compares `f` and `g` by inclusion of possible-world sets over every
/// profile with `n` voters and `m` alternatives.
pub fn informativeness_cmp(
    f: InfoFunction,
    g: InfoFunction,
    n: usize,
    m: usize,
    budget: Budget,
) -> Result<InformativenessVerdict> {
    let space = ProfileSpace::new(n, m, DomainFilter::All, budget)?;
    let profiles: Vec<Profile> = space.iter().collect();
    let fv: Vec<InfoView> = profiles.par_iter().map(|p| info_view(f, p)).collect();
    let gv: Vec<InfoView> = profiles.par_iter().map(|p| info_view(g, p)).collect();
    let against_f = refinement_failure(&fv, &gv, &profiles);
    let against_g = refinement_failure(&gv, &fv, &profiles);
    let relation = match (&against_f, &against_g) {
        (None, None) => Informativeness::Equal,
        (None, Some(_)) => Informativeness::FAtLeastG,
        (Some(_), None) => Informativeness::GAtLeastF,
        (Some(_), Some(_)) => Informativeness::Incomparable,
    };
    Ok(InformativenessVerdict {
        relation,
        against_f,
        against_g,
    })
}

/// A strict ranking of all nonempty subsets of `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlannerPreference {
    m: usize,
    order: Vec<AltSet>,
    rank: Vec<u16>,
}

impl PlannerPreference {
    /// `order` lists every nonempty subset exactly once, best first.
    pub fn new(m: usize, order: Vec<AltSet>) -> Result<Self> {
        if !(2..=crate::model::MAX_ALTERNATIVES).contains(&m) || m > 12 {
            return Err(Error::InvalidPlannerPreference(format!(
                "unsupported m = {m}"
            )));
        }
        let full = AltSet::full(m);
        let total = full.bits() as usize;
        if order.len() != total {
            return Err(Error::InvalidPlannerPreference(format!(
                "expected {total} subsets, found {}",
                order.len()
            )));
        }
        let mut rank = vec![u16::MAX; total + 1];
        for (r, s) in order.iter().enumerate() {
            if s.is_empty() || !s.is_subset(full) {
                return Err(Error::InvalidPlannerPreference(format!(
                    "invalid subset {s:?}"
                )));
            }
            if rank[s.bits() as usize] != u16::MAX {
                return Err(Error::InvalidPlannerPreference(format!(
                    "subset {s:?} listed twice"
                )));
            }
            rank[s.bits() as usize] = r as u16;
        }
        Ok(PlannerPreference { m, order, rank })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Best first.
    pub fn order(&self) -> &[AltSet] {
        &self.order
    }

    /// 0 for the best subset.
    pub fn rank_of(&self, s: AltSet) -> usize {
        self.rank[s.bits() as usize] as usize
    }

    pub fn prefers(&self, a: AltSet, b: AltSet) -> bool {
        self.rank_of(a) < self.rank_of(b)
    }

    pub fn first(&self) -> AltSet {
        self.order[0]
    }
}

/// Compares the uniform lotteries over `a` and `b` lexicographically along
/// `ranking`: `Less` means `a` is better.
fn lottery_cmp(a: AltSet, b: AltSet, ranking: &[Alt]) -> std::cmp::Ordering {
    let (la, lb) = (a.len() as u64, b.len() as u64);
    for &x in ranking {
        let wa = if a.contains(x) { lb } else { 0 };
        let wb = if b.contains(x) { la } else { 0 };
        if wa != wb {
            return wb.cmp(&wa);
        }
    }
    std::cmp::Ordering::Equal
}

/// Lexicographic planner preference along `ranking` (best first).
///
/// A set is judged by the uniform chance it gives each alternative, read
/// from the best alternative down: for `a > b > c` this is
/// `{a} > {a,b} > {a,c} > {a,b,c} > {b} > {b,c} > {c}`.
pub fn lex_pref(ranking: &[Alt]) -> Result<PlannerPreference> {
    let m = ranking.len();
    crate::model::PresentationOrder::new(ranking.to_vec())?;
    let mut order = nonempty_subsets(m);
    order.sort_by(|&a, &b| lottery_cmp(a, b, ranking));
    PlannerPreference::new(m, order)
}

/// `{target}` first, the rest lexicographic along the index order.
pub fn singleton_first(target: Alt, m: usize) -> Result<PlannerPreference> {
    if target as usize >= m {
        return Err(Error::InvalidPlannerPreference(format!(
            "alternative {target} out of range"
        )));
    }
    let base = lex_pref(&(0..m as Alt).collect::<Vec<_>>())?;
    let first = AltSet::singleton(target);
    let mut order = vec![first];
    order.extend(base.order().iter().copied().filter(|&s| s != first));
    PlannerPreference::new(m, order)
}

/// Every strict ranking of nonempty subsets; only offered for `m <= 3`.
pub fn all_preferences(m: usize) -> Result<Vec<PlannerPreference>> {
    if m > 3 {
        return Err(Error::Unsupported(format!(
            "exhaustive planner preferences need m <= 3, got {m}"
        )));
    }
    let subsets = nonempty_subsets(m);
    subsets
        .iter()
        .copied()
        .permutations(subsets.len())
        .map(|order| PlannerPreference::new(m, order))
        .collect()
}

/// A source of planner preferences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrefFamily {
    Lex(Vec<Alt>),
    SingletonFirst(Alt),
    All,
    Given(PlannerPreference),
}

impl PrefFamily {
    /// `lex:<labels> | singleton-first:<label> | all`.
    pub fn parse(text: &str, alts: &Alternatives) -> Result<Self> {
        let lookup = |label: &str| {
            alts.index_of(label)
                .ok_or_else(|| Error::InvalidConfig(format!("unknown alternative '{label}'")))
        };
        match text.split_once(':') {
            None if text == "all" => Ok(PrefFamily::All),
            Some(("lex", ranking)) => {
                let labels: Vec<&str> = ranking
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .collect();
                let ranking = labels.into_iter().map(lookup).collect::<Result<Vec<_>>>()?;
                Ok(PrefFamily::Lex(ranking))
            }
            Some(("singleton-first", label)) => {
                Ok(PrefFamily::SingletonFirst(lookup(label.trim())?))
            }
            _ => Err(Error::InvalidConfig(format!(
                "unknown preference family '{text}'"
            ))),
        }
    }

    pub fn preferences(&self, m: usize) -> Result<Vec<PlannerPreference>> {
        match self {
            PrefFamily::Lex(r) => {
                if r.len() != m {
                    return Err(Error::DimensionMismatch {
                        expected: m,
                        found: r.len(),
                    });
                }
                Ok(vec![lex_pref(r)?])
            }
            PrefFamily::SingletonFirst(x) => Ok(vec![singleton_first(*x, m)?]),
            PrefFamily::All => all_preferences(m),
            PrefFamily::Given(p) => {
                if p.m() != m {
                    return Err(Error::DimensionMismatch {
                        expected: m,
                        found: p.m(),
                    });
                }
                Ok(vec![p.clone()])
            }
        }
    }
}

/// A world and order on which `sigma_star` does strictly better than `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Improvement {
    pub world: Profile,
    pub sigma: OrderVector,
    pub star_outcome: Outcome,
    pub other_outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimality {
    Optimal(Improvement),
    /// Some world has an order beating `sigma_star`.
    NotDominant {
        world: Profile,
        better: OrderVector,
        star_outcome: Outcome,
        better_outcome: Outcome,
    },
    /// `sigma_star` is never beaten but never beats anything either.
    NoStrictImprovement,
}

impl Optimality {
    pub fn is_optimal(&self) -> bool {
        matches!(self, Optimality::Optimal(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManipWitness {
    pub profile: Profile,
    pub preference: PlannerPreference,
    pub sigma_star: OrderVector,
    pub improvement: Improvement,
}

/// Outcome table over the possible worlds of one profile.
#[derive(Clone, Debug)]
pub struct WorldTable {
    worlds: Vec<Profile>,
    table: OutcomeTable,
    /// Some world has more than one outcome.
    contested: bool,
}

impl WorldTable {
    pub fn build<R: ApprovalRule + ?Sized>(
        rule: &R,
        f: InfoFunction,
        profile: &Profile,
        budget: Budget,
    ) -> Result<Self> {
        let worlds = possible_worlds(f, profile, budget)?;
        Self::from_worlds(rule, worlds, budget)
    }

    pub fn from_worlds<R: ApprovalRule + ?Sized>(
        rule: &R,
        worlds: Vec<Profile>,
        budget: Budget,
    ) -> Result<Self> {
        let first = worlds
            .first()
            .ok_or_else(|| Error::InvalidConfig("empty world set".into()))?;
        let orders = OrderSpace::new(first.n(), first.m(), budget)?;
        budget.check(worlds.len() as u128 * orders.len() as u128)?;
        let table = OutcomeTable::build(rule, &worlds, orders)?;
        let contested =
            (0..table.rows()).any(|r| table.row(r).iter().any(|&o| o != table.get(r, 0)));
        Ok(WorldTable {
            worlds,
            table,
            contested,
        })
    }

    pub fn worlds(&self) -> &[Profile] {
        &self.worlds
    }

    pub fn orders(&self) -> &OrderSpace {
        self.table.orders()
    }

    /// Whether any strategy can ever strictly beat another.
    pub fn is_contested(&self) -> bool {
        self.contested
    }

    fn best_per_world(&self, pref: &PlannerPreference) -> Vec<Outcome> {
        (0..self.table.rows())
            .map(|r| {
                *self
                    .table
                    .row(r)
                    .iter()
                    .min_by_key(|&&o| pref.rank_of(o))
                    .expect("nonempty row")
            })
            .collect()
    }

    fn improvement(&self, col: usize) -> Option<Improvement> {
        (0..self.table.rows()).find_map(|r| {
            let star = self.table.get(r, col);
            let j = self.table.row(r).iter().position(|&o| o != star)?;
            Some(Improvement {
                world: self.worlds[r].clone(),
                sigma: self.orders().order_vector(j),
                star_outcome: star,
                other_outcome: self.table.get(r, j),
            })
        })
    }

    pub fn check(&self, pref: &PlannerPreference, sigma_star: &OrderVector) -> Result<Optimality> {
        let col = self
            .orders()
            .index_of(sigma_star)
            .ok_or(Error::LengthMismatch {
                expected: self.orders().n(),
                found: sigma_star.n(),
            })?;
        let best = self.best_per_world(pref);
        for (r, &b) in best.iter().enumerate() {
            let star = self.table.get(r, col);
            if star != b {
                let j = self
                    .table
                    .row(r)
                    .iter()
                    .position(|&o| o == b)
                    .expect("best is attained");
                return Ok(Optimality::NotDominant {
                    world: self.worlds[r].clone(),
                    better: self.orders().order_vector(j),
                    star_outcome: star,
                    better_outcome: b,
                });
            }
        }
        Ok(match self.improvement(col) {
            Some(imp) => Optimality::Optimal(imp),
            None => Optimality::NoStrictImprovement,
        })
    }

    /// First column that attains the best outcome in every world.
    pub fn first_optimal(&self, pref: &PlannerPreference) -> Option<(OrderVector, Improvement)> {
        if !self.contested {
            return None;
        }
        let best = self.best_per_world(pref);
        let col = (0..self.table.cols()).into_par_iter().find_first(|&c| {
            best.iter()
                .enumerate()
                .all(|(r, &b)| self.table.get(r, c) == b)
        })?;
        let imp = self.improvement(col).expect("contested table");
        Some((self.orders().order_vector(col), imp))
    }
}

pub fn is_optimal_strategy<R: ApprovalRule + ?Sized>(
    rule: &R,
    pref: &PlannerPreference,
    f: InfoFunction,
    profile: &Profile,
    sigma_star: &OrderVector,
    budget: Budget,
) -> Result<Optimality> {
    WorldTable::build(rule, f, profile, budget)?.check(pref, sigma_star)
}

pub fn find_optimal_strategy<R: ApprovalRule + ?Sized>(
    rule: &R,
    pref: &PlannerPreference,
    f: InfoFunction,
    profile: &Profile,
    budget: Budget,
) -> Result<Option<ManipWitness>> {
    let table = WorldTable::build(rule, f, profile, budget)?;
    Ok(witness_from(&table, profile, pref))
}

fn witness_from(
    table: &WorldTable,
    profile: &Profile,
    pref: &PlannerPreference,
) -> Option<ManipWitness> {
    table
        .first_optimal(pref)
        .map(|(sigma_star, improvement)| ManipWitness {
            profile: profile.clone(),
            preference: pref.clone(),
            sigma_star,
            improvement,
        })
}

/// First preference of `prefs` for which the planner can manipulate on
/// `profile`.
pub fn search_manipulation<R: ApprovalRule + ?Sized>(
    rule: &R,
    f: InfoFunction,
    profile: &Profile,
    prefs: &[PlannerPreference],
    budget: Budget,
) -> Result<Option<ManipWitness>> {
    let table = WorldTable::build(rule, f, profile, budget)?;
    if !table.is_contested() {
        return Ok(None);
    }
    Ok(prefs
        .par_iter()
        .find_map_first(|pref| witness_from(&table, profile, pref)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{PreferenceApproval, PresentationOrder};
    use crate::rules::RuleId;

    fn pa(r: &[u8], t: usize) -> PreferenceApproval {
        PreferenceApproval::new(r.to_vec(), t).unwrap()
    }

    fn set(xs: &[u8]) -> AltSet {
        AltSet::from_alts(xs.iter().copied())
    }

    #[test]
    fn lex_chain_three() {
        let p = lex_pref(&[0, 1, 2]).unwrap();
        let expected = vec![
            set(&[0]),
            set(&[0, 1]),
            set(&[0, 2]),
            set(&[0, 1, 2]),
            set(&[1]),
            set(&[1, 2]),
            set(&[2]),
        ];
        assert_eq!(p.order(), expected.as_slice());
    }

    #[test]
    fn lex_chain_two_and_reversal() {
        assert_eq!(
            lex_pref(&[0, 1]).unwrap().order(),
            &[set(&[0]), set(&[0, 1]), set(&[1])]
        );
        let rev = lex_pref(&[2, 1, 0]).unwrap();
        assert!(rev.prefers(set(&[2]), set(&[1])) && rev.prefers(set(&[1]), set(&[0])));
    }

    #[test]
    fn preference_validation() {
        assert!(PlannerPreference::new(2, vec![set(&[0]), set(&[1])]).is_err());
        assert!(PlannerPreference::new(2, vec![set(&[0]), set(&[0]), set(&[1])]).is_err());
        assert_eq!(all_preferences(3).unwrap().len(), 5040);
        assert!(all_preferences(4).is_err());
        let s = singleton_first(2, 3).unwrap();
        assert_eq!(s.first(), set(&[2]));
        assert_eq!(s.order()[1], set(&[0]));
    }

    #[test]
    fn views_and_worlds() {
        let p = Profile::new(vec![pa(&[0, 1, 2], 2), pa(&[1, 0, 2], 1)]).unwrap();
        assert_eq!(
            info_view(InfoFunction::AccPoints, &p),
            InfoView::Points(vec![1, 2, 0])
        );
        assert_eq!(
            possible_worlds(InfoFunction::Full, &p, Budget::DEFAULT).unwrap(),
            vec![p.clone()]
        );
        assert_eq!(
            possible_worlds(InfoFunction::Zero, &p, Budget::DEFAULT)
                .unwrap()
                .len(),
            324
        );
        let orbit = possible_worlds(InfoFunction::AltStructure, &p, Budget::DEFAULT).unwrap();
        let filtered: Vec<Profile> = ProfileSpace::new(2, 3, DomainFilter::All, Budget::DEFAULT)
            .unwrap()
            .iter()
            .filter(|q| {
                info_view(InfoFunction::AltStructure, q)
                    == info_view(InfoFunction::AltStructure, &p)
            })
            .collect();
        assert_eq!(orbit, filtered);
        assert_eq!(orbit.len(), 6);
    }

    #[test]
    fn canonical_forms() {
        let p = Profile::new(vec![pa(&[2, 0, 1], 2), pa(&[1, 2, 0], 1)]).unwrap();
        let swapped = p.relabel(&[1, 0, 2]);
        assert_eq!(canonical_relabel(&p).0, canonical_relabel(&swapped).0);
        let (c, map) = canonical_relabel(&p);
        assert_eq!(p.relabel(&map), c);
        let q = Profile::new(vec![pa(&[2, 0, 1], 1), pa(&[1, 2, 0], 1)]).unwrap();
        assert_ne!(canonical_relabel(&q).0, c);
    }

    #[test]
    fn full_information_on_anchor_proof_profile() {
        let p = Profile::new(vec![pa(&[0, 1, 2], 1), pa(&[1, 0, 2], 1)]).unwrap();
        let pref = lex_pref(&[0, 1, 2]).unwrap();
        let sigma = OrderVector::uniform(PresentationOrder::identity(3), 2);
        let v = is_optimal_strategy(
            &RuleId::Sav,
            &pref,
            InfoFunction::Full,
            &p,
            &sigma,
            Budget::DEFAULT,
        )
        .unwrap();
        assert_eq!(v, Optimality::NoStrictImprovement);
        assert!(find_optimal_strategy(
            &RuleId::Sav,
            &pref,
            InfoFunction::Full,
            &p,
            Budget::DEFAULT
        )
        .unwrap()
        .is_none());
    }

    #[test]
    fn full_information_manipulation() {
        let p = Profile::new(vec![pa(&[0, 1, 2], 3), pa(&[1, 0, 2], 3)]).unwrap();
        let pref = singleton_first(0, 3).unwrap();
        let w = find_optimal_strategy(&RuleId::Sav, &pref, InfoFunction::Full, &p, Budget::DEFAULT)
            .unwrap()
            .unwrap();
        let again = is_optimal_strategy(
            &RuleId::Sav,
            &pref,
            InfoFunction::Full,
            &p,
            &w.sigma_star,
            Budget::DEFAULT,
        )
        .unwrap();
        assert!(again.is_optimal());
        assert_eq!(w.improvement.star_outcome, set(&[0]));
    }

    #[test]
    fn family_parsing() {
        let alts = Alternatives::default_labels(3).unwrap();
        assert_eq!(
            PrefFamily::parse("lex:c,a,b", &alts).unwrap(),
            PrefFamily::Lex(vec![2, 0, 1])
        );
        assert_eq!(
            PrefFamily::parse("singleton-first:b", &alts).unwrap(),
            PrefFamily::SingletonFirst(1)
        );
        assert_eq!(PrefFamily::parse("all", &alts).unwrap(), PrefFamily::All);
        assert!(PrefFamily::parse("lex:a,z,b", &alts).is_err());
    }
}
