//! Profile-level tallies: plurality and acceptability points.

use crate::model::{AltSet, Profile};

/// Per-alternative point counts, indexed by alternative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tally {
    pub plur: Vec<u32>,
    pub acc: Vec<u32>,
}

pub fn tally_points(profile: &Profile) -> Tally {
    let m = profile.m();
    let mut plur = vec![0u32; m];
    let mut acc = vec![0u32; m];
    for p in profile.voters() {
        plur[p.top() as usize] += 1;
        for &x in &p.ranking()[..p.threshold()] {
            acc[x as usize] += 1;
        }
    }
    Tally { plur, acc }
}

/// `PLUR(p)` and `ACC(p)`: alternatives with at least one plurality
/// (resp. acceptability) point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupportSets {
    pub plur: AltSet,
    pub acc: AltSet,
}

pub fn support_sets(profile: &Profile) -> SupportSets {
    profile.voters().iter().fold(
        SupportSets {
            plur: AltSet::EMPTY,
            acc: AltSet::EMPTY,
        },
        |s, p| SupportSets {
            plur: s.plur.with(p.top()),
            acc: s.acc.union(p.acceptable()),
        },
    )
}

/// Alternatives acceptable to every voter.
pub fn unanimously_accepted(profile: &Profile) -> AltSet {
    profile
        .voters()
        .iter()
        .fold(AltSet::full(profile.m()), |s, p| {
            s.intersection(p.acceptable())
        })
}
