//! Approval voting under an anchoring bias.
//!
//! Voters form approval ballots by walking through a presentation order and
//! approving an acceptable alternative only when it beats everything approved
//! so far. This crate generates such ballots, evaluates a registry of approval
//! rules, decides anchor-proofness by exhaustive enumeration, and searches for
//! order vectors a planner could use to steer the outcome.

pub mod anchor;
pub mod ballots;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod model;
pub mod planner;
pub mod ranked;
pub mod reproduce;
pub mod rules;
pub mod simulate;
pub mod suites;
pub mod table;
pub mod tally;

pub use error::{Error, Result};
pub use model::{
    Alt, AltSet, Alternatives, ApprovalBallot, BallotProfile, OrderVector, Outcome,
    PreferenceApproval, PresentationOrder, Profile,
};
pub use rules::{ApprovalRule, RuleId};
