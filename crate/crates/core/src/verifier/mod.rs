//! Exhaustive desk-scale checks of the combinatorial claims about balanced
//! episturmian words.
//!
//! Every check enumerates directive sequences within an
//! [`EnumerationConfig`], verifies instances in parallel and folds the
//! outcomes, in enumeration order, into a [`VerificationReport`].

pub mod claims;
pub mod enumerate;
pub mod report;
pub mod theorem;

pub use claims::{
    verify_unbalance_witnesses, violation, Pattern, Shape, Slot, Violation, UNBALANCE_CLAIMS,
};
pub use enumerate::{enumerate_specs, EnumerationConfig, TailMode};
pub use report::{Disagreement, Evidence, Outcome, VerificationReport};
pub use theorem::{
    periodic_class_key, verify_fraenkel_episturmian, verify_periodicity, verify_theorem_families,
};

use crate::error::{Error, Result};

/// Alphabet sizes covered by the default uniqueness check.
pub const FRAENKEL_DEFAULT_KS: std::ops::RangeInclusive<usize> = 3..=5;

/// Every claim id, in the order `verify all` runs them.
pub const ALL_CLAIMS: [&str; 10] = [
    "first-repeated-letter",
    "repeat-not-first-letter",
    "leading-ones-run",
    "second-repeat",
    "no-third-one",
    "distinct-after-second-one",
    "ones-tail",
    "theorem-families",
    "periodicity",
    "fraenkel-episturmian",
];

/// Run one claim by id.
pub fn verify_claim(claim: &str, cfg: &EnumerationConfig) -> Result<VerificationReport> {
    match claim {
        "theorem-families" => verify_theorem_families(cfg),
        "periodicity" => verify_periodicity(cfg),
        "fraenkel-episturmian" => verify_fraenkel_episturmian(FRAENKEL_DEFAULT_KS, cfg),
        c if UNBALANCE_CLAIMS.contains(&c) => verify_unbalance_witnesses(c, cfg),
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}
