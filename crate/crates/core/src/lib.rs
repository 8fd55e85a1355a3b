//! Standard episturmian words built by iterated palindromic closure, exact
//! balance decisions with witnesses, and classification of directive
//! sequences into the three balanced families.
//!
//! * [`words`]: finite-word primitives, factor sets, Parikh vectors, balance
//!   checks, and eventually periodic words.
//! * [`episturmian`]: directive sequences, `Pal`, generation, the family
//!   classifier, closed forms and Fraenkel words.
//! * [`verifier`]: exhaustive desk-scale checks of the characterization.
//! * [`cli`]: the `epi` command-line front end.

pub mod cli;
pub mod episturmian;
pub mod error;
pub mod verifier;
pub mod words;

pub use error::{Error, Result};
