//! Directive sequences and the standard episturmian words they generate.

pub mod directive;
pub mod family;
pub mod fraenkel;
pub mod generator;

pub use directive::{alph_ult, is_strict, DirectiveSpec};
pub use family::{
    classify, family_word, match_family, search_witness, Classification, ClassifyConfig,
    FamilyClass,
};
pub use fraenkel::{fraenkel_word, frequencies_closed_form};
pub use generator::{generate_prefix, pal, pal_naive, to_periodic, GeneratorState, WordCap};
