//! Finite-word primitives and exact analysis of eventually periodic words.

pub mod balance;
pub mod factors;
pub mod palindrome;
pub mod parikh;
pub mod periodic;
pub mod word;

pub use balance::{balance_check_finite, balance_check_periodic, BalanceReport, Verdict, Witness};
pub use factors::{
    complexity, factor_set, is_reversal_closed, left_special_factors, right_special_factors,
    ComplexityProfile, FactorFamily, FactorSet,
};
pub use palindrome::{is_palindrome, longest_palindromic_suffix, palindromic_closure, reversal};
pub use parikh::{parikh, ParikhVector};
pub use periodic::{smallest_period, EventuallyPeriodicWord, Frequencies};
pub use word::{FiniteWord, Letter};
