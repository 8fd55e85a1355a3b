//! Factor sets, special factors and factor complexity.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::palindrome::reversal;
use super::periodic::EventuallyPeriodicWord;
use super::word::{FiniteWord, Letter};
use crate::error::{Error, Result};

pub type FactorSet = BTreeSet<FiniteWord>;

/// Distinct length-`n` factors of `w`. Empty when `n > |w|`.
pub fn factor_set(w: &[Letter], n: usize) -> FactorSet {
    if n > w.len() {
        return FactorSet::new();
    }
    if n == 0 {
        return std::iter::once(FiniteWord::empty()).collect();
    }
    w.windows(n).map(FiniteWord::from).collect()
}

/// Factor sets `F_0 ..= F_max` of one word.
///
/// `exact` is false when the sets were read off a bounded prefix of an
/// infinite word with no guarantee that every factor occurs in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorFamily {
    sets: Vec<FactorSet>,
    exact: bool,
}

impl FactorFamily {
    /// Exact factor sets of a finite word.
    pub fn of_finite(w: &[Letter], max_n: usize) -> Self {
        FactorFamily {
            sets: (0..=max_n).map(|n| factor_set(w, n)).collect(),
            exact: true,
        }
    }

    /// Exact factor sets of an eventually periodic word: every length-`n`
    /// factor starts before `|preperiod| + |period|`.
    pub fn of_periodic(w: &EventuallyPeriodicWord, max_n: usize) -> Self {
        let starts = w.preperiod().len() + w.period().len();
        let prefix = w.prefix(starts + max_n);
        let sets = (0..=max_n)
            .map(|n| (0..starts).map(|i| prefix.factor(i, n)).collect())
            .collect();
        FactorFamily { sets, exact: true }
    }

    /// Factor sets read off a finite prefix of an infinite word. Factors
    /// that end at the very end of the prefix are counted, so the sets only
    /// approximate the infinite word's and the family is flagged inexact.
    pub fn of_prefix(prefix: &[Letter], max_n: usize) -> Self {
        FactorFamily {
            exact: false,
            ..Self::of_finite(prefix, max_n)
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn max_n(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&FactorSet> {
        self.sets.get(n).ok_or(Error::FactorsNotComputed {
            computed: self.max_n(),
            requested: n,
        })
    }
}

fn special_factors(
    family: &FactorFamily,
    n: usize,
    extend: impl Fn(&FiniteWord) -> (FiniteWord, Letter),
) -> Result<FactorSet> {
    let shorter = family.get(n)?;
    let longer = family.get(n + 1)?;
    let mut seen: std::collections::BTreeMap<FiniteWord, Letter> = Default::default();
    let mut special = FactorSet::new();
    for ext in longer {
        let (base, letter) = extend(ext);
        if !shorter.contains(&base) {
            continue;
        }
        match seen.get(&base) {
            Some(&first) if first != letter => {
                special.insert(base);
            }
            Some(_) => {}
            None => {
                seen.insert(base, letter);
            }
        }
    }
    Ok(special)
}

/// Length-`n` factors `f` with `fa`, `fb` both factors for some `a != b`.
pub fn right_special_factors(family: &FactorFamily, n: usize) -> Result<FactorSet> {
    special_factors(family, n, |ext| {
        let (&last, base) = ext.split_last().unwrap();
        (base.into(), last)
    })
}

/// Length-`n` factors `f` with `af`, `bf` both factors for some `a != b`.
pub fn left_special_factors(family: &FactorFamily, n: usize) -> Result<FactorSet> {
    special_factors(family, n, |ext| {
        let (&first, base) = ext.split_first().unwrap();
        (base.into(), first)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    /// `(n, p(n))` for `n = 1..=max_n`.
    pub values: Vec<(usize, usize)>,
    /// False when computed from a bounded prefix of an infinite word.
    pub exact: bool,
}

impl ComplexityProfile {
    pub fn get(&self, n: usize) -> Option<usize> {
        self.values.iter().find(|&&(m, _)| m == n).map(|&(_, p)| p)
    }
}

pub fn complexity(family: &FactorFamily, max_n: usize) -> Result<ComplexityProfile> {
    let values = (1..=max_n)
        .map(|n| family.get(n).map(|set| (n, set.len())))
        .collect::<Result<_>>()?;
    Ok(ComplexityProfile {
        values,
        exact: family.is_exact(),
    })
}

pub fn is_reversal_closed(factors: &FactorSet) -> bool {
    factors.iter().all(|f| factors.contains(&reversal(f)))
}
