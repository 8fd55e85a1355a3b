//! Iterated palindromic closure.

use std::collections::BTreeMap;

use super::directive::DirectiveSpec;
use crate::error::{Error, Result};
use crate::words::{palindromic_closure, EventuallyPeriodicWord, FiniteWord, Letter};

/// Upper bound on the length of any word the generators materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordCap(pub usize);

impl WordCap {
    pub const DEFAULT: WordCap = WordCap(10_000_000);

    pub fn check(self, requested: usize) -> Result<()> {
        if requested > self.0 {
            Err(Error::WordCap {
                requested,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for WordCap {
    fn default() -> Self {
        WordCap::DEFAULT
    }
}

/// The palindromic prefix `u_n` produced so far, plus for every letter `x`
/// already directed the length of the longest palindromic prefix of `u_n`
/// that is followed by `x`.
///
/// If `x` was last directed right after the prefix `w1` of the directive,
/// that palindromic prefix is `Pal(w1)`, and the next closure by `x` is
/// `u_n · Pal(w1)^{-1} · u_n`. A letter never directed gives `u_n x u_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorState {
    current: Vec<Letter>,
    followed_by: BTreeMap<Letter, usize>,
}

impl GeneratorState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn current(&self) -> &[Letter] {
        &self.current
    }

    pub fn into_word(self) -> FiniteWord {
        self.current.into()
    }

    /// Length of the longest palindromic prefix followed by `x`, if any.
    pub fn prefix_followed_by(&self, x: Letter) -> Option<usize> {
        self.followed_by.get(&x).copied()
    }

    /// Length of `u_{n+1}` if `x` were directed next.
    pub fn next_len(&self, x: Letter) -> usize {
        let n = self.current.len();
        match self.followed_by.get(&x) {
            Some(&p) => 2 * n - p,
            None => 2 * n + 1,
        }
    }

    /// Apply one closure step `u_{n+1} = (u_n x)^{(+)}`.
    pub fn step(&mut self, x: Letter, cap: WordCap) -> Result<()> {
        cap.check(self.next_len(x))?;
        let n = self.current.len();
        match self.followed_by.get(&x) {
            Some(&p) => self.current.extend_from_within(p..n),
            None => {
                self.current.push(x);
                self.current.extend_from_within(..n);
            }
        }
        self.followed_by.insert(x, n);
        Ok(())
    }
}

/// `Pal(w)` through the incremental rule.
pub fn pal(w: &[Letter], cap: WordCap) -> Result<FiniteWord> {
    let mut state = GeneratorState::new();
    for &x in w {
        state.step(x, cap)?;
    }
    Ok(state.into_word())
}

/// `Pal(w)` by repeated palindromic closure, rescanning for the longest
/// palindromic suffix at every step.
pub fn pal_naive(w: &[Letter]) -> FiniteWord {
    w.iter().fold(FiniteWord::empty(), |u, &x| {
        let mut ux = u;
        ux.push(x);
        palindromic_closure(&ux)
    })
}

/// The first palindromic prefix `u_n` of `Pal(spec)` with `|u_n| >= min_len`.
pub fn generate_prefix(spec: &DirectiveSpec, min_len: usize, cap: WordCap) -> Result<FiniteWord> {
    cap.check(min_len)?;
    let mut state = GeneratorState::new();
    let mut i = 0;
    while state.current().len() < min_len {
        match spec.letter_at(i) {
            Some(x) => state.step(x, cap)?,
            None => {
                return Err(Error::DirectiveExhausted {
                    available: state.current().len(),
                    requested: min_len,
                })
            }
        }
        i += 1;
    }
    Ok(state.into_word())
}

/// Purely periodic form `t^ω` of `Pal(head · α^ω)`, where `t` is
/// `Pal(head · α)` with its suffix `Pal(head)` removed.
pub fn to_periodic(spec: &DirectiveSpec, cap: WordCap) -> Result<EventuallyPeriodicWord> {
    let alpha = spec
        .single_tail_letter()
        .ok_or(Error::NotSingleLetterTail(spec.tail().len()))?;
    let mut state = GeneratorState::new();
    for &x in spec.head().iter() {
        state.step(x, cap)?;
    }
    let base = state.current().len();
    state.step(alpha, cap)?;
    let mut t = state.into_word();
    let keep = t.len() - base;
    t.truncate(keep);
    EventuallyPeriodicWord::purely_periodic(t)
}
