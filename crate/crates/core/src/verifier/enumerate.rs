use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::episturmian::{ClassifyConfig, DirectiveSpec, WordCap};
use crate::error::{Error, Result};
use crate::words::{FiniteWord, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailMode {
    SingleLetter,
    /// Primitive tails of every length `1..=max`.
    PeriodicUpTo(usize),
}

impl TailMode {
    fn max_len(self) -> usize {
        match self {
            TailMode::SingleLetter => 1,
            TailMode::PeriodicUpTo(m) => m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub max_alphabet: usize,
    pub max_head_len: usize,
    pub prefix_bound: usize,
    pub tail_mode: TailMode,
    #[serde(skip)]
    pub word_cap: WordCap,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_alphabet: 4,
            max_head_len: 6,
            prefix_bound: 10_000,
            tail_mode: TailMode::PeriodicUpTo(3),
            word_cap: WordCap::DEFAULT,
        }
    }
}

impl EnumerationConfig {
    pub fn single_letter_tails(self) -> Self {
        EnumerationConfig {
            tail_mode: TailMode::SingleLetter,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_alphabet == 0 || self.prefix_bound == 0 || self.tail_mode.max_len() == 0 {
            return Err(Error::OutOfRange(
                "enumeration bounds must be positive".into(),
            ));
        }
        self.word_cap.check(self.prefix_bound)
    }

    /// Classifier settings matching these bounds.
    pub fn classify_config(&self) -> ClassifyConfig {
        ClassifyConfig {
            prefix_bound: self.prefix_bound,
            word_cap: self.word_cap,
            ..ClassifyConfig::default()
        }
    }
}

/// Restricted growth strings: each letter is at most one more than the
/// largest letter before it, and at most `max_letter`.
fn restricted_growth(len: usize, max_letter: u32, out: &mut Vec<Vec<Letter>>) {
    fn go(cur: &mut Vec<Letter>, top: u32, len: usize, max: u32, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for id in 1..=(top + 1).min(max) {
            cur.push(Letter::from_id(id));
            go(cur, top.max(id), len, max, out);
            cur.pop();
        }
    }
    go(&mut Vec::with_capacity(len), 0, len, max_letter, out);
}

/// Every canonical infinite directive within the bounds, one per class of
/// letter renaming, in a fixed order.
pub fn enumerate_specs(cfg: &EnumerationConfig) -> Vec<DirectiveSpec> {
    let mut specs = BTreeSet::new();
    let mut words = Vec::new();
    for head_len in 0..=cfg.max_head_len {
        for tail_len in 1..=cfg.tail_mode.max_len() {
            words.clear();
            restricted_growth(head_len + tail_len, cfg.max_alphabet as u32, &mut words);
            for w in &words {
                let (head, tail) = w.split_at(head_len);
                specs.insert(DirectiveSpec::new(
                    FiniteWord::from(head),
                    FiniteWord::from(tail),
                ));
            }
        }
    }
    specs.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(cfg: &EnumerationConfig) -> Vec<String> {
        enumerate_specs(cfg).iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn tiny_enumeration() {
        let cfg = EnumerationConfig {
            max_alphabet: 2,
            max_head_len: 1,
            prefix_bound: 100,
            tail_mode: TailMode::SingleLetter,
            ..Default::default()
        };
        let mut t = texts(&cfg);
        t.sort();
        assert_eq!(t, ["(1)", "1(2)"]);
    }

    #[test]
    fn tribonacci_is_enumerated() {
        let cfg = EnumerationConfig {
            max_alphabet: 3,
            max_head_len: 0,
            prefix_bound: 100,
            tail_mode: TailMode::PeriodicUpTo(3),
            ..Default::default()
        };
        let t = texts(&cfg);
        assert!(t.contains(&"(123)".to_string()));
        assert!(t.contains(&"(12)".to_string()));
        assert!(!t.contains(&"(21)".to_string()));
    }

    #[test]
    fn emitted_specs_are_canonical_and_normalized() {
        for s in enumerate_specs(&EnumerationConfig::default()) {
            assert!(s.is_normalized(), "{s}");
            assert_eq!(DirectiveSpec::new(s.head().clone(), s.tail().clone()), s);
            assert!(s.is_infinite());
        }
    }

    #[test]
    fn invalid_config() {
        let cfg = EnumerationConfig {
            max_alphabet: 0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        assert!(EnumerationConfig::default().validate().is_ok());
    }
}
