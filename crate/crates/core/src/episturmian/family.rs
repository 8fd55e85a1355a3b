//! The three families of balanced standard episturmian words, and a
//! classifier for directive sequences.
//!
//! In letters renamed by first occurrence along the directive:
//!
//! * family A: `1^n 2 3 … (k−1) k^ω`, `n >= 1`;
//! * family B: `1 2 … (k−1) 1 k … (k+l−1) (k+l)^ω`;
//! * family C: `1 2 … k 1^ω`.
//!
//! Family B is reported with `k >= 3` and `l >= 0`. For `k = 2` its
//! directives coincide with family A at `n = 2`, and `l = 0` gives words
//! with the same factors as family C (`(Fr_{k−1} Fr_{k−1} k)^ω`, a
//! conjugate of `Fr_k^ω`).
//!
//! The family patterns only speak about alphabets of three or more
//! letters. Smaller alphabets are classified from the word itself.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::directive::DirectiveSpec;
use super::generator::{generate_prefix, pal, to_periodic, WordCap};
use crate::error::{Error, Result};
use crate::words::balance::{LengthRange, Verdict};
use crate::words::{
    balance_check_finite, balance_check_periodic, BalanceReport, EventuallyPeriodicWord,
    FiniteWord, Letter,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilyClass {
    FamilyA {
        n: usize,
        k: usize,
    },
    FamilyB {
        k: usize,
        l: usize,
    },
    FamilyC {
        k: usize,
    },
    /// Balanced, established by an exact check. Only reported for finite
    /// directives and for alphabets of at most two letters.
    Balanced,
    NotBalanced {
        witness: BalanceReport,
    },
    Unknown {
        searched: BalanceReport,
    },
}

impl FamilyClass {
    pub fn is_family(&self) -> bool {
        matches!(
            self,
            FamilyClass::FamilyA { .. } | FamilyClass::FamilyB { .. } | FamilyClass::FamilyC { .. }
        )
    }

    pub fn alphabet_size(&self) -> Option<usize> {
        match *self {
            FamilyClass::FamilyA { k, .. } | FamilyClass::FamilyC { k } => Some(k),
            FamilyClass::FamilyB { k, l } => Some(k + l),
            _ => None,
        }
    }

    /// Canonical directive of a family, in normalized letters.
    pub fn directive(&self) -> Result<DirectiveSpec> {
        self.validate()?;
        let l = |i: usize| Letter::from_id(i as u32);
        let run = |a: usize, b: usize| (a..=b).map(l).collect::<Vec<_>>();
        let (head, tail) = match *self {
            FamilyClass::FamilyA { n, k } => {
                let mut h = vec![l(1); n];
                h.extend(run(2, k - 1));
                (h, l(k))
            }
            FamilyClass::FamilyB { k, l: len } => {
                let mut h = run(1, k - 1);
                h.push(l(1));
                h.extend(run(k, k + len - 1));
                (h, l(k + len))
            }
            FamilyClass::FamilyC { k } => (run(1, k), l(1)),
            _ => unreachable!("validated above"),
        };
        Ok(DirectiveSpec::new(head.into(), vec![tail].into()))
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilyClass::FamilyA { n, k } if n < 1 || k < 3 => {
                bad(format!("family A needs n >= 1 and k >= 3, got n={n} k={k}"))
            }
            FamilyClass::FamilyB { k, l } if k < 3 => {
                bad(format!("family B needs k >= 3, got k={k} l={l}"))
            }
            FamilyClass::FamilyC { k } if k < 3 => bad(format!("family C needs k >= 3, got k={k}")),
            FamilyClass::FamilyA { .. }
            | FamilyClass::FamilyB { .. }
            | FamilyClass::FamilyC { .. } => Ok(()),
            _ => bad("not a family variant".to_string()),
        }
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyClass::FamilyA { n, k } => write!(f, "FamilyA n={n} k={k}"),
            FamilyClass::FamilyB { k, l } => write!(f, "FamilyB k={k} l={l}"),
            FamilyClass::FamilyC { k } => write!(f, "FamilyC k={k}"),
            FamilyClass::Balanced => write!(f, "Balanced"),
            FamilyClass::NotBalanced { witness } => match &witness.witness {
                Some(w) => write!(
                    f,
                    "NotBalanced witness={}/{} letter={} length={}",
                    w.heavy, w.light, w.letter, w.length
                ),
                None => write!(f, "NotBalanced"),
            },
            FamilyClass::Unknown { searched } => write!(
                f,
                "Unknown (no witness for lengths {}..={})",
                searched.checked_lengths.start, searched.checked_lengths.end
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    /// Minimum number of letters generated when searching for a witness.
    pub prefix_bound: usize,
    /// Longest factor examined by the witness search, unless the candidate
    /// period is longer.
    pub max_window: usize,
    pub word_cap: WordCap,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            prefix_bound: 10_000,
            max_window: 1_000,
            word_cap: WordCap::DEFAULT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub spec: DirectiveSpec,
    pub class: FamilyClass,
    /// False for alphabets of fewer than three letters, where the family
    /// patterns do not apply and the verdict comes from the word itself.
    pub in_theorem_scope: bool,
}

/// Match a normalized directive against the three family patterns.
pub fn match_family(normalized: &DirectiveSpec) -> Option<FamilyClass> {
    let alpha = normalized.single_tail_letter()?.id() as usize;
    let head: Vec<usize> = normalized.head().iter().map(|l| l.id() as usize).collect();
    let k = normalized.alphabet_size();
    if k < 3 {
        return None;
    }
    let ones = head.iter().take_while(|&&x| x == 1).count();
    let ascending = |s: &[usize], from: usize| s.iter().enumerate().all(|(i, &x)| x == from + i);

    if alpha == k && ones >= 1 && ascending(&head[ones..], 2) && head.len() - ones == k - 2 {
        return Some(FamilyClass::FamilyA { n: ones, k });
    }
    if alpha == 1 && head.len() == k && ascending(&head, 1) {
        return Some(FamilyClass::FamilyC { k });
    }
    // 1 2 … (m−1) 1 m … (k−1), tail k
    if alpha == k && ones == 1 {
        let second_one = head.iter().skip(1).position(|&x| x == 1)? + 1;
        let m = second_one + 1;
        if m >= 3
            && ascending(&head[..second_one], 1)
            && ascending(&head[second_one + 1..], m)
            && head.len() == k
        {
            return Some(FamilyClass::FamilyB { k: m, l: k - m });
        }
    }
    None
}

/// Classify a directive sequence.
pub fn classify(spec: &DirectiveSpec, cfg: &ClassifyConfig) -> Result<Classification> {
    let (normalized, _) = spec.normalized();
    let in_theorem_scope = normalized.alphabet_size() >= 3;
    let class = if !spec.is_infinite() {
        let word = pal(spec.head(), cfg.word_cap)?;
        let report = balance_check_finite(&word, word.len())?;
        if report.is_balanced() {
            FamilyClass::Balanced
        } else {
            FamilyClass::NotBalanced { witness: report }
        }
    } else if in_theorem_scope {
        match match_family(&normalized) {
            Some(fc) => fc,
            None => search_witness(spec, cfg)?,
        }
    } else if spec.single_tail_letter().is_some() {
        let report = balance_check_periodic(&to_periodic(spec, cfg.word_cap)?);
        if report.is_balanced() {
            FamilyClass::Balanced
        } else {
            FamilyClass::NotBalanced { witness: report }
        }
    } else {
        search_witness(spec, cfg)?
    };
    Ok(Classification {
        spec: spec.clone(),
        class,
        in_theorem_scope,
    })
}

/// Look for an imbalance in a generated prefix of `Pal(spec)`. The prefix is examined in
/// growing stages so short witnesses are found cheaply.
pub fn search_witness(spec: &DirectiveSpec, cfg: &ClassifyConfig) -> Result<FamilyClass> {
    let period = match spec.single_tail_letter() {
        Some(_) => to_periodic(spec, cfg.word_cap)?.period().len(),
        None => 0,
    };
    let bound = (10 * period).max(cfg.prefix_bound);
    let prefix = if spec.is_infinite() {
        generate_prefix(spec, bound, cfg.word_cap)?
    } else {
        pal(spec.head(), cfg.word_cap)?
    };
    let max_window = cfg.max_window.max(period);
    let mut len = 64usize.min(prefix.len());
    loop {
        let window = (len / 2).max(1).min(max_window).min(len);
        let report = balance_check_finite(&prefix[..len], window)?;
        if report.is_unbalanced() {
            return Ok(FamilyClass::NotBalanced { witness: report });
        }
        if len == prefix.len() {
            return Ok(FamilyClass::Unknown {
                searched: BalanceReport {
                    verdict: Verdict::Inconclusive,
                    witness: None,
                    checked_lengths: LengthRange {
                        start: 1,
                        end: window,
                    },
                },
            });
        }
        len = (len * 4).min(prefix.len());
    }
}

/// Closed-form periodic word of a family.
pub fn family_word(fc: &FamilyClass, cap: WordCap) -> Result<EventuallyPeriodicWord> {
    fc.validate()?;
    let l = |i: usize| Letter::from_id(i as u32);
    let run = |a: usize, b: usize| (a..=b).map(l).collect::<Vec<_>>();
    // p y p (z p y p)^ω
    let sandwich = |p: FiniteWord, y: Letter, z: Letter| {
        let pre = p.concat(&[y]).concat(&p);
        let per = FiniteWord::from(vec![z]).concat(&p).concat(&[y]).concat(&p);
        EventuallyPeriodicWord::new(pre, per)
    };
    match *fc {
        FamilyClass::FamilyA { n, k } => {
            let mut d = vec![l(1); n];
            d.extend(run(2, k - 2));
            sandwich(pal(&d, cap)?, l(k - 1), l(k))
        }
        FamilyClass::FamilyB { k, l: 0 } => {
            let fr = pal(&run(1, k - 1), cap)?;
            EventuallyPeriodicWord::purely_periodic(fr.concat(&fr).concat(&[l(k)]))
        }
        FamilyClass::FamilyB { k, l: len } => {
            let mut d = run(1, k - 1);
            d.push(l(1));
            d.extend(run(k, k + len - 2));
            sandwich(pal(&d, cap)?, l(k + len - 1), l(k + len))
        }
        FamilyClass::FamilyC { k } => {
            EventuallyPeriodicWord::purely_periodic(pal(&run(1, k), cap)?)
        }
        _ => unreachable!("validated above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> DirectiveSpec {
        s.parse().unwrap()
    }

    fn class_of(s: &str) -> FamilyClass {
        classify(&spec(s), &ClassifyConfig::default())
            .unwrap()
            .class
    }

    #[test]
    fn classify_examples() {
        assert_eq!(class_of("112(3)"), FamilyClass::FamilyA { n: 2, k: 3 });
        assert_eq!(class_of("1213(4)"), FamilyClass::FamilyB { k: 3, l: 1 });
        assert_eq!(class_of("123(1)"), FamilyClass::FamilyC { k: 3 });
        assert_eq!(class_of("12(3)"), FamilyClass::FamilyA { n: 1, k: 3 });
        assert_eq!(class_of("121(3)"), FamilyClass::FamilyB { k: 3, l: 0 });
        assert_eq!(class_of("11123(4)"), FamilyClass::FamilyA { n: 3, k: 4 });
        assert_eq!(class_of("123415(6)"), FamilyClass::FamilyB { k: 5, l: 1 });
        assert_eq!(class_of("1231456(7)"), FamilyClass::FamilyB { k: 4, l: 3 });
    }

    #[test]
    fn tribonacci_is_not_balanced() {
        let FamilyClass::NotBalanced { witness } = class_of("(123)") else {
            panic!("expected a witness");
        };
        let w = witness.witness.unwrap();
        assert_eq!(
            (w.heavy.to_string(), w.light.to_string()),
            ("212".into(), "131".into())
        );
        assert_eq!(w.letter, Letter::from_id(2));
    }

    #[test]
    fn finite_directives_are_decided_exactly() {
        let cfg = ClassifyConfig::default();
        assert_eq!(
            classify(&spec("123"), &cfg).unwrap().class,
            FamilyClass::Balanced
        );
        assert_eq!(
            classify(&spec("12"), &cfg).unwrap().class,
            FamilyClass::Balanced
        );
        let FamilyClass::NotBalanced { witness } = classify(&spec("1232"), &cfg).unwrap().class
        else {
            panic!("1232 is unbalanced");
        };
        assert!(witness.witness.unwrap().is_valid());
    }

    #[test]
    fn classification_uses_original_letters_for_witnesses() {
        let FamilyClass::NotBalanced { witness } = class_of("(321)") else {
            panic!("expected a witness");
        };
        assert!(witness.witness.unwrap().is_valid());
        assert_eq!(class_of("332(1)"), FamilyClass::FamilyA { n: 2, k: 3 });
    }

    #[test]
    fn small_alphabets_are_out_of_scope() {
        let c = classify(&spec("1(2)"), &ClassifyConfig::default()).unwrap();
        assert!(!c.in_theorem_scope);
        assert_eq!(c.class, FamilyClass::Balanced);
        assert_eq!(class_of("(1)"), FamilyClass::Balanced);
    }

    #[test]
    fn family_words_closed_forms() {
        let cap = WordCap::DEFAULT;
        assert_eq!(
            family_word(&FamilyClass::FamilyC { k: 3 }, cap)
                .unwrap()
                .to_string(),
            "(1213121)"
        );
        assert_eq!(
            family_word(&FamilyClass::FamilyC { k: 4 }, cap)
                .unwrap()
                .to_string(),
            "(121312141213121)"
        );
        for fc in [
            FamilyClass::FamilyA { n: 1, k: 3 },
            FamilyClass::FamilyA { n: 3, k: 5 },
            FamilyClass::FamilyB { k: 3, l: 0 },
            FamilyClass::FamilyB { k: 3, l: 2 },
            FamilyClass::FamilyB { k: 4, l: 1 },
            FamilyClass::FamilyC { k: 5 },
        ] {
            let closed = family_word(&fc, cap).unwrap();
            let dir = fc.directive().unwrap();
            assert_eq!(closed, to_periodic(&dir, cap).unwrap(), "{fc}");
            let pre = generate_prefix(&dir, 200, cap).unwrap();
            assert_eq!(closed.prefix(pre.len()), pre, "{fc}");
            assert_eq!(match_family(&dir), Some(fc));
        }
        assert_eq!(
            family_word(&FamilyClass::FamilyA { n: 1, k: 3 }, cap)
                .unwrap()
                .to_string(),
            "(1213)"
        );
    }

    #[test]
    fn invalid_parameters() {
        let cap = WordCap::DEFAULT;
        assert!(family_word(&FamilyClass::FamilyA { n: 0, k: 3 }, cap).is_err());
        assert!(family_word(&FamilyClass::FamilyC { k: 2 }, cap).is_err());
        assert!(family_word(&FamilyClass::FamilyB { k: 2, l: 1 }, cap).is_err());
        assert!(family_word(&FamilyClass::Balanced, cap).is_err());
    }
}
