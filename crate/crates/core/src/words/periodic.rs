use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::palindrome::prefix_function;
use super::parikh::parikh;
use super::word::{parse_letters, render_letters, FiniteWord, Letter};
use crate::error::{Error, Result};

/// Exact letter frequencies.
pub type Frequencies = BTreeMap<Letter, Ratio<u64>>;

/// Smallest period of a nonempty word (`|s|` minus its longest proper border).
pub fn smallest_period<T: PartialEq>(s: &[T]) -> usize {
    match prefix_function(s).last() {
        Some(&border) => s.len() - border,
        None => 0,
    }
}

/// Length of the primitive root of a nonempty word.
pub fn primitive_root_len<T: PartialEq>(s: &[T]) -> usize {
    let p = smallest_period(s);
    if p > 0 && s.len().is_multiple_of(p) {
        p
    } else {
        s.len()
    }
}

/// Reduce `preperiod · period^ω` to canonical form: primitive period, and
/// no trailing preperiod letter that could be absorbed into the period.
pub(crate) fn canonicalize(preperiod: &mut Vec<Letter>, period: &mut Vec<Letter>) {
    if period.is_empty() {
        return;
    }
    let root = primitive_root_len(period);
    period.truncate(root);
    while let (Some(&a), Some(&b)) = (preperiod.last(), period.last()) {
        if a != b {
            break;
        }
        preperiod.pop();
        period.rotate_right(1);
    }
}

/// An infinite word `preperiod · period^ω`, always held in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct EventuallyPeriodicWord {
    preperiod: FiniteWord,
    period: FiniteWord,
}

impl EventuallyPeriodicWord {
    pub fn new(preperiod: FiniteWord, period: FiniteWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut pre = preperiod.into_letters();
        let mut per = period.into_letters();
        canonicalize(&mut pre, &mut per);
        Ok(EventuallyPeriodicWord {
            preperiod: pre.into(),
            period: per.into(),
        })
    }

    pub fn purely_periodic(period: FiniteWord) -> Result<Self> {
        Self::new(FiniteWord::empty(), period)
    }

    pub fn preperiod(&self) -> &FiniteWord {
        &self.preperiod
    }

    pub fn period(&self) -> &FiniteWord {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    pub fn letter_at(&self, i: usize) -> Letter {
        let l = self.preperiod.len();
        if i < l {
            self.preperiod[i]
        } else {
            self.period[(i - l) % self.period.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> FiniteWord {
        (0..len).map(|i| self.letter_at(i)).collect()
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        self.preperiod.concat(&self.period).alphabet()
    }

    /// Frequency of each letter: its count in the period over the period length.
    pub fn frequencies(&self) -> Frequencies {
        let q = self.period.len() as u64;
        parikh(&self.period)
            .iter()
            .map(|(l, c)| (l, Ratio::new(c as u64, q)))
            .collect()
    }

    /// Rename letters by the bijection `f`.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Self {
        let pre = self.preperiod.iter().map(|&l| f(l)).collect();
        let per = self.period.iter().map(|&l| f(l)).collect();
        EventuallyPeriodicWord::new(pre, per).expect("period stays nonempty")
    }
}

impl fmt::Display for EventuallyPeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})",
            render_letters(&self.preperiod),
            render_letters(&self.period)
        )
    }
}

/// Split `HEAD(TAIL)`; input without parentheses has an empty tail.
pub(crate) fn split_head_tail(s: &str) -> Result<(Vec<Letter>, Option<Vec<Letter>>)> {
    let t = s.trim();
    match t.find('(') {
        None => {
            if let Some(pos) = t.find(')') {
                return Err(Error::Parse {
                    input: s.to_string(),
                    token: t[pos..pos + 1].to_string(),
                    reason: "unbalanced parenthesis",
                });
            }
            Ok((parse_letters(t, s)?, None))
        }
        Some(open) => {
            let rest = &t[open + 1..];
            let Some(body) = rest.strip_suffix(')') else {
                return Err(Error::Parse {
                    input: s.to_string(),
                    token: rest.to_string(),
                    reason: "expected the tail to end with ')'",
                });
            };
            if body.contains(['(', ')']) {
                return Err(Error::Parse {
                    input: s.to_string(),
                    token: body.to_string(),
                    reason: "nested parentheses",
                });
            }
            Ok((parse_letters(&t[..open], s)?, Some(parse_letters(body, s)?)))
        }
    }
}

impl FromStr for EventuallyPeriodicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match split_head_tail(s)? {
            (pre, Some(per)) if !per.is_empty() => Self::new(pre.into(), per.into()),
            _ => Err(Error::Parse {
                input: s.to_string(),
                token: s.to_string(),
                reason: "expected preperiod(period) with a nonempty period",
            }),
        }
    }
}

impl From<EventuallyPeriodicWord> for String {
    fn from(w: EventuallyPeriodicWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for EventuallyPeriodicWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
