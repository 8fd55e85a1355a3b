use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::periodic::{canonicalize, split_head_tail};
use crate::words::word::render_letters;
use crate::words::{FiniteWord, Letter};

/// A directive sequence `head · tail^ω`, or the finite directive word `head`
/// when `tail` is empty. Always held in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DirectiveSpec {
    head: FiniteWord,
    tail: FiniteWord,
}

impl DirectiveSpec {
    pub fn new(head: FiniteWord, tail: FiniteWord) -> Self {
        let mut h = head.into_letters();
        let mut t = tail.into_letters();
        canonicalize(&mut h, &mut t);
        DirectiveSpec {
            head: h.into(),
            tail: t.into(),
        }
    }

    pub fn finite(word: FiniteWord) -> Self {
        DirectiveSpec {
            head: word,
            tail: FiniteWord::empty(),
        }
    }

    pub fn head(&self) -> &FiniteWord {
        &self.head
    }

    pub fn tail(&self) -> &FiniteWord {
        &self.tail
    }

    pub fn is_infinite(&self) -> bool {
        !self.tail.is_empty()
    }

    /// The single letter `α` when the directive is `head · α^ω`.
    pub fn single_tail_letter(&self) -> Option<Letter> {
        match &self.tail[..] {
            [a] => Some(*a),
            _ => None,
        }
    }

    /// Directive letter `x_{i+1}`, or `None` past the end of a finite word.
    pub fn letter_at(&self, i: usize) -> Option<Letter> {
        let h = self.head.len();
        if i < h {
            Some(self.head[i])
        } else if self.tail.is_empty() {
            None
        } else {
            Some(self.tail[(i - h) % self.tail.len()])
        }
    }

    /// The first `len` directive letters (fewer for a short finite word).
    pub fn directive_prefix(&self, len: usize) -> FiniteWord {
        (0..len).map_while(|i| self.letter_at(i)).collect()
    }

    /// `(Alph, Ult)`: all letters of the directive, and those occurring
    /// infinitely often.
    pub fn alph_ult(&self) -> (BTreeSet<Letter>, BTreeSet<Letter>) {
        let ult: BTreeSet<Letter> = self.tail.iter().copied().collect();
        let mut alph = ult.clone();
        alph.extend(self.head.iter().copied());
        (alph, ult)
    }

    /// `Ult = Alph`: every letter is directed infinitely often.
    pub fn is_strict(&self) -> bool {
        let (alph, ult) = self.alph_ult();
        alph == ult
    }

    pub fn alphabet_size(&self) -> usize {
        self.alph_ult().0.len()
    }

    /// Rename letters `1, 2, 3, …` in order of first occurrence along the
    /// directive. Returns the renamed spec and the map from old to new letters.
    pub fn normalized(&self) -> (DirectiveSpec, BTreeMap<Letter, Letter>) {
        let mut map = BTreeMap::new();
        for &l in self.head.iter().chain(self.tail.iter()) {
            let next = Letter::from_id(map.len() as u32 + 1);
            map.entry(l).or_insert(next);
        }
        let rename = |w: &FiniteWord| w.iter().map(|l| map[l]).collect::<FiniteWord>();
        let spec = DirectiveSpec {
            head: rename(&self.head),
            tail: rename(&self.tail),
        };
        (spec, map)
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized().0 == *self
    }
}

impl fmt::Display for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.head))?;
        if self.is_infinite() {
            write!(f, "({})", render_letters(&self.tail))?;
        }
        Ok(())
    }
}

impl FromStr for DirectiveSpec {
    type Err = Error;

    /// `HEAD(TAIL)` for `HEAD · TAIL^ω`; plain `HEAD` for a finite directive.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = split_head_tail(s)?;
        match tail {
            None => Ok(DirectiveSpec::finite(head.into())),
            Some(t) if t.is_empty() => Err(Error::Parse {
                input: s.to_string(),
                token: "()".to_string(),
                reason: "empty tail; omit the parentheses for a finite directive",
            }),
            Some(t) => Ok(DirectiveSpec::new(head.into(), t.into())),
        }
    }
}

impl From<DirectiveSpec> for String {
    fn from(s: DirectiveSpec) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for DirectiveSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn alph_ult(spec: &DirectiveSpec) -> (BTreeSet<Letter>, BTreeSet<Letter>) {
    spec.alph_ult()
}

pub fn is_strict(spec: &DirectiveSpec) -> bool {
    spec.is_strict()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> DirectiveSpec {
        s.parse().unwrap()
    }

    fn set(ids: &[u32]) -> BTreeSet<Letter> {
        ids.iter().map(|&i| Letter::from_id(i)).collect()
    }

    #[test]
    fn parse_and_canonicalize() {
        assert_eq!(spec("123(1)").to_string(), "123(1)");
        assert_eq!(spec("1233(3)").to_string(), "12(3)");
        assert_eq!(spec("(123123)").to_string(), "(123)");
        assert_eq!(spec("1(231)").to_string(), "(123)");
        assert_eq!(spec("12131").to_string(), "12131");
        assert!(!spec("12131").is_infinite());
        assert!("12()".parse::<DirectiveSpec>().is_err());
        assert!("12(3".parse::<DirectiveSpec>().is_err());
        assert!("12)".parse::<DirectiveSpec>().is_err());
    }

    #[test]
    fn alph_ult_examples() {
        assert_eq!(spec("123(1)").alph_ult(), (set(&[1, 2, 3]), set(&[1])));
        assert_eq!(spec("(123)").alph_ult(), (set(&[1, 2, 3]), set(&[1, 2, 3])));
        assert_eq!(spec("1").alph_ult(), (set(&[1]), set(&[])));
    }

    #[test]
    fn strictness() {
        assert!(is_strict(&spec("(123)")));
        assert!(!is_strict(&spec("123(1)")));
        assert!(is_strict(&spec("(1)")));
    }

    #[test]
    fn normalization() {
        let (n, map) = spec("3313(1)").normalized();
        assert_eq!(n.to_string(), "1121(2)");
        assert_eq!(map[&Letter::from_id(3)], Letter::from_id(1));
        assert!(n.is_normalized());
    }

    #[test]
    fn directive_letters() {
        let s = spec("12(34)");
        assert_eq!(s.directive_prefix(7).to_string(), "1234343");
        assert_eq!(spec("12").directive_prefix(7).to_string(), "12");
    }
}
