//! Letters, finite words and their text format.
//!
//! Words over letters `1..=9` are written as digit strings (`1213121`). As
//! soon as a letter needs more than one digit the word is written with dots
//! between letters (`1.2.13.1`). A one-letter word in dotted form keeps a
//! trailing dot (`13.`) so it is not read back as two letters. The empty
//! word is the empty string.

use std::fmt;
use std::num::NonZeroU32;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the alphabet, identified by a positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
#[repr(transparent)]
pub struct Letter(NonZeroU32);

impl Letter {
    pub fn new(id: u32) -> Result<Self> {
        NonZeroU32::new(id)
            .map(Letter)
            .ok_or(Error::InvalidLetter(id as u64))
    }

    /// # Panics
    ///
    /// Panics if `id == 0`.
    pub const fn from_id(id: u32) -> Self {
        match NonZeroU32::new(id) {
            Some(n) => Letter(n),
            None => panic!("letter ids start at 1"),
        }
    }

    pub const fn id(self) -> u32 {
        self.0.get()
    }
}

impl TryFrom<u32> for Letter {
    type Error = Error;

    fn try_from(id: u32) -> Result<Self> {
        Letter::new(id)
    }
}

impl From<Letter> for u32 {
    fn from(l: Letter) -> u32 {
        l.id()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// A finite sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct FiniteWord(Vec<Letter>);

impl FiniteWord {
    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        FiniteWord(letters)
    }

    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        ids.iter().map(|&id| Letter::new(id)).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_slice(&mut self, letters: &[Letter]) {
        self.0.extend_from_slice(letters);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &[Letter]) -> FiniteWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        FiniteWord(v)
    }

    pub fn factor(&self, start: usize, len: usize) -> FiniteWord {
        FiniteWord(self.0[start..start + len].to_vec())
    }

    pub fn prefix(&self, len: usize) -> FiniteWord {
        FiniteWord(self.0[..len.min(self.len())].to_vec())
    }

    pub fn is_prefix_of(&self, other: &[Letter]) -> bool {
        other.starts_with(&self.0)
    }

    /// Distinct letters, sorted.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut a = self.0.clone();
        a.sort_unstable();
        a.dedup();
        a
    }

    /// Whether `needle` occurs as a contiguous factor.
    pub fn contains_factor(&self, needle: &[Letter]) -> bool {
        needle.is_empty() || self.0.windows(needle.len()).any(|w| w == needle)
    }
}

impl Deref for FiniteWord {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl IntoIterator for FiniteWord {
    type Item = Letter;
    type IntoIter = std::vec::IntoIter<Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a FiniteWord {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<Letter> for FiniteWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        FiniteWord(iter.into_iter().collect())
    }
}

impl From<Vec<Letter>> for FiniteWord {
    fn from(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }
}

impl From<&[Letter]> for FiniteWord {
    fn from(v: &[Letter]) -> Self {
        FiniteWord(v.to_vec())
    }
}

/// Render letters in the word text format.
pub fn render_letters(letters: &[Letter]) -> String {
    if letters.iter().all(|l| l.id() <= 9) {
        letters
            .iter()
            .map(|l| char::from(b'0' + l.id() as u8))
            .collect()
    } else {
        let mut s = letters
            .iter()
            .map(|l| l.id().to_string())
            .collect::<Vec<_>>()
            .join(".");
        if letters.len() == 1 {
            s.push('.');
        }
        s
    }
}

/// Parse the word text format. `context` is the full input, used in errors.
pub(crate) fn parse_letters(s: &str, context: &str) -> Result<Vec<Letter>> {
    let bad = |token: &str, reason| Error::Parse {
        input: context.to_string(),
        token: token.to_string(),
        reason,
    };
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains('.') {
        let body = s.strip_suffix('.').unwrap_or(s);
        body.split('.')
            .map(|tok| {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad(tok, "expected a decimal letter id"));
                }
                let id: u32 = tok
                    .parse()
                    .map_err(|_| bad(tok, "letter id out of range"))?;
                Letter::new(id).map_err(|_| bad(tok, "letter ids start at 1"))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| match c {
                '1'..='9' => Ok(Letter::from_id(c as u32 - '0' as u32)),
                '0' => Err(bad("0", "letter ids start at 1")),
                _ => Err(bad(&c.to_string(), "expected a digit 1-9")),
            })
            .collect()
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.0))
    }
}

impl FromStr for FiniteWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s.trim(), s).map(FiniteWord)
    }
}

impl From<FiniteWord> for String {
    fn from(w: FiniteWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for FiniteWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Convenience for tests and examples: parse a word literal, panicking on bad input.
pub fn w(s: &str) -> FiniteWord {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
