use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::word::Letter;

/// Letter counts of a finite word. Letters that do not occur are absent and
/// read as zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParikhVector {
    counts: BTreeMap<Letter, usize>,
}

impl ParikhVector {
    pub fn count(&self, letter: Letter) -> usize {
        self.counts.get(&letter).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, usize)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.counts.keys().copied()
    }
}

impl FromIterator<(Letter, usize)> for ParikhVector {
    fn from_iter<I: IntoIterator<Item = (Letter, usize)>>(iter: I) -> Self {
        ParikhVector {
            counts: iter.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }
}

pub fn parikh(w: &[Letter]) -> ParikhVector {
    let mut counts = BTreeMap::new();
    for &l in w {
        *counts.entry(l).or_insert(0) += 1;
    }
    ParikhVector { counts }
}
