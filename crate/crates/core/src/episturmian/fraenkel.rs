use num_rational::Ratio;

use super::generator::WordCap;
use crate::error::{Error, Result};
use crate::words::{FiniteWord, Frequencies, Letter};

/// `Fr_k = Fr_{k−1} · k · Fr_{k−1}` with `Fr_1 = 1`, so `Fr_2 = 121` and
/// `Fr_3 = 1213121`. `|Fr_k| = 2^k − 1`.
pub fn fraenkel_word(k: usize, cap: WordCap) -> Result<FiniteWord> {
    if k == 0 {
        return Err(Error::OutOfRange("Fraenkel words start at k = 1".into()));
    }
    let len = 1usize
        .checked_shl(k as u32)
        .filter(|&p| p != 0)
        .map(|p| p - 1)
        .unwrap_or(usize::MAX);
    cap.check(len)?;
    let mut fr = Vec::with_capacity(len);
    for i in 1..=k {
        let prev = fr.len();
        fr.push(Letter::from_id(i as u32));
        fr.extend_from_within(..prev);
    }
    Ok(fr.into())
}

/// Largest `k` for which `2^k − 1` fits the exact integer range used.
pub const MAX_CLOSED_FORM_K: usize = 63;

/// Letter `i ↦ 2^(k−i) / (2^k − 1)`: the letter frequencies of `Fr_k^ω`.
pub fn frequencies_closed_form(k: usize) -> Result<Frequencies> {
    if !(3..=MAX_CLOSED_FORM_K).contains(&k) {
        return Err(Error::OutOfRange(format!(
            "closed-form frequencies need 3 <= k <= {MAX_CLOSED_FORM_K}, got {k}"
        )));
    }
    let denom = (1u64 << k) - 1;
    Ok((1..=k)
        .map(|i| {
            (
                Letter::from_id(i as u32),
                Ratio::new(1u64 << (k - i), denom),
            )
        })
        .collect())
}
