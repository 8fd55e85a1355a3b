use super::word::{FiniteWord, Letter};

pub fn reversal(w: &[Letter]) -> FiniteWord {
    w.iter().rev().copied().collect()
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    let n = w.len();
    (0..n / 2).all(|i| w[i] == w[n - 1 - i])
}

/// Prefix-function (failure function) of `s`: `pi[i]` is the length of the
/// longest proper border of `s[..=i]`.
pub(crate) fn prefix_function<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut pi = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// Length of the longest palindromic suffix of `w`, in linear time.
///
/// The longest palindromic suffix is the longest prefix of the reversal of
/// `w` that is also a suffix of `w`, read off the failure function of
/// `rev(w) # w`.
pub fn longest_palindromic_suffix(w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    let s: Vec<u32> = w
        .iter()
        .rev()
        .map(|l| l.id())
        .chain(std::iter::once(0))
        .chain(w.iter().map(|l| l.id()))
        .collect();
    *prefix_function(&s).last().unwrap()
}

/// Shortest palindrome having `w` as a prefix.
pub fn palindromic_closure(w: &[Letter]) -> FiniteWord {
    let lps = longest_palindromic_suffix(w);
    let head = &w[..w.len() - lps];
    let mut out = Vec::with_capacity(2 * w.len() - lps);
    out.extend_from_slice(w);
    out.extend(head.iter().rev());
    FiniteWord::new(out)
}
