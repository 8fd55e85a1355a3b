//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use episturmian::episturmian::{GeneratorState, WordCap};
use episturmian::words::{palindromic_closure, FiniteWord, Letter, Witness};

pub fn l(id: u32) -> Letter {
    Letter::from_id(id)
}

pub fn word(ids: &[u32]) -> FiniteWord {
    FiniteWord::from_ids(ids).unwrap()
}

fn count(w: &[Letter], start: usize, len: usize, a: Letter) -> i64 {
    w[start..start + len].iter().filter(|&&x| x == a).count() as i64
}

/// The first imbalance by brute force over every pair of windows:
/// smallest length, then smallest `(i, j)` with `i < j`, then smallest
/// letter. Returns `(length, i, j, letter)`.
pub fn brute_force_witness(w: &[Letter], max_len: usize) -> Option<(usize, usize, usize, Letter)> {
    let mut letters = w.to_vec();
    letters.sort();
    letters.dedup();
    for n in 1..=max_len.min(w.len()) {
        for i in 0..=w.len() - n {
            for j in i + 1..=w.len() - n {
                for &a in &letters {
                    if (count(w, i, n, a) - count(w, j, n, a)).abs() >= 2 {
                        return Some((n, i, j, a));
                    }
                }
            }
        }
    }
    None
}

/// Whether a reported witness is exactly the brute-force one.
pub fn same_witness(w: &Witness, oracle: (usize, usize, usize, Letter)) -> bool {
    let (n, i, j, a) = oracle;
    let mut pos = [w.heavy_position, w.light_position];
    pos.sort();
    w.length == n && pos == [i, j] && w.letter == a
}

/// Shortest palindrome with prefix `w`, by trying every length.
pub fn shortest_palindrome_extension(w: &[Letter]) -> FiniteWord {
    for k in 0..=w.len() {
        // w followed by the reversal of its first k letters.
        let mut cand = w.to_vec();
        cand.extend(w[..k].iter().rev());
        if cand.iter().eq(cand.iter().rev()) {
            return cand.into();
        }
    }
    unreachable!("k = |w| always gives a palindrome")
}

/// Visit every word over `1..=alphabet` of length `0..=max_len` in
/// depth-first order, carrying a user state along the prefix tree.
pub fn for_each_word<S: Clone>(
    alphabet: u32,
    max_len: usize,
    root: S,
    step: &impl Fn(&S, Letter) -> S,
    visit: &mut impl FnMut(&[Letter], &S),
) {
    fn go<S: Clone>(
        cur: &mut Vec<Letter>,
        state: &S,
        alphabet: u32,
        max_len: usize,
        step: &impl Fn(&S, Letter) -> S,
        visit: &mut impl FnMut(&[Letter], &S),
    ) {
        visit(cur, state);
        if cur.len() == max_len {
            return;
        }
        for id in 1..=alphabet {
            let x = Letter::from_id(id);
            let next = step(state, x);
            cur.push(x);
            go(cur, &next, alphabet, max_len, step, visit);
            cur.pop();
        }
    }
    go(&mut Vec::new(), &root, alphabet, max_len, step, visit);
}

/// Pair of (naive closure, incremental generator) carried down the prefix tree.
#[derive(Clone)]
pub struct PalPair {
    pub naive: FiniteWord,
    pub incremental: GeneratorState,
}

pub fn pal_pair_root() -> PalPair {
    PalPair {
        naive: FiniteWord::empty(),
        incremental: GeneratorState::new(),
    }
}

pub fn pal_pair_step(s: &PalPair, x: Letter) -> PalPair {
    let mut ux = s.naive.clone();
    ux.push(x);
    let mut inc = s.incremental.clone();
    inc.step(x, WordCap::DEFAULT).unwrap();
    PalPair {
        naive: palindromic_closure(&ux),
        incremental: inc,
    }
}
