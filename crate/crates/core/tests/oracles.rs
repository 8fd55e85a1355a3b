mod common;

use std::collections::BTreeSet;

use common::*;
use episturmian::episturmian::{pal, pal_naive, WordCap};
use episturmian::verifier::{enumerate_specs, EnumerationConfig, TailMode};
use episturmian::words::{
    balance_check_finite, balance_check_periodic, is_palindrome, palindromic_closure,
    EventuallyPeriodicWord, FiniteWord, Letter,
};
use proptest::prelude::*;

fn letters(alphabet: u32, max_len: usize) -> impl Strategy<Value = FiniteWord> {
    prop::collection::vec(1..=alphabet, 0..=max_len).prop_map(|ids| word(&ids))
}

#[test]
fn closure_matches_shortest_palindrome_exhaustively() {
    let mut checked = 0;
    for_each_word(3, 9, (), &|_, _| (), &mut |w, _| {
        assert_eq!(
            palindromic_closure(w),
            shortest_palindrome_extension(w),
            "{}",
            FiniteWord::from(w)
        );
        checked += 1;
    });
    assert_eq!(checked, (0..=9).map(|n| 3usize.pow(n)).sum::<usize>());
}

#[test]
fn incremental_pal_matches_naive_over_three_letters() {
    for_each_word(3, 8, pal_pair_root(), &pal_pair_step, &mut |w, s| {
        assert_eq!(
            s.incremental.current(),
            &s.naive[..],
            "{}",
            FiniteWord::from(w)
        );
    });
}

#[test]
fn balance_matches_brute_force_over_two_letters() {
    for_each_word(2, 12, (), &|_, _| (), &mut |w, _| {
        let report = balance_check_finite(w, w.len()).unwrap();
        match brute_force_witness(w, w.len()) {
            None => assert!(report.is_balanced(), "{}", FiniteWord::from(w)),
            Some(o) => assert!(
                same_witness(report.witness.as_ref().unwrap(), o),
                "{}",
                FiniteWord::from(w)
            ),
        }
    });
}

/// Independent count of specs up to renaming: key each raw directive by the
/// first-occurrence renaming of enough leading letters to pin it down.
fn count_by_renamed_prefix(alphabet: u32, max_head: usize, max_tail: usize) -> usize {
    let key_len = max_head + 2 * max_tail + 2;
    let mut keys = BTreeSet::new();
    for h in 0..=max_head {
        for t in 1..=max_tail {
            for_each_word(alphabet, h + t, (), &|_, _| (), &mut |w, _| {
                if w.len() != h + t {
                    return;
                }
                let (head, tail) = w.split_at(h);
                let seq: Vec<Letter> = (0..key_len)
                    .map(|i| if i < h { head[i] } else { tail[(i - h) % t] })
                    .collect();
                let mut seen: Vec<Letter> = Vec::new();
                let key: Vec<usize> = seq
                    .iter()
                    .map(|x| match seen.iter().position(|s| s == x) {
                        Some(p) => p,
                        None => {
                            seen.push(*x);
                            seen.len() - 1
                        }
                    })
                    .collect();
                keys.insert(key);
            });
        }
    }
    keys.len()
}

#[test]
fn enumeration_count_matches_independent_count() {
    for (alphabet, head, tail_mode, max_tail) in [
        (3, 3, TailMode::SingleLetter, 1),
        (3, 3, TailMode::PeriodicUpTo(2), 2),
        (4, 4, TailMode::PeriodicUpTo(3), 3),
    ] {
        let cfg = EnumerationConfig {
            max_alphabet: alphabet as usize,
            max_head_len: head,
            tail_mode,
            ..Default::default()
        };
        let specs = enumerate_specs(&cfg);
        assert_eq!(
            specs.len(),
            count_by_renamed_prefix(alphabet, head, max_tail),
            "{cfg:?}"
        );
        let distinct: BTreeSet<_> = specs.iter().map(|s| s.normalized().0).collect();
        assert_eq!(distinct.len(), specs.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn pal_rules_agree_on_long_words(w in letters(6, 24)) {
        prop_assert_eq!(pal(&w, WordCap::DEFAULT).unwrap(), pal_naive(&w));
    }

    #[test]
    fn pal_is_a_palindrome_with_every_directive_prefix(w in letters(4, 12)) {
        let p = pal(&w, WordCap::DEFAULT).unwrap();
        prop_assert!(is_palindrome(&p));
        for i in 0..=w.len() {
            let shorter = pal(&w[..i], WordCap::DEFAULT).unwrap();
            prop_assert!(shorter.is_prefix_of(&p));
        }
    }

    #[test]
    fn closure_is_minimal(w in letters(4, 30)) {
        let c = palindromic_closure(&w);
        prop_assert!(is_palindrome(&c));
        prop_assert!(w.is_prefix_of(&c));
        prop_assert_eq!(c, shortest_palindrome_extension(&w));
    }

    #[test]
    fn balance_matches_brute_force(w in letters(4, 40)) {
        let report = balance_check_finite(&w, w.len()).unwrap();
        match brute_force_witness(&w, w.len()) {
            None => prop_assert!(report.is_balanced()),
            Some(o) => {
                let wit = report.witness.unwrap();
                prop_assert!(wit.is_valid() && wit.is_located_in(&w));
                prop_assert!(same_witness(&wit, o));
            }
        }
    }

    #[test]
    fn periodic_check_agrees_with_long_prefixes(
        pre in letters(3, 6),
        per in prop::collection::vec(1u32..=3, 1..=8),
    ) {
        let w = EventuallyPeriodicWord::new(pre, word(&per)).unwrap();
        let exact = balance_check_periodic(&w);
        // Far more than the exact check reads.
        let n = 4 * (w.preperiod().len() + 2 * w.period().len()) + 8;
        let prefix = w.prefix(n);
        let oracle = brute_force_witness(&prefix, n);
        prop_assert_eq!(exact.is_balanced(), oracle.is_none(), "{}", w);
        if let Some(wit) = exact.witness {
            prop_assert!(wit.is_valid());
            prop_assert!(wit.is_located_in(&prefix));
        }
    }
}
