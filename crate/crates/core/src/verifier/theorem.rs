//! Checks of the classification, periodicity and uniqueness results.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::enumerate::{enumerate_specs, EnumerationConfig, TailMode};
use super::report::{Evidence, Outcome, VerificationReport};
use crate::episturmian::{
    classify, family_word, frequencies_closed_form, generate_prefix, match_family, to_periodic,
    DirectiveSpec, FamilyClass,
};
use crate::error::{Error, Result};
use crate::words::{balance_check_periodic, smallest_period, FiniteWord, Letter};

fn collect(
    claim: &str,
    specs: &[DirectiveSpec],
    check: impl Fn(&DirectiveSpec) -> Result<Option<Outcome>> + Sync + Send,
) -> Result<VerificationReport> {
    let outcomes: Vec<Option<Outcome>> = specs.par_iter().map(check).collect::<Result<_>>()?;
    let mut report = VerificationReport::new(claim, Evidence::Exhaustive);
    for (spec, o) in specs.iter().zip(outcomes) {
        match o {
            Some(o) => report.record(o, spec),
            None => report.skipped += 1,
        }
    }
    Ok(report)
}

/// Classifier verdicts against the balance of the generated word.
///
/// Directives over fewer than three letters are skipped: the family
/// patterns only speak about larger alphabets.
pub fn verify_theorem_families(cfg: &EnumerationConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let ccfg = cfg.classify_config();
    let specs = enumerate_specs(cfg);
    let mut report = collect("theorem-families", &specs, |spec| {
        if spec.alphabet_size() < 3 {
            return Ok(None);
        }
        let class = classify(spec, &ccfg)?.class;
        let outcome = match &class {
            fc if fc.is_family() => {
                let exact = balance_check_periodic(&to_periodic(spec, cfg.word_cap)?);
                if exact.is_balanced() {
                    Outcome::Agree
                } else {
                    Outcome::disagree(
                        spec,
                        format!("{fc} is balanced"),
                        "unbalanced by the exact check",
                    )
                }
            }
            FamilyClass::NotBalanced { witness } => {
                let Some(w) = &witness.witness else {
                    return Ok(Some(Outcome::disagree(spec, "witness", "none reported")));
                };
                let reach = w.heavy_position.max(w.light_position) + w.length;
                let prefix = generate_prefix(spec, reach, cfg.word_cap)?;
                if !(w.is_valid() && w.is_located_in(&prefix)) {
                    Outcome::disagree(spec, "valid witness", "witness does not recount")
                } else if spec.single_tail_letter().is_some()
                    && balance_check_periodic(&to_periodic(spec, cfg.word_cap)?).is_balanced()
                {
                    Outcome::disagree(spec, "not balanced", "balanced by the exact check")
                } else {
                    Outcome::Agree
                }
            }
            FamilyClass::Unknown { .. } => {
                Outcome::Unknown("no witness within the prefix bound".into())
            }
            other => Outcome::disagree(spec, "a family or a witness", other.to_string()),
        };
        Ok(Some(outcome))
    })?;
    if report.unknowns > 0 {
        report.evidence = Evidence::BoundedEvidence;
    }
    Ok(report.finish())
}

/// How many times the aperiodicity prefix may double past the bound.
const APERIODIC_DOUBLINGS: u32 = 4;

/// Rule out every period `<= max_period` of the infinite word. A period of
/// the word is a period of each of its prefixes, so one prefix whose
/// smallest period exceeds `max_period` is enough. Prefixes of aperiodic
/// episturmian words can repeat a block more than three times, so the
/// prefix grows from `prefix_bound` by doubling. Returns the prefix length
/// used, or the smallest period of the longest prefix tried.
fn short_period_refuted(
    spec: &DirectiveSpec,
    max_period: usize,
    cfg: &EnumerationConfig,
) -> Result<std::result::Result<usize, usize>> {
    let longest = cfg.prefix_bound << APERIODIC_DOUBLINGS;
    let prefix = generate_prefix(spec, longest.min(cfg.word_cap.0), cfg.word_cap)?;
    let mut len = cfg.prefix_bound;
    loop {
        let p = smallest_period(&prefix[..len]);
        if p > max_period {
            return Ok(Ok(len));
        }
        if len >= longest || len >= prefix.len() {
            return Ok(Err(p));
        }
        len = (2 * len).min(prefix.len());
    }
}

/// Periodic form against generation for `w α^ω`, and absence of short
/// periods in long prefixes for every other tail.
pub fn verify_periodicity(cfg: &EnumerationConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let specs = enumerate_specs(cfg);
    let bound = cfg.prefix_bound;
    let mut report = collect("periodicity", &specs, |spec| {
        let outcome = if spec.single_tail_letter().is_some() {
            let periodic = to_periodic(spec, cfg.word_cap)?;
            let n = 5 * periodic.period().len();
            let generated = generate_prefix(spec, n, cfg.word_cap)?;
            if generated[..n] == periodic.prefix(n)[..] {
                Outcome::Agree
            } else {
                Outcome::disagree(
                    spec,
                    format!("period {}", periodic.period()),
                    "generated prefix differs",
                )
            }
        } else if let Some(fc) = match_family(&spec.normalized().0) {
            Outcome::disagree(spec, "no family", fc.to_string())
        } else {
            match short_period_refuted(spec, bound / 3, cfg)? {
                Ok(_) => Outcome::Agree,
                Err(p) => Outcome::disagree(
                    spec,
                    format!("no period <= {}", bound / 3),
                    format!(
                        "prefix of length {} has period {p}",
                        bound << APERIODIC_DOUBLINGS
                    ),
                ),
            }
        };
        Ok(Some(outcome))
    })?;
    if !matches!(cfg.tail_mode, TailMode::SingleLetter) {
        report.evidence = Evidence::BoundedEvidence;
    }
    Ok(report.finish())
}

/// Rename letters by first occurrence.
fn normalize_letters(w: &[Letter]) -> FiniteWord {
    let mut seen: Vec<Letter> = Vec::new();
    w.iter()
        .map(|&x| {
            let i = seen.iter().position(|&s| s == x).unwrap_or_else(|| {
                seen.push(x);
                seen.len() - 1
            });
            Letter::from_id(i as u32 + 1)
        })
        .collect()
}

/// A key shared exactly by the purely periodic words `t^ω` that coincide
/// up to a shift and a renaming of letters.
pub fn periodic_class_key(period: &[Letter]) -> FiniteWord {
    let mut rotated = period.to_vec();
    (0..period.len())
        .map(|_| {
            rotated.rotate_left(1);
            normalize_letters(&rotated)
        })
        .min()
        .unwrap_or_default()
}

/// Uniqueness of the balanced word with distinct letter frequencies, for
/// each alphabet size in `ks`.
///
/// For every `k`, the closed-form word `(Pal(1 2 … k))^ω` must be balanced
/// with the closed-form frequencies, and every balanced word in the
/// enumeration over exactly `k` letters with distinct frequencies must be a
/// renamed shift of it.
pub fn verify_fraenkel_episturmian(
    ks: RangeInclusive<usize>,
    cfg: &EnumerationConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut report = VerificationReport::new("fraenkel-episturmian", Evidence::Exhaustive);
    for k in ks {
        if k < 3 {
            return Err(Error::OutOfRange(format!("alphabet size {k} below 3")));
        }
        let label = format!("fraenkel k={k}");
        let word = family_word(&FamilyClass::FamilyC { k }, cfg.word_cap)?;
        let balanced = balance_check_periodic(&word).is_balanced();
        report.record(
            if balanced {
                Outcome::Agree
            } else {
                Outcome::disagree(&label, "balanced", "unbalanced")
            },
            &label,
        );
        let freqs = word.frequencies();
        let distinct: BTreeSet<_> = freqs.values().collect();
        report.record(
            if freqs == frequencies_closed_form(k)? && distinct.len() == k {
                Outcome::Agree
            } else {
                Outcome::disagree(&label, "frequencies 2^(k-i)/(2^k-1)", format!("{freqs:?}"))
            },
            &label,
        );

        let key = periodic_class_key(word.period());
        let ecfg = EnumerationConfig {
            max_alphabet: k,
            max_head_len: cfg.max_head_len.max(k),
            tail_mode: TailMode::SingleLetter,
            ..*cfg
        };
        let specs: Vec<DirectiveSpec> = enumerate_specs(&ecfg)
            .into_iter()
            .filter(|s| s.alphabet_size() == k)
            .collect();
        let sub = collect(&report.claim.clone(), &specs, |spec| {
            let w = to_periodic(spec, cfg.word_cap)?;
            if !balance_check_periodic(&w).is_balanced() {
                return Ok(None);
            }
            let f = w.frequencies();
            if f.values().collect::<BTreeSet<_>>().len() != k {
                return Ok(None);
            }
            Ok(Some(if periodic_class_key(w.period()) == key {
                Outcome::Agree
            } else {
                Outcome::disagree(
                    spec,
                    format!("(Pal(1..{k}))^ω up to renaming"),
                    w.to_string(),
                )
            }))
        })?;
        let found = sub.instances_checked;
        report = report.merge(sub);
        report.record(
            if found >= 1 {
                Outcome::Agree
            } else {
                Outcome::disagree(
                    &label,
                    "one distinct-frequency balanced class",
                    "none enumerated",
                )
            },
            &label,
        );
    }
    Ok(report.finish())
}
