//! Unbalance claims about directive sequences.
//!
//! Each claim names a hypothesis on the directive of a balanced standard
//! episturmian word and a conclusion it forces. The check runs the
//! contrapositive: every enumerated directive that meets the hypothesis but
//! breaks the conclusion must generate an unbalanced word. Where the
//! argument names the two factors exposing the imbalance, both must also
//! occur in the generated word.
//!
//! Directives are read in normalized letters, so the first directive letter
//! is always `1`.

use rayon::prelude::*;

use super::enumerate::{enumerate_specs, EnumerationConfig};
use super::report::{Evidence, Outcome, VerificationReport};
use crate::episturmian::{
    generate_prefix, pal, search_witness, to_periodic, DirectiveSpec, FamilyClass,
};
use crate::error::{Error, Result};
use crate::words::{balance_check_periodic, FiniteWord, Letter, Witness};

/// Claim ids handled by [`verify_unbalance_witnesses`].
pub const UNBALANCE_CLAIMS: [&str; 7] = [
    "first-repeated-letter",
    "repeat-not-first-letter",
    "leading-ones-run",
    "second-repeat",
    "no-third-one",
    "distinct-after-second-one",
    "ones-tail",
];

/// One position of a factor pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Is(Letter),
    /// Any letter outside the list.
    AnyBut(Vec<Letter>),
}

impl Slot {
    fn matches(&self, x: Letter) -> bool {
        match self {
            Slot::Is(l) => *l == x,
            Slot::AnyBut(v) => !v.contains(&x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern(pub Vec<Slot>);

impl Pattern {
    fn exact(word: &[Letter]) -> Self {
        Pattern(word.iter().map(|&l| Slot::Is(l)).collect())
    }

    fn then(mut self, slot: Slot) -> Self {
        self.0.push(slot);
        self
    }

    fn then_word(mut self, word: &[Letter]) -> Self {
        self.0.extend(word.iter().map(|&l| Slot::Is(l)));
        self
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First occurrence in `word`.
    pub fn find_in(&self, word: &[Letter]) -> Option<usize> {
        if self.0.len() > word.len() {
            return None;
        }
        (0..=word.len() - self.0.len())
            .find(|&i| self.0.iter().zip(&word[i..]).all(|(s, &x)| s.matches(x)))
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.0 {
            match s {
                Slot::Is(l) if l.id() <= 9 => write!(f, "{l}")?,
                Slot::Is(l) => write!(f, "[{l}]")?,
                Slot::AnyBut(v) => {
                    let ids: Vec<String> = v.iter().map(|l| l.to_string()).collect();
                    write!(f, "[^{}]", ids.join(","))?
                }
            }
        }
        Ok(())
    }
}

/// The factor pair named by a proof: `heavy` holds at least two more copies
/// of its first letter than `light`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub heavy: Pattern,
    pub light: Pattern,
}

/// How a directive breaks a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Directive letters needed before the named factors appear.
    pub depth: usize,
    pub shape: Option<Shape>,
}

/// First `j` whose letter already occurred, with the earlier position.
fn first_repeat(d: &[Letter]) -> Option<(usize, usize)> {
    (1..d.len()).find_map(|j| d[..j].iter().position(|&x| x == d[j]).map(|i| (i, j)))
}

/// End of the run of `d[i]` starting at `i`; `None` when it reaches the
/// end of the sample, meaning the directive ends in that letter forever.
fn run_end(d: &[Letter], i: usize) -> Option<usize> {
    (i..d.len()).find(|&m| d[m] != d[i])
}

struct Ctx<'a> {
    d: &'a [Letter],
    cap: crate::episturmian::WordCap,
}

impl Ctx<'_> {
    fn pal(&self, end: usize) -> Result<FiniteWord> {
        pal(&self.d[..end], self.cap)
    }
}

fn one() -> Letter {
    Letter::from_id(1)
}

/// `a p a` against `p b p_1`.
fn sandwich_shape(a: Letter, p: &FiniteWord, b: Letter) -> Shape {
    Shape {
        heavy: Pattern::exact(&[a]).then_word(p).then(Slot::Is(a)),
        light: Pattern::exact(p).then(Slot::Is(b)).then(Slot::Is(p[0])),
    }
}

fn lemma_first_repeated(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    let Some((i, j)) = first_repeat(d) else {
        return Ok(None);
    };
    if i + 1 != j || i == 0 {
        return Ok(None);
    }
    let x = &d[..i];
    let alpha = d[i];
    let Some(m) = run_end(d, i) else {
        return Ok(None);
    };
    let Some(t) = (m..d.len()).find(|&t| x.contains(&d[t])) else {
        return Ok(None);
    };
    let beta = d[t];
    let b = x.iter().position(|&l| l == beta).expect("beta occurs in x");
    let p = c.pal(i)?;
    let shape = if b > 0 {
        sandwich_shape(alpha, &p, beta)
    } else if x.len() > 1 {
        Shape {
            heavy: Pattern::exact(&[alpha]).then_word(&p).then(Slot::Is(alpha)),
            light: Pattern::exact(&p).then_word(&p[..2]),
        }
    } else {
        Shape {
            heavy: Pattern::exact(&[alpha, beta, alpha]),
            light: Pattern::exact(&[beta])
                .then(Slot::AnyBut(vec![alpha, beta]))
                .then(Slot::Is(beta)),
        }
    };
    Ok(Some(Violation {
        depth: t + 1,
        shape: Some(shape),
    }))
}

fn prop_repeat_not_first(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    let Some((i, j)) = first_repeat(d) else {
        return Ok(None);
    };
    if i == 0 {
        return Ok(None);
    }
    let k = d[i];
    let p = c.pal(i)?;
    if j > i + 1 {
        return Ok(Some(Violation {
            depth: j + 1,
            shape: Some(sandwich_shape(k, &p, d[i + 1])),
        }));
    }
    let Some(m) = run_end(d, i) else {
        return Ok(None);
    };
    let z1 = d[m];
    // The factor pair is only named for a letter new to the directive; a
    // returning letter falls under the first-repeated-letter claim.
    let shape = (!d[..i].contains(&z1)).then(|| sandwich_shape(k, &p, z1));
    Ok(Some(Violation {
        depth: m + 1,
        shape,
    }))
}

fn prop_leading_ones(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    if d.len() < 2 || d[1] != one() {
        return Ok(None);
    }
    let Some(l) = run_end(d, 0) else {
        return Ok(None);
    };
    let z = &d[l..];
    if let Some(t) = z.iter().position(|&x| x == one()) {
        let z1 = z[0];
        let ones = vec![one(); l + 1];
        return Ok(Some(Violation {
            depth: l + t + 1,
            shape: Some(Shape {
                heavy: Pattern::exact(&[z1]).then_word(&ones).then(Slot::Is(z1)),
                light: Pattern::exact(&ones[..l])
                    .then(Slot::AnyBut(vec![one(), z1]))
                    .then_word(&[one(), one()]),
            }),
        }));
    }
    let Some((i, j)) = first_repeat(z) else {
        return Ok(None);
    };
    let gamma = z[i];
    let p = c.pal(l + i)?;
    if j > i + 1 {
        return Ok(Some(Violation {
            depth: l + j + 1,
            shape: Some(sandwich_shape(gamma, &p, z[i + 1])),
        }));
    }
    let Some(m) = run_end(d, l + i) else {
        return Ok(None);
    };
    let w1 = d[m];
    let shape = Some(sandwich_shape(gamma, &p, w1));
    Ok(Some(Violation {
        depth: m + 1,
        shape,
    }))
}

/// `1 y 1 …` with `1` the first repeated letter and `y` nonempty: the
/// position of the second `1`.
fn second_one(d: &[Letter]) -> Option<usize> {
    match first_repeat(d) {
        Some((0, j)) if j >= 2 => Some(j),
        _ => None,
    }
}

fn lemma_second_repeat(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    let Some(j) = second_one(d) else {
        return Ok(None);
    };
    let y = &d[1..j];
    let Some(t) = (j + 1..d.len()).find(|&t| y.contains(&d[t])) else {
        return Ok(None);
    };
    let alpha = d[t];
    let pos = 1 + y
        .iter()
        .position(|&l| l == alpha)
        .expect("alpha occurs in y");
    let shape = if pos > 1 {
        let p = c.pal(pos)?;
        Shape {
            heavy: Pattern::exact(&[alpha]).then_word(&p).then(Slot::Is(alpha)),
            light: Pattern::exact(&p).then_word(&[one(), d[1]]),
        }
    } else {
        Shape {
            heavy: Pattern::exact(&[alpha, one(), alpha]),
            light: Pattern::exact(&[one()])
                .then(Slot::AnyBut(vec![one(), alpha]))
                .then(Slot::Is(one())),
        }
    };
    Ok(Some(Violation {
        depth: t + 1,
        shape: Some(shape),
    }))
}

fn lemma_no_third_one(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    let Some(j) = second_one(d) else {
        return Ok(None);
    };
    if d.get(j + 1) == Some(&one()) {
        return Ok(None);
    }
    let Some(t) = (j + 1..d.len()).find(|&t| d[t] == one()) else {
        return Ok(None);
    };
    let z1 = d[j + 1];
    // The factor pair needs `z'_1` outside `y`, which the second-repeat
    // claim guarantees for balanced words.
    let shape = if d[1..j].contains(&z1) {
        None
    } else {
        let p = c.pal(j)?;
        Some(Shape {
            heavy: Pattern::exact(&[one()]).then_word(&p).then(Slot::Is(one())),
            light: Pattern::exact(&p[1..]).then_word(&[z1, one(), d[1]]),
        })
    };
    Ok(Some(Violation {
        depth: t + 1,
        shape,
    }))
}

fn prop_distinct_after_second_one(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    let Some(j) = second_one(d) else {
        return Ok(None);
    };
    if d[j + 1..].contains(&one()) {
        return Ok(None);
    }
    // First letter after the second `1` that was seen before (other than 1).
    let Some(t) = (j + 1..d.len()).find(|&t| d[1..t].contains(&d[t])) else {
        return Ok(None);
    };
    let alpha = d[t];
    let Some(s) = (j + 1..t).find(|&s| d[s] == alpha) else {
        // `alpha` occurs in `y`: the second-repeat claim covers this case.
        return Ok(Some(Violation {
            depth: t + 1,
            shape: None,
        }));
    };
    let p = c.pal(s)?;
    if t > s + 1 {
        return Ok(Some(Violation {
            depth: t + 1,
            shape: Some(sandwich_shape(alpha, &p, d[s + 1])),
        }));
    }
    let Some(m) = run_end(d, s) else {
        return Ok(None);
    };
    let w1 = d[m];
    let shape = Some(sandwich_shape(alpha, &p, w1));
    Ok(Some(Violation {
        depth: m + 1,
        shape,
    }))
}

fn prop_ones_tail(c: &Ctx) -> Result<Option<Violation>> {
    let d = c.d;
    let Some(j) = second_one(d) else {
        return Ok(None);
    };
    if d.get(j + 1) != Some(&one()) {
        return Ok(None);
    }
    let Some(m) = run_end(d, j) else {
        return Ok(None);
    };
    let y1 = d[1];
    let zi = (m..d.len()).find(|&i| d[i] != one() && d[i] != y1);
    let shape = match zi {
        Some(i) => {
            let p = c.pal(j)?;
            Some(Shape {
                heavy: Pattern::exact(&[one()]).then_word(&p).then(Slot::Is(one())),
                light: Pattern::exact(&p[1..]).then_word(&[d[i], one(), y1]),
            })
        }
        _ => None,
    };
    Ok(Some(Violation {
        depth: zi.unwrap_or(m) + 1,
        shape,
    }))
}

/// Whether `spec` (normalized) meets the hypothesis of `claim` and breaks
/// its conclusion, and if so the factor pair the argument names.
pub fn violation(
    claim: &str,
    spec: &DirectiveSpec,
    cap: crate::episturmian::WordCap,
) -> Result<Option<Violation>> {
    if !spec.is_infinite() {
        return Ok(None);
    }
    // Long enough to show every letter of the tail twice after the head.
    let d = spec.directive_prefix(spec.head().len() + 3 * spec.tail().len() + 2);
    let c = Ctx { d: &d, cap };
    match claim {
        "first-repeated-letter" => lemma_first_repeated(&c),
        "repeat-not-first-letter" => prop_repeat_not_first(&c),
        "leading-ones-run" => prop_leading_ones(&c),
        "second-repeat" => lemma_second_repeat(&c),
        "no-third-one" => lemma_no_third_one(&c),
        "distinct-after-second-one" => prop_distinct_after_second_one(&c),
        "ones-tail" => prop_ones_tail(&c),
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}

fn witness_in(witness: &Witness, word: &[Letter]) -> bool {
    witness.is_valid() && witness.is_located_in(word)
}

fn check_instance(spec: &DirectiveSpec, v: &Violation, cfg: &EnumerationConfig) -> Result<Outcome> {
    let ccfg = cfg.classify_config();
    if spec.single_tail_letter().is_some() {
        let periodic = to_periodic(spec, cfg.word_cap)?;
        let report = balance_check_periodic(&periodic);
        let Some(w) = report.witness else {
            return Ok(Outcome::disagree(
                spec,
                "unbalanced",
                "balanced by the exact check",
            ));
        };
        let reach = w.heavy_position.max(w.light_position) + w.length;
        if !witness_in(&w, &periodic.prefix(reach)) {
            return Ok(Outcome::disagree(
                spec,
                "valid witness",
                "witness does not recount",
            ));
        }
    } else {
        match search_witness(spec, &ccfg)? {
            FamilyClass::NotBalanced { witness } => {
                let w = witness.witness.expect("unbalanced reports carry a witness");
                let reach = w.heavy_position.max(w.light_position) + w.length;
                if !witness_in(&w, &generate_prefix(spec, reach, cfg.word_cap)?) {
                    return Ok(Outcome::disagree(
                        spec,
                        "valid witness",
                        "witness does not recount",
                    ));
                }
            }
            _ => {
                return Ok(Outcome::Unknown(
                    "no witness within the prefix bound".into(),
                ))
            }
        }
    }
    if let Some(shape) = &v.shape {
        let depth_len = pal(&spec.directive_prefix(v.depth + 1), cfg.word_cap)?.len();
        let word = generate_prefix(spec, depth_len.max(cfg.prefix_bound), cfg.word_cap)?;
        for (name, pat) in [("heavy", &shape.heavy), ("light", &shape.light)] {
            if pat.find_in(&word).is_none() {
                return Ok(Outcome::disagree(
                    spec,
                    format!("factors {} and {}", shape.heavy, shape.light),
                    format!("{name} factor {pat} absent"),
                ));
            }
        }
    }
    Ok(Outcome::Agree)
}

/// Check one unbalance claim over the enumeration.
pub fn verify_unbalance_witnesses(
    claim: &str,
    cfg: &EnumerationConfig,
) -> Result<VerificationReport> {
    if !UNBALANCE_CLAIMS.contains(&claim) {
        return Err(Error::UnknownClaim(claim.to_string()));
    }
    cfg.validate()?;
    let specs = enumerate_specs(cfg);
    let outcomes: Vec<Option<Outcome>> = specs
        .par_iter()
        .map(|spec| {
            if spec.alphabet_size() < 3 {
                return Ok(None);
            }
            match violation(claim, spec, cfg.word_cap)? {
                Some(v) => check_instance(spec, &v, cfg).map(Some),
                None => Ok(None),
            }
        })
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new(claim, Evidence::Exhaustive);
    for (spec, o) in specs.iter().zip(outcomes) {
        match o {
            Some(o) => report.record(o, spec),
            None => report.skipped += 1,
        }
    }
    if report.unknowns > 0 {
        report.evidence = Evidence::BoundedEvidence;
    }
    Ok(report.finish())
}
