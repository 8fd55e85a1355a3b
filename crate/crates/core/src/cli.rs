//! The `epi` command line.
//!
//! [`run`] parses arguments and executes one subcommand in-process,
//! returning the rendered output and the exit code, so the binary is a thin
//! wrapper and every command is testable without spawning processes.
//!
//! Exit codes: `0` success; for `classify`, `1` not balanced and `2`
//! unknown; for `verify`, `1` when any claim has a disagreement; `3` for
//! invalid input or usage.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::episturmian::{
    classify, fraenkel_word, frequencies_closed_form, generate_prefix, pal, search_witness,
    to_periodic, ClassifyConfig, DirectiveSpec, FamilyClass, WordCap,
};
use crate::error::{Error, Result};
use crate::verifier::{verify_claim, EnumerationConfig, TailMode, VerificationReport, ALL_CLAIMS};
use crate::words::{
    balance_check_finite, balance_check_periodic, complexity, left_special_factors,
    right_special_factors, BalanceReport, EventuallyPeriodicWord, FactorFamily, FiniteWord,
    Frequencies,
};

/// Version of the JSON output format.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_BALANCED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "epi",
    version,
    about = "Episturmian words, balance and the balanced families"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Letters generated when a bounded prefix stands in for an infinite word.
    #[arg(long, default_value_t = 10_000, global = true)]
    pub prefix_bound: usize,
    /// Largest word any command may build.
    #[arg(long, default_value_t = WordCap::DEFAULT.0, global = true)]
    pub word_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterated palindromic closure of a directive word.
    Pal { word: String },
    /// Palindromic prefix of the word directed by SPEC.
    Generate {
        spec: String,
        /// Minimum number of letters.
        #[arg(long)]
        length: usize,
        /// Truncate to exactly LENGTH letters.
        #[arg(long)]
        exact: bool,
    },
    /// Family of a directive sequence, or a witness of imbalance.
    Classify { spec: String },
    /// Balance of a finite word `w` or a periodic word `u(v)`.
    Balance {
        input: String,
        /// Longest factor examined (finite words only; defaults to the word length).
        #[arg(long)]
        max_len: Option<usize>,
        /// Read INPUT as a directive sequence instead of a word.
        #[arg(long)]
        directive: bool,
    },
    /// Letter frequencies of `Pal(SPEC)`, or of Fr_k when given an integer.
    Freq { input: String },
    /// The Fraenkel word Fr_k.
    Fraenkel { k: usize },
    /// Run a verifier claim, or `all`.
    Verify {
        #[arg(default_value = "all")]
        claim: String,
        #[arg(long, default_value_t = 4)]
        max_alphabet: usize,
        #[arg(long, default_value_t = 6)]
        max_head_len: usize,
        /// Longest directive tail; 1 for single-letter tails only.
        #[arg(long, default_value_t = 3)]
        max_tail_len: usize,
    },
    /// Factor complexity p(n) for n = 1..=MAX_N.
    Complexity {
        spec: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Right and left special factors for n = 0..=MAX_N.
    Special {
        spec: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterFrequency {
    pub letter: u32,
    /// Exact rational, `numerator/denominator`.
    pub frequency: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityValue {
    pub n: usize,
    pub p: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFactors {
    pub n: usize,
    pub right: Vec<FiniteWord>,
    pub left: Vec<FiniteWord>,
}

/// Result of one command; the JSON output is this value, tagged by
/// `command`, inside an [`Envelope`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Response {
    Pal {
        input: FiniteWord,
        word: FiniteWord,
    },
    Generate {
        spec: DirectiveSpec,
        word: FiniteWord,
    },
    Classify {
        spec: DirectiveSpec,
        normalized: DirectiveSpec,
        class: FamilyClass,
        in_theorem_scope: bool,
    },
    Balance {
        input: String,
        /// True when the verdict is a decision for the whole (infinite) word.
        exact: bool,
        report: BalanceReport,
    },
    Freq {
        word: EventuallyPeriodicWord,
        frequencies: Vec<LetterFrequency>,
    },
    Fraenkel {
        k: usize,
        word: FiniteWord,
    },
    Verify {
        passed: bool,
        reports: Vec<VerificationReport>,
    },
    Complexity {
        spec: DirectiveSpec,
        exact: bool,
        values: Vec<ComplexityValue>,
    },
    Special {
        spec: DirectiveSpec,
        exact: bool,
        lengths: Vec<SpecialFactors>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    #[serde(flatten)]
    pub response: Response,
}

/// Global settings shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub format: Format,
    pub prefix_bound: usize,
    pub word_cap: WordCap,
}

impl CliConfig {
    fn validate(&self) -> Result<()> {
        if self.prefix_bound == 0 || self.word_cap.0 == 0 {
            return Err(Error::OutOfRange(
                "--prefix-bound and --word-cap must be positive".into(),
            ));
        }
        self.word_cap.check(self.prefix_bound)
    }

    fn classify_config(&self) -> ClassifyConfig {
        ClassifyConfig {
            prefix_bound: self.prefix_bound,
            word_cap: self.word_cap,
            ..ClassifyConfig::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn frequency_rows(f: &Frequencies) -> Vec<LetterFrequency> {
    f.iter()
        .map(|(l, r)| LetterFrequency {
            letter: l.id(),
            frequency: format!("{}/{}", r.numer(), r.denom()),
        })
        .collect()
}

/// Factor sets of the word directed by `spec`: exact for finite and
/// ultimately periodic directives, read off a prefix otherwise.
fn factor_family(spec: &DirectiveSpec, max_n: usize, cfg: &CliConfig) -> Result<FactorFamily> {
    if !spec.is_infinite() {
        let w = pal(spec.head(), cfg.word_cap)?;
        return Ok(FactorFamily::of_finite(&w, max_n));
    }
    if spec.single_tail_letter().is_some() {
        return Ok(FactorFamily::of_periodic(
            &to_periodic(spec, cfg.word_cap)?,
            max_n,
        ));
    }
    let prefix = generate_prefix(spec, cfg.prefix_bound.max(max_n), cfg.word_cap)?;
    Ok(FactorFamily::of_prefix(&prefix, max_n))
}

fn balance(
    input: &str,
    max_len: Option<usize>,
    directive: bool,
    cfg: &CliConfig,
) -> Result<Response> {
    let (exact, report) = if directive {
        let spec: DirectiveSpec = input.parse()?;
        if spec.single_tail_letter().is_some() {
            (
                true,
                balance_check_periodic(&to_periodic(&spec, cfg.word_cap)?),
            )
        } else if !spec.is_infinite() {
            let w = pal(spec.head(), cfg.word_cap)?;
            (true, balance_check_finite(&w, max_len.unwrap_or(w.len()))?)
        } else {
            let report = match search_witness(&spec, &cfg.classify_config())? {
                FamilyClass::NotBalanced { witness } => witness,
                FamilyClass::Unknown { searched } => searched,
                other => unreachable!("witness search returned {other}"),
            };
            (report.is_unbalanced(), report)
        }
    } else if input.contains('(') {
        let w: EventuallyPeriodicWord = input.parse()?;
        (true, balance_check_periodic(&w))
    } else {
        let w: FiniteWord = input.parse()?;
        (true, balance_check_finite(&w, max_len.unwrap_or(w.len()))?)
    };
    Ok(Response::Balance {
        input: input.trim().to_string(),
        exact,
        report,
    })
}

fn freq(input: &str, cfg: &CliConfig) -> Result<Response> {
    let t = input.trim();
    if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
        let k: usize = t
            .parse()
            .map_err(|_| Error::OutOfRange(format!("alphabet size {t} is too large")))?;
        let table = frequencies_closed_form(k)?;
        let word = crate::episturmian::family_word(&FamilyClass::FamilyC { k }, cfg.word_cap)?;
        return Ok(Response::Freq {
            word,
            frequencies: frequency_rows(&table),
        });
    }
    let spec: DirectiveSpec = t.parse()?;
    if !spec.is_infinite() {
        return Err(Error::OutOfRange(format!(
            "frequencies need an infinite directive; {spec} has no tail"
        )));
    }
    let word = to_periodic(&spec, cfg.word_cap)?;
    let frequencies = frequency_rows(&word.frequencies());
    Ok(Response::Freq { word, frequencies })
}

fn verify(claim: &str, cfg: &EnumerationConfig) -> Result<Response> {
    let claims: Vec<&str> = if claim == "all" {
        ALL_CLAIMS.to_vec()
    } else {
        vec![claim]
    };
    let reports = claims
        .into_iter()
        .map(|c| verify_claim(c, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(Response::Verify {
        passed: reports.iter().all(|r| r.passed()),
        reports,
    })
}

fn execute(command: &Command, cfg: &CliConfig) -> Result<Response> {
    cfg.validate()?;
    match command {
        Command::Pal { word } => {
            let input: FiniteWord = word.parse()?;
            let word = pal(&input, cfg.word_cap)?;
            Ok(Response::Pal { input, word })
        }
        Command::Generate {
            spec,
            length,
            exact,
        } => {
            let spec: DirectiveSpec = spec.parse()?;
            let mut word = generate_prefix(&spec, *length, cfg.word_cap)?;
            if *exact {
                word.truncate(*length);
            }
            Ok(Response::Generate { spec, word })
        }
        Command::Classify { spec } => {
            let spec: DirectiveSpec = spec.parse()?;
            let c = classify(&spec, &cfg.classify_config())?;
            Ok(Response::Classify {
                normalized: spec.normalized().0,
                spec: c.spec,
                class: c.class,
                in_theorem_scope: c.in_theorem_scope,
            })
        }
        Command::Balance {
            input,
            max_len,
            directive,
        } => balance(input, *max_len, *directive, cfg),
        Command::Freq { input } => freq(input, cfg),
        Command::Fraenkel { k } => Ok(Response::Fraenkel {
            k: *k,
            word: fraenkel_word(*k, cfg.word_cap)?,
        }),
        Command::Verify {
            claim,
            max_alphabet,
            max_head_len,
            max_tail_len,
        } => {
            let ecfg = EnumerationConfig {
                max_alphabet: *max_alphabet,
                max_head_len: *max_head_len,
                prefix_bound: cfg.prefix_bound,
                tail_mode: match *max_tail_len {
                    1 => TailMode::SingleLetter,
                    m => TailMode::PeriodicUpTo(m),
                },
                word_cap: cfg.word_cap,
            };
            verify(claim, &ecfg)
        }
        Command::Complexity { spec, max_n } => {
            let spec: DirectiveSpec = spec.parse()?;
            let family = factor_family(&spec, *max_n, cfg)?;
            let profile = complexity(&family, *max_n)?;
            Ok(Response::Complexity {
                spec,
                exact: profile.exact,
                values: profile
                    .values
                    .iter()
                    .map(|&(n, p)| ComplexityValue { n, p })
                    .collect(),
            })
        }
        Command::Special { spec, max_n } => {
            let spec: DirectiveSpec = spec.parse()?;
            let family = factor_family(&spec, max_n + 1, cfg)?;
            let lengths = (0..=*max_n)
                .map(|n| {
                    Ok(SpecialFactors {
                        n,
                        right: right_special_factors(&family, n)?.into_iter().collect(),
                        left: left_special_factors(&family, n)?.into_iter().collect(),
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Response::Special {
                spec,
                exact: family.is_exact(),
                lengths,
            })
        }
    }
}

fn exit_code(response: &Response) -> i32 {
    match response {
        Response::Classify { class, .. } => match class {
            FamilyClass::NotBalanced { .. } => EXIT_NOT_BALANCED,
            FamilyClass::Unknown { .. } => EXIT_UNKNOWN,
            _ => EXIT_OK,
        },
        Response::Verify { passed: false, .. } => EXIT_NOT_BALANCED,
        _ => EXIT_OK,
    }
}

fn render_report(out: &mut String, report: &BalanceReport) {
    match &report.witness {
        Some(w) => {
            let _ = writeln!(
                out,
                "Unbalanced: {} (at {}) vs {} (at {}) over letter {}, length {}",
                w.heavy, w.heavy_position, w.light, w.light_position, w.letter, w.length
            );
        }
        None => {
            let verdict = if report.is_balanced() {
                "Balanced"
            } else {
                "Inconclusive"
            };
            let _ = writeln!(
                out,
                "{verdict} (factor lengths {}..={})",
                report.checked_lengths.start, report.checked_lengths.end
            );
        }
    }
}

/// Human-readable rendering.
pub fn render_text(response: &Response) -> String {
    let mut out = String::new();
    match response {
        Response::Pal { word, .. }
        | Response::Generate { word, .. }
        | Response::Fraenkel { word, .. } => {
            let _ = writeln!(out, "{word}");
        }
        Response::Classify {
            class,
            in_theorem_scope,
            ..
        } => {
            let _ = writeln!(out, "{class}");
            if !in_theorem_scope {
                let _ = writeln!(
                    out,
                    "(fewer than three letters: decided from the word itself)"
                );
            }
        }
        Response::Balance { exact, report, .. } => {
            render_report(&mut out, report);
            if !exact {
                let _ = writeln!(out, "(bounded prefix search, not a decision)");
            }
        }
        Response::Freq { word, frequencies } => {
            let _ = writeln!(out, "word {word}");
            for f in frequencies {
                let _ = writeln!(out, "{}\t{}", f.letter, f.frequency);
            }
        }
        Response::Verify { passed, reports } => {
            for r in reports {
                out.push_str(&r.to_string());
            }
            let _ = writeln!(out, "{}", if *passed { "PASS" } else { "FAIL" });
        }
        Response::Complexity { exact, values, .. } => {
            let _ = writeln!(out, "n\tp(n)");
            for v in values {
                let _ = writeln!(out, "{}\t{}", v.n, v.p);
            }
            if !exact {
                let _ = writeln!(out, "(from a bounded prefix: lower bounds)");
            }
        }
        Response::Special { exact, lengths, .. } => {
            let join = |v: &[FiniteWord]| {
                v.iter()
                    .map(|w| {
                        if w.is_empty() {
                            "ε".to_string()
                        } else {
                            w.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            for s in lengths {
                let _ = writeln!(
                    out,
                    "n={}\tright: {}\tleft: {}",
                    s.n,
                    join(&s.right),
                    join(&s.left)
                );
            }
            if !exact {
                let _ = writeln!(out, "(from a bounded prefix)");
            }
        }
    }
    out
}

/// JSON rendering, one object per invocation.
pub fn render_json(response: &Response) -> String {
    let env = Envelope {
        schema_version: SCHEMA_VERSION,
        response: response.clone(),
    };
    let mut s = serde_json::to_string_pretty(&env).expect("responses always serialize");
    s.push('\n');
    s
}

/// Execute a parsed command line.
pub fn run_cli(cli: &Cli) -> Output {
    let cfg = CliConfig {
        format: cli.format,
        prefix_bound: cli.prefix_bound,
        word_cap: WordCap(cli.word_cap),
    };
    match execute(&cli.command, &cfg) {
        Ok(response) => Output {
            stdout: match cfg.format {
                Format::Text => render_text(&response),
                Format::Json => render_json(&response),
            },
            stderr: String::new(),
            code: exit_code(&response),
        },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_ERROR,
        },
    }
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_ERROR,
                }
            } else {
                Output {
                    stdout: rendered,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            }
        }
    }
}
