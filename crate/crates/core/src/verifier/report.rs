use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// Every instance was decided exactly.
    Exhaustive,
    /// Some instances rest on a bounded search (aperiodicity, witness
    /// search); an agreement there is evidence, not proof.
    BoundedEvidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub spec: String,
    pub expected: String,
    pub observed: String,
}

/// Outcome of checking one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree(Disagreement),
    Unknown(String),
}

impl Outcome {
    pub fn disagree(
        spec: impl fmt::Display,
        expected: impl Into<String>,
        observed: impl Into<String>,
    ) -> Self {
        Outcome::Disagree(Disagreement {
            spec: spec.to_string(),
            expected: expected.into(),
            observed: observed.into(),
        })
    }
}

/// Summary of one claim's run. The structured form is the serde JSON
/// encoding of this struct; the schema is documented in the README.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instances_checked: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    pub unknowns: usize,
    /// Specs of the instances that ended Unknown, for manual study.
    pub unknown_specs: Vec<String>,
    /// Enumerated specs outside the claim's hypotheses (not counted above).
    pub skipped: usize,
    pub evidence: Evidence,
}

impl VerificationReport {
    pub fn new(claim: &str, evidence: Evidence) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            instances_checked: 0,
            agreements: 0,
            disagreements: Vec::new(),
            unknowns: 0,
            unknown_specs: Vec::new(),
            skipped: 0,
            evidence,
        }
    }

    pub fn record(&mut self, outcome: Outcome, spec: impl fmt::Display) {
        self.instances_checked += 1;
        match outcome {
            Outcome::Agree => self.agreements += 1,
            Outcome::Disagree(d) => self.disagreements.push(d),
            Outcome::Unknown(_) => {
                self.unknowns += 1;
                self.unknown_specs.push(spec.to_string());
            }
        }
    }

    /// Combine two reports for the same claim. Associative; the result does
    /// not depend on the order of merging once sorted by [`Self::finish`].
    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.instances_checked += other.instances_checked;
        self.agreements += other.agreements;
        self.disagreements.extend(other.disagreements);
        self.unknowns += other.unknowns;
        self.unknown_specs.extend(other.unknown_specs);
        self.skipped += other.skipped;
        if other.evidence == Evidence::BoundedEvidence {
            self.evidence = Evidence::BoundedEvidence;
        }
        self
    }

    pub(crate) fn finish(mut self) -> Self {
        self.disagreements
            .sort_by(|a, b| (&a.spec, &a.expected).cmp(&(&b.spec, &b.expected)));
        self.unknown_specs.sort();
        self
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn is_consistent(&self) -> bool {
        self.agreements + self.disagreements.len() + self.unknowns == self.instances_checked
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let evidence = match self.evidence {
            Evidence::Exhaustive => "exhaustive",
            Evidence::BoundedEvidence => "bounded evidence",
        };
        writeln!(
            f,
            "{:<28} {:>5}  instances={} agree={} disagree={} unknown={} skipped={} ({evidence})",
            self.claim,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances_checked,
            self.agreements,
            self.disagreements.len(),
            self.unknowns,
            self.skipped,
        )?;
        for d in &self.disagreements {
            writeln!(
                f,
                "  {}: expected {}, observed {}",
                d.spec, d.expected, d.observed
            )?;
        }
        for s in &self.unknown_specs {
            writeln!(f, "  unknown: {s}")?;
        }
        Ok(())
    }
}
