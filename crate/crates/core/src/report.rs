//! Verification records shared by the formula, block and conjecture harnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::Decomposition;
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One constituent where prediction and oracle were compared and disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    pub constituent: String,
    pub predicted: i64,
    pub oracle: i64,
}

/// Outcome of checking one formula on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub formula_id: String,
    pub instance: String,
    pub status: Status,
    pub diffs: Vec<Diff>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn from_diffs(
        formula_id: impl Into<String>,
        instance: impl Into<String>,
        diffs: Vec<Diff>,
    ) -> Self {
        let status = if diffs.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            formula_id: formula_id.into(),
            instance: instance.into(),
            status,
            diffs,
            note: None,
        }
    }

    pub fn skipped(
        formula_id: impl Into<String>,
        instance: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        VerificationReport {
            formula_id: formula_id.into(),
            instance: instance.into(),
            status: Status::Skip,
            diffs: Vec::new(),
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        };
        write!(f, "{} {} {status}", self.formula_id, self.instance)?;
        for d in &self.diffs {
            write!(f, " {}:{}!={}", d.constituent, d.predicted, d.oracle)?;
        }
        Ok(())
    }
}

/// Collects per-constituent disagreements.
#[derive(Debug, Default)]
pub struct DiffBuilder {
    diffs: Vec<Diff>,
}

impl DiffBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, constituent: impl Into<String>, predicted: i64, oracle: i64) {
        if predicted != oracle {
            self.diffs.push(Diff {
                constituent: constituent.into(),
                predicted,
                oracle,
            });
        }
    }

    /// Compares two decompositions on every constituent where `support` holds.
    pub fn compare(
        &mut self,
        label: &str,
        predicted: &Decomposition,
        oracle: &Decomposition,
        support: impl Fn(&Partition) -> bool,
    ) {
        let mut keys: Vec<&Partition> = predicted
            .entries()
            .keys()
            .chain(oracle.entries().keys())
            .collect();
        keys.sort();
        keys.dedup();
        for p in keys.into_iter().filter(|p| support(p)) {
            self.check(format!("{label}:{p}"), predicted.get(p), oracle.get(p));
        }
    }

    pub fn finish(
        self,
        formula_id: impl Into<String>,
        instance: impl Into<String>,
    ) -> VerificationReport {
        VerificationReport::from_diffs(formula_id, instance, self.diffs)
    }
}

/// Outcome of a conjecture or classification scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Consistent,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub n_or_k: usize,
    pub claim_id: String,
    pub status: ClaimStatus,
    pub witnesses: Vec<String>,
}

impl ClaimReport {
    pub fn new(n_or_k: usize, claim_id: impl Into<String>, witnesses: Vec<String>) -> Self {
        let status = if witnesses.is_empty() {
            ClaimStatus::Consistent
        } else {
            ClaimStatus::Counterexample
        };
        ClaimReport {
            n_or_k,
            claim_id: claim_id.into(),
            status,
            witnesses,
        }
    }

    pub fn consistent(&self) -> bool {
        self.status == ClaimStatus::Consistent
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            ClaimStatus::Consistent => "CONSISTENT",
            ClaimStatus::Counterexample => "COUNTEREXAMPLE",
        };
        write!(f, "{} {} {status}", self.claim_id, self.n_or_k)?;
        for w in &self.witnesses {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}
