//! Pass/fail records produced by the verifiers.

use alloc::string::String;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The engines cannot decide the claim for this input.
    Undecidable,
    /// The claim's hypotheses do not hold for this input.
    NotApplicable,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Undecidable => "undecidable",
            ClaimStatus::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One checked claim with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: String,
    pub status: ClaimStatus,
    pub detail: String,
}

impl ClaimResult {
    pub fn new(claim: impl Into<String>, status: ClaimStatus, detail: impl Into<String>) -> Self {
        ClaimResult {
            claim: claim.into(),
            status,
            detail: detail.into(),
        }
    }

    /// `Pass` if `holds`, else `Fail`.
    pub fn check(claim: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        let status = if holds { ClaimStatus::Pass } else { ClaimStatus::Fail };
        Self::new(claim, status, detail)
    }

    pub fn passed(&self) -> bool {
        self.status == ClaimStatus::Pass
    }
}
