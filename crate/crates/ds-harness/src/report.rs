//! Campaign reports: machine-parseable JSON plus a human rendering.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One graph that failed its campaign check, with enough detail to replay:
/// feeding the graph6 string back through the `single` source reproduces
/// the verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one campaign run. `passes + failures.len() == total` always.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub params: String,
    pub total: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(
        campaign: &str,
        params: String,
        passes: usize,
        failures: Vec<Failure>,
        elapsed_ms: u64,
    ) -> Self {
        VerificationReport {
            campaign: campaign.to_string(),
            params,
            total: passes + failures.len(),
            passes,
            failures,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are always serializable")
    }
}

/// How many failures the human rendering lists before eliding.
const SHOWN_FAILURES: usize = 20;

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "campaign {}: {} checked, {} passed, {} failed ({} ms)",
            self.campaign,
            self.total,
            self.passes,
            self.failures.len(),
            self.elapsed_ms
        )?;
        write!(f, "params: {}", self.params)?;
        for failure in self.failures.iter().take(SHOWN_FAILURES) {
            write!(f, "\n  {}  {}", failure.graph6, failure.detail)?;
        }
        if self.failures.len() > SHOWN_FAILURES {
            write!(f, "\n  … and {} more", self.failures.len() - SHOWN_FAILURES)?;
        }
        Ok(())
    }
}
