//! Verification harness: enumerates ideal families at desk scale, runs the
//! exhaustive and sampled checks, and produces machine-readable reports.

pub mod checks;
pub mod enumerate;

use serde::{Deserialize, Serialize};

pub use checks::{
    run_all, verify_auxiliary, verify_betti_oracles, verify_closure_regularity,
    verify_conditions, verify_lq_equivalence, ClosureReports,
};

/// A serialized ideal (or `"left | right"` pair) with its ambient size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRepr {
    pub text: String,
    pub n: usize,
}

/// One counterexample: the instance involved, what was expected, and what
/// was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub ideal: IdealRepr,
    pub expected: String,
    pub observed: String,
}

/// Outcome of one check over a family of instances. A check passed exactly
/// when it recorded no failures.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub instances_tested: u64,
    pub failures: Vec<FailureRecord>,
    pub wall_time_s: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Scales and seeds for a verification run. Identical configurations produce
/// identical reports up to wall time.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Ambient variable count for the enumerated families (2 or 3).
    pub n: usize,
    /// Largest generator degree enumerated.
    pub d_max: u32,
    pub seed: u64,
    /// Power cap for the closure-audit membership oracle.
    pub power_bound: u32,
    /// Deeper cap used only to report the smallest witness of a disagreeing
    /// audit point.
    pub diagnostic_power_bound: u32,
    /// Random two-variable ideals added to the closure comparison.
    pub closure_samples: u64,
    /// Random ideals for the Betti-table cross-check.
    pub betti_samples: u64,
    /// Random ideal pairs for the exact-sequence bounds.
    pub pair_samples: u64,
    /// Random ideals per auxiliary identity check.
    pub aux_samples: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n: 3,
            d_max: 4,
            seed: 1,
            power_bound: crate::newton::DEFAULT_POWER_BOUND,
            diagnostic_power_bound: 64,
            closure_samples: 10_000,
            betti_samples: 1000,
            pair_samples: 500,
            aux_samples: 300,
        }
    }
}
