//! Verification harness: seeded trial execution, one suite per checked
//! statement, JSON reporting, and mesh export for the surfaces involved.
//!
//! Suites are identified by short opaque ids (`P2.1i` … `P6.2`) that form the
//! CLI contract; [`suite_ids`] lists them in canonical order. A report is
//! fully determined by `(suite id, config)`: per-trial RNG streams make the
//! parallel and serial runners produce identical results.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub mod gen;
mod mesh;
mod suites;

pub use mesh::export_mesh;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite id `{0}`")]
    UnknownSuite(String),
    #[error("unknown surface id `{0}` (expected hpc, hpa, hpb, or circumsphere)")]
    BadSurfaceId(String),
    #[error("invalid mesh parameters: extent must be positive and finite, resolution at least 2")]
    InvalidMeshParams,
    #[error("invalid trial config: trials must be at least 1, tolerances positive, parameter range ordered and positive")]
    InvalidConfig,
}

/// Knobs shared by all suites.
#[derive(Debug, Clone, Copy)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u64,
    /// Positional tolerance, relative to the configuration's circumradius.
    pub tol_pos: f64,
    /// Angular tolerance in radians.
    pub tol_ang: f64,
    /// Range for the canonical half-axis parameters.
    pub param_range: [f64; 2],
}

impl Default for TrialConfig {
    fn default() -> TrialConfig {
        TrialConfig {
            seed: 42,
            trials: 1000,
            tol_pos: 1e-8,
            tol_ang: 1e-8,
            param_range: [0.3, 3.0],
        }
    }
}

impl TrialConfig {
    fn validate(&self) -> Result<(), HarnessError> {
        let [lo, hi] = self.param_range;
        let ok = self.trials >= 1
            && self.tol_pos > 0.0
            && self.tol_pos <= 1e-3
            && self.tol_ang > 0.0
            && self.tol_ang <= 1e-3
            && lo > 0.0
            && hi > lo
            && hi.is_finite();
        if ok { Ok(()) } else { Err(HarnessError::InvalidConfig) }
    }
}

/// Aggregated result of one suite run. Serializes with this exact field
/// order, so equal reports are byte-identical as JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
    pub max_residual: f64,
    pub residual_unit: String,
    pub seed: u64,
    pub passed: bool,
}

/// Result of a single trial: the residual it contributes to the report's
/// maximum, and whether every checked bound held.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TrialOutcome {
    pub residual: f64,
    pub ok: bool,
}

impl TrialOutcome {
    /// Residual plus an explicit pass flag (for checks beyond the residual).
    pub fn new(residual: f64, ok: bool) -> TrialOutcome {
        TrialOutcome { residual, ok }
    }

    /// Pass iff the residual is within the bound.
    pub fn bounded(residual: f64, bound: f64) -> TrialOutcome {
        TrialOutcome { residual, ok: residual <= bound }
    }

    fn sanitized(self) -> (u64, f64) {
        if self.residual.is_finite() {
            (u64::from(!self.ok), self.residual)
        } else {
            (1, f64::INFINITY)
        }
    }
}

/// Run `trials` independent trials and fold the outcomes into (failure
/// count, max residual). The fold is commutative and associative, so the
/// parallel path returns exactly the serial result.
pub(crate) fn run_trials<F>(cfg: &TrialConfig, parallel: bool, trial: F) -> (u64, f64)
where
    F: Fn(u64, &mut rand_chacha::ChaCha8Rng) -> TrialOutcome + Sync,
{
    let one = |i: u64| {
        let mut rng = gen::trial_rng(cfg.seed, i);
        trial(i, &mut rng).sanitized()
    };
    let join = |a: (u64, f64), b: (u64, f64)| (a.0 + b.0, a.1.max(b.1));
    if parallel {
        (0..cfg.trials).into_par_iter().map(one).reduce(|| (0, 0.0), join)
    } else {
        (0..cfg.trials).map(one).fold((0, 0.0), join)
    }
}

pub(crate) fn report(
    suite: &str,
    cfg: &TrialConfig,
    failures: u64,
    max_residual: f64,
    unit: &str,
) -> VerificationReport {
    VerificationReport {
        suite: suite.to_owned(),
        trials: cfg.trials,
        failures,
        max_residual,
        residual_unit: unit.to_owned(),
        seed: cfg.seed,
        passed: failures == 0,
    }
}

/// Suite ids in canonical execution order.
pub fn suite_ids() -> &'static [&'static str] {
    suites::SUITE_IDS
}

/// Run one suite with trials fanned across worker threads.
pub fn run_suite(suite_id: &str, cfg: &TrialConfig) -> Result<VerificationReport, HarnessError> {
    run_suite_inner(suite_id, cfg, true)
}

/// Run one suite on the current thread only; produces the identical report.
pub fn run_suite_serial(
    suite_id: &str,
    cfg: &TrialConfig,
) -> Result<VerificationReport, HarnessError> {
    run_suite_inner(suite_id, cfg, false)
}

fn run_suite_inner(
    suite_id: &str,
    cfg: &TrialConfig,
    parallel: bool,
) -> Result<VerificationReport, HarnessError> {
    cfg.validate()?;
    let f = suites::dispatch(suite_id)
        .ok_or_else(|| HarnessError::UnknownSuite(suite_id.to_owned()))?;
    Ok(f(cfg, parallel))
}
