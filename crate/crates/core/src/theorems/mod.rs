//! Randomized residual checks of the pedal-triangle statements, plus the
//! scene builder they share.
//!
//! Every check is a pure function of `(seed, trial index)`; [`run_suite`]
//! runs a list of them and aggregates one [`CheckReport`] per check.

pub mod checks;
pub mod frame;
pub mod sampling;
pub mod scene;

pub use checks::{Trial, TrialOutcome};
pub use frame::Frame;
pub use scene::{build_scene, Scene};

use crate::error::{GeomError, Result};
use crate::projective::Tolerance;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u64,
    pub tol: Tolerance,
    /// Offsets as fractions of the base inradius.
    pub x_grid: Vec<f64>,
    /// Range of `t` for `P = I + t (O - I)`.
    pub t_range: (f64, f64),
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            trials: 200,
            tol: Tolerance::default(),
            x_grid: vec![0.1, 0.25, 0.5],
            t_range: (0.5, 3.0),
        }
    }
}

impl TrialConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: u64) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Result<Self> {
        let t = self.tol.with_abs_tol(abs_tol);
        self.tol = Tolerance::new(t.abs_tol, t.exact_tol, t.scale)?;
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialFailure {
    pub index: u64,
    pub residual: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub id: String,
    /// Trials that produced a measurement.
    pub trials: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Sorted by trial index.
    pub failures: Vec<TrialFailure>,
    /// Trials where every attempt fell outside the hypotheses.
    pub skipped: u64,
}

type CheckFn = fn(&Trial) -> TrialOutcome;

/// One registered statement.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub name: &'static str,
    run: CheckFn,
    /// Multiplier applied to `cfg.tol.abs_tol`.
    pub tolerance_factor: f64,
}

impl CheckSpec {
    fn domain(&self) -> u64 {
        // distinct nonzero domains; 0 is reserved for `sample_triangle`
        CATALOG.iter().position(|c| c.id == self.id).map_or(u64::MAX, |i| i as u64 + 1)
    }
}

pub const CATALOG: [CheckSpec; 10] = [
    CheckSpec {
        id: "P2.1",
        name: "equidistant_arc_midpoint",
        run: checks::check_equidistant_arc_midpoint,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "P2.2",
        name: "metric_identity",
        run: checks::check_metric_identity,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "L2.2",
        name: "orthology_lemmas",
        run: checks::check_orthology_lemmas,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "T2.1",
        name: "fixed_point",
        run: checks::check_fixed_point,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "P3.1",
        name: "steiner_euler",
        run: checks::check_steiner_euler,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "P3.2",
        name: "isogonal_parallel",
        run: checks::check_isogonal_parallel,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "P3.3",
        name: "polarity",
        run: checks::check_polarity,
        tolerance_factor: 10.0,
    },
    CheckSpec {
        id: "T3.1",
        name: "fixed_line",
        run: checks::check_fixed_line,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "S4",
        name: "section4",
        run: checks::check_section4,
        tolerance_factor: 1.0,
    },
    CheckSpec {
        id: "T1.1",
        name: "open_problem",
        run: checks::check_open_problem,
        tolerance_factor: 1.0,
    },
];

/// Looks a check up by short id or long name.
pub fn lookup(id: &str) -> Result<&'static CheckSpec> {
    CATALOG
        .iter()
        .find(|c| c.id == id || c.name == id || format!("check_{}", c.name) == id)
        .ok_or_else(|| GeomError::UnknownCheckId(id.to_string()))
}

pub fn catalog_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|c| c.id).collect()
}

/// Outcome of one trial of one check.
pub fn run_trial(spec: &CheckSpec, cfg: &TrialConfig, index: u64) -> TrialOutcome {
    (spec.run)(&Trial {
        seed: cfg.seed,
        domain: spec.domain(),
        index,
        cfg,
    })
}

pub fn run_check(spec: &CheckSpec, cfg: &TrialConfig) -> CheckReport {
    let tolerance = cfg.tol.abs_tol * spec.tolerance_factor;
    let mut report = CheckReport {
        id: spec.id.to_string(),
        trials: 0,
        max_residual: 0.0,
        tolerance,
        passed: true,
        failures: Vec::new(),
        skipped: 0,
    };
    for index in 0..cfg.trials {
        match run_trial(spec, cfg, index) {
            TrialOutcome::Measured { residual, detail } => {
                report.trials += 1;
                report.max_residual = report.max_residual.max(residual);
                if !(residual <= tolerance) {
                    report.failures.push(TrialFailure { index, residual, detail });
                }
            }
            TrialOutcome::Skipped { .. } => report.skipped += 1,
        }
    }
    report.passed = report.failures.is_empty();
    report
}

/// One report per id, in the order given. Unknown ids fail before any
/// trial runs.
pub fn run_suite(ids: &[&str], cfg: &TrialConfig) -> Result<Vec<CheckReport>> {
    let specs = ids.iter().map(|id| lookup(id)).collect::<Result<Vec<_>>>()?;
    Ok(specs.into_iter().map(|s| run_check(s, cfg)).collect())
}
