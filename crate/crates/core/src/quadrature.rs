//! Adaptive composite Gauss-Legendre quadrature.
//!
//! The integrand is split into `n` equal panels, each handled by a 15-point
//! Gauss-Legendre rule; `n` doubles until two consecutive composite estimates
//! agree to the requested tolerance.

use std::sync::OnceLock;
use thiserror::Error;

/// Number of Gauss-Legendre nodes per panel.
const PANEL_ORDER: usize = 15;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadratureError {
    #[error("rel_tol must lie in (0, 1e-6], got {0:e}")]
    InvalidRelTol(f64),
    #[error("abs_tol must be non-negative and finite, got {0:e}")]
    InvalidAbsTol(f64),
    #[error("max_subdivisions must be at least 16, got {0}")]
    InvalidMaxSubdivisions(usize),
    #[error(
        "no convergence within {max_subdivisions} panels: \
         last two estimates {previous:e} and {last:e}"
    )]
    NonConvergence {
        max_subdivisions: usize,
        previous: f64,
        last: f64,
    },
}

/// Tolerances and the panel budget for the adaptive scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Relative tolerance on consecutive composite estimates.
    pub rel_tol: f64,
    /// Absolute floor added to the acceptance threshold.
    pub abs_tol: f64,
    /// Maximum number of panels before giving up.
    pub max_subdivisions: usize,
}

impl QuadratureSettings {
    pub fn new(
        rel_tol: f64,
        abs_tol: f64,
        max_subdivisions: usize,
    ) -> Result<Self, QuadratureError> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(QuadratureError::InvalidRelTol(rel_tol));
        }
        if !(abs_tol >= 0.0 && abs_tol.is_finite()) {
            return Err(QuadratureError::InvalidAbsTol(abs_tol));
        }
        if max_subdivisions < 16 {
            return Err(QuadratureError::InvalidMaxSubdivisions(max_subdivisions));
        }
        Ok(Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
        })
    }

    /// Same settings with a different relative tolerance.
    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self, QuadratureError> {
        Self::new(rel_tol, self.abs_tol, self.max_subdivisions)
    }
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_subdivisions: 4096,
        }
    }
}

/// Integrates `f` over `[lo, hi]`, doubling the panel count until two
/// consecutive estimates agree within `rel_tol` (plus the `abs_tol` floor).
pub fn integrate<F>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &QuadratureSettings,
) -> Result<f64, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    let mut panels = 1usize;
    let mut previous = composite(&f, lo, hi, panels);
    loop {
        panels *= 2;
        if panels > settings.max_subdivisions {
            return Err(QuadratureError::NonConvergence {
                max_subdivisions: settings.max_subdivisions,
                previous,
                last: composite(&f, lo, hi, settings.max_subdivisions),
            });
        }
        let current = composite(&f, lo, hi, panels);
        if (current - previous).abs() <= settings.rel_tol * current.abs() + settings.abs_tol {
            return Ok(current);
        }
        previous = current;
    }
}

fn composite<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, panels: usize) -> f64 {
    let (nodes, weights) = gauss_legendre_15();
    let width = (hi - lo) / panels as f64;
    let half = 0.5 * width;
    let mut total = 0.0;
    for p in 0..panels {
        let center = lo + (p as f64 + 0.5) * width;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            acc += w * f(center + half * x);
        }
        total += acc * half;
    }
    total
}

/// Nodes and weights of the 15-point Gauss-Legendre rule on [-1, 1],
/// generated once by Newton iteration on P_15. Doing this numerically avoids
/// transcription slips in a 30-entry table and is exact to machine precision.
fn gauss_legendre_15() -> (&'static [f64; PANEL_ORDER], &'static [f64; PANEL_ORDER]) {
    static RULE: OnceLock<([f64; PANEL_ORDER], [f64; PANEL_ORDER])> = OnceLock::new();
    let (n, w) = RULE.get_or_init(|| {
        let mut nodes = [0.0; PANEL_ORDER];
        let mut weights = [0.0; PANEL_ORDER];
        let n = PANEL_ORDER as f64;
        for (i, (node, weight)) in nodes.iter_mut().zip(weights.iter_mut()).enumerate() {
            // Tricomi-style initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(PANEL_ORDER, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() <= 1e-15 {
                    let (p, d) = legendre_with_derivative(PANEL_ORDER, x);
                    dp = d;
                    x -= p / d;
                    break;
                }
            }
            *node = x;
            *weight = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    });
    (n, w)
}

/// Value and derivative of the Legendre polynomial P_n at x, by the
/// three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}
