//! Closed-form quasi-static transition rates.
//!
//! Both directions of the motion-induced transition are controlled by one
//! dimensionless kernel
//!
//! ```text
//! G(a, b) = (b / 8 pi) * int_0^inf sqrt(u^2 + c^2) exp(-2 sqrt(u^2 + c^2)) du,
//! c = |a - b|,
//! ```
//!
//! with `a = omega0 d / |v|` and `b = omega_sp d / |v|`. The descending rate
//! uses `G(a, b)`, the ascending rate `G(-a, b)`; the common physical
//! prefactor is `2 gamma_eg^2 / (eps0 hbar d^3)`.

use crate::config::{ConfigError, NormalizedParams, SystemConfig};
use crate::constants::{EPS0, HBAR};
use crate::quadrature::{integrate, QuadratureError, QuadratureSettings};
use std::f64::consts::PI;
use thiserror::Error;

/// Once `2c` exceeds this, `exp(-2c)` is below the smallest normal f64 and
/// the kernel is returned as exactly zero instead of subnormal noise.
const UNDERFLOW_GUARD_2C: f64 = 690.0;

/// Distance past `c` at which the integrand tail is cut; e^(-60) leaves a
/// relative truncation error under 1e-25.
const TAIL_LENGTH: f64 = 30.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RateError {
    #[error("kernel argument b must be strictly positive, got {0:e}")]
    NonPositiveB(f64),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// The dimensionless kernel values for the two transition directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPair {
    /// G(a, b): descending (emission) direction.
    pub g_plus: f64,
    /// G(-a, b): ascending (motion-induced excitation) direction.
    pub g_minus: f64,
}

/// Physical transition rates plus the kernel values they were built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePair {
    /// Descending rate, 1/s.
    pub gamma_plus: f64,
    /// Ascending rate, 1/s.
    pub gamma_minus: f64,
    /// G(a, b).
    pub g_plus: f64,
    /// G(-a, b).
    pub g_minus: f64,
}

/// Evaluates G(a, b) by adaptive Gauss-Legendre quadrature.
///
/// The value is exactly `b / 32 pi` at `c = |a - b| = 0` and exactly zero
/// once `2c` passes the underflow guard.
pub fn g_kernel(a: f64, b: f64, settings: &QuadratureSettings) -> Result<f64, RateError> {
    if !(b > 0.0) {
        return Err(RateError::NonPositiveB(b));
    }
    let c = (a - b).abs();
    if c == 0.0 {
        // int_0^inf u e^{-2u} du = 1/4 analytically.
        return Ok(b / (32.0 * PI));
    }
    if 2.0 * c > UNDERFLOW_GUARD_2C {
        return Ok(0.0);
    }
    let c2 = c * c;
    let value = integrate(
        |u| {
            let r = (u * u + c2).sqrt();
            r * (-2.0 * r).exp()
        },
        0.0,
        c + TAIL_LENGTH,
        settings,
    )?;
    Ok(b / (8.0 * PI) * value)
}

/// Kernel values for both transition directions at the given dimensionless
/// parameters.
pub fn kernel_pair(
    params: NormalizedParams,
    settings: &QuadratureSettings,
) -> Result<KernelPair, RateError> {
    Ok(KernelPair {
        g_plus: g_kernel(params.a, params.b, settings)?,
        g_minus: g_kernel(-params.a, params.b, settings)?,
    })
}

/// The common rate prefactor `2 gamma_eg^2 / (eps0 hbar d^3)`, 1/s.
pub fn rate_prefactor(config: &SystemConfig) -> f64 {
    2.0 * config.gamma_eg * config.gamma_eg / (EPS0 * HBAR * config.d.powi(3))
}

/// Physical transition rates for a moving-atom configuration.
///
/// Invariant under `v -> -v`: only |v| enters the kernel arguments.
pub fn gamma_pair(
    config: &SystemConfig,
    settings: &QuadratureSettings,
) -> Result<RatePair, RateError> {
    let params = config.normalized()?;
    let kernels = kernel_pair(params, settings)?;
    let prefactor = rate_prefactor(config);
    Ok(RatePair {
        gamma_plus: prefactor * kernels.g_plus,
        gamma_minus: prefactor * kernels.g_minus,
        g_plus: kernels.g_plus,
        g_minus: kernels.g_minus,
    })
}

/// Net spontaneous emission rate `gamma_plus - gamma_minus`, 1/s.
///
/// A negative value marks the population-inversion regime.
pub fn gamma_total(pair: &RatePair) -> f64 {
    pair.gamma_plus - pair.gamma_minus
}

/// Imaginary part of the zz interaction constant, 1/m^3:
/// `[G(a, b) - G(-a, b)] / d^3`.
///
/// Satisfies `Im C = eps0 hbar / (2 gamma_eg^2) * (gamma_plus - gamma_minus)`
/// exactly, by construction.
pub fn im_c_int_zz(
    config: &SystemConfig,
    settings: &QuadratureSettings,
) -> Result<f64, RateError> {
    let params = config.normalized()?;
    let kernels = kernel_pair(params, settings)?;
    Ok((kernels.g_plus - kernels.g_minus) / config.d.powi(3))
}
