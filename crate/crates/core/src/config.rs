//! Physical scenario description and the dimensionless parameters derived
//! from it.

use crate::constants::SPEED_OF_LIGHT;
use thiserror::Error;

/// Velocity magnitude (as a fraction of c) above which the Galilean treatment
/// is rejected outright.
pub const MAX_V_OVER_C: f64 = 0.5;

/// Velocity magnitude (as a fraction of c) above which a warning is attached:
/// the non-relativistic approximation starts to strain.
pub const WARN_V_OVER_C: f64 = 0.3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("{field} must be strictly positive, got {value:e}")]
    NonPositive { field: &'static str, value: f64 },
    #[error("{field} must be finite, got {value}")]
    NotFinite { field: &'static str, value: f64 },
    #[error("|v|/c = {v_over_c:.3} exceeds the non-relativistic bound of 0.5")]
    RelativisticVelocity { v_over_c: f64 },
    #[error("v = 0 is degenerate here: the normalized parameters diverge")]
    ZeroVelocity,
}

/// Non-fatal conditions surfaced to the caller.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// |v|/c is above 0.3: Galilean kinematics are getting rough.
    MarginallyRelativistic { v_over_c: f64 },
    /// The decay rate is not small against the transition frequency, so the
    /// perturbative treatment of the classical resonance is strained.
    LowQualityFactor { rate_over_omega0: f64 },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::MarginallyRelativistic { v_over_c } => write!(
                f,
                "|v|/c = {v_over_c:.3} > 0.3: non-relativistic treatment is marginal"
            ),
            Warning::LowQualityFactor { rate_over_omega0 } => write!(
                f,
                "decay rate / omega0 = {rate_over_omega0:.2e} > 1e-3: \
                 perturbative high-Q assumption is strained"
            ),
        }
    }
}

/// The physical scenario: a two-level atom at height `d` above a plasmonic
/// half-space, with the slab sliding at velocity `v` along x relative to the
/// atom (the atom moves at `-v` in the slab frame).
///
/// The transition dipole is real and oriented along z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    /// Atomic transition angular frequency, rad/s.
    pub omega0: f64,
    /// Surface-plasmon resonance angular frequency, rad/s.
    pub omega_sp: f64,
    /// Atom-surface distance, m.
    pub d: f64,
    /// Relative velocity of the slab with respect to the atom, m/s. May be
    /// negative; must be nonzero for the rate operations.
    pub v: f64,
    /// Transition-dipole magnitude, C m.
    pub gamma_eg: f64,
}

impl SystemConfig {
    /// Validates and builds a configuration. `v = 0` is allowed here (sweeps
    /// emit null records for it); the rate operations reject it themselves.
    pub fn new(
        omega0: f64,
        omega_sp: f64,
        d: f64,
        v: f64,
        gamma_eg: f64,
    ) -> Result<Self, ConfigError> {
        for (field, value) in [
            ("omega0", omega0),
            ("omega_sp", omega_sp),
            ("d", d),
            ("gamma_eg", gamma_eg),
        ] {
            if !value.is_finite() {
                return Err(ConfigError::NotFinite { field, value });
            }
            if value <= 0.0 {
                return Err(ConfigError::NonPositive { field, value });
            }
        }
        if !v.is_finite() {
            return Err(ConfigError::NotFinite { field: "v", value: v });
        }
        let v_over_c = v.abs() / SPEED_OF_LIGHT;
        if v_over_c >= MAX_V_OVER_C {
            return Err(ConfigError::RelativisticVelocity { v_over_c });
        }
        Ok(Self {
            omega0,
            omega_sp,
            d,
            v,
            gamma_eg,
        })
    }

    /// Non-fatal advisories for this configuration.
    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        let v_over_c = self.v.abs() / SPEED_OF_LIGHT;
        if v_over_c > WARN_V_OVER_C {
            out.push(Warning::MarginallyRelativistic { v_over_c });
        }
        out
    }

    /// The dimensionless pair (a, b) controlling the quasi-static results.
    /// Fails for `v = 0`, where both parameters diverge.
    pub fn normalized(&self) -> Result<NormalizedParams, ConfigError> {
        if self.v == 0.0 {
            return Err(ConfigError::ZeroVelocity);
        }
        let speed = self.v.abs();
        Ok(NormalizedParams {
            a: self.omega0 * self.d / speed,
            b: self.omega_sp * self.d / speed,
        })
    }
}

/// The dimensionless pair `a = omega0 d / |v|`, `b = omega_sp d / |v|`.
///
/// Physical configurations always have `a > 0`; raw kernel evaluations accept
/// any real `a` so parameter sweeps can cross zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedParams {
    pub a: f64,
    pub b: f64,
}

impl NormalizedParams {
    /// Builds the pair directly. Only `b > 0` is required.
    pub fn new(a: f64, b: f64) -> Result<Self, ConfigError> {
        if !a.is_finite() {
            return Err(ConfigError::NotFinite { field: "a", value: a });
        }
        if !b.is_finite() {
            return Err(ConfigError::NotFinite { field: "b", value: b });
        }
        if b <= 0.0 {
            return Err(ConfigError::NonPositive { field: "b", value: b });
        }
        Ok(Self { a, b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(v: f64) -> Result<SystemConfig, ConfigError> {
        SystemConfig::new(4.06e15, 4.06e15, 3e-9, v, 8.48e-30)
    }

    #[test]
    fn rejects_nonpositive_fields() {
        assert!(matches!(
            SystemConfig::new(0.0, 1.0, 1.0, 1.0, 1.0),
            Err(ConfigError::NonPositive { field: "omega0", .. })
        ));
        assert!(matches!(
            SystemConfig::new(1.0, 1.0, -1.0, 1.0, 1.0),
            Err(ConfigError::NonPositive { field: "d", .. })
        ));
    }

    #[test]
    fn velocity_bounds() {
        assert!(matches!(
            config(0.6 * SPEED_OF_LIGHT),
            Err(ConfigError::RelativisticVelocity { .. })
        ));
        let cfg = config(0.4 * SPEED_OF_LIGHT).unwrap();
        assert_eq!(cfg.warnings().len(), 1);
        let cfg = config(0.1 * SPEED_OF_LIGHT).unwrap();
        assert!(cfg.warnings().is_empty());
    }

    #[test]
    fn zero_velocity_is_storable_but_not_normalizable() {
        let cfg = config(0.0).unwrap();
        assert_eq!(cfg.normalized(), Err(ConfigError::ZeroVelocity));
    }

    #[test]
    fn normalized_uses_speed_not_sign() {
        let fwd = config(8.2e7).unwrap().normalized().unwrap();
        let bwd = config(-8.2e7).unwrap().normalized().unwrap();
        assert_eq!(fwd, bwd);
        assert!(fwd.a > 0.0 && fwd.b > 0.0);
    }

    #[test]
    fn raw_params_allow_negative_a() {
        assert!(NormalizedParams::new(-3.0, 1.0).is_ok());
        assert!(NormalizedParams::new(1.0, 0.0).is_err());
    }
}
