//! Fixed physical constants (CODATA 2018). These are never user-supplied.

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Vacuum permittivity, F/m.
pub const EPS0: f64 = 8.854_187_812_8e-12;

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// The constants bundled as a value, for code that wants to pass them around
/// explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant, J s.
    pub hbar: f64,
    /// Vacuum permittivity, F/m.
    pub eps0: f64,
    /// Speed of light, m/s.
    pub c: f64,
}

impl PhysicalConstants {
    /// The one and only instance: CODATA 2018 SI values.
    pub const SI: Self = Self {
        hbar: HBAR,
        eps0: EPS0,
        c: SPEED_OF_LIGHT,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::SI
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_strictly_positive() {
        let k = PhysicalConstants::SI;
        assert!(k.hbar > 0.0 && k.eps0 > 0.0 && k.c > 0.0);
    }
}
