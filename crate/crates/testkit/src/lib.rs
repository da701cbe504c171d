//! Independent reference routines for the test suites.
//!
//! Nothing in this crate is used by the library implementation itself: the
//! point is to provide a second, structurally different route to the same
//! numbers so that the quadrature-based kernel can be checked against a
//! Bessel-function form. The modified Bessel functions here are built from
//! the ascending series (small argument) and the `cosh` integral
//! representation evaluated with the trapezoidal rule (large argument),
//! which bears no relation to the adaptive Gauss-Legendre path under test.

use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Modified Bessel function of the second kind, order zero.
///
/// Accurate to roughly 1e-13 relative for `x` in (0, ~690].
pub fn bessel_k0(x: f64) -> f64 {
    assert!(x > 0.0, "bessel_k0: x must be positive");
    if x <= 2.0 {
        k0_series(x)
    } else {
        k_integral(0, x)
    }
}

/// Modified Bessel function of the second kind, order one.
pub fn bessel_k1(x: f64) -> f64 {
    assert!(x > 0.0, "bessel_k1: x must be positive");
    if x <= 2.0 {
        k1_series(x)
    } else {
        k_integral(1, x)
    }
}

/// Modified Bessel function of the second kind, order two, via the stable
/// upward recurrence K2(x) = K0(x) + 2 K1(x) / x.
pub fn bessel_k2(x: f64) -> f64 {
    bessel_k0(x) + 2.0 * bessel_k1(x) / x
}

/// Bessel-form reference for the dimensionless emission kernel:
///
/// ```text
/// G(a, b) = (b / 16 pi) c^2 [K0(2c) + K2(2c)],   c = |a - b|,
/// ```
///
/// with the exact limit `b / 32 pi` at `c = 0`. This is the closed form the
/// quadrature implementation is validated against.
pub fn g_reference(a: f64, b: f64) -> f64 {
    let c = (a - b).abs();
    if c == 0.0 {
        return b / (32.0 * PI);
    }
    b / (16.0 * PI) * c * c * (bessel_k0(2.0 * c) + bessel_k2(2.0 * c))
}

/// Ascending series for K0 (A&S 9.6.13), converged to machine precision for
/// x <= 2.
fn k0_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0; // q^k / (k!)^2
    let mut i0 = 1.0;
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for k in 1..64 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        sum += term * harmonic;
        if term < 1e-18 * i0 {
            break;
        }
    }
    -((x / 2.0).ln() + EULER_GAMMA) * i0 + sum
}

/// Ascending series for K1 (A&S 9.6.11 with n = 1).
fn k1_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0; // q^k / (k! (k+1)!)
    let mut i1 = 1.0; // I1(x) * 2 / x
    let mut psi_k = -EULER_GAMMA; // psi(k + 1)
    let mut psi_k1 = 1.0 - EULER_GAMMA; // psi(k + 2)
    let mut sum = psi_k + psi_k1;
    for k in 1..64 {
        let kf = k as f64;
        term *= q / (kf * (kf + 1.0));
        psi_k += 1.0 / kf;
        psi_k1 += 1.0 / (kf + 1.0);
        i1 += term;
        sum += term * (psi_k + psi_k1);
        if term < 1e-18 * i1 {
            break;
        }
    }
    1.0 / x + (x / 2.0) * ((x / 2.0).ln() * i1 - 0.5 * sum)
}

/// Trapezoidal evaluation of K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
///
/// The integrand decays double-exponentially in t, so the trapezoidal rule
/// converges spectrally; h = 1/64 leaves errors far below 1e-13 for x >= 2.
fn k_integral(nu: u32, x: f64) -> f64 {
    let h = 1.0 / 64.0;
    let nu = nu as f64;
    // exp(-x (cosh t - 1)) reaches the underflow floor once
    // x (cosh t - 1) > ~760; stop there.
    let t_max = ((760.0 / x) + 1.0).acosh() + 1.0;
    let mut sum = 0.5; // t = 0 endpoint: integrand is exp(0) * cosh(0) = 1
    let mut t = h;
    while t < t_max {
        sum += (-x * (t.cosh() - 1.0)).exp() * (nu * t).cosh();
        t += h;
    }
    sum * h * (-x).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_rel(got: f64, want: f64, tol: f64) {
        let err = (got - want).abs() / want.abs();
        assert!(
            err <= tol,
            "got {got:e}, want {want:e}, rel err {err:e} > {tol:e}"
        );
    }

    // Reference values computed with 40-digit mpmath.
    #[test]
    fn k0_matches_reference() {
        assert_rel(bessel_k0(0.1), 2.4270690247020166, 1e-13);
        assert_rel(bessel_k0(0.296), 1.3847773153079562, 1e-13);
        assert_rel(bessel_k0(0.592), 0.7880399842990261, 1e-13);
        assert_rel(bessel_k0(2.0), 0.11389387274953344, 1e-13);
        assert_rel(bessel_k0(3.2376535706100903), 0.02642969332577296, 1e-13);
        assert_rel(bessel_k0(7.5), 2.491776163561144e-4, 1e-13);
        assert_rel(bessel_k0(20.0), 5.741237815336524e-10, 1e-13);
        assert_rel(bessel_k0(200.0), 1.2256819797765335e-88, 1e-13);
    }

    #[test]
    fn k1_matches_reference() {
        assert_rel(bessel_k1(0.1), 9.853844780870606, 1e-13);
        assert_rel(bessel_k1(0.296), 3.102840839446086, 1e-13);
        assert_rel(bessel_k1(0.592), 1.3267451549856897, 1e-13);
        assert_rel(bessel_k1(2.0), 0.13986588181652243, 1e-13);
        assert_rel(bessel_k1(7.5), 2.652973901252895e-4, 1e-13);
        assert_rel(bessel_k1(200.0), 1.2287423734729858e-88, 1e-13);
    }

    #[test]
    fn k2_matches_reference() {
        assert_rel(bessel_k2(0.1), 199.50396464211414, 1e-13);
        assert_rel(bessel_k2(0.592), 5.270287129520951, 1e-13);
        assert_rel(bessel_k2(2.0), 0.25375975456605586, 1e-13);
        assert_rel(bessel_k2(3.2376535706100903), 0.04512465169224328, 1e-13);
        assert_rel(bessel_k2(20.0), 6.329543612292228e-10, 1e-13);
        assert_rel(bessel_k2(200.0), 1.2379694035112633e-88, 1e-13);
    }

    #[test]
    fn series_and_integral_agree_at_crossover() {
        // Both branches are valid near x = 2; they must agree with each other.
        for &x in &[1.9, 1.95, 2.0] {
            assert_rel(k0_series(x), k_integral(0, x), 1e-13);
            assert_rel(k1_series(x), k_integral(1, x), 1e-13);
        }
    }

    #[test]
    fn g_reference_limits() {
        // c = 0 limit is exact.
        assert_eq!(g_reference(0.148, 0.148), 0.148 / (32.0 * PI));
        // mpmath: G(-0.148, 0.148) = 1.5628885199775107e-3.
        assert_rel(g_reference(-0.148, 0.148), 1.5628885199775107e-3, 1e-13);
    }
}
