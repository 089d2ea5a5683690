//! Complex-argument elliptic functions for the conformal square map.
//!
//! The incomplete integral of the first kind is evaluated through Carlson's
//! symmetric form `R_F` (duplication + fifth-order series), which stays
//! well-behaved for complex arguments. Jacobi `cn` with complex argument is
//! assembled from real `sn`/`cn`/`dn` values (descending Landen / AGM) via
//! the addition theorem and Jacobi's imaginary transformation.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// Iteration budget shared by the AGM and duplication loops.
pub const MAX_ITERATIONS: usize = 64;

/// AGM convergence tolerance.
pub const AGM_TOL: f64 = 1e-14;

/// Quarter period `K(1/√2) = F(π/2, 1/√2)`.
pub const K_E: f64 = 1.854_074_677_301_372;

/// `R_F` duplication stops once every argument is within this relative
/// distance of the mean; the truncated series then carries an error of
/// roughly `ERRTOL^6 / 4`.
const RF_ERRTOL: f64 = 0.0025;

/// Elliptic modulus `k` with `0 ≤ k < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    /// `k = 1/√2`, the only modulus the conformal square map needs.
    pub const SQUARE: EllipticModulus = EllipticModulus(FRAC_1_SQRT_2);

    pub fn new(k: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&k) {
            return Err(Error::Param(format!(
                "elliptic modulus must satisfy 0 <= k < 1, got {k}"
            )));
        }
        Ok(EllipticModulus(k))
    }

    pub fn k(self) -> f64 {
        self.0
    }

    /// Complementary modulus `k' = √(1 − k²)`.
    pub fn complementary(self) -> EllipticModulus {
        EllipticModulus(((1.0 - self.0) * (1.0 + self.0)).sqrt())
    }
}

/// The quarter period `Kₑ` used by the Schwarz-Christoffel square mapping.
pub fn k_e() -> f64 {
    K_E
}

/// Complete integral of the first kind, `K(k) = π / (2·AGM(1, k'))`.
pub fn complete_k(k: EllipticModulus) -> Result<f64> {
    let mut a = 1.0;
    let mut b = k.complementary().0;
    for _ in 0..MAX_ITERATIONS {
        if (a - b).abs() <= AGM_TOL * a {
            return Ok(PI / (a + b));
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Err(Error::Convergence {
        what: "AGM for K(k)".into(),
        iterations: MAX_ITERATIONS,
    })
}

/// Carlson's symmetric integral `R_F(x, y, z)` for complex arguments off
/// the non-positive real axis (at most one of them may be zero).
pub fn carlson_rf(x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..MAX_ITERATIONS {
        let mean = (x + y + z) / 3.0;
        let dx = (mean - x) / mean;
        let dy = (mean - y) / mean;
        let dz = (mean - z) / mean;
        if dx.norm().max(dy.norm()).max(dz.norm()) < RF_ERRTOL {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            let series = 1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0;
            return Ok(series / mean.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    Err(Error::Convergence {
        what: "Carlson R_F duplication".into(),
        iterations: MAX_ITERATIONS,
    })
}

/// Incomplete Legendre integral of the first kind,
/// `F(φ, k) = ∫₀^φ dt / √(1 − k² sin² t)`, for complex amplitude `φ`.
///
/// The real part of `φ` is reduced into `[−π/2, π/2]` with
/// `F(φ + nπ) = F(φ) + 2nK`; inside that strip `cos φ` has a positive real
/// part and `sin φ · R_F(cos²φ, 1 − k² sin²φ, 1)` is the principal branch.
pub fn legendre_f(phi: Complex64, k: EllipticModulus) -> Result<Complex64> {
    if !(phi.re.is_finite() && phi.im.is_finite()) {
        return Err(Error::domain(format!("non-finite amplitude {phi}")));
    }
    if phi.re == 0.0 && phi.im == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let periods = (phi.re / PI).round();
    let reduced = phi - periods * PI;
    let (s, c) = (reduced.sin(), reduced.cos());
    let delta = 1.0 - k.0 * k.0 * s * s;
    let one = Complex64::new(1.0, 0.0);
    let mut value = s * carlson_rf(c * c, delta, one)?;
    if periods != 0.0 {
        let quarter = if k == EllipticModulus::SQUARE {
            K_E
        } else {
            complete_k(k)?
        };
        value += 2.0 * periods * quarter;
    }
    Ok(value)
}

/// Real Jacobi functions `(sn, cn, dn)` by the descending Landen (AGM)
/// scheme.
pub fn jacobi_real(u: f64, k: EllipticModulus) -> Result<(f64, f64, f64)> {
    if !u.is_finite() {
        return Err(Error::domain(format!("non-finite argument {u}")));
    }
    let m = k.0 * k.0;
    if m == 0.0 {
        return Ok((u.sin(), u.cos(), 1.0));
    }
    let mut a = [0.0; MAX_ITERATIONS + 1];
    let mut c = [0.0; MAX_ITERATIONS + 1];
    a[0] = 1.0;
    c[0] = k.0;
    let mut b = k.complementary().0;
    let mut n = 0;
    while c[n].abs() > AGM_TOL * a[n] {
        if n == MAX_ITERATIONS {
            return Err(Error::Convergence {
                what: "AGM for Jacobi functions".into(),
                iterations: MAX_ITERATIONS,
            });
        }
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    let (sn, cn) = phi.sin_cos();
    let dn = (1.0 - m * sn * sn).sqrt();
    Ok((sn, cn, dn))
}

/// Jacobi `cn(z, k)` for complex `z`.
///
/// With `z = x + iy`, the addition theorem combined with
/// `sn(iy, k) = i·sc(y, k')`, `cn(iy, k) = nc(y, k')`, `dn(iy, k) = dc(y, k')`
/// gives
///
/// ```text
/// cn(z) = (c₁c₂ − i·s₁d₁s₂d₂) / (c₂² + k²s₁²s₂²)
/// ```
///
/// where `(s₁, c₁, d₁)` are taken at `(x, k)` and `(s₂, c₂, d₂)` at `(y, k')`.
pub fn jacobi_cn(z: Complex64, k: EllipticModulus) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("non-finite argument {z}")));
    }
    let (s1, c1, d1) = jacobi_real(z.re, k)?;
    if z.im == 0.0 {
        return Ok(Complex64::new(c1, 0.0));
    }
    let (s2, c2, d2) = jacobi_real(z.im, k.complementary())?;
    let denom = c2 * c2 + k.0 * k.0 * s1 * s1 * s2 * s2;
    if denom == 0.0 {
        return Err(Error::Numeric(format!("cn has a pole at {z}")));
    }
    Ok(Complex64::new(c1 * c2, -s1 * d1 * s2 * d2) / denom)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    const HALF_TURN_AMPLITUDE: Complex64 = Complex64::new(FRAC_PI_2, 0.0);

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn quarter_period_matches_agm_and_legendre() {
        let agm = complete_k(EllipticModulus::SQUARE).unwrap();
        assert!((agm - K_E).abs() < 1e-15);
        let f = legendre_f(HALF_TURN_AMPLITUDE, EllipticModulus::SQUARE).unwrap();
        assert!((f.re - k_e()).abs() < 1e-14);
        assert!(f.im.abs() < 1e-15);
        assert!((k_e() - 1.854).abs() < 5e-4);
        assert!(k_e() > 0.0);
    }

    #[test]
    fn legendre_f_zero_amplitude() {
        let f = legendre_f(Complex64::new(0.0, 0.0), EllipticModulus::SQUARE).unwrap();
        assert_eq!(f, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn legendre_f_matches_high_precision_reference() {
        // mpmath.ellipf(0.3+0.2j, m=0.5) at 40 digits
        let f = legendre_f(Complex64::new(0.3, 0.2), EllipticModulus::SQUARE).unwrap();
        let expected = Complex64::new(0.299_238_320_521_105_93, 0.203_837_067_539_382_28);
        assert!(close(f, expected, 1e-14), "{f}");
    }

    #[test]
    fn legendre_f_reflects_past_quarter_turn() {
        let k = EllipticModulus::SQUARE;
        let phi = Complex64::new(2.0, 0.0);
        let f = legendre_f(phi, k).unwrap();
        let mirrored = legendre_f(Complex64::new(PI - 2.0, 0.0), k).unwrap();
        assert!((f.re - (2.0 * K_E - mirrored.re)).abs() < 1e-14);
        assert_eq!(f.im, 0.0);
    }

    #[test]
    fn jacobi_cn_special_values() {
        let k = EllipticModulus::SQUARE;
        let at_zero = jacobi_cn(Complex64::new(0.0, 0.0), k).unwrap();
        assert!(close(at_zero, Complex64::new(1.0, 0.0), 1e-15));
        let at_quarter = jacobi_cn(Complex64::new(K_E, 0.0), k).unwrap();
        assert!(at_quarter.norm() < 1e-14, "{at_quarter}");
    }

    #[test]
    fn jacobi_cn_matches_high_precision_reference() {
        // mpmath.ellipfun('cn', 0.5+0.1j, m=0.5) at 40 digits
        let cn = jacobi_cn(Complex64::new(0.5, 0.1), EllipticModulus::SQUARE).unwrap();
        let expected = Complex64::new(0.885_702_476_797_494_35, -0.044_563_800_738_420_8);
        assert!(close(cn, expected, 1e-14), "{cn}");
    }

    #[test]
    fn real_jacobi_identities() {
        let k = EllipticModulus::new(0.6).unwrap();
        for i in 0..50 {
            let u = -4.0 + 0.17 * i as f64;
            let (sn, cn, dn) = jacobi_real(u, k).unwrap();
            assert!((sn * sn + cn * cn - 1.0).abs() < 1e-14);
            assert!((dn * dn + 0.36 * sn * sn - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn modulus_bounds() {
        assert!(EllipticModulus::new(1.0).is_err());
        assert!(EllipticModulus::new(-0.1).is_err());
        assert!(EllipticModulus::new(0.0).is_ok());
    }

    #[test]
    fn rf_of_equal_arguments() {
        // R_F(x, x, x) = x^{-1/2}
        let x = Complex64::new(0.3, 0.4);
        let rf = carlson_rf(x, x, x).unwrap();
        assert!(close(rf, 1.0 / x.sqrt(), 1e-15));
    }
}
