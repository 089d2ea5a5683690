//! The Schwarz-Christoffel conformal map between square and disc, built on
//! `cn` in one direction and the incomplete integral `F` in the other.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::elliptic::{jacobi_cn, legendre_f, Complex, EllipticModulus, K_E};
use crate::error::Result;

const ROTATE_POS: Complex = Complex::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
const ROTATE_NEG: Complex = Complex::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2);

pub fn forward(x: f64, y: f64) -> Result<(f64, f64)> {
    let z = Complex::new(0.5 * K_E, 0.5 * K_E) * Complex::new(x, y) - K_E;
    let w = ROTATE_NEG * jacobi_cn(z, EllipticModulus::SQUARE)?;
    Ok((w.re, w.im))
}

pub fn inverse(u: f64, v: f64) -> Result<(f64, f64)> {
    let phi = (ROTATE_POS * Complex::new(u, v)).acos();
    let s = Complex::new(1.0, -1.0) / -K_E * legendre_f(phi, EllipticModulus::SQUARE)?;
    Ok((s.re + 1.0, s.im - 1.0))
}
