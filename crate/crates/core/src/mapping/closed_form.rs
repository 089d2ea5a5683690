//! Closed-form kernels. Inputs are assumed validated: inside the (clamped)
//! domain, finite, and off the axes for the axial kinds. The radicals are
//! written in rearranged forms whose terms are nonnegative on the domain so
//! that nothing cancels near the rims.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};

/// Discriminants in `[-DISCRIMINANT_SLACK, 0)` are treated as zero.
pub const DISCRIMINANT_SLACK: f64 = 1e-12;

pub(crate) fn discriminant(value: f64, what: &str) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -DISCRIMINANT_SLACK {
        Ok(0.0)
    } else if value.is_nan() {
        Err(Error::Numeric(format!("{what} discriminant is NaN")))
    } else {
        Err(Error::Numeric(format!("{what} discriminant is negative ({value:e})")))
    }
}

/// `(1 - |a|)(1 + |a|)`, i.e. `1 - a²` without cancellation near `|a| = 1`.
#[inline]
fn one_minus_sq(a: f64) -> f64 {
    let a = a.abs();
    (1.0 - a) * (1.0 + a)
}

#[inline]
fn scale(g: f64, x: f64, y: f64) -> (f64, f64) {
    (g * x, g * y)
}

// Square → disc ---------------------------------------------------------

pub fn fg_squircular(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    scale((1.0 - p / r2).sqrt(), x, y)
}

pub fn elliptical_grid(x: f64, y: f64) -> (f64, f64) {
    (x * (1.0 - 0.5 * y * y).sqrt(), y * (1.0 - 0.5 * x * x).sqrt())
}

pub fn two_squircular(x: f64, y: f64) -> (f64, f64) {
    let p = x * x * y * y;
    scale((1.0 / (1.0 + p)).sqrt(), x, y)
}

pub fn three_squircular(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    scale(SQRT_2 / (1.0 + (1.0 + 4.0 * p * r2).sqrt()).sqrt(), x, y)
}

/// Squared squircle radius of the tapered2 continuum,
/// `(x² + y² − 2x²y²) / (1 − x²y²)`.
pub fn tapered2_t2(x: f64, y: f64) -> f64 {
    let (xx, yy) = (x * x, y * y);
    let (ax, ay) = (one_minus_sq(x), one_minus_sq(y));
    let den = ax + xx * ay;
    if den == 0.0 {
        return 1.0;
    }
    (xx * ay + yy * ax) / den
}

pub fn tapered2(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    scale((tapered2_t2(x, y) / r2).sqrt(), x, y)
}

pub fn tapered4_t2(x: f64, y: f64) -> f64 {
    let (xx, yy) = (x * x, y * y);
    let r2 = xx + yy;
    let p = xx * yy;
    let (ax, ay) = (one_minus_sq(x), one_minus_sq(y));
    let one_minus_p = ax + xx * ay;
    let d = one_minus_p * one_minus_p + 2.0 * p * ax * ay;
    (2.0 * r2 - 3.0 * p) / (1.0 + d.sqrt())
}

pub fn tapered4(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    scale((tapered4_t2(x, y) / r2).sqrt(), x, y)
}

pub fn non_axial_2(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    scale(r2.sqrt() / (1.0 + p), x, y)
}

pub fn non_axial_half(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    if r2 == 0.0 {
        return (x, y);
    }
    let p = x * x * y * y;
    scale(1.0 / (r2 * (1.0 + p)).sqrt().sqrt(), x, y)
}

pub fn squelched_grid(x: f64, y: f64) -> (f64, f64) {
    let (ax, ay) = (one_minus_sq(x), one_minus_sq(y));
    let den = ax + x * x * ay;
    (x * (ay / den).sqrt(), y * (ax / den).sqrt())
}

pub fn vertical_squelch(x: f64, y: f64) -> (f64, f64) {
    (x, y * one_minus_sq(x).sqrt())
}

pub fn horizontal_squelch(x: f64, y: f64) -> (f64, f64) {
    (x * one_minus_sq(y).sqrt(), y)
}

pub fn blended_grid(beta: f64, x: f64, y: f64) -> (f64, f64) {
    let (xx, yy) = (x * x, y * y);
    let (ax, ay) = (one_minus_sq(x), one_minus_sq(y));
    let b1 = 1.0 + beta;
    let fu = (1.0 + beta * ay) * (ay + beta * ax) / (b1 * (ax + ay * (xx + beta * ax)));
    let fv = (1.0 + beta * ax) * (ax + beta * ay) / (b1 * (ay + ax * (yy + beta * ay)));
    (x * fu.sqrt(), y * fv.sqrt())
}

pub fn three_halves_t(x: f64, y: f64) -> f64 {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    2.0 * r2 / ((p * p + 4.0 * r2).sqrt() + p)
}

pub fn three_halves_squircular(x: f64, y: f64) -> (f64, f64) {
    let r = x.hypot(y);
    scale(three_halves_t(x, y) / r, x, y)
}

/// Largest real root of `t³ − (x² + y²)t + x²y² = 0`.
pub fn half_t(x: f64, y: f64) -> f64 {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    let arg = (-3.0 * 3f64.sqrt() * p / (2.0 * r2 * r2.sqrt())).clamp(-1.0, 1.0);
    2.0 * (r2 / 3.0).sqrt() * (arg.acos() / 3.0).cos()
}

pub fn half_squircular(x: f64, y: f64) -> (f64, f64) {
    let r = x.hypot(y);
    scale(half_t(x, y) / r, x, y)
}

/// Squared radius `τ = t²`: the single real root of `x²y²τ³ + τ − (x² + y²) = 0`.
pub fn four_t2(x: f64, y: f64) -> f64 {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    if p == 0.0 {
        return r2;
    }
    let root3p = (3.0 * p).sqrt();
    2.0 / root3p * ((1.5 * r2 * root3p).asinh() / 3.0).sinh()
}

pub fn four_squircular(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    scale((four_t2(x, y) / r2).sqrt(), x, y)
}

pub fn non_axial_tapered2(x: f64, y: f64) -> (f64, f64) {
    let r2 = x * x + y * y;
    let p = x * x * y * y;
    scale((2.0 + 2.0 * p - r2).sqrt() / (1.0 + p), x, y)
}

pub fn lame_radial(x: f64, y: f64) -> (f64, f64) {
    let (ax, ay) = (x.abs(), y.abs());
    let (hi, lo) = if ax >= ay { (ax, ay) } else { (ay, ax) };
    let r = x.hypot(y);
    let den = (1.0 - ax) * (1.0 - ay);
    // On the rim the exponent is infinite and the Lamé norm is the max norm.
    let norm = if den <= 0.0 {
        hi
    } else {
        let e = 2.0 / den;
        hi * (1.0 + (lo / hi).powf(e)).powf(1.0 / e)
    };
    scale(norm / r, x, y)
}

// Disc → square ---------------------------------------------------------

/// `1 − u² − v²`, computed so the result is exact to a few ulps near the rim.
#[inline]
fn rim_gap(u: f64, v: f64) -> f64 {
    one_minus_sq(u) - v * v
}

/// Shared tail of the squircular inverses: `√2 / √(1 + √disc)`.
#[inline]
fn squircular_root(disc: f64, what: &str) -> Result<f64> {
    Ok(SQRT_2 / (1.0 + discriminant(disc, what)?.sqrt()).sqrt())
}

pub fn fg_squircular_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    let d = u * u - v * v;
    let h = squircular_root(rim_gap(u, v) + d * d / r2, "FG-Squircular")?;
    Ok(scale(h, u, v))
}

pub fn elliptical_grid_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    Ok((grid_coordinate(1.0, u, v)?, grid_coordinate(1.0, v, u)?))
}

pub fn two_squircular_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    let d = u * u - v * v;
    let h = squircular_root(rim_gap(u, v) * (1.0 + r2) + d * d, "2-Squircular")?;
    Ok(scale(h, u, v))
}

pub fn three_squircular_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    let d = u * u - v * v;
    let disc = rim_gap(u, v) * (1.0 + r2 + r2 * r2) + r2 * d * d;
    Ok(scale(squircular_root(disc, "3-Squircular")?, u, v))
}

pub fn tapered2_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    let d = u * u - v * v;
    let gap = rim_gap(u, v);
    let disc = gap * gap + d * d * (2.0 - r2) / r2;
    Ok(scale(squircular_root(disc, "Tapered2")?, u, v))
}

pub fn tapered4_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    let d = u * u - v * v;
    let gap = rim_gap(u, v);
    let disc = 0.5 * gap * gap * (2.0 + r2) + d * d * (3.0 - r2 * r2) / (2.0 * r2);
    Ok(scale(squircular_root(disc, "Tapered4")?, u, v))
}

pub fn non_axial_2_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    if r2 == 0.0 {
        return Ok((u, v));
    }
    let q = u * u * v * v;
    let d = u * u - v * v;
    let inner = discriminant(r2 * rim_gap(u, v) + d * d, "Non-Axial 2")?;
    let h = (2.0 / (r2 - 2.0 * q + r2.sqrt() * inner.sqrt())).sqrt().sqrt();
    Ok(scale(h, u, v))
}

pub fn non_axial_half_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let r2 = u * u + v * v;
    let d = u * u - v * v;
    let disc = rim_gap(u, v) * (1.0 + r2) * (1.0 + r2 * r2) + d * d * r2 * r2;
    let h = squircular_root(disc, "Non-Axial 1/2")? * r2.sqrt();
    Ok(scale(h, u, v))
}

pub fn squelched_grid_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    Ok((u / one_minus_sq(v).sqrt(), v / one_minus_sq(u).sqrt()))
}

pub fn vertical_squelch_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    Ok((u, v / one_minus_sq(u).sqrt()))
}

pub fn horizontal_squelch_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    Ok((u / one_minus_sq(v).sqrt(), v))
}

pub fn blended_grid_inv(beta: f64, u: f64, v: f64) -> Result<(f64, f64)> {
    Ok((grid_coordinate(beta, u, v)?, grid_coordinate(beta, v, u)?))
}

/// One coordinate of the blended grid inverse,
/// `u·√(2(β+1) / (P + √(P² − 4β(β+1)u²)))` with `P = β + 1 + βu² − w²`.
///
/// The discriminant factors as `(P − 2√(β(β+1))|u|)(P + 2√(β(β+1))|u|)`, and
/// the smaller factor equals `(1 − u² − w²) + (√β − √(β+1)|u|)²`, so it is
/// nonnegative everywhere on the closed disc.
fn grid_coordinate(beta: f64, u: f64, w: f64) -> Result<f64> {
    let b1 = beta + 1.0;
    let p = b1 + beta * u * u - w * w;
    let cross = 2.0 * (beta * b1).sqrt() * u.abs();
    let near = rim_gap(u, w) + (beta.sqrt() - b1.sqrt() * u.abs()).powi(2);
    let disc = discriminant(near * (p + cross), "Blended Elliptical Grid")?;
    Ok(u * (2.0 * b1 / (p + disc.sqrt())).sqrt())
}

pub fn lame_parametric_inv(u: f64, v: f64) -> Result<(f64, f64)> {
    let e = rim_gap(u, v);
    let f = |a: f64| if a == 0.0 { 0.0 } else { a.signum() * a.abs().powf(e) };
    Ok((f(u), f(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_rule() {
        assert_eq!(discriminant(-5e-13, "t").unwrap(), 0.0);
        assert_eq!(discriminant(0.25, "t").unwrap(), 0.25);
        assert!(matches!(discriminant(-2e-12, "t"), Err(Error::Numeric(_))));
        assert!(discriminant(f64::NAN, "t").is_err());
    }

    #[test]
    fn half_t_is_the_largest_root() {
        for &(x, y) in &[(0.3, 0.8), (1.0, 1.0), (0.9, 0.1), (0.5, 0.5)] {
            let t = half_t(x, y);
            let (r2, p) = (x * x + y * y, x * x * y * y);
            assert!((t * t * t - r2 * t + p).abs() < 1e-15);
            assert!(t * t <= r2 + 1e-15);
        }
    }

    #[test]
    fn four_t2_solves_its_cubic() {
        for &(x, y) in &[(0.3, 0.8), (1.0, 1.0), (0.9, 1e-4), (0.5, 0.5)] {
            let tau = four_t2(x, y);
            let (r2, p) = (x * x + y * y, x * x * y * y);
            assert!((p * tau * tau * tau + tau - r2).abs() < 1e-15, "{x} {y}");
        }
    }
}
