//! Square ↔ disc mappings behind one registry.
//!
//! Every entry point validates its input against the kind's domain, applies
//! the axis pass-through for axial kinds, evaluates the closed form (or the
//! numeric fallback when the direction has none), and finally clamps the
//! result into the codomain to absorb rounding.

pub mod closed_form;
mod conformal;
mod kind;
mod squircle;

pub use kind::{Capabilities, MappingKind, Openness, DEFAULT_BLEND};
pub use squircle::{RampantFn, SquircleParams};

use crate::error::{Direction, Error, Result};
use crate::invert::{self, InversionConfig};
use crate::point::{DiscPoint, SquarePoint};

use closed_form as cf;

/// Inputs this far outside a closed domain are still accepted and clamped.
pub const DOMAIN_SLACK: f64 = 1e-12;

/// What to do when a direction has no closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Fallback {
    Disabled,
    Numeric(InversionConfig),
}

impl Default for Fallback {
    fn default() -> Self {
        Fallback::Numeric(InversionConfig::default())
    }
}

/// Square → disc with the default numeric fallback.
pub fn square_to_disc(kind: MappingKind, p: SquarePoint) -> Result<DiscPoint> {
    square_to_disc_with(kind, p, Fallback::default())
}

/// Disc → square with the default numeric fallback.
pub fn disc_to_square(kind: MappingKind, p: DiscPoint) -> Result<SquarePoint> {
    disc_to_square_with(kind, p, Fallback::default())
}

pub fn square_to_disc_with(kind: MappingKind, p: SquarePoint, fallback: Fallback) -> Result<DiscPoint> {
    let p = check_square(kind, p)?;
    if !kind.capabilities().analytic_forward {
        return match fallback {
            Fallback::Disabled => Err(Error::direction_unavailable(kind, Direction::SquareToDisc)),
            Fallback::Numeric(cfg) => invert::solve_disc(kind, p, &cfg).map(contain_disc),
        };
    }
    if kind.is_axial() && (p.x == 0.0 || p.y == 0.0) {
        return Ok(DiscPoint::new(p.x, p.y));
    }
    let (u, v) = forward_kernel(kind, p.x, p.y)?;
    Ok(contain_disc(DiscPoint::new(u, v)))
}

pub fn disc_to_square_with(kind: MappingKind, p: DiscPoint, fallback: Fallback) -> Result<SquarePoint> {
    let p = check_disc(kind, p)?;
    if !kind.capabilities().analytic_inverse {
        return match fallback {
            Fallback::Disabled => Err(Error::direction_unavailable(kind, Direction::DiscToSquare)),
            Fallback::Numeric(cfg) => invert::solve_square(kind, p, &cfg).map(contain_square),
        };
    }
    if kind.is_axial() && (p.u == 0.0 || p.v == 0.0) {
        return Ok(SquarePoint::new(p.u, p.v));
    }
    let (x, y) = inverse_kernel(kind, p.u, p.v)?;
    Ok(contain_square(SquarePoint::new(x, y)))
}

pub fn blended_grid_forward(beta: f64, p: SquarePoint) -> Result<DiscPoint> {
    square_to_disc(MappingKind::blended(beta)?, p)
}

pub fn blended_grid_inverse(beta: f64, p: DiscPoint) -> Result<SquarePoint> {
    disc_to_square(MappingKind::blended(beta)?, p)
}

pub fn lame_radial_forward(p: SquarePoint) -> Result<DiscPoint> {
    square_to_disc(MappingKind::LameRadial, p)
}

pub fn lame_parametric_disc_to_square(p: DiscPoint) -> Result<SquarePoint> {
    disc_to_square(MappingKind::LameParametric, p)
}

/// Squared radius `t²` of the squircle through `p` in the continuum the kind
/// is built on. For the non-axial kinds this is the radius before the
/// modulator is applied, so `u² + v² = m(t)²`.
pub fn continuum_value(kind: MappingKind, p: SquarePoint) -> Result<f64> {
    use MappingKind::*;
    let p = check_closed_square(p)?;
    let (x, y) = (p.x, p.y);
    let r2 = x * x + y * y;
    let xy2 = x * x * y * y;
    Ok(match kind {
        FgSquircular | VerticalSquelch | HorizontalSquelch => r2 - xy2,
        Tapered2 | SquelchedGrid => cf::tapered2_t2(x, y),
        TwoSquircular | NonAxial2 | NonAxialHalf | NonAxialTapered2 => r2 / (1.0 + xy2),
        ThreeSquircular => 2.0 * r2 / (1.0 + (1.0 + 4.0 * xy2 * r2).sqrt()),
        Tapered4 => cf::tapered4_t2(x, y),
        ThreeHalvesSquircular => cf::three_halves_t(x, y).powi(2),
        HalfSquircular => {
            if r2 == 0.0 {
                0.0
            } else {
                cf::half_t(x, y).powi(2)
            }
        }
        FourSquircular => cf::four_t2(x, y),
        _ => {
            return Err(Error::Capability {
                kind,
                operation: "a squircular continuum".into(),
            })
        }
    })
}

fn forward_kernel(kind: MappingKind, x: f64, y: f64) -> Result<(f64, f64)> {
    use MappingKind::*;
    Ok(match kind {
        SchwarzChristoffel => return conformal::forward(x, y),
        FgSquircular => cf::fg_squircular(x, y),
        EllipticalGrid => cf::elliptical_grid(x, y),
        TwoSquircular => cf::two_squircular(x, y),
        ThreeSquircular => cf::three_squircular(x, y),
        Tapered2 => cf::tapered2(x, y),
        Tapered4 => cf::tapered4(x, y),
        NonAxial2 => cf::non_axial_2(x, y),
        NonAxialHalf => cf::non_axial_half(x, y),
        SquelchedGrid => cf::squelched_grid(x, y),
        VerticalSquelch => cf::vertical_squelch(x, y),
        HorizontalSquelch => cf::horizontal_squelch(x, y),
        BlendedEllipticalGrid { beta } => cf::blended_grid(beta, x, y),
        ThreeHalvesSquircular => cf::three_halves_squircular(x, y),
        HalfSquircular => cf::half_squircular(x, y),
        FourSquircular => cf::four_squircular(x, y),
        NonAxialTapered2 => cf::non_axial_tapered2(x, y),
        LameRadial => cf::lame_radial(x, y),
        LameParametric => unreachable!("no closed-form forward"),
    })
}

fn inverse_kernel(kind: MappingKind, u: f64, v: f64) -> Result<(f64, f64)> {
    use MappingKind::*;
    match kind {
        SchwarzChristoffel => conformal::inverse(u, v),
        FgSquircular => cf::fg_squircular_inv(u, v),
        EllipticalGrid => cf::elliptical_grid_inv(u, v),
        TwoSquircular => cf::two_squircular_inv(u, v),
        ThreeSquircular => cf::three_squircular_inv(u, v),
        Tapered2 => cf::tapered2_inv(u, v),
        Tapered4 => cf::tapered4_inv(u, v),
        NonAxial2 => cf::non_axial_2_inv(u, v),
        NonAxialHalf => cf::non_axial_half_inv(u, v),
        SquelchedGrid => cf::squelched_grid_inv(u, v),
        VerticalSquelch => cf::vertical_squelch_inv(u, v),
        HorizontalSquelch => cf::horizontal_squelch_inv(u, v),
        BlendedEllipticalGrid { beta } => cf::blended_grid_inv(beta, u, v),
        LameParametric => cf::lame_parametric_inv(u, v),
        ThreeHalvesSquircular | HalfSquircular | FourSquircular | NonAxialTapered2 | LameRadial => {
            unreachable!("no closed-form inverse")
        }
    }
}

fn check_closed_square(p: SquarePoint) -> Result<SquarePoint> {
    if !(p.x.is_finite() && p.y.is_finite()) {
        return Err(Error::domain(format!("non-finite square point ({}, {})", p.x, p.y)));
    }
    if p.sup_norm() > 1.0 + DOMAIN_SLACK {
        return Err(Error::domain(format!(
            "({}, {}) lies outside the square max(|x|, |y|) <= 1",
            p.x, p.y
        )));
    }
    Ok(SquarePoint::new(p.x.clamp(-1.0, 1.0), p.y.clamp(-1.0, 1.0)))
}

fn check_square(kind: MappingKind, p: SquarePoint) -> Result<SquarePoint> {
    let clamped = check_closed_square(p)?;
    if kind.is_open() && p.sup_norm() >= 1.0 {
        let what = if p.x.abs() >= 1.0 && p.y.abs() >= 1.0 {
            "is a singular corner"
        } else {
            "lies on the excluded edge"
        };
        return Err(Error::domain(format!(
            "({}, {}) {what} of the open square; {} requires max(|x|, |y|) < 1",
            p.x, p.y, kind
        )));
    }
    Ok(clamped)
}

fn check_disc(kind: MappingKind, p: DiscPoint) -> Result<DiscPoint> {
    if !(p.u.is_finite() && p.v.is_finite()) {
        return Err(Error::domain(format!("non-finite disc point ({}, {})", p.u, p.v)));
    }
    let n = p.norm_sq();
    if n > 1.0 + DOMAIN_SLACK {
        return Err(Error::domain(format!(
            "({}, {}) lies outside the unit disc u² + v² <= 1",
            p.u, p.v
        )));
    }
    if kind.is_open() && n >= 1.0 {
        let what = if p.u == 0.0 || p.v == 0.0 || p.u.abs() >= 1.0 || p.v.abs() >= 1.0 {
            "is a singular point"
        } else {
            "lies on the excluded rim"
        };
        return Err(Error::domain(format!(
            "({}, {}) {what} of the open disc; {} requires u² + v² < 1",
            p.u, p.v, kind
        )));
    }
    Ok(contain_disc(p))
}

fn contain_disc(p: DiscPoint) -> DiscPoint {
    let n = p.norm_sq();
    if n > 1.0 {
        let r = n.sqrt();
        DiscPoint::new(p.u / r, p.v / r)
    } else {
        p
    }
}

fn contain_square(p: SquarePoint) -> SquarePoint {
    SquarePoint::new(p.x.clamp(-1.0, 1.0), p.y.clamp(-1.0, 1.0))
}
