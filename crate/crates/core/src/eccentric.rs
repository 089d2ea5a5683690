//! Rectangle ↔ ellipse lifts: divide by the half-axes to reach the unit
//! square or disc, map, and multiply back. The eccentricity `a/b` is the
//! same on both sides.

use crate::error::{Error, Result};
use crate::mapping::{self, Fallback, MappingKind};
use crate::point::{DiscPoint, SquarePoint};

/// Half-width `a` and half-height `b` of the rectangle `[-a, a] × [-b, b]`
/// and of its inscribed ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectSpec {
    a: f64,
    b: f64,
}

impl RectSpec {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
            return Err(Error::Param(format!(
                "half-axes must be positive and finite, got a={a} b={b}"
            )));
        }
        Ok(RectSpec { a, b })
    }

    /// `a = aspect`, `b = 1`; the convention used for images.
    pub fn from_aspect(aspect: f64) -> Result<Self> {
        RectSpec::new(aspect, 1.0)
    }

    pub const UNIT: RectSpec = RectSpec { a: 1.0, b: 1.0 };

    pub fn a(self) -> f64 {
        self.a
    }

    pub fn b(self) -> f64 {
        self.b
    }

    pub fn aspect(self) -> f64 {
        self.a / self.b
    }

    pub fn max_half_axis(self) -> f64 {
        self.a.max(self.b)
    }

    /// Strictly inside the ellipse `u²/a² + v²/b² < 1`.
    pub fn inside_ellipse(self, p: EllipsePoint) -> bool {
        let (s, t) = (p.u / self.a, p.v / self.b);
        s * s + t * t < 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RectPoint {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EllipsePoint {
    pub u: f64,
    pub v: f64,
}

impl RectPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        RectPoint { x, y }
    }

    pub fn dist_inf(self, other: RectPoint) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

impl EllipsePoint {
    pub const fn new(u: f64, v: f64) -> Self {
        EllipsePoint { u, v }
    }

    pub fn dist_inf(self, other: EllipsePoint) -> f64 {
        (self.u - other.u).abs().max((self.v - other.v).abs())
    }
}

pub fn rect_to_ellipse(kind: MappingKind, spec: RectSpec, p: RectPoint) -> Result<EllipsePoint> {
    rect_to_ellipse_with(kind, spec, p, Fallback::default())
}

pub fn ellipse_to_rect(kind: MappingKind, spec: RectSpec, p: EllipsePoint) -> Result<RectPoint> {
    ellipse_to_rect_with(kind, spec, p, Fallback::default())
}

pub fn rect_to_ellipse_with(
    kind: MappingKind,
    spec: RectSpec,
    p: RectPoint,
    fallback: Fallback,
) -> Result<EllipsePoint> {
    let square = SquarePoint::new(p.x / spec.a, p.y / spec.b);
    let d = mapping::square_to_disc_with(kind, square, fallback)?;
    Ok(EllipsePoint::new(spec.a * d.u, spec.b * d.v))
}

pub fn ellipse_to_rect_with(
    kind: MappingKind,
    spec: RectSpec,
    p: EllipsePoint,
    fallback: Fallback,
) -> Result<RectPoint> {
    let disc = DiscPoint::new(p.u / spec.a, p.v / spec.b);
    let s = mapping::disc_to_square_with(kind, disc, fallback)?;
    Ok(RectPoint::new(spec.a * s.x, spec.b * s.y))
}
