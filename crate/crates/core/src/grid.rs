//! Diagnostic grid diagrams: a Cartesian grid of the square pushed into the
//! disc, or a polar grid of the disc pulled into the square.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::mapping::{self, MappingKind};
use crate::point::{DiscPoint, Point2, SquarePoint};

/// Open kinds are drawn on this fraction of the domain, away from the
/// singular rim points.
pub const OPEN_CLIP: f64 = 1.0 - 1e-3;

/// Which region the drawing lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridStyle {
    /// Polar grid of the disc mapped into the square.
    PolarInSquare,
    /// Cartesian grid of the square mapped into the disc.
    CartesianInDisc,
}

impl std::str::FromStr for GridStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polar-in-square" => Ok(GridStyle::PolarInSquare),
            "cartesian-in-disc" => Ok(GridStyle::CartesianInDisc),
            _ => Err(Error::Param(format!("unknown grid style '{s}'"))),
        }
    }
}

/// What a polyline is the image of. `level` is the line's constant: `c` in
/// `x = c` or `y = c`, the ring radius, or the spoke angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Vertical,
    Horizontal,
    Ring,
    Spoke,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub family: Family,
    pub level: f64,
    pub points: Vec<Point2>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VectorDrawing {
    pub kind: MappingKind,
    pub style: GridStyle,
    pub lines: Vec<Polyline>,
}

fn clip(kind: MappingKind) -> f64 {
    if kind.is_open() {
        OPEN_CLIP
    } else {
        1.0
    }
}

fn spread(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

/// Images of the lines `x = c` and `y = c` for `n_lines` evenly spaced `c`
/// across the square.
pub fn render_square_grid_in_disc(kind: MappingKind, n_lines: usize, samples_per_line: usize) -> Result<VectorDrawing> {
    if n_lines < 2 || samples_per_line < 2 {
        return Err(Error::Param(
            "a grid needs at least 2 lines and 2 samples per line".into(),
        ));
    }
    let l = clip(kind);
    let mut lines = Vec::with_capacity(2 * n_lines);
    for family in [Family::Vertical, Family::Horizontal] {
        for c in spread(n_lines, -l, l) {
            let points = spread(samples_per_line, -l, l)
                .map(|s| {
                    let p = match family {
                        Family::Vertical => SquarePoint::new(c, s),
                        _ => SquarePoint::new(s, c),
                    };
                    mapping::square_to_disc(kind, p).map(Point2::from)
                })
                .collect::<Result<Vec<_>>>()?;
            lines.push(Polyline {
                family,
                level: c,
                points,
            });
        }
    }
    Ok(VectorDrawing {
        kind,
        style: GridStyle::CartesianInDisc,
        lines,
    })
}

/// Images of `n_rings` concentric circles (radii `i/n_rings`) and
/// `n_spokes` radii of the disc.
pub fn render_polar_grid_in_square(
    kind: MappingKind,
    n_rings: usize,
    n_spokes: usize,
    samples: usize,
) -> Result<VectorDrawing> {
    if n_rings < 1 || samples < 3 {
        return Err(Error::Param("a polar grid needs at least 1 ring and 3 samples".into()));
    }
    let l = clip(kind);
    let mut lines = Vec::with_capacity(n_rings + n_spokes);
    for i in 1..=n_rings {
        let rho = l * i as f64 / n_rings as f64;
        let points = (0..=samples)
            .map(|j| {
                let a = TAU * (j % samples) as f64 / samples as f64;
                mapping::disc_to_square(kind, DiscPoint::new(rho * a.cos(), rho * a.sin())).map(Point2::from)
            })
            .collect::<Result<Vec<_>>>()?;
        lines.push(Polyline {
            family: Family::Ring,
            level: rho,
            points,
        });
    }
    for j in 0..n_spokes {
        let a = TAU * j as f64 / n_spokes as f64;
        let points = spread(samples, 0.0, l)
            .map(|r| mapping::disc_to_square(kind, DiscPoint::new(r * a.cos(), r * a.sin())).map(Point2::from))
            .collect::<Result<Vec<_>>>()?;
        lines.push(Polyline {
            family: Family::Spoke,
            level: a,
            points,
        });
    }
    Ok(VectorDrawing {
        kind,
        style: GridStyle::PolarInSquare,
        lines,
    })
}

pub fn render(kind: MappingKind, style: GridStyle) -> Result<VectorDrawing> {
    match style {
        GridStyle::PolarInSquare => render_polar_grid_in_square(kind, 10, 16, 256),
        GridStyle::CartesianInDisc => render_square_grid_in_disc(kind, 21, 256),
    }
}

/// Residual of a ring vertex against the kind's squircular contour: the
/// disc radius the continuum predicts minus the ring radius, squared form.
/// `None` where the kind has no continuum.
pub fn ring_residual(kind: MappingKind, rho: f64, p: Point2) -> Option<f64> {
    let c = mapping::continuum_value(kind, SquarePoint::new(p.x, p.y)).ok()?;
    let m = kind.modulator(c.sqrt());
    Some(m * m - rho * rho)
}

/// Residual of the image of `x = c` (or `y = c`) against the conic it lies
/// on, for the two grid kinds with a known one.
pub fn line_residual(kind: MappingKind, family: Family, c: f64, p: Point2) -> Option<f64> {
    let (along, across) = match family {
        Family::Vertical => (p.x, p.y),
        Family::Horizontal => (p.y, p.x),
        _ => return None,
    };
    if c == 0.0 {
        return Some(along);
    }
    let cc = c * c;
    match kind {
        MappingKind::EllipticalGrid => Some(along * along / cc + across * across / (2.0 - cc) - 1.0),
        MappingKind::SquelchedGrid => Some(along * along / cc + across * across - 1.0),
        _ => None,
    }
}

/// Largest per-vertex contour residual, after checking that every vertex
/// is inside the codomain. Lines without a known contour contribute nothing.
pub fn verify(drawing: &VectorDrawing) -> Result<f64> {
    let mut worst = 0.0f64;
    for line in &drawing.lines {
        for &p in &line.points {
            let contained = match drawing.style {
                GridStyle::CartesianInDisc => p.x * p.x + p.y * p.y <= 1.0 + 1e-9,
                GridStyle::PolarInSquare => p.x.abs().max(p.y.abs()) <= 1.0 + 1e-9,
            };
            if !contained {
                return Err(Error::Numeric(format!(
                    "vertex ({}, {}) escapes the codomain",
                    p.x, p.y
                )));
            }
            let r = match line.family {
                Family::Ring => ring_residual(drawing.kind, line.level, p),
                Family::Vertical | Family::Horizontal => line_residual(drawing.kind, line.family, line.level, p),
                Family::Spoke => None,
            };
            if let Some(r) = r {
                worst = worst.max(r.abs());
            }
        }
    }
    Ok(worst)
}

impl VectorDrawing {
    /// SVG 1.1 with the unit square or disc scaled to `size` pixels.
    /// Coordinates are written with fixed precision so the output is
    /// byte-stable.
    pub fn to_svg(&self, size: u32) -> String {
        let s = size as f64;
        let pad = 0.04 * s;
        let half = 0.5 * s - pad;
        let px = |p: Point2| (0.5 * s + half * p.x, 0.5 * s - half * p.y);
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        );
        let _ = writeln!(out, "<title>{} {}</title>", self.kind.title(), self.style_name());
        let _ = writeln!(out, r##"<rect width="{size}" height="{size}" fill="#ffffff"/>"##);
        let outline = match self.style {
            GridStyle::CartesianInDisc => format!(r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}""#, 0.5 * s, 0.5 * s, half),
            GridStyle::PolarInSquare => format!(
                r#"<rect x="{pad:.3}" y="{pad:.3}" width="{:.3}" height="{:.3}""#,
                2.0 * half,
                2.0 * half
            ),
        };
        let _ = writeln!(out, r##"{outline} fill="none" stroke="#000000" stroke-width="1.5"/>"##);
        for line in &self.lines {
            let colour = match line.family {
                Family::Vertical => "#c0392b",
                Family::Horizontal => "#2471a3",
                Family::Ring => "#1e8449",
                Family::Spoke => "#7d3c98",
            };
            let mut d = String::new();
            for (i, &p) in line.points.iter().enumerate() {
                let (x, y) = px(p);
                let _ = write!(d, "{}{x:.3},{y:.3}", if i == 0 { "M" } else { " L" });
            }
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="none" stroke="{colour}" stroke-width="0.8"/>"#
            );
        }
        out.push_str("</svg>\n");
        out
    }

    fn style_name(&self) -> &'static str {
        match self.style {
            GridStyle::PolarInSquare => "polar grid in the square",
            GridStyle::CartesianInDisc => "square grid in the disc",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fg_rings_follow_the_squircle() {
        let d = render_polar_grid_in_square(MappingKind::FgSquircular, 8, 8, 200).unwrap();
        assert!(verify(&d).unwrap() < 1e-9);
        let outer = d
            .lines
            .iter()
            .find(|l| l.family == Family::Ring && l.level == 1.0)
            .unwrap();
        for p in &outer.points {
            assert!((p.x.abs().max(p.y.abs()) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn spokes_stay_straight_for_radial_kinds() {
        let d = render_polar_grid_in_square(MappingKind::Tapered4, 3, 12, 50).unwrap();
        for line in d.lines.iter().filter(|l| l.family == Family::Spoke) {
            let (c, s) = (line.level.cos(), line.level.sin());
            for p in &line.points {
                assert!((p.x * s - p.y * c).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn grid_lines_follow_their_conics() {
        for kind in [MappingKind::EllipticalGrid, MappingKind::SquelchedGrid] {
            let d = render_square_grid_in_disc(kind, 11, 100).unwrap();
            assert!(verify(&d).unwrap() < 1e-9, "{kind}");
        }
    }

    #[test]
    fn svg_is_stable() {
        let d = render(MappingKind::TwoSquircular, GridStyle::CartesianInDisc).unwrap();
        let a = d.to_svg(400);
        assert_eq!(
            a,
            render(MappingKind::TwoSquircular, GridStyle::CartesianInDisc)
                .unwrap()
                .to_svg(400)
        );
        assert!(a.starts_with("<?xml") && a.ends_with("</svg>\n"));
    }
}
