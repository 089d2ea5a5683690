//! Image warps by inverse sampling: every output pixel centre is sent back
//! through the opposite-direction map and the source is interpolated there.
//!
//! Rows are independent and processed in parallel; each pixel is a pure
//! function of the source, so the output does not depend on thread count.

mod raster;

pub use raster::{psnr_interior, test_chart, RasterImage, Rgba, CHART_CELL};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::eccentric::{self, EllipsePoint, RectPoint, RectSpec};
use crate::error::{Direction, Error, Result};
use crate::mapping::{Fallback, MappingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Interpolation {
    Nearest,
    #[default]
    Bilinear,
}

impl FromStr for Interpolation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nearest" => Ok(Interpolation::Nearest),
            "bilinear" => Ok(Interpolation::Bilinear),
            _ => Err(Error::Param(format!("unknown interpolation '{s}'"))),
        }
    }
}

impl fmt::Display for Interpolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interpolation::Nearest => "nearest",
            Interpolation::Bilinear => "bilinear",
        })
    }
}

/// The map a warp applies: a registry kind, or the identity, which just
/// crops the rectangle to its inscribed ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WarpMap {
    Kind(MappingKind),
    CropBaseline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WarpDirection {
    /// Rectangle image → ellipse image.
    Elliptify,
    /// Ellipse image → rectangle image.
    Rectify,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WarpJob {
    pub map: WarpMap,
    pub interpolation: Interpolation,
    /// Samples per pixel along each axis.
    pub oversample: u32,
    pub fallback: Fallback,
}

impl WarpJob {
    pub fn new(map: WarpMap) -> Self {
        WarpJob {
            map,
            interpolation: Interpolation::Bilinear,
            oversample: 1,
            fallback: Fallback::Disabled,
        }
    }

    pub fn kind(kind: MappingKind) -> Self {
        WarpJob::new(WarpMap::Kind(kind))
    }

    pub fn crop() -> Self {
        WarpJob::new(WarpMap::CropBaseline)
    }

    pub fn interpolation(mut self, interpolation: Interpolation) -> Self {
        self.interpolation = interpolation;
        self
    }

    pub fn oversample(mut self, k: u32) -> Self {
        self.oversample = k;
        self
    }

    pub fn fallback(mut self, fallback: Fallback) -> Self {
        self.fallback = fallback;
        self
    }

    fn validate(&self, direction: WarpDirection) -> Result<()> {
        if self.oversample == 0 {
            return Err(Error::Param("oversample must be at least 1".into()));
        }
        if let WarpMap::Kind(kind) = self.map {
            // Elliptify pulls through ellipse → rect, i.e. disc → square.
            let needed = match direction {
                WarpDirection::Elliptify => Direction::DiscToSquare,
                WarpDirection::Rectify => Direction::SquareToDisc,
            };
            if !kind.has_analytic(needed) && self.fallback == Fallback::Disabled {
                return Err(Error::direction_unavailable(kind, needed));
            }
        }
        Ok(())
    }
}

/// The rectangle/ellipse pair an image of this size represents.
pub fn spec_for(width: u32, height: u32) -> RectSpec {
    RectSpec::from_aspect(width as f64 / height as f64).expect("positive dimensions")
}

/// Centre of pixel `(ix, iy)` in the frame `[-a, a] × [-b, b]` with
/// `a = w/h`, `b = 1` and y pointing up.
pub fn pixel_to_unit(ix: u32, iy: u32, w: u32, h: u32) -> RectPoint {
    subpixel_to_unit(ix as f64 + 0.5, iy as f64 + 0.5, w, h)
}

/// Continuous pixel coordinates (pixel centres at integers) of a point.
pub fn unit_to_pixel(p: RectPoint, w: u32, h: u32) -> (f64, f64) {
    let (w, h) = (w as f64, h as f64);
    ((p.x * h + w) * 0.5 - 0.5, (h - p.y * h) * 0.5 - 0.5)
}

/// `(px, py)` measured from the top-left image corner, in pixels.
fn subpixel_to_unit(px: f64, py: f64, w: u32, h: u32) -> RectPoint {
    let (w, h) = (w as f64, h as f64);
    RectPoint::new((2.0 * px - w) / h, 1.0 - 2.0 * py / h)
}

pub fn elliptify(img: &RasterImage, job: &WarpJob) -> Result<RasterImage> {
    warp(img, job, WarpDirection::Elliptify)
}

pub fn rectify(img: &RasterImage, job: &WarpJob) -> Result<RasterImage> {
    warp(img, job, WarpDirection::Rectify)
}

pub fn warp(img: &RasterImage, job: &WarpJob, direction: WarpDirection) -> Result<RasterImage> {
    job.validate(direction)?;
    let (w, h) = (img.width(), img.height());
    let spec = spec_for(w, h);
    let k = job.oversample;
    let mut out = RasterImage::new(w, h)?;

    let pull = |p: RectPoint| -> Result<Option<RectPoint>> {
        let inside = spec.inside_ellipse(EllipsePoint::new(p.x, p.y));
        match (direction, job.map) {
            (WarpDirection::Elliptify, _) if !inside => Ok(None),
            (_, WarpMap::CropBaseline) => Ok(Some(p)),
            (WarpDirection::Elliptify, WarpMap::Kind(kind)) => {
                let q = eccentric::ellipse_to_rect_with(kind, spec, EllipsePoint::new(p.x, p.y), job.fallback)?;
                Ok(Some(q))
            }
            (WarpDirection::Rectify, WarpMap::Kind(kind)) => {
                let e = eccentric::rect_to_ellipse_with(kind, spec, p, job.fallback)?;
                Ok(Some(RectPoint::new(e.u, e.v)))
            }
        }
    };

    out.pixels_mut()
        .par_chunks_mut(w as usize)
        .enumerate()
        .try_for_each(|(iy, row)| -> Result<()> {
            for (ix, px) in row.iter_mut().enumerate() {
                let mut acc = [0.0f64; 4];
                for sy in 0..k {
                    for sx in 0..k {
                        let fx = ix as f64 + (sx as f64 + 0.5) / k as f64;
                        let fy = iy as f64 + (sy as f64 + 0.5) / k as f64;
                        let Some(src) = pull(subpixel_to_unit(fx, fy, w, h))? else {
                            continue;
                        };
                        let (cx, cy) = unit_to_pixel(src, w, h);
                        let s = sample(img, cx, cy, job.interpolation);
                        for c in 0..3 {
                            acc[c] += s[c] * s[3];
                        }
                        acc[3] += s[3];
                    }
                }
                *px = resolve(acc, (k * k) as f64);
            }
            Ok(())
        })?;
    Ok(out)
}

/// Turns premultiplied sums over `n` samples into a straight-alpha pixel.
fn resolve(acc: [f64; 4], n: f64) -> Rgba {
    if acc[3] <= 0.0 {
        return [0; 4];
    }
    let q = |v: f64| v.round().clamp(0.0, 255.0) as u8;
    [
        q(acc[0] / acc[3]),
        q(acc[1] / acc[3]),
        q(acc[2] / acc[3]),
        q(acc[3] / n),
    ]
}

/// Samples at continuous pixel coordinates, clamped to the image. Pixels
/// with alpha 0 carry no colour and are left out of the bilinear weights;
/// if all four neighbours are transparent the nearest pixel is returned.
fn sample(img: &RasterImage, x: f64, y: f64, interpolation: Interpolation) -> [f64; 4] {
    let (wmax, hmax) = ((img.width() - 1) as f64, (img.height() - 1) as f64);
    let (x, y) = (x.clamp(0.0, wmax), y.clamp(0.0, hmax));
    let as_f = |p: Rgba| [p[0] as f64, p[1] as f64, p[2] as f64, p[3] as f64];
    let nearest = || as_f(img.pixel(x.round() as u32, y.round() as u32));
    if interpolation == Interpolation::Nearest {
        return nearest();
    }
    let (x0, y0) = (x.floor(), y.floor());
    let (tx, ty) = (x - x0, y - y0);
    let (x0, y0) = (x0 as u32, y0 as u32);
    let (x1, y1) = ((x0 + 1).min(img.width() - 1), (y0 + 1).min(img.height() - 1));
    let taps = [
        (x0, y0, (1.0 - tx) * (1.0 - ty)),
        (x1, y0, tx * (1.0 - ty)),
        (x0, y1, (1.0 - tx) * ty),
        (x1, y1, tx * ty),
    ];
    let mut weight = 0.0;
    let mut alpha = 0.0;
    let mut colour = [0.0; 3];
    for (px, py, wt) in taps {
        let p = img.pixel(px, py);
        if p[3] == 0 || wt == 0.0 {
            continue;
        }
        let a = p[3] as f64;
        weight += wt;
        alpha += wt * a;
        for c in 0..3 {
            colour[c] += wt * a * p[c] as f64;
        }
    }
    if alpha == 0.0 {
        return nearest();
    }
    [colour[0] / alpha, colour[1] / alpha, colour[2] / alpha, alpha / weight]
}
