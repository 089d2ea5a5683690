//! Quasi-random sampling and round-trip error measurement.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::error::{Direction, Result};
use crate::invert::{self, InversionConfig};
use crate::mapping::{self, Fallback, MappingKind};
use crate::point::{DiscPoint, SquarePoint};

/// Default inset from the rims for sampled points.
pub const DEFAULT_INSET: f64 = 1e-6;

/// Radical inverse of `index` in `base`.
pub fn halton(mut index: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    let inv = 1.0 / base as f64;
    while index > 0 {
        f *= inv;
        r += f * (index % base) as f64;
        index /= base;
    }
    r
}

/// `n` Halton (2, 3) points covering `[-1 + eps, 1 − eps]²`.
pub fn square_samples(n: usize, eps: f64) -> Vec<SquarePoint> {
    let span = 1.0 - eps;
    (1..=n as u64)
        .map(|i| SquarePoint::new(span * (2.0 * halton(i, 2) - 1.0), span * (2.0 * halton(i, 3) - 1.0)))
        .collect()
}

/// `n` Halton (2, 3) points, uniform in area, over the disc of radius `1 − eps`.
pub fn disc_samples(n: usize, eps: f64) -> Vec<DiscPoint> {
    (1..=n as u64)
        .map(|i| {
            let rho = (1.0 - eps) * halton(i, 2).sqrt();
            let (s, c) = (TAU * halton(i, 3)).sin_cos();
            DiscPoint::new(rho * c, rho * s)
        })
        .collect()
}

/// Pass threshold for the round-trip error of a kind.
pub fn round_trip_threshold(kind: MappingKind) -> f64 {
    if kind == MappingKind::SchwarzChristoffel {
        1e-6
    } else if kind.is_bidirectional() {
        1e-9
    } else {
        1e-8
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundTripReport {
    pub kind: MappingKind,
    pub samples: usize,
    pub max_err: f64,
    pub threshold: f64,
    /// One direction was solved numerically.
    pub numeric: bool,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.max_err < self.threshold
    }
}

/// Maps `n` samples across and back, returning the worst ∞-norm error.
///
/// Bidirectional kinds go square → disc → square. Kinds with one closed
/// form start on the side whose map is known and invert it numerically.
pub fn round_trip(kind: MappingKind, n: usize, eps: f64, cfg: &InversionConfig) -> Result<RoundTripReport> {
    let numeric = !kind.is_bidirectional();
    let errors: Result<Vec<f64>> = if kind.is_bidirectional() {
        square_samples(n, eps)
            .par_iter()
            .map(|&p| {
                let d = mapping::square_to_disc_with(kind, p, Fallback::Disabled)?;
                Ok(mapping::disc_to_square_with(kind, d, Fallback::Disabled)?.dist_inf(p))
            })
            .collect()
    } else if kind.analytic_direction() == Direction::SquareToDisc {
        square_samples(n, eps)
            .par_iter()
            .map(|&p| {
                let d = mapping::square_to_disc_with(kind, p, Fallback::Disabled)?;
                Ok(invert::solve_square(kind, d, cfg)?.dist_inf(p))
            })
            .collect()
    } else {
        disc_samples(n, eps)
            .par_iter()
            .map(|&q| {
                let s = mapping::disc_to_square_with(kind, q, Fallback::Disabled)?;
                Ok(invert::solve_disc(kind, s, cfg)?.dist_inf(q))
            })
            .collect()
    };
    let max_err = errors?.into_iter().fold(0.0, f64::max);
    Ok(RoundTripReport {
        kind,
        samples: n,
        max_err,
        threshold: round_trip_threshold(kind),
        numeric,
    })
}
