//! Shared inputs for the benchmarks.

use elliptify_core::diagnostics::{disc_samples, square_samples, DEFAULT_INSET};
use elliptify_core::{DiscPoint, SquarePoint};

pub const SAMPLES: usize = 1024;

pub fn square_points() -> Vec<SquarePoint> {
    square_samples(SAMPLES, DEFAULT_INSET)
}

pub fn disc_points() -> Vec<DiscPoint> {
    disc_samples(SAMPLES, DEFAULT_INSET)
}
