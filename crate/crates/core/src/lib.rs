//! Square ↔ disc mappings, their rectangle ↔ ellipse lifts, and the image
//! warps built on them.

pub mod diagnostics;
pub mod eccentric;
pub mod elliptic;
pub mod error;
pub mod grid;
pub mod invert;
pub mod mapping;
pub mod point;
pub mod warp;

pub use eccentric::{ellipse_to_rect, rect_to_ellipse, EllipsePoint, RectPoint, RectSpec};
pub use error::{Direction, Error, Result};
pub use invert::{InversionConfig, Strategy};
pub use mapping::{
    continuum_value, disc_to_square, disc_to_square_with, square_to_disc, square_to_disc_with, Capabilities, Fallback,
    MappingKind, Openness,
};
pub use point::{DiscPoint, Point2, SquarePoint};
