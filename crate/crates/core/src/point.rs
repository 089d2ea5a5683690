/// A point of the square `[-1, 1] × [-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SquarePoint {
    pub x: f64,
    pub y: f64,
}

/// A point of the unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DiscPoint {
    pub u: f64,
    pub v: f64,
}

/// A coordinate pair with no frame attached, used by the numeric solvers
/// which work in whichever frame the unknown lives in.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl SquarePoint {
    pub const fn new(x: f64, y: f64) -> Self {
        SquarePoint { x, y }
    }

    /// Chebyshev norm `max(|x|, |y|)`.
    pub fn sup_norm(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn dist_inf(self, other: SquarePoint) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

impl DiscPoint {
    pub const fn new(u: f64, v: f64) -> Self {
        DiscPoint { u, v }
    }

    pub fn norm_sq(self) -> f64 {
        self.u * self.u + self.v * self.v
    }

    pub fn dist_inf(self, other: DiscPoint) -> f64 {
        (self.u - other.u).abs().max((self.v - other.v).abs())
    }
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }
}

impl From<SquarePoint> for Point2 {
    fn from(p: SquarePoint) -> Self {
        Point2::new(p.x, p.y)
    }
}

impl From<DiscPoint> for Point2 {
    fn from(p: DiscPoint) -> Self {
        Point2::new(p.u, p.v)
    }
}

impl From<Point2> for SquarePoint {
    fn from(p: Point2) -> Self {
        SquarePoint::new(p.x, p.y)
    }
}

impl From<Point2> for DiscPoint {
    fn from(p: Point2) -> Self {
        DiscPoint::new(p.x, p.y)
    }
}

impl From<(f64, f64)> for SquarePoint {
    fn from((x, y): (f64, f64)) -> Self {
        SquarePoint::new(x, y)
    }
}

impl From<(f64, f64)> for DiscPoint {
    fn from((u, v): (f64, f64)) -> Self {
        DiscPoint::new(u, v)
    }
}
