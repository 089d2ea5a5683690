//! Numeric inversion of the directions that have no closed form.
//!
//! The solvers only ever evaluate the closed-form direction of a kind and
//! search for the point it sends to the target. Radial kinds reduce to a
//! root-find along the ray through the target; the Lamé parametric map
//! reduces to a root-find on the squared radius of the unknown; everything
//! else goes through a damped 2-D Newton iteration.

use crate::error::{Direction, Error, Result};
use crate::mapping::{self, Fallback, MappingKind};
use crate::point::{DiscPoint, Point2, SquarePoint};

/// Step of the central-difference derivatives.
pub const FD_STEP: f64 = 1e-7;

const MAX_HALVINGS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// One-dimensional solve: along the ray for radial kinds, on the
    /// squared radius for the Lamé parametric map. Kinds without such a
    /// reduction use [`Strategy::Newton2d`].
    #[default]
    Radial1d,
    Newton2d,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InversionConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub strategy: Strategy,
}

impl Default for InversionConfig {
    fn default() -> Self {
        InversionConfig {
            tol: 1e-10,
            max_iter: 100,
            strategy: Strategy::Radial1d,
        }
    }
}

impl InversionConfig {
    pub fn new(tol: f64, max_iter: usize, strategy: Strategy) -> Result<Self> {
        let cfg = InversionConfig {
            tol,
            max_iter,
            strategy,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Param(format!(
                "inversion tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::Param("inversion needs at least one iteration".into()));
        }
        Ok(())
    }
}

/// Finds the square point the kind's forward map sends to `target`.
pub fn solve_square(kind: MappingKind, target: DiscPoint, cfg: &InversionConfig) -> Result<SquarePoint> {
    require_direction(kind, Direction::SquareToDisc)?;
    invert(kind, target.into(), cfg).map(SquarePoint::from)
}

/// Finds the disc point the kind's inverse map sends to `target`.
pub fn solve_disc(kind: MappingKind, target: SquarePoint, cfg: &InversionConfig) -> Result<DiscPoint> {
    require_direction(kind, Direction::DiscToSquare)?;
    invert(kind, target.into(), cfg).map(DiscPoint::from)
}

/// Inverts the closed-form direction of `kind` at `target`, choosing the
/// solver from `cfg.strategy` and the kind.
pub fn invert(kind: MappingKind, target: Point2, cfg: &InversionConfig) -> Result<Point2> {
    cfg.validate()?;
    match cfg.strategy {
        Strategy::Radial1d if kind == MappingKind::LameParametric => lame_parametric_radius(target, cfg),
        Strategy::Radial1d if ray_solvable(kind, target) => invert_radial(kind, target, cfg),
        _ => invert_newton2d(kind, target, cfg),
    }
}

/// Root-find along the ray through `target`. The angle of the result is
/// copied from the target; only the distance from the origin is solved for.
///
/// Needs a radial kind, or a target on a coordinate axis for a kind that
/// maps each half-axis to itself.
pub fn invert_radial(kind: MappingKind, target: Point2, cfg: &InversionConfig) -> Result<Point2> {
    cfg.validate()?;
    check_target(target)?;
    if !ray_solvable(kind, target) {
        return Err(Error::Param(format!(
            "{kind} is not radial and ({}, {}) is off the axes",
            target.x, target.y
        )));
    }
    let space = Space::of(kind);
    let rho = target.x.hypot(target.y);
    if rho == 0.0 {
        return Ok(Point2::new(0.0, 0.0));
    }
    let (cx, cy) = (target.x / rho, target.y / rho);
    let s_max = space.ray_limit(cx, cy);
    let at = |s: f64| Point2::new(s * cx, s * cy);
    let g = |s: f64| -> Result<f64> {
        let image = space.eval(kind, at(s))?;
        Ok(image.x * cx + image.y * cy - rho)
    };

    let (mut lo, mut hi) = (0.0, s_max);
    let g_hi = g(hi)?;
    // Radial maps meet the rim tangentially on the diagonals, so a target
    // within rounding of the rim would otherwise resolve to a point ~1e-8
    // short of the corner.
    if g_hi <= 4.0 * f64::EPSILON {
        if g_hi >= -cfg.tol {
            return Ok(at(hi));
        }
        return Err(Error::NonMonotone { angle: cy.atan2(cx) });
    }

    let mut s = if rho > lo && rho < hi { rho } else { 0.5 * hi };
    let mut last_step = hi - lo;
    for _ in 0..cfg.max_iter {
        let gs = g(s)?;
        if gs == 0.0 {
            return Ok(at(s));
        }
        if gs < 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        let slope = ray_slope(&g, s, s_max);
        let newton = slope.map(|d| s - gs / d);
        let next = match newton {
            Some(n) if n > lo && n < hi && (2.0 * gs).abs() <= (last_step * slope.unwrap()).abs() => n,
            _ => 0.5 * (lo + hi),
        };
        last_step = next - s;
        s = next;
        if last_step.abs() <= 2.0 * f64::EPSILON * s.max(f64::MIN_POSITIVE) || hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
    }
    let residual = g(s)?.abs();
    if residual <= cfg.tol {
        Ok(at(s))
    } else {
        Err(Error::Convergence {
            what: format!("radial inversion of {kind} (residual {residual:e})"),
            iterations: cfg.max_iter,
        })
    }
}

/// Damped Newton iteration on the 2-D residual, Jacobian by central
/// differences. Starts from the target itself, projected into the domain.
pub fn invert_newton2d(kind: MappingKind, target: Point2, cfg: &InversionConfig) -> Result<Point2> {
    cfg.validate()?;
    check_target(target)?;
    let space = Space::of(kind);
    let residual = |z: Point2| -> Result<(f64, f64)> {
        let image = space.eval(kind, z)?;
        Ok((image.x - target.x, image.y - target.y))
    };
    let norm = |r: (f64, f64)| r.0.abs().max(r.1.abs());

    let mut z = space.project(target);
    let mut r = residual(z)?;
    for _ in 0..cfg.max_iter {
        if norm(r) <= 1e-4 * cfg.tol {
            return Ok(z);
        }
        let j = jacobian(&space, kind, z)?;
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let size = j.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
        if !det.is_finite() || det.abs() <= 1e-14 * size * size {
            return Err(Error::SingularJacobian { x: z.x, y: z.y });
        }
        let dx = -(j[1][1] * r.0 - j[0][1] * r.1) / det;
        let dy = -(-j[1][0] * r.0 + j[0][0] * r.1) / det;

        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let trial = Point2::new(z.x + lambda * dx, z.y + lambda * dy);
            if space.contains(trial) {
                if let Ok(rt) = residual(trial) {
                    if norm(rt) < norm(r) {
                        accepted = Some((trial, rt));
                        break;
                    }
                }
            }
            lambda *= 0.5;
        }
        match accepted {
            Some((trial, rt)) => {
                z = trial;
                r = rt;
            }
            // No further decrease possible: we are at the rounding floor.
            None if norm(r) <= cfg.tol => return Ok(z),
            None => break,
        }
    }
    if norm(r) <= cfg.tol {
        Ok(z)
    } else {
        Err(Error::Convergence {
            what: format!("Newton inversion of {kind} (residual {:e})", norm(r)),
            iterations: cfg.max_iter,
        })
    }
}

/// The Lamé parametric map `x = sgn(u)|u|^(1−c)`, `c = u² + v²`, inverts
/// once `c` is known: `u = sgn(x)|x|^(1/(1−c))`. Consistency requires
/// `h(c) = |x|^(2/(1−c)) + |y|^(2/(1−c)) − c = 0`, and `h` falls strictly
/// from `x² + y²` at `c = 0` to `−1` as `c → 1`, so the root is unique.
fn lame_parametric_radius(target: Point2, cfg: &InversionConfig) -> Result<Point2> {
    check_target(target)?;
    let (ax, ay) = (target.x.abs(), target.y.abs());
    if ax >= 1.0 || ay >= 1.0 {
        return Err(Error::domain(format!(
            "({}, {}) is outside the open square",
            target.x, target.y
        )));
    }
    if ax == 0.0 && ay == 0.0 {
        return Ok(Point2::new(0.0, 0.0));
    }
    // Solve for s = 1 − r² rather than r²: near the corners r² rounds to
    // 1 long before the residual is small, while s keeps full precision.
    // g(s) = |x|^{2/s} + |y|^{2/s} − (1 − s) is strictly increasing.
    let (lx, ly) = (ln_or_neg_inf(ax), ln_or_neg_inf(ay));
    let term = |l: f64, e: f64| if l == f64::NEG_INFINITY { 0.0 } else { (l * e).exp() };
    let g = |s: f64| -> (f64, f64) {
        let e = 2.0 / s;
        let (tx, ty) = (term(lx, e), term(ly, e));
        let value = tx + ty - (1.0 - s);
        let slope = -(tx * lx.max(-1e300) + ty * ly.max(-1e300)) * e / s + 1.0;
        (value, slope)
    };

    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut s = 1.0 - (ax * ax + ay * ay).min(0.5);
    for _ in 0..cfg.max_iter {
        let (value, slope) = g(s);
        if value == 0.0 {
            break;
        }
        if value < 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        let newton = s - value / slope;
        let next = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = next - s;
        s = next;
        if step.abs() <= 2.0 * f64::EPSILON * s {
            break;
        }
    }
    let e = 1.0 / s;
    let solve = |t: f64, l: f64| if t == 0.0 { 0.0 } else { t.signum() * (l * e).exp() };
    let z = Point2::new(solve(target.x, lx), solve(target.y, ly));
    let image = Space::Disc { open: true }.eval(MappingKind::LameParametric, z)?;
    let residual = (image.x - target.x).abs().max((image.y - target.y).abs());
    if residual <= cfg.tol {
        Ok(z)
    } else {
        Err(Error::Convergence {
            what: format!("radius solve for lame-parametric (residual {residual:e})"),
            iterations: cfg.max_iter,
        })
    }
}

fn ln_or_neg_inf(a: f64) -> f64 {
    if a == 0.0 {
        f64::NEG_INFINITY
    } else {
        a.ln()
    }
}

fn require_direction(kind: MappingKind, known: Direction) -> Result<()> {
    if kind.has_analytic(known) {
        Ok(())
    } else {
        Err(Error::Capability {
            kind,
            operation: format!("numeric inversion (no closed-form {known} direction to invert)"),
        })
    }
}

fn check_target(target: Point2) -> Result<()> {
    if target.x.is_finite() && target.y.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("non-finite target ({}, {})", target.x, target.y)))
    }
}

fn ray_solvable(kind: MappingKind, target: Point2) -> bool {
    kind.is_radial() || ((target.x == 0.0 || target.y == 0.0) && kind != MappingKind::SchwarzChristoffel)
}

fn ray_slope(g: &impl Fn(f64) -> Result<f64>, s: f64, s_max: f64) -> Option<f64> {
    let h = FD_STEP * s.max(1e-3);
    let (a, b) = ((s - h).max(0.0), (s + h).min(s_max));
    if b <= a {
        return None;
    }
    let d = (g(b).ok()? - g(a).ok()?) / (b - a);
    (d.is_finite() && d > 0.0).then_some(d)
}

#[allow(clippy::needless_range_loop)]
fn jacobian(space: &Space, kind: MappingKind, z: Point2) -> Result<[[f64; 2]; 2]> {
    let mut j = [[0.0; 2]; 2];
    for axis in 0..2 {
        let shift = |d: f64| {
            if axis == 0 {
                Point2::new(z.x + d, z.y)
            } else {
                Point2::new(z.x, z.y + d)
            }
        };
        let (plus, minus) = (shift(FD_STEP), shift(-FD_STEP));
        let (a, b, width) = match (space.contains(plus), space.contains(minus)) {
            (true, true) => (plus, minus, 2.0 * FD_STEP),
            (true, false) => (plus, z, FD_STEP),
            (false, true) => (z, minus, FD_STEP),
            (false, false) => return Err(Error::SingularJacobian { x: z.x, y: z.y }),
        };
        let fa = space.eval(kind, a)?;
        let fb = space.eval(kind, b)?;
        j[0][axis] = (fa.x - fb.x) / width;
        j[1][axis] = (fa.y - fb.y) / width;
    }
    Ok(j)
}

/// Where the unknown of an inversion lives.
#[derive(Debug, Clone, Copy)]
enum Space {
    Square { open: bool },
    Disc { open: bool },
}

impl Space {
    fn of(kind: MappingKind) -> Self {
        let open = kind.is_open();
        match kind.analytic_direction() {
            Direction::SquareToDisc => Space::Square { open },
            Direction::DiscToSquare => Space::Disc { open },
        }
    }

    fn limit(open: bool) -> f64 {
        if open {
            1.0 - f64::EPSILON
        } else {
            1.0
        }
    }

    /// Largest `s` with `s·(cx, cy)` in the domain, for a unit direction.
    fn ray_limit(self, cx: f64, cy: f64) -> f64 {
        match self {
            Space::Square { open } => Space::limit(open) / cx.abs().max(cy.abs()),
            Space::Disc { open } => Space::limit(open),
        }
    }

    fn contains(self, z: Point2) -> bool {
        match self {
            Space::Square { open } => {
                let m = z.x.abs().max(z.y.abs());
                if open {
                    m < 1.0
                } else {
                    m <= 1.0
                }
            }
            Space::Disc { open } => {
                let n = z.x * z.x + z.y * z.y;
                if open {
                    n < 1.0
                } else {
                    n <= 1.0
                }
            }
        }
    }

    fn project(self, z: Point2) -> Point2 {
        const INSET: f64 = 1e-9;
        match self {
            Space::Square { .. } => {
                let m = 1.0 - INSET;
                Point2::new(z.x.clamp(-m, m), z.y.clamp(-m, m))
            }
            Space::Disc { .. } => {
                let n = z.x.hypot(z.y);
                let m = 1.0 - INSET;
                if n > m {
                    Point2::new(z.x * m / n, z.y * m / n)
                } else {
                    z
                }
            }
        }
    }

    fn eval(self, kind: MappingKind, z: Point2) -> Result<Point2> {
        match self {
            Space::Square { .. } => mapping::square_to_disc_with(kind, z.into(), Fallback::Disabled).map(Point2::from),
            Space::Disc { .. } => mapping::disc_to_square_with(kind, z.into(), Fallback::Disabled).map(Point2::from),
        }
    }
}
