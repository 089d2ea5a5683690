use std::fmt;

use crate::error::{Error, Result};

/// Fernandez-Guasti squircle `x² + y² − (s²/t²)x²y² = t²`.
///
/// `s = 0` is the circle of radius `t`, `s = t = 1` the unit square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquircleParams {
    s: f64,
    t: f64,
}

impl SquircleParams {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        if !(s >= 0.0 && s.is_finite()) {
            return Err(Error::Param(format!("squareness must be finite and >= 0, got {s}")));
        }
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::Param(format!("squircle radius must lie in (0, 1], got {t}")));
        }
        Ok(SquircleParams { s, t })
    }

    pub fn s(self) -> f64 {
        self.s
    }

    pub fn t(self) -> f64 {
        self.t
    }

    /// Left side minus right side of the squircle equation; zero on the curve.
    pub fn residual(self, x: f64, y: f64) -> f64 {
        let k = self.s / self.t;
        x * x + y * y - k * k * x * x * y * y - self.t * self.t
    }
}

/// A continuous non-decreasing `f: [0, 1] → [0, 1]` with `f(0) = 0` and
/// `f(1) = 1`. Squareness and modulator functions are all of this shape.
pub struct RampantFn {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for RampantFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RampantFn").finish_non_exhaustive()
    }
}

/// Slack allowed on the endpoint values and between consecutive samples.
const RAMPANT_TOL: f64 = 1e-12;

impl RampantFn {
    /// Wraps `f` after checking the rampant conditions on `samples + 1`
    /// evenly spaced points.
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static, samples: usize) -> Result<Self> {
        let candidate = RampantFn { f: Box::new(f) };
        candidate.check(samples)?;
        Ok(candidate)
    }

    pub fn power(n: f64) -> Result<Self> {
        if n.is_nan() || n <= 0.0 {
            return Err(Error::Param(format!("power must be positive, got {n}")));
        }
        RampantFn::new(move |t| t.powf(n), 1000)
    }

    pub fn tapered2() -> Self {
        RampantFn {
            f: Box::new(|t| t * (2.0 - t * t).sqrt()),
        }
    }

    pub fn tapered4() -> Self {
        RampantFn {
            f: Box::new(|t| t * (1.5 - 0.5 * t.powi(4)).sqrt()),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    /// Dense-sampling check of the endpoint, range and monotonicity conditions.
    pub fn check(&self, samples: usize) -> Result<()> {
        let samples = samples.max(2);
        let at0 = self.eval(0.0);
        let at1 = self.eval(1.0);
        if at0.abs() > RAMPANT_TOL || (at1 - 1.0).abs() > RAMPANT_TOL {
            return Err(Error::Param(format!(
                "rampant endpoints must be 0 and 1, got {at0} and {at1}"
            )));
        }
        let mut prev = at0;
        for i in 1..=samples {
            let t = i as f64 / samples as f64;
            let value = self.eval(t);
            if !value.is_finite() || !(-RAMPANT_TOL..=1.0 + RAMPANT_TOL).contains(&value) {
                return Err(Error::Param(format!("rampant value {value} at t = {t} leaves [0, 1]")));
            }
            if value < prev - RAMPANT_TOL {
                return Err(Error::Param(format!("rampant function decreases at t = {t}")));
            }
            prev = value;
        }
        Ok(())
    }
}
