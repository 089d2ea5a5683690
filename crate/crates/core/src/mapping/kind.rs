use std::fmt;
use std::str::FromStr;

use crate::error::{Direction, Error, Result};

/// Every square↔disc mapping the library knows about.
///
/// `BlendedEllipticalGrid` carries its blend parameter `β ∈ (0, 1]`; `β = 1`
/// is the Elliptical Grid mapping and `β → 0⁺` tends to the Squelched Grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MappingKind {
    SchwarzChristoffel,
    FgSquircular,
    EllipticalGrid,
    TwoSquircular,
    ThreeSquircular,
    Tapered2,
    Tapered4,
    NonAxial2,
    NonAxialHalf,
    SquelchedGrid,
    VerticalSquelch,
    HorizontalSquelch,
    BlendedEllipticalGrid { beta: f64 },
    ThreeHalvesSquircular,
    HalfSquircular,
    FourSquircular,
    NonAxialTapered2,
    LameRadial,
    LameParametric,
}

/// Whether a mapping includes the rims of the square and the disc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Openness {
    Closed,
    Open,
}

/// Capability flags, so callers can pick a numeric fallback up front instead
/// of catching errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub openness: Openness,
    /// Closed-form square → disc.
    pub analytic_forward: bool,
    /// Closed-form disc → square.
    pub analytic_inverse: bool,
    /// Preserves the polar angle of every point.
    pub radial: bool,
    /// Identity on both Cartesian axes.
    pub axial: bool,
}

/// Default blend used when a blended grid is named without a `β`.
pub const DEFAULT_BLEND: f64 = 0.5;

impl MappingKind {
    /// The registry: one entry per mapping, blended grid at [`DEFAULT_BLEND`].
    pub const ALL: [MappingKind; 19] = [
        MappingKind::SchwarzChristoffel,
        MappingKind::FgSquircular,
        MappingKind::EllipticalGrid,
        MappingKind::TwoSquircular,
        MappingKind::ThreeSquircular,
        MappingKind::Tapered2,
        MappingKind::Tapered4,
        MappingKind::NonAxial2,
        MappingKind::NonAxialHalf,
        MappingKind::SquelchedGrid,
        MappingKind::VerticalSquelch,
        MappingKind::HorizontalSquelch,
        MappingKind::BlendedEllipticalGrid { beta: DEFAULT_BLEND },
        MappingKind::ThreeHalvesSquircular,
        MappingKind::HalfSquircular,
        MappingKind::FourSquircular,
        MappingKind::NonAxialTapered2,
        MappingKind::LameRadial,
        MappingKind::LameParametric,
    ];

    pub fn blended(beta: f64) -> Result<Self> {
        check_blend(beta)?;
        Ok(MappingKind::BlendedEllipticalGrid { beta })
    }

    pub fn capabilities(self) -> Capabilities {
        use MappingKind::*;
        let openness = match self {
            SquelchedGrid | VerticalSquelch | HorizontalSquelch | BlendedEllipticalGrid { .. } | LameParametric => {
                Openness::Open
            }
            _ => Openness::Closed,
        };
        let analytic_forward = !matches!(self, LameParametric);
        let analytic_inverse = !matches!(
            self,
            ThreeHalvesSquircular | HalfSquircular | FourSquircular | NonAxialTapered2 | LameRadial
        );
        let radial = matches!(
            self,
            FgSquircular
                | TwoSquircular
                | ThreeSquircular
                | Tapered2
                | Tapered4
                | NonAxial2
                | NonAxialHalf
                | ThreeHalvesSquircular
                | HalfSquircular
                | FourSquircular
                | NonAxialTapered2
                | LameRadial
        );
        let axial = !matches!(
            self,
            SchwarzChristoffel | NonAxial2 | NonAxialHalf | NonAxialTapered2 | LameParametric
        );
        Capabilities {
            openness,
            analytic_forward,
            analytic_inverse,
            radial,
            axial,
        }
    }

    pub fn is_open(self) -> bool {
        self.capabilities().openness == Openness::Open
    }

    pub fn is_radial(self) -> bool {
        self.capabilities().radial
    }

    pub fn is_axial(self) -> bool {
        self.capabilities().axial
    }

    pub fn has_analytic(self, direction: Direction) -> bool {
        let caps = self.capabilities();
        match direction {
            Direction::SquareToDisc => caps.analytic_forward,
            Direction::DiscToSquare => caps.analytic_inverse,
        }
    }

    /// Both directions available in closed form.
    pub fn is_bidirectional(self) -> bool {
        let caps = self.capabilities();
        caps.analytic_forward && caps.analytic_inverse
    }

    /// The direction with a closed form; for forward-only kinds this is
    /// square → disc, for `LameParametric` disc → square.
    pub fn analytic_direction(self) -> Direction {
        if self.capabilities().analytic_forward {
            Direction::SquareToDisc
        } else {
            Direction::DiscToSquare
        }
    }

    /// Canonical kebab-case name.
    pub fn name(self) -> &'static str {
        use MappingKind::*;
        match self {
            SchwarzChristoffel => "schwarz-christoffel",
            FgSquircular => "fg-squircular",
            EllipticalGrid => "elliptical-grid",
            TwoSquircular => "2-squircular",
            ThreeSquircular => "3-squircular",
            Tapered2 => "tapered2",
            Tapered4 => "tapered4",
            NonAxial2 => "non-axial-2",
            NonAxialHalf => "non-axial-half",
            SquelchedGrid => "squelched-grid",
            VerticalSquelch => "vertical-squelch",
            HorizontalSquelch => "horizontal-squelch",
            BlendedEllipticalGrid { .. } => "blended-grid",
            ThreeHalvesSquircular => "three-halves-squircular",
            HalfSquircular => "half-squircular",
            FourSquircular => "4-squircular",
            NonAxialTapered2 => "non-axial-tapered2",
            LameRadial => "lame-radial",
            LameParametric => "lame-parametric",
        }
    }

    /// Human-readable title.
    pub fn title(self) -> &'static str {
        use MappingKind::*;
        match self {
            SchwarzChristoffel => "Schwarz-Christoffel",
            FgSquircular => "FG-Squircular",
            EllipticalGrid => "Elliptical Grid",
            TwoSquircular => "2-Squircular",
            ThreeSquircular => "3-Squircular",
            Tapered2 => "Tapered2 Squircular",
            Tapered4 => "Tapered4 Squircular",
            NonAxial2 => "Non-Axial 2",
            NonAxialHalf => "Non-Axial 1/2",
            SquelchedGrid => "Squelched Grid",
            VerticalSquelch => "Vertical Squelch",
            HorizontalSquelch => "Horizontal Squelch",
            BlendedEllipticalGrid { .. } => "Blended Elliptical Grid",
            ThreeHalvesSquircular => "3/2-Squircular",
            HalfSquircular => "1/2-Squircular",
            FourSquircular => "4-Squircular",
            NonAxialTapered2 => "Non-Axial Tapered2",
            LameRadial => "Lamé Radial",
            LameParametric => "Lamé Parametric",
        }
    }

    /// Title used once the mapping is lifted to rectangles and ellipses. The
    /// conformal map is no longer conformal after the stretch, hence the
    /// distinct name.
    pub fn eccentric_title(self) -> &'static str {
        match self {
            MappingKind::SchwarzChristoffel => "Stretched Schwarz-Christoffel",
            other => other.title(),
        }
    }

    /// Squareness `s` as a function of the squircle radius `t` for the
    /// mappings built on the Fernandez-Guasti squircle.
    pub fn squareness(self, t: f64) -> Option<f64> {
        use MappingKind::*;
        Some(match self {
            FgSquircular | VerticalSquelch | HorizontalSquelch => t,
            TwoSquircular | NonAxial2 | NonAxialHalf | NonAxialTapered2 => t * t,
            ThreeSquircular => t * t * t,
            Tapered2 | SquelchedGrid => t * (2.0 - t * t).sqrt(),
            Tapered4 => t * (1.5 - 0.5 * t.powi(4)).sqrt(),
            ThreeHalvesSquircular => t.powf(1.5),
            HalfSquircular => t.sqrt(),
            FourSquircular => t.powi(4),
            _ => return None,
        })
    }

    /// Modulator `m(t)` applied to the squircle radius before it becomes the
    /// disc radius. The identity for every axial mapping.
    pub fn modulator(self, t: f64) -> f64 {
        match self {
            MappingKind::NonAxial2 => t * t,
            MappingKind::NonAxialHalf => t.sqrt(),
            MappingKind::NonAxialTapered2 => t * (2.0 - t * t).sqrt(),
            _ => t,
        }
    }

    /// Accepts the canonical name plus a few spelled-out aliases. The
    /// blended grid parses with [`DEFAULT_BLEND`]; use [`with_blend`] to set
    /// `β`.
    ///
    /// [`with_blend`]: MappingKind::with_blend
    pub fn from_name(name: &str) -> Option<Self> {
        let lowered = name.trim().to_ascii_lowercase();
        if let Some(kind) = MappingKind::ALL.iter().find(|k| k.name() == lowered) {
            return Some(*kind);
        }
        use MappingKind::*;
        Some(match lowered.as_str() {
            "sc" | "schwarz-christoffel-conformal" | "stretched-schwarz-christoffel" => SchwarzChristoffel,
            "fg" | "fg-squircle" => FgSquircular,
            "two-squircular" => TwoSquircular,
            "three-squircular" => ThreeSquircular,
            "tapered2-squircular" => Tapered2,
            "tapered4-squircular" => Tapered4,
            "non-axial-1/2" | "non-axial-0.5" => NonAxialHalf,
            "squelched" => SquelchedGrid,
            "blended-elliptical-grid" => BlendedEllipticalGrid { beta: DEFAULT_BLEND },
            "3/2-squircular" | "1.5-squircular" => ThreeHalvesSquircular,
            "1/2-squircular" | "0.5-squircular" => HalfSquircular,
            "four-squircular" => FourSquircular,
            "lame" | "lamé-radial" => LameRadial,
            "lamé-parametric" => LameParametric,
            _ => return None,
        })
    }

    /// Replaces the blend parameter of a blended grid; other kinds are
    /// returned unchanged.
    pub fn with_blend(self, beta: f64) -> Result<Self> {
        match self {
            MappingKind::BlendedEllipticalGrid { .. } => MappingKind::blended(beta),
            other => Ok(other),
        }
    }
}

impl fmt::Display for MappingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingKind::BlendedEllipticalGrid { beta } => write!(f, "{}(beta={beta})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for MappingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MappingKind::from_name(s).ok_or_else(|| Error::Param(format!("unknown mapping '{s}'")))
    }
}

pub(crate) fn check_blend(beta: f64) -> Result<()> {
    if beta > 0.0 && beta <= 1.0 {
        Ok(())
    } else {
        Err(Error::Param(format!(
            "blend parameter beta must lie in (0, 1], got {beta}"
        )))
    }
}
