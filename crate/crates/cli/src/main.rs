use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use elliptify_core::diagnostics::{self, DEFAULT_INSET};
use elliptify_core::grid::{self, GridStyle};
use elliptify_core::warp::{self, Interpolation, RasterImage, WarpDirection, WarpJob};
use elliptify_core::{
    disc_to_square, ellipse_to_rect, rect_to_ellipse, square_to_disc, Direction, DiscPoint, EllipsePoint, Error,
    Fallback, InversionConfig, MappingKind, RectPoint, RectSpec, SquarePoint,
};

/// Square/disc and rectangle/ellipse mappings for points and images.
///
/// Without a subcommand, `elliptify --map NAME IN OUT` elliptifies IN.
#[derive(Parser, Debug)]
#[command(name = "elliptify", version, args_conflicts_with_subcommands = true)]
struct Cli {
    /// Print every mapping with its capabilities and exit.
    #[arg(long, exclusive = true)]
    list_maps: bool,

    #[command(flatten)]
    warp: Option<WarpArgs>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rectangle image to ellipse image.
    Elliptify(WarpArgs),
    /// Ellipse image back to a rectangle image.
    Rectify(WarpArgs),
    /// Map a single point.
    Probe(ProbeArgs),
    /// Round-trip error over quasi-random samples.
    Roundtrip(RoundtripArgs),
    /// Render a grid diagram as SVG.
    Grid(GridArgs),
}

#[derive(Args, Debug)]
struct WarpArgs {
    /// Mapping name, or `crop` for the masking baseline.
    #[arg(long)]
    map: String,
    /// Blend parameter of blended-grid.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value = "bilinear")]
    interp: String,
    /// Samples per pixel along each axis.
    #[arg(long, default_value_t = 1)]
    oversample: u32,
    /// Solve the missing direction numerically instead of refusing.
    #[arg(long)]
    numeric_fallback: bool,
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long)]
    jobs: Option<usize>,
    input: PathBuf,
    output: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProbeDir {
    S2d,
    D2s,
    R2e,
    E2r,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct ProbeArgs {
    #[arg(long)]
    map: String,
    #[arg(long, value_enum)]
    dir: ProbeDir,
    /// Horizontal half-axis for r2e/e2r.
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Vertical half-axis for r2e/e2r.
    #[arg(long, default_value_t = 1.0)]
    b: f64,
    #[arg(long)]
    beta: Option<f64>,
    x: f64,
    y: f64,
}

#[derive(Args, Debug)]
struct RoundtripArgs {
    #[arg(long)]
    map: String,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(short = 'n', long = "samples", default_value_t = 10_000)]
    n: usize,
    /// Inset from the rim of the sampled domain.
    #[arg(long, default_value_t = DEFAULT_INSET)]
    eps: f64,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long)]
    map: String,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value = "polar-in-square")]
    style: String,
    #[arg(long)]
    out: PathBuf,
    /// Viewport size in pixels.
    #[arg(long, default_value_t = 512)]
    size: u32,
    /// Check every vertex against the known contour equations.
    #[arg(long)]
    verify: bool,
}

/// Worst contour residual `--verify` accepts.
const GRID_TOLERANCE: f64 = 1e-9;

/// Exit codes: 1 failed check or numeric failure, 2 bad arguments or
/// domain, 3 I/O, 4 capability.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Domain(_) | Error::Param(_) => 2,
        Error::Io(_) | Error::Image(_) => 3,
        Error::Capability { .. } => 4,
        Error::Numeric(_) | Error::Convergence { .. } | Error::NonMonotone { .. } | Error::SingularJacobian { .. } => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = if cli.list_maps {
        list_maps();
        Ok(0)
    } else {
        match (cli.command, cli.warp) {
            (Some(Command::Elliptify(args)), _) | (None, Some(args)) => run_warp(&args, WarpDirection::Elliptify),
            (Some(Command::Rectify(args)), _) => run_warp(&args, WarpDirection::Rectify),
            (Some(Command::Probe(args)), _) => probe(&args),
            (Some(Command::Roundtrip(args)), _) => roundtrip(&args),
            (Some(Command::Grid(args)), _) => render_grid(&args),
            (None, None) => {
                eprintln!("elliptify: nothing to do; see --help");
                Ok(2)
            }
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("elliptify: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Prefixes file errors with the path involved.
fn at_path(err: Error, path: &Path) -> Error {
    match err {
        Error::Io(e) => Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))),
        Error::Image(e) => Error::Io(std::io::Error::other(format!("{}: {e}", path.display()))),
        other => other,
    }
}

fn parse_kind(name: &str, beta: Option<f64>) -> Result<MappingKind, Error> {
    let kind = MappingKind::from_name(name).ok_or_else(|| Error::Param(format!("unknown mapping '{name}'")))?;
    match beta {
        Some(b) if matches!(kind, MappingKind::BlendedEllipticalGrid { .. }) => kind.with_blend(b),
        Some(_) => Err(Error::Param(format!("--beta applies only to blended-grid, not {kind}"))),
        None => Ok(kind),
    }
}

fn list_maps() {
    println!(
        "{:<24} {:<7} {:<10} {:<10} {:<7} axial",
        "name", "domain", "s2d", "d2s", "radial"
    );
    for kind in MappingKind::ALL {
        let how = |d| if kind.has_analytic(d) { "analytic" } else { "numeric" };
        let flag = |b: bool| if b { "yes" } else { "no" };
        println!(
            "{:<24} {:<7} {:<10} {:<10} {:<7} {}",
            kind.name(),
            if kind.is_open() { "open" } else { "closed" },
            how(Direction::SquareToDisc),
            how(Direction::DiscToSquare),
            flag(kind.is_radial()),
            flag(kind.is_axial()),
        );
    }
}

fn run_warp(args: &WarpArgs, direction: WarpDirection) -> Result<u8, Error> {
    let interpolation: Interpolation = args.interp.parse()?;
    let job = if args.map.eq_ignore_ascii_case("crop") {
        if args.beta.is_some() {
            return Err(Error::Param("--beta applies only to blended-grid, not crop".into()));
        }
        WarpJob::crop()
    } else {
        WarpJob::kind(parse_kind(&args.map, args.beta)?)
    };
    let fallback = if args.numeric_fallback {
        Fallback::Numeric(InversionConfig::default())
    } else {
        Fallback::Disabled
    };
    let job = job
        .interpolation(interpolation)
        .oversample(args.oversample)
        .fallback(fallback);

    let input = RasterImage::read_png(&args.input).map_err(|e| at_path(e, &args.input))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = args.jobs {
        if n == 0 {
            return Err(Error::Param("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| Error::Param(format!("thread pool: {e}")))?;
    let output = pool.install(|| warp::warp(&input, &job, direction))?;
    output.write_png(&args.output).map_err(|e| at_path(e, &args.output))?;
    Ok(0)
}

fn probe(args: &ProbeArgs) -> Result<u8, Error> {
    let kind = parse_kind(&args.map, args.beta)?;
    let (x, y) = (args.x, args.y);
    let (p, q) = match args.dir {
        ProbeDir::S2d => {
            let d = square_to_disc(kind, SquarePoint::new(x, y))?;
            (d.u, d.v)
        }
        ProbeDir::D2s => {
            let s = disc_to_square(kind, DiscPoint::new(x, y))?;
            (s.x, s.y)
        }
        ProbeDir::R2e => {
            let e = rect_to_ellipse(kind, RectSpec::new(args.a, args.b)?, RectPoint::new(x, y))?;
            (e.u, e.v)
        }
        ProbeDir::E2r => {
            let r = ellipse_to_rect(kind, RectSpec::new(args.a, args.b)?, EllipsePoint::new(x, y))?;
            (r.x, r.y)
        }
    };
    if !(p.is_finite() && q.is_finite()) {
        return Err(Error::Numeric(format!("{kind} produced a non-finite result")));
    }
    println!("{} {}", significant(p, 15), significant(q, 15));
    Ok(0)
}

/// `v` rounded to `digits` significant digits, in plain decimal with
/// trailing zeros dropped.
fn significant(v: f64, digits: i32) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = format!("{:e}", v.abs());
    let exp: i32 = magnitude.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (digits - 1 - exp).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn roundtrip(args: &RoundtripArgs) -> Result<u8, Error> {
    let kind = parse_kind(&args.map, args.beta)?;
    if args.n == 0 {
        return Err(Error::Param("-n must be at least 1".into()));
    }
    if !(0.0..1.0).contains(&args.eps) {
        return Err(Error::Param(format!("--eps must lie in [0, 1), got {}", args.eps)));
    }
    let report = diagnostics::round_trip(kind, args.n, args.eps, &InversionConfig::default())?;
    let how = if report.numeric {
        "numeric inversion"
    } else {
        "closed forms"
    };
    let verdict = if report.passed() { "<" } else { ">=" };
    println!(
        "{kind}: max_err {:.3e} {verdict} {:e} over {} samples ({how})",
        report.max_err, report.threshold, report.samples
    );
    Ok(if report.passed() { 0 } else { 1 })
}

fn render_grid(args: &GridArgs) -> Result<u8, Error> {
    let kind = parse_kind(&args.map, args.beta)?;
    let style: GridStyle = args.style.parse()?;
    if args.size == 0 {
        return Err(Error::Param("--size must be at least 1".into()));
    }
    let drawing = grid::render(kind, style)?;
    let mut code = 0;
    if args.verify {
        let worst = grid::verify(&drawing)?;
        let verdict = if worst <= GRID_TOLERANCE { "<=" } else { ">" };
        println!("{kind}: max contour residual {worst:.3e} {verdict} {GRID_TOLERANCE:e}");
        if worst > GRID_TOLERANCE {
            code = 1;
        }
    }
    std::fs::write(&args.out, drawing.to_svg(args.size)).map_err(|e| at_path(e.into(), &args.out))?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(significant(std::f64::consts::FRAC_1_SQRT_2, 15), "0.707106781186548");
        assert_eq!(significant(0.5, 15), "0.5");
        assert_eq!(significant(-0.0, 15), "0");
        assert_eq!(significant(-1.25e-7, 3), "-0.000000125");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
