use std::path::Path;
use std::process::{Command, Output};

use elliptify_core::grid::{self, GridStyle};
use elliptify_core::warp::{self, test_chart, RasterImage, WarpJob};
use elliptify_core::MappingKind;

fn elliptify(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elliptify"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn with_chart() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    test_chart(90, 60, 8.0)
        .unwrap()
        .write_png(dir.path().join("in.png"))
        .unwrap();
    dir
}

#[test]
fn probe_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = elliptify(
        &["probe", "--map", "2-squircular", "--dir", "s2d", "1", "1"],
        dir.path(),
    );
    assert_eq!(stdout(&out), "0.707106781186548 0.707106781186548\n");
    let out = elliptify(
        &["probe", "--map", "fg-squircular", "--dir", "d2s", "0.5", "0"],
        dir.path(),
    );
    assert_eq!(stdout(&out), "0.5 0\n");
    let out = elliptify(
        &["probe", "--map", "squelched-grid", "--dir", "s2d", "1", "1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular corner"));
}

#[test]
fn probe_accepts_negative_coordinates_and_eccentric_alias() {
    let dir = tempfile::tempdir().unwrap();
    let out = elliptify(
        &[
            "probe",
            "--map",
            "stretched-schwarz-christoffel",
            "--dir",
            "r2e",
            "--a",
            "2",
            "-1.5",
            "-0.5",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let v: Vec<f64> = stdout(&out).split_whitespace().map(|t| t.parse().unwrap()).collect();
    assert!(v[0] < 0.0 && v[1] < 0.0 && (v[0] / 2.0).powi(2) + v[1] * v[1] < 1.0);
}

#[test]
fn roundtrip_examples() {
    let dir = tempfile::tempdir().unwrap();
    for (map, n) in [
        ("elliptical-grid", "10000"),
        ("schwarz-christoffel", "1000"),
        ("4-squircular", "2000"),
    ] {
        let out = elliptify(&["roundtrip", "--map", map, "-n", n], dir.path());
        assert!(out.status.success(), "{map}");
        assert!(stdout(&out).contains("max_err"), "{map}");
    }
}

#[test]
fn warp_output_matches_library() {
    let dir = with_chart();
    let out = elliptify(
        &[
            "elliptify",
            "--map",
            "blended-grid",
            "--beta",
            "0.5",
            "in.png",
            "out.png",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let src = RasterImage::read_png(dir.path().join("in.png")).unwrap();
    let job = WarpJob::kind(MappingKind::blended(0.5).unwrap());
    let expect = warp::elliptify(&src, &job).unwrap().encode_png().unwrap();
    assert_eq!(std::fs::read(dir.path().join("out.png")).unwrap(), expect);

    let out = elliptify(&["rectify", "--map", "crop", "in.png", "back.png"], dir.path());
    assert!(out.status.success());
    let expect = warp::rectify(&src, &WarpJob::crop()).unwrap().encode_png().unwrap();
    assert_eq!(std::fs::read(dir.path().join("back.png")).unwrap(), expect);
}

#[test]
fn grid_output_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let out = elliptify(
        &[
            "grid",
            "--map",
            "fg-squircular",
            "--style",
            "polar-in-square",
            "--out",
            "g.svg",
            "--verify",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("residual"));
    let expect = grid::render(MappingKind::FgSquircular, GridStyle::PolarInSquare)
        .unwrap()
        .to_svg(512);
    assert_eq!(std::fs::read_to_string(dir.path().join("g.svg")).unwrap(), expect);
}

#[test]
fn exit_codes() {
    let dir = with_chart();
    let code = |args: &[&str]| elliptify(args, dir.path()).status.code();
    assert_eq!(
        code(&["elliptify", "--map", "4-squircular", "in.png", "o.png"]),
        Some(4)
    );
    assert_eq!(
        code(&[
            "elliptify",
            "--map",
            "4-squircular",
            "--numeric-fallback",
            "in.png",
            "o.png"
        ]),
        Some(0)
    );
    assert_eq!(code(&["elliptify", "--map", "fg", "missing.png", "o.png"]), Some(3));
    assert_eq!(
        code(&["elliptify", "--map", "fg", "in.png", "no/such/dir/o.png"]),
        Some(3)
    );
    assert_eq!(code(&["elliptify", "--map", "warp-drive", "in.png", "o.png"]), Some(2));
    assert_eq!(
        code(&["elliptify", "--map", "fg", "--beta", "0.5", "in.png", "o.png"]),
        Some(2)
    );
    assert_eq!(
        code(&["elliptify", "--map", "fg", "--interp", "cubic", "in.png", "o.png"]),
        Some(2)
    );
    assert_eq!(code(&["probe", "--map", "fg", "--dir", "s2d", "1.5", "0"]), Some(2));
    assert_eq!(
        code(&["grid", "--map", "fg", "--style", "hexagonal", "--out", "g.svg"]),
        Some(2)
    );
    assert_eq!(code(&["roundtrip", "--map", "fg", "-n", "0"]), Some(2));
}

#[test]
fn list_maps_shows_the_registry() {
    let out = elliptify(&["--list-maps"], Path::new("."));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 19);
    for kind in MappingKind::ALL {
        assert!(
            rows.iter().any(|r| r.split_whitespace().next() == Some(kind.name())),
            "{kind}"
        );
    }
    assert!(rows
        .iter()
        .any(|r| r.starts_with("squelched-grid") && r.contains("open")));
}
