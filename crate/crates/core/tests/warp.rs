use elliptify_core::warp::{self, psnr_interior, test_chart, Interpolation, RasterImage, WarpJob, CHART_CELL};
use elliptify_core::MappingKind;

/// Interior PSNR (dB) of elliptify-then-rectify on the 512x768 chart, as
/// computed by the independent resampler in tools/psnr_reference.py, less
/// 0.5 dB of slack.
const FLOORS: [(MappingKind, f64); 4] = [
    (MappingKind::FgSquircular, 60.42),
    (MappingKind::EllipticalGrid, 60.08),
    (MappingKind::SquelchedGrid, 58.90),
    (MappingKind::Tapered2, 59.78),
];

fn chart() -> RasterImage {
    test_chart(512, 768, CHART_CELL).unwrap()
}

#[test]
fn round_trip_psnr_meets_reference_floor() {
    let src = chart();
    for (kind, floor) in FLOORS {
        let job = WarpJob::kind(kind);
        let back = warp::rectify(&warp::elliptify(&src, &job).unwrap(), &job).unwrap();
        let psnr = psnr_interior(&src, &back, 0.9).unwrap();
        assert!(psnr >= floor, "{kind}: {psnr:.4} dB < {floor}");
    }
}

#[test]
fn elliptify_masks_the_corners() {
    let src = chart();
    let out = warp::elliptify(&src, &WarpJob::kind(MappingKind::TwoSquircular)).unwrap();
    assert_eq!(out.pixel(0, 0)[3], 0);
    assert_eq!(out.pixel(511, 767)[3], 0);
    assert_eq!(out.pixel(256, 384)[3], 255);
}

#[test]
fn oversampling_and_nearest_stay_close() {
    let src = test_chart(96, 64, 8.0).unwrap();
    let kind = MappingKind::FgSquircular;
    let plain = warp::elliptify(&src, &WarpJob::kind(kind)).unwrap();
    let over = warp::elliptify(&src, &WarpJob::kind(kind).oversample(3)).unwrap();
    let near = warp::elliptify(&src, &WarpJob::kind(kind).interpolation(Interpolation::Nearest)).unwrap();
    assert!(psnr_interior(&plain, &over, 0.8).unwrap() > 25.0);
    assert!(psnr_interior(&plain, &near, 0.8).unwrap() > 25.0);
}

#[test]
fn warps_are_deterministic() {
    let src = test_chart(64, 48, 6.0).unwrap();
    let job = WarpJob::kind(MappingKind::SchwarzChristoffel);
    let a = warp::elliptify(&src, &job).unwrap().encode_png().unwrap();
    let b = warp::elliptify(&src, &job).unwrap().encode_png().unwrap();
    assert_eq!(a, b);
}
