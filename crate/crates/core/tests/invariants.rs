use std::f64::consts::TAU;

use elliptify_core::mapping::{RampantFn, SquircleParams};
use elliptify_core::{continuum_value, disc_to_square, square_to_disc, DiscPoint, MappingKind, SquarePoint};
use proptest::prelude::*;

use MappingKind::*;

fn all_kinds() -> Vec<MappingKind> {
    let mut kinds = MappingKind::ALL.to_vec();
    kinds.extend([0.25, 0.75, 1.0].map(|b| MappingKind::blended(b).unwrap()));
    kinds
}

fn kind_strategy() -> impl Strategy<Value = MappingKind> {
    prop::sample::select(all_kinds())
}

/// Points of the open square, kept off the rims by `1e-6`.
fn square_point() -> impl Strategy<Value = SquarePoint> {
    let c = 1.0 - 1e-6;
    (-c..=c, -c..=c).prop_map(|(x, y)| SquarePoint::new(x, y))
}

fn disc_point() -> impl Strategy<Value = DiscPoint> {
    (0.0..=1.0 - 1e-6, 0.0..TAU).prop_map(|(r, a): (f64, f64)| DiscPoint::new(r * a.cos(), r * a.sin()))
}

/// Horizontal and vertical squelch trade places under the axis swap.
fn swap_partner(kind: MappingKind) -> MappingKind {
    match kind {
        VerticalSquelch => HorizontalSquelch,
        HorizontalSquelch => VerticalSquelch,
        other => other,
    }
}

fn same_angle(a: (f64, f64), b: (f64, f64)) -> bool {
    let cross = a.0 * b.1 - a.1 * b.0;
    let dot = a.0 * b.0 + a.1 * b.1;
    let scale = a.0.hypot(a.1) * b.0.hypot(b.1);
    scale == 0.0 || (cross.abs() <= 1e-12 * scale && dot > 0.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn containment(kind in kind_strategy(), p in square_point(), q in disc_point()) {
        let d = square_to_disc(kind, p).unwrap();
        prop_assert!(d.norm_sq() <= 1.0 + 1e-12);
        let s = disc_to_square(kind, q).unwrap();
        prop_assert!(s.sup_norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn signs_are_preserved(kind in kind_strategy(), p in square_point()) {
        prop_assume!(kind != SchwarzChristoffel);
        let d = square_to_disc(kind, p).unwrap();
        prop_assert!(d.u * p.x >= 0.0 && d.v * p.y >= 0.0, "{} {:?} {:?}", kind, p, d);
    }

    #[test]
    fn radial_kinds_keep_the_angle(kind in kind_strategy(), p in square_point(), q in disc_point()) {
        prop_assume!(kind.is_radial());
        let d = square_to_disc(kind, p).unwrap();
        prop_assert!(same_angle((p.x, p.y), (d.u, d.v)), "{} {:?} {:?}", kind, p, d);
        let s = disc_to_square(kind, q).unwrap();
        prop_assert!(same_angle((q.u, q.v), (s.x, s.y)), "{} {:?} {:?}", kind, q, s);
    }

    #[test]
    fn square_symmetries(kind in kind_strategy(), p in square_point(), sx in any::<bool>(), sy in any::<bool>(), swap in any::<bool>()) {
        let (fx, fy) = (if sx { -1.0 } else { 1.0 }, if sy { -1.0 } else { 1.0 });
        let act = |x: f64, y: f64| {
            let (x, y) = (fx * x, fy * y);
            if swap { (y, x) } else { (x, y) }
        };
        let partner = if swap { swap_partner(kind) } else { kind };
        let base = square_to_disc(partner, p).unwrap();
        let (gx, gy) = act(p.x, p.y);
        let moved = square_to_disc(kind, SquarePoint::new(gx, gy)).unwrap();
        let expect = act(base.u, base.v);
        prop_assert!((moved.u - expect.0).abs() <= 1e-12 && (moved.v - expect.1).abs() <= 1e-12,
            "{} {:?}: {:?} vs {:?}", kind, p, moved, expect);
    }

    #[test]
    fn inverse_symmetries(kind in kind_strategy(), q in disc_point(), sx in any::<bool>(), sy in any::<bool>(), swap in any::<bool>()) {
        let (fx, fy) = (if sx { -1.0 } else { 1.0 }, if sy { -1.0 } else { 1.0 });
        let act = |x: f64, y: f64| {
            let (x, y) = (fx * x, fy * y);
            if swap { (y, x) } else { (x, y) }
        };
        let partner = if swap { swap_partner(kind) } else { kind };
        let base = disc_to_square(partner, q).unwrap();
        let (gu, gv) = act(q.u, q.v);
        let moved = disc_to_square(kind, DiscPoint::new(gu, gv)).unwrap();
        let expect = act(base.x, base.y);
        prop_assert!((moved.x - expect.0).abs() <= 1e-12 && (moved.y - expect.1).abs() <= 1e-12,
            "{} {:?}: {:?} vs {:?}", kind, q, moved, expect);
    }

    #[test]
    fn continuum_identity(kind in kind_strategy(), p in square_point()) {
        if let Ok(c) = continuum_value(kind, p) {
            let d = square_to_disc(kind, p).unwrap();
            let m = kind.modulator(c.sqrt());
            prop_assert!((d.norm_sq() - m * m).abs() < 1e-12, "{} {:?}", kind, p);
        }
    }

    #[test]
    fn squircle_membership(kind in kind_strategy(), p in square_point()) {
        if let (Ok(c), Some(s)) = (continuum_value(kind, p), kind.squareness(continuum_value(kind, p).unwrap_or(0.0).sqrt())) {
            prop_assume!(c > 1e-6);
            let sq = SquircleParams::new(s, c.sqrt()).unwrap();
            prop_assert!(sq.residual(p.x, p.y).abs() < 1e-12, "{} {:?}", kind, p);
        }
    }

    #[test]
    fn axis_pass_through(kind in kind_strategy(), a in -1.0f64..=1.0) {
        prop_assume!(kind.is_axial());
        let a = if kind.is_open() { a * (1.0 - 1e-9) } else { a };
        for p in [SquarePoint::new(a, 0.0), SquarePoint::new(0.0, a)] {
            let d = square_to_disc(kind, p).unwrap();
            prop_assert_eq!((d.u, d.v), (p.x, p.y));
            let s = disc_to_square(kind, DiscPoint::new(p.x, p.y)).unwrap();
            prop_assert_eq!((s.x, s.y), (p.x, p.y));
        }
    }

    #[test]
    fn non_axial_axes(a in -1.0f64..=1.0) {
        let na2 = square_to_disc(NonAxial2, SquarePoint::new(a, 0.0)).unwrap();
        prop_assert!((na2.u - a.signum() * a * a).abs() <= 1e-15 && na2.v == 0.0);
        let na2 = disc_to_square(NonAxial2, DiscPoint::new(0.0, a)).unwrap();
        prop_assert!((na2.y - a.signum() * a.abs().sqrt()).abs() <= 1e-15 && na2.x == 0.0);
        let nah = disc_to_square(NonAxialHalf, DiscPoint::new(a, 0.0)).unwrap();
        prop_assert!((nah.x - a.signum() * a * a).abs() <= 1e-15 && nah.y == 0.0);
        let nah = square_to_disc(NonAxialHalf, SquarePoint::new(0.0, a)).unwrap();
        prop_assert!((nah.v - a.signum() * a.abs().sqrt()).abs() <= 1e-15 && nah.u == 0.0);
    }

    #[test]
    fn three_squircular_quasi_symmetry(p in square_point()) {
        // Forward and inverse are the same kernel with two signs flipped:
        // √2 / √(1 + √(1 ± 4·a²b²(a² + b²))).
        let kernel = |sign: f64, a: f64, b: f64| {
            let g = std::f64::consts::SQRT_2
                / (1.0 + (1.0 + sign * 4.0 * a * a * b * b * (a * a + b * b)).sqrt()).sqrt();
            (g * a, g * b)
        };
        let d = square_to_disc(ThreeSquircular, p).unwrap();
        let (u, v) = kernel(1.0, p.x, p.y);
        prop_assert!((d.u - u).abs() < 1e-15 && (d.v - v).abs() < 1e-15);
        let (x, y) = kernel(-1.0, d.u, d.v);
        prop_assert!((x - p.x).abs() < 1e-12 && (y - p.y).abs() < 1e-12);
    }
}

#[test]
fn closed_kinds_keep_the_rims() {
    let closed: Vec<MappingKind> = MappingKind::ALL.into_iter().filter(|k| !k.is_open()).collect();
    for kind in closed {
        for i in 0..400 {
            let a = TAU * i as f64 / 400.0;
            let edge = if a.cos().abs() >= a.sin().abs() {
                SquarePoint::new(a.cos().signum(), a.tan().clamp(-1.0, 1.0) * a.cos().signum())
            } else {
                SquarePoint::new(a.sin().signum() / a.tan(), a.sin().signum())
            };
            let d = square_to_disc(kind, edge).unwrap();
            assert!((d.norm_sq() - 1.0).abs() < 1e-9, "{kind} {edge:?} -> {d:?}");
            let s = disc_to_square(kind, DiscPoint::new(a.cos(), a.sin())).unwrap();
            assert!((s.sup_norm() - 1.0).abs() < 1e-9, "{kind} {a} -> {s:?}");
        }
    }
}

#[test]
fn rampant_examples() {
    for n in [0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 7.5] {
        RampantFn::power(n).unwrap();
    }
    RampantFn::tapered2().check(1000).unwrap();
    RampantFn::tapered4().check(1000).unwrap();
    for kind in [NonAxial2, NonAxialHalf, NonAxialTapered2, FgSquircular] {
        RampantFn::new(move |t| kind.modulator(t), 1000).unwrap();
    }
}
