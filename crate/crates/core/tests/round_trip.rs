use elliptify_core::diagnostics::{round_trip, DEFAULT_INSET};
use elliptify_core::{InversionConfig, MappingKind};

#[test]
fn every_kind_round_trips() {
    let cfg = InversionConfig::default();
    let mut kinds: Vec<MappingKind> = MappingKind::ALL.to_vec();
    kinds.extend([0.25, 0.75, 1.0].map(|b| MappingKind::blended(b).unwrap()));
    for kind in kinds {
        let n = if kind.is_bidirectional() && kind != MappingKind::SchwarzChristoffel {
            10_000
        } else {
            2_000
        };
        let report = round_trip(kind, n, DEFAULT_INSET, &cfg).unwrap();
        println!("{kind}: {:e} (threshold {:e})", report.max_err, report.threshold);
        assert!(report.passed(), "{report:?}");
    }
}
