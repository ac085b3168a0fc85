use bcinv_core::ring::TableRing;
use bcinv_core::verify::{applicable_suites, Mode, SweepConfig};
use bcinv_core::{cross_backend_check, run_suite, Error, Involution, RingHandle, SUITES};

fn ring(spec: &str) -> RingHandle {
    RingHandle::parse(spec).unwrap()
}

#[test]
fn formula_suite_sweeps_every_triple_of_z6() {
    let report = run_suite(&ring("zn:6"), "thm-informuast2a", &SweepConfig::default()).unwrap();
    assert!(report.passed());
    assert_eq!(report.mode, Mode::Exhaustive);
    assert_eq!(report.tuples_checked, 216);
    assert_eq!(report.seed, None);
}

#[test]
fn every_suite_passes_on_small_modular_rings() {
    for n in [2, 3, 4, 6, 8] {
        let r = ring(&format!("zn:{n}"));
        for id in SUITES {
            let report = run_suite(&r, id, &SweepConfig::default()).unwrap();
            assert!(report.passed(), "{id} on zn:{n}: {:?}", report.counterexamples);
        }
    }
}

#[test]
fn every_suite_passes_on_m2_z2() {
    let r = ring("mat:zn:2:2");
    for id in applicable_suites(&r) {
        let report = run_suite(&r, id, &SweepConfig::default()).unwrap();
        assert!(report.passed(), "{id}: {:?}", report.counterexamples);
        assert_eq!(report.mode, Mode::Exhaustive);
    }
}

#[test]
fn rational_suites_sample_and_pass() {
    let r = ring("mat:q:2");
    let config = SweepConfig {
        samples: 60,
        ..Default::default()
    };
    for id in SUITES {
        let report = run_suite(&r, id, &config).unwrap();
        assert!(report.passed(), "{id}: {:?}", report.counterexamples);
        assert_eq!(report.mode, Mode::Sampled);
        assert_eq!(report.tuples_checked, 60);
    }
}

#[test]
fn sampled_reports_are_reproducible() {
    let r = ring("mat:q:2");
    let config = SweepConfig {
        seed: 11,
        samples: 40,
        ..Default::default()
    };
    for id in ["eq1-uniqueness", "thm-fiveway", "lemma-bcuva"] {
        let first = run_suite(&r, id, &config).unwrap().without_timing();
        let second = run_suite(&r, id, &config).unwrap().without_timing();
        assert_eq!(first, second, "{id}");
        assert_eq!(first.seed, Some(11));
    }
}

#[test]
fn oversized_finite_ring_needs_sampling() {
    let r = ring("mat:zn:4:2");
    let err = run_suite(&r, "thm-fiveway", &SweepConfig::default()).unwrap_err();
    assert!(matches!(err, Error::CardinalityGuard(_)), "{err:?}");
    let config = SweepConfig {
        sampled: true,
        samples: 50,
        ..Default::default()
    };
    let report = run_suite(&r, "thm-fiveway", &config).unwrap();
    assert!(report.passed());
    assert_eq!(report.mode, Mode::Sampled);
}

#[test]
fn unknown_suite_is_reported() {
    let err = run_suite(&ring("zn:6"), "no-such-suite", &SweepConfig::default()).unwrap_err();
    assert!(matches!(err, Error::UnknownSuite(_)));
}

#[test]
fn star_suites_need_an_involution() {
    let plain = ring("zn:6").with_involution(Involution::None).unwrap();
    let err = run_suite(&plain, "lemma-star-duality", &SweepConfig::default()).unwrap_err();
    assert_eq!(err, Error::NoInvolution);
    let ids = applicable_suites(&plain);
    assert!(!ids.contains(&"lemma-star-duality"));
    assert!(ids.contains(&"thm-fiveway"));
}

/// `𝔽₂ × 𝔽₂` given by tables, with the swap involution.
fn f2_squared() -> TableRing {
    let add = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    let mul = (0..4).map(|x| (0..4).map(|y| x & y).collect()).collect();
    TableRing {
        order: 4,
        add,
        mul,
        zero: 0,
        one: 3,
        star: Some(vec![0, 2, 1, 3]),
    }
}

#[test]
fn table_ring_suites_pass() {
    let r = RingHandle::table(f2_squared(), "f2xf2").unwrap();
    for id in applicable_suites(&r) {
        let report = run_suite(&r, id, &SweepConfig::default()).unwrap();
        assert!(report.passed(), "{id}: {:?}", report.counterexamples);
    }
}

#[test]
fn crosscheck_guards_and_sizes() {
    let report = cross_backend_check(2, 2, &SweepConfig::default()).unwrap();
    assert!(report.passed());
    assert_eq!(report.tuples_checked, 4096);
    let report = cross_backend_check(3, 1, &SweepConfig::default()).unwrap();
    assert!(report.passed());
    assert_eq!(report.tuples_checked, 27);
    let err = cross_backend_check(2, 3, &SweepConfig::default()).unwrap_err();
    assert!(matches!(err, Error::CardinalityGuard(_)));
    let err = cross_backend_check(4, 2, &SweepConfig::default()).unwrap_err();
    assert!(matches!(err, Error::InvalidRing(_)));
}
