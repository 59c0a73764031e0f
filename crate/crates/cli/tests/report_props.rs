//! Report invariants: pass implies equality, overall is the conjunction,
//! and reports depend only on flags and seeds.

use e6check_cli::commands::{cubic, higgs_selftest, CubicOptions, CubicSource};
use e6check_cli::{CheckResult, RunReport, Status};
use proptest::prelude::*;

fn strip_timings(mut r: RunReport) -> RunReport {
    for c in &mut r.checks {
        c.runtime_ms = 0;
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pass_iff_equal(expected in "[0-9a-z<=,]{0,6}", actual in "[0-9a-z<=,]{0,6}") {
        let c = CheckResult::compare("x", &expected, &actual, "c");
        prop_assert_eq!(c.status == Status::Pass, expected == actual);
    }

    #[test]
    fn overall_is_the_conjunction(outcomes in prop::collection::vec(0u8..3, 0..12)) {
        let mut r = RunReport::new("e6check test", vec![]);
        for (i, o) in outcomes.iter().enumerate() {
            let c = match o {
                0 => CheckResult::compare(format!("c{i}"), 1, 1, "c"),
                1 => CheckResult::compare(format!("c{i}"), 1, 2, "c"),
                _ => CheckResult::skipped(format!("c{i}"), 1, 2, "c", "why"),
            };
            r.push(c);
        }
        prop_assert_eq!(r.passed(), !outcomes.contains(&1));
        prop_assert_eq!(r.exit_code(), if outcomes.contains(&1) { 1 } else { 0 });
    }

    #[test]
    fn timings_never_reach_the_hash(ms in prop::collection::vec(0u64..100_000, 3)) {
        let mut r = RunReport::new("e6check test", vec![1]);
        for (i, &t) in ms.iter().enumerate() {
            r.push(CheckResult::compare(format!("c{i}"), i, i, "c").with_runtime(t));
        }
        prop_assert_eq!(r.canonical_hash(), strip_timings(r.clone()).canonical_hash());
    }

    #[test]
    fn higgs_reports_are_deterministic(seed in any::<u64>()) {
        let mut a = RunReport::new("e6check higgs-selftest", vec![seed]);
        a.extend(higgs_selftest(seed, 2).unwrap());
        let mut b = RunReport::new("e6check higgs-selftest", vec![seed]);
        b.extend(higgs_selftest(seed, 2).unwrap());
        prop_assert_eq!(a.masked_json(), b.masked_json());
        prop_assert!(a.passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn cubic_reports_are_deterministic(seed in any::<u64>()) {
        let opts = CubicOptions {
            source: CubicSource::Random { count: 1, seed, coeff_bound: 3 },
            prime: None,
            emit: None,
        };
        let a = strip_timings({ let mut r = RunReport::new("c", vec![seed]); r.extend(cubic(&opts).unwrap()); r });
        let b = strip_timings({ let mut r = RunReport::new("c", vec![seed]); r.extend(cubic(&opts).unwrap()); r });
        prop_assert_eq!(a, b);
    }
}
