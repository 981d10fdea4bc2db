mod common;

use paldefect::language::LanguageSnapshot;

#[test]
fn snapshots_match_long_prefixes() {
    for m in common::random_primitive(20, 11) {
        let l = LanguageSnapshot::build(&m, 10).unwrap();
        let len = 4 * l.evidence().seed_length;
        let prefix = m.fixed_point_prefix(l.seed(), len).unwrap();
        for n in 0..=10 {
            assert_eq!(l.factors(n), &prefix.factors(n), "{m} at length {n}");
        }
    }
}

#[test]
fn snapshots_are_factor_closed() {
    for m in common::random_primitive(20, 12) {
        let l = LanguageSnapshot::build(&m, 10).unwrap();
        assert_eq!(l.factors(0).len(), 1);
        for n in 0..10 {
            for w in l.factors(n + 1) {
                assert!(l.contains(&w.prefix(n)), "{m}: {w}");
                assert!(l.contains(&w.slice(1..n + 1)), "{m}: {w}");
            }
        }
    }
}

#[test]
fn second_difference_identity_everywhere() {
    for m in common::random_primitive(20, 13) {
        let l = LanguageSnapshot::build(&m, 12).unwrap();
        for n in 0..=10 {
            let r = l.check_eq1(n).unwrap();
            assert!(r.holds(), "{m}: {r:?}");
        }
    }
}

#[test]
fn evidence_is_consistent() {
    for m in common::random_primitive(10, 14) {
        let l = LanguageSnapshot::build(&m, 12).unwrap();
        let e = l.evidence();
        assert!(e.coverage_round <= e.rounds);
        assert!(e.last_growth_round.iter().all(|&r| r <= e.rounds));
        assert!(e.seed_length >= 2 * e.witness_length);
    }
}
