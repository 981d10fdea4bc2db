use paldefect::corpus;
use paldefect::language::LanguageSnapshot;
use paldefect::verify::{
    binary_witness, cycle_witness, defect_verdict, DefectKind, DefectOptions, WitnessOutcome,
};
use paldefect::Morphism;

fn zero_defect_rows() -> Vec<Morphism> {
    vec![
        corpus::fibonacci(),
        corpus::conjugacy_example(),
        corpus::hks_counterexample(),
        corpus::section8_mu_pi().0,
        corpus::aba_bab(),
    ]
}

#[test]
fn zero_defect_means_no_witness() {
    for m in zero_defect_rows() {
        let seed = m.growing_fixed_point_letters()[0];
        let v = defect_verdict(
            &m,
            seed,
            DefectOptions {
                horizon: 20_000,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(v.kind, DefectKind::Stable(0), "{m}");
        let l = LanguageSnapshot::build(&m, 14).unwrap();
        assert_eq!(
            cycle_witness(&l).unwrap().outcome,
            WitnessOutcome::NotFoundWithinBound,
            "{m}"
        );
        if m.alphabet().len() == 2 {
            assert_eq!(
                binary_witness(&l).unwrap().outcome,
                WitnessOutcome::NotFoundWithinBound,
                "{m}"
            );
        }
    }
}

#[test]
fn positive_defect_has_witnesses() {
    for m in [
        corpus::thue_morse(),
        corpus::z_family(2),
        corpus::z_family(3),
        corpus::bucci_vaslet(),
    ] {
        let l = LanguageSnapshot::build(&m, 14).unwrap();
        let r = cycle_witness(&l).unwrap();
        assert_eq!(r.outcome, WitnessOutcome::Found, "{m}");
        assert!(r.reverified);
    }
}
