//! Finite-scale checks of the main statements about palindromic defect:
//! defect verdicts on fixed points, witness searches, graph-shape and
//! complexity identities, the Φ-map properties, and a hypothesis audit.
//!
//! Every "there exists K" becomes the smallest threshold found below the
//! snapshot bound, or an explicit not-found.

mod audit;
mod defect;
mod phi;
mod shape;
mod witness;

pub use audit::{
    main_theorem_audit, section8_decomposition_check, AuditConclusion, AuditReport, PeriodicScreen,
    Section8Report,
};
pub use defect::{
    checkpoints, defect_verdict, periodicity_heuristic, smallest_period, DefectKind, DefectOptions,
    DefectVerdict, DEFAULT_GROWTH_WINDOW, DEFAULT_HORIZON, DEFAULT_PERIOD_BOUND,
};
pub use phi::{
    phi_property_suite, phi_property_suite_seeded, ConjugatePalindromeCheck, PhiSuiteReport,
    PropertyResult, DEFAULT_RNG_SEED, DEFAULT_SAMPLES,
};
pub use shape::{
    finite_defect_shape_check, prop54_check, Prop54Report, Prop54Row, ShapeFailure, ShapeReport,
};
pub use witness::{
    binary_witness, cycle_witness, cycle_witness_from, gamma_cycle_scan, LetterReturn, Witness,
    WitnessOutcome, WitnessReport, LETTER_RETURN_HORIZON,
};
