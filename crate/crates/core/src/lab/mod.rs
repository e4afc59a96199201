//! Property checkers.
//!
//! Element-level properties (compatibility, semicommutativity, reducedness,
//! `C_σ`) are decided exactly by scanning `M × R`. Polynomial properties
//! (McCoy, Armendariz, condition `(*)` and friends) quantify over all
//! degrees, so they are checked up to [`Bounds`] and a clean run is reported
//! as [`Verdict::HoldsUpToBound`], never as a proof.

use std::time::Instant;

use crate::search::Bounds;

pub mod bounded;
pub mod checks;
pub mod dispatch;
pub mod fixtures;
pub mod instance;
pub mod laws;
pub mod report;

pub use bounded::{
    check_annihilator_closure, check_annihilator_closure_all, check_condition_star, check_mccoy,
    check_mccoy_theorem, check_nilpotent_annihilation, check_skew_armendariz, check_skew_mccoy,
    check_strong_annihilation, ClosureReport,
};
pub use checks::{
    check_compatibility_consequences, check_compatible, check_condition_c_sigma, check_reduced,
    check_semicommutative, check_sigma_reduced, check_sigma_semicommutative,
    check_square_cancellation_lemma,
};
pub use dispatch::{is_exact, run_property, PROPERTIES};
pub use instance::Instance;
pub use laws::{matrix_instance, run_law_suite, LawOutcome, LawResult, MatrixKind, SuiteReport};
pub use report::{
    CompatClause, ConsequenceMap, ElemRef, PolyRef, PropertyReport, Verdict, Witness,
};

pub(crate) struct Stopwatch {
    start: Instant,
    property: String,
    instance: String,
    bounds: Option<Bounds>,
}

impl Stopwatch {
    pub(crate) fn start(property: &str, inst: &Instance, bounds: Option<Bounds>) -> Self {
        Stopwatch {
            start: Instant::now(),
            property: property.to_string(),
            instance: inst.name().to_string(),
            bounds,
        }
    }

    fn finish(self, verdict: Verdict, witness: Option<Witness>, scanned: u64, note: Option<String>) -> PropertyReport {
        PropertyReport {
            property: self.property,
            instance: self.instance,
            bounds: self.bounds,
            verdict,
            witness,
            pairs_scanned: scanned,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            note,
        }
    }

    pub(crate) fn holds(self, scanned: u64) -> PropertyReport {
        self.finish(Verdict::HoldsUpToBound, None, scanned, None)
    }

    pub(crate) fn fails(self, witness: Witness, scanned: u64) -> PropertyReport {
        self.finish(Verdict::Fails, Some(witness), scanned, None)
    }

    pub(crate) fn not_applicable(self, reason: &str, scanned: u64) -> PropertyReport {
        self.finish(Verdict::NotApplicable, None, scanned, Some(reason.to_string()))
    }
}
