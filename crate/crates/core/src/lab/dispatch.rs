//! Property names as used on the command line.

use crate::error::{Error, Result};
use crate::search::Bounds;

use super::bounded::{
    check_annihilator_closure_all, check_condition_star, check_mccoy, check_nilpotent_annihilation,
    check_skew_armendariz, check_skew_mccoy, check_strong_annihilation,
};
use super::checks::{
    check_compatibility_consequences, check_compatible, check_condition_c_sigma, check_reduced,
    check_semicommutative, check_sigma_reduced, check_sigma_semicommutative, check_square_cancellation_lemma,
};
use super::instance::Instance;
use super::report::PropertyReport;

/// Powers checked by `compatibility-consequences` when run by name.
pub const CONSEQUENCE_POWER_BOUND: usize = 3;

/// Every property `run_property` accepts, exact checks first.
pub const PROPERTIES: &[&str] = &[
    "compatible",
    "semicommutative",
    "sigma-semicommutative",
    "reduced",
    "sigma-reduced",
    "c-sigma",
    "compatibility-consequences",
    "square-cancellation",
    "star",
    "mccoy",
    "skew-mccoy",
    "skew-armendariz",
    "strong-annihilation",
    "nilpotent-annihilation",
    "annihilator-closure",
];

/// True for properties decided exactly (bounds are ignored).
pub fn is_exact(property: &str) -> bool {
    PROPERTIES.iter().position(|&p| p == property).is_some_and(|i| i < 8)
}

pub fn run_property(property: &str, inst: &Instance, bounds: Bounds, jobs: usize) -> Result<PropertyReport> {
    Ok(match property {
        "compatible" => check_compatible(inst),
        "semicommutative" => check_semicommutative(inst),
        "sigma-semicommutative" => check_sigma_semicommutative(inst),
        "reduced" => check_reduced(inst),
        "sigma-reduced" => check_sigma_reduced(inst),
        "c-sigma" => check_condition_c_sigma(inst),
        "compatibility-consequences" => check_compatibility_consequences(inst, CONSEQUENCE_POWER_BOUND),
        "square-cancellation" => check_square_cancellation_lemma(inst),
        "star" => check_condition_star(inst, bounds, jobs),
        "mccoy" => check_mccoy(inst, bounds, jobs),
        "skew-mccoy" => check_skew_mccoy(inst, bounds, jobs),
        "skew-armendariz" => check_skew_armendariz(inst, bounds, jobs),
        "strong-annihilation" => check_strong_annihilation(inst, bounds, jobs),
        "nilpotent-annihilation" => check_nilpotent_annihilation(inst, bounds, jobs),
        "annihilator-closure" => check_annihilator_closure_all(inst, bounds, jobs),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown property {other:?}; expected one of {}",
                PROPERTIES.join(", ")
            )))
        }
    })
}
