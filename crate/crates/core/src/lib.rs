//! Finite-ring workbench for Ore extensions `R[x; σ, δ]` and skew polynomial
//! modules `M[x; σ, δ]`.
//!
//! Rings and modules are small and explicit: every carrier is an index set
//! with dense operation tables. On top of that the crate provides skew
//! polynomial arithmetic, the triangular matrix constructions `S_n`, `V_n`
//! and `V_n(·, σ)`, and degree-bounded exhaustive checkers for McCoy,
//! Armendariz, compatibility and reducedness properties (see [`lab`]).

pub mod error;
pub mod iso;
pub mod lab;
pub mod module;
pub mod poly;
pub mod quasi;
pub mod ring;
pub mod search;

/// Index of an element in a finite carrier.
pub type Elem = u16;

pub use error::{Error, MapViolation, Result};
pub use iso::{iso_phi, iso_phi_module, phi_between, HomKind, ModuleHom, ModuleIso, RingIso};
pub use module::{
    build_sn_module, build_vn_module, build_vn_sigma_module, poly_quotient_module,
    product_module, quotient_module, regular_module, submodule, validate_module, FiniteModule,
    ModuleConstruction,
};
pub use poly::{
    left_annihilator_in_r, right_annihilator_in_r, AnnihilatorMeet, ModulePolynomial,
    OreExtension, SkewModule, SkewPolynomial,
};
pub use quasi::{
    inner_sigma_derivation, lift_entrywise, product_quasi_derivation, validate_endomorphism, validate_sigma_derivation,
    QuasiDerivation, RingEndomorphism, SigmaDerivation,
};
pub use search::Bounds;
pub use ring::{
    build_poly_quotient, build_product, build_sn, build_vn, build_vn_sigma, build_zmod,
    ideal_from_generators, validate_ring, Construction, FiniteRing, Ideal, Limits, Side,
    ValidationReport,
};
