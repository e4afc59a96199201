//! Small named instances used by tests, benchmarks and the default corpus.

use std::sync::Arc;

use crate::module::{quotient_module, regular_module};
use crate::quasi::{inner_sigma_derivation, validate_endomorphism, QuasiDerivation, RingEndomorphism};
use crate::ring::{build_poly_quotient, build_product, build_sn, build_vn, build_zmod, ideal_from_generators, FiniteRing, Side};
use crate::Elem;

use super::instance::Instance;

/// The regular module `R_R` with `(σ, δ) = (id, 0)`.
pub fn regular_identity(name: &str, ring: &Arc<FiniteRing>) -> Instance {
    let qd = Arc::new(QuasiDerivation::identity(ring));
    Instance::new(name, qd, regular_module(ring)).expect("regular module is over its ring")
}

pub fn z2xz2() -> Arc<FiniteRing> {
    let z2 = build_zmod(2).expect("Z2");
    build_product(&[z2.clone(), z2]).expect("Z2 x Z2")
}

/// `(a, b) ↦ (b, a)` on a two-factor product.
pub fn swap(ring: &Arc<FiniteRing>) -> RingEndomorphism {
    let images: Vec<Elem> = ring
        .elements()
        .map(|a| {
            let d = ring.decode(a);
            ring.encode(&[d[1], d[0]])
        })
        .collect();
    validate_endomorphism(ring, &images).expect("swap is an automorphism")
}

/// Regular `Z2 ⊕ Z2` with the swap automorphism and `δ = id − σ` (the inner
/// σ-derivation of `1`), or `δ = 0`.
pub fn z2xz2_swap(with_delta: bool) -> Instance {
    let r = z2xz2();
    let sigma = swap(&r);
    let qd = if with_delta {
        let delta = inner_sigma_derivation(&sigma, r.one()).expect("inner derivation");
        QuasiDerivation::new(sigma, delta).expect("same sigma")
    } else {
        QuasiDerivation::sigma_only(sigma)
    };
    let name = if with_delta { "z2xz2-swap-inner" } else { "z2xz2-swap" };
    Instance::new(name, Arc::new(qd), regular_module(&r)).expect("regular module")
}

/// `Z2[x]/(x^3)`.
pub fn truncated_z2_cubed() -> Arc<FiniteRing> {
    let z2 = build_zmod(2).expect("Z2");
    build_poly_quotient(&z2, &RingEndomorphism::identity(&z2), 3).expect("Z2[x]/(x^3)")
}

/// `a_0 + a_1 x + a_2 x^2 ↦ a_0` on `R[x]/(x^n)`.
pub fn eval_at_zero(ring: &Arc<FiniteRing>) -> RingEndomorphism {
    let images: Vec<Elem> = ring
        .elements()
        .map(|a| {
            let mut d = ring.decode(a);
            d[1..].iter_mut().for_each(|c| *c = 0);
            ring.encode(&d)
        })
        .collect();
    validate_endomorphism(ring, &images).expect("evaluation at zero is an endomorphism")
}

/// Regular `Z2[x]/(x^3)` with `σ` = evaluation at zero, `δ = 0`.
pub fn truncated_eval_at_zero() -> Instance {
    let r = truncated_z2_cubed();
    let qd = QuasiDerivation::sigma_only(eval_at_zero(&r));
    Instance::new("z2[x]/(x^3)-eval0", Arc::new(qd), regular_module(&r)).expect("regular module")
}

/// `Z4 / 2Z4` as a `Z4`-module, `(σ, δ) = (id, 0)`.
pub fn z4_mod_2z4() -> Instance {
    let z4 = build_zmod(4).expect("Z4");
    let ideal = ideal_from_generators(&z4, &[2], Side::TwoSided).expect("2Z4");
    let module = quotient_module(&ideal).expect("quotient");
    Instance::new("z4/2z4", Arc::new(QuasiDerivation::identity(&z4)), module).expect("same ring")
}

/// The corpus the law suite is required to pass on.
pub fn default_corpus() -> Vec<Instance> {
    let z2 = build_zmod(2).expect("Z2");
    let z4 = build_zmod(4).expect("Z4");
    vec![
        regular_identity("z2", &z2),
        regular_identity("z4", &z4),
        regular_identity("z2xz2", &z2xz2()),
        z2xz2_swap(false),
        z2xz2_swap(true),
        z4_mod_2z4(),
        regular_identity("v2(z2)", &build_vn(&z2, 2).expect("V2(Z2)")),
        regular_identity("s2(z2)", &build_sn(&z2, 2).expect("S2(Z2)")),
        truncated_eval_at_zero(),
    ]
}

/// The zero module `R/R` with `(σ, δ) = (id, 0)`.
pub fn zero_module(ring: &Arc<FiniteRing>) -> Instance {
    let all: Vec<Elem> = ring.elements().collect();
    let ideal = ideal_from_generators(ring, &all, Side::TwoSided).expect("R is an ideal");
    let module = quotient_module(&ideal).expect("quotient");
    Instance::new("zero", Arc::new(QuasiDerivation::identity(ring)), module).expect("same ring")
}
