//! The coefficient maps `φ: R[x; σ]/(x^n) → V_n(R, σ)` and
//! `ϕ: M[x; σ]/M[x; σ](x^n) → V_n(M, σ)`, checked exhaustively.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{build_vn_sigma_module_over, poly_quotient_module_over, FiniteModule};
use crate::quasi::RingEndomorphism;
use crate::ring::{Construction, FiniteRing, Limits};
use crate::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    /// Bijective, additive, multiplicative and unital.
    RingIso,
    /// Bijective and additive, compatible with a ring isomorphism on scalars.
    AdditiveIso,
}

/// A validated isomorphism given by its image table.
#[derive(Debug, Clone)]
pub struct ModuleHom {
    kind: HomKind,
    images: Vec<Elem>,
}

impl ModuleHom {
    pub fn kind(&self) -> HomKind {
        self.kind
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.images[a as usize]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }
}

/// Rings and map from [`iso_phi`].
#[derive(Debug, Clone)]
pub struct RingIso {
    pub source: Arc<FiniteRing>,
    pub target: Arc<FiniteRing>,
    pub phi: ModuleHom,
}

/// Modules and maps from [`iso_phi_module`].
#[derive(Debug, Clone)]
pub struct ModuleIso {
    pub source: Arc<FiniteModule>,
    pub target: Arc<FiniteModule>,
    pub ring: RingIso,
    pub phi: ModuleHom,
}

fn is_bijection(images: &[Elem], size: usize) -> bool {
    let mut seen = vec![false; size];
    images.len() == size
        && images.iter().all(|&e| (e as usize) < size && !std::mem::replace(&mut seen[e as usize], true))
}

fn violation(what: &str, elems: &[Elem]) -> Error {
    Error::Internal(format!("coefficient map is not {what} at {elems:?}"))
}

/// Maps `a_0 + … + a_{n-1}x^{n-1}` to `(a_0, …, a_{n-1})` between an existing
/// truncated skew polynomial ring and a `V_n(R, σ)` over the same `(R, σ, n)`,
/// and checks that the map is a ring isomorphism.
pub fn phi_between(source: &FiniteRing, target: &FiniteRing) -> Result<ModuleHom> {
    match (source.construction(), target.construction()) {
        (
            Construction::PolyQuotient { base: b1, sigma: s1, n: n1 },
            Construction::VnSigma { base: b2, sigma: s2, n: n2 },
        ) if n1 == n2 && b1.same_as(b2) && s1.images() == s2.images() => {}
        _ => {
            return Err(Error::ConstructionMismatch(
                "phi needs R[x;sigma]/(x^n) and V_n(R, sigma) with equal parameters".into(),
            ))
        }
    }
    let images: Vec<Elem> = source.elements().map(|a| target.encode(&source.decode(a))).collect();
    if !is_bijection(&images, target.size()) {
        return Err(violation("bijective", &[]));
    }
    let phi = |a: Elem| images[a as usize];
    if phi(source.one()) != target.one() {
        return Err(violation("unital", &[]));
    }
    for a in source.elements() {
        for b in source.elements() {
            if phi(source.add(a, b)) != target.add(phi(a), phi(b)) {
                return Err(violation("additive", &[a, b]));
            }
            if phi(source.mul(a, b)) != target.mul(phi(a), phi(b)) {
                return Err(violation("multiplicative", &[a, b]));
            }
        }
    }
    Ok(ModuleHom { kind: HomKind::RingIso, images })
}

/// Builds `R[x; σ]/(x^n)` and `V_n(R, σ)` and the validated `φ`.
pub fn iso_phi(base: &Arc<FiniteRing>, sigma: &RingEndomorphism, n: usize) -> Result<RingIso> {
    let limits = Limits::default();
    let source = limits.build_poly_quotient(base, sigma, n)?;
    let target = limits.build_vn_sigma(base, sigma, n)?;
    let phi = phi_between(&source, &target)?;
    Ok(RingIso { source, target, phi })
}

/// Builds `M[x; σ]/M[x; σ](x^n)` and `V_n(M, σ)` and checks that the
/// coefficient map `ϕ` is additive, bijective, and satisfies
/// `ϕ(N·A) = ϕ(N)·φ(A)` for every pair.
pub fn iso_phi_module(base: &Arc<FiniteModule>, sigma: &RingEndomorphism, n: usize) -> Result<ModuleIso> {
    let ring = iso_phi(base.ring(), sigma, n)?;
    let limits = Limits::default();
    let source = poly_quotient_module_over(base, &ring.source, &limits)?;
    let target = build_vn_sigma_module_over(base, &ring.target, &limits)?;
    let images: Vec<Elem> = source.elements().map(|m| target.encode(&source.decode(m))).collect();
    if !is_bijection(&images, target.size()) {
        return Err(violation("bijective", &[]));
    }
    let phi = |m: Elem| images[m as usize];
    for m in source.elements() {
        for k in source.elements() {
            if phi(source.add(m, k)) != target.add(phi(m), phi(k)) {
                return Err(violation("additive", &[m, k]));
            }
        }
        for a in ring.source.elements() {
            if phi(source.act(m, a)) != target.act(phi(m), ring.phi.apply(a)) {
                return Err(violation("compatible with the scalar isomorphism", &[m, a]));
            }
        }
    }
    Ok(ModuleIso { source, target, ring, phi: ModuleHom { kind: HomKind::AdditiveIso, images } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::ring::build_zmod;

    #[test]
    fn phi_over_z2() {
        let z2 = build_zmod(2).unwrap();
        let id = RingEndomorphism::identity(&z2);
        let iso = iso_phi(&z2, &id, 2).unwrap();
        assert_eq!(iso.phi.kind(), HomKind::RingIso);
        assert_eq!(iso.phi.apply(iso.source.one()), iso.target.one());
        let u = iso.source.find_label("1+x").unwrap();
        let sq = iso.phi.apply(iso.source.mul(u, u));
        assert_eq!(iso.target.decode(sq), vec![1, 0]);
        let pu = iso.phi.apply(u);
        assert_eq!(iso.target.mul(pu, pu), sq);
        let m = iso_phi_module(&regular_module(&z2), &id, 2).unwrap();
        assert_eq!(m.phi.kind(), HomKind::AdditiveIso);
    }

    #[test]
    fn mismatched_parameters() {
        let z2 = build_zmod(2).unwrap();
        let id = RingEndomorphism::identity(&z2);
        let a = iso_phi(&z2, &id, 2).unwrap();
        let b = iso_phi(&z2, &id, 3).unwrap();
        assert!(phi_between(&a.source, &b.target).is_err());
        assert!(phi_between(&a.target, &a.source).is_err());
    }
}
