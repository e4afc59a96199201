//! Endomorphisms σ, σ-derivations δ, and the operators `f_i^j`.
//!
//! `f_i^j` is the sum of all words in σ and δ with `i` letters σ and `j - i`
//! letters δ, so that `x^j a = Σ_i f_i^j(a) x^i` in `R[x; σ, δ]`. It is
//! computed through `f_i^{j+1} = σ∘f_{i-1}^j + δ∘f_i^j`, `f_0^0 = id`.

use std::sync::{Arc, RwLock};

use crate::error::{Error, MapViolation, Result};
use crate::ring::{Construction, FiniteRing};
use crate::Elem;

/// A validated unital ring endomorphism, stored as an image table.
#[derive(Debug, Clone)]
pub struct RingEndomorphism {
    ring: Arc<FiniteRing>,
    images: Arc<[Elem]>,
}

fn check_table(ring: &FiniteRing, table: &[Elem]) -> Result<(), MapViolation> {
    if table.len() != ring.size() {
        return Err(MapViolation::OutOfRange { image: table.len() });
    }
    match table.iter().find(|&&e| e as usize >= ring.size()) {
        Some(&bad) => Err(MapViolation::OutOfRange { image: bad as usize }),
        None => Ok(()),
    }
}

fn check_additive(ring: &FiniteRing, t: &[Elem]) -> Result<(), MapViolation> {
    for a in ring.elements() {
        for b in ring.elements() {
            if t[ring.add(a, b) as usize] != ring.add(t[a as usize], t[b as usize]) {
                return Err(MapViolation::Additive { a, b });
            }
        }
    }
    Ok(())
}

/// Checks that `table` is a unital ring endomorphism of `ring`.
pub fn validate_endomorphism(ring: &Arc<FiniteRing>, table: &[Elem]) -> Result<RingEndomorphism> {
    check_table(ring, table).map_err(Error::NotEndomorphism)?;
    check_additive(ring, table).map_err(Error::NotEndomorphism)?;
    for a in ring.elements() {
        for b in ring.elements() {
            if table[ring.mul(a, b) as usize] != ring.mul(table[a as usize], table[b as usize]) {
                return Err(Error::NotEndomorphism(MapViolation::Multiplicative { a, b }));
            }
        }
    }
    if table[ring.one() as usize] != ring.one() {
        return Err(Error::NotEndomorphism(MapViolation::Unital));
    }
    Ok(RingEndomorphism { ring: ring.clone(), images: table.into() })
}

impl RingEndomorphism {
    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        RingEndomorphism { ring: ring.clone(), images: ring.elements().collect() }
    }

    pub fn validate(ring: &Arc<FiniteRing>, table: &[Elem]) -> Result<Self> {
        validate_endomorphism(ring, table)
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.images[a as usize]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &s)| a == s as usize)
    }

    /// Image table of `σ^k`.
    pub fn power_table(&self, k: usize) -> Vec<Elem> {
        let mut t: Vec<Elem> = self.ring.elements().collect();
        for _ in 0..k {
            for e in t.iter_mut() {
                *e = self.apply(*e);
            }
        }
        t
    }
}

/// A validated σ-derivation: additive with `δ(ab) = σ(a)δ(b) + δ(a)b`.
#[derive(Debug, Clone)]
pub struct SigmaDerivation {
    sigma: RingEndomorphism,
    images: Arc<[Elem]>,
}

pub fn validate_sigma_derivation(
    ring: &Arc<FiniteRing>,
    sigma: &RingEndomorphism,
    table: &[Elem],
) -> Result<SigmaDerivation> {
    if !sigma.ring().same_as(ring) {
        return Err(Error::RingMismatch);
    }
    check_table(ring, table).map_err(Error::NotDerivation)?;
    check_additive(ring, table).map_err(Error::NotDerivation)?;
    for a in ring.elements() {
        for b in ring.elements() {
            let lhs = table[ring.mul(a, b) as usize];
            let rhs = ring.add(
                ring.mul(sigma.apply(a), table[b as usize]),
                ring.mul(table[a as usize], b),
            );
            if lhs != rhs {
                return Err(Error::NotDerivation(MapViolation::Leibniz { a, b }));
            }
        }
    }
    Ok(SigmaDerivation { sigma: sigma.clone(), images: table.into() })
}

/// The inner σ-derivation `δ(a) = c·a − σ(a)·c`.
pub fn inner_sigma_derivation(sigma: &RingEndomorphism, c: Elem) -> Result<SigmaDerivation> {
    let ring = sigma.ring();
    if c as usize >= ring.size() {
        return Err(Error::ElementOutOfRange { index: c as usize, size: ring.size() });
    }
    let table: Vec<Elem> = ring
        .elements()
        .map(|a| ring.sub(ring.mul(c, a), ring.mul(sigma.apply(a), c)))
        .collect();
    validate_sigma_derivation(ring, sigma, &table)
}

impl SigmaDerivation {
    pub fn zero(sigma: &RingEndomorphism) -> Self {
        SigmaDerivation { sigma: sigma.clone(), images: vec![0; sigma.ring().size()].into() }
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.images[a as usize]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn sigma(&self) -> &RingEndomorphism {
        &self.sigma
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&e| e == 0)
    }
}

/// A quasi-derivation `(σ, δ)` together with a fill-once cache of the
/// `f_i^j` image tables.
#[derive(Debug)]
pub struct QuasiDerivation {
    sigma: RingEndomorphism,
    delta: SigmaDerivation,
    /// `rows[j][i]` is the table of `f_i^j`.
    rows: RwLock<Vec<Vec<Arc<[Elem]>>>>,
}

impl Clone for QuasiDerivation {
    fn clone(&self) -> Self {
        QuasiDerivation::from_parts(self.sigma.clone(), self.delta.clone())
    }
}

impl QuasiDerivation {
    /// Pairs a validated σ with a δ validated against the same σ.
    pub fn new(sigma: RingEndomorphism, delta: SigmaDerivation) -> Result<Self> {
        if !delta.sigma().ring().same_as(sigma.ring()) || delta.sigma().images() != sigma.images()
        {
            return Err(Error::RingMismatch);
        }
        Ok(QuasiDerivation::from_parts(sigma, delta))
    }

    fn from_parts(sigma: RingEndomorphism, delta: SigmaDerivation) -> Self {
        let identity: Arc<[Elem]> = sigma.ring().elements().collect();
        QuasiDerivation { sigma, delta, rows: RwLock::new(vec![vec![identity]]) }
    }

    /// `(σ, 0)`.
    pub fn sigma_only(sigma: RingEndomorphism) -> Self {
        let delta = SigmaDerivation::zero(&sigma);
        QuasiDerivation::from_parts(sigma, delta)
    }

    /// `(id, 0)`, under which skew notions reduce to the classical ones.
    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        QuasiDerivation::sigma_only(RingEndomorphism::identity(ring))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.sigma.ring()
    }

    pub fn sigma(&self) -> &RingEndomorphism {
        &self.sigma
    }

    pub fn delta(&self) -> &SigmaDerivation {
        &self.delta
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.delta.is_zero()
    }

    /// Image table of `f_i^j`; the zero table when `i > j`.
    pub fn f_table(&self, i: usize, j: usize) -> Arc<[Elem]> {
        if i > j {
            return vec![0; self.ring().size()].into();
        }
        {
            let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
            if let Some(row) = rows.get(j) {
                return row[i].clone();
            }
        }
        let mut rows = self.rows.write().unwrap_or_else(|e| e.into_inner());
        while rows.len() <= j {
            let next = self.next_row(rows.last().expect("row 0 is always present"));
            rows.push(next);
        }
        rows[j][i].clone()
    }

    fn next_row(&self, prev: &[Arc<[Elem]>]) -> Vec<Arc<[Elem]>> {
        let ring = self.ring();
        let j = prev.len() - 1;
        (0..=j + 1)
            .map(|i| {
                ring.elements()
                    .map(|a| {
                        let via_sigma = if i >= 1 { self.sigma.apply(prev[i - 1][a as usize]) } else { 0 };
                        let via_delta = if i <= j { self.delta.apply(prev[i][a as usize]) } else { 0 };
                        ring.add(via_sigma, via_delta)
                    })
                    .collect()
            })
            .collect()
    }

    /// `f_i^j(a)`; rejects `i > j`.
    pub fn f_op(&self, i: usize, j: usize, a: Elem) -> Result<Elem> {
        if i > j {
            return Err(Error::InvalidArgument(format!("f_{i}^{j} needs i <= j")));
        }
        if a as usize >= self.ring().size() {
            return Err(Error::ElementOutOfRange { index: a as usize, size: self.ring().size() });
        }
        Ok(self.f_table(i, j)[a as usize])
    }

    /// Drops every memoized table except `f_0^0`.
    pub fn clear_cache(&self) {
        let mut rows = self.rows.write().unwrap_or_else(|e| e.into_inner());
        rows.truncate(1);
    }

    /// Number of `j` rows currently memoized.
    pub fn cached_rows(&self) -> usize {
        self.rows.read().unwrap_or_else(|e| e.into_inner()).len()
    }
}

/// Lifts `(σ, δ)` entrywise to a matrix ring built over the same base
/// (`S_n`, `V_n`, `V_n(·, σ)`) and validates the result.
pub fn lift_entrywise(qd: &QuasiDerivation, matrix_ring: &Arc<FiniteRing>) -> Result<QuasiDerivation> {
    let base = match matrix_ring.construction() {
        Construction::Sn { base, .. }
        | Construction::Vn { base, .. }
        | Construction::VnSigma { base, .. } => base,
        other => {
            return Err(Error::ConstructionMismatch(format!(
                "entrywise lift needs a matrix ring, got {}",
                other.describe()
            )))
        }
    };
    if !base.same_as(qd.ring()) {
        return Err(Error::RingMismatch);
    }
    let lift = |f: &dyn Fn(Elem) -> Elem| -> Vec<Elem> {
        matrix_ring
            .elements()
            .map(|a| {
                let d: Vec<Elem> = matrix_ring.decode(a).into_iter().map(f).collect();
                matrix_ring.encode(&d)
            })
            .collect()
    };
    let sigma_bar = validate_endomorphism(matrix_ring, &lift(&|e| qd.sigma().apply(e)))?;
    let delta_bar = if qd.delta().is_zero() {
        SigmaDerivation::zero(&sigma_bar)
    } else {
        validate_sigma_derivation(matrix_ring, &sigma_bar, &lift(&|e| qd.delta().apply(e)))?
    };
    QuasiDerivation::new(sigma_bar, delta_bar)
}

/// Componentwise `(σ, δ)` on a product ring whose factors are the rings of
/// `parts`, in order.
pub fn product_quasi_derivation(parts: &[&QuasiDerivation], ring: &Arc<FiniteRing>) -> Result<QuasiDerivation> {
    match ring.construction() {
        Construction::Product { factors }
            if factors.len() == parts.len()
                && factors.iter().zip(parts).all(|(f, q)| f.same_as(q.ring())) => {}
        _ => {
            return Err(Error::ConstructionMismatch(
                "product quasi-derivation needs the product of the part rings".into(),
            ))
        }
    }
    let lift = |f: &dyn Fn(usize, Elem) -> Elem| -> Vec<Elem> {
        ring.elements()
            .map(|a| {
                let d: Vec<Elem> = ring.decode(a).into_iter().enumerate().map(|(k, e)| f(k, e)).collect();
                ring.encode(&d)
            })
            .collect()
    };
    let sigma = validate_endomorphism(ring, &lift(&|k, e| parts[k].sigma().apply(e)))?;
    let delta = if parts.iter().all(|q| q.delta().is_zero()) {
        SigmaDerivation::zero(&sigma)
    } else {
        validate_sigma_derivation(ring, &sigma, &lift(&|k, e| parts[k].delta().apply(e)))?
    };
    QuasiDerivation::new(sigma, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_product, build_sn, build_vn_sigma, build_zmod};

    fn exp25() -> QuasiDerivation {
        let z2 = build_zmod(2).unwrap();
        let r = build_product(&[z2.clone(), z2]).unwrap();
        let swap: Vec<Elem> =
            r.elements().map(|a| { let d = r.decode(a); r.encode(&[d[1], d[0]]) }).collect();
        let sigma = validate_endomorphism(&r, &swap).unwrap();
        let delta = inner_sigma_derivation(&sigma, r.one()).unwrap();
        QuasiDerivation::new(sigma, delta).unwrap()
    }

    #[test]
    fn swap_and_inner_derivation() {
        let qd = exp25();
        let r = qd.ring().clone();
        let e10 = r.find_label("(1,0)").unwrap();
        assert_eq!(r.label(qd.delta().apply(e10)), "(1,1)");
        assert_eq!(qd.f_op(1, 2, e10).unwrap(), 0);
        assert_eq!(qd.f_op(1, 1, e10).unwrap(), qd.sigma().apply(e10));
        assert_eq!(qd.f_op(0, 1, e10).unwrap(), qd.delta().apply(e10));
        assert!(qd.f_op(2, 1, e10).is_err());
    }

    #[test]
    fn inner_with_trivial_parameters_is_zero() {
        let r = build_zmod(4).unwrap();
        let id = RingEndomorphism::identity(&r);
        assert!(inner_sigma_derivation(&id, 0).unwrap().is_zero());
        assert!(inner_sigma_derivation(&id, 1).unwrap().is_zero());
    }

    #[test]
    fn rejects_bad_maps() {
        let z2 = build_zmod(2).unwrap();
        let id = RingEndomorphism::identity(&z2);
        let err = validate_sigma_derivation(&z2, &id, &[0, 1]).unwrap_err();
        assert!(matches!(err, Error::NotDerivation(MapViolation::Leibniz { a: 1, b: 1 })));
        assert!(matches!(
            validate_endomorphism(&z2, &[0, 0]),
            Err(Error::NotEndomorphism(MapViolation::Unital))
        ));
        let z4 = build_zmod(4).unwrap();
        // a ↦ 2a is additive but not multiplicative
        assert!(matches!(
            validate_endomorphism(&z4, &[0, 2, 0, 2]),
            Err(Error::NotEndomorphism(MapViolation::Multiplicative { .. }))
        ));
        assert!(matches!(
            validate_endomorphism(&z4, &[0, 1, 2]),
            Err(Error::NotEndomorphism(MapViolation::OutOfRange { .. }))
        ));
    }

    #[test]
    fn diagonal_operators_are_powers() {
        let qd = exp25();
        let r = qd.ring();
        for j in 0..=4 {
            let sj = qd.sigma().power_table(j);
            for a in r.elements() {
                let mut d = a;
                for _ in 0..j {
                    d = qd.delta().apply(d);
                }
                assert_eq!(qd.f_op(j, j, a).unwrap(), sj[a as usize]);
                assert_eq!(qd.f_op(0, j, a).unwrap(), d);
            }
        }
    }

    #[test]
    fn cache_clearing_is_invisible() {
        let qd = exp25();
        let before: Vec<Vec<Elem>> = (0..=4).map(|i| qd.f_table(i, 4).to_vec()).collect();
        qd.clear_cache();
        assert_eq!(qd.cached_rows(), 1);
        let after: Vec<Vec<Elem>> = (0..=4).map(|i| qd.f_table(i, 4).to_vec()).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn lifts_validate() {
        let qd = exp25();
        let s2 = build_sn(qd.ring(), 2).unwrap();
        let lifted = lift_entrywise(&qd, &s2).unwrap();
        assert_eq!(lifted.ring().size(), 16);
        let id = QuasiDerivation::identity(qd.ring());
        assert!(lift_entrywise(&id, &s2).unwrap().is_identity());
        let sigma_only = QuasiDerivation::sigma_only(qd.sigma().clone());
        let v2 = build_vn_sigma(qd.ring(), qd.sigma(), 2).unwrap();
        let lifted = lift_entrywise(&sigma_only, &v2).unwrap();
        for a in v2.elements() {
            let d = v2.decode(a);
            let img = v2.decode(lifted.sigma().apply(a));
            assert_eq!(img, d.iter().map(|&e| qd.sigma().apply(e)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn product_quasi_derivation_acts_componentwise() {
        let qd = exp25();
        let z2 = build_zmod(2).unwrap();
        let plain = QuasiDerivation::identity(&z2);
        let ring = build_product(&[qd.ring().clone(), z2.clone()]).unwrap();
        let prod = product_quasi_derivation(&[&qd, &plain], &ring).unwrap();
        for a in ring.elements() {
            let d = ring.decode(a);
            let s = ring.decode(prod.sigma().apply(a));
            let t = ring.decode(prod.delta().apply(a));
            assert_eq!(s, vec![qd.sigma().apply(d[0]), d[1]]);
            assert_eq!(t, vec![qd.delta().apply(d[0]), 0]);
        }
        assert!(product_quasi_derivation(&[&qd], &ring).is_err());
    }
}
