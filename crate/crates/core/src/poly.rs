//! Skew polynomials over a finite ring and skew module polynomials.
//!
//! A polynomial is a normalized, degree-ascending coefficient vector of
//! element indices; the zero polynomial is the empty vector. Polynomials are
//! plain values: the ring, module and quasi-derivation live in the context
//! objects [`OreExtension`] and [`SkewModule`].

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::quasi::QuasiDerivation;
use crate::ring::FiniteRing;
use crate::Elem;

/// Coefficient kind marker for ring polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RingCoeffs;

/// Coefficient kind marker for module polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModuleCoeffs;

/// Degree-ascending coefficients with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<K> {
    coeffs: Vec<Elem>,
    _kind: PhantomData<K>,
}

/// An element of `R[x; σ, δ]`.
pub type SkewPolynomial = Poly<RingCoeffs>;
/// An element of `M[x; σ, δ]`.
pub type ModulePolynomial = Poly<ModuleCoeffs>;

impl<K> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<K> Poly<K> {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs, _kind: PhantomData }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new(), _kind: PhantomData }
    }

    pub fn constant(c: Elem) -> Self {
        Poly::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: Elem, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Drops trailing zeros; a no-op on values built through this API.
    pub fn normalized(&self) -> Self {
        Poly::new(self.coeffs.clone())
    }

    /// Terms `(i, c_i)` with `c_i ≠ 0`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Elem)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0)
    }
}

impl<K> From<Vec<Elem>> for Poly<K> {
    fn from(v: Vec<Elem>) -> Self {
        Poly::new(v)
    }
}

impl<K> From<&[Elem]> for Poly<K> {
    fn from(v: &[Elem]) -> Self {
        Poly::new(v.to_vec())
    }
}

/// Canonical enumeration order: by degree (zero first), then
/// lexicographically from the leading coefficient down.
impl<K: Eq> Ord for Poly<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<K: Eq> PartialOrd for Poly<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn render(coeffs: &[Elem], label: impl Fn(Elem) -> String) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match i {
            0 => label(c),
            1 => format!("{}*x", label(c)),
            _ => format!("{}*x^{i}", label(c)),
        })
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn check_range(coeffs: &[Elem], size: usize) -> Result<()> {
    match coeffs.iter().find(|&&c| c as usize >= size) {
        Some(&c) => Err(Error::ElementOutOfRange { index: c as usize, size }),
        None => Ok(()),
    }
}

/// The Ore extension `R[x; σ, δ]`.
#[derive(Debug, Clone)]
pub struct OreExtension {
    qd: Arc<QuasiDerivation>,
}

impl OreExtension {
    pub fn new(qd: Arc<QuasiDerivation>) -> Self {
        OreExtension { qd }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.qd.ring()
    }

    pub fn qd(&self) -> &Arc<QuasiDerivation> {
        &self.qd
    }

    pub fn x(&self) -> SkewPolynomial {
        SkewPolynomial::monomial(self.ring().one(), 1)
    }

    pub fn x_pow(&self, k: usize) -> SkewPolynomial {
        SkewPolynomial::monomial(self.ring().one(), k)
    }

    /// Errors when a coefficient is not an element of the ring.
    pub fn check(&self, p: &SkewPolynomial) -> Result<()> {
        check_range(p.coeffs(), self.ring().size())
    }

    pub fn add(&self, p: &SkewPolynomial, q: &SkewPolynomial) -> SkewPolynomial {
        let r = self.ring();
        let n = p.coeffs.len().max(q.coeffs.len());
        SkewPolynomial::new((0..n).map(|i| r.add(p.coeff(i), q.coeff(i))).collect())
    }

    pub fn neg(&self, p: &SkewPolynomial) -> SkewPolynomial {
        SkewPolynomial::new(p.coeffs.iter().map(|&c| self.ring().neg(c)).collect())
    }

    /// The Ore product: `a x^j · b x^l = a Σ_i f_i^j(b) x^{i+l}`.
    pub fn mul(&self, p: &SkewPolynomial, q: &SkewPolynomial) -> SkewPolynomial {
        if p.is_zero() || q.is_zero() {
            return SkewPolynomial::zero();
        }
        let r = self.ring();
        let mut out = vec![0; p.coeffs.len() + q.coeffs.len() - 1];
        for (j, a) in p.terms() {
            for i in 0..=j {
                let f = self.qd.f_table(i, j);
                for (l, b) in q.terms() {
                    out[i + l] = r.add(out[i + l], r.mul(a, f[b as usize]));
                }
            }
        }
        SkewPolynomial::new(out)
    }

    /// Checked variant of [`OreExtension::mul`].
    pub fn ring_mul(&self, p: &SkewPolynomial, q: &SkewPolynomial) -> Result<SkewPolynomial> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.mul(p, q))
    }

    pub fn labels(&self, p: &SkewPolynomial) -> Vec<String> {
        p.coeffs.iter().map(|&c| self.ring().label(c).to_string()).collect()
    }

    /// Text such as `(1,1) + (1,0)*x`.
    pub fn render(&self, p: &SkewPolynomial) -> String {
        render(&p.coeffs, |c| self.ring().label(c).to_string())
    }
}

/// The right `R[x; σ, δ]`-module `M[x; σ, δ]`.
#[derive(Debug, Clone)]
pub struct SkewModule {
    module: Arc<FiniteModule>,
    ext: OreExtension,
}

impl SkewModule {
    pub fn new(module: Arc<FiniteModule>, qd: Arc<QuasiDerivation>) -> Result<Self> {
        if !module.ring().same_as(qd.ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(SkewModule { module, ext: OreExtension::new(qd) })
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.ext.ring()
    }

    pub fn qd(&self) -> &Arc<QuasiDerivation> {
        self.ext.qd()
    }

    pub fn ext(&self) -> &OreExtension {
        &self.ext
    }

    pub fn check(&self, m: &ModulePolynomial) -> Result<()> {
        check_range(m.coeffs(), self.module.size())
    }

    pub fn add(&self, m: &ModulePolynomial, n: &ModulePolynomial) -> ModulePolynomial {
        let len = m.coeffs.len().max(n.coeffs.len());
        ModulePolynomial::new((0..len).map(|i| self.module.add(m.coeff(i), n.coeff(i))).collect())
    }

    /// `(m x^j)(b x^l) = m Σ_i f_i^j(b) x^{i+l}`, extended bilinearly.
    pub fn act(&self, m: &ModulePolynomial, f: &SkewPolynomial) -> ModulePolynomial {
        if m.is_zero() || f.is_zero() {
            return ModulePolynomial::zero();
        }
        let module = &self.module;
        let mut out = vec![0; m.coeffs.len() + f.coeffs.len() - 1];
        for (j, mj) in m.terms() {
            for i in 0..=j {
                let t = self.qd().f_table(i, j);
                for (l, b) in f.terms() {
                    out[i + l] = module.add(out[i + l], module.act(mj, t[b as usize]));
                }
            }
        }
        ModulePolynomial::new(out)
    }

    /// Checked variant of [`SkewModule::act`].
    pub fn module_act(&self, m: &ModulePolynomial, f: &SkewPolynomial) -> Result<ModulePolynomial> {
        self.check(m)?;
        self.ext.check(f)?;
        Ok(self.act(m, f))
    }

    /// `m(x)·a` for a constant `a`: coefficient `ℓ` is `Σ_{i≥ℓ} m_i f_ℓ^i(a)`.
    pub fn act_const(&self, m: &ModulePolynomial, a: Elem) -> ModulePolynomial {
        let module = &self.module;
        let p = m.coeffs.len();
        let mut out = vec![0; p];
        for (l, slot) in out.iter_mut().enumerate() {
            let mut acc = 0;
            for i in l..p {
                let fa = self.qd().f_table(l, i)[a as usize];
                acc = module.add(acc, module.act(m.coeffs[i], fa));
            }
            *slot = acc;
        }
        ModulePolynomial::new(out)
    }

    pub fn labels(&self, m: &ModulePolynomial) -> Vec<String> {
        m.coeffs.iter().map(|&c| self.module.label(c).to_string()).collect()
    }

    /// Text such as `(1,0)*x`.
    pub fn render(&self, m: &ModulePolynomial) -> String {
        render(&m.coeffs, |c| self.module.label(c).to_string())
    }

    /// True when `f` annihilates every polynomial in `us`.
    pub fn annihilates_all(&self, us: &[ModulePolynomial], f: &SkewPolynomial) -> bool {
        us.iter().all(|u| self.act(u, f).is_zero())
    }

    /// Ring constants `a` with `u·a = 0` for every `u` in `us`.
    pub fn constant_annihilators(&self, us: &[ModulePolynomial]) -> Vec<Elem> {
        self.ring()
            .elements()
            .filter(|&a| us.iter().all(|u| self.act_const(u, a).is_zero()))
            .collect()
    }

    /// Compares `r(m) ∩ R` with the degree-bounded part of `r(m)`: the
    /// constants annihilating `m`, and the first nonzero `f` of degree at
    /// most `q_bound` (canonical order) with `m f = 0`.
    pub fn poly_annihilator_meets_r(&self, m: &ModulePolynomial, q_bound: usize) -> AnnihilatorMeet {
        let constants = self.constant_annihilators(std::slice::from_ref(m));
        let witness = if m.is_zero() {
            (self.ring().size() > 1).then(|| SkewPolynomial::constant(1))
        } else {
            let solver = crate::search::NullSolver::new(self, m.coeffs());
            let mut leaves = 0;
            solver.first_null_f(q_bound, &mut leaves)
        };
        AnnihilatorMeet { constants, bounded_poly_ann_nonempty: witness.is_some(), witness }
    }
}

/// Result of [`SkewModule::poly_annihilator_meets_r`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorMeet {
    pub constants: Vec<Elem>,
    pub bounded_poly_ann_nonempty: bool,
    pub witness: Option<SkewPolynomial>,
}

impl AnnihilatorMeet {
    /// Some nonzero constant annihilates.
    pub fn meets_r(&self) -> bool {
        self.constants.iter().any(|&a| a != 0)
    }
}

/// `r_R(X) = {a : X a = 0}` for a set of module elements.
pub fn right_annihilator_in_r(module: &FiniteModule, xs: &[Elem]) -> Vec<Elem> {
    module
        .ring()
        .elements()
        .filter(|&a| xs.iter().all(|&m| module.act(m, a) == 0))
        .collect()
}

/// `ℓ_R(X) = {a : a X = 0}` for a set of ring elements.
pub fn left_annihilator_in_r(ring: &FiniteRing, xs: &[Elem]) -> Vec<Elem> {
    ring.elements().filter(|&a| xs.iter().all(|&x| ring.mul(a, x) == 0)).collect()
}
