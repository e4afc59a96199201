//! Finite associative unital rings stored as dense Cayley tables, and the
//! ring constructions used throughout the crate: `Z/nZ`, finite products,
//! the constant-diagonal triangular rings `S_n(R)`, the banded rings `V_n(R)`
//! and `V_n(R, σ)`, and truncated skew polynomial rings `R[x; σ]/(x^n)`.
//!
//! Every element is an index into the carrier `0..size`. The zero element is
//! always index 0. Tuple-shaped constructions (products, matrix rings,
//! truncated polynomials) encode their components little-endian: the first
//! component is the least significant digit.

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::OreExtension;
use crate::quasi::{QuasiDerivation, RingEndomorphism};
use crate::Elem;

/// Largest carrier representable with [`Elem`] indices.
pub const MAX_CARRIER: usize = 1 << 16;
/// Default cap on constructed carriers. Tables are dense (`size²` entries).
pub const DEFAULT_CARRIER_CAP: usize = 4096;
/// Default cap for exhaustive `O(size³)` axiom validation.
pub const DEFAULT_VALIDATION_CAP: usize = 512;
/// Number of random triples drawn when a carrier is above the validation cap.
pub const VALIDATION_SAMPLES: u64 = 200_000;

/// Size limits applied by constructions and validators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub carrier_cap: usize,
    pub validation_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            carrier_cap: DEFAULT_CARRIER_CAP,
            validation_cap: DEFAULT_VALIDATION_CAP,
        }
    }
}

impl Limits {
    pub(crate) fn check_size(&self, size: u128) -> Result<usize> {
        let cap = self.carrier_cap.min(MAX_CARRIER);
        if size > cap as u128 {
            return Err(Error::SizeLimit { size, cap });
        }
        Ok(size as usize)
    }
}

/// How a ring was built. Kept so reports can describe shapes and so that
/// entrywise maps can decode elements into their components.
#[derive(Debug, Clone)]
pub enum Construction {
    Zmod { n: usize },
    Product { factors: Vec<Arc<FiniteRing>> },
    /// Upper triangular `n×n` matrices with constant diagonal.
    Sn { base: Arc<FiniteRing>, n: usize },
    /// Upper triangular Toeplitz matrices, i.e. `R[x]/(x^n)`.
    Vn { base: Arc<FiniteRing>, n: usize },
    /// Skew banded matrices with product `Σ a_k σ^k(b_{i-k})`.
    VnSigma { base: Arc<FiniteRing>, sigma: RingEndomorphism, n: usize },
    /// Truncated skew polynomials `R[x; σ]/(x^n)`.
    PolyQuotient { base: Arc<FiniteRing>, sigma: RingEndomorphism, n: usize },
    /// Supplied directly as tables.
    Tables,
}

impl Construction {
    /// Base ring and number of entries for the matrix-like constructions.
    pub fn matrix_base(&self) -> Option<(&Arc<FiniteRing>, usize)> {
        match self {
            Construction::Sn { base, n } => Some((base, sn_entry_count(*n))),
            Construction::Vn { base, n }
            | Construction::VnSigma { base, n, .. }
            | Construction::PolyQuotient { base, n, .. } => Some((base, *n)),
            _ => None,
        }
    }

    /// Short human-readable description, e.g. `S_4(Z_2)`.
    pub fn describe(&self) -> String {
        match self {
            Construction::Zmod { n } => format!("Z_{n}"),
            Construction::Product { factors } => factors
                .iter()
                .map(|f| f.construction.describe())
                .collect::<Vec<_>>()
                .join(" x "),
            Construction::Sn { base, n } => format!("S_{n}({})", base.construction.describe()),
            Construction::Vn { base, n } => format!("V_{n}({})", base.construction.describe()),
            Construction::VnSigma { base, n, .. } => {
                format!("V_{n}({}, sigma)", base.construction.describe())
            }
            Construction::PolyQuotient { base, n, .. } => {
                format!("{}[x;sigma]/(x^{n})", base.construction.describe())
            }
            Construction::Tables => "table ring".to_string(),
        }
    }
}

/// Number of stored entries of an `S_n` element: the diagonal plus the strict
/// upper triangle.
pub fn sn_entry_count(n: usize) -> usize {
    1 + n * (n - 1) / 2
}

/// Positions `(i, j)`, `i < j`, of the strict upper triangle in row-major
/// order. Entry `k + 1` of an `S_n` tuple sits at `positions[k]`.
pub fn sn_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// A finite associative ring with identity, stored as dense index tables.
#[derive(Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    one: Elem,
    labels: Vec<String>,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("size", &self.size)
            .field("construction", &self.construction.describe())
            .finish()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Builds a ring from raw tables without checking the ring axioms; run
    /// [`validate_ring`] on the result. Only the shape is checked here, plus
    /// the convention that the additive identity is index 0.
    pub fn from_tables(
        size: usize,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if size == 0 || size > MAX_CARRIER {
            return Err(Error::InvalidArgument(format!("carrier size {size} out of range")));
        }
        for t in [&add, &mul] {
            if t.len() != size * size {
                return Err(Error::TableLength { expected: size * size, got: t.len() });
            }
            if let Some(&bad) = t.iter().find(|&&e| e as usize >= size) {
                return Err(Error::ElementOutOfRange { index: bad as usize, size });
            }
        }
        if one as usize >= size {
            return Err(Error::ElementOutOfRange { index: one as usize, size });
        }
        if (0..size).any(|a| add[a] as usize != a) {
            return Err(Error::RingAxiom("index 0 must be the additive identity".into()));
        }
        let mut neg = vec![0; size];
        for a in 0..size {
            match (0..size).find(|&b| add[a * size + b] == 0) {
                Some(b) => neg[a] = b as Elem,
                None => {
                    return Err(Error::RingAxiom(format!("element {a} has no additive inverse")))
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == size => l,
            Some(l) => return Err(Error::TableLength { expected: size, got: l.len() }),
            None => (0..size).map(|a| a.to_string()).collect(),
        };
        Ok(FiniteRing { size, add, mul, neg, one, labels, construction: Construction::Tables })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// Row `a` of the multiplication table: `b ↦ a·b`.
    #[inline]
    pub fn mul_row(&self, a: Elem) -> &[Elem] {
        let s = a as usize * self.size;
        &self.mul[s..s + self.size]
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size).map(|a| a as Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.size).map(|a| a as Elem)
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels.iter().position(|l| *l == wanted).map(|i| i as Elem)
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.elements()
            .any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when the ring has no nonzero nilpotent element.
    pub fn is_reduced(&self) -> bool {
        self.nonzero_elements().all(|a| {
            let mut p = a;
            for _ in 0..self.size {
                p = self.mul(p, a);
                if p == 0 {
                    return false;
                }
            }
            true
        })
    }

    /// Component radices of a tuple-shaped construction.
    pub fn tuple_radix(&self) -> Option<Vec<usize>> {
        match &self.construction {
            Construction::Product { factors } => Some(factors.iter().map(|f| f.size).collect()),
            c => c.matrix_base().map(|(base, k)| vec![base.size; k]),
        }
    }

    /// Splits a tuple-shaped element into its components.
    pub fn decode(&self, a: Elem) -> Vec<Elem> {
        let radix = self.tuple_radix().expect("decode on a non-tuple ring");
        decode_digits(a as usize, &radix)
    }

    /// Inverse of [`FiniteRing::decode`].
    pub fn encode(&self, digits: &[Elem]) -> Elem {
        let radix = self.tuple_radix().expect("encode on a non-tuple ring");
        encode_digits(digits, &radix) as Elem
    }
}

pub(crate) fn decode_digits(mut a: usize, radix: &[usize]) -> Vec<Elem> {
    radix
        .iter()
        .map(|&r| {
            let d = a % r;
            a /= r;
            d as Elem
        })
        .collect()
}

pub(crate) fn encode_digits(digits: &[Elem], radix: &[usize]) -> usize {
    digits
        .iter()
        .zip(radix)
        .rev()
        .fold(0usize, |acc, (&d, &r)| acc * r + d as usize)
}

/// Checked product of radices.
pub(crate) fn carrier_size(radix: &[usize]) -> u128 {
    radix.iter().fold(1u128, |acc, &r| acc.saturating_mul(r as u128))
}

/// Addition and negation tables of a tuple construction, componentwise in
/// the given component rings.
pub(crate) fn componentwise_additive(
    size: usize,
    radix: &[usize],
    add: impl Fn(usize, Elem, Elem) -> Elem + Sync,
) -> Vec<Elem> {
    let digits: Vec<Vec<Elem>> = (0..size).map(|a| decode_digits(a, radix)).collect();
    let mut table = vec![0 as Elem; size * size];
    table.par_chunks_mut(size).enumerate().for_each(|(a, row)| {
        let mut buf = vec![0 as Elem; radix.len()];
        for (b, cell) in row.iter_mut().enumerate() {
            for k in 0..radix.len() {
                buf[k] = add(k, digits[a][k], digits[b][k]);
            }
            *cell = encode_digits(&buf, radix) as Elem;
        }
    });
    table
}

/// Builds the multiplication table of a tuple construction from a product
/// rule on decoded components.
fn tuple_mul_table(
    size: usize,
    radix: &[usize],
    mul: impl Fn(&[Elem], &[Elem], &mut [Elem]) + Sync,
) -> Vec<Elem> {
    let k = radix.len();
    let digits: Vec<Elem> = (0..size).flat_map(|a| decode_digits(a, radix)).collect();
    let mut table = vec![0 as Elem; size * size];
    table.par_chunks_mut(size).enumerate().for_each(|(a, row)| {
        let mut buf = vec![0 as Elem; k];
        let da = &digits[a * k..(a + 1) * k];
        for (b, cell) in row.iter_mut().enumerate() {
            mul(da, &digits[b * k..(b + 1) * k], &mut buf);
            *cell = encode_digits(&buf, radix) as Elem;
        }
    });
    table
}

fn neg_table(size: usize, add: &[Elem]) -> Vec<Elem> {
    (0..size)
        .map(|a| (0..size).find(|&b| add[a * size + b] == 0).unwrap_or(0) as Elem)
        .collect()
}

fn tuple_labels(size: usize, radix: &[usize], render: impl Fn(&[Elem]) -> String) -> Vec<String> {
    (0..size).map(|a| render(&decode_digits(a, radix))).collect()
}

impl Limits {
    pub fn build_zmod(&self, n: usize) -> Result<Arc<FiniteRing>> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z/nZ needs n >= 1".into()));
        }
        let n = self.check_size(n as u128)?;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as Elem;
                mul[a * n + b] = ((a * b) % n) as Elem;
            }
        }
        let neg = (0..n).map(|a| ((n - a) % n) as Elem).collect();
        Ok(Arc::new(FiniteRing {
            size: n,
            add,
            mul,
            neg,
            one: (1 % n) as Elem,
            labels: (0..n).map(|a| a.to_string()).collect(),
            construction: Construction::Zmod { n },
        }))
    }

    pub fn build_product(&self, factors: &[Arc<FiniteRing>]) -> Result<Arc<FiniteRing>> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("product of zero rings".into()));
        }
        let radix: Vec<usize> = factors.iter().map(|f| f.size).collect();
        let size = self.check_size(carrier_size(&radix))?;
        let add = componentwise_additive(size, &radix, |k, a, b| factors[k].add(a, b));
        let mul = tuple_mul_table(size, &radix, |a, b, out| {
            for k in 0..factors.len() {
                out[k] = factors[k].mul(a[k], b[k]);
            }
        });
        let one: Vec<Elem> = factors.iter().map(|f| f.one).collect();
        let labels = tuple_labels(size, &radix, |d| {
            let parts: Vec<&str> = d.iter().zip(factors).map(|(&e, f)| f.label(e)).collect();
            format!("({})", parts.join(","))
        });
        Ok(Arc::new(FiniteRing {
            size,
            neg: neg_table(size, &add),
            add,
            mul,
            one: encode_digits(&one, &radix) as Elem,
            labels,
            construction: Construction::Product { factors: factors.to_vec() },
        }))
    }

    pub fn build_sn(&self, base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
        if n < 2 {
            return Err(Error::InvalidArgument("S_n needs n >= 2".into()));
        }
        let k = sn_entry_count(n);
        let radix = vec![base.size; k];
        let size = self.check_size(carrier_size(&radix))?;
        let positions = sn_positions(n);
        let mut index = vec![vec![usize::MAX; n]; n];
        for (p, &(i, j)) in positions.iter().enumerate() {
            index[i][j] = p + 1;
        }
        let entry = |t: &[Elem], i: usize, j: usize| -> Elem {
            if i == j {
                t[0]
            } else if i < j {
                t[index[i][j]]
            } else {
                0
            }
        };
        let mul = tuple_mul_table(size, &radix, |a, b, out| {
            out[0] = base.mul(a[0], b[0]);
            for (p, &(i, j)) in positions.iter().enumerate() {
                let mut acc = 0;
                for m in i..=j {
                    acc = base.add(acc, base.mul(entry(a, i, m), entry(b, m, j)));
                }
                out[p + 1] = acc;
            }
        });
        let add = componentwise_additive(size, &radix, |_, a, b| base.add(a, b));
        let mut one = vec![0; k];
        one[0] = base.one;
        let labels = tuple_labels(size, &radix, |d| {
            let upper: Vec<&str> = d[1..].iter().map(|&e| base.label(e)).collect();
            format!("[{};{}]", base.label(d[0]), upper.join(","))
        });
        Ok(Arc::new(FiniteRing {
            size,
            neg: neg_table(size, &add),
            add,
            mul,
            one: encode_digits(&one, &radix) as Elem,
            labels,
            construction: Construction::Sn { base: base.clone(), n },
        }))
    }

    pub fn build_vn(&self, base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
        let ring = self.banded(base, None, n)?;
        Ok(Arc::new(FiniteRing { construction: Construction::Vn { base: base.clone(), n }, ..ring }))
    }

    pub fn build_vn_sigma(
        &self,
        base: &Arc<FiniteRing>,
        sigma: &RingEndomorphism,
        n: usize,
    ) -> Result<Arc<FiniteRing>> {
        if !sigma.ring().same_as(base) {
            return Err(Error::RingMismatch);
        }
        let ring = self.banded(base, Some(sigma), n)?;
        Ok(Arc::new(FiniteRing {
            construction: Construction::VnSigma { base: base.clone(), sigma: sigma.clone(), n },
            ..ring
        }))
    }

    /// Shared body of `V_n(R)` and `V_n(R, σ)`: entry `i` of a product is
    /// `Σ_{k≤i} a_k σ^k(b_{i-k})`.
    fn banded(
        &self,
        base: &Arc<FiniteRing>,
        sigma: Option<&RingEndomorphism>,
        n: usize,
    ) -> Result<FiniteRing> {
        if n < 2 {
            return Err(Error::InvalidArgument("V_n needs n >= 2".into()));
        }
        let radix = vec![base.size; n];
        let size = self.check_size(carrier_size(&radix))?;
        let powers: Vec<Vec<Elem>> = (0..n)
            .map(|k| match sigma {
                Some(s) => s.power_table(k),
                None => base.elements().collect(),
            })
            .collect();
        let mul = tuple_mul_table(size, &radix, |a, b, out| {
            for i in 0..n {
                let mut acc = 0;
                for k in 0..=i {
                    let twisted = powers[k][b[i - k] as usize];
                    acc = base.add(acc, base.mul(a[k], twisted));
                }
                out[i] = acc;
            }
        });
        let add = componentwise_additive(size, &radix, |_, a, b| base.add(a, b));
        let mut one = vec![0; n];
        one[0] = base.one;
        let labels = tuple_labels(size, &radix, |d| {
            let parts: Vec<&str> = d.iter().map(|&e| base.label(e)).collect();
            format!("[{}]", parts.join(","))
        });
        Ok(FiniteRing {
            size,
            neg: neg_table(size, &add),
            add,
            mul,
            one: encode_digits(&one, &radix) as Elem,
            labels,
            construction: Construction::Tables,
        })
    }

    /// `R[x; σ]/(x^n)`. Products are computed by skew polynomial
    /// multiplication in `R[x; σ]` followed by truncation.
    pub fn build_poly_quotient(
        &self,
        base: &Arc<FiniteRing>,
        sigma: &RingEndomorphism,
        n: usize,
    ) -> Result<Arc<FiniteRing>> {
        if n < 2 {
            return Err(Error::InvalidArgument("R[x;sigma]/(x^n) needs n >= 2".into()));
        }
        if !sigma.ring().same_as(base) {
            return Err(Error::RingMismatch);
        }
        let radix = vec![base.size; n];
        let size = self.check_size(carrier_size(&radix))?;
        let ext = OreExtension::new(Arc::new(QuasiDerivation::sigma_only(sigma.clone())));
        let mul = tuple_mul_table(size, &radix, |a, b, out| {
            let prod = ext.mul(&a.into(), &b.into());
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = prod.coeff(i);
            }
        });
        let add = componentwise_additive(size, &radix, |_, a, b| base.add(a, b));
        let mut one = vec![0; n];
        one[0] = base.one;
        let labels = tuple_labels(size, &radix, |d| poly_label(base, d));
        Ok(Arc::new(FiniteRing {
            size,
            neg: neg_table(size, &add),
            add,
            mul,
            one: encode_digits(&one, &radix) as Elem,
            labels,
            construction: Construction::PolyQuotient { base: base.clone(), sigma: sigma.clone(), n },
        }))
    }
}

/// Compact polynomial label such as `1+x^2` or `(1,0)x`.
pub(crate) fn poly_label(base: &FiniteRing, coeffs: &[Elem]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let l = base.label(c);
            match i {
                0 => l.to_string(),
                _ => {
                    let x = if i == 1 { "x".to_string() } else { format!("x^{i}") };
                    if c == base.one() { x } else { format!("{l}{x}") }
                }
            }
        })
        .collect();
    if terms.is_empty() { "0".to_string() } else { terms.join("+") }
}

impl FiniteRing {
    /// Pointer equality, falling back to table equality.
    pub fn same_as(&self, other: &FiniteRing) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

pub fn build_zmod(n: usize) -> Result<Arc<FiniteRing>> {
    Limits::default().build_zmod(n)
}

pub fn build_product(factors: &[Arc<FiniteRing>]) -> Result<Arc<FiniteRing>> {
    Limits::default().build_product(factors)
}

pub fn build_sn(base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
    Limits::default().build_sn(base, n)
}

pub fn build_vn(base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
    Limits::default().build_vn(base, n)
}

pub fn build_vn_sigma(
    base: &Arc<FiniteRing>,
    sigma: &RingEndomorphism,
    n: usize,
) -> Result<Arc<FiniteRing>> {
    Limits::default().build_vn_sigma(base, sigma, n)
}

pub fn build_poly_quotient(
    base: &Arc<FiniteRing>,
    sigma: &RingEndomorphism,
    n: usize,
) -> Result<Arc<FiniteRing>> {
    Limits::default().build_poly_quotient(base, sigma, n)
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    fn absorbs_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    fn absorbs_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }
}

/// An ideal of a finite ring, stored as a sorted member list.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: Vec<Elem>,
    side: Side,
}

impl Ideal {
    /// Checks closure and absorption on the declared side.
    pub fn from_members(ring: &Arc<FiniteRing>, members: &[Elem], side: Side) -> Result<Self> {
        let mut in_set = vec![false; ring.size()];
        for &m in members {
            if m as usize >= ring.size() {
                return Err(Error::ElementOutOfRange { index: m as usize, size: ring.size() });
            }
            in_set[m as usize] = true;
        }
        if !in_set[0] {
            return Err(Error::NotIdeal("does not contain zero".into()));
        }
        for &a in members {
            if !in_set[ring.neg(a) as usize] {
                return Err(Error::NotIdeal(format!("not closed under negation at {a}")));
            }
            for &b in members {
                if !in_set[ring.add(a, b) as usize] {
                    return Err(Error::NotIdeal(format!("not closed under addition at ({a}, {b})")));
                }
            }
            for r in ring.elements() {
                if side.absorbs_right() && !in_set[ring.mul(a, r) as usize] {
                    return Err(Error::NotIdeal(format!("{a}*{r} escapes the ideal")));
                }
                if side.absorbs_left() && !in_set[ring.mul(r, a) as usize] {
                    return Err(Error::NotIdeal(format!("{r}*{a} escapes the ideal")));
                }
            }
        }
        let members = (0..ring.size()).filter(|&e| in_set[e]).map(|e| e as Elem).collect();
        Ok(Ideal { ring: ring.clone(), members, side })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    /// `σ(I) ⊆ I` and `δ(I) ⊆ I`.
    pub fn is_stable(&self, qd: &QuasiDerivation) -> bool {
        self.members
            .iter()
            .all(|&a| self.contains(qd.sigma().apply(a)) && self.contains(qd.delta().apply(a)))
    }
}

/// Smallest ideal of the given side containing `gens`, by closure iteration.
pub fn ideal_from_generators(ring: &Arc<FiniteRing>, gens: &[Elem], side: Side) -> Result<Ideal> {
    let size = ring.size();
    let mut in_set = vec![false; size];
    let mut members: Vec<Elem> = Vec::new();
    let mut queue: Vec<Elem> = Vec::new();
    let push = |e: Elem, in_set: &mut Vec<bool>, queue: &mut Vec<Elem>| {
        if !in_set[e as usize] {
            in_set[e as usize] = true;
            queue.push(e);
        }
    };
    push(0, &mut in_set, &mut queue);
    for &g in gens {
        if g as usize >= size {
            return Err(Error::ElementOutOfRange { index: g as usize, size });
        }
        push(g, &mut in_set, &mut queue);
    }
    while let Some(a) = queue.pop() {
        members.push(a);
        push(ring.neg(a), &mut in_set, &mut queue);
        for r in ring.elements() {
            if side.absorbs_right() {
                push(ring.mul(a, r), &mut in_set, &mut queue);
            }
            if side.absorbs_left() {
                push(ring.mul(r, a), &mut in_set, &mut queue);
            }
        }
        for &b in &members {
            push(ring.add(a, b), &mut in_set, &mut queue);
        }
    }
    let members: Vec<Elem> = (0..size).filter(|&e| in_set[e]).map(|e| e as Elem).collect();
    Ok(Ideal { ring: ring.clone(), members, side })
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Outcome of [`validate_ring`] / module validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// True when every triple was checked.
    pub exhaustive: bool,
    /// Number of triples (or sampled triples) examined.
    pub checked: u64,
    pub failure: Option<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn into_result(self, wrap: impl Fn(String) -> Error) -> Result<Self> {
        match &self.failure {
            Some(f) => Err(wrap(f.to_string())),
            None => Ok(self),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub elements: Vec<Elem>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.elements)
    }
}

fn ring_triple(r: &FiniteRing, a: Elem, b: Elem, c: Elem) -> Option<AxiomFailure> {
    let fail = |axiom| Some(AxiomFailure { axiom, elements: vec![a, b, c] });
    if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) {
        return fail("additive associativity");
    }
    if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) {
        return fail("multiplicative associativity");
    }
    if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) {
        return fail("left distributivity");
    }
    if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)) {
        return fail("right distributivity");
    }
    None
}

/// Exhaustive axiom check up to the validation cap, random sampling above it.
pub fn validate_ring(r: &FiniteRing, limits: &Limits) -> ValidationReport {
    let n = r.size();
    let one = r.one();
    for a in r.elements() {
        let fail = |axiom| ValidationReport {
            exhaustive: true,
            checked: 0,
            failure: Some(AxiomFailure { axiom, elements: vec![a] }),
        };
        if r.add(a, 0) != a || r.add(0, a) != a {
            return fail("additive identity");
        }
        if r.add(a, r.neg(a)) != 0 {
            return fail("additive inverse");
        }
        if r.mul(a, one) != a || r.mul(one, a) != a {
            return fail("multiplicative identity");
        }
        for b in r.elements() {
            if r.add(a, b) != r.add(b, a) {
                return ValidationReport {
                    exhaustive: true,
                    checked: 0,
                    failure: Some(AxiomFailure {
                        axiom: "additive commutativity",
                        elements: vec![a, b],
                    }),
                };
            }
        }
    }
    if n > 1 && one == 0 {
        return ValidationReport {
            exhaustive: true,
            checked: 0,
            failure: Some(AxiomFailure { axiom: "zero differs from one", elements: vec![] }),
        };
    }
    if n <= limits.validation_cap {
        let failure = (0..n).into_par_iter().find_map_first(|a| {
            for b in r.elements() {
                for c in r.elements() {
                    if let Some(f) = ring_triple(r, a as Elem, b, c) {
                        return Some(f);
                    }
                }
            }
            None
        });
        ValidationReport { exhaustive: true, checked: (n as u64).pow(3), failure }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut failure = None;
        for _ in 0..VALIDATION_SAMPLES {
            let (a, b, c) = (
                rng.gen_range(0..n) as Elem,
                rng.gen_range(0..n) as Elem,
                rng.gen_range(0..n) as Elem,
            );
            if let Some(f) = ring_triple(r, a, b, c) {
                failure = Some(f);
                break;
            }
        }
        ValidationReport { exhaustive: false, checked: VALIDATION_SAMPLES, failure }
    }
}
