//! Finite right modules over a [`FiniteRing`], stored as dense tables, and
//! the module constructions: regular modules, quotients `R/I`, products,
//! submodules, `S_n(M)`, `V_n(M)`, `V_n(M, σ)` and `M[x; σ]/M[x; σ](x^n)`.

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{ModulePolynomial, SkewModule, SkewPolynomial};
use crate::quasi::QuasiDerivation;
use crate::ring::{
    carrier_size, componentwise_additive, decode_digits, encode_digits,
    sn_entry_count, sn_positions, AxiomFailure, Construction, FiniteRing, Ideal, Limits,
    ValidationReport, VALIDATION_SAMPLES,
};
use crate::Elem;

/// How a module was built.
#[derive(Debug, Clone)]
pub enum ModuleConstruction {
    Regular,
    /// `R/I`; `reps[k]` is the minimal representative of coset `k`.
    Quotient { ideal: Ideal, reps: Vec<Elem> },
    Product { parts: Vec<Arc<FiniteModule>> },
    /// `inclusion[k]` is the parent element behind index `k`.
    Submodule { parent: Arc<FiniteModule>, inclusion: Vec<Elem> },
    Sn { base: Arc<FiniteModule>, n: usize },
    Vn { base: Arc<FiniteModule>, n: usize },
    VnSigma { base: Arc<FiniteModule>, n: usize },
    PolyQuotient { base: Arc<FiniteModule>, n: usize },
    Tables,
}

impl ModuleConstruction {
    pub fn describe(&self) -> String {
        match self {
            ModuleConstruction::Regular => "regular".into(),
            ModuleConstruction::Quotient { ideal, .. } => {
                format!("quotient by an ideal of size {}", ideal.members().len())
            }
            ModuleConstruction::Product { parts } => {
                let p: Vec<String> = parts.iter().map(|m| m.construction.describe()).collect();
                format!("product({})", p.join(", "))
            }
            ModuleConstruction::Submodule { inclusion, .. } => {
                format!("submodule of size {}", inclusion.len())
            }
            ModuleConstruction::Sn { base, n } => format!("S_{n}({})", base.construction.describe()),
            ModuleConstruction::Vn { base, n } => format!("V_{n}({})", base.construction.describe()),
            ModuleConstruction::VnSigma { base, n } => {
                format!("V_{n}({}, sigma)", base.construction.describe())
            }
            ModuleConstruction::PolyQuotient { base, n } => {
                format!("{}[x;sigma]/(x^{n})", base.construction.describe())
            }
            ModuleConstruction::Tables => "table module".into(),
        }
    }
}

/// A finite right module. Index 0 is the zero element.
#[derive(Clone)]
pub struct FiniteModule {
    size: usize,
    add: Vec<Elem>,
    neg: Vec<Elem>,
    action: Vec<Elem>,
    ring: Arc<FiniteRing>,
    labels: Vec<String>,
    construction: ModuleConstruction,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("size", &self.size)
            .field("ring", &self.ring.construction().describe())
            .field("construction", &self.construction.describe())
            .finish()
    }
}

impl FiniteModule {
    /// Builds a module from raw tables without checking the axioms; run
    /// [`validate_module`] on the result.
    pub fn from_tables(
        ring: &Arc<FiniteRing>,
        size: usize,
        add: Vec<Elem>,
        action: Vec<Elem>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if size == 0 || size > crate::ring::MAX_CARRIER {
            return Err(Error::InvalidArgument(format!("carrier size {size} out of range")));
        }
        if add.len() != size * size {
            return Err(Error::TableLength { expected: size * size, got: add.len() });
        }
        if action.len() != size * ring.size() {
            return Err(Error::TableLength { expected: size * ring.size(), got: action.len() });
        }
        if let Some(&bad) = add.iter().chain(&action).find(|&&e| e as usize >= size) {
            return Err(Error::ElementOutOfRange { index: bad as usize, size });
        }
        if (0..size).any(|m| add[m] as usize != m) {
            return Err(Error::ModuleAxiom("index 0 must be the additive identity".into()));
        }
        let mut neg = vec![0; size];
        for (m, slot) in neg.iter_mut().enumerate() {
            *slot = (0..size)
                .find(|&n| add[m * size + n] == 0)
                .ok_or_else(|| Error::ModuleAxiom(format!("element {m} has no additive inverse")))?
                as Elem;
        }
        let labels = match labels {
            Some(l) if l.len() == size => l,
            Some(l) => return Err(Error::TableLength { expected: size, got: l.len() }),
            None => (0..size).map(|m| m.to_string()).collect(),
        };
        Ok(FiniteModule {
            size,
            add,
            neg,
            action,
            ring: ring.clone(),
            labels,
            construction: ModuleConstruction::Tables,
        })
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
    pub fn add(&self, m: Elem, n: Elem) -> Elem {
        self.add[m as usize * self.size + n as usize]
    }

    #[inline]
    pub fn neg(&self, m: Elem) -> Elem {
        self.neg[m as usize]
    }

    #[inline]
    pub fn sub(&self, m: Elem, n: Elem) -> Elem {
        self.add(m, self.neg(n))
    }

    /// The scalar product `m·a`.
    #[inline]
    pub fn act(&self, m: Elem, a: Elem) -> Elem {
        self.action[m as usize * self.ring.size() + a as usize]
    }

    /// `a ↦ m·a` for every ring element.
    #[inline]
    pub fn action_row(&self, m: Elem) -> &[Elem] {
        let s = m as usize * self.ring.size();
        &self.action[s..s + self.ring.size()]
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn action_table(&self) -> &[Elem] {
        &self.action
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size).map(|m| m as Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.size).map(|m| m as Elem)
    }

    pub fn label(&self, m: Elem) -> &str {
        &self.labels[m as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<Elem> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels.iter().position(|l| *l == wanted).map(|i| i as Elem)
    }

    pub fn construction(&self) -> &ModuleConstruction {
        &self.construction
    }

    /// Same ring tables and module tables.
    pub fn same_tables(&self, other: &FiniteModule) -> bool {
        self.size == other.size
            && self.ring.same_as(&other.ring)
            && self.add == other.add
            && self.action == other.action
    }

    pub fn tuple_radix(&self) -> Option<Vec<usize>> {
        match &self.construction {
            ModuleConstruction::Product { parts } => Some(parts.iter().map(|p| p.size).collect()),
            ModuleConstruction::Sn { base, n } => Some(vec![base.size; sn_entry_count(*n)]),
            ModuleConstruction::Vn { base, n }
            | ModuleConstruction::VnSigma { base, n }
            | ModuleConstruction::PolyQuotient { base, n } => Some(vec![base.size; *n]),
            _ => None,
        }
    }

    pub fn decode(&self, m: Elem) -> Vec<Elem> {
        decode_digits(m as usize, &self.tuple_radix().expect("decode on a non-tuple module"))
    }

    pub fn encode(&self, digits: &[Elem]) -> Elem {
        encode_digits(digits, &self.tuple_radix().expect("encode on a non-tuple module")) as Elem
    }

    /// For submodules: the parent element behind each index.
    pub fn inclusion(&self) -> Option<&[Elem]> {
        match &self.construction {
            ModuleConstruction::Submodule { inclusion, .. } => Some(inclusion),
            _ => None,
        }
    }
}

/// `R_R`.
pub fn regular_module(ring: &Arc<FiniteRing>) -> Arc<FiniteModule> {
    let n = ring.size();
    Arc::new(FiniteModule {
        size: n,
        add: ring.add_table().to_vec(),
        neg: ring.elements().map(|a| ring.neg(a)).collect(),
        action: ring.mul_table().to_vec(),
        ring: ring.clone(),
        labels: ring.labels().to_vec(),
        construction: ModuleConstruction::Regular,
    })
}

/// `R/I` for a right (or two-sided) ideal `I`. Cosets are indexed in order
/// of their minimal representatives.
pub fn quotient_module(ideal: &Ideal) -> Result<Arc<FiniteModule>> {
    if ideal.side() == crate::ring::Side::Left {
        return Err(Error::NotIdeal("R/I as a right module needs a right ideal".into()));
    }
    let ring = ideal.ring();
    let mut class = vec![usize::MAX; ring.size()];
    let mut reps: Vec<Elem> = Vec::new();
    for a in ring.elements() {
        if class[a as usize] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(a);
        for &i in ideal.members() {
            class[ring.add(a, i) as usize] = k;
        }
    }
    let size = reps.len();
    let mut add = vec![0; size * size];
    for (x, &ra) in reps.iter().enumerate() {
        for (y, &rb) in reps.iter().enumerate() {
            add[x * size + y] = class[ring.add(ra, rb) as usize] as Elem;
        }
    }
    let mut action = vec![0; size * ring.size()];
    for (x, &ra) in reps.iter().enumerate() {
        for r in ring.elements() {
            action[x * ring.size() + r as usize] = class[ring.mul(ra, r) as usize] as Elem;
        }
    }
    let labels = reps.iter().map(|&r| format!("{}+I", ring.label(r))).collect();
    let mut m = FiniteModule::from_tables(ring, size, add, action, Some(labels))?;
    m.construction = ModuleConstruction::Quotient { ideal: ideal.clone(), reps };
    Ok(Arc::new(m))
}

/// Componentwise module over the product ring `ring`, whose factors must be
/// the rings of `parts` in order.
pub fn product_module(parts: &[Arc<FiniteModule>], ring: &Arc<FiniteRing>) -> Result<Arc<FiniteModule>> {
    product_module_with(parts, ring, &Limits::default())
}

pub fn product_module_with(
    parts: &[Arc<FiniteModule>],
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("product of zero modules".into()));
    }
    match ring.construction() {
        Construction::Product { factors }
            if factors.len() == parts.len()
                && factors.iter().zip(parts).all(|(f, p)| f.same_as(&p.ring)) => {}
        _ => {
            return Err(Error::ConstructionMismatch(
                "product module needs the product of the part rings".into(),
            ))
        }
    }
    let radix: Vec<usize> = parts.iter().map(|p| p.size).collect();
    let size = limits.check_size(carrier_size(&radix))?;
    let add = componentwise_additive(size, &radix, |k, a, b| parts[k].add(a, b));
    let ring_radix = ring.tuple_radix().expect("product ring is tuple shaped");
    let action = tuple_action(size, &radix, ring, &ring_radix, |m, a, out| {
        for k in 0..parts.len() {
            out[k] = parts[k].act(m[k], a[k]);
        }
    });
    let labels = tuple_labels(size, &radix, |d| {
        let p: Vec<&str> = d.iter().zip(parts).map(|(&e, m)| m.label(e)).collect();
        format!("({})", p.join(","))
    });
    finish_tuple(ring, size, add, action, labels, ModuleConstruction::Product { parts: parts.to_vec() })
}

/// Smallest submodule containing `gens`, with its inclusion into `parent`.
pub fn submodule(parent: &Arc<FiniteModule>, gens: &[Elem]) -> Result<Arc<FiniteModule>> {
    let size = parent.size();
    let mut in_set = vec![false; size];
    let mut queue: Vec<Elem> = vec![0];
    in_set[0] = true;
    for &g in gens {
        if g as usize >= size {
            return Err(Error::ElementOutOfRange { index: g as usize, size });
        }
        if !in_set[g as usize] {
            in_set[g as usize] = true;
            queue.push(g);
        }
    }
    let mut members: Vec<Elem> = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let m = queue[head];
        head += 1;
        members.push(m);
        let mut fresh: Vec<Elem> = parent.action_row(m).to_vec();
        fresh.push(parent.neg(m));
        fresh.extend(members.iter().map(|&n| parent.add(m, n)));
        for e in fresh {
            if !in_set[e as usize] {
                in_set[e as usize] = true;
                queue.push(e);
            }
        }
    }
    let inclusion: Vec<Elem> = parent.elements().filter(|&m| in_set[m as usize]).collect();
    let mut index = vec![0 as Elem; size];
    for (k, &m) in inclusion.iter().enumerate() {
        index[m as usize] = k as Elem;
    }
    let s = inclusion.len();
    let rs = parent.ring.size();
    let mut add = vec![0; s * s];
    let mut action = vec![0; s * rs];
    for (x, &m) in inclusion.iter().enumerate() {
        for (y, &n) in inclusion.iter().enumerate() {
            add[x * s + y] = index[parent.add(m, n) as usize];
        }
        for r in parent.ring.elements() {
            action[x * rs + r as usize] = index[parent.act(m, r) as usize];
        }
    }
    let labels = inclusion.iter().map(|&m| parent.label(m).to_string()).collect();
    let mut module = FiniteModule::from_tables(&parent.ring, s, add, action, Some(labels))?;
    module.construction = ModuleConstruction::Submodule { parent: parent.clone(), inclusion };
    Ok(Arc::new(module))
}

fn tuple_labels(size: usize, radix: &[usize], render: impl Fn(&[Elem]) -> String) -> Vec<String> {
    (0..size).map(|m| render(&decode_digits(m, radix))).collect()
}

/// Action table of a tuple module over a tuple ring from a rule on decoded
/// components.
fn tuple_action(
    size: usize,
    radix: &[usize],
    ring: &FiniteRing,
    ring_radix: &[usize],
    act: impl Fn(&[Elem], &[Elem], &mut [Elem]) + Sync,
) -> Vec<Elem> {
    let rs = ring.size();
    let rk = ring_radix.len();
    let ring_digits: Vec<Elem> = (0..rs).flat_map(|a| decode_digits(a, ring_radix)).collect();
    let mut table = vec![0 as Elem; size * rs];
    table.par_chunks_mut(rs).enumerate().for_each(|(m, row)| {
        let dm = decode_digits(m, radix);
        let mut buf = vec![0 as Elem; radix.len()];
        for (a, cell) in row.iter_mut().enumerate() {
            act(&dm, &ring_digits[a * rk..(a + 1) * rk], &mut buf);
            *cell = encode_digits(&buf, radix) as Elem;
        }
    });
    table
}

fn finish_tuple(
    ring: &Arc<FiniteRing>,
    size: usize,
    add: Vec<Elem>,
    action: Vec<Elem>,
    labels: Vec<String>,
    construction: ModuleConstruction,
) -> Result<Arc<FiniteModule>> {
    let mut m = FiniteModule::from_tables(ring, size, add, action, Some(labels))?;
    m.construction = construction;
    Ok(Arc::new(m))
}

fn matrix_shape<'a>(
    module: &FiniteModule,
    ring: &'a Arc<FiniteRing>,
    want: &str,
) -> Result<(&'a Arc<FiniteRing>, usize)> {
    let (base, n) = match (want, ring.construction()) {
        ("sn", Construction::Sn { base, n })
        | ("vn", Construction::Vn { base, n })
        | ("vn_sigma", Construction::VnSigma { base, n, .. })
        | ("poly_quotient", Construction::PolyQuotient { base, n, .. }) => (base, *n),
        (_, other) => {
            return Err(Error::ConstructionMismatch(format!(
                "{want} module needs a matching ring, got {}",
                other.describe()
            )))
        }
    };
    if !base.same_as(&module.ring) {
        return Err(Error::RingMismatch);
    }
    Ok((base, n))
}

/// `S_n(M)` as a right module over the given `S_n(R)`.
pub fn build_sn_module_over(
    base: &Arc<FiniteModule>,
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    let (r, n) = matrix_shape(base, ring, "sn")?;
    let k = sn_entry_count(n);
    let radix = vec![base.size; k];
    let size = limits.check_size(carrier_size(&radix))?;
    let positions = sn_positions(n);
    let mut index = vec![vec![usize::MAX; n]; n];
    for (p, &(i, j)) in positions.iter().enumerate() {
        index[i][j] = p + 1;
    }
    let entry = |t: &[Elem], i: usize, j: usize| -> Elem {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => t[0],
            std::cmp::Ordering::Less => t[index[i][j]],
            std::cmp::Ordering::Greater => 0,
        }
    };
    let add = componentwise_additive(size, &radix, |_, a, b| base.add(a, b));
    let action = tuple_action(size, &radix, ring, &vec![r.size(); k], |m, a, out| {
        out[0] = base.act(m[0], a[0]);
        for (p, &(i, j)) in positions.iter().enumerate() {
            let mut acc = 0;
            for t in i..=j {
                acc = base.add(acc, base.act(entry(m, i, t), entry(a, t, j)));
            }
            out[p + 1] = acc;
        }
    });
    let labels = tuple_labels(size, &radix, |d| {
        let upper: Vec<&str> = d[1..].iter().map(|&e| base.label(e)).collect();
        format!("[{};{}]", base.label(d[0]), upper.join(","))
    });
    finish_tuple(ring, size, add, action, labels, ModuleConstruction::Sn { base: base.clone(), n })
}

/// `V_n(M)` over the given `V_n(R)`, or `V_n(M, σ)` over `V_n(R, σ)`:
/// entry `i` of `(m_k)·(a_k)` is `Σ_{k≤i} m_k σ^k(a_{i-k})`.
fn banded_module(
    base: &Arc<FiniteModule>,
    ring: &Arc<FiniteRing>,
    limits: &Limits,
    twisted: bool,
) -> Result<Arc<FiniteModule>> {
    let (r, n) = matrix_shape(base, ring, if twisted { "vn_sigma" } else { "vn" })?;
    let radix = vec![base.size; n];
    let size = limits.check_size(carrier_size(&radix))?;
    let powers: Vec<Vec<Elem>> = (0..n)
        .map(|k| match ring.construction() {
            Construction::VnSigma { sigma, .. } => sigma.power_table(k),
            _ => r.elements().collect(),
        })
        .collect();
    let add = componentwise_additive(size, &radix, |_, a, b| base.add(a, b));
    let action = tuple_action(size, &radix, ring, &vec![r.size(); n], |m, a, out| {
        for i in 0..n {
            let mut acc = 0;
            for k in 0..=i {
                acc = base.add(acc, base.act(m[k], powers[k][a[i - k] as usize]));
            }
            out[i] = acc;
        }
    });
    let labels = tuple_labels(size, &radix, |d| {
        let p: Vec<&str> = d.iter().map(|&e| base.label(e)).collect();
        format!("[{}]", p.join(","))
    });
    let construction = if twisted {
        ModuleConstruction::VnSigma { base: base.clone(), n }
    } else {
        ModuleConstruction::Vn { base: base.clone(), n }
    };
    finish_tuple(ring, size, add, action, labels, construction)
}

pub fn build_vn_module_over(
    base: &Arc<FiniteModule>,
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    banded_module(base, ring, limits, false)
}

pub fn build_vn_sigma_module_over(
    base: &Arc<FiniteModule>,
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    banded_module(base, ring, limits, true)
}

/// `M[x; σ]/M[x; σ](x^n)` over `R[x; σ]/(x^n)`, with the action computed by
/// skew polynomial module multiplication followed by truncation.
pub fn poly_quotient_module_over(
    base: &Arc<FiniteModule>,
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    let (r, n) = matrix_shape(base, ring, "poly_quotient")?;
    let sigma = match ring.construction() {
        Construction::PolyQuotient { sigma, .. } => sigma.clone(),
        _ => unreachable!("checked by matrix_shape"),
    };
    let radix = vec![base.size; n];
    let size = limits.check_size(carrier_size(&radix))?;
    let qd = Arc::new(QuasiDerivation::sigma_only(sigma));
    let sm = SkewModule::new(base.clone(), qd)?;
    let add = componentwise_additive(size, &radix, |_, a, b| base.add(a, b));
    let action = tuple_action(size, &radix, ring, &vec![r.size(); n], |m, a, out| {
        let prod = sm.act(&ModulePolynomial::from(m), &SkewPolynomial::from(a));
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = prod.coeff(i);
        }
    });
    let labels = tuple_labels(size, &radix, |d| poly_module_label(base, d));
    finish_tuple(ring, size, add, action, labels, ModuleConstruction::PolyQuotient { base: base.clone(), n })
}

fn poly_module_label(base: &FiniteModule, coeffs: &[Elem]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match i {
            0 => base.label(c).to_string(),
            1 => format!("{}x", base.label(c)),
            _ => format!("{}x^{i}", base.label(c)),
        })
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join("+") }
}

macro_rules! default_builder {
    ($name:ident, $over:ident, $ring:ident $(, $extra:ident : $ty:ty)*) => {
        /// Builds the matching ring with default limits, then the module over it.
        pub fn $name(base: &Arc<FiniteModule> $(, $extra: $ty)*, n: usize) -> Result<Arc<FiniteModule>> {
            let limits = Limits::default();
            let ring = limits.$ring(base.ring() $(, $extra)*, n)?;
            $over(base, &ring, &limits)
        }
    };
}

default_builder!(build_sn_module, build_sn_module_over, build_sn);
default_builder!(build_vn_module, build_vn_module_over, build_vn);
default_builder!(
    build_vn_sigma_module,
    build_vn_sigma_module_over,
    build_vn_sigma,
    sigma: &crate::quasi::RingEndomorphism
);
default_builder!(
    poly_quotient_module,
    poly_quotient_module_over,
    build_poly_quotient,
    sigma: &crate::quasi::RingEndomorphism
);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

fn module_triple(m: &FiniteModule, x: Elem, y: Elem, a: Elem, b: Elem) -> Option<AxiomFailure> {
    let r = &m.ring;
    let fail = |axiom| Some(AxiomFailure { axiom, elements: vec![x, y, a, b] });
    if m.act(m.act(x, a), b) != m.act(x, r.mul(a, b)) {
        return fail("(m a) b = m (a b)");
    }
    if m.act(m.add(x, y), a) != m.add(m.act(x, a), m.act(y, a)) {
        return fail("(m + n) a = m a + n a");
    }
    if m.act(x, r.add(a, b)) != m.add(m.act(x, a), m.act(x, b)) {
        return fail("m (a + b) = m a + m b");
    }
    None
}

/// Checks the right-module axioms: exhaustively over `M × M × R × R` style
/// quadruples up to the validation cap (measured as `max(|M|, |R|)`),
/// by sampling above it.
pub fn validate_module(m: &FiniteModule, limits: &Limits) -> ValidationReport {
    let r = &m.ring;
    let one = r.one();
    for x in m.elements() {
        let fail = |axiom, elements| ValidationReport {
            exhaustive: true,
            checked: 0,
            failure: Some(AxiomFailure { axiom, elements }),
        };
        if m.add(x, 0) != x || m.add(0, x) != x {
            return fail("additive identity", vec![x]);
        }
        if m.add(x, m.neg(x)) != 0 {
            return fail("additive inverse", vec![x]);
        }
        if m.act(x, one) != x {
            return fail("m 1 = m", vec![x]);
        }
        if m.act(x, 0) != 0 {
            return fail("m 0 = 0", vec![x]);
        }
        for y in m.elements() {
            if m.add(x, y) != m.add(y, x) {
                return fail("additive commutativity", vec![x, y]);
            }
        }
    }
    let big = m.size().max(r.size());
    // Each axiom has three free variables; quadruples would be wasted work.
    if big <= limits.validation_cap {
        let failure = (0..m.size()).into_par_iter().find_map_first(|x| {
            let x = x as Elem;
            for y in m.elements() {
                for z in m.elements() {
                    if m.add(m.add(x, y), z) != m.add(x, m.add(y, z)) {
                        return Some(AxiomFailure {
                            axiom: "additive associativity",
                            elements: vec![x, y, z],
                        });
                    }
                }
                for a in r.elements() {
                    if let Some(f) = module_triple(m, x, y, a, a) {
                        return Some(f);
                    }
                }
            }
            for a in r.elements() {
                for b in r.elements() {
                    if let Some(f) = module_triple(m, x, 0, a, b) {
                        return Some(f);
                    }
                }
            }
            None
        });
        let (ms, rs) = (m.size() as u64, r.size() as u64);
        let checked = ms * (ms * ms + ms * rs + rs * rs);
        ValidationReport { exhaustive: true, checked, failure }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut failure = None;
        for _ in 0..VALIDATION_SAMPLES {
            let x = rng.gen_range(0..m.size()) as Elem;
            let y = rng.gen_range(0..m.size()) as Elem;
            let a = rng.gen_range(0..r.size()) as Elem;
            let b = rng.gen_range(0..r.size()) as Elem;
            if let Some(f) = module_triple(m, x, y, a, b) {
                failure = Some(f);
                break;
            }
        }
        ValidationReport { exhaustive: false, checked: VALIDATION_SAMPLES, failure }
    }
}
