//! Exhaustive enumeration of null pairs `(m, f)`, `m(x) f(x) = 0`, within
//! degree bounds.
//!
//! Module polynomials `m` are visited in canonical order (degree first, then
//! lexicographically from the leading coefficient down). For each `m` the
//! nonzero annihilating `f` are produced in the same canonical order by a
//! top-down solver: once `b_q, …, b_l` are fixed, coefficient `l + deg m` of
//! the product is final, and it depends on `b_l` only through
//! `m_d σ^d(b_l)`. Candidates for `b_l` are therefore read off a bucket table
//! of that map instead of being scanned.
//!
//! Work is split into units `(deg m, leading coefficient of m)`. Units run in
//! parallel, and the reported witness is the one from the smallest unit, so
//! results do not depend on the worker count.

use std::borrow::Cow;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::poly::{ModulePolynomial, SkewModule, SkewPolynomial};
use crate::ring::decode_digits;
use crate::Elem;

/// Degree bounds: `p` for module polynomials, `q` for ring polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub p: usize,
    pub q: usize,
}

impl Bounds {
    pub const fn new(p: usize, q: usize) -> Self {
        Bounds { p, q }
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { p: 2, q: 2 }
    }
}

impl std::fmt::Display for Bounds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

/// The map `b ↦ m_d σ^d(b)` for a fixed leading coefficient, bucketed by
/// value.
#[derive(Debug, Clone)]
pub(crate) struct TopBuckets {
    values: Vec<Elem>,
    /// `(value, b)` sorted, so each bucket lists `b` ascending.
    sorted: Vec<(Elem, Elem)>,
    kernel_nonzero: bool,
}

impl TopBuckets {
    pub(crate) fn new(sm: &SkewModule, d: usize, lead: Elem) -> Self {
        let sigma_d = sm.qd().f_table(d, d);
        let module = sm.module();
        let values: Vec<Elem> = sm.ring().elements().map(|b| module.act(lead, sigma_d[b as usize])).collect();
        let mut sorted: Vec<(Elem, Elem)> =
            values.iter().enumerate().map(|(b, &v)| (v, b as Elem)).collect();
        sorted.sort_unstable();
        let kernel_nonzero = values.iter().skip(1).any(|&v| v == 0);
        TopBuckets { values, sorted, kernel_nonzero }
    }

    fn bucket(&self, target: Elem) -> &[(Elem, Elem)] {
        let lo = self.sorted.partition_point(|&(v, _)| v < target);
        let hi = self.sorted.partition_point(|&(v, _)| v <= target);
        &self.sorted[lo..hi]
    }
}

/// Per-`m` tables `T_i(b) = Σ_{j≥i} m_j f_i^j(b)`: the contribution of a
/// coefficient `b` at position `l` to product coefficient `l + i`.
pub(crate) struct NullSolver<'a> {
    sm: &'a SkewModule,
    d: usize,
    lower: Vec<Elem>,
    top: Cow<'a, TopBuckets>,
}

impl<'a> NullSolver<'a> {
    /// `m` must be nonzero and normalized.
    pub(crate) fn new(sm: &'a SkewModule, m: &[Elem]) -> Self {
        let d = m.len() - 1;
        let top = TopBuckets::new(sm, d, m[d]);
        Self::build(sm, m, Cow::Owned(top))
    }

    pub(crate) fn with_top(sm: &'a SkewModule, m: &[Elem], top: &'a TopBuckets) -> Self {
        Self::build(sm, m, Cow::Borrowed(top))
    }

    fn build(sm: &'a SkewModule, m: &[Elem], top: Cow<'a, TopBuckets>) -> Self {
        let d = m.len() - 1;
        let rs = sm.ring().size();
        let module = sm.module();
        let mut lower = vec![0 as Elem; d * rs];
        for i in 0..d {
            let row = &mut lower[i * rs..(i + 1) * rs];
            for (j, &mj) in m.iter().enumerate().skip(i) {
                if mj == 0 {
                    continue;
                }
                let f = sm.qd().f_table(i, j);
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = module.add(*slot, module.act(mj, f[b]));
                }
            }
        }
        NullSolver { sm, d, lower, top }
    }

    #[inline]
    fn t(&self, i: usize, b: Elem) -> Elem {
        if i == self.d {
            self.top.values[b as usize]
        } else {
            self.lower[i * self.sm.ring().size() + b as usize]
        }
    }

    /// Some nonzero constant `a` has `m(x) a = 0`.
    pub(crate) fn has_constant_annihilator(&self) -> bool {
        self.top.kernel_nonzero
            && self.sm.ring().nonzero_elements().any(|a| (0..=self.d).all(|i| self.t(i, a) == 0))
    }

    /// Visits every nonzero `f` with `deg f ≤ q_max` and `m f = 0` in
    /// canonical order until `visit` returns a value. `leaves` counts
    /// complete coefficient assignments tested.
    pub(crate) fn for_each_null_f<V>(
        &self,
        q_max: usize,
        leaves: &mut u64,
        visit: &mut impl FnMut(&[Elem]) -> Option<V>,
    ) -> Option<V> {
        if !self.top.kernel_nonzero {
            return None;
        }
        for q in 0..=q_max {
            let mut accs = vec![vec![0 as Elem; self.d + q + 1]; q + 2];
            let mut f = vec![0 as Elem; q + 1];
            if let Some(v) = self.descend(q, q, &mut accs, &mut f, leaves, visit) {
                return Some(v);
            }
        }
        None
    }

    fn descend<V>(
        &self,
        l: usize,
        q: usize,
        accs: &mut [Vec<Elem>],
        f: &mut [Elem],
        leaves: &mut u64,
        visit: &mut impl FnMut(&[Elem]) -> Option<V>,
    ) -> Option<V> {
        let module = self.sm.module();
        let d = self.d;
        let (cur, rest) = accs.split_first_mut().expect("one accumulator per level");
        let target = module.neg(cur[l + d]);
        for &(_, b) in self.top.bucket(target) {
            if l == q && b == 0 {
                continue;
            }
            let next = &mut rest[0];
            next.copy_from_slice(cur);
            for i in 0..=d {
                next[l + i] = module.add(next[l + i], self.t(i, b));
            }
            f[l] = b;
            if l == 0 {
                *leaves += 1;
                if next[..d].iter().all(|&c| c == 0) {
                    if let Some(v) = visit(f) {
                        return Some(v);
                    }
                }
            } else if let Some(v) = self.descend(l - 1, q, rest, f, leaves, visit) {
                return Some(v);
            }
        }
        None
    }

    pub(crate) fn first_null_f(&self, q_max: usize, leaves: &mut u64) -> Option<SkewPolynomial> {
        self.for_each_null_f(q_max, leaves, &mut |f: &[Elem]| Some(SkewPolynomial::from(f)))
    }
}

/// Which module polynomials take part in a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MFilter {
    /// Every nonzero `m`.
    All,
    /// Only `m` that no nonzero constant annihilates (the McCoy candidates).
    NoConstantAnnihilator,
}

/// Result of [`scan_null_pairs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome<V> {
    pub found: Option<V>,
    /// Module polynomials examined plus complete `f` assignments tested, up
    /// to and including the witness.
    pub pairs_scanned: u64,
}

struct UnitResult<V> {
    found: Option<V>,
    scanned: u64,
}

/// Calls `visit` on null pairs `(m, f)` with `m ≠ 0`, `f ≠ 0`, within
/// `bounds`, in canonical order (by `m`, then by `f`), and returns the first
/// value it produces. `jobs` sets the worker count; it never changes the
/// result.
pub fn scan_null_pairs<V, F>(
    sm: &SkewModule,
    bounds: Bounds,
    jobs: usize,
    filter: MFilter,
    visit: F,
) -> ScanOutcome<V>
where
    V: Send,
    F: Fn(&ModulePolynomial, &SkewPolynomial) -> Option<V> + Sync,
{
    let ms = sm.module().size();
    let units: Vec<(usize, Elem)> =
        (0..=bounds.p).flat_map(|d| (1..ms).map(move |u| (d, u as Elem))).collect();
    let best = AtomicUsize::new(usize::MAX);
    let run = |idx: usize| -> Option<UnitResult<V>> {
        let (d, u) = units[idx];
        scan_unit(sm, d, u, bounds.q, filter, &visit, idx, &best)
    };

    let mut results: Vec<Option<UnitResult<V>>> = Vec::with_capacity(units.len());
    if jobs <= 1 {
        for idx in 0..units.len() {
            let r = run(idx);
            let stop = matches!(&r, Some(UnitResult { found: Some(_), .. }));
            results.push(r);
            if stop {
                break;
            }
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool construction");
        results = pool.install(|| (0..units.len()).into_par_iter().map(run).collect());
    }

    let mut pairs_scanned = 0;
    let mut found = None;
    for r in results {
        let r = r.expect("units up to the witness always complete");
        pairs_scanned += r.scanned;
        if r.found.is_some() {
            found = r.found;
            break;
        }
    }
    ScanOutcome { found, pairs_scanned }
}

#[allow(clippy::too_many_arguments)]
fn scan_unit<V, F>(
    sm: &SkewModule,
    d: usize,
    lead: Elem,
    q_max: usize,
    filter: MFilter,
    visit: &F,
    idx: usize,
    best: &AtomicUsize,
) -> Option<UnitResult<V>>
where
    F: Fn(&ModulePolynomial, &SkewPolynomial) -> Option<V> + Sync,
{
    let top = TopBuckets::new(sm, d, lead);
    if !top.kernel_nonzero {
        return Some(UnitResult { found: None, scanned: 0 });
    }
    let ms = sm.module().size();
    let radix = vec![ms; d];
    let count = (ms as u64).saturating_pow(d as u32);
    let mut scanned = 0u64;
    let mut m = vec![0 as Elem; d + 1];
    m[d] = lead;
    for k in 0..count {
        if best.load(Ordering::Relaxed) < idx {
            return None;
        }
        m[..d].copy_from_slice(&decode_digits(k as usize, &radix));
        scanned += 1;
        let solver = NullSolver::with_top(sm, &m, &top);
        if filter == MFilter::NoConstantAnnihilator && solver.has_constant_annihilator() {
            continue;
        }
        let mp = ModulePolynomial::from(m.as_slice());
        let hit = solver.for_each_null_f(q_max, &mut scanned, &mut |f: &[Elem]| {
            visit(&mp, &SkewPolynomial::from(f))
        });
        if hit.is_some() {
            best.fetch_min(idx, Ordering::Relaxed);
            return Some(UnitResult { found: hit, scanned });
        }
    }
    Some(UnitResult { found: None, scanned })
}
