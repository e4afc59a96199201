//! Degree-bounded checks over null pairs `m(x) f(x) = 0`.
//!
//! All of these delegate enumeration to [`scan_null_pairs`], so the witness
//! is the first violating pair in canonical order regardless of `jobs`.

use crate::poly::{ModulePolynomial, SkewPolynomial};
use crate::search::{scan_null_pairs, Bounds, MFilter, NullSolver};
use crate::Elem;

use super::instance::Instance;
use super::report::{PropertyReport, Witness};
use super::Stopwatch;

fn scan<F>(inst: &Instance, property: &str, bounds: Bounds, jobs: usize, filter: MFilter, visit: F) -> PropertyReport
where
    F: Fn(&ModulePolynomial, &SkewPolynomial) -> Option<Witness> + Sync,
{
    let sw = Stopwatch::start(property, inst, Some(bounds));
    let out = scan_null_pairs(inst.skew(), bounds, jobs, filter, visit);
    match out.found {
        Some(w) => sw.fails(w, out.pairs_scanned),
        None => sw.holds(out.pairs_scanned),
    }
}

/// Every null pair `(m, f)` with `f ≠ 0` has a nonzero constant `a` with
/// `m(x) a = 0`.
pub fn check_skew_mccoy(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    scan(inst, "skew-mccoy", bounds, jobs, MFilter::NoConstantAnnihilator, |m, f| {
        Some(Witness::McCoy { m: inst.mpoly_ref(m), f: inst.rpoly_ref(f) })
    })
}

/// [`check_skew_mccoy`] with `(σ, δ)` replaced by `(id, 0)`.
pub fn check_mccoy(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    let plain = inst.with_identity();
    let mut r = check_skew_mccoy(&plain, bounds, jobs);
    r.property = "mccoy".to_string();
    r
}

/// Every null pair has `m_i x^i · b_j x^j = 0` for all `i, j`.
pub fn check_skew_armendariz(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    let sm = inst.skew();
    scan(inst, "skew-armendariz", bounds, jobs, MFilter::All, |m, f| {
        for (i, mi) in m.terms() {
            let mono_m = ModulePolynomial::monomial(mi, i);
            for (j, bj) in f.terms() {
                let product = sm.act(&mono_m, &SkewPolynomial::monomial(bj, j));
                if !product.is_zero() {
                    return Some(Witness::Armendariz {
                        m: inst.mpoly_ref(m),
                        f: inst.rpoly_ref(f),
                        i,
                        j,
                        product: inst.mpoly_ref(&product),
                    });
                }
            }
        }
        None
    })
}

/// Condition `(*)`: every null pair has `m(x) r f(x) = 0` for all `r ∈ R`.
pub fn check_condition_star(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    let sm = inst.skew();
    scan(inst, "star", bounds, jobs, MFilter::All, |m, f| {
        for r in inst.ring().nonzero_elements() {
            let residue = sm.act(&sm.act_const(m, r), f);
            if !residue.is_zero() {
                return Some(Witness::Star {
                    m: inst.mpoly_ref(m),
                    f: inst.rpoly_ref(f),
                    r: inst.r_ref(r),
                    residue: inst.mpoly_ref(&residue),
                });
            }
        }
        None
    })
}

/// Every null pair has `m_i b_j = 0` for all coefficient pairs.
pub fn check_strong_annihilation(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    scan(inst, "strong-annihilation", bounds, jobs, MFilter::All, |m, f| {
        for (i, mi) in m.terms() {
            for (j, bj) in f.terms() {
                let product = inst.act(mi, bj);
                if product != 0 {
                    return Some(Witness::StrongAnnihilation {
                        m: inst.mpoly_ref(m),
                        f: inst.rpoly_ref(f),
                        i,
                        j,
                        product: inst.m_ref(product),
                    });
                }
            }
        }
        None
    })
}

/// Every null pair has `m_i b_q^{p+1} = 0`, where `p = deg m` and `b_q` is
/// the leading coefficient of `f`.
pub fn check_nilpotent_annihilation(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    let ring = inst.ring();
    scan(inst, "nilpotent-annihilation", bounds, jobs, MFilter::All, |m, f| {
        let power = m.degree()? + 1;
        let lead_pow = ring.pow(f.leading()?, power);
        for (i, mi) in m.terms() {
            let product = inst.act(mi, lead_pow);
            if product != 0 {
                return Some(Witness::NilpotentAnnihilation {
                    m: inst.mpoly_ref(m),
                    f: inst.rpoly_ref(f),
                    i,
                    power,
                    product: inst.m_ref(product),
                });
            }
        }
        None
    })
}

fn closure_witness(inst: &Instance, m: &ModulePolynomial, f: &SkewPolynomial) -> Option<Witness> {
    let sm = inst.skew();
    f.terms().find_map(|(j, bj)| {
        let residue = sm.act_const(m, bj);
        (!residue.is_zero()).then(|| Witness::AnnihilatorClosure {
            m: inst.mpoly_ref(m),
            f: inst.rpoly_ref(f),
            j,
            coefficient: inst.r_ref(bj),
            residue: inst.mpoly_ref(&residue),
        })
    })
}

/// Annihilator closure for every singleton `U = {m}` with `deg m ≤ p`:
/// each coefficient of each annihilating `f` annihilates `m`.
pub fn check_annihilator_closure_all(inst: &Instance, bounds: Bounds, jobs: usize) -> PropertyReport {
    scan(inst, "annihilator-closure", bounds, jobs, MFilter::All, |m, f| closure_witness(inst, m, f))
}

/// Both forms of the annihilator-closure criterion for a set `U`.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    /// Form (1): every nonzero `f` (degree `≤ q`) annihilating all of `U`
    /// has every coefficient annihilating all of `U`.
    pub report: PropertyReport,
    pub form1: bool,
    /// Form (2), per member: `u f = 0 ⇒ u·b_j = 0` for every `j`.
    pub form2: bool,
    /// Form (2) implies form (1); for a singleton they coincide.
    pub consistent: bool,
}

/// Nonzero members of `us`, normalized.
fn nonzero_members(us: &[ModulePolynomial]) -> Vec<ModulePolynomial> {
    us.iter().map(ModulePolynomial::normalized).filter(|u| !u.is_zero()).collect()
}

/// Visits nonzero `f` with `deg f ≤ q` annihilating every polynomial in
/// `us` (all nonzero), in canonical order.
fn for_each_common_null<V>(
    inst: &Instance,
    us: &[ModulePolynomial],
    q: usize,
    scanned: &mut u64,
    mut visit: impl FnMut(&SkewPolynomial) -> Option<V>,
) -> Option<V> {
    let sm = inst.skew();
    let (first, rest) = us.split_first()?;
    let solver = NullSolver::new(sm, first.coeffs());
    solver.for_each_null_f(q, scanned, &mut |coeffs: &[Elem]| {
        let f = SkewPolynomial::from(coeffs);
        if rest.iter().all(|u| sm.act(u, &f).is_zero()) {
            visit(&f)
        } else {
            None
        }
    })
}

/// Checks the annihilator-closure criterion for `U` in both forms up to
/// `bounds.q` (`bounds.p` is not used: `U` is given).
pub fn check_annihilator_closure(inst: &Instance, us: &[ModulePolynomial], bounds: Bounds) -> ClosureReport {
    let sw = Stopwatch::start("annihilator-closure", inst, Some(bounds));
    let sm = inst.skew();
    let members = nonzero_members(us);
    let mut scanned = 0u64;

    let form1_witness = for_each_common_null(inst, &members, bounds.q, &mut scanned, |f| {
        f.terms().find_map(|(_, bj)| {
            members
                .iter()
                .find(|u| !sm.act_const(u, bj).is_zero())
                .and_then(|u| closure_witness(inst, u, f))
        })
    });

    let mut form2 = true;
    for u in &members {
        let solver = NullSolver::new(sm, u.coeffs());
        let mut leaves = 0;
        let bad = solver.for_each_null_f(bounds.q, &mut leaves, &mut |coeffs: &[Elem]| {
            closure_witness(inst, u, &SkewPolynomial::from(coeffs))
        });
        scanned += leaves;
        if bad.is_some() {
            form2 = false;
            break;
        }
    }

    let form1 = form1_witness.is_none();
    let consistent = if members.len() <= 1 { form1 == form2 } else { !form2 || form1 };
    let report = match form1_witness {
        Some(w) => sw.fails(w, scanned),
        None => sw.holds(scanned),
    };
    let report = if consistent {
        report
    } else {
        report.with_note("internal soundness failure: the two forms of the criterion disagree")
    };
    ClosureReport { report, form1, form2, consistent }
}

/// If a nonzero `f` of degree `≤ q` annihilates every generator, some
/// nonzero constant does too. Requires the annihilator-closure criterion on
/// `gens`; reports `NotApplicable` otherwise.
pub fn check_mccoy_theorem(inst: &Instance, gens: &[ModulePolynomial], bounds: Bounds) -> PropertyReport {
    let sw = Stopwatch::start("mccoy-theorem", inst, Some(bounds));
    let closure = check_annihilator_closure(inst, gens, bounds);
    if !closure.form1 {
        return sw.not_applicable(
            "hypothesis fails: annihilator closure does not hold for the generators",
            closure.report.pairs_scanned,
        );
    }
    let members = nonzero_members(gens);
    let mut scanned = closure.report.pairs_scanned;
    if members.is_empty() {
        return sw.holds(scanned);
    }
    let has_constant = inst.skew().constant_annihilators(&members).iter().any(|&a| a != 0);
    let found = for_each_common_null(inst, &members, bounds.q, &mut scanned, |f| Some(f.clone()));
    match found {
        Some(f) if !has_constant => {
            let w = Witness::McCoyTheorem {
                gens: members.iter().map(|u| inst.mpoly_ref(u)).collect(),
                f: inst.rpoly_ref(&f),
            };
            sw.fails(w, scanned)
                .with_note("internal soundness failure: hypothesis holds but no constant annihilates")
        }
        _ => sw.holds(scanned),
    }
}
