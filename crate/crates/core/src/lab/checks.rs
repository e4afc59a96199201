//! Exact element-level checks over `M × R` (and `M × R × R`).

use crate::Elem;

use super::instance::Instance;
use super::report::{
    consequence_image, CompatClause, ConsequenceMap, PropertyReport, Witness,
};
use super::Stopwatch;

/// `ma = 0 ⇔ mσ(a) = 0` and `ma = 0 ⇒ mδ(a) = 0`. Clauses are scanned in the
/// order forward σ, backward σ, δ; within a clause `a` is the outer loop.
pub fn check_compatible(inst: &Instance) -> PropertyReport {
    let sw = Stopwatch::start("compatible", inst, None);
    let mut scanned = 0u64;
    for clause in [CompatClause::ForwardSigma, CompatClause::BackwardSigma, CompatClause::Delta] {
        if clause == CompatClause::Delta && inst.qd().delta().is_zero() {
            continue;
        }
        for a in inst.ring().elements() {
            let (s, d) = (inst.sigma(a), inst.delta(a));
            for m in inst.module().elements() {
                scanned += 1;
                let ma = inst.act(m, a);
                let bad = match clause {
                    CompatClause::ForwardSigma => ma == 0 && inst.act(m, s) != 0,
                    CompatClause::BackwardSigma => ma != 0 && inst.act(m, s) == 0,
                    CompatClause::Delta => ma == 0 && inst.act(m, d) != 0,
                };
                if bad {
                    let w = Witness::Compatibility { clause, m: inst.m_ref(m), a: inst.r_ref(a) };
                    return sw.fails(w, scanned);
                }
            }
        }
    }
    sw.holds(scanned)
}

/// Consequences of compatibility: for every `ma = 0` and `i, j` up to
/// `power_bound`, `m` also kills `σ^i(a)`, `δ^j(a)`, `σ^i(δ^j(a))`,
/// `δ^i(σ^j(a))` and `f_i^j(a)`. Only meaningful on compatible instances;
/// a violation there is a soundness failure of this library.
pub fn check_compatibility_consequences(inst: &Instance, power_bound: usize) -> PropertyReport {
    let sw = Stopwatch::start("compatibility-consequences", inst, None);
    let compat = check_compatible(inst);
    if !compat.holds() {
        return sw.not_applicable("the module is not (sigma,delta)-compatible", compat.pairs_scanned);
    }
    let pb = power_bound;
    let mut shapes: Vec<(ConsequenceMap, usize, usize)> = Vec::new();
    shapes.extend((1..=pb).map(|i| (ConsequenceMap::SigmaPower, i, 0)));
    shapes.extend((1..=pb).map(|j| (ConsequenceMap::DeltaPower, 0, j)));
    for i in 0..=pb {
        for j in 0..=pb {
            shapes.push((ConsequenceMap::SigmaOfDelta, i, j));
            shapes.push((ConsequenceMap::DeltaOfSigma, i, j));
        }
    }
    for j in 0..=pb {
        shapes.extend((0..=j).map(|i| (ConsequenceMap::FOperator, i, j)));
    }
    let mut scanned = 0u64;
    for a in inst.ring().elements() {
        let images: Vec<Elem> = shapes
            .iter()
            .map(|&(map, i, j)| consequence_image(inst, map, i, j, a).expect("i <= j"))
            .collect();
        for m in inst.module().elements() {
            if inst.act(m, a) != 0 {
                continue;
            }
            for (&(map, i, j), &img) in shapes.iter().zip(&images) {
                scanned += 1;
                if inst.act(m, img) != 0 {
                    let w = Witness::Consequence {
                        map,
                        i,
                        j,
                        m: inst.m_ref(m),
                        a: inst.r_ref(a),
                        image: inst.r_ref(img),
                    };
                    return sw
                        .fails(w, scanned)
                        .with_note("internal soundness failure: compatible module violates a consequence");
                }
            }
        }
    }
    sw.holds(scanned)
}

fn semicommutative(inst: &Instance, twisted: bool) -> PropertyReport {
    let name = if twisted { "sigma-semicommutative" } else { "semicommutative" };
    let sw = Stopwatch::start(name, inst, None);
    let mut scanned = 0u64;
    for a in inst.ring().elements() {
        let b = if twisted { inst.sigma(a) } else { a };
        for m in inst.module().elements() {
            if inst.act(m, a) != 0 {
                continue;
            }
            for r in inst.ring().elements() {
                scanned += 1;
                if inst.act(inst.act(m, r), b) != 0 {
                    let w = Witness::Semicommutative {
                        twisted,
                        m: inst.m_ref(m),
                        a: inst.r_ref(a),
                        r: inst.r_ref(r),
                    };
                    return sw.fails(w, scanned);
                }
            }
        }
    }
    sw.holds(scanned)
}

/// `ma = 0 ⇒ mRa = 0`.
pub fn check_semicommutative(inst: &Instance) -> PropertyReport {
    semicommutative(inst, false)
}

/// `ma = 0 ⇒ mRσ(a) = 0`.
pub fn check_sigma_semicommutative(inst: &Instance) -> PropertyReport {
    semicommutative(inst, true)
}

/// The three conditions characterizing σ-reduced modules, checked in the
/// order (a), (b), (c):
/// (a) `ma = 0 ⇒ mRa = mRσ(a) = 0`; (b) `maσ(a) = 0 ⇒ ma = 0`;
/// (c) `ma² = 0 ⇒ ma = 0`. With `twisted = false`, σ is replaced by the
/// identity and (b) coincides with (c).
fn reduced(inst: &Instance, twisted: bool) -> PropertyReport {
    let name = if twisted { "sigma-reduced" } else { "reduced" };
    let sw = Stopwatch::start(name, inst, None);
    let ring = inst.ring();
    let tw = |a: Elem| if twisted { inst.sigma(a) } else { a };
    let mut scanned = 0u64;
    for a in ring.elements() {
        let s = tw(a);
        for m in inst.module().elements() {
            if inst.act(m, a) != 0 {
                continue;
            }
            for r in ring.elements() {
                scanned += 1;
                let mr = inst.act(m, r);
                if inst.act(mr, a) != 0 || inst.act(mr, s) != 0 {
                    let w = Witness::Reduced {
                        condition: 'a',
                        twisted,
                        m: inst.m_ref(m),
                        a: inst.r_ref(a),
                        r: Some(inst.r_ref(r)),
                    };
                    return sw.fails(w, scanned);
                }
            }
        }
    }
    let mut conditions = vec![('c', false)];
    if twisted {
        conditions.insert(0, ('b', true));
    }
    for (condition, use_sigma) in conditions {
        for a in ring.elements() {
            let sq = ring.mul(a, if use_sigma { tw(a) } else { a });
            for m in inst.module().elements() {
                scanned += 1;
                if inst.act(m, sq) == 0 && inst.act(m, a) != 0 {
                    let w = Witness::Reduced {
                        condition,
                        twisted,
                        m: inst.m_ref(m),
                        a: inst.r_ref(a),
                        r: None,
                    };
                    return sw.fails(w, scanned);
                }
            }
        }
    }
    sw.holds(scanned)
}

/// Reduced in the sense of `id_R`-reduced.
pub fn check_reduced(inst: &Instance) -> PropertyReport {
    reduced(inst, false)
}

pub fn check_sigma_reduced(inst: &Instance) -> PropertyReport {
    reduced(inst, true)
}

/// Condition `C_σ`: `mσ(a) = 0 ⇒ ma = 0`.
pub fn check_condition_c_sigma(inst: &Instance) -> PropertyReport {
    let sw = Stopwatch::start("c-sigma", inst, None);
    let mut scanned = 0u64;
    for a in inst.ring().elements() {
        let s = inst.sigma(a);
        for m in inst.module().elements() {
            scanned += 1;
            if inst.act(m, s) == 0 && inst.act(m, a) != 0 {
                return sw.fails(Witness::ConditionC { m: inst.m_ref(m), a: inst.r_ref(a) }, scanned);
            }
        }
    }
    sw.holds(scanned)
}

/// On a compatible module where `ma² = 0 ⇒ ma = 0`: both `mσ(a)a = 0` and
/// `maσ(a) = 0` force `ma = mσ(a) = 0`. Reports `NotApplicable` when a
/// hypothesis fails.
pub fn check_square_cancellation_lemma(inst: &Instance) -> PropertyReport {
    let sw = Stopwatch::start("square-cancellation", inst, None);
    let compat = check_compatible(inst);
    if !compat.holds() {
        return sw.not_applicable("hypothesis fails: the module is not (sigma,delta)-compatible", compat.pairs_scanned);
    }
    let ring = inst.ring();
    let mut scanned = compat.pairs_scanned;
    for a in ring.elements() {
        let sq = ring.mul(a, a);
        for m in inst.module().elements() {
            scanned += 1;
            if inst.act(m, sq) == 0 && inst.act(m, a) != 0 {
                let msg = format!(
                    "hypothesis fails: m a^2 = 0 but m a != 0 at m={}, a={}",
                    inst.module().label(m),
                    ring.label(a)
                );
                return sw.not_applicable(&msg, scanned);
            }
        }
    }
    for part in [1u8, 2] {
        for a in ring.elements() {
            let s = inst.sigma(a);
            let hyp = if part == 1 { ring.mul(s, a) } else { ring.mul(a, s) };
            for m in inst.module().elements() {
                scanned += 1;
                if inst.act(m, hyp) == 0 && (inst.act(m, a) != 0 || inst.act(m, s) != 0) {
                    let w = Witness::SquareCancellation { part, m: inst.m_ref(m), a: inst.r_ref(a) };
                    return sw
                        .fails(w, scanned)
                        .with_note("internal soundness failure: hypotheses hold but a conclusion fails");
                }
            }
        }
    }
    sw.holds(scanned)
}
