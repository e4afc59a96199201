use serde::{Deserialize, Serialize};

use crate::poly::{ModulePolynomial, SkewPolynomial};
use crate::search::Bounds;
use crate::Elem;

use super::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// No counterexample within the stated bounds (or, for exact checks,
    /// none at all).
    HoldsUpToBound,
    Fails,
    /// A hypothesis of the checked statement does not hold; see the note.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemRef {
    pub index: Elem,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRef {
    pub coeffs: Vec<Elem>,
    pub labels: Vec<String>,
    pub text: String,
}

impl PolyRef {
    pub fn module_poly(&self) -> ModulePolynomial {
        ModulePolynomial::from(self.coeffs.clone())
    }

    pub fn ring_poly(&self) -> SkewPolynomial {
        SkewPolynomial::from(self.coeffs.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompatClause {
    /// `ma = 0` but `mσ(a) ≠ 0`.
    ForwardSigma,
    /// `mσ(a) = 0` but `ma ≠ 0`.
    BackwardSigma,
    /// `ma = 0` but `mδ(a) ≠ 0`.
    Delta,
}

/// Maps whose annihilation is implied by compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConsequenceMap {
    SigmaPower,
    DeltaPower,
    SigmaOfDelta,
    DeltaOfSigma,
    FOperator,
}

/// A counterexample. Element references carry indices (used by replay) and
/// labels (for reading).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Compatibility { clause: CompatClause, m: ElemRef, a: ElemRef },
    /// `ma = 0` but `m r a ≠ 0` (or `m r σ(a) ≠ 0` when `twisted`).
    Semicommutative { twisted: bool, m: ElemRef, a: ElemRef, r: ElemRef },
    /// One of the three reducedness conditions fails; `r` is set for (a).
    Reduced { condition: char, twisted: bool, m: ElemRef, a: ElemRef, r: Option<ElemRef> },
    /// `mσ(a) = 0` but `ma ≠ 0`.
    ConditionC { m: ElemRef, a: ElemRef },
    Consequence { map: ConsequenceMap, i: usize, j: usize, m: ElemRef, a: ElemRef, image: ElemRef },
    /// `m f = 0` with `f ≠ 0`, and no nonzero constant annihilates `m`.
    #[serde(rename = "mccoy")]
    McCoy { m: PolyRef, f: PolyRef },
    /// `m f = 0` but `m_i x^i · b_j x^j = product ≠ 0`.
    Armendariz { m: PolyRef, f: PolyRef, i: usize, j: usize, product: PolyRef },
    /// `m f = 0` but `m r f = residue ≠ 0`.
    Star { m: PolyRef, f: PolyRef, r: ElemRef, residue: PolyRef },
    /// `m f = 0` but `m_i b_j = product ≠ 0`.
    StrongAnnihilation { m: PolyRef, f: PolyRef, i: usize, j: usize, product: ElemRef },
    /// `m f = 0` but `m_i b_q^power = product ≠ 0`, `power = deg m + 1`.
    NilpotentAnnihilation { m: PolyRef, f: PolyRef, i: usize, power: usize, product: ElemRef },
    /// `m f = 0` but `m(x)·b_j = residue ≠ 0`.
    AnnihilatorClosure { m: PolyRef, f: PolyRef, j: usize, coefficient: ElemRef, residue: PolyRef },
    /// `f ≠ 0` annihilates every generator, but no nonzero constant does.
    #[serde(rename = "mccoy_theorem")]
    McCoyTheorem { gens: Vec<PolyRef>, f: PolyRef },
    /// Part 1: `m σ(a) a = 0`; part 2: `m a σ(a) = 0`; yet `ma` or
    /// `mσ(a)` is nonzero.
    SquareCancellation { part: u8, m: ElemRef, a: ElemRef },
}

impl Witness {
    /// Recomputes the violation from scratch on `inst`. True when the
    /// recorded counterexample is confirmed.
    pub fn replay(&self, inst: &Instance) -> bool {
        let sm = inst.skew();
        let ring = inst.ring();
        let null = |m: &PolyRef, f: &PolyRef| {
            let f = f.ring_poly();
            !f.is_zero() && sm.act(&m.module_poly(), &f).is_zero()
        };
        match self {
            Witness::Compatibility { clause, m, a } => {
                let (m, a) = (m.index, a.index);
                let ma = inst.act(m, a);
                match clause {
                    CompatClause::ForwardSigma => ma == 0 && inst.act(m, inst.sigma(a)) != 0,
                    CompatClause::BackwardSigma => inst.act(m, inst.sigma(a)) == 0 && ma != 0,
                    CompatClause::Delta => ma == 0 && inst.act(m, inst.delta(a)) != 0,
                }
            }
            Witness::Semicommutative { twisted, m, a, r } => {
                let b = if *twisted { inst.sigma(a.index) } else { a.index };
                inst.act(m.index, a.index) == 0
                    && inst.act(inst.act(m.index, r.index), b) != 0
            }
            Witness::Reduced { condition, twisted, m, a, r } => {
                let (m, a) = (m.index, a.index);
                let s = if *twisted { inst.sigma(a) } else { a };
                let ma = inst.act(m, a);
                match (condition, r) {
                    ('a', Some(r)) => {
                        let mr = inst.act(m, r.index);
                        ma == 0 && (inst.act(mr, a) != 0 || inst.act(mr, s) != 0)
                    }
                    ('b', _) => inst.act(m, ring.mul(a, s)) == 0 && ma != 0,
                    ('c', _) => inst.act(m, ring.mul(a, a)) == 0 && ma != 0,
                    _ => false,
                }
            }
            Witness::ConditionC { m, a } => {
                inst.act(m.index, inst.sigma(a.index)) == 0 && inst.act(m.index, a.index) != 0
            }
            Witness::Consequence { map, i, j, m, a, image } => {
                let expected = consequence_image(inst, *map, *i, *j, a.index);
                inst.act(m.index, a.index) == 0
                    && expected == Some(image.index)
                    && inst.act(m.index, image.index) != 0
            }
            Witness::McCoy { m, f } => {
                null(m, f)
                    && ring
                        .nonzero_elements()
                        .all(|a| !sm.act_const(&m.module_poly(), a).is_zero())
            }
            Witness::Armendariz { m, f, i, j, product } => {
                let (mp, fp) = (m.module_poly(), f.ring_poly());
                let mono_m = ModulePolynomial::monomial(mp.coeff(*i), *i);
                let mono_f = SkewPolynomial::monomial(fp.coeff(*j), *j);
                let got = sm.act(&mono_m, &mono_f);
                null(m, f) && !got.is_zero() && got.coeffs() == product.coeffs.as_slice()
            }
            Witness::Star { m, f, r, residue } => {
                let mr = sm.act_const(&m.module_poly(), r.index);
                let got = sm.act(&mr, &f.ring_poly());
                null(m, f) && !got.is_zero() && got.coeffs() == residue.coeffs.as_slice()
            }
            Witness::StrongAnnihilation { m, f, i, j, product } => {
                let got = inst.act(m.module_poly().coeff(*i), f.ring_poly().coeff(*j));
                null(m, f) && got != 0 && got == product.index
            }
            Witness::NilpotentAnnihilation { m, f, i, power, product } => {
                let (mp, fp) = (m.module_poly(), f.ring_poly());
                let Some(lead) = fp.leading() else { return false };
                let deg_ok = mp.degree().map(|d| d + 1) == Some(*power);
                let got = inst.act(mp.coeff(*i), ring.pow(lead, *power));
                null(m, f) && deg_ok && got != 0 && got == product.index
            }
            Witness::AnnihilatorClosure { m, f, j, coefficient, residue } => {
                let fp = f.ring_poly();
                let got = sm.act_const(&m.module_poly(), fp.coeff(*j));
                null(m, f)
                    && fp.coeff(*j) == coefficient.index
                    && !got.is_zero()
                    && got.coeffs() == residue.coeffs.as_slice()
            }
            Witness::McCoyTheorem { gens, f } => {
                let us: Vec<ModulePolynomial> = gens.iter().map(PolyRef::module_poly).collect();
                let fp = f.ring_poly();
                !fp.is_zero()
                    && sm.annihilates_all(&us, &fp)
                    && sm.constant_annihilators(&us).iter().all(|&a| a == 0)
            }
            Witness::SquareCancellation { part, m, a } => {
                let (m, a) = (m.index, a.index);
                let s = inst.sigma(a);
                let hyp = match part {
                    1 => ring.mul(s, a),
                    2 => ring.mul(a, s),
                    _ => return false,
                };
                inst.act(m, hyp) == 0 && (inst.act(m, a) != 0 || inst.act(m, s) != 0)
            }
        }
    }
}

pub(crate) fn consequence_image(
    inst: &Instance,
    map: ConsequenceMap,
    i: usize,
    j: usize,
    a: Elem,
) -> Option<Elem> {
    let sig = |k: usize, x: Elem| (0..k).fold(x, |y, _| inst.sigma(y));
    let del = |k: usize, x: Elem| (0..k).fold(x, |y, _| inst.delta(y));
    Some(match map {
        ConsequenceMap::SigmaPower => sig(i, a),
        ConsequenceMap::DeltaPower => del(j, a),
        ConsequenceMap::SigmaOfDelta => sig(i, del(j, a)),
        ConsequenceMap::DeltaOfSigma => del(i, sig(j, a)),
        ConsequenceMap::FOperator => inst.qd().f_op(i, j, a).ok()?,
    })
}

/// Outcome of one property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub instance: String,
    /// `None` for exact (non-degree-bounded) checks.
    pub bounds: Option<Bounds>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub pairs_scanned: u64,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::HoldsUpToBound
    }

    pub fn fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    /// Replays the witness against the instance the check ran on; for
    /// `mccoy` that is `inst` with `(σ, δ) = (id, 0)`. Reports without a
    /// witness replay trivially.
    pub fn replay(&self, inst: &Instance) -> bool {
        match &self.witness {
            None => self.verdict != Verdict::Fails,
            Some(w) => {
                let target = if self.property == "mccoy" { inst.with_identity() } else { inst.clone() };
                self.verdict == Verdict::Fails && w.replay(&target)
            }
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    /// JSON of the witness alone, used for determinism comparisons.
    pub fn witness_json(&self) -> String {
        serde_json::to_string(&self.witness).expect("witness serializes")
    }
}
