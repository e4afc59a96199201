//! Implication laws between the properties, asserted instance by instance.
//!
//! Each law is an implication `hypotheses ⇒ conclusion` evaluated at fixed
//! bounds. A law whose hypotheses fail is recorded as not applicable, so
//! corpus coverage stays visible. Derived instances (quotients, products,
//! submodules, matrix modules) are built on the fly and size-capped.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::module::{
    build_sn_module, build_vn_module, build_vn_sigma_module, product_module, quotient_module, submodule,
    FiniteModule, ModuleConstruction,
};
use crate::poly::ModulePolynomial;
use crate::quasi::{lift_entrywise, product_quasi_derivation, QuasiDerivation};
use crate::ring::{build_product, ideal_from_generators, Side};
use crate::search::Bounds;
use crate::Elem;

use super::bounded::{
    check_annihilator_closure, check_condition_star, check_mccoy_theorem, check_nilpotent_annihilation,
    check_skew_armendariz, check_skew_mccoy, check_strong_annihilation,
};
use super::checks::{
    check_compatibility_consequences, check_compatible, check_condition_c_sigma, check_reduced,
    check_semicommutative,
};
use super::instance::Instance;
use super::report::{PropertyReport, Witness};

/// Largest ring for which right ideals are enumerated.
const QUOTIENT_RING_CAP: usize = 16;
/// Largest product module (and product ring) built for the product law.
const PRODUCT_MODULE_CAP: usize = 32;
const PRODUCT_RING_CAP: usize = 256;
/// Largest module whose cyclic submodules are enumerated.
const SUBMODULE_CAP: usize = 64;
/// Largest module for which every `m` is tested against the annihilator
/// criterion, and the cap on the number of such `m`.
const CRITERION_MODULE_CAP: usize = 16;
const CRITERION_POLY_CAP: usize = 4096;
/// Largest matrix module built for the transfer laws.
pub const TRANSFER_MODULE_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LawOutcome {
    Holds {
        #[serde(skip_serializing_if = "String::is_empty")]
        detail: String,
    },
    NotApplicable { reason: String },
    Violated {
        detail: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Box<Witness>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub instance: String,
    #[serde(flatten)]
    pub outcome: LawOutcome,
}

impl LawResult {
    pub fn is_violation(&self) -> bool {
        matches!(self.outcome, LawOutcome::Violated { .. })
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self.outcome, LawOutcome::NotApplicable { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub bounds: Bounds,
    pub transfer_bounds: Bounds,
    pub instances: Vec<String>,
    pub results: Vec<LawResult>,
    pub violations: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn results_for<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a LawResult> + 'a {
        self.results.iter().filter(move |r| r.law == law)
    }
}

fn holds(detail: impl Into<String>) -> LawOutcome {
    LawOutcome::Holds { detail: detail.into() }
}

fn not_applicable(reason: impl Into<String>) -> LawOutcome {
    LawOutcome::NotApplicable { reason: reason.into() }
}

fn violated(detail: impl Into<String>, witness: Option<Witness>) -> LawOutcome {
    let witness = witness.map(Box::new);
    LawOutcome::Violated { detail: detail.into(), witness }
}

/// `hyps ⇒ concl`, with the conclusion evaluated only when every hypothesis
/// holds.
fn implication(hyps: &[(&str, bool)], concl: impl FnOnce() -> PropertyReport) -> LawOutcome {
    if let Some((name, _)) = hyps.iter().find(|(_, ok)| !ok) {
        return not_applicable(format!("{name} does not hold"));
    }
    let r = concl();
    if r.holds() {
        holds("")
    } else {
        violated(format!("{} does not hold on {}", r.property, r.instance), r.witness)
    }
}

/// Verdicts of one instance, computed once and shared by the laws.
struct Profile {
    compatible: bool,
    reduced: bool,
    c_sigma: bool,
    semicommutative: PropertyReport,
    star: PropertyReport,
    armendariz: PropertyReport,
    mccoy: PropertyReport,
}

impl Profile {
    fn new(inst: &Instance, bounds: Bounds, jobs: usize) -> Self {
        Profile {
            compatible: check_compatible(inst).holds(),
            reduced: check_reduced(inst).holds(),
            c_sigma: check_condition_c_sigma(inst).holds(),
            semicommutative: check_semicommutative(inst),
            star: check_condition_star(inst, bounds, jobs),
            armendariz: check_skew_armendariz(inst, bounds, jobs),
            mccoy: check_skew_mccoy(inst, bounds, jobs),
        }
    }
}

/// Runs every law on every instance of `corpus` at `bounds`; the matrix
/// transfer laws run at `(1, 1)`.
pub fn run_law_suite(corpus: &[Instance], bounds: Bounds, jobs: usize) -> SuiteReport {
    let transfer_bounds = Bounds::new(1, 1);
    let mut results = Vec::new();
    let profiles: Vec<Profile> = corpus.iter().map(|i| Profile::new(i, bounds, jobs)).collect();
    for (inst, prof) in corpus.iter().zip(&profiles) {
        let mut push = |law: &str, outcome: LawOutcome| {
            results.push(LawResult { law: law.to_string(), instance: inst.name().to_string(), outcome });
        };
        push("a:armendariz=>skew-mccoy", implication(&[("skew-armendariz", prof.armendariz.holds())], || {
            prof.mccoy.clone()
        }));
        let cr = [("compatible", prof.compatible), ("reduced", prof.reduced)];
        push("b:compatible+reduced=>star", implication(&cr, || prof.star.clone()));
        push("c:compatible+reduced=>strong-annihilation", implication(&cr, || {
            check_strong_annihilation(inst, bounds, jobs)
        }));
        push("d:compatible+star=>nilpotent-annihilation", implication(
            &[("compatible", prof.compatible), ("star", prof.star.holds())],
            || check_nilpotent_annihilation(inst, bounds, jobs),
        ));
        push("e:stable-quotient=>skew-mccoy", quotient_law(inst, bounds, jobs));
        push("g:skew-mccoy=>cyclic-submodules", submodule_law(inst, prof, bounds, jobs));
        push("h:compatible=>consequences", implication(&[("compatible", prof.compatible)], || {
            check_compatibility_consequences(inst, 3)
        }));
        push("i:star=>semicommutative", implication(&[("star", prof.star.holds())], || {
            prof.semicommutative.clone()
        }));
        push("armendariz+c-sigma=>strong-annihilation", implication(
            &[("skew-armendariz", prof.armendariz.holds()), ("c-sigma", prof.c_sigma)],
            || check_strong_annihilation(inst, bounds, jobs),
        ));
        push("compatible+reduced=>armendariz", implication(&cr, || prof.armendariz.clone()));
        push("compatible+reduced-ring+star=>skew-mccoy", implication(
            &[
                ("compatible", prof.compatible),
                ("reduced ring", inst.ring().is_reduced()),
                ("star", prof.star.holds()),
            ],
            || prof.mccoy.clone(),
        ));
        let (criterion, theorem) = annihilator_laws(inst, bounds);
        push("annihilator-criterion-forms-agree", criterion);
        push("annihilator-criterion=>mccoy-theorem", theorem);
        for n in [2, 3] {
            for kind in [MatrixKind::Sn, MatrixKind::Vn, MatrixKind::VnSigma] {
                push(&format!("transfer:{}", kind.tag(n)), transfer_law(inst, kind, n, transfer_bounds, jobs));
            }
        }
    }
    for i in 0..corpus.len() {
        for j in i..corpus.len() {
            let (a, b) = (&corpus[i], &corpus[j]);
            let outcome = product_law(a, &profiles[i], b, &profiles[j], bounds, jobs);
            results.push(LawResult {
                law: "f:skew-mccoy-factors=>product".to_string(),
                instance: format!("{} x {}", a.name(), b.name()),
                outcome,
            });
        }
    }
    let violations = results.iter().filter(|r| r.is_violation()).count();
    SuiteReport {
        bounds,
        transfer_bounds,
        instances: corpus.iter().map(|i| i.name().to_string()).collect(),
        results,
        violations,
    }
}

/// `R/I` is skew McCoy for every nonzero `(σ, δ)`-stable right ideal `I`
/// generated by at most two elements. Evaluated once per ring, on the
/// instance carrying the regular module.
fn quotient_law(inst: &Instance, bounds: Bounds, jobs: usize) -> LawOutcome {
    if !matches!(inst.module().construction(), ModuleConstruction::Regular) {
        return not_applicable("quotients are checked on the regular-module instance of each ring");
    }
    let ring = inst.ring();
    if ring.size() > QUOTIENT_RING_CAP {
        return not_applicable(format!("ring larger than {QUOTIENT_RING_CAP} elements"));
    }
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut tested = 0;
    let nz: Vec<Elem> = ring.nonzero_elements().collect();
    let gen_sets = nz
        .iter()
        .map(|&a| vec![a])
        .chain(nz.iter().enumerate().flat_map(|(k, &a)| nz[k + 1..].iter().map(move |&b| vec![a, b])));
    for gens in gen_sets {
        let ideal = match ideal_from_generators(ring, &gens, Side::Right) {
            Ok(i) => i,
            Err(e) => return violated(format!("right ideal construction failed: {e}"), None),
        };
        if ideal.is_zero() || !ideal.is_stable(inst.qd()) || !seen.insert(ideal.members().to_vec()) {
            continue;
        }
        let module = match quotient_module(&ideal) {
            Ok(m) => m,
            Err(e) => return violated(format!("quotient construction failed: {e}"), None),
        };
        let labels: Vec<&str> = gens.iter().map(|&g| ring.label(g)).collect();
        let name = format!("{}/<{}>", inst.name(), labels.join(","));
        let q = Instance::new(name.clone(), inst.qd().clone(), module).expect("quotient is over the same ring");
        tested += 1;
        let r = check_skew_mccoy(&q, bounds, jobs);
        if !r.holds() {
            return violated(format!("skew-mccoy fails on {name}"), r.witness);
        }
    }
    if tested == 0 {
        not_applicable("no nonzero stable right ideal")
    } else {
        holds(format!("{tested} stable right ideals"))
    }
}

/// If `A` and `B` are skew McCoy, so is `A × B` over `R_A × R_B` with the
/// componentwise quasi-derivation.
fn product_law(a: &Instance, pa: &Profile, b: &Instance, pb: &Profile, bounds: Bounds, jobs: usize) -> LawOutcome {
    if !pa.mccoy.holds() || !pb.mccoy.holds() {
        return not_applicable("a factor is not skew McCoy");
    }
    let msize = a.module().size() * b.module().size();
    let rsize = a.ring().size() * b.ring().size();
    if msize > PRODUCT_MODULE_CAP || rsize > PRODUCT_RING_CAP {
        return not_applicable(format!("product of size {msize} over a ring of size {rsize} exceeds the cap"));
    }
    let build = || -> crate::Result<Instance> {
        let ring = build_product(&[a.ring().clone(), b.ring().clone()])?;
        let qd = product_quasi_derivation(&[a.qd(), b.qd()], &ring)?;
        let module = product_module(&[a.module().clone(), b.module().clone()], &ring)?;
        Instance::new(format!("{} x {}", a.name(), b.name()), Arc::new(qd), module)
    };
    match build() {
        Ok(p) => {
            let r = check_skew_mccoy(&p, bounds, jobs);
            if r.holds() {
                holds("")
            } else {
                violated(format!("skew-mccoy fails on {}", p.name()), r.witness)
            }
        }
        Err(e) => violated(format!("product construction failed: {e}"), None),
    }
}

/// Every cyclic submodule `mR` of a skew McCoy module is skew McCoy.
fn submodule_law(inst: &Instance, prof: &Profile, bounds: Bounds, jobs: usize) -> LawOutcome {
    if !prof.mccoy.holds() {
        return not_applicable("skew-mccoy does not hold");
    }
    let parent = inst.module();
    if parent.size() > SUBMODULE_CAP {
        return not_applicable(format!("module larger than {SUBMODULE_CAP} elements"));
    }
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for m in parent.nonzero_elements() {
        let sub = match submodule(parent, &[m]) {
            Ok(s) => s,
            Err(e) => return violated(format!("submodule construction failed: {e}"), None),
        };
        let mut members = sub.inclusion().expect("submodules record their inclusion").to_vec();
        members.sort_unstable();
        if !seen.insert(members) {
            continue;
        }
        let name = format!("{}.{}R", inst.name(), parent.label(m));
        let s = Instance::new(name.clone(), inst.qd().clone(), sub).expect("submodule is over the same ring");
        let r = check_skew_mccoy(&s, bounds, jobs);
        if !r.holds() {
            return violated(format!("skew-mccoy fails on {name}"), r.witness);
        }
    }
    holds(format!("{} cyclic submodules", seen.len()))
}

/// For each single `m` (degree at most `bounds.p`): the two forms of the
/// annihilator criterion agree, and where the criterion holds the bounded
/// McCoy theorem does too.
fn annihilator_laws(inst: &Instance, bounds: Bounds) -> (LawOutcome, LawOutcome) {
    let ms = inst.module().size();
    let count = (ms as u128).checked_pow(bounds.p as u32 + 1);
    if ms > CRITERION_MODULE_CAP || count.is_none_or(|c| c > CRITERION_POLY_CAP as u128) {
        let why = "too many module polynomials to enumerate";
        return (not_applicable(why), not_applicable(why));
    }
    let radix = vec![ms; bounds.p + 1];
    let mut applicable = 0;
    let mut tested = 0;
    let mut theorem = None;
    for k in 1..count.unwrap() as usize {
        let m = ModulePolynomial::new(crate::ring::decode_digits(k, &radix));
        let us = [m];
        let c = check_annihilator_closure(inst, &us, bounds);
        tested += 1;
        if !c.consistent {
            let detail = format!("forms disagree for m = {}", inst.skew().render(&us[0]));
            return (violated(detail, c.report.witness), not_applicable("criterion check failed"));
        }
        if c.form1 && theorem.is_none() {
            applicable += 1;
            let t = check_mccoy_theorem(inst, &us, bounds);
            if t.fails() {
                theorem = Some(violated(format!("theorem fails for m = {}", inst.skew().render(&us[0])), t.witness));
            }
        }
    }
    let theorem = theorem.unwrap_or_else(|| {
        if applicable == 0 {
            not_applicable("the criterion holds for no single generator")
        } else {
            holds(format!("{applicable} generators satisfy the criterion"))
        }
    });
    (holds(format!("{tested} module polynomials")), theorem)
}

#[derive(Debug, Clone, Copy)]
pub enum MatrixKind {
    Sn,
    Vn,
    VnSigma,
}

impl MatrixKind {
    pub fn tag(self, n: usize) -> String {
        match self {
            MatrixKind::Sn => format!("S{n}"),
            MatrixKind::Vn => format!("V{n}"),
            MatrixKind::VnSigma => format!("V{n}-sigma"),
        }
    }
}

/// Builds the matrix instance over `inst` with the entrywise-lifted
/// quasi-derivation.
pub fn matrix_instance(inst: &Instance, kind: MatrixKind, n: usize) -> crate::Result<Instance> {
    let base = inst.module();
    let module: Arc<FiniteModule> = match kind {
        MatrixKind::Sn => build_sn_module(base, n)?,
        MatrixKind::Vn => build_vn_module(base, n)?,
        MatrixKind::VnSigma => build_vn_sigma_module(base, inst.qd().sigma(), n)?,
    };
    let qd: QuasiDerivation = lift_entrywise(inst.qd(), module.ring())?;
    Instance::new(format!("{}({})", kind.tag(n), inst.name()), Arc::new(qd), module)
}

/// Skew-McCoy verdicts of `M` and of its matrix module agree.
fn transfer_law(inst: &Instance, kind: MatrixKind, n: usize, bounds: Bounds, jobs: usize) -> LawOutcome {
    if matches!(kind, MatrixKind::VnSigma) && !inst.qd().delta().is_zero() {
        return not_applicable("V_n(M, sigma) is only defined for delta = 0");
    }
    let size = (inst.module().size() as u128).pow(match kind {
        MatrixKind::Sn => (n * (n - 1) / 2 + 1) as u32,
        MatrixKind::Vn | MatrixKind::VnSigma => n as u32,
    });
    if size > TRANSFER_MODULE_CAP as u128 {
        return not_applicable(format!("matrix module of size {size} exceeds {TRANSFER_MODULE_CAP}"));
    }
    let lifted = match matrix_instance(inst, kind, n) {
        Ok(i) => i,
        Err(crate::Error::SizeLimit { .. }) => return not_applicable("matrix ring exceeds the carrier cap"),
        Err(e) => return violated(format!("matrix construction failed: {e}"), None),
    };
    let base = check_skew_mccoy(inst, bounds, jobs);
    let top = check_skew_mccoy(&lifted, bounds, jobs);
    if base.holds() == top.holds() {
        holds(format!("both {}", if base.holds() { "hold" } else { "fail" }))
    } else {
        let detail = format!(
            "skew-mccoy {} on {} but {} on {}",
            verdict_word(&base),
            inst.name(),
            verdict_word(&top),
            lifted.name()
        );
        violated(detail, if base.holds() { top.witness } else { base.witness })
    }
}

fn verdict_word(r: &PropertyReport) -> &'static str {
    if r.holds() {
        "holds"
    } else {
        "fails"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::fixtures::{default_corpus, regular_identity, z2xz2, z2xz2_swap, zero_module};

    const B22: Bounds = Bounds::new(2, 2);

    fn outcome<'a>(s: &'a SuiteReport, law: &str, inst: &str) -> &'a LawOutcome {
        &s.results.iter().find(|r| r.law == law && r.instance == inst).expect("law recorded").outcome
    }

    #[test]
    fn failing_hypotheses_are_not_violations() {
        let s = run_law_suite(&[z2xz2_swap(true)], B22, 2);
        assert!(s.passed());
        let name = "z2xz2-swap-inner";
        assert!(matches!(outcome(&s, "a:armendariz=>skew-mccoy", name), LawOutcome::NotApplicable { .. }));
        assert!(matches!(outcome(&s, "b:compatible+reduced=>star", name), LawOutcome::NotApplicable { .. }));
    }

    #[test]
    fn compatible_reduced_instance_exercises_the_theorems() {
        let s = run_law_suite(&[regular_identity("z2xz2", &z2xz2())], B22, 2);
        assert!(s.passed());
        for law in ["b:compatible+reduced=>star", "c:compatible+reduced=>strong-annihilation"] {
            assert!(matches!(outcome(&s, law, "z2xz2"), LawOutcome::Holds { .. }), "{law}");
        }
    }

    #[test]
    fn twisted_matrix_transfer_agrees() {
        let inst = z2xz2_swap(false);
        let s = run_law_suite(std::slice::from_ref(&inst), B22, 2);
        assert!(matches!(outcome(&s, "transfer:V2-sigma", "z2xz2-swap"), LawOutcome::Holds { .. }));
        let lifted = matrix_instance(&inst, MatrixKind::VnSigma, 2).unwrap();
        assert_eq!(lifted.module().size(), 16);
    }

    #[test]
    fn zero_module_corpus_passes() {
        let s = run_law_suite(&[zero_module(&z2xz2())], B22, 1);
        assert!(s.passed());
    }

    #[test]
    fn default_corpus_has_no_violations() {
        let s = run_law_suite(&default_corpus(), B22, 4);
        let bad: Vec<_> = s.results.iter().filter(|r| r.is_violation()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        for law in ["a:", "b:", "c:", "d:", "e:", "f:", "g:", "h:", "i:", "transfer:S2", "transfer:V3"] {
            assert!(
                s.results.iter().any(|r| r.law.starts_with(law) && r.is_applicable()),
                "{law} never applicable"
            );
        }
    }

    #[test]
    fn implication_reports_the_failed_conclusion() {
        let inst = z2xz2_swap(true);
        let out = implication(&[("anything", true)], || crate::lab::check_compatible(&inst));
        assert!(matches!(out, LawOutcome::Violated { witness: Some(_), .. }));
        let out = implication(&[("anything", false)], || unreachable!());
        assert!(matches!(out, LawOutcome::NotApplicable { .. }));
    }
}
