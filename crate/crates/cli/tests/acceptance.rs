//! Acceptance criteria, one PASS/FAIL line each. Every check is exact; the
//! runtime budgets are printed next to the measured time.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use skewlab_cli::descriptor::{read_corpus, InstanceDescriptor};
use skewlab_core::lab::{
    check_compatible, check_condition_star, check_mccoy, check_skew_armendariz, check_skew_mccoy, run_law_suite,
    CompatClause, ElemRef, Instance, LawOutcome, PropertyReport, Witness,
};
use skewlab_core::{
    build_product, build_vn, build_zmod, ideal_from_generators, iso_phi, iso_phi_module, quotient_module,
    regular_module, validate_endomorphism, Bounds, Elem, FiniteModule, FiniteRing, ModulePolynomial,
    OreExtension, QuasiDerivation, RingEndomorphism, Side, SkewPolynomial,
};

const B11: Bounds = Bounds::new(1, 1);
const B22: Bounds = Bounds::new(2, 2);
const MAX_J: usize = 4;

struct Outcome {
    failures: Vec<String>,
    detail: String,
    /// Witness JSON compared across worker counts.
    witnesses: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), detail: String::new(), witnesses: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn record(&mut self, report: &PropertyReport) {
        self.witnesses.push(serde_json::to_string(&report.witness).unwrap());
    }
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn load(rel: &str) -> Instance {
    InstanceDescriptor::from_file(&data(rel)).and_then(|d| d.build()).unwrap_or_else(|e| panic!("{e}"))
}

fn corpus() -> Vec<Instance> {
    read_corpus(&data("corpus/default.json"))
        .unwrap()
        .into_iter()
        .map(|d| d.and_then(|d| d.build()).unwrap_or_else(|e| panic!("{e}")))
        .collect()
}

fn label_is(r: &ElemRef, l: &str) -> bool {
    r.label == l
}

fn swap_inner_instance(jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let inst = load("instances/exp25.json");
    let ring = inst.ring();
    let e = |l: &str| ring.find_label(l).unwrap();
    let p = SkewPolynomial::new(vec![0, e("(1,0)")]);
    let q = SkewPolynomial::new(vec![e("(1,1)"), e("(1,0)")]);
    o.require(inst.skew().ext().mul(&p, &q).is_zero(), "p q != 0");
    let pm = ModulePolynomial::new(p.coeffs().to_vec());
    let nonzero = ring.nonzero_elements().filter(|&a| !inst.skew().act_const(&pm, a).is_zero()).count();
    o.require(nonzero == 3, format!("p annihilated by {} nonzero constants", 3 - nonzero));

    let mc = check_skew_mccoy(&inst, B11, jobs);
    o.record(&mc);
    match &mc.witness {
        Some(Witness::McCoy { f, .. }) => {
            let c = &f.coeffs;
            o.require(c.first() != Some(&0) || c.last() != Some(&0), "witness f has zero lead and constant");
            o.require(mc.replay(&inst), "skew-mccoy witness does not replay");
        }
        other => o.require(false, format!("skew-mccoy: {:?} {other:?}", mc.verdict)),
    }
    let plain = check_mccoy(&inst, B22, jobs);
    o.record(&plain);
    o.require(plain.holds(), format!("mccoy (2,2): {:?}", plain.verdict));
    let compat = check_compatible(&inst);
    o.record(&compat);
    match &compat.witness {
        Some(Witness::Compatibility { m, a, .. }) => {
            o.require(label_is(m, "(0,1)") && label_is(a, "(1,0)"), format!("compat witness m={}, a={}", m.label, a.label))
        }
        other => o.require(false, format!("compatible: {other:?}")),
    }
    o.detail = format!("skew-mccoy witness f = {}", mc.witness.as_ref().map(witness_f).unwrap_or_default());
    o
}

fn witness_f(w: &Witness) -> String {
    match w {
        Witness::McCoy { f, .. } | Witness::Star { f, .. } | Witness::Armendariz { f, .. } => f.text.clone(),
        _ => String::new(),
    }
}

fn condition_star_residue(jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let inst = load("instances/exp25.json");
    let star = check_condition_star(&inst, B11, jobs);
    o.record(&star);
    match &star.witness {
        Some(Witness::Star { r, residue, .. }) => {
            let ring = inst.ring();
            let ten = ring.find_label("(1,0)").unwrap();
            o.require(r.index == ten, format!("r = {}", r.label));
            o.require(residue.coeffs == vec![ten, ten], format!("residue = {}", residue.text));
            o.require(star.replay(&inst), "star witness does not replay");
            o.detail = format!("residue {} for r = {}", residue.text, r.label);
        }
        other => o.require(false, format!("star: {:?} {other:?}", star.verdict)),
    }
    o
}

fn truncated_eval_at_zero(_jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let inst = load("instances/ex212.json");
    let ring = inst.ring();
    let (f, g) = (ring.find_label("1+x").unwrap(), ring.find_label("x").unwrap());
    o.require(ring.label(ring.mul(f, g)) == "x+x^2", "fg != x+x^2");
    o.require(ring.mul(f, inst.sigma(g)) == 0, "f sigma(g) != 0");
    let compat = check_compatible(&inst);
    o.record(&compat);
    o.require(compat.fails(), format!("compatible: {:?}", compat.verdict));
    // The scan reports the first violation in canonical order, (1, x); the
    // pair (1+x, x) is the same clause and is confirmed by replay.
    let stated = Witness::Compatibility { clause: CompatClause::BackwardSigma, m: inst.m_ref(f), a: inst.r_ref(g) };
    o.require(stated.replay(&inst), "(1+x, x) does not replay");
    match &compat.witness {
        Some(Witness::Compatibility { clause, m, a }) => {
            o.require(*clause == CompatClause::BackwardSigma && label_is(a, "x"), format!("{clause:?} at a={}", a.label));
            o.detail = format!("reported (m, a) = ({}, {}); (1+x, x) replays", m.label, a.label);
        }
        other => o.require(false, format!("compatible: {other:?}")),
    }
    o
}

fn upper_triangular_s4(jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let inst = load("instances/s4z2.json");
    let mc = check_mccoy(&inst, B11, jobs);
    o.record(&mc);
    o.require(mc.holds(), format!("mccoy (1,1): {:?}", mc.verdict));
    let arm = check_skew_armendariz(&inst, B11, jobs);
    o.record(&arm);
    o.require(arm.fails() && arm.replay(&inst), format!("skew-armendariz (1,1): {:?}", arm.verdict));
    o.detail = format!("mccoy scanned {} pairs, armendariz {} pairs", mc.pairs_scanned, arm.pairs_scanned);
    o
}

/// Sum over all `σ`/`δ` words of length `j` with `i` letters `σ`.
fn word_sum(qd: &QuasiDerivation, i: usize, j: usize, a: Elem) -> Elem {
    let ring = qd.ring();
    let mut total = ring.zero();
    for word in 0u32..(1 << j) {
        if word.count_ones() as usize == i {
            let mut v = a;
            for bit in 0..j {
                v = if word >> bit & 1 == 1 { qd.sigma().apply(v) } else { qd.delta().apply(v) };
            }
            total = ring.add(total, v);
        }
    }
    total
}

fn f_oracle(_jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let mut compared = 0usize;
    for inst in corpus() {
        let qd = inst.qd();
        let ext = OreExtension::new(qd.clone());
        for a in qd.ring().elements() {
            for j in 0..=MAX_J {
                let mut expansion = Vec::with_capacity(j + 1);
                for i in 0..=j {
                    let got = qd.f_op(i, j, a).unwrap();
                    compared += 1;
                    if got != word_sum(qd, i, j, a) {
                        o.failures.push(format!("{}: f_{i}^{j}({a})", inst.name()));
                    }
                    expansion.push(got);
                }
                if SkewPolynomial::new(expansion) != ext.mul(&ext.x_pow(j), &SkewPolynomial::constant(a)) {
                    o.failures.push(format!("{}: x^{j} * {a}", inst.name()));
                }
            }
        }
    }
    o.detail = format!("{compared} values compared");
    o
}

fn endomorphisms(ring: &Arc<FiniteRing>) -> Vec<RingEndomorphism> {
    let n = ring.size();
    (0..n.pow(n as u32))
        .filter_map(|mut k| {
            let images: Vec<Elem> = (0..n)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d as Elem
                })
                .collect();
            validate_endomorphism(ring, &images).ok()
        })
        .collect()
}

fn modules(ring: &Arc<FiniteRing>) -> Vec<Arc<FiniteModule>> {
    let mut out = vec![regular_module(ring)];
    for g in ring.nonzero_elements() {
        let ideal = ideal_from_generators(ring, &[g], Side::TwoSided).unwrap();
        if ideal.members().len() < ring.size() {
            out.push(quotient_module(&ideal).unwrap());
        }
    }
    out
}

fn isomorphisms(_jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let z2 = build_zmod(2).unwrap();
    let rings = [
        z2.clone(),
        build_zmod(3).unwrap(),
        build_zmod(4).unwrap(),
        build_product(&[z2.clone(), z2.clone()]).unwrap(),
        build_vn(&z2, 2).unwrap(),
    ];
    let mut maps = 0;
    for ring in &rings {
        for sigma in endomorphisms(ring) {
            for n in [2, 3] {
                let iso = match iso_phi(ring, &sigma, n) {
                    Ok(iso) => iso,
                    Err(e) => {
                        o.failures.push(format!("{}, n={n}: {e}", ring.construction().describe()));
                        continue;
                    }
                };
                let (s, t, phi) = (&iso.source, &iso.target, &iso.phi);
                for a in s.elements() {
                    for b in s.elements() {
                        if phi.apply(s.mul(a, b)) != t.mul(phi.apply(a), phi.apply(b)) {
                            o.failures.push(format!("{}, n={n}: phi not multiplicative", ring.construction().describe()));
                        }
                    }
                }
                for module in modules(ring) {
                    maps += 1;
                    match iso_phi_module(&module, &sigma, n) {
                        Ok(m) => {
                            for u in m.source.elements() {
                                for a in m.ring.source.elements() {
                                    let lhs = m.phi.apply(m.source.act(u, a));
                                    if lhs != m.target.act(m.phi.apply(u), m.ring.phi.apply(a)) {
                                        o.failures.push(format!("{}, n={n}: module map", ring.construction().describe()));
                                    }
                                }
                            }
                        }
                        Err(e) => o.failures.push(format!("{}, n={n}: {e}", ring.construction().describe())),
                    }
                }
            }
        }
    }
    o.detail = format!("{maps} module isomorphisms verified");
    o
}

fn law_suite(jobs: usize) -> Outcome {
    let mut o = Outcome::new();
    let suite = run_law_suite(&corpus(), B22, jobs);
    o.require(suite.transfer_bounds == B11, "transfer bounds are not (1,1)");
    for r in suite.results.iter().filter(|r| r.is_violation()) {
        o.failures.push(format!("{} on {}", r.law, r.instance));
    }
    let required = [
        "a:", "b:", "c:", "d:", "e:", "f:", "g:", "h:", "i:", "transfer:S2", "transfer:V2", "transfer:V2-sigma",
        "transfer:S3", "transfer:V3", "transfer:V3-sigma",
    ];
    for prefix in required {
        let covered = suite.results.iter().any(|r| r.law.starts_with(prefix) && r.is_applicable());
        o.require(covered, format!("law {prefix} never applicable"));
    }
    for r in &suite.results {
        if let LawOutcome::Violated { witness, .. } = &r.outcome {
            o.witnesses.push(serde_json::to_string(witness).unwrap());
        }
    }
    o.witnesses.push(serde_json::to_string(&suite.results).unwrap());
    let applicable = suite.results.iter().filter(|r| r.is_applicable()).count();
    o.detail = format!("{} instances, {} checks, {applicable} applicable, {} violations", suite.instances.len(), suite.results.len(), suite.violations);
    o
}

type Criterion = (&'static str, fn(usize) -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 swap with inner derivation: null pair, verdicts, compatibility witness", swap_inner_instance, Duration::from_secs(5)),
        ("2 condition (*) residue on the swap instance", condition_star_residue, Duration::from_secs(1)),
        ("3 compatibility failure on Z2[x]/(x^3) with evaluation at zero", truncated_eval_at_zero, Duration::from_secs(1)),
        ("4 S4(Z2) McCoy but not Armendariz", upper_triangular_s4, Duration::from_secs(600)),
        ("5 f operator oracle", f_oracle, Duration::from_secs(30)),
        ("6 coefficient isomorphisms", isomorphisms, Duration::from_secs(60)),
        ("7 law suite on the bundled corpus", law_suite, Duration::from_secs(900)),
    ];
    let mut failed = 0;
    let mut first_run = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let out = run(1);
        let elapsed = start.elapsed();
        let mut problems = out.failures.clone();
        if elapsed > budget {
            problems.push(format!("over budget {budget:?}"));
        }
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        failed += usize::from(!problems.is_empty());
        println!("{status} {name} ({:.2?} / {budget:?}): {}", elapsed, out.detail);
        for p in problems.iter().take(10) {
            println!("    {p}");
        }
        first_run.push(out.witnesses);
    }

    // 8: rerun the witness-producing criteria with eight workers.
    let start = Instant::now();
    let mut diffs = Vec::new();
    for ((name, run, _), before) in criteria.iter().zip(&first_run) {
        if before.is_empty() {
            continue;
        }
        if &run(8).witnesses != before {
            diffs.push(*name);
        }
    }
    let status = if diffs.is_empty() { "PASS" } else { "FAIL" };
    failed += usize::from(!diffs.is_empty());
    println!("{status} 8 determinism across --jobs 1 and 8 ({:.2?}): differing {diffs:?}", start.elapsed());

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
