//! `f_i^j` against an independent word-sum computation, and the expansion
//! `x^j a = Σ f_i^j(a) x^i` against iterated left multiplication by `x`.

use std::sync::Arc;

use skewlab_core::lab::fixtures::default_corpus;
use skewlab_core::lab::Instance;
use skewlab_core::{lift_entrywise, Elem, OreExtension, QuasiDerivation, SkewPolynomial};

const MAX_J: usize = 4;

/// Sum over all words in `σ`, `δ` of length `j` with exactly `i` letters `σ`.
fn word_sum(qd: &QuasiDerivation, i: usize, j: usize, a: Elem) -> Elem {
    let ring = qd.ring();
    let mut total = ring.zero();
    for word in 0u32..(1 << j) {
        if word.count_ones() as usize != i {
            continue;
        }
        let mut v = a;
        for bit in 0..j {
            v = if word >> bit & 1 == 1 { qd.sigma().apply(v) } else { qd.delta().apply(v) };
        }
        total = ring.add(total, v);
    }
    total
}

/// `x · p` computed coefficientwise from `x c = σ(c) x + δ(c)`.
fn x_times(qd: &QuasiDerivation, p: &[Elem]) -> Vec<Elem> {
    let ring = qd.ring();
    let mut out = vec![ring.zero(); p.len() + 1];
    for (k, &c) in p.iter().enumerate() {
        out[k + 1] = ring.add(out[k + 1], qd.sigma().apply(c));
        out[k] = ring.add(out[k], qd.delta().apply(c));
    }
    out
}

fn quasi_derivations() -> Vec<(String, Arc<QuasiDerivation>)> {
    let mut out = Vec::new();
    for inst in default_corpus() {
        out.push((inst.name().to_string(), inst.qd().clone()));
    }
    let inner = default_corpus().into_iter().find(|i| i.name() == "z2xz2-swap-inner").unwrap();
    let s2 = skewlab_core::build_sn(inner.ring(), 2).unwrap();
    out.push(("S2(z2xz2-swap-inner)".into(), Arc::new(lift_entrywise(inner.qd(), &s2).unwrap())));
    out
}

#[test]
fn f_op_matches_word_sums() {
    let mut mismatches = 0;
    for (name, qd) in quasi_derivations() {
        for j in 0..=MAX_J {
            for i in 0..=j {
                for a in qd.ring().elements() {
                    let got = qd.f_op(i, j, a).unwrap();
                    if got != word_sum(&qd, i, j, a) {
                        mismatches += 1;
                        eprintln!("{name}: f_{i}^{j}({a})");
                    }
                }
            }
        }
    }
    assert_eq!(mismatches, 0);
}

#[test]
fn x_power_times_constant_expands_through_f() {
    for (name, qd) in quasi_derivations() {
        let ext = OreExtension::new(qd.clone());
        for a in qd.ring().elements() {
            let mut iterated = vec![a];
            for j in 0..=MAX_J {
                let expected = SkewPolynomial::new(iterated.clone());
                let via_f = SkewPolynomial::new((0..=j).map(|i| qd.f_op(i, j, a).unwrap()).collect());
                let via_mul = ext.mul(&ext.x_pow(j), &SkewPolynomial::constant(a));
                assert_eq!(via_f, expected, "{name}: x^{j} * {a} via f");
                assert_eq!(via_mul, expected, "{name}: x^{j} * {a} via mul");
                iterated = x_times(&qd, &iterated);
            }
        }
    }
}

#[test]
fn out_of_range_indices_are_rejected() {
    let inst: Instance = default_corpus().remove(0);
    assert!(inst.qd().f_op(3, 2, 1).is_err());
    assert!(inst.qd().f_op(0, 0, 99).is_err());
}
