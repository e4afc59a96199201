//! Algebraic invariants of the polynomial arithmetic and the checkers, on
//! random polynomials over the default corpus.

use std::sync::LazyLock;

use proptest::prelude::*;
use skewlab_core::lab::fixtures::default_corpus;
use skewlab_core::lab::{check_condition_star, check_skew_armendariz, check_skew_mccoy, Instance, Witness};
use skewlab_core::search::Bounds;
use skewlab_core::{Elem, ModulePolynomial, SkewPolynomial};

static CORPUS: LazyLock<Vec<Instance>> = LazyLock::new(default_corpus);

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 0..=max_len)
}

fn reduce(raw: &[u32], size: usize) -> Vec<Elem> {
    raw.iter().map(|&c| (c as usize % size) as Elem).collect()
}

fn pick(idx: usize) -> &'static Instance {
    &CORPUS[idx % CORPUS.len()]
}

fn ring_poly(inst: &Instance, raw: &[u32]) -> SkewPolynomial {
    SkewPolynomial::new(reduce(raw, inst.ring().size()))
}

fn module_poly(inst: &Instance, raw: &[u32]) -> ModulePolynomial {
    ModulePolynomial::new(reduce(raw, inst.module().size()))
}

fn pair_key(w: &Witness) -> (ModulePolynomial, SkewPolynomial) {
    match w {
        Witness::McCoy { m, f } | Witness::Armendariz { m, f, .. } | Witness::Star { m, f, .. } => {
            (m.module_poly(), f.ring_poly())
        }
        other => panic!("unexpected witness {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_multiplication_is_associative(idx in 0usize..64, f in coeffs(3), g in coeffs(3), h in coeffs(3)) {
        let inst = pick(idx);
        let ext = inst.skew().ext();
        let (f, g, h) = (ring_poly(inst, &f), ring_poly(inst, &g), ring_poly(inst, &h));
        prop_assert_eq!(ext.mul(&ext.mul(&f, &g), &h), ext.mul(&f, &ext.mul(&g, &h)));
    }

    #[test]
    fn module_action_is_compatible_with_ring_product(idx in 0usize..64, m in coeffs(3), f in coeffs(3), g in coeffs(3)) {
        let inst = pick(idx);
        let sm = inst.skew();
        let (m, f, g) = (module_poly(inst, &m), ring_poly(inst, &f), ring_poly(inst, &g));
        prop_assert_eq!(sm.act(&sm.act(&m, &f), &g), sm.act(&m, &sm.ext().mul(&f, &g)));
    }

    #[test]
    fn action_distributes(idx in 0usize..64, m in coeffs(3), n in coeffs(3), f in coeffs(3), g in coeffs(3)) {
        let inst = pick(idx);
        let sm = inst.skew();
        let (m, n) = (module_poly(inst, &m), module_poly(inst, &n));
        let (f, g) = (ring_poly(inst, &f), ring_poly(inst, &g));
        prop_assert_eq!(sm.act(&sm.add(&m, &n), &f), sm.add(&sm.act(&m, &f), &sm.act(&n, &f)));
        prop_assert_eq!(sm.act(&m, &sm.ext().add(&f, &g)), sm.add(&sm.act(&m, &f), &sm.act(&m, &g)));
    }

    #[test]
    fn act_const_is_act_by_a_constant(idx in 0usize..64, m in coeffs(4), a in any::<u32>()) {
        let inst = pick(idx);
        let m = module_poly(inst, &m);
        let a = (a as usize % inst.ring().size()) as Elem;
        prop_assert_eq!(inst.skew().act_const(&m, a), inst.skew().act(&m, &SkewPolynomial::constant(a)));
    }

    #[test]
    fn degree_of_product_is_bounded(idx in 0usize..64, m in coeffs(4), f in coeffs(4)) {
        let inst = pick(idx);
        let (m, f) = (module_poly(inst, &m), ring_poly(inst, &f));
        let prod = inst.skew().act(&m, &f);
        match (m.degree(), f.degree()) {
            (Some(p), Some(q)) => prop_assert!(prod.degree().is_none_or(|d| d <= p + q)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn construction_normalizes(raw in coeffs(6), pad in 0usize..4) {
        let mut v = reduce(&raw, 4);
        let p = SkewPolynomial::new(v.clone());
        v.extend(std::iter::repeat_n(0, pad));
        let q = SkewPolynomial::new(v);
        prop_assert_eq!(&p, &q);
        prop_assert!(p.coeffs().last().is_none_or(|&c| c != 0));
        prop_assert_eq!(p.normalized(), p.clone());
        prop_assert_eq!(p.degree(), p.coeffs().len().checked_sub(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn failures_persist_at_larger_bounds(idx in 0usize..64, p in 0usize..2, q in 0usize..2, dp in 0usize..2, dq in 0usize..2) {
        let inst = pick(idx);
        let (small, large) = (Bounds::new(p, q), Bounds::new(p + dp, q + dq));
        for check in [check_skew_mccoy, check_skew_armendariz, check_condition_star] {
            let a = check(inst, small, 1);
            let b = check(inst, large, 1);
            if a.fails() {
                prop_assert!(b.fails());
                let (ka, kb) = (pair_key(a.witness.as_ref().unwrap()), pair_key(b.witness.as_ref().unwrap()));
                prop_assert!(kb <= ka, "{} at {}: {:?} then {:?}", a.property, large, ka, kb);
            }
        }
    }

    #[test]
    fn reports_do_not_depend_on_jobs(idx in 0usize..64, jobs in 2usize..9) {
        let inst = pick(idx);
        let b = Bounds::new(2, 2);
        for check in [check_skew_mccoy, check_skew_armendariz, check_condition_star] {
            let one = check(inst, b, 1);
            let many = check(inst, b, jobs);
            prop_assert_eq!(one.verdict, many.verdict);
            prop_assert_eq!(one.witness_json(), many.witness_json());
            prop_assert_eq!(one.pairs_scanned, many.pairs_scanned);
            prop_assert!(one.replay(inst));
        }
    }
}
