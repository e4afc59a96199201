//! The worked examples: exact polynomials, verdicts and witnesses.

use skewlab_core::lab::fixtures::{regular_identity, truncated_eval_at_zero, z2xz2, z2xz2_swap};
use skewlab_core::lab::*;
use skewlab_core::search::Bounds;
use skewlab_core::{build_sn, build_zmod, ModulePolynomial, SkewPolynomial};

const B11: Bounds = Bounds::new(1, 1);
const B22: Bounds = Bounds::new(2, 2);

#[test]
fn swap_with_inner_derivation_null_product() {
    let inst = z2xz2_swap(true);
    let ring = inst.ring();
    let e = |l: &str| ring.find_label(l).unwrap();
    let ext = inst.skew().ext();
    let p = SkewPolynomial::new(vec![0, e("(1,0)")]);
    let q = SkewPolynomial::new(vec![e("(1,1)"), e("(1,0)")]);
    assert!(ext.mul(&p, &q).is_zero());
    let pm = ModulePolynomial::new(p.coeffs().to_vec());
    for a in ring.nonzero_elements() {
        assert!(!inst.skew().act_const(&pm, a).is_zero(), "{}", ring.label(a));
    }
    // δ((1,0)) = (1,0) - (0,1) = (1,1), as the compatibility failure states.
    assert_eq!(ring.label(inst.delta(e("(1,0)"))), "(1,1)");
}

#[test]
fn swap_with_inner_derivation_verdicts() {
    let inst = z2xz2_swap(true);
    let mc = check_skew_mccoy(&inst, B11, 1);
    let Some(Witness::McCoy { f, .. }) = &mc.witness else { panic!("{mc:?}") };
    let fp = f.ring_poly();
    assert!(!fp.is_zero());
    assert!(mc.replay(&inst));
    assert!(check_mccoy(&inst, B22, 1).holds());
    let compat = check_compatible(&inst);
    let Some(Witness::Compatibility { m, a, .. }) = &compat.witness else { panic!() };
    assert_eq!((m.label.as_str(), a.label.as_str()), ("(0,1)", "(1,0)"));
}

#[test]
fn star_residue_for_the_null_pair() {
    let inst = z2xz2_swap(true);
    let r = check_condition_star(&inst, B11, 1);
    let Some(Witness::Star { m, f, r: c, residue }) = &r.witness else { panic!() };
    assert_eq!((m.text.as_str(), f.text.as_str()), ("(1,0)*x", "(1,1) + (1,0)*x"));
    assert_eq!(c.label, "(1,0)");
    assert_eq!(residue.text, "(1,0) + (1,0)*x");
}

#[test]
fn truncated_polynomials_with_eval_at_zero() {
    let inst = truncated_eval_at_zero();
    let ring = inst.ring();
    let (f, g) = (ring.find_label("1+x").unwrap(), ring.find_label("x").unwrap());
    assert_eq!(ring.label(ring.mul(f, g)), "x+x^2");
    assert_eq!(ring.mul(f, inst.sigma(g)), 0);
    assert!(check_compatible(&inst).fails());
}

#[test]
fn upper_triangular_four_by_four() {
    let z2 = build_zmod(2).unwrap();
    let inst = regular_identity("s4(z2)", &build_sn(&z2, 4).unwrap());
    assert!(check_mccoy(&inst, B11, 4).holds());
    let arm = check_skew_armendariz(&inst, B11, 4);
    assert!(arm.fails());
    assert!(arm.replay(&inst));
    assert!(arm.pairs_scanned > 0);
}

#[test]
fn commutative_reduced_ring_is_semicommutative_and_reduced() {
    let inst = regular_identity("z2xz2", &z2xz2());
    assert!(check_semicommutative(&inst).holds());
    assert!(check_reduced(&inst).holds());
    assert!(check_strong_annihilation(&inst, B22, 1).holds());
    assert!(check_square_cancellation_lemma(&inst).holds());
}
