//! `R[x;σ]/(x^n) ≅ V_n(R, σ)` and its module analogue, for every
//! endomorphism of every base ring with at most four elements.

use std::sync::Arc;

use skewlab_core::{
    build_product, build_vn, build_zmod, ideal_from_generators, iso_phi, iso_phi_module, quotient_module,
    regular_module, validate_endomorphism, Elem, FiniteModule, FiniteRing, RingEndomorphism, Side,
};

fn small_rings() -> Vec<(&'static str, Arc<FiniteRing>)> {
    let z2 = build_zmod(2).unwrap();
    vec![
        ("Z2", z2.clone()),
        ("Z3", build_zmod(3).unwrap()),
        ("Z4", build_zmod(4).unwrap()),
        ("Z2xZ2", build_product(&[z2.clone(), z2.clone()]).unwrap()),
        ("V2(Z2)", build_vn(&z2, 2).unwrap()),
    ]
}

/// Every endomorphism, found by trying all maps `R → R`.
fn endomorphisms(ring: &Arc<FiniteRing>) -> Vec<RingEndomorphism> {
    let n = ring.size();
    let total = n.pow(n as u32);
    (0..total)
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

#[test]
fn every_endomorphism_gives_isomorphisms() {
    let mut cases = 0;
    for (name, ring) in small_rings() {
        let endos = endomorphisms(&ring);
        assert!(!endos.is_empty(), "{name} has the identity");
        for sigma in &endos {
            for n in [2, 3] {
                let iso = iso_phi(&ring, sigma, n).unwrap_or_else(|e| panic!("{name}, n={n}: {e}"));
                // Independent check of the ring map on top of the built-in one.
                let (s, t, phi) = (&iso.source, &iso.target, &iso.phi);
                let mut seen = vec![false; t.size()];
                for a in s.elements() {
                    seen[phi.apply(a) as usize] = true;
                    for b in s.elements() {
                        assert_eq!(phi.apply(s.mul(a, b)), t.mul(phi.apply(a), phi.apply(b)));
                    }
                }
                assert!(seen.iter().all(|&x| x));
                for m in modules(&ring) {
                    let mi = iso_phi_module(&m, sigma, n).unwrap_or_else(|e| panic!("{name}, n={n}: {e}"));
                    for x in mi.source.elements() {
                        for a in mi.ring.source.elements() {
                            assert_eq!(
                                mi.phi.apply(mi.source.act(x, a)),
                                mi.target.act(mi.phi.apply(x), mi.ring.phi.apply(a))
                            );
                        }
                    }
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 20);
}

#[test]
fn endomorphism_counts() {
    let counts: Vec<usize> = small_rings().iter().map(|(_, r)| endomorphisms(r).len()).collect();
    // Z_n has only the identity; Z2 x Z2 has id, swap and the two projections
    // composed with the diagonal; V2(Z2) = Z2[t]/(t^2) has t -> 0 and t -> t.
    assert_eq!(counts, vec![1, 1, 1, 4, 2]);
}
