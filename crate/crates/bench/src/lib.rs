//! Fixtures shared by the criterion benchmarks.

use skewlab_core::lab::fixtures::regular_identity;
use skewlab_core::lab::Instance;
use skewlab_core::{build_sn, build_zmod};

/// Regular `S_4(Z_2)` with the identity quasi-derivation: the largest
/// instance the worked examples search.
pub fn s4_z2() -> Instance {
    let z2 = build_zmod(2).expect("Z2");
    regular_identity("s4(z2)", &build_sn(&z2, 4).expect("S4(Z2)"))
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixture_sizes() {
        assert_eq!(super::s4_z2().ring().size(), 1 << 7);
    }
}
