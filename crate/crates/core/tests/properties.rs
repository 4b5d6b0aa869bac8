//! Property tests for the combinatorial layer.

use proptest::prelude::*;

use supergt::tableau::DEFAULT_CAP;
use supergt::{
    character, dimension, enumerate_supertableaux, patterns_to_tableau, serialize,
    tableau_to_patterns, CovariantWeight, SuperDims, YoungDiagram,
};

/// Small covariant weights: m, n in 1..=3, at most 6 boxes.
fn small_weight() -> impl Strategy<Value = CovariantWeight> {
    (1usize..=3, 1usize..=3, 0usize..=400).prop_map(|(m, n, seed)| {
        let all = supergt::enumerate_covariant_weights(SuperDims::new(m, n).unwrap(), 6);
        all[seed % all.len()].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugate_is_an_involution(rows in proptest::collection::vec(0i64..8, 0..6)) {
        let mut rows = rows;
        rows.sort_unstable_by(|a, b| b.cmp(a));
        let d = YoungDiagram::new(rows).unwrap();
        prop_assert_eq!(d.conjugate().conjugate(), d.normalize());
    }

    #[test]
    fn pattern_roundtrip_is_identity(lam in small_weight()) {
        for t in enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap() {
            let p = tableau_to_patterns(&t);
            prop_assert_eq!(patterns_to_tableau(&p, &lam).unwrap(), t);
        }
    }

    #[test]
    fn character_mass_equals_dimension(lam in small_weight()) {
        let ch = character(&lam, DEFAULT_CAP).unwrap();
        prop_assert_eq!(ch.total(), dimension(&lam, DEFAULT_CAP).unwrap());
        for (w, _) in ch.iter() {
            prop_assert_eq!(w.total(), lam.size());
        }
    }

    #[test]
    fn even_subtableau_is_within_multiplicity_bounds(lam in small_weight()) {
        let m = lam.dims().m();
        let n = lam.dims().n() as i64;
        for t in enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap() {
            let mu = t.mu();
            // mu is a partition and 0 <= lambda_i - mu_i <= n.
            prop_assert!(mu.windows(2).all(|w| w[0] >= w[1]));
            for (i, (&le, &me)) in lam.even().iter().zip(mu.iter()).enumerate().take(m) {
                prop_assert!((0..=n).contains(&(le - me)), "row {} of {}", i + 1, t);
            }
        }
    }

    #[test]
    fn bundle_serialization_roundtrip(lam in small_weight()) {
        let bundle = supergt::build_bundle(&lam, DEFAULT_CAP).unwrap();
        let back = serialize::load_bundle(&serialize::save_bundle(&bundle)).unwrap();
        prop_assert_eq!(back.basis(), bundle.basis());
        for (&(i, j), mat) in bundle.generators() {
            prop_assert_eq!(back.generator(i, j), mat);
        }
    }
}
