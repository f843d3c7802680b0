mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::{cached_examples, random_module, rng};
use gradtilt::algebra::GradedAlgebra;
use gradtilt::hom::{find_isomorphism, hom0, is_homomorphism, stable_hom0};
use gradtilt::identities::verify_hom_decomposition;
use gradtilt::matrix::Matrix;
use gradtilt::module::{GradedModule, Grading};
use gradtilt::resolution::{
    cosyzygy, projective_cover, radical_submodule, strip_projectives, syzygy, verify_truncation_exact,
};

fn setup() -> impl Strategy<Value = (Arc<GradedAlgebra>, u64)> {
    (0..cached_examples().len(), any::<u64>()).prop_map(|(i, s)| (cached_examples()[i].1.clone(), s))
}

fn modules(a: &Arc<GradedAlgebra>, seed: u64, n: usize) -> Vec<GradedModule> {
    let mut r = rng(seed);
    (0..n).map(|_| random_module(a, 10, &mut r)).collect()
}

fn iso(x: &GradedModule, y: &GradedModule) -> bool {
    x.dim() == y.dim() && (x.is_zero() || find_isomorphism(x, y, 0).unwrap().is_found())
}

fn top(x: &GradedModule) -> GradedModule {
    x.quotient_by(&radical_submodule(x)).0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn double_dual_is_identity((a, seed) in setup()) {
        let x = &modules(&a, seed, 1)[0];
        let dd = x.dual().dual();
        prop_assert!(dd.check_axioms());
        prop_assert!(iso(&dd, x));
    }

    #[test]
    fn projective_cover_preserves_top((a, seed) in setup()) {
        let x = &modules(&a, seed, 1)[0];
        let cover = projective_cover(x);
        prop_assert!(is_homomorphism(&cover.module, x, &cover.map));
        prop_assert_eq!(cover.map.rank(), x.dim());
        prop_assert_eq!(top(&cover.module).dim_vector(), top(x).dim_vector());
    }

    #[test]
    fn syzygy_and_cosyzygy_are_inverse((a, seed) in setup()) {
        let x = &modules(&a, seed, 1)[0];
        let stripped = strip_projectives(x).0;
        prop_assert!(iso(&cosyzygy(&syzygy(x)).unwrap(), &stripped));
        prop_assert!(iso(&syzygy(&cosyzygy(x).unwrap()), &stripped));
    }

    #[test]
    fn syzygy_commutes_with_shift((a, seed) in setup(), j in -2i64..=2) {
        let x = &modules(&a, seed, 1)[0];
        prop_assert!(iso(&syzygy(&x.shift(j)), &syzygy(x).shift(j)));
    }

    #[test]
    fn projectives_vanish_stably((a, seed) in setup(), v in 0usize..4, s in -2i64..=2) {
        let x = &modules(&a, seed, 1)[0];
        let p = GradedModule::projective(&a, v % a.num_vertices(), s, Grading::Z);
        prop_assert_eq!(stable_hom0(&p, x).unwrap().dim(), 0);
        prop_assert_eq!(stable_hom0(x, &p).unwrap().dim(), 0);
    }

    #[test]
    fn hom_composition((a, seed) in setup()) {
        let ms = modules(&a, seed, 3);
        let (x, y, z) = (&ms[0], &ms[1], &ms[2]);
        let id = Matrix::identity(x.field(), x.dim());
        prop_assert!(is_homomorphism(x, x, &id));
        let hxy = hom0(x, y).unwrap();
        let hyz = hom0(y, z).unwrap();
        for f in hxy.basis() {
            for g in hyz.basis() {
                prop_assert!(is_homomorphism(x, z, &f.mul(g)));
            }
        }
    }

    #[test]
    fn cyclic_hom_decomposition((a, seed) in setup(), order in 1i64..=3) {
        let ms = modules(&a, seed, 2);
        for stable in [false, true] {
            let d = verify_hom_decomposition(&ms[0], &ms[1], order, stable).unwrap();
            prop_assert!(d.holds(), "{:?}", d);
        }
    }

    #[test]
    fn truncation_sequences_are_exact((a, seed) in setup(), i in -2i64..=3) {
        let x = &modules(&a, seed, 1)[0];
        prop_assert!(verify_truncation_exact(x, i).unwrap());
    }
}
