mod common;

use proptest::prelude::*;

use common::{cached_examples, random_module, rng, te_a, Q};
use gradtilt::arquiver::ar_quiver;
use gradtilt::constructions::*;
use gradtilt::decompose::decompose;
use gradtilt::hom::find_isomorphism;
use gradtilt::module::{GradedModule, Grading};
use gradtilt::resolution::{is_projective, tau};

fn iso(x: &GradedModule, y: &GradedModule) -> bool {
    x.dim() == y.dim() && (x.is_zero() || find_isomorphism(x, y, 0).unwrap().is_found())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_then_reassemble(i in 0..cached_examples().len(), seed in any::<u64>()) {
        let a = &cached_examples()[i].1;
        let x = random_module(a, 10, &mut rng(seed));
        let pieces = decompose(&x, seed).unwrap();
        let parts: Vec<GradedModule> = pieces
            .iter()
            .flat_map(|(m, k)| std::iter::repeat(m.clone()).take(*k))
            .collect();
        prop_assert_eq!(parts.iter().map(|p| p.dim()).sum::<usize>(), x.dim());
        let (sum, _) = GradedModule::direct_sum(a, Grading::Z, &parts);
        prop_assert!(iso(&sum, &x));
    }

    #[test]
    fn tau_commutes_with_shift(i in 0..cached_examples().len(), seed in any::<u64>(), j in -2i64..=2) {
        let a = &cached_examples()[i].1;
        let x = random_module(a, 8, &mut rng(seed));
        prop_assert!(iso(&tau(&x.shift(j)).unwrap(), &tau(&x).unwrap().shift(j)));
    }

    #[test]
    fn tau_keeps_indecomposable_non_projectives(i in 0..cached_examples().len(), seed in any::<u64>()) {
        let a = &cached_examples()[i].1;
        let x = random_module(a, 8, &mut rng(seed));
        for (m, _) in decompose(&x, 0).unwrap() {
            if is_projective(&m) {
                continue;
            }
            let t = tau(&m).unwrap();
            prop_assert!(!t.is_zero() && !is_projective(&t));
            prop_assert_eq!(decompose(&t, 0).unwrap().len(), 1);
        }
    }
}

#[test]
fn mesh_relations_hold_on_examples() {
    let cases = vec![
        ("K[x]/(x^4)", truncated_polynomial(Q, 3).unwrap(), (-1, 2)),
        ("Pi(A3)", common::pi_a(3), (0, 1)),
        ("TE(KA2)", te_a(2), (0, 2)),
    ];
    for (name, a, (lo, hi)) in cases {
        let q = ar_quiver(&a, lo, hi, 0).unwrap();
        assert!(!q.vertices.is_empty(), "{name}");
        assert!(q.mesh_violations().is_empty(), "{name}: {:?}", q.mesh_violations());
        assert!(!q.tau_arrows.is_empty(), "{name}");
    }
}

#[test]
fn representation_infinite_input_stops() {
    let a = square_zero_polynomial(Q, 2).unwrap();
    assert!(matches!(ar_quiver(&a, 0, 1, 0), Err(gradtilt::Error::WindowNotClosed(_))));
}

#[test]
fn quartic_has_three_classes_in_a_za3_strip() {
    let a = truncated_polynomial(Q, 3).unwrap();
    let q = ar_quiver(&a, 0, 2, 0).unwrap();
    assert_eq!(q.classes.len(), 3);
    let dims: Vec<usize> = q.classes.iter().map(|c| c.representative.dim()).collect();
    assert_eq!(dims, vec![3, 2, 1]);
}

#[test]
fn dot_is_independent_of_seed() {
    let a = te_a(2);
    let reference = ar_quiver(&a, 0, 2, 0).unwrap().to_dot();
    for seed in [1, 17, 12345] {
        assert_eq!(ar_quiver(&a, 0, 2, seed).unwrap().to_dot(), reference);
    }
}

#[test]
fn zero_width_window_is_all_boundary() {
    let a = truncated_polynomial(Q, 2).unwrap();
    let q = ar_quiver(&a, 1, 1, 0).unwrap();
    assert!(q.vertices.iter().all(|v| v.boundary));
    assert!(q.tau_arrows.is_empty());
}

#[test]
fn non_self_injective_is_rejected() {
    let ka = path_algebra_a(Q, 2).unwrap();
    assert!(ar_quiver(&ka, 0, 1, 0).is_err());
}
