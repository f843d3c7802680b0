mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::{cached_examples, te_a, Q};
use gradtilt::algebra::GradedAlgebra;
use gradtilt::bimodule::build_m;
use gradtilt::constructions::*;
use gradtilt::structure::{gorenstein_parameter, is_symmetric};
use gradtilt::tilting::*;
use gradtilt::Field;

fn self_injective_algebra() -> impl Strategy<Value = Arc<GradedAlgebra>> {
    let field = prop_oneof![Just(Q), Just(Field::Prime { p: 2 }), Just(Field::Prime { p: 5 })];
    (field, 0usize..4, 1usize..=3).prop_map(|(f, kind, n)| match kind {
        0 => truncated_polynomial(f, n + 1).unwrap(),
        1 => square_zero_polynomial(f, n.min(2)).unwrap(),
        2 => nakayama(f, n, n + 1).unwrap(),
        _ => trivial_extension(&path_algebra_a(f, n).unwrap()).unwrap(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn t_has_no_self_extensions(a in self_injective_algebra()) {
        let t = build_t(&a).unwrap();
        prop_assert!(verify_no_self_ext(&t, 4).unwrap());
        prop_assert!(t.stable_equals_plain().unwrap());
        prop_assert!(verify_projective_orthogonality(&t, 2).unwrap());
    }

    #[test]
    fn gamma_matches_beilinson(a in self_injective_algebra()) {
        let t = build_t(&a).unwrap();
        let c = verify_gamma_is_beilinson(&t).unwrap();
        prop_assert!(c.verified);
        if c.on_the_nose {
            prop_assert_eq!(t.gamma_algebra().dim(), c.beilinson.dim());
        }
        prop_assert!(t.gamma_algebra().degrees().iter().all(|&d| d == 0));
    }

    #[test]
    fn bimodule_actions_commute(a in self_injective_algebra()) {
        let ell = gorenstein_parameter(&a).unwrap().unwrap();
        prop_assume!(ell >= 1);
        let b = build_m(&a).unwrap();
        prop_assert!(b.actions_commute());
    }
}

#[test]
fn last_summand_per_vertex_is_projective() {
    for (name, a) in cached_examples() {
        let t = build_t(a).unwrap();
        for v in 0..a.num_vertices() {
            let own: Vec<_> = t.summands.iter().filter(|s| s.vertex == v).collect();
            assert!(own.last().unwrap().projective, "{name}, vertex {v}");
            assert!(own[..own.len() - 1].iter().all(|s| !s.projective), "{name}, vertex {v}");
        }
    }
}

#[test]
fn symmetric_examples_have_self_dual_regular_module() {
    for (name, a) in cached_examples() {
        if !is_symmetric(a) {
            continue;
        }
        let ell = gorenstein_parameter(a).unwrap().unwrap();
        assert!(verify_dual_regular(a, ell, 0).unwrap(), "{name}");
    }
}

#[test]
fn gamma_of_trivial_extension_is_the_path_algebra() {
    for n in 1..=3 {
        let t = build_t(&te_a(n)).unwrap();
        assert_eq!(t.gamma_algebra().dim(), n * (n + 1) / 2);
    }
}

#[test]
fn path_algebras_are_rejected() {
    let ka = path_algebra_a(Q, 2).unwrap();
    assert!(build_t(&ka).is_err());
}
