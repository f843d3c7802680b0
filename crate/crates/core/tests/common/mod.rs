#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gradtilt::algebra::GradedAlgebra;
use gradtilt::constructions::*;
use gradtilt::module::{GradedModule, Grading};
use gradtilt::Field;

pub const Q: Field = Field::Rational;

pub fn te_a(n: usize) -> Arc<GradedAlgebra> {
    let lambda = path_algebra_a(Q, n).unwrap().degree_zero_part().0;
    trivial_extension(&lambda).unwrap()
}

pub fn pi_a(n: usize) -> Arc<GradedAlgebra> {
    preprojective_algebra(&linear_quiver(n), Q, PreprojectiveSigns::Standard).unwrap()
}

/// The self-injective example algebras, by name.
pub fn examples() -> Vec<(String, Arc<GradedAlgebra>)> {
    let mut out = Vec::new();
    for n in [2, 3] {
        out.push((format!("K[x]/(x^{})", n + 1), truncated_polynomial(Q, n).unwrap()));
    }
    for n in [2, 3] {
        out.push((format!("K[x1..x{n}]/(xi^2)"), square_zero_polynomial(Q, n).unwrap()));
    }
    for n in 1..=3 {
        out.push((format!("TE(KA{n})"), te_a(n)));
    }
    for n in 2..=4 {
        out.push((format!("Pi(A{n})"), pi_a(n)));
    }
    out
}

pub fn cached_examples() -> &'static [(String, Arc<GradedAlgebra>)] {
    static EXAMPLES: OnceLock<Vec<(String, Arc<GradedAlgebra>)>> = OnceLock::new();
    EXAMPLES.get_or_init(examples)
}

fn random_homogeneous(m: &GradedModule, rng: &mut ChaCha8Rng) -> Option<Vec<gradtilt::Scalar>> {
    let blocks: Vec<_> = m.blocks().into_values().collect();
    if blocks.is_empty() {
        return None;
    }
    let r = blocks[rng.gen_range(0..blocks.len())].clone();
    let f = m.field();
    let mut v = vec![f.zero(); m.dim()];
    for i in r {
        v[i] = f.from_i64(rng.gen_range(-2..=2));
    }
    Some(v)
}

/// A sum of up to three subquotients of shifted indecomposable projectives,
/// of dimension between 1 and `max_dim`.
pub fn random_module(a: &Arc<GradedAlgebra>, max_dim: usize, rng: &mut ChaCha8Rng) -> GradedModule {
    loop {
        let parts = rng.gen_range(1..=3);
        let mut pieces = Vec::new();
        for _ in 0..parts {
            let v = rng.gen_range(0..a.num_vertices());
            let p = GradedModule::projective(a, v, rng.gen_range(-1..=1), Grading::Z);
            let piece = match rng.gen_range(0..3) {
                0 => p,
                1 => {
                    let gens: Vec<_> = (0..rng.gen_range(1..=2))
                        .filter_map(|_| random_homogeneous(&p, rng))
                        .collect();
                    p.quotient(&gens).0
                }
                _ => {
                    let gens: Vec<_> = (0..rng.gen_range(1..=2))
                        .filter_map(|_| random_homogeneous(&p, rng))
                        .collect();
                    p.submodule(&p.generated_submodule(&gens)).0
                }
            };
            pieces.push(piece);
        }
        let (m, _) = GradedModule::direct_sum(a, Grading::Z, &pieces);
        if !m.is_zero() && m.dim() <= max_dim {
            return m;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
