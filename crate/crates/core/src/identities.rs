//! Dimension identities relating Z-graded and Z/a-graded Hom spaces, and the
//! comparison of preprojective algebras with τ⁻-orbits over the path algebra.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::algiso::algebra_isomorphism;
use crate::constructions::{preprojective_algebra, PreprojectiveSigns};
use crate::decompose::ungraded_stable_end;
use crate::error::Result;
use crate::field::Field;
use crate::hom::{find_isomorphism, hom0, stable_hom0};
use crate::module::GradedModule;
use crate::quiver::Quiver;
use crate::resolution::tau_inverse;
use crate::structure::is_self_injective;
use crate::tilting::build_t;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomDecomposition {
    pub cyclic_order: i64,
    pub stable: bool,
    /// dim Hom(F_a X, F_a Y)₀.
    pub lhs: usize,
    /// (i, dim Hom(X, Y(ia))₀) over the support window.
    pub terms: Vec<(i64, usize)>,
}

impl HomDecomposition {
    pub fn rhs(&self) -> usize {
        self.terms.iter().map(|t| t.1).sum()
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

/// The shifts i for which X and Y(ia) have overlapping supports.
pub fn support_window(x: &GradedModule, y: &GradedModule, a: i64) -> Vec<i64> {
    let (Some(xmin), Some(xmax), Some(ymin), Some(ymax)) =
        (x.min_degree(), x.max_degree(), y.min_degree(), y.max_degree())
    else {
        return Vec::new();
    };
    // Y(ia) lives in degrees [ymin − ia, ymax − ia]
    let lo = (ymin - xmax).div_euclid(a) + i64::from((ymin - xmax).rem_euclid(a) != 0);
    let hi = (ymax - xmin).div_euclid(a);
    (lo..=hi).collect()
}

/// Hom_{Z/a}(F_a X, F_a Y)₀ = ⊕_i Hom(X, Y(ia))₀, plain or stable.
pub fn verify_hom_decomposition(
    x: &GradedModule,
    y: &GradedModule,
    a: i64,
    stable: bool,
) -> Result<HomDecomposition> {
    let dim = |p: &GradedModule, q: &GradedModule| -> Result<usize> {
        Ok(if stable {
            stable_hom0(p, q)?.dim()
        } else {
            hom0(p, q)?.dim()
        })
    };
    let lhs = dim(&x.forget_to_cyclic(a)?, &y.forget_to_cyclic(a)?)?;
    let terms = support_window(x, y, a)
        .into_iter()
        .map(|i| Ok((i, dim(x, &y.shift(i * a))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomDecomposition {
        cyclic_order: a,
        stable,
        lhs,
        terms,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Layer {
    pub degree: i64,
    pub dim_layer: usize,
    pub dim_tau: usize,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PreprojectiveReport {
    pub vertices: usize,
    pub dim_pi: usize,
    pub self_injective: bool,
    /// Π_i against τ⁻ⁱΛ, including the first degree where both vanish.
    pub layers: Vec<Layer>,
    pub gamma_dim: usize,
    pub stable_end_dim: usize,
    pub end_isomorphic: bool,
}

impl PreprojectiveReport {
    pub fn holds(&self) -> bool {
        self.self_injective && self.layers.iter().all(|l| l.isomorphic) && self.end_isomorphic
    }
}

/// Π_Λ as a graded module over Λ = Π₀.
pub fn preprojective_over_degree_zero(pi: &Arc<GradedAlgebra>) -> (Arc<GradedAlgebra>, GradedModule) {
    let (lambda, map) = pi.degree_zero_part();
    let restricted = GradedModule::regular(pi).restrict(&lambda, &map);
    (lambda, restricted)
}

pub fn verify_preprojective_identities(q: &Quiver, field: Field, seed: u64) -> Result<PreprojectiveReport> {
    let pi = preprojective_algebra(q, field, PreprojectiveSigns::Standard)?;
    let self_injective = is_self_injective(&pi).is_some();
    let (lambda, over_lambda) = preprojective_over_degree_zero(&pi);
    let top = pi.max_degree();
    let mut layers = Vec::new();
    let mut orbit = GradedModule::regular(&lambda);
    for i in 0..=top + 1 {
        let layer = over_lambda.truncate_below(i)?.0.truncate_above(i)?.0.shift(i);
        let u = layer.forget_to_cyclic(1)?;
        let v = orbit.forget_to_cyclic(1)?;
        let isomorphic = if u.is_zero() || v.is_zero() {
            u.dim() == v.dim()
        } else {
            find_isomorphism(&u, &v, seed)?.is_found()
        };
        layers.push(Layer {
            degree: i,
            dim_layer: layer.dim(),
            dim_tau: orbit.dim(),
            isomorphic,
        });
        orbit = if orbit.is_zero() { orbit } else { tau_inverse(&orbit)? };
    }
    let gamma = build_t(&pi)?.gamma_algebra();
    let (stable_end, _) = ungraded_stable_end(&over_lambda, seed)?;
    let end_isomorphic = if gamma.dim() == 0 || stable_end.dim() == 0 {
        gamma.dim() == stable_end.dim()
    } else {
        algebra_isomorphism(&gamma, &stable_end, seed).is_found()
    };
    Ok(PreprojectiveReport {
        vertices: pi.num_vertices(),
        dim_pi: pi.dim(),
        self_injective,
        layers,
        gamma_dim: gamma.dim(),
        stable_end_dim: stable_end.dim(),
        end_isomorphic,
    })
}
