//! Structural predicates: self-injectivity, symmetry, Gorenstein parameter
//! and global dimension.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::{candidate_coefficients, find_isomorphism};
use crate::matrix::Matrix;
use crate::module::{GradedModule, Grading};
use crate::resolution::{strip_projectives, syzygy};
use crate::sparse::{normalize_row, SparseEchelon};

fn ungraded(m: &GradedModule) -> GradedModule {
    m.forget_to_cyclic(1).expect("Z-graded module")
}

/// Nakayama permutation σ with e_i A ≅ D(A e_σ(i)) as ungraded modules, or
/// `None` when A is not self-injective.
pub fn is_self_injective(a: &GradedAlgebra) -> Option<Vec<usize>> {
    a.nakayama_cached(|| nakayama_permutation(a))
}

fn nakayama_permutation(a: &GradedAlgebra) -> Option<Vec<usize>> {
    // rebuild an owned handle for module constructors
    let a = rebuild(a);
    let op = a.opposite();
    let n = a.num_vertices();
    let projectives: Vec<GradedModule> = (0..n)
        .map(|v| ungraded(&GradedModule::projective(&a, v, 0, Grading::Z)))
        .collect();
    let injectives: Vec<GradedModule> = (0..n)
        .map(|v| {
            let left = GradedModule::projective(&op, v, 0, Grading::Z);
            ungraded(&left.dual_over(a.clone()).expect("double opposite"))
        })
        .collect();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            if used[j] || projectives[i].dim() != injectives[j].dim() {
                continue;
            }
            if find_isomorphism(&projectives[i], &injectives[j], 0)
                .map(|r| r.is_found())
                .unwrap_or(false)
            {
                sigma[i] = j;
                used[j] = true;
                break;
            }
        }
        if sigma[i] == usize::MAX {
            return None;
        }
    }
    Some(sigma)
}

fn rebuild(a: &GradedAlgebra) -> Arc<GradedAlgebra> {
    // the opposite of the opposite has identical structure constants
    a.opposite().opposite()
}

/// Forms t: A → K with t(ab) = t(ba), optionally supported in one degree.
fn trace_forms(a: &GradedAlgebra, degree: Option<i64>) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let f = a.field();
    let mut eqs = SparseEchelon::new(f, n);
    for b in 0..n {
        if let Some(d) = degree {
            if a.degree(b) != d {
                eqs.insert(vec![(b, f.one())]);
            }
        }
    }
    for s in 0..n {
        for t in s + 1..n {
            let mut row: Vec<(usize, Scalar)> = a.product(s, t).clone();
            for (k, c) in a.product(t, s) {
                row.push((*k, -c));
            }
            let row = normalize_row(row);
            if !row.is_empty() {
                eqs.insert(row);
            }
        }
    }
    eqs.kernel_basis()
}

fn gram(a: &GradedAlgebra, t: &[Scalar]) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let mut g = Matrix::zeros(f, n, n);
    for s in 0..n {
        for u in 0..n {
            let mut acc = f.zero();
            for (k, c) in a.product(s, u) {
                if !t[*k].is_zero() {
                    acc = &acc + &(c * &t[*k]);
                }
            }
            g.set(s, u, acc);
        }
    }
    g
}

/// A nondegenerate symmetrizing form, optionally supported in one degree.
pub fn symmetrizing_form(a: &GradedAlgebra, degree: Option<i64>, seed: u64) -> Option<Vec<Scalar>> {
    let forms = trace_forms(a, degree);
    let f = a.field();
    for c in candidate_coefficients(f, forms.len(), seed) {
        let mut t = vec![f.zero(); a.dim()];
        for (form, ci) in forms.iter().zip(&c) {
            if ci.is_zero() {
                continue;
            }
            for (k, x) in form.iter().enumerate() {
                if !x.is_zero() {
                    t[k] = &t[k] + &(ci * x);
                }
            }
        }
        if gram(a, &t).is_invertible() {
            return Some(t);
        }
    }
    None
}

pub fn is_symmetric(a: &GradedAlgebra) -> bool {
    symmetrizing_form(a, None, 0).is_some()
}

/// ℓ with Soc A ⊆ A_ℓ.
pub fn gorenstein_parameter(a: &GradedAlgebra) -> Result<Option<i64>> {
    if !a.is_positively_graded() {
        return Err(Error::NotPositivelyGraded);
    }
    if is_self_injective(a).is_none() {
        return Err(Error::NotSelfInjective);
    }
    let degrees: BTreeSet<i64> = a
        .socle()
        .iter()
        .map(|x| a.degree(x[0].0))
        .collect();
    Ok(if degrees.len() == 1 {
        degrees.into_iter().next()
    } else {
        None
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GlobalDimension {
    Finite(usize),
    AtLeast(usize),
}

impl std::fmt::Display for GlobalDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GlobalDimension::Finite(d) => write!(f, "{d}"),
            GlobalDimension::AtLeast(d) => write!(f, ">= {d}"),
        }
    }
}

/// Maximum projective dimension of the simples, by iterated syzygies.
pub fn global_dimension(a: &Arc<GradedAlgebra>, cap: usize) -> GlobalDimension {
    let mut best = 0;
    for v in 0..a.num_vertices() {
        let mut cur = GradedModule::simple(a, v, 0);
        let mut pd = 0;
        loop {
            let stripped = strip_projectives(&cur).0;
            if stripped.is_zero() {
                break;
            }
            if pd >= cap {
                return GlobalDimension::AtLeast(cap);
            }
            cur = syzygy(&stripped);
            pd += 1;
        }
        best = best.max(pd);
    }
    GlobalDimension::Finite(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::field::Field;

    #[test]
    fn self_injectivity() {
        let q = Field::Rational;
        let a = truncated_polynomial(q, 2).unwrap();
        assert_eq!(is_self_injective(&a), Some(vec![0]));
        assert!(is_self_injective(&path_algebra_a(q, 2).unwrap()).is_none());
        let pi = preprojective_algebra(&linear_quiver(2), q, PreprojectiveSigns::Standard).unwrap();
        assert_eq!(is_self_injective(&pi), Some(vec![1, 0]));
    }

    #[test]
    fn symmetry_and_gorenstein() {
        let q = Field::Rational;
        let a = truncated_polynomial(q, 2).unwrap();
        assert!(is_symmetric(&a));
        assert_eq!(gorenstein_parameter(&a).unwrap(), Some(2));
        let te = trivial_extension(&path_algebra_a(q, 2).unwrap().degree_zero_part().0).unwrap();
        assert!(is_symmetric(&te));
        assert_eq!(gorenstein_parameter(&te).unwrap(), Some(1));
        assert!(!is_symmetric(&path_algebra_a(q, 2).unwrap()));
        let pi = preprojective_algebra(&linear_quiver(2), q, PreprojectiveSigns::Standard).unwrap();
        assert_eq!(gorenstein_parameter(&pi).unwrap(), None);
    }

    #[test]
    fn global_dimensions() {
        let q = Field::Rational;
        assert_eq!(global_dimension(&semisimple(q, 1).unwrap(), 8), GlobalDimension::Finite(0));
        assert_eq!(global_dimension(&upper_triangular(q, 2).unwrap(), 8), GlobalDimension::Finite(1));
        assert_eq!(global_dimension(&truncated_polynomial(q, 1).unwrap(), 8), GlobalDimension::AtLeast(8));
    }
}
