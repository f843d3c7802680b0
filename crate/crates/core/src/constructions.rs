//! Named algebras: truncated polynomial and Nakayama algebras, path algebras
//! of type A, trivial extensions, preprojective and Beilinson algebras.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraBuilder, Elem, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::quiver::{build_algebra, Quiver, Relation};

/// K[x]/(x^{n+1}) with deg x = 1.
pub fn truncated_polynomial(field: Field, n: usize) -> Result<Arc<GradedAlgebra>> {
    nakayama(field, 1, n + 1)
}

/// Cyclic quiver with `cycle` vertices, arrows of degree 1, all paths of
/// length `nilpotency` set to zero.
pub fn nakayama(field: Field, cycle: usize, nilpotency: usize) -> Result<Arc<GradedAlgebra>> {
    if cycle == 0 || nilpotency == 0 {
        return Err(Error::InvalidArgument(
            "Nakayama algebras need a positive cycle length and nilpotency".into(),
        ));
    }
    let vertices: Vec<String> = (1..=cycle).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (0..cycle)
        .map(|i| {
            let name = if cycle == 1 {
                "x".to_string()
            } else {
                format!("a{}", i + 1)
            };
            (name, vertices[i].clone(), vertices[(i + 1) % cycle].clone())
        })
        .collect();
    let q = Quiver {
        vertices: vertices.clone(),
        arrows: arrows
            .iter()
            .map(|(n, s, t)| crate::quiver::Arrow {
                name: n.clone(),
                from: s.clone(),
                to: t.clone(),
                degree: 1,
            })
            .collect(),
    };
    let rels: Vec<Relation> = (0..cycle)
        .map(|start| {
            let path = (0..nilpotency)
                .map(|k| arrows[(start + k) % cycle].0.clone())
                .collect();
            Relation::new(vec![(field.one(), path)])
        })
        .collect();
    build_algebra(&q, &rels, field, nilpotency)
}

/// K[x_1, …, x_n]/(x_i²), commutative, every x_i of degree 1.
pub fn square_zero_polynomial(field: Field, n: usize) -> Result<Arc<GradedAlgebra>> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let q = Quiver {
        vertices: vec!["1".into()],
        arrows: names
            .iter()
            .map(|x| crate::quiver::Arrow {
                name: x.clone(),
                from: "1".into(),
                to: "1".into(),
                degree: 1,
            })
            .collect(),
    };
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push(Relation::new(vec![(
            field.one(),
            vec![names[i].clone(), names[i].clone()],
        )]));
        for j in i + 1..n {
            rels.push(Relation::new(vec![
                (field.one(), vec![names[i].clone(), names[j].clone()]),
                (-&field.one(), vec![names[j].clone(), names[i].clone()]),
            ]));
        }
    }
    build_algebra(&q, &rels, field, n + 1)
}

/// Linearly oriented A_n: arrows `a_i: i → i+1` of degree 0.
pub fn linear_quiver(n: usize) -> Quiver {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (1..n)
        .map(|i| crate::quiver::Arrow {
            name: format!("a{i}"),
            from: i.to_string(),
            to: (i + 1).to_string(),
            degree: 0,
        })
        .collect();
    Quiver { vertices, arrows }
}

/// Path algebra of linearly oriented A_n, concentrated in degree 0.
pub fn path_algebra_a(field: Field, n: usize) -> Result<Arc<GradedAlgebra>> {
    build_algebra(&linear_quiver(n), &[], field, n)
}

/// The semisimple algebra K^n.
pub fn semisimple(field: Field, n: usize) -> Result<Arc<GradedAlgebra>> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    build_algebra(
        &Quiver {
            vertices,
            arrows: Vec::new(),
        },
        &[],
        field,
        1,
    )
}

/// n×n upper triangular matrices in the basis of matrix units E_ij, i ≤ j.
pub fn upper_triangular(field: Field, n: usize) -> Result<Arc<GradedAlgebra>> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut b = AlgebraBuilder::new(field, vertices);
    let mut units = Vec::new();
    let mut idem = vec![0; n];
    for i in 0..n {
        for j in i..n {
            let id = b.push(format!("E{}{}", i + 1, j + 1), 0, i, j);
            units.push((i, j));
            if i == j {
                idem[i] = id;
            }
        }
    }
    b.set_idempotents(idem);
    let find = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).unwrap();
    b.finish(|s, t| {
        let (i, j) = units[s];
        let (k, l) = units[t];
        if j == k {
            vec![(find(i, l), field.one())]
        } else {
            Vec::new()
        }
    })
}

/// Λ ⊕ DΛ with (x,f)(y,g) = (xy, xg + fy), graded by A_0 = Λ and A_1 = DΛ.
pub fn trivial_extension(lambda: &GradedAlgebra) -> Result<Arc<GradedAlgebra>> {
    if lambda.basis().iter().any(|b| b.degree != 0) {
        return Err(Error::InvalidArgument(
            "trivial extensions are built from algebras concentrated in degree 0".into(),
        ));
    }
    let field = lambda.field();
    let n = lambda.dim();
    let mut b = AlgebraBuilder::new(field, lambda.vertex_labels().to_vec());
    for e in lambda.basis() {
        b.push(e.label.clone(), 0, e.left, e.right);
    }
    for e in lambda.basis() {
        // e ∈ e_v Λ e_w gives e* ∈ e_w DΛ e_v
        b.push(format!("D({})", e.label), 1, e.right, e.left);
    }
    b.set_idempotents(lambda.idempotents().to_vec());
    let coeff = |x: &Elem, t: usize| -> Option<Scalar> {
        x.iter().find(|(k, _)| *k == t).map(|(_, c)| c.clone())
    };
    b.finish(|s, t| match (s < n, t < n) {
        (true, true) => lambda.product(s, t).clone(),
        (false, false) => Vec::new(),
        // (b_s · c*)(b_k) = c*(b_k b_s)
        (true, false) => (0..n)
            .filter_map(|k| coeff(lambda.product(k, s), t - n).map(|c| (n + k, c)))
            .collect(),
        // (c* · b_t)(b_k) = c*(b_t b_k)
        (false, true) => (0..n)
            .filter_map(|k| coeff(lambda.product(t, k), s - n).map(|c| (n + k, c)))
            .collect(),
    })
}

/// Sign convention for the preprojective relations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PreprojectiveSigns {
    /// ε_α = 1 on arrows of Q and -1 on their duals.
    #[default]
    Standard,
    /// ε_α = 1 everywhere.
    Unsigned,
}

/// Positive definiteness of the symmetrized Tits form of a quiver.
pub fn is_dynkin(q: &Quiver) -> bool {
    let n = q.vertices.len();
    let f = Field::Rational;
    let mut m = crate::matrix::Matrix::zeros(f, n, n);
    for i in 0..n {
        m.set(i, i, f.from_i64(2));
    }
    for a in &q.arrows {
        let (s, t) = (q.vertex_index(&a.from).unwrap(), q.vertex_index(&a.to).unwrap());
        if s == t {
            return false;
        }
        let cur = m.get(s, t).clone();
        m.set(s, t, &cur - &f.one());
        let cur = m.get(t, s).clone();
        m.set(t, s, &cur - &f.one());
    }
    // Sylvester: all leading principal minors positive
    (1..=n).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        let sub = m.select_rows(&idx).select_cols(&idx);
        determinant(&sub)
            .as_rational()
            .map_or(false, |r| r > &num_rational::BigRational::from_integer(0.into()))
    })
}

pub(crate) fn determinant(m: &crate::matrix::Matrix) -> Scalar {
    let n = m.rows();
    let f = m.field();
    let mut a = m.clone();
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
            return f.zero();
        };
        if p != c {
            for j in 0..n {
                let x = a.get(p, j).clone();
                let y = a.get(c, j).clone();
                a.set(p, j, y);
                a.set(c, j, x);
            }
            det = -&det;
        }
        let piv = a.get(c, c).clone();
        det = &det * &piv;
        let inv = piv.inverse().unwrap();
        for r in c + 1..n {
            let factor = a.get(r, c) * &inv;
            if factor.is_zero() {
                continue;
            }
            for j in c..n {
                let v = a.get(r, j) - &(&factor * a.get(c, j));
                a.set(r, j, v);
            }
        }
    }
    det
}

/// Longest possible nonzero path in a Dynkin preprojective algebra is shorter
/// than the Coxeter number; this cap covers every Dynkin type on `n` vertices.
pub fn preprojective_cap(n: usize) -> usize {
    2 * n + 16
}

/// The classical preprojective algebra of an acyclic quiver with arrows in
/// degree 0, graded by deg α = 0 and deg α* = 1.
pub fn preprojective_algebra(
    q: &Quiver,
    field: Field,
    signs: PreprojectiveSigns,
) -> Result<Arc<GradedAlgebra>> {
    q.validate()?;
    if q.arrows.iter().any(|a| a.degree != 0) {
        return Err(Error::InvalidArgument(
            "preprojective algebras start from a quiver with all arrows in degree 0".into(),
        ));
    }
    if q.has_oriented_cycle() {
        return Err(Error::InvalidQuiver("the quiver must be acyclic".into()));
    }
    let cap = preprojective_cap(q.vertices.len());
    if !is_dynkin(q) {
        return Err(Error::NonNilpotent { cap });
    }
    let mut double = q.clone();
    for a in &q.arrows {
        double.arrows.push(crate::quiver::Arrow {
            name: format!("{}*", a.name),
            from: a.to.clone(),
            to: a.from.clone(),
            degree: 1,
        });
    }
    let minus = match signs {
        PreprojectiveSigns::Standard => -&field.one(),
        PreprojectiveSigns::Unsigned => field.one(),
    };
    let mut rels = Vec::new();
    for v in &q.vertices {
        let mut terms = Vec::new();
        for a in &q.arrows {
            if &a.from == v {
                terms.push((field.one(), vec![a.name.clone(), format!("{}*", a.name)]));
            }
            if &a.to == v {
                terms.push((minus.clone(), vec![format!("{}*", a.name), a.name.clone()]));
            }
        }
        if !terms.is_empty() {
            rels.push(Relation::new(terms));
        }
    }
    build_algebra(&double, &rels, field, cap)
}

/// The ℓ×ℓ upper triangular matrix algebra with (p, q) block A_{q-p},
/// concentrated in degree 0. Vertex (p, v) carries the idempotent e_v in
/// the diagonal block p.
/// Basis of the Beilinson algebra as (row, column, basis element of A_{column−row}),
/// in the order used by [`beilinson_algebra`].
pub fn beilinson_entries(a: &GradedAlgebra, ell: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p in 0..ell {
        for q in p..ell {
            for (k, e) in a.basis().iter().enumerate() {
                if e.degree == (q - p) as i64 {
                    out.push((p, q, k));
                }
            }
        }
    }
    out
}

pub fn beilinson_algebra(a: &GradedAlgebra, ell: usize) -> Result<Arc<GradedAlgebra>> {
    if ell == 0 {
        return Err(Error::InvalidArgument("the Beilinson algebra needs ℓ ≥ 1".into()));
    }
    let field = a.field();
    let nv = a.num_vertices();
    let mut vertices = Vec::new();
    for p in 0..ell {
        for v in a.vertex_labels() {
            vertices.push(format!("({p},{v})"));
        }
    }
    let mut b = AlgebraBuilder::new(field, vertices);
    let entries = beilinson_entries(a, ell);
    let mut idem = vec![0; ell * nv];
    for &(p, q, k) in &entries {
        let e = &a.basis()[k];
        let id = b.push(
            format!("[{p},{q}]{}", e.label),
            0,
            p * nv + e.left,
            q * nv + e.right,
        );
        if p == q {
            if let Some(v) = a.idempotents().iter().position(|&i| i == k) {
                idem[p * nv + v] = id;
            }
        }
    }
    b.set_idempotents(idem);
    let lookup: std::collections::HashMap<(usize, usize, usize), usize> =
        entries.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    b.finish(|s, t| {
        let (p, q, x) = entries[s];
        let (q2, r, y) = entries[t];
        if q != q2 {
            return Vec::new();
        }
        a.product(x, y)
            .iter()
            .map(|(k, c)| (lookup[&(p, r, *k)], c.clone()))
            .collect()
    })
}
