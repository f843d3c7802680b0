//! Projective covers, syzygies, cosyzygies, projective stripping and the
//! Auslander-Reiten translation.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::hom0;
use crate::matrix::{Matrix, Subspace};
use crate::module::{GradedModule, Slot};
use crate::structure::is_self_injective;

/// A projective cover `π: P → X` with `P = ⊕ e_v A(shift)`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: GradedModule,
    /// Rows are the images in X of the basis of P.
    pub map: Matrix,
    /// `(vertex, shift)` of each summand `e_v A(shift)`.
    pub summands: Vec<(usize, i64)>,
    /// Top vectors of X generating each summand's image.
    pub generators: Vec<Vec<Scalar>>,
    /// For each summand, pairs (basis index in P, algebra basis element).
    pub summand_basis: Vec<Vec<(usize, usize)>>,
}

/// Block bases of X·J.
pub fn radical_submodule(x: &GradedModule) -> BTreeMap<Slot, Subspace> {
    let f = x.field();
    let blocks = x.blocks();
    let mut per: BTreeMap<Slot, Vec<Vec<Scalar>>> = BTreeMap::new();
    for v in x.radical_vectors() {
        for (slot, local) in x.components(&v) {
            per.entry(slot).or_default().push(local);
        }
    }
    per.into_iter()
        .map(|(slot, vecs)| (slot, Subspace::span(f, blocks[&slot].len(), &vecs)))
        .collect()
}

/// Top vectors: per block, a complement of X·J, ordered by (degree, vertex).
pub fn top_vectors(x: &GradedModule) -> Vec<(Slot, Vec<Scalar>)> {
    let f = x.field();
    let rad = radical_submodule(x);
    let mut out = Vec::new();
    for (slot, r) in x.blocks() {
        let q = match rad.get(&slot) {
            Some(sp) => sp.quotient(f),
            None => Subspace::span(f, r.len(), &[]).quotient(f),
        };
        for k in 0..q.section.rows() {
            let mut full = vec![f.zero(); x.dim()];
            for (pos, s) in r.clone().zip(q.section.row(k)) {
                full[pos] = s.clone();
            }
            out.push((slot, full));
        }
    }
    out
}

pub fn projective_cover(x: &GradedModule) -> ProjectiveCover {
    let a = x.algebra();
    let f = x.field();
    let tops = top_vectors(x);
    let mut parts = Vec::new();
    let mut behind = Vec::new();
    let mut summands = Vec::new();
    for ((d, v), _) in &tops {
        let (p, b) = GradedModule::projective_indexed(a, *v, -*d, x.grading());
        parts.push(p);
        behind.push(b);
        summands.push((*v, -*d));
    }
    let (module, maps) = GradedModule::direct_sum(a, x.grading(), &parts);
    let mut map = Matrix::zeros(f, module.dim(), x.dim());
    let mut summand_basis = Vec::new();
    for (k, (_, t)) in tops.iter().enumerate() {
        let mut pairs = Vec::new();
        for (i, &b) in behind[k].iter().enumerate() {
            let row = x.action(b).left_apply(t);
            let target = maps[k][i];
            for (j, s) in row.into_iter().enumerate() {
                if !s.is_zero() {
                    map.set(target, j, s);
                }
            }
            pairs.push((target, b));
        }
        summand_basis.push(pairs);
    }
    ProjectiveCover {
        module,
        map,
        summands,
        generators: tops.into_iter().map(|(_, t)| t).collect(),
        summand_basis,
    }
}

/// Kernel of a degree-preserving map, as a submodule of its source, with
/// the inclusion matrix.
pub fn kernel(source: &GradedModule, target: &GradedModule, map: &Matrix) -> (GradedModule, Matrix) {
    let f = source.field();
    let tb = target.blocks();
    let mut spaces = BTreeMap::new();
    for (slot, r) in source.blocks() {
        let idx: Vec<usize> = r.clone().collect();
        let vecs = match tb.get(&slot) {
            Some(rt) => {
                let cols: Vec<usize> = rt.clone().collect();
                map.select_rows(&idx).select_cols(&cols).left_kernel_basis()
            }
            None => (0..idx.len())
                .map(|k| {
                    let mut v = vec![f.zero(); idx.len()];
                    v[k] = f.one();
                    v
                })
                .collect(),
        };
        if !vecs.is_empty() {
            spaces.insert(slot, Subspace::span(f, idx.len(), &vecs));
        }
    }
    source.submodule(&spaces)
}

/// ΩX with its inclusion into the projective cover.
pub fn syzygy_with_cover(x: &GradedModule) -> (GradedModule, Matrix, ProjectiveCover) {
    let cover = projective_cover(x);
    let (omega, inc) = kernel(&cover.module, x, &cover.map);
    (omega, inc, cover)
}

pub fn syzygy(x: &GradedModule) -> GradedModule {
    syzygy_with_cover(x).0
}

fn require_self_injective(a: &GradedAlgebra) -> Result<()> {
    if is_self_injective(a).is_none() {
        return Err(Error::NotSelfInjective);
    }
    Ok(())
}

/// Ω⁻¹X = D Ω_{A^op} D X.
pub fn cosyzygy(x: &GradedModule) -> Result<GradedModule> {
    require_self_injective(x.algebra())?;
    let a = x.algebra().clone();
    syzygy(&x.dual()).dual_over(a)
}

/// Removes graded projective summands e_v A(shift), returning the stripped
/// module and the removed `(vertex, shift)` pairs in removal order.
pub fn strip_projectives(x: &GradedModule) -> (GradedModule, Vec<(usize, i64)>) {
    let mut cur = x.clone();
    let mut removed = Vec::new();
    'outer: loop {
        let a = cur.algebra().clone();
        let mut candidates: Vec<Slot> = cur.blocks().keys().copied().collect();
        candidates.sort_by_key(|&(d, v)| (v, d));
        for (d, v) in candidates {
            if let Some(x0) = split_projective_at(&cur, &a, d, v) {
                cur = cur.quotient(&[x0]).0;
                removed.push((v, -d));
                continue 'outer;
            }
        }
        break;
    }
    (cur, removed)
}

/// A vector x in block (d, v) with x·A ≅ e_v A(−d) a direct summand.
fn split_projective_at(x: &GradedModule, a: &Arc<GradedAlgebra>, d: i64, v: usize) -> Option<Vec<Scalar>> {
    let (p, behind) = GradedModule::projective_indexed(a, v, -d, x.grading());
    let ev = a.idempotent(v);
    let gen = behind.iter().position(|&b| b == ev)?;
    if x.dim() < p.dim() {
        return None;
    }
    let homs = hom0(x, &p).ok()?;
    for i in x.block((d, v)) {
        for g in homs.basis() {
            if !g.get(i, gen).is_zero() {
                let mut vec = vec![x.field().zero(); x.dim()];
                vec[i] = x.field().one();
                return Some(vec);
            }
        }
    }
    None
}

pub fn is_projective(x: &GradedModule) -> bool {
    strip_projectives(x).0.is_zero()
}

/// X[n]: Ω^{−n} X, stripped of projective summands after every step.
pub fn stable_shift(x: &GradedModule, n: i64) -> Result<GradedModule> {
    require_self_injective(x.algebra())?;
    let mut cur = strip_projectives(x).0;
    for _ in 0..n.unsigned_abs() {
        cur = if n > 0 { cosyzygy(&cur)? } else { syzygy(&cur) };
        cur = strip_projectives(&cur).0;
    }
    Ok(cur)
}

/// Auslander-Bridger transpose over `target`, a copy of the opposite algebra:
/// the cokernel of Hom(P⁰, A) → Hom(P¹, A) for a minimal presentation.
pub fn transpose_into(x: &GradedModule, target: &Arc<GradedAlgebra>) -> Result<GradedModule> {
    if !target.same_as(&x.algebra().opposite()) {
        return Err(Error::IncompatibleModules);
    }
    let f = x.field();
    let (omega, inc, cover0) = syzygy_with_cover(x);
    let cover1 = projective_cover(&omega);
    let mut parts = Vec::new();
    let mut behind = Vec::new();
    for &(w, shift) in &cover1.summands {
        // (e_w A(s))* = e_w A^op(−s)
        let (p, b) = GradedModule::projective_indexed(target, w, -shift, x.grading());
        parts.push(p);
        behind.push(b);
    }
    let (p1, maps) = GradedModule::direct_sum(target, x.grading(), &parts);
    if p1.is_zero() {
        return Ok(p1);
    }
    let mut pos: Vec<BTreeMap<usize, usize>> = Vec::new();
    for (k, b) in behind.iter().enumerate() {
        pos.push(b.iter().enumerate().map(|(i, &e)| (e, maps[k][i])).collect());
    }
    // u_k in P⁰ coordinates
    let us: Vec<Vec<Scalar>> = cover1
        .generators
        .iter()
        .map(|u| inc.left_apply(u))
        .collect();
    let mut ys = Vec::new();
    for pairs in &cover0.summand_basis {
        let mut y = vec![f.zero(); p1.dim()];
        for (k, u) in us.iter().enumerate() {
            for &(idx, b) in pairs {
                let c = &u[idx];
                if !c.is_zero() {
                    let t = pos[k][&b];
                    y[t] = &y[t] + c;
                }
            }
        }
        ys.push(y);
    }
    Ok(p1.quotient(&ys).0)
}

pub fn transpose(x: &GradedModule) -> Result<GradedModule> {
    transpose_into(x, &x.algebra().opposite())
}

/// τX = D Tr X.
pub fn tau(x: &GradedModule) -> Result<GradedModule> {
    let a = x.algebra().clone();
    transpose(x)?.dual_over(a)
}

/// τ⁻X = Tr D X.
pub fn tau_inverse(x: &GradedModule) -> Result<GradedModule> {
    let a = x.algebra().clone();
    transpose_into(&x.dual(), &a)
}

/// Exactness of 0 → X_{≥i+1} → X → X_{≤i} → 0 at the level of maps.
pub fn verify_truncation_exact(x: &GradedModule, i: i64) -> Result<bool> {
    let (sub, keep_sub) = x.truncate_below(i + 1)?;
    let (quo, keep_quo) = x.truncate_above(i)?;
    let f = x.field();
    let mut inc = Matrix::zeros(f, sub.dim(), x.dim());
    for (r, &k) in keep_sub.iter().enumerate() {
        inc.set(r, k, f.one());
    }
    let mut proj = Matrix::zeros(f, x.dim(), quo.dim());
    for (c, &k) in keep_quo.iter().enumerate() {
        proj.set(k, c, f.one());
    }
    let hom_ok = crate::hom::is_homomorphism(&sub, x, &inc) && crate::hom::is_homomorphism(x, &quo, &proj);
    let composite_zero = inc.mul(&proj).is_zero();
    let ranks = inc.rank() == sub.dim() && proj.rank() == quo.dim();
    let dims = sub.dim() + quo.dim() == x.dim();
    Ok(hom_ok && composite_zero && ranks && dims)
}
