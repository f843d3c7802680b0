//! Finite-dimensional graded right modules.
//!
//! A module stores a homogeneous basis, each vector lying in a single block
//! `X_d e_v`, sorted by `(degree, vertex)`. Actions are row-vector matrices:
//! the action of the algebra basis element `b` sends `x` to `x·M_b`.

use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Elem, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Subspace};

/// The grading group of a module: Z or Z/a.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Grading {
    Z,
    Cyclic(u32),
}

impl Grading {
    pub fn normalize(&self, d: i64) -> i64 {
        match self {
            Grading::Z => d,
            Grading::Cyclic(a) => d.rem_euclid(*a as i64),
        }
    }

    pub fn add(&self, d: i64, e: i64) -> i64 {
        self.normalize(d + e)
    }
}

/// Position of a basis vector: its degree and vertex.
pub type Slot = (i64, usize);

#[derive(Clone, Debug)]
pub struct GradedModule {
    algebra: Arc<GradedAlgebra>,
    grading: Grading,
    slots: Vec<Slot>,
    actions: Vec<Matrix>,
}

impl GradedModule {
    /// Assembles a module from unsorted data; returns it with `perm`, where
    /// `perm[old] = new` basis index.
    pub fn assemble(
        algebra: Arc<GradedAlgebra>,
        grading: Grading,
        slots: Vec<Slot>,
        actions: Vec<Matrix>,
    ) -> Result<(GradedModule, Vec<usize>)> {
        let n = slots.len();
        if actions.len() != algebra.dim() || actions.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("module action matrices".into()));
        }
        let slots: Vec<Slot> = slots
            .into_iter()
            .map(|(d, v)| (grading.normalize(d), v))
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (slots[i], i));
        let mut perm = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let sorted = order.iter().map(|&i| slots[i]).collect();
        let actions = actions
            .iter()
            .map(|m| m.select_rows(&order).select_cols(&order))
            .collect();
        Ok((
            GradedModule {
                algebra,
                grading,
                slots: sorted,
                actions,
            },
            perm,
        ))
    }

    pub fn zero(algebra: Arc<GradedAlgebra>, grading: Grading) -> GradedModule {
        let f = algebra.field();
        GradedModule {
            actions: (0..algebra.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect(),
            algebra,
            grading,
            slots: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn slot(&self, i: usize) -> Slot {
        self.slots[i]
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.actions[b]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn action_of(&self, x: &Elem) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (b, c) in x {
            m = m.add(&self.actions[*b].scale(c));
        }
        m
    }

    pub fn act(&self, v: &[Scalar], x: &Elem) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.dim()];
        for (b, c) in x {
            let w = self.actions[*b].left_apply(v);
            for (o, wi) in out.iter_mut().zip(&w) {
                if !wi.is_zero() {
                    *o = &*o + &(c * wi);
                }
            }
        }
        out
    }

    /// Contiguous index ranges of the blocks `X_d e_v`.
    pub fn blocks(&self) -> BTreeMap<Slot, Range<usize>> {
        let mut m: BTreeMap<Slot, Range<usize>> = BTreeMap::new();
        for (i, s) in self.slots.iter().enumerate() {
            m.entry(*s).and_modify(|r| r.end = i + 1).or_insert(i..i + 1);
        }
        m
    }

    pub fn block(&self, slot: Slot) -> Range<usize> {
        let start = self.slots.partition_point(|s| *s < slot);
        let end = self.slots.partition_point(|s| *s <= slot);
        start..end
    }

    /// dim X_d for each occurring degree.
    pub fn dims_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for (d, _) in &self.slots {
            *m.entry(*d).or_insert(0) += 1;
        }
        m
    }

    /// dim X_d e_v for each occurring slot.
    pub fn dim_vector(&self) -> BTreeMap<Slot, usize> {
        self.blocks().into_iter().map(|(k, r)| (k, r.len())).collect()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.slots.first().map(|s| s.0)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.slots.last().map(|s| s.0)
    }

    pub fn compatible(&self, other: &GradedModule) -> bool {
        self.algebra.same_as(&other.algebra) && self.grading == other.grading
    }

    /// Checks the unit and associativity axioms on all basis pairs.
    pub fn check_axioms(&self) -> bool {
        let a = &self.algebra;
        let unit = self.action_of(&a.unit());
        if unit != Matrix::identity(self.field(), self.dim()) {
            return false;
        }
        for s in 0..a.dim() {
            for t in 0..a.dim() {
                let lhs = self.actions[s].mul(&self.actions[t]);
                if lhs != self.action_of(a.product(s, t)) {
                    return false;
                }
            }
        }
        for (b, m) in self.actions.iter().enumerate() {
            let e = &a.basis()[b];
            for i in 0..self.dim() {
                for j in 0..self.dim() {
                    if m.get(i, j).is_zero() {
                        continue;
                    }
                    let (di, vi) = self.slots[i];
                    let (dj, vj) = self.slots[j];
                    if vi != e.left || vj != e.right || self.grading.add(di, e.degree) != dj {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// e_v A(shift): the basis of e_v A with b placed in degree deg b - shift.
    pub fn projective(algebra: &Arc<GradedAlgebra>, v: usize, shift: i64, grading: Grading) -> GradedModule {
        GradedModule::projective_indexed(algebra, v, shift, grading).0
    }

    /// e_v A(shift) together with the algebra basis element behind each
    /// module basis vector.
    pub fn projective_indexed(
        algebra: &Arc<GradedAlgebra>,
        v: usize,
        shift: i64,
        grading: Grading,
    ) -> (GradedModule, Vec<usize>) {
        let idx: Vec<usize> = (0..algebra.dim())
            .filter(|&b| algebra.basis()[b].left == v)
            .collect();
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let f = algebra.field();
        let n = idx.len();
        let actions = (0..algebra.dim())
            .map(|c| {
                let mut m = Matrix::zeros(f, n, n);
                for (i, &b) in idx.iter().enumerate() {
                    for (k, s) in algebra.product(b, c) {
                        m.set(i, pos[k], s.clone());
                    }
                }
                m
            })
            .collect();
        let slots = idx
            .iter()
            .map(|&b| (algebra.basis()[b].degree - shift, algebra.basis()[b].right))
            .collect();
        let (m, perm) = GradedModule::assemble(algebra.clone(), grading, slots, actions)
            .expect("projective module");
        let mut behind = vec![0; n];
        for (i, &b) in idx.iter().enumerate() {
            behind[perm[i]] = b;
        }
        (m, behind)
    }

    /// A_A as a graded module.
    pub fn regular(algebra: &Arc<GradedAlgebra>) -> GradedModule {
        let parts: Vec<GradedModule> = (0..algebra.num_vertices())
            .map(|v| GradedModule::projective(algebra, v, 0, Grading::Z))
            .collect();
        GradedModule::direct_sum(algebra, Grading::Z, &parts).0
    }

    /// The simple top of e_v A(shift).
    pub fn simple(algebra: &Arc<GradedAlgebra>, v: usize, shift: i64) -> GradedModule {
        let p = GradedModule::projective(algebra, v, shift, Grading::Z);
        let rad = p.radical_vectors();
        p.quotient(&rad).0
    }

    /// Direct sum; `maps[k][i]` is the index of basis vector `i` of summand `k`.
    pub fn direct_sum(
        algebra: &Arc<GradedAlgebra>,
        grading: Grading,
        parts: &[GradedModule],
    ) -> (GradedModule, Vec<Vec<usize>>) {
        let mut slots = Vec::new();
        for p in parts {
            slots.extend_from_slice(&p.slots);
        }
        let f = algebra.field();
        let actions = (0..algebra.dim())
            .map(|b| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.actions[b]).collect();
                Matrix::block_diagonal(f, &blocks)
            })
            .collect();
        let (m, perm) = GradedModule::assemble(algebra.clone(), grading, slots, actions)
            .expect("direct sum of compatible modules");
        let mut maps = Vec::new();
        let mut off = 0;
        for p in parts {
            maps.push((0..p.dim()).map(|i| perm[off + i]).collect());
            off += p.dim();
        }
        (m, maps)
    }

    /// X(i), with X(i)_j = X_{j+i}.
    pub fn shift(&self, i: i64) -> GradedModule {
        let slots = self.slots.iter().map(|&(d, v)| (d - i, v)).collect();
        GradedModule::assemble(self.algebra.clone(), self.grading, slots, self.actions.clone())
            .expect("shift")
            .0
    }

    fn require_z(&self) -> Result<()> {
        match self.grading {
            Grading::Z => Ok(()),
            Grading::Cyclic(a) => Err(Error::TruncationUndefined(a as i64)),
        }
    }

    fn restrict_to_indices(&self, keep: &[usize]) -> GradedModule {
        GradedModule {
            algebra: self.algebra.clone(),
            grading: self.grading,
            slots: keep.iter().map(|&i| self.slots[i]).collect(),
            actions: self
                .actions
                .iter()
                .map(|m| m.select_rows(keep).select_cols(keep))
                .collect(),
        }
    }

    /// X_{≥i} as a submodule, with the indices of its basis in X.
    pub fn truncate_below(&self, i: i64) -> Result<(GradedModule, Vec<usize>)> {
        self.require_z()?;
        let keep: Vec<usize> = (0..self.dim()).filter(|&k| self.slots[k].0 >= i).collect();
        let sub = self.restrict_to_indices(&keep);
        if !self.is_closed(&keep) {
            return Err(Error::NotPositivelyGraded);
        }
        Ok((sub, keep))
    }

    /// X_{≤i} = X / X_{≥i+1}, with the indices of its basis in X.
    pub fn truncate_above(&self, i: i64) -> Result<(GradedModule, Vec<usize>)> {
        self.require_z()?;
        let drop: Vec<usize> = (0..self.dim()).filter(|&k| self.slots[k].0 > i).collect();
        if !self.is_closed(&drop) {
            return Err(Error::NotPositivelyGraded);
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|&k| self.slots[k].0 <= i).collect();
        Ok((self.restrict_to_indices(&keep), keep))
    }

    fn is_closed(&self, idx: &[usize]) -> bool {
        let inside: Vec<bool> = (0..self.dim()).map(|k| idx.contains(&k)).collect();
        self.actions.iter().all(|m| {
            idx.iter()
                .all(|&r| (0..self.dim()).all(|c| inside[c] || m.get(r, c).is_zero()))
        })
    }

    /// DX over the opposite algebra, with (DX)_i = D(X_{-i}).
    pub fn dual(&self) -> GradedModule {
        self.dual_over(self.algebra.opposite())
            .expect("opposite algebra matches")
    }

    /// DX over a given copy of the opposite algebra.
    pub fn dual_over(&self, target: Arc<GradedAlgebra>) -> Result<GradedModule> {
        if !target.same_as(&self.algebra.opposite()) {
            return Err(Error::IncompatibleModules);
        }
        let slots = self
            .slots
            .iter()
            .map(|&(d, v)| (self.grading.normalize(-d), v))
            .collect();
        let actions = self.actions.iter().map(|m| m.transpose()).collect();
        Ok(GradedModule::assemble(target, self.grading, slots, actions)?.0)
    }

    /// F_a X: degrees taken modulo a.
    pub fn forget_to_cyclic(&self, a: i64) -> Result<GradedModule> {
        if a <= 0 {
            return Err(Error::InvalidCyclicOrder(a));
        }
        self.require_z().map_err(|_| Error::InvalidCyclicOrder(a))?;
        Ok(GradedModule::assemble(
            self.algebra.clone(),
            Grading::Cyclic(a as u32),
            self.slots.clone(),
            self.actions.clone(),
        )?
        .0)
    }

    /// Restriction along the inclusion of a subalgebra whose basis is the
    /// listed subset of this algebra's basis (for example the degree-0 part).
    pub fn restrict(&self, sub: &Arc<GradedAlgebra>, basis_map: &[usize]) -> GradedModule {
        let actions = basis_map.iter().map(|&b| self.actions[b].clone()).collect();
        GradedModule::assemble(sub.clone(), self.grading, self.slots.clone(), actions)
            .expect("restriction")
            .0
    }

    /// Spanning vectors of X·J.
    pub fn radical_vectors(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for j in self.algebra.radical() {
            let m = self.action_of(j);
            for r in 0..m.rows() {
                let row = m.row(r);
                if row.iter().any(|s| !s.is_zero()) {
                    out.push(row.to_vec());
                }
            }
        }
        out
    }

    /// Splits vectors into their block components.
    pub fn components(&self, v: &[Scalar]) -> Vec<(Slot, Vec<Scalar>)> {
        let mut out = Vec::new();
        for (slot, r) in self.blocks() {
            if v[r.clone()].iter().any(|s| !s.is_zero()) {
                out.push((slot, v[r].to_vec()));
            }
        }
        out
    }

    /// Block-adapted basis of the graded submodule generated by `gens`
    /// (every block component of a generator is included).
    pub fn generated_submodule(&self, gens: &[Vec<Scalar>]) -> BTreeMap<Slot, Subspace> {
        let f = self.field();
        let blocks = self.blocks();
        let mut spaces: BTreeMap<Slot, Subspace> = BTreeMap::new();
        let mut queue: Vec<(Slot, Vec<Scalar>)> = Vec::new();
        let gens_alg = self.algebra.generators().to_vec();
        let gen_mats: Vec<Matrix> = gens_alg.iter().map(|g| self.action_of(g)).collect();
        let push = |slot: Slot, local: Vec<Scalar>, spaces: &mut BTreeMap<Slot, Subspace>, queue: &mut Vec<(Slot, Vec<Scalar>)>| {
            let len = blocks[&slot].len();
            let sp = spaces
                .entry(slot)
                .or_insert_with(|| Subspace::span(f, len, &[]));
            if !sp.contains(&local) {
                let mut vecs: Vec<Vec<Scalar>> = sp.basis().row_vectors();
                vecs.push(local.clone());
                *sp = Subspace::span(f, len, &vecs);
                queue.push((slot, local));
            }
        };
        for g in gens {
            for (slot, local) in self.components(g) {
                push(slot, local, &mut spaces, &mut queue);
            }
        }
        while let Some((slot, local)) = queue.pop() {
            let mut full = vec![f.zero(); self.dim()];
            let r = blocks[&slot].clone();
            for (k, s) in r.clone().zip(local) {
                full[k] = s;
            }
            for m in &gen_mats {
                let w = m.left_apply(&full);
                for (s2, l2) in self.components(&w) {
                    push(s2, l2, &mut spaces, &mut queue);
                }
            }
        }
        spaces.retain(|_, sp| sp.dim() > 0);
        spaces
    }

    /// Submodule with the given block bases (assumed closed under the action),
    /// and the inclusion matrix (rows = submodule basis in X coordinates).
    pub fn submodule(&self, spaces: &BTreeMap<Slot, Subspace>) -> (GradedModule, Matrix) {
        let f = self.field();
        let blocks = self.blocks();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut slots = Vec::new();
        let mut offsets: BTreeMap<Slot, usize> = BTreeMap::new();
        for (slot, sp) in spaces {
            offsets.insert(*slot, rows.len());
            let r = blocks[slot].clone();
            for k in 0..sp.dim() {
                let mut full = vec![f.zero(); self.dim()];
                for (pos, s) in r.clone().zip(sp.basis().row(k)) {
                    full[pos] = s.clone();
                }
                rows.push(full);
                slots.push(*slot);
            }
        }
        let n = rows.len();
        let inclusion = if n == 0 {
            Matrix::zeros(f, 0, self.dim())
        } else {
            Matrix::from_rows(f, self.dim(), &rows).unwrap()
        };
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let mut out = Matrix::zeros(f, n, n);
                for (i, row) in rows.iter().enumerate() {
                    let w = m.left_apply(row);
                    for (slot, local) in self.components(&w) {
                        let sp = &spaces[&slot];
                        let c = sp.coordinates(&local).expect("submodule closed under the action");
                        let off = offsets[&slot];
                        for (k, s) in c.into_iter().enumerate() {
                            out.set(i, off + k, s);
                        }
                    }
                }
                out
            })
            .collect();
        // slots are already sorted because spaces is a BTreeMap
        let module = GradedModule {
            algebra: self.algebra.clone(),
            grading: self.grading,
            slots,
            actions,
        };
        (module, inclusion)
    }

    /// Quotient by the graded submodule generated by `gens`, and the
    /// projection matrix from X to the quotient.
    pub fn quotient(&self, gens: &[Vec<Scalar>]) -> (GradedModule, Matrix) {
        let spaces = self.generated_submodule(gens);
        self.quotient_by(&spaces)
    }

    /// Quotient by a closed submodule given by block bases.
    pub fn quotient_by(&self, spaces: &BTreeMap<Slot, Subspace>) -> (GradedModule, Matrix) {
        let f = self.field();
        let blocks = self.blocks();
        let mut slots = Vec::new();
        let mut sections: Vec<Vec<Scalar>> = Vec::new();
        // per block: projection local → quotient local, and offset
        let mut projections: BTreeMap<Slot, (Matrix, usize)> = BTreeMap::new();
        for (slot, r) in &blocks {
            let q = match spaces.get(slot) {
                Some(sp) => sp.quotient(f),
                None => Subspace::span(f, r.len(), &[]).quotient(f),
            };
            let off = slots.len();
            for k in 0..q.section.rows() {
                let mut full = vec![f.zero(); self.dim()];
                for (pos, s) in r.clone().zip(q.section.row(k)) {
                    full[pos] = s.clone();
                }
                sections.push(full);
                slots.push(*slot);
            }
            projections.insert(*slot, (q.projection, off));
        }
        let n = slots.len();
        let mut projection = Matrix::zeros(f, self.dim(), n);
        for (slot, r) in &blocks {
            let (p, off) = &projections[slot];
            for (li, i) in r.clone().enumerate() {
                for k in 0..p.cols() {
                    projection.set(i, off + k, p.get(li, k).clone());
                }
            }
        }
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let mut out = Matrix::zeros(f, n, n);
                for (i, s) in sections.iter().enumerate() {
                    let w = m.left_apply(s);
                    let q = projection.left_apply(&w);
                    for (k, v) in q.into_iter().enumerate() {
                        if !v.is_zero() {
                            out.set(i, k, v);
                        }
                    }
                }
                out
            })
            .collect();
        let module = GradedModule {
            algebra: self.algebra.clone(),
            grading: self.grading,
            slots,
            actions,
        };
        (module, projection)
    }

    /// JSON dump: degrees, dims per degree and per-degree action matrices.
    pub fn to_json(&self) -> Value {
        let dims = self.dims_by_degree();
        let degrees: Vec<i64> = dims.keys().copied().collect();
        let mut actions = serde_json::Map::new();
        for (b, m) in self.actions.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let e = &self.algebra.basis()[b];
            let mut per_degree = Vec::new();
            for &d in &degrees {
                let rows: Vec<usize> = (0..self.dim()).filter(|&i| self.slots[i].0 == d).collect();
                let target = self.grading.add(d, e.degree);
                let cols: Vec<usize> = (0..self.dim()).filter(|&i| self.slots[i].0 == target).collect();
                if rows.is_empty() || cols.is_empty() {
                    continue;
                }
                let sub = m.select_rows(&rows).select_cols(&cols);
                if sub.is_zero() {
                    continue;
                }
                let entries: Vec<Vec<String>> = (0..sub.rows())
                    .map(|i| sub.row(i).iter().map(|s| s.to_string()).collect())
                    .collect();
                per_degree.push(json!({"from": d, "to": target, "matrix": entries}));
            }
            actions.insert(e.label.clone(), Value::Array(per_degree));
        }
        json!({
            "degrees": degrees,
            "dims": dims.values().collect::<Vec<_>>(),
            "actions": actions,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{preprojective_algebra, linear_quiver, truncated_polynomial, PreprojectiveSigns};

    fn dims(m: &GradedModule) -> Vec<(i64, usize)> {
        m.dims_by_degree().into_iter().collect()
    }

    #[test]
    fn projectives_and_shifts() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        assert_eq!(dims(&p), vec![(0, 1), (1, 1), (2, 1)]);
        assert!(p.check_axioms());
        assert_eq!(dims(&p.shift(1)), vec![(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(dims(&p.shift(1).shift(-1)), dims(&p));
        let pi = preprojective_algebra(&linear_quiver(2), Field::Rational, PreprojectiveSigns::Standard).unwrap();
        let e1 = GradedModule::projective(&pi, 0, 0, Grading::Z);
        assert_eq!(e1.dims_by_degree()[&0], 2);
    }

    #[test]
    fn truncations() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        let (t, _) = p.truncate_above(0).unwrap();
        assert_eq!(dims(&t), vec![(0, 1)]);
        let (t, _) = p.shift(1).truncate_above(0).unwrap();
        assert_eq!(dims(&t), vec![(-1, 1), (0, 1)]);
        assert!(t.check_axioms());
        let (b, _) = p.truncate_below(1).unwrap();
        assert_eq!(dims(&b), vec![(1, 1), (2, 1)]);
        let cyc = p.forget_to_cyclic(2).unwrap();
        assert!(matches!(cyc.truncate_above(0), Err(Error::TruncationUndefined(2))));
        assert_eq!(dims(&cyc), vec![(0, 2), (1, 1)]);
    }

    #[test]
    fn duals_and_simples() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        let d = p.dual();
        assert_eq!(dims(&d), vec![(-2, 1), (-1, 1), (0, 1)]);
        assert!(d.check_axioms());
        let s = GradedModule::simple(&a, 0, -3);
        assert_eq!(dims(&s), vec![(3, 1)]);
        assert_eq!(dims(&s.dual()), vec![(-3, 1)]);
    }

    #[test]
    fn quotient_and_submodule() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        let rad = p.radical_vectors();
        let sub = p.generated_submodule(&rad);
        let (j, inc) = p.submodule(&sub);
        assert_eq!(dims(&j), vec![(1, 1), (2, 1)]);
        assert_eq!(inc.rows(), 2);
        assert!(j.check_axioms());
        let (q, proj) = p.quotient(&rad);
        assert_eq!(dims(&q), vec![(0, 1)]);
        assert_eq!(proj.cols(), 1);
        assert!(q.check_axioms());
    }
}
