//! Finite-dimensional Z-graded algebras with a complete set of vertex idempotents.
//!
//! Every basis element `b` is homogeneous and lies in a single block
//! `e_left · A_degree · e_right`. Paths compose left to right, so an arrow
//! `a: v → w` sits in the block `e_v A e_w`.

use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Subspace;
use crate::radical::{radical_basis, StructureConstants};
use crate::sparse::normalize_row;

/// Sparse algebra element: `(basis index, coefficient)` sorted by index.
pub type Elem = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub degree: i64,
    pub left: usize,
    pub right: usize,
}

/// Block of an algebra: `e_left A_degree e_right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockKey {
    pub left: usize,
    pub right: usize,
    pub degree: i64,
}

#[derive(Default, Debug)]
struct Cache {
    radical: OnceLock<Vec<Elem>>,
    radical_square: OnceLock<Vec<Elem>>,
    generators: OnceLock<Vec<Elem>>,
    opposite: OnceLock<Arc<GradedAlgebra>>,
    nakayama: OnceLock<Option<Vec<usize>>>,
}

#[derive(Debug)]
pub struct GradedAlgebra {
    field: Field,
    vertices: Vec<String>,
    basis: Vec<BasisElement>,
    idempotents: Vec<usize>,
    table: Vec<Vec<Elem>>,
    fingerprint: u64,
    cache: Cache,
}

impl GradedAlgebra {
    /// Validates block structure and idempotents; associativity is checked
    /// separately by [`GradedAlgebra::check_associative`].
    pub fn new(
        field: Field,
        vertices: Vec<String>,
        basis: Vec<BasisElement>,
        idempotents: Vec<usize>,
        table: Vec<Vec<Elem>>,
    ) -> Result<Arc<GradedAlgebra>> {
        let n = basis.len();
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if idempotents.len() != vertices.len() {
            return bad("one idempotent per vertex required".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return bad("structure constant table has the wrong shape".into());
        }
        for (v, &e) in idempotents.iter().enumerate() {
            let b = &basis.get(e).ok_or_else(|| Error::InvalidArgument("idempotent index".into()))?;
            if b.left != v || b.right != v || b.degree != 0 {
                return bad(format!("idempotent of vertex {v} is not in e_v A_0 e_v"));
            }
        }
        for (s, bs) in basis.iter().enumerate() {
            if bs.left >= vertices.len() || bs.right >= vertices.len() {
                return bad(format!("basis element {} has no vertex", bs.label));
            }
            for (t, bt) in basis.iter().enumerate() {
                let prod = &table[s][t];
                if bs.right != bt.left && !prod.is_empty() {
                    return bad(format!(
                        "{}·{} must vanish (blocks do not compose)",
                        bs.label, bt.label
                    ));
                }
                for (k, c) in prod {
                    let bk = &basis[*k];
                    if c.field() != field {
                        return Err(Error::MixedField);
                    }
                    if bk.left != bs.left || bk.right != bt.right || bk.degree != bs.degree + bt.degree {
                        return bad(format!(
                            "{}·{} leaves its block or degree",
                            bs.label, bt.label
                        ));
                    }
                }
            }
        }
        for (v, &e) in idempotents.iter().enumerate() {
            for (t, bt) in basis.iter().enumerate() {
                let want_left: Elem = if bt.left == v {
                    vec![(t, field.one())]
                } else {
                    Vec::new()
                };
                let want_right: Elem = if bt.right == v {
                    vec![(t, field.one())]
                } else {
                    Vec::new()
                };
                if table[e][t] != want_left || table[t][e] != want_right {
                    return bad(format!(
                        "idempotent {} does not act as a vertex idempotent on {}",
                        basis[e].label, bt.label
                    ));
                }
            }
        }
        let mut h = std::collections::hash_map::DefaultHasher::new();
        field.hash(&mut h);
        vertices.len().hash(&mut h);
        for b in &basis {
            (b.degree, b.left, b.right).hash(&mut h);
        }
        idempotents.hash(&mut h);
        table.hash(&mut h);
        Ok(Arc::new(GradedAlgebra {
            field,
            vertices,
            basis,
            idempotents,
            table,
            fingerprint: h.finish(),
            cache: Cache::default(),
        }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn degree(&self, b: usize) -> i64 {
        self.basis[b].degree
    }

    /// Structural identity: equal fingerprints mean equal presentations.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &GradedAlgebra) -> bool {
        self.fingerprint == other.fingerprint && self.dim() == other.dim()
    }

    pub fn product(&self, s: usize, t: usize) -> &Elem {
        &self.table[s][t]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Vec::new();
        for (s, a) in x {
            for (t, b) in y {
                let ab = a * b;
                for (k, c) in &self.table[*s][*t] {
                    out.push((*k, &ab * c));
                }
            }
        }
        normalize_row(out)
    }

    pub fn unit(&self) -> Elem {
        let mut u: Elem = self
            .idempotents
            .iter()
            .map(|&e| (e, self.field.one()))
            .collect();
        u.sort_by_key(|e| e.0);
        u
    }

    pub fn basis_elem(&self, b: usize) -> Elem {
        vec![(b, self.field.one())]
    }

    pub fn to_dense(&self, x: &Elem) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (k, c) in x {
            v[*k] = &v[*k] + c;
        }
        v
    }

    pub fn from_dense(v: &[Scalar]) -> Elem {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }

    pub fn block_of(&self, b: usize) -> BlockKey {
        let e = &self.basis[b];
        BlockKey {
            left: e.left,
            right: e.right,
            degree: e.degree,
        }
    }

    /// Basis indices grouped by block, in increasing block order.
    pub fn blocks(&self) -> BTreeMap<BlockKey, Vec<usize>> {
        let mut m: BTreeMap<BlockKey, Vec<usize>> = BTreeMap::new();
        for b in 0..self.dim() {
            m.entry(self.block_of(b)).or_default().push(b);
        }
        m
    }

    pub fn block_dim(&self, left: usize, right: usize, degree: i64) -> usize {
        self.basis
            .iter()
            .filter(|b| b.left == left && b.right == right && b.degree == degree)
            .count()
    }

    /// `dims[d]` = dim A_d.
    pub fn dims_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for b in &self.basis {
            *m.entry(b.degree).or_insert(0) += 1;
        }
        m
    }

    pub fn min_degree(&self) -> i64 {
        self.basis.iter().map(|b| b.degree).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> i64 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    pub fn is_positively_graded(&self) -> bool {
        self.basis.iter().all(|b| b.degree >= 0)
    }

    /// Largest degree occurring in `e_v A`.
    pub fn max_degree_at(&self, v: usize) -> i64 {
        self.basis
            .iter()
            .filter(|b| b.left == v)
            .map(|b| b.degree)
            .max()
            .unwrap_or(0)
    }

    /// Splits an element into its block components.
    pub fn block_components(&self, x: &Elem) -> BTreeMap<BlockKey, Elem> {
        let mut m: BTreeMap<BlockKey, Elem> = BTreeMap::new();
        for (k, c) in x {
            m.entry(self.block_of(*k)).or_default().push((*k, c.clone()));
        }
        m
    }

    /// Homogeneous block-adapted basis of the span of `elems`, assuming the
    /// span is a sum of its block components.
    pub fn block_basis(&self, elems: &[Elem]) -> Vec<Elem> {
        let blocks = self.blocks();
        let mut per_block: BTreeMap<BlockKey, Vec<Elem>> = BTreeMap::new();
        for x in elems {
            for (key, comp) in self.block_components(x) {
                per_block.entry(key).or_default().push(comp);
            }
        }
        let mut out = Vec::new();
        for (key, comps) in per_block {
            let idx = &blocks[&key];
            let local: Vec<Vec<Scalar>> = comps
                .iter()
                .map(|c| {
                    let mut v = vec![self.field.zero(); idx.len()];
                    for (k, s) in c {
                        let pos = idx.iter().position(|i| i == k).unwrap();
                        v[pos] = s.clone();
                    }
                    v
                })
                .collect();
            let sub = Subspace::span(self.field, idx.len(), &local);
            for r in 0..sub.dim() {
                let row = sub.basis().row(r);
                out.push(
                    row.iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .map(|(p, s)| (idx[p], s.clone()))
                        .collect(),
                );
            }
        }
        out
    }

    /// Homogeneous basis of the Jacobson radical.
    pub fn radical(&self) -> &[Elem] {
        self.cache.radical.get_or_init(|| {
            let dense = radical_basis(self);
            let elems: Vec<Elem> = dense.iter().map(|v| Self::from_dense(v)).collect();
            self.block_basis(&elems)
        })
    }

    pub fn radical_square(&self) -> &[Elem] {
        self.cache.radical_square.get_or_init(|| {
            let j = self.radical();
            let mut prods = Vec::new();
            for x in j {
                for y in j {
                    let p = self.mul(x, y);
                    if !p.is_empty() {
                        prods.push(p);
                    }
                }
            }
            self.block_basis(&prods)
        })
    }

    /// Homogeneous basis of J^k (J^0 = A).
    pub fn radical_power(&self, k: usize) -> Vec<Elem> {
        if k == 0 {
            return (0..self.dim()).map(|b| self.basis_elem(b)).collect();
        }
        let mut cur: Vec<Elem> = self.radical().to_vec();
        for _ in 1..k {
            let mut prods = Vec::new();
            for x in &cur {
                for y in self.radical() {
                    let p = self.mul(x, y);
                    if !p.is_empty() {
                        prods.push(p);
                    }
                }
            }
            cur = self.block_basis(&prods);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Homogeneous basis of Soc(A_A) = {x : x·J = 0}.
    pub fn socle(&self) -> Vec<Elem> {
        let n = self.dim();
        let j = self.radical();
        let mut eqs = crate::sparse::SparseEchelon::new(self.field, n);
        for y in j {
            // coefficient of b_k in x·y is linear in x
            let mut rows: BTreeMap<usize, Elem> = BTreeMap::new();
            for s in 0..n {
                for (t, c) in y {
                    for (k, d) in &self.table[s][*t] {
                        rows.entry(*k).or_default().push((s, c * d));
                    }
                }
            }
            for (_, r) in rows {
                eqs.insert(r);
            }
        }
        let kernel: Vec<Elem> = eqs.kernel_basis().iter().map(|v| Self::from_dense(v)).collect();
        self.block_basis(&kernel)
    }

    /// Algebra generators beyond the vertex idempotents: a lift of J/J² and a
    /// complement of J + span(e_v), all block-homogeneous.
    pub fn generators(&self) -> &[Elem] {
        self.cache.generators.get_or_init(|| {
            let blocks = self.blocks();
            let mut gens = Vec::new();
            let j = self.radical();
            let j2 = self.radical_square();
            for (key, idx) in &blocks {
                let local = |elems: &[Elem]| -> Vec<Vec<Scalar>> {
                    elems
                        .iter()
                        .filter(|x| x.first().map(|(k, _)| self.block_of(*k)) == Some(*key))
                        .map(|x| {
                            let mut v = vec![self.field.zero(); idx.len()];
                            for (k, s) in x {
                                v[idx.iter().position(|i| i == k).unwrap()] = s.clone();
                            }
                            v
                        })
                        .collect()
                };
                let mut base = local(j2);
                let jl = local(j);
                let mut sub = Subspace::span(self.field, idx.len(), &base);
                for v in jl {
                    if !sub.contains(&v) {
                        base.push(v.clone());
                        sub = Subspace::span(self.field, idx.len(), &base);
                        gens.push(
                            v.iter()
                                .enumerate()
                                .filter(|(_, s)| !s.is_zero())
                                .map(|(p, s)| (idx[p], s.clone()))
                                .collect(),
                        );
                    }
                }
                if key.left == key.right && key.degree == 0 {
                    let e = self.idempotents[key.left];
                    let mut v = vec![self.field.zero(); idx.len()];
                    v[idx.iter().position(|&i| i == e).unwrap()] = self.field.one();
                    base.push(v);
                    sub = Subspace::span(self.field, idx.len(), &base);
                }
                for (p, &b) in idx.iter().enumerate() {
                    let mut v = vec![self.field.zero(); idx.len()];
                    v[p] = self.field.one();
                    if !sub.contains(&v) {
                        base.push(v);
                        sub = Subspace::span(self.field, idx.len(), &base);
                        gens.push(vec![(b, self.field.one())]);
                    }
                }
            }
            gens
        })
    }

    /// dim e_v (J/J²) e_w summed over degrees: arrow counts of the Gabriel quiver.
    pub fn gabriel_quiver(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0; n]; n];
        for (key, _) in self.blocks() {
            let count = |elems: &[Elem]| {
                elems
                    .iter()
                    .filter(|x| x.first().map(|(k, _)| self.block_of(*k)) == Some(key))
                    .count()
            };
            m[key.left][key.right] += count(self.radical()) - count(self.radical_square());
        }
        m
    }

    /// Vertices v whose top e_v A / e_v J is not one-dimensional over the field.
    pub fn non_split_vertices(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut rad_dims = vec![vec![0usize; n]; n];
        for x in self.radical() {
            let k = self.block_of(x[0].0);
            rad_dims[k.left][k.right] += 1;
        }
        (0..n)
            .filter(|&v| {
                let top: usize = (0..n)
                    .map(|w| {
                        let total: usize = self
                            .basis
                            .iter()
                            .filter(|b| b.left == v && b.right == w)
                            .count();
                        total - rad_dims[v][w]
                    })
                    .sum();
                top != 1
            })
            .collect()
    }

    /// Memoized Nakayama permutation (`None` when not self-injective).
    pub(crate) fn nakayama_cached(&self, compute: impl FnOnce() -> Option<Vec<usize>>) -> Option<Vec<usize>> {
        self.cache.nakayama.get_or_init(compute).clone()
    }

    pub fn opposite(&self) -> Arc<GradedAlgebra> {
        self.cache
            .opposite
            .get_or_init(|| {
                let basis = self
                    .basis
                    .iter()
                    .map(|b| BasisElement {
                        label: b.label.clone(),
                        degree: b.degree,
                        left: b.right,
                        right: b.left,
                    })
                    .collect();
                let n = self.dim();
                let table = (0..n)
                    .map(|s| (0..n).map(|t| self.table[t][s].clone()).collect())
                    .collect();
                GradedAlgebra::new(
                    self.field,
                    self.vertices.clone(),
                    basis,
                    self.idempotents.clone(),
                    table,
                )
                .expect("opposite of a valid algebra")
            })
            .clone()
    }

    /// Subalgebra spanned by the basis elements of degree 0, with the index
    /// map from its basis into this algebra's basis.
    pub fn degree_zero_part(&self) -> (Arc<GradedAlgebra>, Vec<usize>) {
        let keep: Vec<usize> = (0..self.dim()).filter(|&b| self.basis[b].degree == 0).collect();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let basis = keep.iter().map(|&b| self.basis[b].clone()).collect();
        let table = keep
            .iter()
            .map(|&s| {
                keep.iter()
                    .map(|&t| {
                        self.table[s][t]
                            .iter()
                            .map(|(k, c)| (pos[k], c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let idem = self.idempotents.iter().map(|e| pos[e]).collect();
        let alg = GradedAlgebra::new(self.field, self.vertices.clone(), basis, idem, table)
            .expect("degree-zero part is a subalgebra");
        (alg, keep)
    }

    /// Checks (bc)d = b(cd) on every basis triple.
    pub fn check_associative(&self) -> bool {
        let n = self.dim();
        for s in 0..n {
            for t in 0..n {
                let st = &self.table[s][t];
                for u in 0..n {
                    let left = self.mul(st, &self.basis_elem(u));
                    let right = self.mul(&self.basis_elem(s), &self.table[t][u]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical JSON dump used by golden tests and the CLI.
    pub fn to_json(&self) -> Value {
        let mut products = Vec::new();
        for s in 0..self.dim() {
            for t in 0..self.dim() {
                let p = &self.table[s][t];
                if p.is_empty() {
                    continue;
                }
                let terms: Vec<Value> = p
                    .iter()
                    .map(|(k, c)| json!([k, c.to_string()]))
                    .collect();
                products.push(json!({"left": s, "right": t, "result": terms}));
            }
        }
        json!({
            "field": self.field,
            "grading": "Z",
            "vertices": self.vertices,
            "basis": self.basis,
            "idempotents": self.idempotents,
            "products": products,
        })
    }

    /// Degrees occurring in the algebra, ascending.
    pub fn degrees(&self) -> BTreeSet<i64> {
        self.basis.iter().map(|b| b.degree).collect()
    }
}

impl StructureConstants for GradedAlgebra {
    fn field(&self) -> Field {
        self.field
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn product(&self, s: usize, t: usize) -> Vec<Scalar> {
        self.to_dense(&self.table[s][t])
    }
}

/// Builder for algebras whose multiplication is given on basis pairs.
pub struct AlgebraBuilder {
    field: Field,
    vertices: Vec<String>,
    basis: Vec<BasisElement>,
    idempotents: Vec<usize>,
}

impl AlgebraBuilder {
    pub fn new(field: Field, vertices: Vec<String>) -> Self {
        AlgebraBuilder {
            field,
            vertices,
            basis: Vec::new(),
            idempotents: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, degree: i64, left: usize, right: usize) -> usize {
        self.basis.push(BasisElement {
            label: label.into(),
            degree,
            left,
            right,
        });
        self.basis.len() - 1
    }

    pub fn set_idempotents(&mut self, idem: Vec<usize>) {
        self.idempotents = idem;
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn finish(self, mul: impl Fn(usize, usize) -> Elem) -> Result<Arc<GradedAlgebra>> {
        let n = self.basis.len();
        let table = (0..n)
            .map(|s| (0..n).map(|t| normalize_row(mul(s, t))).collect())
            .collect();
        GradedAlgebra::new(self.field, self.vertices, self.basis, self.idempotents, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K[x]/(x^n), deg x = 1.
    fn truncated(n: usize) -> Arc<GradedAlgebra> {
        let f = Field::Rational;
        let mut b = AlgebraBuilder::new(f, vec!["1".into()]);
        for i in 0..n {
            b.push(if i == 0 { "e".to_string() } else { format!("x^{i}") }, i as i64, 0, 0);
        }
        b.set_idempotents(vec![0]);
        b.finish(|s, t| if s + t < n { vec![(s + t, f.one())] } else { vec![] })
            .unwrap()
    }

    #[test]
    fn truncated_polynomial_structure() {
        let a = truncated(3);
        assert!(a.check_associative());
        assert_eq!(a.radical().len(), 2);
        let soc = a.socle();
        assert_eq!(soc.len(), 1);
        assert_eq!(soc[0][0].0, 2);
        assert_eq!(a.generators().len(), 1);
        assert_eq!(a.gabriel_quiver(), vec![vec![1]]);
        assert!(a.non_split_vertices().is_empty());
        let op = a.opposite();
        assert!(op.same_as(&a));
    }

    #[test]
    fn rejects_non_idempotent_unit() {
        let f = Field::Rational;
        let mut b = AlgebraBuilder::new(f, vec!["1".into()]);
        b.push("e", 0, 0, 0);
        b.set_idempotents(vec![0]);
        assert!(b.finish(|_, _| vec![(0, f.from_i64(2))]).is_err());
    }
}
