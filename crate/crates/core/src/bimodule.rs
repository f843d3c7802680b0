//! The (Γ, A)-bimodule M = ⊕_{i=ℓ}^{2ℓ−1} A(i)_{≥1−ℓ} and its relatives in
//! the ℓ×ℓ matrix picture, where Γ is the Beilinson algebra acting by
//! matrix multiplication.
//!
//! A cell (r, c, b) is the basis element b ∈ A_{offset+c−r} in row r and
//! column c. It sits in degree c+1−ℓ at the right vertex of b; A acts on the
//! right by moving columns and Γ acts by matrix multiplication.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::constructions::{beilinson_algebra, beilinson_entries};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::{find_isomorphism, is_homomorphism};
use crate::matrix::Matrix;
use crate::module::{GradedModule, Grading};
use crate::resolution::syzygy;
use crate::structure::{gorenstein_parameter, symmetrizing_form};

/// A right A-module in the matrix picture together with the Γ-actions.
#[derive(Clone, Debug)]
pub struct StripModule {
    pub ell: usize,
    pub offset: i64,
    /// (row, column, algebra basis element) per module basis vector.
    pub cells: Vec<(usize, i64, usize)>,
    pub index: BTreeMap<(usize, i64, usize), usize>,
    pub module: GradedModule,
    /// Left multiplication by each Beilinson basis element, acting on row
    /// vectors: γ·x = x·left[γ].
    pub left: Vec<Matrix>,
    /// Right multiplication by each Beilinson basis element.
    pub right: Vec<Matrix>,
}

impl StripModule {
    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    fn build(
        a: &Arc<GradedAlgebra>,
        ell: usize,
        offset: i64,
        columns: impl Fn(usize) -> (i64, i64),
    ) -> StripModule {
        let field = a.field();
        let mut raw = Vec::new();
        for r in 0..ell {
            let (lo, hi) = columns(r);
            for c in lo..=hi {
                for (b, e) in a.basis().iter().enumerate() {
                    if e.degree == offset + c - r as i64 {
                        raw.push((r, c, b));
                    }
                }
            }
        }
        let raw_index: BTreeMap<(usize, i64, usize), usize> =
            raw.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let n = raw.len();
        let actions: Vec<Matrix> = (0..a.dim())
            .map(|g| {
                let mut m = Matrix::zeros(field, n, n);
                let d = a.degree(g);
                for (i, &(r, c, x)) in raw.iter().enumerate() {
                    for (z, s) in a.product(x, g) {
                        if let Some(&j) = raw_index.get(&(r, c + d, *z)) {
                            m.set(i, j, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        let slots = raw
            .iter()
            .map(|&(_, c, b)| (c + 1 - ell as i64, a.basis()[b].right))
            .collect();
        let (module, perm) =
            GradedModule::assemble(a.clone(), Grading::Z, slots, actions).expect("strip module");
        let mut cells = vec![(0, 0, 0); n];
        for (i, &k) in raw.iter().enumerate() {
            cells[perm[i]] = k;
        }
        let index: BTreeMap<(usize, i64, usize), usize> =
            cells.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let entries = beilinson_entries(a, ell);
        let left = entries
            .iter()
            .map(|&(p, q, g)| {
                let mut m = Matrix::zeros(field, n, n);
                for (i, &(r, c, y)) in cells.iter().enumerate() {
                    if r != q {
                        continue;
                    }
                    for (z, s) in a.product(g, y) {
                        if let Some(&j) = index.get(&(p, c, *z)) {
                            m.set(i, j, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        let right = entries
            .iter()
            .map(|&(p, q, g)| {
                let mut m = Matrix::zeros(field, n, n);
                for (i, &(r, c, x)) in cells.iter().enumerate() {
                    if c != p as i64 {
                        continue;
                    }
                    for (z, s) in a.product(x, g) {
                        if let Some(&j) = index.get(&(r, q as i64, *z)) {
                            m.set(i, j, s.clone());
                        }
                    }
                }
                m
            })
            .collect();
        StripModule {
            ell,
            offset,
            cells,
            index,
            module,
            left,
            right,
        }
    }

    /// The left Γ-action is an action commuting with the right A-action.
    pub fn check_left_action(&self, gamma: &GradedAlgebra) -> bool {
        let n = self.dim();
        let unit = gamma.unit();
        let mut id = Matrix::zeros(self.module.field(), n, n);
        for (g, s) in &unit {
            id = id.add(&self.left[*g].scale(s));
        }
        if id != Matrix::identity(self.module.field(), n) {
            return false;
        }
        for (s, ls) in self.left.iter().enumerate() {
            if !is_homomorphism(&self.module, &self.module, ls) {
                return false;
            }
            for (t, lt) in self.left.iter().enumerate() {
                // (st)·x = s·(t·x)
                let mut lhs = Matrix::zeros(self.module.field(), n, n);
                for (k, c) in gamma.product(s, t) {
                    lhs = lhs.add(&self.left[*k].scale(c));
                }
                if lhs != lt.mul(ls) {
                    return false;
                }
            }
        }
        true
    }

    /// The right Γ-action is an action commuting with the left one.
    pub fn check_right_action(&self, gamma: &GradedAlgebra) -> bool {
        let n = self.dim();
        for (s, rs) in self.right.iter().enumerate() {
            for (t, rt) in self.right.iter().enumerate() {
                let mut lhs = Matrix::zeros(self.module.field(), n, n);
                for (k, c) in gamma.product(s, t) {
                    lhs = lhs.add(&self.right[*k].scale(c));
                }
                if lhs != rs.mul(rt) {
                    return false;
                }
            }
            for l in &self.left {
                if l.mul(rs) != rs.mul(l) {
                    return false;
                }
            }
        }
        true
    }
}

/// The bimodule M and the Beilinson algebra acting on it.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub ell: usize,
    pub gamma: Arc<GradedAlgebra>,
    pub m: StripModule,
}

fn parameter(a: &GradedAlgebra) -> Result<usize> {
    let ell = gorenstein_parameter(a)?.ok_or(Error::NoGorensteinParameter)?;
    if ell < 1 {
        return Err(Error::InvalidArgument(
            "the Gorenstein parameter must be at least 1".into(),
        ));
    }
    Ok(ell as usize)
}

/// T̲ = ⊕_{i<ℓ} A(i)_{≤0}; row r is A(ℓ−1−r)_{≤0}.
pub fn t_strip(a: &Arc<GradedAlgebra>, ell: usize) -> StripModule {
    StripModule::build(a, ell, 0, |r| (r as i64, ell as i64 - 1))
}

/// M; row r is A(2ℓ−1−r)_{≥1−ℓ}, with block (r, c) = A_{ℓ+c−r}.
pub fn m_strip(a: &Arc<GradedAlgebra>, ell: usize) -> StripModule {
    StripModule::build(a, ell, ell as i64, |r| (0, r as i64))
}

/// ⊕_{i=ℓ}^{2ℓ−1} A(i); row r is A(2ℓ−1−r).
pub fn middle_strip(a: &Arc<GradedAlgebra>, ell: usize) -> StripModule {
    StripModule::build(a, ell, ell as i64, |r| (r as i64 - ell as i64, r as i64))
}

/// T̲(ℓ); row r is A(ℓ−1−r)_{≤0}(ℓ).
pub fn shifted_t_strip(a: &Arc<GradedAlgebra>, ell: usize) -> StripModule {
    StripModule::build(a, ell, ell as i64, |r| (r as i64 - ell as i64, -1))
}

pub fn build_m(a: &Arc<GradedAlgebra>) -> Result<Bimodule> {
    let ell = parameter(a)?;
    let gamma = beilinson_algebra(a, ell)?;
    Ok(Bimodule {
        ell,
        gamma,
        m: m_strip(a, ell),
    })
}

impl Bimodule {
    pub fn actions_commute(&self) -> bool {
        self.m.check_left_action(&self.gamma) && self.m.check_right_action(&self.gamma)
    }
}

/// Cell-to-cell map between strips: the identity on shared cells.
fn cell_map(source: &StripModule, target: &StripModule) -> Matrix {
    let f = source.module.field();
    let mut m = Matrix::zeros(f, source.dim(), target.dim());
    for (i, key) in source.cells.iter().enumerate() {
        if let Some(&j) = target.index.get(key) {
            m.set(i, j, f.one());
        }
    }
    m
}

fn equivariant(source: &StripModule, target: &StripModule, map: &Matrix) -> bool {
    source
        .left
        .iter()
        .zip(&target.left)
        .all(|(ls, lt)| ls.mul(map) == map.mul(lt))
}

#[derive(Clone, Debug, Serialize)]
pub struct SyzygyReport {
    /// dim M, dim ⊕A(i), dim T̲(ℓ).
    pub dims: (usize, usize, usize),
    pub exact: bool,
    pub equivariant: bool,
    /// The three terms agree with the modules built by shifting and
    /// truncating projectives, and M ≅ Ω(T̲(ℓ)).
    pub terms_match: bool,
}

impl SyzygyReport {
    pub fn holds(&self) -> bool {
        self.exact && self.equivariant && self.terms_match
    }
}

/// 0 → M → ⊕_{i=ℓ}^{2ℓ−1} A(i) → T̲(ℓ) → 0.
pub fn verify_m_syzygy_sequence(a: &Arc<GradedAlgebra>, seed: u64) -> Result<SyzygyReport> {
    let ell = parameter(a)?;
    let m = m_strip(a, ell);
    let mid = middle_strip(a, ell);
    let q = shifted_t_strip(a, ell);
    let inc = cell_map(&m, &mid);
    let proj = cell_map(&mid, &q);
    let exact = is_homomorphism(&m.module, &mid.module, &inc)
        && is_homomorphism(&mid.module, &q.module, &proj)
        && inc.mul(&proj).is_zero()
        && inc.rank() == m.dim()
        && proj.rank() == q.dim()
        && m.dim() + q.dim() == mid.dim();
    let equivariant = equivariant(&m, &mid, &inc) && equivariant(&mid, &q, &proj);

    let l = ell as i64;
    let regular = GradedModule::regular(a);
    let frees: Vec<GradedModule> = (l..2 * l).map(|i| regular.shift(i)).collect();
    let (free, _) = GradedModule::direct_sum(a, Grading::Z, &frees);
    let truncated: Vec<GradedModule> = frees
        .iter()
        .map(|p| p.truncate_below(1 - l).map(|t| t.0))
        .collect::<Result<_>>()?;
    let (m_direct, _) = GradedModule::direct_sum(a, Grading::Z, &truncated);
    let t_parts: Vec<GradedModule> = (0..l)
        .map(|i| regular.shift(i).truncate_above(0).map(|t| t.0))
        .collect::<Result<_>>()?;
    let (t, _) = GradedModule::direct_sum(a, Grading::Z, &t_parts);
    let t_shift = t.shift(l);
    let found = |x: &GradedModule, y: &GradedModule| -> Result<bool> {
        Ok(find_isomorphism(x, y, seed)?.is_found())
    };
    let terms_match = found(&mid.module, &free)?
        && found(&m.module, &m_direct)?
        && found(&q.module, &t_shift)?
        && found(&syzygy(&t_shift), &m.module)?;
    Ok(SyzygyReport {
        dims: (m.dim(), mid.dim(), q.dim()),
        exact,
        equivariant,
        terms_match,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorReport {
    pub tensor_dim: usize,
    pub m_dim: usize,
    /// Multiplication is well defined on the tensor product, A-linear,
    /// Γ-linear and bijective.
    pub multiplication_iso: bool,
    /// An isomorphism was also found by generic search.
    pub search_iso: bool,
}

impl TensorReport {
    pub fn holds(&self) -> bool {
        self.tensor_dim == self.m_dim && self.multiplication_iso && self.search_iso
    }
}

/// M ⊗_Γ T̲ → M, m ⊗ t ↦ mt.
pub fn verify_m_tensor_t(a: &Arc<GradedAlgebra>, seed: u64) -> Result<TensorReport> {
    let ell = parameter(a)?;
    let field = a.field();
    let m = m_strip(a, ell);
    let t = t_strip(a, ell);
    let (dm, dt) = (m.dim(), t.dim());
    let n = dm * dt;
    let slots = (0..n).map(|k| t.module.slot(k % dt)).collect();
    let identity_m = Matrix::identity(field, dm);
    let actions = t.module.actions().iter().map(|x| kron(&identity_m, x)).collect();
    let (big, perm) = GradedModule::assemble(a.clone(), Grading::Z, slots, actions)?;
    let at = |i: usize, j: usize| perm[i * dt + j];

    let mut relations = Vec::new();
    for (rg, lg) in m.right.iter().zip(&t.left) {
        for i in 0..dm {
            for j in 0..dt {
                let mut v = vec![field.zero(); n];
                for (k, c) in rg.row(i).iter().enumerate() {
                    if !c.is_zero() {
                        v[at(k, j)] = &v[at(k, j)] + c;
                    }
                }
                for (k, c) in lg.row(j).iter().enumerate() {
                    if !c.is_zero() {
                        v[at(i, k)] = &v[at(i, k)] - c;
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    relations.push(v);
                }
            }
        }
    }
    let (tensor, _) = big.quotient(&relations);

    let mut mult = Matrix::zeros(field, n, dm);
    for (i, &(r, c, x)) in m.cells.iter().enumerate() {
        for (j, &(tr, tc, y)) in t.cells.iter().enumerate() {
            if tr as i64 != c {
                continue;
            }
            for (z, s) in a.product(x, y) {
                if let Some(&k) = m.index.get(&(r, tc, *z)) {
                    mult.set(at(i, j), k, s.clone());
                }
            }
        }
    }
    let kills_relations = relations
        .iter()
        .all(|v| mult.left_apply(v).iter().all(|x| x.is_zero()));
    let left_linear = m.left.iter().all(|l| {
        let lifted = permute(&kron(l, &Matrix::identity(field, dt)), &perm);
        lifted.mul(&mult) == mult.mul(l)
    });
    let multiplication_iso = kills_relations
        && is_homomorphism(&big, &m.module, &mult)
        && left_linear
        && mult.rank() == dm
        && tensor.dim() == dm;
    let search_iso = tensor.dim() == dm && find_isomorphism(&tensor, &m.module, seed)?.is_found();
    Ok(TensorReport {
        tensor_dim: tensor.dim(),
        m_dim: dm,
        multiplication_iso,
        search_iso,
    })
}

fn kron(x: &Matrix, y: &Matrix) -> Matrix {
    let f = x.field();
    let mut out = Matrix::zeros(f, x.rows() * y.rows(), x.cols() * y.cols());
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            let c = x.get(i, j);
            if c.is_zero() {
                continue;
            }
            for k in 0..y.rows() {
                for l in 0..y.cols() {
                    let d = y.get(k, l);
                    if !d.is_zero() {
                        out.set(i * y.rows() + k, j * y.cols() + l, c * d);
                    }
                }
            }
        }
    }
    out
}

/// Rewrites a matrix on K^n in the coordinates given by `perm` (old → new).
fn permute(x: &Matrix, perm: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(x.field(), x.rows(), x.cols());
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            let c = x.get(i, j);
            if !c.is_zero() {
                out.set(perm[i], perm[j], c.clone());
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DualReport {
    pub m_dim: usize,
    pub gamma_dim: usize,
    pub nondegenerate: bool,
    pub bimodule_map: bool,
}

impl DualReport {
    pub fn holds(&self) -> bool {
        self.m_dim == self.gamma_dim && self.nondegenerate && self.bimodule_map
    }
}

/// M ≅ DΓ via (x_ij) ↦ (φ(x_ij)), where φ(x)(y) = t(xy) for a symmetrizing
/// form t of degree ℓ; as a pairing, ⟨m, γ⟩ = t(tr(mγ)).
pub fn verify_m_is_dual_gamma(a: &Arc<GradedAlgebra>, seed: u64) -> Result<DualReport> {
    let ell = parameter(a)?;
    let form = symmetrizing_form(a, Some(ell as i64), seed).ok_or(Error::NotSymmetric)?;
    let field = a.field();
    let gamma = beilinson_algebra(a, ell)?;
    let m = m_strip(a, ell);
    let entries = beilinson_entries(a, ell);
    let mut pairing = Matrix::zeros(field, m.dim(), gamma.dim());
    for (i, &(r, c, x)) in m.cells.iter().enumerate() {
        for (k, &(p, q, g)) in entries.iter().enumerate() {
            if p as i64 != c || q != r {
                continue;
            }
            let mut acc = field.zero();
            for (z, s) in a.product(x, g) {
                acc = &acc + &(s * &form[*z]);
            }
            pairing.set(i, k, acc);
        }
    }
    let nondegenerate = pairing.is_square() && pairing.is_invertible();
    // ⟨γ'm, γ⟩ = ⟨m, γγ'⟩ and ⟨mγ', γ⟩ = ⟨m, γ'γ⟩
    let times = |x: usize, y: usize| -> Vec<Scalar> { gamma.to_dense(gamma.product(x, y)) };
    let mut bimodule_map = true;
    'outer: for g2 in 0..gamma.dim() {
        let lhs_left = m.left[g2].mul(&pairing);
        let lhs_right = m.right[g2].mul(&pairing);
        for i in 0..m.dim() {
            for g in 0..gamma.dim() {
                let dot = |v: &[Scalar]| -> Scalar {
                    let mut acc = field.zero();
                    for (k, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            acc = &acc + &(c * pairing.get(i, k));
                        }
                    }
                    acc
                };
                if *lhs_left.get(i, g) != dot(&times(g, g2)) || *lhs_right.get(i, g) != dot(&times(g2, g)) {
                    bimodule_map = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(DualReport {
        m_dim: m.dim(),
        gamma_dim: gamma.dim(),
        nondegenerate,
        bimodule_map,
    })
}
