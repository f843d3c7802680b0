//! Degree-0 homomorphism spaces, stable Hom and isomorphism search.
//!
//! A map `X → Y` is a matrix `F` of shape `dim X × dim Y` acting on row
//! vectors, so `x ↦ x·F` and the composite `X → Y → Z` is `F·G`.

use std::collections::BTreeMap;
use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Quotient, Subspace};
use crate::module::{GradedModule, Slot};
use crate::resolution::projective_cover;
use crate::sparse::{SparseEchelon, SparseRow};

/// Hom₀(X, Y) with a basis of maps. The coordinates of a map are its entries
/// at the `free` positions, one per basis element.
#[derive(Clone, Debug)]
pub struct HomSpace {
    field: Field,
    source_dim: usize,
    target_dim: usize,
    basis: Vec<Matrix>,
    free: Vec<(usize, usize)>,
}

struct Unknowns {
    blocks: BTreeMap<Slot, (usize, Range<usize>, Range<usize>)>,
    count: usize,
}

impl Unknowns {
    fn new(x: &GradedModule, y: &GradedModule) -> Unknowns {
        let xb = x.blocks();
        let yb = y.blocks();
        let mut blocks = BTreeMap::new();
        let mut count = 0;
        for (slot, rx) in &xb {
            if let Some(ry) = yb.get(slot) {
                blocks.insert(*slot, (count, rx.clone(), ry.clone()));
                count += rx.len() * ry.len();
            }
        }
        Unknowns { blocks, count }
    }

    fn index(&self, slot: Slot, i: usize, j: usize) -> usize {
        let (off, rx, ry) = &self.blocks[&slot];
        off + (i - rx.start) * ry.len() + (j - ry.start)
    }

    fn position(&self, idx: usize) -> (usize, usize) {
        for (off, rx, ry) in self.blocks.values() {
            let size = rx.len() * ry.len();
            if idx < off + size {
                let local = idx - off;
                return (rx.start + local / ry.len(), ry.start + local % ry.len());
            }
        }
        unreachable!("unknown index in range")
    }
}

pub fn hom0(x: &GradedModule, y: &GradedModule) -> Result<HomSpace> {
    if !x.compatible(y) {
        return Err(Error::IncompatibleModules);
    }
    let f = x.field();
    let a = x.algebra();
    let unknowns = Unknowns::new(x, y);
    let mut eqs = SparseEchelon::new(f, unknowns.count);
    let grading = x.grading();
    let xb = x.blocks();
    let yb = y.blocks();
    for g in a.generators() {
        let key = a.block_of(g[0].0);
        let mx = x.action_of(g);
        let my = y.action_of(g);
        for (&(d, u), rx) in &xb {
            if u != key.left {
                continue;
            }
            let t = (grading.add(d, key.degree), key.right);
            let Some(ry_t) = yb.get(&t) else { continue };
            let rx_t = xb.get(&t);
            let ry_s = yb.get(&(d, u));
            for i in rx.clone() {
                for j in ry_t.clone() {
                    // (x_i·g)F = (x_i F)·g
                    let mut row: SparseRow = Vec::new();
                    if let Some(rx_t) = rx_t {
                        for k in rx_t.clone() {
                            let c = mx.get(i, k);
                            if !c.is_zero() {
                                row.push((unknowns.index(t, k, j), c.clone()));
                            }
                        }
                    }
                    if let Some(ry_s) = ry_s {
                        for k in ry_s.clone() {
                            let c = my.get(k, j);
                            if !c.is_zero() {
                                row.push((unknowns.index((d, u), i, k), -c));
                            }
                        }
                    }
                    let row = crate::sparse::normalize_row(row);
                    if !row.is_empty() {
                        eqs.insert(row);
                    }
                }
            }
        }
    }
    let free_cols = eqs.free_columns();
    let basis = eqs
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(f, x.dim(), y.dim());
            for (idx, s) in v.into_iter().enumerate() {
                if !s.is_zero() {
                    let (i, j) = unknowns.position(idx);
                    m.set(i, j, s);
                }
            }
            m
        })
        .collect();
    Ok(HomSpace {
        field: f,
        source_dim: x.dim(),
        target_dim: y.dim(),
        basis,
        free: free_cols.into_iter().map(|c| unknowns.position(c)).collect(),
    })
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Coordinates of a homomorphism in the basis.
    pub fn coordinates(&self, map: &Matrix) -> Vec<Scalar> {
        self.free.iter().map(|&(i, j)| map.get(i, j).clone()).collect()
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.source_dim, self.target_dim);
        for (b, c) in self.basis.iter().zip(coeffs) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }
}

/// Checks that `map` commutes with the action and preserves slots.
pub fn is_homomorphism(x: &GradedModule, y: &GradedModule, map: &Matrix) -> bool {
    if map.rows() != x.dim() || map.cols() != y.dim() {
        return false;
    }
    for i in 0..x.dim() {
        for j in 0..y.dim() {
            if !map.get(i, j).is_zero() && x.slot(i) != y.slot(j) {
                return false;
            }
        }
    }
    (0..x.algebra().dim()).all(|b| x.action(b).mul(map) == map.mul(y.action(b)))
}

/// Stable Hom: Hom₀(X, Y) modulo maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom: HomSpace,
    pub projective_part: Subspace,
    quotient: Quotient,
}

pub fn stable_hom0(x: &GradedModule, y: &GradedModule) -> Result<StableHom> {
    let hom = hom0(x, y)?;
    let f = x.field();
    let cover = projective_cover(y);
    let through = hom0(x, &cover.module)?;
    let coords: Vec<Vec<Scalar>> = through
        .basis()
        .iter()
        .map(|h| hom.coordinates(&h.mul(&cover.map)))
        .collect();
    let projective_part = Subspace::span(f, hom.dim(), &coords);
    let quotient = projective_part.quotient(f);
    Ok(StableHom {
        hom,
        projective_part,
        quotient,
    })
}

impl StableHom {
    pub fn dim(&self) -> usize {
        self.hom.dim() - self.projective_part.dim()
    }

    /// Coordinates of the class of `map` in the stable quotient.
    pub fn stable_coordinates(&self, map: &Matrix) -> Vec<Scalar> {
        self.quotient.projection.left_apply(&self.hom.coordinates(map))
    }

    /// Representatives of a basis of the stable quotient.
    pub fn representatives(&self) -> Vec<Matrix> {
        (0..self.quotient.section.rows())
            .map(|k| self.hom.combination(self.quotient.section.row(k)))
            .collect()
    }

    pub fn factors_through_projective(&self, map: &Matrix) -> bool {
        self.stable_coordinates(map).iter().all(|s| s.is_zero())
    }
}

/// Outcome of an isomorphism search.
#[derive(Clone, Debug)]
pub enum IsoSearch {
    Found(Matrix),
    /// Certified: the dimension vectors differ.
    Absent,
    /// No isomorphism among the candidates tried.
    NotFound,
}

impl IsoSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoSearch::Found(_))
    }
}

pub(crate) fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-50..=50)),
        Field::Prime { p } => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

/// Candidate elements of a space of dimension `dim`: basis vectors, seeded
/// random combinations, and every vector when the space is small and finite.
pub(crate) fn candidate_coefficients(field: Field, dim: usize, seed: u64) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    if dim == 0 {
        return out;
    }
    if let Field::Prime { p } = field {
        if (p as f64).powi(dim as i32) <= 4096.0 {
            let total = p.pow(dim as u32);
            for n in 1..total {
                let mut v = Vec::with_capacity(dim);
                let mut m = n;
                for _ in 0..dim {
                    v.push(field.from_i64((m % p) as i64));
                    m /= p;
                }
                out.push(v);
            }
            return out;
        }
    }
    for k in 0..dim {
        let mut v = vec![field.zero(); dim];
        v[k] = field.one();
        out.push(v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        out.push((0..dim).map(|_| random_scalar(field, &mut rng)).collect());
    }
    out
}

pub fn find_isomorphism(x: &GradedModule, y: &GradedModule, seed: u64) -> Result<IsoSearch> {
    if !x.compatible(y) {
        return Err(Error::IncompatibleModules);
    }
    if x.dim_vector() != y.dim_vector() {
        return Ok(IsoSearch::Absent);
    }
    if x.dim() == 0 {
        return Ok(IsoSearch::Found(Matrix::zeros(x.field(), 0, 0)));
    }
    let hom = hom0(x, y)?;
    for c in candidate_coefficients(x.field(), hom.dim(), seed) {
        let m = hom.combination(&c);
        if m.is_invertible() {
            return Ok(IsoSearch::Found(m));
        }
    }
    Ok(IsoSearch::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{path_algebra_a, truncated_polynomial};
    use crate::module::Grading;

    #[test]
    fn hom_between_projectives() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        // Hom₀(A, A(i)) ≅ A_i
        for (i, expect) in [(0, 1), (1, 1), (2, 1), (3, 0), (-1, 0)] {
            let h = hom0(&p, &p.shift(i)).unwrap();
            assert_eq!(h.dim(), expect, "shift {i}");
            for m in h.basis() {
                assert!(is_homomorphism(&p, &p.shift(i), m));
            }
        }
    }

    #[test]
    fn hom_in_cyclic_grading() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        let c = p.forget_to_cyclic(2).unwrap();
        assert_eq!(hom0(&c, &c).unwrap().dim(), 2);
    }

    #[test]
    fn stable_hom_kills_projectives() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        let s = GradedModule::simple(&a, 0, 0);
        assert_eq!(stable_hom0(&p, &p).unwrap().dim(), 0);
        assert_eq!(stable_hom0(&s, &s).unwrap().dim(), 1);
        assert_eq!(stable_hom0(&s, &p.shift(2)).unwrap().dim(), 0);
    }

    #[test]
    fn isomorphism_search() {
        let a = path_algebra_a(Field::Rational, 2).unwrap();
        let p0 = GradedModule::projective(&a, 0, 0, Grading::Z);
        let p1 = GradedModule::projective(&a, 1, 0, Grading::Z);
        let s = GradedModule::simple(&a, 1, 0);
        assert!(find_isomorphism(&p1, &s, 1).unwrap().is_found());
        assert!(matches!(find_isomorphism(&p0, &s, 1).unwrap(), IsoSearch::Absent));
    }
}
