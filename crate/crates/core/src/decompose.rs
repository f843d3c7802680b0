//! Endomorphism algebras, indecomposability and Krull-Schmidt decomposition.
//!
//! A module is split with Fitting's lemma: for an endomorphism f and an
//! eigenvalue λ, X = ker (f−λ)^N ⊕ im (f−λ)^N, and the splitting is proper
//! whenever (f−λ)^N is neither zero nor invertible.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraBuilder, Elem, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hom::{find_isomorphism, hom0, random_scalar, stable_hom0, HomSpace};
use crate::matrix::{Coordinates, Matrix, Subspace};
use crate::module::{GradedModule, Slot};
use crate::poly::{minimal_polynomial, roots};
use crate::radical::{radical_basis, StructureConstants};
use crate::resolution::is_projective;

/// Structure constants of End₀(X) in a Hom basis.
struct EndConstants {
    field: Field,
    table: Vec<Vec<Vec<Scalar>>>,
}

impl EndConstants {
    fn new(hom: &HomSpace) -> EndConstants {
        let b = hom.basis();
        let table = b
            .iter()
            .map(|x| b.iter().map(|y| hom.coordinates(&x.mul(y))).collect())
            .collect();
        EndConstants {
            field: hom.field(),
            table,
        }
    }
}

impl StructureConstants for EndConstants {
    fn field(&self) -> Field {
        self.field
    }
    fn dim(&self) -> usize {
        self.table.len()
    }
    fn product(&self, s: usize, t: usize) -> Vec<Scalar> {
        self.table[s][t].clone()
    }
}

/// (dim End₀(X), dim rad End₀(X)).
pub fn endomorphism_dimensions(x: &GradedModule) -> Result<(usize, usize)> {
    let hom = hom0(x, x)?;
    let rad = radical_basis(&EndConstants::new(&hom));
    Ok((hom.dim(), rad.len()))
}

/// Block-adapted kernel and image of an endomorphism matrix.
fn kernel_and_image(x: &GradedModule, g: &Matrix) -> (BTreeMap<Slot, Subspace>, BTreeMap<Slot, Subspace>) {
    let f = x.field();
    let mut ker = BTreeMap::new();
    let mut im = BTreeMap::new();
    for (slot, r) in x.blocks() {
        let idx: Vec<usize> = r.collect();
        let block = g.select_rows(&idx).select_cols(&idx);
        let k = block.left_kernel_basis();
        if !k.is_empty() {
            ker.insert(slot, Subspace::span(f, idx.len(), &k));
        }
        let image = Subspace::span(f, idx.len(), &block.row_vectors());
        if image.dim() > 0 {
            im.insert(slot, image);
        }
    }
    (ker, im)
}

fn candidates(hom: &HomSpace, seed: u64) -> Vec<Matrix> {
    let b = hom.basis();
    let mut out: Vec<Matrix> = b.to_vec();
    'pairs: for x in b {
        for y in b {
            if out.len() > 4 * b.len() + 64 {
                break 'pairs;
            }
            out.push(x.mul(y));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let c: Vec<Scalar> = (0..b.len()).map(|_| random_scalar(hom.field(), &mut rng)).collect();
        out.push(hom.combination(&c));
    }
    out
}

/// A proper splitting X = U ⊕ V, if one is found.
pub fn split(x: &GradedModule, seed: u64) -> Result<Option<(GradedModule, GradedModule)>> {
    let hom = hom0(x, x)?;
    let f = x.field();
    let n = x.dim();
    let blocks = x.blocks();
    for z in candidates(&hom, seed) {
        let mut tried: Vec<Scalar> = Vec::new();
        for r in blocks.values() {
            let idx: Vec<usize> = r.clone().collect();
            let local = z.select_rows(&idx).select_cols(&idx);
            for lambda in roots(&minimal_polynomial(&local)) {
                if tried.contains(&lambda) {
                    continue;
                }
                tried.push(lambda.clone());
                let shifted = z.sub(&Matrix::identity(f, n).scale(&lambda));
                let g = shifted.power(n as u32);
                let rank = g.rank();
                if rank == 0 || rank == n {
                    continue;
                }
                let (ker, im) = kernel_and_image(x, &g);
                return Ok(Some((x.submodule(&ker).0, x.submodule(&im).0)));
            }
        }
    }
    Ok(None)
}

/// True iff End₀(X) is local.
pub fn is_indecomposable(x: &GradedModule) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    let (dim, rad) = endomorphism_dimensions(x)?;
    if dim - rad == 1 {
        return Ok(true);
    }
    match split(x, 0)? {
        Some(_) => Ok(false),
        None => Err(Error::SplitnessWarning(format!(
            "End/rad has dimension {} and no idempotent splits it over {}",
            dim - rad,
            x.field()
        ))),
    }
}

/// Indecomposable summands with multiplicities.
pub fn decompose(x: &GradedModule, seed: u64) -> Result<Vec<(GradedModule, usize)>> {
    let mut pending = vec![x.clone()];
    let mut pieces = Vec::new();
    while let Some(y) = pending.pop() {
        if y.is_zero() {
            continue;
        }
        let (dim, rad) = endomorphism_dimensions(&y)?;
        if dim - rad == 1 {
            pieces.push(y);
            continue;
        }
        match split(&y, seed)? {
            Some((u, v)) => {
                pending.push(v);
                pending.push(u);
            }
            None => {
                return Err(Error::SplitnessWarning(format!(
                    "a summand of dimension {} has End/rad of dimension {}",
                    y.dim(),
                    dim - rad
                )))
            }
        }
    }
    pieces.sort_by(|a, b| a.slots().cmp(b.slots()));
    let mut out: Vec<(GradedModule, usize)> = Vec::new();
    for p in pieces {
        let mut matched = false;
        for (q, m) in out.iter_mut() {
            if find_isomorphism(&p, q, seed)?.is_found() {
                *m += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            out.push((p, 1));
        }
    }
    Ok(out)
}

/// A basis of a Hom space (in the coordinates of `coords`) starting with
/// `first` when given.
fn adapted_basis(dim: usize, field: Field, first: Option<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut chosen: Vec<Vec<Scalar>> = first.into_iter().collect();
    let mut span = Subspace::span(field, dim, &chosen);
    for k in 0..dim {
        let mut e = vec![field.zero(); dim];
        e[k] = field.one();
        if !span.contains(&e) {
            chosen.push(e);
            span = Subspace::span(field, dim, &chosen);
        }
    }
    chosen
}

type CoordFn = Box<dyn Fn(&Matrix) -> Vec<Scalar> + Send + Sync>;

struct EndBlock {
    maps: Vec<Matrix>,
    coords: CoordFn,
}

/// End(⊕ U_a)₀ (or its stable quotient) as a degree-0 algebra with one vertex
/// per summand, together with the maps behind its basis. A map U_a → U_b
/// lies in e_b Γ e_a and products compose right to left.
pub struct EndAlgebra {
    pub algebra: Arc<GradedAlgebra>,
    /// (source summand, target summand, representative) per basis element.
    pub basis_maps: Vec<(usize, usize, Matrix)>,
    blocks: BTreeMap<(usize, usize), EndBlock>,
    index: BTreeMap<(usize, usize, usize), usize>,
}

impl EndAlgebra {
    /// The element of the algebra represented by a map U_a → U_b.
    pub fn element(&self, a: usize, b: usize, map: &Matrix) -> Elem {
        (self.blocks[&(a, b)].coords)(map)
            .into_iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(m, s)| (self.index[&(a, b, m)], s))
            .collect()
    }
}

impl std::fmt::Debug for EndAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EndAlgebra").field("dim", &self.algebra.dim()).finish()
    }
}

pub fn endomorphism_algebra(summands: &[GradedModule], stable: bool, labels: &[String]) -> Result<Arc<GradedAlgebra>> {
    Ok(endomorphism_algebra_with_maps(summands, stable, labels)?.algebra)
}

pub fn endomorphism_algebra_with_maps(summands: &[GradedModule], stable: bool, labels: &[String]) -> Result<EndAlgebra> {
    let Some(first) = summands.first() else {
        return Err(Error::InvalidArgument("no summands".into()));
    };
    let field = first.field();
    let k = summands.len();
    let mut blocks: BTreeMap<(usize, usize), EndBlock> = BTreeMap::new();
    for a in 0..k {
        for b in 0..k {
            let (dim, raw, combine): (usize, CoordFn, Box<dyn Fn(&[Scalar]) -> Matrix>) = if stable {
                let st = stable_hom0(&summands[a], &summands[b])?;
                let reps = st.representatives();
                let (rows, cols) = (summands[a].dim(), summands[b].dim());
                let dim = st.dim();
                let combine = move |c: &[Scalar]| {
                    let mut m = Matrix::zeros(field, rows, cols);
                    for (r, ci) in reps.iter().zip(c) {
                        m = m.add(&r.scale(ci));
                    }
                    m
                };
                (dim, Box::new(move |m: &Matrix| st.stable_coordinates(m)), Box::new(combine))
            } else {
                let h = hom0(&summands[a], &summands[b])?;
                let h2 = h.clone();
                (h.dim(), Box::new(move |m: &Matrix| h.coordinates(m)), Box::new(move |c: &[Scalar]| h2.combination(c)))
            };
            let id = if a == b {
                let c = raw(&Matrix::identity(field, summands[a].dim()));
                if c.iter().all(|s| s.is_zero()) {
                    return Err(Error::InvalidArgument(format!("summand {a} is zero in the stable category")));
                }
                Some(c)
            } else {
                None
            };
            let chosen = adapted_basis(dim, field, id);
            let maps = chosen.iter().map(|c| combine(c)).collect();
            let change = Coordinates::new(field, dim, &chosen).expect("adapted basis");
            let coords: CoordFn = Box::new(move |m: &Matrix| change.coords(&raw(m)).expect("in span"));
            blocks.insert((a, b), EndBlock { maps, coords });
        }
    }
    let mut builder = AlgebraBuilder::new(field, labels.to_vec());
    let mut index: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut meta = Vec::new();
    let mut idem = vec![0; k];
    for ((a, b), blk) in &blocks {
        for i in 0..blk.maps.len() {
            let label = if a == b && i == 0 {
                format!("e_{}", labels[*a])
            } else {
                format!("{}>{}#{}", labels[*a], labels[*b], i)
            };
            let id = builder.push(label, 0, *b, *a);
            if a == b && i == 0 {
                idem[*a] = id;
            }
            index.insert((*a, *b, i), id);
            meta.push((*a, *b, i));
        }
    }
    builder.set_idempotents(idem);
    let mul = |s: usize, t: usize| -> Elem {
        // s: U_a → U_b, t: U_c → U_d; s·t = s∘t needs d = a
        let (a, b, i) = meta[s];
        let (c, d, j) = meta[t];
        if d != a {
            return Vec::new();
        }
        let x = &blocks[&(a, b)].maps[i];
        let y = &blocks[&(c, d)].maps[j];
        let prod = y.mul(x);
        (blocks[&(c, b)].coords)(&prod)
            .into_iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(m, s)| (index[&(c, b, m)], s))
            .collect()
    };
    let algebra = builder.finish(mul)?;
    let basis_maps = meta
        .iter()
        .map(|&(a, b, i)| (a, b, blocks[&(a, b)].maps[i].clone()))
        .collect();
    Ok(EndAlgebra { algebra, basis_maps, blocks, index })
}

/// Stable End_Λ(X) for a module over a degree-0 algebra, ignoring the
/// grading of X. Each non-projective indecomposable summand contributes one
/// vertex (the basic version); multiplicities are returned alongside.
pub fn ungraded_stable_end(x: &GradedModule, seed: u64) -> Result<(Arc<GradedAlgebra>, Vec<usize>)> {
    let ungraded = x.forget_to_cyclic(1)?;
    let parts = decompose(&ungraded, seed)?;
    let mut summands = Vec::new();
    let mut mult = Vec::new();
    for (p, m) in parts {
        if !is_projective(&p) {
            summands.push(p);
            mult.push(m);
        }
    }
    if summands.is_empty() {
        let b = AlgebraBuilder::new(x.field(), Vec::new());
        return Ok((b.finish(|_, _| Vec::new())?, mult));
    }
    let labels: Vec<String> = (0..summands.len()).map(|i| format!("U{i}")).collect();
    Ok((endomorphism_algebra(&summands, true, &labels)?, mult))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{path_algebra_a, truncated_polynomial};
    use crate::module::Grading;

    #[test]
    fn indecomposability() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let p = GradedModule::projective(&a, 0, 0, Grading::Z);
        let x1 = p.truncate_below(1).unwrap().0;
        assert!(is_indecomposable(&x1).unwrap());
        assert!(is_indecomposable(&GradedModule::simple(&a, 0, 0)).unwrap());
        let (pp, _) = GradedModule::direct_sum(&a, Grading::Z, &[p.clone(), p.clone()]);
        assert!(!is_indecomposable(&pp).unwrap());
        let parts = decompose(&pp, 0).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
    }

    #[test]
    fn decomposes_mixed_sum() {
        let l = path_algebra_a(Field::prime(3).unwrap(), 2).unwrap();
        let r = GradedModule::regular(&l);
        let s1 = GradedModule::simple(&l, 0, 0);
        let (x, _) = GradedModule::direct_sum(&l, Grading::Z, &[r, s1]);
        let parts = decompose(&x, 0).unwrap();
        let total: usize = parts.iter().map(|(p, m)| p.dim() * m).sum();
        assert_eq!(total, x.dim());
        assert_eq!(parts.len(), 3);
    }

    #[test]
    fn stable_end_of_a2_module() {
        let l = path_algebra_a(Field::Rational, 2).unwrap();
        let r = GradedModule::regular(&l);
        let s1 = GradedModule::simple(&l, 0, 0);
        let (x, _) = GradedModule::direct_sum(&l, Grading::Z, &[r, s1]);
        let (e, mult) = ungraded_stable_end(&x, 0).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(mult, vec![1]);
    }
}
