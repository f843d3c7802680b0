//! Isomorphisms of graded algebras.
//!
//! Candidate vertex bijections must preserve the graded Cartan data
//! dim e_u A_d e_v. For a basic algebra with acyclic Gabriel quiver the map is
//! then built one vertex at a time, sinks first: the images of the arrows
//! starting at u are a solution of the linear system expressing that every
//! relation among the arrows at u (the kernel of ⊕ e_v A → e_u J) maps to zero.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::GradedAlgebra;
use crate::field::Scalar;
use crate::hom::random_scalar;
use crate::matrix::Matrix;
use crate::sparse::{normalize_row, SparseEchelon};

#[derive(Clone, Debug)]
pub struct AlgebraIsomorphism {
    /// Vertex u of the source goes to vertex `vertex_map[u]` of the target.
    pub vertex_map: Vec<usize>,
    /// Row i holds the image of source basis element i in target coordinates.
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Found(AlgebraIsomorphism),
    /// A structural invariant differs; the reason names it.
    Absent(String),
    /// No isomorphism among the candidates tried.
    NotFound,
}

impl IsoOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoOutcome::Found(_))
    }

    pub fn describe(&self) -> String {
        match self {
            IsoOutcome::Found(_) => "found".into(),
            IsoOutcome::Absent(r) => format!("absent ({r})"),
            IsoOutcome::NotFound => "not found (probabilistic)".into(),
        }
    }
}

type Cartan = Vec<Vec<BTreeMap<i64, usize>>>;

fn cartan(a: &GradedAlgebra) -> Cartan {
    let n = a.num_vertices();
    let mut c = vec![vec![BTreeMap::new(); n]; n];
    for b in a.basis() {
        *c[b.left][b.right].entry(b.degree).or_insert(0) += 1;
    }
    c
}

fn permutations(ca: &Cartan, cb: &Cartan) -> Vec<Vec<usize>> {
    let n = ca.len();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(ca: &Cartan, cb: &Cartan, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = ca.len();
        let u = cur.len();
        if u == n {
            out.push(cur.clone());
            return;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            cur.push(t);
            let ok = (0..=u).all(|w| ca[u][w] == cb[t][cur[w]] && ca[w][u] == cb[cur[w]][t]);
            if ok {
                used[t] = true;
                rec(ca, cb, cur, used, out);
                used[t] = false;
            }
            cur.pop();
            if out.len() >= 5040 {
                return;
            }
        }
    }
    rec(ca, cb, &mut cur, &mut used, &mut out);
    out
}

fn identical(a: &GradedAlgebra, b: &GradedAlgebra) -> bool {
    a.dim() == b.dim()
        && a.num_vertices() == b.num_vertices()
        && a.idempotents() == b.idempotents()
        && a.basis().iter().zip(b.basis()).all(|(x, y)| {
            x.left == y.left && x.right == y.right && x.degree == y.degree
        })
        && (0..a.dim()).all(|s| (0..a.dim()).all(|t| a.product(s, t) == b.product(s, t)))
}

fn is_basic_split(a: &GradedAlgebra) -> bool {
    a.dim() - a.radical().len() == a.num_vertices()
}

/// Checks multiplicativity, unit preservation and bijectivity of `m`.
pub fn verify_isomorphism(a: &GradedAlgebra, b: &GradedAlgebra, m: &Matrix) -> bool {
    if m.rows() != a.dim() || m.cols() != b.dim() || !m.is_invertible() {
        return false;
    }
    let image = |x: &[Scalar]| m.left_apply(x);
    let unit_a = a.to_dense(&a.unit());
    let unit_b = b.to_dense(&b.unit());
    if image(&unit_a) != unit_b {
        return false;
    }
    for s in 0..a.dim() {
        let homogeneous = m
            .row(s)
            .iter()
            .enumerate()
            .all(|(t, x)| x.is_zero() || b.degree(t) == a.degree(s));
        if !homogeneous {
            return false;
        }
        let fs = GradedAlgebra::from_dense(m.row(s));
        for t in 0..a.dim() {
            let lhs = image(&a.to_dense(a.product(s, t)));
            let ft = GradedAlgebra::from_dense(m.row(t));
            let rhs = b.to_dense(&b.mul(&fs, &ft));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn algebra_isomorphism(a: &GradedAlgebra, b: &GradedAlgebra, seed: u64) -> IsoOutcome {
    if a.field() != b.field() {
        return IsoOutcome::Absent("different fields".into());
    }
    if a.dims_by_degree() != b.dims_by_degree() {
        return IsoOutcome::Absent("dimensions per degree differ".into());
    }
    if a.num_vertices() != b.num_vertices() {
        return IsoOutcome::Absent("numbers of primitive idempotents differ".into());
    }
    if identical(a, b) {
        return IsoOutcome::Found(AlgebraIsomorphism {
            vertex_map: (0..a.num_vertices()).collect(),
            matrix: Matrix::identity(a.field(), a.dim()),
        });
    }
    let (ca, cb) = (cartan(a), cartan(b));
    let perms = permutations(&ca, &cb);
    if perms.is_empty() {
        return IsoOutcome::Absent("no vertex bijection preserves the graded Cartan data".into());
    }
    if !is_basic_split(a) || !is_basic_split(b) {
        return IsoOutcome::NotFound;
    }
    let Some(order) = sink_first_order(a) else {
        return IsoOutcome::NotFound;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sigma in perms {
        for _ in 0..4 {
            if let Some(m) = extend(a, b, &sigma, &order, &mut rng) {
                if verify_isomorphism(a, b, &m) {
                    return IsoOutcome::Found(AlgebraIsomorphism {
                        vertex_map: sigma,
                        matrix: m,
                    });
                }
            }
        }
    }
    IsoOutcome::NotFound
}

/// Vertices ordered so that every arrow u → v has v before u; `None` when
/// the Gabriel quiver has an oriented cycle.
fn sink_first_order(a: &GradedAlgebra) -> Option<Vec<usize>> {
    let q = a.gabriel_quiver();
    let n = q.len();
    let mut done = vec![false; n];
    let mut order = Vec::new();
    while order.len() < n {
        let next = (0..n).find(|&u| !done[u] && (0..n).all(|v| q[u][v] == 0 || done[v]))?;
        done[next] = true;
        order.push(next);
    }
    Some(order)
}

fn extend(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    sigma: &[usize],
    order: &[usize],
    rng: &mut ChaCha8Rng,
) -> Option<Matrix> {
    let f = a.field();
    let nb = b.dim();
    let mut phi: Vec<Option<Vec<Scalar>>> = vec![None; a.dim()];
    let arrows: Vec<(usize, usize, usize, i64)> = a
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let k = a.block_of(g[0].0);
            (i, k.left, k.right, k.degree)
        })
        .collect();
    let b_blocks = b.blocks();
    for &u in order {
        let mut e = vec![f.zero(); nb];
        e[b.idempotent(sigma[u])] = f.one();
        phi[a.idempotent(u)] = Some(e);
        let here: Vec<&(usize, usize, usize, i64)> = arrows.iter().filter(|x| x.1 == u).collect();
        let targets: Vec<usize> = (0..a.dim())
            .filter(|&x| a.basis()[x].left == u && x != a.idempotent(u))
            .collect();
        if here.is_empty() {
            if !targets.is_empty() {
                return None;
            }
            continue;
        }
        // domain ⊕_k e_{v_k} A
        let mut domain: Vec<(usize, usize)> = Vec::new();
        for (k, arrow) in here.iter().enumerate() {
            for c in 0..a.dim() {
                if a.basis()[c].left == arrow.2 {
                    domain.push((k, c));
                }
            }
        }
        let mut psi = Matrix::zeros(f, domain.len(), a.dim());
        for (r, &(k, c)) in domain.iter().enumerate() {
            let g = &a.generators()[here[k].0];
            let prod = a.mul(g, &a.basis_elem(c));
            for (idx, s) in prod {
                psi.set(r, idx, s);
            }
        }
        // unknowns: coordinates of φ(g_k) in the target block
        let mut unknown: Vec<(usize, usize)> = Vec::new();
        for (k, arrow) in here.iter().enumerate() {
            let key = crate::algebra::BlockKey {
                left: sigma[arrow.1],
                right: sigma[arrow.2],
                degree: arrow.3,
            };
            for &m in b_blocks.get(&key).map(|v| v.as_slice()).unwrap_or(&[]) {
                unknown.push((k, m));
            }
        }
        let mut eqs = SparseEchelon::new(f, unknown.len());
        let image_of = |coeffs: &[(usize, Scalar)], phi: &Vec<Option<Vec<Scalar>>>| -> Option<Vec<Vec<Scalar>>> {
            // y_k = Σ_c coeff φ(c), per arrow k
            let mut ys = vec![vec![f.zero(); nb]; here.len()];
            for (r, s) in coeffs {
                let (k, c) = domain[*r];
                let pc = phi[c].as_ref()?;
                for (t, x) in pc.iter().enumerate() {
                    if !x.is_zero() {
                        ys[k][t] = &ys[k][t] + &(s * x);
                    }
                }
            }
            Some(ys)
        };
        for kappa in psi.left_kernel_basis() {
            let coeffs: Vec<(usize, Scalar)> = kappa
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(r, s)| (r, s.clone()))
                .collect();
            let ys = image_of(&coeffs, &phi)?;
            let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nb];
            for (col, &(k, m)) in unknown.iter().enumerate() {
                let w = b.mul(&b.basis_elem(m), &GradedAlgebra::from_dense(&ys[k]));
                for (t, s) in w {
                    rows[t].push((col, s));
                }
            }
            for r in rows {
                let r = normalize_row(r);
                if !r.is_empty() {
                    eqs.insert(r);
                }
            }
        }
        let sols = eqs.kernel_basis();
        if sols.is_empty() {
            return None;
        }
        let mut lambda = vec![f.zero(); unknown.len()];
        for s in &sols {
            let c = random_scalar(f, rng);
            for (l, x) in lambda.iter_mut().zip(s) {
                *l = &*l + &(&c * x);
            }
        }
        let mut arrow_images = vec![vec![f.zero(); nb]; here.len()];
        for (col, &(k, m)) in unknown.iter().enumerate() {
            arrow_images[k][m] = &arrow_images[k][m] + &lambda[col];
        }
        for &t in &targets {
            let rhs = a.to_dense(&a.basis_elem(t));
            let pre = psi.left_solve(&rhs).ok()??;
            let coeffs: Vec<(usize, Scalar)> = pre
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(r, s)| (r, s.clone()))
                .collect();
            let ys = image_of(&coeffs, &phi)?;
            let mut img = vec![f.zero(); nb];
            for (k, y) in ys.iter().enumerate() {
                let w = b.mul(&GradedAlgebra::from_dense(&arrow_images[k]), &GradedAlgebra::from_dense(y));
                for (idx, s) in w {
                    img[idx] = &img[idx] + &s;
                }
            }
            phi[t] = Some(img);
        }
    }
    let rows: Vec<Vec<Scalar>> = phi.into_iter().collect::<Option<Vec<_>>>()?;
    Matrix::from_rows(f, nb, &rows).ok()
}
