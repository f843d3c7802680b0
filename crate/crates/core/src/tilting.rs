//! The tilting object T = ⊕_{i≥0} A(i)_{≤0}, its projective-free part T̲ and
//! Γ = End_A(T̲)₀, with the checks tying Γ to the Beilinson algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraBuilder, GradedAlgebra};
use crate::algiso::verify_isomorphism;
use crate::constructions::{beilinson_algebra, beilinson_entries};
use crate::decompose::{endomorphism_algebra_with_maps, EndAlgebra};
use crate::error::{Error, Result};
use crate::hom::{find_isomorphism, hom0, stable_hom0};
use crate::matrix::Matrix;
use crate::module::{GradedModule, Grading};
use crate::resolution::stable_shift;
use crate::structure::{global_dimension, gorenstein_parameter, is_self_injective, GlobalDimension};

/// One summand e_v A(i)_{≤0} of T.
#[derive(Clone, Debug)]
pub struct TSummand {
    pub vertex: usize,
    pub shift: i64,
    pub module: GradedModule,
    /// Algebra basis element behind each module basis vector.
    pub behind: Vec<usize>,
    pub projective: bool,
}

impl TSummand {
    pub fn label(&self, a: &GradedAlgebra) -> String {
        format!("e{}A({})<=0", a.vertex_labels()[self.vertex], self.shift)
    }
}

#[derive(Debug)]
pub struct TiltingData {
    pub algebra: Arc<GradedAlgebra>,
    /// Ordered by (shift, vertex); per vertex the last one is projective.
    pub summands: Vec<TSummand>,
    /// Indices of the non-projective summands, i.e. T̲.
    pub stripped: Vec<usize>,
    /// Per vertex, the first shift at which the summand is projective.
    pub cutoff: Vec<i64>,
    pub gamma: Option<EndAlgebra>,
}

/// e_v A(i)_{≤0} with its algebra basis elements.
fn truncated_projective(a: &Arc<GradedAlgebra>, v: usize, i: i64) -> (GradedModule, Vec<usize>) {
    let (p, behind) = GradedModule::projective_indexed(a, v, i, Grading::Z);
    let (q, kept) = p.truncate_above(0).expect("quotient of a positively graded projective");
    (q, kept.iter().map(|&k| behind[k]).collect())
}

pub fn build_t(a: &Arc<GradedAlgebra>) -> Result<TiltingData> {
    if !a.is_positively_graded() {
        return Err(Error::NotPositivelyGraded);
    }
    if is_self_injective(a).is_none() {
        return Err(Error::NotSelfInjective);
    }
    let nv = a.num_vertices();
    let cutoff: Vec<i64> = (0..nv).map(|v| a.max_degree_at(v)).collect();
    let top = cutoff.iter().copied().max().unwrap_or(0);
    let mut summands = Vec::new();
    for i in 0..=top {
        for v in 0..nv {
            if i > cutoff[v] {
                continue;
            }
            let (module, behind) = truncated_projective(a, v, i);
            summands.push(TSummand {
                vertex: v,
                shift: i,
                module,
                behind,
                projective: i == cutoff[v],
            });
        }
    }
    let stripped: Vec<usize> = (0..summands.len()).filter(|&k| !summands[k].projective).collect();
    let gamma = if stripped.is_empty() {
        None
    } else {
        let mods: Vec<GradedModule> = stripped.iter().map(|&k| summands[k].module.clone()).collect();
        let labels: Vec<String> = stripped.iter().map(|&k| summands[k].label(a)).collect();
        Some(endomorphism_algebra_with_maps(&mods, false, &labels)?)
    };
    Ok(TiltingData {
        algebra: a.clone(),
        summands,
        stripped,
        cutoff,
        gamma,
    })
}

impl TiltingData {
    pub fn stripped_modules(&self) -> Vec<GradedModule> {
        self.stripped.iter().map(|&k| self.summands[k].module.clone()).collect()
    }

    /// T̲ as a single module.
    pub fn t_underline(&self) -> GradedModule {
        GradedModule::direct_sum(&self.algebra, Grading::Z, &self.stripped_modules()).0
    }

    /// Γ, or the zero algebra when T̲ = 0.
    pub fn gamma_algebra(&self) -> Arc<GradedAlgebra> {
        match &self.gamma {
            Some(e) => e.algebra.clone(),
            None => zero_algebra(self.algebra.field()),
        }
    }

    /// Whether no endomorphism of T̲ factors through a projective, so that the
    /// stable and plain endomorphism algebras agree.
    pub fn stable_equals_plain(&self) -> Result<bool> {
        let mods = self.stripped_modules();
        for x in &mods {
            for y in &mods {
                if stable_hom0(x, y)?.projective_part.dim() != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn zero_algebra(field: crate::field::Field) -> Arc<GradedAlgebra> {
    AlgebraBuilder::new(field, Vec::new())
        .finish(|_, _| Vec::new())
        .expect("zero algebra")
}

/// A nonzero stable Hom(T_a, T_b[i]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfExtWitness {
    pub shift: i64,
    pub source: usize,
    pub target: usize,
    pub dim: usize,
}

/// Nonvanishing stable Hom(T_a, T_b[i]) for 1 ≤ |i| ≤ range; empty means
/// no self-extensions.
pub fn self_extensions(summands: &[GradedModule], range: i64) -> Result<Vec<SelfExtWitness>> {
    let mut out = Vec::new();
    for (b, y) in summands.iter().enumerate() {
        for sign in [1, -1] {
            let mut shifted = y.clone();
            for k in 1..=range {
                shifted = stable_shift(&shifted, sign)?;
                if shifted.is_zero() {
                    break;
                }
                for (a, x) in summands.iter().enumerate() {
                    let dim = stable_hom0(x, &shifted)?.dim();
                    if dim != 0 {
                        out.push(SelfExtWitness { shift: sign * k, source: a, target: b, dim });
                    }
                }
            }
        }
    }
    out.sort_by_key(|w| (w.shift, w.source, w.target));
    Ok(out)
}

pub fn verify_no_self_ext(data: &TiltingData, range: i64) -> Result<bool> {
    Ok(self_extensions(&data.stripped_modules(), range)?.is_empty())
}

#[derive(Debug)]
pub struct BeilinsonComparison {
    pub ell: i64,
    pub beilinson: Arc<GradedAlgebra>,
    /// End_A(U)₀ for U = ⊕_{i<ℓ} A(i)_{≤0}.
    pub end_u: Arc<GradedAlgebra>,
    /// Row k is the image of Beilinson basis element k.
    pub iso: Matrix,
    pub verified: bool,
    /// U has no projective summand, so Γ itself is the Beilinson algebra.
    pub on_the_nose: bool,
}

/// Sends [p,q]b to left multiplication by b, U_{(ℓ−1−q, ·)} → U_{(ℓ−1−p, ·)},
/// and checks that this is an algebra isomorphism onto End_A(U)₀.
pub fn verify_gamma_is_beilinson(data: &TiltingData) -> Result<BeilinsonComparison> {
    let a = &data.algebra;
    let ell = gorenstein_parameter(a)?.ok_or(Error::NoGorensteinParameter)?;
    let nv = a.num_vertices();
    let field = a.field();
    if ell == 0 {
        return Ok(BeilinsonComparison {
            ell,
            verified: data.gamma_algebra().dim() == 0,
            on_the_nose: data.stripped.is_empty(),
            beilinson: zero_algebra(field),
            end_u: zero_algebra(field),
            iso: Matrix::zeros(field, 0, 0),
        });
    }
    let beilinson = beilinson_algebra(a, ell as usize)?;
    let mut parts = Vec::new();
    for i in 0..ell {
        for v in 0..nv {
            parts.push(truncated_projective(a, v, i));
        }
    }
    let any_projective = parts
        .iter()
        .enumerate()
        .any(|(k, _)| (k / nv) as i64 >= data.cutoff[k % nv]);
    let on_the_nose = !any_projective
        && data.stripped.len() == parts.len()
        && data.stripped.iter().enumerate().all(|(k, &s)| {
            data.summands[s].shift == (k / nv) as i64 && data.summands[s].vertex == k % nv
        });
    let owned;
    let end: &EndAlgebra = match (&data.gamma, on_the_nose) {
        (Some(g), true) => g,
        _ => {
            let mods: Vec<GradedModule> = parts.iter().map(|(m, _)| m.clone()).collect();
            let labels: Vec<String> = (0..parts.len()).map(|k| format!("U{}_{}", k / nv, k % nv)).collect();
            owned = endomorphism_algebra_with_maps(&mods, false, &labels)?;
            &owned
        }
    };
    let positions: Vec<BTreeMap<usize, usize>> = parts
        .iter()
        .map(|(_, behind)| behind.iter().enumerate().map(|(i, &b)| (b, i)).collect())
        .collect();
    let l = ell as usize;
    let mut iso = Matrix::zeros(field, beilinson.dim(), end.algebra.dim());
    for (k, &(p, q, b)) in beilinson_entries(a, l).iter().enumerate() {
        let e = &a.basis()[b];
        let s = (l - 1 - q) * nv + e.right;
        let t = (l - 1 - p) * nv + e.left;
        let (src, src_behind) = &parts[s];
        let mut map = Matrix::zeros(field, src.dim(), parts[t].0.dim());
        for (r, &y) in src_behind.iter().enumerate() {
            for (z, c) in a.product(b, y) {
                if let Some(&col) = positions[t].get(z) {
                    map.set(r, col, c.clone());
                }
            }
        }
        for (idx, c) in end.element(s, t, &map) {
            iso.set(k, idx, c);
        }
    }
    let verified = verify_isomorphism(&beilinson, &end.algebra, &iso);
    Ok(BeilinsonComparison {
        ell,
        end_u: end.algebra.clone(),
        beilinson,
        iso,
        verified,
        on_the_nose,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FinDimReport {
    pub degree_zero: GlobalDimension,
    pub gamma: Option<GlobalDimension>,
}

impl FinDimReport {
    /// Finite gl.dim A₀ forces finite gl.dim Γ; otherwise nothing to check.
    pub fn holds(&self) -> bool {
        match (self.degree_zero, self.gamma) {
            (GlobalDimension::Finite(_), Some(GlobalDimension::Finite(_))) => true,
            (GlobalDimension::Finite(_), _) => false,
            _ => true,
        }
    }
}

pub fn verify_gamma_findim(data: &TiltingData, cap: usize) -> FinDimReport {
    let (a0, _) = data.algebra.degree_zero_part();
    let degree_zero = global_dimension(&a0, cap);
    let gamma = match degree_zero {
        GlobalDimension::Finite(_) => Some(global_dimension(&data.gamma_algebra(), cap)),
        GlobalDimension::AtLeast(_) => None,
    };
    FinDimReport { degree_zero, gamma }
}

/// Hom₀(Q, T̲) = 0 for indecomposable projectives Q = e_vA(s) whose socle
/// sits in degree ≤ 0, for shifts up to `extra` past the first such one.
pub fn verify_projective_orthogonality(data: &TiltingData, extra: i64) -> Result<bool> {
    let a = &data.algebra;
    let t = data.t_underline();
    for v in 0..a.num_vertices() {
        let first = a.max_degree_at(v);
        for s in first..=first + extra {
            let q = GradedModule::projective(a, v, s, Grading::Z);
            if hom0(&q, &t)?.dim() != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// D(A_A) ≅ A(ℓ) as graded right A-modules.
pub fn verify_dual_regular(a: &Arc<GradedAlgebra>, ell: i64, seed: u64) -> Result<bool> {
    let op = a.opposite();
    let dual = GradedModule::regular(&op).dual_over(a.clone())?;
    let shifted = GradedModule::regular(a).shift(ell);
    Ok(find_isomorphism(&dual, &shifted, seed)?.is_found())
}
