//! Auslander-Reiten quivers of the stable category of graded modules over a
//! self-injective algebra, restricted to a window of grade shifts.
//!
//! Indecomposable non-projectives are catalogued up to grade shift. The
//! representative of a class has its top degree equal to the top degree of A,
//! and classes are named X1, X2, … by decreasing dimension. A vertex is a
//! class with a shift j, standing for R(j).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::GradedAlgebra;
use crate::decompose::{decompose, endomorphism_algebra_with_maps};
use crate::error::{Error, Result};
use crate::hom::{find_isomorphism, stable_hom0, StableHom};
use crate::identities::support_window;
use crate::matrix::{Matrix, Subspace};
use crate::module::GradedModule;
use crate::resolution::{
    cosyzygy, is_projective, radical_submodule, strip_projectives, syzygy, tau, tau_inverse,
};
use crate::structure::is_self_injective;

/// Largest number of shift classes explored before giving up.
pub const MAX_CLASSES: usize = 64;

/// A class of dimension above this multiple of dim A ends the search.
pub const MAX_CLASS_DIM_FACTOR: usize = 2;

#[derive(Clone, Debug)]
pub struct Class {
    pub name: String,
    pub representative: GradedModule,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArVertex {
    pub class: usize,
    pub shift: i64,
    pub label: String,
    pub dim: usize,
    pub boundary: bool,
}

#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub window: (i64, i64),
    pub classes: Vec<Class>,
    pub vertices: Vec<ArVertex>,
    /// (source, target, multiplicity) as vertex indices.
    pub solid_arrows: Vec<(usize, usize, usize)>,
    /// (X, τX) as vertex indices.
    pub tau_arrows: Vec<(usize, usize)>,
}

struct Catalogue {
    top: i64,
    reps: Vec<GradedModule>,
    max_dim: usize,
    seed: u64,
}

impl Catalogue {
    /// The class and shift j with X ≅ R(j), registering a new class if needed.
    fn identify(&mut self, x: &GradedModule) -> Result<(usize, i64)> {
        let j = self.top - x.max_degree().expect("nonzero module");
        let rep = x.shift(-j);
        for (k, r) in self.reps.iter().enumerate() {
            if r.dim() == rep.dim() && find_isomorphism(r, &rep, self.seed)?.is_found() {
                return Ok((k, j));
            }
        }
        if rep.dim() > self.max_dim {
            return Err(Error::WindowNotClosed(format!(
                "found an indecomposable of dimension {} > {}",
                rep.dim(),
                self.max_dim
            )));
        }
        self.reps.push(rep);
        Ok((self.reps.len() - 1, j))
    }

    /// Classes and shifts of the non-projective indecomposable summands.
    fn summands(&mut self, x: &GradedModule) -> Result<Vec<(usize, i64)>> {
        let stripped = strip_projectives(x).0;
        if stripped.is_zero() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (p, _) in decompose(&stripped, self.seed)? {
            if !is_projective(&p) {
                out.push(self.identify(&p)?);
            }
        }
        Ok(out)
    }
}

fn closure(a: &Arc<GradedAlgebra>, seed: u64) -> Result<Vec<GradedModule>> {
    let mut cat = Catalogue {
        top: a.max_degree(),
        reps: Vec::new(),
        max_dim: MAX_CLASS_DIM_FACTOR * a.dim(),
        seed,
    };
    for v in 0..a.num_vertices() {
        cat.summands(&GradedModule::simple(a, v, 0))?;
        let p = GradedModule::projective(a, v, 0, crate::module::Grading::Z);
        cat.summands(&p.submodule(&radical_submodule(&p)).0)?;
    }
    let mut done = 0;
    while done < cat.reps.len() {
        if cat.reps.len() > MAX_CLASSES {
            return Err(Error::WindowNotClosed(format!(
                "more than {MAX_CLASSES} classes of indecomposables up to shift"
            )));
        }
        let r = cat.reps[done].clone();
        let rad = r.submodule(&radical_submodule(&r)).0;
        let dual = r.dual();
        let top_quotient = dual.submodule(&radical_submodule(&dual)).0.dual_over(a.clone())?;
        for image in [tau(&r)?, tau_inverse(&r)?, syzygy(&r), cosyzygy(&r)?, rad, top_quotient] {
            cat.summands(&image)?;
        }
        done += 1;
    }
    Ok(cat.reps)
}

/// rad(X, Y) inside the stable Hom space: everything unless X ≅ Y, where
/// it is the radical of the local stable endomorphism ring.
fn radical_maps(x: &GradedModule, st: &StableHom, same: bool) -> Result<Vec<Matrix>> {
    if !same {
        return Ok(st.representatives());
    }
    let end = endomorphism_algebra_with_maps(std::slice::from_ref(x), true, &["X".to_string()])?;
    let f = x.field();
    Ok(end
        .algebra
        .radical()
        .iter()
        .map(|e| {
            let mut m = Matrix::zeros(f, x.dim(), x.dim());
            for (k, c) in e {
                m = m.add(&end.basis_maps[*k].2.scale(c));
            }
            m
        })
        .collect())
}

struct Irreducibles<'a> {
    reps: &'a [GradedModule],
    cache: BTreeMap<(usize, usize, i64), (StableHom, Vec<Matrix>)>,
}

impl Irreducibles<'_> {
    /// Stable Hom(R_a, R_b(d)) and its radical.
    fn rad(&mut self, a: usize, b: usize, d: i64) -> Result<&(StableHom, Vec<Matrix>)> {
        if !self.cache.contains_key(&(a, b, d)) {
            let x = &self.reps[a];
            let y = self.reps[b].shift(d);
            let st = stable_hom0(x, &y)?;
            let rad = radical_maps(x, &st, a == b && d == 0)?;
            self.cache.insert((a, b, d), (st, rad));
        }
        Ok(&self.cache[&(a, b, d)])
    }

    /// dim rad(R_a, R_b(d)) / rad²(R_a, R_b(d)).
    fn multiplicity(&mut self, a: usize, b: usize, d: i64) -> Result<usize> {
        let (st, rad) = self.rad(a, b, d)?.clone();
        let f = self.reps[a].field();
        let rad_coords: Vec<_> = rad.iter().map(|m| st.stable_coordinates(m)).collect();
        let rad_dim = Subspace::span(f, st.dim(), &rad_coords).dim();
        if rad_dim == 0 {
            return Ok(0);
        }
        let mut composites = Vec::new();
        for z in 0..self.reps.len() {
            for e in support_window(&self.reps[a], &self.reps[z], 1) {
                let first = self.rad(a, z, e)?.1.clone();
                if first.is_empty() {
                    continue;
                }
                // R_z(e) → R_b(d) is R_z → R_b(d − e) shifted
                let second = self.rad(z, b, d - e)?.1.clone();
                for f1 in &first {
                    for g in &second {
                        composites.push(st.stable_coordinates(&f1.mul(g)));
                    }
                }
            }
        }
        let square = Subspace::span(f, st.dim(), &composites).dim();
        Ok(rad_dim - square)
    }
}

/// The AR quiver on the shifts `lo..=hi` of every class.
pub fn ar_quiver(a: &Arc<GradedAlgebra>, lo: i64, hi: i64, seed: u64) -> Result<ARQuiver> {
    if is_self_injective(a).is_none() {
        return Err(Error::NotSelfInjective);
    }
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty window {lo}..{hi}")));
    }
    let mut reps = closure(a, seed)?;
    // name by decreasing dimension, then by dimension vector
    reps.sort_by(|x, y| {
        y.dim()
            .cmp(&x.dim())
            .then_with(|| x.dim_vector().cmp(&y.dim_vector()))
    });
    let classes: Vec<Class> = reps
        .iter()
        .enumerate()
        .map(|(k, r)| Class {
            name: format!("X{}", k + 1),
            representative: r.clone(),
        })
        .collect();
    let mut cat = Catalogue {
        top: a.max_degree(),
        reps: reps.clone(),
        max_dim: MAX_CLASS_DIM_FACTOR * a.dim(),
        seed,
    };
    let mut taus = Vec::new();
    for r in &reps {
        let t = cat.summands(&tau(r)?)?;
        if t.len() != 1 || cat.reps.len() != reps.len() {
            return Err(Error::WindowNotClosed("τ of an indecomposable is not a catalogued indecomposable".into()));
        }
        taus.push(t[0]);
    }

    let mut irr = Irreducibles {
        reps: &reps,
        cache: BTreeMap::new(),
    };
    // relative arrows (a, b, d): R_a → R_b(d)
    let mut relative = Vec::new();
    for x in 0..reps.len() {
        for y in 0..reps.len() {
            for d in support_window(&reps[x], &reps[y], 1) {
                let m = irr.multiplicity(x, y, d)?;
                if m > 0 {
                    relative.push((x, y, d, m));
                }
            }
        }
    }

    let mut vertices = Vec::new();
    let mut index = BTreeMap::new();
    for (c, class) in classes.iter().enumerate() {
        for j in lo..=hi {
            index.insert((c, j), vertices.len());
            vertices.push(ArVertex {
                class: c,
                shift: j,
                label: format!("{}({})", class.name, j),
                dim: class.representative.dim(),
                boundary: false,
            });
        }
    }
    let inside = |j: i64| lo <= j && j <= hi;
    let mut solid_arrows = Vec::new();
    let mut tau_arrows = Vec::new();
    let mut boundary = BTreeSet::new();
    for (&(c, j), &v) in &index {
        // R_c(j) → R_b(j + d)
        for &(x, y, d, m) in &relative {
            if x == c {
                match index.get(&(y, j + d)) {
                    Some(&w) => solid_arrows.push((v, w, m)),
                    None => {
                        boundary.insert(v);
                    }
                }
            }
            if y == c && !inside(j - d) {
                boundary.insert(v);
            }
        }
        let (tc, tj) = taus[c];
        match index.get(&(tc, tj + j)) {
            Some(&w) => tau_arrows.push((v, w)),
            None => {
                boundary.insert(v);
            }
        }
        // τ⁻ leaves the window when some class maps onto this one from outside
        for &(tc2, tj2) in &taus {
            if tc2 == c && !inside(j - tj2) {
                boundary.insert(v);
            }
        }
    }
    for v in boundary {
        vertices[v].boundary = true;
    }
    solid_arrows.sort();
    tau_arrows.sort();
    Ok(ARQuiver {
        window: (lo, hi),
        classes,
        vertices,
        solid_arrows,
        tau_arrows,
    })
}

impl ARQuiver {
    fn tau_of(&self, v: usize) -> Option<usize> {
        self.tau_arrows.iter().find(|t| t.0 == v).map(|t| t.1)
    }

    /// Interior vertices v whose incoming arrows do not match the outgoing
    /// arrows of τv, as labels.
    pub fn mesh_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (v, vert) in self.vertices.iter().enumerate() {
            if vert.boundary {
                continue;
            }
            let Some(t) = self.tau_of(v) else { continue };
            if self.vertices[t].boundary {
                continue;
            }
            let mut into: Vec<(usize, usize)> = self
                .solid_arrows
                .iter()
                .filter(|a| a.1 == v)
                .map(|a| (a.0, a.2))
                .collect();
            let mut out_of: Vec<(usize, usize)> = self
                .solid_arrows
                .iter()
                .filter(|a| a.0 == t)
                .map(|a| (a.1, a.2))
                .collect();
            into.sort();
            out_of.sort();
            if into != out_of {
                out.push(vert.label.clone());
            }
        }
        out
    }

    fn sorted_vertices(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by_key(|&v| (self.classes[self.vertices[v].class].name.clone(), self.vertices[v].shift));
        order
    }

    /// Graphviz text: solid edges carry multiplicities, τ edges are dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph AR {\n");
        let order = self.sorted_vertices();
        let rank: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for &v in &order {
            s.push_str(&format!("  \"{}\";\n", self.vertices[v].label));
        }
        let mut solid = self.solid_arrows.clone();
        solid.sort_by_key(|a| (rank[&a.0], rank[&a.1]));
        for (x, y, m) in solid {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[x].label, self.vertices[y].label, m
            ));
        }
        let mut dashed = self.tau_arrows.clone();
        dashed.sort_by_key(|a| (rank[&a.0], rank[&a.1]));
        for (x, y) in dashed {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [style=dashed];\n",
                self.vertices[x].label, self.vertices[y].label
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let order = self.sorted_vertices();
        let label = |v: usize| self.vertices[v].label.clone();
        json!({
            "window": [self.window.0, self.window.1],
            "classes": self.classes.iter().map(|c| json!({
                "name": c.name,
                "dims_by_degree": c.representative.dims_by_degree(),
            })).collect::<Vec<_>>(),
            "vertices": order.iter().map(|&v| json!({
                "label": label(v),
                "class": self.classes[self.vertices[v].class].name,
                "shift": self.vertices[v].shift,
                "dim": self.vertices[v].dim,
                "boundary": self.vertices[v].boundary,
            })).collect::<Vec<_>>(),
            "solid_arrows": self.solid_arrows.iter().map(|&(x, y, m)| json!({
                "from": label(x), "to": label(y), "multiplicity": m,
            })).collect::<Vec<_>>(),
            "tau_arrows": self.tau_arrows.iter().map(|&(x, y)| json!({
                "from": label(x), "to": label(y),
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{semisimple, truncated_polynomial};
    use crate::field::Field;

    #[test]
    fn square_zero_has_one_orbit() {
        let a = truncated_polynomial(Field::Rational, 1).unwrap();
        let q = ar_quiver(&a, 0, 2, 0).unwrap();
        assert_eq!(q.classes.len(), 1);
        assert_eq!(q.vertices.len(), 3);
        assert!(q.solid_arrows.is_empty());
        assert_eq!(q.tau_arrows.len(), 2);
    }

    #[test]
    fn semisimple_is_empty() {
        let a = semisimple(Field::Rational, 2).unwrap();
        let q = ar_quiver(&a, 0, 3, 0).unwrap();
        assert!(q.vertices.is_empty());
        assert_eq!(q.to_dot(), "digraph AR {\n}\n");
    }

    #[test]
    fn cubic_strip() {
        let a = truncated_polynomial(Field::Rational, 2).unwrap();
        let q = ar_quiver(&a, -1, 3, 0).unwrap();
        assert_eq!(q.vertices.len(), 10);
        assert_eq!(q.solid_arrows.len(), 9);
        assert_eq!(q.tau_arrows.len(), 8);
        assert!(q.mesh_violations().is_empty());
    }
}
