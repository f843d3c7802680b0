//! Quivers with relations and the graded algebras they present.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraBuilder, Elem, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::sparse::{SparseEchelon, SparseRow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<Arrow>,
}

/// A linear combination of parallel paths, each path listed arrow by arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Vec<String>)>) -> Self {
        Relation { terms }
    }

    /// A single path set to zero.
    pub fn zero_path(field: Field, path: &[&str]) -> Self {
        Relation {
            terms: vec![(field.one(), path.iter().map(|s| s.to_string()).collect())],
        }
    }
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str, i64)]) -> Self {
        Quiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|&(name, from, to, degree)| Arrow {
                    name: name.into(),
                    from: from.into(),
                    to: to.into(),
                    degree,
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        if self.vertices.is_empty() {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let mut names = BTreeSet::new();
        for a in &self.arrows {
            if !names.insert(&a.name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {:?}", a.name)));
            }
            for end in [&a.from, &a.to] {
                if !seen.contains(end) {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow {:?} uses undeclared vertex {end:?}",
                        a.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Whether the quiver has an oriented cycle (loops included).
    pub fn has_oriented_cycle(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        let edges: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|a| (self.vertex_index(&a.from).unwrap(), self.vertex_index(&a.to).unwrap()))
            .collect();
        for &(_, t) in &edges {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &edges {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        seen < n
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    arrows: Vec<usize>,
}

struct Resolved {
    source: Vec<usize>,
    target: Vec<usize>,
    degree: Vec<i64>,
}

impl Resolved {
    fn end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.source, |&a| self.target[a])
    }

    fn degree_of(&self, p: &Path) -> i64 {
        p.arrows.iter().map(|&a| self.degree[a]).sum()
    }
}

/// The algebra `KQ / ⟨rels⟩`, computed length by length as
/// `I_n = R_n + A_1·I_{n-1} + I_{n-1}·A_1`.
///
/// Relations must be homogeneous for both degree and path length. The
/// construction fails with `NonNilpotent` unless every path of length
/// `max_path_length` lies in the ideal.
pub fn build_algebra(
    q: &Quiver,
    rels: &[Relation],
    field: Field,
    max_path_length: usize,
) -> Result<Arc<GradedAlgebra>> {
    q.validate()?;
    let vidx: HashMap<&str, usize> = q
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let aidx: HashMap<&str, usize> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.as_str(), i))
        .collect();
    let res = Resolved {
        source: q.arrows.iter().map(|a| vidx[a.from.as_str()]).collect(),
        target: q.arrows.iter().map(|a| vidx[a.to.as_str()]).collect(),
        degree: q.arrows.iter().map(|a| a.degree).collect(),
    };

    // relations as (length, terms over paths)
    let mut by_length: HashMap<usize, Vec<Vec<(Scalar, Path)>>> = HashMap::new();
    for (ri, r) in rels.iter().enumerate() {
        let mut terms = Vec::new();
        let mut shape: Option<(usize, usize, i64, usize)> = None;
        for (c, names) in &r.terms {
            if c.field() != field {
                return Err(Error::MixedField);
            }
            if names.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "relation {ri} contains an empty path"
                )));
            }
            let mut arrows = Vec::with_capacity(names.len());
            for n in names {
                let a = *aidx.get(n.as_str()).ok_or_else(|| {
                    Error::InvalidQuiver(format!("relation {ri} uses unknown arrow {n:?}"))
                })?;
                if let Some(&prev) = arrows.last() {
                    if res.target[prev] != res.source[a] {
                        return Err(Error::InvalidArgument(format!(
                            "relation {ri}: path {names:?} is not composable"
                        )));
                    }
                }
                arrows.push(a);
            }
            let p = Path {
                source: res.source[arrows[0]],
                arrows,
            };
            let s = (p.source, res.end(&p), res.degree_of(&p), p.arrows.len());
            match shape {
                None => shape = Some(s),
                Some(t) if (t.0, t.1) != (s.0, s.1) => {
                    return Err(Error::InvalidArgument(format!(
                        "relation {ri} mixes non-parallel paths"
                    )))
                }
                Some(t) if t.2 != s.2 => {
                    return Err(Error::InhomogeneousRelation(format!(
                        "relation {ri} mixes degrees {} and {}",
                        t.2, s.2
                    )))
                }
                Some(t) if t.3 != s.3 => {
                    return Err(Error::InhomogeneousRelation(format!(
                        "relation {ri} mixes path lengths {} and {}",
                        t.3, s.3
                    )))
                }
                _ => {}
            }
            if !c.is_zero() {
                terms.push((c.clone(), p));
            }
        }
        if let Some(s) = shape {
            by_length.entry(s.3).or_default().push(terms);
        }
    }

    // paths[n] lists all paths of length n
    let mut paths: Vec<Vec<Path>> = vec![(0..q.vertices.len())
        .map(|v| Path {
            source: v,
            arrows: Vec::new(),
        })
        .collect()];
    let mut index: Vec<HashMap<Path, usize>> = vec![paths[0]
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect()];
    let mut ideals: Vec<SparseEchelon> = vec![SparseEchelon::new(field, paths[0].len())];
    let mut stop = None;
    for n in 1..=max_path_length {
        let mut layer = Vec::new();
        for p in &paths[n - 1] {
            for a in 0..q.arrows.len() {
                if res.source[a] == res.end(p) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    layer.push(Path {
                        source: p.source,
                        arrows,
                    });
                }
            }
        }
        let idx: HashMap<Path, usize> = layer.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut ideal = SparseEchelon::new(field, layer.len());
        for terms in by_length.get(&n).into_iter().flatten() {
            ideal.insert(terms.iter().map(|(c, p)| (idx[p], c.clone())).collect());
        }
        let prev_paths = &paths[n - 1];
        for row in ideals[n - 1].rows() {
            for a in 0..q.arrows.len() {
                // a·r
                let left: SparseRow = row
                    .iter()
                    .filter(|(j, _)| prev_paths[*j].source == res.target[a])
                    .map(|(j, c)| {
                        let mut arrows = vec![a];
                        arrows.extend(&prev_paths[*j].arrows);
                        (idx[&Path { source: res.source[a], arrows }], c.clone())
                    })
                    .collect();
                ideal.insert(left);
                // r·a
                let right: SparseRow = row
                    .iter()
                    .filter(|(j, _)| res.end(&prev_paths[*j]) == res.source[a])
                    .map(|(j, c)| {
                        let mut p = prev_paths[*j].clone();
                        p.arrows.push(a);
                        (idx[&p], c.clone())
                    })
                    .collect();
                ideal.insert(right);
            }
        }
        let full = ideal.rank() == layer.len();
        paths.push(layer);
        index.push(idx);
        ideals.push(ideal);
        if full {
            stop = Some(n);
            break;
        }
    }
    let stop = stop.ok_or(Error::NonNilpotent {
        cap: max_path_length,
    })?;

    // normal paths = non-pivot columns; reduced rows rewrite pivots
    let mut basis_of: Vec<HashMap<usize, usize>> = Vec::new();
    let mut builder = AlgebraBuilder::new(field, q.vertices.clone());
    let mut normal_paths: Vec<Path> = Vec::new();
    for n in 0..stop {
        let mut m = HashMap::new();
        for c in ideals[n].free_columns() {
            let p = &paths[n][c];
            let label = if n == 0 {
                format!("e_{}", q.vertices[p.source])
            } else {
                p.arrows
                    .iter()
                    .map(|&a| q.arrows[a].name.as_str())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let id = builder.push(label, res.degree_of(p), p.source, res.end(p));
            m.insert(c, id);
            normal_paths.push(p.clone());
        }
        basis_of.push(m);
    }
    let rewrite: Vec<HashMap<usize, SparseRow>> = (0..stop)
        .map(|n| ideals[n].reduced_rows().into_iter().collect())
        .collect();
    let normal_form = |p: &Path| -> Elem {
        let n = p.arrows.len();
        if n >= stop {
            return Vec::new();
        }
        let c = index[n][p];
        if let Some(&b) = basis_of[n].get(&c) {
            return vec![(b, field.one())];
        }
        rewrite[n][&c]
            .iter()
            .skip(1)
            .map(|(j, v)| (basis_of[n][j], -v))
            .collect()
    };
    builder.set_idempotents((0..q.vertices.len()).map(|v| basis_of[0][&v]).collect());
    builder.finish(|s, t| {
        let (u, v) = (&normal_paths[s], &normal_paths[t]);
        if res.end(u) != v.source {
            return Vec::new();
        }
        let mut arrows = u.arrows.clone();
        arrows.extend(&v.arrows);
        normal_form(&Path {
            source: u.source,
            arrows,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_loop() {
        let f = Field::Rational;
        let q = Quiver::new(&["1"], &[("x", "1", "1", 1)]);
        let a = build_algebra(&q, &[Relation::zero_path(f, &["x", "x", "x"])], f, 4).unwrap();
        assert_eq!(a.dim(), 3);
        let labels: Vec<&str> = a.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, vec!["e_1", "x", "x*x"]);
        assert!(a.check_associative());
    }

    #[test]
    fn cap_too_small_is_reported() {
        let f = Field::Rational;
        let q = Quiver::new(&["1"], &[("x", "1", "1", 1)]);
        let r = build_algebra(&q, &[Relation::zero_path(f, &["x", "x", "x"])], f, 2);
        assert_eq!(r.unwrap_err(), Error::NonNilpotent { cap: 2 });
    }

    #[test]
    fn single_vertex_is_the_field() {
        let q = Quiver::new(&["1"], &[]);
        let a = build_algebra(&q, &[], Field::Rational, 1).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let f = Field::Rational;
        let q = Quiver::new(&["1"], &[("x", "1", "1", 1), ("y", "1", "1", 2)]);
        let rel = Relation::new(vec![
            (f.one(), vec!["x".into(), "x".into()]),
            (f.one(), vec!["y".into()]),
        ]);
        assert!(matches!(
            build_algebra(&q, &[rel], f, 4),
            Err(Error::InhomogeneousRelation(_))
        ));
        let rel = Relation::new(vec![
            (f.one(), vec!["x".into()]),
            (f.one(), vec!["y".into()]),
        ]);
        assert!(matches!(
            build_algebra(&q, &[rel], f, 4),
            Err(Error::InhomogeneousRelation(_))
        ));
    }

    #[test]
    fn double_a2_with_zero_relations() {
        let f = Field::Rational;
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2", 0), ("b", "2", "1", 1)]);
        let rels = [
            Relation::zero_path(f, &["a", "b"]),
            Relation::zero_path(f, &["b", "a"]),
        ];
        let a = build_algebra(&q, &rels, f, 3).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.check_associative());
    }
}
