//! Algebra definition files.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use gradtilt::algebra::GradedAlgebra;
use gradtilt::constructions::{nakayama, preprojective_algebra, trivial_extension, PreprojectiveSigns};
use gradtilt::quiver::{build_algebra, Quiver, Relation};
use gradtilt::{Error, Field, Result};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NakayamaSpec {
    pub loop_length: usize,
    pub nilpotency: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Builtin {
    TrivialExtensionOf(Box<AlgebraSpecFile>),
    PreprojectiveOf(Quiver),
    Nakayama(NakayamaSpec),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecFile {
    pub field: Option<Field>,
    pub quiver: Option<Quiver>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
    pub max_path_length: Option<usize>,
    pub builtin: Option<Builtin>,
}

impl AlgebraSpecFile {
    pub fn read(path: &Path) -> Result<AlgebraSpecFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        AlgebraSpecFile::parse(&text)
    }

    pub fn parse(text: &str) -> Result<AlgebraSpecFile> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })
    }

    /// The quiver of a `preprojective_of` builtin.
    pub fn preprojective_quiver(&self) -> Option<&Quiver> {
        match &self.builtin {
            Some(Builtin::PreprojectiveOf(q)) => Some(q),
            _ => None,
        }
    }

    fn resolve_field(&self, outer: Option<Field>) -> Result<Field> {
        let field = outer.or(self.field).unwrap_or(Field::Rational);
        if let Field::Prime { p } = field {
            Field::prime(p)?;
        }
        Ok(field)
    }

    /// Builds the algebra; `field` overrides the file's field and `cap` is
    /// the path-length cap when the file gives none.
    pub fn build(&self, field: Option<Field>, cap: usize) -> Result<Arc<GradedAlgebra>> {
        let k = self.resolve_field(field)?;
        match (&self.builtin, &self.quiver) {
            (Some(_), Some(_)) => Err(Error::Parse(
                "give either quiver and relations or builtin, not both".into(),
            )),
            (None, None) => Err(Error::Parse("missing quiver or builtin".into())),
            (Some(b), None) => {
                if !self.relations.is_empty() {
                    return Err(Error::Parse("relations are not allowed with builtin".into()));
                }
                match b {
                    Builtin::TrivialExtensionOf(inner) => {
                        let lambda = inner.build(Some(k), cap)?;
                        trivial_extension(&lambda)
                    }
                    Builtin::PreprojectiveOf(q) => preprojective_algebra(q, k, PreprojectiveSigns::Standard),
                    Builtin::Nakayama(n) => nakayama(k, n.loop_length, n.nilpotency),
                }
            }
            (None, Some(q)) => {
                let rels = self
                    .relations
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let terms = r
                            .terms
                            .iter()
                            .map(|t| {
                                let c = k
                                    .parse_scalar(&t.coeff)
                                    .map_err(|e| Error::Parse(format!("relations[{i}]: {e}")))?;
                                Ok((c, t.path.clone()))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Relation::new(terms))
                    })
                    .collect::<Result<Vec<_>>>()?;
                build_algebra(q, &rels, k, self.max_path_length.unwrap_or(cap))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quiver_with_relations() {
        let text = r#"{
            "field": {"type": "rational"},
            "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1", "degree": 1}]},
            "relations": [{"terms": [{"coeff": "1", "path": ["x", "x", "x"]}]}],
            "max_path_length": 4
        }"#;
        let a = AlgebraSpecFile::parse(text).unwrap().build(None, 16).unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn parses_builtins() {
        let te = r#"{"builtin": {"trivial_extension_of": {
            "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 0}]}
        }}}"#;
        assert_eq!(AlgebraSpecFile::parse(te).unwrap().build(None, 8).unwrap().dim(), 6);
        let nak = r#"{"field": {"type": "prime", "p": 5}, "builtin": {"nakayama": {"loop_length": 2, "nilpotency": 2}}}"#;
        let a = AlgebraSpecFile::parse(nak).unwrap().build(None, 8).unwrap();
        assert_eq!((a.dim(), a.field()), (4, Field::Prime { p: 5 }));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(AlgebraSpecFile::parse("{").is_err());
        let both = r#"{"quiver": {"vertices": ["1"]}, "builtin": {"nakayama": {"loop_length": 1, "nilpotency": 2}}}"#;
        assert!(AlgebraSpecFile::parse(both).unwrap().build(None, 4).is_err());
        let composite = r#"{"field": {"type": "prime", "p": 6}, "quiver": {"vertices": ["1"]}}"#;
        assert!(AlgebraSpecFile::parse(composite).unwrap().build(None, 4).is_err());
        let coeff = r#"{"quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1", "degree": 1}]},
            "relations": [{"terms": [{"coeff": "1/0", "path": ["x", "x"]}]}]}"#;
        assert!(AlgebraSpecFile::parse(coeff).unwrap().build(None, 4).is_err());
    }
}
