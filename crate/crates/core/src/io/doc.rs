use serde::{Deserialize, Serialize};

use crate::algebra::{Path, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::Field;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// `"Q"` or `"Fp:<p>"`.
    pub field: String,
    pub quiver: QuiverDoc,
    #[serde(default)]
    pub relations: Vec<Vec<TermDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub id: String,
    pub source: String,
    pub target: String,
}

/// `coeff * path`; a path is a sequence of arrow ids, or empty together with
/// `vertex` for an idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    #[serde(default)]
    pub path: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

pub fn parse_field(text: &str) -> Result<Field> {
    match text {
        "Q" => Ok(Field::Rationals),
        _ => {
            let p = text
                .strip_prefix("Fp:")
                .ok_or_else(|| Error::Input(format!("unknown field '{text}', expected Q or Fp:<p>")))?;
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Input(format!("bad characteristic in '{text}'")))?;
            Field::prime(p)
        }
    }
}

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rationals => "Q".into(),
        _ => format!("Fp:{}", f.characteristic()),
    }
}

/// Converts a `serde_json` error into a positioned syntax error.
pub fn json_error(e: serde_json::Error) -> Error {
    Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(json_error)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<AlgebraDocument> {
        let doc: AlgebraDocument = parse_json(text)?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Input(format!(
                "unsupported format_version '{}'",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn serialize(&self) -> String {
        to_json(self)
    }

    pub fn from_presentation(p: &Presentation) -> AlgebraDocument {
        let q = &p.quiver;
        AlgebraDocument {
            format_version: FORMAT_VERSION.into(),
            name: p.name.clone(),
            field: field_name(p.field),
            quiver: QuiverDoc {
                vertices: q.vertices.clone(),
                arrows: q
                    .arrows
                    .iter()
                    .map(|a| ArrowDoc {
                        id: a.id.clone(),
                        source: q.vertices[a.source].clone(),
                        target: q.vertices[a.target].clone(),
                    })
                    .collect(),
            },
            relations: p
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, path)| TermDoc {
                            coeff: c.to_text(),
                            path: path.arrows.iter().map(|&i| q.arrows[i].id.clone()).collect(),
                            vertex: None,
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Builds the presentation, optionally over another field.
    pub fn to_presentation(&self, field: Option<Field>) -> Result<Presentation> {
        let field = match field {
            Some(f) => f,
            None => parse_field(&self.field)?,
        };
        let vs: Vec<&str> = self.quiver.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .quiver
            .arrows
            .iter()
            .map(|a| (a.id.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let mut p = Presentation::new(field, Quiver::new(&vs, &arrows)?);
        p.name = self.name.clone();
        for rel in &self.relations {
            let mut terms: Vec<(crate::linalg::Scalar, Path)> = Vec::new();
            for t in rel {
                if t.vertex.is_some() || t.path.is_empty() {
                    return Err(Error::MalformedRelation("relation terms must be paths".into()));
                }
                let ids: Vec<&str> = t.path.iter().map(String::as_str).collect();
                terms.push((field.parse(&t.coeff)?, p.path(&ids)?));
            }
            p.add_relation(Relation { terms })?;
        }
        Ok(p)
    }
}

/// A bounded complex of projectives; `terms[i]` lists vertex labels in degree
/// `low + i` and `differentials[i][l][j]` is the component from summand `j` of
/// term `i` to summand `l` of term `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format_version: String,
    pub algebra: String,
    pub low: i64,
    pub terms: Vec<Vec<String>>,
    pub differentials: Vec<Vec<Vec<Vec<TermDoc>>>>,
}

/// A module given by one matrix per arrow, rows indexed by the source space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub format_version: String,
    pub dims: Vec<usize>,
    pub arrows: std::collections::BTreeMap<String, Vec<Vec<String>>>,
}
