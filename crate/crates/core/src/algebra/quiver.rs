use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// Vertices are stored by label; arrows refer to vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let mut q = Quiver {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: Vec::new(),
        };
        let mut seen = HashSet::new();
        for v in &q.vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Input(format!("duplicate vertex '{v}'")));
            }
        }
        for (id, s, t) in arrows {
            q.add_arrow(id, s, t)?;
        }
        Ok(q)
    }

    pub fn add_arrow(&mut self, id: &str, source: &str, target: &str) -> Result<()> {
        if self.arrow_index(id).is_some() || self.vertex_index(id).is_some() {
            return Err(Error::Input(format!("duplicate id '{id}'")));
        }
        let s = self
            .vertex_index(source)
            .ok_or_else(|| Error::Input(format!("arrow '{id}': unknown vertex '{source}'")))?;
        let t = self
            .vertex_index(target)
            .ok_or_else(|| Error::Input(format!("arrow '{id}': unknown vertex '{target}'")))?;
        self.arrows.push(Arrow {
            id: id.to_string(),
            source: s,
            target: t,
        });
        Ok(())
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Whether the quiver has no oriented cycles (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }
}

/// A path: a start vertex and a composable arrow sequence, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    /// Length-lex comparison key: longer paths are larger, ties by arrow indices.
    pub fn order_key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.source)
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].id.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

/// A quiver with relations over a chosen field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub name: Option<String>,
}

impl Presentation {
    pub fn new(field: Field, quiver: Quiver) -> Presentation {
        Presentation {
            field,
            quiver,
            relations: Vec::new(),
            name: None,
        }
    }

    pub fn named(mut self, name: &str) -> Presentation {
        self.name = Some(name.to_string());
        self
    }

    /// Resolves a sequence of arrow ids into a path.
    pub fn path(&self, ids: &[&str]) -> Result<Path> {
        if ids.is_empty() {
            return Err(Error::Input("empty path".into()));
        }
        let mut idx = Vec::with_capacity(ids.len());
        for id in ids {
            idx.push(
                self.quiver
                    .arrow_index(id)
                    .ok_or_else(|| Error::Input(format!("unknown arrow '{id}'")))?,
            );
        }
        self.path_from_indices(idx)
    }

    pub fn path_from_indices(&self, idx: Vec<usize>) -> Result<Path> {
        let arrows = &self.quiver.arrows;
        for w in idx.windows(2) {
            if arrows[w[0]].target != arrows[w[1]].source {
                return Err(Error::MalformedRelation(format!(
                    "arrows '{}' and '{}' are not composable",
                    arrows[w[0]].id, arrows[w[1]].id
                )));
            }
        }
        Ok(Path {
            source: arrows[idx[0]].source,
            target: arrows[*idx.last().unwrap()].target,
            arrows: idx,
        })
    }

    /// Adds a relation given as integer-coefficient terms over arrow-id words.
    pub fn relation(mut self, terms: &[(i64, &[&str])]) -> Result<Presentation> {
        let mut rel = Vec::new();
        for (c, ids) in terms {
            rel.push((self.field.from_i64(*c), self.path(ids)?));
        }
        self.add_relation(Relation { terms: rel })?;
        Ok(self)
    }

    pub fn add_relation(&mut self, rel: Relation) -> Result<()> {
        validate_relation(&rel)?;
        self.relations.push(rel);
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.relations.iter().try_for_each(validate_relation)
    }
}

fn validate_relation(rel: &Relation) -> Result<()> {
    let Some((_, first)) = rel.terms.first() else {
        return Err(Error::MalformedRelation("relation without terms".into()));
    };
    for (_, p) in &rel.terms {
        if p.source != first.source || p.target != first.target {
            return Err(Error::MalformedRelation(
                "relation joins paths that are not parallel".into(),
            ));
        }
        if p.len() < 2 {
            return Err(Error::MalformedRelation(
                "relation terms must be paths of length at least 2".into(),
            ));
        }
    }
    Ok(())
}
