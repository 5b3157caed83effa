use std::fmt;

use super::quiver::{Path, Presentation, Quiver, Relation};
use crate::error::Result;
use crate::linalg::{Field, Matrix, RowBasis, Scalar};

/// One basis element: a block `e_source A e_target` and the generator word it is.
/// Idempotents have an empty word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisWord {
    pub source: usize,
    pub target: usize,
    pub letters: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub basis_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Presentation(Presentation),
    /// Built from structure constants, e.g. an endomorphism algebra.
    Abstract,
}

/// A finite-dimensional algebra with a basis adapted to a complete set of
/// primitive orthogonal idempotents.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    pub(crate) field: Field,
    pub(crate) vertices: Vec<String>,
    pub(crate) generators: Vec<Generator>,
    pub(crate) basis: Vec<BasisWord>,
    pub(crate) labels: Vec<String>,
    /// `table[i * dim + j]` is `b_i * b_j` as sparse coordinates.
    pub(crate) table: Vec<Vec<(usize, Scalar)>>,
    pub(crate) idempotents: Vec<usize>,
    /// Radical basis, each vector inside a single block `(source, target)`.
    pub(crate) radical: Vec<(usize, usize, Vec<Scalar>)>,
    pub(crate) origin: Origin,
}

/// Coarse invariants used to compare algebras up to Morita-type equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Signature {
    pub dim: usize,
    pub center_dim: usize,
    pub commutative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub vertices: usize,
    pub radical_dim: usize,
    pub center_dim: usize,
    pub commutative: bool,
    pub k0_rank: usize,
}

impl Algebra {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn basis(&self) -> &[BasisWord] {
        &self.basis
    }

    pub fn basis_label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        match &self.origin {
            Origin::Presentation(p) => Some(p),
            Origin::Abstract => None,
        }
    }

    pub fn quiver(&self) -> Option<&Quiver> {
        self.presentation().map(|p| &p.quiver)
    }

    /// Basis index of the idempotent at vertex `v`.
    pub fn idempotent_index(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn idempotent(&self, v: usize) -> Vec<Scalar> {
        self.unit_vector(self.idempotents[v])
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = self.zero();
        for &i in &self.idempotents {
            v[i] = self.field.one();
        }
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.table[i * n + j] {
                    out[*k] = &out[*k] + &(&c * s);
                }
            }
        }
        out
    }

    /// Product of generators by label, left to right; `None` for an unknown label
    /// or an empty list.
    pub fn word_element(&self, labels: &[&str]) -> Option<Vec<Scalar>> {
        let mut acc: Option<Vec<Scalar>> = None;
        for l in labels {
            let g = self.generators.iter().find(|g| g.label == *l)?;
            let x = self.unit_vector(g.basis_index);
            acc = Some(match acc {
                None => x,
                Some(y) => self.mul(&y, &x),
            });
        }
        acc
    }

    /// Basis indices lying in `e_s A e_t`.
    pub fn block(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == s && self.basis[i].target == t)
            .collect()
    }

    /// The block `(s, t)` containing `x`, if `x` is nonzero and block-homogeneous.
    pub fn block_of(&self, x: &[Scalar]) -> Option<(usize, usize)> {
        let mut found = None;
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let st = (self.basis[i].source, self.basis[i].target);
            match found {
                None => found = Some(st),
                Some(prev) if prev != st => return None,
                _ => {}
            }
        }
        found
    }

    pub fn radical_vectors(&self) -> &[(usize, usize, Vec<Scalar>)] {
        &self.radical
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.len()
    }

    pub fn radical_space(&self) -> RowBasis {
        let rows: Vec<Vec<Scalar>> = self.radical.iter().map(|(_, _, v)| v.clone()).collect();
        RowBasis::new(
            Matrix::from_rows(self.field, self.dim(), rows).expect("radical rows"),
        )
    }

    pub fn in_radical(&self, x: &[Scalar]) -> bool {
        self.radical_space().contains(x)
    }

    /// Radical basis vectors inside block `(s, t)`.
    pub fn radical_block(&self, s: usize, t: usize) -> Vec<&Vec<Scalar>> {
        self.radical
            .iter()
            .filter(|(a, b, _)| *a == s && *b == t)
            .map(|(_, _, v)| v)
            .collect()
    }

    /// Whether the quiver (arrows `i -> j` whenever `e_i rad e_j` is nonzero) is acyclic.
    pub fn is_directed(&self) -> bool {
        if let Some(q) = self.quiver() {
            return q.is_acyclic();
        }
        let n = self.num_vertices();
        let mut edges = vec![vec![false; n]; n];
        for (s, t, _) in &self.radical {
            edges[*s][*t] = true;
        }
        let mut arrows = Vec::new();
        let labels: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        for (s, row) in edges.iter().enumerate() {
            for (t, &e) in row.iter().enumerate() {
                if e {
                    arrows.push((format!("r{s}_{t}"), labels[s], labels[t]));
                }
            }
        }
        let arrows: Vec<(&str, &str, &str)> =
            arrows.iter().map(|(a, s, t)| (a.as_str(), *s, *t)).collect();
        Quiver::new(&labels, &arrows)
            .map(|q| q.is_acyclic())
            .unwrap_or(false)
    }

    /// For each vertex, the least vertex with an isomorphic indecomposable projective.
    pub fn projective_classes(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let rad = self.radical_space();
        let mut rep: Vec<usize> = (0..n).collect();
        for i in 0..n {
            if rep[i] != i {
                continue;
            }
            for j in i + 1..n {
                if rep[j] != j {
                    continue;
                }
                let bij = self.block(i, j);
                let bji = self.block(j, i);
                let linked = bij.iter().any(|&x| {
                    bji.iter().any(|&y| {
                        let prod = self.mul(&self.unit_vector(x), &self.unit_vector(y));
                        !rad.contains(&prod)
                    })
                });
                if linked {
                    rep[j] = i;
                }
            }
        }
        rep
    }

    /// Number of isomorphism classes of indecomposable projectives.
    pub fn k0_rank(&self) -> usize {
        self.projective_classes()
            .iter()
            .enumerate()
            .filter(|(i, r)| i == *r)
            .count()
    }

    /// Basis of the center, as rows in basis coordinates.
    pub fn center(&self) -> Matrix {
        let n = self.dim();
        // x commutes with b_j: sum_i x_i (b_i b_j - b_j b_i) = 0
        let mut eqs = Matrix::zeros(self.field, n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    let v = &eqs.get(j * n + k, i).clone() + c;
                    eqs.set(j * n + k, i, v);
                }
                for (k, c) in self.mul_basis(j, i) {
                    let v = eqs.get(j * n + k, i) - c;
                    eqs.set(j * n + k, i, v);
                }
            }
        }
        eqs.kernel_basis().transpose()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn signature(&self) -> Signature {
        Signature {
            dim: self.dim(),
            center_dim: self.center().rows(),
            commutative: self.is_commutative(),
        }
    }

    pub fn summary(&self) -> AlgebraSummary {
        AlgebraSummary {
            dim: self.dim(),
            vertices: self.num_vertices(),
            radical_dim: self.radical_dim(),
            center_dim: self.center().rows(),
            commutative: self.is_commutative(),
            k0_rank: self.k0_rank(),
        }
    }

    /// Exact associativity check on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&self.unit_vector(i), &self.unit_vector(j));
                for k in 0..n {
                    let left = self.mul(&ij, &self.unit_vector(k));
                    let jk = self.mul(&self.unit_vector(j), &self.unit_vector(k));
                    let right = self.mul(&self.unit_vector(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The sum of the vertex idempotents is a two-sided identity, and they are orthogonal.
    pub fn has_unit(&self) -> bool {
        let one = self.one();
        let orth = self.idempotents.iter().enumerate().all(|(a, &i)| {
            self.idempotents.iter().enumerate().all(|(b, &j)| {
                let p = self.mul(&self.unit_vector(i), &self.unit_vector(j));
                if a == b {
                    p == self.unit_vector(i)
                } else {
                    p.iter().all(Scalar::is_zero)
                }
            })
        });
        orth && (0..self.dim()).all(|i| {
            let b = self.unit_vector(i);
            self.mul(&one, &b) == b && self.mul(&b, &one) == b
        })
    }

    /// The opposite algebra on the same basis indexing.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.table[j * n + i].clone();
            }
        }
        let basis = self
            .basis
            .iter()
            .map(|w| BasisWord {
                source: w.target,
                target: w.source,
                letters: w.letters.iter().rev().copied().collect(),
            })
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                label: g.label.clone(),
                source: g.target,
                target: g.source,
                basis_index: g.basis_index,
            })
            .collect();
        let origin = match &self.origin {
            Origin::Presentation(p) => Origin::Presentation(opposite_presentation(p)),
            Origin::Abstract => Origin::Abstract,
        };
        let labels = match &origin {
            Origin::Presentation(p) => self
                .basis
                .iter()
                .map(|w| {
                    Path {
                        source: w.target,
                        target: w.source,
                        arrows: w.letters.iter().rev().copied().collect(),
                    }
                    .label(&p.quiver)
                })
                .collect(),
            Origin::Abstract => self.labels.clone(),
        };
        Algebra {
            field: self.field,
            vertices: self.vertices.clone(),
            generators,
            basis,
            labels,
            table,
            idempotents: self.idempotents.clone(),
            radical: self
                .radical
                .iter()
                .map(|(s, t, v)| (*t, *s, v.clone()))
                .collect(),
            origin,
        }
    }

    /// `A / AeA` for `e` the sum of the given vertex idempotents.
    pub fn quotient_by_idempotent_ideal(&self, vertices: &[usize]) -> Result<Algebra> {
        if let Some(p) = self.presentation() {
            let q = quotient_presentation(p, vertices)?;
            return super::build::build_algebra(&q, super::build::DEFAULT_PATH_CAP);
        }
        let raw = super::raw::RawAlgebra::from_algebra(self);
        let mut e = self.zero();
        for &v in vertices {
            e[self.idempotents[v]] = self.field.one();
        }
        let (quot, _) = raw.quotient_by_ideal_generated(&e);
        Ok(quot.normalize()?.0)
    }

    /// `eAe` as an abstract algebra, for `e` the sum of the given vertex idempotents.
    pub fn corner(&self, vertices: &[usize]) -> Result<Algebra> {
        let raw = super::raw::RawAlgebra::from_algebra(self).corner_from_basis(
            &vertices
                .iter()
                .flat_map(|&s| vertices.iter().flat_map(move |&t| self.block(s, t)))
                .collect::<Vec<_>>(),
            {
                let mut e = self.zero();
                for &v in vertices {
                    e[self.idempotents[v]] = self.field.one();
                }
                e
            },
        );
        Ok(raw.normalize()?.0)
    }

    /// Zero algebra over the field.
    pub fn zero_algebra(field: Field) -> Algebra {
        Algebra {
            field,
            vertices: vec![],
            generators: vec![],
            basis: vec![],
            labels: vec![],
            table: vec![],
            idempotents: vec![],
            radical: vec![],
            origin: Origin::Abstract,
        }
    }
}

fn opposite_presentation(p: &Presentation) -> Presentation {
    let mut q = p.quiver.clone();
    for a in &mut q.arrows {
        std::mem::swap(&mut a.source, &mut a.target);
    }
    let relations = p
        .relations
        .iter()
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, path)| {
                    (
                        c.clone(),
                        Path {
                            source: path.target,
                            target: path.source,
                            arrows: path.arrows.iter().rev().copied().collect(),
                        },
                    )
                })
                .collect(),
        })
        .collect();
    Presentation {
        field: p.field,
        quiver: q,
        relations,
        name: p.name.as_ref().map(|n| match n.strip_suffix("-op") {
            Some(base) => base.to_string(),
            None => format!("{n}-op"),
        }),
    }
}

/// Removes the given vertices, their arrows, and every relation term passing through them.
pub(crate) fn quotient_presentation(p: &Presentation, removed: &[usize]) -> Result<Presentation> {
    let keep: Vec<usize> = (0..p.quiver.vertices.len())
        .filter(|v| !removed.contains(v))
        .collect();
    let vmap = |v: usize| keep.iter().position(|&k| k == v);
    let mut q = Quiver {
        vertices: keep.iter().map(|&v| p.quiver.vertices[v].clone()).collect(),
        arrows: vec![],
    };
    let mut amap = vec![None; p.quiver.arrows.len()];
    for (i, a) in p.quiver.arrows.iter().enumerate() {
        if let (Some(s), Some(t)) = (vmap(a.source), vmap(a.target)) {
            amap[i] = Some(q.arrows.len());
            q.arrows.push(super::quiver::Arrow {
                id: a.id.clone(),
                source: s,
                target: t,
            });
        }
    }
    let mut out = Presentation::new(p.field, q);
    out.name = p.name.as_ref().map(|n| format!("{n}/e"));
    for r in &p.relations {
        let terms: Vec<(Scalar, Path)> = r
            .terms
            .iter()
            .filter_map(|(c, path)| {
                let arrows: Option<Vec<usize>> = path.arrows.iter().map(|&a| amap[a]).collect();
                Some((
                    c.clone(),
                    Path {
                        source: vmap(path.source)?,
                        target: vmap(path.target)?,
                        arrows: arrows?,
                    },
                ))
            })
            .collect();
        if !terms.is_empty() {
            out.add_relation(Relation { terms })?;
        }
    }
    Ok(out)
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra<{}>(dim {}, vertices {:?}, basis {:?})",
            self.field, self.dim(), self.vertices, self.labels
        )
    }
}
