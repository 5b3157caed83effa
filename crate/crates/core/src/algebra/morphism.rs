use std::sync::Arc;

use super::fd::Algebra;
use super::raw::RawAlgebra;
use crate::error::Result;
use crate::linalg::{Matrix, Scalar};

/// A linear map between algebras given on the source basis.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    /// `images[i]` is the image of basis element `i`, in target coordinates.
    pub images: Vec<Vec<Scalar>>,
}

impl AlgebraMap {
    pub fn identity(a: Arc<Algebra>) -> AlgebraMap {
        let images = (0..a.dim()).map(|i| a.unit_vector(i)).collect();
        AlgebraMap {
            source: a.clone(),
            target: a,
            images,
        }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.target.zero();
        for (xi, img) in x.iter().zip(&self.images) {
            if xi.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(img) {
                if !y.is_zero() {
                    *o = &*o + &(xi * y);
                }
            }
        }
        out
    }

    pub fn is_unital(&self) -> bool {
        self.apply(&self.source.one()) == self.target.one()
    }

    pub fn is_multiplicative(&self) -> bool {
        let a = &self.source;
        let n = a.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut prod = a.zero();
                for (k, c) in a.mul_basis(i, j) {
                    prod[*k] = c.clone();
                }
                self.apply(&prod) == self.target.mul(&self.images[i], &self.images[j])
            })
        })
    }

    pub fn is_algebra_map(&self) -> bool {
        self.is_unital() && self.is_multiplicative()
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.target.field(), self.target.dim(), self.images.clone())
            .expect("images have target dimension")
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// The same map between opposite algebras.
    pub fn opposite(&self) -> AlgebraMap {
        AlgebraMap {
            source: Arc::new(self.source.opposite()),
            target: Arc::new(self.target.opposite()),
            images: self.images.clone(),
        }
    }
}

/// `A -> A / AeA` for `e` the sum of the given vertex idempotents.
pub fn quotient_map(a: &Arc<Algebra>, vertices: &[usize]) -> Result<AlgebraMap> {
    if a.presentation().is_some() {
        let b = Arc::new(a.quotient_by_idempotent_ideal(vertices)?);
        let keep = |v: usize| -> Option<usize> {
            if vertices.contains(&v) {
                None
            } else {
                b.vertex_index(&a.vertex_labels()[v])
            }
        };
        let gen_images: Vec<Vec<Scalar>> = a
            .generators()
            .iter()
            .map(|g| match (keep(g.source), keep(g.target)) {
                (Some(_), Some(_)) => b.word_element(&[g.label.as_str()]).expect("arrow survives"),
                _ => b.zero(),
            })
            .collect();
        let images = a
            .basis()
            .iter()
            .map(|w| {
                if w.letters.is_empty() {
                    return match keep(w.source) {
                        Some(v) => b.idempotent(v),
                        None => b.zero(),
                    };
                }
                w.letters[1..]
                    .iter()
                    .fold(gen_images[w.letters[0]].clone(), |acc, &l| b.mul(&acc, &gen_images[l]))
            })
            .collect();
        return Ok(AlgebraMap {
            source: a.clone(),
            target: b,
            images,
        });
    }
    let raw = RawAlgebra::from_algebra(a);
    let mut e = a.zero();
    for &v in vertices {
        e[a.idempotent_index(v)] = a.field().one();
    }
    let (quot, proj) = raw.quotient_by_ideal_generated(&e);
    let (b, p) = quot.normalize()?;
    let to_b = proj.mul(&p.inverse().expect("adapted basis"));
    let images = (0..a.dim()).map(|i| to_b.row_vec(i)).collect();
    Ok(AlgebraMap {
        source: a.clone(),
        target: Arc::new(b),
        images,
    })
}
