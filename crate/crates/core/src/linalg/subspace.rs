use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// A row space with a fixed basis, supporting coordinates and reduction.
#[derive(Clone, Debug)]
pub struct RowBasis {
    basis: Matrix,
    reduced: Matrix,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl RowBasis {
    /// Keeps a maximal independent subset of `rows`, in order.
    pub fn new(rows: Matrix) -> RowBasis {
        let (_, keep) = rows.transpose().reduced();
        let basis = if keep.len() == rows.rows() {
            rows
        } else {
            rows.select_rows(&keep)
        };
        let r = basis.rref();
        RowBasis {
            basis,
            reduced: r.reduced,
            pivots: r.pivots,
            transform: r.transform,
        }
    }

    pub fn empty(field: Field, ambient: usize) -> RowBasis {
        RowBasis::new(Matrix::zeros(field, 0, ambient))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates `y` with `y * basis = v`, if `v` lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let field = self.basis.field();
        let k = self.dim();
        let z: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        // check v = z * reduced
        for j in 0..self.ambient() {
            let mut acc = field.zero();
            for (i, zi) in z.iter().enumerate() {
                if !zi.is_zero() {
                    acc = &acc + &(zi * self.reduced.get(i, j));
                }
            }
            if acc != v[j] {
                return None;
            }
        }
        let mut y = vec![field.zero(); k];
        for (i, zi) in z.iter().enumerate() {
            if zi.is_zero() {
                continue;
            }
            for (c, yc) in y.iter_mut().enumerate() {
                let t = self.transform.get(i, c);
                if !t.is_zero() {
                    *yc = &*yc + &(zi * t);
                }
            }
        }
        Some(y)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// Canonical representative of `v` modulo the span (zero at pivot columns).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let r = self.reduced.get(i, j);
                if !r.is_zero() {
                    *o = &*o - &(&c * r);
                }
            }
        }
        out
    }

    /// Columns not used as pivots; unit vectors there complement the span.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient())
            .filter(|j| !self.pivots.contains(j))
            .collect()
    }
}

/// Greedily picks rows of `candidates` that extend the span of `start`.
pub fn extend_basis(start: &Matrix, candidates: &Matrix) -> Matrix {
    let mut acc = start.clone();
    let mut rank = acc.rank();
    let mut picked = Matrix::zeros(candidates.field(), 0, candidates.cols());
    for i in 0..candidates.rows() {
        let row = candidates.select_rows(&[i]);
        let next = acc.vstack(&row);
        let r = next.rank();
        if r > rank {
            rank = r;
            acc = next;
            picked = picked.vstack(&row);
        }
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_and_reduction() {
        let q = Field::Rationals;
        let b = RowBasis::new(Matrix::from_i64(q, &[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1]]));
        assert_eq!(b.dim(), 2);
        let v: Vec<Scalar> = [2, 5, 3].iter().map(|&x| q.from_i64(x)).collect();
        let y = b.coords(&v).unwrap();
        assert_eq!(y, vec![q.from_i64(2), q.from_i64(3)]);
        let w: Vec<Scalar> = [1, 0, 0].iter().map(|&x| q.from_i64(x)).collect();
        assert!(!b.contains(&w));
        let r = b.reduce(&w);
        assert!(b.pivots().iter().all(|&p| r[p].is_zero()));
    }
}
