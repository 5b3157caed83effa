use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense matrix over a single scalar domain, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination: `transform * original = reduced`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::Input(format!(
                "entry over {} in a matrix over {field}",
                bad.field()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        if rows.iter().any(|row| row.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::from_vec(field, r, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| field.from_i64(v))
            })
            .collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// A single row vector.
    pub fn row_vector(field: Field, entries: Vec<Scalar>) -> Matrix {
        let cols = entries.len();
        Matrix::from_vec(field, 1, cols, entries).expect("row vector")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shapes")
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shapes");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shapes");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { data, ..*self }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { data, ..*self }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row counts");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column counts");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diagonal(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out
    }

    fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    /// Gauss-Jordan elimination with the accumulated row transform.
    pub fn rref(&self) -> Rref {
        let mut rows = self.hstack(&Matrix::identity(self.field, self.rows)).to_rows();
        let pivots = eliminate(&mut rows, self.cols);
        let full = Matrix::from_rows(self.field, self.cols + self.rows, rows).expect("rref rows");
        Rref {
            reduced: full.submatrix(0, self.rows, 0, self.cols),
            transform: full.submatrix(0, self.rows, self.cols, self.rows),
            pivots,
        }
    }

    /// Reduced row-echelon form without the transform.
    pub fn reduced(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = eliminate(&mut rows, self.cols);
        (
            Matrix::from_rows(self.field, self.cols, rows).expect("rref rows"),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        eliminate(&mut rows, self.cols).len()
    }

    /// Columns spanning the right kernel `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let (reduced, pivots) = self.reduced();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (c, &f) in free.iter().enumerate() {
            k.set(f, c, self.field.one());
            for (r, &p) in pivots.iter().enumerate() {
                k.set(p, c, -reduced.get(r, f));
            }
        }
        k
    }

    /// Rows spanning the left kernel `{y : y * self = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::Shape(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let mut rows = self.hstack(b).to_rows();
        let pivots = eliminate(&mut rows, self.cols);
        let aug = Matrix::from_rows(self.field, self.cols + b.cols, rows).expect("solve rows");
        for r in pivots.len()..self.rows {
            for j in 0..b.cols {
                if !aug.get(r, self.cols + j).is_zero() {
                    return Ok(None);
                }
            }
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, aug.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Some `x` with `x * self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Result<Option<Matrix>> {
        Ok(self.transpose().solve(&b.transpose())?.map(|x| x.transpose()))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let r = self.rref();
        (r.rank() == self.rows).then_some(r.transform)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis (in reduced echelon form) of the row space.
    pub fn row_space(&self) -> Matrix {
        let (reduced, pivots) = self.reduced();
        reduced.submatrix(0, pivots.len(), 0, self.cols)
    }

    /// Whether every row of `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &Matrix) -> bool {
        if v.rows == 0 {
            return true;
        }
        self.vstack(v).rank() == self.rank()
    }

    /// Basis of the intersection of two row spaces.
    pub fn row_space_intersection(&self, other: &Matrix) -> Matrix {
        let a = self.row_space();
        let b = other.row_space();
        if a.rows == 0 || b.rows == 0 {
            return Matrix::zeros(self.field, 0, self.cols);
        }
        // y_a * a = y_b * b  <=>  [y_a | y_b] * [a; -b] = 0
        let stacked = a.vstack(&b.neg());
        let k = stacked.left_kernel();
        let ya = k.submatrix(0, k.rows, 0, a.rows);
        ya.mul(&a).row_space()
    }

    /// Rows completing a basis of `self`'s row space to all of `k^cols`, chosen among unit vectors.
    pub fn row_space_complement(&self) -> Matrix {
        let (_, pivots) = self.row_space().reduced();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut out = Matrix::zeros(self.field, free.len(), self.cols);
        for (r, &j) in free.iter().enumerate() {
            out.set(r, j, self.field.one());
        }
        out
    }
}

/// In-place Gauss-Jordan on the first `pivot_cols` columns; returns pivot columns.
fn eliminate(rows: &mut [Vec<Scalar>], pivot_cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        // smallest-height pivot keeps rational entries small
        let Some(best) = (r..nrows)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].height())
        else {
            continue;
        };
        rows.swap(r, best);
        let inv = rows[r][c].inv();
        if !rows[r][c].is_one() {
            for v in rows[r].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{} [", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_text).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn identity_is_reduced() {
        let r = Matrix::identity(Q, 2).rref();
        assert_eq!(r.reduced, Matrix::identity(Q, 2));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn dependent_rows_have_rank_one() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.transform.mul(&m), r.reduced);
    }

    #[test]
    fn full_rank_mod_two() {
        let f2 = Field::Prime(2);
        let m = Matrix::from_i64(f2, &[&[1, 1], &[1, 2]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernels() {
        let k = Matrix::from_i64(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_i64(Q, &[&[-1], &[1]]));
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // proportional to (2, -1)
        assert_eq!(k.get(0, 0), &(&Q.from_i64(-2) * k.get(1, 0)));
    }

    #[test]
    fn solving() {
        let b = Matrix::from_i64(Q, &[&[3], &[-1]]);
        let x = Matrix::identity(Q, 2).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
        let singular = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(singular.solve(&b).unwrap().is_none());
        assert!(singular.solve(&Matrix::zeros(Q, 3, 1)).is_err());
    }

    #[test]
    fn inverse_and_intersection() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        let a = Matrix::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = Matrix::from_i64(Q, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.row_space_intersection(&b), Matrix::from_i64(Q, &[&[0, 1, 0]]));
        assert_eq!(a.row_space_complement(), Matrix::from_i64(Q, &[&[0, 0, 1]]));
    }
}
