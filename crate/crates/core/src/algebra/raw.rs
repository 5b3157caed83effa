//! Algebras given only by structure constants: radical, primitive idempotents,
//! and normalization to an idempotent-adapted basis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fd::{Algebra, BasisWord, Generator, Origin};
use crate::error::{Error, Result};
use crate::linalg::{extend_basis, Field, Matrix, Poly, RowBasis, Scalar};

#[derive(Clone, Debug)]
pub struct RawAlgebra {
    pub field: Field,
    pub dim: usize,
    /// `table[i * dim + j]` is `b_i * b_j`.
    pub table: Vec<Vec<(usize, Scalar)>>,
    pub one: Vec<Scalar>,
}

impl RawAlgebra {
    pub fn from_algebra(a: &Algebra) -> RawAlgebra {
        RawAlgebra {
            field: a.field(),
            dim: a.dim(),
            table: a.table.clone(),
            one: a.one(),
        }
    }

    /// From dense products `b_i * b_j` given as coordinate vectors.
    pub fn from_products(
        field: Field,
        dim: usize,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
        one: Vec<Scalar>,
    ) -> RawAlgebra {
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                table[i * dim + j] = product(i, j)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        RawAlgebra {
            field,
            dim,
            table,
            one,
        }
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
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

    /// Jacobson radical. In characteristic zero this is the kernel of the trace form;
    /// in characteristic p the kernels of the p-power trace functionals are iterated.
    pub fn radical(&self) -> Result<RowBasis> {
        let n = self.dim;
        let p = self.field.characteristic();
        let mut space = RowBasis::new(Matrix::identity(self.field, n));
        let mut level = 0u32;
        loop {
            let k = space.dim();
            let mut g = Matrix::zeros(self.field, k, n);
            for r in 0..k {
                let x = space.basis().row_vec(r);
                for j in 0..n {
                    let xy = self.mul(&x, &self.unit_vector(j));
                    g.set(r, j, self.power_trace(&xy, level));
                }
            }
            let ker = g.left_kernel().mul(space.basis());
            space = RowBasis::new(ker);
            if p == 0 || (p as u128).pow(level + 1) > n as u128 {
                break;
            }
            level += 1;
        }
        if self.field.characteristic() != 0 && !self.is_nilpotent_space(&space) {
            return Err(Error::RadicalUnavailable(format!(
                "trace criterion produced a non-nilpotent ideal in characteristic {p}"
            )));
        }
        Ok(space)
    }

    /// `Tr(L_a^(p^i)) / p^i mod p` on an integer lift; the plain trace when `i = 0`.
    fn power_trace(&self, a: &[Scalar], level: u32) -> Scalar {
        let n = self.dim;
        let p = self.field.characteristic();
        let rows: Vec<Vec<Scalar>> = (0..n).map(|r| self.mul(a, &self.unit_vector(r))).collect();
        if level == 0 || p == 0 {
            let mut t = self.field.zero();
            for (r, row) in rows.iter().enumerate() {
                t = &t + &row[r];
            }
            return t;
        }
        let modulus = (p as u128).pow(level + 1);
        let lift: Vec<Vec<u128>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| match s {
                        Scalar::Fp { value, .. } => *value as u128,
                        Scalar::Q(_) => unreachable!("rational entry in characteristic p"),
                    })
                    .collect()
            })
            .collect();
        let mul = |x: &Vec<Vec<u128>>, y: &Vec<Vec<u128>>| -> Vec<Vec<u128>> {
            let mut out = vec![vec![0u128; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if x[i][k] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        out[i][j] = (out[i][j] + x[i][k] * y[k][j]) % modulus;
                    }
                }
            }
            out
        };
        let mut m = lift;
        for _ in 0..level {
            // raise to the p-th power
            let base = m.clone();
            let mut acc = base.clone();
            for _ in 1..p {
                acc = mul(&acc, &base);
            }
            m = acc;
        }
        let trace = (0..n).fold(0u128, |t, i| (t + m[i][i]) % modulus);
        let scale = (p as u128).pow(level);
        self.field.from_i64(((trace / scale) % p as u128) as i64)
    }

    fn is_nilpotent_space(&self, space: &RowBasis) -> bool {
        let base = space.basis().clone();
        let mut power = base.clone();
        for _ in 0..=self.dim {
            if power.rows() == 0 {
                return true;
            }
            let mut rows = Vec::new();
            for i in 0..power.rows() {
                for j in 0..base.rows() {
                    rows.push(self.mul(&power.row_vec(i), &base.row_vec(j)));
                }
            }
            power = Matrix::from_rows(self.field, self.dim, rows)
                .expect("power rows")
                .row_space();
        }
        false
    }

    /// A complete set of primitive orthogonal idempotents summing to one.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        if self.dim == 0 {
            return Ok(vec![]);
        }
        let rad = self.radical()?;
        let s = Semisimple { a: self, rad: &rad };
        let top = s.split(&s.reduce(&self.one))?;
        Ok(self.lift(&top))
    }

    fn newton(&self, mut a: Vec<Scalar>) -> Vec<Scalar> {
        let three = self.field.from_i64(3);
        let two = self.field.from_i64(2);
        for _ in 0..64 {
            let a2 = self.mul(&a, &a);
            if a2 == a {
                return a;
            }
            let a3 = self.mul(&a2, &a);
            a = a2
                .iter()
                .zip(&a3)
                .map(|(x, y)| &(&three * x) - &(&two * y))
                .collect();
        }
        panic!("idempotent lifting did not converge");
    }

    fn lift(&self, top: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        let mut rest = self.one.clone();
        for (k, f) in top.iter().enumerate() {
            if k + 1 == top.len() {
                out.push(rest.clone());
                break;
            }
            let a = self.mul(&self.mul(&rest, f), &rest);
            let e = self.newton(a);
            rest = rest.iter().zip(&e).map(|(x, y)| x - y).collect();
            out.push(e);
        }
        out
    }

    /// Quotient by the two-sided ideal generated by `x`; returns the quotient and the
    /// projection as a `dim x dim(quotient)` matrix acting on coordinate rows.
    pub fn quotient_by_ideal_generated(&self, x: &[Scalar]) -> (RawAlgebra, Matrix) {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            let bx = self.mul(&self.unit_vector(i), x);
            for j in 0..n {
                rows.push(self.mul(&bx, &self.unit_vector(j)));
            }
        }
        let ideal = RowBasis::new(Matrix::from_rows(self.field, n, rows).expect("ideal rows"));
        let free = ideal.free_columns();
        let m = free.len();
        let quot = RawAlgebra::from_products(
            self.field,
            m,
            |i, j| {
                let p = ideal.reduce(&self.mul(&self.unit_vector(free[i]), &self.unit_vector(free[j])));
                free.iter().map(|&c| p[c].clone()).collect()
            },
            {
                let o = ideal.reduce(&self.one);
                free.iter().map(|&c| o[c].clone()).collect()
            },
        );
        let mut proj = Matrix::zeros(self.field, n, m);
        for i in 0..n {
            let r = ideal.reduce(&self.unit_vector(i));
            for (j, &c) in free.iter().enumerate() {
                proj.set(i, j, r[c].clone());
            }
        }
        (quot, proj)
    }

    /// The subalgebra spanned by the given basis indices, with unit `e`.
    pub fn corner_from_basis(&self, idx: &[usize], e: Vec<Scalar>) -> RawAlgebra {
        let m = idx.len();
        let pos = |k: usize| idx.iter().position(|&i| i == k);
        RawAlgebra::from_products(
            self.field,
            m,
            |i, j| {
                let p = self.mul(&self.unit_vector(idx[i]), &self.unit_vector(idx[j]));
                let mut out = vec![self.field.zero(); m];
                for (k, c) in p.into_iter().enumerate() {
                    if !c.is_zero() {
                        out[pos(k).expect("corner is closed")] = c;
                    }
                }
                out
            },
            idx.iter().map(|&i| e[i].clone()).collect(),
        )
    }

    /// Rewrites the algebra on a basis adapted to primitive idempotents.
    /// Returns the algebra and the new basis as rows in the old coordinates.
    pub fn normalize(&self) -> Result<(Algebra, Matrix)> {
        let field = self.field;
        let n = self.dim;
        if n == 0 {
            return Ok((Algebra::zero_algebra(field), Matrix::zeros(field, 0, 0)));
        }
        let idem = self.primitive_idempotents()?;
        let m = idem.len();
        let mut rows: Vec<Vec<Scalar>> = idem.clone();
        let mut words: Vec<BasisWord> = (0..m)
            .map(|v| BasisWord {
                source: v,
                target: v,
                letters: vec![],
            })
            .collect();
        for s in 0..m {
            for t in 0..m {
                let block: Vec<Vec<Scalar>> = (0..n)
                    .map(|i| self.mul(&self.mul(&idem[s], &self.unit_vector(i)), &idem[t]))
                    .collect();
                let block = Matrix::from_rows(field, n, block).expect("block rows");
                let start = if s == t {
                    Matrix::row_vector(field, idem[s].clone())
                } else {
                    Matrix::zeros(field, 0, n)
                };
                let picked = extend_basis(&start, &block);
                for r in 0..picked.rows() {
                    words.push(BasisWord {
                        source: s,
                        target: t,
                        letters: vec![],
                    });
                    rows.push(picked.row_vec(r));
                }
            }
        }
        let p = Matrix::from_rows(field, n, rows).expect("adapted basis");
        let pinv = p.inverse().expect("adapted basis is a basis");
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&p.row_vec(i), &p.row_vec(j));
                let c = Matrix::row_vector(field, prod).mul(&pinv);
                table[i * n + j] = (0..n)
                    .filter(|&k| !c.get(0, k).is_zero())
                    .map(|k| (k, c.get(0, k).clone()))
                    .collect();
            }
        }
        let mut generators = Vec::new();
        for (k, w) in words.iter_mut().enumerate().skip(m) {
            w.letters = vec![generators.len()];
            generators.push(Generator {
                label: format!("b{k}"),
                source: w.source,
                target: w.target,
                basis_index: k,
            });
        }
        let rad_new = self.radical()?.basis().mul(&pinv);
        let mut radical = Vec::new();
        for s in 0..m {
            for t in 0..m {
                let cols: Vec<usize> = (0..n)
                    .filter(|&k| words[k].source == s && words[k].target == t)
                    .collect();
                if cols.is_empty() {
                    continue;
                }
                let restricted = rad_new.select_cols(&cols).row_space();
                for r in 0..restricted.rows() {
                    let mut v = vec![field.zero(); n];
                    for (c, &k) in cols.iter().enumerate() {
                        v[k] = restricted.get(r, c).clone();
                    }
                    radical.push((s, t, v));
                }
            }
        }
        let labels = (0..n)
            .map(|k| if k < m { format!("f{}", k + 1) } else { format!("b{k}") })
            .collect();
        let alg = Algebra {
            field,
            vertices: (1..=m).map(|v| v.to_string()).collect(),
            generators,
            basis: words,
            labels,
            table,
            idempotents: (0..m).collect(),
            radical,
            origin: Origin::Abstract,
        };
        Ok((alg, p))
    }
}

/// `A / rad A`, with elements kept as canonical representatives in `A`.
struct Semisimple<'a> {
    a: &'a RawAlgebra,
    rad: &'a RowBasis,
}

enum Corner {
    Primitive,
    ZeroDivisor(Vec<Scalar>),
}

impl Semisimple<'_> {
    fn reduce(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.rad.reduce(x)
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.reduce(&self.a.mul(x, y))
    }

    fn is_zero(x: &[Scalar]) -> bool {
        x.iter().all(Scalar::is_zero)
    }

    fn corner_basis(&self, e: &[Scalar]) -> RowBasis {
        let n = self.a.dim;
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| self.mul(&self.mul(e, &self.a.unit_vector(i)), e))
            .collect();
        RowBasis::new(Matrix::from_rows(self.a.field, n, rows).expect("corner rows"))
    }

    /// Splits the idempotent `e` into primitive orthogonal idempotents.
    fn split(&self, e: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        let corner = self.corner_basis(e);
        match self.find_zero_divisor(e, &corner)? {
            Corner::Primitive => Ok(vec![e.to_vec()]),
            Corner::ZeroDivisor(x) => {
                let f = self.idempotent_from(&x, &corner);
                let g: Vec<Scalar> = e.iter().zip(&f).map(|(a, b)| a - b).collect();
                let mut out = self.split(&f)?;
                out.extend(self.split(&g)?);
                Ok(out)
            }
        }
    }

    /// For a zero divisor `x` in a semisimple corner: an idempotent generating `xC`.
    fn idempotent_from(&self, x: &[Scalar], corner: &RowBasis) -> Vec<Scalar> {
        let field = self.a.field;
        let n = self.a.dim;
        let d = corner.dim();
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|i| self.mul(&self.mul(x, &corner.basis().row_vec(i)), x))
            .collect();
        let lhs = Matrix::from_rows(field, n, rows).expect("regularity system");
        let s = lhs
            .solve_left(&Matrix::row_vector(field, x.to_vec()))
            .expect("shapes")
            .expect("semisimple corners are von Neumann regular");
        let s_elem = s.mul(corner.basis()).row_vec(0);
        self.mul(x, &s_elem)
    }

    fn left_mult_rank(&self, x: &[Scalar], corner: &RowBasis) -> usize {
        let rows: Vec<Vec<Scalar>> = (0..corner.dim())
            .map(|i| self.mul(x, &corner.basis().row_vec(i)))
            .collect();
        Matrix::from_rows(self.a.field, self.a.dim, rows)
            .expect("rows")
            .rank()
    }

    fn min_poly(&self, x: &[Scalar], e: &[Scalar]) -> Poly {
        let field = self.a.field;
        let mut powers = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            let span = RowBasis::new(
                Matrix::from_rows(field, self.a.dim, powers.clone()).expect("powers"),
            );
            if let Some(c) = span.coords(&next) {
                let mut coeffs: Vec<Scalar> = c.iter().map(|v| -v).collect();
                coeffs.push(field.one());
                return Poly::new(field, coeffs);
            }
            powers.push(next);
        }
    }

    fn eval(&self, g: &Poly, x: &[Scalar], e: &[Scalar]) -> Vec<Scalar> {
        g.eval_with(
            e.to_vec(),
            &x.to_vec(),
            |a, b| a.iter().zip(b).map(|(u, v)| u + v).collect(),
            |a, b| self.mul(a, b),
            |a, s| a.iter().map(|u| u * s).collect(),
        )
    }

    fn is_commutative(&self, corner: &RowBasis) -> bool {
        let d = corner.dim();
        (0..d).all(|i| {
            (i + 1..d).all(|j| {
                let (x, y) = (corner.basis().row_vec(i), corner.basis().row_vec(j));
                self.mul(&x, &y) == self.mul(&y, &x)
            })
        })
    }

    fn candidates(&self, corner: &RowBasis) -> Vec<Vec<Scalar>> {
        let field = self.a.field;
        let d = corner.dim();
        let b: Vec<Vec<Scalar>> = (0..d).map(|i| corner.basis().row_vec(i)).collect();
        let add = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
            x.iter().zip(y).map(|(u, v)| u + v).collect()
        };
        let mut out = b.clone();
        for i in 0..d {
            for j in i + 1..d {
                out.push(add(&b[i], &b[j]));
            }
        }
        for i in 0..d {
            for j in 0..d {
                out.push(self.mul(&b[i], &b[j]));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x1de_a5e5 + d as u64);
        let span = match field.order() {
            Some(p) => p.min(1 << 20) as i64,
            None => 7,
        };
        for _ in 0..48 {
            let mut x = vec![field.zero(); self.a.dim];
            for bi in &b {
                let c = field.from_i64(rng.gen_range(-span..=span));
                x = add(&x, &bi.iter().map(|u| u * &c).collect::<Vec<_>>());
            }
            out.push(x);
        }
        out
    }

    fn find_zero_divisor(&self, e: &[Scalar], corner: &RowBasis) -> Result<Corner> {
        let d = corner.dim();
        if d <= 1 {
            return Ok(Corner::Primitive);
        }
        let commutative = self.is_commutative(corner);
        for x in self.candidates(corner) {
            if Self::is_zero(&x) {
                continue;
            }
            if self.left_mult_rank(&x, corner) < d {
                return Ok(Corner::ZeroDivisor(x));
            }
            let mu = self.min_poly(&x, e);
            if mu.degree() <= 1 {
                continue;
            }
            let factors = mu.factor();
            if factors.len() > 1 || factors[0].1 > 1 {
                let y = self.eval(&factors[0].0, &x, e);
                return Ok(Corner::ZeroDivisor(y));
            }
            if commutative && mu.degree() == d {
                return Ok(Corner::Primitive);
            }
        }
        Err(Error::DecompositionInconclusive(format!(
            "no zero divisor found in a corner of dimension {d}, and it could not be certified a division algebra"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Full matrix algebra M_n(k) on elementary matrices E_ij (index i*n+j).
    fn matrix_algebra(field: Field, n: usize) -> RawAlgebra {
        let dim = n * n;
        let mut one = vec![field.zero(); dim];
        for i in 0..n {
            one[i * n + i] = field.one();
        }
        RawAlgebra::from_products(
            field,
            dim,
            |a, b| {
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                let mut v = vec![field.zero(); dim];
                if j == k {
                    v[i * n + l] = field.one();
                }
                v
            },
            one,
        )
    }

    #[test]
    fn matrix_algebra_splits() {
        let m = matrix_algebra(Field::Rationals, 2);
        assert_eq!(m.radical().unwrap().dim(), 0);
        let idem = m.primitive_idempotents().unwrap();
        assert_eq!(idem.len(), 2);
        let (alg, _) = m.normalize().unwrap();
        assert_eq!(alg.k0_rank(), 1);
        assert!(alg.is_associative());
        assert!(alg.has_unit());
    }

    #[test]
    fn dual_numbers_are_local() {
        // k[x]/x^2 on basis (1, x)
        let q = Field::Rationals;
        let raw = RawAlgebra::from_products(
            q,
            2,
            |i, j| match (i, j) {
                (0, k) | (k, 0) => {
                    let mut v = vec![q.zero(); 2];
                    v[k] = q.one();
                    v
                }
                _ => vec![q.zero(); 2],
            },
            vec![q.one(), q.zero()],
        );
        assert_eq!(raw.radical().unwrap().dim(), 1);
        assert_eq!(raw.primitive_idempotents().unwrap().len(), 1);
    }

    #[test]
    fn gaussian_field_is_primitive_and_split_algebra_is_not() {
        let q = Field::Rationals;
        // Q[x]/(x^2+1): field; Q[x]/(x^2-1): two idempotents
        for (c, expect) in [(1, 1usize), (-1, 2)] {
            let raw = RawAlgebra::from_products(
                q,
                2,
                |i, j| {
                    let mut v = vec![q.zero(); 2];
                    match i + j {
                        0 => v[0] = q.one(),
                        1 => v[1] = q.one(),
                        _ => v[0] = q.from_i64(-c),
                    }
                    v
                },
                vec![q.one(), q.zero()],
            );
            assert_eq!(raw.primitive_idempotents().unwrap().len(), expect);
        }
    }

    #[test]
    fn small_characteristic_matrix_algebra() {
        // the plain trace form of M_2 over F_2 vanishes identically
        let m = matrix_algebra(Field::Prime(2), 2);
        assert_eq!(m.radical().unwrap().dim(), 0);
        assert_eq!(m.primitive_idempotents().unwrap().len(), 2);
        let m3 = matrix_algebra(Field::Prime(3), 2);
        assert_eq!(m3.primitive_idempotents().unwrap().len(), 2);
    }
}
