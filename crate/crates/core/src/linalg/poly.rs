//! Univariate polynomials over the base field, with factorization
//! (Berlekamp over F_p, Zassenhaus over Q).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    /// Low degree first, no trailing zeros.
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly::new(field, vec![])
    }

    pub fn constant(c: Scalar) -> Poly {
        let f = c.field();
        Poly::new(f, vec![c])
    }

    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn from_i64(field: Field, c: &[i64]) -> Poly {
        Poly::new(field, c.iter().map(|&v| field.from_i64(v)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv();
        self.scale(&inv)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        if r.len() < dl {
            return (Poly::zero(self.field), self.clone());
        }
        let inv = d.lead().inv();
        let mut q = vec![self.field.zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dl - 1] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, g monic.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::constant(f.one()), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::constant(self.field.one()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Evaluates at an element of any ring given by closures.
    pub fn eval_with<T: Clone>(
        &self,
        one: T,
        x: &T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
        scale: impl Fn(&T, &Scalar) -> T,
    ) -> T {
        let mut acc = scale(&one, &self.field.zero());
        for c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, x), &scale(&one, c));
        }
        acc
    }

    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub fn factor(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        for (g, m) in squarefree(&self.monic()) {
            let parts = match self.field {
                Field::Prime(_) => berlekamp(&g),
                Field::Rationals => zassenhaus(&g),
            };
            out.extend(parts.into_iter().map(|h| (h, m)));
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.sort_key().cmp(&b.0.sort_key()))
        });
        out
    }

    fn sort_key(&self) -> Vec<String> {
        self.coeffs.iter().map(Scalar::to_text).collect()
    }
}

/// Square-free decomposition of a monic polynomial (any characteristic).
fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        let p = f.field.characteristic() as usize;
        for (g, m) in squarefree(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while w.degree() > 0 {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree() > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if c.degree() > 0 {
        let p = f.field.characteristic() as usize;
        for (g, m) in squarefree(&pth_root(&c.monic())) {
            out.push((g, m * p));
        }
    }
    out
}

/// For `f(x) = g(x^p)` over F_p, returns g (coefficients are their own p-th roots).
fn pth_root(f: &Poly) -> Poly {
    let p = f.field.characteristic() as usize;
    assert!(p > 0, "p-th root in characteristic zero");
    Poly::new(
        f.field,
        f.coeffs.iter().step_by(p).cloned().collect(),
    )
}

/// Factors a monic square-free polynomial over F_p.
fn berlekamp(f: &Poly) -> Vec<Poly> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    let field = f.field;
    let p = field.characteristic();
    // row i: x^(p i) mod f
    let xp = Poly::x(field).pow_mod(p, f);
    let mut q = Matrix::zeros(field, n, n);
    let mut cur = Poly::constant(field.one());
    for i in 0..n {
        for j in 0..n {
            q.set(i, j, cur.coeff(j));
        }
        cur = cur.mul(&xp).rem(f);
    }
    let fixed = q.sub(&Matrix::identity(field, n)).left_kernel();
    let r = fixed.rows();
    if r <= 1 {
        return vec![f.clone()];
    }
    let basis: Vec<Poly> = (0..r)
        .map(|i| Poly::new(field, fixed.row_vec(i)))
        .filter(|g| g.degree() > 0)
        .collect();
    let mut factors = vec![f.clone()];
    if p <= 1000 {
        'outer: for g in &basis {
            for s in 0..p {
                let gs = g.sub(&Poly::constant(field.from_i64(s as i64)));
                let mut next = Vec::new();
                for h in &factors {
                    if h.degree() <= 1 {
                        next.push(h.clone());
                        continue;
                    }
                    let d = h.gcd(&gs);
                    if d.degree() > 0 && d.degree() < h.degree() {
                        next.push(h.div_exact(&d).monic());
                        next.push(d);
                    } else {
                        next.push(h.clone());
                    }
                }
                factors = next;
                if factors.len() == r {
                    break 'outer;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ p);
        while factors.len() < r {
            let mut g = Poly::zero(field);
            for b in &basis {
                g = g.add(&b.scale(&field.from_i64(rng.gen_range(0..p as i64))));
            }
            let mut next = Vec::new();
            for h in &factors {
                if h.degree() <= 1 {
                    next.push(h.clone());
                    continue;
                }
                let w = g
                    .pow_mod((p - 1) / 2, h)
                    .sub(&Poly::constant(field.one()));
                let d = h.gcd(&w);
                if d.degree() > 0 && d.degree() < h.degree() {
                    next.push(h.div_exact(&d).monic());
                    next.push(d);
                } else {
                    next.push(h.clone());
                }
            }
            factors = next;
        }
    }
    factors
}

type IntPoly = Vec<BigInt>;

fn int_trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    int_trim(out)
}

fn sym_mod(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn int_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    int_trim(a.iter().map(|c| sym_mod(c, m)).collect())
}

fn to_fp(a: &IntPoly, field: Field) -> Poly {
    Poly::new(field, a.iter().map(|c| field.from_bigint(c)).collect())
}

fn from_fp(a: &Poly) -> IntPoly {
    a.coeffs
        .iter()
        .map(|c| match c {
            Scalar::Fp { value, .. } => BigInt::from(*value),
            Scalar::Q(_) => unreachable!("rational coefficient in a modular polynomial"),
        })
        .collect()
}

fn content(a: &IntPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &IntPoly) -> IntPoly {
    let c = content(a);
    if c.is_zero() {
        return a.clone();
    }
    let sign = if a.last().is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    a.iter().map(|x| x / &c * &sign).collect()
}

/// Clears denominators of a rational polynomial, returning a primitive integer polynomial.
fn integer_part(f: &Poly) -> IntPoly {
    let den = f.coeffs.iter().fold(BigInt::one(), |l, c| {
        l.lcm(c.as_rational().expect("rational polynomial").denom())
    });
    let v: IntPoly = f
        .coeffs
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&den / q.denom())
        })
        .collect();
    primitive(&v)
}

fn to_rational_poly(a: &IntPoly) -> Poly {
    let q = Field::Rationals;
    Poly::new(q, a.iter().map(|c| q.from_bigint(c)).collect())
}

/// Lifts `t ≡ g h (mod p)` (g monic, coprime factors) to modulus `p^k`.
fn hensel_pair(t: &IntPoly, g: &Poly, h: &Poly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let field = g.field;
    let (_, s, tt) = g.ext_gcd(h);
    let bp = BigInt::from(p);
    let mut gi = from_fp(g);
    let mut hi = from_fp(h);
    // keep h's leading coefficient equal to t's exactly
    let lt = t.last().unwrap().clone();
    *hi.last_mut().unwrap() = lt;
    let mut m = bp.clone();
    for _ in 1..k {
        let prod = int_mul(&gi, &hi);
        let n = t.len().max(prod.len());
        let e: IntPoly = (0..n)
            .map(|i| {
                let a = t.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b) / &m
            })
            .collect();
        let e = to_fp(&e, field);
        let (qq, tau) = tt.mul(&e).divrem(g);
        let sigma = s.mul(&e).add(&qq.mul(h));
        let step = |base: &mut IntPoly, corr: &Poly| {
            let c = from_fp(corr);
            if base.len() < c.len() {
                base.resize(c.len(), BigInt::zero());
            }
            for (b, x) in base.iter_mut().zip(c) {
                *b += &m * sym_mod(&x, &bp);
            }
        };
        step(&mut gi, &tau);
        step(&mut hi, &sigma);
        m *= &bp;
    }
    (int_mod(&gi, &m), int_mod(&hi, &m))
}

/// Factors a monic square-free polynomial over Q.
fn zassenhaus(f: &Poly) -> Vec<Poly> {
    if f.degree() <= 1 {
        return vec![f.clone()];
    }
    let big = integer_part(f);
    let n = big.len() - 1;
    let lc = big[n].clone();
    // pick a prime keeping degree and square-freeness
    let mut p = 3u64;
    let modular = loop {
        if super::scalar::is_prime(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = Field::Prime(p);
            let fbar = to_fp(&big, fp);
            if fbar.gcd(&fbar.derivative()).degree() == 0 {
                break fbar;
            }
        }
        p += 2;
    };
    let local = berlekamp(&modular.monic());
    if local.len() == 1 {
        return vec![f.monic()];
    }
    // coefficient bound for factors of lc*f
    let maxc = big.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2u32).pow(n as u32) * BigInt::from(n + 1) * maxc * lc.abs() * 2;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = bp.clone();
    while pk <= bound {
        pk *= &bp;
        k += 1;
    }
    let mut lifted = Vec::new();
    let mut rest_t = big.clone();
    let field = Field::Prime(p);
    for i in 0..local.len() - 1 {
        let h = local[i + 1..]
            .iter()
            .fold(Poly::constant(field.from_bigint(&lc)), |acc, g| acc.mul(g));
        let (gi, hi) = hensel_pair(&rest_t, &local[i], &h, p, k);
        lifted.push(gi);
        rest_t = hi;
    }
    let last_inv = {
        // make the final factor monic modulo p^k
        let l = rest_t.last().unwrap().clone();
        let inv = l.modinv(&pk).expect("leading coefficient invertible");
        int_mod(&rest_t.iter().map(|c| c * &inv).collect(), &pk)
    };
    lifted.push(last_inv);

    let mut remaining: Vec<IntPoly> = lifted;
    let mut target = big;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        for subset in subsets(remaining.len(), size) {
            let lct = target.last().unwrap().clone();
            let mut g = vec![lct.clone()];
            for &i in &subset {
                g = int_mod(&int_mul(&g, &remaining[i]), &pk);
            }
            let g = primitive(&g);
            let (q, r) = to_rational_poly(&target).divrem(&to_rational_poly(&g));
            if r.is_zero() {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(to_rational_poly(&g).monic());
                target = integer_part(&q);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v)
                    .collect();
            }
            None => size += 1,
        }
    }
    if target.len() > 1 {
        found.push(to_rational_poly(&target).monic());
    }
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn product(fs: &[(Poly, usize)]) -> Poly {
        fs.iter().fold(Poly::from_i64(Q, &[1]), |acc, (g, m)| {
            (0..*m).fold(acc, |a, _| a.mul(g))
        })
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_i64(Q, &[-1, 0, 1]);
        let b = Poly::from_i64(Q, &[1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q, Poly::from_i64(Q, &[-1, 1]));
        assert!(r.is_zero());
        let (g, s, t) = a.ext_gcd(&Poly::from_i64(Q, &[2, 1]));
        assert_eq!(g, Poly::from_i64(Q, &[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&Poly::from_i64(Q, &[2, 1]))), g);
    }

    #[test]
    fn rational_factorization() {
        // (x^2+1)(x-2)^2(x^2-2)
        let f = Poly::from_i64(Q, &[1, 0, 1])
            .mul(&Poly::from_i64(Q, &[-2, 1]))
            .mul(&Poly::from_i64(Q, &[-2, 1]))
            .mul(&Poly::from_i64(Q, &[-2, 0, 1]));
        let fs = f.factor();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0], (Poly::from_i64(Q, &[-2, 1]), 2));
        assert_eq!(product(&fs), f.monic());
        // x^4+1 is irreducible over Q but splits mod every prime
        let g = Poly::from_i64(Q, &[1, 0, 0, 0, 1]);
        assert_eq!(g.factor(), vec![(g.clone(), 1)]);
    }

    #[test]
    fn rational_roots_with_denominators() {
        let f = Poly::from_i64(Q, &[-1, 2]).mul(&Poly::from_i64(Q, &[3, 5]));
        let fs = f.factor();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, m)| g.degree() == 1 && *m == 1));
    }

    #[test]
    fn prime_field_factorization() {
        let f2 = Field::Prime(2);
        // x^2+x+1 irreducible, x^2+1 = (x+1)^2 over F_2
        let f = Poly::from_i64(f2, &[1, 1, 1]).mul(&Poly::from_i64(f2, &[1, 0, 1]));
        let fs = f.factor();
        assert_eq!(fs, vec![
            (Poly::from_i64(f2, &[1, 1]), 2),
            (Poly::from_i64(f2, &[1, 1, 1]), 1)
        ]);
        // x^p - x splits into linear factors
        let f7 = Field::Prime(7);
        let mut c = vec![0i64; 8];
        c[1] = -1;
        c[7] = 1;
        let fs = Poly::from_i64(f7, &c).factor();
        assert_eq!(fs.len(), 7);
        let big = Field::Prime(1_000_003);
        let f = Poly::from_i64(big, &[-1, 0, 1]).mul(&Poly::from_i64(big, &[-5, 1]));
        assert_eq!(f.factor().len(), 3);
    }
}
