use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field every computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// The prime field with the given modulus.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Input(format!(
                "modulus {p} too large (at most 32 bits)"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Input("zero denominator".into()));
        }
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::Input(format!(
                "denominator {den} vanishes in characteristic {}",
                self.characteristic()
            )));
        }
        Ok(&self.from_i64(num) / &d)
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Fp {
                    value: r.to_u64().expect("reduced residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Parses `"3"`, `"-2/5"` into this field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim())
                    .map_err(|_| Error::Input(format!("bad scalar '{text}'")))?;
                let d = BigInt::from_str(d.trim())
                    .map_err(|_| Error::Input(format!("bad scalar '{text}'")))?;
                if d.is_zero() {
                    return Err(Error::Input(format!("zero denominator in '{text}'")));
                }
                (n, d)
            }
            None => (
                BigInt::from_str(t).map_err(|_| Error::Input(format!("bad scalar '{text}'")))?,
                BigInt::one(),
            ),
        };
        let den = self.from_bigint(&q.1);
        if den.is_zero() {
            return Err(Error::Input(format!(
                "denominator of '{text}' vanishes in characteristic {}",
                self.characteristic()
            )));
        }
        Ok(&self.from_bigint(&q.0) / &den)
    }

    /// Size of the field, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Input(format!("bad field '{s}'")))?;
            return Field::prime(p);
        }
        Err(Error::Input(format!(
            "unknown field '{s}' (expected Q or Fp:<p>)"
        )))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar: a reduced rational or a residue modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Scalar::Q(q.recip())
            }
            Scalar::Fp { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Fp {
                    value: pow_mod(*value, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            _ => None,
        }
    }

    /// Canonical text form, `"-3/4"` or the residue.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { value, .. } => value.to_string(),
        }
    }

    /// Rough size used to prefer small pivots over the rationals.
    pub(crate) fn height(&self) -> u64 {
        match self {
            Scalar::Q(q) => q.numer().bits() + q.denom().bits(),
            Scalar::Fp { .. } => 0,
        }
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!(
        "scalar domain mismatch: {} vs {}",
        a.field(),
        b.field()
    )
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (
                Scalar::Fp { value: a, modulus: p },
                Scalar::Fp { value: b, modulus: q },
            ) if p == q => Scalar::Fp {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (
                Scalar::Fp { value: a, modulus: p },
                Scalar::Fp { value: b, modulus: q },
            ) if p == q => Scalar::Fp {
                value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (
                Scalar::Fp { value: a, modulus: p },
                Scalar::Fp { value: b, modulus: q },
            ) if p == q => Scalar::Fp {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rationals;
        let x = q.from_ratio(6, -4).unwrap();
        assert_eq!(x.to_text(), "-3/2");
        let y = &x * &q.from_i64(2);
        assert_eq!(y, q.from_i64(-3));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!((&a * &a.inv()).to_text(), "1");
        assert_eq!((-&a).to_text(), "4");
        assert_eq!(f.from_i64(-1).to_text(), "6");
        assert_eq!(f.parse("1/2").unwrap().to_text(), "4");
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("Fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("Fp:6".parse::<Field>().is_err());
        assert!(Field::prime(2).unwrap().parse("1/2").is_err());
    }

    #[test]
    #[should_panic(expected = "mismatch")]
    fn mixing_domains_panics() {
        let _ = &Field::Rationals.one() + &Field::Prime(3).one();
    }
}
