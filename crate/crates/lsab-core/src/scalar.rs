//! Exact rational scalars: the base field of every computation in this crate.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An arbitrary-precision rational number, always reduced, denominator > 0.
///
/// All arithmetic is exact; equality is a decision, never a tolerance.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer/denom`, reducing and normalizing the sign.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(numer, denom)))
    }

    /// `p/q` from machine integers; panics only on `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse; the one partial operation of the field.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    /// Strict parser for the wire format: `"p"` or `"p/q"` with `q > 0` and
    /// `gcd(|p|, q) = 1`. No spaces, no leading `+`.
    pub fn parse_strict(s: &str) -> Result<Self> {
        let (p, q) = split_rational(s)?;
        if let Some(q) = q {
            if !q.is_positive() {
                return Err(Error::RationalSyntax {
                    input: s.to_owned(),
                    reason: "denominator must be positive".to_owned(),
                });
            }
            if p.gcd(&q) != BigInt::one() {
                return Err(Error::RationalSyntax {
                    input: s.to_owned(),
                    reason: "rational not in lowest terms".to_owned(),
                });
            }
            Ok(Scalar(BigRational::new(p, q)))
        } else {
            Ok(Scalar(BigRational::from_integer(p)))
        }
    }

    /// Lenient parser: accepts any `p/q` with `q != 0` and normalizes.
    pub fn parse_lenient(s: &str) -> Result<Self> {
        let (p, q) = split_rational(s)?;
        match q {
            Some(q) if q.is_zero() => Err(Error::RationalSyntax {
                input: s.to_owned(),
                reason: "zero denominator".to_owned(),
            }),
            Some(q) => Ok(Scalar(BigRational::new(p, q))),
            None => Ok(Scalar(BigRational::from_integer(p))),
        }
    }
}

fn split_rational(s: &str) -> Result<(BigInt, Option<BigInt>)> {
    let syntax = |reason: &str| Error::RationalSyntax {
        input: s.to_owned(),
        reason: reason.to_owned(),
    };
    let parse_int = |part: &str| -> Result<BigInt> {
        if part.is_empty() || part.starts_with('+') || part.contains(char::is_whitespace) {
            return Err(syntax("malformed integer"));
        }
        BigInt::from_str(part).map_err(|_| syntax("malformed integer"))
    };
    match s.split_once('/') {
        None => Ok((parse_int(s)?, None)),
        Some((p, q)) => Ok((parse_int(p)?, Some(parse_int(q)?))),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse_strict(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Dot product of two coordinate vectors.
pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    assert_eq!(x.len(), y.len(), "dot: length mismatch");
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `x + y` componentwise.
pub fn vec_add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), y.len(), "vec_add: length mismatch");
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// `x - y` componentwise.
pub fn vec_sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), y.len(), "vec_sub: length mismatch");
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vec_neg(x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| -a).collect()
}

pub fn vec_scale(c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
    x.iter().map(|a| c * a).collect()
}

pub fn vec_is_zero(x: &[Scalar]) -> bool {
    x.iter().all(Scalar::is_zero)
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
