use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field scalar the generic linear algebra is written against.
///
/// Equality is exact, so only exact types make sense here; the concrete
/// instantiation used throughout the crate is [`crate::Q`].
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embeds a small signed integer.
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc + one.clone();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Exact rational scalar.
pub type Q = BigRational;

/// `p/q` as a rational.
pub fn q(p: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(p), BigInt::from(den))
}

/// Integer as a rational.
pub fn qi(p: i64) -> Q {
    BigRational::from_integer(BigInt::from(p))
}

/// Least common multiple of the denominators of an iterator of rationals.
/// Returns 1 for an empty iterator.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Q>>(values: I) -> BigInt {
    let mut acc = BigInt::one();
    for v in values {
        acc = acc.lcm(v.denom());
    }
    acc
}

/// True if every value is an integer.
pub fn all_integral<'a, I: IntoIterator<Item = &'a Q>>(values: I) -> bool {
    values.into_iter().all(|v| v.is_integer())
}

/// Exact conversion to `BigInt`, requiring an integral value.
pub fn to_bigint(v: &Q) -> Option<BigInt> {
    if v.is_integer() {
        Some(v.to_integer())
    } else {
        None
    }
}

/// Parses a rational literal `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().ok()?;
            let d: BigInt = den.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Canonical display of a rational: `p` when integral, else `p/q`.
pub fn format_rational(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Sign-normalized positive lcm of two integers.
pub fn lcm_positive(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b).abs()
}
