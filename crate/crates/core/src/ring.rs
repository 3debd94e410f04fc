//! Exact coefficient rings.
//!
//! Everything in this crate is computed without floating point. The [`Ring`]
//! trait is the common surface for the scalar types that appear as
//! coefficients: integers, rationals, polynomials in the Hecke parameter `q`,
//! and polynomials over any of those.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::poly::Poly;

/// A commutative ring of characteristic zero with exact (partial) division.
///
/// Methods take references so big-number implementations can avoid clones.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// JSON form used by every report and serialized series.
    fn to_json(&self) -> Value;

    /// True when the printed form is a single token (no internal `+`/`-`).
    fn is_atomic(&self) -> bool {
        true
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse when `self` is a unit.
    fn inverse(&self) -> Option<Self> {
        Self::one().div_exact(self)
    }

    fn div_exact_i64(&self, n: i64) -> Option<Self> {
        self.div_exact(&Self::from_i64(n))
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn to_json(&self) -> Value {
        bigint_json(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
    fn to_json(&self) -> Value {
        if self.is_integer() {
            bigint_json(self.numer())
        } else {
            json!([bigint_json(self.numer()), bigint_json(self.denom())])
        }
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

/// Integers that fit in an `i64` are emitted as JSON numbers, larger ones as
/// decimal strings so no precision is lost.
pub fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

/// Parses the JSON integer forms produced by [`bigint_json`].
pub fn bigint_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

/// Parses a rational from an integer, an `[num, den]` pair or an `"a/b"` string.
pub fn rational_from_json(v: &Value) -> Option<BigRational> {
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let n = bigint_from_json(&pair[0])?;
            let d = bigint_from_json(&pair[1])?;
            (!Zero::is_zero(&d)).then(|| BigRational::new(n, d))
        }
        Value::String(s) if s.contains('/') => parse_rational(s),
        _ => bigint_from_json(v).map(BigRational::from_integer),
    }
}

/// Parses `"7"`, `"-3/4"` and similar.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!Zero::is_zero(&d)).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Polynomials in the Hecke parameter `q` with integer coefficients.
///
/// This is a thin wrapper over [`Poly<BigInt>`] whose only job is to print
/// with the variable `q`, so that series in `u` with `q`-coefficients read
/// unambiguously.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly(pub Poly<BigInt>);

impl QPoly {
    /// The formal parameter `q`.
    pub fn q() -> Self {
        QPoly(Poly::monomial(BigInt::from(1), 1))
    }

    pub fn constant(c: i64) -> Self {
        QPoly(Poly::constant(BigInt::from(c)))
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        QPoly(Poly::new(coeffs))
    }

    /// Specializes `q` to a rational value.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = <BigRational as Ring>::zero();
        for c in self.0.coeffs().iter().rev() {
            acc = &acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn as_poly(&self) -> &Poly<BigInt> {
        &self.0
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_var("q"))
    }
}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly(Poly::zero())
    }
    fn one() -> Self {
        QPoly(Poly::one())
    }
    fn from_i64(n: i64) -> Self {
        QPoly::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        QPoly(self.0.add(&rhs.0))
    }
    fn sub(&self, rhs: &Self) -> Self {
        QPoly(self.0.sub(&rhs.0))
    }
    fn mul(&self, rhs: &Self) -> Self {
        QPoly(self.0.mul(&rhs.0))
    }
    fn neg(&self) -> Self {
        QPoly(self.0.neg())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.0.div_exact(&rhs.0).map(QPoly)
    }
    fn to_json(&self) -> Value {
        self.0.to_json()
    }
    fn is_atomic(&self) -> bool {
        self.0.is_atomic()
    }
}

/// Sign of a big integer as `-1`, `0` or `1`.
pub fn signum(n: &BigInt) -> i32 {
    if n.is_negative() {
        -1
    } else if Zero::is_zero(n) {
        0
    } else {
        1
    }
}
