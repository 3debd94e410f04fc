use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{to_integer_poly, to_rational_poly, Poly};
use crate::ring::Ring;
use crate::series::PowerSeries;

/// A quotient `num / den` of polynomials whose denominator has constant term 1.
///
/// Keeping `den(0) = 1` means every value has a power-series expansion over
/// the coefficient ring itself and two values are equal iff
/// `num₁·den₂ = num₂·den₁`, so no gcd computation is ever required for
/// comparisons.
#[derive(Clone, Debug)]
pub struct RationalFunction<R> {
    num: Poly<R>,
    den: Poly<R>,
}

impl<R: Ring> RationalFunction<R> {
    /// Normalizes so that the denominator's constant term is 1; fails when it
    /// is not a unit.
    pub fn new(num: Poly<R>, den: Poly<R>) -> Result<Self> {
        let c0 = den.coeff(0);
        if c0.is_one() {
            return Ok(RationalFunction { num, den });
        }
        let inv = c0.inverse().ok_or(Error::NonUnitConstantTerm)?;
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly<R>) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly<R> {
        &self.num
    }

    pub fn den(&self) -> &Poly<R> {
        &self.den
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction { num: self.num.mul(&rhs.num), den: self.den.mul(&rhs.den) }
    }

    /// Multiplicative inverse; the numerator must have a unit constant term.
    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RationalFunction { num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), den: self.den.mul(&rhs.den) }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    /// Integer power; negative exponents need an invertible numerator.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Exact equality by cross-multiplication.
    pub fn equals(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    /// Substitutes `u ↦ u^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        RationalFunction { num: self.num.substitute_power(k), den: self.den.substitute_power(k) }
    }

    /// Substitutes `u ↦ c·u`.
    pub fn scale_var(&self, c: &R) -> Self {
        RationalFunction { num: self.num.scale_var(c), den: self.den.scale_var(c) }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Result<RationalFunction<S>> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f))
    }

    /// Taylor expansion through `u^order`.
    pub fn expand(&self, order: usize) -> PowerSeries<R> {
        let den = PowerSeries::from_poly(&self.den, order).inverse().expect("denominator constant term is 1");
        PowerSeries::from_poly(&self.num, order).mul(&den)
    }

    /// The polynomial `num / den` when the division is exact.
    pub fn as_polynomial(&self) -> Option<Poly<R>> {
        if self.den.degree() == Some(0) {
            return Some(self.num.clone());
        }
        let nd = self.num.degree()?;
        let dd = self.den.degree().unwrap_or(0);
        if nd < dd {
            return None;
        }
        let q = self.expand(nd - dd).to_poly();
        (q.mul(&self.den) == self.num).then_some(q)
    }

    pub fn to_json(&self, order: usize) -> Value {
        json!({
            "num": self.num.to_json(),
            "den": self.den.to_json(),
            "coeffs": self.expand(order).coeffs().iter().map(Ring::to_json).collect::<Vec<_>>(),
            "order": order,
        })
    }
}

impl RationalFunction<BigInt> {
    /// Cancels the common factor of numerator and denominator. Integer
    /// series in lowest terms with `den(0) = 1` have integer numerator and
    /// denominator, so the result stays over the integers.
    pub fn reduced(&self) -> Self {
        let n = to_rational_poly(&self.num);
        let d = to_rational_poly(&self.den);
        let g = n.gcd(&d);
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let (n, d) = match (n.div_exact(&g), d.div_exact(&g)) {
            (Some(n), Some(d)) => (n, d),
            _ => return self.clone(),
        };
        let c0 = d.coeff(0);
        let (n, d) = (n.scale(&c0.inverse().expect("den(0) nonzero")), d.scale(&c0.inverse().expect("den(0) nonzero")));
        match (to_integer_poly(&n), to_integer_poly(&d)) {
            (Some(num), Some(den)) => RationalFunction { num, den },
            _ => self.clone(),
        }
    }
}

impl<R: Ring> fmt::Display for RationalFunction<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> Poly<BigInt> {
        Poly::from_i64s(c)
    }

    #[test]
    fn cross_multiplication_equality() {
        let a = RationalFunction::new(zp(&[1, 1]), zp(&[1, -1])).unwrap();
        let b = RationalFunction::new(zp(&[1, 2, 1]), zp(&[1, 0, -1])).unwrap();
        assert!(a.equals(&b));
        assert!(!a.equals(&RationalFunction::one()));
    }

    #[test]
    fn expansion_and_polynomiality() {
        let a = RationalFunction::new(zp(&[1, 1]), zp(&[1, -1])).unwrap();
        let s = a.expand(4);
        assert_eq!(s.coeffs(), &[1, 2, 2, 2, 2].map(BigInt::from));
        assert!(a.as_polynomial().is_none());
        let b = RationalFunction::new(zp(&[1, 0, 0, -1]), zp(&[1, -1])).unwrap();
        assert_eq!(b.as_polynomial(), Some(zp(&[1, 1, 1])));
    }

    #[test]
    fn reduction_over_integers() {
        let b = RationalFunction::new(zp(&[1, 2, 1]), zp(&[1, 0, -1])).unwrap();
        let r = b.reduced();
        assert_eq!(r.num(), &zp(&[1, 1]));
        assert_eq!(r.den(), &zp(&[1, -1]));
    }

    #[test]
    fn normalizes_unit_constant_term() {
        let a = RationalFunction::new(zp(&[2]), zp(&[-1, 1])).unwrap();
        assert_eq!(a.den(), &zp(&[1, -1]));
        assert_eq!(a.num(), &zp(&[-2]));
        assert!(RationalFunction::new(zp(&[1]), zp(&[2, 1])).is_err());
    }
}
