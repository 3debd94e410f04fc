use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

/// A power series truncated after `u^order`; all arithmetic is exact
/// degree-by-degree up to that order.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Pads or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    /// Drops every term above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn to_poly(&self) -> Poly<R> {
        Poly::new(self.coeffs.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::new((0..=order).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(), order)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::new((0..=order).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect(), order)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Self::new(out, order)
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].inverse().ok_or(Error::NonUnitConstantTerm)?;
        let order = self.order();
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        out.push(c0_inv.clone());
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc.add_assign(&self.coeffs[k].mul(&out[n - k]));
                }
            }
            out.push(acc.neg().mul(&c0_inv));
        }
        Ok(Self::new(out, order))
    }

    /// Logarithmic derivative `f'/f`, of order one less than `self`.
    pub fn log_derivative(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let deriv = Self::new((1..=order).map(|k| self.coeffs[k].mul(&R::from_i64(k as i64))).collect(), order - 1);
        Ok(deriv.mul(&self.truncate(order - 1).inverse()?))
    }

    /// Recovers `f` with `f(0) = 1` from its logarithmic derivative `g = f'/f`
    /// using `n·f_n = Σ_{j<n} g_j f_{n-1-j}`. Division by `n` must be exact.
    pub fn exp_of_log_derivative(g: &Self) -> Result<Self> {
        let order = g.order() + 1;
        let mut f: Vec<R> = vec![R::one()];
        for n in 1..=order {
            let mut acc = R::zero();
            for j in 0..n {
                if !g.coeffs[j].is_zero() {
                    acc.add_assign(&g.coeffs[j].mul(&f[n - 1 - j]));
                }
            }
            f.push(acc.div_exact_i64(n as i64).ok_or(Error::InexactDivision { divisor: n as i64 })?);
        }
        Ok(Self::new(f, order))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(Ring::to_json).collect::<Vec<_>>(),
            "order": self.order(),
        })
    }
}

impl<R: Ring> fmt::Display for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(u^{})", self.to_poly(), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn zs(c: &[i64], order: usize) -> PowerSeries<BigInt> {
        PowerSeries::new(c.iter().map(|&x| BigInt::from(x)).collect(), order)
    }

    #[test]
    fn geometric_inverse() {
        let f = zs(&[1, -1], 6);
        assert_eq!(f.inverse().unwrap(), zs(&[1, 1, 1, 1, 1, 1, 1], 6));
        assert_eq!(f.mul(&f.inverse().unwrap()), PowerSeries::one(6));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        assert!(zs(&[2, 1], 3).inverse().is_err());
        assert!(zs(&[0, 1], 3).inverse().is_err());
    }

    #[test]
    fn log_derivative_round_trip() {
        // (1 - u^3)^2
        let f = zs(&[1, 0, 0, -2, 0, 0, 1], 9);
        let g = f.log_derivative().unwrap();
        assert_eq!(PowerSeries::exp_of_log_derivative(&g).unwrap(), f);
    }
}
