use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::poly::Poly;
use crate::ring::Ring;
use crate::series::RationalFunction;

/// A product `Π (1 - u^a)^{e_a}` with integer exponents.
///
/// The exponent map is a faithful coordinate system: two such products are
/// equal as rational functions iff their exponent maps agree (Möbius
/// inversion over the cyclotomic factorization). Poincaré series of finite
/// Weyl groups and all the alternating products live in this group.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CyclotomicProduct {
    exponents: BTreeMap<u32, i64>,
}

impl CyclotomicProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single factor `(1 - u^degree)^exponent`.
    pub fn factor(degree: u32, exponent: i64) -> Self {
        let mut p = Self::one();
        p.push(degree, exponent);
        p
    }

    /// `Π (1 - u^{d})` over the listed degrees.
    pub fn from_degrees(degrees: &[u32]) -> Self {
        let mut p = Self::one();
        for &d in degrees {
            p.push(d, 1);
        }
        p
    }

    pub fn push(&mut self, degree: u32, exponent: i64) {
        assert!(degree > 0, "cyclotomic factor degree must be positive");
        let e = self.exponents.entry(degree).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.exponents.remove(&degree);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<u32, i64> {
        &self.exponents
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &e) in &rhs.exponents {
            out.push(d, e);
        }
        out
    }

    pub fn inv(&self) -> Self {
        CyclotomicProduct { exponents: self.exponents.iter().map(|(&d, &e)| (d, -e)).collect() }
    }

    pub fn powi(&self, k: i64) -> Self {
        let mut out = Self::one();
        for (&d, &e) in &self.exponents {
            out.push(d, e * k);
        }
        out
    }

    /// True for a product `Π (1 - u^{d_i})` with no denominators.
    pub fn is_polynomial_form(&self) -> bool {
        self.exponents.values().all(|&e| e > 0)
    }

    /// The degrees `d_i` with multiplicity, ascending; `None` unless
    /// [`is_polynomial_form`](Self::is_polynomial_form).
    pub fn degrees(&self) -> Option<Vec<u32>> {
        if !self.is_polynomial_form() {
            return None;
        }
        Some(self.exponents.iter().flat_map(|(&d, &e)| std::iter::repeat_n(d, e as usize)).collect())
    }

    pub fn to_rational_function<R: Ring>(&self) -> RationalFunction<R> {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (&d, &e) in &self.exponents {
            let f = Poly::one_minus(R::one(), d as usize).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = num.mul(&f);
            } else {
                den = den.mul(&f);
            }
        }
        RationalFunction::new(num, den).expect("cyclotomic denominators have constant term 1")
    }

    /// Recognizes an integer rational function as a cyclotomic product by
    /// peeling off the lowest-degree factor repeatedly. Returns `None` when
    /// the function is not of this form.
    pub fn recognize(f: &RationalFunction<BigInt>) -> Option<Self> {
        let deg_bound = f.num().degree().unwrap_or(0) + f.den().degree().unwrap_or(0);
        let mut rest = f.clone();
        let mut out = Self::one();
        // every factor raises the lowest nonconstant degree, so deg_bound
        // rounds suffice
        for _ in 0..=deg_bound + 1 {
            let s = rest.expand(deg_bound.max(1));
            if s.coeff(0) != &BigInt::from(1) {
                return None;
            }
            let Some(d) = (1..=s.order()).find(|&k| !Ring::is_zero(s.coeff(k))) else {
                let candidate = out.clone();
                return candidate.to_rational_function::<BigInt>().equals(f).then_some(candidate);
            };
            let e = -s.coeff(d).to_i64()?;
            out.push(d as u32, e);
            let peel = Self::factor(d as u32, e).to_rational_function::<BigInt>();
            rest = rest.div(&peel).ok()?;
        }
        None
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(factors: Vec<(u32, i64)>) -> String {
            if factors.is_empty() {
                return "1".to_string();
            }
            factors
                .into_iter()
                .rev()
                .map(|(d, e)| {
                    let base = if d == 1 { "(1-u)".to_string() } else { format!("(1-u^{d})") };
                    if e == 1 {
                        base
                    } else {
                        format!("{base}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("")
        }
        let num: Vec<_> = self.exponents.iter().filter(|(_, &e)| e > 0).map(|(&d, &e)| (d, e)).collect();
        let den: Vec<_> = self.exponents.iter().filter(|(_, &e)| e < 0).map(|(&d, &e)| (d, -e)).collect();
        if den.is_empty() {
            f.write_str(&side(num))
        } else {
            write!(f, "{}/{}", side(num), side(den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(CyclotomicProduct::factor(3, 2).to_string(), "(1-u^3)^2");
        let mut p = CyclotomicProduct::factor(5, 1);
        p.push(2, -1);
        assert_eq!(p.to_string(), "(1-u^5)/(1-u^2)");
        assert_eq!(CyclotomicProduct::from_degrees(&[3, 4]).to_string(), "(1-u^4)(1-u^3)");
    }

    #[test]
    fn recognizes_products() {
        let p = CyclotomicProduct::from_degrees(&[3, 5, 5]).mul(&CyclotomicProduct::factor(2, -1));
        let rf = p.to_rational_function::<BigInt>();
        assert_eq!(CyclotomicProduct::recognize(&rf), Some(p));
        // 1 + 2u is not a cyclotomic product
        let bad = RationalFunction::from_poly(Poly::from_i64s(&[1, 2]));
        assert_eq!(CyclotomicProduct::recognize(&bad), None);
    }

    #[test]
    fn degrees_only_for_polynomial_form() {
        assert_eq!(CyclotomicProduct::from_degrees(&[5, 3]).degrees(), Some(vec![3, 5]));
        assert_eq!(CyclotomicProduct::factor(2, -1).degrees(), None);
    }
}
