use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::series::{Matrix, PowerSeries, RationalFunction};

/// `Z(u) = det(I − A u)⁻¹` with its closed-walk counts `N_n = tr(Aⁿ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaFunction<R> {
    inverse: Poly<R>,
    series: PowerSeries<R>,
    traces: Vec<R>,
}

impl<R: Ring> ZetaFunction<R> {
    /// Builds `Z` for a square matrix, expanded through `u^order`.
    pub fn from_matrix(a: &Matrix<R>, order: usize) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Shape(format!("zeta needs a square matrix, got {}x{}", a.rows(), a.cols())));
        }
        let inverse = a.det_one_minus()?;
        let series = RationalFunction::new(Poly::one(), inverse.clone())?.expand(order);
        Ok(ZetaFunction { inverse, series, traces: a.power_traces(order) })
    }

    /// `Z(u)⁻¹ = det(I − A u)`.
    pub fn inverse_poly(&self) -> &Poly<R> {
        &self.inverse
    }

    pub fn rational(&self) -> RationalFunction<R> {
        RationalFunction::new(Poly::one(), self.inverse.clone()).expect("constant term 1")
    }

    pub fn series(&self) -> &PowerSeries<R> {
        &self.series
    }

    /// `N_1, …, N_L`.
    pub fn traces(&self) -> &[R] {
        &self.traces
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `log Z(u) = Σ N_n uⁿ/n`, checked in the equivalent form
    /// `Z'(u)/Z(u) = Σ N_n u^{n−1}` through the expansion order.
    pub fn log_identity_holds(&self) -> Result<bool> {
        if self.order() == 0 {
            return Ok(true);
        }
        let g = self.series.log_derivative()?;
        Ok((0..self.order()).all(|k| g.coeff(k) == &self.traces[k]))
    }
}

impl ZetaFunction<BigInt> {
    /// Numbers of primitive classes by length, recovered from
    /// `N_n = Σ_{d|n} d·P_d`. Errors unless every `P_d` is a nonnegative
    /// integer.
    pub fn primitive_counts(&self) -> Result<Vec<BigInt>> {
        primitive_counts(&self.traces)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "zeta_inverse_poly": self.inverse.to_json(),
            "N": self.traces.iter().map(Ring::to_json).collect::<Vec<_>>(),
            "primitive_counts": self.primitive_counts().ok().map(|p| p.iter().map(Ring::to_json).collect::<Vec<_>>()),
        })
    }
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Möbius inversion `P_n = (1/n) Σ_{d|n} μ(n/d) N_d` for `N_1, …, N_L`.
pub fn primitive_counts(traces: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(traces.len());
    for n in 1..=traces.len() {
        let mut acc = BigInt::from(0);
        for d in (1..=n).filter(|d| n % d == 0) {
            acc += &traces[d - 1] * mobius(n / d);
        }
        let p = acc.div_exact_i64(n as i64).ok_or_else(|| {
            Error::Identity(format!("closed-walk count at length {n} is not a sum of primitive orbits"))
        })?;
        if p.is_negative() {
            return Err(Error::Identity(format!("negative primitive count at length {n}")));
        }
        out.push(p);
    }
    Ok(out)
}

/// A straight-strip zeta function `Z_w(u) = det(I − A_w u)⁻¹` together with
/// the strip length `ℓ(w)`, so that `Z_w(u^{ℓ(w)})` is available in the
/// length variable.
#[derive(Clone, Debug, PartialEq)]
pub struct StripZeta<R> {
    pub length: usize,
    pub zeta: ZetaFunction<R>,
}

impl<R: Ring> StripZeta<R> {
    /// `Z_w(u^{ℓ(w)})`.
    pub fn in_length_variable(&self) -> RationalFunction<R> {
        self.zeta.rational().substitute_power(self.length)
    }
}

pub fn strip_zeta<R: Ring>(a_w: &Matrix<R>, length: usize, order: usize) -> Result<StripZeta<R>> {
    Ok(StripZeta { length, zeta: ZetaFunction::from_matrix(a_w, order)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn trivial_strip_zetas() {
        let z = strip_zeta(&Matrix::<BigInt>::zeros(3, 3), 2, 6).unwrap();
        assert_eq!(z.zeta.inverse_poly(), &Poly::one());

        let z = strip_zeta(&Matrix::<BigInt>::identity(3), 1, 6).unwrap();
        assert_eq!(z.zeta.inverse_poly(), &Poly::from_i64s(&[1, -1]).pow(3));

        let z = strip_zeta(&Matrix::<BigInt>::from_permutation(&[1, 2, 3, 0]), 3, 12).unwrap();
        assert_eq!(z.zeta.inverse_poly(), &Poly::from_i64s(&[1, 0, 0, 0, -1]));
        assert_eq!(z.zeta.primitive_counts().unwrap()[3], BigInt::from(1));
        assert!(z.zeta.log_identity_holds().unwrap());
        let expected = RationalFunction::new(Poly::one(), Poly::one_minus(BigInt::from(1), 12)).unwrap();
        assert!(z.in_length_variable().equals(&expected));
    }

    #[test]
    fn mobius_values() {
        let m: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(m, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn non_integral_orbits_are_rejected() {
        // N_2 = 1 with N_1 = 0 would mean half a primitive orbit
        assert!(primitive_counts(&[BigInt::from(0), BigInt::from(1)]).is_err());
        let z = ZetaFunction::from_matrix(&int(&[&[1, 1], &[1, 0]]), 10).unwrap();
        assert!(z.log_identity_holds().unwrap());
        assert!(z.primitive_counts().is_ok());
    }
}
