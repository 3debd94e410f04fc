//! Determinants of matrix-valued series and polynomials.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::series::{Matrix, PowerSeries};

/// A power series with square-matrix coefficients, truncated after `u^order`.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixSeries<R> {
    dim: usize,
    coeffs: Vec<Matrix<R>>,
}

impl<R: Ring> MatrixSeries<R> {
    pub fn new(dim: usize, mut coeffs: Vec<Matrix<R>>, order: usize) -> Self {
        assert!(coeffs.iter().all(|m| m.rows() == dim && m.cols() == dim), "coefficient shape mismatch");
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Matrix::zeros(dim, dim));
        MatrixSeries { dim, coeffs }
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        Self::new(dim, vec![Matrix::identity(dim)], order)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Matrix<R>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Matrix<R> {
        &self.coeffs[k]
    }

    pub fn add_term(&mut self, degree: usize, m: &Matrix<R>) {
        if degree <= self.order() {
            self.coeffs[degree].add_assign(m);
        }
    }

    /// Truncated product; the order is the smaller of the two.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let order = self.order().min(rhs.order());
        let mut out = vec![Matrix::zeros(self.dim, self.dim); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j].add_assign(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        MatrixSeries { dim: self.dim, coeffs: out }
    }

    /// Inverse of a series with identity constant term:
    /// `X_n = -Σ_{k=1}^{n} M_k X_{n-k}`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_identity() {
            return Err(Error::NonIdentityConstantTerm);
        }
        let mut inv = vec![Matrix::identity(self.dim)];
        for n in 1..=self.order() {
            let mut acc = Matrix::zeros(self.dim, self.dim);
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc.add_assign(&self.coeffs[k].mul(&inv[n - k]));
                }
            }
            inv.push(acc.neg());
        }
        Ok(MatrixSeries { dim: self.dim, coeffs: inv })
    }

    /// Entrywise polynomial matrix `Σ M_k u^k` (exact when the series is a
    /// polynomial of degree at most the order).
    pub fn to_poly_matrix(&self) -> Matrix<Poly<R>> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = Poly::new(self.coeffs.iter().map(|c| c[(i, j)].clone()).collect());
            }
        }
        m
    }
}

/// Determinant of a matrix series with identity constant term, to the same
/// order, through the logarithmic derivative of the determinant:
/// `(log det M)' = tr(M⁻¹ M')`, followed by exact exponentiation.
///
/// Requires characteristic zero: the exponentiation divides by `1, 2, …, L`.
pub fn det_series<R: Ring>(m: &MatrixSeries<R>) -> Result<PowerSeries<R>> {
    let order = m.order();
    let inv = m.inverse()?;
    if order == 0 {
        return Ok(PowerSeries::one(0));
    }
    // derivative coefficients D_j = (j+1) M_{j+1}
    let deriv: Vec<Matrix<R>> = (0..order).map(|j| m.coeffs[j + 1].scale(&R::from_i64(j as i64 + 1))).collect();
    let mut g = Vec::with_capacity(order);
    for j in 0..order {
        let mut acc = R::zero();
        for a in 0..=j {
            if deriv[j - a].is_zero() {
                continue;
            }
            acc.add_assign(&inv.coeffs[a].trace_of_product(&deriv[j - a]));
        }
        g.push(acc);
    }
    PowerSeries::exp_of_log_derivative(&PowerSeries::new(g, order - 1))
}

/// Exact determinant of a polynomial matrix by fraction-free elimination
/// after splitting into diagonal blocks.
pub fn det_poly<R: Ring>(m: &Matrix<Poly<R>>) -> Poly<R> {
    m.det()
}
