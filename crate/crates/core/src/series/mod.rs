//! Exact series arithmetic and Poincaré series.

mod cyclotomic;
mod det;
mod matrix;
mod poincare;
mod power_series;
mod rational;

pub use cyclotomic::CyclotomicProduct;
pub use det::{det_poly, det_series, MatrixSeries};
pub use matrix::{to_poly_matrix, Matrix};
pub use poincare::{
    alt_product_rational, finite_alternating_sum, finite_poincare, layer_series, parabolic_poincare, poincare_affine,
    poincare_parabolic, proper_parabolics, subsets,
};
pub use power_series::PowerSeries;
pub use rational::RationalFunction;
