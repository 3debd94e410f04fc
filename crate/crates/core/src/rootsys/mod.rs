//! Crystallographic root systems, Macdonald's Poincaré formulas, sincere
//! roots and the exponent tables of the affine alternating products.

mod macdonald;
mod roots;

pub use macdonald::{
    alt_cyclotomic, alt_subset_product, alt_via_sincere, exponent_csv, exponent_table, macdonald_cyclotomic,
    macdonald_series, sincere_heights, ExponentRow,
};
pub use roots::{AffineRoot, RootSystem};
