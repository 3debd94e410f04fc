//! Exact Coxeter–Hecke combinatorics and zeta functions of affine Weyl groups.

pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod poly;
pub mod ring;
pub mod rootsys;
pub mod series;
pub mod strips;
pub mod zeta;

pub use error::{Error, Result};
pub use poly::Poly;
pub use ring::{QPoly, Ring};
