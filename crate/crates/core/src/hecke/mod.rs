//! The Iwahori–Hecke algebra `H_q(W,S)`, its characters and representations,
//! and twisted Poincaré series.

mod algebra;
mod character;
mod representation;
mod twisted;

pub use algebra::{hecke_mul, HeckeElement};
pub use character::{characters, odd_bond_classes, CharValue, Character};
pub use representation::{ingest_representation, reflection_representation, IngestedRepresentation, Representation};
pub use twisted::{twisted_series, FactorSet, TwistedSeries};
