//! Finite and affine Coxeter groups in their integer geometric representation.

mod cartan;
mod system;
mod table;

pub use cartan::{bond_order, positive_roots, CartanType, Family};
pub use system::{build_system, CoxeterSystem, SystemType};
pub use table::{
    element_limit, format_word, parse_word, DescentFree, ElementId, ElementTable, GroupElement, Product, DEFAULT_BOUND,
    DEFAULT_ELEMENT_LIMIT, ELEMENT_LIMIT_ENV,
};
