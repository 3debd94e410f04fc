//! Fixtures shared by the benchmarks.

use weylzeta::coxeter::{build_system, ElementTable};
use weylzeta::hecke::{HeckeElement, Representation};
use weylzeta::ring::{QPoly, Ring};

pub fn table(tag: &str, bound: usize) -> ElementTable {
    let system = build_system(tag, None).expect("known type");
    ElementTable::enumerate(&system, bound).expect("enumerates")
}

/// The sum of `q^ℓ(w) e_w` over all elements of length at most `max_len`.
pub fn ball(table: &ElementTable, max_len: usize) -> HeckeElement {
    HeckeElement::from_terms(
        table.ids().filter(|&w| table.length(w) <= max_len).map(|w| (w, QPoly::q().pow(table.length(w) as u32))),
    )
}

/// The index character `e_s ↦ q` as a validated representation.
pub fn index_character(table: &ElementTable) -> Representation<QPoly> {
    let k = table.system().rank();
    let gens = weylzeta::hecke::Character::index(k).matrices();
    Representation::validate(table, gens, QPoly::q()).expect("characters are representations")
}
