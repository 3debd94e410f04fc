use serde::Serialize;

use crate::coxeter::{format_word, CartanType, CoxeterSystem, ElementTable, Family, SystemType};
use crate::error::{Error, Result};

/// The three rank-two affine types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StripType {
    A2,
    C2,
    G2,
}

impl StripType {
    pub fn from_system(system: &CoxeterSystem) -> Result<Self> {
        let bad = || Error::InvalidScheme(format!("{} is not a rank-two affine type", system.type_tag()));
        let SystemType::Affine(t) = system.kind() else { return Err(bad()) };
        Self::from_cartan(*t).ok_or_else(bad)
    }

    fn from_cartan(t: CartanType) -> Option<Self> {
        match (t.family(), t.rank()) {
            (Family::A, 2) => Some(StripType::A2),
            (Family::B | Family::C, 2) => Some(StripType::C2),
            (Family::G, 2) => Some(StripType::G2),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            StripType::A2 => "A2t",
            StripType::C2 => "C2t",
            StripType::G2 => "G2t",
        }
    }

    pub fn all() -> [StripType; 3] {
        [StripType::A2, StripType::C2, StripType::G2]
    }

    /// Words for `w₁, w₂` (0-based generator indices). For `G̃₂` the first
    /// word is the replacement `s₁w₁s₁ = s₃s₁s₂`.
    pub fn words(self) -> (Vec<usize>, Vec<usize>) {
        match self {
            StripType::A2 => (vec![2, 1, 0], vec![2, 0, 1]),
            StripType::C2 => (vec![2, 0, 1, 0], vec![2, 0, 1]),
            StripType::G2 => (vec![2, 0, 1], vec![2, 0, 1, 0, 1]),
        }
    }
}

/// The `G̃₂` word `s₃s₁s₂s₃s₁` before replacement; its powers are not
/// length-additive.
pub fn unreplaced_g2_w1() -> Vec<usize> {
    vec![2, 0, 1, 2, 0]
}

/// A strip generator `w_i` with its verified length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripSpec {
    pub type_tag: String,
    pub index: usize,
    pub word: Vec<usize>,
    pub length: usize,
}

impl StripSpec {
    pub fn word_string(&self) -> String {
        format_word(&self.word)
    }
}

/// `(w₁, w₂)` for the table's system; each word must be reduced.
pub fn strip_generators(table: &ElementTable) -> Result<(StripSpec, StripSpec)> {
    let ty = StripType::from_system(table.system())?;
    let (a, b) = ty.words();
    let make = |index: usize, word: Vec<usize>| -> Result<StripSpec> {
        let w = table.element_of_word(&word)?;
        if table.length(w) != word.len() {
            return Err(Error::InvalidScheme(format!("strip word {} is not reduced", format_word(&word))));
        }
        Ok(StripSpec { type_tag: ty.tag().to_string(), index, length: word.len(), word })
    };
    Ok((make(1, a)?, make(2, b)?))
}

/// Outcome of checking `ℓ(wᵏ) = k·ℓ(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerLengthReport {
    pub word: String,
    pub step: usize,
    pub lengths: Vec<usize>,
    pub pass: bool,
    pub first_failure: Option<usize>,
}

/// Lengths of `w⁰, w¹, …, w^{k_max}` for the element spelled by `word`.
pub fn check_power_lengths(table: &ElementTable, word: &[usize], k_max: usize) -> Result<PowerLengthReport> {
    if k_max * word.len() > table.bound() {
        return Err(Error::OutOfBound { bound: table.bound() });
    }
    let w = table.element_of_word(word)?;
    let step = table.length(w);
    let mut cur = table.element_of_word(&[])?;
    let mut lengths = vec![0];
    for _ in 0..k_max {
        cur = table.multiply(cur, w)?.element;
        lengths.push(table.length(cur));
    }
    let first_failure = lengths.iter().enumerate().find(|&(k, &l)| l != k * step).map(|(k, _)| k);
    Ok(PowerLengthReport { word: format_word(word), step, lengths, pass: first_failure.is_none(), first_failure })
}

/// `s₁·(s₃s₁s₂s₃s₁)·s₁ = s₃s₁s₂` in `G̃₂`.
pub fn g2_replacement_holds(system: &CoxeterSystem) -> Result<bool> {
    let mut conj = vec![0];
    conj.extend(unreplaced_g2_w1());
    conj.push(0);
    Ok(system.word_matrix(&conj)? == system.word_matrix(&StripType::G2.words().0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    fn table(tag: &str, bound: usize) -> ElementTable {
        ElementTable::enumerate(&build_system(tag, None).unwrap(), bound).unwrap()
    }

    #[test]
    fn generator_lengths() {
        for (tag, l1, l2) in [("A2t", 3, 3), ("C2t", 4, 3), ("G2t", 3, 5)] {
            let (w1, w2) = strip_generators(&table(tag, 6)).unwrap();
            assert_eq!((w1.length, w2.length), (l1, l2), "{tag}");
        }
        assert!(strip_generators(&table("A1t", 6)).is_err());
    }

    #[test]
    fn powers_are_length_additive() {
        let t = table("A2t", 12);
        let r = check_power_lengths(&t, &[2, 1, 0], 2).unwrap();
        assert_eq!(r.lengths, vec![0, 3, 6]);
        assert!(check_power_lengths(&t, &[2, 1, 0], 0).unwrap().pass);
    }

    #[test]
    fn unreplaced_g2_word_fails() {
        let sys = build_system("G2t", None).unwrap();
        let t = ElementTable::enumerate(&sys, 10).unwrap();
        let r = check_power_lengths(&t, &unreplaced_g2_w1(), 2).unwrap();
        assert!(!r.pass);
        assert_eq!(r.first_failure, Some(2));
        assert!(g2_replacement_holds(&sys).unwrap());
    }
}
