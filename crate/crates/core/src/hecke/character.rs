use std::fmt;

use crate::coxeter::CoxeterSystem;
use crate::ring::QPoly;
use crate::series::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharValue {
    Q,
    MinusOne,
}

impl CharValue {
    pub fn to_qpoly(self) -> QPoly {
        match self {
            CharValue::Q => QPoly::q(),
            CharValue::MinusOne => QPoly::constant(-1),
        }
    }
}

/// A one-dimensional representation `e_s ↦ q` or `e_s ↦ −1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    values: Vec<CharValue>,
}

impl Character {
    pub fn new(values: Vec<CharValue>) -> Self {
        Character { values }
    }

    /// `ρ₁ : e_s ↦ q` for every `s`.
    pub fn index(rank: usize) -> Self {
        Character { values: vec![CharValue::Q; rank] }
    }

    /// `e_s ↦ −1` for every `s`.
    pub fn sign(rank: usize) -> Self {
        Character { values: vec![CharValue::MinusOne; rank] }
    }

    pub fn values(&self) -> &[CharValue] {
        &self.values
    }

    /// True when generators joined by an odd bond agree, which the braid
    /// relations force.
    pub fn is_consistent(&self, system: &CoxeterSystem) -> bool {
        let k = system.rank();
        (0..k).all(|i| (0..k).all(|j| !odd_bond(system, i, j) || self.values[i] == self.values[j]))
    }

    /// The `1×1` generator images.
    pub fn matrices(&self) -> Vec<Matrix<QPoly>> {
        self.values.iter().map(|v| Matrix::scalar(1, v.to_qpoly())).collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .values
            .iter()
            .map(|v| match v {
                CharValue::Q => "q",
                CharValue::MinusOne => "-1",
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

fn odd_bond(system: &CoxeterSystem, i: usize, j: usize) -> bool {
    i != j && system.m(i, j).is_some_and(|m| m % 2 == 1)
}

/// Classes of generators connected through odd bonds, each sorted, listed in
/// order of their smallest member.
pub fn odd_bond_classes(system: &CoxeterSystem) -> Vec<Vec<usize>> {
    let k = system.rank();
    let mut class = vec![usize::MAX; k];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if class[start] != usize::MAX {
            continue;
        }
        let c = out.len();
        let mut members = vec![start];
        class[start] = c;
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for (b, cb) in class.iter_mut().enumerate() {
                if *cb == usize::MAX && odd_bond(system, a, b) {
                    *cb = c;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort();
        out.push(members);
    }
    out
}

/// Every character: one independent choice per odd-bond class. The first
/// entry is `ρ₁`, the last is the sign character.
pub fn characters(system: &CoxeterSystem) -> Vec<Character> {
    let classes = odd_bond_classes(system);
    let k = system.rank();
    (0u64..1 << classes.len())
        .map(|mask| {
            let mut values = vec![CharValue::Q; k];
            for (c, members) in classes.iter().enumerate() {
                if mask >> c & 1 == 1 {
                    for &g in members {
                        values[g] = CharValue::MinusOne;
                    }
                }
            }
            Character { values }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    #[test]
    fn character_counts() {
        for (tag, n) in [("A2t", 2), ("C2t", 8), ("G2t", 4), ("A1t", 4)] {
            let sys = build_system(tag, None).unwrap();
            let chars = characters(&sys);
            assert_eq!(chars.len(), n, "{tag}");
            assert_eq!(chars[0], Character::index(sys.rank()));
            assert!(chars.iter().all(|c| c.is_consistent(&sys)));
        }
    }

    #[test]
    fn g2_classes() {
        let sys = build_system("G2t", None).unwrap();
        assert_eq!(odd_bond_classes(&sys), vec![vec![0, 2], vec![1]]);
    }
}
