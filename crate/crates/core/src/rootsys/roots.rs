use std::str::FromStr;

use crate::coxeter::CartanType;
use crate::error::{Error, Result};

/// Positive roots of an irreducible root system in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    roots: Vec<Vec<i64>>,
}

/// An element of `P = R⁺ ∪ {1 − a : a ∈ R⁺}`. The affine node `a₀` is
/// implicit: `1 − a = a₀ + (θ − a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRoot {
    /// True for `1 − a`.
    pub shifted: bool,
    /// `a` itself, not `θ − a`.
    pub root: Vec<i64>,
    pub height: i64,
    /// `I(·)` as node indices, with `n` standing for `a₀`.
    pub support: Vec<usize>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        RootSystem { cartan_type, roots: cartan_type.positive_roots() }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn name(&self) -> String {
        self.cartan_type.name()
    }

    /// Sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn highest_root(&self) -> &[i64] {
        self.roots.last().expect("nonempty root system")
    }

    pub fn heights(&self) -> Vec<i64> {
        self.roots.iter().map(|r| height(r)).collect()
    }

    /// `h = ht(θ) + 1`.
    pub fn coxeter_number(&self) -> i64 {
        height(self.highest_root()) + 1
    }

    /// A root is sincere when its support is every simple root.
    pub fn is_sincere(root: &[i64]) -> bool {
        root.iter().all(|&c| c != 0)
    }

    /// The window `P`, roots of `R⁺` first, then `1 − a` in the same order.
    pub fn window(&self) -> Vec<AffineRoot> {
        let n = self.rank();
        let h = self.coxeter_number();
        let theta = self.highest_root();
        let plain = self.roots.iter().map(|a| AffineRoot {
            shifted: false,
            root: a.clone(),
            height: height(a),
            support: (0..n).filter(|&i| a[i] != 0).collect(),
        });
        let shifted = self.roots.iter().map(|a| AffineRoot {
            shifted: true,
            root: a.clone(),
            height: h - height(a),
            support: (0..n).filter(|&i| theta[i] != a[i]).chain([n]).collect(),
        });
        plain.chain(shifted).collect()
    }
}

impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(RootSystem::new(s.parse()?))
    }
}

pub(crate) fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn classical_counts_and_coxeter_numbers() {
        for (name, count, h) in [
            ("A2", 3, 3),
            ("A5", 15, 6),
            ("B3", 9, 6),
            ("C4", 16, 8),
            ("D5", 20, 8),
            ("E6", 36, 12),
            ("E7", 63, 18),
            ("E8", 120, 30),
            ("F4", 24, 12),
            ("G2", 6, 6),
        ] {
            let r = rs(name);
            assert_eq!(r.positive_roots().len(), count, "{name}");
            assert_eq!(r.coxeter_number(), h, "{name}");
        }
    }

    #[test]
    fn g2_heights() {
        let r = rs("G2");
        assert_eq!(r.heights(), vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(rs("A2").heights(), vec![1, 1, 2]);
    }

    #[test]
    fn closure_under_simple_subtraction() {
        for t in CartanType::catalogue(6) {
            let r = RootSystem::new(t);
            let set: std::collections::HashSet<_> = r.positive_roots().iter().cloned().collect();
            for a in r.positive_roots().iter().filter(|a| height(a) > 1) {
                let ok = (0..r.rank()).any(|i| {
                    let mut b = a.clone();
                    b[i] -= 1;
                    set.contains(&b)
                });
                assert!(ok, "{t}: {a:?}");
            }
        }
    }

    #[test]
    fn window_heights_are_symmetric() {
        for t in CartanType::catalogue(8) {
            let r = RootSystem::new(t);
            let h = r.coxeter_number();
            let w = r.window();
            assert_eq!(w.len(), 2 * r.positive_roots().len());
            let mut hs: Vec<i64> = w.iter().map(|a| a.height).collect();
            assert!(hs.iter().all(|&x| 0 < x && x < h), "{t}");
            let mut mirrored: Vec<i64> = hs.iter().map(|&x| h - x).collect();
            hs.sort();
            mirrored.sort();
            assert_eq!(hs, mirrored, "{t}");
        }
    }
}
