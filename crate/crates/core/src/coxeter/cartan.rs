//! Cartan data for the irreducible reduced crystallographic root systems.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

/// A finite Cartan type such as `B4` or `E8` (Bourbaki numbering).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.to_string(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Squared root lengths `(α_i, α_i)`, scaled so every Gram entry is an integer.
    pub fn root_norms(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 < n { 4 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 < n { 2 } else { 4 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Edges of the Dynkin diagram (unoriented).
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
                .into_iter()
                .filter(|&(a, b)| a < n && b < n)
                .collect(),
        }
    }

    /// Symmetric Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let norms = self.root_norms();
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        for i in 0..n {
            b[i][i] = norms[i];
        }
        for (i, j) in self.dynkin_edges() {
            let v = -(norms[i].max(norms[j]) / 2);
            b[i][j] = v;
            b[j][i] = v;
        }
        b
    }

    /// Cartan matrix `A_ij = 2(α_i, α_j)/(α_i, α_i) = ⟨α_j, α_i^∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from_gram(&self.gram())
    }

    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        positive_roots(&self.cartan_matrix()).expect("finite Cartan types have finitely many roots")
    }

    /// Coordinates of the highest root.
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots().pop().expect("nonempty root system")
    }

    /// Cartan matrix of the untwisted affine extension, with `α_0 = δ − θ`
    /// appended as the last node.
    pub fn affine_cartan_matrix(&self) -> Vec<Vec<i64>> {
        let gram = self.gram();
        let n = self.rank;
        let theta = self.highest_root();
        let theta_dot: Vec<i64> = (0..n).map(|j| (0..n).map(|k| theta[k] * gram[k][j]).sum()).collect();
        let theta_norm: i64 = (0..n).map(|j| theta[j] * theta_dot[j]).sum();
        let mut a = vec![vec![0i64; n + 1]; n + 1];
        let fin = self.cartan_matrix();
        for i in 0..n {
            a[i][..n].copy_from_slice(&fin[i]);
            a[i][n] = -2 * theta_dot[i] / gram[i][i];
            a[n][i] = -2 * theta_dot[i] / theta_norm;
        }
        a[n][n] = 2;
        a
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Every type the exponent tables cover: `A1..A8`, `B2..B8`, `C2..C8`,
    /// `D4..D8`, `E6..E8`, `F4`, `G2`.
    pub fn catalogue(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
            for r in lo..=max_rank {
                out.push(CartanType { family, rank: r });
            }
        }
        for r in 6..=8.min(max_rank) {
            out.push(CartanType { family: Family::E, rank: r });
        }
        if max_rank >= 4 {
            out.push(CartanType { family: Family::F, rank: 4 });
        }
        if max_rank >= 2 {
            out.push(CartanType { family: Family::G, rank: 2 });
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::UnsupportedType(s.to_string()))?;
        let family: Family = s[..split].parse()?;
        let rank: usize = s[split..].parse().map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

pub(crate) fn cartan_from_gram(b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n).map(|i| (0..n).map(|j| 2 * b[i][j] / b[i][i]).collect()).collect()
}

/// Positive roots of a finite-type (possibly reducible) Cartan matrix, by
/// closing the simple roots under the simple reflections
/// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`. Fails if the orbit exceeds a safety cap,
/// which happens exactly when the matrix is not of finite type.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    const CAP: usize = 100_000;
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = beta.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                if seen.len() > CAP {
                    return Err(Error::ElementLimit { limit: CAP });
                }
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    pos.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    Ok(pos)
}

/// Coxeter matrix entry from a Cartan pairing product `A_ij·A_ji`;
/// `None` means `m = ∞`.
pub fn bond_order(product: i64) -> Option<u32> {
    match product {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_root_counts() {
        let cases =
            [("A4", 10), ("B3", 9), ("C4", 16), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)];
        for (name, count) in cases {
            let t: CartanType = name.parse().unwrap();
            assert_eq!(t.positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn g2_cartan_and_highest_root() {
        let t: CartanType = "G2".parse().unwrap();
        assert_eq!(t.cartan_matrix(), vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(t.highest_root(), vec![3, 2]);
    }

    #[test]
    fn affine_extensions() {
        let a1: CartanType = "A1".parse().unwrap();
        assert_eq!(a1.affine_cartan_matrix(), vec![vec![2, -2], vec![-2, 2]]);
        let c2: CartanType = "C2".parse().unwrap();
        // α0 attaches to the short root α1 with pairing product 2
        let a = c2.affine_cartan_matrix();
        assert_eq!(a[0][2] * a[2][0], 2);
        assert_eq!(a[1][2], 0);
        let g2: CartanType = "G2".parse().unwrap();
        let a = g2.affine_cartan_matrix();
        assert_eq!((a[1][2], a[2][1]), (-1, -1));
        assert_eq!(a[0][2], 0);
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!("D3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
    }
}
