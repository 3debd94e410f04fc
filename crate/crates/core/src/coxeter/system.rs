use std::fmt;
use std::str::FromStr;

use crate::coxeter::cartan::{bond_order, CartanType, Family};
use crate::error::{Error, Result};

/// What a [`CoxeterSystem`] was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SystemType {
    Finite(CartanType),
    /// Untwisted affine extension; tagged `A2t`, `C2t`, `G2t`, ...
    Affine(CartanType),
    /// A standard parabolic subsystem, generators indexed in the parent.
    Parabolic {
        parent: String,
        generators: Vec<usize>,
    },
}

impl SystemType {
    pub fn cartan_type(&self) -> Option<CartanType> {
        match self {
            SystemType::Finite(t) | SystemType::Affine(t) => Some(*t),
            SystemType::Parabolic { .. } => None,
        }
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemType::Finite(t) => write!(f, "{t}"),
            SystemType::Affine(t) => write!(f, "{t}t"),
            SystemType::Parabolic { parent, generators } => {
                let g: Vec<String> = generators.iter().map(|i| format!("s{}", i + 1)).collect();
                write!(f, "{parent}[{}]", g.join(","))
            }
        }
    }
}

impl FromStr for SystemType {
    type Err = Error;

    /// Accepts `E8`, `A2t`, `A2~`, `~A2` and `A~2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (affine, core) = if let Some(r) = s.strip_prefix('~') {
            (true, r.to_string())
        } else if let Some(r) = s.strip_suffix('~').or_else(|| s.strip_suffix('t')) {
            (true, r.to_string())
        } else if s.contains('~') {
            (true, s.replace('~', ""))
        } else {
            (false, s.to_string())
        };
        let t: CartanType = core.parse().map_err(|e| match e {
            Error::UnsupportedType(_) => Error::UnsupportedType(s.to_string()),
            other => other,
        })?;
        Ok(if affine { SystemType::Affine(t) } else { SystemType::Finite(t) })
    }
}

/// A Coxeter system together with its integer geometric representation.
///
/// Generator `i` acts on the simple-root basis by
/// `σ_i(α_j) = α_j − A_ij α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    kind: SystemType,
    labels: Vec<String>,
    cartan: Vec<Vec<i64>>,
    coxeter: Vec<Vec<Option<u32>>>,
    // affine systems: generator -> finite simple root, None for α_0
    nodes: Option<Vec<Option<usize>>>,
    generators: Vec<Vec<i64>>,
}

impl CoxeterSystem {
    pub fn from_cartan(kind: SystemType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let k = cartan.len();
        if cartan.iter().any(|r| r.len() != k) {
            return Err(Error::Shape("Cartan matrix must be square".into()));
        }
        let mut coxeter = vec![vec![Some(1); k]; k];
        for i in 0..k {
            if cartan[i][i] != 2 {
                return Err(Error::Shape(format!("Cartan diagonal entry {i} is not 2")));
            }
            for j in 0..k {
                if i == j {
                    continue;
                }
                let (a, b) = (cartan[i][j], cartan[j][i]);
                if a > 0 || b > 0 || (a == 0) != (b == 0) {
                    return Err(Error::Shape(format!("Cartan entries ({i},{j}) are not a valid pairing")));
                }
                coxeter[i][j] = bond_order(a * b);
            }
        }
        let labels = (1..=k).map(|i| format!("s{i}")).collect();
        let generators = (0..k).map(|i| reflection_matrix(&cartan, i)).collect();
        Ok(CoxeterSystem { kind, labels, cartan, coxeter, nodes: None, generators })
    }

    pub fn finite(t: CartanType) -> Self {
        Self::from_cartan(SystemType::Finite(t), t.cartan_matrix()).expect("valid finite Cartan matrix")
    }

    /// Untwisted affine system. Finite nodes come first and `α_0` last, except
    /// for `G̃₂`, whose generators are ordered `(α_2, α_1, α_0)` so that the
    /// bonds read `(m₁₂, m₂₃, m₁₃) = (6, 2, 3)`.
    pub fn affine(t: CartanType) -> Self {
        let n = t.rank();
        let nodes: Vec<Option<usize>> = if t.family() == Family::G {
            vec![Some(1), Some(0), None]
        } else {
            (0..n).map(Some).chain([None]).collect()
        };
        let aff = t.affine_cartan_matrix();
        let pos = |node: Option<usize>| node.unwrap_or(n);
        let cartan = nodes.iter().map(|&a| nodes.iter().map(|&b| aff[pos(a)][pos(b)]).collect()).collect();
        let mut sys = Self::from_cartan(SystemType::Affine(t), cartan).expect("valid affine Cartan matrix");
        sys.nodes = Some(nodes);
        sys
    }

    pub fn kind(&self) -> &SystemType {
        &self.kind
    }

    pub fn type_tag(&self) -> String {
        self.kind.to_string()
    }

    pub fn is_affine(&self) -> bool {
        matches!(self.kind, SystemType::Affine(_))
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn coxeter_matrix(&self) -> &[Vec<Option<u32>>] {
        &self.coxeter
    }

    /// Order of `s_i s_j`; `None` means infinite.
    pub fn m(&self, i: usize, j: usize) -> Option<u32> {
        self.coxeter[i][j]
    }

    /// For affine systems, the finite simple root behind each generator
    /// (`None` marks the affine node).
    pub fn affine_nodes(&self) -> Option<&[Option<usize>]> {
        self.nodes.as_deref()
    }

    /// Row-major `k×k` matrix of `σ_i`.
    pub fn generator_matrix(&self, i: usize) -> &[i64] {
        &self.generators[i]
    }

    pub fn check_generator(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorIndex(i))
        }
    }

    pub fn identity_matrix(&self) -> Vec<i64> {
        let k = self.rank();
        let mut m = vec![0; k * k];
        for i in 0..k {
            m[i * k + i] = 1;
        }
        m
    }

    /// `m·σ_s`, computed as a column operation.
    pub fn right_mul(&self, m: &[i64], s: usize) -> Vec<i64> {
        let k = self.rank();
        let mut out = m.to_vec();
        for j in 0..k {
            let a = self.cartan[s][j];
            if a == 0 {
                continue;
            }
            if j == s {
                for r in 0..k {
                    out[r * k + s] = -m[r * k + s];
                }
            } else {
                for r in 0..k {
                    out[r * k + j] -= a * m[r * k + s];
                }
            }
        }
        out
    }

    /// `σ_s·m`; only row `s` changes.
    pub fn left_mul(&self, s: usize, m: &[i64]) -> Vec<i64> {
        let k = self.rank();
        let mut out = m.to_vec();
        for j in 0..k {
            let v: i64 = (0..k).map(|c| self.cartan[s][c] * m[c * k + j]).sum();
            out[s * k + j] = m[s * k + j] - v;
        }
        out
    }

    /// Matrix of the product of generators along `word` (0-based indices).
    pub fn word_matrix(&self, word: &[usize]) -> Result<Vec<i64>> {
        let mut m = self.identity_matrix();
        for &s in word {
            self.check_generator(s)?;
            m = self.right_mul(&m, s);
        }
        Ok(m)
    }

    /// Checks `σ_i² = I` and `(σ_iσ_j)^{m_ij} = I` for every finite `m_ij`,
    /// returning the first failing pair.
    pub fn check_relations(&self) -> std::result::Result<(), (usize, usize)> {
        let id = self.identity_matrix();
        for i in 0..self.rank() {
            if self.word_matrix(&[i, i]).unwrap() != id {
                return Err((i, i));
            }
            for j in i + 1..self.rank() {
                if let Some(m) = self.m(i, j) {
                    let word: Vec<usize> = [i, j].iter().copied().cycle().take(2 * m as usize).collect();
                    if self.word_matrix(&word).unwrap() != id {
                        return Err((i, j));
                    }
                }
            }
        }
        Ok(())
    }

    /// The parabolic subsystem on `generators`, as a Coxeter system of its own
    /// (generator `i` of the result is `generators[i]` of `self`).
    pub fn restrict(&self, generators: &[usize]) -> Result<CoxeterSystem> {
        for &g in generators {
            self.check_generator(g)?;
        }
        let cartan = generators.iter().map(|&a| generators.iter().map(|&b| self.cartan[a][b]).collect()).collect();
        let kind = SystemType::Parabolic { parent: self.type_tag(), generators: generators.to_vec() };
        Self::from_cartan(kind, cartan)
    }
}

fn reflection_matrix(cartan: &[Vec<i64>], i: usize) -> Vec<i64> {
    let k = cartan.len();
    let mut m = vec![0; k * k];
    for j in 0..k {
        m[j * k + j] = 1;
        // column j is the image of α_j
        m[i * k + j] -= cartan[i][j];
    }
    m
}

/// Builds a system from a tag such as `A2t`, `G2t`, `A1t` or `E8`. When
/// `rank` is given it must agree with the tag, or complete a bare family
/// letter (`build_system("C~", Some(2))`).
pub fn build_system(tag: &str, rank: Option<usize>) -> Result<CoxeterSystem> {
    let tag = tag.trim();
    let has_digit = tag.chars().any(|c| c.is_ascii_digit());
    let kind: SystemType = match (has_digit, rank) {
        (true, _) => tag.parse()?,
        (false, Some(r)) => {
            let (affine, letter) = match tag.strip_suffix(['t', '~']).or_else(|| tag.strip_prefix('~')) {
                Some(l) => (true, l),
                None => (false, tag),
            };
            let t = CartanType::new(letter.parse()?, r)?;
            if affine {
                SystemType::Affine(t)
            } else {
                SystemType::Finite(t)
            }
        }
        (false, None) => return Err(Error::UnsupportedType(tag.to_string())),
    };
    let t = kind.cartan_type().expect("parsed tags carry a Cartan type");
    if let Some(r) = rank {
        if r != t.rank() {
            return Err(Error::InvalidRank { family: tag.to_string(), rank: r });
        }
    }
    Ok(match kind {
        SystemType::Affine(t) => CoxeterSystem::affine(t),
        _ => CoxeterSystem::finite(t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bonds(sys: &CoxeterSystem) -> (Option<u32>, Option<u32>, Option<u32>) {
        (sys.m(0, 1), sys.m(1, 2), sys.m(0, 2))
    }

    #[test]
    fn rank_two_affine_numbering() {
        assert_eq!(bonds(&build_system("A2t", Some(2)).unwrap()), (Some(3), Some(3), Some(3)));
        assert_eq!(bonds(&build_system("C2t", None).unwrap()), (Some(4), Some(2), Some(4)));
        assert_eq!(bonds(&build_system("G2t", None).unwrap()), (Some(6), Some(2), Some(3)));
        let a1 = build_system("A1t", Some(1)).unwrap();
        assert_eq!(a1.m(0, 1), None);
        assert_eq!(a1.cartan(), &[vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn relations_hold_for_all_catalogue_types() {
        for t in CartanType::catalogue(8) {
            assert_eq!(CoxeterSystem::finite(t).check_relations(), Ok(()), "{t}");
            assert_eq!(CoxeterSystem::affine(t).check_relations(), Ok(()), "{t}t");
        }
    }

    #[test]
    fn tag_parsing() {
        for tag in ["A2t", "A2~", "~A2", "A~2"] {
            assert_eq!(tag.parse::<SystemType>().unwrap().to_string(), "A2t");
        }
        assert_eq!(build_system("C", Some(3)).unwrap().type_tag(), "C3");
        assert_eq!(build_system("Ct", Some(2)).unwrap().type_tag(), "C2t");
        assert!(build_system("A2t", Some(3)).is_err());
        assert!(build_system("Q2", None).is_err());
    }

    #[test]
    fn left_and_right_multiplication_agree_with_words() {
        let sys = build_system("G2t", None).unwrap();
        let w = sys.word_matrix(&[2, 0, 1]).unwrap();
        assert_eq!(sys.left_mul(1, &w), sys.word_matrix(&[1, 2, 0, 1]).unwrap());
        assert_eq!(sys.right_mul(&w, 2), sys.word_matrix(&[2, 0, 1, 2]).unwrap());
    }

    #[test]
    fn restriction_keeps_bonds() {
        let sys = build_system("G2t", None).unwrap();
        let sub = sys.restrict(&[0, 2]).unwrap();
        assert_eq!(sub.m(0, 1), Some(3));
        assert_eq!(sub.type_tag(), "G2t[s1,s3]");
    }
}
