use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::coxeter::{CartanType, CoxeterSystem, ElementTable, SystemType};
use crate::error::{Error, Result};
use crate::hecke::Representation;
use crate::series::Matrix;
use crate::strips::{verify_corollary1, FactorizationScheme, StripType};
use crate::zeta::{strip_zeta, StripZeta};

/// An affine map `x ↦ Lx + t` on the coroot lattice, in simple-coroot
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Affine {
    linear: Vec<Vec<i64>>,
    shift: Vec<i64>,
}

impl Affine {
    fn identity(n: usize) -> Self {
        Affine { linear: identity(n), shift: vec![0; n] }
    }

    /// `self ∘ rhs`.
    fn compose(&self, rhs: &Affine) -> Affine {
        let n = self.shift.len();
        let shift =
            (0..n).map(|i| self.shift[i] + (0..n).map(|j| self.linear[i][j] * rhs.shift[j]).sum::<i64>()).collect();
        Affine { linear: mat_mul(&self.linear, &rhs.linear), shift }
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Affine reflections of the generators on the coroot lattice:
/// `s_i(x) = x − ⟨α_i, x⟩α_i^∨` and `s_0(x) = x − (⟨θ, x⟩ − 1)θ^∨`.
fn generator_maps(t: CartanType, nodes: &[Option<usize>]) -> Vec<Affine> {
    let n = t.rank();
    let a = t.cartan_matrix();
    let norms = t.root_norms();
    let gram = t.gram();
    let theta = t.highest_root();
    let theta_norm: i64 = (0..n).map(|i| (0..n).map(|j| theta[i] * gram[i][j] * theta[j]).sum::<i64>()).sum();
    let theta_co: Vec<i64> = (0..n).map(|i| theta[i] * norms[i] / theta_norm).collect();
    // ⟨β, α_j^∨⟩ = Σ_i β_i A_ji
    let pair = |beta: &[i64], j: usize| -> i64 { (0..n).map(|i| beta[i] * a[j][i]).sum() };
    let reflection = |beta: &[i64], co: &[i64]| -> Vec<Vec<i64>> {
        let mut l = identity(n);
        for (r, row) in l.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x -= co[r] * pair(beta, j);
            }
        }
        l
    };
    nodes
        .iter()
        .map(|node| match *node {
            Some(i) => {
                let mut alpha = vec![0; n];
                alpha[i] = 1;
                let mut co = vec![0; n];
                co[i] = 1;
                Affine { linear: reflection(&alpha, &co), shift: vec![0; n] }
            }
            None => Affine { linear: reflection(&theta, &theta_co), shift: theta_co.clone() },
        })
        .collect()
}

/// The torus `Γ\W` for `Γ` the translations by `k·Q^∨`, at `q = 1`.
///
/// A chamber is a coset `Γ(L, t)`, stored as the linear part `L ∈ W₀` and
/// the translation `t mod k`; there are `|W₀|·k^n` of them. Each generator
/// acts by right multiplication, a fixed-point-free permutation.
#[derive(Clone, Debug)]
pub struct TorusQuotient {
    system: CoxeterSystem,
    scale: usize,
    maps: Vec<Affine>,
    finite: Vec<Vec<Vec<i64>>>,
    permutations: Vec<Vec<usize>>,
}

impl TorusQuotient {
    pub fn new(system: &CoxeterSystem, scale: usize) -> Result<Self> {
        let SystemType::Affine(t) = system.kind() else {
            return Err(Error::NotAffine(system.type_tag()));
        };
        if scale < 2 {
            return Err(Error::Torus(format!("scale must be at least 2, got {scale}")));
        }
        let nodes = system.affine_nodes().expect("affine systems record their nodes");
        let maps = generator_maps(*t, nodes);
        let n = t.rank();

        let mut finite = vec![identity(n)];
        let mut index: HashMap<Vec<Vec<i64>>, usize> = HashMap::from([(identity(n), 0)]);
        let mut i = 0;
        while i < finite.len() {
            for (g, node) in maps.iter().zip(nodes) {
                if node.is_some() {
                    let next = mat_mul(&finite[i], &g.linear);
                    if !index.contains_key(&next) {
                        index.insert(next.clone(), finite.len());
                        finite.push(next);
                    }
                }
            }
            i += 1;
        }

        let cells = scale.pow(n as u32);
        let count = finite.len() * cells;
        let mut tq = TorusQuotient { system: system.clone(), scale, maps, finite, permutations: Vec::new() };
        for g in &tq.maps {
            let perm: Vec<usize> = (0..count)
                .map(|c| {
                    let next = tq.chamber(c).compose(g);
                    tq.index_of(&next, &index)
                })
                .collect();
            tq.permutations.push(perm);
        }
        for (s, p) in tq.permutations.iter().enumerate() {
            if let Some(c) = (0..count).find(|&c| p[c] == c) {
                return Err(Error::Torus(format!("s{} fixes chamber {c}; the action is not free", s + 1)));
            }
        }
        if !tq.is_transitive() {
            return Err(Error::Torus("generators do not act transitively on the chambers".into()));
        }
        Ok(tq)
    }

    fn chamber(&self, c: usize) -> Affine {
        let n = self.system.rank() - 1;
        let cells = self.scale.pow(n as u32);
        let mut rest = c % cells;
        let shift = (0..n)
            .map(|_| {
                let d = (rest % self.scale) as i64;
                rest /= self.scale;
                d
            })
            .collect();
        Affine { linear: self.finite[c / cells].clone(), shift }
    }

    fn index_of(&self, a: &Affine, index: &HashMap<Vec<Vec<i64>>, usize>) -> usize {
        let k = self.scale as i64;
        let cells = self.scale.pow(a.shift.len() as u32);
        let cell = a.shift.iter().rev().fold(0usize, |acc, &x| acc * self.scale + x.rem_euclid(k) as usize);
        index[&a.linear] * cells + cell
    }

    fn is_transitive(&self) -> bool {
        let count = self.chamber_count();
        let mut seen = vec![false; count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for p in &self.permutations {
                if !seen[p[c]] {
                    seen[p[c]] = true;
                    stack.push(p[c]);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn scale(&self) -> usize {
        self.scale
    }

    pub fn finite_order(&self) -> usize {
        self.finite.len()
    }

    pub fn chamber_count(&self) -> usize {
        self.permutations[0].len()
    }

    /// `c ↦ c·s` for generator `s`.
    pub fn permutation(&self, s: usize) -> &[usize] {
        &self.permutations[s]
    }

    /// `A_s`, with a 1 at `(c, c·s)`.
    pub fn generator_matrices(&self) -> Vec<Matrix<BigInt>> {
        self.permutations.iter().map(|p| Matrix::from_permutation(p)).collect()
    }

    /// `A_w = A_{s_1}⋯A_{s_r}` for `w = s_1⋯s_r`.
    pub fn word_matrix(&self, word: &[usize]) -> Matrix<BigInt> {
        let count = self.chamber_count();
        let perm: Vec<usize> = (0..count).map(|c| word.iter().fold(c, |x, &s| self.permutations[s][x])).collect();
        Matrix::from_permutation(&perm)
    }

    /// Chambers `Γg` with `g wⁿ g⁻¹ ∈ Γ`, i.e. pointed closed strips of
    /// length `n` for `w`, counted with affine maps instead of the
    /// permutation action.
    pub fn closed_strip_count(&self, word: &[usize], n: usize) -> usize {
        let dim = self.system.rank() - 1;
        let w = word.iter().fold(Affine::identity(dim), |acc, &s| acc.compose(&self.maps[s]));
        let wn = (0..n).fold(Affine::identity(dim), |acc, _| acc.compose(&w));
        if wn.linear != identity(dim) {
            return 0;
        }
        // g wⁿ g⁻¹ is the translation by L_g(t_{wⁿ}), independent of t_g
        let k = self.scale as i64;
        let per_linear = self
            .finite
            .iter()
            .filter(|l| (0..dim).all(|i| (0..dim).map(|j| l[i][j] * wn.shift[j]).sum::<i64>().rem_euclid(k) == 0));
        per_linear.count() * self.scale.pow(dim as u32)
    }
}

/// The quotient and its permutation representation of `H₁(W)`, validated on
/// `table`.
pub fn torus_quotient_rep(table: &ElementTable, scale: usize) -> Result<(TorusQuotient, Representation<BigInt>)> {
    let tq = TorusQuotient::new(table.system(), scale)?;
    let rep = Representation::validate(table, tq.generator_matrices(), BigInt::from(1))?;
    Ok((tq, rep))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripTraceReport {
    pub word: Vec<usize>,
    pub traces: Vec<u64>,
    pub oracle: Vec<u64>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainTheorem2Report {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub scale: usize,
    pub chambers: usize,
    pub strip_lengths: Vec<usize>,
    pub strip_zetas: Vec<Value>,
    pub strips: Vec<StripTraceReport>,
    pub corollary_pass: bool,
    pub zeta_pass: bool,
    pub traces_pass: bool,
    pub pass: bool,
}

/// `det Alt(W)(π,u) = Z_{w₁}(u^{ℓ₁})·Z_{w₂}(u^{ℓ₂})` on the torus, with
/// `tr(A_{w_i}ⁿ)` compared against [`TorusQuotient::closed_strip_count`]
/// for `n ≤ n_max`.
pub fn verify_maintheorem2(
    table: &ElementTable,
    tq: &TorusQuotient,
    rep: &Representation<BigInt>,
    check_order: usize,
    n_max: usize,
) -> Result<MainTheorem2Report> {
    let scheme = FactorizationScheme::for_type(StripType::from_system(table.system())?);
    let corollary = verify_corollary1(table, &scheme, rep, check_order)?;

    let mut product = crate::series::RationalFunction::one();
    let mut strip_lengths = Vec::new();
    let mut strip_zetas = Vec::new();
    let mut strips = Vec::new();
    for word in scheme.strip_words() {
        let z: StripZeta<BigInt> = strip_zeta(&tq.word_matrix(&word), word.len(), n_max)?;
        product = product.mul(&z.in_length_variable());
        strip_lengths.push(word.len());
        strip_zetas.push(z.zeta.to_json());
        let traces: Vec<u64> = z.zeta.traces().iter().map(|t| u64::try_from(t).expect("permutation trace")).collect();
        let oracle: Vec<u64> = (1..=n_max).map(|n| tq.closed_strip_count(&word, n) as u64).collect();
        strips.push(StripTraceReport { word: word.clone(), pass: traces == oracle, traces, oracle });
    }
    let zeta_pass = product.equals(&corollary.rhs);
    let traces_pass = strips.iter().all(|s| s.pass);
    let corollary_pass = corollary.report.pass;
    Ok(MainTheorem2Report {
        type_tag: table.system().type_tag(),
        scale: tq.scale(),
        chambers: tq.chamber_count(),
        strip_lengths,
        strip_zetas,
        strips,
        corollary_pass,
        zeta_pass,
        traces_pass,
        pass: corollary_pass && zeta_pass && traces_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    #[test]
    fn generator_maps_satisfy_coxeter_relations() {
        for tag in ["A2t", "C2t", "G2t", "B3t", "A1t"] {
            let sys = build_system(tag, None).unwrap();
            let SystemType::Affine(t) = sys.kind() else { unreachable!() };
            let maps = generator_maps(*t, sys.affine_nodes().unwrap());
            let id = Affine::identity(t.rank());
            for i in 0..maps.len() {
                for j in 0..maps.len() {
                    let st = maps[i].compose(&maps[j]);
                    let m = sys.m(i, j);
                    let order = (1..=12).find(|&e| (0..e).fold(id.clone(), |acc, _| acc.compose(&st)) == id);
                    assert_eq!(order.map(|e| e as u32), m, "{tag} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn chamber_counts() {
        for (tag, k, count) in [("A2t", 2, 24), ("A2t", 3, 54), ("C2t", 2, 32), ("G2t", 2, 48), ("G2t", 3, 108)] {
            let tq = TorusQuotient::new(&build_system(tag, None).unwrap(), k).unwrap();
            assert_eq!(tq.chamber_count(), count, "{tag} k={k}");
        }
        assert!(TorusQuotient::new(&build_system("A2t", None).unwrap(), 1).is_err());
        assert!(TorusQuotient::new(&build_system("A2", None).unwrap(), 2).is_err());
    }

    #[test]
    fn representation_validates() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 6).unwrap();
        let (tq, rep) = torus_quotient_rep(&t, 2).unwrap();
        assert_eq!(rep.dim(), 24);
        assert_eq!(tq.word_matrix(&[]).trace(), BigInt::from(24));
    }

    #[test]
    fn traces_match_geometric_count() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 6).unwrap();
        let (tq, _) = torus_quotient_rep(&t, 2).unwrap();
        for word in [vec![2, 1, 0], vec![2, 0, 1], vec![0], vec![0, 1]] {
            let traces = tq.word_matrix(&word).power_traces(6);
            for (n, tr) in traces.iter().enumerate() {
                assert_eq!(*tr, BigInt::from(tq.closed_strip_count(&word, n + 1)), "{word:?} n={}", n + 1);
            }
        }
    }

    #[test]
    fn maintheorem2_on_a2() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 6).unwrap();
        let (tq, rep) = torus_quotient_rep(&t, 2).unwrap();
        let r = verify_maintheorem2(&t, &tq, &rep, 4, 6).unwrap();
        assert!(r.pass, "{r:?}");
    }
}
