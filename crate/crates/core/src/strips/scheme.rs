use std::collections::HashSet;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::coxeter::{format_word, DescentFree, ElementId, ElementTable};
use crate::error::{Error, Result};
use crate::hecke::FactorSet;
use crate::series::poincare_affine;
use crate::strips::StripType;

/// An ordered list of factors `D₁, …, D_m` with `W = D₁ × ⋯ × D_m`
/// (length-additively).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationScheme {
    strip_type: StripType,
    factors: Vec<FactorSet>,
}

impl FactorizationScheme {
    /// The factorization for each rank-two type:
    ///
    /// * `Ã₂`, `C̃₂`: `W_{{1,2}/{2}} · H₁ · W_{{2,3}/{3}} · H₂ · W_{{1}\{1,3}}`
    /// * `G̃₂`: `W_{{2,1}/{1}} · H₂ · H₁ · W_{{1,3}}`
    ///
    /// The left-coset factor `W_{{1}\{1,3}}` is taken inside `W_{{1,3}}`.
    /// For `G̃₂` the strip factors must come as `H₂ · H₁` once `w₁` is the
    /// replacement `s₃s₁s₂`: in the order `H₁ · H₂` the products
    /// `s₁s₂ · w₂ · s₁` and `w₁ · w₂ · s₁` already collide or lose length.
    pub fn for_type(ty: StripType) -> Self {
        let (w1, w2) = ty.words();
        let right = |i: usize, j: [usize; 2]| FactorSet::Cosets { i: vec![i], j: j.to_vec(), side: DescentFree::Right };
        let factors = match ty {
            StripType::A2 | StripType::C2 => vec![
                right(1, [0, 1]),
                FactorSet::Cyclic(w1),
                right(2, [1, 2]),
                FactorSet::Cyclic(w2),
                FactorSet::Cosets { i: vec![0], j: vec![0, 2], side: DescentFree::Left },
            ],
            StripType::G2 => {
                vec![right(0, [0, 1]), FactorSet::Cyclic(w2), FactorSet::Cyclic(w1), FactorSet::Parabolic(vec![0, 2])]
            }
        };
        FactorizationScheme { strip_type: ty, factors }
    }

    /// The scheme for the table's system, rejecting anything but the three
    /// rank-two affine types.
    pub fn for_table(table: &ElementTable) -> Result<Self> {
        Ok(Self::for_type(StripType::from_system(table.system())?))
    }

    /// Confirms that the scheme belongs to the table's system.
    pub fn check(&self, table: &ElementTable) -> Result<()> {
        let ty = StripType::from_system(table.system())?;
        if ty != self.strip_type {
            return Err(Error::InvalidScheme(format!(
                "scheme for {} used with {}",
                self.strip_type.tag(),
                table.system().type_tag()
            )));
        }
        Ok(())
    }

    pub fn strip_type(&self) -> StripType {
        self.strip_type
    }

    pub fn factors(&self) -> &[FactorSet] {
        &self.factors
    }

    pub fn labels(&self) -> Vec<String> {
        self.factors.iter().map(ToString::to_string).collect()
    }

    /// Words of `w₁`, `w₂`, in that order whatever the factor order.
    pub fn strip_words(&self) -> Vec<Vec<usize>> {
        let (w1, w2) = self.strip_type.words();
        vec![w1, w2]
    }

    /// Elements of each factor with length at most `max_len`.
    pub fn factor_elements(&self, table: &ElementTable, max_len: usize) -> Result<Vec<Vec<ElementId>>> {
        self.factors
            .iter()
            .map(|f| match f {
                FactorSet::Cyclic(word) => {
                    let w = table.element_of_word(word)?;
                    let mut out = vec![ElementId::IDENTITY];
                    let mut cur = ElementId::IDENTITY;
                    while !word.is_empty() && table.length(cur) + word.len() <= max_len {
                        cur = table.multiply(cur, w)?.element;
                        out.push(cur);
                    }
                    Ok(out)
                }
                other => Ok(other
                    .elements(table)?
                    .expect("finite factor")
                    .into_iter()
                    .filter(|&w| table.length(w) <= max_len)
                    .collect()),
            })
            .collect()
    }
}

/// Outcome of enumerating the length-`≤ L` part of `D₁ × ⋯ × D_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub scheme: Vec<String>,
    #[serde(rename = "L")]
    pub bound: usize,
    pub slice_counts: Vec<u64>,
    pub expected_counts: Vec<u64>,
    pub length_additive: bool,
    pub distinct: bool,
    pub counts_match: bool,
    pub pass: bool,
    pub witness: Option<CensusWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusWitness {
    pub reason: String,
    pub tuple: Vec<String>,
}

/// Enumerates every tuple `(d₁, …, d_m)` with `Σ ℓ(d_j) ≤ L` and checks that
/// (a) each product is length-additive, (b) products are pairwise distinct
/// and (c) the number of tuples of total length `k` is the coefficient of
/// `u^k` in `W(u)`.
pub fn factorization_census(table: &ElementTable, scheme: &FactorizationScheme, l: usize) -> Result<CensusReport> {
    scheme.check(table)?;
    if l > table.bound() {
        return Err(Error::OutOfBound { bound: table.bound() });
    }
    let factors = scheme.factor_elements(table, l)?;
    let (_, series) = poincare_affine(table.system(), l)?;
    let expected: Vec<u64> = series.coeffs().iter().map(|c| c.to_u64().expect("nonnegative count")).collect();

    let mut state = CensusState {
        table,
        factors: &factors,
        budget: l,
        counts: vec![0; l + 1],
        seen: HashSet::new(),
        tuple: Vec::new(),
        witness: None,
        length_additive: true,
        distinct: true,
    };
    state.walk(0, ElementId::IDENTITY, 0)?;

    let counts_match = state.counts == expected;
    let mut witness = state.witness;
    if witness.is_none() && !counts_match {
        let k = (0..=l).find(|&k| state.counts[k] != expected[k]).expect("mismatch exists");
        witness = Some(CensusWitness {
            reason: format!("slice {k}: {} tuples, expected {}", state.counts[k], expected[k]),
            tuple: Vec::new(),
        });
    }
    let pass = state.length_additive && state.distinct && counts_match;
    Ok(CensusReport {
        type_tag: table.system().type_tag(),
        scheme: scheme.labels(),
        bound: l,
        slice_counts: state.counts,
        expected_counts: expected,
        length_additive: state.length_additive,
        distinct: state.distinct,
        counts_match,
        pass,
        witness,
    })
}

struct CensusState<'a> {
    table: &'a ElementTable,
    factors: &'a [Vec<ElementId>],
    budget: usize,
    counts: Vec<u64>,
    seen: HashSet<ElementId>,
    tuple: Vec<ElementId>,
    witness: Option<CensusWitness>,
    length_additive: bool,
    distinct: bool,
}

impl CensusState<'_> {
    fn walk(&mut self, depth: usize, product: ElementId, total: usize) -> Result<()> {
        if depth == self.factors.len() {
            self.counts[total] += 1;
            if self.table.length(product) != total {
                self.length_additive = false;
                self.record("product is not length-additive");
            } else if !self.seen.insert(product) {
                self.distinct = false;
                self.record("product repeats an earlier tuple");
            }
            return Ok(());
        }
        for &d in &self.factors[depth] {
            let l = self.table.length(d);
            if total + l > self.budget {
                continue;
            }
            let next = self.table.multiply(product, d)?.element;
            self.tuple.push(d);
            self.walk(depth + 1, next, total + l)?;
            self.tuple.pop();
        }
        Ok(())
    }

    fn record(&mut self, reason: &str) {
        if self.witness.is_none() {
            self.witness = Some(CensusWitness {
                reason: reason.to_string(),
                tuple: self.tuple.iter().map(|&w| format_word(self.table.element(w).word())).collect(),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    fn table(tag: &str, bound: usize) -> ElementTable {
        ElementTable::enumerate(&build_system(tag, None).unwrap(), bound).unwrap()
    }

    #[test]
    fn affine_a2_small_census() {
        let t = table("A2t", 6);
        let r = factorization_census(&t, &FactorizationScheme::for_table(&t).unwrap(), 4).unwrap();
        assert_eq!(r.slice_counts, vec![1, 3, 6, 9, 12]);
        assert!(r.pass);
    }

    #[test]
    fn c2_census_at_ten() {
        let t = table("C2t", 10);
        let r = factorization_census(&t, &FactorizationScheme::for_table(&t).unwrap(), 10).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn wrong_pairing_is_rejected() {
        let t = table("C2t", 6);
        let s = FactorizationScheme::for_type(StripType::G2);
        assert!(matches!(factorization_census(&t, &s, 4), Err(Error::InvalidScheme(_))));
    }

    #[test]
    fn g2_needs_h2_before_h1() {
        let t = table("G2t", 20);
        let scheme = FactorizationScheme::for_table(&t).unwrap();
        assert!(factorization_census(&t, &scheme, 20).unwrap().pass);
        let mut swapped = scheme.clone();
        swapped.factors.swap(1, 2);
        let r = factorization_census(&t, &swapped, 8).unwrap();
        assert!(!r.distinct);
    }

    #[test]
    fn census_catches_a_wrong_factor() {
        // the full parabolic W_{1,3} in place of its coset factor over-counts
        let t = table("A2t", 8);
        let mut scheme = FactorizationScheme::for_table(&t).unwrap();
        scheme.factors[4] = FactorSet::Parabolic(vec![0, 2]);
        let r = factorization_census(&t, &scheme, 6).unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_some());
    }
}
