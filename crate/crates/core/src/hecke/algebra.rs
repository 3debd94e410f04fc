use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coxeter::{ElementId, ElementTable};
use crate::error::{Error, Result};
use crate::ring::{QPoly, Ring};

/// A finite combination `Σ c_w e_w` in the Hecke algebra, coefficients
/// polynomials in `q`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<ElementId, QPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(ElementId::IDENTITY)
    }

    pub fn basis(w: ElementId) -> Self {
        Self::term(w, QPoly::one())
    }

    pub fn term(w: ElementId, c: QPoly) -> Self {
        let mut x = Self::zero();
        x.add_term(w, &c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ElementId, QPoly)>) -> Self {
        let mut x = Self::zero();
        for (w, c) in terms {
            x.add_term(w, &c);
        }
        x
    }

    pub fn terms(&self) -> &BTreeMap<ElementId, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: ElementId) -> QPoly {
        self.terms.get(&w).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: ElementId, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(QPoly::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&w, c) in &rhs.terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn scale(&self, c: &QPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(&w, x)| (w, x.mul(c))))
    }

    /// `x·e_s` by the defining relations.
    pub fn mul_generator(&self, table: &ElementTable, s: usize) -> Result<Self> {
        let q = QPoly::q();
        let q_minus_1 = q.sub(&QPoly::one());
        let mut out = Self::zero();
        for (&w, c) in &self.terms {
            let ws = table.right_neighbor(w, s).ok_or(Error::OutOfBound { bound: table.bound() })?;
            if table.length(ws) > table.length(w) {
                out.add_term(ws, c);
            } else {
                out.add_term(w, &c.mul(&q_minus_1));
                out.add_term(ws, &c.mul(&q));
            }
        }
        Ok(out)
    }

    /// Coefficients with `q` specialized to an integer.
    pub fn specialize(&self, q: i64) -> BTreeMap<ElementId, BigInt> {
        let q = BigRational::from_integer(BigInt::from(q));
        self.terms.iter().map(|(&w, c)| (w, c.eval(&q).to_integer())).filter(|(_, c)| !Ring::is_zero(c)).collect()
    }

    pub fn display(&self, table: &ElementTable) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms.iter().map(|(&w, c)| format!("({c})e[{}]", table.word_string(w))).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})e{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Product in `H_q(W,S)`: `y` is decomposed along reduced words and `x` is
/// multiplied from the right one generator at a time.
pub fn hecke_mul(table: &ElementTable, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
    let mut out = HeckeElement::zero();
    for (&v, c) in &y.terms {
        let mut acc = x.scale(c);
        for &s in table.element(v).word() {
            acc = acc.mul_generator(table, s)?;
        }
        out = out.add(&acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    fn table() -> ElementTable {
        ElementTable::enumerate(&build_system("A2t", None).unwrap(), 8).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let t = table();
        let s = t.generator(0).unwrap();
        let es = HeckeElement::basis(s);
        let sq = hecke_mul(&t, &es, &es).unwrap();
        let expected =
            HeckeElement::from_terms([(s, QPoly::q().sub(&QPoly::one())), (ElementId::IDENTITY, QPoly::q())]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn length_additive_products_are_basis_elements() {
        let t = table();
        let (s1, s2) = (t.generator(0).unwrap(), t.generator(1).unwrap());
        let p = hecke_mul(&t, &HeckeElement::basis(s1), &HeckeElement::basis(s2)).unwrap();
        assert_eq!(p, HeckeElement::basis(t.element_of_word(&[0, 1]).unwrap()));
    }

    #[test]
    fn q_equal_one_is_the_group_algebra() {
        let t = table();
        for w in t.ids().filter(|&w| t.length(w) <= 4) {
            for v in t.ids().filter(|&v| t.length(v) <= 4) {
                let p = hecke_mul(&t, &HeckeElement::basis(w), &HeckeElement::basis(v)).unwrap();
                let g = t.multiply(w, v).unwrap().element;
                assert_eq!(p.specialize(1), BTreeMap::from([(g, BigInt::from(1))]));
            }
        }
    }

    #[test]
    fn out_of_bound_support_is_an_error() {
        let t = table();
        let far = t.layers()[8][0];
        let up = (0..3).find(|&s| !t.has_right_descent(far, s)).unwrap();
        let es = HeckeElement::basis(t.generator(up).unwrap());
        assert_eq!(hecke_mul(&t, &HeckeElement::basis(far), &es).unwrap_err(), Error::OutOfBound { bound: 8 });
    }
}
