use serde::Serialize;

use crate::coxeter::ElementTable;
use crate::error::{Error, Result};
use crate::hecke::{twisted_series, FactorSet, Representation};
use crate::ring::Ring;
use crate::series::{det_series, proper_parabolics, Matrix, MatrixSeries, RationalFunction};
use crate::strips::FactorizationScheme;

/// `Σ_{ℓ(w) ≤ L} ρ(e_w) u^{ℓ(w)}` straight from the table.
pub fn truncated_group_series<R: Ring>(
    table: &ElementTable,
    rep: &Representation<R>,
    l: usize,
) -> Result<MatrixSeries<R>> {
    if l > table.bound() {
        return Err(Error::OutOfBound { bound: table.bound() });
    }
    let d = rep.dim();
    let mut coeffs = vec![Matrix::zeros(d, d); l + 1];
    for (k, layer) in table.layers().iter().enumerate().take(l + 1) {
        for &w in layer {
            coeffs[k].add_assign(rep.image(w));
        }
    }
    Ok(MatrixSeries::new(d, coeffs, l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub scheme: Vec<String>,
    #[serde(rename = "L")]
    pub bound: usize,
    pub dim: usize,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

/// Compares `Σ_{ℓ(w) ≤ L} ρ(e_w)u^{ℓ(w)}` with the ordered product
/// `D₁(ρ,u)⋯D_m(ρ,u)` coefficient by coefficient through `u^L`.
pub fn verify_maintheorem1<R: Ring>(
    table: &ElementTable,
    scheme: &FactorizationScheme,
    rep: &Representation<R>,
    l: usize,
) -> Result<FactorizationReport> {
    scheme.check(table)?;
    let lhs = truncated_group_series(table, rep, l)?;
    let mut rhs = MatrixSeries::identity(rep.dim(), l);
    for f in scheme.factors() {
        rhs = rhs.mul(&twisted_series(table, f, rep)?.expand(l));
    }
    let first_mismatch = (0..=l).find(|&k| lhs.coeff(k) != rhs.coeff(k));
    Ok(FactorizationReport {
        type_tag: table.system().type_tag(),
        scheme: scheme.labels(),
        bound: l,
        dim: rep.dim(),
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Both sides of the determinant identity, exactly.
#[derive(Clone, Debug)]
pub struct Corollary1<R> {
    /// `det(I − ρ(e_{w₁})u^{ℓ₁})⁻¹ · det(I − ρ(e_{w₂})u^{ℓ₂})⁻¹`
    pub lhs: RationalFunction<R>,
    /// `Π_{I ⊆ S} det W_I(ρ,u)^{(−1)^{|I|+|S|}}`
    pub rhs: RationalFunction<R>,
    /// `det W(ρ,u)` from the factorization.
    pub det_w: RationalFunction<R>,
    pub report: Corollary1Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corollary1Report {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub dim: usize,
    pub strip_lengths: Vec<usize>,
    pub cross_check_order: usize,
    pub cross_check_pass: bool,
    pub pass: bool,
}

/// Verifies `det H₁(ρ,u) · det H₂(ρ,u) = det Alt(W)(ρ,u)` as an exact identity
/// of rational functions. The full-group factor `det W(ρ,u)` is the product
/// of the factor determinants, and is compared with the determinant of the
/// truncated group series through `u^check_order`.
pub fn verify_corollary1<R: Ring>(
    table: &ElementTable,
    scheme: &FactorizationScheme,
    rep: &Representation<R>,
    check_order: usize,
) -> Result<Corollary1<R>> {
    scheme.check(table)?;
    let system = table.system();
    let k = system.rank();

    let mut lhs = RationalFunction::one();
    let mut strip_lengths = Vec::new();
    for word in scheme.strip_words() {
        let h = twisted_series(table, &FactorSet::Cyclic(word.clone()), rep)?;
        lhs = lhs.mul(&h.det()?);
        strip_lengths.push(word.len());
    }

    let mut det_w = RationalFunction::one();
    for f in scheme.factors() {
        det_w = det_w.mul(&twisted_series(table, f, rep)?.det()?);
    }

    let mut rhs = det_w.clone();
    for i in proper_parabolics(system)?.into_keys() {
        let d = twisted_series(table, &FactorSet::Parabolic(i.clone()), rep)?.det()?;
        rhs = if (i.len() + k).is_multiple_of(2) { rhs.mul(&d) } else { rhs.div(&d)? };
    }

    let truncated = det_series(&truncated_group_series(table, rep, check_order)?)?;
    let cross_check_pass = truncated == det_w.expand(check_order);
    let pass = cross_check_pass && lhs.equals(&rhs);
    let report = Corollary1Report {
        type_tag: system.type_tag(),
        dim: rep.dim(),
        strip_lengths,
        cross_check_order: check_order,
        cross_check_pass,
        pass,
    };
    Ok(Corollary1 { lhs, rhs, det_w, report })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::coxeter::build_system;
    use crate::hecke::{characters, reflection_representation, Character};
    use crate::poly::Poly;
    use crate::ring::QPoly;

    fn table(tag: &str, bound: usize) -> ElementTable {
        ElementTable::enumerate(&build_system(tag, None).unwrap(), bound).unwrap()
    }

    #[test]
    fn factorization_with_characters() {
        for tag in ["A2t", "C2t", "G2t"] {
            let t = table(tag, 8);
            let scheme = FactorizationScheme::for_table(&t).unwrap();
            for c in characters(t.system()) {
                let rho = Representation::validate(&t, c.matrices(), QPoly::q()).unwrap();
                let r = verify_maintheorem1(&t, &scheme, &rho, 8).unwrap();
                assert!(r.pass, "{tag} {c}: {r:?}");
            }
        }
    }

    #[test]
    fn factorization_with_reflection_representation() {
        let t = table("C2t", 7);
        let rho = reflection_representation(&t).unwrap();
        let r = verify_maintheorem1(&t, &FactorizationScheme::for_table(&t).unwrap(), &rho, 7).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn index_character_on_a2() {
        let t = table("A2t", 6);
        let rho = Representation::validate(&t, Character::index(3).matrices(), QPoly::q()).unwrap();
        let c = verify_corollary1(&t, &FactorizationScheme::for_table(&t).unwrap(), &rho, 6).unwrap();
        assert!(c.report.pass);
        let h = Poly::one_minus(QPoly::q().pow(3), 3);
        let expected = RationalFunction::new(Poly::one(), h.mul(&h)).unwrap();
        assert!(c.lhs.equals(&expected));
    }

    #[test]
    fn corollary_with_every_character_and_reflection_rep() {
        for tag in ["A2t", "C2t", "G2t"] {
            let t = table(tag, 8);
            let scheme = FactorizationScheme::for_table(&t).unwrap();
            for c in characters(t.system()) {
                let rho = Representation::validate(&t, c.matrices(), QPoly::q()).unwrap();
                assert!(verify_corollary1(&t, &scheme, &rho, 8).unwrap().report.pass, "{tag} {c}");
            }
            let rho = reflection_representation(&t).unwrap();
            assert!(verify_corollary1(&t, &scheme, &rho, 6).unwrap().report.pass, "{tag} reflection");
        }
    }

    #[test]
    fn integer_scalars_work_too() {
        let t = table("G2t", 6);
        let rho = reflection_representation(&t).unwrap().map_scalars(&t, |c| c.0.eval(&BigInt::from(1))).unwrap();
        assert!(verify_corollary1(&t, &FactorizationScheme::for_table(&t).unwrap(), &rho, 6).unwrap().report.pass);
    }
}
