//! Poincaré series of parabolic, finite and affine Coxeter groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::coxeter::{CoxeterSystem, ElementTable};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::series::{PowerSeries, RationalFunction};

/// `Σ_{w ∈ W_I} u^{ℓ(w)}`, read off the table.
pub fn poincare_parabolic(table: &ElementTable, generators: &[usize]) -> Result<Poly<BigInt>> {
    let mut coeffs = Vec::new();
    for w in table.parabolic(generators)? {
        let l = table.length(w);
        if coeffs.len() <= l {
            coeffs.resize(l + 1, 0i64);
        }
        coeffs[l] += 1;
    }
    Ok(Poly::from_i64s(&coeffs))
}

/// Poincaré polynomial of a finite Coxeter system by exhaustive enumeration.
pub fn finite_poincare(system: &CoxeterSystem) -> Result<Poly<BigInt>> {
    // the longest element is shorter than the element count
    let bound = crate::coxeter::element_limit();
    let table = ElementTable::enumerate(system, bound)?;
    let sizes: Vec<i64> = table.layers().iter().map(|l| l.len() as i64).collect();
    Ok(Poly::from_i64s(&sizes))
}

/// Poincaré polynomial of the parabolic subgroup `W_I`, enumerated as a
/// Coxeter system in its own right.
pub fn parabolic_poincare(system: &CoxeterSystem, generators: &[usize]) -> Result<Poly<BigInt>> {
    if generators.is_empty() {
        return Ok(Poly::one());
    }
    finite_poincare(&system.restrict(generators)?).map_err(|e| match e {
        Error::ElementLimit { .. } => Error::ParabolicNotContained { generators: generators.to_vec() },
        other => other,
    })
}

/// Every subset of `0..k` as a sorted index list, ordered by bitmask.
pub fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << k).map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect()).collect()
}

/// Poincaré polynomials of all proper parabolic subgroups.
pub fn proper_parabolics(system: &CoxeterSystem) -> Result<BTreeMap<Vec<usize>, Poly<BigInt>>> {
    let k = system.rank();
    subsets(k)
        .into_iter()
        .filter(|i| i.len() < k)
        .map(|i| {
            let p = parabolic_poincare(system, &i)?;
            Ok((i, p))
        })
        .collect()
}

fn sign(exp: usize) -> i64 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `W(u) = (Σ_{I ⊊ S} (−1)^{|I|+|S|+1} / W_I(u))⁻¹` for an affine system,
/// in lowest terms, together with its expansion through `u^order`.
pub fn poincare_affine(
    system: &CoxeterSystem,
    order: usize,
) -> Result<(RationalFunction<BigInt>, PowerSeries<BigInt>)> {
    if !system.is_affine() {
        return Err(Error::NotAffine(system.type_tag()));
    }
    let k = system.rank();
    let mut sum = RationalFunction::from_poly(Poly::zero());
    for (i, w_i) in proper_parabolics(system)? {
        let term = RationalFunction::new(Poly::constant(BigInt::from(sign(i.len() + k + 1))), w_i)?;
        sum = sum.add(&term);
    }
    let w = sum.inv()?.reduced();
    let series = w.expand(order);
    Ok((w, series))
}

/// `Alt(W)(u) = Π_{I ⊆ S} W_I(u)^{(−1)^{|I|+|S|}}`, the full-group factor
/// coming from [`poincare_affine`] for affine systems and from enumeration
/// for finite ones.
pub fn alt_product_rational(system: &CoxeterSystem) -> Result<RationalFunction<BigInt>> {
    let k = system.rank();
    let full = if system.is_affine() {
        poincare_affine(system, 0)?.0
    } else {
        RationalFunction::from_poly(finite_poincare(system)?)
    };
    let mut alt = full;
    for (i, w_i) in proper_parabolics(system)? {
        let f = RationalFunction::from_poly(w_i);
        alt = if (i.len() + k).is_multiple_of(2) { alt.mul(&f) } else { alt.div(&f)? };
    }
    Ok(alt.reduced())
}

/// `Σ_{I ⊆ S} (−1)^{|I|} W(u)/W_I(u)` for a finite system; equals
/// `u^{ℓ(w₀)}`.
pub fn finite_alternating_sum(system: &CoxeterSystem) -> Result<Poly<BigInt>> {
    let k = system.rank();
    let w = finite_poincare(system)?;
    let mut total = Poly::zero();
    for i in subsets(k) {
        let w_i = parabolic_poincare(system, &i)?;
        let q =
            w.div_exact(&w_i).ok_or_else(|| Error::Identity(format!("W_I(u) does not divide W(u) for I = {i:?}")))?;
        total = if i.len() % 2 == 0 { total.add(&q) } else { total.sub(&q) };
    }
    Ok(total)
}

/// Counts per length of a table, as a series through the table bound.
pub fn layer_series(table: &ElementTable) -> PowerSeries<BigInt> {
    let sizes = table.layer_sizes();
    PowerSeries::new(sizes.iter().map(|&n| BigInt::from(n)).collect(), table.bound())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;
    use crate::series::CyclotomicProduct;

    fn cyc(degrees: &[u32]) -> RationalFunction<BigInt> {
        CyclotomicProduct::from_degrees(degrees).to_rational_function()
    }

    #[test]
    fn parabolic_polynomials() {
        let t = ElementTable::enumerate(&build_system("A2t", None).unwrap(), 6).unwrap();
        assert_eq!(poincare_parabolic(&t, &[]).unwrap(), Poly::one());
        assert_eq!(poincare_parabolic(&t, &[0, 1]).unwrap(), Poly::from_i64s(&[1, 2, 2, 1]));
        let g = build_system("G2t", None).unwrap();
        assert_eq!(parabolic_poincare(&g, &[1, 2]).unwrap(), Poly::from_i64s(&[1, 2, 1]));
    }

    #[test]
    fn affine_series_match_enumeration() {
        for tag in ["A1t", "A2t", "C2t", "G2t", "B3t"] {
            let sys = build_system(tag, None).unwrap();
            let (_, series) = poincare_affine(&sys, 14).unwrap();
            let table = ElementTable::enumerate(&sys, 14).unwrap();
            assert_eq!(series, layer_series(&table), "{tag}");
        }
    }

    #[test]
    fn affine_a2_closed_form() {
        let (w, s) = poincare_affine(&build_system("A2t", None).unwrap(), 4).unwrap();
        let expected = RationalFunction::new(
            Poly::from_i64s(&[1, 1]).mul(&Poly::from_i64s(&[1, 1, 1])),
            Poly::from_i64s(&[1, -1]).mul(&Poly::from_i64s(&[1, 0, -1])),
        )
        .unwrap();
        assert!(w.equals(&expected));
        assert_eq!(s.coeffs(), &[1, 3, 6, 9, 12].map(BigInt::from));
        let (w, _) = poincare_affine(&build_system("A1t", None).unwrap(), 4).unwrap();
        assert!(w.equals(&RationalFunction::new(Poly::from_i64s(&[1, 1]), Poly::from_i64s(&[1, -1])).unwrap()));
    }

    #[test]
    fn rank_two_alternating_products() {
        for (tag, degrees) in [("A2t", [3, 3]), ("C2t", [4, 3]), ("G2t", [5, 3])] {
            let alt = alt_product_rational(&build_system(tag, None).unwrap()).unwrap();
            assert!(alt.inv().unwrap().equals(&cyc(&degrees)), "{tag}");
        }
    }

    #[test]
    fn finite_alternating_sum_is_top_monomial() {
        for (tag, top) in [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6)] {
            let sys = build_system(tag, None).unwrap();
            assert_eq!(finite_alternating_sum(&sys).unwrap(), Poly::monomial(BigInt::from(1), top), "{tag}");
        }
    }

    #[test]
    fn not_affine_is_rejected() {
        assert!(matches!(poincare_affine(&build_system("A2", None).unwrap(), 3), Err(Error::NotAffine(_))));
    }
}
