use num_bigint::BigInt;
use serde::Serialize;

use crate::coxeter::positive_roots;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootsys::roots::height;
use crate::rootsys::RootSystem;
use crate::series::{subsets, CyclotomicProduct, RationalFunction};

/// `(1 − u^{t+1}) / (1 − u^t)`.
fn height_factor(t: i64) -> CyclotomicProduct {
    let mut p = CyclotomicProduct::factor(t as u32 + 1, 1);
    p.push(t as u32, -1);
    p
}

fn product_over_heights(heights: impl IntoIterator<Item = i64>) -> CyclotomicProduct {
    heights.into_iter().fold(CyclotomicProduct::one(), |acc, t| acc.mul(&height_factor(t)))
}

/// `W(u) = Π_{a∈R⁺} (1−u^{ht a+1})/(1−u^{ht a})` and
/// `W̃(u) = (1−u^h)^{−n} Π_{a∈P} (1−u^{ht a+1})/(1−u^{ht a})`.
pub fn macdonald_cyclotomic(rs: &RootSystem) -> (CyclotomicProduct, CyclotomicProduct) {
    let finite = product_over_heights(rs.heights());
    let mut affine = product_over_heights(rs.window().into_iter().map(|a| a.height));
    affine.push(rs.coxeter_number() as u32, -(rs.rank() as i64));
    (finite, affine)
}

pub fn macdonald_series(rs: &RootSystem) -> (RationalFunction<BigInt>, RationalFunction<BigInt>) {
    let (w, wt) = macdonald_cyclotomic(rs);
    (w.to_rational_function(), wt.to_rational_function())
}

/// Heights of the sincere roots in `R⁺` and of the sincere roots `1 − a` in
/// `P`, each ascending.
pub fn sincere_heights(rs: &RootSystem) -> (Vec<i64>, Vec<i64>) {
    let n = rs.rank();
    let mut finite = Vec::new();
    let mut affine = Vec::new();
    for a in rs.window() {
        if a.support.len() == n && !a.shifted {
            finite.push(a.height);
        } else if a.support.len() == n + 1 {
            affine.push(a.height);
        }
    }
    finite.sort();
    affine.sort();
    (finite, affine)
}

/// `Alt(W)` and `Alt(W̃)` as products over sincere roots:
/// `Π_{I(a)=S} (1−u^{ht a+1})/(1−u^{ht a})` and
/// `(1−u^h)^{−n} Π_{I(1−a)=S̃} (1−u^{h−ht a+1})/(1−u^{h−ht a})`.
pub fn alt_cyclotomic(rs: &RootSystem) -> (CyclotomicProduct, CyclotomicProduct) {
    let (fin, aff) = sincere_heights(rs);
    let mut affine = product_over_heights(aff);
    affine.push(rs.coxeter_number() as u32, -(rs.rank() as i64));
    (product_over_heights(fin), affine)
}

pub fn alt_via_sincere(rs: &RootSystem) -> (RationalFunction<BigInt>, RationalFunction<BigInt>) {
    let (a, b) = alt_cyclotomic(rs);
    (a.to_rational_function(), b.to_rational_function())
}

/// The same two alternating products computed straight from the Möbius
/// sum `Π_{I} W_I(u)^{(−1)^{|I|+|S|}}`, with each `W_I` from Macdonald's
/// formula on the sub-diagram `I` of the (extended) Dynkin diagram.
pub fn alt_subset_product(rs: &RootSystem) -> Result<(CyclotomicProduct, CyclotomicProduct)> {
    let t = rs.cartan_type();
    let (w, wt) = macdonald_cyclotomic(rs);
    let finite = mobius(&t.cartan_matrix(), w)?;
    let affine = mobius(&t.affine_cartan_matrix(), wt)?;
    Ok((finite, affine))
}

fn mobius(cartan: &[Vec<i64>], full: CyclotomicProduct) -> Result<CyclotomicProduct> {
    let k = cartan.len();
    let mut out = full;
    for i in subsets(k) {
        if i.len() == k {
            continue;
        }
        let sub: Vec<Vec<i64>> = i.iter().map(|&r| i.iter().map(|&c| cartan[r][c]).collect()).collect();
        let w_i = product_over_heights(positive_roots(&sub)?.iter().map(|a| height(a)));
        let sign = if (i.len() + k).is_multiple_of(2) { 1 } else { -1 };
        out = out.mul(&w_i.powi(sign));
    }
    Ok(out)
}

/// One row of the exponent table: `Alt(W̃)(u)⁻¹ = Π (1 − u^{d_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentRow {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub rank: usize,
    pub h: i64,
    pub degrees: Vec<u32>,
}

impl ExponentRow {
    pub fn csv_record(&self) -> String {
        let mut fields = vec![self.type_tag.clone(), self.rank.to_string(), self.h.to_string()];
        fields.extend(self.degrees.iter().map(ToString::to_string));
        fields.join(",")
    }

    /// Header naming `d_1 … d_max_rank`; shorter rows simply end early.
    pub fn csv_header(max_rank: usize) -> String {
        let mut fields = vec!["type".to_string(), "rank".to_string(), "h".to_string()];
        fields.extend((1..=max_rank).map(|i| format!("d_{i}")));
        fields.join(",")
    }
}

/// CSV for a list of rows, header included, newline-terminated.
pub fn exponent_csv(rows: &[ExponentRow]) -> String {
    let max_rank = rows.iter().map(|r| r.rank).max().unwrap_or(0);
    let mut out = ExponentRow::csv_header(max_rank);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_record());
        out.push('\n');
    }
    out
}

/// The degrees `d₁ ≤ … ≤ d_n` with `Alt(W̃)(u)⁻¹ = Π (1 − u^{d_i})`.
///
/// Errors if the inverse is not a polynomial, if the sincere-root route and
/// the subset-product route disagree, or if `n+1 = d₁ ≤ d_n ≤ h` fails.
pub fn exponent_table(rs: &RootSystem) -> Result<ExponentRow> {
    let (_, alt) = alt_cyclotomic(rs);
    let (_, check) = alt_subset_product(rs)?;
    if alt != check {
        return Err(Error::Identity(format!("{}: sincere-root and subset products differ", rs.name())));
    }
    let inv = alt.inv();
    let poly = inv
        .to_rational_function::<BigInt>()
        .as_polynomial()
        .ok_or_else(|| Error::Identity(format!("{}: Alt(W~)(u)^-1 = {inv} is not a polynomial", rs.name())))?;
    let degrees = inv
        .degrees()
        .ok_or_else(|| Error::Identity(format!("{}: Alt(W~)(u)^-1 = {inv} is not a product of (1-u^d)", rs.name())))?;
    debug_assert_eq!(
        poly,
        degrees.iter().fold(Poly::one(), |p, &d| p.mul(&Poly::one_minus(BigInt::from(1), d as usize)))
    );

    let n = rs.rank();
    let h = rs.coxeter_number();
    if degrees.len() != n || degrees[0] as usize != n + 1 || i64::from(degrees[n - 1]) > h {
        return Err(Error::Identity(format!("{}: degrees {degrees:?} violate n+1 = d_1 <= d_n <= h", rs.name())));
    }
    Ok(ExponentRow { type_tag: rs.name(), rank: n, h, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, CartanType, CoxeterSystem};
    use crate::series::{alt_product_rational, finite_poincare, poincare_affine};

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    fn cyc(num: &[u32], den: &[u32]) -> CyclotomicProduct {
        CyclotomicProduct::from_degrees(num).mul(&CyclotomicProduct::from_degrees(den).inv())
    }

    #[test]
    fn finite_poincare_examples() {
        let (w, _) = macdonald_series(&rs("A2"));
        assert_eq!(w.as_polynomial().unwrap(), Poly::from_i64s(&[1, 2, 2, 1]));
        let (w, _) = macdonald_series(&rs("G2"));
        let expected = Poly::from_i64s(&[1, 1]).mul(&Poly::from_i64s(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(w.as_polynomial().unwrap(), expected);
    }

    #[test]
    fn matches_enumeration_up_to_rank_four() {
        for t in CartanType::catalogue(4) {
            let (w, _) = macdonald_series(&RootSystem::new(t));
            let bfs = finite_poincare(&CoxeterSystem::finite(t)).unwrap();
            assert_eq!(w.as_polynomial().unwrap(), bfs, "{t}");
        }
    }

    #[test]
    fn affine_series_matches_subset_formula() {
        for (tag, name) in [("A1t", "A1"), ("A2t", "A2"), ("C2t", "C2"), ("G2t", "G2"), ("B3t", "B3")] {
            let (_, wt) = macdonald_series(&rs(name));
            let (direct, _) = poincare_affine(&build_system(tag, None).unwrap(), 0).unwrap();
            assert!(wt.equals(&direct), "{tag}");
        }
    }

    #[test]
    fn sincere_examples() {
        // the highest root 3α₁+2α₂ has height 5 and is sincere as well
        assert_eq!(sincere_heights(&rs("G2")), (vec![2, 3, 4, 5], vec![3, 4, 5, 5]));
        assert_eq!(sincere_heights(&rs("B3")).0, vec![3, 4, 5]);
        for n in 1..=8 {
            let (fin, aff) = sincere_heights(&rs(&format!("A{n}")));
            assert_eq!(fin, vec![n as i64]);
            assert!(aff.is_empty());
        }
    }

    #[test]
    fn finite_alt_examples() {
        assert_eq!(alt_cyclotomic(&rs("A1")).0, cyc(&[2], &[1]));
        assert_eq!(alt_cyclotomic(&rs("G2")).0, cyc(&[6], &[2]));
        assert_eq!(alt_cyclotomic(&rs("E6")).0, cyc(&[12, 9], &[8, 6]));
        assert_eq!(alt_cyclotomic(&rs("A2")).1.inv(), cyc(&[3, 3], &[]));
    }

    #[test]
    fn sincere_route_agrees_with_group_subset_product() {
        for (tag, name) in
            [("A1", "A1"), ("A2", "A2"), ("B2", "B2"), ("G2", "G2"), ("A2t", "A2"), ("C2t", "C2"), ("G2t", "G2")]
        {
            let sys = build_system(tag, None).unwrap();
            let direct = alt_product_rational(&sys).unwrap();
            let (fin, aff) = alt_via_sincere(&rs(name));
            let ours = if sys.is_affine() { aff } else { fin };
            assert!(ours.equals(&direct), "{tag}");
        }
    }

    #[test]
    fn both_routes_agree_everywhere() {
        for t in CartanType::catalogue(8) {
            let r = RootSystem::new(t);
            let (a, b) = alt_cyclotomic(&r);
            assert_eq!(alt_subset_product(&r).unwrap(), (a, b), "{t}");
        }
    }

    #[test]
    fn exponent_rows() {
        assert_eq!(exponent_table(&rs("E8")).unwrap().degrees, vec![9, 11, 13, 14, 17, 19, 23, 29]);
        assert_eq!(exponent_table(&rs("G2")).unwrap().degrees, vec![3, 5]);
        assert_eq!(exponent_table(&rs("A4")).unwrap().degrees, vec![5; 4]);
        let row = exponent_table(&rs("D5")).unwrap();
        assert_eq!(row.csv_record(), "D5,5,8,6,7,8,8,8");
    }
}
