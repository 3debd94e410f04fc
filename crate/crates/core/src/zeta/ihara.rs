use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::series::{Matrix, RationalFunction};
use crate::zeta::{DirectedEdge, Graph, ZetaFunction};

/// The non-backtracking edge operator: rows and columns are the directed
/// edges in [`Graph::directed_edges`] order, and `B[e, f] = 1` iff `f`
/// starts where `e` ends and is not `e` traversed backwards.
pub fn hashimoto_matrix(graph: &Graph) -> Result<Matrix<BigInt>> {
    if let Some(v) = graph.degrees().iter().position(|&d| d == 0) {
        return Err(Error::InvalidGraph(format!("vertex {v} is isolated")));
    }
    let edges = graph.directed_edges();
    let index: HashMap<DirectedEdge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut b = Matrix::zeros(edges.len(), edges.len());
    for (i, e) in edges.iter().enumerate() {
        let back = index[&e.reverse()];
        for (j, f) in edges.iter().enumerate() {
            if f.src == e.tgt && j != back {
                b[(i, j)] = BigInt::from(1);
            }
        }
    }
    Ok(b)
}

/// `Z(u) = det(I − B u)⁻¹` for the edge operator `B`.
pub fn ihara_zeta(graph: &Graph, order: usize) -> Result<ZetaFunction<BigInt>> {
    ZetaFunction::from_matrix(&hashimoto_matrix(graph)?, order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IharaReport {
    pub q: i64,
    pub vertices: usize,
    pub edges: usize,
    pub chi: i64,
    /// `det(I − B u)`, ascending coefficients.
    pub lhs: Value,
    /// `(1 − u²)^{−χ} det(I − A u + q u² I)` in lowest terms.
    pub rhs: String,
    pub pass: bool,
}

/// Checks `det(I − B u) = (1 − u²)^{−χ} det(I − A u + q u² I)` exactly for a
/// `(q+1)`-regular graph.
pub fn ihara_formula_check(graph: &Graph, q: i64) -> Result<IharaReport> {
    let expected = usize::try_from(q + 1).map_err(|_| Error::InvalidGraph(format!("q = {q} is negative")))?;
    for (v, &d) in graph.degrees().iter().enumerate() {
        if d != expected {
            return Err(Error::NotRegular { vertex: v, degree: d, expected });
        }
    }
    let lhs = hashimoto_matrix(graph)?.det_one_minus()?;

    let a = graph.adjacency();
    let n = graph.vertices();
    let mut m: Matrix<Poly<BigInt>> = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let diag = i == j;
            let c1 = a[(i, j)].neg();
            m[(i, j)] =
                Poly::new(vec![BigInt::from(diag as i64), c1, if diag { BigInt::from(q) } else { BigInt::from(0) }]);
        }
    }
    let chi = graph.euler_characteristic();
    let one_minus_u2 = RationalFunction::from_poly(Poly::one_minus(BigInt::from(1), 2));
    let rhs = RationalFunction::from_poly(m.det()).mul(&one_minus_u2.powi(-chi)?).reduced();
    let pass = RationalFunction::from_poly(lhs.clone()).equals(&rhs);
    Ok(IharaReport { q, vertices: n, edges: graph.edges().len(), chi, lhs: lhs.to_json(), rhs: rhs.to_string(), pass })
}

/// Closed non-backtracking tailless walks of each length `1..=n_max`, by
/// exhaustive search from every starting directed edge. Exponential in
/// `n_max`; meant as an independent check of `tr(Bⁿ)` on small graphs.
pub fn geodesic_oracle(graph: &Graph, n_max: usize) -> Vec<u64> {
    let edges = graph.directed_edges();
    let mut out_edges: Vec<Vec<DirectedEdge>> = vec![Vec::new(); graph.vertices()];
    for &e in &edges {
        out_edges[e.src].push(e);
    }
    let mut counts = vec![0u64; n_max];
    for &start in &edges {
        walk(&out_edges, start, start, 1, n_max, &mut counts);
    }
    counts
}

fn walk(
    out: &[Vec<DirectedEdge>],
    start: DirectedEdge,
    last: DirectedEdge,
    len: usize,
    n_max: usize,
    counts: &mut [u64],
) {
    // closed, and the wrap-around step start ← last is not a backtrack
    if last.tgt == start.src && start != last.reverse() {
        counts[len - 1] += 1;
    }
    if len == n_max {
        return;
    }
    for &next in &out[last.tgt] {
        if next != last.reverse() {
            walk(out, start, next, len + 1, n_max, counts);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Poly<BigInt> {
        Poly::from_i64s(c)
    }

    #[test]
    fn edge_operator_shapes() {
        let b = hashimoto_matrix(&Graph::complete(3)).unwrap();
        assert_eq!(b.rows(), 6);
        for i in 0..6 {
            assert_eq!((0..6).filter(|&j| !b[(i, j)].is_zero()).count(), 1);
        }
        let b = hashimoto_matrix(&Graph::complete(4)).unwrap();
        assert_eq!(b.rows(), 12);
        assert!((0..12).all(|i| (0..12).filter(|&j| !b[(i, j)].is_zero()).count() == 2));
        assert!(hashimoto_matrix(&Graph::path(2)).unwrap().is_zero());
        assert!(hashimoto_matrix(&Graph::new(3, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn triangle_and_square() {
        let z = ihara_zeta(&Graph::complete(3), 12).unwrap();
        assert_eq!(z.inverse_poly(), &poly(&[1, 0, 0, -1]).pow(2));
        let z = ihara_zeta(&Graph::cycle(4), 12).unwrap();
        assert_eq!(z.inverse_poly(), &poly(&[1, 0, 0, 0, -1]).pow(2));
        assert_eq!(z.primitive_counts().unwrap()[3], BigInt::from(2));
    }

    #[test]
    fn k4_check() {
        let g = Graph::complete(4);
        let z = ihara_zeta(&g, 6).unwrap();
        assert_eq!(z.traces()[2], BigInt::from(24));
        assert_eq!(geodesic_oracle(&g, 3)[2], 24);
        let r = ihara_formula_check(&g, 2).unwrap();
        assert!(r.pass);
        // (1−u²)²(1−u)(1−2u)(1+u+2u²)³
        let expected = poly(&[1, 0, -1]).pow(2).mul(&poly(&[1, -1])).mul(&poly(&[1, -2])).mul(&poly(&[1, 1, 2]).pow(3));
        assert_eq!(z.inverse_poly(), &expected);
    }

    #[test]
    fn formula_for_regular_graphs() {
        for (g, q) in [
            (Graph::complete(3), 1),
            (Graph::complete_bipartite(3, 3), 2),
            (Graph::petersen(), 2),
            (Graph::cycle(5), 1),
            (Graph::complete(5), 3),
        ] {
            assert!(ihara_formula_check(&g, q).unwrap().pass);
        }
        assert!(matches!(ihara_formula_check(&Graph::path(3), 1), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn oracle_matches_traces() {
        for g in [Graph::complete(4), Graph::petersen(), Graph::new(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]).unwrap()] {
            let z = ihara_zeta(&g, 9).unwrap();
            let traces: Vec<u64> = z.traces().iter().map(|t| u64::try_from(t).unwrap()).collect();
            assert_eq!(geodesic_oracle(&g, 9), traces);
            assert!(z.log_identity_holds().unwrap());
            z.primitive_counts().unwrap();
        }
    }

    #[test]
    fn trees_have_no_geodesics() {
        let star = Graph::complete_bipartite(1, 4);
        assert!(geodesic_oracle(&star, 8).iter().all(|&n| n == 0));
        assert_eq!(ihara_zeta(&star, 8).unwrap().inverse_poly(), &Poly::one());
    }
}
