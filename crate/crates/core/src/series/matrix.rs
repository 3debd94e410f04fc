use std::fmt;
use std::ops::{Index, IndexMut};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

/// Dense square-or-rectangular matrix over a [`Ring`], row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// The permutation matrix with a 1 at `(i, perm[i])`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m[(i, j)] = R::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                a.add_assign(b);
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Product skipping zero entries of the left factor, so sparse left
    /// operands (permutation matrices, low-degree series coefficients) are cheap.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                if a.is_one() {
                    for (o, b) in orow.iter_mut().zip(brow) {
                        if !b.is_zero() {
                            o.add_assign(b);
                        }
                    }
                } else {
                    for (o, b) in orow.iter_mut().zip(brow) {
                        if !b.is_zero() {
                            o.add_assign(&a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> R {
        let mut t = R::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign(&self[(i, i)]);
        }
        t
    }

    /// `tr(self · rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> R {
        let mut t = R::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if !a.is_zero() {
                    let b = &rhs[(k, i)];
                    if !b.is_zero() {
                        t.add_assign(&a.mul(b));
                    }
                }
            }
        }
        t
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Index classes of the block-diagonal structure: connected components of
    /// the graph linking `i` and `j` whenever entry `(i, j)` or `(j, i)` is
    /// nonzero. The determinant is the product of the blocks' determinants.
    pub fn diagonal_blocks(&self) -> Vec<Vec<usize>> {
        assert!(self.is_square(), "blocks are defined for square matrices");
        let n = self.rows;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !self[(i, j)].is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r]].push(i);
        }
        blocks
    }

    /// Fraction-free (Bareiss) elimination with row pivoting. Every division
    /// is exact in an integral domain.
    pub fn det_bareiss(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return R::zero();
                };
                a.swap_rows(k, p);
                sign_flip = !sign_flip;
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.mul(&a[(i, j)]).sub(&a[(i, k)].mul(&a[(k, j)]));
                    a[(i, j)] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[(i, k)] = R::zero();
            }
            prev = pivot;
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Determinant, splitting into diagonal blocks first.
    pub fn det(&self) -> R {
        let blocks = self.diagonal_blocks();
        if blocks.len() == 1 {
            return self.det_bareiss();
        }
        let mut d = R::one();
        for b in blocks {
            d = d.mul(&self.submatrix(&b).det_bareiss());
            if d.is_zero() {
                break;
            }
        }
        d
    }

    /// `tr(A^k)` for `k = 1..=n`.
    pub fn power_traces(&self, n: usize) -> Vec<R> {
        let mut out = Vec::with_capacity(n);
        let mut p = self.clone();
        for k in 1..=n {
            out.push(p.trace());
            if k < n {
                p = self.mul(&p);
            }
        }
        out
    }

    /// `det(I - A·t)` as a polynomial in `t`, from the power sums
    /// `tr(A^k)` through Newton's identities. Exact in characteristic zero;
    /// each division by `k` is exact because the result has coefficients
    /// in the ring.
    pub fn det_one_minus(&self) -> Result<Poly<R>> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut out = Poly::one();
        for block in self.diagonal_blocks() {
            let sub = self.submatrix(&block);
            out = out.mul(&sub.det_one_minus_block()?);
        }
        Ok(out)
    }

    fn det_one_minus_block(&self) -> Result<Poly<R>> {
        let n = self.rows;
        let p = self.power_traces(n);
        // c_k = -(1/k) Σ_{i=1}^{k} p_i c_{k-i}, with det(I - tA) = Σ c_k t^k
        let mut c: Vec<R> = vec![R::one()];
        for k in 1..=n {
            let mut acc = R::zero();
            for i in 1..=k {
                acc.add_assign(&p[i - 1].mul(&c[k - i]));
            }
            let v = acc.div_exact_i64(k as i64).ok_or(Error::InexactDivision { divisor: k as i64 })?;
            c.push(v.neg());
        }
        Ok(Poly::new(c))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array((0..self.rows).map(|i| Value::Array(self.row(i).iter().map(Ring::to_json).collect())).collect())
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Entrywise lift of a constant matrix to polynomial entries.
pub fn to_poly_matrix<R: Ring>(m: &Matrix<R>) -> Matrix<Poly<R>> {
    m.map(|c| Poly::constant(c.clone()))
}
