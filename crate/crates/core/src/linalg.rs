//! Dense matrices over the rationals with exact Gaussian elimination.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` string (denominator positive, reduced; integers keep `/1`).
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Result of a row reduction: the reduced matrix and its pivot columns.
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds an `rows x cols` matrix, needed when a dimension is zero.
    pub fn from_rows_shaped(rows: usize, cols: usize, entries: Vec<Vec<Q>>) -> Self {
        if rows == 0 || cols == 0 {
            return Self::zeros(rows, cols);
        }
        let m = Self::from_rows(entries);
        assert_eq!((m.rows, m.cols), (rows, cols));
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&x| q(x)).collect() }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn add_scaled(&mut self, other: &Matrix, s: &Q) {
        assert_eq!(self.shape(), other.shape());
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for c in 0..self.cols {
                out[(i, c)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out[(r, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            if !inv.is_one() {
                for c in col..m.cols {
                    if !m[(row, c)].is_zero() {
                        let v = &m[(row, c)] * &inv;
                        m[(row, c)] = v;
                    }
                }
            }
            let pivot_row: Vec<(usize, Q)> =
                (col..m.cols).filter(|&c| !m[(row, c)].is_zero()).map(|c| (c, m[(row, c)].clone())).collect();
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for (c, v) in &pivot_row {
                    let delta = v * &f;
                    m[(r, *c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.rows > self.cols {
            return self.transpose().echelon().pivots.len();
        }
        self.echelon().pivots.len()
    }

    /// Basis of the right null space `{x : self * x = 0}` as columns.
    pub fn nullspace(&self) -> Matrix {
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis[(f, j)] = Q::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                let v = &ech.reduced[(r, f)];
                if !v.is_zero() {
                    basis[(p, j)] = -v.clone();
                }
            }
        }
        basis
    }

    /// Rows spanning the left null space `{y : y * self = 0}`.
    pub fn left_nullspace(&self) -> Matrix {
        self.transpose().nullspace().transpose()
    }

    /// Linearly independent columns spanning the column space.
    pub fn column_basis(&self) -> Matrix {
        let ech = self.echelon();
        self.select_cols(&ech.pivots)
    }

    /// Solves `self * x = b` for a single right-hand side.
    pub fn solve_vec(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()]));
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Solves `self * X = b` column by column.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = ech.reduced[(r, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows))?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A left inverse `L` with `L * self = I`, for full column rank.
    pub fn left_inverse(&self) -> Matrix {
        let t = self.transpose();
        let gram = t.mul(self);
        let inv = gram.inverse().expect("left_inverse needs full column rank");
        inv.mul(&t)
    }

    /// A right inverse `R` with `self * R = I`, for full row rank.
    pub fn right_inverse(&self) -> Matrix {
        self.transpose().left_inverse().transpose()
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).fold(Q::zero(), |a, b| a + b)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    /// Characteristic polynomial `det(xI - self)`, coefficients from degree 0 up.
    /// Uses the Faddeev-LeVerrier recursion, exact in characteristic zero.
    pub fn char_poly(&self) -> Vec<Q> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let c = -(self.mul(&m).trace()) / q(k as i64);
            coeffs[n - k] = c;
        }
        coeffs
    }

    /// Flattened row-major vector, used when treating matrices as vectors.
    pub fn to_vec(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Q>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn max_abs_height(&self) -> BigInt {
        self.data.iter().map(|x| x.numer().abs().max(x.denom().abs())).max().unwrap_or_else(BigInt::zero)
    }
}

/// Rank of a family of vectors of equal length.
pub fn rank_of_vectors(vectors: &[Vec<Q>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// Rational roots of a polynomial given by coefficients from degree 0 up.
/// Candidates come from the rational root theorem; returns distinct roots.
pub fn rational_roots(coeffs: &[Q]) -> Vec<Q> {
    use num_integer::Integer;
    let mut c: Vec<Q> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    if c.len() <= 1 {
        return roots;
    }
    if c[0].is_zero() {
        roots.push(Q::zero());
        let shift = c.iter().position(|x| !x.is_zero()).unwrap();
        c.drain(..shift);
    }
    if c.len() <= 1 {
        return roots;
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let lead = ints.last().unwrap().abs();
    let constant = ints[0].abs();
    let Some(ps) = small_divisors(&constant) else {
        return roots;
    };
    let Some(qs) = small_divisors(&lead) else {
        return roots;
    };
    let mut found: Vec<Q> = Vec::new();
    for p in &ps {
        for d in &qs {
            for sign in [1i64, -1] {
                let cand = Q::new(p * BigInt::from(sign), d.clone());
                if found.contains(&cand) {
                    continue;
                }
                if eval_poly(&c, &cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    roots.extend(found);
    roots
}

fn eval_poly(c: &[Q], x: &Q) -> Q {
    c.iter().rev().fold(Q::zero(), |acc, a| acc * x + a)
}

/// Positive divisors by trial division; gives up above a size bound.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    use num_traits::ToPrimitive;
    let n = n.to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 2_000_000 {
            return None;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_nullspace_roundtrip() {
        let m = Matrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        let n = m.nullspace();
        assert_eq!(n.cols(), 2);
        assert!(m.mul(&n).is_zero());
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(2, 2, &[1, 1, 1, 1]).inverse().is_none());
        let x = m.solve_vec(&[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
    }

    #[test]
    fn char_poly_of_companion() {
        // x^2 - 3x + 2
        let m = Matrix::from_i64(2, 2, &[0, -2, 1, 3]);
        assert_eq!(m.char_poly(), vec![q(2), q(-3), q(1)]);
        let mut roots = rational_roots(&m.char_poly());
        roots.sort();
        assert_eq!(roots, vec![q(1), q(2)]);
    }

    #[test]
    fn rational_root_with_fraction() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let roots = rational_roots(&[q(-3), q(5), q(2)]);
        assert!(roots.contains(&q_frac(1, 2)));
        assert!(roots.contains(&q(-3)));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-6/4"), Some(q_frac(-3, 2)));
        assert_eq!(format_q(&q_frac(-3, 2)), "-3/2");
        assert_eq!(format_q(&q(5)), "5/1");
        assert!(parse_q("1/0").is_none());
    }

    #[test]
    fn left_and_right_inverses() {
        let m = Matrix::from_i64(3, 2, &[1, 0, 0, 1, 1, 1]);
        assert_eq!(m.left_inverse().mul(&m), Matrix::identity(2));
        let t = m.transpose();
        assert_eq!(t.mul(&t.right_inverse()), Matrix::identity(2));
    }
}
