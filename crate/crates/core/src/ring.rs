//! Exact arithmetic in the chain ring `Z/p^N` and Smith normal form over it.
//!
//! Every module handled by this crate is killed by some power of `p`, so the
//! truncated ring `Z/p^N` with `N` at least the largest exponent in play is a
//! faithful stand-in for the discrete valuation ring.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("exponent cap must be at least 1")]
    ZeroCap,
    #[error("{p}^{cap} does not fit in 63 bits")]
    CapTooLarge { p: u64, cap: u32 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The ring `Z/p^cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    p: u64,
    cap: u32,
    modulus: u64,
}

impl RingCtx {
    pub fn new(p: u64, cap: u32) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        if cap == 0 {
            return Err(RingError::ZeroCap);
        }
        let mut modulus: u64 = 1;
        for _ in 0..cap {
            modulus = modulus
                .checked_mul(p)
                .filter(|&m| m <= 1 << 63)
                .ok_or(RingError::CapTooLarge { p, cap })?;
        }
        Ok(RingCtx { p, cap, modulus })
    }

    /// Context able to hold every exponent in `exps` (cap at least 1).
    pub fn for_exponents(p: u64, exps: impl IntoIterator<Item = u32>) -> Result<Self, RingError> {
        let cap = exps.into_iter().max().unwrap_or(0).max(1);
        RingCtx::new(p, cap)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elt(&self, value: u64) -> RingElt<'_> {
        RingElt { ctx: self, value: value % self.modulus }
    }

    /// `p^e` as an integer, for `e <= cap`.
    pub fn pow(&self, e: u32) -> u64 {
        assert!(e <= self.cap, "p^{e} exceeds the cap {}", self.cap);
        self.p.pow(e)
    }

    /// `p^e` as a ring element; zero once `e >= cap`.
    pub fn pow_mod(&self, e: u32) -> u64 {
        if e >= self.cap {
            0
        } else {
            self.p.pow(e)
        }
    }

    pub fn reduce(&self, v: u64) -> u64 {
        v % self.modulus
    }

    pub fn reduce_signed(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.modulus as i128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let m = self.modulus;
        (a % m + (m - b % m)) % m
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    /// Largest `e <= cap` with `p^e | v`; `cap` for zero.
    pub fn valuation(&self, v: u64) -> u32 {
        let mut v = v % self.modulus;
        if v == 0 {
            return self.cap;
        }
        let mut e = 0;
        while v.is_multiple_of(self.p) {
            v /= self.p;
            e += 1;
        }
        e
    }

    pub fn is_unit(&self, v: u64) -> bool {
        self.valuation(v) == 0
    }

    /// Inverse of a unit, `None` for non-units.
    pub fn inverse(&self, v: u64) -> Option<u64> {
        if !self.is_unit(v) {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i128, (v % self.modulus) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.modulus as i128) as u64)
    }

    /// `v / p^e` for `v` divisible by `p^e` (exact integer division of the
    /// canonical representative).
    pub fn div_pow(&self, v: u64, e: u32) -> u64 {
        let d = self.pow(e);
        let v = v % self.modulus;
        debug_assert_eq!(v % d, 0);
        v / d
    }
}

/// An element of `Z/p^cap` tied to its context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingElt<'a> {
    ctx: &'a RingCtx,
    value: u64,
}

impl RingElt<'_> {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn valuation(&self) -> u32 {
        self.ctx.valuation(self.value)
    }
}

/// Dense row-major matrix of ring representatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_vecs()).finish()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn diagonal(entries: &[u64]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: &[Vec<u64>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are `cols`, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column of wrong length");
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
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

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, ctx: &RingCtx, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        let m = ctx.modulus() as u128;
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: u128 = 0;
                for k in 0..self.cols {
                    acc = (acc + self[(i, k)] as u128 * other[(k, j)] as u128) % m;
                }
                out[(i, j)] = acc as u64;
            }
        }
        out
    }

    pub fn mul_vec(&self, ctx: &RingCtx, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let m = ctx.modulus() as u128;
        (0..self.rows)
            .map(|i| {
                let mut acc: u128 = 0;
                for (k, &x) in v.iter().enumerate() {
                    acc = (acc + self[(i, k)] as u128 * x as u128) % m;
                }
                acc as u64
            })
            .collect()
    }

    pub fn scale(&self, ctx: &RingCtx, c: u64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| ctx.mul(x, c)).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    /// Reduces row `i` modulo `p^exps[i]`.
    pub fn reduce_rows(&mut self, ctx: &RingCtx, exps: &[u32]) {
        assert_eq!(exps.len(), self.rows);
        for (i, &e) in exps.iter().enumerate() {
            let m = ctx.pow(e);
            for j in 0..self.cols {
                self[(i, j)] %= m;
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<Vec<u64>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Matrix::from_rows_with_cols(&rows, self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn scale_row(&mut self, ctx: &RingCtx, i: usize, c: u64) {
        for j in 0..self.cols {
            self[(i, j)] = ctx.mul(self[(i, j)], c);
        }
    }

    /// row[target] -= c * row[source]
    fn row_axpy(&mut self, ctx: &RingCtx, target: usize, source: usize, c: u64) {
        for j in 0..self.cols {
            let v = ctx.mul(c, self[(source, j)]);
            self[(target, j)] = ctx.sub(self[(target, j)], v);
        }
    }

    /// col[target] -= c * col[source]
    fn col_axpy(&mut self, ctx: &RingCtx, target: usize, source: usize, c: u64) {
        for i in 0..self.rows {
            let v = ctx.mul(c, self[(i, source)]);
            self[(i, target)] = ctx.sub(self[(i, target)], v);
        }
    }

    /// Determinant reduced mod `p` (square matrices only).
    pub fn det_mod_p(&self, ctx: &RingCtx) -> u64 {
        assert_eq!(self.rows, self.cols);
        let fp = RingCtx::new(ctx.p(), 1).expect("p is prime");
        let mut a = Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x % ctx.p()).collect(),
        };
        let mut det = 1u64;
        for k in 0..a.rows {
            let Some(piv) = (k..a.rows).find(|&i| a[(i, k)] != 0) else {
                return 0;
            };
            if piv != k {
                a.swap_rows(piv, k);
                det = fp.neg(det);
            }
            det = fp.mul(det, a[(k, k)]);
            let inv = fp.inverse(a[(k, k)]).expect("nonzero in F_p");
            for i in k + 1..a.rows {
                let c = fp.mul(a[(i, k)], inv);
                a.row_axpy(&fp, i, k, c);
            }
        }
        det
    }

    /// Inverse over `Z/p^cap`, `None` when the matrix is singular mod `p`.
    pub fn inverse(&self, ctx: &RingCtx) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for k in 0..n {
            let piv = (k..n).find(|&i| ctx.is_unit(a[(i, k)]))?;
            a.swap_rows(piv, k);
            inv.swap_rows(piv, k);
            let u = ctx.inverse(a[(k, k)]).expect("pivot is a unit");
            a.scale_row(ctx, k, u);
            inv.scale_row(ctx, k, u);
            for i in 0..n {
                if i != k && a[(i, k)] != 0 {
                    let c = a[(i, k)];
                    a.row_axpy(ctx, i, k, c);
                    inv.row_axpy(ctx, i, k, c);
                }
            }
        }
        Some(inv)
    }
}

/// Smith normal form `left * input * right = diag(p^d_0, p^d_1, ...)`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    /// Weakly increasing; `cap` stands for a zero diagonal entry.
    pub diag_valuations: Vec<u32>,
    pub left: Matrix,
    pub right: Matrix,
}

/// Smith normal form over `Z/p^cap`.
///
/// Pivots on an entry of minimal valuation, preferring the topmost row and
/// then the leftmost column. After scaling the pivot to an exact power of
/// `p`, every other entry of its row and column is a multiple of it, so the
/// elimination never needs a gcd step.
pub fn snf(ctx: &RingCtx, input: &Matrix) -> SnfResult {
    let (rows, cols) = (input.rows(), input.cols());
    let mut a = input.clone();
    for x in a.data.iter_mut() {
        *x = ctx.reduce(*x);
    }
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);
    let mut diag = Vec::with_capacity(rows.min(cols));

    for k in 0..rows.min(cols) {
        let mut best = (ctx.cap(), k, k);
        'search: for i in k..rows {
            for j in k..cols {
                let v = ctx.valuation(a[(i, j)]);
                if v < best.0 {
                    best = (v, i, j);
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let (v, pi, pj) = best;
        if v == ctx.cap() {
            diag.extend(std::iter::repeat_n(ctx.cap(), rows.min(cols) - k));
            break;
        }
        a.swap_rows(k, pi);
        left.swap_rows(k, pi);
        a.swap_cols(k, pj);
        right.swap_cols(k, pj);

        let unit = ctx.div_pow(a[(k, k)], v);
        let unit_inv = ctx.inverse(unit).expect("quotient by p^v is a unit");
        a.scale_row(ctx, k, unit_inv);
        left.scale_row(ctx, k, unit_inv);
        debug_assert_eq!(a[(k, k)], ctx.pow(v));

        for i in k + 1..rows {
            if a[(i, k)] != 0 {
                let c = ctx.div_pow(a[(i, k)], v);
                a.row_axpy(ctx, i, k, c);
                left.row_axpy(ctx, i, k, c);
            }
        }
        for j in k + 1..cols {
            if a[(k, j)] != 0 {
                let c = ctx.div_pow(a[(k, j)], v);
                a.col_axpy(ctx, j, k, c);
                right.col_axpy(ctx, j, k, c);
            }
        }
        diag.push(v);
    }

    SnfResult { diag_valuations: diag, left, right }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, cap: u32) -> RingCtx {
        RingCtx::new(p, cap).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(ctx(2, 5).elt(12).valuation(), 2);
        assert_eq!(ctx(2, 5).elt(0).valuation(), 5);
        assert_eq!(ctx(3, 4).elt(1).valuation(), 0);
    }

    #[test]
    fn rejects_bad_contexts() {
        assert_eq!(RingCtx::new(4, 2), Err(RingError::NotPrime(4)));
        assert_eq!(RingCtx::new(2, 0), Err(RingError::ZeroCap));
        assert!(RingCtx::new(2, 63).is_ok());
        assert_eq!(RingCtx::new(2, 64), Err(RingError::CapTooLarge { p: 2, cap: 64 }));
        assert!(RingCtx::new(3, 40).is_err());
    }

    #[test]
    fn unit_inverses() {
        let c = ctx(3, 4);
        for v in 1..81 {
            match c.inverse(v) {
                Some(inv) => assert_eq!(c.mul(v, inv), 1),
                None => assert_eq!(v % 3, 0),
            }
        }
    }

    fn check_snf(c: &RingCtx, m: &Matrix) -> SnfResult {
        let r = snf(c, m);
        let d = r.left.mul(c, m).mul(c, &r.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j { c.pow_mod(r.diag_valuations[i]) } else { 0 };
                assert_eq!(d[(i, j)], expect, "entry ({i},{j}) of {d:?}");
            }
        }
        assert_ne!(r.left.det_mod_p(c), 0);
        assert_ne!(r.right.det_mod_p(c), 0);
        assert!(r.diag_valuations.windows(2).all(|w| w[0] <= w[1]));
        r
    }

    #[test]
    fn snf_examples() {
        let c = ctx(2, 5);
        let m = Matrix::from_rows(&[vec![8, 0, 4], vec![0, 4, 2]]);
        assert_eq!(check_snf(&c, &m).diag_valuations, vec![1, 3]);
        assert_eq!(check_snf(&c, &Matrix::identity(2)).diag_valuations, vec![0, 0]);
        let c3 = ctx(2, 3);
        assert_eq!(check_snf(&c3, &Matrix::zeros(1, 1)).diag_valuations, vec![3]);
        assert!(snf(&c3, &Matrix::zeros(0, 3)).diag_valuations.is_empty());
    }

    #[test]
    fn snf_of_diagonal_sorts() {
        let c = ctx(3, 4);
        let m = Matrix::diagonal(&[27, 1, 0, 9]);
        assert_eq!(check_snf(&c, &m).diag_valuations, vec![0, 2, 3, 4]);
    }

    #[test]
    fn inverse_round_trip() {
        let c = ctx(2, 4);
        let m = Matrix::from_rows(&[vec![3, 2], vec![4, 1]]);
        let inv = m.inverse(&c).unwrap();
        assert_eq!(m.mul(&c, &inv), Matrix::identity(2));
        assert!(Matrix::from_rows(&[vec![2, 4], vec![6, 8]]).inverse(&c).is_none());
    }
}
