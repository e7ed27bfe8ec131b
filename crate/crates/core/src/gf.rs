//! Dense exact linear algebra over a prime field GF(p).
//!
//! Pivoting is deterministic (first nonzero entry scanning rows top-down,
//! columns left-to-right), so echelon forms, kernel bases and solutions are
//! reproducible across runs and platforms. Matrices here are tiny (at most a
//! few hundred entries), so everything is plain dense arithmetic.

use crate::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut k = 3;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

/// The field GF(p) for a (small) prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidArgument(format!(
                "p = {p} is not a small prime"
            )));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        a %= self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

/// A dense rows x cols matrix over GF(p), acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub f: PrimeField,
    data: Vec<u64>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(fmt, "Mat {}x{} mod {} [", self.rows, self.cols, self.f.p)?;
        for i in 0..self.rows {
            write!(fmt, "  ")?;
            for j in 0..self.cols {
                write!(fmt, "{} ", self.get(i, j))?;
            }
            writeln!(fmt)?;
        }
        write!(fmt, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, f: PrimeField) -> Self {
        Mat {
            rows,
            cols,
            f,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, f: PrimeField) -> Self {
        let mut m = Mat::zero(n, n, f);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, f: PrimeField) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Mat::zero(r, c, f);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % f.p);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.f.p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zero(self.rows, other.cols, self.f);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = self.f.add(out.get(i, j), self.f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.f.add(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.f.sub(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Mat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = self.f.mul(*v, c);
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(self.rows, self.cols + other.cols, self.f);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<u64>], f: PrimeField) -> Mat {
        let mut out = Mat::zero(rows, cols.len(), f);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }

    /// Sub-block given by row and column ranges.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        let mut out = Mat::zero(r1 - r0, c1 - c0, self.f);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j));
            }
        }
        out
    }

    /// Row-reduced echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let f = self.f;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut sel = None;
            for i in row..m.rows {
                if m.get(i, col) != 0 {
                    sel = Some(i);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != row {
                for j in 0..m.cols {
                    let a = m.get(row, j);
                    let b = m.get(sel, j);
                    m.set(row, j, b);
                    m.set(sel, j, a);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in 0..m.cols {
                m.set(row, j, f.mul(m.get(row, j), inv));
            }
            for i in 0..m.rows {
                if i != row && m.get(i, col) != 0 {
                    let c = m.get(i, col);
                    for j in 0..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(c, m.get(row, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis: one column per free variable, in increasing
    /// free-column order; entry 1 at the free position.
    pub fn kernel_basis(&self) -> Mat {
        self.kernel_basis_with_free().0
    }

    /// Kernel basis together with the free-variable position of each column.
    pub fn kernel_basis_with_free(&self) -> (Mat, Vec<usize>) {
        let (r, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Mat::zero(self.cols, free.len(), self.f);
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, self.f.neg(r.get(prow, fc)));
            }
        }
        (out, free)
    }

    /// Solve self * X = rhs exactly. Returns None when inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // any pivot inside the rhs block means inconsistency
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.cols, rhs.cols, self.f);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(prow, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        if self.rank() != self.rows {
            return None;
        }
        self.solve(&Mat::identity(self.rows, self.f))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn flatten(&self) -> Vec<u64> {
        self.data.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(PrimeField::new(4).is_err());
    }

    #[test]
    fn rref_and_rank() {
        let m = Mat::from_rows(vec![vec![1, 2, 1], vec![2, 4, 2], vec![0, 1, 1]], f(5));
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.cols, 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_rows(vec![vec![1, 1], vec![0, 1]], f(3));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2, f(3)));
        let rhs = Mat::from_rows(vec![vec![2], vec![1]], f(3));
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul(&x), rhs);
        // inconsistent system
        let a = Mat::from_rows(vec![vec![1, 1], vec![1, 1]], f(3));
        let b = Mat::from_rows(vec![vec![1], vec![2]], f(3));
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn kernel_of_zero_sized() {
        let m = Mat::zero(0, 3, f(2));
        let k = m.kernel_basis();
        assert_eq!(k.cols, 3);
        let m2 = Mat::zero(3, 0, f(2));
        assert_eq!(m2.kernel_basis().cols, 0);
    }
}
