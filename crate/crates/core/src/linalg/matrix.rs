use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Rational::from_integer(rows[i][j].into()))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Matrix whose columns are the given integer vectors, all of length `rows`.
    pub fn from_int_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| Rational::from_integer(columns[j][i].clone()))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rational) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Columns of `self` followed by the columns of `other`.
    pub fn hstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, other.rows, "hstack: row counts differ");
        let cols = self.cols + other.cols;
        Self::from_fn(self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Rows of `self` followed by the rows of `other`.
    pub fn vstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.cols, "vstack: column counts differ");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        QMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &QMatrix) -> QMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Rows scaled to primitive integer vectors. Zero rows stay zero.
    fn integral_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| primitive_integral(self.row(i))).collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination on the
    /// row-wise integer-scaled matrix.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Each row is multiplied by the lcm of its denominators.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scale *= l;
        }
        let det = bareiss_det(a);
        Ok(Rational::new(det, scale))
    }

    pub fn rank(&self) -> usize {
        IntegralEchelon::reduce(self.integral_rows(), self.cols).pivots.len()
    }

    /// Canonical basis of the right kernel: one primitive integer vector per
    /// free column of the reduced echelon form, first nonzero entry positive.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        IntegralEchelon::reduce(self.integral_rows(), self.cols).kernel()
    }

    /// Basis of the row space in reduced echelon position, each row a
    /// primitive integer vector with positive pivot.
    pub fn row_space_basis(&self) -> Vec<Vec<BigInt>> {
        IntegralEchelon::reduce(self.integral_rows(), self.cols).rows
    }

    /// Basis of the column space as primitive integer columns, returned as
    /// a `rows x rank` matrix.
    pub fn column_space(&self) -> QMatrix {
        let basis = self.transpose().row_space_basis();
        Self::from_int_columns(self.rows, &basis)
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        self.solve(&QMatrix::identity(self.rows))
    }

    /// Solves `self * X = rhs` for invertible square `self`.
    pub fn solve(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch { expected: self.rows, found: rhs.rows });
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| self.row(i).iter().chain(rhs.row(i)).cloned().collect())
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row = a[c].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        Ok(Self::from_fn(n, m, |i, j| a[i][n + j].clone()))
    }

    /// Leading principal minors, in order of size.
    pub fn leading_principal_minors(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        (1..=self.rows)
            .map(|k| Self::from_fn(k, k, |i, j| self.get(i, j).clone()).determinant())
            .collect()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric()
            && self
                .leading_principal_minors()
                .map(|ms| ms.iter().all(Signed::is_positive))
                .unwrap_or(false)
    }

    /// `selfᵀ · m · self`.
    pub fn congruence(&self, m: &QMatrix) -> QMatrix {
        &(&self.transpose() * m) * self
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Scales a rational vector to a primitive integer vector (content 1),
/// keeping signs. The zero vector maps to zero.
pub(crate) fn primitive_integral(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut v: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut v);
    v
}

pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Reduced integral echelon form: every pivot row primitive with positive
/// pivot and zeros in the other pivot columns.
struct IntegralEchelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

impl IntegralEchelon {
    fn reduce(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -core::mem::take(x);
                }
            }
            let pivot_row = rows[r].clone();
            let a = &pivot_row[c];
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let b = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x * a - &b * y;
                }
                make_primitive(row);
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        IntegralEchelon { rows, pivots, cols }
    }

    fn kernel(&self) -> Vec<Vec<BigInt>> {
        let mut basis = Vec::new();
        let mut pivot_iter = self.pivots.iter().peekable();
        for j in 0..self.cols {
            if pivot_iter.peek() == Some(&&j) {
                pivot_iter.next();
                continue;
            }
            let l = self
                .rows
                .iter()
                .zip(&self.pivots)
                .filter(|(row, _)| !row[j].is_zero())
                .fold(BigInt::one(), |acc, (row, &pc)| acc.lcm(&row[pc]));
            let mut v = vec![BigInt::zero(); self.cols];
            v[j] = l.clone();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[j].is_zero() {
                    v[pc] = -(&row[j] * &l) / &row[pc];
                }
            }
            make_primitive(&mut v);
            if let Some(first) = v.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    for x in v.iter_mut() {
                        *x = -core::mem::take(x);
                    }
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;

    fn mul(self, rhs: &'a QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let rhs_row = rhs.row(k);
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    if b.is_zero() {
                        continue;
                    }
                    if a.is_one() {
                        *o += b;
                    } else {
                        *o += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;

    fn add(self, rhs: &'a QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;

    fn sub(self, rhs: &'a QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = QMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![ints(&[1, -1])]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(QMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let m = QMatrix::zeros(1, 3);
        assert_eq!(m.kernel_basis(), vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn kernel_is_primitive_with_rational_entries() {
        let m = QMatrix::new(1, 2, vec![q(1, 2), q(1, 3)]).unwrap();
        assert_eq!(m.kernel_basis(), vec![ints(&[2, -3])]);
    }

    #[test]
    fn dihedral_six_character_kernel() {
        // classes {e, reflections, rotations} x subgroups {1, C2, C3, S3}
        let m = QMatrix::from_i64_rows(&[&[6, 3, 2, 1], &[0, 1, 0, 1], &[0, 0, 2, 1]]);
        assert_eq!(m.kernel_basis(), vec![ints(&[1, -2, -1, 2])]);
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(QMatrix::identity(4).determinant().unwrap(), q(1, 1));
        assert_eq!(QMatrix::diagonal(&[q(1, 2), q(1, 1)]).determinant().unwrap(), q(1, 2));
        assert_eq!(QMatrix::zeros(0, 0).determinant().unwrap(), q(1, 1));
        let m = QMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), q(-1, 1));
        assert_eq!(
            QMatrix::zeros(2, 3).determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn gram_on_orbit_basis() {
        // (1/2)·identity restricted to span{e1, e2+e3}
        let basis = QMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 1]]);
        let gram = basis.congruence(&QMatrix::identity(3).scale(&q(1, 2)));
        assert_eq!(gram.determinant().unwrap(), q(1, 2));
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(3));
        assert_eq!(QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn column_space_is_echelon() {
        let m = QMatrix::from_i64_rows(&[&[2, 0, 2], &[0, 1, 1], &[0, 1, 1]]);
        let c = m.column_space();
        assert_eq!(c, QMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 1]]));
    }

    #[test]
    fn positive_definite_check() {
        assert!(QMatrix::identity(3).is_positive_definite());
        assert!(!QMatrix::from_i64_rows(&[&[1, 2], &[2, 1]]).is_positive_definite());
        assert!(!QMatrix::from_i64_rows(&[&[1, 0], &[1, 1]]).is_positive_definite());
    }
}
