//! Dense exact matrices over ℚ(i).
//!
//! Shape errors are reported through the `checked_*` methods. The operator
//! impls (`&a * &b`, `&a + &b`, ...) panic on a shape mismatch; they exist so
//! closed-form expressions read like the algebra they implement.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch {
                    op: "from_rows",
                    left: (nrows, ncols),
                    right: (1, row.len()),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_int_rows<const R: usize, const C: usize>(rows: [[i64; C]; R]) -> Self {
        Matrix::from_fn(R, C, |r, c| GaussianRational::from_integer(rows[r][c]))
    }

    /// Parses every entry with the scalar grammar.
    pub fn from_str_rows<const R: usize, const C: usize>(rows: [[&str; C]; R]) -> Result<Self> {
        let mut data = Vec::with_capacity(R * C);
        for row in rows.iter() {
            for s in row.iter() {
                data.push(s.parse()?);
            }
        }
        Matrix::new(R, C, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn diagonal(entries: &[GaussianRational]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                GaussianRational::zero()
            }
        })
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| if r == c { self[(r, c)].is_one() } else { self[(r, c)].is_zero() }))
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, k: &GaussianRational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    fn same_shape(&self, rhs: &Matrix, op: &'static str) -> Result<()> {
        if self.shape() == rhs.shape() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k`; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// The `nrows × ncols` submatrix starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nrows: usize, ncols: usize) -> Matrix {
        assert!(r0 + nrows <= self.rows && c0 + ncols <= self.cols, "block out of range");
        Matrix::from_fn(nrows, ncols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// `[[tl, tr], [bl, br]]`.
    pub fn block2x2(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Result<Matrix> {
        let top = Matrix::hstack(&[tl, tr])?;
        let bottom = Matrix::hstack(&[bl, br])?;
        Matrix::vstack(&[&top, &bottom])
    }

    /// Splits a `2n × 2n` matrix into its four `n × n` blocks.
    pub fn quarters(&self) -> Result<[Matrix; 4]> {
        let m = self.require_square()?;
        if m % 2 != 0 {
            return Err(Error::ShapeMismatch {
                op: "quarters",
                left: self.shape(),
                right: (2, 2),
            });
        }
        let n = m / 2;
        Ok([
            self.block(0, 0, n, n),
            self.block(0, n, n, n),
            self.block(n, 0, n, n),
            self.block(n, n, n, n),
        ])
    }

    pub fn hstack(parts: &[&Matrix]) -> Result<Matrix> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if let Some(bad) = parts.iter().find(|m| m.rows != rows) {
            return Err(Error::ShapeMismatch {
                op: "hstack",
                left: parts[0].shape(),
                right: bad.shape(),
            });
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for m in parts {
                data.extend_from_slice(m.row(r));
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if let Some(bad) = parts.iter().find(|m| m.cols != cols) {
            return Err(Error::ShapeMismatch {
                op: "vstack",
                left: parts[0].shape(),
                right: bad.shape(),
            });
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// `diag(a, b)`.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        Matrix::block2x2(
            a,
            &Matrix::zeros(a.rows, b.cols),
            &Matrix::zeros(b.rows, a.cols),
            b,
        )
        .expect("block_diag shapes are consistent by construction")
    }

    /// The columns with the given indices, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    /// Gauss-Jordan elimination. The pivot in each column is the first
    /// nonzero entry at or below the current row; pivot rows are scaled to 1.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            let pivot_row: Vec<GaussianRational> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if !pivot_row[j].is_zero() {
                        let t = &factor * &pivot_row[j];
                        m[(i, j)] -= &t;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Matrix::zeros(0, 0));
        }
        let aug = Matrix::hstack(&[self, &Matrix::identity(n)])?;
        let rr = aug.rref();
        if rr.pivot_cols.len() < n || rr.pivot_cols[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(rr.reduced.block(0, n, n, n))
    }

    /// Columns form a basis of the null space, one per free column of the
    /// echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        kernel_from_rref(&self.rref(), self.cols)
    }

    pub fn pierce_split(&self, e: &Matrix) -> Result<PierceSplit> {
        PierceSplit::new(self, e)
    }
}

pub(crate) fn kernel_from_rref(rr: &Rref, cols: usize) -> Matrix {
    let free: Vec<usize> = (0..cols).filter(|c| !rr.pivot_cols.contains(c)).collect();
    let mut basis = Matrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = GaussianRational::one();
        for (i, &p) in rr.pivot_cols.iter().enumerate() {
            basis[(p, k)] = -&rr.reduced[(i, f)];
        }
    }
    basis
}

impl Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                (&self).$method(rhs)
            }
        }
        impl $tr<Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                self.$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            f.write_str("]")?;
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// The four corners of `T` relative to an idempotent `e`, each kept at full
/// size: `a = eTe`, `b = eT(I-e)`, `c = (I-e)Te`, `d = (I-e)T(I-e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PierceSplit {
    pub e: Matrix,
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub d: Matrix,
}

impl PierceSplit {
    pub fn new(t: &Matrix, e: &Matrix) -> Result<Self> {
        let n = t.require_square()?;
        t.same_shape(e, "pierce_split")?;
        if &(e * e) != e {
            return Err(Error::NotIdempotent);
        }
        let f = &Matrix::identity(n) - e;
        let te = t * e;
        let tf = t * &f;
        Ok(PierceSplit {
            a: e * &te,
            b: e * &tf,
            c: &f * &te,
            d: &f * &tf,
            e: e.clone(),
        })
    }

    pub fn reconstruct(&self) -> Matrix {
        &(&self.a + &self.b) + &(&self.c + &self.d)
    }
}

/// Serialized as a list of rows of scalar strings.
impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<GaussianRational>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
