use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Ring;

/// Dense row-major matrix with exact entries over a [`Ring`].
///
/// Entries over a prime field are always kept in `[0, p)`. Arithmetic
/// operators panic on shape or ring mismatch; callers that accept user
/// input go through the `try_*` variants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        ExactMatrix { ring, rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(ring: Ring, rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let data = entries.into_iter().map(|x| ring.reduce(x)).collect();
        Ok(ExactMatrix { ring, rows, cols, data })
    }

    /// Build from small integer rows; all rows must have equal length.
    pub fn from_rows(ring: Ring, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().map(|&x| ring.from_i64(x)).collect();
        ExactMatrix { ring, rows: rows.len(), cols, data }
    }

    pub fn scalar(ring: Ring, x: i64) -> Self {
        Self::from_rows(ring, &[vec![x]])
    }

    pub fn diagonal(ring: Ring, rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(ring, rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn ring(&self) -> Ring {
        self.ring
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

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = self.ring.reduce(x);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let data = self.data.iter().map(|x| self.ring.mul(x, c)).collect();
        ExactMatrix { data, ..self.clone() }
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Self {
        self.select_columns(&[j])
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        ExactMatrix { ring: self.ring, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { ring: self.ring, rows: self.rows, cols: idx.len(), data }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let rows: Vec<usize> = (r0..r1).collect();
        let cols: Vec<usize> = (c0..c1).collect();
        self.select_rows(&rows).select_columns(&cols)
    }

    pub fn hstack(parts: &[&ExactMatrix]) -> Self {
        let first = parts.first().expect("hstack of nothing");
        let rows = first.rows;
        let ring = first.ring;
        assert!(parts.iter().all(|p| p.rows == rows && p.ring == ring), "hstack shape mismatch");
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for p in parts {
                data.extend_from_slice(p.row(i));
            }
        }
        ExactMatrix { ring, rows, cols, data }
    }

    pub fn vstack(parts: &[&ExactMatrix]) -> Self {
        let first = parts.first().expect("vstack of nothing");
        let cols = first.cols;
        let ring = first.ring;
        assert!(parts.iter().all(|p| p.cols == cols && p.ring == ring), "vstack shape mismatch");
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            data.extend_from_slice(&p.data);
        }
        ExactMatrix { ring, rows, cols, data }
    }

    /// 2×2 block matrix `[[a, b], [c, d]]`.
    pub fn blocks2(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, d: &ExactMatrix) -> Self {
        Self::vstack(&[&Self::hstack(&[a, b]), &Self::hstack(&[c, d])])
    }

    pub fn block_diag(a: &ExactMatrix, b: &ExactMatrix) -> Self {
        let ring = a.ring;
        Self::blocks2(
            a,
            &Self::zeros(ring, a.rows, b.cols),
            &Self::zeros(ring, b.rows, a.cols),
            b,
        )
    }

    /// Kronecker product; used to linearize `X ↦ A·X·B` on row-major flattenings.
    pub fn kron(&self, other: &ExactMatrix) -> Self {
        let ring = self.ring;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Self::zeros(ring, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.data[(i * other.rows + k) * c + j * other.cols + l] = ring.mul(a, b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Row-major flattening as a column vector.
    pub fn flatten(&self) -> Self {
        ExactMatrix { ring: self.ring, rows: self.data.len(), cols: 1, data: self.data.clone() }
    }

    pub fn reshape(&self, rows: usize, cols: usize) -> Self {
        assert_eq!(rows * cols, self.data.len(), "reshape size mismatch");
        ExactMatrix { ring: self.ring, rows, cols, data: self.data.clone() }
    }

    fn check_same(&self, other: &ExactMatrix, what: &str) -> Result<()> {
        self.ring.ensure_same(&other.ring)?;
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "{what}: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "product of {:?} and {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let ring = self.ring;
        let mut out = vec![BigInt::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        if ring.is_field() {
            for x in out.iter_mut() {
                *x = ring.reduce(std::mem::take(x));
            }
        }
        Ok(ExactMatrix { ring, rows: self.rows, cols: other.cols, data: out })
    }

    pub fn try_add(&self, other: &ExactMatrix) -> Result<Self> {
        self.check_same(other, "sum")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(ExactMatrix { data, ..self.clone() })
    }

    pub fn try_sub(&self, other: &ExactMatrix) -> Result<Self> {
        self.check_same(other, "difference")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.sub(a, b)).collect();
        Ok(ExactMatrix { data, ..self.clone() })
    }

    // Elementary operations used by the Smith reduction.

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += c · row_j
    pub(crate) fn add_row_multiple(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let src = &self.data[j * self.cols + k];
            if src.is_zero() {
                continue;
            }
            let v = self.ring.add(&self.data[i * self.cols + k], &(src * c));
            self.data[i * self.cols + k] = v;
        }
    }

    /// col_i += c · col_j
    pub(crate) fn add_col_multiple(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let src = &self.data[r * self.cols + j];
            if src.is_zero() {
                continue;
            }
            let v = self.ring.add(&self.data[r * self.cols + i], &(src * c));
            self.data[r * self.cols + i] = v;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = self.ring.mul(&self.data[i * self.cols + k], c);
            self.data[i * self.cols + k] = v;
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &BigInt) {
        for r in 0..self.rows {
            let v = self.ring.mul(&self.data[r * self.cols + j], c);
            self.data[r * self.cols + j] = v;
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        let data = self.data.iter().map(|x| self.ring.neg(x)).collect();
        ExactMatrix { data, ..self.clone() }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix[{}; {}x{}]{}", self.ring, self.rows, self.cols, self)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
