use std::fmt;

use super::field::PrimeField;
use super::subspace::Subspace;
use crate::error::{HallError, Result};

/// Dense row-major matrix over a prime field.
///
/// The matrix does not carry its field; every arithmetic operation takes the
/// field explicitly. Entries are kept reduced into `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} {:?}", self.rows, self.cols, self.to_rows())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: u8) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds a matrix from raw row-major data; entries must already be reduced.
    pub fn from_data(rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows. `cols` is needed for the zero-row case.
    pub fn from_rows(rows: &[Vec<u8>], cols: usize, field: PrimeField) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(HallError::invalid(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= field.p() {
                    return Err(HallError::invalid(format!(
                        "entry {x} is not in [0, {})",
                        field.p()
                    )));
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience for literal matrices in code and tests; entries are reduced mod p.
    pub fn from_literal<const C: usize>(rows: &[[i64; C]], field: PrimeField) -> Self {
        let mut data = Vec::with_capacity(rows.len() * C);
        for row in rows {
            data.extend(row.iter().map(|&x| field.reduce(x)));
        }
        Matrix {
            rows: rows.len(),
            cols: C,
            data,
        }
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
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let p = field.p() as u32;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u32;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let acc = &mut out[i * other.cols..(i + 1) * other.cols];
                for (dst, &b) in acc.iter_mut().zip(orow) {
                    *dst += a * b as u32;
                }
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| (x % p) as u8).collect(),
        }
    }

    /// Matrix-vector product for a column vector.
    pub fn apply(&self, v: &[u8], field: PrimeField) -> Vec<u8> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        let p = field.p() as u32;
        (0..self.rows)
            .map(|i| {
                let s: u32 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u32 * b as u32)
                    .sum();
                (s % p) as u8
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sum"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in difference"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u8, field: PrimeField) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    /// `self + c * other`, in place.
    pub fn add_scaled(&mut self, c: u8, other: &Matrix, field: PrimeField) {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in axpy"
        );
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = field.add(*a, field.mul(c, b));
        }
    }

    pub fn pow(&self, mut e: usize, field: PrimeField) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, field);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, field);
            }
        }
        result
    }

    /// Reduced row-echelon form together with its pivot columns.
    pub fn rref(&self, field: PrimeField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(field);
        (m, pivots)
    }

    pub(crate) fn rref_in_place(&mut self, field: PrimeField) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = field
                .inv(self.data[r * cols + c])
                .expect("pivot is nonzero");
            if inv != 1 {
                for j in c..cols {
                    self.data[r * cols + j] = field.mul(self.data[r * cols + j], inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = field.neg(factor);
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if v != 0 {
                        self.data[i * cols + j] =
                            field.add(self.data[i * cols + j], field.mul(neg, v));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// The reduced row-echelon form and the rank.
    pub fn row_reduce(&self, field: PrimeField) -> (Matrix, usize) {
        let (m, pivots) = self.rref(field);
        (m, pivots.len())
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        self.rref(field).1.len()
    }

    /// Null space `{x : self * x = 0}` as a subspace of `F_p^cols`.
    pub fn kernel_basis(&self, field: PrimeField) -> Subspace {
        let (r, pivots) = self.rref(field);
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(free.len(), n);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(k, pc, field.neg(r.get(i, fc)));
            }
        }
        Subspace::from_spanning(basis, field)
    }

    /// Column space as a subspace of `F_p^rows`.
    pub fn image(&self, field: PrimeField) -> Subspace {
        Subspace::from_spanning(self.transpose(), field)
    }

    pub fn is_invertible(&self, field: PrimeField) -> bool {
        self.is_square() && self.rank(field) == self.rows
    }

    pub fn inverse(&self, field: PrimeField) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place(field);
        if pivots.len() < n || pivots.last().is_some_and(|&c| c >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Nilpotency test for a square matrix: `self^n == 0`.
    pub fn is_nilpotent(&self, field: PrimeField) -> bool {
        self.pow(self.rows, field).is_zero()
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: PrimeField = PrimeField::F2;

    #[test]
    fn identity_is_its_own_rref() {
        let (r, rank) = Matrix::identity(2).row_reduce(F2);
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(rank, 2);
    }

    #[test]
    fn empty_matrix_is_invertible() {
        let e = Matrix::zeros(0, 0);
        assert_eq!(e.inverse(F2), Some(Matrix::zeros(0, 0)));
        assert!(e.is_invertible(F2));
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let (r, rank) = Matrix::zeros(3, 3).row_reduce(F2);
        assert!(r.is_zero());
        assert_eq!(rank, 0);
    }

    #[test]
    fn column_vector_reduces_to_first_unit_vector() {
        let g2 = Matrix::from_literal(&[[0], [1], [0], [1]], F2);
        let (r, rank) = g2.row_reduce(F2);
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_literal(&[[1], [0], [0], [0]], F2));
    }

    #[test]
    fn kernel_of_single_entry_nilpotent() {
        let f = Matrix::from_literal(&[[0, 0, 0], [1, 0, 0], [0, 0, 0]], F2);
        let k = f.kernel_basis(F2);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.basis().to_rows(), vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(f.is_nilpotent(F2));
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(Matrix::identity(4).kernel_basis(F2).dim(), 0);
        let k = Matrix::zeros(2, 3).kernel_basis(PrimeField::new(5).unwrap());
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn inverse_round_trips() {
        let f3 = PrimeField::F3;
        let a = Matrix::from_literal(&[[1, 2], [0, 1]], f3);
        let inv = a.inverse(f3).unwrap();
        assert!(a.mul(&inv, f3).is_identity());
        assert!(Matrix::from_literal(&[[1, 2], [2, 1]], f3)
            .inverse(f3)
            .is_none());
    }

    #[test]
    fn power_by_squaring_matches_repeated_product() {
        let f5 = PrimeField::new(5).unwrap();
        let a = Matrix::from_literal(&[[1, 2, 3], [0, 4, 1], [2, 2, 0]], f5);
        let mut slow = Matrix::identity(3);
        for k in 0..7 {
            assert_eq!(a.pow(k, f5), slow);
            slow = slow.mul(&a, f5);
        }
    }
}
