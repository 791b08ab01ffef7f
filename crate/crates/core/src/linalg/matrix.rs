use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Dense row-major matrix over an exact field.
///
/// Linear maps `V -> W` are stored as `dim W x dim V` matrices acting on
/// column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::solve`].
#[derive(Clone, Debug)]
pub struct Solution {
    /// One `X` with `A X = B`, absent when inconsistent.
    pub particular: Option<Matrix>,
    /// Basis of the right kernel of `A`.
    pub kernel: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entries length must be rows x cols");
        Matrix { field, rows, cols, data }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Matrix whose rows are the given vectors, each of length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend(r.iter().cloned());
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix::new(field, rows, cols, entries.iter().map(|&x| field.from_i64(x)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[r * rhs.cols + c].add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { data, ..*self }
    }

    /// Kronecker product; on coordinates `(i, j) -> i * rhs_dim + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// `(self ⊗ rhs) v` without forming the Kronecker product.
    pub fn kron_apply(&self, rhs: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols * rhs.cols, "kron_apply: vector length");
        let field = self.field;
        // w[c1][r2] = Σ_c2 rhs[r2][c2] v[c1][c2]
        let mut w = vec![field.zero(); self.cols * rhs.rows];
        for c1 in 0..self.cols {
            let block = &v[c1 * rhs.cols..(c1 + 1) * rhs.cols];
            if block.iter().all(Scalar::is_zero) {
                continue;
            }
            for r2 in 0..rhs.rows {
                let mut acc = field.zero();
                for (c2, x) in block.iter().enumerate() {
                    if !x.is_zero() {
                        acc.add_mul(rhs.get(r2, c2), x);
                    }
                }
                w[c1 * rhs.rows + r2] = acc;
            }
        }
        let mut out = vec![field.zero(); self.rows * rhs.rows];
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    let x = &w[c1 * rhs.rows + r2];
                    if !x.is_zero() {
                        out[r1 * rhs.rows + r2].add_mul(a, x);
                    }
                }
            }
        }
        out
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let first = blocks.first().expect("vstack needs a block");
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column count");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { field: first.field, rows, cols, data }
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let first = blocks.first().expect("hstack needs a block");
        let rows = first.rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(first.field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row count");
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, off + c, b.get(r, c).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    /// Columns selected by index, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// Reduced row-echelon form and pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&mut rows, self.cols);
        rows.truncate(pivots.len());
        (Matrix::from_rows(self.field, self.cols, &rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    /// Solves `A X = B`.
    pub fn solve(&self, b: &Matrix) -> Result<Solution> {
        if self.rows != b.rows {
            return Err(Error::Shape(format!(
                "solve: {}x{} against right-hand side with {} rows",
                self.rows, self.cols, b.rows
            )));
        }
        let n = self.cols;
        let aug = Matrix::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        let kernel = {
            let a_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < n).collect();
            let a_rows = Matrix::from_fn(self.field, a_pivots.len(), n, |i, c| r.get(i, c).clone());
            kernel_from_rref(&a_rows, &a_pivots, n)
        };
        if pivots.iter().any(|&p| p >= n) {
            return Ok(Solution { particular: None, kernel });
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, n + j).clone());
            }
        }
        Ok(Solution { particular: Some(x), kernel })
    }

    /// Two-sided inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Matrix::identity(self.field, self.rows)).ok()?;
        if !sol.kernel.is_empty() {
            return None;
        }
        sol.particular
    }

    /// Rank factorization `A = P Q` with `P` the pivot columns of `A` and
    /// `Q` the nonzero rows of `rref(A)`.
    pub fn rank_factorization(&self) -> (Matrix, Matrix) {
        let (q, pivots) = self.rref();
        (self.select_columns(&pivots), q)
    }
}

/// In-place reduction of `rows` to reduced row-echelon form. Nonzero rows
/// end up first, in pivot order. Returns the pivot columns.
pub(crate) fn rref_rows(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..cols {
        if lead == rows.len() {
            break;
        }
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(lead, p);
        let inv = rows[lead][c].inv();
        if !inv.is_one() {
            for x in rows[lead].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[lead][j].is_zero()).collect();
        let (before, rest) = rows.split_at_mut(lead);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let factor = -&row[c];
            for &j in &support {
                row[j].add_mul(&factor, &pivot_row[j]);
            }
        }
        pivots.push(c);
        lead += 1;
    }
    pivots
}

pub(crate) fn kernel_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let field = r.field();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            let x = r.get(i, free);
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        basis.push(v);
    }
    basis
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_apply_matches_kron() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, 2, 3, &[1, 2, 0, -1, 0, 3]);
        let b = Matrix::from_i64(q, 2, 2, &[0, 1, 4, 5]);
        let v: Vec<Scalar> = (0..6).map(|i| q.from_i64(i * i - 3)).collect();
        assert_eq!(a.kron_apply(&b, &v), a.kron(&b).mul_vec(&v));
    }

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_identity() {
        let (r, p) = Matrix::identity(q(), 2).rref();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_zero() {
        let (r, p) = Matrix::zeros(q(), 3, 3).rref();
        assert_eq!(r.rows(), 0);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        // [[2,4],[1,2]]: halve the first row, subtract it from the second.
        let (r, p) = Matrix::from_i64(q(), 2, 2, &[2, 4, 1, 2]).rref();
        assert_eq!(r, Matrix::from_i64(q(), 1, 2, &[1, 2]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn solve_identity() {
        let b = Matrix::from_i64(q(), 2, 1, &[3, -5]);
        let sol = Matrix::identity(q(), 2).solve(&b).unwrap();
        assert_eq!(sol.particular.unwrap(), b);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn solve_zero_system() {
        let sol = Matrix::zeros(q(), 2, 3).solve(&Matrix::zeros(q(), 2, 1)).unwrap();
        assert!(sol.particular.unwrap().is_zero());
        assert_eq!(sol.kernel.len(), 3);
    }

    #[test]
    fn solve_underdetermined() {
        // x + y = 1: pivot x, free y, particular (1, 0), kernel (-1, 1).
        let a = Matrix::from_i64(q(), 1, 2, &[1, 1]);
        let sol = a.solve(&Matrix::from_i64(q(), 1, 1, &[1])).unwrap();
        assert_eq!(sol.particular.unwrap(), Matrix::from_i64(q(), 2, 1, &[1, 0]));
        assert_eq!(sol.kernel, vec![vec![q().from_i64(-1), q().from_i64(1)]]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_i64(q(), 2, 1, &[1, 1]);
        let sol = a.solve(&Matrix::from_i64(q(), 2, 1, &[1, 2])).unwrap();
        assert!(sol.particular.is_none());
    }

    #[test]
    fn solve_shape_mismatch() {
        let a = Matrix::identity(q(), 2);
        assert!(matches!(a.solve(&Matrix::zeros(q(), 3, 1)), Err(Error::Shape(_))));
    }

    #[test]
    fn inverse_over_prime_field() {
        let f = Field::prime(5).unwrap();
        let a = Matrix::from_i64(f, 2, 2, &[1, 2, 3, 4]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(Matrix::from_i64(f, 2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn rank_factorization_reproduces() {
        let a = Matrix::from_i64(q(), 3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]);
        let (p, r) = a.rank_factorization();
        assert_eq!(p.cols(), 2);
        assert_eq!(p.mul(&r), a);
    }

    #[test]
    fn kron_indexing() {
        let a = Matrix::from_i64(q(), 2, 2, &[0, 1, 1, 0]);
        let b = Matrix::identity(q(), 2);
        let k = a.kron(&b);
        // e_(0,1) -> e_(1,1)
        assert!(k.get(3, 1).is_one());
    }
}
