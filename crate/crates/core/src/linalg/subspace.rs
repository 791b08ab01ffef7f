use crate::field::{Field, Scalar};
use crate::linalg::matrix::{rref_rows, Matrix};
use crate::linalg::vector;

/// A subspace of `k^n`, stored as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace { field, ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        let rows = (0..ambient_dim).map(|i| vector::unit(field, ambient_dim, i)).collect();
        Subspace { field, ambient_dim, rows, pivots: (0..ambient_dim).collect() }
    }

    /// Span of arbitrarily many vectors; reduction stops early once the
    /// whole ambient space is reached.
    pub fn span<I>(field: Field, ambient_dim: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut builder = SpanBuilder::new(field, ambient_dim);
        for v in vectors {
            builder.insert(v);
            if builder.is_full() {
                break;
            }
        }
        builder.finish()
    }

    /// Column space of a matrix.
    pub fn image(m: &Matrix) -> Subspace {
        Subspace::span(m.field(), m.rows(), m.column_vectors())
    }

    /// Right kernel of a matrix.
    pub fn kernel(m: &Matrix) -> Subspace {
        let field = m.field();
        let mut rows = m.kernel();
        let pivots = rref_rows(&mut rows, m.cols());
        rows.truncate(pivots.len());
        Subspace { field, ambient_dim: m.cols(), rows, pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Basis as a `dim x ambient_dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, &self.rows)
    }

    /// Inclusion `k^dim -> k^ambient` (basis vectors as columns).
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.rows)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient_dim];
        for (x, row) in c.iter().zip(&self.rows) {
            vector::axpy(&mut rebuilt, x, row);
        }
        (rebuilt == v).then_some(c)
    }

    /// Coordinate map `ambient -> k^dim` valid on the subspace (reads pivots).
    pub fn coordinate_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim(), self.ambient_dim);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, self.field.one());
        }
        m
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span(self.field, self.ambient_dim, self.rows.iter().chain(&other.rows).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        // x U = y W  <=>  (x, y) in ker [U^T | -W^T]
        let u = self.inclusion();
        let w = other.inclusion().scale(&-self.field.one());
        let kernel = Matrix::hstack(&[&u, &w]).kernel();
        let vectors = kernel.into_iter().map(|k| u.mul_vec(&k[..self.dim()]));
        Subspace::span(self.field, self.ambient_dim, vectors)
    }

    /// Image of this subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::span(self.field, m.rows(), self.rows.iter().map(|v| m.mul_vec(v)))
    }
}

/// Incremental span computation keeping an RREF basis at all times.
pub(crate) struct SpanBuilder {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub(crate) fn new(field: Field, dim: usize) -> SpanBuilder {
        SpanBuilder { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub(crate) fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = -&v[p];
            vector::axpy(&mut v, &factor, row);
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv();
        vector::scale_in_place(&mut v, &inv);
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let factor = -&row[lead];
            vector::axpy(row, &factor, &v);
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    pub(crate) fn finish(self) -> Subspace {
        Subspace { field: self.field, ambient_dim: self.dim, rows: self.rows, pivots: self.pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn span_is_rref() {
        let s = Subspace::span(q(), 3, vec![v(&[0, 2, 2]), v(&[1, 1, 1]), v(&[1, 2, 2])]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.basis()[0], v(&[1, 0, 0]));
        assert_eq!(s.basis()[1], v(&[0, 1, 1]));
    }

    #[test]
    fn coords_and_membership() {
        let s = Subspace::span(q(), 3, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert_eq!(s.coords(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert!(!s.contains(&v(&[1, 1, 1])));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(q(), 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(q(), 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(q(), 3, vec![v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(q(), 3));
    }

    #[test]
    fn kernel_subspace() {
        let m = Matrix::from_i64(q(), 1, 3, &[1, 1, 1]);
        let k = Subspace::kernel(&m);
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&v(&[1, -1, 0])));
    }
}
