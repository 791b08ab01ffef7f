use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};

/// A subspace of `k^n` together with a chosen basis: an inclusion
/// `k^d -> k^n` and a left inverse reading off coordinates.
#[derive(Clone, Debug)]
pub struct Embedding {
    subspace: Subspace,
    inclusion: Matrix,
    to_coords: Matrix,
}

impl Embedding {
    /// Uses the reduced row-echelon basis of the subspace.
    pub fn from_subspace(subspace: Subspace) -> Embedding {
        let inclusion = subspace.inclusion();
        let to_coords = subspace.coordinate_matrix();
        Embedding { subspace, inclusion, to_coords }
    }

    /// Uses the given vectors as basis; `None` if they are dependent.
    pub fn from_basis(field: Field, ambient_dim: usize, basis: &[Vec<Scalar>]) -> Option<Embedding> {
        let subspace = Subspace::span(field, ambient_dim, basis.iter().cloned());
        if subspace.dim() != basis.len() {
            return None;
        }
        let inclusion = Matrix::from_columns(field, ambient_dim, basis);
        let pivot_coords = subspace.coordinate_matrix();
        let gram = pivot_coords.mul(&inclusion);
        let to_coords = gram.inverse()?.mul(&pivot_coords);
        Some(Embedding { subspace, inclusion, to_coords })
    }

    /// Greedily keeps an independent subset of `vectors` (in order) and
    /// returns the embedding plus the indices kept.
    pub fn from_spanning(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> (Embedding, Vec<usize>) {
        let mut kept = Vec::new();
        let mut span = Subspace::zero(field, ambient_dim);
        for (i, v) in vectors.iter().enumerate() {
            if span.contains(v) {
                continue;
            }
            span = Subspace::span(field, ambient_dim, span.basis().iter().cloned().chain(std::iter::once(v.clone())));
            kept.push(i);
        }
        let basis: Vec<Vec<Scalar>> = kept.iter().map(|&i| vectors[i].clone()).collect();
        let emb = Embedding::from_basis(field, ambient_dim, &basis).expect("greedy subset is independent");
        (emb, kept)
    }

    pub fn field(&self) -> Field {
        self.subspace.field()
    }

    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.inclusion.rows()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    /// `d x n` matrix, a left inverse of the inclusion.
    pub fn to_coords(&self) -> &Matrix {
        &self.to_coords
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.inclusion.column_vectors()
    }

    pub fn element(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.inclusion.mul_vec(coords)
    }

    /// Coordinates of `v`, or `None` if `v` lies outside the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.subspace.contains(v).then(|| self.to_coords.mul_vec(v))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.subspace.contains(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_in_chosen_basis() {
        let q = Field::Rational;
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let emb = Embedding::from_basis(q, 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(emb.coords(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(emb.coords(&v(&[1, 0, 0])), None);
        assert!(emb.to_coords().mul(emb.inclusion()).is_identity());
    }

    #[test]
    fn spanning_keeps_independent_prefix() {
        let q = Field::Rational;
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let (emb, kept) = Embedding::from_spanning(q, 2, &[v(&[1, 0]), v(&[2, 0]), v(&[0, 1])]);
        assert_eq!(kept, vec![0, 2]);
        assert_eq!(emb.dim(), 2);
    }
}
