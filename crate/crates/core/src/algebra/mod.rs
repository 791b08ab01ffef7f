//! Finite-dimensional unital algebras given by structure constants.

mod embedding;
mod extension;
mod group;

pub use embedding::Embedding;
pub use extension::{format_tensor, CentralTensor, EndoAlgebra, Extension, HomConstraint, TensorOverSub};
pub use group::Group;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{vector, Matrix};

/// A unital associative algebra with basis `b_0..b_{n-1}` and
/// `b_i b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    field: Field,
    labels: Vec<String>,
    consts: Vec<Scalar>,
    unit: Vec<Scalar>,
}

impl FdAlgebra {
    /// Builds and validates an algebra (associativity on all basis triples,
    /// two-sided unit on all basis vectors).
    pub fn new(field: Field, labels: Vec<String>, consts: Vec<Scalar>, unit: Vec<Scalar>) -> Result<FdAlgebra> {
        let alg = FdAlgebra::new_unchecked(field, labels, consts, unit);
        alg.check_unit().map_err(Error::InvalidAlgebra)?;
        alg.check_associativity().map_err(Error::InvalidAlgebra)?;
        Ok(alg)
    }

    pub fn new_unchecked(field: Field, labels: Vec<String>, consts: Vec<Scalar>, unit: Vec<Scalar>) -> FdAlgebra {
        let n = labels.len();
        assert_eq!(consts.len(), n * n * n, "structure constant tensor shape");
        assert_eq!(unit.len(), n, "unit length");
        FdAlgebra { field, labels, consts, unit }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> FdAlgebra {
        FdAlgebra::new_unchecked(field, vec!["1".into()], vec![field.one()], vec![field.one()])
    }

    /// `M_n(k)` with basis `e_ij` (index `i * n + j`) and
    /// `e_ij e_kl = δ_jk e_il`.
    pub fn matrix_algebra(n: usize, field: Field) -> FdAlgebra {
        assert!(n >= 1, "matrix algebra size must be positive");
        let d = n * n;
        let mut consts = vec![field.zero(); d * d * d];
        let mut labels = Vec::with_capacity(d);
        for i in 0..n {
            for j in 0..n {
                labels.push(format!("e{}{}", i + 1, j + 1));
                for l in 0..n {
                    let x = i * n + j;
                    let y = j * n + l;
                    let z = i * n + l;
                    consts[(x * d + y) * d + z] = field.one();
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        FdAlgebra::new_unchecked(field, labels, consts, unit)
    }

    /// Group algebra `k[G]` with the group elements as basis.
    pub fn group_algebra(group: &Group, field: Field) -> FdAlgebra {
        let n = group.order();
        let mut consts = vec![field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                consts[(i * n + j) * n + group.mul(i, j)] = field.one();
            }
        }
        FdAlgebra::new_unchecked(field, group.labels().to_vec(), consts, vector::unit(field, n, group.identity()))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim(), i)
    }

    /// Coefficient of `b_k` in `b_i b_j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.consts[(i * n + j) * n + k]
    }

    /// `b_i b_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.consts[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vector::zeros(self.field, n);
        for (i, a) in vector::support(x) {
            for (j, b) in vector::support(y) {
                let ab = a * b;
                vector::axpy(&mut out, &ab, self.basis_product(i, j));
            }
        }
        out
    }

    /// `L_x : y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// `R_x : y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Multiplication `A ⊗ A -> A` as an `n x n²` matrix.
    pub fn multiplication_matrix(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field, n, n * n, |k, ij| self.constant(ij / n, ij % n, k).clone())
    }

    pub fn opposite(&self) -> FdAlgebra {
        let n = self.dim();
        let mut consts = vec![self.field.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    consts[(i * n + j) * n + k] = self.constant(j, i, k).clone();
                }
            }
        }
        FdAlgebra::new_unchecked(self.field, self.labels.clone(), consts, self.unit.clone())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn check_unit(&self) -> std::result::Result<(), String> {
        for i in 0..self.dim() {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(format!("unit fails on basis element `{}`", self.labels[i]));
            }
        }
        Ok(())
    }

    pub fn check_associativity(&self) -> std::result::Result<(), String> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), self.basis_product(j, k));
                    if left != right {
                        return Err(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Center `{z : z b = b z for all basis b}` as an embedding.
    pub fn center(&self) -> Embedding {
        let n = self.dim();
        let blocks: Vec<Matrix> = (0..n)
            .map(|i| {
                let b = self.basis_vector(i);
                self.right_mul_matrix(&b).sub(&self.left_mul_matrix(&b))
            })
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Embedding::from_subspace(crate::linalg::Subspace::kernel(&Matrix::vstack(&refs)))
    }

    /// Subalgebra spanned by the given basis vectors (assumed independent),
    /// validated for closure and unit membership.
    pub fn subalgebra(&self, embedding: &Embedding, labels: Vec<String>) -> Result<FdAlgebra> {
        let d = embedding.dim();
        assert_eq!(labels.len(), d);
        if !embedding.subspace().contains(&self.unit) {
            return Err(Error::NotSubalgebra("unit not contained".into()));
        }
        let mut consts = Vec::with_capacity(d * d * d);
        let basis = embedding.basis_vectors();
        for x in &basis {
            for y in &basis {
                let p = self.mul(x, y);
                let c = embedding
                    .coords(&p)
                    .ok_or_else(|| Error::NotSubalgebra("not closed under multiplication".into()))?;
                consts.extend(c);
            }
        }
        let unit = embedding.coords(&self.unit).expect("unit checked above");
        Ok(FdAlgebra::new_unchecked(self.field, labels, consts, unit))
    }

    /// Human-readable form of an element, e.g. `c+c2` or `1/2*e11-e22`.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        format_combination(&self.labels, v)
    }
}

/// Formats `Σ v_i label_i`.
pub fn format_combination(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, x) in vector::support(v) {
        let neg = x.is_negative();
        let mag = if neg { -x } else { x.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&labels[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Product in `X ⊗ Y` computed factorwise from the two algebras
/// (coordinates `i * dim Y + j`).
pub fn tensor_mul(x: &FdAlgebra, y: &FdAlgebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let (n, m) = (x.dim(), y.dim());
    assert_eq!(u.len(), n * m);
    assert_eq!(v.len(), n * m);
    let mut out = vector::zeros(x.field(), n * m);
    for (p, a) in vector::support(u) {
        let (i, j) = (p / m, p % m);
        for (q, b) in vector::support(v) {
            let (k, l) = (q / m, q % m);
            let ab = a * b;
            for (s, c1) in vector::support(x.basis_product(i, k)) {
                let abc = &ab * c1;
                for (t, c2) in vector::support(y.basis_product(j, l)) {
                    out[s * m + t].add_mul(&abc, c2);
                }
            }
        }
    }
    out
}

/// Left multiplication by `z ∈ X ⊗ Y` on `X ⊗ Y`.
pub fn tensor_left_mul_matrix(x: &FdAlgebra, y: &FdAlgebra, z: &[Scalar]) -> Matrix {
    let d = x.dim() * y.dim();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| tensor_mul(x, y, z, &vector::unit(x.field(), d, j))).collect();
    Matrix::from_columns(x.field(), d, &cols)
}

/// Right multiplication by `z ∈ X ⊗ Y` on `X ⊗ Y`.
pub fn tensor_right_mul_matrix(x: &FdAlgebra, y: &FdAlgebra, z: &[Scalar]) -> Matrix {
    let d = x.dim() * y.dim();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|j| tensor_mul(x, y, &vector::unit(x.field(), d, j), z)).collect();
    Matrix::from_columns(x.field(), d, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units_multiply() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        assert_eq!(m2.dim(), 4);
        // e12 e21 = e11
        assert_eq!(m2.basis_product(1, 2), &m2.basis_vector(0)[..]);
        assert!(m2.check_associativity().is_ok());
        assert!(m2.check_unit().is_ok());
        assert!(!m2.is_commutative());
    }

    #[test]
    fn matrix_algebra_n1_is_ground_field() {
        let m1 = FdAlgebra::matrix_algebra(1, Field::Rational);
        assert_eq!(m1.dim(), 1);
        assert!(m1.unit()[0].is_one());
    }

    #[test]
    fn m3_over_f3() {
        let m3 = FdAlgebra::matrix_algebra(3, Field::prime(3).unwrap());
        assert_eq!(m3.dim(), 9);
        assert!(m3.check_associativity().is_ok());
    }

    #[test]
    fn center_of_m2_is_scalars() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        let z = m2.center();
        assert_eq!(z.dim(), 1);
        assert!(z.subspace().contains(m2.unit()));
    }

    #[test]
    fn non_associative_constants_rejected() {
        let q = Field::Rational;
        // basis {1, x} with x·x = 1 + x is associative; x·1 = 0 breaks the unit.
        let consts = vec![
            q.one(), q.zero(), q.zero(), q.one(), //
            q.zero(), q.zero(), q.one(), q.one(),
        ];
        let err = FdAlgebra::new(q, vec!["1".into(), "x".into()], consts, vec![q.one(), q.zero()]);
        assert!(matches!(err, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn format_combination_signs() {
        let q = Field::Rational;
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let v = vec![q.from_i64(-1), q.zero(), q.parse("1/2").unwrap()];
        assert_eq!(format_combination(&labels, &v), "-a+1/2*c");
    }

    #[test]
    fn tensor_mul_matches_kron_of_left_mults() {
        let q = Field::Rational;
        let m2 = FdAlgebra::matrix_algebra(2, q);
        let u = vector::tensor(&m2.basis_vector(1), &m2.basis_vector(2));
        let l = tensor_left_mul_matrix(&m2, &m2, &u);
        let k = m2.left_mul_matrix(&m2.basis_vector(1)).kron(&m2.left_mul_matrix(&m2.basis_vector(2)));
        assert_eq!(l, k);
    }
}
