use crate::algebra::{format_combination, tensor_mul, Embedding, FdAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{balanced_tensor, descend, intertwiners, unvec, vector, Matrix, QuotientSpace, Subspace};

/// An inclusion `B ⊆ A` of finite-dimensional algebras.
#[derive(Clone, Debug)]
pub struct Extension {
    ambient: FdAlgebra,
    sub: Embedding,
    sub_algebra: FdAlgebra,
}

impl Extension {
    /// `B` is the span of `spanning` (ambient coordinates); it must contain
    /// the unit and be closed under multiplication.
    pub fn new(ambient: FdAlgebra, spanning: &[Vec<Scalar>]) -> Result<Extension> {
        let field = ambient.field();
        let n = ambient.dim();
        if spanning.iter().any(|v| v.len() != n) {
            return Err(Error::Shape(format!("subalgebra generators must have length {n}")));
        }
        let (sub, _) = Embedding::from_spanning(field, n, spanning);
        let labels = sub.basis_vectors().iter().map(|v| ambient.format_element(v)).collect();
        let sub_algebra = ambient.subalgebra(&sub, labels)?;
        Ok(Extension { ambient, sub, sub_algebra })
    }

    /// `A | A`.
    pub fn trivial(ambient: FdAlgebra) -> Extension {
        let spanning: Vec<Vec<Scalar>> = (0..ambient.dim()).map(|i| ambient.basis_vector(i)).collect();
        Extension::new(ambient, &spanning).expect("whole algebra is a subalgebra")
    }

    /// `A | k·1`.
    pub fn over_ground(ambient: FdAlgebra) -> Extension {
        let unit = ambient.unit().to_vec();
        Extension::new(ambient, &[unit]).expect("scalars form a subalgebra")
    }

    pub fn field(&self) -> Field {
        self.ambient.field()
    }

    pub fn ambient(&self) -> &FdAlgebra {
        &self.ambient
    }

    pub fn sub(&self) -> &Embedding {
        &self.sub
    }

    pub fn sub_algebra(&self) -> &FdAlgebra {
        &self.sub_algebra
    }

    /// Basis of `B` in ambient coordinates.
    pub fn sub_basis(&self) -> Vec<Vec<Scalar>> {
        self.sub.basis_vectors()
    }

    fn sub_left_mults(&self) -> Vec<Matrix> {
        self.sub_basis().iter().map(|b| self.ambient.left_mul_matrix(b)).collect()
    }

    fn sub_right_mults(&self) -> Vec<Matrix> {
        self.sub_basis().iter().map(|b| self.ambient.right_mul_matrix(b)).collect()
    }

    /// `R = C_A(B)` as a subspace of `A` together with its algebra structure.
    pub fn centralizer(&self) -> (Embedding, FdAlgebra) {
        let blocks: Vec<Matrix> = self
            .sub_left_mults()
            .iter()
            .zip(self.sub_right_mults())
            .map(|(l, r)| l.sub(&r))
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let emb = Embedding::from_subspace(Subspace::kernel(&Matrix::vstack(&refs)));
        let labels = emb.basis_vectors().iter().map(|v| self.ambient.format_element(v)).collect();
        let alg = self.ambient.subalgebra(&emb, labels).expect("centralizer is a subalgebra");
        (emb, alg)
    }

    /// Linear endomorphisms of `A` commuting with the chosen `B`-actions.
    pub fn hom_space(&self, constraint: HomConstraint) -> EndoAlgebra {
        let n = self.ambient.dim();
        let field = self.field();
        let (on, label) = match constraint {
            HomConstraint::LeftLinear => (self.sub_left_mults(), "f"),
            HomConstraint::RightLinear => (self.sub_right_mults(), "g"),
            HomConstraint::Bilinear => {
                let mut all = self.sub_left_mults();
                all.extend(self.sub_right_mults());
                (all, "s")
            }
        };
        let space = intertwiners(&on, &on, n, n, field);
        EndoAlgebra::from_subspace(field, n, constraint, space, label)
    }

    /// `A ⊗_B A` with its induced actions.
    pub fn tensor_over_sub(&self) -> TensorOverSub {
        let n = self.ambient.dim();
        let field = self.field();
        let quotient = balanced_tensor(&self.sub_right_mults(), &self.sub_left_mults(), n, n, field);
        let id = Matrix::identity(field, n);
        let mut left_action = Vec::with_capacity(n);
        let mut right_action = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.ambient.basis_vector(i);
            let l = self.ambient.left_mul_matrix(&a).kron(&id);
            let r = id.kron(&self.ambient.right_mul_matrix(&a));
            left_action.push(descend(&l, &quotient, &quotient, "left A-action on A⊗_B A").expect("left action descends"));
            right_action.push(descend(&r, &quotient, &quotient, "right A-action on A⊗_B A").expect("right action descends"));
        }
        TensorOverSub { field, a_dim: n, quotient, left_action, right_action }
    }

    /// `T = (A ⊗_B A)^B` with the product `t t' = t'¹t¹ ⊗ t²t'²`.
    pub fn central_part(&self, tensor: &TensorOverSub) -> CentralTensor {
        let blocks: Vec<Matrix> = self
            .sub_basis()
            .iter()
            .map(|b| tensor.act_left(b).sub(&tensor.act_right(b)))
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let embedding = Embedding::from_subspace(Subspace::kernel(&Matrix::vstack(&refs)));
        let a = &self.ambient;
        let a_op = a.opposite();
        let field = self.field();
        let d = embedding.dim();
        let lifts: Vec<Vec<Scalar>> = embedding.basis_vectors().iter().map(|t| tensor.quotient.lift(t)).collect();
        let mut consts = Vec::with_capacity(d * d * d);
        for x in &lifts {
            for y in &lifts {
                let prod = tensor.quotient.project(&tensor_mul(&a_op, a, x, y));
                consts.extend(embedding.coords(&prod).expect("T is closed under its product"));
            }
        }
        let one = tensor.class_of(a.unit(), a.unit());
        let unit = embedding.coords(&one).expect("1⊗1 is B-central");
        let labels = (0..d).map(|i| format!("t{i}")).collect();
        let algebra = FdAlgebra::new_unchecked(field, labels, consts, unit);
        CentralTensor { embedding, algebra }
    }
}

/// Which `B`-actions an endomorphism of `A` must commute with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomConstraint {
    /// `f(ba) = b f(a)`
    LeftLinear,
    /// `f(ab) = f(a) b`
    RightLinear,
    /// both
    Bilinear,
}

impl HomConstraint {
    pub fn describe(self) -> &'static str {
        match self {
            HomConstraint::LeftLinear => "left B-linear",
            HomConstraint::RightLinear => "right B-linear",
            HomConstraint::Bilinear => "B-B-bilinear",
        }
    }
}

/// A space of endomorphisms of `A` (as `n x n` matrices) closed under
/// composition, with `f · g = f ∘ g`.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    constraint: HomConstraint,
    n: usize,
    embedding: Embedding,
    maps: Vec<Matrix>,
    algebra: FdAlgebra,
}

impl EndoAlgebra {
    fn from_subspace(field: Field, n: usize, constraint: HomConstraint, space: Subspace, label: &str) -> EndoAlgebra {
        let embedding = Embedding::from_subspace(space);
        let maps: Vec<Matrix> = embedding.basis_vectors().iter().map(|v| unvec(field, n, n, v)).collect();
        let d = maps.len();
        let mut consts = Vec::with_capacity(d * d * d);
        for f in &maps {
            for g in &maps {
                let fg = f.mul(g);
                consts.extend(embedding.coords(fg.data()).expect("composition closes"));
            }
        }
        let identity = Matrix::identity(field, n);
        let unit = embedding.coords(identity.data()).expect("identity commutes with every action");
        let labels = (0..d).map(|i| format!("{label}{i}")).collect();
        let algebra = FdAlgebra::new_unchecked(field, labels, consts, unit);
        EndoAlgebra { constraint, n, embedding, maps, algebra }
    }

    pub fn constraint(&self) -> HomConstraint {
        self.constraint
    }

    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Dimension of the algebra the maps act on.
    pub fn domain_dim(&self) -> usize {
        self.n
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &Matrix {
        &self.maps[i]
    }

    pub fn algebra(&self) -> &FdAlgebra {
        &self.algebra
    }

    /// `Σ c_i f_i`.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        unvec(self.embedding.field(), self.n, self.n, &self.embedding.element(coords))
    }

    /// Coordinates of a map in this basis, `None` if it is not in the space.
    pub fn coords(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        self.embedding.coords(f.data())
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        self.embedding.contains(f.data())
    }
}

/// `A ⊗_B A` realised as a quotient of `A ⊗ A`.
#[derive(Clone, Debug)]
pub struct TensorOverSub {
    field: Field,
    a_dim: usize,
    quotient: QuotientSpace,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

impl TensorOverSub {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    /// Left action of the `i`-th basis element of `A`.
    pub fn left_action(&self, i: usize) -> &Matrix {
        &self.left_action[i]
    }

    pub fn right_action(&self, i: usize) -> &Matrix {
        &self.right_action[i]
    }

    fn combine(&self, actions: &[Matrix], a: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for (i, c) in vector::support(a) {
            out = out.add(&actions[i].scale(c));
        }
        out
    }

    /// `x ↦ a·x`.
    pub fn act_left(&self, a: &[Scalar]) -> Matrix {
        self.combine(&self.left_action, a)
    }

    /// `x ↦ x·a`.
    pub fn act_right(&self, a: &[Scalar]) -> Matrix {
        self.combine(&self.right_action, a)
    }

    /// Class of `a ⊗ a'`.
    pub fn class_of(&self, a: &[Scalar], a2: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.a_dim);
        self.quotient.project(&vector::tensor(a, a2))
    }
}

/// `T = (A ⊗_B A)^B` inside the quotient coordinates of `A ⊗_B A`.
#[derive(Clone, Debug)]
pub struct CentralTensor {
    embedding: Embedding,
    algebra: FdAlgebra,
}

impl CentralTensor {
    pub fn dim(&self) -> usize {
        self.embedding.dim()
    }

    /// Basis of `T` in quotient coordinates.
    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn algebra(&self) -> &FdAlgebra {
        &self.algebra
    }

    /// A representative in `A ⊗ A` of the `T`-element with these coordinates.
    pub fn lift(&self, tensor: &TensorOverSub, coords: &[Scalar]) -> Vec<Scalar> {
        tensor.quotient().lift(&self.embedding.element(coords))
    }
}

/// Formats a tensor `Σ x_ij a_i ⊗ a_j` given in `A ⊗ A` coordinates.
pub fn format_tensor(labels_left: &[String], labels_right: &[String], v: &[Scalar]) -> String {
    let m = labels_right.len();
    let labels: Vec<String> = (0..labels_left.len() * m)
        .map(|p| format!("{}⊗{}", labels_left[p / m], labels_right[p % m]))
        .collect();
    format_combination(&labels, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;

    fn s3_over_a3() -> Extension {
        let g = Group::s3();
        let a = FdAlgebra::group_algebra(&g, Field::Rational);
        let gen = ["1", "(123)", "(132)"].map(|l| a.basis_vector(g.index_of(l).unwrap()));
        Extension::new(a, &gen).unwrap()
    }

    #[test]
    fn centralizer_examples() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        assert_eq!(Extension::trivial(m2.clone()).centralizer().0.dim(), 1);
        assert_eq!(Extension::over_ground(m2).centralizer().0.dim(), 4);
        let ext = s3_over_a3();
        let (r, _) = ext.centralizer();
        assert_eq!(r.dim(), 4);
        for v in r.basis_vectors() {
            for b in ext.sub_basis() {
                assert_eq!(ext.ambient().mul(&v, &b), ext.ambient().mul(&b, &v));
            }
        }
    }

    #[test]
    fn hom_space_examples() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        assert_eq!(Extension::trivial(m2.clone()).hom_space(HomConstraint::Bilinear).dim(), 1);
        assert_eq!(Extension::over_ground(m2).hom_space(HomConstraint::LeftLinear).dim(), 16);
        let e = s3_over_a3().hom_space(HomConstraint::LeftLinear);
        assert_eq!(e.dim(), 12);
        assert!(e.algebra().check_associativity().is_ok());
        assert!(e.algebra().check_unit().is_ok());
    }

    #[test]
    fn tensor_over_sub_examples() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        assert_eq!(Extension::trivial(m2.clone()).tensor_over_sub().dim(), 4);
        assert_eq!(Extension::over_ground(m2).tensor_over_sub().dim(), 16);
        let ext = s3_over_a3();
        let t = ext.tensor_over_sub();
        assert_eq!(t.dim(), 12);
        assert!(t.quotient().check_invariants());
        let n = ext.ambient().dim();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(t.left_action(i).mul(t.right_action(j)), t.right_action(j).mul(t.left_action(i)));
            }
        }
    }

    #[test]
    fn central_part_examples() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        let triv = Extension::trivial(m2.clone());
        assert_eq!(triv.central_part(&triv.tensor_over_sub()).dim(), 1);
        let ground = Extension::over_ground(m2);
        let t = ground.central_part(&ground.tensor_over_sub());
        assert_eq!(t.dim(), 16);
        assert!(t.algebra().check_associativity().is_ok());

        let ext = s3_over_a3();
        let tensor = ext.tensor_over_sub();
        let t = ext.central_part(&tensor);
        assert!(t.algebra().check_associativity().is_ok());
        assert!(t.algebra().check_unit().is_ok());
    }

    #[test]
    fn non_closed_span_rejected() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        let gen = vec![m2.unit().to_vec(), m2.basis_vector(1)];
        assert!(Extension::new(m2.clone(), &gen).is_ok());
        let gen = vec![m2.unit().to_vec(), m2.basis_vector(1), m2.basis_vector(2)];
        assert!(matches!(Extension::new(m2, &gen), Err(Error::NotSubalgebra(_))));
    }
}
