//! Depth-two quasibases, balancedness and the invariant subring `A^S`.

use crate::algebra::{CentralTensor, EndoAlgebra, Embedding, Extension, FdAlgebra, HomConstraint, TensorOverSub};
use crate::field::{Field, Scalar};
use crate::linalg::{intertwiners, unvec, vector, Matrix, Subspace};

/// The objects attached to an extension `A | B`: the centralizer `R`, the
/// endomorphism rings `S = End_B A_B` and `𝓔 = End_B A`, the quotient
/// `A ⊗_B A` and its `B`-central part `T`.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub ext: Extension,
    /// `R` inside `A`.
    pub r: Embedding,
    pub r_alg: FdAlgebra,
    pub s: EndoAlgebra,
    pub e: EndoAlgebra,
    pub tensor: TensorOverSub,
    pub t: CentralTensor,
}

impl ExtensionData {
    pub fn new(ext: Extension) -> ExtensionData {
        let (r, r_alg) = ext.centralizer();
        let s = ext.hom_space(HomConstraint::Bilinear);
        let e = ext.hom_space(HomConstraint::LeftLinear);
        let tensor = ext.tensor_over_sub();
        let t = ext.central_part(&tensor);
        ExtensionData { ext, r, r_alg, s, e, tensor, t }
    }

    pub fn field(&self) -> Field {
        self.ext.field()
    }

    pub fn a(&self) -> &FdAlgebra {
        self.ext.ambient()
    }

    pub fn n(&self) -> usize {
        self.a().dim()
    }

    /// `T`-coordinates to `A ⊗_B A` quotient coordinates.
    pub fn t_class(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.t.embedding().element(coords)
    }

    /// A representative in `A ⊗ A` of a `T` element.
    pub fn t_lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.t.lift(&self.tensor, coords)
    }

    /// `T` coordinates of a class in `A ⊗_B A`, if it is `B`-central.
    pub fn t_coords(&self, class: &[Scalar]) -> Option<Vec<Scalar>> {
        self.t.embedding().coords(class)
    }

    /// `R` element (coordinates) as an element of `A`.
    pub fn r_elem(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.r.element(coords)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Paired elements of `T` and `S`: `(t_i, β_i)` on the left with
/// `a ⊗ a' = Σ t_i β_i(a) a'`, `(u_j, γ_j)` on the right with
/// `a ⊗ a' = Σ a γ_j(a') u_j`.
#[derive(Clone, Debug)]
pub struct Quasibase {
    pub side: Side,
    /// `T` coordinates (`t_i` or `u_j`).
    pub t: Vec<Vec<Scalar>>,
    /// `S` coordinates (`β_i` or `γ_j`).
    pub s: Vec<Vec<Scalar>>,
}

impl Quasibase {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// `β_i` / `γ_j` as matrices on `A`.
    pub fn s_maps(&self, data: &ExtensionData) -> Vec<Matrix> {
        self.s.iter().map(|c| data.s.element(c)).collect()
    }

    /// `Σ_i t_i β_i(a) a'` (left) or `Σ_j a γ_j(a') u_j` (right) in
    /// `A ⊗_B A` coordinates.
    pub fn expand(&self, data: &ExtensionData, a: &[Scalar], a2: &[Scalar]) -> Vec<Scalar> {
        let alg = data.a();
        let mut out = vector::zeros(data.field(), data.tensor.dim());
        for (t, s) in self.t.iter().zip(self.s_maps(data)) {
            let class = data.t_class(t);
            let v = match self.side {
                Side::Left => data.tensor.act_right(&alg.mul(&s.mul_vec(a), a2)).mul_vec(&class),
                Side::Right => data.tensor.act_left(&alg.mul(a, &s.mul_vec(a2))).mul_vec(&class),
            };
            out = vector::add(&out, &v);
        }
        out
    }

    /// Re-substitutes into the defining identity on every basis pair.
    pub fn verify(&self, data: &ExtensionData) -> bool {
        let alg = data.a();
        let n = alg.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, a2) = (alg.basis_vector(i), alg.basis_vector(j));
                self.expand(data, &a, &a2) == data.tensor.class_of(&a, &a2)
            })
        })
    }
}

/// Solves for a left quasibase. By right `A`-linearity of both sides it is
/// enough to impose the identity at `a' = 1`.
pub fn find_left_quasibase(data: &ExtensionData) -> Option<Quasibase> {
    find_quasibase(data, Side::Left)
}

/// Solves for a right quasibase, imposing the identity at `a = 1`.
pub fn find_right_quasibase(data: &ExtensionData) -> Option<Quasibase> {
    find_quasibase(data, Side::Right)
}

#[allow(clippy::needless_range_loop)]
fn find_quasibase(data: &ExtensionData, side: Side) -> Option<Quasibase> {
    let field = data.field();
    let alg = data.a();
    let n = alg.dim();
    let (dt, ds, dq) = (data.t.dim(), data.s.dim(), data.tensor.dim());
    if dt == 0 || ds == 0 {
        return None;
    }
    // acted[k][p] = b_k acting on t_p (from the right for the left quasibase)
    let t_classes: Vec<Vec<Scalar>> = (0..dt).map(|p| data.t_class(&vector::unit(field, dt, p))).collect();
    let acted: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|k| {
            let m = match side {
                Side::Left => data.tensor.right_action(k),
                Side::Right => data.tensor.left_action(k),
            };
            t_classes.iter().map(|t| m.mul_vec(t)).collect()
        })
        .collect();
    // unknown X[p][q] at column p * ds + q; rows (a, quotient coordinate)
    let mut system = Matrix::zeros(field, n * dq, dt * ds);
    let mut rhs = Matrix::zeros(field, n * dq, 1);
    let one = alg.unit();
    for i in 0..n {
        let a = alg.basis_vector(i);
        let target = match side {
            Side::Left => data.tensor.class_of(&a, one),
            Side::Right => data.tensor.class_of(one, &a),
        };
        for (row, x) in target.into_iter().enumerate() {
            rhs.set(i * dq + row, 0, x);
        }
        for q in 0..ds {
            let w = data.s.map(q).mul_vec(&a);
            for p in 0..dt {
                let mut v = vector::zeros(field, dq);
                for (k, c) in vector::support(&w) {
                    vector::axpy(&mut v, c, &acted[k][p]);
                }
                for (row, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        system.set(i * dq + row, p * ds + q, x);
                    }
                }
            }
        }
    }
    let x = system.solve(&rhs).expect("shapes agree").particular?;
    let x = Matrix::new(field, dt, ds, x.column(0));
    let (p, q) = x.rank_factorization();
    let qb = Quasibase { side, t: p.column_vectors(), s: q.row_vectors() };
    debug_assert!(qb.verify(data));
    Some(qb)
}

/// Whether `A_B` is balanced: the commutant of `End(A_B)` inside `End_k(A)`
/// is exactly `ρ(B)`.
pub fn is_balanced(ext: &Extension) -> bool {
    let field = ext.field();
    let alg = ext.ambient();
    let n = alg.dim();
    let right_linear = ext.hom_space(HomConstraint::RightLinear);
    let commutant = intertwiners(right_linear.maps(), right_linear.maps(), n, n, field);
    let rho_b = Subspace::span(
        field,
        n * n,
        ext.sub_basis().iter().map(|b| alg.right_mul_matrix(b).data().to_vec()),
    );
    commutant == rho_b
}

/// `A^S = {a : α(a) = α(1) a for all α ∈ S}`.
pub fn invariant_subring(data: &ExtensionData) -> Subspace {
    let alg = data.a();
    let blocks: Vec<Matrix> = data
        .s
        .maps()
        .iter()
        .map(|alpha| alpha.sub(&alg.left_mul_matrix(&alpha.mul_vec(alg.unit()))))
        .collect();
    if blocks.is_empty() {
        return Subspace::full(data.field(), alg.dim());
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Subspace::kernel(&Matrix::vstack(&refs))
}

/// Summary of the depth-two analysis of an extension.
#[derive(Clone, Debug)]
pub struct D2Report {
    pub left: Option<Quasibase>,
    pub right: Option<Quasibase>,
    pub dim_r: usize,
    pub dim_s: usize,
    pub dim_t: usize,
    pub dim_e: usize,
    pub dim_tensor: usize,
    pub balanced: bool,
    pub invariants_equal_b: bool,
}

impl D2Report {
    pub fn left_d2(&self) -> bool {
        self.left.is_some()
    }

    pub fn right_d2(&self) -> bool {
        self.right.is_some()
    }
}

pub fn analyze(data: &ExtensionData) -> D2Report {
    let left = find_left_quasibase(data);
    let right = find_right_quasibase(data);
    let inv = invariant_subring(data);
    D2Report {
        left,
        right,
        dim_r: data.r.dim(),
        dim_s: data.s.dim(),
        dim_t: data.t.dim(),
        dim_e: data.e.dim(),
        dim_tensor: data.tensor.dim(),
        balanced: is_balanced(&data.ext),
        invariants_equal_b: &inv == data.ext.sub().subspace(),
    }
}

/// `T` element with the given `A ⊗ A` representative, unvectorised as an
/// `n x n` coefficient matrix (row = first factor).
pub fn tensor_as_matrix(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    unvec(field, n, n, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;

    fn group_ext(sub: &[&str]) -> Extension {
        let g = Group::s3();
        let a = FdAlgebra::group_algebra(&g, Field::Rational);
        let gen: Vec<Vec<Scalar>> = sub.iter().map(|l| a.basis_vector(g.index_of(l).unwrap())).collect();
        Extension::new(a, &gen).unwrap()
    }

    fn diagonal(n: usize, field: Field) -> Extension {
        let m = FdAlgebra::matrix_algebra(n, field);
        let gen: Vec<Vec<Scalar>> = (0..n).map(|i| m.basis_vector(i * n + i)).collect();
        Extension::new(m, &gen).unwrap()
    }

    #[test]
    fn trivial_extension_has_unit_quasibases() {
        let data = ExtensionData::new(Extension::trivial(FdAlgebra::matrix_algebra(2, Field::Rational)));
        let l = find_left_quasibase(&data).unwrap();
        assert_eq!(l.len(), 1);
        assert!(l.verify(&data));
        assert!(find_right_quasibase(&data).unwrap().verify(&data));
    }

    #[test]
    fn s3_over_a3_is_depth_two() {
        let data = ExtensionData::new(group_ext(&["1", "(123)", "(132)"]));
        let report = analyze(&data);
        assert!(report.left.as_ref().unwrap().verify(&data));
        assert!(report.right.as_ref().unwrap().verify(&data));
        assert_eq!(report.dim_r, 4);
        assert_eq!(report.dim_e, 12);
        assert_eq!(report.dim_tensor, 12);
        assert!(report.balanced);
        assert!(report.invariants_equal_b);
    }

    #[test]
    fn s3_over_order_two_subgroup_is_not_depth_two() {
        let data = ExtensionData::new(group_ext(&["1", "(12)"]));
        assert!(find_left_quasibase(&data).is_none());
        assert!(find_right_quasibase(&data).is_none());
    }

    #[test]
    fn matrix_over_diagonal_is_depth_two() {
        let data = ExtensionData::new(diagonal(2, Field::Rational));
        assert!(find_right_quasibase(&data).unwrap().verify(&data));
        assert!(find_left_quasibase(&data).unwrap().verify(&data));
    }

    #[test]
    fn balanced_examples() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        assert!(is_balanced(&Extension::trivial(m2.clone())));
        assert!(is_balanced(&Extension::over_ground(m2)));
    }

    #[test]
    fn invariant_subring_over_ground_field() {
        let m2 = FdAlgebra::matrix_algebra(2, Field::Rational);
        let data = ExtensionData::new(Extension::over_ground(m2.clone()));
        let inv = invariant_subring(&data);
        assert_eq!(inv.dim(), 1);
        assert!(inv.contains(m2.unit()));
    }
}
