use crate::algebra::{tensor_left_mul_matrix, tensor_mul, tensor_right_mul_matrix, Embedding, FdAlgebra};
use crate::checks::CheckList;
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Subspace};

use super::WeakBialgebra;

/// A right `H`-comodule algebra `ρ : A -> A ⊗ H`.
#[derive(Clone, Debug)]
pub struct WhComoduleAlgebra {
    pub algebra: FdAlgebra,
    pub hopf: WeakBialgebra,
    /// `dim A · dim H × dim A`
    pub rho: Matrix,
    pub coinvariants: Embedding,
    /// `(A⊗H)ρ(1)`
    pub corner: Subspace,
    /// `ρ(1)(A⊗H)`
    pub corner_bar: Subspace,
    pub checks: CheckList,
}

impl WhComoduleAlgebra {
    pub fn rho_one(&self) -> Vec<crate::Scalar> {
        self.rho.mul_vec(self.algebra.unit())
    }

    /// `p(a⊗h) = a1₀ ⊗ h1₁`
    pub fn p(&self) -> Matrix {
        tensor_right_mul_matrix(&self.algebra, &self.hopf.algebra, &self.rho_one())
    }

    /// `p̄(a⊗h) = 1₀a ⊗ 1₁h`
    pub fn p_bar(&self) -> Matrix {
        tensor_left_mul_matrix(&self.algebra, &self.hopf.algebra, &self.rho_one())
    }
}

pub fn comodule_check(algebra: FdAlgebra, hopf: WeakBialgebra, rho: Matrix) -> Result<WhComoduleAlgebra> {
    let field = algebra.field();
    let (na, nh) = (algebra.dim(), hopf.dim());
    if rho.rows() != na * nh || rho.cols() != na {
        return Err(Error::Shape("coaction must be a (dim A · dim H) × dim A matrix".into()));
    }
    let h = &hopf.algebra;
    let id_a = Matrix::identity(field, na);
    let one_a = algebra.unit().to_vec();
    let one_h = h.unit().to_vec();
    let rho_one = rho.mul_vec(&one_a);
    let basis: Vec<Vec<crate::Scalar>> = (0..na).map(|i| algebra.basis_vector(i)).collect();
    let mut checks = CheckList::new();
    checks.push(
        "coaction coassociative",
        rho.kron(&Matrix::identity(field, nh)).mul(&rho) == id_a.kron(&hopf.coproduct).mul(&rho),
    );
    checks.push("coaction counital", id_a.kron(&hopf.counit_row()).mul(&rho).is_identity());
    checks.push(
        "coaction multiplicative",
        basis.iter().all(|x| basis.iter().all(|y| rho.mul_vec(&algebra.mul(x, y)) == tensor_mul(&algebra, h, &rho.mul_vec(x), &rho.mul_vec(y)))),
    );

    let h_l = hopf.h_l();
    let a_hl = Subspace::span(field, na * nh, basis.iter().flat_map(|a| h_l.basis().iter().map(move |x| vector::tensor(a, x))).collect::<Vec<_>>());
    checks.push("1₀⊗1₁ ∈ A⊗H^L", a_hl.contains(&rho_one));
    let left_one = tensor_left_mul_matrix(&algebra, h, &rho_one);
    let right_one = tensor_right_mul_matrix(&algebra, h, &rho_one);
    let pl = hopf.pi_l();
    let pbr = hopf.pi_bar_r();
    checks.push(
        "a₀⊗Π^L(a₁) = 1₀a⊗1₁",
        basis.iter().all(|a| id_a.kron_apply(&pl, &rho.mul_vec(a)) == left_one.mul_vec(&vector::tensor(a, &one_h))),
    );
    checks.push(
        "a₀⊗Π̄^R(a₁) = a1₀⊗1₁",
        basis.iter().all(|a| id_a.kron_apply(&pbr, &rho.mul_vec(a)) == right_one.mul_vec(&vector::tensor(a, &one_h))),
    );
    // (ρ(1)⊗1)(1⊗Δ(1)) in A⊗H⊗H
    let d1 = hopf.delta(&one_h);
    let mut rhs = vector::zeros(field, na * nh * nh);
    for (ip, c) in vector::support(&rho_one) {
        let (i, p) = (ip / nh, ip % nh);
        for (qr, d) in vector::support(&d1) {
            let (q, r) = (qr / nh, qr % nh);
            let cd = c * d;
            for (m, e) in vector::support(h.basis_product(p, q)) {
                rhs[(i * nh + m) * nh + r].add_mul(&cd, e);
            }
        }
    }
    checks.push(
        "1₀⊗1₁⊗1₂ = (ρ(1)⊗1)(1⊗Δ(1))",
        rho.kron_apply(&Matrix::identity(field, nh), &rho_one) == rhs,
    );

    let embed = Matrix::from_columns(field, na * nh, &basis.iter().map(|b| vector::tensor(b, &one_h)).collect::<Vec<_>>());
    let cond = Matrix::vstack(&[&rho.sub(&left_one.mul(&embed)), &rho.sub(&right_one.mul(&embed))]);
    let coinvariants = Embedding::from_subspace(Subspace::kernel(&cond));
    checks.push("coinvariants form a subalgebra", {
        let b = coinvariants.basis_vectors();
        coinvariants.contains(&one_a) && b.iter().all(|x| b.iter().all(|y| coinvariants.contains(&algebra.mul(x, y))))
    });
    let corner = Subspace::image(&right_one);
    let corner_bar = Subspace::image(&left_one);
    checks.push("Im ρ ⊆ (A⊗H)ρ(1)", basis.iter().all(|a| corner.contains(&rho.mul_vec(a))));
    Ok(WhComoduleAlgebra { algebra, hopf, rho, coinvariants, corner, corner_bar, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;
    use crate::field::Field;
    use crate::weak_hopf::WeakHopfAlgebra;

    fn self_coaction(h: &WeakHopfAlgebra) -> WhComoduleAlgebra {
        let wb = h.bialgebra.clone();
        comodule_check(wb.algebra.clone(), wb.clone(), wb.coproduct.clone()).unwrap()
    }

    #[test]
    fn self_coaction_has_h_l_as_coinvariants() {
        let h = WeakHopfAlgebra::groupoid(2, Field::Rational);
        let c = self_coaction(&h);
        assert!(c.checks.all_passed(), "{:?}", c.checks.failures());
        assert_eq!(c.coinvariants.dim(), 2);
        let hl = h.bialgebra.h_l();
        assert!(hl.contains_subspace(c.coinvariants.subspace()) && c.coinvariants.subspace().contains_subspace(&hl));
    }

    #[test]
    fn group_self_coaction_has_scalars_as_coinvariants() {
        let h = WeakHopfAlgebra::group(&Group::cyclic(2), Field::Rational);
        let c = self_coaction(&h);
        assert!(c.checks.all_passed());
        assert_eq!(c.coinvariants.dim(), 1);
        assert_eq!(c.corner.dim(), 4);
    }

    #[test]
    fn non_coaction_is_flagged() {
        let h = WeakHopfAlgebra::group(&Group::cyclic(2), Field::Rational);
        let wb = h.bialgebra.clone();
        let bad = wb.coproduct.scale(&Field::Rational.from_i64(2));
        let c = comodule_check(wb.algebra.clone(), wb, bad).unwrap();
        assert!(!c.checks.all_passed());
    }
}
