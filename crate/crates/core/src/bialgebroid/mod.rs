//! Bialgebroids over a noncommutative base, the pair `S`, `T` attached to a
//! depth-two extension, their coactions and the endomorphism-ring Galois
//! extension `𝓔 | ρ(A)`.

mod coaction;
mod endo_galois;
mod s_and_t;

pub use coaction::{coaction_on_a, coaction_on_e, ACoaction, ECoaction};
pub use endo_galois::{endo_galois, EndoGalois};
pub use s_and_t::{build_s, build_t, pairings, Pairings, SBialgebroid, TBialgebroid};

use crate::algebra::{tensor_mul, FdAlgebra};
use crate::checks::CheckList;
use crate::depth_two::Side;
use crate::field::{Field, Scalar};
use crate::linalg::{balanced_tensor, descend, vector, Matrix, QuotientSpace};

/// A left or right bialgebroid with total algebra `X` over base `R`, all
/// structure maps as matrices in the chosen bases.
///
/// Left: `r·x·r' = s(r)t(r')x`, relations `t(r)x ⊗ y ~ x ⊗ s(r)y`.
/// Right: `r·x·r' = x t(r)s(r')`, relations `x s(r) ⊗ y ~ x ⊗ y t(r)`.
#[derive(Clone, Debug)]
pub struct Bialgebroid {
    pub side: Side,
    pub total: FdAlgebra,
    pub base: FdAlgebra,
    /// `dim X x dim R`
    pub source: Matrix,
    /// `dim X x dim R`
    pub target: Matrix,
    /// `X ⊗_R X`
    pub tensor: QuotientSpace,
    /// `X -> X ⊗_R X`
    pub coproduct: Matrix,
    /// `X -> R`
    pub counit: Matrix,
}

impl Bialgebroid {
    /// The balanced square `X ⊗_R X` for the given source and target.
    pub fn tensor_square(side: Side, total: &FdAlgebra, source: &Matrix, target: &Matrix) -> QuotientSpace {
        let k = source.cols();
        let m = total.dim();
        let (on_first, on_second): (Vec<Matrix>, Vec<Matrix>) = (0..k)
            .map(|i| {
                let s = source.column(i);
                let t = target.column(i);
                match side {
                    Side::Left => (total.left_mul_matrix(&t), total.left_mul_matrix(&s)),
                    Side::Right => (total.right_mul_matrix(&s), total.right_mul_matrix(&t)),
                }
            })
            .unzip();
        balanced_tensor(&on_first, &on_second, m, m, total.field())
    }

    pub fn field(&self) -> Field {
        self.total.field()
    }

    fn s(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.source.mul_vec(r)
    }

    fn t(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.target.mul_vec(r)
    }

    /// `x ↦ r·x` on `X`.
    pub fn left_base_action(&self, r: &[Scalar]) -> Matrix {
        match self.side {
            Side::Left => self.total.left_mul_matrix(&self.s(r)),
            Side::Right => self.total.right_mul_matrix(&self.t(r)),
        }
    }

    /// `x ↦ x·r` on `X`.
    pub fn right_base_action(&self, r: &[Scalar]) -> Matrix {
        match self.side {
            Side::Left => self.total.left_mul_matrix(&self.t(r)),
            Side::Right => self.total.right_mul_matrix(&self.s(r)),
        }
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.coproduct.mul_vec(x)
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.counit.mul_vec(x)
    }

    /// Representative of `Δ(x)` in `X ⊗ X`.
    pub fn delta_lift(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.tensor.lift(&self.delta(x))
    }

    /// `(ε ⊗ id)` and `(id ⊗ ε)` on `X ⊗ X` as maps into `X`.
    fn counit_contractions(&self) -> (Matrix, Matrix) {
        let m = self.total.dim();
        let mut left_cols = Vec::with_capacity(m * m);
        let mut right_cols = Vec::with_capacity(m * m);
        for i in 0..m {
            let x = self.total.basis_vector(i);
            let ex = self.epsilon(&x);
            let act_ex = self.left_base_action(&ex);
            for j in 0..m {
                let y = self.total.basis_vector(j);
                left_cols.push(act_ex.mul_vec(&y));
                right_cols.push(self.right_base_action(&self.epsilon(&y)).mul_vec(&x));
            }
        }
        let field = self.field();
        (Matrix::from_columns(field, m, &left_cols), Matrix::from_columns(field, m, &right_cols))
    }

    /// Exhaustive axiom suite on basis elements.
    pub fn check_axioms(&self) -> CheckList {
        let mut checks = CheckList::new();
        let field = self.field();
        let x_alg = &self.total;
        let r_alg = &self.base;
        let m = x_alg.dim();
        let k = r_alg.dim();
        let xs: Vec<Vec<Scalar>> = (0..m).map(|i| x_alg.basis_vector(i)).collect();
        let rs: Vec<Vec<Scalar>> = (0..k).map(|i| r_alg.basis_vector(i)).collect();

        let s_mult = rs.iter().all(|a| rs.iter().all(|b| self.s(&r_alg.mul(a, b)) == x_alg.mul(&self.s(a), &self.s(b))));
        let t_anti = rs.iter().all(|a| rs.iter().all(|b| self.t(&r_alg.mul(a, b)) == x_alg.mul(&self.t(b), &self.t(a))));
        let units = self.s(r_alg.unit()) == x_alg.unit() && self.t(r_alg.unit()) == x_alg.unit();
        let commute = rs
            .iter()
            .all(|a| rs.iter().all(|b| x_alg.mul(&self.s(a), &self.t(b)) == x_alg.mul(&self.t(b), &self.s(a))));
        checks.push("source multiplicative", s_mult);
        checks.push("target anti-multiplicative", t_anti);
        checks.push("source and target unital", units);
        checks.push("source and target commute", commute);

        // Outer R-actions on X ⊗_R X.
        let id = Matrix::identity(field, m);
        let mut bimodule_ok = true;
        let mut outer_right = Vec::with_capacity(k);
        for r in &rs {
            let left = descend(&self.left_base_action(r).kron(&id), &self.tensor, &self.tensor, "outer left action");
            let right = descend(&id.kron(&self.right_base_action(r)), &self.tensor, &self.tensor, "outer right action");
            match (left, right) {
                (Ok(l), Ok(rr)) => {
                    let la = self.left_base_action(r);
                    let ra = self.right_base_action(r);
                    bimodule_ok &= xs.iter().all(|x| {
                        self.delta(&la.mul_vec(x)) == l.mul_vec(&self.delta(x))
                            && self.delta(&ra.mul_vec(x)) == rr.mul_vec(&self.delta(x))
                            && self.epsilon(&la.mul_vec(x)) == r_alg.mul(r, &self.epsilon(x))
                            && self.epsilon(&ra.mul_vec(x)) == r_alg.mul(&self.epsilon(x), r)
                    });
                    outer_right.push(rr);
                }
                _ => bimodule_ok = false,
            }
        }
        checks.push("coproduct and counit are R-bimodule maps", bimodule_ok);

        // Coassociativity in (X ⊗_R X) ⊗_R X.
        let coassoc = if outer_right.len() == k {
            let left_actions: Vec<Matrix> = rs.iter().map(|r| self.left_base_action(r)).collect();
            let q3 = balanced_tensor(&outer_right, &left_actions, self.tensor.dim(), m, field);
            let delta_lift = self.tensor.section().mul(&self.coproduct);
            let p2 = self.tensor.projection();
            let lhs_map = |v: &[Scalar]| q3.project(&self.coproduct.kron_apply(&id, v));
            let rhs_map = |v: &[Scalar]| q3.project(&p2.kron_apply(&id, &id.kron_apply(&delta_lift, v)));
            let descends = self
                .tensor
                .relations()
                .basis()
                .iter()
                .all(|rel| vector::is_zero(&lhs_map(rel)) && vector::is_zero(&rhs_map(rel)));
            descends
                && xs.iter().all(|x| {
                    let d = self.delta_lift(x);
                    lhs_map(&d) == rhs_map(&d)
                })
        } else {
            false
        };
        checks.push("coassociative", coassoc);

        let (eps_left, eps_right) = self.counit_contractions();
        let counit_left = descend(&eps_left, &self.tensor, &QuotientSpace::trivial(field, m), "(ε⊗id)")
            .map(|e| e.mul(&self.coproduct).is_identity())
            .unwrap_or(false);
        let counit_right = descend(&eps_right, &self.tensor, &QuotientSpace::trivial(field, m), "(id⊗ε)")
            .map(|e| e.mul(&self.coproduct).is_identity())
            .unwrap_or(false);
        checks.push("left counit law", counit_left);
        checks.push("right counit law", counit_right);

        let takeuchi = rs.iter().all(|r| {
            let (a, b) = match self.side {
                Side::Left => (
                    x_alg.right_mul_matrix(&self.t(r)).kron(&id),
                    id.kron(&x_alg.right_mul_matrix(&self.s(r))),
                ),
                Side::Right => (
                    x_alg.left_mul_matrix(&self.s(r)).kron(&id),
                    id.kron(&x_alg.left_mul_matrix(&self.t(r))),
                ),
            };
            match descend(&a.sub(&b), &self.tensor, &self.tensor, "Takeuchi difference") {
                Ok(diff) => diff.mul(&self.coproduct).is_zero(),
                Err(_) => false,
            }
        });
        checks.push("image of coproduct in Takeuchi product", takeuchi);

        let unit_delta = self.delta(x_alg.unit()) == self.tensor.project(&vector::tensor(x_alg.unit(), x_alg.unit()));
        let mult = xs.iter().all(|x| {
            let dx = self.delta_lift(x);
            xs.iter().all(|y| {
                let prod = self.tensor.project(&tensor_mul(x_alg, x_alg, &dx, &self.delta_lift(y)));
                prod == self.delta(&x_alg.mul(x, y))
            })
        });
        checks.push("coproduct unital", unit_delta);
        checks.push("coproduct multiplicative", mult);

        let counit_unit = self.epsilon(x_alg.unit()) == r_alg.unit();
        let counit_mult = xs.iter().all(|x| {
            xs.iter().all(|y| {
                let exy = self.epsilon(&x_alg.mul(x, y));
                match self.side {
                    Side::Left => {
                        let ey = self.epsilon(y);
                        exy == self.epsilon(&x_alg.mul(x, &self.s(&ey))) && exy == self.epsilon(&x_alg.mul(x, &self.t(&ey)))
                    }
                    Side::Right => {
                        let ex = self.epsilon(x);
                        exy == self.epsilon(&x_alg.mul(&self.s(&ex), y)) && exy == self.epsilon(&x_alg.mul(&self.t(&ex), y))
                    }
                }
            })
        });
        checks.push("counit unital", counit_unit);
        checks.push("counit multiplicativity law", counit_mult);
        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Group;

    /// A group algebra is a bialgebroid over the ground field.
    #[test]
    fn group_algebra_as_bialgebroid() {
        let q = Field::Rational;
        let g = Group::cyclic(3);
        let h = FdAlgebra::group_algebra(&g, q);
        let base = FdAlgebra::ground(q);
        let unit = Matrix::from_columns(q, 3, &[h.unit().to_vec()]);
        for side in [Side::Left, Side::Right] {
            let tensor = Bialgebroid::tensor_square(side, &h, &unit, &unit);
            assert_eq!(tensor.dim(), 9);
            let cols: Vec<Vec<Scalar>> = (0..3).map(|i| vector::unit(q, 9, i * 3 + i)).collect();
            let coproduct = Matrix::from_columns(q, 9, &cols);
            let counit = Matrix::from_i64(q, 1, 3, &[1, 1, 1]);
            let b = Bialgebroid { side, total: h.clone(), base: base.clone(), source: unit.clone(), target: unit.clone(), tensor, coproduct, counit };
            let checks = b.check_axioms();
            assert!(checks.all_passed(), "{:?}", checks.failures());
        }
    }

    #[test]
    fn broken_counit_detected() {
        let q = Field::Rational;
        let g = Group::cyclic(2);
        let h = FdAlgebra::group_algebra(&g, q);
        let unit = Matrix::from_columns(q, 2, &[h.unit().to_vec()]);
        let tensor = Bialgebroid::tensor_square(Side::Left, &h, &unit, &unit);
        let cols: Vec<Vec<Scalar>> = (0..2).map(|i| vector::unit(q, 4, i * 2 + i)).collect();
        let coproduct = Matrix::from_columns(q, 4, &cols);
        let counit = Matrix::from_i64(q, 1, 2, &[1, 0]);
        let b = Bialgebroid { side: Side::Left, total: h, base: FdAlgebra::ground(q), source: unit.clone(), target: unit, tensor, coproduct, counit };
        let checks = b.check_axioms();
        assert_eq!(checks.get("left counit law"), Some(false));
    }
}
