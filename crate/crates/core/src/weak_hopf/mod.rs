//! Weak bialgebras and weak Hopf algebras over a field.

mod comodule;
mod galois;

pub use comodule::{comodule_check, WhComoduleAlgebra};
pub use galois::{
    frobenius_probe, galois_core, galois_maps, integral_dual_bases, reconstruct_antipode, self_galois, verify_galois_identities,
    DualBases, GaloisCore, Reconstruction, SelfGalois, WhGaloisData,
};

use crate::algebra::{tensor_mul, FdAlgebra, Group};
use crate::checks::CheckList;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::{vector, Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct WeakBialgebra {
    pub algebra: FdAlgebra,
    /// `n² × n`
    pub coproduct: Matrix,
    pub counit: Vec<Scalar>,
}

/// Product in the `k`-fold tensor power of `h`, coordinates in base `n`.
pub(crate) fn power_mul(h: &FdAlgebra, k: usize, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let field = h.field();
    let mut out = vector::zeros(field, n.pow(k as u32));
    for (p, c) in vector::support(u) {
        for (q, d) in vector::support(v) {
            let cd = c * d;
            let mut term = vec![field.one()];
            for level in (0..k).rev() {
                let (pi, qi) = ((p / n.pow(level as u32)) % n, (q / n.pow(level as u32)) % n);
                term = vector::tensor(&term, h.basis_product(pi, qi));
            }
            vector::axpy(&mut out, &cd, &term);
        }
    }
    out
}

/// Sums `f(p, q)` over the terms `c_pq h_p ⊗ h_q` of `t`.
pub(crate) fn sum_pairs(n: usize, field: Field, t: &[Scalar], dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Vec<Scalar> {
    let mut out = vector::zeros(field, dim);
    for (pq, c) in vector::support(t) {
        vector::axpy(&mut out, c, &f(pq / n, pq % n));
    }
    out
}

impl WeakBialgebra {
    pub fn new(algebra: FdAlgebra, coproduct: Matrix, counit: Vec<Scalar>) -> Result<WeakBialgebra> {
        let n = algebra.dim();
        if coproduct.rows() != n * n || coproduct.cols() != n || counit.len() != n {
            return Err(Error::Shape("coalgebra data does not match the algebra dimension".into()));
        }
        Ok(WeakBialgebra { algebra, coproduct, counit })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.algebra.basis_vector(i)).collect()
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.coproduct.mul_vec(x)
    }

    /// `x₁ ⊗ x₂ ⊗ x₃`
    pub fn delta2(&self, x: &[Scalar]) -> Vec<Scalar> {
        let id = Matrix::identity(self.field(), self.dim());
        self.coproduct.kron_apply(&id, &self.delta(x))
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        let mut s = self.field().zero();
        for (a, b) in self.counit.iter().zip(x) {
            s.add_mul(a, b);
        }
        s
    }

    pub fn counit_row(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.dim(), std::slice::from_ref(&self.counit))
    }

    fn projection(&self, f: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vec<Scalar>) -> Matrix {
        let h = &self.algebra;
        let n = self.dim();
        let field = self.field();
        let one = self.delta(h.unit());
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|x| sum_pairs(n, field, &one, n, |p, q| f(&h.basis_vector(x), &h.basis_vector(p), &h.basis_vector(q))))
            .collect();
        Matrix::from_columns(field, n, &cols)
    }

    /// `Π^L(x) = ε(1₁x)1₂`
    pub fn pi_l(&self) -> Matrix {
        self.projection(|x, p, q| vector::scaled(q, &self.epsilon(&self.algebra.mul(p, x))))
    }

    /// `Π^R(x) = 1₁ε(x1₂)`
    pub fn pi_r(&self) -> Matrix {
        self.projection(|x, p, q| vector::scaled(p, &self.epsilon(&self.algebra.mul(x, q))))
    }

    /// `Π̄^L(x) = 1₁ε(1₂x)`
    pub fn pi_bar_l(&self) -> Matrix {
        self.projection(|x, p, q| vector::scaled(p, &self.epsilon(&self.algebra.mul(q, x))))
    }

    /// `Π̄^R(x) = ε(x1₁)1₂`
    pub fn pi_bar_r(&self) -> Matrix {
        self.projection(|x, p, q| vector::scaled(q, &self.epsilon(&self.algebra.mul(x, p))))
    }

    pub fn h_l(&self) -> Subspace {
        Subspace::image(&self.pi_l())
    }

    pub fn h_r(&self) -> Subspace {
        Subspace::image(&self.pi_r())
    }

    pub fn check_axioms(&self) -> CheckList {
        let h = &self.algebra;
        let field = self.field();
        let n = self.dim();
        let id = Matrix::identity(field, n);
        let basis = self.basis();
        let mut c = CheckList::new();
        c.push(
            "coproduct multiplicative",
            basis.iter().all(|x| basis.iter().all(|y| self.delta(&h.mul(x, y)) == tensor_mul(h, h, &self.delta(x), &self.delta(y)))),
        );
        c.push(
            "coassociative",
            self.coproduct.kron(&id).mul(&self.coproduct) == id.kron(&self.coproduct).mul(&self.coproduct),
        );
        let eps = self.counit_row();
        c.push("left counit law", eps.kron(&id).mul(&self.coproduct).is_identity());
        c.push("right counit law", id.kron(&eps).mul(&self.coproduct).is_identity());

        let one = h.unit();
        let d1 = self.delta(one);
        let d1_1 = vector::tensor(&d1, one);
        let one_d1 = vector::tensor(one, &d1);
        let triple = self.delta2(one);
        c.push(
            "1₁⊗1₂⊗1₃ = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)",
            triple == power_mul(h, 3, &d1_1, &one_d1) && triple == power_mul(h, 3, &one_d1, &d1_1),
        );
        let mut counit_ok = true;
        for b in &basis {
            let db = self.delta(b);
            for a in &basis {
                for cc in &basis {
                    let lhs = self.epsilon(&h.mul(&h.mul(a, b), cc));
                    let mut first = field.zero();
                    let mut second = field.zero();
                    for (pq, coef) in vector::support(&db) {
                        let (p, q) = (h.basis_vector(pq / n), h.basis_vector(pq % n));
                        first.add_mul(coef, &(self.epsilon(&h.mul(a, &p)) * self.epsilon(&h.mul(&q, cc))));
                        second.add_mul(coef, &(self.epsilon(&h.mul(a, &q)) * self.epsilon(&h.mul(&p, cc))));
                    }
                    counit_ok &= lhs == first && lhs == second;
                }
            }
        }
        c.push("ε(abc) = ε(ab₁)ε(b₂c) = ε(ab₂)ε(b₁c)", counit_ok);

        let (pl, pr, pbl, pbr) = (self.pi_l(), self.pi_r(), self.pi_bar_l(), self.pi_bar_r());
        c.push(
            "projections idempotent",
            [&pl, &pr, &pbl, &pbr].iter().all(|m| m.mul(m) == **m),
        );
        let same = |x: &Matrix, y: &Matrix| {
            let (a, b) = (Subspace::image(x), Subspace::image(y));
            a.contains_subspace(&b) && b.contains_subspace(&a)
        };
        c.push("Im Π^L = Im Π̄^R", same(&pl, &pbr));
        c.push("Im Π^R = Im Π̄^L", same(&pr, &pbl));
        c
    }
}

#[derive(Clone, Debug)]
pub struct WeakHopfAlgebra {
    pub bialgebra: WeakBialgebra,
    pub antipode: Matrix,
    /// `S̄`
    pub antipode_inv: Matrix,
}

impl WeakHopfAlgebra {
    pub fn new(bialgebra: WeakBialgebra, antipode: Matrix) -> Result<WeakHopfAlgebra> {
        let n = bialgebra.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Shape("antipode must be square of the algebra dimension".into()));
        }
        let antipode_inv = antipode.inverse().ok_or_else(|| Error::InvalidHopf("antipode is not invertible".into()))?;
        Ok(WeakHopfAlgebra { bialgebra, antipode, antipode_inv })
    }

    /// `M_n(k)` with `Δ(e_ij) = e_ij⊗e_ij`, `ε(e_ij) = 1`, `S(e_ij) = e_ji`.
    pub fn groupoid(n: usize, field: Field) -> WeakHopfAlgebra {
        let algebra = FdAlgebra::matrix_algebra(n, field);
        let d = n * n;
        let coproduct = Matrix::from_fn(field, d * d, d, |r, c| if r == c * d + c { field.one() } else { field.zero() });
        let antipode = Matrix::from_fn(field, d, d, |r, c| if r == (c % n) * n + c / n { field.one() } else { field.zero() });
        let bialgebra = WeakBialgebra { algebra, coproduct, counit: vec![field.one(); d] };
        WeakHopfAlgebra::new(bialgebra, antipode).expect("transpose is invertible")
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Result<WeakHopfAlgebra> {
        let bialgebra = WeakBialgebra { algebra: h.algebra.clone(), coproduct: h.coproduct.clone(), counit: h.counit.clone() };
        WeakHopfAlgebra::new(bialgebra, h.antipode.clone())
    }

    pub fn group(group: &Group, field: Field) -> WeakHopfAlgebra {
        WeakHopfAlgebra::from_hopf(&HopfAlgebra::group_algebra(group, field)).expect("inversion is invertible")
    }

    /// The dual `H*` in the basis dual to that of `H`.
    pub fn dual(&self) -> WeakHopfAlgebra {
        let h = &self.bialgebra;
        let field = h.field();
        let n = h.dim();
        let mut consts = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    consts.push(h.coproduct.get(i * n + j, k).clone());
                }
            }
        }
        let labels = h.algebra.labels().iter().map(|l| format!("{l}*")).collect();
        let algebra = FdAlgebra::new_unchecked(field, labels, consts, h.counit.clone());
        let coproduct = Matrix::from_fn(field, n * n, n, |r, k| h.algebra.constant(r / n, r % n, k).clone());
        let bialgebra = WeakBialgebra { algebra, coproduct, counit: h.algebra.unit().to_vec() };
        WeakHopfAlgebra { bialgebra, antipode: self.antipode.transpose(), antipode_inv: self.antipode_inv.transpose() }
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn algebra(&self) -> &FdAlgebra {
        &self.bialgebra.algebra
    }

    /// All weak bialgebra axioms, the antipode axioms and the standard
    /// identities, each on every basis tuple.
    pub fn check(&self) -> CheckList {
        let wb = &self.bialgebra;
        let h = &wb.algebra;
        let field = wb.field();
        let n = wb.dim();
        let basis = wb.basis();
        let s = &self.antipode;
        let sb = &self.antipode_inv;
        let (pl, pr, pbl, pbr) = (wb.pi_l(), wb.pi_r(), wb.pi_bar_l(), wb.pi_bar_r());
        let mut c = wb.check_axioms();
        let id = Matrix::identity(field, n);
        c.push("S̄ two-sided inverse of S", s.mul(sb).is_identity() && sb.mul(s).is_identity());

        let each = |f: &dyn Fn(&[Scalar]) -> bool| basis.iter().all(|x| f(x));
        c.push(
            "S(x₁)x₂ = Π^R(x)",
            each(&|x| sum_pairs(n, field, &wb.delta(x), n, |p, q| h.mul(&s.column(p), &h.basis_vector(q))) == pr.mul_vec(x)),
        );
        c.push(
            "x₁S(x₂) = Π^L(x)",
            each(&|x| sum_pairs(n, field, &wb.delta(x), n, |p, q| h.mul(&h.basis_vector(p), &s.column(q))) == pl.mul_vec(x)),
        );
        c.push(
            "S(x₁)x₂S(x₃) = S(x)",
            each(&|x| {
                let mut out = vector::zeros(field, n);
                for (pqr, coef) in vector::support(&wb.delta2(x)) {
                    let (p, q, r) = (pqr / (n * n), (pqr / n) % n, pqr % n);
                    let term = h.mul(&h.mul(&s.column(p), &h.basis_vector(q)), &s.column(r));
                    vector::axpy(&mut out, coef, &term);
                }
                out == s.mul_vec(x)
            }),
        );
        c.push("S anti-multiplicative", basis.iter().all(|x| basis.iter().all(|y| s.mul_vec(&h.mul(x, y)) == h.mul(&s.mul_vec(y), &s.mul_vec(x)))));
        c.push("Π^L = S∘Π̄^L", pl == s.mul(&pbl));
        c.push("Π^R = S∘Π̄^R", pr == s.mul(&pbr));
        c.push(
            "S̄(a₂)a₁ = Π̄^R(a)",
            each(&|a| sum_pairs(n, field, &wb.delta(a), n, |p, q| h.mul(&sb.column(q), &h.basis_vector(p))) == pbr.mul_vec(a)),
        );
        c.push(
            "a₂S̄(a₁) = Π̄^L(a)",
            each(&|a| sum_pairs(n, field, &wb.delta(a), n, |p, q| h.mul(&h.basis_vector(q), &sb.column(p))) == pbl.mul_vec(a)),
        );
        let one = wb.delta(h.unit());
        c.push(
            "a₁⊗Π^L(a₂) = 1₁a⊗1₂",
            each(&|a| {
                id.kron_apply(&pl, &wb.delta(a)) == sum_pairs(n, field, &one, n * n, |p, q| vector::tensor(&h.mul(&h.basis_vector(p), a), &h.basis_vector(q)))
            }),
        );
        c.push(
            "Π^R(a₁)⊗a₂ = 1₁⊗a1₂",
            each(&|a| {
                pr.kron_apply(&id, &wb.delta(a)) == sum_pairs(n, field, &one, n * n, |p, q| vector::tensor(&h.basis_vector(p), &h.mul(a, &h.basis_vector(q))))
            }),
        );
        c.push(
            "Π^R(a)b = b₁ε(ab₂)",
            each(&|a| {
                each(&|b| h.mul(&pr.mul_vec(a), b) == sum_pairs(n, field, &wb.delta(b), n, |p, q| vector::scaled(&h.basis_vector(p), &wb.epsilon(&h.mul(a, &h.basis_vector(q))))))
            }),
        );
        c.push(
            "aΠ^L(b) = ε(a₁b)a₂",
            each(&|a| {
                each(&|b| h.mul(a, &pl.mul_vec(b)) == sum_pairs(n, field, &wb.delta(a), n, |p, q| vector::scaled(&h.basis_vector(q), &wb.epsilon(&h.mul(&h.basis_vector(p), b)))))
            }),
        );
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groupoid_algebras_pass() {
        for n in 1..=3 {
            let h = WeakHopfAlgebra::groupoid(n, Field::Rational);
            let c = h.check();
            assert!(c.all_passed(), "n={n}: {:?}", c.failures());
            assert_eq!(h.bialgebra.epsilon(h.algebra().unit()), Field::Rational.from_i64(n as i64));
            let pl = h.bialgebra.pi_l();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(pl.column(i * n + j), vector::unit(Field::Rational, n * n, i * n + i));
                }
            }
            assert_eq!(h.bialgebra.h_l().dim(), n);
        }
    }

    #[test]
    fn groupoid_in_characteristic_two() {
        let f2 = Field::prime(2).unwrap();
        let h = WeakHopfAlgebra::groupoid(2, f2);
        assert!(h.check().all_passed());
        assert!(h.bialgebra.epsilon(h.algebra().unit()).is_zero());
    }

    #[test]
    fn group_algebras_pass_with_trivial_projections() {
        for g in [Group::cyclic(2), Group::cyclic(3), Group::s3()] {
            let h = WeakHopfAlgebra::group(&g, Field::Rational);
            assert!(h.check().all_passed());
            let pl = h.bialgebra.pi_l();
            for x in h.bialgebra.basis() {
                assert_eq!(pl.mul_vec(&x), vector::scaled(h.algebra().unit(), &h.bialgebra.epsilon(&x)));
            }
        }
    }

    #[test]
    fn duals_are_weak_hopf() {
        for h in [WeakHopfAlgebra::groupoid(2, Field::Rational), WeakHopfAlgebra::group(&Group::s3(), Field::Rational)] {
            let d = h.dual();
            assert!(d.algebra().check_associativity().is_ok());
            assert!(d.check().all_passed(), "{:?}", d.check().failures());
        }
    }

    #[test]
    fn broken_counit_is_reported() {
        let mut h = WeakHopfAlgebra::groupoid(2, Field::Rational);
        h.bialgebra.counit[1] = Field::Rational.from_i64(2);
        assert!(!h.check().all_passed());
    }
}
