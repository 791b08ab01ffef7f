use crate::bialgebroid::Bialgebroid;
use crate::checks::CheckList;
use crate::depth_two::{ExtensionData, Quasibase, Side};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{vector, Matrix};

/// The left bialgebroid `S = End_B A_B` over `R`.
#[derive(Clone, Debug)]
pub struct SBialgebroid {
    pub bialgebroid: Bialgebroid,
    /// Construction-level checks (both coproduct formulas, evaluation
    /// identity); the axiom suite is run separately.
    pub checks: CheckList,
}

/// The right bialgebroid `T = (A ⊗_B A)^B` over `R`.
#[derive(Clone, Debug)]
pub struct TBialgebroid {
    pub bialgebroid: Bialgebroid,
    pub checks: CheckList,
}

/// `Σ c_kl · op(x_k, x_l)` over the nonzero coefficients of a representative
/// in `A ⊗ A`.
pub(crate) fn sum_over_lift<T>(n: usize, lift: &[Scalar], mut op: impl FnMut(usize, usize, &Scalar) -> T, mut acc: impl FnMut(T)) {
    for (p, c) in vector::support(lift) {
        acc(op(p / n, p % n, c));
    }
}

/// `α(− t¹) t²` for `t` given by a representative.
fn alpha_right_sandwich(data: &ExtensionData, lift: &[Scalar], alpha: &Matrix) -> Matrix {
    let a = data.a();
    let n = a.dim();
    let mut out = Matrix::zeros(data.field(), n, n);
    sum_over_lift(
        n,
        lift,
        |k, l, c| a.right_mul_matrix(&a.basis_vector(l)).mul(alpha).mul(&a.right_mul_matrix(&a.basis_vector(k))).scale(c),
        |m| out = out.add(&m),
    );
    out
}

/// `t¹ α(t² −)` for `t` given by a representative.
fn alpha_left_sandwich(data: &ExtensionData, lift: &[Scalar], alpha: &Matrix) -> Matrix {
    let a = data.a();
    let n = a.dim();
    let mut out = Matrix::zeros(data.field(), n, n);
    sum_over_lift(
        n,
        lift,
        |k, l, c| a.left_mul_matrix(&a.basis_vector(k)).mul(alpha).mul(&a.left_mul_matrix(&a.basis_vector(l))).scale(c),
        |m| out = out.add(&m),
    );
    out
}

fn s_coords(data: &ExtensionData, f: &Matrix, what: &str) -> Result<Vec<Scalar>> {
    data.s.coords(f).ok_or_else(|| Error::Inconsistent(format!("{what} is not a B-bimodule endomorphism")))
}

fn r_coords(data: &ExtensionData, a: &[Scalar], what: &str) -> Result<Vec<Scalar>> {
    data.r.coords(a).ok_or_else(|| Error::Inconsistent(format!("{what} does not lie in the centralizer")))
}

fn t_coords(data: &ExtensionData, class: &[Scalar], what: &str) -> Result<Vec<Scalar>> {
    data.t_coords(class).ok_or_else(|| Error::Inconsistent(format!("{what} is not B-central")))
}

/// Evaluation `S ⊗ S -> Hom(A ⊗ A, A)`, `α ⊗ β ↦ (a ⊗ a' ↦ α(a)β(a'))`,
/// with maps vectorised row-major as `n x n²`.
fn evaluation_matrix(data: &ExtensionData, left: &[Matrix], right: &[Matrix]) -> Matrix {
    let a = data.a();
    let n = a.dim();
    let field = data.field();
    let mut cols = Vec::with_capacity(left.len() * right.len());
    for f in left {
        for g in right {
            let mut m = Matrix::zeros(field, n, n * n);
            for i in 0..n {
                let fi = f.column(i);
                for j in 0..n {
                    let v = a.mul(&fi, &g.column(j));
                    for (c, x) in v.into_iter().enumerate() {
                        m.set(c, i * n + j, x);
                    }
                }
            }
            cols.push(m.data().to_vec());
        }
    }
    Matrix::from_columns(field, n * n * n, &cols)
}

/// `α ∘ μ` vectorised like [`evaluation_matrix`].
fn compose_with_multiplication(data: &ExtensionData, alpha: &Matrix) -> Vec<Scalar> {
    alpha.mul(&data.a().multiplication_matrix()).data().to_vec()
}

pub fn build_s(data: &ExtensionData, left_qb: &Quasibase, right_qb: &Quasibase) -> Result<SBialgebroid> {
    let field = data.field();
    let a = data.a();
    let ds = data.s.dim();
    let r_basis = data.r.basis_vectors();
    let mut source_cols = Vec::with_capacity(r_basis.len());
    let mut target_cols = Vec::with_capacity(r_basis.len());
    for r in &r_basis {
        source_cols.push(s_coords(data, &a.left_mul_matrix(r), "λ(r)")?);
        target_cols.push(s_coords(data, &a.right_mul_matrix(r), "ρ(r)")?);
    }
    let source = Matrix::from_columns(field, ds, &source_cols);
    let target = Matrix::from_columns(field, ds, &target_cols);
    let total = data.s.algebra().clone();
    let tensor = Bialgebroid::tensor_square(Side::Left, &total, &source, &target);

    let mut from_left = Vec::with_capacity(ds);
    let mut from_right = Vec::with_capacity(ds);
    let mut counit_cols = Vec::with_capacity(ds);
    for p in 0..ds {
        let alpha = data.s.map(p);
        let mut v = vector::zeros(field, ds * ds);
        for (t, b) in left_qb.t.iter().zip(&left_qb.s) {
            let first = s_coords(data, &alpha_right_sandwich(data, &data.t_lift(t), alpha), "α(−t¹)t²")?;
            v = vector::add(&v, &vector::tensor(&first, b));
        }
        from_left.push(tensor.project(&v));
        let mut w = vector::zeros(field, ds * ds);
        for (u, g) in right_qb.t.iter().zip(&right_qb.s) {
            let second = s_coords(data, &alpha_left_sandwich(data, &data.t_lift(u), alpha), "u¹α(u²−)")?;
            w = vector::add(&w, &vector::tensor(g, &second));
        }
        from_right.push(tensor.project(&w));
        counit_cols.push(r_coords(data, &alpha.mul_vec(a.unit()), "α(1)")?);
    }
    let mut checks = CheckList::new();
    checks.push("coproduct formulas agree", from_left == from_right);
    let coproduct = Matrix::from_columns(field, tensor.dim(), &from_right);
    let counit = Matrix::from_columns(field, data.r.dim(), &counit_cols);

    let ev = evaluation_matrix(data, data.s.maps(), data.s.maps());
    let ev_descends = tensor.relations().basis().iter().all(|r| vector::is_zero(&ev.mul_vec(r)));
    let ev_q = ev.mul(tensor.section());
    checks.push("evaluation S⊗_R S -> Hom(A⊗_B A, A) well defined", ev_descends);
    checks.push("evaluation injective", ev_q.rank() == tensor.dim());
    let ev_ok = (0..ds).all(|p| ev_q.mul_vec(&from_right[p]) == compose_with_multiplication(data, data.s.map(p)));
    checks.push("Δ(α)(a⊗a') = α(aa')", ev_ok);

    let bialgebroid = Bialgebroid { side: Side::Left, total, base: data.r_alg.clone(), source, target, tensor, coproduct, counit };
    Ok(SBialgebroid { bialgebroid, checks })
}

pub fn build_t(data: &ExtensionData, left_qb: &Quasibase, right_qb: &Quasibase) -> Result<TBialgebroid> {
    let field = data.field();
    let a = data.a();
    let n = a.dim();
    let dt = data.t.dim();
    let one = a.unit();
    let r_basis = data.r.basis_vectors();
    let mut source_cols = Vec::with_capacity(r_basis.len());
    let mut target_cols = Vec::with_capacity(r_basis.len());
    for r in &r_basis {
        source_cols.push(t_coords(data, &data.tensor.class_of(one, r), "1⊗r")?);
        target_cols.push(t_coords(data, &data.tensor.class_of(r, one), "r⊗1")?);
    }
    let source = Matrix::from_columns(field, dt, &source_cols);
    let target = Matrix::from_columns(field, dt, &target_cols);
    let total = data.t.algebra().clone();
    let tensor = Bialgebroid::tensor_square(Side::Right, &total, &source, &target);

    let id = Matrix::identity(field, n);
    let q = data.tensor.quotient();
    let beta = left_qb.s_maps(data);
    let gamma = right_qb.s_maps(data);
    let mu = a.multiplication_matrix();
    let mut from_left = Vec::with_capacity(dt);
    let mut from_right = Vec::with_capacity(dt);
    let mut counit_cols = Vec::with_capacity(dt);
    for p in 0..dt {
        let lift = data.t_lift(&vector::unit(field, dt, p));
        let mut v = vector::zeros(field, dt * dt);
        for (u, g) in right_qb.t.iter().zip(&gamma) {
            let first = t_coords(data, &q.project(&id.kron_apply(g, &lift)), "t¹⊗γ(t²)")?;
            v = vector::add(&v, &vector::tensor(&first, u));
        }
        from_right.push(tensor.project(&v));
        let mut w = vector::zeros(field, dt * dt);
        for (t, b) in left_qb.t.iter().zip(&beta) {
            let second = t_coords(data, &q.project(&b.kron_apply(&id, &lift)), "β(t¹)⊗t²")?;
            w = vector::add(&w, &vector::tensor(t, &second));
        }
        from_left.push(tensor.project(&w));
        counit_cols.push(r_coords(data, &mu.mul_vec(&lift), "t¹t²")?);
    }
    let mut checks = CheckList::new();
    checks.push("coproduct formulas agree", from_left == from_right);
    let coproduct = Matrix::from_columns(field, tensor.dim(), &from_right);
    let counit = Matrix::from_columns(field, data.r.dim(), &counit_cols);

    let bialgebroid = Bialgebroid { side: Side::Right, total, base: data.r_alg.clone(), source, target, tensor, coproduct, counit };
    Ok(TBialgebroid { bialgebroid, checks })
}

/// `⟨α|t⟩ = α(t¹)t²` in `R` coordinates.
pub fn angle_pairing(data: &ExtensionData, alpha: &Matrix, t: &[Scalar]) -> Vec<Scalar> {
    let a = data.a();
    let n = a.dim();
    let mut out = vector::zeros(data.field(), n);
    sum_over_lift(
        n,
        &data.t_lift(t),
        |k, l, c| vector::scaled(&a.mul(&alpha.column(k), &a.basis_vector(l)), c),
        |v| out = vector::add(&out, &v),
    );
    data.r.coords(&out).expect("pairing values lie in R")
}

/// `[α|t] = t¹α(t²)` in `R` coordinates.
pub fn bracket_pairing(data: &ExtensionData, alpha: &Matrix, t: &[Scalar]) -> Vec<Scalar> {
    let a = data.a();
    let n = a.dim();
    let mut out = vector::zeros(data.field(), n);
    sum_over_lift(
        n,
        &data.t_lift(t),
        |k, l, c| vector::scaled(&a.mul(&a.basis_vector(k), &alpha.column(l)), c),
        |v| out = vector::add(&out, &v),
    );
    data.r.coords(&out).expect("pairing values lie in R")
}

/// Ranks of the two pairings read as `k`-linear maps `S -> Hom_k(T, R)` and
/// `T -> Hom_k(S, R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairings {
    pub dim_s: usize,
    pub dim_t: usize,
    pub angle_rank_s: usize,
    pub angle_rank_t: usize,
    pub bracket_rank_s: usize,
    pub bracket_rank_t: usize,
}

impl Pairings {
    pub fn angle_nondegenerate(&self) -> bool {
        self.angle_rank_s == self.dim_s && self.angle_rank_t == self.dim_t
    }

    pub fn bracket_nondegenerate(&self) -> bool {
        self.bracket_rank_s == self.dim_s && self.bracket_rank_t == self.dim_t
    }
}

pub fn pairings(data: &ExtensionData) -> Pairings {
    let field = data.field();
    let (ds, dt, dr) = (data.s.dim(), data.t.dim(), data.r.dim());
    let ts: Vec<Vec<Scalar>> = (0..dt).map(|q| vector::unit(field, dt, q)).collect();
    let mut ranks = [0usize; 4];
    for (idx, pairing) in [angle_pairing as fn(&ExtensionData, &Matrix, &[Scalar]) -> Vec<Scalar>, bracket_pairing]
        .into_iter()
        .enumerate()
    {
        // values[p][q] = pairing(α_p, t_q) ∈ R
        let values: Vec<Vec<Vec<Scalar>>> =
            (0..ds).map(|p| ts.iter().map(|t| pairing(data, data.s.map(p), t)).collect()).collect();
        let by_s = Matrix::from_fn(field, ds, dt * dr, |p, c| values[p][c / dr][c % dr].clone());
        let by_t = Matrix::from_fn(field, dt, ds * dr, |q, c| values[c / dr][q][c % dr].clone());
        ranks[2 * idx] = by_s.rank();
        ranks[2 * idx + 1] = by_t.rank();
    }
    Pairings {
        dim_s: ds,
        dim_t: dt,
        angle_rank_s: ranks[0],
        angle_rank_t: ranks[1],
        bracket_rank_s: ranks[2],
        bracket_rank_t: ranks[3],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Extension, FdAlgebra, Group};
    use crate::depth_two::{find_left_quasibase, find_right_quasibase};
    use crate::field::Field;

    fn s3_a3() -> ExtensionData {
        let g = Group::s3();
        let a = FdAlgebra::group_algebra(&g, Field::Rational);
        let gen: Vec<Vec<Scalar>> = ["1", "(123)", "(132)"].iter().map(|l| a.basis_vector(g.index_of(l).unwrap())).collect();
        ExtensionData::new(Extension::new(a, &gen).unwrap())
    }

    #[test]
    fn s_and_t_for_s3_over_a3() {
        let data = s3_a3();
        let l = find_left_quasibase(&data).unwrap();
        let r = find_right_quasibase(&data).unwrap();
        let s = build_s(&data, &l, &r).unwrap();
        assert!(s.checks.all_passed(), "{:?}", s.checks.failures());
        let axioms = s.bialgebroid.check_axioms();
        assert!(axioms.all_passed(), "{:?}", axioms.failures());
        let t = build_t(&data, &l, &r).unwrap();
        assert!(t.checks.all_passed(), "{:?}", t.checks.failures());
        let axioms = t.bialgebroid.check_axioms();
        assert!(axioms.all_passed(), "{:?}", axioms.failures());
        let p = pairings(&data);
        assert!(p.angle_nondegenerate() && p.bracket_nondegenerate());
    }

    #[test]
    fn counit_of_identity_is_one() {
        let data = s3_a3();
        let l = find_left_quasibase(&data).unwrap();
        let r = find_right_quasibase(&data).unwrap();
        let s = build_s(&data, &l, &r).unwrap();
        let id = data.s.coords(&Matrix::identity(data.field(), data.n())).unwrap();
        assert_eq!(s.bialgebroid.epsilon(&id), data.r_alg.unit());
        let t = build_t(&data, &l, &r).unwrap();
        assert_eq!(t.bialgebroid.epsilon(data.t.algebra().unit()), data.r_alg.unit());
    }

    #[test]
    fn coactions_and_endo_galois_for_s3_over_a3() {
        use crate::bialgebroid::{coaction_on_a, coaction_on_e, endo_galois};
        let data = s3_a3();
        let l = find_left_quasibase(&data).unwrap();
        let r = find_right_quasibase(&data).unwrap();
        let s = build_s(&data, &l, &r).unwrap();
        let t = build_t(&data, &l, &r).unwrap();
        let ca = coaction_on_a(&data, &t, &r);
        assert!(ca.checks.all_passed(), "{:?}", ca.checks.failures());
        let ce = coaction_on_e(&data, &s, &r).unwrap();
        assert!(ce.checks.all_passed(), "{:?}", ce.checks.failures());
        let g = endo_galois(&data, &s, &ce, &r).unwrap();
        assert!(g.checks.all_passed(), "{:?}", g.checks.failures());
        assert_eq!(g.dim_domain, g.dim_codomain);
    }

    #[test]
    fn bracket_of_identity_with_unit() {
        let data = s3_a3();
        let id = Matrix::identity(data.field(), data.n());
        assert_eq!(bracket_pairing(&data, &id, data.t.algebra().unit()), data.r_alg.unit());
    }
}
