//! Symmetric separability elements and the Hopf algebroid `T^op_cop` with
//! antipode `τ(t) = e¹t² ⊗_B t¹e²`.

use crate::algebra::{Embedding, FdAlgebra};
use crate::bialgebroid::{Bialgebroid, TBialgebroid};
use crate::checks::CheckList;
use crate::depth_two::{ExtensionData, Quasibase, Side};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{balanced_tensor, descend, vector, Matrix, Subspace};

/// `e = e¹ ⊗ e² ∈ B ⊗ B` with `be = eb`, `e¹b ⊗ e² = e¹ ⊗ be²` and
/// `e¹e² = 1 = e²e¹`, in coordinates of the basis of `B`.
#[derive(Clone, Debug)]
pub struct SymSepElement {
    pub e: Vec<Scalar>,
    /// Directions in which `e` may be moved while staying a solution.
    pub kernel: Vec<Vec<Scalar>>,
}

impl SymSepElement {
    /// Another symmetric separability element, when the solution set is
    /// not a single point.
    pub fn alternative(&self) -> Option<SymSepElement> {
        let k = self.kernel.first()?;
        Some(SymSepElement { e: vector::add(&self.e, k), kernel: self.kernel.clone() })
    }
}

/// Solves the linear system defining a symmetric separability element.
pub fn find_sym_sep_element(b: &FdAlgebra) -> Option<SymSepElement> {
    let field = b.field();
    let d = b.dim();
    let id = Matrix::identity(field, d);
    let mut blocks = Vec::new();
    for i in 0..d {
        let x = b.basis_vector(i);
        let (l, r) = (b.left_mul_matrix(&x), b.right_mul_matrix(&x));
        blocks.push(l.kron(&id).sub(&id.kron(&r)));
        blocks.push(r.kron(&id).sub(&id.kron(&l)));
    }
    let mu = b.multiplication_matrix();
    let swap_cols: Vec<Vec<Scalar>> = (0..d * d).map(|p| vector::unit(field, d * d, (p % d) * d + p / d)).collect();
    let mu_flip = mu.mul(&Matrix::from_columns(field, d * d, &swap_cols));
    blocks.push(mu.clone());
    blocks.push(mu_flip);
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(&refs);
    let mut rhs = vector::zeros(field, system.rows());
    let offset = system.rows() - 2 * d;
    for (i, x) in b.unit().iter().enumerate() {
        rhs[offset + i] = x.clone();
        rhs[offset + d + i] = x.clone();
    }
    let sol = system.solve(&Matrix::from_columns(field, system.rows(), &[rhs])).expect("shapes agree");
    let e = sol.particular?.column(0);
    Some(SymSepElement { e, kernel: sol.kernel })
}

/// The Hopf algebroid `T^op_cop` over `R^op` with its antipode.
#[derive(Clone, Debug)]
pub struct HopfAlgebroidData {
    pub sep: SymSepElement,
    pub bialgebroid: Bialgebroid,
    /// `τ : T -> T`
    pub tau: Matrix,
    /// `T ⊗_{R^op} T -> (A ⊗_B A ⊗_B A)^B`, into coordinates of the
    /// `B`-central subspace.
    pub triple_iso: Matrix,
    pub dim_triple_central: usize,
    pub checks: CheckList,
}

pub fn build_t_op_cop(data: &ExtensionData, t: &TBialgebroid, right_qb: &Quasibase, sep: &SymSepElement) -> Result<HopfAlgebroidData> {
    let field = data.field();
    let a = data.a();
    let n = a.dim();
    let tb = &t.bialgebroid;
    let t_alg = &tb.total;
    let dt = t_alg.dim();
    let total = t_alg.opposite();
    let base = data.r_alg.opposite();
    let tensor = Bialgebroid::tensor_square(Side::Left, &total, &tb.source, &tb.target);

    // Δ^op(t) = Σ_j u_j ⊗ (t¹ ⊗ γ_j(t²))
    let id_a = Matrix::identity(field, n);
    let q = data.tensor.quotient();
    let gamma = right_qb.s_maps(data);
    let t_lifts: Vec<Vec<Scalar>> = (0..dt).map(|p| data.t_lift(&vector::unit(field, dt, p))).collect();
    let mut cols = Vec::with_capacity(dt);
    for lift in &t_lifts {
        let mut v = vector::zeros(field, dt * dt);
        for (u, g) in right_qb.t.iter().zip(&gamma) {
            let second = data
                .t_coords(&q.project(&id_a.kron_apply(g, lift)))
                .ok_or_else(|| Error::Inconsistent("t¹⊗γ(t²) is not B-central".into()))?;
            v = vector::add(&v, &vector::tensor(u, &second));
        }
        cols.push(tensor.project(&v));
    }
    let coproduct = Matrix::from_columns(field, tensor.dim(), &cols);
    let bialgebroid = Bialgebroid {
        side: Side::Left,
        total,
        base,
        source: tb.source.clone(),
        target: tb.target.clone(),
        tensor,
        coproduct,
        counit: tb.counit.clone(),
    };
    let mut checks = CheckList::new();
    checks.extend_prefixed("T^op_cop", bialgebroid.check_axioms());

    // (A ⊗_B A) ⊗_B A and its B-central part
    let sub_basis = data.ext.sub_basis();
    let on_pair: Vec<Matrix> = sub_basis.iter().map(|b| data.tensor.act_right(b)).collect();
    let on_a: Vec<Matrix> = sub_basis.iter().map(|b| a.left_mul_matrix(b)).collect();
    let dq = data.tensor.dim();
    let triple = balanced_tensor(&on_pair, &on_a, dq, n, field);
    let left_on_triple: Vec<Matrix> = sub_basis
        .iter()
        .map(|b| descend(&data.tensor.act_left(b).kron(&id_a), &triple, &triple, "left B-action on A⊗_BA⊗_BA"))
        .collect::<Result<_>>()?;
    let right_on_triple: Vec<Matrix> = sub_basis
        .iter()
        .map(|b| {
            let id_q = Matrix::identity(field, dq);
            descend(&id_q.kron(&a.right_mul_matrix(b)), &triple, &triple, "right B-action on A⊗_BA⊗_BA")
        })
        .collect::<Result<_>>()?;
    let central_blocks: Vec<Matrix> = left_on_triple.iter().zip(&right_on_triple).map(|(l, r)| l.sub(r)).collect();
    let central_refs: Vec<&Matrix> = central_blocks.iter().collect();
    let central = Embedding::from_subspace(Subspace::kernel(&Matrix::vstack(&central_refs)));
    let to_triple = |v: &[Scalar]| triple.project(&q.projection().kron_apply(&id_a, v));

    // t ⊗ t' ↦ t'¹ ⊗ t'²t¹ ⊗ t²
    let mut iso_cols = Vec::with_capacity(dt * dt);
    for x in &t_lifts {
        for y in &t_lifts {
            let mut v = vector::zeros(field, n * n * n);
            for (p1, c1) in vector::support(x) {
                let (k, l) = (p1 / n, p1 % n);
                for (p2, c2) in vector::support(y) {
                    let (m, o) = (p2 / n, p2 % n);
                    let c = c1 * c2;
                    for (mid, c3) in vector::support(a.basis_product(o, k)) {
                        v[(m * n + mid) * n + l].add_mul(&c, c3);
                    }
                }
            }
            let class = to_triple(&v);
            iso_cols.push(
                central
                    .coords(&class)
                    .ok_or_else(|| Error::Inconsistent("image of T⊗T is not B-central".into()))?,
            );
        }
    }
    let iso_full = Matrix::from_columns(field, central.dim(), &iso_cols);
    let t2 = &bialgebroid.tensor;
    let iso_ok = t2.relations().basis().iter().all(|r| vector::is_zero(&iso_full.mul_vec(r)));
    let triple_iso = iso_full.mul(t2.section());
    checks.push("T⊗_{R^op}T -> (A⊗_BA⊗_BA)^B well defined", iso_ok);
    let bijective = triple_iso.rows() == triple_iso.cols() && triple_iso.rank() == triple_iso.cols();
    let inverse = triple_iso.inverse();
    checks.push(
        "T⊗_{R^op}T ≅ (A⊗_BA⊗_BA)^B with its inverse",
        bijective && inverse.as_ref().is_some_and(|inv| inv.mul(&triple_iso).is_identity() && triple_iso.mul(inv).is_identity()),
    );

    // R^op-bimodule compatibility: r·z·r' ↦ r' X¹ ⊗ X² ⊗ X³ r
    let rs: Vec<Vec<Scalar>> = (0..data.r.dim()).map(|i| data.r_alg.basis_vector(i)).collect();
    let id_t = Matrix::identity(field, dt);
    let bimodule = rs.iter().all(|r| {
        let re = data.r_elem(r);
        let s_r = bialgebroid.total.left_mul_matrix(&tb.source.mul_vec(r));
        let t_r = bialgebroid.total.left_mul_matrix(&tb.target.mul_vec(r));
        let (Ok(left_t), Ok(right_t)) = (
            descend(&s_r.kron(&id_t), t2, t2, "r·(t⊗t')"),
            descend(&id_t.kron(&t_r), t2, t2, "(t⊗t')·r"),
        ) else {
            return false;
        };
        let end_right = descend(
            &Matrix::identity(field, dq).kron(&a.right_mul_matrix(&re)),
            &triple,
            &triple,
            "X·r",
        );
        let end_left = descend(
            &data.tensor.act_left(&re).kron(&id_a),
            &triple,
            &triple,
            "r·X",
        );
        let (Ok(end_right), Ok(end_left)) = (end_right, end_left) else {
            return false;
        };
        (0..t2.dim()).all(|z| {
            let img = central.element(&triple_iso.column(z));
            central.element(&triple_iso.mul_vec(&left_t.column(z))) == end_right.mul_vec(&img)
                && central.element(&triple_iso.mul_vec(&right_t.column(z))) == end_left.mul_vec(&img)
        })
    });
    checks.push("T⊗_{R^op}T ≅ (A⊗_BA⊗_BA)^B is R^op-bilinear", bimodule);

    let one = a.unit();
    let delta_image = (0..dt).all(|p| {
        let lhs = central.element(&triple_iso.mul_vec(&bialgebroid.coproduct.column(p)));
        let x = &t_lifts[p];
        let mut v = vector::zeros(field, n * n * n);
        for (p1, c) in vector::support(x) {
            let (k, l) = (p1 / n, p1 % n);
            let mut w = vector::tensor(&vector::tensor(&a.basis_vector(k), one), &a.basis_vector(l));
            vector::scale_in_place(&mut w, c);
            v = vector::add(&v, &w);
        }
        lhs == to_triple(&v)
    });
    checks.push("Δ^op(t) ↦ t¹⊗1⊗t²", delta_image);

    // τ on A ⊗ A: x ⊗ y ↦ Σ e_pq b_p y ⊗ x b_q
    let b_vecs = sub_basis;
    let db = b_vecs.len();
    let mut tau_cols = Vec::with_capacity(n * n);
    for k in 0..n {
        for l in 0..n {
            let mut v = vector::zeros(field, n * n);
            for (pq, c) in vector::support(&sep.e) {
                let (p, qq) = (pq / db, pq % db);
                let left = a.mul(&b_vecs[p], &a.basis_vector(l));
                let right = a.mul(&a.basis_vector(k), &b_vecs[qq]);
                v = vector::add(&v, &vector::scaled(&vector::tensor(&left, &right), c));
            }
            tau_cols.push(v);
        }
    }
    let tau_full = Matrix::from_columns(field, n * n, &tau_cols);
    let tau_q = descend(&tau_full, q, q, "τ on A⊗_BA")?;
    let tau_cols: Vec<Vec<Scalar>> = (0..dt)
        .map(|p| {
            data.t_coords(&tau_q.mul_vec(&data.t_class(&vector::unit(field, dt, p))))
                .ok_or_else(|| Error::Inconsistent("τ(t) is not B-central".into()))
        })
        .collect::<Result<_>>()?;
    let tau = Matrix::from_columns(field, dt, &tau_cols);
    let top = &bialgebroid.total;
    checks.push("τ² = id", tau.mul(&tau).is_identity());
    let anti = (0..dt).all(|x| {
        (0..dt).all(|y| {
            let (tx, ty) = (top.basis_vector(x), top.basis_vector(y));
            tau.mul_vec(&top.mul(&tx, &ty)) == top.mul(&tau.mul_vec(&ty), &tau.mul_vec(&tx))
        })
    });
    checks.push("τ anti-multiplicative", anti);
    let eq19 = rs.iter().all(|r| tau.mul_vec(&tb.target.mul_vec(r)) == tb.source.mul_vec(r));
    checks.push("τ∘t_L = s_L", eq19);

    // τ⁻¹(t₂)₁ ⊗ τ⁻¹(t₂)₂ t₁ = τ⁻¹(t) ⊗ 1 and τ(t₁)₁ t₂ ⊗ τ(t₁)₂ = 1 ⊗ τ(t), with τ⁻¹ = τ
    let delta_lift_of = |x: &[Scalar]| t2.lift(&bialgebroid.coproduct.mul_vec(x));
    let twisted_right: Vec<Vec<Scalar>> = (0..dt * dt)
        .map(|pq| {
            let (x, y) = (pq / dt, pq % dt);
            let d = delta_lift_of(&tau.column(y));
            t2.project(&id_t.kron_apply(&top.right_mul_matrix(&top.basis_vector(x)), &d))
        })
        .collect();
    let twisted_left: Vec<Vec<Scalar>> = (0..dt * dt)
        .map(|pq| {
            let (x, y) = (pq / dt, pq % dt);
            let d = delta_lift_of(&tau.column(x));
            t2.project(&top.right_mul_matrix(&top.basis_vector(y)).kron_apply(&id_t, &d))
        })
        .collect();
    let mut axiom = |name: &str, cols: &[Vec<Scalar>], rhs: &dyn Fn(&[Scalar]) -> Vec<Scalar>| {
        let m = Matrix::from_columns(field, t2.dim(), cols);
        let well_defined = t2.relations().basis().iter().all(|r| vector::is_zero(&m.mul_vec(r)));
        let holds = (0..dt).all(|p| {
            let d = t2.lift(&bialgebroid.coproduct.column(p));
            m.mul_vec(&d) == rhs(&top.basis_vector(p))
        });
        checks.push(format!("{name} well defined on T⊗_{{R^op}}T"), well_defined);
        checks.push(name.to_string(), holds);
    };
    let unit_t = top.unit().to_vec();
    axiom("τ⁻¹(t₂)₁ ⊗ τ⁻¹(t₂)₂t₁ = τ⁻¹(t) ⊗ 1", &twisted_right, &|x| {
        t2.project(&vector::tensor(&tau.mul_vec(x), &unit_t))
    });
    axiom("τ(t₁)₁t₂ ⊗ τ(t₁)₂ = 1 ⊗ τ(t)", &twisted_left, &|x| {
        t2.project(&vector::tensor(&unit_t, &tau.mul_vec(x)))
    });

    Ok(HopfAlgebroidData { sep: sep.clone(), bialgebroid, tau, triple_iso, dim_triple_central: central.dim(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Extension, Group};
    use crate::bialgebroid::build_t;
    use crate::depth_two::{find_left_quasibase, find_right_quasibase};
    use crate::field::Field;

    #[test]
    fn separability_of_c3_and_diagonal() {
        let q = Field::Rational;
        let c3 = FdAlgebra::group_algebra(&Group::cyclic(3), q);
        let e = find_sym_sep_element(&c3).unwrap();
        let d = c3.dim();
        let mu = c3.multiplication_matrix();
        assert_eq!(mu.mul_vec(&e.e), c3.unit());
        // (1/3) Σ g ⊗ g⁻¹ is one solution
        let third = q.parse("1/3").unwrap();
        let mut expected = vector::zeros(q, d * d);
        for g in 0..3 {
            expected[g * d + (3 - g) % 3] = third.clone();
        }
        assert_eq!(e.e, expected);
    }

    #[test]
    fn m2_over_f2_is_not_kanzaki_separable() {
        let f2 = Field::prime(2).unwrap();
        assert!(find_sym_sep_element(&FdAlgebra::matrix_algebra(2, f2)).is_none());
        let f3 = Field::prime(3).unwrap();
        assert!(find_sym_sep_element(&FdAlgebra::matrix_algebra(2, f3)).is_some());
    }

    fn check_instance(ext: Extension) {
        let data = ExtensionData::new(ext);
        let l = find_left_quasibase(&data).unwrap();
        let r = find_right_quasibase(&data).unwrap();
        let t = build_t(&data, &l, &r).unwrap();
        let sep = find_sym_sep_element(data.ext.sub_algebra()).unwrap();
        let h = build_t_op_cop(&data, &t, &r, &sep).unwrap();
        assert!(h.checks.all_passed(), "{:?}", h.checks.failures());
        if let Some(other) = sep.alternative() {
            let h2 = build_t_op_cop(&data, &t, &r, &other).unwrap();
            assert!(h2.checks.all_passed(), "{:?}", h2.checks.failures());
        }
    }

    #[test]
    fn hopf_algebroid_m2_over_diagonal() {
        let m = FdAlgebra::matrix_algebra(2, Field::Rational);
        let gen = vec![m.basis_vector(0), m.basis_vector(3)];
        check_instance(Extension::new(m, &gen).unwrap());
    }

    #[test]
    fn hopf_algebroid_s3_over_a3() {
        let g = Group::s3();
        let a = FdAlgebra::group_algebra(&g, Field::Rational);
        let gen: Vec<Vec<Scalar>> = ["1", "(123)", "(132)"].iter().map(|l| a.basis_vector(g.index_of(l).unwrap())).collect();
        check_instance(Extension::new(a, &gen).unwrap());
    }
}
