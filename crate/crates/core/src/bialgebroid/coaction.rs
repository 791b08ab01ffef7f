use crate::algebra::tensor_mul;
use crate::bialgebroid::s_and_t::bracket_pairing;
use crate::bialgebroid::{SBialgebroid, TBialgebroid};
use crate::checks::CheckList;
use crate::depth_two::{ExtensionData, Quasibase};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{balanced_tensor, descend, vector, Matrix, QuotientSpace, Subspace};

/// The right `T`-comodule algebra structure `ϱ_T(a) = Σ_j γ_j(a) ⊗ u_j` on `A`.
#[derive(Clone, Debug)]
pub struct ACoaction {
    /// `A ⊗_R T`
    pub space: QuotientSpace,
    /// `A -> A ⊗_R T`
    pub map: Matrix,
    pub coinvariants: Subspace,
    pub checks: CheckList,
}

/// The left `S`-comodule algebra structure `ϱ(f) = Σ_j γ_j ⊗ u_j¹ f(u_j² −)` on `𝓔`.
#[derive(Clone, Debug)]
pub struct ECoaction {
    /// `S ⊗_R 𝓔`
    pub space: QuotientSpace,
    /// `𝓔 -> S ⊗_R 𝓔` in `𝓔` coordinates
    pub map: Matrix,
    /// Coinvariants, as a subspace of `𝓔` coordinates.
    pub coinvariants: Subspace,
    /// `ρ(A)` in `𝓔` coordinates.
    pub right_multiplications: Subspace,
    pub checks: CheckList,
}

/// `f ◁ u = u¹ f(u² −)` for `u ∈ T` given by a representative.
pub(crate) fn act_on_endo(data: &ExtensionData, f: &Matrix, lift: &[Scalar]) -> Matrix {
    let a = data.a();
    let n = a.dim();
    let mut out = Matrix::zeros(data.field(), n, n);
    for (p, c) in vector::support(lift) {
        let (k, l) = (p / n, p % n);
        let term = a.left_mul_matrix(&a.basis_vector(k)).mul(f).mul(&a.left_mul_matrix(&a.basis_vector(l)));
        out = out.add(&term.scale(c));
    }
    out
}

pub fn coaction_on_a(data: &ExtensionData, t_bialgebroid: &TBialgebroid, right_qb: &Quasibase) -> ACoaction {
    let field = data.field();
    let a = data.a();
    let n = a.dim();
    let t = &t_bialgebroid.bialgebroid;
    let t_alg = &t.total;
    let dt = t_alg.dim();
    let rs: Vec<Vec<Scalar>> = (0..data.r.dim()).map(|i| data.r_alg.basis_vector(i)).collect();

    // a r ⊗ t ~ a ⊗ r t¹ ⊗ t², the latter being t · t_R(r)
    let on_a: Vec<Matrix> = rs.iter().map(|r| a.right_mul_matrix(&data.r_elem(r))).collect();
    let on_t: Vec<Matrix> = rs.iter().map(|r| t_alg.right_mul_matrix(&t.target.mul_vec(r))).collect();
    let space = balanced_tensor(&on_a, &on_t, n, dt, field);

    let gamma = right_qb.s_maps(data);
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let x = a.basis_vector(i);
            let mut v = vector::zeros(field, n * dt);
            for (g, u) in gamma.iter().zip(&right_qb.t) {
                v = vector::add(&v, &vector::tensor(&g.mul_vec(&x), u));
            }
            space.project(&v)
        })
        .collect();
    let map = Matrix::from_columns(field, space.dim(), &cols);
    let mut checks = CheckList::new();

    let defining = (0..data.s.dim()).all(|p| {
        let alpha = data.s.map(p);
        (0..n).all(|i| {
            let x = a.basis_vector(i);
            let mut rhs = vector::zeros(field, n);
            for (g, u) in gamma.iter().zip(&right_qb.t) {
                let r = data.r_elem(&bracket_pairing(data, alpha, u));
                rhs = vector::add(&rhs, &a.mul(&g.mul_vec(&x), &r));
            }
            alpha.mul_vec(&x) == rhs
        })
    });
    checks.push("α(a) = a₍₀₎[α|a₍₁₎]", defining);

    let unit = map.mul_vec(a.unit()) == space.project(&vector::tensor(a.unit(), t_alg.unit()));
    checks.push("unital", unit);

    // (id ⊗ ε_T)(a ⊗ t) = a ε(t)
    let mut contraction_cols = Vec::with_capacity(n * dt);
    for i in 0..n {
        for q in 0..dt {
            let e = data.r_elem(&t.epsilon(&t_alg.basis_vector(q)));
            contraction_cols.push(a.mul(&a.basis_vector(i), &e));
        }
    }
    let contraction = Matrix::from_columns(field, n, &contraction_cols);
    let counital = descend(&contraction, &space, &QuotientSpace::trivial(field, n), "(id⊗ε_T)")
        .map(|c| c.mul(&map).is_identity())
        .unwrap_or(false);
    checks.push("counital", counital);

    // (ϱ ⊗ id)ϱ = (id ⊗ Δ_T)ϱ in (A ⊗_R T) ⊗_R T
    let id_t = Matrix::identity(field, dt);
    let id_a = Matrix::identity(field, n);
    let coassoc = (|| {
        let outer_right: Vec<Matrix> = rs
            .iter()
            .map(|r| id_a.kron(&t_alg.right_mul_matrix(&t.source.mul_vec(r))))
            .map(|m| descend(&m, &space, &space, "right R-action on A⊗_R T"))
            .collect::<Result<_>>()
            .ok()?;
        let q3 = balanced_tensor(&outer_right, &on_t, space.dim(), dt, field);
        let delta_lift = t.tensor.section().mul(&t.coproduct);
        let lhs = |v: &[Scalar]| q3.project(&map.kron_apply(&id_t, v));
        let rhs = |v: &[Scalar]| q3.project(&space.projection().kron_apply(&id_t, &id_a.kron_apply(&delta_lift, v)));
        let descends = space
            .relations()
            .basis()
            .iter()
            .all(|rel| vector::is_zero(&lhs(rel)) && vector::is_zero(&rhs(rel)));
        Some(
            descends
                && (0..n).all(|i| {
                    let v = space.lift(&map.column(i));
                    lhs(&v) == rhs(&v)
                }),
        )
    })()
    .unwrap_or(false);
    checks.push("coassociative", coassoc);

    let lifts: Vec<Vec<Scalar>> = (0..n).map(|i| space.lift(&map.column(i))).collect();
    let multiplicative = (0..n).all(|i| {
        (0..n).all(|j| {
            let prod = space.project(&tensor_mul(a, t_alg, &lifts[i], &lifts[j]));
            prod == map.mul_vec(&a.mul(&a.basis_vector(i), &a.basis_vector(j)))
        })
    });
    checks.push("multiplicative", multiplicative);

    let trivial_cols: Vec<Vec<Scalar>> =
        (0..n).map(|i| space.project(&vector::tensor(&a.basis_vector(i), t_alg.unit()))).collect();
    let trivial = Matrix::from_columns(field, space.dim(), &trivial_cols);
    let coinvariants = Subspace::kernel(&map.sub(&trivial));
    ACoaction { space, map, coinvariants, checks }
}

pub fn coaction_on_e(data: &ExtensionData, s_bialgebroid: &SBialgebroid, right_qb: &Quasibase) -> Result<ECoaction> {
    let field = data.field();
    let a = data.a();
    let n = a.dim();
    let s = &s_bialgebroid.bialgebroid;
    let s_alg = &s.total;
    let e_alg = data.e.algebra();
    let (ds, de) = (s_alg.dim(), e_alg.dim());
    let rs: Vec<Vec<Scalar>> = (0..data.r.dim()).map(|i| data.r_alg.basis_vector(i)).collect();
    let e_coords = |f: &Matrix, what: &str| {
        data.e.coords(f).ok_or_else(|| Error::Inconsistent(format!("{what} is not left B-linear")))
    };
    let lambda_e: Vec<Vec<Scalar>> =
        rs.iter().map(|r| e_coords(&a.left_mul_matrix(&data.r_elem(r)), "λ(r)")).collect::<Result<_>>()?;
    let s_in_e = Matrix::from_columns(
        field,
        de,
        &(0..ds).map(|p| e_coords(data.s.map(p), "α ∈ S")).collect::<Result<Vec<_>>>()?,
    );

    // ρ(r)∘α ⊗ f ~ α ⊗ λ(r)∘f
    let on_s: Vec<Matrix> = rs.iter().map(|r| s_alg.left_mul_matrix(&s.target.mul_vec(r))).collect();
    let on_e: Vec<Matrix> = lambda_e.iter().map(|l| e_alg.left_mul_matrix(l)).collect();
    let space = balanced_tensor(&on_s, &on_e, ds, de, field);

    let lifts_u: Vec<Vec<Scalar>> = right_qb.t.iter().map(|u| data.t_lift(u)).collect();
    let mut cols = Vec::with_capacity(de);
    for q in 0..de {
        let f = data.e.map(q);
        let mut v = vector::zeros(field, ds * de);
        for (g, lift) in right_qb.s.iter().zip(&lifts_u) {
            let fu = e_coords(&act_on_endo(data, f, lift), "f ◁ u")?;
            v = vector::add(&v, &vector::tensor(g, &fu));
        }
        cols.push(space.project(&v));
    }
    let map = Matrix::from_columns(field, space.dim(), &cols);
    let mut checks = CheckList::new();

    let id_e = Matrix::identity(field, de);
    let id_s = Matrix::identity(field, ds);
    let one_e = e_alg.unit().to_vec();
    checks.push(
        "ϱ(id) = 1⊗1",
        map.mul_vec(&one_e) == space.project(&vector::tensor(s_alg.unit(), &one_e)),
    );

    // left R-linearity: ϱ(λ(r)f) = λ(r)f₋₁ ⊗ f₀
    let r_linear = rs.iter().zip(&lambda_e).all(|(r, l)| {
        let outer = descend(&s_alg.left_mul_matrix(&s.source.mul_vec(r)).kron(&id_e), &space, &space, "left R-action");
        match outer {
            Ok(act) => (0..de).all(|q| {
                let f = e_alg.basis_vector(q);
                map.mul_vec(&e_alg.mul(l, &f)) == act.mul_vec(&map.mul_vec(&f))
            }),
            Err(_) => false,
        }
    });
    checks.push("left R-module map", r_linear);

    // (ε_S ⊗ id)(α ⊗ f) = λ(ε(α)) ∘ f
    let mut contraction_cols = Vec::with_capacity(ds * de);
    for p in 0..ds {
        let eps = s.epsilon(&s_alg.basis_vector(p));
        let lam = e_coords(&a.left_mul_matrix(&data.r_elem(&eps)), "λ(ε(α))")?;
        for q in 0..de {
            contraction_cols.push(e_alg.mul(&lam, &e_alg.basis_vector(q)));
        }
    }
    let contraction = Matrix::from_columns(field, de, &contraction_cols);
    let counital = descend(&contraction, &space, &QuotientSpace::trivial(field, de), "(ε_S⊗id)")
        .map(|c| c.mul(&map).is_identity())
        .unwrap_or(false);
    checks.push("counital", counital);

    // (Δ_S ⊗ id)ϱ = (id ⊗ ϱ)ϱ in (S ⊗_R S) ⊗_R 𝓔
    let coassoc = (|| {
        let outer_right: Vec<Matrix> = rs
            .iter()
            .map(|r| id_s.kron(&s_alg.left_mul_matrix(&s.target.mul_vec(r))))
            .map(|m| descend(&m, &s.tensor, &s.tensor, "right R-action on S⊗_R S"))
            .collect::<Result<_>>()
            .ok()?;
        let q3 = balanced_tensor(&outer_right, &on_e, s.tensor.dim(), de, field);
        let rho_lift = space.section().mul(&map);
        let lhs = |v: &[Scalar]| q3.project(&s.coproduct.kron_apply(&id_e, v));
        let rhs = |v: &[Scalar]| q3.project(&s.tensor.projection().kron_apply(&id_e, &id_s.kron_apply(&rho_lift, v)));
        let descends = space
            .relations()
            .basis()
            .iter()
            .all(|rel| vector::is_zero(&lhs(rel)) && vector::is_zero(&rhs(rel)));
        Some(
            descends
                && (0..de).all(|q| {
                    let v = space.lift(&map.column(q));
                    lhs(&v) == rhs(&v)
                }),
        )
    })()
    .unwrap_or(false);
    checks.push("coassociative", coassoc);

    // ϱ(α) = Δ_S(α) under S ⊗_R S -> S ⊗_R 𝓔
    let total_integral = descend(&id_s.kron(&s_in_e), &s.tensor, &space, "S⊗_R S -> S⊗_R 𝓔")
        .map(|inc| (0..ds).all(|p| inc.mul_vec(&s.coproduct.column(p)) == map.mul_vec(&s_in_e.column(p))))
        .unwrap_or(false);
    checks.push("ϱ restricted to S equals Δ_S", total_integral);

    // f₋₁ t̃(r) ⊗ f₀ = f₋₁ ⊗ f₀ λ(r)
    let corner = rs.iter().zip(&lambda_e).all(|(r, l)| {
        let diff = s_alg.right_mul_matrix(&s.target.mul_vec(r)).kron(&id_e).sub(&id_s.kron(&e_alg.right_mul_matrix(l)));
        match descend(&diff, &space, &space, "corner difference") {
            Ok(d) => d.mul(&map).is_zero(),
            Err(_) => false,
        }
    });
    checks.push("image in the corner", corner);

    let lifts: Vec<Vec<Scalar>> = (0..de).map(|q| space.lift(&map.column(q))).collect();
    let multiplicative = (0..de).all(|p| {
        (0..de).all(|q| {
            let prod = space.project(&tensor_mul(s_alg, e_alg, &lifts[p], &lifts[q]));
            prod == map.mul_vec(&e_alg.mul(&e_alg.basis_vector(p), &e_alg.basis_vector(q)))
        })
    });
    checks.push("multiplicative", multiplicative);

    let right_mults: Vec<Vec<Scalar>> =
        (0..n).map(|i| e_coords(&a.right_mul_matrix(&a.basis_vector(i)), "ρ(a)")).collect::<Result<_>>()?;
    let right_multiplications = Subspace::span(field, de, right_mults.iter().cloned());
    let trivial_cols: Vec<Vec<Scalar>> =
        (0..de).map(|q| space.project(&vector::tensor(s_alg.unit(), &e_alg.basis_vector(q)))).collect();
    let trivial = Matrix::from_columns(field, space.dim(), &trivial_cols);
    let coinvariants = Subspace::kernel(&map.sub(&trivial));
    checks.push(
        "ϱ(ρ(a)) = 1⊗ρ(a)",
        right_mults.iter().all(|v| map.mul_vec(v) == trivial.mul_vec(v)),
    );
    checks.push("coinvariants equal ρ(A)", coinvariants == right_multiplications);

    Ok(ECoaction { space, map, coinvariants, right_multiplications, checks })
}
