use crate::algebra::Embedding;
use crate::bialgebroid::{ECoaction, SBialgebroid};
use crate::checks::CheckList;
use crate::depth_two::{ExtensionData, Quasibase};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{balanced_tensor, descend, descend_projected, intertwiners, unvec, vector, Matrix, QuotientSpace};

/// Certificate that `𝓔 | ρ(A)` is a left `S`-Galois extension, with the
/// factorisation of the Galois map through
/// `𝓔 ⊗_{ρ(A)} 𝓔 -> 𝓔 ⊗_A 𝓔 -> Hom(_B Hom(𝓔_A, A_A), _B A) -> Hom(_B A ⊗_B A, _B A)`.
#[derive(Clone, Debug)]
pub struct EndoGalois {
    /// `𝓔 ⊗_{ρ(A)} 𝓔`
    pub dim_domain: usize,
    /// `S ⊗_R 𝓔`
    pub dim_codomain: usize,
    /// `Hom(_B A ⊗_B A, _B A)`
    pub dim_hom: usize,
    /// `Hom(𝓔_A, A_A)`
    pub dim_dual: usize,
    /// `β : 𝓔 ⊗_{ρ(A)} 𝓔 -> S ⊗_R 𝓔`
    pub beta: Matrix,
    pub bijective: bool,
    pub checks: CheckList,
}

fn is_invertible(m: &Matrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

fn coords_in(emb: &Embedding, m: &Matrix, what: &str) -> Result<Vec<Scalar>> {
    emb.coords(m.data()).ok_or_else(|| Error::Inconsistent(format!("{what} lies outside its Hom space")))
}

pub fn endo_galois(data: &ExtensionData, s_bialgebroid: &SBialgebroid, coaction: &ECoaction, right_qb: &Quasibase) -> Result<EndoGalois> {
    let field = data.field();
    let a = data.a();
    let n = a.dim();
    let s_alg = &s_bialgebroid.bialgebroid.total;
    let e_alg = data.e.algebra();
    let (ds, de, dq) = (s_alg.dim(), e_alg.dim(), data.tensor.dim());
    let q = data.tensor.quotient();
    let space = &coaction.space;
    let e_coords = |f: &Matrix, what: &str| {
        data.e.coords(f).ok_or_else(|| Error::Inconsistent(format!("{what} is not left B-linear")))
    };
    let rho_e: Vec<Vec<Scalar>> =
        (0..n).map(|k| e_coords(&a.right_mul_matrix(&a.basis_vector(k)), "ρ(a)")).collect::<Result<_>>()?;
    let e_maps = data.e.maps();
    let mut checks = CheckList::new();

    // 𝓔 ⊗_{ρ(A)} 𝓔
    let on_first: Vec<Matrix> = rho_e.iter().map(|r| e_alg.right_mul_matrix(r)).collect();
    let on_second: Vec<Matrix> = rho_e.iter().map(|r| e_alg.left_mul_matrix(r)).collect();
    let domain = balanced_tensor(&on_first, &on_second, de, de, field);

    // β(f ⊗ g) = f₋₁ ⊗ f₀ g
    let id_s = Matrix::identity(field, ds);
    let rho_lift = space.section().mul(&coaction.map);
    let right_mults: Vec<Matrix> = (0..de).map(|g| e_alg.right_mul_matrix(&e_alg.basis_vector(g))).collect();
    let mut beta_cols = Vec::with_capacity(de * de);
    for f in 0..de {
        let lift = rho_lift.column(f);
        for rg in &right_mults {
            beta_cols.push(space.project(&id_s.kron_apply(rg, &lift)));
        }
    }
    let beta_full = Matrix::from_columns(field, space.dim(), &beta_cols);
    let beta = descend_projected(&beta_full, &domain, "Galois map β")?;
    let bijective = is_invertible(&beta);
    checks.push("β well defined on 𝓔⊗_{ρ(A)}𝓔", true);
    checks.push("β bijective", bijective);

    // Y = Hom(_B A ⊗_B A, _B A), maps n x dq
    let sub_basis = data.ext.sub_basis();
    let on_tensor: Vec<Matrix> = sub_basis.iter().map(|b| data.tensor.act_left(b)).collect();
    let on_a: Vec<Matrix> = sub_basis.iter().map(|b| a.left_mul_matrix(b)).collect();
    let hom_y = Embedding::from_subspace(intertwiners(&on_tensor, &on_a, dq, n, field));
    let dy = hom_y.dim();

    // α ⊗ f ↦ (a ⊗ a' ↦ α(a) f(a'))
    let mut ev_cols = Vec::with_capacity(ds * de);
    let mut ev_descends_tensor = true;
    for alpha in data.s.maps() {
        for f in e_maps {
            let mut m = Matrix::zeros(field, n, n * n);
            for i in 0..n {
                let ai = alpha.column(i);
                for j in 0..n {
                    for (c, x) in a.mul(&ai, &f.column(j)).into_iter().enumerate() {
                        m.set(c, i * n + j, x);
                    }
                }
            }
            ev_descends_tensor &= q.relations().basis().iter().all(|r| vector::is_zero(&m.mul_vec(r)));
            ev_cols.push(coords_in(&hom_y, &m.mul(q.section()), "α(−)f(−)")?);
        }
    }
    let ev_full = Matrix::from_columns(field, dy, &ev_cols);
    let ev = descend_projected(&ev_full, space, "S⊗_R 𝓔 -> Hom(A⊗_B A, A)")?;
    checks.push("evaluation S⊗_R𝓔 -> Hom(A⊗_BA, A) well defined", ev_descends_tensor);

    // F ↦ Σ_j γ_j ⊗ u_j¹ F(u_j² ⊗ −)
    let gamma_e: Vec<Vec<Scalar>> =
        right_qb.s.iter().map(|g| e_coords(&data.s.element(g), "γ_j")).collect::<Result<_>>()?;
    let u_lifts: Vec<Vec<Scalar>> = right_qb.t.iter().map(|u| data.t_lift(u)).collect();
    let mut inv_cols = Vec::with_capacity(dy);
    for y in 0..dy {
        let fq = unvec(field, n, dq, &hom_y.element(&vector::unit(field, dy, y))).mul(q.projection());
        let mut v = vector::zeros(field, ds * de);
        for (g, lift) in right_qb.s.iter().zip(&u_lifts) {
            let mut phi = Matrix::zeros(field, n, n);
            for (p, c) in vector::support(lift) {
                let (k, l) = (p / n, p % n);
                let cols: Vec<usize> = (l * n..(l + 1) * n).collect();
                phi = phi.add(&a.left_mul_matrix(&a.basis_vector(k)).mul(&fq.select_columns(&cols)).scale(c));
            }
            v = vector::add(&v, &vector::tensor(g, &e_coords(&phi, "u¹F(u²⊗−)")?));
        }
        inv_cols.push(space.project(&v));
    }
    let ev_inv = Matrix::from_columns(field, space.dim(), &inv_cols);
    checks.push(
        "S⊗_R𝓔 ≅ Hom(A⊗_BA, A) with its inverse",
        ev.mul(&ev_inv).is_identity() && ev_inv.mul(&ev).is_identity(),
    );

    // β(f ⊗ g)(a ⊗ a') = f(a g(a'))
    let mut direct_cols = Vec::with_capacity(de * de);
    for f in e_maps {
        for g in e_maps {
            let mut m = Matrix::zeros(field, n, n * n);
            for i in 0..n {
                for j in 0..n {
                    let v = f.mul_vec(&a.mul(&a.basis_vector(i), &g.column(j)));
                    for (c, x) in v.into_iter().enumerate() {
                        m.set(c, i * n + j, x);
                    }
                }
            }
            direct_cols.push(coords_in(&hom_y, &m.mul(q.section()), "f(a g(a'))")?);
        }
    }
    let direct = descend_projected(&Matrix::from_columns(field, dy, &direct_cols), &domain, "f(a g(a'))")?;
    let ev_beta = ev.mul(&beta);
    checks.push("β(f⊗g)(a⊗a') = f(a g(a'))", ev_beta == direct);

    // 𝓔* = Hom(𝓔_A, A_A) with f·a = ρ(a)∘f, maps n x de
    let on_e: Vec<Matrix> = rho_e.iter().map(|r| e_alg.left_mul_matrix(r)).collect();
    let on_a_right: Vec<Matrix> = (0..n).map(|k| a.right_mul_matrix(&a.basis_vector(k))).collect();
    let dual = Embedding::from_subspace(intertwiners(&on_e, &on_a_right, de, n, field));
    let dd = dual.dim();

    // Ψ(a ⊗ a')(f) = a f(a')
    let mut psi_cols = Vec::with_capacity(n * n);
    for i in 0..n {
        let x = a.basis_vector(i);
        for j in 0..n {
            let cols: Vec<Vec<Scalar>> = e_maps.iter().map(|f| a.mul(&x, &f.column(j))).collect();
            psi_cols.push(coords_in(&dual, &Matrix::from_columns(field, n, &cols), "Ψ(a⊗a')")?);
        }
    }
    let psi = descend(&Matrix::from_columns(field, dd, &psi_cols), q, &QuotientSpace::trivial(field, dd), "Ψ")?;
    // Ψ⁻¹(F) = Σ_j F(γ_j) u_j
    let u_classes: Vec<Vec<Scalar>> = right_qb.t.iter().map(|u| data.t_class(u)).collect();
    let psi_inv_cols: Vec<Vec<Scalar>> = (0..dd)
        .map(|d| {
            let big_f = unvec(field, n, de, &dual.element(&vector::unit(field, dd, d)));
            let mut v = vector::zeros(field, dq);
            for (g, u) in gamma_e.iter().zip(&u_classes) {
                v = vector::add(&v, &data.tensor.act_left(&big_f.mul_vec(g)).mul_vec(u));
            }
            v
        })
        .collect();
    let psi_inv = Matrix::from_columns(field, dq, &psi_inv_cols);
    checks.push(
        "Ψ: A⊗_BA ≅ Hom(𝓔_A, A_A) with its inverse",
        psi.mul(&psi_inv).is_identity() && psi_inv.mul(&psi).is_identity(),
    );

    // X = Hom(_B 𝓔*, _B A), maps n x dd
    let b_on_dual: Vec<Matrix> = sub_basis
        .iter()
        .map(|b| {
            let lb = a.left_mul_matrix(b);
            let cols: Vec<Vec<Scalar>> = (0..dd)
                .map(|d| {
                    let nu = unvec(field, n, de, &dual.element(&vector::unit(field, dd, d)));
                    coords_in(&dual, &lb.mul(&nu), "b·ν")
                })
                .collect::<Result<_>>()?;
            Ok(Matrix::from_columns(field, dd, &cols))
        })
        .collect::<Result<_>>()?;
    let hom_x = Embedding::from_subspace(intertwiners(&b_on_dual, &on_a, dd, n, field));
    let dx = hom_x.dim();

    // 𝓔 ⊗_A 𝓔 with g·a = ρ(a)∘g and a·φ = φ∘ρ(a)
    let flipped = balanced_tensor(&on_second, &on_first, de, de, field);
    let nus: Vec<Matrix> = (0..dd).map(|d| unvec(field, n, de, &dual.element(&vector::unit(field, dd, d)))).collect();
    let mut mull_cols = Vec::with_capacity(de * de);
    for g in 0..de {
        let nu_g: Vec<Vec<Scalar>> = nus.iter().map(|nu| nu.column(g)).collect();
        for phi in e_maps {
            let cols: Vec<Vec<Scalar>> = nu_g.iter().map(|v| phi.mul_vec(v)).collect();
            mull_cols.push(coords_in(&hom_x, &Matrix::from_columns(field, n, &cols), "ν ↦ φ(ν(g))")?);
        }
    }
    let mull = descend_projected(&Matrix::from_columns(field, dx, &mull_cols), &flipped, "𝓔⊗_A𝓔 -> Hom(𝓔*, A)")?;
    // F ↦ Σ_j γ_j ⊗ (a ↦ F(Ψ(a·u_j)))
    let mut mull_inv_cols = Vec::with_capacity(dx);
    for x in 0..dx {
        let big_f = unvec(field, n, dd, &hom_x.element(&vector::unit(field, dx, x)));
        let f_psi = big_f.mul(&psi);
        let mut v = vector::zeros(field, de * de);
        for (g, u) in gamma_e.iter().zip(&u_classes) {
            let cols: Vec<Vec<Scalar>> = (0..n).map(|k| f_psi.mul_vec(&data.tensor.left_action(k).mul_vec(u))).collect();
            let phi = e_coords(&Matrix::from_columns(field, n, &cols), "a ↦ F(Ψ(a·u))")?;
            v = vector::add(&v, &vector::tensor(g, &phi));
        }
        mull_inv_cols.push(flipped.project(&v));
    }
    let mull_inv = Matrix::from_columns(field, flipped.dim(), &mull_inv_cols);
    checks.push(
        "𝓔⊗_A𝓔 ≅ Hom(_B𝓔*, _BA) with its inverse",
        mull.mul(&mull_inv).is_identity() && mull_inv.mul(&mull).is_identity(),
    );

    // f ⊗ g ↦ g ⊗ f
    let swap_cols: Vec<Vec<Scalar>> = (0..de * de).map(|p| vector::unit(field, de * de, (p % de) * de + p / de)).collect();
    let swap = Matrix::from_columns(field, de * de, &swap_cols);
    let flip = descend(&swap, &domain, &flipped, "flip")?;
    checks.push("flip 𝓔⊗_{ρ(A)}𝓔 ≅ 𝓔⊗_A𝓔", is_invertible(&flip));

    // F ↦ F ∘ Ψ
    let pre_cols: Vec<Vec<Scalar>> = (0..dx)
        .map(|x| {
            let big_f = unvec(field, n, dd, &hom_x.element(&vector::unit(field, dx, x)));
            coords_in(&hom_y, &big_f.mul(&psi), "F∘Ψ")
        })
        .collect::<Result<_>>()?;
    let precompose = Matrix::from_columns(field, dy, &pre_cols);
    checks.push("precomposition with Ψ bijective", is_invertible(&precompose));
    checks.push("composite of the isomorphisms equals β", precompose.mul(&mull).mul(&flip) == ev_beta);

    Ok(EndoGalois { dim_domain: domain.dim(), dim_codomain: space.dim(), dim_hom: dy, dim_dual: dd, beta, bijective, checks })
}
