//! Finite-dimensional Hopf algebras, Hopf subalgebras and normality.

use crate::algebra::{tensor_mul, Embedding, FdAlgebra, Group};
use crate::checks::CheckList;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{balanced_tensor, vector, Matrix, QuotientSpace, Subspace};

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub algebra: FdAlgebra,
    /// `n² × n`, coordinates `i*n + j` for `h_i ⊗ h_j`.
    pub coproduct: Matrix,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(algebra: FdAlgebra, coproduct: Matrix, counit: Vec<Scalar>, antipode: Matrix) -> Result<HopfAlgebra> {
        let n = algebra.dim();
        if coproduct.rows() != n * n || coproduct.cols() != n || counit.len() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Shape("coalgebra data does not match the algebra dimension".into()));
        }
        let h = HopfAlgebra { algebra, coproduct, counit, antipode };
        let checks = h.check_axioms();
        if let Some(bad) = checks.failures().first() {
            return Err(Error::InvalidHopf(bad.to_string()));
        }
        Ok(h)
    }

    /// `Δ(g) = g⊗g`, `ε(g) = 1`, `τ(g) = g⁻¹`.
    pub fn group_algebra(group: &Group, field: Field) -> HopfAlgebra {
        let algebra = FdAlgebra::group_algebra(group, field);
        let n = group.order();
        let coproduct = Matrix::from_fn(field, n * n, n, |r, c| if r == c * n + c { field.one() } else { field.zero() });
        let antipode = Matrix::from_fn(field, n, n, |r, c| if r == group.inverse(c) { field.one() } else { field.zero() });
        HopfAlgebra { algebra, coproduct, counit: vec![field.one(); n], antipode }
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.coproduct.mul_vec(x)
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        dot(&self.counit, x, self.field())
    }

    fn counit_row(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.dim(), std::slice::from_ref(&self.counit))
    }

    pub fn check_axioms(&self) -> CheckList {
        let h = &self.algebra;
        let field = self.field();
        let n = self.dim();
        let id = Matrix::identity(field, n);
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis_vector(i)).collect();
        let mut c = CheckList::new();
        c.push("coproduct unital", self.delta(h.unit()) == vector::tensor(h.unit(), h.unit()));
        c.push(
            "coproduct multiplicative",
            basis.iter().all(|x| basis.iter().all(|y| self.delta(&h.mul(x, y)) == tensor_mul(h, h, &self.delta(x), &self.delta(y)))),
        );
        c.push("counit unital", self.epsilon(h.unit()).is_one());
        c.push(
            "counit multiplicative",
            basis.iter().all(|x| basis.iter().all(|y| self.epsilon(&h.mul(x, y)) == self.epsilon(x) * self.epsilon(y))),
        );
        c.push(
            "coassociative",
            self.coproduct.kron(&id).mul(&self.coproduct) == id.kron(&self.coproduct).mul(&self.coproduct),
        );
        let eps = self.counit_row();
        c.push("left counit law", eps.kron(&id).mul(&self.coproduct).is_identity());
        c.push("right counit law", id.kron(&eps).mul(&self.coproduct).is_identity());
        let mu = h.multiplication_matrix();
        let unit_eps = Matrix::from_columns(field, n, &[h.unit().to_vec()]).mul(&eps);
        c.push("τ(h₁)h₂ = ε(h)1", mu.mul(&self.antipode.kron(&id)).mul(&self.coproduct) == unit_eps);
        c.push("h₁τ(h₂) = ε(h)1", mu.mul(&id.kron(&self.antipode)).mul(&self.coproduct) == unit_eps);
        c
    }
}

fn dot(a: &[Scalar], b: &[Scalar], field: Field) -> Scalar {
    let mut s = field.zero();
    for (x, y) in a.iter().zip(b) {
        s.add_mul(x, y);
    }
    s
}

/// Applies `f(h_p, h_q)` to every term of `Σ c_pq h_p⊗h_q` and sums.
fn sweedler(n: usize, field: Field, t: &[Scalar], dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Vec<Scalar> {
    let mut out = vector::zeros(field, dim);
    for (pq, c) in vector::support(t) {
        vector::axpy(&mut out, c, &f(pq / n, pq % n));
    }
    out
}

#[derive(Clone, Debug)]
pub struct HopfSubalgebra {
    pub parent: HopfAlgebra,
    pub sub: Embedding,
}

impl HopfSubalgebra {
    pub fn new(parent: HopfAlgebra, spanning: &[Vec<Scalar>]) -> Result<HopfSubalgebra> {
        let field = parent.field();
        let n = parent.dim();
        let (sub, _) = Embedding::from_spanning(field, n, spanning);
        let h = &parent.algebra;
        if !sub.contains(h.unit()) {
            return Err(Error::NotSubalgebra("does not contain the unit".into()));
        }
        let basis = sub.basis_vectors();
        if !basis.iter().all(|x| basis.iter().all(|y| sub.contains(&h.mul(x, y)))) {
            return Err(Error::NotSubalgebra("not closed under multiplication".into()));
        }
        let kk = Subspace::span(field, n * n, basis.iter().flat_map(|x| basis.iter().map(move |y| vector::tensor(x, y))));
        if !basis.iter().all(|x| kk.contains(&parent.delta(x))) {
            return Err(Error::NotSubalgebra("not closed under the coproduct".into()));
        }
        if !basis.iter().all(|x| sub.contains(&parent.antipode.mul_vec(x))) {
            return Err(Error::NotSubalgebra("not stable under the antipode".into()));
        }
        Ok(HopfSubalgebra { parent, sub })
    }

    /// The subgroup algebra spanned by the listed group elements.
    pub fn from_subgroup(group: &Group, field: Field, elements: &[&str]) -> Result<HopfSubalgebra> {
        let parent = HopfAlgebra::group_algebra(group, field);
        let n = group.order();
        let spanning = elements
            .iter()
            .map(|l| group.index_of(l).map(|i| vector::unit(field, n, i)).ok_or_else(|| Error::Parse(format!("unknown group element {l}"))))
            .collect::<Result<Vec<_>>>()?;
        HopfSubalgebra::new(parent, &spanning)
    }

    pub fn ideals(&self) -> IdealSpaces {
        let h = &self.parent.algebra;
        let field = self.parent.field();
        let n = self.parent.dim();
        let eps_on_k = Matrix::from_rows(field, n, std::slice::from_ref(&self.parent.counit)).mul(self.sub.inclusion());
        let k_plus_coords = Subspace::kernel(&eps_on_k);
        let k_plus = k_plus_coords.map(self.sub.inclusion());
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis_vector(i)).collect();
        type Op<'a> = dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar> + 'a;
        let span = |f: &Op| {
            Subspace::span(field, n, basis.iter().flat_map(|a| k_plus.basis().iter().map(move |x| f(a, x))).collect::<Vec<_>>())
        };
        let hk_plus = span(&|a, x| h.mul(a, x));
        let k_plus_h = span(&|a, x| h.mul(x, a));
        let hk_plus_h = Subspace::span(field, n, hk_plus.basis().iter().flat_map(|y| basis.iter().map(move |a| h.mul(y, a))).collect::<Vec<_>>());
        IdealSpaces { k_plus, hk_plus, k_plus_h, hk_plus_h }
    }
}

#[derive(Clone, Debug)]
pub struct IdealSpaces {
    pub k_plus: Subspace,
    pub hk_plus: Subspace,
    pub k_plus_h: Subspace,
    pub hk_plus_h: Subspace,
}

#[derive(Clone, Debug)]
pub struct Normality {
    pub normal: bool,
    pub dim_k_plus: usize,
    pub dim_hk_plus: usize,
    pub dim_k_plus_h: usize,
    pub dim_hk_plus_h: usize,
    pub ideals_equal: bool,
    pub left_adjoint_stable: bool,
    pub right_adjoint_stable: bool,
    pub checks: CheckList,
}

/// Compares `HK⁺ = K⁺H` with stability under both adjoint actions; the two
/// criteria must agree.
pub fn is_normal(sub: &HopfSubalgebra) -> Result<Normality> {
    let hopf = &sub.parent;
    let h = &hopf.algebra;
    let field = hopf.field();
    let n = hopf.dim();
    let ideals = sub.ideals();
    let ideals_equal = ideals.hk_plus.contains_subspace(&ideals.k_plus_h) && ideals.k_plus_h.contains_subspace(&ideals.hk_plus);
    let k_basis = sub.sub.basis_vectors();
    let tau = |i: usize| hopf.antipode.column(i);
    let stable = |left: bool| {
        (0..n).all(|a| {
            let d = hopf.delta(&h.basis_vector(a));
            k_basis.iter().all(|x| {
                let v = sweedler(n, field, &d, n, |p, q| {
                    if left {
                        h.mul(&h.mul(&tau(p), x), &h.basis_vector(q))
                    } else {
                        h.mul(&h.mul(&h.basis_vector(p), x), &tau(q))
                    }
                });
                sub.sub.contains(&v)
            })
        })
    };
    let (left_adjoint_stable, right_adjoint_stable) = (stable(true), stable(false));
    if ideals_equal != left_adjoint_stable || ideals_equal != right_adjoint_stable {
        return Err(Error::Inconsistent(format!(
            "normality criteria disagree: HK⁺ = K⁺H is {ideals_equal}, adjoint stability is {left_adjoint_stable}/{right_adjoint_stable}"
        )));
    }
    let mut checks = CheckList::new();
    checks.push("K⁺ ⊆ K", ideals.k_plus.basis().iter().all(|x| sub.sub.contains(x)));
    checks.push(
        "HK⁺ ∪ K⁺H ⊆ HK⁺H",
        ideals.hk_plus_h.contains_subspace(&ideals.hk_plus) && ideals.hk_plus_h.contains_subspace(&ideals.k_plus_h),
    );
    checks.push("HK⁺ = K⁺H", ideals_equal);
    checks.push("adjoint stable", left_adjoint_stable && right_adjoint_stable);
    Ok(Normality {
        normal: ideals_equal,
        dim_k_plus: ideals.k_plus.dim(),
        dim_hk_plus: ideals.hk_plus.dim(),
        dim_k_plus_h: ideals.k_plus_h.dim(),
        dim_hk_plus_h: ideals.hk_plus_h.dim(),
        ideals_equal,
        left_adjoint_stable,
        right_adjoint_stable,
        checks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientSide {
    /// `H/HK⁺`
    ByLeftIdeal,
    /// `H/K⁺H`
    ByRightIdeal,
    /// `H/HK⁺H`
    ByTwoSidedIdeal,
}

#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub side: QuotientSide,
    pub quotient: QuotientSpace,
    pub coproduct: Matrix,
    pub counit: Vec<Scalar>,
    /// Present when the relations form a two-sided ideal stable under the
    /// antipode.
    pub hopf: Option<HopfAlgebra>,
    pub checks: CheckList,
}

impl QuotientCoalgebra {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

pub fn quotient_coalgebra(sub: &HopfSubalgebra, side: QuotientSide) -> Result<QuotientCoalgebra> {
    let hopf = &sub.parent;
    let h = &hopf.algebra;
    let field = hopf.field();
    let n = hopf.dim();
    let ideals = sub.ideals();
    let relations = match side {
        QuotientSide::ByLeftIdeal => ideals.hk_plus,
        QuotientSide::ByRightIdeal => ideals.k_plus_h,
        QuotientSide::ByTwoSidedIdeal => ideals.hk_plus_h,
    };
    let quotient = QuotientSpace::new(relations);
    let pi = quotient.projection();
    let pi2 = pi.kron(pi);
    let delta_bar = pi2.mul(&hopf.coproduct);
    if !quotient.relations().basis().iter().all(|r| vector::is_zero(&delta_bar.mul_vec(r))) {
        return Err(Error::DoesNotDescend("coproduct on the quotient".into()));
    }
    if !quotient.relations().basis().iter().all(|r| hopf.epsilon(r).is_zero()) {
        return Err(Error::DoesNotDescend("counit on the quotient".into()));
    }
    let coproduct = delta_bar.mul(quotient.section());
    let counit = Matrix::from_rows(field, n, std::slice::from_ref(&hopf.counit)).mul(quotient.section()).row(0).to_vec();
    let mut checks = CheckList::new();
    checks.push("coproduct descends", true);
    checks.push("counit descends", true);

    let rel = quotient.relations();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis_vector(i)).collect();
    let two_sided = rel.basis().iter().all(|r| basis.iter().all(|a| rel.contains(&h.mul(a, r)) && rel.contains(&h.mul(r, a))));
    let tau_stable = rel.basis().iter().all(|r| rel.contains(&hopf.antipode.mul_vec(r)));
    checks.push("relations form a two-sided ideal", two_sided);
    let hopf_quotient = if two_sided && tau_stable {
        let d = quotient.dim();
        let lifts: Vec<Vec<Scalar>> = (0..d).map(|i| quotient.lift(&vector::unit(field, d, i))).collect();
        let mut consts = Vec::with_capacity(d * d * d);
        for x in &lifts {
            for y in &lifts {
                consts.extend(quotient.project(&h.mul(x, y)));
            }
        }
        let labels = (0..d).map(|i| format!("q{i}")).collect();
        let algebra = FdAlgebra::new(field, labels, consts, quotient.project(h.unit()))?;
        let antipode = pi.mul(&hopf.antipode).mul(quotient.section());
        let q = HopfAlgebra::new(algebra, coproduct.clone(), counit.clone(), antipode)?;
        checks.push("quotient is a Hopf algebra", true);
        Some(q)
    } else {
        None
    };
    Ok(QuotientCoalgebra { side, quotient, coproduct, counit, hopf: hopf_quotient, checks })
}

/// `β : H ⊗_K H -> H ⊗ H/HK⁺`, `a⊗a′ ↦ aa′₁ ⊗ ā′₂`.
#[derive(Clone, Debug)]
pub struct GaloisCertificate {
    pub dim_domain: usize,
    pub dim_codomain: usize,
    /// Whether `β` is well defined on `H ⊗_K H`.
    pub descends: bool,
    pub bijective: bool,
    /// Both composites with `x⊗ȳ ↦ xτ(y₁)⊗y₂` are identities.
    pub inverse_exact: Option<bool>,
    pub beta: Option<Matrix>,
}

pub fn hopf_galois_map(sub: &HopfSubalgebra) -> Result<GaloisCertificate> {
    let hopf = &sub.parent;
    let h = &hopf.algebra;
    let field = hopf.field();
    let n = hopf.dim();
    let k_basis = sub.sub.basis_vectors();
    let right_k: Vec<Matrix> = k_basis.iter().map(|k| h.right_mul_matrix(k)).collect();
    let left_k: Vec<Matrix> = k_basis.iter().map(|k| h.left_mul_matrix(k)).collect();
    let dom = balanced_tensor(&right_k, &left_k, n, n, field);
    let hbar = quotient_coalgebra(sub, QuotientSide::ByLeftIdeal)?;
    let pi = hbar.quotient.projection();
    let dq = hbar.dim();
    let id = Matrix::identity(field, n);
    let to_target = id.kron(pi);

    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let d = hopf.delta(&h.basis_vector(b));
            let v = sweedler(n, field, &d, n * n, |p, q| vector::tensor(h.basis_product(a, p), &h.basis_vector(q)));
            cols.push(to_target.mul_vec(&v));
        }
    }
    let full = Matrix::from_columns(field, n * dq, &cols);
    let descends = dom.relations().basis().iter().all(|r| vector::is_zero(&full.mul_vec(r)));
    let mut cert = GaloisCertificate {
        dim_domain: dom.dim(),
        dim_codomain: n * dq,
        descends,
        bijective: false,
        inverse_exact: None,
        beta: None,
    };
    if !descends {
        return Ok(cert);
    }
    let beta = full.mul(dom.section());
    cert.bijective = dom.dim() == n * dq && beta.rank() == dom.dim();

    // x ⊗ ȳ ↦ xτ(y₁) ⊗ y₂
    let mut inv_cols = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let d = hopf.delta(&h.basis_vector(y));
            let v = sweedler(n, field, &d, n * n, |p, q| {
                vector::tensor(&h.mul(&h.basis_vector(x), &hopf.antipode.column(p)), &h.basis_vector(q))
            });
            inv_cols.push(dom.project(&v));
        }
    }
    let inv_full = Matrix::from_columns(field, dom.dim(), &inv_cols);
    let sec = id.kron(hbar.quotient.section());
    let ker_ok = hbar
        .quotient
        .relations()
        .basis()
        .iter()
        .all(|r| (0..n).all(|x| vector::is_zero(&inv_full.mul_vec(&vector::tensor(&h.basis_vector(x), r)))));
    let inverse = inv_full.mul(&sec);
    cert.inverse_exact = Some(ker_ok && inverse.mul(&beta).is_identity() && beta.mul(&inverse).is_identity());
    cert.beta = Some(beta);
    Ok(cert)
}

/// `Φ = (ε_H ⊗ id)∘ρ : H -> W` for a comodule-algebra coaction `ρ : H -> H ⊗ W`.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub phi: Matrix,
    pub rank: usize,
    pub surjective: bool,
    pub checks: CheckList,
}

pub fn check_coaction(h: &HopfAlgebra, w: &HopfAlgebra, rho: &Matrix) -> CheckList {
    let field = h.field();
    let (n, m) = (h.dim(), w.dim());
    let id_h = Matrix::identity(field, n);
    let mut c = CheckList::new();
    c.push(
        "coaction coassociative",
        rho.kron(&Matrix::identity(field, m)).mul(rho) == id_h.kron(&w.coproduct).mul(rho),
    );
    c.push("coaction counital", id_h.kron(&w.counit_row()).mul(rho).is_identity());
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.algebra.basis_vector(i)).collect();
    c.push(
        "coaction multiplicative",
        basis.iter().all(|x| {
            basis
                .iter()
                .all(|y| rho.mul_vec(&h.algebra.mul(x, y)) == tensor_mul(&h.algebra, &w.algebra, &rho.mul_vec(x), &rho.mul_vec(y)))
        }),
    );
    c.push("coaction unital", rho.mul_vec(h.algebra.unit()) == vector::tensor(h.algebra.unit(), w.algebra.unit()));
    c
}

pub fn phi_map(h: &HopfAlgebra, w: &HopfAlgebra, rho: &Matrix) -> Result<PhiMap> {
    let field = h.field();
    let (n, m) = (h.dim(), w.dim());
    if rho.rows() != n * m || rho.cols() != n {
        return Err(Error::Shape("coaction must be a (dim H · dim W) × dim H matrix".into()));
    }
    let coaction = check_coaction(h, w, rho);
    if let Some(bad) = coaction.failures().first() {
        return Err(Error::InvalidCoaction(bad.to_string()));
    }
    let id_w = Matrix::identity(field, m);
    let phi = h.counit_row().kron(&id_w).mul(rho);
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.algebra.basis_vector(i)).collect();
    let mut checks = coaction;
    checks.push(
        "Φ multiplicative",
        basis.iter().all(|x| basis.iter().all(|y| phi.mul_vec(&h.algebra.mul(x, y)) == w.algebra.mul(&phi.mul_vec(x), &phi.mul_vec(y)))),
    );
    checks.push("Φ unital", phi.mul_vec(h.algebra.unit()) == w.algebra.unit());
    checks.push("ε_W∘Φ = ε_H", w.counit_row().mul(&phi) == h.counit_row());
    checks.push("Φ comodule map", w.coproduct.mul(&phi) == phi.kron(&id_w).mul(rho));
    let rank = phi.rank();
    Ok(PhiMap { surjective: rank == m, rank, phi, checks })
}

/// `ρ(g) = g ⊗ φ(g)` for a group homomorphism `φ : G -> Q`, given as the
/// image index of each element.
pub fn group_quotient_coaction(g: &Group, q: &Group, hom: &[usize], field: Field) -> Result<Matrix> {
    let (n, m) = (g.order(), q.order());
    if hom.len() != n || hom.iter().any(|&x| x >= m) {
        return Err(Error::Shape("homomorphism must map every element".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if hom[g.mul(a, b)] != q.mul(hom[a], hom[b]) {
                return Err(Error::InvalidCoaction("map is not a group homomorphism".into()));
            }
        }
    }
    Ok(Matrix::from_fn(field, n * m, n, |r, c| if r == c * m + hom[c] { field.one() } else { field.zero() }))
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub dim_w: usize,
    pub coinvariants_equal_k: bool,
    pub beta_bijective: bool,
    pub phi_surjective: bool,
    /// `dim H / dim K`
    pub rank: usize,
    pub free: bool,
    pub dim_h_mod_k_plus_h: usize,
    pub dim_h_mod_hk_plus: usize,
    pub chain_holds: bool,
}

#[derive(Clone, Debug)]
pub struct NormalityVerdict {
    pub normality: Normality,
    pub canonical: GaloisCertificate,
    pub witness: Option<WitnessReport>,
    pub consistent: bool,
    pub checks: CheckList,
}

/// Greedily picks basis elements `h_i` with `⊕ h_i K = H`.
pub fn free_k_basis(sub: &HopfSubalgebra) -> Option<Vec<usize>> {
    let h = &sub.parent.algebra;
    let field = h.field();
    let n = h.dim();
    let k_basis = sub.sub.basis_vectors();
    let mut span = Subspace::zero(field, n);
    let mut chosen = Vec::new();
    for i in 0..n {
        let x = h.basis_vector(i);
        let block: Vec<Vec<Scalar>> = k_basis.iter().map(|k| h.mul(&x, k)).collect();
        let grown = span.sum(&Subspace::span(field, n, block));
        if grown.dim() == span.dim() + k_basis.len() {
            span = grown;
            chosen.push(i);
        }
    }
    (span.dim() == n).then_some(chosen)
}

pub fn decide_normal_via_galois(sub: &HopfSubalgebra, witness: Option<(&HopfAlgebra, &Matrix)>) -> Result<NormalityVerdict> {
    let normality = is_normal(sub)?;
    let canonical = hopf_galois_map(sub)?;
    let canonical_galois = canonical.descends && canonical.bijective;
    let mut checks = CheckList::new();
    checks.push("normal ⇔ canonical β bijective", normality.normal == canonical_galois);
    if normality.normal {
        checks.push("stated inverse of β exact", canonical.inverse_exact == Some(true));
    }
    let hopf = &sub.parent;
    let h = &hopf.algebra;
    let field = hopf.field();
    let n = hopf.dim();
    let report = match witness {
        None => None,
        Some((w, rho)) => {
            let phi = phi_map(hopf, w, rho)?;
            let m = w.dim();
            let mut embed_one = Matrix::zeros(field, n * m, n);
            for c in 0..n {
                for (j, u) in w.algebra.unit().iter().enumerate() {
                    embed_one.set(c * m + j, c, u.clone());
                }
            }
            let coinv = Subspace::kernel(&rho.sub(&embed_one));
            let coinvariants_equal_k = coinv.contains_subspace(sub.sub.subspace()) && sub.sub.subspace().contains_subspace(&coinv);
            if !coinvariants_equal_k {
                return Err(Error::Inconsistent("coinvariants of the supplied coaction differ from K".into()));
            }
            // a ⊗ a′ ↦ aa′₀ ⊗ a′₁ on H ⊗_K H
            let k_basis = sub.sub.basis_vectors();
            let right_k: Vec<Matrix> = k_basis.iter().map(|k| h.right_mul_matrix(k)).collect();
            let left_k: Vec<Matrix> = k_basis.iter().map(|k| h.left_mul_matrix(k)).collect();
            let dom = balanced_tensor(&right_k, &left_k, n, n, field);
            let mut cols = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let r = rho.column(b);
                    cols.push(sweedler(m, field, &r, n * m, |p, q| vector::tensor(h.basis_product(a, p), &w.algebra.basis_vector(q))));
                }
            }
            let beta = Matrix::from_columns(field, n * m, &cols).mul(dom.section());
            let beta_bijective = dom.dim() == n * m && beta.rank() == dom.dim();
            let rank = n / sub.sub.dim();
            let free = free_k_basis(sub).is_some_and(|b| b.len() == rank) && n.is_multiple_of(sub.sub.dim());
            let dim_h_mod_k_plus_h = quotient_coalgebra(sub, QuotientSide::ByRightIdeal)?.dim();
            let dim_h_mod_hk_plus = quotient_coalgebra(sub, QuotientSide::ByLeftIdeal)?.dim();
            let chain_holds = free && m == rank && dim_h_mod_k_plus_h == rank && dim_h_mod_hk_plus == rank;
            checks.extend_prefixed("witness", phi.checks.clone());
            checks.push("witness coinvariants = K", coinvariants_equal_k);
            if beta_bijective {
                checks.push("witness Galois ⇒ normal", normality.normal);
                checks.push("dim W = dim H/K⁺H = dim H/HK⁺ = rank of H over K", chain_holds);
            }
            Some(WitnessReport {
                dim_w: m,
                coinvariants_equal_k,
                beta_bijective,
                phi_surjective: phi.surjective,
                rank,
                free,
                dim_h_mod_k_plus_h,
                dim_h_mod_hk_plus,
                chain_holds,
            })
        }
    };
    let consistent = checks.all_passed();
    Ok(NormalityVerdict { normality, canonical, witness: report, consistent, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_sub(elements: &[&str]) -> HopfSubalgebra {
        HopfSubalgebra::from_subgroup(&Group::s3(), Field::Rational, elements).unwrap()
    }

    #[test]
    fn group_algebras_are_hopf() {
        for g in [Group::cyclic(2), Group::cyclic(3), Group::s3()] {
            assert!(HopfAlgebra::group_algebra(&g, Field::Rational).check_axioms().all_passed());
        }
    }

    #[test]
    fn a3_is_normal_in_s3() {
        let sub = s3_sub(&["1", "(123)", "(132)"]);
        let v = is_normal(&sub).unwrap();
        assert!(v.normal);
        assert_eq!((v.dim_hk_plus, v.dim_k_plus_h), (4, 4));
        let q = quotient_coalgebra(&sub, QuotientSide::ByLeftIdeal).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.hopf.is_some());
        let g = hopf_galois_map(&sub).unwrap();
        assert_eq!((g.dim_domain, g.dim_codomain), (12, 12));
        assert!(g.bijective);
        assert_eq!(g.inverse_exact, Some(true));
    }

    #[test]
    fn transposition_subgroup_is_not_normal() {
        let sub = s3_sub(&["1", "(12)"]);
        let v = is_normal(&sub).unwrap();
        assert!(!v.normal);
        assert_eq!(quotient_coalgebra(&sub, QuotientSide::ByLeftIdeal).unwrap().dim(), 3);
        assert_eq!(quotient_coalgebra(&sub, QuotientSide::ByTwoSidedIdeal).unwrap().dim(), 1);
        let g = hopf_galois_map(&sub).unwrap();
        assert_eq!((g.dim_domain, g.dim_codomain), (18, 18));
        assert!(!(g.descends && g.bijective));
        let verdict = decide_normal_via_galois(&sub, None).unwrap();
        assert!(verdict.consistent);
    }

    #[test]
    fn trivial_and_full_subalgebras() {
        let one = s3_sub(&["1"]);
        assert!(is_normal(&one).unwrap().normal);
        let g = hopf_galois_map(&one).unwrap();
        assert!(g.bijective);
        let all = s3_sub(&["1", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        assert!(is_normal(&all).unwrap().normal);
        assert_eq!(quotient_coalgebra(&all, QuotientSide::ByLeftIdeal).unwrap().dim(), 1);
        let k = HopfAlgebra::group_algebra(&Group::cyclic(1), Field::Rational);
        let rho = group_quotient_coaction(&Group::s3(), &Group::cyclic(1), &[0; 6], Field::Rational).unwrap();
        let v = decide_normal_via_galois(&all, Some((&k, &rho))).unwrap();
        assert!(v.consistent);
        assert!(v.witness.unwrap().beta_bijective);
    }

    #[test]
    fn galois_witness_for_a3() {
        let s3 = Group::s3();
        let c2 = Group::cyclic(2);
        let sign: Vec<usize> = s3.labels().iter().map(|l| usize::from(l.len() == 4)).collect();
        let rho = group_quotient_coaction(&s3, &c2, &sign, Field::Rational).unwrap();
        let w = HopfAlgebra::group_algebra(&c2, Field::Rational);
        let sub = s3_sub(&["1", "(123)", "(132)"]);
        let phi = phi_map(&sub.parent, &w, &rho).unwrap();
        assert!(phi.checks.all_passed());
        assert_eq!(phi.rank, 2);
        let v = decide_normal_via_galois(&sub, Some((&w, &rho))).unwrap();
        assert!(v.consistent, "{:?}", v.checks.failures());
        let wr = v.witness.unwrap();
        assert!(wr.beta_bijective && wr.chain_holds);
        assert_eq!(wr.rank, 2);
    }

    #[test]
    fn phi_of_the_coproduct_is_identity() {
        let h = HopfAlgebra::group_algebra(&Group::s3(), Field::Rational);
        let phi = phi_map(&h, &h, &h.coproduct).unwrap();
        assert!(phi.phi.is_identity());
    }
}
