//! Acceptance criteria, one PASS/FAIL line each.

use std::process::Command as Process;

use depth2::algebra::{Extension, Group};
use depth2::bialgebroid::{build_s, build_t, coaction_on_e, endo_galois};
use depth2::cli::{run_command, Command};
use depth2::depth_two::{analyze, find_left_quasibase, find_right_quasibase, ExtensionData};
use depth2::hopf::{decide_normal_via_galois, HopfSubalgebra};
use depth2::hopf_algebroid::{build_t_op_cop, find_sym_sep_element};
use depth2::instance::{catalog_instance, catalog_names, Instance};
use depth2::linalg::{vector, Subspace};
use depth2::report::Format;
use depth2::weak_hopf::{comodule_check, galois_maps, integral_dual_bases, reconstruct_antipode, self_galois, WeakHopfAlgebra};
use depth2::{Field, Result};

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn lift<T>(r: Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

// Coset counting, independent of the linear algebra: `dim HK⁺ = |G| - |G/K|`,
// `dim K⁺H = |G| - |K\G|`, `dim H⊗_K H = |G|·|K\G|`, `dim H⊗H/HK⁺ = |G|·|G/K|`.
fn coset_counts(g: &Group, k: &[&str]) -> (usize, usize) {
    let ks: Vec<usize> = k.iter().map(|l| g.index_of(l).unwrap()).collect();
    let mut left: Vec<Vec<usize>> = Vec::new();
    let mut right: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        let mut l: Vec<usize> = ks.iter().map(|&y| g.mul(x, y)).collect();
        let mut r: Vec<usize> = ks.iter().map(|&y| g.mul(y, x)).collect();
        l.sort();
        r.sort();
        if !left.contains(&l) {
            left.push(l);
        }
        if !right.contains(&r) {
            right.push(r);
        }
    }
    (left.len(), right.len())
}

/// `(M_n ⊗ M_n)Δ(1)` is spanned by `e_ij ⊗ e_kl` with `j = l`.
fn groupoid_corner_dim(n: usize) -> usize {
    let mut count = 0;
    for _i in 0..n {
        for j in 0..n {
            for _k in 0..n {
                for l in 0..n {
                    if j == l {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn weak_hopf_cases() -> Vec<(String, WeakHopfAlgebra)> {
    let q = Field::Rational;
    let mut v: Vec<(String, WeakHopfAlgebra)> = (1..=3).map(|n| (format!("M{n}(Q)"), WeakHopfAlgebra::groupoid(n, q))).collect();
    for (name, g) in [("Q[C2]", Group::cyclic(2)), ("Q[C3]", Group::cyclic(3)), ("Q[S3]", Group::s3())] {
        v.push((name.into(), WeakHopfAlgebra::group(&g, q)));
    }
    v
}

fn weak_hopf_suite() -> Outcome {
    for (name, h) in weak_hopf_cases() {
        let c = h.check();
        ensure(c.all_passed(), format!("{name}: {:?}", c.failures()))?;
    }
    for n in 1..=3 {
        let h = WeakHopfAlgebra::groupoid(n, Field::Rational);
        let wb = &h.bialgebra;
        let pl = wb.pi_l();
        for i in 0..n {
            for j in 0..n {
                ensure(pl.column(i * n + j) == vector::unit(Field::Rational, n * n, i * n + i), format!("Π^L(e{}{}) ≠ e{}{}", i + 1, j + 1, i + 1, i + 1))?;
            }
        }
        ensure(wb.epsilon(wb.algebra.unit()) == Field::Rational.from_i64(n as i64), format!("ε(1) ≠ {n} on M{n}"))?;
    }
    let f2 = WeakHopfAlgebra::groupoid(2, Field::prime(2).unwrap());
    ensure(f2.bialgebra.epsilon(f2.bialgebra.algebra.unit()).is_zero(), "ε(1) ≠ 0 on M2(F2)")?;
    Ok("M1..M3, Q[C2], Q[C3], Q[S3]; Π^L(e_ij) = e_ii; ε(1) = n; ε(1) = 0 over F2".into())
}

fn self_galois_suite() -> Outcome {
    let mut dims = Vec::new();
    for n in [2, 3] {
        let q = Field::Rational;
        let h = WeakHopfAlgebra::groupoid(n, q);
        let sg = lift(self_galois(&h), "self-Galois")?;
        ensure(sg.checks.all_passed(), format!("M{n}: {:?}", sg.checks.failures()))?;
        let diag = Subspace::span(q, n * n, (0..n).map(|i| vector::unit(q, n * n, i * n + i)).collect::<Vec<_>>());
        ensure(sg.comodule.coinvariants.subspace() == &diag, format!("M{n}: coinvariants are not the diagonal"))?;
        let core = &sg.galois.core;
        ensure(core.bijective, format!("M{n}: β not bijective"))?;
        let expected = groupoid_corner_dim(n);
        ensure(core.dim() == expected && core.dim_corner == expected, format!("M{n}: dims {} / {} vs {expected}", core.dim(), core.dim_corner))?;
        ensure(sg.checks.get("β′ = τ∘(S⊗S)∘η̄∘q") == Some(true), "factorisation square missing")?;
        dims.push(format!("n={n}: {expected}"));
    }
    Ok(format!("coinvariants = diagonal, β bijective, dim = corner ({})", dims.join(", ")))
}

struct GaloisCase {
    name: &'static str,
    inst: Instance,
}

fn galois_cases() -> std::result::Result<Vec<GaloisCase>, String> {
    let mut out = Vec::new();
    for name in catalog_names() {
        let inst = lift(catalog_instance(name), name)?;
        if inst.coaction.is_some() {
            out.push(GaloisCase { name, inst });
        }
    }
    Ok(out)
}

fn hopf_of(inst: &Instance) -> std::result::Result<WeakHopfAlgebra, String> {
    let block = inst.coalgebra_carrier();
    let c = block.coalgebra.as_ref().ok_or("no coalgebra")?;
    let wb = lift(depth2::weak_hopf::WeakBialgebra::new(block.algebra.clone(), c.coproduct.clone(), c.counit.clone()), "weak bialgebra")?;
    lift(WeakHopfAlgebra::new(wb, c.antipode.clone().ok_or("no antipode")?), "weak Hopf")
}

fn galois_map_suite() -> Outcome {
    let mut names = Vec::new();
    for case in galois_cases()? {
        let h = hopf_of(&case.inst)?;
        let comod = lift(comodule_check(case.inst.algebra.algebra.clone(), h.bialgebra.clone(), case.inst.coaction.clone().unwrap()), case.name)?;
        let g = lift(galois_maps(&comod, &h), case.name)?;
        if !g.core.bijective {
            continue;
        }
        for key in ["β′ = η∘β", "η∘p = η", "η̄∘p̄ = η̄", "η̄∘η = p", "η∘η̄ = p̄"] {
            ensure(g.checks.get(key) == Some(true), format!("{}: {key}", case.name))?;
        }
        ensure(g.checks.all_passed(), format!("{}: {:?}", case.name, g.checks.failures()))?;
        names.push(case.name);
    }
    ensure(names.len() >= 3, "too few Galois instances")?;
    Ok(format!("β′ = η∘β, projection identities, rank transfer on {}", names.join(", ")))
}

fn integral_suite() -> Outcome {
    let mut names = Vec::new();
    for case in galois_cases()? {
        let h = hopf_of(&case.inst)?;
        let comod = lift(comodule_check(case.inst.algebra.algebra.clone(), h.bialgebra.clone(), case.inst.coaction.clone().unwrap()), case.name)?;
        let g = lift(galois_maps(&comod, &h), case.name)?;
        if !g.core.bijective {
            continue;
        }
        let d = lift(integral_dual_bases(&comod, &h, &g.core), case.name)?;
        ensure(d.checks.all_passed(), format!("{}: {:?}", case.name, d.checks.failures()))?;
        let a = &comod.algebra;
        let all_recovered = (0..a.dim()).all(|x| {
            let ax = a.basis_vector(x);
            let mut sum = vector::zeros(a.field(), a.dim());
            for (ai, phi) in d.a.iter().zip(&d.phi) {
                vector::axpy(&mut sum, &a.field().one(), &a.mul(ai, &phi.mul_vec(&ax)));
            }
            sum == ax
        });
        ensure(all_recovered, format!("{}: Σ a_i φ_i(a) ≠ a", case.name))?;
        ensure(g.core.rank_beta_prime == g.core.dim(), format!("{}: ker β′ ≠ 0", case.name))?;
        names.push(case.name);
    }
    ensure(!names.is_empty(), "no Galois instances")?;
    Ok(format!("integral, dual bases, ker β′ = 0 on {}", names.join(", ")))
}

fn reconstruction_suite() -> Outcome {
    let q = Field::Rational;
    let cases = [
        ("M2(Q)", WeakHopfAlgebra::groupoid(2, q)),
        ("M3(Q)", WeakHopfAlgebra::groupoid(3, q)),
        ("Q[C2]", WeakHopfAlgebra::group(&Group::cyclic(2), q)),
        ("Q[S3]", WeakHopfAlgebra::group(&Group::s3(), q)),
    ];
    for (name, h) in cases {
        let r = lift(reconstruct_antipode(&h.bialgebra, Some(&h.antipode)), name)?;
        ensure(r.matches_reference == Some(true), format!("{name}: antipode differs"))?;
        ensure(r.checks.all_passed(), format!("{name}: {:?}", r.checks.failures()))?;
    }
    Ok("S rebuilt entrywise for M2, M3, Q[C2], Q[S3]; antipode axioms and identities hold".into())
}

fn normality_suite() -> Outcome {
    let g = Group::s3();
    let q = Field::Rational;
    let mut summary = Vec::new();
    for (k, expect_normal) in [(&["1", "(123)", "(132)"][..], true), (&["1", "(12)"][..], false)] {
        let sub = lift(HopfSubalgebra::from_subgroup(&g, q, k), "subgroup")?;
        let verdict = lift(decide_normal_via_galois(&sub, None), "normality")?;
        let a = depth2::algebra::FdAlgebra::group_algebra(&g, q);
        let gens: Vec<_> = k.iter().map(|l| a.basis_vector(g.index_of(l).unwrap())).collect();
        let d2 = analyze(&ExtensionData::new(lift(Extension::new(a, &gens), "extension")?));
        let (left, right) = coset_counts(&g, k);
        let n = &verdict.normality;
        let c = &verdict.canonical;
        ensure(n.dim_hk_plus == g.order() - left && n.dim_k_plus_h == g.order() - right, format!("{k:?}: ideal dims {} {}", n.dim_hk_plus, n.dim_k_plus_h))?;
        ensure(c.dim_domain == g.order() * right && c.dim_codomain == g.order() * left, format!("{k:?}: Galois dims {} {}", c.dim_domain, c.dim_codomain))?;
        let d2_holds = d2.left.is_some() && d2.right.is_some();
        let galois = c.descends && c.bijective;
        ensure(d2_holds == expect_normal && n.normal == expect_normal && n.ideals_equal == expect_normal && galois == expect_normal, format!("{k:?}: verdict mismatch"))?;
        ensure(verdict.consistent, format!("{k:?}: inconsistent"))?;
        summary.push(format!("{}: HK⁺ {} K⁺H {} β {}→{}", if expect_normal { "A3" } else { "(12)" }, n.dim_hk_plus, n.dim_k_plus_h, c.dim_domain, c.dim_codomain));
    }
    Ok(summary.join("; "))
}

fn endo_galois_suite() -> Outcome {
    for name in ["s3-over-a3", "m2-diagonal"] {
        let inst = lift(catalog_instance(name), name)?;
        let data = ExtensionData::new(lift(Extension::new(inst.algebra.algebra.clone(), inst.sub.as_ref().unwrap()), name)?);
        let l = find_left_quasibase(&data).ok_or("no left quasibase")?;
        let r = find_right_quasibase(&data).ok_or("no right quasibase")?;
        let s = lift(build_s(&data, &l, &r), name)?;
        let ce = lift(coaction_on_e(&data, &s, &r), name)?;
        ensure(ce.coinvariants == ce.right_multiplications, format!("{name}: coinvariants ≠ ρ(A)"))?;
        ensure(ce.checks.all_passed(), format!("{name}: {:?}", ce.checks.failures()))?;
        let g = lift(endo_galois(&data, &s, &ce, &r), name)?;
        ensure(g.bijective, format!("{name}: β not bijective"))?;
        ensure(g.checks.all_passed(), format!("{name}: {:?}", g.checks.failures()))?;
    }
    Ok("S3/A3 and M2/diagonal: coinvariants = ρ(A), β bijective, factorisation composes".into())
}

fn hopf_algebroid_suite() -> Outcome {
    for name in ["s3-over-a3", "m2-diagonal"] {
        let inst = lift(catalog_instance(name), name)?;
        let data = ExtensionData::new(lift(Extension::new(inst.algebra.algebra.clone(), inst.sub.as_ref().unwrap()), name)?);
        let l = find_left_quasibase(&data).ok_or("no left quasibase")?;
        let r = find_right_quasibase(&data).ok_or("no right quasibase")?;
        let t = lift(build_t(&data, &l, &r), name)?;
        let sep = find_sym_sep_element(data.ext.sub_algebra()).ok_or(format!("{name}: no symmetric separability element"))?;
        let h = lift(build_t_op_cop(&data, &t, &r, &sep), name)?;
        ensure(h.checks.all_passed(), format!("{name}: {:?}", h.checks.failures()))?;
        for key in ["τ² = id", "τ anti-multiplicative"] {
            ensure(h.checks.get(key) == Some(true), format!("{name}: {key}"))?;
        }
    }
    let f2 = depth2::algebra::FdAlgebra::matrix_algebra(2, Field::prime(2).unwrap());
    ensure(find_sym_sep_element(&f2).is_none(), "M2(F2) has a symmetric separability element")?;
    Ok("B = Q[A3] ≅ Q[C3] and diagonal of M2(Q) pass; M2(F2) has none".into())
}

fn determinism_suite() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_depth2");
    for name in catalog_names() {
        let inst = lift(catalog_instance(name), name)?;
        for format in [Format::Text, Format::Structured] {
            let a = lift(run_command(Command::All, &inst), name)?.render(format);
            let b = lift(run_command(Command::All, &inst), name)?.render(format);
            ensure(a == b, format!("{name}: in-process reports differ"))?;
        }
        for format in ["text", "structured"] {
            let run = || Process::new(bin).args(["all", "--catalog", name, "--format", format]).output().map_err(|e| e.to_string());
            let (x, y) = (run()?, run()?);
            ensure(x.stdout == y.stdout && x.status.code() == y.status.code(), format!("{name}: binary output differs"))?;
        }
    }
    Ok(format!("{} catalog instances, text and structured, library and binary", catalog_names().len()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("weak Hopf axiom suite", weak_hopf_suite),
        ("self-Galois groupoid algebras", self_galois_suite),
        ("Galois map identities", galois_map_suite),
        ("integrals and dual bases", integral_suite),
        ("antipode reconstruction", reconstruction_suite),
        ("depth two ⇔ normality on group algebras", normality_suite),
        ("endomorphism-ring Galois", endo_galois_suite),
        ("Hopf algebroid", hopf_algebroid_suite),
        ("determinism", determinism_suite),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
