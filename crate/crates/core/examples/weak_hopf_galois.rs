//! The Galois maps β, β′ for ℚ[S₃] graded by the sign character, and for
//! M₂ coacting on itself.

use depth2::algebra::{FdAlgebra, Group};
use depth2::hopf::group_quotient_coaction;
use depth2::weak_hopf::{comodule_check, frobenius_probe, galois_maps, integral_dual_bases, self_galois, WeakHopfAlgebra};
use depth2::Field;

fn main() -> depth2::Result<()> {
    let (g, c2, q) = (Group::s3(), Group::cyclic(2), Field::Rational);
    let sign: Vec<usize> = g.labels().iter().map(|l| usize::from(l.len() == 4)).collect();
    let h = WeakHopfAlgebra::group(&c2, q);
    let rho = group_quotient_coaction(&g, &c2, &sign, q)?;
    let comod = comodule_check(FdAlgebra::group_algebra(&g, q), h.bialgebra.clone(), rho)?;
    let data = galois_maps(&comod, &h)?;
    println!("coinvariants: dim {}", comod.coinvariants.dim());
    println!("β: rank {} of {}, bijective {}", data.core.rank_beta, data.core.dim(), data.core.bijective);
    for c in data.checks.items() {
        println!("  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    let duals = integral_dual_bases(&comod, &h, &data.core)?;
    println!("integral t = {}", h.algebra().format_element(&duals.integral));
    let probe = frobenius_probe(&comod, &duals);
    println!("Frobenius probe: lands in B {}, bimodule {}, dual bases {}", probe.lands_in_b, probe.bimodule_map, probe.dual_bases_exist);

    let m2 = WeakHopfAlgebra::groupoid(2, q);
    let sg = self_galois(&m2)?;
    println!("\nM2 over its diagonal: dim H⊗_{{H^L}}H = {}, corner = {}", sg.galois.core.dim(), sg.galois.core.dim_corner);
    println!("  separability element S(1₁)⊗1₂ = {}", depth2::algebra::format_tensor(m2.algebra().labels(), m2.algebra().labels(), &sg.separability));
    println!("  all checks: {}", sg.checks.all_passed());
    Ok(())
}
