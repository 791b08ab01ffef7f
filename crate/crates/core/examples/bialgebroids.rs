//! The bialgebroids S and T of M₂(ℚ) over its diagonal, their pairings,
//! coactions and the Galois map on End_B A.

use depth2::algebra::{Extension, FdAlgebra};
use depth2::bialgebroid::{build_s, build_t, coaction_on_a, coaction_on_e, endo_galois, pairings};
use depth2::depth_two::{find_left_quasibase, find_right_quasibase, ExtensionData};
use depth2::Field;

fn main() -> depth2::Result<()> {
    let a = FdAlgebra::matrix_algebra(2, Field::Rational);
    let data = ExtensionData::new(Extension::new(a.clone(), &[a.basis_vector(0), a.basis_vector(3)])?);
    let (l, r) = (find_left_quasibase(&data).unwrap(), find_right_quasibase(&data).unwrap());
    let s = build_s(&data, &l, &r)?;
    let t = build_t(&data, &l, &r)?;
    println!("S: dim {} over R of dim {}", data.s.dim(), data.r.dim());
    println!("  axioms: {}", if s.bialgebroid.check_axioms().all_passed() { "hold" } else { "FAIL" });
    println!("T: dim {}", data.t.dim());
    println!("  axioms: {}", if t.bialgebroid.check_axioms().all_passed() { "hold" } else { "FAIL" });
    let p = pairings(&data);
    println!("pairings nondegenerate: ⟨|⟩ {}, [|] {}", p.angle_nondegenerate(), p.bracket_nondegenerate());
    let ca = coaction_on_a(&data, &t, &r);
    println!("A^coT has dim {} (B has dim {})", ca.coinvariants.dim(), data.ext.sub().dim());
    let ce = coaction_on_e(&data, &s, &r)?;
    println!("End_B A coinvariants = ρ(A): {}", ce.coinvariants == ce.right_multiplications);
    let g = endo_galois(&data, &s, &ce, &r)?;
    println!("β: {} -> {}, bijective {}", g.dim_domain, g.dim_codomain, g.bijective);
    for c in g.checks.items() {
        println!("  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    Ok(())
}
