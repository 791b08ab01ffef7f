//! The antipode τ on T^op_cop when the base is Kanzaki separable, and the
//! failure of the separability search for M₂(𝔽₂).

use depth2::algebra::{Extension, FdAlgebra, Group};
use depth2::bialgebroid::build_t;
use depth2::depth_two::{find_left_quasibase, find_right_quasibase, ExtensionData};
use depth2::hopf_algebroid::{build_t_op_cop, find_sym_sep_element};
use depth2::Field;

fn main() -> depth2::Result<()> {
    let g = Group::s3();
    let a = FdAlgebra::group_algebra(&g, Field::Rational);
    let gens: Vec<_> = ["1", "(123)", "(132)"].iter().map(|l| a.basis_vector(g.index_of(l).unwrap())).collect();
    let data = ExtensionData::new(Extension::new(a.clone(), &gens)?);
    let (l, r) = (find_left_quasibase(&data).unwrap(), find_right_quasibase(&data).unwrap());
    let t = build_t(&data, &l, &r)?;
    let sep = find_sym_sep_element(data.ext.sub_algebra()).expect("ℚ[C3] is Kanzaki separable");
    println!("e = {}", depth2::algebra::format_tensor(data.ext.sub_algebra().labels(), data.ext.sub_algebra().labels(), &sep.e));
    let h = build_t_op_cop(&data, &t, &r, &sep)?;
    println!("dim T = {}, dim (A⊗_B A⊗_B A)^B = {}", data.t.dim(), h.dim_triple_central);
    for c in h.checks.items().iter().filter(|c| !c.name.starts_with("T^op_cop")) {
        println!("  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    let f2 = FdAlgebra::matrix_algebra(2, Field::prime(2)?);
    println!("M2(F2) symmetric separability element: {:?}", find_sym_sep_element(&f2).map(|_| "found"));
    Ok(())
}
