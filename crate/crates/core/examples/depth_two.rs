//! Quasibases for ℚ[S₃] over ℚ[A₃], and their absence over ℚ[⟨(12)⟩].

use depth2::algebra::{Extension, FdAlgebra, Group};
use depth2::depth_two::{analyze, ExtensionData};
use depth2::Field;

fn main() -> depth2::Result<()> {
    let g = Group::s3();
    let a = FdAlgebra::group_algebra(&g, Field::Rational);
    for sub in [&["1", "(123)", "(132)"][..], &["1", "(12)"][..]] {
        let gens: Vec<_> = sub.iter().map(|l| a.basis_vector(g.index_of(l).unwrap())).collect();
        let data = ExtensionData::new(Extension::new(a.clone(), &gens)?);
        let rep = analyze(&data);
        println!("ℚ[S3] over span{sub:?}");
        println!("  dim R = {}, dim S = {}, dim T = {}", rep.dim_r, rep.dim_s, rep.dim_t);
        match (&rep.left, &rep.right) {
            (Some(l), Some(r)) => {
                println!("  depth two: left quasibase of size {}, right of size {}", l.len(), r.len());
                for (i, t) in l.t.iter().enumerate() {
                    println!("    t_{i} = {}", depth2::algebra::format_tensor(a.labels(), a.labels(), &data.t_lift(t)));
                }
            }
            _ => println!("  not depth two"),
        }
        println!("  balanced: {}, A^S = B: {}\n", rep.balanced, rep.invariants_equal_b);
    }
    Ok(())
}
