//! Normality of Hopf subalgebras of ℚ[S₃], decided three ways.

use depth2::algebra::Group;
use depth2::hopf::{decide_normal_via_galois, group_quotient_coaction, HopfAlgebra, HopfSubalgebra};
use depth2::Field;

fn main() -> depth2::Result<()> {
    let (g, q) = (Group::s3(), Field::Rational);
    let c2 = Group::cyclic(2);
    let sign: Vec<usize> = g.labels().iter().map(|l| usize::from(l.len() == 4)).collect();
    let w = HopfAlgebra::group_algebra(&c2, q);
    let rho = group_quotient_coaction(&g, &c2, &sign, q)?;
    for k in [&["1", "(123)", "(132)"][..], &["1", "(12)"][..]] {
        let sub = HopfSubalgebra::from_subgroup(&g, q, k)?;
        let witness = (k.len() == 3).then_some((&w, &rho));
        let v = decide_normal_via_galois(&sub, witness)?;
        let n = &v.normality;
        println!("K = span{k:?}");
        println!("  dim HK⁺ = {}, dim K⁺H = {}, equal: {}", n.dim_hk_plus, n.dim_k_plus_h, n.ideals_equal);
        println!("  canonical β: {} -> {}, bijective {}", v.canonical.dim_domain, v.canonical.dim_codomain, v.canonical.descends && v.canonical.bijective);
        if let Some(wr) = &v.witness {
            println!("  sign witness: Φ rank {}, dimension chain {}", wr.rank, wr.chain_holds);
        }
        println!("  normal: {}, consistent: {}\n", n.normal, v.consistent);
    }
    Ok(())
}
