//! Recovering the antipode from the coproduct alone.

use depth2::algebra::Group;
use depth2::report::matrix_hash;
use depth2::weak_hopf::{reconstruct_antipode, WeakHopfAlgebra};
use depth2::Field;

fn main() -> depth2::Result<()> {
    let q = Field::Rational;
    for (name, h) in [
        ("M2", WeakHopfAlgebra::groupoid(2, q)),
        ("M3", WeakHopfAlgebra::groupoid(3, q)),
        ("Q[C2]", WeakHopfAlgebra::group(&Group::cyclic(2), q)),
        ("Q[S3]", WeakHopfAlgebra::group(&Group::s3(), q)),
    ] {
        let r = reconstruct_antipode(&h.bialgebra, Some(&h.antipode))?;
        println!("{name}: S hash {}, matches {:?}, {} checks pass: {}", matrix_hash(&r.antipode), r.matches_reference, r.checks.items().len(), r.checks.all_passed());
    }
    Ok(())
}
