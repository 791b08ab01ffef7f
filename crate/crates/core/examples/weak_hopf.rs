//! Groupoid algebras M_n as weak Hopf algebras.

use depth2::weak_hopf::WeakHopfAlgebra;
use depth2::Field;

fn main() -> depth2::Result<()> {
    for (n, field) in [(1, Field::Rational), (2, Field::Rational), (3, Field::Rational), (2, Field::prime(2)?)] {
        let h = WeakHopfAlgebra::groupoid(n, field);
        let wb = &h.bialgebra;
        let checks = h.check();
        println!(
            "M{n} over {field}: ε(1) = {}, dim H^L = {}, {} identities {}",
            wb.epsilon(wb.algebra.unit()),
            wb.h_l().dim(),
            checks.items().len(),
            if checks.all_passed() { "hold" } else { "FAIL" }
        );
        if n == 2 {
            let pl = wb.pi_l();
            for (i, label) in wb.algebra.labels().iter().enumerate() {
                println!("  Π^L({label}) = {}", wb.algebra.format_element(&pl.column(i)));
            }
        }
    }
    Ok(())
}
