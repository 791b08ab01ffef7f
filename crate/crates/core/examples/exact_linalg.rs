//! Row reduction, kernels and quotient spaces over ℚ and 𝔽_p.

use depth2::linalg::{Matrix, QuotientSpace, Subspace};
use depth2::Field;

fn main() -> depth2::Result<()> {
    for field in [Field::Rational, Field::prime(3)?] {
        let m = Matrix::from_i64(field, 3, 4, &[1, 2, 0, 1, 2, 4, 1, 0, 3, 6, 1, 1]);
        let (r, pivots) = m.rref();
        println!("over {field}: rank {} pivots {pivots:?}\n{r}", m.rank());
        for v in m.kernel() {
            let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
            println!("  kernel vector [{}]", shown.join(", "));
        }
        let q = QuotientSpace::new(Subspace::image(&m.transpose()));
        println!("  k^4 / row space has dim {}\n", q.dim());
    }
    Ok(())
}
