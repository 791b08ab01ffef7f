use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::matrix::Matrix;
use crate::linalg::subspace::{SpanBuilder, Subspace};

/// `k^n / relations`, with a projection onto quotient coordinates and a
/// section picking the free (non-pivot) coordinates as representatives.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient_dim: usize,
    relations: Subspace,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> QuotientSpace {
        let field = relations.field();
        let n = relations.ambient_dim();
        let mut is_pivot = vec![false; n];
        for &p in relations.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut free_index = vec![usize::MAX; n];
        for (i, &c) in free.iter().enumerate() {
            free_index[c] = i;
        }
        let dim = free.len();
        let mut projection = Matrix::zeros(field, dim, n);
        let mut section = Matrix::zeros(field, n, dim);
        for (i, &c) in free.iter().enumerate() {
            projection.set(i, c, field.one());
            section.set(c, i, field.one());
        }
        // e_p for a pivot p is congruent to e_p - row = -(free part of row).
        for (row, &p) in relations.basis().iter().zip(relations.pivots()) {
            for (c, x) in row.iter().enumerate() {
                if c != p && !x.is_zero() {
                    projection.set(free_index[c], p, -x);
                }
            }
        }
        QuotientSpace { ambient_dim: n, relations, projection, section }
    }

    /// The quotient by the zero subspace.
    pub fn trivial(field: Field, n: usize) -> QuotientSpace {
        QuotientSpace::new(Subspace::zero(field, n))
    }

    /// Quotient by the span of the column spaces of `generators`.
    pub fn by_images(field: Field, n: usize, generators: &[Matrix]) -> QuotientSpace {
        let mut builder = SpanBuilder::new(field, n);
        'outer: for g in generators {
            assert_eq!(g.rows(), n, "relation generator shape");
            for c in 0..g.cols() {
                let col = g.column(c);
                if col.iter().all(Scalar::is_zero) {
                    continue;
                }
                builder.insert(col);
                if builder.is_full() {
                    break 'outer;
                }
            }
        }
        QuotientSpace::new(builder.finish())
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(q)
    }

    /// Checks `projection . section = id` and that the projection kills
    /// every relation.
    pub fn check_invariants(&self) -> bool {
        self.projection.mul(&self.section).is_identity()
            && self.relations.basis().iter().all(|r| self.project(r).iter().all(Scalar::is_zero))
    }
}

/// Pushes an ambient-level linear map `src.ambient -> dst.ambient` down to
/// `src -> dst`, failing unless it maps relations into relations.
pub fn descend(map: &Matrix, src: &QuotientSpace, dst: &QuotientSpace, what: &str) -> Result<Matrix> {
    let composed = dst.projection().mul(map);
    descend_projected(&composed, src, what)
}

/// Like [`descend`] for a map already landing in quotient coordinates.
pub fn descend_projected(map: &Matrix, src: &QuotientSpace, what: &str) -> Result<Matrix> {
    assert_eq!(map.cols(), src.ambient_dim(), "descend: source shape for {what}");
    for r in src.relations().basis() {
        if !map.mul_vec(r).iter().all(Scalar::is_zero) {
            return Err(Error::DoesNotDescend(what.to_string()));
        }
    }
    Ok(map.mul(src.section()))
}

/// `M ⊗_R N` for a right action of generators `g` on `M` and a left action on
/// `N`: the quotient of `M ⊗ N` by the images of `ρ_M(g) ⊗ 1 - 1 ⊗ λ_N(g)`.
pub fn balanced_tensor(right_on_first: &[Matrix], left_on_second: &[Matrix], m_dim: usize, n_dim: usize, field: Field) -> QuotientSpace {
    assert_eq!(right_on_first.len(), left_on_second.len(), "one action matrix per generator on each side");
    let id_m = Matrix::identity(field, m_dim);
    let id_n = Matrix::identity(field, n_dim);
    let generators: Vec<Matrix> = right_on_first
        .iter()
        .zip(left_on_second)
        .map(|(r, l)| r.kron(&id_n).sub(&id_m.kron(l)))
        .collect();
    QuotientSpace::by_images(field, m_dim * n_dim, &generators)
}

/// Space of linear maps `F : V -> W` with `F ∘ act_V(g) = act_W(g) ∘ F` for
/// every generator, as a subspace of row-major vectorised `dim W x dim V`
/// matrices.
pub fn intertwiners(on_domain: &[Matrix], on_codomain: &[Matrix], v_dim: usize, w_dim: usize, field: Field) -> Subspace {
    assert_eq!(on_domain.len(), on_codomain.len());
    if on_domain.is_empty() {
        return Subspace::full(field, v_dim * w_dim);
    }
    let id_v = Matrix::identity(field, v_dim);
    let id_w = Matrix::identity(field, w_dim);
    // vec(F X) = (I_w ⊗ X^T) vec(F),  vec(Y F) = (Y ⊗ I_v) vec(F)
    let blocks: Vec<Matrix> = on_domain
        .iter()
        .zip(on_codomain)
        .map(|(x, y)| id_w.kron(&x.transpose()).sub(&y.kron(&id_v)))
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Subspace::kernel(&Matrix::vstack(&refs))
}

/// Unflattens a row-major vectorised `rows x cols` matrix.
pub fn unvec(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    Matrix::new(field, rows, cols, v.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn trivial_quotient_is_identity() {
        let qs = QuotientSpace::trivial(q(), 3);
        assert_eq!(qs.dim(), 3);
        assert!(qs.projection().is_identity());
        assert!(qs.section().is_identity());
    }

    #[test]
    fn full_quotient_is_zero() {
        let qs = QuotientSpace::new(Subspace::full(q(), 3));
        assert_eq!(qs.dim(), 0);
        assert!(qs.check_invariants());
    }

    #[test]
    fn rank_one_relations() {
        let rel = Subspace::span(q(), 4, vec![vec![q().from_i64(1), q().from_i64(2), q().zero(), q().from_i64(-1)]]);
        let qs = QuotientSpace::new(rel);
        assert_eq!(qs.dim(), 3);
        assert!(qs.check_invariants());
        // e_0 ≡ -2 e_1 + e_3
        let p = qs.project(&vector::unit(q(), 4, 0));
        assert_eq!(p, vec![q().from_i64(-2), q().zero(), q().from_i64(1)]);
    }

    #[test]
    fn intertwiners_of_scalar_action() {
        // Maps commuting with diag(1, 2) are diagonal.
        let d = Matrix::from_i64(q(), 2, 2, &[1, 0, 0, 2]);
        let s = intertwiners(std::slice::from_ref(&d), std::slice::from_ref(&d), 2, 2, q());
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn descend_rejects_bad_map() {
        let rel = Subspace::span(q(), 2, vec![vec![q().one(), q().from_i64(-1)]]);
        let src = QuotientSpace::new(rel);
        let dst = QuotientSpace::trivial(q(), 2);
        let swap = Matrix::from_i64(q(), 2, 2, &[0, 1, 1, 0]);
        assert!(descend(&swap, &src, &dst, "swap").is_err());
        let sum = Matrix::from_i64(q(), 2, 2, &[1, 1, 0, 0]);
        assert!(descend(&sum, &src, &dst, "sum").is_ok());
    }
}
