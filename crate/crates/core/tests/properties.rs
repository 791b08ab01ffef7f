use depth2::algebra::{format_combination, tensor_mul, FdAlgebra, Group};
use depth2::instance::parse_element;
use depth2::linalg::{Matrix, QuotientSpace, Subspace};
use depth2::weak_hopf::WeakHopfAlgebra;
use depth2::{Field, Scalar};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(2).unwrap()), Just(Field::prime(5).unwrap())]
}

fn entries(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| entries(r * c).prop_map(move |e| Matrix::from_i64(f, r, c, &e)))
}

fn vec_of(f: Field, e: &[i64]) -> Vec<Scalar> {
    e.iter().map(|&x| f.from_i64(x)).collect()
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_recovers_consistent_systems((m, x) in matrix().prop_flat_map(|m| {
        let (f, c) = (m.field(), m.cols());
        (Just(m), entries(c).prop_map(move |e| Matrix::from_i64(f, c, 1, &e)))
    })) {
        let b = m.mul(&x);
        let sol = m.solve(&b).unwrap();
        let p = sol.particular.expect("consistent");
        prop_assert_eq!(m.mul(&p), b);
    }

    #[test]
    fn quotient_invariants((f, n, rels) in (field(), 1usize..6).prop_flat_map(|(f, n)| {
        (Just(f), Just(n), prop::collection::vec(entries(n), 0..4))
    })) {
        let sub = Subspace::span(f, n, rels.iter().map(|e| vec_of(f, e)).collect::<Vec<_>>());
        let q = QuotientSpace::new(sub.clone());
        prop_assert!(q.check_invariants());
        prop_assert_eq!(q.dim() + sub.dim(), n);
        prop_assert!(q.projection().mul(q.section()).is_identity());
        for r in sub.basis() {
            prop_assert!(q.project(r).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn formatted_elements_parse_back(e in entries(6)) {
        let f = Field::Rational;
        let a = FdAlgebra::group_algebra(&Group::s3(), f);
        let v = vec_of(f, &e);
        let text = format_combination(a.labels(), &v);
        if text != "0" {
            prop_assert_eq!(parse_element(&a, &text, 1).unwrap(), v);
        }
    }

    #[test]
    fn groupoid_coproduct_is_multiplicative_and_antipode_reverses((x, y) in (entries(9), entries(9))) {
        let f = Field::Rational;
        let h = WeakHopfAlgebra::groupoid(3, f);
        let wb = &h.bialgebra;
        let a = &wb.algebra;
        let (x, y) = (vec_of(f, &x), vec_of(f, &y));
        let xy = a.mul(&x, &y);
        prop_assert_eq!(wb.delta(&xy), tensor_mul(a, a, &wb.delta(&x), &wb.delta(&y)));
        prop_assert_eq!(h.antipode.mul_vec(&xy), a.mul(&h.antipode.mul_vec(&y), &h.antipode.mul_vec(&x)));
        let pl = wb.pi_l();
        prop_assert_eq!(pl.mul_vec(&pl.mul_vec(&x)), pl.mul_vec(&x));
    }
}
