//! Small helpers on coordinate vectors (`[Scalar]`).

use crate::field::{Field, Scalar};

pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    assert_eq!(y.len(), x.len(), "vector length");
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        yi.add_mul(a, xi);
    }
}

pub fn scale_in_place(v: &mut [Scalar], a: &Scalar) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x * a;
        }
    }
}

pub fn scaled(v: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * a).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Tensor product of coordinate vectors, index `i * b.len() + j`.
pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a.first().or(b.first()).map(Scalar::field).unwrap_or(Field::Rational);
    let mut out = zeros(field, a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

/// Nonzero entries of `v` as `(index, value)` pairs.
pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}
