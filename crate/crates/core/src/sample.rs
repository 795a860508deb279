//! Deterministic random generation of exact test data.

use crate::compalg::{AlgKind, AlgebraTag, CompElement};
use crate::field::{FieldContext, Scalar};
use crate::jordan::HermitianMatrix;
use crate::linalg::Matrix;
use rand::Rng;

/// Over F_p: uniform residue. Over Q: numerator in [-bound, bound],
/// denominator in [1, bound].
pub fn scalar<R: Rng>(ctx: FieldContext, bound: i64, rng: &mut R) -> Scalar {
    match ctx {
        FieldContext::Rationals => {
            let n = rng.random_range(-bound..=bound);
            let d = rng.random_range(1..=bound);
            Scalar::from_fraction(n, d).unwrap()
        }
        FieldContext::Prime(p) => Scalar::from_i64(ctx, rng.random_range(0..p) as i64),
    }
}

pub fn nonzero_scalar<R: Rng>(ctx: FieldContext, bound: i64, rng: &mut R) -> Scalar {
    loop {
        let s = scalar(ctx, bound, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn comp_element<R: Rng>(tag: AlgebraTag, bound: i64, rng: &mut R) -> CompElement {
    let coords = (0..tag.dim()).map(|_| scalar(tag.ctx, bound, rng)).collect();
    CompElement::from_coords(tag, coords)
}

pub fn nonzero_comp_element<R: Rng>(tag: AlgebraTag, bound: i64, rng: &mut R) -> CompElement {
    loop {
        let x = comp_element(tag, bound, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A nonzero isotropic element, built constructively so it also works
/// over Q: draw the first Cayley component A freely, then solve the last
/// entry of B so that det B = -det A.
pub fn isotropic<R: Rng>(tag: AlgebraTag, bound: i64, rng: &mut R) -> CompElement {
    let ctx = tag.ctx;
    loop {
        let x = match tag.kind {
            AlgKind::R => CompElement::zero(tag),
            AlgKind::C => {
                // diag(a, 0) or diag(0, d)
                let a = nonzero_scalar(ctx, bound, rng);
                if rng.random::<bool>() {
                    CompElement::from_coords(tag, vec![a, ctx.zero()])
                } else {
                    CompElement::from_coords(tag, vec![ctx.zero(), a])
                }
            }
            AlgKind::H => {
                // det = ad - bc = 0 with d solved from a random b, c, a
                let a = nonzero_scalar(ctx, bound, rng);
                let b = scalar(ctx, bound, rng);
                let c = scalar(ctx, bound, rng);
                let d = b.mul(&c).div(&a).unwrap();
                CompElement::from_coords(tag, vec![a, b, c, d])
            }
            AlgKind::O => {
                // det B = -det A with the last entry of B solved
                let a: Vec<Scalar> = (0..4).map(|_| scalar(ctx, bound, rng)).collect();
                let det_a = a[0].mul(&a[3]).sub(&a[1].mul(&a[2]));
                let b0 = nonzero_scalar(ctx, bound, rng);
                let b1 = scalar(ctx, bound, rng);
                let b2 = scalar(ctx, bound, rng);
                // b0*b3 - b1*b2 = -det A
                let b3 = b1.mul(&b2).sub(&det_a).div(&b0).unwrap();
                let mut coords = a;
                coords.extend([b0, b1, b2, b3]);
                CompElement::from_coords(tag, coords)
            }
        };
        if !x.is_zero() && x.norm_q().is_zero() {
            return x;
        }
        if tag.kind == AlgKind::R {
            panic!("R has no nonzero isotropic elements");
        }
    }
}

pub fn matrix<R: Rng>(ctx: FieldContext, rows: usize, cols: usize, bound: i64, rng: &mut R) -> Matrix {
    let mut m = Matrix::zero(ctx, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, scalar(ctx, bound, rng));
        }
    }
    m
}

pub fn invertible_matrix<R: Rng>(ctx: FieldContext, n: usize, bound: i64, rng: &mut R) -> Matrix {
    loop {
        let m = matrix(ctx, n, n, bound, rng);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Random element of SL_n: draw invertible, then divide the first row by
/// the determinant.
pub fn sl_matrix<R: Rng>(ctx: FieldContext, n: usize, bound: i64, rng: &mut R) -> Matrix {
    let mut m = invertible_matrix(ctx, n, bound, rng);
    let inv = m.det().inv().unwrap();
    for j in 0..n {
        let v = m.get(0, j).mul(&inv);
        m.set(0, j, v);
    }
    debug_assert!(m.det().is_one());
    m
}

pub fn hermitian<R: Rng>(tag: AlgebraTag, n: usize, bound: i64, rng: &mut R) -> HermitianMatrix {
    let diag = (0..n).map(|_| scalar(tag.ctx, bound, rng)).collect();
    let upper = (0..n * (n - 1) / 2)
        .map(|_| comp_element(tag, bound, rng))
        .collect();
    HermitianMatrix::new(tag, n, diag, upper).unwrap()
}

pub fn nonzero_hermitian<R: Rng>(tag: AlgebraTag, n: usize, bound: i64, rng: &mut R) -> HermitianMatrix {
    loop {
        let a = hermitian(tag, n, bound, rng);
        if !a.is_zero() {
            return a;
        }
    }
}

/// r vectors of A^n in triangular position (zeros below the unit
/// coordinate), so their module span is free of rank r by construction.
pub fn free_tuple<R: Rng>(
    tag: AlgebraTag,
    n: usize,
    r: usize,
    bound: i64,
    rng: &mut R,
) -> Vec<Vec<CompElement>> {
    assert!(r <= n);
    (0..r)
        .map(|k| {
            (0..n)
                .map(|t| {
                    use std::cmp::Ordering;
                    match t.cmp(&k) {
                        Ordering::Less => CompElement::zero(tag),
                        Ordering::Equal => CompElement::one(tag),
                        Ordering::Greater => comp_element(tag, bound, rng),
                    }
                })
                .collect()
        })
        .collect()
}

/// A tuple of quaternions embedded in the octonions as Cayley pairs
/// (A, 0); such tuples always generate an associative subalgebra.
pub fn embedded_quaternion_tuple<R: Rng>(
    octag: AlgebraTag,
    count: usize,
    bound: i64,
    rng: &mut R,
) -> Vec<CompElement> {
    assert_eq!(octag.kind, AlgKind::O);
    (0..count)
        .map(|_| {
            let mut coords: Vec<Scalar> = (0..4).map(|_| scalar(octag.ctx, bound, rng)).collect();
            coords.extend(vec![octag.ctx.zero(); 4]);
            CompElement::from_coords(octag, coords)
        })
        .collect()
}
