//! The cubic determinant on H_3(A) and its derived structure.
//!
//! `det3` on a hermitian 3x3 matrix with diagonal (r1, r2, r3) and
//! off-diagonal data x1 = A_23, x2 = A_31, x3 = A_21 is
//!
//! ```text
//! det3 = r1 r2 r3 + <x1 x2, x3> - r1 Q(x1) - r2 Q(x2) - r3 Q(x3)
//! ```
//!
//! with <.,.> the polarized norm form. The polynomial is expanded once
//! over the integers per algebra; the adjoint (sharp) map is then obtained
//! by exact symbolic differentiation, solving T(A#, B) = D_B det3(A)
//! against the trace-form Gram matrix, rather than from hand-derived
//! entry formulas. The quadratic U-operator on H_3(O) follows as
//! U_A B = T(A,B) A - cross(A#, B).

use crate::compalg::{AlgKind, AlgebraTag, CompElement};
use crate::field::{FieldContext, Scalar};
use crate::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Precomputed symbolic data for H_3 over one algebra kind. Coefficients
/// are integers, so one table serves every base field.
pub struct CubicData {
    pub kind: AlgKind,
    pub nvars: usize,
    pub det3: Poly,
    pub grads: Vec<Poly>,
    pub adjoint_polys: Vec<Poly>,
    /// cross(X, B)_k = sum of c * X_i * B_j over the listed (i, j, c).
    pub cross_terms: Vec<Vec<(u16, u16, i64)>>,
}

fn build(kind: AlgKind) -> CubicData {
    let ctx = FieldContext::Rationals;
    let tag = AlgebraTag::new(kind, ctx);
    let d = tag.dim();
    let nvars = 3 + 3 * d;
    let basis = CompElement::basis_all(tag);

    // variable layout: r1 r2 r3, then coords of u12, u13, u23
    let u12 = |i: usize| 3 + i;
    let u13 = |i: usize| 3 + d + i;
    let u23 = |i: usize| 3 + 2 * d + i;

    // algebra structure constants
    let mut gram = vec![vec![0i64; d]; d];
    let mut qdiag = vec![0i64; d];
    for i in 0..d {
        qdiag[i] = basis[i].norm_q().to_integer_lift().unwrap();
        for j in 0..d {
            gram[i][j] = basis[i].bilinear(&basis[j]).to_integer_lift().unwrap();
        }
    }

    // Q as a quadratic polynomial in a coordinate block
    let q_poly = |var: &dyn Fn(usize) -> usize| {
        let mut p = Poly::zero();
        for i in 0..d {
            p.add_term(vec![var(i) as u16, var(i) as u16], qdiag[i]);
            for j in i + 1..d {
                p.add_term(vec![var(i) as u16, var(j) as u16], gram[i][j]);
            }
        }
        p
    };

    // <x1 x2, x3> with x1 = u23, x2 = conj(u13), x3 = conj(u12):
    // coefficient of u23_i u13_j u12_k is <b_i conj(b_j), conj(b_k)>
    let mut det3 = Poly::zero();
    det3.add_term(vec![0, 1, 2], 1);
    for i in 0..d {
        for j in 0..d {
            let prod = basis[i].mul(&basis[j].conj());
            for k in 0..d {
                let c = prod.bilinear(&basis[k].conj()).to_integer_lift().unwrap();
                if c != 0 {
                    det3.add_term(
                        vec![u23(i) as u16, u13(j) as u16, u12(k) as u16],
                        c,
                    );
                }
            }
        }
    }
    // - r1 Q(x1) - r2 Q(x2) - r3 Q(x3); Q is conjugation-invariant
    det3 = det3.sub(&Poly::var(0).mul(&q_poly(&u23)));
    det3 = det3.sub(&Poly::var(1).mul(&q_poly(&u13)));
    det3 = det3.sub(&Poly::var(2).mul(&q_poly(&u12)));

    let grads: Vec<Poly> = (0..nvars).map(|v| det3.derivative(v)).collect();

    // Gram of the trace form on the standard basis of H_3: identity on
    // the diagonal coordinates, the algebra Gram per off-diagonal slot.
    let mut gram_j = vec![vec![BigRational::zero(); nvars]; nvars];
    for t in 0..3 {
        gram_j[t][t] = BigRational::one();
    }
    for slot in 0..3 {
        for i in 0..d {
            for j in 0..d {
                gram_j[3 + slot * d + i][3 + slot * d + j] =
                    BigRational::from_integer(BigInt::from(gram[i][j]));
            }
        }
    }
    let inv = invert_rational(&gram_j);

    // adjoint coordinates: A# = GramJ^{-1} grad det3(A); the combination
    // is integral even when GramJ^{-1} is not
    let adjoint_polys: Vec<Poly> = (0..nvars)
        .map(|k| rational_combo(&grads, &inv[k]))
        .collect();

    // polarize each adjoint quadric into cross(X, B)
    let cross_terms = adjoint_polys
        .iter()
        .map(|p| {
            let mut terms = Vec::new();
            for (m, c) in p.terms() {
                match m.as_slice() {
                    [i, j] if i == j => terms.push((*i, *j, 2 * c)),
                    [i, j] => {
                        terms.push((*i, *j, c));
                        terms.push((*j, *i, c));
                    }
                    _ => panic!("adjoint polynomial is not quadratic"),
                }
            }
            terms
        })
        .collect();

    CubicData { kind, nvars, det3, grads, adjoint_polys, cross_terms }
}

fn invert_rational(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("trace-form Gram matrix is nondegenerate");
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..2 * n {
                    let sub = &f * &aug[col][j];
                    aug[r][j] -= sub;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn rational_combo(polys: &[Poly], coeffs: &[BigRational]) -> Poly {
    let mut acc: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
    for (p, c) in polys.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (m, k) in p.terms() {
            let entry = acc.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c * BigRational::from_integer(BigInt::from(k));
        }
    }
    let mut out = Poly::zero();
    for (m, c) in acc {
        if c.is_zero() {
            continue;
        }
        assert!(c.denom().is_one(), "adjoint coefficients must be integral");
        out.add_term(m, c.numer().to_i64().expect("adjoint coefficient fits i64"));
    }
    out
}

static CACHE: [OnceLock<CubicData>; 4] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

pub fn cubic_data(kind: AlgKind) -> &'static CubicData {
    let slot = match kind {
        AlgKind::R => 0,
        AlgKind::C => 1,
        AlgKind::H => 2,
        AlgKind::O => 3,
    };
    CACHE[slot].get_or_init(|| build(kind))
}

impl CubicData {
    pub fn eval_det3(&self, ctx: FieldContext, coords: &[Scalar]) -> Scalar {
        self.det3.eval(ctx, coords)
    }

    pub fn eval_gradient(&self, ctx: FieldContext, coords: &[Scalar]) -> Vec<Scalar> {
        self.grads.iter().map(|g| g.eval(ctx, coords)).collect()
    }

    pub fn eval_adjoint(&self, ctx: FieldContext, coords: &[Scalar]) -> Vec<Scalar> {
        self.adjoint_polys.iter().map(|g| g.eval(ctx, coords)).collect()
    }

    pub fn eval_cross(&self, ctx: FieldContext, x: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.cross_terms
            .iter()
            .map(|terms| {
                let mut acc = ctx.zero();
                for &(i, j, c) in terms {
                    let xi = &x[i as usize];
                    let bj = &b[j as usize];
                    if xi.is_zero() || bj.is_zero() {
                        continue;
                    }
                    acc = acc.add(&Scalar::from_i64(ctx, c).mul(&xi.mul(bj)));
                }
                acc
            })
            .collect()
    }
}
