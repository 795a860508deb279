//! Sparse multivariate polynomials over the integers.
//!
//! A monomial is a sorted multiset of variable indices (degree stays tiny
//! here, at most 3), mapped to an i64 coefficient. This is enough machinery
//! for exact symbolic expansion, differentiation and term-by-term
//! comparison of the cubic forms used elsewhere in the crate.

use crate::field::{FieldContext, Scalar};
use std::collections::BTreeMap;

pub type Mono = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Mono, i64>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: i64) -> Poly {
        let mut p = Poly::zero();
        p.add_term(vec![], c);
        p
    }

    pub fn var(i: usize) -> Poly {
        let mut p = Poly::zero();
        p.add_term(vec![i as u16], 1);
        p
    }

    pub fn add_term(&mut self, mut mono: Mono, coeff: i64) {
        use std::collections::btree_map::Entry;
        if coeff == 0 {
            return;
        }
        mono.sort_unstable();
        match self.terms.entry(mono) {
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(coeff).expect("coefficient overflow");
                // drop cancelled monomials so equality stays syntactic
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, mono: &[u16]) -> i64 {
        let mut m = mono.to_vec();
        m.sort_unstable();
        *self.terms.get(&m).unwrap_or(&0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                out.add_term(m, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let v = var as u16;
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mult = m.iter().filter(|&&x| x == v).count() as i64;
            if mult == 0 {
                continue;
            }
            let mut reduced = m.clone();
            let pos = reduced.iter().position(|&x| x == v).unwrap();
            reduced.remove(pos);
            out.add_term(reduced, c * mult);
        }
        out
    }

    pub fn eval(&self, ctx: FieldContext, point: &[Scalar]) -> Scalar {
        let mut acc = ctx.zero();
        for (m, c) in self.terms() {
            let mut t = Scalar::from_i64(ctx, c);
            for &v in m {
                t = t.mul(&point[v as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes each variable by a signed variable of a new polynomial
    /// ring: var i  ->  sign * var image[i].
    pub fn substitute_signed(&self, image: &[(usize, i64)]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mut coeff = c;
            let mut mono = Vec::with_capacity(m.len());
            for &v in m {
                let (new_var, sign) = image[v as usize];
                coeff *= sign;
                mono.push(new_var as u16);
            }
            out.add_term(mono, coeff);
        }
        out
    }

    /// Degree-respecting rendering for diagnostics.
    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms() {
            let vars: Vec<String> = m.iter().map(|&v| names(v as usize)).collect();
            let body = if vars.is_empty() { "1".into() } else { vars.join("*") };
            parts.push(format!("{c:+}*{body}"));
        }
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_and_cancellation() {
        // (x + y)(x - y) = x^2 - y^2
        let x = Poly::var(0);
        let y = Poly::var(1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[0, 0]), 1);
        assert_eq!(p.coeff(&[1, 1]), -1);
        assert_eq!(p.coeff(&[0, 1]), 0);
    }

    #[test]
    fn derivative_rules() {
        // d/dx (x^2 y + 3x) = 2xy + 3
        let p = Poly::var(0)
            .mul(&Poly::var(0))
            .mul(&Poly::var(1))
            .add(&Poly::var(0).scale(3));
        let d = p.derivative(0);
        assert_eq!(d.coeff(&[0, 1]), 2);
        assert_eq!(d.coeff(&[]), 3);
    }

    #[test]
    fn eval_matches_direct() {
        let ctx = FieldContext::prime(7).unwrap();
        let p = Poly::var(0).mul(&Poly::var(1)).sub(&Poly::constant(2));
        let a = Scalar::from_i64(ctx, 3);
        let b = Scalar::from_i64(ctx, 4);
        assert_eq!(p.eval(ctx, &[a, b]), Scalar::from_i64(ctx, 3 * 4 - 2));
    }

    #[test]
    fn signed_substitution() {
        // x*y with x -> -u, y -> v gives -u*v
        let p = Poly::var(0).mul(&Poly::var(1));
        let q = p.substitute_signed(&[(5, -1), (6, 1)]);
        assert_eq!(q.coeff(&[5, 6]), -1);
    }
}
