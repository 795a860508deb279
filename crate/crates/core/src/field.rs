//! Exact scalars over Q and F_p.
//!
//! A [`Scalar`] is either an arbitrary-precision reduced fraction or a
//! residue in `[0, p)` for a prime `p < 2^16`. All arithmetic is exact and
//! equality is decidable, so subspace computations downstream can rely on
//! syntactic canonical forms.

use crate::error::{AlgError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The base field: Q (characteristic 0) or F_p for a prime p < 2^16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldContext {
    Rationals,
    Prime(u64),
}

impl FieldContext {
    pub fn rationals() -> Self {
        FieldContext::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 16) || !is_prime(p) {
            return Err(AlgError::BadPrime(p));
        }
        Ok(FieldContext::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldContext::Rationals => 0,
            FieldContext::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_i64(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_i64(*self, 1)
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldContext::Rationals => write!(f, "Q"),
            FieldContext::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Fractions stay reduced with positive
/// denominator; residues stay reduced mod p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { p: u64, value: u64 },
}

impl Scalar {
    pub fn context(&self) -> FieldContext {
        match self {
            Scalar::Rational(_) => FieldContext::Rationals,
            Scalar::Mod { p, .. } => FieldContext::Prime(*p),
        }
    }

    pub fn from_i64(ctx: FieldContext, v: i64) -> Scalar {
        match ctx {
            FieldContext::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldContext::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Mod { p, value: r }
            }
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn assert_same(&self, other: &Scalar) {
        assert_eq!(
            self.context(),
            other.context(),
            "scalar arithmetic across distinct field contexts"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: (a + b) % p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.assert_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: (a + p - b) % p,
            },
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { p, value: a }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                p: *p,
                value: (a * b) % p,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { p, value } => Scalar::Mod {
                p: *p,
                value: (p - value) % p,
            },
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Mod { p, value } => Scalar::Mod {
                p: *p,
                value: mod_inverse(*value, *p),
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// Renders "a/b" for rationals (lowest terms, positive denominator)
    /// and the residue for prime fields.
    pub fn to_display(&self) -> String {
        match self {
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, .. } => value.to_string(),
        }
    }

    /// Parses the matrix-exchange entry form: "a/b" or "a" over Q, a
    /// residue in [0, p) over F_p.
    pub fn parse(ctx: FieldContext, text: &str) -> Result<Scalar> {
        match ctx {
            FieldContext::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let n: BigInt = num
                    .trim()
                    .parse()
                    .map_err(|_| AlgError::Invalid(format!("bad rational '{text}'")))?;
                let d: BigInt = den
                    .trim()
                    .parse()
                    .map_err(|_| AlgError::Invalid(format!("bad rational '{text}'")))?;
                if d.is_zero() {
                    return Err(AlgError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            FieldContext::Prime(p) => {
                let v: u64 = text
                    .trim()
                    .parse()
                    .map_err(|_| AlgError::Invalid(format!("bad residue '{text}'")))?;
                if v >= p {
                    return Err(AlgError::Invalid(format!("residue {v} not reduced mod {p}")));
                }
                Ok(Scalar::Mod { p, value: v })
            }
        }
    }

    /// The canonical integer lift used when freezing exact constants:
    /// numerator for integral rationals, residue for F_p.
    pub fn to_integer_lift(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    use num_traits::ToPrimitive;
                    r.numer().to_i64()
                } else {
                    None
                }
            }
            Scalar::Mod { value, .. } => Some(*value as i64),
        }
    }

    pub fn abs_height(&self) -> BigInt {
        match self {
            Scalar::Rational(r) => r.numer().abs().max(r.denom().abs()),
            Scalar::Mod { value, .. } => BigInt::from(*value),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed intermediates; p < 2^16 so nothing overflows
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "inverse of non-unit mod {p}");
    t.rem_euclid(p as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(n, d).unwrap()
    }

    #[test]
    fn fraction_arithmetic_reduces() {
        let third = q(1, 3);
        let sixth = q(1, 6);
        assert_eq!(third.add(&sixth), q(1, 2));
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2).to_display(), "-1/2");
    }

    #[test]
    fn inverse_mod_five() {
        let f5 = FieldContext::prime(5).unwrap();
        let two = Scalar::from_i64(f5, 2);
        assert_eq!(two.inv().unwrap(), Scalar::from_i64(f5, 3));
        assert_eq!(Scalar::from_i64(f5, 5), f5.zero());
    }

    #[test]
    fn zero_has_no_inverse() {
        let f5 = FieldContext::prime(5).unwrap();
        assert_eq!(f5.zero().inv(), Err(AlgError::DivisionByZero));
        assert_eq!(q(0, 1).inv(), Err(AlgError::DivisionByZero));
    }

    #[test]
    fn prime_guard() {
        assert!(FieldContext::prime(4).is_err());
        assert!(FieldContext::prime(1 << 17).is_err());
        assert!(FieldContext::prime(65521).is_ok());
    }

    #[test]
    fn parse_round_trip() {
        let f7 = FieldContext::prime(7).unwrap();
        let s = Scalar::parse(f7, "6").unwrap();
        assert_eq!(s.to_display(), "6");
        let r = Scalar::parse(FieldContext::Rationals, "-3/9").unwrap();
        assert_eq!(r.to_display(), "-1/3");
        assert!(Scalar::parse(f7, "7").is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms_f13(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
            let ctx = FieldContext::prime(13).unwrap();
            let (a, b, c) = (
                Scalar::Mod { p: 13, value: a },
                Scalar::Mod { p: 13, value: b },
                Scalar::Mod { p: 13, value: c },
            );
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&a.neg()), ctx.zero());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), ctx.one());
            }
        }

        #[test]
        fn field_axioms_q(an in -20i64..20, ad in 1i64..9, bn in -20i64..20, bd in 1i64..9) {
            let a = Scalar::from_fraction(an, ad).unwrap();
            let b = Scalar::from_fraction(bn, bd).unwrap();
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !b.is_zero() {
                prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
            }
        }
    }
}
