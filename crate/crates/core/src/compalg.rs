//! The four split composition algebras over a field.
//!
//! The integral models: H is the ring of 2x2 matrices with Q = det and
//! conjugation swapping the diagonal and negating the off-diagonal; C and R
//! are its diagonal and homothetic subrings; O is the ring of Cayley pairs
//! (A, B) with
//!
//! ```text
//! (A,B)*(C,D) = (AC - conj(D)B, B conj(C) + DA)
//! conj(A,B)   = (conj A, -B)
//! Q(A,B)      = Q(A) + Q(B)
//! ```
//!
//! Coordinates are always taken in the fixed basis E11, E12, E21, E22 per
//! Cayley component; operator matrices and echelon subspaces downstream
//! depend on this order, so it is part of the public contract.

use crate::error::{AlgError, Result};
use crate::field::{FieldContext, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::verify::{CheckItem, Report};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgKind {
    R,
    C,
    H,
    O,
}

impl AlgKind {
    pub fn dim(&self) -> usize {
        match self {
            AlgKind::R => 1,
            AlgKind::C => 2,
            AlgKind::H => 4,
            AlgKind::O => 8,
        }
    }

    pub fn letter(&self) -> &'static str {
        match self {
            AlgKind::R => "r",
            AlgKind::C => "c",
            AlgKind::H => "h",
            AlgKind::O => "o",
        }
    }

    pub fn parse(text: &str) -> Result<AlgKind> {
        match text {
            "r" => Ok(AlgKind::R),
            "c" => Ok(AlgKind::C),
            "h" => Ok(AlgKind::H),
            "o" => Ok(AlgKind::O),
            _ => Err(AlgError::Invalid(format!("unknown algebra '{text}'"))),
        }
    }

    pub fn is_associative(&self) -> bool {
        !matches!(self, AlgKind::O)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraTag {
    pub kind: AlgKind,
    pub ctx: FieldContext,
}

impl AlgebraTag {
    pub fn new(kind: AlgKind, ctx: FieldContext) -> AlgebraTag {
        AlgebraTag { kind, ctx }
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.letter(), self.ctx)
    }
}

/// An element of a split composition algebra, stored as coordinates in the
/// fixed basis. R: [x] for x*Id. C: [a, d] for diag(a, d). H: the four
/// matrix entries row-major. O: the H-coordinates of both Cayley
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompElement {
    tag: AlgebraTag,
    coords: Vec<Scalar>,
}

// 2x2 helpers on 4-coordinate slices [a11, a12, a21, a22]
fn m2_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    vec![
        x[0].mul(&y[0]).add(&x[1].mul(&y[2])),
        x[0].mul(&y[1]).add(&x[1].mul(&y[3])),
        x[2].mul(&y[0]).add(&x[3].mul(&y[2])),
        x[2].mul(&y[1]).add(&x[3].mul(&y[3])),
    ]
}

fn m2_conj(x: &[Scalar]) -> Vec<Scalar> {
    vec![x[3].clone(), x[1].neg(), x[2].neg(), x[0].clone()]
}

fn m2_det(x: &[Scalar]) -> Scalar {
    x[0].mul(&x[3]).sub(&x[1].mul(&x[2]))
}

fn v_add(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

fn v_sub(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

impl CompElement {
    pub fn from_coords(tag: AlgebraTag, coords: Vec<Scalar>) -> CompElement {
        assert_eq!(coords.len(), tag.dim(), "coordinate count != algebra dimension");
        for c in &coords {
            assert_eq!(c.context(), tag.ctx, "coordinate context mismatch");
        }
        CompElement { tag, coords }
    }

    pub fn zero(tag: AlgebraTag) -> CompElement {
        CompElement::from_coords(tag, vec![tag.ctx.zero(); tag.dim()])
    }

    pub fn one(tag: AlgebraTag) -> CompElement {
        let ctx = tag.ctx;
        let coords = match tag.kind {
            AlgKind::R => vec![ctx.one()],
            AlgKind::C => vec![ctx.one(), ctx.one()],
            AlgKind::H => vec![ctx.one(), ctx.zero(), ctx.zero(), ctx.one()],
            AlgKind::O => vec![
                ctx.one(),
                ctx.zero(),
                ctx.zero(),
                ctx.one(),
                ctx.zero(),
                ctx.zero(),
                ctx.zero(),
                ctx.zero(),
            ],
        };
        CompElement { tag, coords }
    }

    pub fn basis(tag: AlgebraTag, i: usize) -> CompElement {
        let mut coords = vec![tag.ctx.zero(); tag.dim()];
        coords[i] = tag.ctx.one();
        CompElement { tag, coords }
    }

    pub fn basis_all(tag: AlgebraTag) -> Vec<CompElement> {
        (0..tag.dim()).map(|i| CompElement::basis(tag, i)).collect()
    }

    pub fn scalar(tag: AlgebraTag, s: &Scalar) -> CompElement {
        CompElement::one(tag).scale(s)
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn assert_same(&self, other: &CompElement) {
        assert_eq!(self.tag, other.tag, "algebra tag mismatch");
    }

    pub fn add(&self, other: &CompElement) -> CompElement {
        self.assert_same(other);
        CompElement {
            tag: self.tag,
            coords: v_add(&self.coords, &other.coords),
        }
    }

    pub fn sub(&self, other: &CompElement) -> CompElement {
        self.assert_same(other);
        CompElement {
            tag: self.tag,
            coords: v_sub(&self.coords, &other.coords),
        }
    }

    pub fn neg(&self) -> CompElement {
        CompElement {
            tag: self.tag,
            coords: self.coords.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> CompElement {
        assert_eq!(s.context(), self.tag.ctx);
        CompElement {
            tag: self.tag,
            coords: self.coords.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn mul(&self, other: &CompElement) -> CompElement {
        self.assert_same(other);
        let coords = match self.tag.kind {
            AlgKind::R => vec![self.coords[0].mul(&other.coords[0])],
            AlgKind::C => vec![
                self.coords[0].mul(&other.coords[0]),
                self.coords[1].mul(&other.coords[1]),
            ],
            AlgKind::H => m2_mul(&self.coords, &other.coords),
            AlgKind::O => {
                let (a, b) = (&self.coords[0..4], &self.coords[4..8]);
                let (c, d) = (&other.coords[0..4], &other.coords[4..8]);
                let first = v_sub(&m2_mul(a, c), &m2_mul(&m2_conj(d), b));
                let second = v_add(&m2_mul(b, &m2_conj(c)), &m2_mul(d, a));
                let mut coords = first;
                coords.extend(second);
                coords
            }
        };
        CompElement { tag: self.tag, coords }
    }

    pub fn conj(&self) -> CompElement {
        let coords = match self.tag.kind {
            AlgKind::R => self.coords.clone(),
            AlgKind::C => vec![self.coords[1].clone(), self.coords[0].clone()],
            AlgKind::H => m2_conj(&self.coords),
            AlgKind::O => {
                let mut coords = m2_conj(&self.coords[0..4]);
                coords.extend(self.coords[4..8].iter().map(|c| c.neg()));
                coords
            }
        };
        CompElement { tag: self.tag, coords }
    }

    /// The multiplicative quadratic form: det for the matrix model,
    /// Q(A,B) = Q(A) + Q(B) for Cayley pairs.
    pub fn norm_q(&self) -> Scalar {
        match self.tag.kind {
            AlgKind::R => self.coords[0].mul(&self.coords[0]),
            AlgKind::C => self.coords[0].mul(&self.coords[1]),
            AlgKind::H => m2_det(&self.coords),
            AlgKind::O => m2_det(&self.coords[0..4]).add(&m2_det(&self.coords[4..8])),
        }
    }

    /// <x, y> = Q(x + y) - Q(x) - Q(y).
    pub fn bilinear(&self, other: &CompElement) -> Scalar {
        self.assert_same(other);
        self.add(other)
            .norm_q()
            .sub(&self.norm_q())
            .sub(&other.norm_q())
    }

    /// Re(x) = <x, 1>; note Re(1) = 2.
    pub fn re(&self) -> Scalar {
        self.bilinear(&CompElement::one(self.tag))
    }

    /// Inverse conj(x)/Q(x); requires Q(x) invertible.
    pub fn inverse(&self) -> Result<CompElement> {
        let q = self.norm_q();
        if q.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.conj().scale(&q.inv()?))
    }

    /// Matrix of L_z (or R_z) in the fixed coordinate basis; columns are
    /// the coordinates of z*b_i (resp. b_i*z).
    pub fn mul_operator(&self, side: Side) -> Matrix {
        let d = self.tag.dim();
        let ctx = self.tag.ctx;
        let mut cols = Vec::with_capacity(d);
        for i in 0..d {
            let b = CompElement::basis(self.tag, i);
            let image = match side {
                Side::Left => self.mul(&b),
                Side::Right => b.mul(self),
            };
            cols.push(image.coords);
        }
        Matrix::from_fn(ctx, d, d, |r, c| cols[c][r].clone())
    }

    /// L(z): the image of left multiplication by z.
    pub fn left_image(&self) -> Subspace {
        self.mul_operator(Side::Left).column_space()
    }

    /// R(z): the image of right multiplication by z.
    pub fn right_image(&self) -> Subspace {
        self.mul_operator(Side::Right).column_space()
    }

    /// Associator (xy)z - x(yz).
    pub fn associator(x: &CompElement, y: &CompElement, z: &CompElement) -> CompElement {
        x.mul(y).mul(z).sub(&x.mul(&y.mul(z)))
    }

    /// True when the elements and all their pairwise/triple products
    /// associate; pairs always do, so only distinct triples are tested.
    pub fn generates_associative(elements: &[CompElement]) -> bool {
        let n = elements.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !CompElement::associator(&elements[i], &elements[j], &elements[k]).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Are two nonzero elements proportional over the base field?
    pub fn proportional(&self, other: &CompElement) -> bool {
        self.assert_same(other);
        proportional_coords(&self.coords, &other.coords)
    }
}

pub fn proportional_coords(a: &[Scalar], b: &[Scalar]) -> bool {
    // b = lambda * a for some nonzero lambda
    let Some(i) = a.iter().position(|c| !c.is_zero()) else {
        return b.iter().all(|c| c.is_zero());
    };
    if b[i].is_zero() {
        return false;
    }
    let lambda = b[i].div(&a[i]).unwrap();
    a.iter().zip(b).all(|(x, y)| x.mul(&lambda) == *y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Is the whole subspace isotropic? Checked on a basis via polarization,
/// which is valid in every characteristic.
pub fn subspace_isotropic(tag: AlgebraTag, space: &Subspace) -> bool {
    let rows = space.basis_rows();
    let elts: Vec<CompElement> = rows
        .into_iter()
        .map(|r| CompElement::from_coords(tag, r))
        .collect();
    for (i, u) in elts.iter().enumerate() {
        if !u.norm_q().is_zero() {
            return false;
        }
        for v in elts.iter().skip(i + 1) {
            if !u.bilinear(v).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Per-element check of the maximal-isotropic dichotomy: an invertible z
/// has L(z) = R(z) = A, an isotropic z has half-dimensional isotropic
/// images, and membership in L(z1) is cut out by conj(z1) z2 = 0.
pub fn check_composition_general(z: &CompElement) -> Result<Report> {
    if z.tag().kind == AlgKind::R {
        return Err(AlgError::UnsupportedAlgebra(
            "the dichotomy concerns algebras with dim >= 2".into(),
        ));
    }
    if z.is_zero() {
        return Err(AlgError::ZeroInput);
    }
    let d = z.tag().dim();
    let left = z.left_image();
    let right = z.right_image();
    let mut report = Report::new("composition-general");
    if z.norm_q().is_zero() {
        report.push(CheckItem::assert(
            "isotropic z: dim L(z) = dim R(z) = dim/2",
            left.dim() == d / 2 && right.dim() == d / 2,
            format!("dims {} / {}", left.dim(), right.dim()),
        ));
        report.push(CheckItem::assert(
            "L(z) and R(z) lie inside {Q = 0}",
            subspace_isotropic(z.tag(), &left) && subspace_isotropic(z.tag(), &right),
            String::new(),
        ));
    } else {
        report.push(CheckItem::assert(
            "invertible z: L(z) = R(z) = A",
            left.dim() == d && right.dim() == d,
            format!("dims {} / {}", left.dim(), right.dim()),
        ));
    }
    Ok(report)
}

/// Membership bullet: z2 in L(z1) iff z1 in L(z2) iff conj(z1) z2 = 0.
pub fn check_membership_bullet(z1: &CompElement, z2: &CompElement) -> bool {
    let in_l1 = z1.left_image().contains_vector(z2.coords());
    let in_l2 = z2.left_image().contains_vector(z1.coords());
    let prod_zero = z1.conj().mul(z2).is_zero();
    in_l1 == prod_zero && in_l2 == prod_zero
}

/// The triality bullets for a pair of nonzero isotropic octonions, plus
/// the even/odd intersection parities that witness the two families of
/// maximal isotropic subspaces.
pub fn check_triality(x: &CompElement, y: &CompElement) -> Result<Report> {
    if x.tag().kind != AlgKind::O {
        return Err(AlgError::UnsupportedAlgebra("triality concerns the octonions".into()));
    }
    if x.is_zero() || y.is_zero() {
        return Err(AlgError::ZeroInput);
    }
    if !x.norm_q().is_zero() || !y.norm_q().is_zero() {
        return Err(AlgError::NotIsotropic);
    }
    let mut report = Report::new("triality");
    let lx = x.left_image();
    let ly = y.left_image();
    let rx = x.right_image();
    let ry = y.right_image();
    let ll = lx.intersect(&ly)?;
    let rr = rx.intersect(&ry)?;
    let lr = lx.intersect(&ry)?;

    let pairing_zero = x.bilinear(y).is_zero();
    report.push(CheckItem::assert(
        "dim(L∩L) >= 2 iff dim(R∩R) >= 2 iff <x,y> = 0",
        (ll.dim() >= 2) == pairing_zero && (rr.dim() >= 2) == pairing_zero,
        format!("dim L∩L = {}, dim R∩R = {}", ll.dim(), rr.dim()),
    ));

    if ll.dim() == 2 {
        let lx_op = x.mul_operator(Side::Left);
        let ly_op = y.mul_operator(Side::Left);
        let image_a = y.conj().left_image().map(&lx_op);
        let image_b = x.conj().left_image().map(&ly_op);
        report.push(CheckItem::assert(
            "L(x)∩L(y) = Lx[L(conj y)] = Ly[L(conj x)]",
            image_a == ll && image_b == ll,
            String::new(),
        ));
    }
    if rr.dim() == 2 {
        let rx_op = x.mul_operator(Side::Right);
        let ry_op = y.mul_operator(Side::Right);
        let image_a = y.conj().right_image().map(&rx_op);
        let image_b = x.conj().right_image().map(&ry_op);
        report.push(CheckItem::assert(
            "R(x)∩R(y) = Rx[R(conj y)] = Ry[R(conj x)]",
            image_a == rr && image_b == rr,
            String::new(),
        ));
    }

    report.push(CheckItem::assert(
        "xy = 0 iff dim(L(x)∩R(y)) = 3",
        x.mul(y).is_zero() == (lr.dim() == 3),
        format!("dim L∩R = {}", lr.dim()),
    ));
    report.push(CheckItem::assert(
        "parity: dim(L∩L) even, dim(L∩R) odd",
        ll.dim() % 2 == 0 && lr.dim() % 2 == 1,
        format!("{} / {}", ll.dim(), lr.dim()),
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag(kind: AlgKind, ctx: FieldContext) -> AlgebraTag {
        AlgebraTag::new(kind, ctx)
    }

    fn f5() -> FieldContext {
        FieldContext::prime(5).unwrap()
    }

    fn elem(tag: AlgebraTag, coords: &[i64]) -> CompElement {
        CompElement::from_coords(
            tag,
            coords.iter().map(|&v| Scalar::from_i64(tag.ctx, v)).collect(),
        )
    }

    #[test]
    fn unit_law_in_octonions() {
        let t = tag(AlgKind::O, FieldContext::Rationals);
        let one = CompElement::one(t);
        let x = elem(t, &[1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(one.mul(&x), x);
        assert_eq!(x.mul(&one), x);
    }

    #[test]
    fn zero_divisors_exist() {
        let t = tag(AlgKind::H, FieldContext::Rationals);
        let e11 = elem(t, &[1, 0, 0, 0]);
        let e22 = elem(t, &[0, 0, 0, 1]);
        assert!(e11.mul(&e22).is_zero());
    }

    #[test]
    fn conjugation_formula_and_involution() {
        let t = tag(AlgKind::H, FieldContext::Rationals);
        let x = elem(t, &[1, 2, 3, 4]);
        assert_eq!(x.conj(), elem(t, &[4, -2, -3, 1]));
        assert_eq!(x.conj().conj(), x);
        assert_eq!(CompElement::one(t).conj(), CompElement::one(t));

        let to = tag(AlgKind::O, f5());
        let y = elem(to, &[1, 2, 3, 4, 1, 1, 2, 2]);
        assert_eq!(y.conj().conj(), y);
        // conj(xy) = conj(y) conj(x)
        let z = elem(to, &[0, 1, 4, 2, 3, 0, 1, 2]);
        assert_eq!(y.mul(&z).conj(), z.conj().mul(&y.conj()));
        // x * conj(x) = Q(x) * 1
        let q = y.norm_q();
        assert_eq!(y.mul(&y.conj()), CompElement::scalar(to, &q));
    }

    #[test]
    fn norm_values() {
        let t = tag(AlgKind::H, FieldContext::Rationals);
        assert!(CompElement::one(t).norm_q().is_one());
        assert!(elem(t, &[1, 0, 0, 0]).norm_q().is_zero());
        let to = tag(AlgKind::O, FieldContext::Rationals);
        let x = elem(to, &[1, 2, 3, 4, 5, 6, 7, 8]);
        // Q(A,B) = det A + det B
        assert_eq!(
            x.norm_q(),
            Scalar::from_i64(FieldContext::Rationals, (4 - 6) + (40 - 42))
        );
    }

    #[test]
    fn bilinear_values() {
        let t = tag(AlgKind::O, FieldContext::Rationals);
        let one = CompElement::one(t);
        assert_eq!(one.bilinear(&one), Scalar::from_i64(FieldContext::Rationals, 2));
        assert_eq!(one.re(), Scalar::from_i64(FieldContext::Rationals, 2));
        let th = tag(AlgKind::H, FieldContext::Rationals);
        let e11 = elem(th, &[1, 0, 0, 0]);
        let e22 = elem(th, &[0, 0, 0, 1]);
        assert_eq!(e11.bilinear(&e22), Scalar::from_i64(FieldContext::Rationals, 1));
        assert_eq!(e11.bilinear(&e22), e22.bilinear(&e11));
    }

    #[test]
    fn composition_law_exhaustive_f2_small() {
        // Q(xy) = Q(x) Q(y) over F_2 for the associative algebras
        let f2 = FieldContext::prime(2).unwrap();
        for kind in [AlgKind::R, AlgKind::C, AlgKind::H] {
            let t = tag(kind, f2);
            let d = t.dim();
            let count = 1usize << d;
            for a in 0..count {
                for b in 0..count {
                    let x = CompElement::from_coords(
                        t,
                        (0..d).map(|i| Scalar::from_i64(f2, ((a >> i) & 1) as i64)).collect(),
                    );
                    let y = CompElement::from_coords(
                        t,
                        (0..d).map(|i| Scalar::from_i64(f2, ((b >> i) & 1) as i64)).collect(),
                    );
                    assert_eq!(x.mul(&y).norm_q(), x.norm_q().mul(&y.norm_q()));
                }
            }
        }
    }

    #[test]
    fn left_operator_of_unit_is_identity() {
        for kind in [AlgKind::R, AlgKind::C, AlgKind::H, AlgKind::O] {
            let t = tag(kind, f5());
            let m = CompElement::one(t).mul_operator(Side::Left);
            assert_eq!(m, Matrix::identity(f5(), t.dim()));
        }
    }

    #[test]
    fn alternative_law_via_operators() {
        // L_{conj z} . L_z = Q(z) Id
        let t = tag(AlgKind::O, f5());
        let z = elem(t, &[1, 2, 0, 3, 4, 1, 2, 0]);
        let lhs = z.conj().mul_operator(Side::Left).mul(&z.mul_operator(Side::Left));
        let rhs = Matrix::identity(f5(), 8).scale(&z.norm_q());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn base_point_left_image() {
        // x0 = (E11, 0): L(x0) is spanned by (E11,0),(E12,0),(0,E11),(0,E21)
        let t = tag(AlgKind::O, FieldContext::Rationals);
        let x0 = elem(t, &[1, 0, 0, 0, 0, 0, 0, 0]);
        let img = x0.left_image();
        assert_eq!(img.dim(), 4);
        for coords in [
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
        ] {
            assert!(img.contains_vector(&elem(t, &coords).coords));
        }
    }

    #[test]
    fn composition_general_examples() {
        let th = tag(AlgKind::H, FieldContext::Rationals);
        let one = CompElement::one(th);
        assert!(check_composition_general(&one).unwrap().all_pass());

        let e11 = elem(th, &[1, 0, 0, 0]);
        let rep = check_composition_general(&e11).unwrap();
        assert!(rep.all_pass());
        assert_eq!(e11.left_image().dim(), 2);
        assert_eq!(e11.mul_operator(Side::Left).kernel().dim(), 2);

        let tr = tag(AlgKind::R, FieldContext::Rationals);
        assert!(check_composition_general(&CompElement::one(tr)).is_err());
        assert!(check_composition_general(&CompElement::zero(th)).is_err());
    }

    #[test]
    fn triality_base_point() {
        let t = tag(AlgKind::O, FieldContext::Rationals);
        let x0 = elem(t, &[1, 0, 0, 0, 0, 0, 0, 0]);
        // L(x0) ∩ R(x0) = K x0
        let meet = x0.left_image().intersect(&x0.right_image()).unwrap();
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(x0.coords()));
        let rep = check_triality(&x0, &x0).unwrap();
        assert!(rep.all_pass(), "{}", rep.render());
    }

    #[test]
    fn triality_rejects_bad_input() {
        let t = tag(AlgKind::O, FieldContext::Rationals);
        let one = CompElement::one(t);
        assert_eq!(check_triality(&one, &one), Err(AlgError::NotIsotropic));
    }

    #[test]
    fn dim_l_cap_r_is_one_or_three() {
        let t = tag(AlgKind::O, f5());
        let x0 = elem(t, &[1, 0, 0, 0, 0, 0, 0, 0]);
        let z = elem(t, &[0, 1, 0, 0, 0, 0, 0, 0]);
        assert!(z.norm_q().is_zero());
        for other in [&z, &x0] {
            let d = x0.left_image().intersect(&other.right_image()).unwrap().dim();
            assert!(d == 1 || d == 3, "unexpected intersection dim {d}");
        }
    }
}
