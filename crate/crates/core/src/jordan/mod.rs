//! Hermitian Jordan algebras H_n(A) and their rank-one theory.
//!
//! The quadratic operator U_A B is the entrywise product ABA for the
//! associative algebras, and the cubic-norm construction
//! U_A B = T(A,B) A - cross(A#, B) on H_3(O), so no division by 2 ever
//! occurs and every identity holds in characteristic 2 as well.

mod classify;
mod cubic;

pub use classify::{
    classify_rank_one_octonion, decode_octonion, find_null_plane, nu2_preimage_exists,
    null_plane_ok, x0_matrix, zak_scaling_failure, RankOneClass,
};
pub use cubic::{cubic_data, CubicData};

use crate::compalg::{proportional_coords, AlgKind, AlgebraTag, CompElement, Side};
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::verify::{CheckItem, Report};

/// A hermitian matrix over a composition algebra: scalar diagonal, the
/// strict upper triangle free, the lower triangle forced by conjugation.
/// Over the octonions only n <= 3 is a Jordan algebra, and the type
/// enforces that bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    tag: AlgebraTag,
    n: usize,
    diag: Vec<Scalar>,
    upper: Vec<CompElement>,
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // (0,1), (0,2), ..., (0,n-1), (1,2), ...
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl HermitianMatrix {
    pub fn new(
        tag: AlgebraTag,
        n: usize,
        diag: Vec<Scalar>,
        upper: Vec<CompElement>,
    ) -> Result<HermitianMatrix> {
        if tag.kind == AlgKind::O && n > 3 {
            return Err(AlgError::OctonionSize(n));
        }
        if diag.len() != n || upper.len() != n * (n - 1) / 2 {
            return Err(AlgError::Invalid("hermitian shape mismatch".into()));
        }
        for s in &diag {
            assert_eq!(s.context(), tag.ctx);
        }
        for u in &upper {
            assert_eq!(u.tag(), tag);
        }
        Ok(HermitianMatrix { tag, n, diag, upper })
    }

    pub fn zero(tag: AlgebraTag, n: usize) -> HermitianMatrix {
        HermitianMatrix::new(
            tag,
            n,
            vec![tag.ctx.zero(); n],
            vec![CompElement::zero(tag); n * (n - 1) / 2],
        )
        .expect("zero matrix is well-formed")
    }

    pub fn identity(tag: AlgebraTag, n: usize) -> HermitianMatrix {
        let mut m = HermitianMatrix::zero(tag, n);
        for i in 0..n {
            m.diag[i] = tag.ctx.one();
        }
        m
    }

    /// E_ii for a diagonal slot, or the hermitian unit carrying an algebra
    /// basis element at slot (i, j).
    pub fn standard_basis(tag: AlgebraTag, n: usize) -> Vec<HermitianMatrix> {
        let mut out = Vec::new();
        for i in 0..n {
            let mut m = HermitianMatrix::zero(tag, n);
            m.diag[i] = tag.ctx.one();
            out.push(m);
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..tag.dim() {
                    let mut m = HermitianMatrix::zero(tag, n);
                    m.upper[upper_index(n, i, j)] = CompElement::basis(tag, k);
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn diag(&self, i: usize) -> &Scalar {
        &self.diag[i]
    }

    pub fn upper(&self, i: usize, j: usize) -> &CompElement {
        &self.upper[upper_index(self.n, i, j)]
    }

    pub fn set_diag(&mut self, i: usize, v: Scalar) {
        assert_eq!(v.context(), self.tag.ctx);
        self.diag[i] = v;
    }

    pub fn set_upper(&mut self, i: usize, j: usize, v: CompElement) {
        assert_eq!(v.tag(), self.tag);
        self.upper[upper_index(self.n, i, j)] = v;
    }

    /// The full entry, with the lower triangle conjugated on the fly.
    pub fn entry(&self, i: usize, j: usize) -> CompElement {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => CompElement::scalar(self.tag, &self.diag[i]),
            Ordering::Less => self.upper[upper_index(self.n, i, j)].clone(),
            Ordering::Greater => self.upper[upper_index(self.n, j, i)].conj(),
        }
    }

    pub fn to_full(&self) -> Vec<Vec<CompElement>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Reads a full matrix back, validating hermitian symmetry and scalar
    /// diagonal.
    pub fn from_full(tag: AlgebraTag, full: &[Vec<CompElement>]) -> Result<HermitianMatrix> {
        let n = full.len();
        let one = CompElement::one(tag);
        let mut diag = Vec::with_capacity(n);
        for (i, row) in full.iter().enumerate() {
            if row.len() != n {
                return Err(AlgError::Invalid("ragged matrix".into()));
            }
            // diagonal entries must be scalar multiples of 1; the scalar
            // sits in the first coordinate for every algebra kind
            let e = &row[i];
            let s = e.coords()[0].clone();
            if *e != one.scale(&s) {
                return Err(AlgError::NotHermitian);
            }
            diag.push(s);
        }
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                if full[j][i] != full[i][j].conj() {
                    return Err(AlgError::NotHermitian);
                }
                upper.push(full[i][j].clone());
            }
        }
        HermitianMatrix::new(tag, n, diag, upper)
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|s| s.is_zero()) && self.upper.iter().all(|u| u.is_zero())
    }

    pub fn add(&self, other: &HermitianMatrix) -> HermitianMatrix {
        assert_eq!((self.tag, self.n), (other.tag, other.n));
        HermitianMatrix {
            tag: self.tag,
            n: self.n,
            diag: self.diag.iter().zip(&other.diag).map(|(a, b)| a.add(b)).collect(),
            upper: self.upper.iter().zip(&other.upper).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &HermitianMatrix) -> HermitianMatrix {
        assert_eq!((self.tag, self.n), (other.tag, other.n));
        HermitianMatrix {
            tag: self.tag,
            n: self.n,
            diag: self.diag.iter().zip(&other.diag).map(|(a, b)| a.sub(b)).collect(),
            upper: self.upper.iter().zip(&other.upper).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> HermitianMatrix {
        HermitianMatrix {
            tag: self.tag,
            n: self.n,
            diag: self.diag.iter().map(|a| a.mul(s)).collect(),
            upper: self.upper.iter().map(|a| a.scale(s)).collect(),
        }
    }

    /// Flat coordinates: the diagonal, then each upper entry in the fixed
    /// basis, slots ordered (0,1), (0,2), ..., (1,2), ...
    pub fn coords(&self) -> Vec<Scalar> {
        let mut out = self.diag.clone();
        for u in &self.upper {
            out.extend(u.coords().iter().cloned());
        }
        out
    }

    pub fn coord_dim(tag: AlgebraTag, n: usize) -> usize {
        n + tag.dim() * n * (n - 1) / 2
    }

    pub fn from_coords(tag: AlgebraTag, n: usize, coords: &[Scalar]) -> HermitianMatrix {
        assert_eq!(coords.len(), Self::coord_dim(tag, n));
        let d = tag.dim();
        let diag = coords[0..n].to_vec();
        let upper = (0..n * (n - 1) / 2)
            .map(|k| CompElement::from_coords(tag, coords[n + k * d..n + (k + 1) * d].to_vec()))
            .collect();
        HermitianMatrix::new(tag, n, diag, upper).expect("coords are well-formed")
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.tag.ctx.zero();
        for s in &self.diag {
            acc = acc.add(s);
        }
        acc
    }

    /// T(A, B) = sum_i A_ii B_ii + sum_{i<j} <A_ij, B_ij>. This is the
    /// unique reading for which T(Id, A) = tr(A) holds on the nose.
    pub fn trace_form(&self, other: &HermitianMatrix) -> Scalar {
        assert_eq!((self.tag, self.n), (other.tag, other.n));
        let mut acc = self.tag.ctx.zero();
        for (a, b) in self.diag.iter().zip(&other.diag) {
            acc = acc.add(&a.mul(b));
        }
        for (a, b) in self.upper.iter().zip(&other.upper) {
            acc = acc.add(&a.bilinear(b));
        }
        acc
    }

    pub fn proportional(&self, other: &HermitianMatrix) -> bool {
        proportional_coords(&self.coords(), &other.coords())
    }
}

fn full_mul(x: &[Vec<CompElement>], y: &[Vec<CompElement>]) -> Vec<Vec<CompElement>> {
    let n = x.len();
    let tag = x[0][0].tag();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = CompElement::zero(tag);
                    for k in 0..n {
                        acc = acc.add(&x[i][k].mul(&y[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// The quadratic operator U_A B. Entrywise ABA for associative algebras;
/// the cubic-norm route on H_3(O).
pub fn u_operator(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix> {
    assert_eq!((a.tag(), a.size()), (b.tag(), b.size()));
    let tag = a.tag();
    if tag.kind.is_associative() {
        let fa = a.to_full();
        let fb = b.to_full();
        let aba = full_mul(&full_mul(&fa, &fb), &fa);
        Ok(HermitianMatrix::from_full(tag, &aba)
            .expect("ABA of hermitian matrices is hermitian with scalar diagonal"))
    } else {
        if a.size() != 3 {
            return Err(AlgError::OctonionSize(a.size()));
        }
        let data = cubic_data(tag.kind);
        let ctx = tag.ctx;
        let ca = a.coords();
        let cb = b.coords();
        let sharp = data.eval_adjoint(ctx, &ca);
        let crossed = data.eval_cross(ctx, &sharp, &cb);
        let t = a.trace_form(b);
        let coords: Vec<Scalar> = ca
            .iter()
            .zip(&crossed)
            .map(|(ai, ci)| t.mul(ai).sub(ci))
            .collect();
        Ok(HermitianMatrix::from_coords(tag, 3, &coords))
    }
}

/// The cubic determinant (n = 3, any algebra).
pub fn det3(a: &HermitianMatrix) -> Result<Scalar> {
    if a.size() != 3 {
        return Err(AlgError::Invalid(format!("det3 needs n = 3, got {}", a.size())));
    }
    Ok(cubic_data(a.tag().kind).eval_det3(a.tag().ctx, &a.coords()))
}

/// The adjoint (sharp) map: the unique hermitian element with
/// T(A#, B) = D_B det3(A) for every B.
pub fn adjoint(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    if a.size() != 3 {
        return Err(AlgError::Invalid(format!("adjoint needs n = 3, got {}", a.size())));
    }
    let coords = cubic_data(a.tag().kind).eval_adjoint(a.tag().ctx, &a.coords());
    Ok(HermitianMatrix::from_coords(a.tag(), 3, &coords))
}

/// cross(A, B) = adjoint(A + B) - adjoint(A) - adjoint(B), evaluated from
/// the polarized tables.
pub fn cross(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix> {
    if a.size() != 3 || b.size() != 3 {
        return Err(AlgError::Invalid("cross needs n = 3".into()));
    }
    assert_eq!(a.tag(), b.tag());
    let coords = cubic_data(a.tag().kind).eval_cross(a.tag().ctx, &a.coords(), &b.coords());
    Ok(HermitianMatrix::from_coords(a.tag(), 3, &coords))
}

/// Directional derivative D_B det3(A), from the symbolic gradient.
pub fn det3_directional(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<Scalar> {
    if a.size() != 3 {
        return Err(AlgError::Invalid("directional derivative needs n = 3".into()));
    }
    let grad = cubic_data(a.tag().kind).eval_gradient(a.tag().ctx, &a.coords());
    let ctx = a.tag().ctx;
    let mut acc = ctx.zero();
    for (g, c) in grad.iter().zip(b.coords()) {
        acc = acc.add(&g.mul(&c));
    }
    Ok(acc)
}

/// Jordan rank one: U_A B = T(A, B) A for every B. Both sides are linear
/// in B, so checking the standard basis is complete.
pub fn jordan_rank_one(a: &HermitianMatrix) -> Result<bool> {
    if a.is_zero() {
        return Err(AlgError::ZeroInput);
    }
    for b in HermitianMatrix::standard_basis(a.tag(), a.size()) {
        let lhs = u_operator(a, &b)?;
        let rhs = a.scale(&a.trace_form(&b));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rank_one_or_zero(a: &HermitianMatrix) -> Result<bool> {
    if a.is_zero() {
        Ok(false)
    } else {
        jordan_rank_one(a)
    }
}

/// Residuals of the six order-3 minor equations: three scalar ones of the
/// shape a_ii a_jj - Q(a_ij) and three algebra-valued products. All zero
/// exactly on the rank-one variety (together with 0).
pub fn minor_residuals(a: &HermitianMatrix) -> Result<Vec<Scalar>> {
    if a.size() != 3 {
        return Err(AlgError::Invalid("minor equations need n = 3".into()));
    }
    let e = |i: usize, j: usize| a.entry(i, j);
    let mut out = Vec::new();
    out.push(a.diag(0).mul(a.diag(1)).sub(&e(0, 1).norm_q()));
    out.push(a.diag(0).mul(a.diag(2)).sub(&e(0, 2).norm_q()));
    out.push(a.diag(1).mul(a.diag(2)).sub(&e(1, 2).norm_q()));
    let scalar_mul = |s: &Scalar, x: &CompElement| x.scale(s);
    // a11 a23 = a21 a13, a32 a21 = a31 a22, a21 a33 = a23 a31
    let products = [
        scalar_mul(a.diag(0), &e(1, 2)).sub(&e(1, 0).mul(&e(0, 2))),
        e(2, 1).mul(&e(1, 0)).sub(&scalar_mul(a.diag(1), &e(2, 0))),
        scalar_mul(a.diag(2), &e(1, 0)).sub(&e(1, 2).mul(&e(2, 0))),
    ];
    for p in products {
        out.extend(p.coords().iter().cloned());
    }
    Ok(out)
}

/// Rank-one test by minors (n = 3): true iff all six displayed equations
/// vanish.
pub fn minors_rank_one_3(a: &HermitianMatrix) -> Result<bool> {
    if a.is_zero() {
        return Err(AlgError::ZeroInput);
    }
    Ok(minor_residuals(a)?.iter().all(|s| s.is_zero()))
}

/// The 27 scalar residuals of the quadric system cutting out the rank-one
/// variety of H_3(O) (zero included).
pub fn octonion_quadrics(a: &HermitianMatrix) -> Result<Vec<Scalar>> {
    if a.tag().kind != AlgKind::O {
        return Err(AlgError::UnsupportedAlgebra("quadric system concerns H_3(O)".into()));
    }
    minor_residuals(a)
}

/// The matrix of L_A : A^n -> A^n, z |-> (sum_u a_{t,u} z_u)_t, in the
/// coordinate basis. Only for associative algebras.
pub fn l_operator(a: &HermitianMatrix) -> Result<Matrix> {
    let tag = a.tag();
    if !tag.kind.is_associative() {
        return Err(AlgError::UnsupportedAlgebra("L_A rank theory needs associativity".into()));
    }
    let d = tag.dim();
    let n = a.size();
    let mut m = Matrix::zero(tag.ctx, n * d, n * d);
    for t in 0..n {
        for u in 0..n {
            let block = a.entry(t, u).mul_operator(Side::Left);
            for r in 0..d {
                for c in 0..d {
                    m.set(t * d + r, u * d + c, block.get(r, c).clone());
                }
            }
        }
    }
    Ok(m)
}

/// dim A divides rank L_A, and rank L_A = dim A exactly on the rank-one
/// elements.
pub fn l_rank_tests(a: &HermitianMatrix) -> Result<Report> {
    let d = a.tag().dim();
    let rank = l_operator(a)?.rank();
    let mut report = Report::new("l-operator-rank");
    report.push(CheckItem::assert(
        "dim A divides rank L_A",
        rank % d == 0,
        format!("rank {rank}"),
    ));
    report.push(CheckItem::assert(
        "rank L_A = dim A iff Jordan rank one",
        (rank == d) == rank_one_or_zero(a)?,
        format!("rank {rank}"),
    ));
    Ok(report)
}

/// A^2 = tr(A) A criterion (n = 3). A^2 is U_A applied to the unit.
pub fn square_test(a: &HermitianMatrix) -> Result<bool> {
    if a.size() != 3 {
        return Err(AlgError::Invalid("square criterion needs n = 3".into()));
    }
    if a.is_zero() {
        return Err(AlgError::ZeroInput);
    }
    let square = u_operator(a, &HermitianMatrix::identity(a.tag(), 3))?;
    Ok(square == a.scale(&a.trace()))
}

/// The generalized Veronese map z |-> (z_i conj(z_j)). Octonionic tuples
/// must generate an associative subalgebra; anything else is rejected
/// rather than silently producing a matrix outside the rank-one variety.
pub fn veronese(z: &[CompElement]) -> Result<HermitianMatrix> {
    let n = z.len();
    if n == 0 {
        return Err(AlgError::Invalid("empty tuple".into()));
    }
    let tag = z[0].tag();
    if tag.kind == AlgKind::O && !CompElement::generates_associative(z) {
        return Err(AlgError::NonAssociative);
    }
    let full: Vec<Vec<CompElement>> = (0..n)
        .map(|i| (0..n).map(|j| z[i].mul(&z[j].conj())).collect())
        .collect();
    HermitianMatrix::from_full(tag, &full)
}

/// Membership in the indeterminacy locus: the right-multiplication map
/// lambda |-> z.lambda fails to be injective. Associative algebras only.
pub fn indeterminacy_member(z: &[CompElement]) -> Result<bool> {
    let tag = z[0].tag();
    if !matches!(tag.kind, AlgKind::C | AlgKind::H) {
        return Err(AlgError::UnsupportedAlgebra(
            "indeterminacy locus is defined for C and H".into(),
        ));
    }
    Ok(tuple_right_mul_matrix(z).rank() < tag.dim())
}

/// Matrix of lambda |-> (z_t lambda)_t from A to A^n.
pub fn tuple_right_mul_matrix(z: &[CompElement]) -> Matrix {
    let tag = z[0].tag();
    let d = tag.dim();
    let n = z.len();
    let mut m = Matrix::zero(tag.ctx, n * d, d);
    for (t, zt) in z.iter().enumerate() {
        for i in 0..d {
            let img = zt.mul(&CompElement::basis(tag, i));
            for r in 0..d {
                m.set(t * d + r, i, img.coords()[r].clone());
            }
        }
    }
    m
}

/// The alternating-matrix realization of H_n(H): each quaternion entry z
/// becomes the 2x2 block J M(z) with M(z) the matrix of left
/// multiplication on R(e) in the basis {e, E21} (which is z itself) and
/// J = [[0,-1],[1,0]]. The result is alternating, the map is a linear
/// bijection onto alternating 2n x 2n matrices, and Jordan rank one
/// corresponds to matrix rank 2.
pub fn scorza_map(a: &HermitianMatrix) -> Result<Matrix> {
    let tag = a.tag();
    if tag.kind != AlgKind::H {
        return Err(AlgError::UnsupportedAlgebra("the alternating model concerns H".into()));
    }
    let ctx = tag.ctx;
    let n = a.size();
    let mut m = Matrix::zero(ctx, 2 * n, 2 * n);
    for t in 0..n {
        for u in 0..n {
            let z = a.entry(t, u);
            let c = z.coords();
            // J * [[z11, z12], [z21, z22]] = [[-z21, -z22], [z11, z12]]
            m.set(2 * t, 2 * u, c[2].neg());
            m.set(2 * t, 2 * u + 1, c[3].neg());
            m.set(2 * t + 1, 2 * u, c[0].clone());
            m.set(2 * t + 1, 2 * u + 1, c[1].clone());
        }
    }
    Ok(m)
}

/// Alternating in every characteristic: skew-symmetric with zero diagonal.
pub fn is_alternating(m: &Matrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    for i in 0..m.rows() {
        if !m.get(i, i).is_zero() {
            return false;
        }
        for j in i + 1..m.cols() {
            if *m.get(i, j) != m.get(j, i).neg() {
                return false;
            }
        }
    }
    true
}

/// Embeds H_n(H) into H_n(O) through the Cayley pair (z, 0).
pub fn embed_h_to_o(a: &HermitianMatrix) -> HermitianMatrix {
    assert_eq!(a.tag().kind, AlgKind::H);
    let otag = AlgebraTag::new(AlgKind::O, a.tag().ctx);
    let upper = (0..a.upper.len())
        .map(|k| {
            let mut coords = a.upper[k].coords().to_vec();
            coords.extend(vec![a.tag().ctx.zero(); 4]);
            CompElement::from_coords(otag, coords)
        })
        .collect();
    HermitianMatrix::new(otag, a.size(), a.diag.clone(), upper).expect("n <= 3 preserved")
}

/// Matrix-rank oracle for the associative models, independent of the
/// U-operator: usual rank of the underlying k-matrix (1 for R and C, 2
/// for the alternating model of H).
pub fn matrix_rank_oracle(a: &HermitianMatrix) -> Result<bool> {
    let tag = a.tag();
    let ctx = tag.ctx;
    let n = a.size();
    match tag.kind {
        AlgKind::R => {
            let m = Matrix::from_fn(ctx, n, n, |i, j| a.entry(i, j).coords()[0].clone());
            Ok(m.rank() == 1)
        }
        AlgKind::C => {
            // H_n(C) = M_n(k) through the e-components
            let m = Matrix::from_fn(ctx, n, n, |i, j| a.entry(i, j).coords()[0].clone());
            Ok(m.rank() == 1)
        }
        AlgKind::H => Ok(scorza_map(a)?.rank() == 2),
        AlgKind::O => Err(AlgError::UnsupportedAlgebra("no matrix rank over O".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::sample;
    use crate::verify::trial_rng;

    fn qctx() -> FieldContext {
        FieldContext::Rationals
    }

    fn tag(kind: AlgKind, ctx: FieldContext) -> AlgebraTag {
        AlgebraTag::new(kind, ctx)
    }

    fn elem(t: AlgebraTag, coords: &[i64]) -> CompElement {
        CompElement::from_coords(
            t,
            coords.iter().map(|&v| Scalar::from_i64(t.ctx, v)).collect(),
        )
    }

    fn diag3(t: AlgebraTag, r: [i64; 3]) -> HermitianMatrix {
        let mut m = HermitianMatrix::zero(t, 3);
        for i in 0..3 {
            m.set_diag(i, Scalar::from_i64(t.ctx, r[i]));
        }
        m
    }

    fn e11(t: AlgebraTag, n: usize) -> HermitianMatrix {
        let mut m = HermitianMatrix::zero(t, n);
        m.set_diag(0, t.ctx.one());
        m
    }

    #[test]
    fn trace_form_examples() {
        let t = tag(AlgKind::H, qctx());
        let id = HermitianMatrix::identity(t, 3);
        let mut rng = trial_rng(7, 0);
        let a = sample::hermitian(t, 3, 5, &mut rng);
        assert_eq!(id.trace_form(&a), a.trace());
        assert_eq!(e11(t, 3).trace_form(&e11(t, 3)), Scalar::from_i64(qctx(), 1));

        // single off-diagonal entry x: T(A, A) = 2 Q(x)
        let mut a = HermitianMatrix::zero(t, 3);
        let x = elem(t, &[1, 2, 3, 4]);
        a.set_upper(0, 1, x.clone());
        let two_q = Scalar::from_i64(qctx(), 2).mul(&x.norm_q());
        assert_eq!(a.trace_form(&a), two_q);
        // symmetry on random pairs
        let b = sample::hermitian(t, 3, 5, &mut rng);
        let c = sample::hermitian(t, 3, 5, &mut rng);
        assert_eq!(b.trace_form(&c), c.trace_form(&b));
    }

    #[test]
    fn u_operator_unit_and_e11_pattern() {
        for kind in [AlgKind::R, AlgKind::C, AlgKind::H, AlgKind::O] {
            let t = tag(kind, qctx());
            let id = HermitianMatrix::identity(t, 3);
            let mut rng = trial_rng(13, kind.dim() as u64);
            let a = sample::hermitian(t, 3, 4, &mut rng);
            assert_eq!(u_operator(&id, &a).unwrap(), a, "U_Id = identity map");
        }
        // U_A E11 = (a_{t,1} a_{1,u}) for associative entries
        let t = tag(AlgKind::H, qctx());
        let mut rng = trial_rng(14, 1);
        let a = sample::hermitian(t, 3, 4, &mut rng);
        let got = u_operator(&a, &e11(t, 3)).unwrap();
        let full = a.to_full();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(got.entry(i, j), full[i][0].mul(&full[0][j]));
            }
        }
    }

    #[test]
    fn det3_oracle_against_plain_determinants() {
        // R: det3 on H_3(R) is the symmetric-matrix determinant
        let tr = tag(AlgKind::R, qctx());
        let mut rng = trial_rng(21, 0);
        for _ in 0..50 {
            let a = sample::hermitian(tr, 3, 6, &mut rng);
            let m = Matrix::from_fn(qctx(), 3, 3, |i, j| a.entry(i, j).coords()[0].clone());
            assert_eq!(det3(&a).unwrap(), m.det());
        }
        // C: H_3(C) = M_3(k) via e-components, det3 = usual det
        let tc = tag(AlgKind::C, qctx());
        for _ in 0..50 {
            let a = sample::hermitian(tc, 3, 6, &mut rng);
            let m = Matrix::from_fn(qctx(), 3, 3, |i, j| a.entry(i, j).coords()[0].clone());
            assert_eq!(det3(&a).unwrap(), m.det());
        }
    }

    #[test]
    fn det3_examples() {
        let t = tag(AlgKind::O, qctx());
        let a = diag3(t, [2, 3, 5]);
        assert_eq!(det3(&a).unwrap(), Scalar::from_i64(qctx(), 30));
        assert!(det3(&HermitianMatrix::identity(t, 3)).unwrap().is_one());
    }

    #[test]
    fn det3_vanishes_on_veronese_images() {
        let t = tag(AlgKind::O, FieldContext::prime(5).unwrap());
        for trial in 0..100 {
            let mut rng = trial_rng(100, trial);
            let z = sample::embedded_quaternion_tuple(t, 3, 4, &mut rng);
            let a = veronese(&z).unwrap();
            assert!(det3(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn adjoint_examples() {
        for kind in [AlgKind::R, AlgKind::C, AlgKind::H, AlgKind::O] {
            let t = tag(kind, qctx());
            let a = diag3(t, [2, 3, 5]);
            assert_eq!(adjoint(&a).unwrap(), diag3(t, [15, 10, 6]));
            let id = HermitianMatrix::identity(t, 3);
            assert_eq!(adjoint(&id).unwrap(), id);
        }
    }

    #[test]
    fn adjoint_satisfies_its_defining_property() {
        // T(A#, B) = D_B det3(A) for every basis B
        let t = tag(AlgKind::O, qctx());
        let mut rng = trial_rng(31, 0);
        for _ in 0..20 {
            let a = sample::hermitian(t, 3, 4, &mut rng);
            let sharp = adjoint(&a).unwrap();
            for b in HermitianMatrix::standard_basis(t, 3) {
                assert_eq!(sharp.trace_form(&b), det3_directional(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn cross_is_the_polarization_of_adjoint() {
        for kind in [AlgKind::C, AlgKind::O] {
            let t = tag(kind, FieldContext::prime(7).unwrap());
            for trial in 0..100 {
                let mut rng = trial_rng(36 + kind.dim() as u64, trial);
                let a = sample::hermitian(t, 3, 5, &mut rng);
                let b = sample::hermitian(t, 3, 5, &mut rng);
                let lhs = cross(&a, &b).unwrap();
                let rhs = adjoint(&a.add(&b))
                    .unwrap()
                    .sub(&adjoint(&a).unwrap())
                    .sub(&adjoint(&b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn adjoint_of_adjoint() {
        for kind in [AlgKind::H, AlgKind::O] {
            let t = tag(kind, qctx());
            for trial in 0..200 {
                let mut rng = trial_rng(32 + kind.dim() as u64, trial);
                let a = sample::hermitian(t, 3, 3, &mut rng);
                let lhs = adjoint(&adjoint(&a).unwrap()).unwrap();
                let rhs = a.scale(&det3(&a).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn octonion_u_matches_quaternion_aba() {
        let th = tag(AlgKind::H, qctx());
        for trial in 0..100 {
            let mut rng = trial_rng(40, trial);
            let a = sample::hermitian(th, 3, 3, &mut rng);
            let b = sample::hermitian(th, 3, 3, &mut rng);
            let embedded = u_operator(&embed_h_to_o(&a), &embed_h_to_o(&b)).unwrap();
            let direct = embed_h_to_o(&u_operator(&a, &b).unwrap());
            assert_eq!(embedded, direct);
        }
    }

    #[test]
    fn fundamental_identity_on_operators() {
        // U_{U_A B} = U_A U_B U_A as operators, associative tags
        let t = tag(AlgKind::C, FieldContext::prime(7).unwrap());
        for trial in 0..50 {
            let mut rng = trial_rng(50, trial);
            let a = sample::hermitian(t, 3, 6, &mut rng);
            let b = sample::hermitian(t, 3, 6, &mut rng);
            let ab = u_operator(&a, &b).unwrap();
            for c in HermitianMatrix::standard_basis(t, 3) {
                let lhs = u_operator(&ab, &c).unwrap();
                let rhs = u_operator(&a, &u_operator(&b, &u_operator(&a, &c).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rank_one_examples() {
        let t = tag(AlgKind::H, qctx());
        assert!(jordan_rank_one(&e11(t, 3)).unwrap());
        assert!(!jordan_rank_one(&HermitianMatrix::identity(t, 3)).unwrap());
        assert_eq!(
            jordan_rank_one(&HermitianMatrix::zero(t, 3)),
            Err(AlgError::ZeroInput)
        );
    }

    #[test]
    fn basis_check_of_rank_one_extends_to_random_b() {
        // both sides of U_A B = T(A,B) A are linear in B, so the basis
        // check is complete; spot-check against non-basis B anyway
        let f5 = FieldContext::prime(5).unwrap();
        for kind in [AlgKind::H, AlgKind::O] {
            let t = tag(kind, f5);
            for trial in 0..100 {
                let mut rng = trial_rng(95 + kind.dim() as u64, trial);
                // mix genuine rank-one elements with arbitrary ones
                let a = if trial % 2 == 0 && kind == AlgKind::O {
                    veronese(&sample::embedded_quaternion_tuple(t, 3, 4, &mut rng)).unwrap()
                } else {
                    sample::nonzero_hermitian(t, 3, 4, &mut rng)
                };
                if a.is_zero() {
                    continue;
                }
                let rank_one = jordan_rank_one(&a).unwrap();
                let b = sample::hermitian(t, 3, 4, &mut rng);
                let identity_holds =
                    u_operator(&a, &b).unwrap() == a.scale(&a.trace_form(&b));
                if rank_one {
                    assert!(identity_holds, "{kind:?} trial {trial}");
                }
            }
        }
    }

    #[test]
    fn rank_one_agrees_with_matrix_rank_oracle_exhaustive_c_f2() {
        let f2 = FieldContext::prime(2).unwrap();
        let t = tag(AlgKind::C, f2);
        let dim = HermitianMatrix::coord_dim(t, 3);
        assert_eq!(dim, 9);
        for code in 1u32..(1 << dim) {
            let coords: Vec<Scalar> = (0..dim)
                .map(|i| Scalar::from_i64(f2, ((code >> i) & 1) as i64))
                .collect();
            let a = HermitianMatrix::from_coords(t, 3, &coords);
            assert_eq!(
                jordan_rank_one(&a).unwrap(),
                matrix_rank_oracle(&a).unwrap(),
                "disagreement at code {code}"
            );
        }
    }

    #[test]
    fn minors_examples_and_agreement() {
        let t = tag(AlgKind::O, qctx());
        assert!(minors_rank_one_3(&e11(t, 3)).unwrap());
        // isotropic block [[0, conj a], [a, 0]] padded to 3x3
        let a_el = elem(t, &[1, 0, 0, 0, 0, 0, 0, 0]);
        assert!(a_el.norm_q().is_zero());
        let mut m = HermitianMatrix::zero(t, 3);
        m.set_upper(0, 1, a_el.conj());
        assert!(minors_rank_one_3(&m).unwrap());
        assert!(jordan_rank_one(&m).unwrap());

        let f5 = FieldContext::prime(5).unwrap();
        let t5 = tag(AlgKind::H, f5);
        for trial in 0..500 {
            let mut rng = trial_rng(60, trial);
            let a = sample::nonzero_hermitian(t5, 3, 4, &mut rng);
            assert_eq!(minors_rank_one_3(&a).unwrap(), jordan_rank_one(&a).unwrap());
        }
    }

    #[test]
    fn non_scalar_diagonals_are_rejected_by_construction() {
        // the L_A rank theory needs hermitian matrices; a zero-divisor
        // diagonal like diag(z, 0, 0) cannot even be represented
        let t = tag(AlgKind::H, qctx());
        let z = elem(t, &[0, 1, 0, 0]);
        let mut full = HermitianMatrix::zero(t, 3).to_full();
        full[0][0] = z;
        assert_eq!(HermitianMatrix::from_full(t, &full), Err(AlgError::NotHermitian));
    }

    #[test]
    fn l_operator_examples() {
        let t = tag(AlgKind::H, qctx());
        let a = e11(t, 3);
        let l = l_operator(&a).unwrap();
        assert_eq!(l.rank(), 4);
        assert!(l_rank_tests(&a).unwrap().all_pass());
        let to = tag(AlgKind::O, qctx());
        assert!(l_operator(&HermitianMatrix::zero(to, 3)).is_err());

        let f3 = FieldContext::prime(3).unwrap();
        let t3 = tag(AlgKind::H, f3);
        for trial in 0..300 {
            let mut rng = trial_rng(61, trial);
            let a = sample::hermitian(t3, 3, 2, &mut rng);
            let rep = l_rank_tests(&a).unwrap();
            assert!(rep.all_pass(), "{}", rep.render());
        }
    }

    #[test]
    fn square_test_examples() {
        let t = tag(AlgKind::O, qctx());
        assert!(square_test(&e11(t, 3)).unwrap());
        assert!(!square_test(&HermitianMatrix::identity(t, 3)).unwrap());
        // over F_3 the trace of the identity vanishes but Id is nonzero
        let f3 = FieldContext::prime(3).unwrap();
        let t3 = tag(AlgKind::O, f3);
        assert!(!square_test(&HermitianMatrix::identity(t3, 3)).unwrap());
    }

    #[test]
    fn square_criterion_char2_exception_at_identity() {
        // tr(Id) = 3 = 1 over F_2, so Id^2 = tr(Id) Id holds there even
        // though Id is not rank one: the square criterion is genuinely
        // weaker in characteristic 2, at exactly this element.
        let f2 = FieldContext::prime(2).unwrap();
        for kind in [AlgKind::C, AlgKind::H, AlgKind::O] {
            let id = HermitianMatrix::identity(tag(kind, f2), 3);
            assert!(square_test(&id).unwrap());
            assert!(!jordan_rank_one(&id).unwrap());
        }
    }

    #[test]
    fn veronese_examples() {
        let t = tag(AlgKind::H, qctx());
        let z = vec![
            CompElement::one(t),
            CompElement::zero(t),
            CompElement::zero(t),
        ];
        assert_eq!(veronese(&z).unwrap(), e11(t, 3));

        // scaling: nu2(z . lambda) = Q(lambda) nu2(z)
        let mut rng = trial_rng(70, 0);
        for _ in 0..100 {
            let z: Vec<CompElement> = (0..3).map(|_| sample::comp_element(t, 3, &mut rng)).collect();
            let lambda = sample::comp_element(t, 3, &mut rng);
            let scaled: Vec<CompElement> = z.iter().map(|v| v.mul(&lambda)).collect();
            assert_eq!(
                veronese(&scaled).unwrap(),
                veronese(&z).unwrap().scale(&lambda.norm_q())
            );
        }

        // rank one on associative tags away from the indeterminacy locus
        let f5 = FieldContext::prime(5).unwrap();
        for kind in [AlgKind::C, AlgKind::H] {
            let tk = tag(kind, f5);
            for trial in 0..500 {
                let mut rng = trial_rng(71, trial);
                let z: Vec<CompElement> =
                    (0..3).map(|_| sample::comp_element(tk, 4, &mut rng)).collect();
                if indeterminacy_member(&z).unwrap() {
                    continue;
                }
                let a = veronese(&z).unwrap();
                assert!(jordan_rank_one(&a).unwrap());
            }
        }
    }

    #[test]
    fn veronese_rejects_non_associative_triples() {
        let t = tag(AlgKind::O, qctx());
        // (E12, 0), (0, E11), (E21, 0): the associator is (0, -E11)
        let x = elem(t, &[0, 1, 0, 0, 0, 0, 0, 0]);
        let y = elem(t, &[0, 0, 0, 0, 1, 0, 0, 0]);
        let z = elem(t, &[0, 0, 1, 0, 0, 0, 0, 0]);
        assert!(!CompElement::associator(&x, &y, &z).is_zero());
        assert!(!CompElement::generates_associative(&[x.clone(), y.clone(), z.clone()]));
        assert_eq!(veronese(&[x, y, z]), Err(AlgError::NonAssociative));
    }

    #[test]
    fn indeterminacy_examples() {
        let t = tag(AlgKind::H, qctx());
        let one_zero = vec![CompElement::one(t), CompElement::zero(t)];
        assert!(!indeterminacy_member(&one_zero).unwrap());
        let e = elem(t, &[1, 0, 0, 0]);
        assert!(indeterminacy_member(&[e, CompElement::zero(t)]).unwrap());
        // fibers: all Q(lambda) != 0 right-translates map to proportional images
        let f7 = FieldContext::prime(7).unwrap();
        let t7 = tag(AlgKind::H, f7);
        for trial in 0..200 {
            let mut rng = trial_rng(80, trial);
            let z: Vec<CompElement> = (0..2).map(|_| sample::comp_element(t7, 6, &mut rng)).collect();
            if indeterminacy_member(&z).unwrap() {
                continue;
            }
            let lambda = sample::comp_element(t7, 6, &mut rng);
            if lambda.norm_q().is_zero() {
                continue;
            }
            let scaled: Vec<CompElement> = z.iter().map(|v| v.mul(&lambda)).collect();
            assert!(veronese(&scaled).unwrap().proportional(&veronese(&z).unwrap()));
        }
    }

    #[test]
    fn scorza_examples() {
        let t = tag(AlgKind::H, qctx());
        // E11 maps to a single alternating block of rank 2
        let m = scorza_map(&e11(t, 2)).unwrap();
        assert!(is_alternating(&m));
        assert_eq!(m.rank(), 2);

        // linear bijection: the images of a basis of H_2(H) span the
        // 6-dimensional space of alternating 4x4 matrices
        let basis = HermitianMatrix::standard_basis(t, 2);
        assert_eq!(basis.len(), 6);
        let mut rows = Vec::new();
        for b in &basis {
            let img = scorza_map(&b).unwrap();
            assert!(is_alternating(&img));
            let mut row = Vec::new();
            for i in 0..4 {
                for j in 0..4 {
                    row.push(img.get(i, j).clone());
                }
            }
            rows.push(row);
        }
        assert_eq!(Matrix::from_rows(qctx(), rows).rank(), 6);
    }

    #[test]
    fn scorza_rank_correspondence_exhaustive_f2() {
        let f2 = FieldContext::prime(2).unwrap();
        let t = tag(AlgKind::H, f2);
        let dim = HermitianMatrix::coord_dim(t, 2);
        assert_eq!(dim, 6);
        for code in 1u32..(1 << dim) {
            let coords: Vec<Scalar> = (0..dim)
                .map(|i| Scalar::from_i64(f2, ((code >> i) & 1) as i64))
                .collect();
            let a = HermitianMatrix::from_coords(t, 2, &coords);
            let rank2 = scorza_map(&a).unwrap().rank() == 2;
            assert_eq!(jordan_rank_one(&a).unwrap(), rank2);
        }
    }

    #[test]
    fn quadrics_examples() {
        let t = tag(AlgKind::O, qctx());
        assert!(octonion_quadrics(&e11(t, 3)).unwrap().iter().all(|s| s.is_zero()));
        let id = HermitianMatrix::identity(t, 3);
        let res = octonion_quadrics(&id).unwrap();
        assert_eq!(res[0], Scalar::from_i64(qctx(), 1));
        assert!(res.iter().any(|s| !s.is_zero()));
    }

    #[test]
    fn sum_of_two_rank_ones_has_vanishing_det3() {
        let f5 = FieldContext::prime(5).unwrap();
        let t = tag(AlgKind::O, f5);
        for trial in 0..200 {
            let mut rng = trial_rng(90, trial);
            let a = veronese(&sample::embedded_quaternion_tuple(t, 3, 4, &mut rng)).unwrap();
            let b = veronese(&sample::embedded_quaternion_tuple(t, 3, 4, &mut rng)).unwrap();
            assert!(det3(&a.add(&b)).unwrap().is_zero());
        }
    }
}
