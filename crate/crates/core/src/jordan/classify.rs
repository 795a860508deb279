//! Classification of the rank-one points of H_3(O) into the two classes:
//! X1, the Veronese images of triples generating an associative
//! subalgebra, and X0, the matrices built from a null plane (a
//! 2-dimensional trace-zero subalgebra whose product vanishes
//! identically). The two classes are disjoint: an X0 matrix has no
//! Veronese preimage at all.

use super::{octonion_quadrics, veronese, HermitianMatrix};
use crate::compalg::{AlgKind, AlgebraTag, CompElement};
use crate::error::{AlgError, Result};
use crate::field::{FieldContext, Scalar};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankOneClass {
    /// Witnessed by a basis of the null plane spanned by the entries.
    X0 { plane: (CompElement, CompElement) },
    /// Witnessed by a triple with nu2(witness) proportional to the input.
    X1 { witness: Vec<CompElement> },
}

/// Follows the structure of the rank-one variety: a nonzero diagonal
/// entry yields a column witness; a pairing against some B with
/// T(A, B) != 0 yields a two-column witness; otherwise the off-diagonal
/// entries span a null subalgebra of dimension 1 (still X1, through a
/// quaternion subalgebra) or 2 (X0).
pub fn classify_rank_one_octonion(a: &HermitianMatrix) -> Result<RankOneClass> {
    let tag = a.tag();
    if tag.kind != AlgKind::O || a.size() != 3 {
        return Err(AlgError::UnsupportedAlgebra("classification concerns H_3(O)".into()));
    }
    if a.is_zero() {
        return Err(AlgError::ZeroInput);
    }
    if !octonion_quadrics(a)?.iter().all(|s| s.is_zero()) {
        return Err(AlgError::NotRankOne);
    }

    // Case 1: some diagonal entry is nonzero; column i is a witness since
    // a_{t,i} a_{i,u} = a_ii a_{t,u} on the quadric locus.
    if let Some(i) = (0..3).find(|&i| !a.diag(i).is_zero()) {
        let witness: Vec<CompElement> = (0..3).map(|t| a.entry(t, i)).collect();
        return finish_x1(a, witness);
    }

    // Case 2: vanishing diagonal but some off-diagonal entry pairs
    // nontrivially with 1, i.e. re(a_ij) != 0. The two-column combination
    // z_t = a_{t,i} + a_{t,j} x with x = 1 reconstructs a preimage.
    for i in 0..3 {
        for j in i + 1..3 {
            if !a.upper(i, j).re().is_zero() {
                let one = CompElement::one(tag);
                return finish_x1(a, two_column_witness(a, i, j, &one));
            }
        }
    }

    // Case 3: trace-zero entries a = A_21, b = A_31, c = A_32 with all
    // products vanishing; their span decides the class.
    let lower = [a.entry(1, 0), a.entry(2, 0), a.entry(2, 1)];
    let ctx = tag.ctx;
    let span = Subspace::from_rows(
        ctx,
        8,
        lower.iter().map(|x| x.coords().to_vec()).collect(),
    );
    match span.dim() {
        2 => {
            let rows = span.basis_rows();
            let p = CompElement::from_coords(tag, rows[0].clone());
            let q = CompElement::from_coords(tag, rows[1].clone());
            debug_assert!(null_plane_ok(&p, &q));
            Ok(RankOneClass::X0 { plane: (p, q) })
        }
        1 => {
            // all entries are multiples of one isotropic octonion; pick a
            // pair (i, j) with a nonzero entry and an x pairing with it
            let (i, j) = [(0usize, 1usize), (0, 2), (1, 2)]
                .into_iter()
                .find(|&(i, j)| !a.upper(i, j).is_zero())
                .expect("nonzero matrix with zero diagonal has an off-diagonal entry");
            let entry = a.upper(i, j);
            let x = CompElement::basis_all(tag)
                .into_iter()
                .find(|x| !entry.bilinear(x).is_zero())
                .expect("the norm pairing is nondegenerate");
            finish_x1(a, two_column_witness(a, i, j, &x))
        }
        d => Err(AlgError::Invalid(format!(
            "quadric locus violation: null span has dimension {d}"
        ))),
    }
}

fn two_column_witness(a: &HermitianMatrix, i: usize, j: usize, x: &CompElement) -> Vec<CompElement> {
    (0..3)
        .map(|t| a.entry(t, i).add(&a.entry(t, j).mul(x)))
        .collect()
}

fn finish_x1(a: &HermitianMatrix, witness: Vec<CompElement>) -> Result<RankOneClass> {
    let image = veronese(&witness)?;
    if image.is_zero() || !image.proportional(a) {
        return Err(AlgError::Invalid(
            "rank-one witness reconstruction failed".into(),
        ));
    }
    Ok(RankOneClass::X1 { witness })
}

/// All products on the plane vanish: both elements are isotropic with
/// zero trace and annihilate each other on both sides.
pub fn null_plane_ok(p: &CompElement, q: &CompElement) -> bool {
    for x in [p, q] {
        if !x.norm_q().is_zero() || !x.re().is_zero() {
            return false;
        }
    }
    p.mul(q).is_zero() && q.mul(p).is_zero() && p.mul(p).is_zero() && q.mul(q).is_zero()
}

/// The X0 matrix built from three octonions spanning a null plane.
pub fn x0_matrix(tag: AlgebraTag, a: &CompElement, b: &CompElement, c: &CompElement) -> HermitianMatrix {
    let mut m = HermitianMatrix::zero(tag, 3);
    m.set_upper(0, 1, a.conj());
    m.set_upper(0, 2, b.conj());
    m.set_upper(1, 2, c.conj());
    m
}

/// Exhaustive search for a null plane over a small prime field: scan
/// nonzero trace-zero isotropic a, then pick an independent b in
/// ker L_a ∩ ker R_a ∩ {re = 0} with Q(b) = 0.
pub fn find_null_plane(ctx: FieldContext) -> Option<(CompElement, CompElement)> {
    let p = ctx.characteristic();
    assert!(p > 0 && p.pow(8) < 1 << 40, "null plane search is desk-scale");
    let tag = AlgebraTag::new(AlgKind::O, ctx);
    let total = p.pow(8);
    for code in 1..total {
        let a = decode_octonion(tag, code, p);
        if !a.norm_q().is_zero() || !a.re().is_zero() {
            continue;
        }
        use crate::compalg::Side;
        let la = a.mul_operator(Side::Left).kernel();
        let ra = a.mul_operator(Side::Right).kernel();
        let re_zero = re_zero_subspace(tag);
        let Ok(meet) = la.intersect(&ra).and_then(|s| s.intersect(&re_zero)) else {
            continue;
        };
        // enumerate the intersection for an element independent of a
        let dim = meet.dim();
        let rows = meet.basis_rows();
        let count = p.pow(dim as u32);
        for sel in 1..count {
            let mut coords = vec![ctx.zero(); 8];
            let mut s = sel;
            for row in &rows {
                let c = Scalar::from_i64(ctx, (s % p) as i64);
                s /= p;
                for (k, r) in row.iter().enumerate() {
                    coords[k] = coords[k].add(&c.mul(r));
                }
            }
            let b = CompElement::from_coords(tag, coords);
            if b.is_zero() || !b.norm_q().is_zero() || b.proportional(&a) {
                continue;
            }
            if null_plane_ok(&a, &b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn re_zero_subspace(tag: AlgebraTag) -> Subspace {
    // kernel of x -> <x, 1> as a 1 x 8 matrix
    let one = CompElement::one(tag);
    let row: Vec<Scalar> = CompElement::basis_all(tag)
        .iter()
        .map(|b| b.bilinear(&one))
        .collect();
    Matrix::from_rows(tag.ctx, vec![row]).kernel()
}

pub fn decode_octonion(tag: AlgebraTag, code: u64, p: u64) -> CompElement {
    let mut coords = Vec::with_capacity(8);
    let mut c = code;
    for _ in 0..8 {
        coords.push(Scalar::from_i64(tag.ctx, (c % p) as i64));
        c /= p;
    }
    CompElement::from_coords(tag, coords)
}

/// Does nu2 have any preimage at all (no associativity demanded)?
/// Exhaustive over F_p via linear elimination: scan z1 with
/// Q(z1) = a_11, solve the linear systems z1 conj(z2) = A_12 and
/// z1 conj(z3) = A_13, and match the survivors against A_23.
pub fn nu2_preimage_exists(a: &HermitianMatrix) -> Result<bool> {
    let tag = a.tag();
    let ctx = tag.ctx;
    let p = ctx.characteristic();
    if p == 0 || p > 3 || tag.kind != AlgKind::O || a.size() != 3 {
        return Err(AlgError::ScaleGuard(
            "preimage sweep is exhaustive only over F_2 and F_3".into(),
        ));
    }
    let total = p.pow(8);
    for code in 0..total {
        let z1 = decode_octonion(tag, code, p);
        if z1.norm_q() != *a.diag(0) {
            continue;
        }
        let Some(z2s) = solve_conj_products(&[(z1.clone(), a.entry(0, 1))], a.diag(1).clone(), p)
        else {
            continue;
        };
        for z2 in &z2s {
            let constraints = [(z1.clone(), a.entry(0, 2)), (z2.clone(), a.entry(1, 2))];
            if let Some(z3s) = solve_conj_products(&constraints, a.diag(2).clone(), p) {
                if !z3s.is_empty() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// All w with z_i conj(w) = rhs_i for every listed pair and Q(w) = q.
fn solve_conj_products(
    constraints: &[(CompElement, CompElement)],
    q: Scalar,
    p: u64,
) -> Option<Vec<CompElement>> {
    let tag = constraints[0].0.tag();
    let ctx = tag.ctx;
    // stack the linear maps w -> z_i conj(w) into an (8k x 8) system
    let k = constraints.len();
    let mut m = Matrix::zero(ctx, 8 * k, 8);
    let mut rhs = Vec::with_capacity(8 * k);
    for (ci, (z, target)) in constraints.iter().enumerate() {
        rhs.extend(target.coords().iter().cloned());
        for col in 0..8 {
            let img = z.mul(&CompElement::basis(tag, col).conj());
            for r in 0..8 {
                m.set(ci * 8 + r, col, img.coords()[r].clone());
            }
        }
    }
    let particular = m.solve(&rhs)?;
    let kernel = m.kernel();
    let dim = kernel.dim();
    let count = p.pow(dim as u32);
    let rows_k = kernel.basis_rows();
    let mut out = Vec::new();
    for sel in 0..count {
        let mut coords = particular.clone();
        let mut s = sel;
        for row in &rows_k {
            let c = Scalar::from_i64(ctx, (s % p) as i64);
            s /= p;
            for (kk, r) in row.iter().enumerate() {
                coords[kk] = coords[kk].add(&c.mul(r));
            }
        }
        let w = CompElement::from_coords(tag, coords);
        if w.norm_q() == q {
            out.push(w);
        }
    }
    Some(out)
}

/// Finds a pair z of octonions and an invertible lambda over F_3 with
/// nu2(z . lambda) defined but NOT proportional to nu2(z): right scaling
/// does not descend projectively once associativity is gone. Pairs always
/// generate associative subalgebras, so both images are defined.
pub fn zak_scaling_failure(ctx: FieldContext) -> Option<(Vec<CompElement>, CompElement)> {
    let p = ctx.characteristic();
    assert!(p > 0 && p <= 3);
    let tag = AlgebraTag::new(AlgKind::O, ctx);
    let quat = p.pow(4);
    let total = p.pow(8);
    for c1 in 0..quat {
        // quaternion-embedded z1 (Cayley pair (A, 0))
        let z1 = decode_octonion(tag, c1, p);
        for c2 in 0..quat {
            let z2 = decode_octonion(tag, c2, p);
            let z = vec![z1.clone(), z2.clone()];
            let base = veronese(&z).expect("pairs are associative");
            if base.is_zero() {
                continue;
            }
            for lc in 0..total {
                let lambda = decode_octonion(tag, lc, p);
                if lambda.norm_q().is_zero() {
                    continue;
                }
                let scaled: Vec<CompElement> = z.iter().map(|v| v.mul(&lambda)).collect();
                let image = veronese(&scaled).expect("pairs are associative");
                if !image.proportional(&base) {
                    return Some((z, lambda));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::verify::trial_rng;

    fn qtag() -> AlgebraTag {
        AlgebraTag::new(AlgKind::O, FieldContext::Rationals)
    }

    fn elem(t: AlgebraTag, coords: &[i64]) -> CompElement {
        CompElement::from_coords(
            t,
            coords.iter().map(|&v| Scalar::from_i64(t.ctx, v)).collect(),
        )
    }

    #[test]
    fn veronese_images_classify_as_x1() {
        let t = qtag();
        let mut rng = trial_rng(200, 0);
        for _ in 0..100 {
            let mut z = sample::embedded_quaternion_tuple(t, 3, 3, &mut rng);
            z[0] = CompElement::one(t);
            let a = veronese(&z).unwrap();
            match classify_rank_one_octonion(&a).unwrap() {
                RankOneClass::X1 { witness } => {
                    assert!(veronese(&witness).unwrap().proportional(&a));
                }
                RankOneClass::X0 { .. } => panic!("veronese image classified as X0"),
            }
        }
    }

    #[test]
    fn scalar_multiples_of_one_isotropic_octonion_are_x1() {
        let t = qtag();
        // w = E12 Cayley-paired with 0: isotropic with re = 0
        let w = elem(t, &[0, 1, 0, 0, 0, 0, 0, 0]);
        let two = Scalar::from_i64(t.ctx, 2);
        let a = x0_matrix(t, &w, &w.scale(&two), &w);
        match classify_rank_one_octonion(&a).unwrap() {
            RankOneClass::X1 { witness } => {
                assert!(veronese(&witness).unwrap().proportional(&a));
            }
            RankOneClass::X0 { .. } => panic!("rank-one span of dimension 1 must be X1"),
        }
    }

    #[test]
    fn null_plane_matrices_are_x0_and_have_no_preimage() {
        let t = qtag();
        // the standard null plane: (E12, 0) and (0, E12)
        let p1 = elem(t, &[0, 1, 0, 0, 0, 0, 0, 0]);
        let p2 = elem(t, &[0, 0, 0, 0, 0, 1, 0, 0]);
        assert!(null_plane_ok(&p1, &p2));
        let a = x0_matrix(t, &p1, &p2, &p1.add(&p2));
        assert!(octonion_quadrics(&a).unwrap().iter().all(|s| s.is_zero()));
        match classify_rank_one_octonion(&a).unwrap() {
            RankOneClass::X0 { plane } => {
                assert!(null_plane_ok(&plane.0, &plane.1));
            }
            RankOneClass::X1 { .. } => panic!("null-plane matrix classified as X1"),
        }

        // over F_3 the same matrix provably has no Veronese preimage
        let f3 = FieldContext::prime(3).unwrap();
        let t3 = AlgebraTag::new(AlgKind::O, f3);
        let q1 = elem(t3, &[0, 1, 0, 0, 0, 0, 0, 0]);
        let q2 = elem(t3, &[0, 0, 0, 0, 0, 1, 0, 0]);
        let a3 = x0_matrix(t3, &q1, &q2, &q1.add(&q2));
        assert!(!nu2_preimage_exists(&a3).unwrap());
        // while a veronese image of course has one
        let img = veronese(&[CompElement::one(t3), q1, CompElement::zero(t3)]).unwrap();
        assert!(nu2_preimage_exists(&img).unwrap());
    }

    #[test]
    fn classification_rejects_non_rank_one() {
        let t = qtag();
        let id = HermitianMatrix::identity(t, 3);
        assert_eq!(classify_rank_one_octonion(&id), Err(AlgError::NotRankOne));
        let z = HermitianMatrix::zero(t, 3);
        assert_eq!(classify_rank_one_octonion(&z), Err(AlgError::ZeroInput));
    }

    #[test]
    fn null_plane_search_finds_witness_over_f3() {
        let f3 = FieldContext::prime(3).unwrap();
        let (a, b) = find_null_plane(f3).expect("null plane exists over F_3");
        assert!(null_plane_ok(&a, &b));
        assert!(!a.proportional(&b));
    }

    #[test]
    fn zak_scaling_failure_exists_over_f3() {
        let f3 = FieldContext::prime(3).unwrap();
        let (z, lambda) = zak_scaling_failure(f3).expect("scaling failure witness exists");
        assert!(!lambda.norm_q().is_zero());
        let base = veronese(&z).unwrap();
        let scaled: Vec<CompElement> = z.iter().map(|v| v.mul(&lambda)).collect();
        assert!(!veronese(&scaled).unwrap().proportional(&base));
    }
}
