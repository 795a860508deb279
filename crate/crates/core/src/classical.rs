//! The classical matrix models of the hermitian Jordan algebras:
//! symmetric matrices (a = 1), all matrices (a = 2), and alternating
//! matrices of even size (a = 4), with the twisted quadratic product
//! U_A B = A I^{-1} B I^{-1} A around an invertible base point I.
//!
//! The base point is the identity for a = 1, 2 and the block-diagonal
//! matrix with 2x2 blocks [[0,-1],[1,0]] for a = 4; that sign convention
//! is fixed repo-wide and matches the alternating realization of H_n(H)
//! in [`crate::jordan::scorza_map`].
//!
//! Trace form: T(A, B) = tr(A I^{-1} B I^{-1}), so that T(I, .) is the
//! Jordan trace. Structure-group candidates are validated through the
//! operator identity R(g.A) = g o R(A) o g^t (transpose taken against T),
//! never assumed.

use crate::error::{AlgError, Result};
use crate::field::{FieldContext, Scalar};
use crate::linalg::Matrix;
use crate::verify::{CheckItem, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Symmetric,
    Full,
    Alternating,
}

impl ModelKind {
    pub fn a_value(&self) -> usize {
        match self {
            ModelKind::Symmetric => 1,
            ModelKind::Full => 2,
            ModelKind::Alternating => 4,
        }
    }

    pub fn from_a(a: usize) -> Result<ModelKind> {
        Ok(match a {
            1 => ModelKind::Symmetric,
            2 => ModelKind::Full,
            4 => ModelKind::Alternating,
            _ => return Err(AlgError::Invalid(format!("a must be 1, 2 or 4, got {a}"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassicalModel {
    pub kind: ModelKind,
    pub n: usize,
    pub ctx: FieldContext,
    base_point: Matrix,
    base_inv: Matrix,
    /// Integer Gram matrix of the Jordan trace form on the carrier basis.
    gram_int: Vec<Vec<i64>>,
}

/// Structure-group candidates: a single invertible g for a = 1, 4 acting
/// by A -> g A g^t, a pair (g, h) for a = 2 acting by A -> g A h^t.
#[derive(Clone, Debug)]
pub enum GroupElement {
    Single(Matrix),
    Pair(Matrix, Matrix),
}

impl ClassicalModel {
    pub fn new(kind: ModelKind, n: usize, ctx: FieldContext) -> ClassicalModel {
        let base_point = Self::base_point_for(kind, n, ctx);
        let base_inv = base_point.inverse().expect("base point is invertible");
        let gram_int = Self::integral_gram(kind, n);
        ClassicalModel { kind, n, ctx, base_point, base_inv, gram_int }
    }

    fn base_point_for(kind: ModelKind, n: usize, ctx: FieldContext) -> Matrix {
        match kind {
            ModelKind::Symmetric | ModelKind::Full => Matrix::identity(ctx, n),
            ModelKind::Alternating => {
                let mut m = Matrix::zero(ctx, 2 * n, 2 * n);
                for b in 0..n {
                    m.set(2 * b, 2 * b + 1, ctx.one().neg());
                    m.set(2 * b + 1, 2 * b, ctx.one());
                }
                m
            }
        }
    }

    /// The trace form is (1/2) tr(A I^{-1} B I^{-1}) for the alternating
    /// model (the block structure doubles every diagonal contribution)
    /// and the plain tr(AB) otherwise. The halved form still has integer
    /// values on the integral carrier basis, so it is computed once over
    /// Q and stored as an integer Gram matrix, which makes the form
    /// available verbatim in characteristic 2.
    fn integral_gram(kind: ModelKind, n: usize) -> Vec<Vec<i64>> {
        let q = FieldContext::Rationals;
        let proto = {
            let base_point = Self::base_point_for(kind, n, q);
            let base_inv = base_point.inverse().unwrap();
            ClassicalModel { kind, n, ctx: q, base_point, base_inv, gram_int: Vec::new() }
        };
        let basis = proto.carrier_basis();
        let half = Scalar::from_fraction(1, 2).unwrap();
        basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        let m = a.mul(&proto.base_inv).mul(b).mul(&proto.base_inv);
                        let mut tr = q.zero();
                        for i in 0..m.rows() {
                            tr = tr.add(m.get(i, i));
                        }
                        let value = match kind {
                            ModelKind::Symmetric | ModelKind::Full => tr,
                            ModelKind::Alternating => tr.mul(&half),
                        };
                        value
                            .to_integer_lift()
                            .expect("trace-form Gram matrix is integral")
                    })
                    .collect()
            })
            .collect()
    }

    /// Side length of the carrier matrices.
    pub fn matrix_size(&self) -> usize {
        match self.kind {
            ModelKind::Symmetric | ModelKind::Full => self.n,
            ModelKind::Alternating => 2 * self.n,
        }
    }

    pub fn base_point(&self) -> &Matrix {
        &self.base_point
    }

    pub fn in_carrier(&self, m: &Matrix) -> bool {
        let s = self.matrix_size();
        if m.rows() != s || m.cols() != s {
            return false;
        }
        match self.kind {
            ModelKind::Full => true,
            ModelKind::Symmetric => {
                (0..s).all(|i| (i..s).all(|j| m.get(i, j) == m.get(j, i)))
            }
            ModelKind::Alternating => {
                (0..s).all(|i| m.get(i, i).is_zero())
                    && (0..s).all(|i| (i + 1..s).all(|j| *m.get(i, j) == m.get(j, i).neg()))
            }
        }
    }

    pub fn carrier_basis(&self) -> Vec<Matrix> {
        let s = self.matrix_size();
        let ctx = self.ctx;
        let mut out = Vec::new();
        match self.kind {
            ModelKind::Symmetric => {
                for i in 0..s {
                    let mut m = Matrix::zero(ctx, s, s);
                    m.set(i, i, ctx.one());
                    out.push(m);
                }
                for i in 0..s {
                    for j in i + 1..s {
                        let mut m = Matrix::zero(ctx, s, s);
                        m.set(i, j, ctx.one());
                        m.set(j, i, ctx.one());
                        out.push(m);
                    }
                }
            }
            ModelKind::Full => {
                for i in 0..s {
                    for j in 0..s {
                        let mut m = Matrix::zero(ctx, s, s);
                        m.set(i, j, ctx.one());
                        out.push(m);
                    }
                }
            }
            ModelKind::Alternating => {
                for i in 0..s {
                    for j in i + 1..s {
                        let mut m = Matrix::zero(ctx, s, s);
                        m.set(i, j, ctx.one());
                        m.set(j, i, ctx.one().neg());
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    pub fn carrier_dim(&self) -> usize {
        match self.kind {
            ModelKind::Symmetric => self.n * (self.n + 1) / 2,
            ModelKind::Full => self.n * self.n,
            ModelKind::Alternating => self.n * (2 * self.n - 1),
        }
    }

    /// Carrier coordinates in the basis order of [`Self::carrier_basis`].
    pub fn coords(&self, m: &Matrix) -> Vec<Scalar> {
        let s = self.matrix_size();
        let mut out = Vec::new();
        match self.kind {
            ModelKind::Symmetric => {
                for i in 0..s {
                    out.push(m.get(i, i).clone());
                }
                for i in 0..s {
                    for j in i + 1..s {
                        out.push(m.get(i, j).clone());
                    }
                }
            }
            ModelKind::Full => {
                for i in 0..s {
                    for j in 0..s {
                        out.push(m.get(i, j).clone());
                    }
                }
            }
            ModelKind::Alternating => {
                for i in 0..s {
                    for j in i + 1..s {
                        out.push(m.get(i, j).clone());
                    }
                }
            }
        }
        out
    }

    /// U_A B = A I^{-1} B I^{-1} A.
    pub fn u_operator(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if !self.in_carrier(a) || !self.in_carrier(b) {
            return Err(AlgError::Invalid("argument outside the carrier".into()));
        }
        let out = a.mul(&self.base_inv).mul(b).mul(&self.base_inv).mul(a);
        debug_assert!(self.in_carrier(&out), "U does not leave the carrier");
        Ok(out)
    }

    /// The Jordan trace form, evaluated through the precomputed integer
    /// Gram matrix so it stays correct in every characteristic.
    pub fn trace_form(&self, a: &Matrix, b: &Matrix) -> Scalar {
        let ca = self.coords(a);
        let cb = self.coords(b);
        let mut acc = self.ctx.zero();
        for (i, ai) in ca.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in cb.iter().enumerate() {
                let g = self.gram_int[i][j];
                if g == 0 || bj.is_zero() {
                    continue;
                }
                acc = acc.add(&Scalar::from_i64(self.ctx, g).mul(&ai.mul(bj)));
            }
        }
        acc
    }

    /// Jordan rank one through the defining identity, on a carrier basis.
    pub fn rank_one(&self, a: &Matrix) -> Result<bool> {
        if a.is_zero() {
            return Err(AlgError::ZeroInput);
        }
        for b in self.carrier_basis() {
            let lhs = self.u_operator(a, &b)?;
            let rhs = a.scale(&self.trace_form(a, &b));
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The closed-orbit characterization: usual matrix rank 1 for the
    /// symmetric and full models, rank 2 for the alternating one.
    pub fn matrix_rank_characterization(&self, a: &Matrix) -> Result<bool> {
        if a.is_zero() {
            return Err(AlgError::ZeroInput);
        }
        let expected = match self.kind {
            ModelKind::Symmetric | ModelKind::Full => 1,
            ModelKind::Alternating => 2,
        };
        Ok(a.rank() == expected)
    }

    /// The natural action: g A g^t for a = 1, 4 and g A h^t for a = 2.
    pub fn structure_action(&self, g: &GroupElement, a: &Matrix) -> Result<Matrix> {
        let out = match (self.kind, g) {
            (ModelKind::Symmetric | ModelKind::Alternating, GroupElement::Single(g)) => {
                if g.det().is_zero() {
                    return Err(AlgError::Singular);
                }
                g.mul(a).mul(&g.transpose())
            }
            (ModelKind::Full, GroupElement::Pair(g, h)) => {
                if g.det().is_zero() || h.det().is_zero() {
                    return Err(AlgError::Singular);
                }
                g.mul(a).mul(&h.transpose())
            }
            _ => return Err(AlgError::Invalid("group element shape does not match model".into())),
        };
        debug_assert!(self.in_carrier(&out));
        Ok(out)
    }

    /// The operator matrix of B -> U_A B on the carrier basis.
    pub fn u_as_operator(&self, a: &Matrix) -> Matrix {
        let basis = self.carrier_basis();
        let dim = basis.len();
        let mut m = Matrix::zero(self.ctx, dim, dim);
        for (j, b) in basis.iter().enumerate() {
            let img = self.coords(&self.u_operator(a, b).expect("basis is in carrier"));
            for i in 0..dim {
                m.set(i, j, img[i].clone());
            }
        }
        m
    }

    /// The operator matrix of the action A -> g.A on the carrier basis.
    pub fn action_as_operator(&self, g: &GroupElement) -> Result<Matrix> {
        let basis = self.carrier_basis();
        let dim = basis.len();
        let mut m = Matrix::zero(self.ctx, dim, dim);
        for (j, b) in basis.iter().enumerate() {
            let img = self.coords(&self.structure_action(g, b)?);
            for i in 0..dim {
                m.set(i, j, img[i].clone());
            }
        }
        Ok(m)
    }

    /// Gram matrix of the trace form on the carrier basis.
    pub fn gram(&self) -> Matrix {
        let dim = self.carrier_dim();
        Matrix::from_fn(self.ctx, dim, dim, |i, j| {
            Scalar::from_i64(self.ctx, self.gram_int[i][j])
        })
    }

    /// Checks the structure-group identity R(g.A) = g o R(A) o g^t on a
    /// carrier basis, with the transpose taken against the trace form.
    pub fn is_structure_element(&self, g: &GroupElement) -> Result<bool> {
        let op = self.action_as_operator(g)?;
        let gram = self.gram();
        let gram_inv = gram.inverse().expect("trace form is nondegenerate");
        let transposed = gram_inv.mul(&op.transpose()).mul(&gram);
        for a in self.carrier_basis() {
            let lhs = self.u_as_operator(&self.structure_action(g, &a)?);
            let rhs = op.mul(&self.u_as_operator(&a)).mul(&transposed);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Report for one group element: it satisfies the operator identity
    /// and preserves the rank-one locus on the provided samples.
    pub fn structure_report(&self, g: &GroupElement, rank_one_samples: &[Matrix]) -> Result<Report> {
        let mut report = Report::new("structure-group");
        report.push(CheckItem::assert(
            "operator identity R(g.A) = g R(A) g^t",
            self.is_structure_element(g)?,
            String::new(),
        ));
        let mut preserved = true;
        for a in rank_one_samples {
            let image = self.structure_action(g, a)?;
            if !self.rank_one(&image)? {
                preserved = false;
                break;
            }
        }
        report.push(CheckItem::assert(
            "rank-one locus preserved",
            preserved,
            format!("{} samples", rank_one_samples.len()),
        ));
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::verify::trial_rng;

    fn f5() -> FieldContext {
        FieldContext::prime(5).unwrap()
    }

    fn qctx() -> FieldContext {
        FieldContext::Rationals
    }

    #[test]
    fn u_base_point_is_identity_map() {
        for kind in [ModelKind::Symmetric, ModelKind::Full, ModelKind::Alternating] {
            let model = ClassicalModel::new(kind, 2, qctx());
            for b in model.carrier_basis() {
                assert_eq!(model.u_operator(model.base_point(), &b).unwrap(), b);
            }
        }
    }

    #[test]
    fn symmetric_model_is_plain_aba() {
        let model = ClassicalModel::new(ModelKind::Symmetric, 2, qctx());
        let mut rng = trial_rng(300, 0);
        let a = loop {
            let c = sample::matrix(qctx(), 2, 2, 4, &mut rng);
            let sym = c.add(&c.transpose());
            if !sym.is_zero() {
                break sym;
            }
        };
        let b = {
            let c = sample::matrix(qctx(), 2, 2, 4, &mut rng);
            c.add(&c.transpose())
        };
        assert_eq!(model.u_operator(&a, &b).unwrap(), a.mul(&b).mul(&a));
    }

    #[test]
    fn alternating_carrier_closure() {
        let model = ClassicalModel::new(ModelKind::Alternating, 2, f5());
        for trial in 0..200 {
            let mut rng = trial_rng(301, trial);
            let raw_a = sample::matrix(f5(), 4, 4, 4, &mut rng);
            let raw_b = sample::matrix(f5(), 4, 4, 4, &mut rng);
            let a = raw_a.sub(&raw_a.transpose());
            let b = raw_b.sub(&raw_b.transpose());
            assert!(model.in_carrier(&a));
            let u = model.u_operator(&a, &b).unwrap();
            assert!(model.in_carrier(&u));
        }
    }

    #[test]
    fn rank_one_examples() {
        let sym = ClassicalModel::new(ModelKind::Symmetric, 3, qctx());
        let mut e11 = Matrix::zero(qctx(), 3, 3);
        e11.set(0, 0, qctx().one());
        assert!(sym.rank_one(&e11).unwrap());
        assert!(sym.matrix_rank_characterization(&e11).unwrap());
        assert!(!sym.rank_one(&Matrix::identity(qctx(), 3)).unwrap());

        let alt = ClassicalModel::new(ModelKind::Alternating, 2, qctx());
        let mut block = Matrix::zero(qctx(), 4, 4);
        block.set(0, 1, qctx().one());
        block.set(1, 0, qctx().one().neg());
        assert!(alt.rank_one(&block).unwrap());
        assert!(alt.matrix_rank_characterization(&block).unwrap());
    }

    #[test]
    fn rank_one_agrees_with_matrix_rank_exhaustive_alternating_f2() {
        let f2 = FieldContext::prime(2).unwrap();
        let model = ClassicalModel::new(ModelKind::Alternating, 2, f2);
        let basis = model.carrier_basis();
        assert_eq!(basis.len(), 6);
        for code in 1u32..64 {
            let mut a = Matrix::zero(f2, 4, 4);
            for (k, b) in basis.iter().enumerate() {
                if (code >> k) & 1 == 1 {
                    a = a.add(b);
                }
            }
            assert_eq!(
                model.rank_one(&a).unwrap(),
                model.matrix_rank_characterization(&a).unwrap(),
                "disagreement at code {code}"
            );
        }
    }

    #[test]
    fn identity_and_scalars_are_structure_elements() {
        for kind in [ModelKind::Symmetric, ModelKind::Full, ModelKind::Alternating] {
            let model = ClassicalModel::new(kind, 2, f5());
            let s = model.matrix_size();
            let id = Matrix::identity(f5(), s);
            let g = match kind {
                ModelKind::Full => GroupElement::Pair(id.clone(), id.clone()),
                _ => GroupElement::Single(id.clone()),
            };
            assert!(model.is_structure_element(&g).unwrap());
            let lam = Scalar::from_i64(f5(), 3);
            let g = match kind {
                ModelKind::Full => GroupElement::Pair(id.scale(&lam), id.clone()),
                _ => GroupElement::Single(id.scale(&lam)),
            };
            assert!(model.is_structure_element(&g).unwrap());
        }
    }

    #[test]
    fn random_actions_are_structure_elements_and_preserve_rank_one() {
        let mut rng = trial_rng(310, 0);
        for kind in [ModelKind::Symmetric, ModelKind::Full, ModelKind::Alternating] {
            let model = ClassicalModel::new(kind, 2, f5());
            let s = model.matrix_size();
            for _ in 0..10 {
                let g = match kind {
                    ModelKind::Full => GroupElement::Pair(
                        sample::invertible_matrix(f5(), s, 4, &mut rng),
                        sample::invertible_matrix(f5(), s, 4, &mut rng),
                    ),
                    _ => GroupElement::Single(sample::invertible_matrix(f5(), s, 4, &mut rng)),
                };
                // rank-one samples: g-images of a fixed rank-one element
                let seed = match kind {
                    ModelKind::Alternating => {
                        let mut m = Matrix::zero(f5(), 4, 4);
                        m.set(0, 1, f5().one());
                        m.set(1, 0, f5().one().neg());
                        m
                    }
                    _ => {
                        let mut m = Matrix::zero(f5(), s, s);
                        m.set(0, 0, f5().one());
                        m
                    }
                };
                let report = model.structure_report(&g, &[seed]).unwrap();
                assert!(report.all_pass(), "{}", report.render());
            }
        }
    }

    #[test]
    fn singular_action_rejected() {
        let model = ClassicalModel::new(ModelKind::Symmetric, 2, qctx());
        let z = Matrix::zero(qctx(), 2, 2);
        assert_eq!(
            model.structure_action(&GroupElement::Single(z), model.base_point()),
            Err(AlgError::Singular)
        );
    }
}
