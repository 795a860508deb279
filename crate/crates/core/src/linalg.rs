//! Exact dense linear algebra: matrices over a [`FieldContext`] and
//! subspaces in canonical reduced row-echelon form.
//!
//! Matrices act on column vectors; a [`Subspace`] is the row space of its
//! echelon basis. Echelon form is the unique canonical representative, so
//! subspace equality is plain row-wise equality.

use crate::error::{AlgError, Result};
use crate::field::{FieldContext, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ctx: FieldContext,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(ctx: FieldContext, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ctx,
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: FieldContext, n: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_rows(ctx: FieldContext, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for s in row {
                assert_eq!(s.context(), ctx, "entry context mismatch");
                data.push(s);
            }
        }
        Matrix { ctx, rows: r, cols: c, data }
    }

    pub fn from_fn(ctx: FieldContext, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zero(ctx, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.context(), self.ctx);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| a.neg()).collect();
        Matrix { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product (column-vector convention).
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ctx.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { ctx: self.ctx, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.ctx, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row-echelon form with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.get(pivot_row, col).inv().expect("pivot nonzero");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(s);
            self.set(r, j, v);
        }
    }

    /// row_r -= factor * row_src
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j).sub(&factor.mul(self.get(src, j)));
            self.set(r, j, v);
        }
    }

    /// Kernel {x : Mx = 0} as a subspace of K^cols.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![self.ctx.zero(); self.cols];
            vec[free] = self.ctx.one();
            for col in 0..self.cols {
                if let Some(row) = pivot_set[col] {
                    vec[col] = r.get(row, free).neg();
                }
            }
            basis.push(vec);
        }
        Subspace::from_rows(self.ctx, self.cols, basis)
    }

    /// Column space as a subspace of K^rows.
    pub fn column_space(&self) -> Subspace {
        let t = self.transpose();
        let rows = (0..t.rows).map(|i| t.row_vec(i)).collect();
        Subspace::from_rows(self.ctx, self.rows, rows)
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = self.ctx.one();
        for col in 0..m.cols {
            let Some(src) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return self.ctx.zero();
            };
            if src != col {
                m.swap_rows(col, src);
                det = det.neg();
            }
            det = det.mul(m.get(col, col));
            let inv = m.get(col, col).inv().unwrap();
            m.scale_row(col, &inv);
            for r in col + 1..m.rows {
                if !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, col, &factor);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hstack(&Matrix::identity(self.ctx, self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(AlgError::Singular);
        }
        Ok(Matrix::from_fn(self.ctx, self.rows, self.rows, |i, j| {
            r.get(i, self.cols + j).clone()
        }))
    }

    /// Solves Mx = b; returns one solution if consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let bm = Matrix::from_fn(self.ctx, self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&bm);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.ctx.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// A linear subspace of K^ambient, stored as the unique reduced
/// row-echelon basis (zero rows dropped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn from_rows(ctx: FieldContext, ambient: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        for row in &rows {
            assert_eq!(row.len(), ambient, "vector length != ambient dimension");
        }
        let m = Matrix::from_rows(ctx, rows);
        let m = if m.rows() == 0 {
            Matrix::zero(ctx, 0, ambient)
        } else {
            m
        };
        let (r, pivots) = m.rref();
        let basis = Matrix::from_fn(ctx, pivots.len(), ambient, |i, j| r.get(i, j).clone());
        Subspace { ambient, basis }
    }

    pub fn zero(ctx: FieldContext, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(ctx, 0, ambient),
        }
    }

    pub fn full(ctx: FieldContext, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ctx, ambient),
        }
    }

    pub fn context(&self) -> FieldContext {
        self.basis.context()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(AlgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce v against the echelon basis; member iff remainder is zero
        let mut v = v.to_vec();
        for i in 0..self.dim() {
            let pivot_col = (0..self.ambient)
                .find(|&j| !self.basis.get(i, j).is_zero())
                .expect("echelon row has a pivot");
            if !v[pivot_col].is_zero() {
                let f = v[pivot_col].clone();
                for j in 0..self.ambient {
                    v[j] = v[j].sub(&f.mul(self.basis.get(i, j)));
                }
            }
        }
        v.iter().all(|s| s.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.context(), self.ambient, rows))
    }

    /// Intersection via the left null space of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let ctx = self.context();
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(ctx, self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis.neg());
        let null = stacked.transpose().kernel();
        let mut rows = Vec::new();
        for k in 0..null.dim() {
            let coeffs = null.basis.row(k);
            let mut v = vec![ctx.zero(); self.ambient];
            for (i, c) in coeffs.iter().take(self.dim()).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    v[j] = v[j].add(&c.mul(self.basis.get(i, j)));
                }
            }
            rows.push(v);
        }
        Ok(Subspace::from_rows(ctx, self.ambient, rows))
    }

    /// Image of the subspace under a linear map (column convention).
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let rows = (0..self.dim())
            .map(|i| m.apply(self.basis.row(i)))
            .collect();
        Subspace::from_rows(self.context(), m.rows(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> FieldContext {
        FieldContext::prime(2).unwrap()
    }

    fn mat(ctx: FieldContext, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            ctx,
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_i64(ctx, v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_and_canonicity() {
        let ctx = FieldContext::Rationals;
        let id = Matrix::identity(ctx, 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p.len(), 3);

        let ones = mat(f2(), &[&[1, 1], &[1, 1]]);
        let (r, p) = ones.rref();
        assert_eq!(r, mat(f2(), &[&[1, 1], &[0, 0]]));
        assert_eq!(p.len(), 1);

        let z = Matrix::zero(ctx, 2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_image_rank_theorem() {
        let ctx = FieldContext::Rationals;
        let id = Matrix::identity(ctx, 4);
        assert_eq!(id.kernel().dim(), 0);
        assert_eq!(id.column_space().dim(), 4);

        let z = Matrix::zero(ctx, 2, 2);
        assert_eq!(z.kernel().dim(), 2);
        assert_eq!(z.column_space().dim(), 0);

        let m = mat(f2(), &[&[1, 1], &[1, 1]]);
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains_vector(&[Scalar::from_i64(f2(), 1), Scalar::from_i64(f2(), 1)]));
        let img = m.column_space();
        assert_eq!(img.dim(), 1);
        assert!(img.contains_vector(&[Scalar::from_i64(f2(), 1), Scalar::from_i64(f2(), 1)]));
    }

    #[test]
    fn subspace_lattice_basics() {
        let ctx = FieldContext::Rationals;
        let e1 = Subspace::from_rows(ctx, 2, vec![vec![ctx.one(), ctx.zero()]]);
        let e2 = Subspace::from_rows(ctx, 2, vec![vec![ctx.zero(), ctx.one()]]);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(ctx, 2));
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert!(Subspace::full(ctx, 2).contains(&e1).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let ctx = FieldContext::Rationals;
        let a = Subspace::full(ctx, 2);
        let b = Subspace::full(ctx, 3);
        assert!(matches!(a.sum(&b), Err(AlgError::AmbientMismatch(2, 3))));
    }

    #[test]
    fn solve_and_inverse() {
        let ctx = FieldContext::Rationals;
        let m = mat(ctx, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(ctx, 2));
        let x = m.solve(&[Scalar::from_i64(ctx, 3), Scalar::from_i64(ctx, 2)]).unwrap();
        assert_eq!(m.apply(&x), vec![Scalar::from_i64(ctx, 3), Scalar::from_i64(ctx, 2)]);
        let sing = mat(ctx, &[&[1, 1], &[1, 1]]);
        assert!(sing.inverse().is_err());
    }

    proptest! {
        // dim(U ∩ V) + dim(U + V) = dim U + dim V, over F_3 in dimension 5
        #[test]
        fn dimension_formula(seed_u in proptest::collection::vec(0i64..3, 10),
                             seed_v in proptest::collection::vec(0i64..3, 10)) {
            let ctx = FieldContext::prime(3).unwrap();
            let rows_u: Vec<Vec<Scalar>> = seed_u.chunks(5)
                .map(|c| c.iter().map(|&v| Scalar::from_i64(ctx, v)).collect()).collect();
            let rows_v: Vec<Vec<Scalar>> = seed_v.chunks(5)
                .map(|c| c.iter().map(|&v| Scalar::from_i64(ctx, v)).collect()).collect();
            let u = Subspace::from_rows(ctx, 5, rows_u);
            let v = Subspace::from_rows(ctx, 5, rows_v);
            let meet = u.intersect(&v).unwrap();
            let join = u.sum(&v).unwrap();
            prop_assert_eq!(meet.dim() + join.dim(), u.dim() + v.dim());
            prop_assert!(join.contains(&u).unwrap());
            prop_assert!(u.contains(&meet).unwrap());
            // canonicity: rref of an rref basis is itself
            let (r, _) = u.basis().rref();
            prop_assert_eq!(&r, u.basis());
        }
    }
}
