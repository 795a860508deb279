//! Right A-submodules of A^n for the associative split algebras C and H:
//! spans, constructive free generation, the +/- decomposition, the
//! classical-Grassmannian isomorphisms, duality, and desk-scale
//! exhaustive enumeration over small prime fields.
//!
//! Elements of A^n are stored through their K-coordinates (n blocks of
//! dim A), and a submodule is the echelon subspace of those coordinates,
//! validated to be stable under right multiplication at construction.
//! e, f, h are fixed repo-wide as E11, E22, E12 + E21.

use crate::compalg::{AlgKind, AlgebraTag, CompElement, Side};
use crate::error::{AlgError, Result};
use crate::field::{FieldContext, Scalar};
use crate::linalg::{Matrix, Subspace};
use std::collections::BTreeMap;

pub type AVector = Vec<CompElement>;

pub fn vector_coords(v: &AVector) -> Vec<Scalar> {
    let mut out = Vec::new();
    for x in v {
        out.extend(x.coords().iter().cloned());
    }
    out
}

pub fn vector_from_coords(tag: AlgebraTag, n: usize, coords: &[Scalar]) -> AVector {
    let d = tag.dim();
    assert_eq!(coords.len(), n * d);
    (0..n)
        .map(|t| CompElement::from_coords(tag, coords[t * d..(t + 1) * d].to_vec()))
        .collect()
}

/// Block-diagonal matrix of x -> x . lambda on A^n.
pub fn right_mul_block(tag: AlgebraTag, n: usize, lambda: &CompElement) -> Matrix {
    let d = tag.dim();
    let r = lambda.mul_operator(Side::Right);
    let mut m = Matrix::zero(tag.ctx, n * d, n * d);
    for t in 0..n {
        for i in 0..d {
            for j in 0..d {
                m.set(t * d + i, t * d + j, r.get(i, j).clone());
            }
        }
    }
    m
}

fn e_element(tag: AlgebraTag) -> CompElement {
    // E11
    CompElement::basis(tag, 0)
}

fn f_element(tag: AlgebraTag) -> CompElement {
    // E22: index 1 in the diagonal model of C, index 3 in H
    match tag.kind {
        AlgKind::C => CompElement::basis(tag, 1),
        AlgKind::H => CompElement::basis(tag, 3),
        _ => unreachable!("e/f live in C and H"),
    }
}

fn h_element(tag: AlgebraTag) -> CompElement {
    assert_eq!(tag.kind, AlgKind::H);
    CompElement::basis(tag, 1).add(&CompElement::basis(tag, 2))
}

/// Multiplicative generators sufficient for the closure check: right
/// multiplication is K-linear in lambda and multiplicative across
/// products, so stability under these generators gives stability under
/// the whole algebra.
fn closure_generators(tag: AlgebraTag) -> Vec<CompElement> {
    match tag.kind {
        AlgKind::C => vec![e_element(tag), f_element(tag)],
        AlgKind::H => vec![CompElement::basis(tag, 1), CompElement::basis(tag, 2)],
        _ => unreachable!(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightSubmodule {
    tag: AlgebraTag,
    n: usize,
    space: Subspace,
}

impl RightSubmodule {
    pub fn from_subspace(tag: AlgebraTag, n: usize, space: Subspace) -> Result<RightSubmodule> {
        if !matches!(tag.kind, AlgKind::C | AlgKind::H) {
            return Err(AlgError::UnsupportedAlgebra(
                "right submodules are defined over C and H".into(),
            ));
        }
        assert_eq!(space.ambient_dim(), n * tag.dim());
        for lambda in closure_generators(tag) {
            let op = right_mul_block(tag, n, &lambda);
            for row in space.basis_rows() {
                if !space.contains_vector(&op.apply(&row)) {
                    return Err(AlgError::NotSubmodule);
                }
            }
        }
        Ok(RightSubmodule { tag, n, space })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &AVector) -> bool {
        self.space.contains_vector(&vector_coords(v))
    }

    /// Intrinsic freeness: balanced +/- decomposition over C, dimension
    /// divisible by 4 over H.
    pub fn is_free(&self) -> bool {
        match self.tag.kind {
            AlgKind::C => {
                let (p, m) = self.decompose_pm();
                p.dim() == m.dim()
            }
            AlgKind::H => self.dim() % 4 == 0,
            _ => unreachable!(),
        }
    }

    pub fn rank(&self) -> Option<usize> {
        if self.is_free() {
            Some(self.dim() / self.tag.dim())
        } else {
            None
        }
    }

    /// Was the module spanned freely by `r` generators?
    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.dim() == r * self.tag.dim()
    }

    /// E+ = E ∩ (A^n e) and E- = E ∩ (A^n f); their direct sum is E.
    pub fn decompose_pm(&self) -> (Subspace, Subspace) {
        let full = Subspace::full(self.tag.ctx, self.n * self.tag.dim());
        let plus_ambient = full.map(&right_mul_block(self.tag, self.n, &e_element(self.tag)));
        let minus_ambient = full.map(&right_mul_block(self.tag, self.n, &f_element(self.tag)));
        let plus = self.space.intersect(&plus_ambient).expect("same ambient");
        let minus = self.space.intersect(&minus_ambient).expect("same ambient");
        debug_assert_eq!(plus.dim() + minus.dim(), self.dim());
        debug_assert_eq!(
            plus.sum(&minus).expect("same ambient"),
            self.space,
            "E = E+ ⊕ E-"
        );
        (plus, minus)
    }
}

/// K-span of {v_t . lambda}; non-free spans are allowed and flagged
/// through [`RightSubmodule::is_free_of_rank`].
pub fn module_span(tag: AlgebraTag, n: usize, vectors: &[AVector]) -> Result<RightSubmodule> {
    if !matches!(tag.kind, AlgKind::C | AlgKind::H) {
        return Err(AlgError::UnsupportedAlgebra(
            "right submodules are defined over C and H".into(),
        ));
    }
    let mut rows = Vec::new();
    for v in vectors {
        assert_eq!(v.len(), n);
        for b in CompElement::basis_all(tag) {
            let scaled: AVector = v.iter().map(|x| x.mul(&b)).collect();
            rows.push(vector_coords(&scaled));
        }
    }
    let space = Subspace::from_rows(tag.ctx, n * tag.dim(), rows);
    RightSubmodule::from_subspace(tag, n, space)
}

fn block_projection_rows(space: &Subspace, d: usize, blocks: &[usize]) -> Vec<Vec<Scalar>> {
    space
        .basis_rows()
        .into_iter()
        .map(|row| {
            let mut out = Vec::with_capacity(blocks.len() * d);
            for &b in blocks {
                out.extend(row[b * d..(b + 1) * d].iter().cloned());
            }
            out
        })
        .collect()
}

fn block_projection(space: &Subspace, ctx: FieldContext, d: usize, blocks: &[usize]) -> Subspace {
    Subspace::from_rows(ctx, blocks.len() * d, block_projection_rows(space, d, blocks))
}

/// Kernel of the projection onto the listed blocks, i.e. the constraint
/// "those blocks vanish", as a subspace of the full ambient.
fn blocks_zero_subspace(ctx: FieldContext, n: usize, d: usize, blocks: &[usize]) -> Subspace {
    let mut rows = Vec::new();
    for t in 0..n {
        if blocks.contains(&t) {
            continue;
        }
        for i in 0..d {
            let mut v = vec![ctx.zero(); n * d];
            v[t * d + i] = ctx.one();
            rows.push(v);
        }
    }
    Subspace::from_rows(ctx, n * d, rows)
}

/// Solves for an element of the space whose restriction to the listed
/// blocks equals `target`.
fn solve_in_space(
    space: &Subspace,
    d: usize,
    blocks: &[usize],
    target: &[Scalar],
) -> Option<Vec<Scalar>> {
    let ctx = space.context();
    let rows = block_projection_rows(space, d, blocks);
    if rows.is_empty() {
        return None;
    }
    let m = Matrix::from_rows(ctx, rows).transpose();
    let c = m.solve(target)?;
    let mut out = vec![ctx.zero(); space.ambient_dim()];
    for (coef, row) in c.iter().zip(space.basis_rows()) {
        if coef.is_zero() {
            continue;
        }
        for (k, r) in row.iter().enumerate() {
            out[k] = out[k].add(&coef.mul(r));
        }
    }
    Some(out)
}

/// Constructive free generation over H: returns ceil(dim E / 4) vectors
/// whose spans sum directly to E. Follows an induction on the coordinate
/// projections: split off a free summand at a rank-4 coordinate, discard
/// rank-0 coordinates, eliminate a coordinate determined by another one
/// (rank-2 pair projection), and in the remaining all-rank-2 case build a
/// generator from a product of two half-rank images with distinct right
/// ideals.
pub fn extract_generators(module: &RightSubmodule) -> Result<Vec<AVector>> {
    let tag = module.tag();
    if tag.kind != AlgKind::H {
        return Err(AlgError::UnsupportedAlgebra(
            "constructive generation is the quaternionic statement".into(),
        ));
    }
    let n = module.ambient_rank();
    let active: Vec<usize> = (0..n).collect();
    let coords_gens = extract_rec(&module.space, tag, n, active)?;
    Ok(coords_gens
        .into_iter()
        .map(|c| vector_from_coords(tag, n, &c))
        .collect())
}

fn extract_rec(
    space: &Subspace,
    tag: AlgebraTag,
    n: usize,
    active: Vec<usize>,
) -> Result<Vec<Vec<Scalar>>> {
    let ctx = tag.ctx;
    let d = tag.dim();
    if space.dim() == 0 {
        return Ok(Vec::new());
    }
    debug_assert!(!active.is_empty(), "nonzero module has an active block");

    let ranks: Vec<(usize, usize)> = active
        .iter()
        .map(|&t| (t, block_projection(space, ctx, d, &[t]).dim()))
        .collect();

    // rank-4 coordinate: split off a free generator with a 1 there
    if let Some(&(t, _)) = ranks.iter().find(|&&(_, r)| r == d) {
        let one = CompElement::one(tag);
        let v = solve_in_space(space, d, &[t], one.coords())
            .expect("full-rank projection is surjective");
        let rest = space
            .intersect(&blocks_zero_subspace(ctx, n, d, &[t]))
            .expect("same ambient");
        let mut gens = vec![v];
        gens.extend(extract_rec(&rest, tag, n, active)?);
        return Ok(gens);
    }

    // rank-0 coordinate: simply deactivate it
    if let Some(&(t, _)) = ranks.iter().find(|&&(_, r)| r == 0) {
        let next: Vec<usize> = active.into_iter().filter(|&b| b != t).collect();
        if next.is_empty() {
            return Ok(Vec::new());
        }
        return extract_rec(space, tag, n, next);
    }

    for &(_, r) in &ranks {
        debug_assert_eq!(r, d / 2, "coordinate projections have rank 0, d/2 or d");
    }

    // a single remaining coordinate of half rank: any nonzero vector
    // generates (its module span is the 2-dimensional space itself)
    if active.len() == 1 {
        return Ok(vec![space.basis_rows().swap_remove(0)]);
    }

    // pair projection of rank d/2: coordinate t is determined by u, so
    // zeroing block t is injective on the module; recurse and lift
    for (a_idx, &(t, _)) in ranks.iter().enumerate() {
        for &(u, _) in ranks.iter().skip(a_idx + 1) {
            let pair_rank = block_projection(space, ctx, d, &[t, u]).dim();
            debug_assert!(pair_rank == d / 2 || pair_rank == d);
            if pair_rank != d / 2 {
                continue;
            }
            let zero_t = {
                // identity with block t zeroed
                let mut m = Matrix::identity(ctx, n * d);
                for i in 0..d {
                    m.set(t * d + i, t * d + i, ctx.zero());
                }
                m
            };
            let image = space.map(&zero_t);
            debug_assert_eq!(image.dim(), space.dim(), "projection away from t is injective");
            let next: Vec<usize> = active.iter().copied().filter(|&b| b != t).collect();
            let sub_gens = extract_rec(&image, tag, n, next)?;
            let mut gens = Vec::new();
            let others: Vec<usize> = (0..n).filter(|&b| b != t).collect();
            for w in sub_gens {
                let target: Vec<Scalar> = others
                    .iter()
                    .flat_map(|&b| w[b * d..(b + 1) * d].to_vec())
                    .collect();
                let v = solve_in_space(space, d, &others, &target)
                    .expect("lift through an injective projection");
                gens.push(v);
            }
            return Ok(gens);
        }
    }

    // all coordinate projections of rank d/2, all pair projections full:
    // take x spanning Im p_t and y in Im p_u with a different right
    // ideal; (x, y) generates freely and a preimage splits off
    let t = active[0];
    let u = active[1];
    let im_t = block_projection(space, ctx, d, &[t]);
    let im_u = block_projection(space, ctx, d, &[u]);
    let x = CompElement::from_coords(tag, im_t.basis_rows().swap_remove(0));
    let y_rows = im_u.basis_rows();
    let rx = x.right_image();
    let y = y_rows
        .iter()
        .map(|r| CompElement::from_coords(tag, r.clone()))
        .find(|cand| cand.right_image() != rx)
        .expect("at most one right ideal class in a half-rank image matches");
    let mut target = x.coords().to_vec();
    target.extend(y.coords().iter().cloned());
    let v = solve_in_space(space, d, &[t, u], &target)
        .expect("pair projection is surjective onto its full image");
    let rest = space
        .intersect(&blocks_zero_subspace(ctx, n, d, &[t, u]))
        .expect("same ambient");
    let mut gens = vec![v];
    gens.extend(extract_rec(&rest, tag, n, active)?);
    Ok(gens)
}

/// The classical datum of a free module: a 2r-plane in K^{2n} for H, a
/// pair of r-planes in K^n for C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalDatum {
    PlaneH(Subspace),
    PairC(Subspace, Subspace),
}

/// Coordinates of R(e) inside A: {e, E21} for H, {e} for C.
fn re_coord_indices(kind: AlgKind) -> Vec<usize> {
    match kind {
        AlgKind::H => vec![0, 2],
        AlgKind::C => vec![0],
        _ => unreachable!(),
    }
}

fn rf_coord_indices(kind: AlgKind) -> Vec<usize> {
    match kind {
        AlgKind::H => vec![1, 3],
        AlgKind::C => vec![1],
        _ => unreachable!(),
    }
}

fn restrict_to_indices(space: &Subspace, d: usize, n: usize, idx: &[usize]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = space
        .basis_rows()
        .into_iter()
        .map(|row| {
            let mut out = Vec::with_capacity(n * idx.len());
            for t in 0..n {
                for &i in idx {
                    out.push(row[t * d + i].clone());
                }
            }
            out
        })
        .collect();
    Subspace::from_rows(space.context(), n * idx.len(), rows)
}

/// The Grassmannian isomorphism on free modules: E -> E+ viewed inside
/// R(e)^n for H, E -> (E+, E-) for C.
pub fn grassmann_iso(module: &RightSubmodule) -> Result<ClassicalDatum> {
    if !module.is_free() {
        return Err(AlgError::NotFree);
    }
    let tag = module.tag();
    let d = tag.dim();
    let n = module.ambient_rank();
    let (plus, minus) = module.decompose_pm();
    match tag.kind {
        AlgKind::H => {
            let datum = restrict_to_indices(&plus, d, n, &re_coord_indices(tag.kind));
            debug_assert_eq!(datum.dim(), plus.dim());
            Ok(ClassicalDatum::PlaneH(datum))
        }
        AlgKind::C => {
            let p = restrict_to_indices(&plus, d, n, &re_coord_indices(tag.kind));
            let m = restrict_to_indices(&minus, d, n, &rf_coord_indices(tag.kind));
            Ok(ClassicalDatum::PairC(p, m))
        }
        _ => unreachable!(),
    }
}

/// Inverse of [`grassmann_iso`]: E+ ⊕ E+ . h for H, the embedded pair
/// for C.
pub fn grassmann_iso_inverse(
    tag: AlgebraTag,
    n: usize,
    datum: &ClassicalDatum,
) -> Result<RightSubmodule> {
    let ctx = tag.ctx;
    let d = tag.dim();
    match (tag.kind, datum) {
        (AlgKind::H, ClassicalDatum::PlaneH(plane)) => {
            assert_eq!(plane.ambient_dim(), 2 * n);
            let lift: Vec<Vec<Scalar>> = plane
                .basis_rows()
                .into_iter()
                .map(|row| {
                    let mut out = vec![ctx.zero(); n * d];
                    for t in 0..n {
                        out[t * d] = row[2 * t].clone();
                        out[t * d + 2] = row[2 * t + 1].clone();
                    }
                    out
                })
                .collect();
            let h_op = right_mul_block(tag, n, &h_element(tag));
            let mut rows = lift.clone();
            for row in &lift {
                rows.push(h_op.apply(row));
            }
            let space = Subspace::from_rows(ctx, n * d, rows);
            RightSubmodule::from_subspace(tag, n, space)
        }
        (AlgKind::C, ClassicalDatum::PairC(p, m)) => {
            assert_eq!(p.ambient_dim(), n);
            assert_eq!(m.ambient_dim(), n);
            let mut rows = Vec::new();
            for row in p.basis_rows() {
                let mut out = vec![ctx.zero(); n * d];
                for t in 0..n {
                    out[t * d] = row[t].clone();
                }
                rows.push(out);
            }
            for row in m.basis_rows() {
                let mut out = vec![ctx.zero(); n * d];
                for t in 0..n {
                    out[t * d + 1] = row[t].clone();
                }
                rows.push(out);
            }
            let space = Subspace::from_rows(ctx, n * d, rows);
            RightSubmodule::from_subspace(tag, n, space)
        }
        _ => Err(AlgError::Invalid("datum does not match the algebra".into())),
    }
}

/// Y-perp under the perfect pairing (x, b) -> <1, sum conj(b_u) x_u>:
/// the forms x -> sum conj(b_u) x_u are right-linear, so vanishing on
/// module generators already forces vanishing on Y, and the conjugated
/// coordinates make the perp an honest right submodule with a literal
/// double-perp identity (conjugating the defining sum swaps the roles of
/// b and y).
pub fn dual_perp(module: &RightSubmodule) -> Result<RightSubmodule> {
    let tag = module.tag();
    let d = tag.dim();
    let n = module.ambient_rank();
    let ctx = tag.ctx;
    let rows = module.space().basis_rows();
    if rows.is_empty() {
        return RightSubmodule::from_subspace(tag, n, Subspace::full(ctx, n * d));
    }
    let mut m = Matrix::zero(ctx, rows.len() * d, n * d);
    for (k, row) in rows.iter().enumerate() {
        let y = vector_from_coords(tag, n, row);
        for u in 0..n {
            for i in 0..d {
                let img = CompElement::basis(tag, i).conj().mul(&y[u]);
                for r in 0..d {
                    m.set(k * d + r, u * d + i, img.coords()[r].clone());
                }
            }
        }
    }
    RightSubmodule::from_subspace(tag, n, m.kernel())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleCensus {
    pub kind: AlgKind,
    pub n: usize,
    pub target_dim: usize,
    pub p: u64,
    /// (dim E+, dim E-) -> count
    pub groups: BTreeMap<(usize, usize), u64>,
    pub free_count: u64,
    pub total: u64,
}

impl SubmoduleCensus {
    /// Number of distinct (dim E+, dim E-) groups that actually occur.
    pub fn realized_groups(&self) -> usize {
        self.groups.len()
    }
}

/// Streams every subspace of F_p^(n dim A) of the target dimension that
/// is closed under right multiplication. Echelon bases are enumerated in
/// pivot-lexicographic order and the closure filter rejects candidates at
/// the first unstable basis row.
pub fn enumerate_right_submodules(
    tag: AlgebraTag,
    n: usize,
    target_dim: usize,
    mut f: impl FnMut(&RightSubmodule),
) -> Result<u64> {
    let d = tag.dim();
    let ambient = n * d;
    let p = match tag.ctx {
        FieldContext::Prime(p) if p <= 3 => p,
        _ => {
            return Err(AlgError::ScaleGuard(
                "exhaustive enumeration runs over F_2 and F_3".into(),
            ))
        }
    };
    if ambient > 12 {
        return Err(AlgError::ScaleGuard(format!(
            "ambient dimension {ambient} exceeds the desk-scale bound 12"
        )));
    }
    let ops: Vec<Matrix> = closure_generators(tag)
        .iter()
        .map(|g| right_mul_block(tag, n, g))
        .collect();
    let mut count = 0;
    enumerate_echelon(tag.ctx, p, ambient, target_dim, &mut |rows| {
        let space = Subspace::from_rows(tag.ctx, ambient, rows.to_vec());
        debug_assert_eq!(space.dim(), rows.len());
        let closed = ops.iter().all(|op| {
            rows.iter().all(|row| space.contains_vector(&op.apply(row)))
        });
        if closed {
            let module = RightSubmodule { tag, n, space };
            count += 1;
            f(&module);
        }
    });
    Ok(count)
}

/// Exhaustive census of right submodules grouped by the +/- splitting,
/// with the free locus identified by the intrinsic criterion.
pub fn enumerate_submodules(
    tag: AlgebraTag,
    n: usize,
    target_dim: usize,
) -> Result<SubmoduleCensus> {
    let p = tag.ctx.characteristic();
    let mut census = SubmoduleCensus {
        kind: tag.kind,
        n,
        target_dim,
        p,
        groups: BTreeMap::new(),
        free_count: 0,
        total: 0,
    };
    enumerate_right_submodules(tag, n, target_dim, |module| {
        let (plus, minus) = module.decompose_pm();
        *census.groups.entry((plus.dim(), minus.dim())).or_insert(0) += 1;
        if module.is_free() {
            census.free_count += 1;
        }
        census.total += 1;
    })?;
    Ok(census)
}

/// Calls `f` with the rows of every RREF basis of the given dimension.
fn enumerate_echelon(
    ctx: FieldContext,
    p: u64,
    ambient: usize,
    dim: usize,
    f: &mut impl FnMut(&[Vec<Scalar>]),
) {
    if dim == 0 {
        f(&[]);
        return;
    }
    if dim > ambient {
        return;
    }
    let mut pivots = Vec::new();
    choose_pivots(ctx, p, ambient, dim, 0, &mut pivots, f);
}

fn choose_pivots(
    ctx: FieldContext,
    p: u64,
    ambient: usize,
    dim: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    f: &mut impl FnMut(&[Vec<Scalar>]),
) {
    if pivots.len() == dim {
        fill_free_entries(ctx, p, ambient, pivots, f);
        return;
    }
    let remaining = dim - pivots.len();
    for c in start..=ambient - remaining {
        pivots.push(c);
        choose_pivots(ctx, p, ambient, dim, c + 1, pivots, f);
        pivots.pop();
    }
}

fn fill_free_entries(
    ctx: FieldContext,
    p: u64,
    ambient: usize,
    pivots: &[usize],
    f: &mut impl FnMut(&[Vec<Scalar>]),
) {
    let dim = pivots.len();
    let mut free_slots = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..ambient {
            if !pivots.contains(&c) {
                free_slots.push((r, c));
            }
        }
    }
    let total = p.checked_pow(free_slots.len() as u32).expect("desk scale");
    let mut rows = vec![vec![ctx.zero(); ambient]; dim];
    for (r, &pc) in pivots.iter().enumerate() {
        rows[r][pc] = ctx.one();
    }
    for code in 0..total {
        let mut c = code;
        for &(r, col) in &free_slots {
            rows[r][col] = Scalar::from_i64(ctx, (c % p) as i64);
            c /= p;
        }
        f(&rows);
    }
}
