//! Exact projective geometry over split composition algebras.
//!
//! Everything here is exact: scalars are rationals or prime-field residues,
//! linear algebra is fraction-free Gauss-Jordan, and every identity is
//! checked with zero tolerance. The crate is organised around the objects
//! it manipulates:
//!
//! * [`field`] / [`linalg`] — scalars over Q or F_p, matrices, canonical
//!   echelon subspaces.
//! * [`compalg`] — the four split composition algebras (R, C, H, O) in their
//!   2x2-matrix / Cayley-pair models.
//! * [`jordan`] — hermitian Jordan algebras H_n(A), the rank-one theory,
//!   the exceptional cubic determinant on H_3(O) and the X0/X1 split.
//! * [`classical`] — the matrix models (symmetric / full / alternating)
//!   with twisted quadratic product and structure-group actions.
//! * [`rightmod`] — right A-submodules of A^n, their Grassmannians,
//!   duality, and desk-scale enumeration over small prime fields.
//! * [`cubic27`] — the 27-points / 45-planes incidence model, the cubic
//!   forms alpha and beta, 3-grids, double-sixes and the linear bridge to
//!   H_3(O).
//! * [`verify`] — the machine-checkable proposition suites driven by the
//!   `compalg-kit` command line tool.

pub mod classical;
pub mod compalg;
pub mod cubic27;
pub mod error;
pub mod field;
pub mod jordan;
pub mod jsonio;
pub mod linalg;
pub mod poly;
pub mod rightmod;
pub mod sample;
pub mod verify;

pub use error::AlgError;
pub use field::{FieldContext, Scalar};
pub use linalg::{Matrix, Subspace};
