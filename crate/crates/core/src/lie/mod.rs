//! Canonical generators, orthonormal Lie algebra bases and Cartan splits.

mod basis;
mod canonical;
mod pair;

pub use basis::{
    algebra_basis, algebra_residual, square_sum, Group, GroupKind, LieBasisSet,
    NULL_VECTOR_THRESHOLD,
};
pub(crate) use basis::{gram_residual, project_onto};
pub use canonical::{canonical, CanonicalMatrices};
pub use pair::{cartan_split, Space, SpaceKind, SymmetricPair};
