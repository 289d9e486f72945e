//! Eigenfunctions and eigenfamilies on compact Riemannian symmetric spaces,
//! verified numerically through the Cartan embedding.

pub mod ambient;
pub mod cartan;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod lie;
pub mod matrix;
pub mod ops;
pub mod sampling;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
