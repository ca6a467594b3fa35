//! Tropical matrix representations of one-relation monoids.

pub mod check;
pub mod classify;
pub mod embedding;
pub mod equality;
pub mod error;
pub mod identity;
pub mod matrix;
pub mod model;
pub mod monoid;
pub mod presentation;
pub mod representation;
pub mod rewriting;
pub mod sample;
pub mod scalar;
pub mod word;
pub mod word_problem;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use monoid::MonoidId;
pub use scalar::{Scalar, Trop};
pub use word::Word;

/// Tropical integers with 64-bit finite values.
pub type TropInt = Trop<i64>;
/// Tropical matrices with 64-bit finite entries.
pub type TropMatrix = Matrix<i64>;
