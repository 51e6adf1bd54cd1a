//! Symmetric functions in the Schur basis, with closed formulas for
//! plethysms by complete homogeneous functions and for restriction
//! coefficients from `GL_n` to `S_n`.
//!
//! Coefficients are arbitrary-precision integers throughout.

pub mod characters;
pub mod error;
pub mod formulas;
pub mod partition;
pub mod plethysm;
pub mod power_sum;
pub mod schur;
pub mod series;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{IntVector, Partition, SkewShape};
pub use power_sum::PowerSumPoly;
pub use schur::SchurPoly;
pub use series::{HPrefixedSeries, TruncatedSeries};
pub use tableaux::LRTableau;
