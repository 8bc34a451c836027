//! Exact verification of graded n-ary Hom-algebras given by structure constants.

pub mod algebra;
pub mod axioms;
pub mod bracket;
pub mod catalog;
pub mod cochains;
pub mod derivations;
pub mod error;
pub mod format;
pub mod iterated;
pub mod linalg;
pub mod map;
mod orbit;
pub mod prelie3;
pub mod report;
pub mod rotabaxter;
pub mod scalar;
pub mod sign;
pub mod space;
pub mod tuples;

pub use algebra::HomSuperAlgebra;
pub use bracket::NaryBracket;
pub use error::{Error, Result};
pub use map::GradedLinearMap;
pub use scalar::Scalar;
pub use space::{Element, Parity, SuperSpace};
