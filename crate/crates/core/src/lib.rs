pub mod diamond;
pub mod error;
pub mod freeprod;
pub mod fusion;
pub mod matrix;
pub mod poly;
pub mod predicates;
pub mod presentations;
pub mod scalar;
pub mod similarity;

pub use error::{Error, ParseError, Result};
pub use matrix::ExactMatrix;
pub use scalar::{FieldMode, Scalar};
