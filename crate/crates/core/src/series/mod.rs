//! Ring and field structure: convolution products, the doublure
//! enumerator and truncated inverses.

mod doublure;
mod inverse;
mod mul;

pub use doublure::{DoublureStream, RepresentationSet};
pub use inverse::{divide, divide_with_residual, inverse, inverse_with_residual, Truncated};
pub use mul::{mul, mul_family};
