//! Real-closedness ingredients: truncated square roots, polynomials over
//! normal forms, Hensel lifting and roots of odd-degree polynomials.

mod hensel;
mod odd_root;
mod spoly;
mod sqrt;

pub use hensel::{hensel_lift, perturbation_exponents, HenselLift};
pub use odd_root::{depress, newton_rescale, odd_root, odd_root_with_residual, OddRoot};
pub use spoly::{
    poly_add, poly_eval, poly_mul, real_part_poly, split_real_infinitesimal,
    RealInfinitesimalSplit, SurrealPolynomial,
};
pub use sqrt::{sqrt, sqrt_with_residual};
