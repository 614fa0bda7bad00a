//! Exact arithmetic on finite Cantor–Conway normal forms
//! `Σ ω^{a_i}·r_i`, whose exponents are themselves such forms and whose
//! coefficients are rationals.
//!
//! The core is generic over the coefficient type through [`Coeff`]; the
//! aliases at the crate root fix it to arbitrary-precision rationals.

pub mod algebraic;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod lattice;
pub mod number;
pub mod ordinal;
pub mod poly;
pub mod roots;
pub mod series;
pub mod textio;

pub use algebraic::{
    depress, hensel_lift, newton_rescale, odd_root, odd_root_with_residual, poly_add, poly_eval,
    poly_mul, real_part_poly, split_real_infinitesimal, sqrt, sqrt_with_residual, HenselLift,
    OddRoot, RealInfinitesimalSplit, SurrealPolynomial,
};
pub use coeff::{rat_sqrt_exact, Coeff};
pub use error::{Error, Result};
pub use lattice::{
    abs, in_cone, join, meet, neg_part, pos_part, prec_compare, very_positive, ConeVerdict,
    ConeWitness, PrecOrdering,
};
pub use number::{normalize, Classification, MonomialFamily, Number, Term};
pub use ordinal::{embed_ordinal, ordinal_of, CnfOrdinal};
pub use poly::{poly_bezout, poly_euclid, DensePoly};
pub use roots::{real_root_isolate, RootInterval};
pub use series::{
    divide, divide_with_residual, inverse, inverse_with_residual, mul, mul_family, DoublureStream,
    RepresentationSet, Truncated,
};
pub use textio::{parse_number, parse_polynomial, print_canonical, print_number, Format};

pub type Rational = num_rational::BigRational;
pub type Surreal = Number<Rational>;
pub type RationalPolynomial = DensePoly<Rational>;
pub type SurrealPoly = SurrealPolynomial<Rational>;
