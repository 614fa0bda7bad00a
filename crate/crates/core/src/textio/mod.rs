//! Text front-end: expression parser, canonical printer and the structured
//! record format.

mod parse;
mod print;
mod structured;

pub use parse::{
    parse_expression, parse_number, parse_number_with, parse_polynomial, parse_polynomial_with,
    Env, Expression, ParseError,
};
pub use print::{print_canonical, print_number, print_polynomial, print_polynomial_as, Format};
pub use structured::{parse_structured, print_structured, print_structured_polynomial};
