use num_traits::{One, Zero};

use crate::algebraic::SurrealPolynomial;
use crate::coeff::Coeff;
use crate::number::Number;

/// Output syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Canonical,
    Structured,
}

/// One monomial with a positive coefficient.
fn monomial<C: Coeff>(exponent: &Number<C>, magnitude: &C) -> String {
    if exponent.is_zero() {
        return magnitude.to_string();
    }
    let base = if exponent.is_one() {
        "w".to_string()
    } else {
        format!("w^{{{}}}", print_canonical(exponent))
    };
    if magnitude.is_one() {
        base
    } else {
        format!("{base}*{magnitude}")
    }
}

/// Canonical text: terms in decreasing exponent order joined by ` + ` or
/// ` - `.
pub fn print_canonical<C: Coeff>(a: &Number<C>) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in a.terms().iter().enumerate() {
        let neg = t.coefficient().is_negative();
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        out.push_str(&monomial(t.exponent(), &t.coefficient().abs()));
    }
    out
}

pub fn print_number<C: Coeff>(a: &Number<C>, format: Format) -> String {
    match format {
        Format::Canonical => print_canonical(a),
        Format::Structured => super::structured::print_structured(a),
    }
}

/// Canonical polynomial text in the variable `x`, highest degree first.
/// Coefficients of positive degree with more than one term are
/// parenthesized; the constant coefficient is written out term by term.
pub fn print_polynomial<C: Coeff>(p: &SurrealPolynomial<C>) -> String {
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let var = match d {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{d}}}"),
        };
        let single = c.terms().len() == 1;
        if d == 0 || single {
            for t in c.terms() {
                let neg = t.coefficient().is_negative();
                out.push_str(match (out.is_empty(), neg) {
                    (true, true) => "-",
                    (true, false) => "",
                    (false, true) => " - ",
                    (false, false) => " + ",
                });
                let mag = t.coefficient().abs();
                if d == 0 {
                    out.push_str(&monomial(t.exponent(), &mag));
                } else if t.exponent().is_zero() && mag.is_one() {
                    out.push_str(&var);
                } else {
                    out.push_str(&format!("{}*{var}", monomial(t.exponent(), &mag)));
                }
            }
        } else {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({})*{var}", print_canonical(c)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_polynomial_as<C: Coeff>(p: &SurrealPolynomial<C>, format: Format) -> String {
    match format {
        Format::Canonical => print_polynomial(p),
        Format::Structured => super::structured::print_structured_polynomial(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_number, parse_polynomial};
    use crate::{Rational, Surreal, SurrealPoly};

    fn int(n: i64) -> Surreal {
        Surreal::from_int(n)
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(print_canonical(&int(0)), "0");
        assert_eq!(print_canonical(&(Surreal::omega() - int(1))), "w - 1");
        let a = Surreal::exp_omega(Surreal::omega()).scalar_mul(&Rational::new(1.into(), 2.into()));
        assert_eq!(print_canonical(&a), "w^{w}*1/2");
        assert_eq!(print_canonical(&(int(1) - Surreal::omega())), "-w + 1");
        assert_eq!(
            print_canonical(&Surreal::real(Rational::new((-3).into(), 2.into()))),
            "-3/2"
        );
        assert_eq!(
            print_canonical(&(Surreal::exp_omega(int(2)) - int(1))),
            "w^{2} - 1"
        );
        assert_eq!(
            print_canonical(
                &Surreal::exp_omega(Surreal::omega() - int(1))
                    .scalar_mul(&Rational::from_integer((-2).into()))
            ),
            "-w^{w - 1}*2"
        );
    }

    #[test]
    fn polynomial_text() {
        for s in [
            "x^{3} - x + w^{-1}",
            "x^{2} + (w + 1)*x - 3/2",
            "-x",
            "w^{-1}*2*x^{2} + 1",
            "0",
            "x + w^{-1} - w^{-2}*2",
        ] {
            let p: SurrealPoly = parse_polynomial(s).unwrap();
            assert_eq!(print_polynomial(&p), s);
        }
    }

    #[test]
    fn canonical_round_trip_samples() {
        for s in [
            "w - 1",
            "w^{w}*1/2 + 3",
            "-w^{-1}*2",
            "-w^{-2} + w^{-3 + w^{-1}}*7/3",
        ] {
            let a: Surreal = parse_number(s).unwrap();
            assert_eq!(print_canonical(&a), s);
        }
    }
}
