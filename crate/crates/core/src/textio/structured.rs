//! Whitespace-free nested record format:
//! `{"terms":[{"exp":<record>,"coef":"p/q"},…]}` with `{"terms":[]}` for
//! zero. Coefficients are strings so no precision is ever lost.

use serde::{Deserialize, Serialize};

use super::parse::ParseError;
use crate::algebraic::SurrealPolynomial;
use crate::coeff::{from_decimal, Coeff};
use crate::number::{MonomialFamily, Number};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    terms: Vec<TermRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRecord {
    exp: Record,
    coef: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyRecord {
    coeffs: Vec<Record>,
}

fn to_record<C: Coeff>(a: &Number<C>) -> Record {
    Record {
        terms: a
            .terms()
            .iter()
            .map(|t| TermRecord {
                exp: to_record(t.exponent()),
                coef: t.coefficient().to_string(),
            })
            .collect(),
    }
}

fn from_record<C: Coeff>(r: Record) -> Result<Number<C>, ParseError> {
    let mut family = MonomialFamily::new();
    for t in r.terms {
        let coef = parse_coef::<C>(&t.coef)?;
        family.push(from_record(t.exp)?, coef);
    }
    Ok(family.normalize())
}

fn parse_coef<C: Coeff>(s: &str) -> Result<C, ParseError> {
    let bad = || ParseError::Structured(format!("bad coefficient {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (n, d) = body.split_once('/').unwrap_or((body, "1"));
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let n = from_decimal::<C>(n).ok_or_else(bad)?;
    let d = from_decimal::<C>(d).ok_or_else(bad)?;
    if d.is_zero() {
        return Err(ParseError::Structured(format!("zero denominator in {s:?}")));
    }
    let v = n / d;
    Ok(if neg { -v } else { v })
}

pub fn print_structured<C: Coeff>(a: &Number<C>) -> String {
    serde_json::to_string(&to_record(a)).expect("records always serialize")
}

/// Parses the structured format. Input need not be normalized.
pub fn parse_structured<C: Coeff>(text: &str) -> Result<Number<C>, ParseError> {
    let r: Record =
        serde_json::from_str(text).map_err(|e| ParseError::Structured(e.to_string()))?;
    from_record(r)
}

/// `{"coeffs":[…]}`, highest degree first.
pub fn print_structured_polynomial<C: Coeff>(p: &SurrealPolynomial<C>) -> String {
    let rec = PolyRecord {
        coeffs: p.coeffs().iter().rev().map(to_record).collect(),
    };
    serde_json::to_string(&rec).expect("records always serialize")
}
