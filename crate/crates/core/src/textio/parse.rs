//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ("^" power)?
//! atom   := rational | "w" ("^" "{" expr "}")? | ident | "(" expr ")"
//! power  := integer | "{" integer "}"
//! ```
//!
//! `w` is ω and `w` alone is `w^{1}`; `w^n` with a bare literal is
//! accepted as `w^{n}`. Integer powers apply to any atom
//! other than `w`; they are mostly used for a polynomial variable.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::algebraic::SurrealPolynomial;
use crate::coeff::{from_decimal, Coeff};
use crate::error::Error;
use crate::number::Number;
use crate::series::mul;

/// Syntax tree of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression<C> {
    Literal(C),
    /// `w^{e}`.
    OmegaPower(Box<Expression<C>>),
    Variable(String),
    Sum(Box<Expression<C>>, Box<Expression<C>>),
    Difference(Box<Expression<C>>, Box<Expression<C>>),
    Product(Box<Expression<C>>, Box<Expression<C>>),
    Negation(Box<Expression<C>>),
    Power(Box<Expression<C>>, u32),
    Parenthesized(Box<Expression<C>>),
}

/// Parse failures. Positions are 1-based character columns.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unbalanced brace at column {0}")]
    UnbalancedBrace(usize),
    #[error("unbalanced parenthesis at column {0}")]
    UnbalancedParen(usize),
    #[error("zero denominator at column {0}")]
    ZeroDenominator(usize),
    #[error("unexpected {found} at column {pos}, expected {expected}")]
    Unexpected {
        pos: usize,
        found: String,
        expected: &'static str,
    },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unknown variable '{name}' at column {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("exponent too large at column {0}")]
    ExponentTooLarge(usize),
    #[error("the polynomial variable may not appear inside w^{{...}}")]
    VariableInExponent,
    #[error("invalid structured input: {0}")]
    Structured(String),
    #[error("{0}")]
    Domain(Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Ident(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "'{s}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LBrace => f.write_str("'{'"),
            Tok::RBrace => f.write_str("'}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut braces = Vec::new();
    let mut parens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), start + 1));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start + 1));
                continue;
            }
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '{' => {
                braces.push(pos);
                Tok::LBrace
            }
            '}' => {
                braces.pop().ok_or(ParseError::UnbalancedBrace(pos))?;
                Tok::RBrace
            }
            '(' => {
                parens.push(pos);
                Tok::LParen
            }
            ')' => {
                parens.pop().ok_or(ParseError::UnbalancedParen(pos))?;
                Tok::RParen
            }
            other => {
                return Err(ParseError::Unexpected {
                    pos,
                    found: format!("'{other}'"),
                    expected: "an expression",
                })
            }
        };
        out.push((tok, pos));
        i += 1;
    }
    if let Some(&pos) = braces.first() {
        return Err(ParseError::UnbalancedBrace(pos));
    }
    if let Some(&pos) = parens.first() {
        return Err(ParseError::UnbalancedParen(pos));
    }
    Ok(out)
}

struct Parser<C> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    _coeff: std::marker::PhantomData<C>,
}

impl<C: Coeff> Parser<C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn error_here(&self, expected: &'static str) -> ParseError {
        match self.toks.get(self.at) {
            Some((t, pos)) => ParseError::Unexpected {
                pos: *pos,
                found: t.to_string(),
                expected,
            },
            None => ParseError::UnexpectedEnd(expected),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error_here(expected))
        }
    }

    fn expr(&mut self) -> Result<Expression<C>, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    lhs = Expression::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    lhs = Expression::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expression<C>, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            lhs = Expression::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expression<C>, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Expression::Negation(Box::new(self.factor()?)));
        }
        let is_omega = matches!(self.peek(), Some(Tok::Ident(s)) if s == "w");
        let atom = self.atom()?;
        if is_omega || self.peek() != Some(&Tok::Caret) {
            return Ok(atom);
        }
        self.at += 1;
        let braced = self.peek() == Some(&Tok::LBrace);
        if braced {
            self.at += 1;
        }
        let n = match self.bump() {
            Some((Tok::Int(s), pos)) => s
                .parse::<u32>()
                .map_err(|_| ParseError::ExponentTooLarge(pos))?,
            _ => {
                self.at -= 1;
                return Err(self.error_here("a non-negative integer power"));
            }
        };
        if braced {
            self.expect(Tok::RBrace, "'}'")?;
        }
        Ok(Expression::Power(Box::new(atom), n))
    }

    fn atom(&mut self) -> Result<Expression<C>, ParseError> {
        match self.bump() {
            Some((Tok::Int(num), pos)) => {
                let numer = from_decimal::<C>(&num).ok_or_else(|| ParseError::Unexpected {
                    pos,
                    found: format!("'{num}'"),
                    expected: "a rational",
                })?;
                if self.peek() != Some(&Tok::Slash) {
                    return Ok(Expression::Literal(numer));
                }
                self.at += 1;
                match self.bump() {
                    Some((Tok::Int(den), dpos)) => {
                        let denom =
                            from_decimal::<C>(&den).ok_or_else(|| ParseError::Unexpected {
                                pos: dpos,
                                found: format!("'{den}'"),
                                expected: "a denominator",
                            })?;
                        if denom.is_zero() {
                            return Err(ParseError::ZeroDenominator(dpos));
                        }
                        Ok(Expression::Literal(numer / denom))
                    }
                    _ => {
                        self.at -= 1;
                        Err(self.error_here("a denominator"))
                    }
                }
            }
            Some((Tok::Ident(name), _)) if name == "w" => {
                if self.peek() != Some(&Tok::Caret) {
                    return Ok(Expression::OmegaPower(Box::new(Expression::Literal(
                        C::one(),
                    ))));
                }
                self.at += 1;
                if let Some(Tok::Int(_)) = self.peek() {
                    return Ok(Expression::OmegaPower(Box::new(self.atom()?)));
                }
                self.expect(Tok::LBrace, "'{' after 'w^'")?;
                let e = self.expr()?;
                self.expect(Tok::RBrace, "'}'")?;
                Ok(Expression::OmegaPower(Box::new(e)))
            }
            Some((Tok::Ident(name), _)) => Ok(Expression::Variable(name)),
            Some((Tok::LParen, _)) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expression::Parenthesized(Box::new(e)))
            }
            Some(_) => {
                self.at -= 1;
                Err(self.error_here("an expression"))
            }
            None => Err(ParseError::UnexpectedEnd("an expression")),
        }
    }
}

/// Positions of variables are not kept in the tree, so lookups report the
/// first occurrence of the name in the source text.
fn column_of(text: &str, name: &str) -> usize {
    text.find(name)
        .map(|b| text[..b].chars().count() + 1)
        .unwrap_or(0)
}

/// Parses `text` into an [`Expression`].
pub fn parse_expression<C: Coeff>(text: &str) -> Result<Expression<C>, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        _coeff: std::marker::PhantomData,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.error_here("an operator or end of input"));
    }
    Ok(e)
}

pub type Env<C> = HashMap<String, Number<C>>;

impl<C: Coeff> Expression<C> {
    /// Evaluates with number-valued variables from `env`.
    pub fn eval(&self, env: &Env<C>) -> Result<Number<C>, String> {
        Ok(match self {
            Expression::Literal(c) => Number::real(c.clone()),
            Expression::OmegaPower(e) => Number::exp_omega(e.eval(env)?),
            Expression::Variable(name) => env.get(name).cloned().ok_or_else(|| name.clone())?,
            Expression::Sum(a, b) => &a.eval(env)? + &b.eval(env)?,
            Expression::Difference(a, b) => &a.eval(env)? - &b.eval(env)?,
            Expression::Product(a, b) => mul(&a.eval(env)?, &b.eval(env)?),
            Expression::Negation(a) => a.eval(env)?.negate(),
            Expression::Power(a, n) => {
                let base = a.eval(env)?;
                (0..*n).fold(Number::one(), |acc, _| mul(&acc, &base))
            }
            Expression::Parenthesized(a) => a.eval(env)?,
        })
    }

    /// Evaluates as a polynomial in `var`, other variables from `env`.
    pub fn eval_poly(&self, var: &str, env: &Env<C>) -> Result<SurrealPolynomial<C>, ParseError> {
        let unknown = |name: &str| ParseError::UnknownVariable {
            pos: 0,
            name: name.to_string(),
        };
        Ok(match self {
            Expression::Literal(c) => SurrealPolynomial::constant(Number::real(c.clone())),
            Expression::OmegaPower(e) => {
                if e.mentions(var) {
                    return Err(ParseError::VariableInExponent);
                }
                let exp = e.eval(env).map_err(|n| unknown(&n))?;
                SurrealPolynomial::constant(Number::exp_omega(exp))
            }
            Expression::Variable(name) if name == var => SurrealPolynomial::x(),
            Expression::Variable(name) => {
                SurrealPolynomial::constant(env.get(name).cloned().ok_or_else(|| unknown(name))?)
            }
            Expression::Sum(a, b) => &a.eval_poly(var, env)? + &b.eval_poly(var, env)?,
            Expression::Difference(a, b) => &a.eval_poly(var, env)? - &b.eval_poly(var, env)?,
            Expression::Product(a, b) => &a.eval_poly(var, env)? * &b.eval_poly(var, env)?,
            Expression::Negation(a) => -&a.eval_poly(var, env)?,
            Expression::Power(a, n) => {
                let base = a.eval_poly(var, env)?;
                (0..*n).fold(SurrealPolynomial::one(), |acc, _| &acc * &base)
            }
            Expression::Parenthesized(a) => a.eval_poly(var, env)?,
        })
    }

    fn mentions(&self, var: &str) -> bool {
        match self {
            Expression::Literal(_) => false,
            Expression::Variable(name) => name == var,
            Expression::OmegaPower(a)
            | Expression::Negation(a)
            | Expression::Power(a, _)
            | Expression::Parenthesized(a) => a.mentions(var),
            Expression::Sum(a, b) | Expression::Difference(a, b) | Expression::Product(a, b) => {
                a.mentions(var) || b.mentions(var)
            }
        }
    }
}

/// Parses and evaluates an expression (or a structured record) with
/// variables from `env`.
pub fn parse_number_with<C: Coeff>(text: &str, env: &Env<C>) -> Result<Number<C>, ParseError> {
    if text.trim_start().starts_with('{') {
        return super::structured::parse_structured(text);
    }
    parse_expression::<C>(text)?
        .eval(env)
        .map_err(|name| ParseError::UnknownVariable {
            pos: column_of(text, &name),
            name,
        })
}

/// Parses a number in canonical or structured syntax.
pub fn parse_number<C: Coeff>(text: &str) -> Result<Number<C>, ParseError> {
    parse_number_with(text, &Env::new())
}

/// Parses a polynomial in the variable `x`.
pub fn parse_polynomial<C: Coeff>(text: &str) -> Result<SurrealPolynomial<C>, ParseError> {
    parse_polynomial_with(text, "x", &Env::new())
}

pub fn parse_polynomial_with<C: Coeff>(
    text: &str,
    var: &str,
    env: &Env<C>,
) -> Result<SurrealPolynomial<C>, ParseError> {
    parse_expression::<C>(text)?
        .eval_poly(var, env)
        .map_err(|e| match e {
            ParseError::UnknownVariable { name, .. } => ParseError::UnknownVariable {
                pos: column_of(text, &name),
                name,
            },
            other => other,
        })
}
