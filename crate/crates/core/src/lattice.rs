//! The cone `J` of very positive numbers (all coefficients positive) and
//! the lattice structure it induces.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::coeff::Coeff;
use crate::number::{Number, Term};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConeVerdict {
    InJ,
    NotInJ,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeWitness<C> {
    pub subject: Number<C>,
    pub verdict: ConeVerdict,
    /// Largest exponent carrying a negative coefficient.
    pub offending_exponent: Option<Number<C>>,
}

/// Result of [`prec_compare`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrecOrdering {
    Succ,
    Prec,
    Equal,
    Incomparable,
}

impl PrecOrdering {
    pub fn as_str(self) -> &'static str {
        match self {
            PrecOrdering::Succ => "succ",
            PrecOrdering::Prec => "prec",
            PrecOrdering::Equal => "equal",
            PrecOrdering::Incomparable => "incomparable",
        }
    }
}

pub fn very_positive<C: Coeff>(a: &Number<C>) -> ConeWitness<C> {
    let offending = a
        .terms()
        .iter()
        .find(|t| t.coefficient().is_negative())
        .map(|t| t.exponent().clone());
    ConeWitness {
        subject: a.clone(),
        verdict: if offending.is_some() {
            ConeVerdict::NotInJ
        } else {
            ConeVerdict::InJ
        },
        offending_exponent: offending,
    }
}

pub fn in_cone<C: Coeff>(a: &Number<C>) -> bool {
    a.terms().iter().all(|t| t.coefficient().is_positive())
}

/// `a ≻ b` iff `a − b ∈ J`.
pub fn prec_compare<C: Coeff>(a: &Number<C>, b: &Number<C>) -> PrecOrdering {
    let d = a - b;
    if d.is_zero() {
        PrecOrdering::Equal
    } else if in_cone(&d) {
        PrecOrdering::Succ
    } else if in_cone(&d.negate()) {
        PrecOrdering::Prec
    } else {
        PrecOrdering::Incomparable
    }
}

/// `a⁺`: the terms with positive coefficient.
pub fn pos_part<C: Coeff>(a: &Number<C>) -> Number<C> {
    a.filter_terms(|t| t.coefficient().is_positive())
}

/// `a⁻`: minus the terms with negative coefficient, so `a = a⁺ − a⁻`.
pub fn neg_part<C: Coeff>(a: &Number<C>) -> Number<C> {
    a.filter_terms(|t| t.coefficient().is_negative()).negate()
}

/// `|a| = a⁺ + a⁻`, i.e. every coefficient replaced by its absolute value.
pub fn abs<C: Coeff>(a: &Number<C>) -> Number<C> {
    &pos_part(a) + &neg_part(a)
}

/// Coefficient-wise combination over the union support, absent
/// coefficients read as zero.
fn zip_coefficients<C: Coeff>(a: &Number<C>, b: &Number<C>, pick: impl Fn(C, C) -> C) -> Number<C> {
    let (x, y) = (a.terms(), b.terms());
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ord = match (x.get(i), y.get(j)) {
            (Some(t), Some(s)) => t.exponent().cmp(s.exponent()),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        let (e, c) = match ord {
            Ordering::Greater => {
                i += 1;
                (
                    x[i - 1].exponent(),
                    pick(x[i - 1].coefficient().clone(), C::zero()),
                )
            }
            Ordering::Less => {
                j += 1;
                (
                    y[j - 1].exponent(),
                    pick(C::zero(), y[j - 1].coefficient().clone()),
                )
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
                (
                    x[i - 1].exponent(),
                    pick(
                        x[i - 1].coefficient().clone(),
                        y[j - 1].coefficient().clone(),
                    ),
                )
            }
        };
        out.extend(Term::new(e.clone(), c));
    }
    Number::from_sorted_terms(out)
}

/// `a ∨ b`: coefficient-wise maximum.
pub fn join<C: Coeff>(a: &Number<C>, b: &Number<C>) -> Number<C> {
    zip_coefficients(a, b, std::cmp::max)
}

/// `a ∧ b`: coefficient-wise minimum.
pub fn meet<C: Coeff>(a: &Number<C>, b: &Number<C>) -> Number<C> {
    zip_coefficients(a, b, std::cmp::min)
}
