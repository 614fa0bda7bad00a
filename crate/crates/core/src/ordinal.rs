//! Hereditarily finite ordinals in Cantor normal form and their embedding
//! into the normal forms.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::{Number, Term};

/// `ω^{e_0}·m_0 + ω^{e_1}·m_1 + …` with `e_0 > e_1 > …` and `m_i ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CnfOrdinal {
    terms: Vec<(CnfOrdinal, u64)>,
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            CnfOrdinal {
                terms: vec![(Self::zero(), n)],
            }
        }
    }

    /// `ω^e`.
    pub fn omega_pow(e: CnfOrdinal) -> Self {
        CnfOrdinal {
            terms: vec![(e, 1)],
        }
    }

    /// Builds from `(exponent, multiplicity)` pairs; returns `None` unless
    /// exponents strictly decrease and multiplicities are positive.
    pub fn from_terms(terms: Vec<(CnfOrdinal, u64)>) -> Option<Self> {
        let ok = terms.iter().all(|(_, m)| *m > 0) && terms.windows(2).all(|w| w[0].0 > w[1].0);
        ok.then_some(CnfOrdinal { terms })
    }

    pub fn terms(&self) -> &[(CnfOrdinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Standard Cantor-normal-form comparison, independent of the surreal order.
impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.0.cmp(&b.0).then(a.1.cmp(&b.1)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{m}")?;
                continue;
            }
            if *e == CnfOrdinal::finite(1) {
                f.write_str("w")?;
            } else {
                write!(f, "w^{{{e}}}")?;
            }
            if *m != 1 {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

pub fn embed_ordinal<C: Coeff>(o: &CnfOrdinal) -> Number<C> {
    let terms = o
        .terms
        .iter()
        .map(|(e, m)| {
            Term::new(
                embed_ordinal(e),
                C::from_natural(usize::try_from(*m).expect("multiplicity fits in usize")),
            )
            .expect("m > 0")
        })
        .collect();
    Number::from_sorted_terms(terms)
}

/// Inverse of [`embed_ordinal`].
pub fn ordinal_of<C: Coeff>(a: &Number<C>) -> Result<CnfOrdinal> {
    let not_ordinal = || Error::NotAnOrdinal(a.to_string());
    let terms = a
        .terms()
        .iter()
        .map(|t| {
            let m = t
                .coefficient()
                .to_natural()
                .filter(|m| !m.is_zero())
                .ok_or_else(not_ordinal)?;
            let e = ordinal_of(t.exponent()).map_err(|_| not_ordinal())?;
            Ok((e, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CnfOrdinal { terms })
}
