use super::{Number, Term};
use crate::coeff::Coeff;

/// An unnormalized finite family of monomials `ω^e · c`.
///
/// Repeated exponents and zero coefficients are allowed; this is the
/// "long form" that [`MonomialFamily::normalize`] turns into a [`Number`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialFamily<C> {
    entries: Vec<(Number<C>, C)>,
}

impl<C: Coeff> MonomialFamily<C> {
    pub fn new() -> Self {
        MonomialFamily {
            entries: Vec::new(),
        }
    }

    pub fn from_pairs(entries: Vec<(Number<C>, C)>) -> Self {
        MonomialFamily { entries }
    }

    pub fn push(&mut self, exponent: Number<C>, coefficient: C) {
        self.entries.push((exponent, coefficient));
    }

    pub fn extend_from_number(&mut self, a: &Number<C>) {
        self.entries.extend(
            a.terms()
                .iter()
                .map(|t| (t.exponent().clone(), t.coefficient().clone())),
        );
    }

    pub fn entries(&self) -> &[(Number<C>, C)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn normalize(mut self) -> Number<C> {
        self.entries.retain(|(_, c)| !c.is_zero());
        self.entries.sort_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<Term<C>> = Vec::with_capacity(self.entries.len());
        let mut pending: Option<(Number<C>, C)> = None;
        for (e, c) in self.entries {
            pending = match pending {
                Some((pe, pc)) if pe == e => Some((pe, pc + c)),
                Some((pe, pc)) => {
                    terms.extend(Term::new(pe, pc));
                    Some((e, c))
                }
                None => Some((e, c)),
            };
        }
        if let Some((pe, pc)) = pending {
            terms.extend(Term::new(pe, pc));
        }
        Number::from_sorted_terms(terms)
    }
}

impl<C: Coeff> FromIterator<(Number<C>, C)> for MonomialFamily<C> {
    fn from_iter<I: IntoIterator<Item = (Number<C>, C)>>(iter: I) -> Self {
        MonomialFamily {
            entries: iter.into_iter().collect(),
        }
    }
}
