//! Normal forms `Σ ω^{a_i} r_i` with strictly decreasing exponents.

mod family;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::coeff::Coeff;

pub use family::MonomialFamily;

/// One monomial `ω^exponent · coefficient` of a normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term<C> {
    exponent: Number<C>,
    coefficient: C,
}

impl<C: Coeff> Term<C> {
    /// Returns `None` for a zero coefficient.
    pub fn new(exponent: Number<C>, coefficient: C) -> Option<Self> {
        (!coefficient.is_zero()).then_some(Term {
            exponent,
            coefficient,
        })
    }

    pub fn exponent(&self) -> &Number<C> {
        &self.exponent
    }

    pub fn coefficient(&self) -> &C {
        &self.coefficient
    }

    pub fn into_parts(self) -> (Number<C>, C) {
        (self.exponent, self.coefficient)
    }
}

/// A number in normal form.
///
/// Invariants: exponents strictly decrease, every coefficient is nonzero,
/// and zero is the empty sum. Structural equality therefore coincides with
/// numeric equality, and `Ord` is the numeric order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Number<C> {
    terms: Vec<Term<C>>,
}

/// Predicates of [`Number::classify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Classification {
    pub is_zero: bool,
    pub is_real: bool,
    pub is_ordinal: bool,
    pub is_infinitesimal: bool,
    pub is_purely_infinite: bool,
}

impl<C: Coeff> Number<C> {
    /// Wraps terms already known to be in normal form.
    pub(crate) fn from_sorted_terms(terms: Vec<Term<C>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].exponent > w[1].exponent));
        Number { terms }
    }

    pub fn real(c: C) -> Self {
        Self::monomial(Self::zero(), c)
    }

    pub fn monomial(exponent: Self, coefficient: C) -> Self {
        Number {
            terms: Term::new(exponent, coefficient).into_iter().collect(),
        }
    }

    /// `ω^y`.
    pub fn exp_omega(y: Self) -> Self {
        Self::monomial(y, C::one())
    }

    /// `ω`.
    pub fn omega() -> Self {
        Self::exp_omega(Self::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(C::from_int(n))
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<C>> {
        self.terms
    }

    pub fn leading(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn leading_exponent(&self) -> Option<&Self> {
        self.leading().map(Term::exponent)
    }

    /// The exponent set of the short form `(A, r)`, decreasing.
    pub fn exponents(&self) -> impl Iterator<Item = &Self> {
        self.terms.iter().map(Term::exponent)
    }

    /// The coefficient at `ω^exponent`, zero if absent.
    pub fn coefficient_at(&self, exponent: &Self) -> C {
        self.terms
            .binary_search_by(|t| exponent.cmp(&t.exponent))
            .map(|i| self.terms[i].coefficient.clone())
            .unwrap_or_else(|_| C::zero())
    }

    /// Number of terms of the normal form, `h(a)`.
    pub fn height(&self) -> usize {
        self.terms.len()
    }

    pub fn is_positive(&self) -> bool {
        self.leading().is_some_and(|t| t.coefficient.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.leading().is_some_and(|t| t.coefficient.is_negative())
    }

    /// Total order on normal forms.
    ///
    /// At the first position where the terms differ, either the exponents
    /// agree and the coefficients decide, or the larger exponent leads
    /// `a - b` and its coefficient's sign decides.
    pub fn compare(&self, other: &Self) -> Ordering {
        let sign = |c: &C| {
            if c.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        };
        let mut lhs = self.terms.iter();
        let mut rhs = other.terms.iter();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Ordering::Equal,
                (Some(t), None) => return sign(&t.coefficient),
                (None, Some(s)) => return sign(&s.coefficient).reverse(),
                (Some(t), Some(s)) => match t.exponent.compare(&s.exponent) {
                    Ordering::Equal => match t.coefficient.cmp(&s.coefficient) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                    Ordering::Greater => return sign(&t.coefficient),
                    Ordering::Less => return sign(&s.coefficient).reverse(),
                },
            }
        }
    }

    pub fn negate(&self) -> Self {
        Number {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: -t.coefficient.clone(),
                })
                .collect(),
        }
    }

    pub fn scalar_mul(&self, r: &C) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Number {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: t.coefficient.clone() * r.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies by the monomial `ω^exponent · coefficient`.
    ///
    /// Adding a fixed exponent preserves the strict decrease, so no
    /// renormalization is needed.
    pub fn mul_monomial(&self, exponent: &Self, coefficient: &C) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        Number {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: &t.exponent + exponent,
                    coefficient: t.coefficient.clone() * coefficient.clone(),
                })
                .collect(),
        }
    }

    /// Sum by merging the two decreasing term lists.
    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (t, s) = (&self.terms[i], &other.terms[j]);
            match t.exponent.compare(&s.exponent) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(s.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = t.coefficient.clone() + s.coefficient.clone();
                    if !c.is_zero() {
                        out.push(Term {
                            exponent: t.exponent.clone(),
                            coefficient: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Number { terms: out }
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Term<C>) -> bool) -> Self {
        Number {
            terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }

    pub fn classify(&self) -> Classification {
        let zero = Self::zero();
        Classification {
            is_zero: self.is_zero(),
            is_real: self.is_zero() || (self.terms.len() == 1 && self.terms[0].exponent.is_zero()),
            is_ordinal: self.is_ordinal(),
            is_infinitesimal: self.exponents().all(|e| *e < zero),
            is_purely_infinite: self.exponents().all(|e| *e > zero),
        }
    }

    /// Exponents are recursively ordinals and coefficients positive integers.
    pub fn is_ordinal(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.coefficient.to_natural().is_some_and(|n| n > 0) && t.exponent.is_ordinal())
    }

    /// Least `α` with `self ∈ K_α`: 0 for zero, else one more than the
    /// largest rank among the exponents.
    pub fn liminal_rank(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        1 + self.exponents().map(Self::liminal_rank).max().unwrap_or(0)
    }

    /// Maximum exponent nesting; zero for zero and the reals.
    pub fn depth(&self) -> usize {
        self.exponents()
            .map(|e| if e.is_zero() { 0 } else { 1 + e.depth() })
            .max()
            .unwrap_or(0)
    }
}

/// Normalizes a monomial family: groups equal exponents, drops zeros and
/// sorts decreasingly.
pub fn normalize<C: Coeff>(family: MonomialFamily<C>) -> Number<C> {
    family.normalize()
}

impl<C: Coeff> PartialOrd for Number<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coeff> Ord for Number<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl<C: Coeff> Zero for Number<C> {
    fn zero() -> Self {
        Number { terms: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for Number<C> {
    fn one() -> Self {
        Self::real(C::one())
    }
}

impl<C: Coeff> From<C> for Number<C> {
    fn from(c: C) -> Self {
        Self::real(c)
    }
}

impl<C: Coeff> Add for &Number<C> {
    type Output = Number<C>;

    fn add(self, rhs: Self) -> Number<C> {
        self.add_ref(rhs)
    }
}

impl<C: Coeff> Add for Number<C> {
    type Output = Number<C>;

    fn add(self, rhs: Self) -> Number<C> {
        self.add_ref(&rhs)
    }
}

impl<C: Coeff> AddAssign<&Number<C>> for Number<C> {
    fn add_assign(&mut self, rhs: &Number<C>) {
        *self = self.add_ref(rhs);
    }
}

impl<C: Coeff> Sub for &Number<C> {
    type Output = Number<C>;

    fn sub(self, rhs: Self) -> Number<C> {
        self.add_ref(&rhs.negate())
    }
}

impl<C: Coeff> Sub for Number<C> {
    type Output = Number<C>;

    fn sub(self, rhs: Self) -> Number<C> {
        &self - &rhs
    }
}

impl<C: Coeff> SubAssign<&Number<C>> for Number<C> {
    fn sub_assign(&mut self, rhs: &Number<C>) {
        *self = &*self - rhs;
    }
}

impl<C: Coeff> Neg for &Number<C> {
    type Output = Number<C>;

    fn neg(self) -> Number<C> {
        self.negate()
    }
}

impl<C: Coeff> Neg for Number<C> {
    type Output = Number<C>;

    fn neg(self) -> Number<C> {
        self.negate()
    }
}

impl<C: Coeff> fmt::Display for Number<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::print_canonical(self))
    }
}
