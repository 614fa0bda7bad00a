use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::Number;
use crate::poly::DensePoly;
use crate::series::mul;

/// A polynomial in one variable with normal-form coefficients, stored
/// lowest degree first with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SurrealPolynomial<C> {
    coeffs: Vec<Number<C>>,
}

/// A coefficient split as `real + infinitesimal`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealInfinitesimalSplit<C> {
    pub real_part: C,
    pub infinitesimal_part: Number<C>,
}

/// Splits `c` into its exponent-0 coefficient and the terms below it.
/// Fails when `c` has a term with positive exponent.
pub fn split_real_infinitesimal<C: Coeff>(c: &Number<C>) -> Result<RealInfinitesimalSplit<C>> {
    let zero = Number::zero();
    if c.leading_exponent().is_some_and(|e| *e > zero) {
        return Err(Error::NotSplittable(c.to_string()));
    }
    Ok(RealInfinitesimalSplit {
        real_part: c.coefficient_at(&zero),
        infinitesimal_part: c.filter_terms(|t| *t.exponent() < zero),
    })
}

impl<C: Coeff> SurrealPolynomial<C> {
    pub fn new(mut coeffs: Vec<Number<C>>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SurrealPolynomial { coeffs }
    }

    pub fn from_desc(mut coeffs: Vec<Number<C>>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn constant(c: Number<C>) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Number::zero(), Number::one()])
    }

    pub fn from_rational(p: &DensePoly<C>) -> Self {
        Self::new(p.coeffs().iter().cloned().map(Number::real).collect())
    }

    pub fn coeffs(&self) -> &[Number<C>] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Number<C> {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(Number::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Number<C>) -> Self {
        Self::new(self.coeffs.iter().map(|a| mul(a, c)).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Number<C>) -> Number<C> {
        self.coeffs
            .iter()
            .rev()
            .fold(Number::zero(), |acc, c| &mul(&acc, x) + c)
    }

    /// `self(scale·y + shift)` as a polynomial in `y`.
    pub fn substitute_affine(&self, scale: &Number<C>, shift: &Number<C>) -> Self {
        let lin = SurrealPolynomial::new(vec![shift.clone(), scale.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone())
        })
    }

    /// Rational polynomial of the exponent-0 coefficients. Requires a monic
    /// input with no infinite coefficient.
    pub fn real_part(&self) -> Result<DensePoly<C>> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let reals = self
            .coeffs
            .iter()
            .map(|c| split_real_infinitesimal(c).map(|s| s.real_part))
            .collect::<Result<Vec<_>>>()?;
        Ok(DensePoly::new(reals))
    }

    /// Polynomial of the coefficients of `ω^exponent` in each coefficient.
    pub fn slice_at(&self, exponent: &Number<C>) -> DensePoly<C> {
        DensePoly::new(
            self.coeffs
                .iter()
                .map(|c| c.coefficient_at(exponent))
                .collect(),
        )
    }

    /// The largest leading exponent over all coefficients.
    pub fn leading_exponent(&self) -> Option<Number<C>> {
        self.coeffs
            .iter()
            .filter_map(|c| c.leading_exponent())
            .max()
            .cloned()
    }
}

/// The real part of a monic polynomial whose coefficients are all finite.
pub fn real_part_poly<C: Coeff>(f: &SurrealPolynomial<C>) -> Result<DensePoly<C>> {
    f.real_part()
}

/// Horner evaluation.
pub fn poly_eval<C: Coeff>(f: &SurrealPolynomial<C>, x: &Number<C>) -> Number<C> {
    f.eval(x)
}

impl<C: Coeff> Zero for SurrealPolynomial<C> {
    fn zero() -> Self {
        SurrealPolynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for SurrealPolynomial<C> {
    fn one() -> Self {
        Self::constant(Number::one())
    }
}

impl<C: Coeff> Add for &SurrealPolynomial<C> {
    type Output = SurrealPolynomial<C>;

    fn add(self, rhs: Self) -> SurrealPolynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SurrealPolynomial::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &SurrealPolynomial<C> {
    type Output = SurrealPolynomial<C>;

    fn sub(self, rhs: Self) -> SurrealPolynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SurrealPolynomial::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &SurrealPolynomial<C> {
    type Output = SurrealPolynomial<C>;

    fn mul(self, rhs: Self) -> SurrealPolynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return SurrealPolynomial::zero();
        }
        let mut out = vec![Number::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &mul(a, b);
            }
        }
        SurrealPolynomial::new(out)
    }
}

impl<C: Coeff> Neg for &SurrealPolynomial<C> {
    type Output = SurrealPolynomial<C>;

    fn neg(self) -> SurrealPolynomial<C> {
        SurrealPolynomial::new(self.coeffs.iter().map(Number::negate).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for SurrealPolynomial<C> {
            type Output = SurrealPolynomial<C>;
            fn $m(self, rhs: Self) -> SurrealPolynomial<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `f · g`.
pub fn poly_mul<C: Coeff>(
    f: &SurrealPolynomial<C>,
    g: &SurrealPolynomial<C>,
) -> SurrealPolynomial<C> {
    f * g
}

/// `f + g`.
pub fn poly_add<C: Coeff>(
    f: &SurrealPolynomial<C>,
    g: &SurrealPolynomial<C>,
) -> SurrealPolynomial<C> {
    f + g
}
