//! Dense univariate polynomials over a coefficient field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// A polynomial with coefficients in `C`, stored lowest degree first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> DensePoly<C> {
    /// Builds a polynomial from coefficients ordered lowest degree first.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    /// Builds a polynomial from coefficients ordered highest degree first.
    pub fn from_desc(mut coeffs: Vec<C>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: C) -> Self {
        Self::new(vec![-root, C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coefficients_desc(&self) -> Vec<C> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&(C::one() / lc.clone())),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_natural(i))
                .collect(),
        )
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![C::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Degree(format!("{divisor} does not divide {self}")))
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

/// Euclidean division `e = c * r + g` with `deg g < deg r`.
pub fn poly_euclid<C: Coeff>(
    e: &DensePoly<C>,
    r: &DensePoly<C>,
) -> Result<(DensePoly<C>, DensePoly<C>)> {
    e.div_rem(r)
}

/// Bézout coefficients `(x, y)` with `x*q + y*r = 1`.
///
/// When `r` is non-constant, `x` is reduced modulo `r`, which makes the
/// pair unique (`deg x < deg r`, `deg y < deg q`). Fails with
/// [`Error::NotCoprime`] when the gcd is not constant.
pub fn poly_bezout<C: Coeff>(
    q: &DensePoly<C>,
    r: &DensePoly<C>,
) -> Result<(DensePoly<C>, DensePoly<C>)> {
    if q.is_zero() || r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.degree() == Some(0) {
        let inv = C::one() / q.coeffs[0].clone();
        return Ok((DensePoly::constant(inv), DensePoly::zero()));
    }
    // Extended Euclid keeping only the coefficient of q.
    let (mut r0, mut r1) = (q.clone(), r.clone());
    let (mut s0, mut s1) = (DensePoly::one(), DensePoly::zero());
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1)?;
        let s2 = &s0 - &(&quot * &s1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    let inv = C::one() / r0.coeffs[0].clone();
    let mut x = s0.scale(&inv);
    if r.degree() > Some(0) {
        x = x.div_rem(r)?.1;
    }
    let y = (&DensePoly::one() - &(&x * q)).div_exact(r)?;
    Ok((x, y))
}

impl<C: Coeff> Zero for DensePoly<C> {
    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for DensePoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coeff> Add for &DensePoly<C> {
    type Output = DensePoly<C>;

    fn add(self, rhs: Self) -> DensePoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &DensePoly<C> {
    type Output = DensePoly<C>;

    fn sub(self, rhs: Self) -> DensePoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &DensePoly<C> {
    type Output = DensePoly<C>;

    fn mul(self, rhs: Self) -> DensePoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::new(out)
    }
}

impl<C: Coeff> Neg for &DensePoly<C> {
    type Output = DensePoly<C>;

    fn neg(self) -> DensePoly<C> {
        DensePoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for DensePoly<C> {
            type Output = DensePoly<C>;
            fn $m(self, rhs: Self) -> DensePoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> fmt::Display for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{{{d}}}"),
            };
            if d == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn p(desc: &[i64]) -> DensePoly<Rational> {
        DensePoly::from_desc(desc.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn euclid_examples() {
        let (c, g) = poly_euclid(&p(&[1, 0, 0, 0]), &p(&[1, 0, -1])).unwrap();
        assert_eq!(c, p(&[1, 0]));
        assert_eq!(g, p(&[1, 0]));

        let (c, g) = poly_euclid(&DensePoly::zero(), &p(&[1, 0, -1])).unwrap();
        assert!(c.is_zero() && g.is_zero());

        let (c, g) = poly_euclid(&p(&[2, 3]), &p(&[1, 0, -1])).unwrap();
        assert!(c.is_zero());
        assert_eq!(g, p(&[2, 3]));

        assert_eq!(
            poly_euclid(&p(&[1]), &DensePoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn bezout_examples() {
        let (x, y) = poly_bezout(&p(&[1, 0]), &p(&[1, 0, -1])).unwrap();
        assert_eq!(x, p(&[1, 0]));
        assert_eq!(y, p(&[-1]));

        assert_eq!(
            poly_bezout(&p(&[1, 0]), &p(&[1, 0, 0])),
            Err(Error::NotCoprime)
        );

        let (x, y) = poly_bezout(&p(&[1]), &p(&[3, 1, 4])).unwrap();
        assert_eq!(x, p(&[1]));
        assert!(y.is_zero());
    }

    #[test]
    fn gcd_and_derivative() {
        let a = p(&[1, 0, -1]);
        let b = p(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, -1]));
        assert_eq!(p(&[1, 0, 0, -1]).derivative(), p(&[3, 0, 0]));
        assert_eq!(p(&[1, 0, -1]).eval(&q(3)), q(8));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -1]).to_string(), "x^{2} - 1");
        assert_eq!(p(&[-2, 1, 0]).to_string(), "-2*x^{2} + x");
        assert_eq!(DensePoly::<Rational>::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = DensePoly<Rational>> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..=7).prop_map(|cs| {
            DensePoly::new(
                cs.into_iter()
                    .map(|(n, d)| Rational::new(n.into(), d.into()))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn euclid_reconstructs(e in arb_poly(), r in arb_poly()) {
            prop_assume!(!r.is_zero());
            let (c, g) = poly_euclid(&e, &r).unwrap();
            prop_assert_eq!(&(&c * &r) + &g, e);
            prop_assert!(g.degree() < r.degree());
        }

        #[test]
        fn bezout_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            match poly_bezout(&a, &b) {
                Ok((x, y)) => prop_assert_eq!(&(&x * &a) + &(&y * &b), DensePoly::one()),
                Err(e) => {
                    prop_assert_eq!(e, Error::NotCoprime);
                    prop_assert!(a.gcd(&b).degree() > Some(0));
                }
            }
        }
    }
}
