use std::ops::{Mul, MulAssign};

use num_traits::Zero;

use crate::coeff::Coeff;
use crate::number::{MonomialFamily, Number};

/// The unnormalized convolution family `{ω^{a_i + b_j} r_i s_j}`.
pub fn mul_family<C: Coeff>(a: &Number<C>, b: &Number<C>) -> MonomialFamily<C> {
    a.terms()
        .iter()
        .flat_map(|t| {
            b.terms().iter().map(move |s| {
                (
                    t.exponent() + s.exponent(),
                    t.coefficient().clone() * s.coefficient().clone(),
                )
            })
        })
        .collect()
}

/// Product: the normalized convolution family.
pub fn mul<C: Coeff>(a: &Number<C>, b: &Number<C>) -> Number<C> {
    if a.is_zero() || b.is_zero() {
        return Number::zero();
    }
    if let [t] = a.terms() {
        return b.mul_monomial(t.exponent(), t.coefficient());
    }
    if let [s] = b.terms() {
        return a.mul_monomial(s.exponent(), s.coefficient());
    }
    mul_family(a, b).normalize()
}

impl<C: Coeff> Mul for &Number<C> {
    type Output = Number<C>;

    fn mul(self, rhs: Self) -> Number<C> {
        mul(self, rhs)
    }
}

impl<C: Coeff> Mul for Number<C> {
    type Output = Number<C>;

    fn mul(self, rhs: Self) -> Number<C> {
        mul(&self, &rhs)
    }
}

impl<C: Coeff> MulAssign<&Number<C>> for Number<C> {
    fn mul_assign(&mut self, rhs: &Number<C>) {
        *self = mul(self, rhs);
    }
}
