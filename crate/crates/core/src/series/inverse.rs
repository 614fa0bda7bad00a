use num_traits::{One, Zero};

use super::mul::mul;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::Number;

/// A truncated series result together with its exact defect.
///
/// For [`inverse_with_residual`] the residual is `a·b − 1`; for square
/// roots it is `b² − a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated<C> {
    pub value: Number<C>,
    pub residual: Number<C>,
    /// Correction steps actually performed (fewer than requested when the
    /// result became exact).
    pub steps: usize,
}

impl<C: Coeff> Truncated<C> {
    pub fn is_exact(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Truncated inverse; see [`inverse_with_residual`].
pub fn inverse<C: Coeff>(a: &Number<C>, order: usize) -> Result<Number<C>> {
    inverse_with_residual(a, order).map(|t| t.value)
}

/// Inverse by successive correction.
///
/// Writing `a = ω^{a_0} r_0 (1 + ε)`, the monomial part inverts exactly.
/// For `1 + ε` we start from `b = 1` and, `order` times, cancel the
/// leading term `ω^c t` of the residual `(1 + ε)·b − 1` by adding
/// `−ω^c t` to `b`. Each `c` is a sum of exponents of `ε`, so the residual
/// after `n` steps lies strictly below the `n`-th element of the doublure
/// of `{a_i − a_0}`. The residual of the normalized problem equals
/// `a·inverse(a) − 1` exactly.
pub fn inverse_with_residual<C: Coeff>(a: &Number<C>, order: usize) -> Result<Truncated<C>> {
    let lead = a.leading().ok_or(Error::DivisionByZero)?;
    let lead_exp = lead.exponent().negate();
    let lead_inv = C::one() / lead.coefficient().clone();
    let unit = a.mul_monomial(&lead_exp, &lead_inv);

    let mut b = Number::one();
    let mut residual = &unit - &Number::one();
    let mut steps = 0;
    while steps < order {
        let Some(t) = residual.leading() else { break };
        let (c, s) = (t.exponent().clone(), -t.coefficient().clone());
        b += &Number::monomial(c.clone(), s.clone());
        residual += &unit.mul_monomial(&c, &s);
        steps += 1;
    }
    Ok(Truncated {
        value: b.mul_monomial(&lead_exp, &lead_inv),
        residual,
        steps,
    })
}

/// `a · inverse(b, order)`.
pub fn divide<C: Coeff>(a: &Number<C>, b: &Number<C>, order: usize) -> Result<Number<C>> {
    divide_with_residual(a, b, order).map(|t| t.value)
}

/// Like [`divide`], with residual `a·(b·inverse(b) − 1)`, i.e. the
/// quotient's defect `q·b − a`.
pub fn divide_with_residual<C: Coeff>(
    a: &Number<C>,
    b: &Number<C>,
    order: usize,
) -> Result<Truncated<C>> {
    let inv = inverse_with_residual(b, order)?;
    Ok(Truncated {
        value: mul(a, &inv.value),
        residual: mul(a, &inv.residual),
        steps: inv.steps,
    })
}
