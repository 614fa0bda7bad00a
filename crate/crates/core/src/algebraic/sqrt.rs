use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::Number;
use crate::series::{mul, Truncated};

/// Truncated square root; see [`sqrt_with_residual`].
pub fn sqrt<C: Coeff>(a: &Number<C>, order: usize) -> Result<Number<C>> {
    sqrt_with_residual(a, order).map(|t| t.value)
}

/// Square root of a positive number by successive correction.
///
/// The leading monomial `ω^{a_0} r_0` has root `ω^{a_0/2} √r_0`, which must
/// be rational. For the unit part `1 + ε` we start from `b = 1` and, up to
/// `order` times, take the leading term `ω^c t` of `b² − (1 + ε)` and add
/// `ω^c·(−t/2)` to `b`, which cancels it. The returned residual is
/// `value² − a`.
pub fn sqrt_with_residual<C: Coeff>(a: &Number<C>, order: usize) -> Result<Truncated<C>> {
    if !a.is_positive() {
        return Err(Error::NotPositive(a.to_string()));
    }
    let lead = a.leading().expect("positive numbers are nonzero");
    let root_coeff = lead
        .coefficient()
        .sqrt_exact()
        .ok_or_else(|| Error::NotASquare(lead.coefficient().to_string()))?;
    let half_exp = lead.exponent().scalar_mul(&C::half());
    let unit = a.mul_monomial(
        &lead.exponent().negate(),
        &(C::one() / lead.coefficient().clone()),
    );

    let mut b = Number::one();
    let mut residual = &b - &unit;
    let mut steps = 0;
    while steps < order {
        let Some(t) = residual.leading() else { break };
        let c = t.exponent().clone();
        let d = -t.coefficient().clone() * C::half();
        // (b + ω^c d)² − u = residual + 2 d ω^c b + d² ω^{2c}
        let cross = b.mul_monomial(&c, &(d.clone() + d.clone()));
        let square = Number::monomial(&c + &c, d.clone() * d.clone());
        residual = &(&residual + &cross) + &square;
        b += &Number::monomial(c, d);
        steps += 1;
    }
    let value = b.mul_monomial(&half_exp, &root_coeff);
    let residual = if residual.is_zero() {
        residual
    } else {
        &mul(&value, &value) - a
    };
    Ok(Truncated {
        value,
        residual,
        steps,
    })
}
