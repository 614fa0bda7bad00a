use num_traits::Zero;

use super::spoly::SurrealPolynomial;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::Number;
use crate::poly::{poly_bezout, DensePoly};

/// Output of [`hensel_lift`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenselLift<C> {
    pub g: SurrealPolynomial<C>,
    pub h: SurrealPolynomial<C>,
    /// `f − g·h`.
    pub residual: SurrealPolynomial<C>,
    pub steps: usize,
}

/// Exponents of the infinitesimal parts of the coefficients of `f`.
///
/// The doublure of this set bounds the residual of [`hensel_lift`].
pub fn perturbation_exponents<C: Coeff>(f: &SurrealPolynomial<C>) -> Vec<Number<C>> {
    let zero = Number::zero();
    let mut out: Vec<Number<C>> = f
        .coeffs()
        .iter()
        .flat_map(|c| {
            c.exponents()
                .filter(|e| **e < zero)
                .cloned()
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Lifts the coprime factorization `Q·R` of the real part of `f` to
/// `f ≈ g·h` with `g`, `h` monic of the same degrees as `Q`, `R`.
///
/// Starting from `g = Q`, `h = R`, each step takes the largest exponent
/// `c` in the residual `f − g·h` and its coefficient polynomial `D`, solves
/// `G·R + H·Q = D` with `deg G < deg Q`, `deg H < deg R`, and adds `ω^c G`
/// to `g` and `ω^c H` to `h`. That cancels the whole `ω^c` slice of the
/// residual. At most `order` steps are made.
pub fn hensel_lift<C: Coeff>(
    f: &SurrealPolynomial<C>,
    q: &DensePoly<C>,
    r: &DensePoly<C>,
    order: usize,
) -> Result<HenselLift<C>> {
    let real = f.real_part()?;
    if !q.is_monic() || !r.is_monic() {
        return Err(Error::NotMonic);
    }
    if q.degree() < Some(1) || r.degree() < Some(1) {
        return Err(Error::Degree("both factors need degree at least 1".into()));
    }
    let product = q * r;
    if product != real {
        return Err(Error::RealPartMismatch {
            expected: product.to_string(),
            actual: real.to_string(),
        });
    }
    let (x, y) = poly_bezout(q, r)?;

    let mut g = SurrealPolynomial::from_rational(q);
    let mut h = SurrealPolynomial::from_rational(r);
    let mut residual = f - &(&g * &h);
    let mut steps = 0;
    while steps < order {
        let Some(c) = residual.leading_exponent() else {
            break;
        };
        let d = residual.slice_at(&c);
        let (quot, g_corr) = (&d * &y).div_rem(q)?;
        let h_corr = &(&d * &x) + &(&quot * r);
        debug_assert_eq!(&(&g_corr * r) + &(&h_corr * q), d);

        let lift = |p: &DensePoly<C>| {
            SurrealPolynomial::new(
                p.coeffs()
                    .iter()
                    .map(|a| Number::monomial(c.clone(), a.clone()))
                    .collect(),
            )
        };
        g = &g + &lift(&g_corr);
        h = &h + &lift(&h_corr);
        residual = f - &(&g * &h);
        steps += 1;
    }
    Ok(HenselLift {
        g,
        h,
        residual,
        steps,
    })
}
