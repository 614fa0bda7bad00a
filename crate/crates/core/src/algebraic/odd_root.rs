use num_traits::{One, Zero};

use super::hensel::hensel_lift;
use super::spoly::SurrealPolynomial;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::Number;
use crate::poly::DensePoly;
use crate::roots::real_root_isolate;
use crate::{Rational, RationalPolynomial, Surreal};

/// Substitutes `x = y − a_1/n` so the `y^{n−1}` coefficient vanishes.
/// Returns the new polynomial and the shift `a_1/n`.
pub fn depress<C: Coeff>(u: &SurrealPolynomial<C>) -> Result<(SurrealPolynomial<C>, Number<C>)> {
    let n = match u.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Degree("need degree at least 1".into())),
    };
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    let shift = u.coeff(n - 1).scalar_mul(&C::recip_int(n));
    if shift.is_zero() {
        return Ok((u.clone(), shift));
    }
    let v = u.substitute_affine(&Number::one(), &shift.negate());
    Ok((v, shift))
}

/// Rescales `y = ω^c x` for a depressed monic `v`, with
/// `c = max_i c_i / i` over the nonzero coefficients `a_i` of `y^{n−i}`
/// (`c_i` the leading exponent of `a_i`). The result
/// `w(x) = x^n + Σ ω^{−ic} a_i x^{n−i}` has only finite coefficients and at
/// least one of them has a nonzero real part.
pub fn newton_rescale<C: Coeff>(
    v: &SurrealPolynomial<C>,
) -> Result<(SurrealPolynomial<C>, Number<C>)> {
    let n = v
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Degree("need degree at least 1".into()))?;
    if !v.is_monic() {
        return Err(Error::NotMonic);
    }
    let c = (1..=n)
        .filter_map(|i| {
            v.coeff(n - i)
                .leading_exponent()
                .map(|e| e.scalar_mul(&C::recip_int(i)))
        })
        .max()
        .ok_or(Error::PureMonomial)?;
    let coeffs = (0..=n)
        .map(|k| {
            let i = n - k;
            let e = c.scalar_mul(&C::from_natural(i)).negate();
            v.coeff(k).mul_monomial(&e, &C::one())
        })
        .collect();
    Ok((SurrealPolynomial::new(coeffs), c))
}

/// A root of an odd-degree polynomial together with `u(root)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddRoot {
    pub root: Surreal,
    pub residual: Surreal,
}

/// Finds a root of a monic odd-degree polynomial.
///
/// Pipeline: depress; if only `y^n` is left the root is `−shift`; otherwise
/// rescale, pick the largest simple rational root `ρ` of the real part,
/// lift `(x − ρ)·P/(x − ρ)` with [`hensel_lift`], and undo the rescale and
/// shift. If the real part has no simple rational root but splits into
/// coprime rational factors, the odd-degree factor is lifted and solved
/// recursively.
pub fn odd_root(
    u: &SurrealPolynomial<Rational>,
    order: usize,
    precision: &Rational,
) -> Result<Surreal> {
    odd_root_with_residual(u, order, precision).map(|r| r.root)
}

pub fn odd_root_with_residual(
    u: &SurrealPolynomial<Rational>,
    order: usize,
    precision: &Rational,
) -> Result<OddRoot> {
    let root = solve(u, order, precision)?;
    let residual = u.eval(&root);
    Ok(OddRoot { root, residual })
}

fn solve(u: &SurrealPolynomial<Rational>, order: usize, precision: &Rational) -> Result<Surreal> {
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    if u.degree().is_none_or(|n| n % 2 == 0) {
        return Err(Error::Degree("odd degree required".into()));
    }
    let (v, shift) = depress(u)?;
    let y = match newton_rescale(&v) {
        Err(Error::PureMonomial) => Surreal::zero(),
        Err(e) => return Err(e),
        Ok((w, c)) => {
            let xi = solve_rescaled(&w, order, precision)?;
            xi.mul_monomial(&c, &Rational::one())
        }
    };
    Ok(&y - &shift)
}

fn solve_rescaled(
    w: &SurrealPolynomial<Rational>,
    order: usize,
    precision: &Rational,
) -> Result<Surreal> {
    let p = w.real_part()?;
    let roots = real_root_isolate(&p, precision)?;

    if let Some(rho) = roots
        .iter()
        .rev()
        .filter(|r| r.simple)
        .find_map(|r| r.rational())
    {
        let linear = DensePoly::linear(rho.clone());
        let cofactor = p.div_exact(&linear)?;
        let lift = hensel_lift(w, &linear, &cofactor, order)?;
        return Ok(lift.g.coeff(0).negate());
    }
    if let Some((q, r)) = odd_coprime_split(&p, &roots) {
        let lift = hensel_lift(w, &q, &r, order)?;
        return solve(&lift.g, order, precision);
    }
    match roots.iter().find(|r| r.simple) {
        Some(r) => Err(Error::RealRootNotRational {
            lo: r.lo.to_string(),
            hi: r.hi.to_string(),
        }),
        None => Err(Error::RealRootNotSimple),
    }
}

/// Yun's squarefree decomposition: `p = lc · Π s_i^i`, returned as
/// `(i, s_i)` for the non-constant `s_i`.
fn squarefree_decomposition(p: &RationalPolynomial) -> Vec<(u32, RationalPolynomial)> {
    let mut out = Vec::new();
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_exact(&a0).expect("gcd divides");
    let mut c = dp.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > Some(0) {
        let a = b.gcd(&d);
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative();
        if a.degree() > Some(0) {
            out.push((i, a));
        }
        i += 1;
    }
    out
}

/// A coprime factorization `p = q·r` of a monic odd-degree `p` with `q`
/// of odd degree and `r` non-constant, found from the squarefree
/// decomposition or, failing that, from a rational root.
fn odd_coprime_split(
    p: &RationalPolynomial,
    roots: &[crate::roots::RootInterval],
) -> Option<(RationalPolynomial, RationalPolynomial)> {
    let parts = squarefree_decomposition(p);
    let candidate = if parts.len() >= 2 {
        parts
            .iter()
            .map(|(i, s)| s.pow(*i))
            .find(|f| f.degree().is_some_and(|d| d % 2 == 1))?
    } else {
        let (k, s) = parts.first()?;
        let rho = roots.iter().find_map(|r| r.rational())?;
        if s.degree() == Some(1) {
            return None;
        }
        DensePoly::linear(rho.clone()).pow(*k)
    };
    let cofactor = p.div_exact(&candidate).ok()?;
    (cofactor.degree() > Some(0)).then(|| (candidate.make_monic(), cofactor.make_monic()))
}
