//! Real root isolation for rational polynomials.
//!
//! Roots are isolated on the squarefree part with a Sturm sequence and
//! bisection. A rational root `p/q` of an integer polynomial with leading
//! coefficient `a` satisfies `q | a`, so `|a| * root` is an integer; once an
//! isolating interval is narrower than `1/(2|a|)` it holds at most one such
//! candidate, which is then tested exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Rational, RationalPolynomial};

/// One isolated real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    /// `lo == hi` and the root is exactly this rational.
    pub exact: bool,
    /// The root has multiplicity one in the input polynomial.
    pub simple: bool,
}

impl RootInterval {
    pub fn rational(&self) -> Option<&Rational> {
        self.exact.then_some(&self.lo)
    }
}

struct Sturm {
    chain: Vec<RationalPolynomial>,
}

impl Sturm {
    fn new(p: &RationalPolynomial) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero");
            chain.push(-&r);
        }
        chain.pop();
        Sturm { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Roots in `(lo, hi]`, minus one when `hi` is a root to be excluded.
    fn count(&self, lo: &Rational, hi: &Rational, exclude_hi: bool) -> usize {
        let n = self.variations(lo) - self.variations(hi);
        if exclude_hi && self.chain[0].eval(hi).is_zero() {
            n - 1
        } else {
            n
        }
    }
}

struct Isolator {
    squarefree: RationalPolynomial,
    sturm: Sturm,
    multiple: Option<Sturm>,
    /// `|leading coefficient|` of the primitive integer form of `squarefree`.
    lead: BigInt,
    target: Rational,
    out: Vec<RootInterval>,
}

impl Isolator {
    fn is_root(&self, x: &Rational) -> bool {
        self.squarefree.eval(x).is_zero()
    }

    fn is_simple_at(&self, x: &Rational) -> bool {
        self.multiple
            .as_ref()
            .is_none_or(|m| !m.chain[0].eval(x).is_zero())
    }

    fn emit_exact(&mut self, x: Rational) {
        let simple = self.is_simple_at(&x);
        self.out.push(RootInterval {
            lo: x.clone(),
            hi: x,
            exact: true,
            simple,
        });
    }

    fn process(&mut self, lo: Rational, hi: Rational, exclude_hi: bool) {
        let n = self.sturm.count(&lo, &hi, exclude_hi);
        if n == 0 {
            return;
        }
        if n == 1 && &hi - &lo <= self.target {
            self.finish(lo, hi, exclude_hi);
            return;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if self.is_root(&mid) {
            self.process(lo, mid.clone(), true);
            self.emit_exact(mid.clone());
            self.process(mid, hi, exclude_hi);
        } else {
            self.process(lo, mid.clone(), false);
            self.process(mid, hi, exclude_hi);
        }
    }

    fn finish(&mut self, lo: Rational, hi: Rational, exclude_hi: bool) {
        if !exclude_hi && self.is_root(&hi) {
            self.emit_exact(hi);
            return;
        }
        let scale = Rational::from_integer(self.lead.clone());
        let first: BigInt = (&lo * &scale).floor().to_integer() + 1;
        let last = (&hi * &scale).ceil().to_integer();
        let mut k = first;
        while k < last {
            let x = Rational::new(k.clone(), self.lead.clone());
            if self.is_root(&x) {
                self.emit_exact(x);
                return;
            }
            k += 1;
        }
        let simple = match &self.multiple {
            None => true,
            Some(m) => m.count(&lo, &hi, exclude_hi) == 0,
        };
        self.out.push(RootInterval {
            lo,
            hi,
            exact: false,
            simple,
        });
    }
}

/// Isolates every real root of `p` in an interval of width at most
/// `precision`, ascending. Rational roots come back exact.
pub fn real_root_isolate(
    p: &RationalPolynomial,
    precision: &Rational,
) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !precision.is_positive() {
        return Err(Error::NotPositive(precision.to_string()));
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let g = p.gcd(&p.derivative());
    let squarefree = p.div_exact(&g)?.make_monic();
    let multiple = {
        let h = squarefree.gcd(&g);
        (h.degree() > Some(0)).then(|| Sturm::new(&h))
    };

    let denom_lcm = squarefree
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lead = denom_lcm.abs();
    let bound = squarefree
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one();

    let half_lead = Rational::new(BigInt::one(), &lead * 2);
    let target = precision.clone().min(half_lead);
    let mut iso = Isolator {
        sturm: Sturm::new(&squarefree),
        squarefree,
        multiple,
        lead,
        target,
        out: Vec::new(),
    };
    iso.process(-bound.clone(), bound, false);
    Ok(iso.out)
}
