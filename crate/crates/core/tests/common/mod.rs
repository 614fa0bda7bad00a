//! Random inputs and independent oracles shared by the integration tests.
//!
//! The oracles work on [`Hs`], a plain nested list of `(exponent,
//! coefficient)` pairs, and never call the library's ordering or
//! arithmetic.
#![allow(dead_code)]

pub mod golden;

use std::cmp::Ordering;

use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use surreal_nf::{CnfOrdinal, MonomialFamily, Rational, Surreal};

pub const MAX_TERMS: usize = 4;
pub const MAX_DEPTH: usize = 3;
pub const MAX_COEFF: i64 = 9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Surreal {
    Surreal::from_int(n)
}

pub fn wp(e: Surreal) -> Surreal {
    Surreal::exp_omega(e)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let n = rng.gen_range(1..=MAX_COEFF);
    let d = rng.gen_range(1..=MAX_COEFF);
    if rng.gen_bool(0.5) {
        q(n, d)
    } else {
        q(-n, d)
    }
}

/// A random Number with at most `MAX_TERMS` terms per level and exponent
/// nesting at most `depth`. Depth 0 gives a rational.
pub fn random_number_at(rng: &mut impl Rng, depth: usize) -> Surreal {
    if depth == 0 {
        return if rng.gen_bool(0.1) {
            Surreal::zero()
        } else {
            Surreal::real(random_rational(rng))
        };
    }
    let k = rng.gen_range(0..=MAX_TERMS);
    let mut fam = MonomialFamily::new();
    for _ in 0..k {
        let d = rng.gen_range(0..depth);
        let e = random_number_at(rng, d);
        fam.push(e, random_rational(rng));
    }
    fam.normalize()
}

pub fn random_number(rng: &mut impl Rng) -> Surreal {
    random_number_at(rng, MAX_DEPTH)
}

pub fn random_nonzero(rng: &mut impl Rng) -> Surreal {
    loop {
        let a = random_number(rng);
        if !a.is_zero() {
            return a;
        }
    }
}

/// Replaces every coefficient by its absolute value: a random element of
/// the cone of very positive numbers.
pub fn random_in_cone(rng: &mut impl Rng) -> Surreal {
    surreal_nf::abs(&random_number(rng))
}

pub fn random_ordinal(rng: &mut impl Rng, depth: usize) -> CnfOrdinal {
    if depth == 0 {
        return CnfOrdinal::finite(rng.gen_range(0..=9));
    }
    let k = rng.gen_range(0..=3);
    let mut terms: Vec<(CnfOrdinal, u64)> = Vec::with_capacity(k);
    for _ in 0..k {
        let d = rng.gen_range(0..depth);
        let e = random_ordinal(rng, d);
        terms.push((e, rng.gen_range(1..=9)));
    }
    terms.sort_by(|a, b| cnf_cmp(&b.0, &a.0));
    terms.dedup_by(|a, b| cnf_cmp(&a.0, &b.0) == Ordering::Equal);
    CnfOrdinal::from_terms(terms).expect("strictly decreasing exponents")
}

// ---- proptest strategies ----

pub fn rational_strategy() -> impl Strategy<Value = Rational> {
    (1..=MAX_COEFF, 1..=MAX_COEFF, any::<bool>())
        .prop_map(|(n, d, neg)| if neg { q(-n, d) } else { q(n, d) })
}

pub fn number_strategy_at(depth: usize) -> BoxedStrategy<Surreal> {
    if depth == 0 {
        return prop_oneof![
            1 => Just(Surreal::zero()),
            9 => rational_strategy().prop_map(Surreal::real),
        ]
        .boxed();
    }
    prop::collection::vec(
        (number_strategy_at(depth - 1), rational_strategy()),
        0..=MAX_TERMS,
    )
    .prop_map(|pairs| MonomialFamily::from_pairs(pairs).normalize())
    .boxed()
}

pub fn number_strategy() -> BoxedStrategy<Surreal> {
    number_strategy_at(MAX_DEPTH)
}

pub fn nonzero_strategy() -> BoxedStrategy<Surreal> {
    number_strategy()
        .prop_filter("nonzero", |a| !a.is_zero())
        .boxed()
}

pub fn cone_strategy() -> BoxedStrategy<Surreal> {
    number_strategy().prop_map(|a| surreal_nf::abs(&a)).boxed()
}

// ---- oracle representation ----

/// A normal form as a bare nested list, highest exponent first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hs(pub Vec<(Hs, Rational)>);

impl From<&Surreal> for Hs {
    fn from(a: &Surreal) -> Hs {
        Hs(a.terms()
            .iter()
            .map(|t| (Hs::from(t.exponent()), t.coefficient().clone()))
            .collect())
    }
}

impl Hs {
    pub fn zero() -> Hs {
        Hs(Vec::new())
    }

    pub fn coefficient_at(&self, e: &Hs) -> Rational {
        self.0
            .iter()
            .find(|(x, _)| x == e)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }
}

/// Brute-force first-discrepancy comparison: among all exponents of
/// either side where the coefficients differ, find the largest (by
/// recursion on the exponents) and compare there.
pub fn oracle_cmp(a: &Hs, b: &Hs) -> Ordering {
    let mut support: Vec<&Hs> = Vec::new();
    for (e, _) in a.0.iter().chain(b.0.iter()) {
        if !support.contains(&e) {
            support.push(e);
        }
    }
    let mut top: Option<&Hs> = None;
    for e in support {
        if a.coefficient_at(e) == b.coefficient_at(e) {
            continue;
        }
        top = match top {
            Some(t) if oracle_cmp(t, e) != Ordering::Less => Some(t),
            _ => Some(e),
        };
    }
    match top {
        None => Ordering::Equal,
        Some(e) => a.coefficient_at(e).cmp(&b.coefficient_at(e)),
    }
}

/// Merges structurally equal exponents, drops zero coefficients and sorts
/// with [`oracle_cmp`] by insertion.
pub fn oracle_normalize(pairs: Vec<(Hs, Rational)>) -> Hs {
    let mut merged: Vec<(Hs, Rational)> = Vec::new();
    for (e, c) in pairs {
        match merged.iter_mut().find(|(x, _)| *x == e) {
            Some(slot) => slot.1 += c,
            None => merged.push((e, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    let mut sorted: Vec<(Hs, Rational)> = Vec::new();
    for item in merged {
        let pos = sorted
            .iter()
            .position(|(x, _)| oracle_cmp(&item.0, x) == Ordering::Greater)
            .unwrap_or(sorted.len());
        sorted.insert(pos, item);
    }
    Hs(sorted)
}

pub fn oracle_add(a: &Hs, b: &Hs) -> Hs {
    oracle_normalize(a.0.iter().chain(b.0.iter()).cloned().collect())
}

/// Naive double loop over all term pairs.
pub fn oracle_mul(a: &Hs, b: &Hs) -> Hs {
    let mut pairs = Vec::new();
    for (e, c) in &a.0 {
        for (f, d) in &b.0 {
            pairs.push((oracle_add(e, f), c * d));
        }
    }
    oracle_normalize(pairs)
}

pub fn oracle_sign_positive(a: &Hs) -> bool {
    oracle_cmp(a, &Hs::zero()) == Ordering::Greater
}

/// Standard Cantor normal form comparison.
pub fn cnf_cmp(a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
    for (x, y) in a.terms().iter().zip(b.terms()) {
        match cnf_cmp(&x.0, &y.0).then(x.1.cmp(&y.1)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.terms().len().cmp(&b.terms().len())
}

// ---- doublure oracle ----

/// All count vectors with entries summing to between 1 and `max_total`.
pub fn count_vectors(n: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            if cur.iter().sum::<usize>() > 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(i + 1, n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, max_total, &mut Vec::new(), &mut out);
    out
}

pub fn weighted_sum(gens: &[Rational], counts: &[usize]) -> Rational {
    gens.iter()
        .zip(counts)
        .map(|(g, &k)| g * Rational::from_integer(k.into()))
        .fold(Rational::zero(), |a, b| a + b)
}

/// The `m` largest distinct finite sums of the (strictly negative, real)
/// generators, by exhaustive enumeration with a growing bound on the
/// number of summands.
pub fn exhaustive_doublure(gens: &[Rational], m: usize) -> Vec<Rational> {
    let closest = gens.iter().max().expect("nonempty").clone();
    let mut total = 1;
    loop {
        let mut sums: Vec<Rational> = count_vectors(gens.len(), total)
            .iter()
            .map(|c| weighted_sum(gens, c))
            .collect();
        sums.sort_by(|a, b| b.cmp(a));
        sums.dedup();
        // Any sum with more summands is at most (total + 1)·closest.
        let cutoff = &closest * Rational::from_integer((total + 1).into());
        if sums.len() >= m && sums[m - 1] > cutoff {
            sums.truncate(m);
            return sums;
        }
        total += 1;
    }
}
