use std::collections::{BinaryHeap, HashSet};

use num_traits::Zero;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::number::Number;

/// Enumerates, in strictly decreasing order, the finite nonempty sums of a
/// finite set of strictly negative generators.
///
/// The frontier is a max-heap seeded with the generators; every emitted
/// sum `s` pushes `s + g` for each generator `g`. Since `s + g < s`, a sum
/// is always pushed before it can become the maximum of what remains.
#[derive(Clone, Debug)]
pub struct DoublureStream<C: Coeff> {
    generators: Vec<Number<C>>,
    emitted: Vec<Number<C>>,
    frontier: BinaryHeap<Number<C>>,
    seen: HashSet<Number<C>>,
}

/// All ways of writing `target` as a sum of generators.
///
/// Each representation gives the multiplicity of every generator, indexed
/// like [`DoublureStream::generators`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationSet<C> {
    pub target: Number<C>,
    pub representations: Vec<Vec<usize>>,
}

impl<C> RepresentationSet<C> {
    pub fn len(&self) -> usize {
        self.representations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representations.is_empty()
    }
}

impl<C: Coeff> DoublureStream<C> {
    /// Duplicates are dropped and generators are kept in decreasing order.
    pub fn new(generators: impl IntoIterator<Item = Number<C>>) -> Result<Self> {
        let mut gens: Vec<Number<C>> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| **g >= Number::zero()) {
            return Err(Error::NonNegativeGenerator(bad.to_string()));
        }
        gens.sort_by(|a, b| b.cmp(a));
        gens.dedup();
        let seen: HashSet<_> = gens.iter().cloned().collect();
        Ok(DoublureStream {
            frontier: gens.iter().cloned().collect(),
            generators: gens,
            emitted: Vec::new(),
            seen,
        })
    }

    pub fn generators(&self) -> &[Number<C>] {
        &self.generators
    }

    pub fn emitted(&self) -> &[Number<C>] {
        &self.emitted
    }

    /// The next largest sum, or `None` when the generator set is empty.
    pub fn next_element(&mut self) -> Option<Number<C>> {
        let top = self.frontier.pop()?;
        for g in &self.generators {
            let s = &top + g;
            if self.seen.insert(s.clone()) {
                self.frontier.push(s);
            }
        }
        self.emitted.push(top.clone());
        Some(top)
    }

    /// The `n`-th element (1-based), enumerating further if needed.
    pub fn nth_element(&mut self, n: usize) -> Option<Number<C>> {
        while self.emitted.len() < n {
            self.next_element()?;
        }
        n.checked_sub(1).map(|i| self.emitted[i].clone())
    }

    /// Every multiset of at most `bound` generators summing to `target`.
    ///
    /// Strict negativity makes partial sums decrease, so the search prunes
    /// as soon as a partial sum drops below `target`.
    pub fn representations(
        &self,
        target: &Number<C>,
        bound: usize,
    ) -> Result<RepresentationSet<C>> {
        if !self.emitted.contains(target) {
            return Err(Error::NotEmitted(target.to_string()));
        }
        let mut out = Vec::new();
        let mut counts = vec![0; self.generators.len()];
        self.search(0, Number::zero(), 0, bound, target, &mut counts, &mut out);
        Ok(RepresentationSet {
            target: target.clone(),
            representations: out,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        index: usize,
        partial: Number<C>,
        used: usize,
        bound: usize,
        target: &Number<C>,
        counts: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if partial == *target && used > 0 {
            out.push(counts.clone());
            return;
        }
        if index == self.generators.len() || used == bound || partial < *target {
            return;
        }
        // Skip this generator entirely, then try one or more copies.
        self.search(index + 1, partial.clone(), used, bound, target, counts, out);
        let mut sum = partial;
        let mut k = 0;
        while used + k < bound {
            sum = &sum + &self.generators[index];
            k += 1;
            if sum < *target {
                break;
            }
            counts[index] = k;
            self.search(index + 1, sum.clone(), used + k, bound, target, counts, out);
        }
        counts[index] = 0;
    }
}

impl<C: Coeff> Iterator for DoublureStream<C> {
    type Item = Number<C>;

    fn next(&mut self) -> Option<Number<C>> {
        self.next_element()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Surreal};

    fn r(n: i64, d: i64) -> Surreal {
        Surreal::real(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn single_generator() {
        let mut s = DoublureStream::new([r(-1, 1)]).unwrap();
        let got: Vec<_> = (&mut s).take(3).collect();
        assert_eq!(got, vec![r(-1, 1), r(-2, 1), r(-3, 1)]);
    }

    #[test]
    fn empty_generators() {
        let mut s = DoublureStream::<Rational>::new([]).unwrap();
        assert_eq!(s.next_element(), None);
    }

    #[test]
    fn two_generators() {
        let s = DoublureStream::new([r(-1, 1), r(-3, 2)]).unwrap();
        let got: Vec<_> = s.take(4).collect();
        assert_eq!(got, vec![r(-1, 1), r(-3, 2), r(-2, 1), r(-5, 2)]);
    }

    #[test]
    fn rejects_non_negative() {
        assert!(matches!(
            DoublureStream::new([r(-1, 1), r(0, 1)]),
            Err(Error::NonNegativeGenerator(_))
        ));
        assert!(DoublureStream::new([Surreal::exp_omega(r(-1, 1))]).is_err());
    }

    #[test]
    fn representation_examples() {
        let mut s = DoublureStream::new([r(-1, 1)]).unwrap();
        s.nth_element(3);
        let reps = s.representations(&r(-3, 1), 3).unwrap();
        assert_eq!(reps.representations, vec![vec![3]]);
        assert!(matches!(
            s.representations(&r(-1, 2), 3),
            Err(Error::NotEmitted(_))
        ));

        let mut s = DoublureStream::new([r(-1, 1), r(-3, 2)]).unwrap();
        s.nth_element(6);
        let mut reps = s.representations(&r(-3, 1), 3).unwrap().representations;
        reps.sort();
        assert_eq!(reps, vec![vec![0, 2], vec![3, 0]]);
    }

    #[test]
    fn infinitesimal_generators_never_reach_finite_sums() {
        // Sums of -ω^{-1} all exceed -1; the stream stays among them.
        let eps = Surreal::exp_omega(r(-1, 1)).negate();
        let s = DoublureStream::new([r(-1, 1), eps.clone()]).unwrap();
        let got: Vec<_> = s.take(5).collect();
        for (k, v) in got.iter().enumerate() {
            assert_eq!(
                *v,
                eps.scalar_mul(&Rational::from_integer((k as i64 + 1).into()))
            );
        }
    }
}
