//! Deterministic pseudorandom samples of small-height rationals.
//!
//! All sampling goes through a ChaCha8 stream seeded from a `u64`, so a seed
//! fully determines every element, polynomial and subset drawn.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lie::LieElement;
use crate::poly::{monomial_basis, PolyFun};
use crate::rational::{rat, Rational};

/// Default bound on |numerator| of sampled rationals.
pub const DEFAULT_NUMERATOR_BOUND: i64 = 3;
/// Default bound on sampled denominators (drawn from `1..=bound`).
pub const DEFAULT_DENOMINATOR_BOUND: i64 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Height {
    pub numerator: i64,
    pub denominator: i64,
}

impl Default for Height {
    fn default() -> Self {
        Height {
            numerator: DEFAULT_NUMERATOR_BOUND,
            denominator: DEFAULT_DENOMINATOR_BOUND,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    height: Height,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler::with_height(seed, Height::default())
    }

    pub fn with_height(seed: u64, height: Height) -> Self {
        assert!(
            height.numerator >= 1 && height.denominator >= 1,
            "height bounds must be positive"
        );
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height,
        }
    }

    pub fn rational(&mut self) -> Rational {
        let n = self
            .rng
            .gen_range(-self.height.numerator..=self.height.numerator);
        let d = self.rng.gen_range(1..=self.height.denominator);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    pub fn element(&mut self, dim: usize) -> LieElement {
        LieElement::new((0..dim).map(|_| self.rational()).collect())
    }

    pub fn nonzero_element(&mut self, dim: usize) -> LieElement {
        loop {
            let x = self.element(dim);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    /// A linear functional `ξ ∈ g*`, never zero.
    pub fn functional(&mut self, dim: usize) -> PolyFun {
        PolyFun::linear(self.nonzero_element(dim).coords())
    }

    /// A polynomial of degree exactly `degree` with a handful of terms.
    pub fn poly(&mut self, nvars: usize, degree: u32) -> PolyFun {
        let monomials = monomial_basis(nvars, degree);
        let top: Vec<_> = monomials
            .iter()
            .filter(|m| m.degree() == degree)
            .cloned()
            .collect();
        loop {
            let mut terms = vec![(
                top.choose(&mut self.rng).unwrap().clone(),
                self.nonzero_rational(),
            )];
            let extra = self.rng.gen_range(0..=3);
            for _ in 0..extra {
                terms.push((
                    monomials.choose(&mut self.rng).unwrap().clone(),
                    self.rational(),
                ));
            }
            let p = PolyFun::from_terms(nvars, terms);
            if p.degree() == Some(degree) {
                return p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..20 {
            assert_eq!(a.element(4), b.element(4));
        }
        assert_eq!(a.poly(3, 2), b.poly(3, 2));
    }

    #[test]
    fn polys_have_requested_degree() {
        let mut s = Sampler::new(1);
        for d in 0..4 {
            for _ in 0..10 {
                assert_eq!(s.poly(3, d).degree(), Some(d));
            }
        }
    }

    #[test]
    fn heights_are_bounded() {
        let mut s = Sampler::with_height(
            3,
            Height {
                numerator: 2,
                denominator: 2,
            },
        );
        for _ in 0..100 {
            let r = s.rational();
            assert!(r.numer().magnitude() <= &2u32.into());
            assert!(r.denom() <= &2.into());
        }
    }
}
