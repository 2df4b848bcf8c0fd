//! Seeded sample generation.
//!
//! Streams come from ChaCha8 seeded through splitmix64, so a given `(seed, stream name,
//! bounds)` produces the same samples on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::rational::Rational;
use crate::space::Space;
use crate::truncation::Truncation;
use crate::unitization::UnitizedElement;

/// Size limits for generated samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest index used in a sparse support.
    pub max_index: u64,
    /// Largest numerator / denominator magnitude.
    pub max_magnitude: i64,
    /// Largest number of nonzero entries in a sparse element.
    pub max_support: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_index: 16,
            max_magnitude: 32,
            max_support: 5,
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mixes a run seed with a stream name (a law id, an assertion label, ...).
pub fn derive_seed(seed: u64, stream: &str) -> u64 {
    // FNV-1a over the name, then two splitmix rounds.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    splitmix64(splitmix64(seed) ^ h)
}

pub struct SampleGen {
    rng: ChaCha8Rng,
    space: Space,
    bounds: Bounds,
}

impl SampleGen {
    pub fn new(seed: u64, space: Space, bounds: Bounds) -> Self {
        SampleGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            space,
            bounds,
        }
    }

    /// Independent stream for one named consumer of a run seed.
    pub fn for_stream(seed: u64, stream: &str, space: Space, bounds: Bounds) -> Self {
        Self::new(derive_seed(seed, stream), space, bounds)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.random_range(0..n)
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.random_range(0..den) < num
    }

    pub fn rational(&mut self) -> Rational {
        let m = self.bounds.max_magnitude;
        let num = self.rng.random_range(-m..=m);
        // Integers often, so that ties with the unit and exact boundary cases come up.
        let den = if self.chance(1, 3) {
            1
        } else {
            self.rng.random_range(1..=m)
        };
        Rational::new(num, den)
    }

    pub fn nonneg_rational(&mut self) -> Rational {
        self.rational().abs()
    }

    /// Strictly positive rational.
    pub fn positive_rational(&mut self) -> Rational {
        loop {
            let r = self.nonneg_rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Coordinate value with an extra chance of exact zero.
    fn coord(&mut self) -> Rational {
        if self.chance(1, 5) {
            Rational::zero()
        } else {
            self.rational()
        }
    }

    pub fn element(&mut self) -> Element {
        match self.space {
            Space::FinitePointwise(n) => Element::dense((0..n).map(|_| self.coord()).collect()),
            Space::SparseSeq => {
                let len = self.rng.random_range(0..=self.bounds.max_support);
                let entries: Vec<(u64, Rational)> = (0..len)
                    .map(|_| {
                        (
                            self.rng.random_range(1..=self.bounds.max_index),
                            self.rational(),
                        )
                    })
                    .collect();
                Element::sparse(entries)
            }
            Space::LexPlane => {
                // Equal first coordinates are where the lexicographic order is interesting.
                let first = if self.chance(1, 2) {
                    Rational::zero()
                } else {
                    self.rational()
                };
                Element::lex(first, self.coord())
            }
            Space::IdentityLine => Element::line(self.coord()),
        }
    }

    pub fn positive(&mut self) -> Element {
        self.element().abs()
    }

    pub fn elements(&mut self, n: usize) -> Vec<Element> {
        (0..n).map(|_| self.element()).collect()
    }

    pub fn positives(&mut self, n: usize) -> Vec<Element> {
        (0..n).map(|_| self.positive()).collect()
    }

    pub fn positive_pairs(&mut self, n: usize) -> Vec<(Element, Element)> {
        (0..n).map(|_| (self.positive(), self.positive())).collect()
    }

    /// Arbitrary `x + λ`, with `λ = 0` a quarter of the time.
    pub fn unitized(&mut self) -> UnitizedElement {
        let e = self.element();
        let lambda = if self.chance(1, 4) {
            Rational::zero()
        } else {
            self.rational()
        };
        UnitizedElement::new(e, lambda)
    }

    /// A positive element of the unitization built straight from the cone description
    /// (no use of the absolute value): either `(p, 0)` with `p ≥ 0`, or
    /// `(p − μ·ȳ, μ)` with `μ > 0`, whose negative part divided by `μ` lies below the
    /// fixed point `ȳ`.
    pub fn positive_unitized(&mut self, trunc: &dyn Truncation) -> UnitizedElement {
        let p = self.positive();
        if self.chance(1, 4) {
            return UnitizedElement::embed(p);
        }
        let mu = self.positive_rational();
        let y = self.positive();
        let ty = trunc.truncate(&y).expect("positive sample");
        let e = p.sub(&ty.scale(&mu)).expect("same space");
        UnitizedElement::new(e, mu)
    }
}
