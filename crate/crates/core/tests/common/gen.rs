//! Seeded random instances.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tai::complexity::SubsetSumInstance;
use tai::{Attr, AttributeSet, Implication, Theory, TimedAttribute};

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(n: usize) -> Vec<Attr> {
    NAMES[..n].iter().map(|s| Attr::new(s).unwrap()).collect()
}

/// Between `min` and `max` atoms with times in `[lo, hi]`.
pub fn set_in(rng: &mut ChaCha8Rng, attrs: &[Attr], lo: i64, hi: i64, min: usize, max: usize) -> AttributeSet {
    let available = attrs.len() * (hi - lo + 1) as usize;
    let n = rng.random_range(min..=max).min(available);
    let mut s = AttributeSet::new();
    while s.len() < n {
        let a = *attrs.choose(rng).unwrap();
        s.insert(TimedAttribute::new(a, rng.random_range(lo..=hi)));
    }
    s
}

/// Predictive formula with `u(A ∪ B) − l(A ∪ B) ≤ max_span`.
pub fn predictive_formula(rng: &mut ChaCha8Rng, attrs: &[Attr], max_span: i64) -> Implication {
    let base = rng.random_range(-3..=3);
    let span = rng.random_range(0..=max_span);
    let pivot = base + rng.random_range(0..=span);
    let a = set_in(rng, attrs, base, pivot, 1, 3);
    let b = set_in(rng, attrs, pivot, base + span, 1, 2);
    Implication::new(a, b)
}

pub fn predictive_theory(rng: &mut ChaCha8Rng, attrs: &[Attr], n: usize, max_span: i64) -> Theory {
    (0..n).map(|_| predictive_formula(rng, attrs, max_span)).collect()
}

/// Formula without shape constraints; either side may be empty.
pub fn any_formula(rng: &mut ChaCha8Rng, attrs: &[Attr], lo: i64, hi: i64) -> Implication {
    let a = set_in(rng, attrs, lo, hi, 0, 3);
    let b = set_in(rng, attrs, lo, hi, 0, 2);
    Implication::new(a, b)
}

pub fn subset_sum(rng: &mut ChaCha8Rng) -> SubsetSumInstance {
    let n = rng.random_range(0..=5);
    SubsetSumInstance {
        values: (0..n).map(|_| rng.random_range(0..=30)).collect(),
        target: rng.random_range(0..=200),
    }
}
