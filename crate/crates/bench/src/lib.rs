//! Inputs for the benchmarks.

use axial_core::{BasisSymbol, Element, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A combination of `terms` random symbols with levels `<= window`.
pub fn random_element<R: Rng>(rng: &mut R, window: u64, terms: usize) -> Element {
    let w = window as i64;
    let mut x = Element::zero();
    for _ in 0..terms {
        let symbol = if rng.gen_bool(0.5) {
            BasisSymbol::Axis(rng.gen_range(-w..=w))
        } else {
            BasisSymbol::sigma(rng.gen_range(0..3), rng.gen_range(1..=window))
                .expect("positive level")
        };
        x.add_term(symbol, Scalar::new(rng.gen_range(1..5)));
    }
    x
}

pub fn random_pairs(seed: u64, count: usize, window: u64, terms: usize) -> Vec<(Element, Element)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            (
                random_element(&mut r, window, terms),
                random_element(&mut r, window, terms),
            )
        })
        .collect()
}
