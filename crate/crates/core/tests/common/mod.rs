#![allow(dead_code)]

use axial_core::{BasisSymbol, Element, Scalar};
use proptest::prelude::*;
use rand::Rng;

pub fn random_symbol<R: Rng>(rng: &mut R, window: u64) -> BasisSymbol {
    let w = window as i64;
    if rng.gen_bool(0.5) {
        BasisSymbol::Axis(rng.gen_range(-w..=w))
    } else {
        let n = rng.gen_range(1..=window);
        let r = rng.gen_range(0..3);
        BasisSymbol::sigma(r, n).expect("positive level")
    }
}

/// A combination of up to `max_terms` random symbols with levels `<= window`.
pub fn random_element<R: Rng>(rng: &mut R, window: u64, max_terms: usize) -> Element {
    let mut x = Element::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let c = Scalar::new(rng.gen_range(1..5));
        x.add_term(random_symbol(rng, window), c);
    }
    x
}

pub fn symbol_strategy(window: u64) -> impl Strategy<Value = BasisSymbol> {
    let w = window as i64;
    prop_oneof![
        (-w..=w).prop_map(BasisSymbol::Axis),
        (0i64..3, 1..=window).prop_map(|(r, n)| BasisSymbol::sigma(r, n).unwrap()),
    ]
}

pub fn element_strategy(window: u64, max_terms: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((symbol_strategy(window), 0i64..5), 0..=max_terms).prop_map(|terms| {
        let mut x = Element::zero();
        for (b, c) in terms {
            x.add_term(b, Scalar::new(c));
        }
        x
    })
}
