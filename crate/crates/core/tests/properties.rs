mod common;

use axial_core::eigen::{decompose, decompose_at, sigma_pair, Eigenvalue};
use axial_core::quotient::{ideal_closure, row_reduce};
use axial_core::{mul, DihedralMap, Element, Scalar, Window};
use common::element_strategy;
use proptest::prelude::*;

fn map_strategy() -> impl Strategy<Value = DihedralMap> {
    (prop::bool::ANY, -6i64..=6).prop_map(|(reflect, t)| {
        if reflect {
            DihedralMap::reflection(t)
        } else {
            DihedralMap::translation(t)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(x in element_strategy(12, 8)) {
        let text = x.to_string();
        let back: Element = text.parse().unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn addition_is_associative_and_commutative(
        x in element_strategy(8, 6),
        y in element_strategy(8, 6),
        z in element_strategy(8, 6),
    ) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn scaling_distributes(x in element_strategy(8, 6), y in element_strategy(8, 6), c in 0i64..5, d in 0i64..5) {
        let (c, d) = (Scalar::new(c), Scalar::new(d));
        prop_assert_eq!((&x + &y).scale(c), &x.scale(c) + &y.scale(c));
        prop_assert_eq!(x.scale(c + d), &x.scale(c) + &x.scale(d));
        prop_assert_eq!(x.scale(c * d), x.scale(c).scale(d));
    }

    #[test]
    fn product_is_commutative_and_bilinear(
        x in element_strategy(10, 5),
        y in element_strategy(10, 5),
        z in element_strategy(10, 5),
        c in 0i64..5,
    ) {
        prop_assert_eq!(mul(&x, &y), mul(&y, &x));
        prop_assert_eq!(mul(&x, &(&y + &z)), &mul(&x, &y) + &mul(&x, &z));
        let c = Scalar::new(c);
        prop_assert_eq!(mul(&x.scale(c), &y), mul(&x, &y).scale(c));
    }

    #[test]
    fn dihedral_maps_are_automorphisms(m in map_strategy(), x in element_strategy(10, 5), y in element_strategy(10, 5)) {
        prop_assert_eq!(m.apply(&mul(&x, &y)), mul(&m.apply(&x), &m.apply(&y)));
    }

    #[test]
    fn map_composition_and_inverse(m1 in map_strategy(), m2 in map_strategy(), x in element_strategy(10, 5)) {
        prop_assert_eq!(m1.compose(m2).apply(&x), m2.apply(&m1.apply(&x)));
        prop_assert_eq!(m1.inverse().apply(&m1.apply(&x)), x);
    }

    #[test]
    fn decomposition_is_linear_and_exact(x in element_strategy(15, 8), y in element_strategy(15, 8), c in 0i64..5) {
        let dx = decompose(&x);
        prop_assert_eq!(dx.reassemble(), x.clone());
        let a0 = Element::axis(0);
        prop_assert!(mul(&a0, &dx.comp0).is_zero());
        prop_assert_eq!(mul(&a0, &dx.comp2), dx.comp2.scale(Eigenvalue::Alpha.value()));
        prop_assert_eq!(mul(&a0, &dx.comp_beta), dx.comp_beta.scale(Eigenvalue::Beta.value()));

        let c = Scalar::new(c);
        let dy = decompose(&y);
        let dsum = decompose(&(&x.scale(c) + &y));
        prop_assert_eq!(dsum.lambda, c * dx.lambda + dy.lambda);
        prop_assert_eq!(dsum.comp0, &dx.comp0.scale(c) + &dy.comp0);
        prop_assert_eq!(dsum.comp2, &dx.comp2.scale(c) + &dy.comp2);
        prop_assert_eq!(dsum.comp_beta, &dx.comp_beta.scale(c) + &dy.comp_beta);
    }

    #[test]
    fn decomposition_at_other_axes(j in -5i64..=5, x in element_strategy(8, 6)) {
        let d = decompose_at(j, &x);
        let aj = Element::axis(j);
        let mut back = aj.scale(d.lambda);
        back += &d.comp0;
        back += &d.comp2;
        back += &d.comp_beta;
        prop_assert_eq!(back, x);
        prop_assert!(mul(&aj, &d.comp0).is_zero());
        prop_assert_eq!(mul(&aj, &d.comp2), d.comp2.scale(Scalar::ALPHA));
    }

    #[test]
    fn sigma_pair_is_symmetric(i in 1u64..40, j in 1u64..40) {
        prop_assert_eq!(sigma_pair(i, j), sigma_pair(j, i));
    }

    #[test]
    fn axes_form_one_orbit(i in -30i64..30, j in -30i64..30) {
        // Translation carries a[i] to a[j], and an odd-shift reflection swaps
        // a[i] with a[j] when their difference is odd.
        let t = DihedralMap::translation(j - i);
        prop_assert_eq!(t.apply(&Element::axis(i)), Element::axis(j));
        let r = DihedralMap::reflection(i + j);
        prop_assert_eq!(r.apply(&Element::axis(i)), Element::axis(j));
    }

    #[test]
    fn closure_ignores_generator_order(gens in prop::collection::vec(element_strategy(4, 4), 1..4), seed in any::<u64>()) {
        let window = Window::new(4).unwrap();
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        shuffled.reverse();
        let a = ideal_closure(&gens, window).unwrap();
        let b = ideal_closure(&shuffled, window).unwrap();
        prop_assert_eq!(a.span, b.span);
    }

    #[test]
    fn row_reduction_membership(gens in prop::collection::vec(element_strategy(5, 4), 0..5), coeffs in prop::collection::vec(0i64..5, 5)) {
        let window = Window::new(5).unwrap();
        let span = row_reduce(&gens, window).unwrap();
        let mut combo = Element::zero();
        for (g, &c) in gens.iter().zip(&coeffs) {
            combo.add_scaled(Scalar::new(c), g);
        }
        prop_assert!(span.contains(&combo).unwrap());
        prop_assert!(span.reduce(&combo).unwrap().is_zero());
        prop_assert!(span.rank() <= gens.len());
    }
}
