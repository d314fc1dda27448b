use proptest::prelude::*;

use hnk_core::counts::binomial;
use hnk_core::subsets::full_mask;
use hnk_core::symmetries::{compose, Composition, Family, Permutation, SymmetryElement};
use hnk_core::transitivity::transitivity_verdict;
use hnk_core::{build_graph, Component, GraphParams, SubsetId};

fn perm(m: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=m).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

/// `(n, k, family)` triples where the family's maps are automorphisms of `H(n,k)`.
fn setting() -> impl Strategy<Value = (usize, usize, Family)> {
    prop_oneof![
        (2usize..=10, 1usize..=9).prop_filter_map("k < n", |(n, k)| (k < n).then_some((n, k, Family::Plain))),
        (2usize..=6).prop_map(|k| (2 * k - 1, k, Family::ExtA)),
        prop_oneof![Just(3usize), Just(5)].prop_map(|k| (2 * k + 1, k, Family::ExtB)),
    ]
}

fn element(n: usize, family: Family, x: u32, sigma: Permutation) -> SymmetryElement {
    SymmetryElement::new(SubsetId::new(n, x & full_mask(n)).unwrap(), sigma, family).unwrap()
}

fn arb_element() -> impl Strategy<Value = (usize, usize, SymmetryElement, SymmetryElement)> {
    setting().prop_flat_map(|(n, k, family)| {
        let m = if family == Family::Plain { n } else { n + 1 };
        (Just(n), Just(k), Just(family), any::<u32>(), any::<u32>(), perm(m), perm(m))
            .prop_map(|(n, k, f, x, y, a, b)| (n, k, element(n, f, x, a), element(n, f, y, b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn elements_preserve_adjacency((n, k, e, _) in arb_element(), x in any::<u32>(), y in any::<u32>()) {
        let (x, y) = (x & full_mask(n), y & full_mask(n));
        let adjacent = |a: u32, b: u32| (a ^ b).count_ones() as usize == k;
        prop_assert_eq!(adjacent(x, y), adjacent(e.apply_bits(x), e.apply_bits(y)));
    }

    #[test]
    fn composition_is_pointwise((n, _k, a, b) in arb_element()) {
        let Composition::Structured(ab) = compose(&a, &b).unwrap() else {
            return Err(TestCaseError::fail("same-family composition left normal form"));
        };
        for y in 0..=full_mask(n) {
            prop_assert_eq!(ab.apply_bits(y), a.apply_bits(b.apply_bits(y)));
        }
    }

    #[test]
    fn inverse_undoes((n, _k, a, _) in arb_element()) {
        let inv = a.inverse();
        for y in 0..=full_mask(n) {
            prop_assert_eq!(inv.apply_bits(a.apply_bits(y)), y);
        }
    }

    #[test]
    fn translations_preserve_adjacency(n in 1usize..=12, k in 0usize..=12, x in any::<u32>(), y in any::<u32>(), z in any::<u32>()) {
        prop_assume!(k <= n);
        let g = build_graph(GraphParams::whole(n, k).unwrap()).unwrap();
        let m = full_mask(n);
        let (x, y, z) = (x & m, y & m, z & m);
        prop_assert_eq!(g.adjacent_bits(x, y), g.adjacent_bits(x ^ z, y ^ z));
    }

    #[test]
    fn binomial_symmetry_and_row_sums(a in 0i64..60, b in -3i64..63) {
        prop_assert_eq!(binomial(a, b), binomial(a, a - b));
        let row: num_bigint::BigUint = (0..=a).map(|i| binomial(a, i)).sum();
        prop_assert_eq!(row, num_bigint::BigUint::from(1u8) << a as usize);
    }
}

#[test]
fn s_geodesic_verdicts_are_cumulative() {
    for (n, k, c) in [(6, 3, Component::Whole), (5, 3, Component::Whole), (7, 5, Component::Whole), (6, 2, Component::Even)] {
        let v = transitivity_verdict(&build_graph(GraphParams::new(n, k, c).unwrap()).unwrap()).unwrap();
        let flags: Vec<bool> = v.s_geodesic_transitive.values().copied().collect();
        assert!(flags.windows(2).all(|w| w[0] || !w[1]), "{}: {flags:?}", v.graph);
        assert_eq!(v.geodesic_transitive, flags.iter().all(|&f| f));
    }
}
