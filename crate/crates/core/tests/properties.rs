mod common;

use common::{load, NON_ABELIAN_UP_TO_64};
use ncschur::catalog::{dump_group, parse_group};
use ncschur::rational::ratio;
use ncschur::stats::{commuting_probability, is_abelian};
use ncschur::{ElementSet, GroupTable, Limits};
use proptest::prelude::*;

const GROUPS: &[&str] = &["S3", "D4", "Q8", "A4", "D5", "C6", "H3", "C2*S3"];

fn subset(n: usize, bits: &[bool]) -> ElementSet {
    ElementSet::from_indices(n, (0..n).filter(|&i| bits[i % bits.len()]))
}

fn group_and_sets() -> impl Strategy<Value = (GroupTable, Vec<ElementSet>)> {
    prop::sample::select(GROUPS).prop_flat_map(|name| {
        let g = load(name);
        let n = g.order();
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), 3)
            .prop_map(move |sets| (g.clone(), sets.iter().map(|b| subset(n, b)).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_sets_associate((g, s) in group_and_sets()) {
        let left = g.product_set(&g.product_set(&s[0], &s[1]), &s[2]);
        let right = g.product_set(&s[0], &g.product_set(&s[1], &s[2]));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_sizes_are_submultiplicative((g, s) in group_and_sets()) {
        let p = g.product_set(&s[0], &s[1]);
        prop_assert!(p.len() <= s[0].len() * s[1].len());
        if !s[0].is_empty() && !s[1].is_empty() {
            prop_assert!(p.len() >= s[0].len().max(s[1].len()));
        }
    }

    #[test]
    fn conjugation_preserves_quadruple_counts((g, s) in group_and_sets(), h in 0usize..1000) {
        let h = h % g.order();
        let a = &s[0];
        let conj = g.conjugate_set(a, h);
        prop_assert_eq!(conj.len(), a.len());
        prop_assert_eq!(
            ncschur::colouring::count_quadruples(&g, a),
            ncschur::colouring::count_quadruples(&g, &conj)
        );
    }

    #[test]
    fn quadruple_counts_are_monotone((g, s) in group_and_sets()) {
        let a = &s[0];
        let b = a.union(&s[1]);
        let (ta, na) = ncschur::colouring::count_quadruples(&g, a);
        let (tb, nb) = ncschur::colouring::count_quadruples(&g, &b);
        prop_assert!(ta <= tb && na <= nb && na <= ta);
    }

    #[test]
    fn commuting_probability_is_multiplicative(i in 0usize..GROUPS.len(), j in 0usize..GROUPS.len()) {
        let (g, h) = (load(GROUPS[i]), load(GROUPS[j]));
        let gh = g.direct_product(&h, &Limits::default()).unwrap();
        let (cg, ch, cgh) = (commuting_probability(&g).c, commuting_probability(&h).c, commuting_probability(&gh).c);
        prop_assert_eq!(cgh, cg * ch);
    }

    #[test]
    fn dump_and_load_round_trip(i in 0usize..GROUPS.len()) {
        let g = load(GROUPS[i]);
        let text = dump_group(&g);
        let back = parse_group(&text, g.name(), &Limits::default()).unwrap();
        prop_assert_eq!(back.to_rows(), g.to_rows());
    }

    #[test]
    fn odd_dihedral_commuting_probability(k in 1u64..12) {
        let n = 2 * k + 1;
        let g = load(&format!("D{n}"));
        prop_assert_eq!(commuting_probability(&g).c, ratio(n + 3, 4 * n));
    }
}

#[test]
fn non_abelian_groups_respect_five_eighths() {
    for name in NON_ABELIAN_UP_TO_64 {
        let g = load(name);
        assert!(g.order() <= 64, "{name}");
        assert!(!is_abelian(&g), "{name}");
        assert!(commuting_probability(&g).c <= ratio(5, 8), "{name}");
    }
}
