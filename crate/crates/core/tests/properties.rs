use std::collections::BTreeSet;

use proptest::prelude::*;

use pecomb::cells::{cell_index, in_ideal};
use pecomb::fock::{apply_word, support_bounds, xi_apply, xi_on_partition, xi_prime_on_partition};
use pecomb::tl::{
    diagram_product, element_multiply, normalize, word_to_diagram, FcsWord, TlDiagram, TlElement,
};
use pecomb::weight::{d_inverse, d_set, f_map, marking, weight_from_subset};
use pecomb::{FockVector, Partition, Rep};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_size.max(1), 0..=max_size).prop_filter_map(
        "too large",
        move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let p = Partition::new(parts).ok()?;
            (p.size() <= max_size).then_some(p)
        },
    )
}

fn partition_and_q(max_size: usize) -> impl Strategy<Value = (Partition, i64)> {
    partition(max_size).prop_flat_map(|p| {
        let (lo, hi) = support_bounds(&p);
        (Just(p), lo - 2..=hi + 2)
    })
}

fn word(window: i64, max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-window..=window, 0..=max_len)
}

fn element() -> impl Strategy<Value = TlElement> {
    prop::collection::vec((word(3, 6), -4i64..=4), 0..=3).prop_map(|terms| {
        let mut x = TlElement::zero();
        for (w, c) in terms {
            if let Some(nf) = normalize(&w).unwrap() {
                x.add_term(nf, c);
            }
        }
        x
    })
}

fn act(lambda: &Partition, word: &[i64], rep: Rep) -> FockVector {
    apply_word(&FockVector::basis(lambda.clone()), word, rep)
}

fn act_vec(x: &TlElement, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (w, c) in x.iter() {
        out = &out + &apply_word(v, &w.to_word(), Rep::XiPrime).scale(c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn squares_vanish((lambda, q) in partition_and_q(12), prime in any::<bool>()) {
        let rep = if prime { Rep::XiPrime } else { Rep::Xi };
        prop_assert!(act(&lambda, &[q, q], rep).is_zero());
    }

    #[test]
    fn braid_relations((lambda, q) in partition_and_q(12), up in any::<bool>(), prime in any::<bool>()) {
        let rep = if prime { Rep::XiPrime } else { Rep::Xi };
        let j = if up { q + 1 } else { q - 1 };
        prop_assert_eq!(act(&lambda, &[q, j, q], rep), act(&lambda, &[q], rep));
    }

    #[test]
    fn far_generators_commute((lambda, q) in partition_and_q(12), gap in 2i64..6, prime in any::<bool>()) {
        let rep = if prime { Rep::XiPrime } else { Rep::Xi };
        prop_assert_eq!(act(&lambda, &[q, q + gap], rep), act(&lambda, &[q + gap, q], rep));
    }

    #[test]
    fn xi_is_single_term_with_parity((lambda, q) in partition_and_q(12)) {
        let image = xi_apply(&FockVector::basis(lambda.clone()), q);
        prop_assert!(image.len() <= 1);
        for (kappa, c) in image.iter() {
            prop_assert_eq!(c, 1);
            prop_assert_eq!(Some(kappa.clone()), xi_on_partition(&lambda, q));
            prop_assert!(kappa.size() % 2 != lambda.size() % 2);
        }
    }

    #[test]
    fn xi_prime_adds_and_removes((lambda, q) in partition_and_q(12)) {
        let image = xi_prime_on_partition(&lambda, q);
        for (kappa, c) in image.iter() {
            prop_assert_eq!(c, 1);
            prop_assert!(Some(kappa) == lambda.add_box(q).as_ref() || Some(kappa) == lambda.remove_box(q - 1).as_ref());
        }
    }

    #[test]
    fn ideals_are_preserved((lambda, q) in partition_and_q(12), k in 0usize..=4) {
        prop_assume!(in_ideal(&lambda, k));
        if let Some(kappa) = xi_on_partition(&lambda, q) {
            prop_assert!(in_ideal(&kappa, k));
        }
    }

    #[test]
    fn transpose_is_an_involution(lambda in partition(14)) {
        let t = lambda.transpose();
        prop_assert_eq!(t.size(), lambda.size());
        prop_assert_eq!(t.transpose(), lambda.clone());
        prop_assert_eq!(cell_index(&t), cell_index(&lambda));
    }

    #[test]
    fn two_core_is_a_staircase(lambda in partition(14)) {
        let (core, k) = lambda.two_core();
        prop_assert_eq!(core.clone(), Partition::staircase(k));
        prop_assert!(lambda.contains(&core));
        prop_assert_eq!((lambda.size() - core.size()) % 2, 0);
    }

    #[test]
    fn diamonds_count_the_cell(lambda in partition(14)) {
        let m = marking(&lambda);
        prop_assert_eq!(m.len(), cell_index(&lambda));
        prop_assert!(m.d_tilde.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn d_round_trips(lambda in partition(14)) {
        let n = cell_index(&lambda);
        prop_assume!(n <= 5);
        prop_assert_eq!(d_inverse(&d_set(&lambda), n).unwrap(), lambda);
    }

    #[test]
    fn every_subset_is_a_d_set(set in prop::collection::btree_set(-9i64..=9, 0..=4)) {
        let s: Vec<i64> = set.iter().copied().collect();
        let lambda = d_inverse(&s, s.len()).unwrap();
        prop_assert_eq!(d_set(&lambda), s.clone());
        prop_assert_eq!(cell_index(&lambda), s.len());
        let w = f_map(&lambda);
        prop_assert_eq!(w.beta_set().into_iter().collect::<BTreeSet<_>>(), set);
    }

    #[test]
    fn weights_are_dominant(set in prop::collection::btree_set(-20i64..=20, 0..=8)) {
        let s: Vec<i64> = set.into_iter().collect();
        let w = weight_from_subset(&s, s.len()).unwrap();
        prop_assert!(w.omega.windows(2).all(|p| p[0] >= p[1]));
    }

    #[test]
    fn normal_forms_are_stable(w in word(4, 8)) {
        if let Some(nf) = normalize(&w).unwrap() {
            prop_assert_eq!(normalize(&nf.to_word()).unwrap(), Some(nf.clone()));
            prop_assert_eq!(word_to_diagram(&nf.to_word()), word_to_diagram(&w));
        } else {
            prop_assert!(word_to_diagram(&w).is_zero());
        }
    }

    #[test]
    fn diagram_product_is_associative(a in word(3, 4), b in word(3, 4), c in word(3, 4)) {
        let (da, db, dc) = (word_to_diagram(&a), word_to_diagram(&b), word_to_diagram(&c));
        prop_assert_eq!(
            diagram_product(&diagram_product(&da, &db), &dc),
            diagram_product(&da, &diagram_product(&db, &dc))
        );
    }

    #[test]
    fn reflection_reverses_products(a in word(3, 5), b in word(3, 5)) {
        let lhs = diagram_product(&word_to_diagram(&a), &word_to_diagram(&b)).reflect();
        let rhs = diagram_product(&word_to_diagram(&b).reflect(), &word_to_diagram(&a).reflect());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_action_factors_through_diagrams(w in word(3, 7), lambda in partition(7)) {
        let expected = match word_to_diagram(&w) {
            TlDiagram::Zero => FockVector::zero(),
            TlDiagram::Planar(_) => {
                let nf: FcsWord = normalize(&w).unwrap().unwrap();
                act(&lambda, &nf.to_word(), Rep::XiPrime)
            }
        };
        prop_assert_eq!(act(&lambda, &w, Rep::XiPrime), expected);
    }

    #[test]
    fn multiplication_is_a_homomorphism(x in element(), y in element(), lambda in partition(6)) {
        let xy = element_multiply(&x, &y).unwrap();
        let v = FockVector::basis(lambda);
        prop_assert_eq!(act_vec(&xy, &v), act_vec(&x, &act_vec(&y, &v)));
    }

    #[test]
    fn fock_json_round_trips(terms in prop::collection::vec((partition(8), -9i64..=9), 0..5)) {
        let v = FockVector::from_terms(terms);
        let text = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<FockVector>(&text).unwrap(), v);
    }
}
