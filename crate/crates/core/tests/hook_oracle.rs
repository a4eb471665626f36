mod support;

use pecomb::enumerate_partitions;
use pecomb::fock::{support_bounds, xi_on_partition};
use support::border_strips::*;

const MAX_SIZE: usize = 12;

#[test]
fn xi_matches_border_strip_model() {
    let mut mismatches = Vec::new();
    for lambda in enumerate_partitions(MAX_SIZE) {
        let (lo, hi) = support_bounds(&lambda);
        for q in lo - 2..=hi + 2 {
            let expected = oracle_xi(lambda.parts(), q).map(|p| to_partition(&p));
            let got = xi_on_partition(&lambda, q);
            if got != expected {
                mismatches.push((lambda.clone(), q, got, expected));
            }
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn minimal_hooks_match_border_strip_model() {
    for lambda in enumerate_partitions(MAX_SIZE) {
        let strips = border_strips(lambda.parts());
        let (lo, hi) = support_bounds(&lambda);
        for c in lo - 1..=hi + 1 {
            let start = lambda
                .minimal_balanced_hook_starting(c)
                .map(|h| h.remainder);
            let model = minimal_starting(&strips, c).map(|s| to_partition(&s.remainder));
            assert_eq!(start, model, "starting at {c} in {lambda}");
            let end = lambda.minimal_balanced_hook_ending(c).map(|h| h.remainder);
            let model = minimal_ending(&strips, c).map(|s| to_partition(&s.remainder));
            assert_eq!(end, model, "ending at {c} in {lambda}");
        }
    }
}

#[test]
fn every_border_strip_is_a_rim_hook() {
    for lambda in enumerate_partitions(9) {
        for s in border_strips(lambda.parts()) {
            let hook = lambda
                .rim_hook(s.min_content, s.max_content)
                .unwrap_or_else(|| panic!("{lambda} lost strip {s:?}"));
            assert_eq!(hook.remainder, to_partition(&s.remainder));
            assert_eq!((hook.height, hook.width), (s.height, s.width));
        }
    }
}

#[test]
fn model_reproduces_hand_examples() {
    assert_eq!(oracle_xi(&[3, 3], -1), Some(vec![2, 1]));
    assert_eq!(oracle_xi(&[2, 2], 0), None);
    assert_eq!(oracle_xi(&[], 0), Some(vec![1]));
    assert_eq!(oracle_xi(&[], 1), None);
}
