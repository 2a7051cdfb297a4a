//! Invariants of words, rewriting and expansion over arbitrary words.

use proptest::prelude::*;

use vsbraid::reduced::{expand_to_reduced, is_reduced};
use vsbraid::{neighbors, BraidWord, Letter, LetterKind, RelationSet};

fn word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((0..4usize, 1..n), 0..=max_len).prop_map(move |raw| {
        let letters = raw.into_iter().map(|(k, i)| Letter::new(LetterKind::ALL[k], i)).collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| word_on(n, max_len))
}

fn pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word_on(n, max_len), word_on(n, max_len)))
}

fn invertible(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(max_n, max_len).prop_map(|w| {
        let letters = w.letters().iter().filter(|l| l.kind != LetterKind::Singular).copied().collect();
        BraidWord::new(w.n(), letters).unwrap()
    })
}

fn same_invariants(a: &BraidWord, b: &BraidWord) -> bool {
    a.permutation_image() == b.permutation_image()
        && a.tau_count() == b.tau_count()
        && a.sigma_exponent_sum() == b.sigma_exponent_sum()
}

proptest! {
    #[test]
    fn display_parses_back(w in word(6, 12)) {
        prop_assert_eq!(BraidWord::parse(&w.to_string(), w.n()).unwrap(), w);
    }

    #[test]
    fn invariants_add_under_composition((a, b) in pair(5, 10)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.len(), a.len() + b.len());
        prop_assert_eq!(ab.permutation_image(), a.permutation_image().then(&b.permutation_image()));
        prop_assert_eq!(ab.tau_count(), a.tau_count() + b.tau_count());
        prop_assert_eq!(ab.sigma_exponent_sum(), a.sigma_exponent_sum() + b.sigma_exponent_sum());
    }

    #[test]
    fn inversion_is_an_involution_and_a_two_sided_inverse(w in invertible(5, 10)) {
        let inv = w.invert().unwrap();
        prop_assert_eq!(inv.invert().unwrap(), w.clone());
        prop_assert!(w.compose(&inv).unwrap().free_reduce().is_empty());
        prop_assert!(inv.compose(&w).unwrap().free_reduce().is_empty());
        prop_assert_eq!(inv.sigma_exponent_sum(), -w.sigma_exponent_sum());
    }

    #[test]
    fn free_reduction_is_idempotent_and_conservative(w in word(5, 14)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert!(same_invariants(&w, &r));
        prop_assert_eq!(r.closure_component_count(), w.closure_component_count());
    }

    #[test]
    fn components_are_permutation_cycles(w in word(6, 12)) {
        prop_assert_eq!(w.closure_component_count(), w.permutation_image().cycle_count());
    }

    #[test]
    fn neighbors_are_reversible_rewrites(w in word(4, 6)) {
        let rels = RelationSet::original(w.n());
        let max_len = w.len() + 2;
        for (next, step) in neighbors(&w, &rels, max_len) {
            prop_assert!(next.len() <= max_len);
            prop_assert_eq!(step.apply(&w).unwrap(), next.clone());
            prop_assert_eq!(step.inverse().apply(&next).unwrap(), w.clone());
            prop_assert!(same_invariants(&w, &next), "{} changed an invariant", step.rel);
            // the relation is symmetric: w is a neighbor of next
            prop_assert!(neighbors(&next, &rels, max_len).iter().any(|(x, _)| x == &w));
        }
    }

    #[test]
    fn reduced_neighbors_keep_invariants(w in word(4, 5)) {
        let w = expand_to_reduced(&w);
        let rels = RelationSet::reduced(w.n());
        for (next, step) in neighbors(&w, &rels, w.len() + 2) {
            prop_assert!(is_reduced(&next));
            prop_assert!(same_invariants(&w, &next), "{} changed an invariant", step.rel);
        }
    }

    #[test]
    fn expansion_lands_in_the_reduced_alphabet(w in word(6, 8)) {
        let e = expand_to_reduced(&w);
        prop_assert!(is_reduced(&e));
        prop_assert!(same_invariants(&w, &e));
        prop_assert_eq!(e.count(LetterKind::Singular), w.count(LetterKind::Singular));
        prop_assert_eq!(expand_to_reduced(&e), e);
    }

    #[test]
    fn widening_keeps_the_word(w in word(5, 8), by in 0..3usize) {
        let wide = w.widened(by);
        prop_assert_eq!(wide.n(), w.n() + by);
        prop_assert_eq!(wide.letters(), w.letters());
        prop_assert_eq!(wide.closure_component_count(), w.closure_component_count() + by);
    }
}
