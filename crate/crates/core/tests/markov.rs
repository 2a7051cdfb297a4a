use proptest::prelude::*;

use vsbraid::markov::{
    apply_markov, default_max_strands, markov_equivalent_bounded, markov_equivalent_with, markov_moves,
    markov_neighbors, obstruction, Direction, MarkovMove, MarkovResult, MarkovStep, MarkovTrace, MoveKind,
    Obstruction, Sign,
};
use vsbraid::{BraidWord, Exec, Letter, LetterKind, SearchBudget};

fn word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((0..4usize, 1..n.max(2)), 0..=max_len).prop_map(move |raw| {
        let letters = if n == 1 {
            Vec::new()
        } else {
            raw.into_iter().map(|(k, i)| Letter::new(LetterKind::ALL[k], i)).collect()
        };
        BraidWord::new(n, letters).unwrap()
    })
}

fn w(text: &str, n: usize) -> BraidWord {
    BraidWord::parse(text, n).unwrap()
}

proptest! {
    // every move the enumerator offers keeps the conserved quantities and can be undone
    #[test]
    fn enumerated_moves_conserve_and_undo(w in (1..=4usize).prop_flat_map(|n| word_on(n, 8))) {
        for (next, mv) in markov_moves(&w, w.len() + 3, w.n() + 2) {
            prop_assert_eq!(apply_markov(&w, mv).unwrap(), next.clone());
            prop_assert_eq!(obstruction(&w, &next), None, "{}", mv);
            let back = match (mv.kind, mv.dir) {
                (MoveKind::DestabRight, _) => match w.letters().last().unwrap().kind {
                    LetterKind::RealPos => MarkovMove::forward(MoveKind::StabRealRight(Sign::Pos)),
                    LetterKind::RealNeg => MarkovMove::forward(MoveKind::StabRealRight(Sign::Neg)),
                    _ => MarkovMove::forward(MoveKind::StabVirtualRight),
                },
                (kind, dir) => MarkovMove { kind, dir: dir.flip() },
            };
            prop_assert_eq!(apply_markov(&next, back).unwrap(), w.clone(), "{} then {}", mv, back);
            let dsigma = next.sigma_exponent_sum() - w.sigma_exponent_sum();
            let expected = match (mv.kind, mv.dir) {
                (MoveKind::StabRealRight(s), Direction::Forward) => s.value() as i64,
                (MoveKind::StabRealRight(s), Direction::Inverse) => -(s.value() as i64),
                (MoveKind::DestabRight, _) => match w.letters().last().unwrap().kind {
                    LetterKind::RealPos => -1,
                    LetterKind::RealNeg => 1,
                    _ => 0,
                },
                _ => 0,
            };
            prop_assert_eq!(dsigma, expected, "{}", mv);
        }
    }

    #[test]
    fn neighbors_include_every_relation_rewrite(w in (2..=3usize).prop_flat_map(|n| word_on(n, 5))) {
        let max_len = w.len() + 2;
        let all = markov_neighbors(&w, max_len, w.n() + 1);
        let rels = vsbraid::RelationSet::original(w.n());
        for (next, _) in vsbraid::neighbors(&w, &rels, max_len) {
            prop_assert!(all.iter().any(|(x, s)| x == &next && matches!(s, MarkovStep::Relation(_))));
        }
    }
}

#[test]
fn stabilized_braids_destabilize() {
    for (a, n) in [("s1", 2), ("S1", 2), ("s1 s2", 3), ("v1 s2", 3), ("s2 v1", 3)] {
        let a = w(a, n);
        let b = BraidWord::identity(1);
        let r = markov_equivalent_bounded(&a, &b, SearchBudget::default_for(&a, &b), default_max_strands(&a, &b));
        match r {
            MarkovResult::Equivalent(trace) => assert!(trace.is_valid(), "{a}"),
            other => panic!("{a}: {other:?}"),
        }
    }
}

#[test]
fn singular_commuting_is_found() {
    let (a, b) = (w("t1 v1", 2), w("v1 t1", 2));
    let r = markov_equivalent_bounded(&a, &b, SearchBudget::default_for(&a, &b), 2);
    assert!(r.is_equivalent());
}

#[test]
fn conserved_quantities_rule_out_pairs_without_search() {
    let (a, b) = (w("t1", 2), BraidWord::identity(1));
    assert_eq!(
        markov_equivalent_bounded(&a, &b, SearchBudget::default_for(&a, &b), 3),
        MarkovResult::NotFoundWithinBudget { states_explored: 0, obstruction: Some(Obstruction::TauCount { a: 1, b: 0 }) }
    );
    // the Hopf link closure has two components, the unknot one
    let (a, b) = (w("s1 s1", 2), BraidWord::identity(1));
    assert_eq!(obstruction(&a, &b), Some(Obstruction::ComponentCount { a: 2, b: 1 }));
}

#[test]
fn traces_survive_json() {
    let (a, b) = (w("s2 v1", 3), BraidWord::identity(1));
    let MarkovResult::Equivalent(trace) =
        markov_equivalent_bounded(&a, &b, SearchBudget::default_for(&a, &b), 3)
    else {
        panic!("not found");
    };
    let back = MarkovTrace::from_json(&trace.to_json()).unwrap();
    assert_eq!(back, trace);
    assert!(back.is_valid());
}

#[test]
fn search_modes_agree() {
    let (a, b) = (w("s1 v2 s1", 3), w("s1 s1", 2));
    let budget = SearchBudget::default_for(&a, &b);
    let par = markov_equivalent_with(&a, &b, budget, 4, Exec::Parallel);
    let seq = markov_equivalent_with(&a, &b, budget, 4, Exec::Sequential);
    assert_eq!(par, seq);
}
