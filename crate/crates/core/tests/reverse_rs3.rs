//! The reduced relation set contains the singular three-strand relation in one orientation
//! only, τ₁σ₂σ₁ = σ₂σ₁τ₂. This file proves that the other orientation,
//! σ₁σ₂τ₁ = τ₂σ₁σ₂, is not a consequence of the reduced relations on three strands.
//!
//! Every relation preserves the number of τ letters. For a word `p τ₁ q` with one τ, map
//! p and q into a group G satisfying the τ-free reduced relations. The pair
//! (image of pq, coset pK) with K = ⟨σ₁, X σ₁ v₁ v₂⟩ and X = v₁v₂σ₁v₂v₁ is unchanged
//! by every reduced relation. A permutation representation of degree 8 separates the
//! two sides of the reversed relation.

use std::collections::HashSet;

use vsbraid::reduced::expand_to_reduced;
use vsbraid::{BraidWord, Dir, Letter, LetterKind, RelationSet};

type Perm = [u8; 8];

const V1: Perm = [0, 1, 2, 7, 6, 5, 4, 3];
const V2: Perm = [6, 1, 7, 3, 4, 5, 0, 2];
const S: Perm = [1, 7, 2, 5, 3, 4, 6, 0];

const ID: Perm = [0, 1, 2, 3, 4, 5, 6, 7];

/// `a` then `b`.
fn then(a: &Perm, b: &Perm) -> Perm {
    let mut out = [0; 8];
    for x in 0..8 {
        out[x] = b[a[x] as usize];
    }
    out
}

fn inverse(a: &Perm) -> Perm {
    let mut out = [0; 8];
    for x in 0..8 {
        out[a[x] as usize] = x as u8;
    }
    out
}

fn image(letter: Letter) -> Perm {
    match (letter.kind, letter.index) {
        (LetterKind::RealPos, 1) => S,
        (LetterKind::RealNeg, 1) => inverse(&S),
        (LetterKind::Virtual, 1) => V1,
        (LetterKind::Virtual, 2) => V2,
        other => panic!("letter {other:?} outside the three-strand reduced alphabet"),
    }
}

fn word_image(letters: &[Letter]) -> Perm {
    letters.iter().fold(ID, |acc, &l| then(&acc, &image(l)))
}

fn letters(codes: &[u8]) -> Vec<Letter> {
    codes.iter().map(|&c| Letter::from_code(c)).collect()
}

fn x_word() -> Vec<Letter> {
    expand_to_reduced(&BraidWord::parse("s2", 3).unwrap()).letters().to_vec()
}

fn subgroup_k() -> HashSet<Perm> {
    let x = word_image(&x_word());
    let gens = [S, then(&then(&then(&x, &S), &V1), &V2)];
    let mut seen = HashSet::from([ID]);
    let mut stack = vec![ID];
    while let Some(g) = stack.pop() {
        for h in &gens {
            let next = then(&g, h);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen
}

/// (image of pq, some canonical representative of pK) for a word with exactly one τ.
fn invariant(word: &[Letter], k: &HashSet<Perm>) -> (Perm, Perm) {
    let t = word.iter().position(|l| l.kind == LetterKind::Singular).expect("one τ");
    assert_eq!(word.iter().filter(|l| l.kind == LetterKind::Singular).count(), 1);
    let (p, q) = (word_image(&word[..t]), word_image(&word[t + 1..]));
    let coset_rep = k.iter().map(|g| then(&p, g)).min().unwrap();
    (then(&p, &q), coset_rep)
}

#[test]
fn model_satisfies_every_reduced_relation() {
    let k = subgroup_k();
    let rels = RelationSet::reduced(3);
    assert!(!rels.is_empty());
    for rule in rels.rules() {
        let (lhs, rhs) = rule.side(Dir::L2R);
        let (l, r) = (letters(lhs), letters(rhs));
        let taus = l.iter().filter(|x| x.kind == LetterKind::Singular).count();
        match taus {
            0 => assert_eq!(word_image(&l), word_image(&r), "{:?}", rule.id),
            1 => assert_eq!(invariant(&l, &k), invariant(&r, &k), "{:?}", rule.id),
            _ => panic!("no reduced relation on three strands has two τ letters"),
        }
    }
}

#[test]
fn model_separates_the_reversed_relation() {
    let k = subgroup_k();
    let side = |text: &str| expand_to_reduced(&BraidWord::parse(text, 3).unwrap()).letters().to_vec();
    let (l, r) = (side("s1 s2 t1"), side("t2 s1 s2"));
    let (il, ir) = (invariant(&l, &k), invariant(&r, &k));
    assert_eq!(il.0, ir.0, "the group parts agree");
    assert_ne!(il.1, ir.1, "the cosets differ, so no reduced derivation exists");

    // The orientation that is in the reduced set gives equal invariants.
    let (l, r) = (side("s2 s1 t2"), side("t1 s2 s1"));
    assert_eq!(invariant(&l, &k), invariant(&r, &k));
}

#[test]
fn reversed_relation_holds_in_the_full_presentation() {
    let rels = RelationSet::original(3);
    let a = BraidWord::parse("s1 s2 t1", 3).unwrap();
    let b = BraidWord::parse("t2 s1 s2", 3).unwrap();
    let budget = vsbraid::SearchBudget::default_for(&a, &b);
    assert!(vsbraid::equivalent_bounded(&a, &b, &rels, budget).unwrap().is_equivalent());
}
