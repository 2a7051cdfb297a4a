//! Rewriting every generator into the reduced alphabet {σ₁^±1, τ₁, v₁..v_{n-1}}.

use thiserror::Error;

use crate::relations::RelationSet;
use crate::search::{equivalent_bounded, EquivResult, SearchBudget, SearchError};
use crate::word::{BraidWord, Letter, LetterKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShiftError {
    #[error("indices {i} and {j} must differ by at least 2")]
    TooClose { i: usize, j: usize },
    #[error("indices {i}, {j} need n > {max}, got n={n}")]
    OutOfRange { i: usize, j: usize, max: usize, n: usize },
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// `(v_i ... v_1)(v_{i+1} ... v_2)`: conjugates position 1 to position i+1.
fn detour(i: usize) -> Vec<Letter> {
    let mut out: Vec<Letter> = (1..=i).rev().map(Letter::virt).collect();
    out.extend((2..=i + 1).rev().map(Letter::virt));
    out
}

/// Closed form of a single letter in the reduced alphabet.
pub fn expand_letter(l: Letter) -> Vec<Letter> {
    if l.is_virtual() || l.index == 1 {
        return vec![l];
    }
    let pre = detour(l.index - 1);
    let mut out = pre.clone();
    out.push(Letter::new(l.kind, 1));
    out.extend(pre.iter().rev());
    out
}

/// Replaces every σ_k^±1 and τ_k with k ≥ 2 by its detour through strands 1 and 2.
pub fn expand_to_reduced(w: &BraidWord) -> BraidWord {
    let letters = w.letters().iter().flat_map(|&l| expand_letter(l)).collect();
    BraidWord::new(w.n(), letters).expect("expansion keeps indices below n")
}

/// True when the word only uses σ₁^±1, τ₁ and virtual letters.
pub fn is_reduced(w: &BraidWord) -> bool {
    w.letters().iter().all(|l| l.is_virtual() || l.index == 1)
}

/// `v_a v_{a∓1} ... v_b ... v_a`: walks from index `a` to `b` and back.
pub fn shift_word(a: usize, b: usize, n: usize) -> BraidWord {
    let there: Vec<usize> = if a >= b { (b..=a).rev().collect() } else { (a..=b).collect() };
    let mut idx = there.clone();
    idx.extend(there.iter().rev().skip(1));
    BraidWord::new(n, idx.into_iter().map(Letter::virt).collect()).expect("indices checked by caller")
}

/// Checks `v_i ... v_j ... v_i = v_j ... v_i ... v_j` with virtual relations only.
pub fn verify_shift_identity(
    i: usize,
    j: usize,
    n: usize,
    budget: SearchBudget,
) -> Result<EquivResult, ShiftError> {
    if i.abs_diff(j) < 2 {
        return Err(ShiftError::TooClose { i, j });
    }
    if i.min(j) < 1 || i.max(j) + 1 > n {
        return Err(ShiftError::OutOfRange { i, j, max: i.max(j), n });
    }
    let (a, b) = (shift_word(i, j, n), shift_word(j, i, n));
    Ok(equivalent_bounded(&a, &b, &RelationSet::reduced_virtual(n), budget)?)
}

/// Word with the given kind at index 1 conjugated to index `k`; handy for tests.
pub fn expanded_generator(kind: LetterKind, k: usize, n: usize) -> BraidWord {
    BraidWord::new(n, expand_letter(Letter::new(kind, k))).expect("index below n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expand_to_reduced(&w("s2", 3)), w("v1 v2 s1 v2 v1", 3));
        assert_eq!(expand_to_reduced(&w("t2", 3)), w("v1 v2 t1 v2 v1", 3));
        assert_eq!(expand_to_reduced(&w("s3", 4)), w("v2 v1 v3 v2 s1 v2 v3 v1 v2", 4));
        assert_eq!(expand_to_reduced(&w("t3", 4)), w("v2 v1 v3 v2 t1 v2 v3 v1 v2", 4));
        assert_eq!(expand_to_reduced(&w("S2", 3)), w("v1 v2 S1 v2 v1", 3));
        assert_eq!(expand_to_reduced(&w("s1", 2)), w("s1", 2));
        assert_eq!(expand_to_reduced(&w("v3 t1", 4)), w("v3 t1", 4));
    }

    #[test]
    fn shift_words() {
        assert_eq!(shift_word(3, 1, 4), w("v3 v2 v1 v2 v3", 4));
        assert_eq!(shift_word(1, 3, 4), w("v1 v2 v3 v2 v1", 4));
    }

    #[test]
    fn shift_identity_small() {
        let budget = SearchBudget { max_word_length: 11, max_states: 200_000, max_depth: 24 };
        assert!(verify_shift_identity(3, 1, 4, budget).unwrap().is_equivalent());
        assert!(matches!(verify_shift_identity(2, 1, 4, budget), Err(ShiftError::TooClose { .. })));
        assert!(matches!(verify_shift_identity(4, 1, 4, budget), Err(ShiftError::OutOfRange { .. })));
    }
}
