//! Letters, braid words and their homomorphic invariants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Permutation;

/// Largest strand index a letter can carry (keeps the byte encoding in range).
pub const MAX_INDEX: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("index {index} exceeds n-1={max} (n={n})")]
    IndexOutOfRange { index: usize, max: usize, n: usize },
    #[error("strand count must be at least 1")]
    ZeroStrands,
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("letter {position} is a singular crossing, which is not invertible")]
    NotInvertible { position: usize },
    #[error("invalid word file: {0}")]
    File(String),
}

/// The four crossing kinds a generator can carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterKind {
    /// σᵢ
    RealPos,
    /// σᵢ⁻¹
    RealNeg,
    /// τᵢ
    Singular,
    /// vᵢ
    Virtual,
}

impl LetterKind {
    pub const ALL: [LetterKind; 4] = [
        LetterKind::RealPos,
        LetterKind::RealNeg,
        LetterKind::Singular,
        LetterKind::Virtual,
    ];

    pub fn code(self) -> u8 {
        match self {
            LetterKind::RealPos => 0,
            LetterKind::RealNeg => 1,
            LetterKind::Singular => 2,
            LetterKind::Virtual => 3,
        }
    }

    pub fn from_code(code: u8) -> Option<LetterKind> {
        LetterKind::ALL.get(code as usize).copied()
    }

    fn token_char(self) -> char {
        match self {
            LetterKind::RealPos => 's',
            LetterKind::RealNeg => 'S',
            LetterKind::Singular => 't',
            LetterKind::Virtual => 'v',
        }
    }
}

/// One generator σᵢ, σᵢ⁻¹, τᵢ or vᵢ acting on strands `index` and `index + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
}

impl Letter {
    pub fn new(kind: LetterKind, index: usize) -> Letter {
        assert!((1..=MAX_INDEX).contains(&index), "letter index {index} out of range");
        Letter { kind, index }
    }

    pub fn sigma(index: usize) -> Letter {
        Letter::new(LetterKind::RealPos, index)
    }

    pub fn sigma_inv(index: usize) -> Letter {
        Letter::new(LetterKind::RealNeg, index)
    }

    pub fn tau(index: usize) -> Letter {
        Letter::new(LetterKind::Singular, index)
    }

    pub fn virt(index: usize) -> Letter {
        Letter::new(LetterKind::Virtual, index)
    }

    /// Compact byte encoding, ordered by (index, kind).
    pub fn code(self) -> u8 {
        (((self.index - 1) as u8) << 2) | self.kind.code()
    }

    pub fn from_code(code: u8) -> Letter {
        Letter {
            kind: LetterKind::from_code(code & 3).unwrap(),
            index: (code >> 2) as usize + 1,
        }
    }

    pub fn is_virtual(self) -> bool {
        self.kind == LetterKind::Virtual
    }

    /// Group inverse for invertible letters.
    pub fn inverse(self) -> Option<Letter> {
        let kind = match self.kind {
            LetterKind::RealPos => LetterKind::RealNeg,
            LetterKind::RealNeg => LetterKind::RealPos,
            LetterKind::Virtual => LetterKind::Virtual,
            LetterKind::Singular => return None,
        };
        Some(Letter { kind, index: self.index })
    }

    pub fn shifted(self, by: usize) -> Letter {
        Letter::new(self.kind, self.index + by)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.token_char(), self.index)
    }
}

impl FromStr for Letter {
    type Err = WordError;

    fn from_str(tok: &str) -> Result<Letter, WordError> {
        let bad = || WordError::MalformedToken(tok.to_string());
        let mut chars = tok.chars();
        let kind = match chars.next() {
            Some('s') => LetterKind::RealPos,
            Some('S') => LetterKind::RealNeg,
            Some('t') => LetterKind::Singular,
            Some('v') => LetterKind::Virtual,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index > MAX_INDEX {
            return Err(bad());
        }
        Ok(Letter { kind, index })
    }
}

/// A word in the generators of VSB_n, read top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<BraidWord, WordError> {
        if n < 1 {
            return Err(WordError::ZeroStrands);
        }
        for l in &letters {
            if l.index + 1 > n {
                return Err(WordError::IndexOutOfRange { index: l.index, max: n - 1, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// The identity 1_n.
    pub fn identity(n: usize) -> BraidWord {
        assert!(n >= 1);
        BraidWord { n, letters: Vec::new() }
    }

    pub(crate) fn from_codes(n: usize, codes: &[u8]) -> BraidWord {
        BraidWord { n, letters: codes.iter().map(|&c| Letter::from_code(c)).collect() }
    }

    pub(crate) fn codes(&self) -> Vec<u8> {
        self.letters.iter().map(|l| l.code()).collect()
    }

    /// Parses the whitespace-separated token grammar (`s3 S1 t2 v1`, or `1` for the identity).
    pub fn parse(text: &str, n: usize) -> Result<BraidWord, WordError> {
        if n < 1 {
            return Err(WordError::ZeroStrands);
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(BraidWord::identity(n));
        }
        let letters = tokens
            .iter()
            .map(|t| t.parse::<Letter>())
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        if self.n != other.n {
            return Err(WordError::StrandMismatch { left: self.n, right: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn invert(&self) -> Result<BraidWord, WordError> {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .rev()
            .map(|(pos, l)| l.inverse().ok_or(WordError::NotInvertible { position: pos }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidWord { n: self.n, letters })
    }

    /// Deletes canceling pairs σᵢσᵢ⁻¹, σᵢ⁻¹σᵢ and vᵢvᵢ, leftmost first, to a fixpoint.
    pub fn free_reduce(&self) -> BraidWord {
        // A stack scan deletes the leftmost pair at every stage, so it agrees with the
        // naive leftmost-first loop.
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if cancels(top, l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    /// Projection to S_n: π(top position) = bottom position.
    pub fn permutation_image(&self) -> Permutation {
        let mut arrangement: Vec<usize> = (1..=self.n).collect();
        for l in &self.letters {
            arrangement.swap(l.index - 1, l.index);
        }
        // arrangement[p] is the strand that ends at position p+1
        let mut image = vec![0; self.n];
        for (p, &strand) in arrangement.iter().enumerate() {
            image[strand - 1] = p + 1;
        }
        Permutation::from_image(image).expect("arrangement is a bijection")
    }

    pub fn tau_count(&self) -> usize {
        self.count(LetterKind::Singular)
    }

    pub fn sigma_exponent_sum(&self) -> i64 {
        self.count(LetterKind::RealPos) as i64 - self.count(LetterKind::RealNeg) as i64
    }

    /// Number of link components of the closure.
    pub fn closure_component_count(&self) -> usize {
        self.permutation_image().cycle_count()
    }

    pub fn count(&self, kind: LetterKind) -> usize {
        self.letters.iter().filter(|l| l.kind == kind).count()
    }

    /// Same letters viewed in VSB_{n+k}.
    pub fn widened(&self, by: usize) -> BraidWord {
        BraidWord { n: self.n + by, letters: self.letters.clone() }
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }
}

fn cancels(a: Letter, b: Letter) -> bool {
    a.index == b.index
        && matches!(
            (a.kind, b.kind),
            (LetterKind::RealPos, LetterKind::RealNeg)
                | (LetterKind::RealNeg, LetterKind::RealPos)
                | (LetterKind::Virtual, LetterKind::Virtual)
        )
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// On-disk form of a word: `{ "n": 3, "word": "s1 v2" }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFile {
    pub n: usize,
    pub word: String,
}

impl WordFile {
    pub fn from_word(w: &BraidWord) -> WordFile {
        WordFile { n: w.n(), word: w.to_string() }
    }

    pub fn to_word(&self) -> Result<BraidWord, WordError> {
        BraidWord::parse(&self.word, self.n)
    }

    pub fn from_json(text: &str) -> Result<BraidWord, WordError> {
        let file: WordFile =
            serde_json::from_str(text).map_err(|e| WordError::File(e.to_string()))?;
        file.to_word()
    }

    pub fn to_json(w: &BraidWord) -> String {
        serde_json::to_string(&WordFile::from_word(w)).expect("word file serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_maps_tokens() {
        let word = w("s1 S2 t1 v3", 4);
        assert_eq!(
            word.letters(),
            &[Letter::sigma(1), Letter::sigma_inv(2), Letter::tau(1), Letter::virt(3)]
        );
        assert_eq!(word.n(), 4);
    }

    #[test]
    fn parse_identity_token() {
        let word = w("1", 3);
        assert!(word.is_empty());
        assert_eq!(word.n(), 3);
        assert_eq!(word.to_string(), "1");
    }

    #[test]
    fn parse_rejects_out_of_range_index() {
        assert_eq!(
            BraidWord::parse("s3", 3),
            Err(WordError::IndexOutOfRange { index: 3, max: 2, n: 3 })
        );
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        for bad in ["x1", "s", "s0", "s01", "s1a", "1 s1", "σ1"] {
            assert!(BraidWord::parse(bad, 4).is_err(), "{bad}");
        }
        assert_eq!(BraidWord::parse("s1", 0), Err(WordError::ZeroStrands));
    }

    #[test]
    fn compose_concatenates() {
        let a = w("s1", 3);
        let b = w("v2", 3);
        assert_eq!(a.compose(&b).unwrap(), w("s1 v2", 3));
        let e = BraidWord::identity(3);
        assert_eq!(e.compose(&a).unwrap(), a);
        assert_eq!(a.compose(&e).unwrap(), a);
        assert!(a.compose(&w("s1", 2)).is_err());
    }

    #[test]
    fn invert_reverses_and_flips() {
        assert_eq!(w("s1 v2", 3).invert().unwrap(), w("v2 S1", 3));
        assert_eq!(BraidWord::identity(2).invert().unwrap(), BraidWord::identity(2));
        assert_eq!(w("t1", 2).invert(), Err(WordError::NotInvertible { position: 0 }));
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("s1 S1", 2).free_reduce().is_empty());
        assert_eq!(w("v2 v2 t1", 3).free_reduce(), w("t1", 3));
        assert_eq!(w("s1 v2", 3).free_reduce(), w("s1 v2", 3));
        assert_eq!(w("s1 v1 v1 S1 t1", 2).free_reduce(), w("t1", 2));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("s1 s2", 3).permutation_image().image(), &[3, 1, 2]);
        assert_eq!(BraidWord::identity(3).permutation_image().image(), &[1, 2, 3]);
        assert_eq!(w("v1", 2).permutation_image().image(), &[2, 1]);
    }

    #[test]
    fn counting_invariants() {
        assert_eq!(w("t1 s2 t1", 3).tau_count(), 2);
        assert_eq!(BraidWord::identity(2).tau_count(), 0);
        assert_eq!(w("s1 S2 s2", 3).sigma_exponent_sum(), 1);
        assert_eq!(w("v1 t2", 3).sigma_exponent_sum(), 0);
        // RS3 and R3 sides
        assert_eq!(w("s1 s2 t1", 3).tau_count(), w("t2 s1 s2", 3).tau_count());
        assert_eq!(w("s1 s2 s1", 3).sigma_exponent_sum(), 3);
        assert_eq!(w("s2 s1 s2", 3).sigma_exponent_sum(), 3);
    }

    #[test]
    fn closure_components() {
        assert_eq!(BraidWord::identity(3).closure_component_count(), 3);
        assert_eq!(w("s1", 2).closure_component_count(), 1);
        assert_eq!(w("s1 s2", 3).closure_component_count(), 1);
    }

    #[test]
    fn word_file_round_trip() {
        let word = w("s1 t2 v1", 3);
        let json = WordFile::to_json(&word);
        assert_eq!(json, r#"{"n":3,"word":"s1 t2 v1"}"#);
        assert_eq!(WordFile::from_json(&json).unwrap(), word);
    }

    #[test]
    fn letter_codes_round_trip() {
        for index in 1..=MAX_INDEX {
            for kind in LetterKind::ALL {
                let l = Letter::new(kind, index);
                assert_eq!(Letter::from_code(l.code()), l);
            }
        }
    }
}
