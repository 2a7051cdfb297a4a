//! Machine-checked derivations of the generator relations inside the reduced presentation.
//!
//! Each lemma is an identity between words in the full alphabet. Verification expands
//! both sides into the reduced alphabet and connects them over the reduced relation set,
//! either by replaying a bundled script or by bounded search.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::reduced::{expand_to_reduced, shift_word};
use crate::relations::RelationSet;
use crate::script::{check_rewrite_script, RewriteScript, ScriptCheck};
use crate::search::{equivalent_bounded, EquivResult, SearchBudget};
use crate::word::{BraidWord, Letter};

static BUNDLED: &[(&str, &str)] = include!(concat!(env!("OUT_DIR"), "/lemma_scripts.rs"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// `v_i ... v_j ... v_i = v_j ... v_i ... v_j` for |i-j| ≥ 2
    Lemma1,
    /// σᵢvⱼ = vⱼσᵢ for |i-j| > 1
    Lemma2Sigma,
    /// τᵢvⱼ = vⱼτᵢ for |i-j| > 1
    Lemma2Tau,
    /// σᵢσⱼ = σⱼσᵢ for |i-j| > 1
    Lemma3SigmaSigma,
    /// τᵢτⱼ = τⱼτᵢ for |i-j| > 1
    Lemma3TauTau,
    /// σᵢτⱼ = τⱼσᵢ for |i-j| > 1
    Lemma3SigmaTau,
    /// σᵢσⱼσᵢ = σⱼσᵢσⱼ for |i-j| = 1. Sometimes quoted with a misprinted right side
    /// σⱼσᵢσᵢ; the braid form is what the derivation establishes.
    Lemma4,
    /// σⱼσᵢτⱼ = τᵢσⱼσᵢ for |i-j| = 1
    Lemma5,
    /// σᵢσᵢ⁻¹ = 1
    Lemma6,
    /// τᵢσᵢ = σᵢτᵢ
    Lemma7,
    /// vᵢσⱼvᵢ = vⱼσᵢvⱼ for |i-j| = 1
    Lemma8Sigma,
    /// vᵢτⱼvᵢ = vⱼτᵢvⱼ for |i-j| = 1
    Lemma8Tau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaMode {
    /// Replay the bundled derivation.
    Script,
    /// Search the reduced relation set.
    Search,
}

impl fmt::Display for LemmaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaMode::Script => "script",
            LemmaMode::Search => "search",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Condition {
    Far,
    Adjacent,
    Single,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("{lemma} does not apply to indices {indices}: {reason}")]
    BadIndices { lemma: LemmaId, indices: Indices, reason: String },
}

/// Index assignment. `j` is unused by the single-index lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indices {
    pub i: usize,
    pub j: Option<usize>,
}

impl Indices {
    pub fn pair(i: usize, j: usize) -> Indices {
        Indices { i, j: Some(j) }
    }

    pub fn single(i: usize) -> Indices {
        Indices { i, j: None }
    }
}

impl fmt::Display for Indices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "i={} j={}", self.i, j),
            None => write!(f, "i={}", self.i),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    Verified { mode: LemmaMode, steps: usize },
    Failed(String),
}

impl LemmaOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, LemmaOutcome::Verified { .. })
    }
}

impl LemmaId {
    pub const ALL: [LemmaId; 12] = [
        LemmaId::Lemma1,
        LemmaId::Lemma2Sigma,
        LemmaId::Lemma2Tau,
        LemmaId::Lemma3SigmaSigma,
        LemmaId::Lemma3TauTau,
        LemmaId::Lemma3SigmaTau,
        LemmaId::Lemma4,
        LemmaId::Lemma5,
        LemmaId::Lemma6,
        LemmaId::Lemma7,
        LemmaId::Lemma8Sigma,
        LemmaId::Lemma8Tau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Lemma1 => "lemma1",
            LemmaId::Lemma2Sigma => "lemma2-sigma",
            LemmaId::Lemma2Tau => "lemma2-tau",
            LemmaId::Lemma3SigmaSigma => "lemma3-sigma-sigma",
            LemmaId::Lemma3TauTau => "lemma3-tau-tau",
            LemmaId::Lemma3SigmaTau => "lemma3-sigma-tau",
            LemmaId::Lemma4 => "lemma4",
            LemmaId::Lemma5 => "lemma5",
            LemmaId::Lemma6 => "lemma6",
            LemmaId::Lemma7 => "lemma7",
            LemmaId::Lemma8Sigma => "lemma8-sigma",
            LemmaId::Lemma8Tau => "lemma8-tau",
        }
    }

    /// Script where a full chain is written out, search where it is only asserted.
    pub fn default_mode(self) -> LemmaMode {
        match self {
            LemmaId::Lemma3SigmaTau | LemmaId::Lemma6 | LemmaId::Lemma7 => LemmaMode::Search,
            _ => LemmaMode::Script,
        }
    }

    fn condition(self) -> Condition {
        match self {
            LemmaId::Lemma1
            | LemmaId::Lemma2Sigma
            | LemmaId::Lemma2Tau
            | LemmaId::Lemma3SigmaSigma
            | LemmaId::Lemma3TauTau
            | LemmaId::Lemma3SigmaTau => Condition::Far,
            LemmaId::Lemma4 | LemmaId::Lemma5 | LemmaId::Lemma8Sigma | LemmaId::Lemma8Tau => {
                Condition::Adjacent
            }
            LemmaId::Lemma6 | LemmaId::Lemma7 => Condition::Single,
        }
    }

    fn check(self, idx: Indices, n: usize) -> Result<(usize, usize), LemmaError> {
        let bad = |reason: String| LemmaError::BadIndices { lemma: self, indices: idx, reason };
        let (i, j) = match (self.condition(), idx.j) {
            (Condition::Single, None) => (idx.i, idx.i),
            (Condition::Single, Some(_)) => return Err(bad("takes a single index".into())),
            (_, None) => return Err(bad("needs two indices".into())),
            (_, Some(j)) => (idx.i, j),
        };
        match self.condition() {
            Condition::Far if i.abs_diff(j) < 2 => return Err(bad("needs |i-j| ≥ 2".into())),
            Condition::Adjacent if i.abs_diff(j) != 1 => return Err(bad("needs |i-j| = 1".into())),
            _ => {}
        }
        if i.min(j) < 1 || i.max(j) + 1 > n {
            return Err(bad(format!("indices must lie in 1..={} for n={n}", n.saturating_sub(1))));
        }
        Ok((i, j))
    }

    /// Both sides of the identity in the full alphabet.
    pub fn sides(self, idx: Indices, n: usize) -> Result<(BraidWord, BraidWord), LemmaError> {
        let (i, j) = self.check(idx, n)?;
        if self == LemmaId::Lemma1 {
            return Ok((shift_word(i, j, n), shift_word(j, i, n)));
        }
        let (s, si, t, v) = (Letter::sigma, Letter::sigma_inv, Letter::tau, Letter::virt);
        let (l, r): (Vec<Letter>, Vec<Letter>) = match self {
            LemmaId::Lemma1 => unreachable!(),
            LemmaId::Lemma2Sigma => (vec![s(i), v(j)], vec![v(j), s(i)]),
            LemmaId::Lemma2Tau => (vec![t(i), v(j)], vec![v(j), t(i)]),
            LemmaId::Lemma3SigmaSigma => (vec![s(i), s(j)], vec![s(j), s(i)]),
            LemmaId::Lemma3TauTau => (vec![t(i), t(j)], vec![t(j), t(i)]),
            LemmaId::Lemma3SigmaTau => (vec![s(i), t(j)], vec![t(j), s(i)]),
            LemmaId::Lemma4 => (vec![s(i), s(j), s(i)], vec![s(j), s(i), s(j)]),
            LemmaId::Lemma5 => (vec![s(j), s(i), t(j)], vec![t(i), s(j), s(i)]),
            LemmaId::Lemma6 => (vec![s(i), si(i)], vec![]),
            LemmaId::Lemma7 => (vec![t(i), s(i)], vec![s(i), t(i)]),
            LemmaId::Lemma8Sigma => (vec![v(i), s(j), v(i)], vec![v(j), s(i), v(j)]),
            LemmaId::Lemma8Tau => (vec![v(i), t(j), v(i)], vec![v(j), t(i), v(j)]),
        };
        let word = |letters| BraidWord::new(n, letters).expect("indices checked");
        Ok((word(l), word(r)))
    }

    /// Both sides after expansion into the reduced alphabet.
    pub fn reduced_sides(self, idx: Indices, n: usize) -> Result<(BraidWord, BraidWord), LemmaError> {
        let (l, r) = self.sides(idx, n)?;
        Ok((expand_to_reduced(&l), expand_to_reduced(&r)))
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = LemmaError;

    fn from_str(s: &str) -> Result<LemmaId, LemmaError> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| LemmaError::UnknownLemma(s.to_string()))
    }
}

/// A derivation shipped with the library, at the smallest strand count it needs.
#[derive(Clone, Debug)]
pub struct BundledScript {
    pub lemma: LemmaId,
    pub indices: Indices,
    pub file: &'static str,
    pub script: RewriteScript,
}

/// Parses `<lemma>_i<i>[_j<j>]`.
fn parse_file_name(name: &str) -> Option<(LemmaId, Indices)> {
    let mut parts = name.split('_');
    let lemma = parts.next()?.parse().ok()?;
    let i = parts.next()?.strip_prefix('i')?.parse().ok()?;
    let j = match parts.next() {
        Some(p) => Some(p.strip_prefix('j')?.parse().ok()?),
        None => None,
    };
    parts.next().is_none().then_some((lemma, Indices { i, j }))
}

/// Every bundled script, ordered by file name.
pub fn bundled_scripts() -> Vec<BundledScript> {
    BUNDLED
        .iter()
        .map(|&(file, text)| {
            let (lemma, indices) =
                parse_file_name(file).unwrap_or_else(|| panic!("bad bundled script name {file}"));
            let script = RewriteScript::from_json(text)
                .unwrap_or_else(|e| panic!("bundled script {file} does not parse: {e}"));
            BundledScript { lemma, indices, file, script }
        })
        .collect()
}

pub fn bundled_script(lemma: LemmaId, indices: Indices) -> Option<BundledScript> {
    bundled_scripts().into_iter().find(|b| b.lemma == lemma && b.indices == indices)
}

/// Connects the expanded sides of a lemma instance over the reduced relation set.
pub fn verify_lemma(
    lemma: LemmaId,
    indices: Indices,
    n: usize,
    mode: LemmaMode,
    budget: SearchBudget,
) -> Result<LemmaOutcome, LemmaError> {
    let (start, end) = lemma.reduced_sides(indices, n)?;
    let rels = RelationSet::reduced(n);
    match mode {
        LemmaMode::Script => {
            let Some(bundled) = bundled_script(lemma, indices) else {
                return Ok(LemmaOutcome::Failed(format!("no bundled script for {lemma} {indices}")));
            };
            if bundled.script.n > n {
                return Ok(LemmaOutcome::Failed(format!(
                    "bundled script {} needs n ≥ {}",
                    bundled.file, bundled.script.n
                )));
            }
            let script = bundled.script.widened(n - bundled.script.n);
            if script.start != start || script.end != end {
                return Ok(LemmaOutcome::Failed(format!(
                    "bundled script {} does not join the expanded sides",
                    bundled.file
                )));
            }
            Ok(match check_rewrite_script(&script, &rels) {
                ScriptCheck::Valid => LemmaOutcome::Verified { mode, steps: script.steps.len() },
                ScriptCheck::Invalid { step, reason } => {
                    LemmaOutcome::Failed(format!("{} step {step}: {reason}", bundled.file))
                }
            })
        }
        LemmaMode::Search => Ok(match equivalent_bounded(&start, &end, &rels, budget) {
            Ok(EquivResult::Equivalent(s)) => LemmaOutcome::Verified { mode, steps: s.steps.len() },
            Ok(EquivResult::NotFoundWithinBudget { states_explored }) => LemmaOutcome::Failed(format!(
                "not found within budget ({states_explored} states explored)"
            )),
            Err(e) => LemmaOutcome::Failed(e.to_string()),
        }),
    }
}

/// One verification in the standard suite.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub indices: Indices,
    pub mode: LemmaMode,
    pub outcome: LemmaOutcome,
}

/// Verifies every bundled instance that fits in `n` strands, each in its default mode.
/// Search budgets default to the longer expanded side plus 6 letters.
pub fn verify_all(n: usize, max_states: usize, max_depth: usize) -> Vec<LemmaReport> {
    bundled_scripts()
        .into_iter()
        .filter(|b| b.script.n <= n)
        .map(|b| {
            let mode = b.lemma.default_mode();
            let (start, end) = b.lemma.reduced_sides(b.indices, n).expect("bundled indices are legal");
            let budget = SearchBudget {
                max_word_length: start.len().max(end.len()) + 6,
                max_states,
                max_depth,
            };
            let outcome = verify_lemma(b.lemma, b.indices, n, mode, budget)
                .unwrap_or_else(|e| LemmaOutcome::Failed(e.to_string()));
            LemmaReport { lemma: b.lemma, indices: b.indices, mode, outcome }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for l in LemmaId::ALL {
            assert_eq!(l.name().parse::<LemmaId>().unwrap(), l);
        }
        assert!(matches!("lemma9".parse::<LemmaId>(), Err(LemmaError::UnknownLemma(_))));
    }

    #[test]
    fn file_names() {
        assert_eq!(
            parse_file_name("lemma2-tau_i3_j1"),
            Some((LemmaId::Lemma2Tau, Indices::pair(3, 1)))
        );
        assert_eq!(parse_file_name("lemma7_i2"), Some((LemmaId::Lemma7, Indices::single(2))));
        assert_eq!(parse_file_name("lemma7_x2"), None);
    }

    #[test]
    fn side_conditions() {
        assert!(LemmaId::Lemma4.sides(Indices::pair(1, 3), 4).is_err());
        assert!(LemmaId::Lemma2Tau.sides(Indices::pair(2, 1), 4).is_err());
        assert!(LemmaId::Lemma2Tau.sides(Indices::pair(3, 1), 3).is_err());
        assert!(LemmaId::Lemma7.sides(Indices::pair(1, 2), 3).is_err());
        let (l, r) = LemmaId::Lemma5.sides(Indices::pair(2, 3), 4).unwrap();
        assert_eq!(l.to_string(), "s3 s2 t3");
        assert_eq!(r.to_string(), "t2 s3 s2");
    }

    #[test]
    fn lemma7_by_search() {
        let budget = SearchBudget { max_word_length: 16, max_states: 200_000, max_depth: 24 };
        let out = verify_lemma(LemmaId::Lemma7, Indices::single(2), 3, LemmaMode::Search, budget).unwrap();
        assert!(out.is_verified(), "{out:?}");
    }
}
