//! Bounded equivalence search under a relation set.

mod engine;
mod quotient;

use thiserror::Error;

use crate::coxeter::QMAX;
use crate::exec::Exec;
use crate::relations::{Dir, RelationSet, RewriteStep};
use crate::script::{RewriteScript, ScriptBuilder};
use crate::word::BraidWord;

pub(crate) use engine::{bidirectional, Space};
use quotient::{QState, Quotient};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("relation set is for n={set}, words have n={word}")]
    RelationSetMismatch { set: usize, word: usize },
    #[error("the virtual-quotient strategy needs every virtual relation and n <= {QMAX}")]
    QuotientUnavailable,
}

/// Limits for a search. All limits are hard: the search never exceeds them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// No intermediate word is longer than this.
    pub max_word_length: usize,
    /// Total states visited across both search directions.
    pub max_states: usize,
    /// Breadth-first levels expanded, summed over both directions.
    pub max_depth: usize,
}

impl SearchBudget {
    pub const DEFAULT_STATES: usize = 2_000_000;
    pub const DEFAULT_DEPTH: usize = 24;

    /// Defaults: longest input plus 6 letters, 2·10⁶ states, depth 24.
    pub fn default_for(a: &BraidWord, b: &BraidWord) -> SearchBudget {
        SearchBudget {
            max_word_length: a.len().max(b.len()) + 6,
            max_states: Self::DEFAULT_STATES,
            max_depth: Self::DEFAULT_DEPTH,
        }
    }
}

/// How the search space is represented.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Quotient when possible, otherwise elementary.
    #[default]
    Auto,
    /// Every word is a separate state.
    Elementary,
    /// States are classes modulo the virtual permutation group. Depth counts class moves.
    VirtualQuotient,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub strategy: Strategy,
    pub exec: Exec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivResult {
    /// A replayable derivation from the first word to the second.
    Equivalent(RewriteScript),
    NotFoundWithinBudget { states_explored: usize },
}

impl EquivResult {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivResult::Equivalent(_))
    }

    pub fn script(&self) -> Option<&RewriteScript> {
        match self {
            EquivResult::Equivalent(s) => Some(s),
            EquivResult::NotFoundWithinBudget { .. } => None,
        }
    }
}

/// Searches for a derivation `a = ... = b` using the default options.
pub fn equivalent_bounded(
    a: &BraidWord,
    b: &BraidWord,
    rels: &RelationSet,
    budget: SearchBudget,
) -> Result<EquivResult, SearchError> {
    equivalent_with(a, b, rels, budget, SearchOptions::default())
}

/// Length caps tried in turn: the longer input first, then growing by 2 up to the budget.
fn caps(a: &BraidWord, b: &BraidWord, max: usize) -> Vec<usize> {
    let first = a.len().max(b.len());
    if first >= max {
        return vec![max];
    }
    let mut out: Vec<usize> = (first..max).step_by(2).collect();
    out.push(max);
    out
}

pub fn equivalent_with(
    a: &BraidWord,
    b: &BraidWord,
    rels: &RelationSet,
    budget: SearchBudget,
    options: SearchOptions,
) -> Result<EquivResult, SearchError> {
    if a.n() != b.n() {
        return Err(SearchError::StrandMismatch(a.n(), b.n()));
    }
    if rels.n() != a.n() {
        return Err(SearchError::RelationSetMismatch { set: rels.n(), word: a.n() });
    }
    if a == b {
        return Ok(EquivResult::Equivalent(RewriteScript::trivial(a)));
    }
    let quotient_ok = a.n() <= QMAX && rels.has_virtual_coxeter();
    let use_quotient = match options.strategy {
        Strategy::Auto => quotient_ok,
        Strategy::Elementary => false,
        Strategy::VirtualQuotient if quotient_ok => true,
        Strategy::VirtualQuotient => return Err(SearchError::QuotientUnavailable),
    };
    let mut explored = 0;
    for cap in caps(a, b, budget.max_word_length) {
        let remaining = budget.max_states.saturating_sub(explored);
        if remaining == 0 {
            break;
        }
        let (script, used) = if use_quotient {
            quotient_attempt(a, b, rels, cap, remaining, budget.max_depth, options.exec)
        } else {
            elementary_attempt(a, b, rels, cap, remaining, budget.max_depth, options.exec)
        };
        explored += used;
        if let Some(script) = script {
            return Ok(EquivResult::Equivalent(script));
        }
    }
    Ok(EquivResult::NotFoundWithinBudget { states_explored: explored })
}

/// Word state ordered by (length, letters).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Codes(pub Vec<u8>);

impl Ord for Codes {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for Codes {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

struct Elementary<'a> {
    rels: &'a RelationSet,
    cap: usize,
}

impl Space for Elementary<'_> {
    type State = Codes;
    type Edge = (u32, Dir, u32);

    fn successors(&self, s: &Codes) -> Vec<(Codes, Self::Edge)> {
        self.rels
            .successors(&s.0, self.cap)
            .into_iter()
            .map(|(next, k, dir, pos)| (Codes(next), (k as u32, dir, pos as u32)))
            .collect()
    }

    fn invert(&self, _: &Codes, e: &Self::Edge, _: &Codes) -> Self::Edge {
        (e.0, e.1.flip(), e.2)
    }
}

fn elementary_attempt(
    a: &BraidWord,
    b: &BraidWord,
    rels: &RelationSet,
    cap: usize,
    max_states: usize,
    max_depth: usize,
    exec: Exec,
) -> (Option<RewriteScript>, usize) {
    let space = Elementary { rels, cap };
    let out = bidirectional(&space, Codes(a.codes()), Codes(b.codes()), max_states, max_depth, exec);
    let script = out.path.map(|path| {
        let mut builder = ScriptBuilder::new(rels, a.codes());
        for &(k, dir, pos) in &path.edges {
            builder.apply(k as usize, dir, pos as usize);
        }
        finish(a, b, builder.steps)
    });
    (script, out.explored)
}

fn quotient_attempt(
    a: &BraidWord,
    b: &BraidWord,
    rels: &RelationSet,
    cap: usize,
    max_states: usize,
    max_depth: usize,
    exec: Exec,
) -> (Option<RewriteScript>, usize) {
    let space = Quotient::new(rels, cap);
    let (qa, qb) = (QState::from_codes(&a.codes()), QState::from_codes(&b.codes()));
    let out = bidirectional(&space, qa, qb, max_states, max_depth, exec);
    let script = out.path.map(|path| {
        let mut fwd = ScriptBuilder::new(space.relations(), a.codes());
        space.normalize(&mut fwd);
        for (state, edge) in path.states.iter().zip(&path.edges) {
            space.replay_edge(&mut fwd, state, edge);
        }
        let mut back = ScriptBuilder::new(space.relations(), b.codes());
        space.normalize(&mut back);
        assert_eq!(fwd.word, back.word, "class path does not reach the target class");
        let mut steps = fwd.steps;
        steps.extend(back.steps.iter().rev().map(RewriteStep::inverse));
        finish(a, b, steps)
    });
    (script, out.explored)
}

fn finish(a: &BraidWord, b: &BraidWord, steps: Vec<RewriteStep>) -> RewriteScript {
    RewriteScript { n: a.n(), start: a.clone(), end: b.clone(), steps }
}
