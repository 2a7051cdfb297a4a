//! Markov moves between braids on different strand counts, and a bounded search that
//! mixes them with the relations of the full presentation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Exec;
use crate::relations::{neighbors, Dir, RelRef, RelationError, RelationSet, RewriteStep};
use crate::search::{bidirectional, SearchBudget, Space};
use crate::word::{BraidWord, Letter, LetterKind, WordError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    fn from_value(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub(crate) fn real(self) -> LetterKind {
        match self {
            Sign::Pos => LetterKind::RealPos,
            Sign::Neg => LetterKind::RealNeg,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

/// The move families. Conjugations carry the index of the transported letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    ConjReal { i: usize, sign: Sign },
    ConjVirtual { i: usize },
    CommuteSingular { i: usize },
    StabRealRight(Sign),
    StabVirtualRight,
    /// Removes a trailing stabilization letter, whichever kind it is.
    DestabRight,
    UnderThreadRight,
    UnderThreadLeft,
    RsThreadRight(Sign),
    RsThreadLeft(Sign),
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::ConjReal { .. } => "ConjReal",
            MoveKind::ConjVirtual { .. } => "ConjVirtual",
            MoveKind::CommuteSingular { .. } => "CommuteSingular",
            MoveKind::StabRealRight(_) => "StabRealRight",
            MoveKind::StabVirtualRight => "StabVirtualRight",
            MoveKind::DestabRight => "DestabRight",
            MoveKind::UnderThreadRight => "UnderThreadRight",
            MoveKind::UnderThreadLeft => "UnderThreadLeft",
            MoveKind::RsThreadRight(_) => "RsThreadRight",
            MoveKind::RsThreadLeft(_) => "RsThreadLeft",
        }
    }

    pub fn params(self) -> Vec<i32> {
        match self {
            MoveKind::ConjReal { i, sign } => vec![i as i32, sign.value()],
            MoveKind::ConjVirtual { i } | MoveKind::CommuteSingular { i } => vec![i as i32],
            MoveKind::StabRealRight(s) | MoveKind::RsThreadRight(s) | MoveKind::RsThreadLeft(s) => {
                vec![s.value()]
            }
            MoveKind::StabVirtualRight
            | MoveKind::DestabRight
            | MoveKind::UnderThreadRight
            | MoveKind::UnderThreadLeft => vec![],
        }
    }

    pub fn from_parts(name: &str, params: &[i32]) -> Result<MoveKind, MarkovError> {
        let bad = || MarkovError::UnknownMove(format!("{name}{params:?}"));
        let index = |v: i32| usize::try_from(v).ok().filter(|&i| i >= 1).ok_or_else(bad);
        let sign = |v: i32| Sign::from_value(v).ok_or_else(bad);
        Ok(match (name, params) {
            ("ConjReal", &[i, s]) => MoveKind::ConjReal { i: index(i)?, sign: sign(s)? },
            ("ConjVirtual", &[i]) => MoveKind::ConjVirtual { i: index(i)? },
            ("CommuteSingular", &[i]) => MoveKind::CommuteSingular { i: index(i)? },
            ("StabRealRight", &[s]) => MoveKind::StabRealRight(sign(s)?),
            ("StabVirtualRight", &[]) => MoveKind::StabVirtualRight,
            ("DestabRight", &[]) => MoveKind::DestabRight,
            ("UnderThreadRight", &[]) => MoveKind::UnderThreadRight,
            ("UnderThreadLeft", &[]) => MoveKind::UnderThreadLeft,
            ("RsThreadRight", &[s]) => MoveKind::RsThreadRight(sign(s)?),
            ("RsThreadLeft", &[s]) => MoveKind::RsThreadLeft(sign(s)?),
            _ => return Err(bad()),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkovMove {
    pub kind: MoveKind,
    pub dir: Direction,
}

impl MarkovMove {
    pub fn forward(kind: MoveKind) -> MarkovMove {
        MarkovMove { kind, dir: Direction::Forward }
    }

    pub fn inverse(kind: MoveKind) -> MarkovMove {
        MarkovMove { kind, dir: Direction::Inverse }
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?} {:?}", self.kind.name(), self.kind.params(), self.dir)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarkovError {
    #[error("{0} does not apply: {1}")]
    NotApplicable(String, String),
    #[error("generator index {i} is out of range for n={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("DestabRight has no inverse; use a stabilization move")]
    NoInverse,
    #[error("unknown Markov move {0}")]
    UnknownMove(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error("trace step {step} is not a relation of the full presentation")]
    ForeignRelation { step: usize },
}

/// i(w): the same braid with an identity strand added on the left.
pub fn left_shift(w: &BraidWord) -> BraidWord {
    let letters = w.letters().iter().map(|l| l.shifted(1)).collect();
    BraidWord::new(w.n() + 1, letters).expect("shifted letters fit n+1 strands")
}

/// The same braid with an identity strand added on the right.
pub fn embed_right(w: &BraidWord) -> BraidWord {
    w.widened(1)
}

fn tail_matches(letters: &[Letter], tail: &[Letter]) -> bool {
    letters.len() >= tail.len() && letters[letters.len() - tail.len()..] == *tail
}

/// Splits `w` into a prefix and the given tail, requiring the prefix to avoid strand `m`
/// as its right end (letters of index m-1 or more) or, when `left` is set, strand 1.
fn split_tail(w: &BraidWord, tail: &[Letter], left: bool) -> Option<Vec<Letter>> {
    let letters = w.letters();
    if !tail_matches(letters, tail) {
        return None;
    }
    let prefix = &letters[..letters.len() - tail.len()];
    let fits = if left {
        prefix.iter().all(|l| l.index >= 2)
    } else {
        prefix.iter().all(|l| l.index + 1 < w.n())
    };
    fits.then(|| prefix.to_vec())
}

fn under_right(n: usize) -> [Letter; 3] {
    [Letter::sigma_inv(n), Letter::virt(n - 1), Letter::sigma(n)]
}

fn under_left() -> [Letter; 3] {
    [Letter::sigma(1), Letter::virt(2), Letter::sigma_inv(1)]
}

/// τ v σ^± and σ^± v τ on strands m, m+1 with the virtual letter on m-1, m.
fn rs_pair(m: usize, sign: Sign) -> ([Letter; 3], [Letter; 3]) {
    let s = Letter::new(sign.real(), m);
    let (t, v) = (Letter::tau(m), Letter::virt(m - 1));
    ([t, v, s], [s, v, t])
}

pub fn apply_markov(w: &BraidWord, mv: MarkovMove) -> Result<BraidWord, MarkovError> {
    let n = w.n();
    let letters = w.letters();
    let fail = |why: &str| MarkovError::NotApplicable(mv.to_string(), why.to_string());
    let fwd = mv.dir == Direction::Forward;
    let transport = |g: Letter| -> Result<BraidWord, MarkovError> {
        if g.index + 1 > n {
            return Err(MarkovError::IndexOutOfRange { i: g.index, n });
        }
        let mut out = letters.to_vec();
        if fwd {
            if letters.first() != Some(&g) {
                return Err(fail(&format!("word does not begin with {g}")));
            }
            out.rotate_left(1);
        } else {
            if letters.last() != Some(&g) {
                return Err(fail(&format!("word does not end with {g}")));
            }
            out.rotate_right(1);
        }
        Ok(BraidWord::new(n, out)?)
    };
    let grow = |base: BraidWord, tail: &[Letter]| -> Result<BraidWord, MarkovError> {
        let mut out = base.letters().to_vec();
        out.extend_from_slice(tail);
        Ok(BraidWord::new(base.n(), out)?)
    };
    // removes `tail` from a word on m strands, leaving m-1
    let shrink = |tail: &[Letter], left: bool| -> Result<BraidWord, MarkovError> {
        let prefix = split_tail(w, tail, left).ok_or_else(|| {
            fail(&format!("word does not end with {} on a free strand", BraidWord::new(n, tail.to_vec()).unwrap()))
        })?;
        let prefix = if left { prefix.iter().map(|l| Letter::new(l.kind, l.index - 1)).collect() } else { prefix };
        Ok(BraidWord::new(n - 1, prefix)?)
    };
    match mv.kind {
        MoveKind::ConjReal { i, sign } => transport(Letter::new(sign.real(), i)),
        MoveKind::ConjVirtual { i } => transport(Letter::virt(i)),
        MoveKind::CommuteSingular { i } => transport(Letter::tau(i)),
        MoveKind::StabRealRight(sign) if fwd => grow(embed_right(w), &[Letter::new(sign.real(), n)]),
        MoveKind::StabVirtualRight if fwd => grow(embed_right(w), &[Letter::virt(n)]),
        MoveKind::StabRealRight(sign) => {
            if n < 2 {
                return Err(fail("needs at least two strands"));
            }
            shrink(&[Letter::new(sign.real(), n - 1)], false)
        }
        MoveKind::StabVirtualRight => {
            if n < 2 {
                return Err(fail("needs at least two strands"));
            }
            shrink(&[Letter::virt(n - 1)], false)
        }
        MoveKind::DestabRight if fwd => {
            let Some(&last) = letters.last() else {
                return Err(fail("empty word"));
            };
            if n < 2 || last.index != n - 1 || last.kind == LetterKind::Singular {
                return Err(fail(&format!("word does not end with v{0} or a real crossing on strand {0}", n - 1)));
            }
            shrink(&[last], false)
        }
        MoveKind::DestabRight => Err(MarkovError::NoInverse),
        MoveKind::UnderThreadRight if fwd => {
            if n < 2 {
                return Err(fail("needs at least two strands"));
            }
            grow(embed_right(w), &under_right(n))
        }
        MoveKind::UnderThreadRight => {
            if n < 3 {
                return Err(fail("needs at least three strands"));
            }
            shrink(&under_right(n - 1), false)
        }
        MoveKind::UnderThreadLeft if fwd => {
            if n < 2 {
                return Err(fail("needs at least two strands"));
            }
            grow(left_shift(w), &under_left())
        }
        MoveKind::UnderThreadLeft => {
            if n < 3 {
                return Err(fail("needs at least three strands"));
            }
            shrink(&under_left(), true)
        }
        MoveKind::RsThreadRight(sign) | MoveKind::RsThreadLeft(sign) => {
            if n < 3 {
                return Err(fail("needs at least three strands"));
            }
            let left = matches!(mv.kind, MoveKind::RsThreadLeft(_));
            let (tvs, svt) = if left {
                let (s, v, t) = (Letter::new(sign.real(), 1), Letter::virt(2), Letter::tau(1));
                ([t, v, s], [s, v, t])
            } else {
                rs_pair(n - 1, sign)
            };
            let (from, to) = if fwd { (tvs, svt) } else { (svt, tvs) };
            let mut prefix = split_tail(w, &from, left)
                .ok_or_else(|| fail(&format!("word does not end with {}", BraidWord::new(n, from.to_vec()).unwrap())))?;
            prefix.extend_from_slice(&to);
            Ok(BraidWord::new(n, prefix)?)
        }
    }
}

/// Every Markov move that applies to `w` without exceeding the caps. Stabilizations and
/// their inverses appear once, as the stabilization and as DestabRight.
pub fn markov_moves(w: &BraidWord, max_len: usize, max_strands: usize) -> Vec<(BraidWord, MarkovMove)> {
    let n = w.n();
    let mut candidates = Vec::new();
    let conj = |l: Letter| match l.kind {
        LetterKind::RealPos => MoveKind::ConjReal { i: l.index, sign: Sign::Pos },
        LetterKind::RealNeg => MoveKind::ConjReal { i: l.index, sign: Sign::Neg },
        LetterKind::Virtual => MoveKind::ConjVirtual { i: l.index },
        LetterKind::Singular => MoveKind::CommuteSingular { i: l.index },
    };
    if let Some(&first) = w.letters().first() {
        candidates.push(MarkovMove::forward(conj(first)));
    }
    if let Some(&last) = w.letters().last() {
        candidates.push(MarkovMove::inverse(conj(last)));
    }
    let widen = n < max_strands;
    if widen && w.len() < max_len {
        candidates.push(MarkovMove::forward(MoveKind::StabRealRight(Sign::Pos)));
        candidates.push(MarkovMove::forward(MoveKind::StabRealRight(Sign::Neg)));
        candidates.push(MarkovMove::forward(MoveKind::StabVirtualRight));
    }
    candidates.push(MarkovMove::forward(MoveKind::DestabRight));
    if widen && w.len() + 3 <= max_len {
        candidates.push(MarkovMove::forward(MoveKind::UnderThreadRight));
        candidates.push(MarkovMove::forward(MoveKind::UnderThreadLeft));
    }
    candidates.push(MarkovMove::inverse(MoveKind::UnderThreadRight));
    candidates.push(MarkovMove::inverse(MoveKind::UnderThreadLeft));
    for sign in [Sign::Pos, Sign::Neg] {
        for kind in [MoveKind::RsThreadRight(sign), MoveKind::RsThreadLeft(sign)] {
            candidates.push(MarkovMove::forward(kind));
            candidates.push(MarkovMove::inverse(kind));
        }
    }
    candidates.into_iter().filter_map(|mv| apply_markov(w, mv).ok().map(|next| (next, mv))).collect()
}

/// One step of a Markov trace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MarkovStep {
    Relation(RewriteStep),
    Markov(MarkovMove),
}

impl MarkovStep {
    fn apply(&self, w: &BraidWord) -> Result<BraidWord, MarkovError> {
        match self {
            MarkovStep::Relation(step) => Ok(step.apply(w)?),
            MarkovStep::Markov(mv) => apply_markov(w, *mv),
        }
    }
}

/// Words reachable from `w` by one relation of the full presentation or one Markov move.
pub fn markov_neighbors(w: &BraidWord, max_len: usize, max_strands: usize) -> Vec<(BraidWord, MarkovStep)> {
    neighbors_in(w, &RelationSet::original(w.n()), max_len, max_strands)
}

fn neighbors_in(w: &BraidWord, rels: &RelationSet, max_len: usize, max_strands: usize) -> Vec<(BraidWord, MarkovStep)> {
    let mut out: Vec<(BraidWord, MarkovStep)> =
        neighbors(w, rels, max_len).into_iter().map(|(x, s)| (x, MarkovStep::Relation(s))).collect();
    out.extend(markov_moves(w, max_len, max_strands).into_iter().map(|(x, m)| (x, MarkovStep::Markov(m))));
    out
}

/// A derivation through relations and Markov moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovTrace {
    pub start: BraidWord,
    pub end: BraidWord,
    pub steps: Vec<MarkovStep>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum StepJson {
    Relation { rel: String, params: Vec<i32>, pos: usize, dir: Dir },
    Markov {
        #[serde(rename = "move")]
        name: String,
        params: Vec<i32>,
        dir: Direction,
    },
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    n: usize,
    start: String,
    end_n: usize,
    end: String,
    steps: Vec<StepJson>,
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("malformed trace JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Move(#[from] MarkovError),
}

impl MarkovTrace {
    /// Replays every step, returning the final word. Relation steps must come from the
    /// full presentation.
    pub fn replay(&self) -> Result<BraidWord, (usize, MarkovError)> {
        let mut w = self.start.clone();
        for (k, step) in self.steps.iter().enumerate() {
            if let MarkovStep::Relation(r) = step {
                if !matches!(r.rel, RelRef::Original(_)) {
                    return Err((k, MarkovError::ForeignRelation { step: k }));
                }
            }
            w = step.apply(&w).map_err(|e| (k, e))?;
        }
        Ok(w)
    }

    pub fn is_valid(&self) -> bool {
        self.replay().is_ok_and(|w| w == self.end)
    }

    /// Same envelope as rewrite scripts, with the end strand count and tagged steps.
    pub fn to_json(&self) -> String {
        let quote = |s: String| serde_json::to_string(&s).expect("string serializes");
        let steps: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                let json = match s {
                    MarkovStep::Relation(r) => StepJson::Relation {
                        rel: r.rel.family_name().to_string(),
                        params: r.rel.params().to_vec(),
                        pos: r.pos,
                        dir: r.dir,
                    },
                    MarkovStep::Markov(m) => {
                        StepJson::Markov { name: m.kind.name().to_string(), params: m.kind.params(), dir: m.dir }
                    }
                };
                format!("    {}", serde_json::to_string(&json).expect("step serializes"))
            })
            .collect();
        let body = if steps.is_empty() { String::new() } else { format!("\n{}\n  ", steps.join(",\n")) };
        format!(
            "{{\n  \"n\": {},\n  \"start\": {},\n  \"end_n\": {},\n  \"end\": {},\n  \"steps\": [{body}]\n}}",
            self.start.n(),
            quote(self.start.to_string()),
            self.end.n(),
            quote(self.end.to_string()),
        )
    }

    pub fn from_json(text: &str) -> Result<MarkovTrace, TraceError> {
        let json: TraceJson = serde_json::from_str(text)?;
        let start = BraidWord::parse(&json.start, json.n)?;
        let end = BraidWord::parse(&json.end, json.end_n)?;
        let mut steps = Vec::with_capacity(json.steps.len());
        for s in json.steps {
            steps.push(match s {
                StepJson::Relation { rel, params, pos, dir } => {
                    let rel = RelRef::from_parts(&rel, params.clone()).unwrap_or(RelRef::Unknown(rel, params));
                    MarkovStep::Relation(RewriteStep { rel, pos, dir })
                }
                StepJson::Markov { name, params, dir } => {
                    MarkovStep::Markov(MarkovMove { kind: MoveKind::from_parts(&name, &params)?, dir })
                }
            });
        }
        Ok(MarkovTrace { start, end, steps })
    }
}

/// A reason two braids can never have isotopic closures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    TauCount { a: usize, b: usize },
    ComponentCount { a: usize, b: usize },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::TauCount { a, b } => write!(f, "singular crossing counts differ ({a} vs {b})"),
            Obstruction::ComponentCount { a, b } => write!(f, "closure component counts differ ({a} vs {b})"),
        }
    }
}

/// Invariants every relation and every Markov move preserves.
pub fn obstruction(a: &BraidWord, b: &BraidWord) -> Option<Obstruction> {
    let (ta, tb) = (a.tau_count(), b.tau_count());
    if ta != tb {
        return Some(Obstruction::TauCount { a: ta, b: tb });
    }
    let (ca, cb) = (a.closure_component_count(), b.closure_component_count());
    (ca != cb).then_some(Obstruction::ComponentCount { a: ca, b: cb })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarkovResult {
    Equivalent(MarkovTrace),
    /// `obstruction` is set when a conserved quantity already rules equivalence out.
    NotFoundWithinBudget { states_explored: usize, obstruction: Option<Obstruction> },
}

impl MarkovResult {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, MarkovResult::Equivalent(_))
    }
}

/// Default strand cap: two more than the larger input.
pub fn default_max_strands(a: &BraidWord, b: &BraidWord) -> usize {
    a.n().max(b.n()) + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct MState {
    len: usize,
    n: usize,
    codes: Vec<u8>,
}

impl MState {
    fn of(w: &BraidWord) -> MState {
        MState { len: w.len(), n: w.n(), codes: w.letters().iter().map(|l| l.code()).collect() }
    }

    fn word(&self) -> BraidWord {
        BraidWord::new(self.n, self.codes.iter().map(|&c| Letter::from_code(c)).collect()).unwrap()
    }
}

impl Ord for MState {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len, self.n, &self.codes).cmp(&(other.len, other.n, &other.codes))
    }
}

impl PartialOrd for MState {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

struct MarkovSpace {
    max_len: usize,
    max_strands: usize,
    /// the full presentation on k strands at index k-1
    rels: Vec<RelationSet>,
}

impl Space for MarkovSpace {
    type State = MState;
    type Edge = MarkovStep;

    fn successors(&self, s: &MState) -> Vec<(MState, MarkovStep)> {
        neighbors_in(&s.word(), &self.rels[s.n - 1], self.max_len, self.max_strands)
            .into_iter()
            .map(|(w, step)| (MState::of(&w), step))
            .collect()
    }

    fn invert(&self, from: &MState, edge: &MarkovStep, _to: &MState) -> MarkovStep {
        match edge {
            MarkovStep::Relation(r) => MarkovStep::Relation(r.inverse()),
            MarkovStep::Markov(mv) => MarkovStep::Markov(match mv.kind {
                MoveKind::StabRealRight(_) | MoveKind::StabVirtualRight if mv.dir == Direction::Forward => {
                    MarkovMove::forward(MoveKind::DestabRight)
                }
                MoveKind::DestabRight => {
                    let last = *from.word().letters().last().expect("destabilized word was not empty");
                    MarkovMove::forward(match last.kind {
                        LetterKind::Virtual => MoveKind::StabVirtualRight,
                        LetterKind::RealPos => MoveKind::StabRealRight(Sign::Pos),
                        _ => MoveKind::StabRealRight(Sign::Neg),
                    })
                }
                kind => MarkovMove { kind, dir: mv.dir.flip() },
            }),
        }
    }
}

/// Bounded search for a chain of relations and Markov moves from `a` to `b`.
pub fn markov_equivalent_bounded(
    a: &BraidWord,
    b: &BraidWord,
    budget: SearchBudget,
    max_strands: usize,
) -> MarkovResult {
    markov_equivalent_with(a, b, budget, max_strands, Exec::default())
}

pub fn markov_equivalent_with(
    a: &BraidWord,
    b: &BraidWord,
    budget: SearchBudget,
    max_strands: usize,
    exec: Exec,
) -> MarkovResult {
    if let Some(o) = obstruction(a, b) {
        return MarkovResult::NotFoundWithinBudget { states_explored: 0, obstruction: Some(o) };
    }
    let max_strands = max_strands.max(a.n()).max(b.n());
    let rels = (1..=max_strands).map(RelationSet::original).collect();
    let space = MarkovSpace { max_len: budget.max_word_length, max_strands, rels };
    let out = bidirectional(&space, MState::of(a), MState::of(b), budget.max_states, budget.max_depth, exec);
    match out.path {
        Some(path) => MarkovResult::Equivalent(MarkovTrace { start: a.clone(), end: b.clone(), steps: path.edges }),
        None => MarkovResult::NotFoundWithinBudget { states_explored: out.explored, obstruction: None },
    }
}

impl FromStr for Sign {
    type Err = MarkovError;

    fn from_str(s: &str) -> Result<Sign, MarkovError> {
        match s {
            "+" | "+1" | "1" => Ok(Sign::Pos),
            "-" | "-1" => Ok(Sign::Neg),
            _ => Err(MarkovError::UnknownMove(format!("sign {s}"))),
        }
    }
}
