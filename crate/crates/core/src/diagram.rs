//! Morse-encoded oriented virtual singular link diagrams.
//!
//! A diagram is read top to bottom, one event per row. Live strands are numbered 1, 2, ...
//! from the left at every height. A cup starts a new arc whose two ends become strands
//! `pos` and `pos + 1`; a cap joins strands `pos` and `pos + 1`; a crossing exchanges them.
//!
//! Cup orientation follows the drawn circle: a counterclockwise cup sends its left end
//! downward and its right end upward, a clockwise cup the reverse.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{BraidWord, LetterKind};

mod braiding;

pub use braiding::{braid, chart, ChartEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    #[serde(rename = "cup")]
    Cup,
    #[serde(rename = "cap")]
    Cap,
    /// Drawn with the strand from upper left to lower right passing over.
    #[serde(rename = "x+")]
    CrossRealPos,
    /// Drawn with the strand from upper right to lower left passing over.
    #[serde(rename = "x-")]
    CrossRealNeg,
    #[serde(rename = "xs")]
    CrossSingular,
    #[serde(rename = "xv")]
    CrossVirtual,
}

impl EventKind {
    pub fn is_crossing(self) -> bool {
        !matches!(self, EventKind::Cup | EventKind::Cap)
    }

    /// The crossing drawn for a braid letter between two downward strands.
    pub fn for_letter(kind: LetterKind) -> EventKind {
        match kind {
            LetterKind::RealPos => EventKind::CrossRealPos,
            LetterKind::RealNeg => EventKind::CrossRealNeg,
            LetterKind::Singular => EventKind::CrossSingular,
            LetterKind::Virtual => EventKind::CrossVirtual,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CupOrientation {
    #[serde(rename = "ccw")]
    Ccw,
    #[serde(rename = "cw")]
    Cw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MorseEvent {
    pub kind: EventKind,
    pub pos: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orient: Option<CupOrientation>,
}

impl MorseEvent {
    pub fn cup(pos: usize, orient: CupOrientation) -> MorseEvent {
        MorseEvent { kind: EventKind::Cup, pos, orient: Some(orient) }
    }

    pub fn cap(pos: usize) -> MorseEvent {
        MorseEvent { kind: EventKind::Cap, pos, orient: None }
    }

    pub fn cross(kind: EventKind, pos: usize) -> MorseEvent {
        debug_assert!(kind.is_crossing());
        MorseEvent { kind, pos, orient: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseDiagram {
    pub events: Vec<MorseEvent>,
}

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("malformed diagram JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid diagram at row {row}: {reason}")]
    Invalid { row: usize, reason: String },
    #[error("braiding needs {0} strands, more than a word can index")]
    TooManyStrands(usize),
}

/// Result of [`validate`]. `row` equal to the event count refers to the end of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid { row: usize, reason: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiagramInvariants {
    pub component_count: usize,
    /// Real crossings of positive sign.
    pub real_pos: usize,
    /// Real crossings of negative sign.
    pub real_neg: usize,
    pub singular: usize,
    pub virtual_count: usize,
}

impl fmt::Display for DiagramInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "components={} real_pos={} real_neg={} singular={} virtual={}",
            self.component_count, self.real_pos, self.real_neg, self.singular, self.virtual_count
        )
    }
}

impl MorseDiagram {
    pub fn new(events: Vec<MorseEvent>) -> MorseDiagram {
        MorseDiagram { events }
    }

    pub fn from_json(text: &str) -> Result<MorseDiagram, DiagramError> {
        Ok(serde_json::from_str(text)?)
    }

    /// One event per line.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .events
            .iter()
            .map(|e| format!("    {}", serde_json::to_string(e).expect("event serializes")))
            .collect();
        if rows.is_empty() {
            return "{\n  \"events\": []\n}".to_string();
        }
        format!("{{\n  \"events\": [\n{}\n  ]\n}}", rows.join(",\n"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flow {
    Down,
    Up,
}

/// How an edge continues through the row at one of its ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Link {
    /// Continues to another edge, passing a crossing at `row` if one is given.
    Through { to: usize, crossing: Option<usize> },
    /// Turns back through a cup or cap into its partner edge.
    Turn(usize),
}

/// A strand piece between two consecutive rows.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Edge {
    pub flow: Flow,
    pub above: Link,
    pub below: Link,
}

/// Per crossing row, the edges entering from above-left and above-right.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CrossingRow {
    pub row: usize,
    pub kind: EventKind,
    /// Edge above the crossing on the upper-left to lower-right strand.
    pub nw: usize,
    /// Edge above the crossing on the upper-right to lower-left strand.
    pub ne: usize,
}

/// The traced diagram: every edge with its orientation and connections.
pub(crate) struct Traced {
    pub edges: Vec<Edge>,
    pub crossings: Vec<CrossingRow>,
    /// Edges created by cups, in row order; the left end of each cup.
    pub cup_edges: Vec<usize>,
}

fn invalid(row: usize, reason: impl Into<String>) -> Validity {
    Validity::Invalid { row, reason: reason.into() }
}

const PLACEHOLDER: Link = Link::Turn(usize::MAX);

/// Starts the edge below `from`, passing the crossing at `row` if one is given.
fn continue_below(edges: &mut Vec<Edge>, from: usize, crossing: Option<usize>) -> usize {
    let n = edges.len();
    edges.push(Edge { flow: edges[from].flow, above: Link::Through { to: from, crossing }, below: PLACEHOLDER });
    edges[from].below = Link::Through { to: n, crossing };
    n
}

pub(crate) fn trace(d: &MorseDiagram) -> Result<Traced, Validity> {
    if d.events.is_empty() {
        return Err(invalid(0, "empty diagram"));
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut crossings = Vec::new();
    let mut cup_edges = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    for (row, e) in d.events.iter().enumerate() {
        if e.pos < 1 {
            return Err(invalid(row, "position must be at least 1"));
        }
        if e.kind != EventKind::Cup && e.orient.is_some() {
            return Err(invalid(row, "orientation given for a non-cup event"));
        }
        let p = e.pos - 1;
        let mut next: Vec<usize> = Vec::with_capacity(live.len() + 2);
        match e.kind {
            EventKind::Cup => {
                let Some(orient) = e.orient else {
                    return Err(invalid(row, "cup without orientation"));
                };
                if p > live.len() {
                    return Err(invalid(row, format!("cup at {} with only {} live strands", e.pos, live.len())));
                }
                let (lf, rf) = match orient {
                    CupOrientation::Ccw => (Flow::Down, Flow::Up),
                    CupOrientation::Cw => (Flow::Up, Flow::Down),
                };
                let (l, r) = (edges.len(), edges.len() + 1);
                edges.push(Edge { flow: lf, above: Link::Turn(r), below: PLACEHOLDER });
                edges.push(Edge { flow: rf, above: Link::Turn(l), below: PLACEHOLDER });
                cup_edges.push(l);
                next.extend_from_slice(&live[..p]);
                next.extend([l, r]);
                for &old in &live[p..] {
                    next.push(continue_below(&mut edges, old, None));
                }
            }
            EventKind::Cap => {
                if live.is_empty() {
                    return Err(invalid(row, "cap with no live strands"));
                }
                if p + 1 >= live.len() {
                    return Err(invalid(row, format!("cap at {} with only {} live strands", e.pos, live.len())));
                }
                let (l, r) = (live[p], live[p + 1]);
                if edges[l].flow == edges[r].flow {
                    return Err(invalid(row, "cap joins two strands with the same orientation"));
                }
                edges[l].below = Link::Turn(r);
                edges[r].below = Link::Turn(l);
                for (k, &old) in live.iter().enumerate() {
                    if k == p || k == p + 1 {
                        continue;
                    }
                    next.push(continue_below(&mut edges, old, None));
                }
            }
            kind => {
                if p + 1 >= live.len() {
                    return Err(invalid(row, format!("crossing at {} with only {} live strands", e.pos, live.len())));
                }
                crossings.push(CrossingRow { row, kind, nw: live[p], ne: live[p + 1] });
                for (k, &old) in live.iter().enumerate() {
                    let (from, at) = match k {
                        _ if k == p => (live[p + 1], Some(row)),
                        _ if k == p + 1 => (live[p], Some(row)),
                        _ => (old, None),
                    };
                    next.push(continue_below(&mut edges, from, at));
                }
            }
        }
        live = next;
    }
    if !live.is_empty() {
        return Err(invalid(d.events.len(), "diagram not closed"));
    }
    Ok(Traced { edges, crossings, cup_edges })
}

/// Checks the strand bookkeeping, closedness and orientation consistency.
pub fn validate(d: &MorseDiagram) -> Validity {
    match trace(d) {
        Ok(_) => Validity::Valid,
        Err(v) => v,
    }
}

impl Traced {
    /// The edge after `e` in the direction of travel, and the crossing row passed, if any.
    pub fn step(&self, e: usize) -> (usize, Option<usize>) {
        let edge = &self.edges[e];
        let link = match edge.flow {
            Flow::Down => edge.below,
            Flow::Up => edge.above,
        };
        match link {
            Link::Through { to, crossing } => (to, crossing),
            Link::Turn(to) => (to, None),
        }
    }

    /// Components as cyclic sequences of (edge, crossing row passed on leaving it).
    /// Each component starts at the left end of its first cup.
    pub fn components(&self) -> Vec<Vec<(usize, Option<usize>)>> {
        let mut seen = vec![false; self.edges.len()];
        let mut out = Vec::new();
        for &start in &self.cup_edges {
            if seen[start] {
                continue;
            }
            // start on the downward end of the cup
            let start = match (self.edges[start].flow, self.edges[start].above) {
                (Flow::Up, Link::Turn(partner)) => partner,
                _ => start,
            };
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                seen[e] = true;
                let (next, crossing) = self.step(e);
                comp.push((e, crossing));
                e = next;
                if e == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Sign of a real crossing: the drawn sign, flipped when the strands run opposite ways.
    pub fn sign(&self, c: &CrossingRow) -> i32 {
        let drawn = if c.kind == EventKind::CrossRealPos { 1 } else { -1 };
        if self.edges[c.nw].flow == self.edges[c.ne].flow {
            drawn
        } else {
            -drawn
        }
    }
}

/// Crossing counts and the number of components. Real crossings are counted by sign, so
/// the counts do not depend on how a crossing is turned in the plane.
pub fn invariants(d: &MorseDiagram) -> Result<DiagramInvariants, DiagramError> {
    let t = trace(d).map_err(|v| match v {
        Validity::Invalid { row, reason } => DiagramError::Invalid { row, reason },
        Validity::Valid => unreachable!(),
    })?;
    let mut inv = DiagramInvariants { component_count: t.components().len(), ..Default::default() };
    for c in &t.crossings {
        match c.kind {
            EventKind::CrossRealPos | EventKind::CrossRealNeg => {
                if t.sign(c) > 0 {
                    inv.real_pos += 1;
                } else {
                    inv.real_neg += 1;
                }
            }
            EventKind::CrossSingular => inv.singular += 1,
            EventKind::CrossVirtual => inv.virtual_count += 1,
            EventKind::Cup | EventKind::Cap => unreachable!(),
        }
    }
    Ok(inv)
}

/// Standard closure: n nested counterclockwise cups, the braid on strands 1..n, and n
/// nested caps. The return arcs run upward on the right without crossings.
pub fn close(w: &BraidWord) -> MorseDiagram {
    let n = w.n();
    let mut events: Vec<MorseEvent> = (1..=n).map(|k| MorseEvent::cup(k, CupOrientation::Ccw)).collect();
    events.extend(w.letters().iter().map(|l| MorseEvent::cross(EventKind::for_letter(l.kind), l.index)));
    events.extend((1..=n).rev().map(MorseEvent::cap));
    MorseDiagram { events }
}
