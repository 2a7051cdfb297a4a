//! Turning a Morse diagram into a braid whose closure carries the same crossings.
//!
//! Every crossing is redrawn with both strands running downward. Whenever a component
//! climbs between two consecutive crossings the climbing piece is cut and its ends are
//! extended to the top and bottom of the picture as a new pair of braid strands, placed
//! to the right and meeting the rest only in virtual crossings. What remains is a set of
//! descending segments, one braid strand each, visiting their crossings top to bottom.

use super::{DiagramError, EventKind, Flow, MorseDiagram, Traced, Validity};
use crate::word::{BraidWord, Letter, LetterKind, MAX_INDEX};

/// How a diagram crossing is redrawn between two downward braid strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartEntry {
    /// Whether the strand entering from the upper left of the diagram crossing becomes
    /// the left strand of the braid crossing.
    pub nw_goes_left: bool,
    pub letter: LetterKind,
}

/// The braiding chart. A crossing whose strands both point down is left as it is; both
/// pointing up is a half turn of the picture, which keeps the left strand; exactly one up
/// strand exchanges the roles, so over and under trade places relative to the drawn sign.
pub fn chart(kind: EventKind, nw: Flow, ne: Flow) -> ChartEntry {
    let nw_goes_left = nw == ne;
    let letter = match (kind, nw_goes_left) {
        (EventKind::CrossRealPos, true) | (EventKind::CrossRealNeg, false) => LetterKind::RealPos,
        (EventKind::CrossRealPos, false) | (EventKind::CrossRealNeg, true) => LetterKind::RealNeg,
        (EventKind::CrossSingular, _) => LetterKind::Singular,
        (EventKind::CrossVirtual, _) => LetterKind::Virtual,
        (EventKind::Cup | EventKind::Cap, _) => unreachable!("not a crossing"),
    };
    ChartEntry { nw_goes_left, letter }
}

/// A descending piece of a component: the crossings it meets, in row order, each with
/// the component's edge just above the crossing.
struct Segment {
    passes: Vec<(usize, usize)>,
    next: usize,
}

fn segments(t: &Traced) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for comp in t.components() {
        let passes: Vec<(usize, usize)> = comp
            .iter()
            .filter_map(|&(edge, crossing)| {
                let upper = match t.edges[edge].flow {
                    Flow::Down => edge,
                    Flow::Up => t.step(edge).0,
                };
                crossing.map(|row| (row, upper))
            })
            .collect();
        let first = out.len();
        if passes.is_empty() {
            out.push(Segment { passes, next: first });
            continue;
        }
        // a cut wherever the component has to climb to reach its next crossing
        let k = passes.len();
        let cuts: Vec<usize> = (0..k).filter(|&a| passes[(a + 1) % k].0 <= passes[a].0).collect();
        let start = (cuts[cuts.len() - 1] + 1) % k;
        let mut current = Vec::new();
        for step in 0..k {
            let a = (start + step) % k;
            current.push(passes[a]);
            if cuts.contains(&a) {
                out.push(Segment { passes: std::mem::take(&mut current), next: 0 });
            }
        }
        let last = out.len() - 1;
        for (s, seg) in out.iter_mut().enumerate().take(last).skip(first) {
            seg.next = s + 1;
        }
        out[last].next = first;
    }
    out
}

struct Columns {
    at: Vec<usize>,
    letters: Vec<Letter>,
}

impl Columns {
    fn position(&self, seg: usize) -> usize {
        self.at.iter().position(|&s| s == seg).expect("segment is a column")
    }

    /// Emits a letter on columns `p` and `p + 1` and exchanges them.
    fn cross(&mut self, kind: LetterKind, p: usize) {
        self.letters.push(Letter::new(kind, p + 1));
        self.at.swap(p, p + 1);
    }
}

/// Braids a valid diagram. The closure of the result has the same components and the
/// same real and singular crossings with the same signs; only virtual crossings are added.
pub fn braid(d: &MorseDiagram) -> Result<BraidWord, DiagramError> {
    let t = super::trace(d).map_err(|v| match v {
        Validity::Invalid { row, reason } => DiagramError::Invalid { row, reason },
        Validity::Valid => unreachable!(),
    })?;
    let segs = segments(&t);
    let m = segs.len();
    if m > MAX_INDEX + 1 {
        return Err(DiagramError::TooManyStrands(m));
    }
    // which segment meets each crossing, keyed by the edge above it
    let mut owner = std::collections::HashMap::new();
    for (s, seg) in segs.iter().enumerate() {
        for &(row, edge) in &seg.passes {
            owner.insert((row, edge), s);
        }
    }
    let top: Vec<usize> = (0..m).collect();
    let mut cols = Columns { at: top.clone(), letters: Vec::new() };
    for c in &t.crossings {
        let entry = chart(c.kind, t.edges[c.nw].flow, t.edges[c.ne].flow);
        let (nw, ne) = (owner[&(c.row, c.nw)], owner[&(c.row, c.ne)]);
        let (left, right) = if entry.nw_goes_left { (nw, ne) } else { (ne, nw) };
        // slide the left strand next to the right one
        let mut p = cols.position(left);
        let target = cols.position(right);
        while p + 1 < target {
            cols.cross(LetterKind::Virtual, p);
            p += 1;
        }
        while p > target {
            cols.cross(LetterKind::Virtual, p - 1);
            p -= 1;
        }
        cols.cross(entry.letter, p);
    }
    // bottom column p must feed, through the closure, the segment at top column p
    let mut pred = vec![0; m];
    for (s, seg) in segs.iter().enumerate() {
        pred[seg.next] = s;
    }
    for (p, &s) in top.iter().enumerate() {
        let mut q = cols.position(pred[s]);
        while q > p {
            cols.cross(LetterKind::Virtual, q - 1);
            q -= 1;
        }
    }
    Ok(BraidWord::new(m, cols.letters).expect("columns stay in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{close, invariants, CupOrientation, MorseEvent};

    const KINDS: [EventKind; 4] =
        [EventKind::CrossRealPos, EventKind::CrossRealNeg, EventKind::CrossSingular, EventKind::CrossVirtual];

    #[test]
    fn chart_table() {
        use Flow::{Down, Up};
        // (kind, nw, ne) -> (nw goes left, letter)
        let cases = [
            (EventKind::CrossRealPos, Down, Down, true, LetterKind::RealPos),
            (EventKind::CrossRealPos, Up, Up, true, LetterKind::RealPos),
            (EventKind::CrossRealPos, Down, Up, false, LetterKind::RealNeg),
            (EventKind::CrossRealPos, Up, Down, false, LetterKind::RealNeg),
            (EventKind::CrossRealNeg, Down, Down, true, LetterKind::RealNeg),
            (EventKind::CrossRealNeg, Up, Up, true, LetterKind::RealNeg),
            (EventKind::CrossRealNeg, Down, Up, false, LetterKind::RealPos),
            (EventKind::CrossRealNeg, Up, Down, false, LetterKind::RealPos),
            (EventKind::CrossSingular, Up, Up, true, LetterKind::Singular),
            (EventKind::CrossSingular, Down, Up, false, LetterKind::Singular),
            (EventKind::CrossVirtual, Up, Down, false, LetterKind::Virtual),
        ];
        for (kind, nw, ne, left, letter) in cases {
            assert_eq!(chart(kind, nw, ne), ChartEntry { nw_goes_left: left, letter }, "{kind:?} {nw:?} {ne:?}");
        }
        for kind in KINDS {
            assert!(chart(kind, Down, Down).nw_goes_left);
        }
    }

    #[test]
    fn unknot_braids_to_the_one_strand_identity() {
        let d = MorseDiagram::new(vec![MorseEvent::cup(1, CupOrientation::Ccw), MorseEvent::cap(1)]);
        assert_eq!(braid(&d).unwrap(), BraidWord::identity(1));
        let d = MorseDiagram::new(vec![MorseEvent::cup(1, CupOrientation::Cw), MorseEvent::cap(1)]);
        assert_eq!(braid(&d).unwrap(), BraidWord::identity(1));
    }

    #[test]
    fn closures_keep_their_crossings() {
        for (text, n) in [("s1", 2), ("t1 s2 v1", 3), ("S1 S1 t1", 2), ("v1", 2), ("1", 3)] {
            let d = close(&BraidWord::parse(text, n).unwrap());
            let b = braid(&d).unwrap();
            let (a, c) = (invariants(&d).unwrap(), invariants(&close(&b)).unwrap());
            assert_eq!(
                (a.component_count, a.real_pos, a.real_neg, a.singular),
                (c.component_count, c.real_pos, c.real_neg, c.singular),
                "{text}"
            );
            assert!(c.virtual_count >= a.virtual_count, "{text}");
        }
    }

    #[test]
    fn upward_crossings_are_braided() {
        // a clockwise circle crossing a counterclockwise one: the left circle runs up
        // through both crossings
        for kind in KINDS {
            for orient in [CupOrientation::Ccw, CupOrientation::Cw] {
                let d = MorseDiagram::new(vec![
                    MorseEvent::cup(1, orient),
                    MorseEvent::cup(3, CupOrientation::Ccw),
                    MorseEvent::cross(kind, 2),
                    MorseEvent::cross(kind, 2),
                    MorseEvent::cap(3),
                    MorseEvent::cap(1),
                ]);
                let b = braid(&d).unwrap();
                let (a, c) = (invariants(&d).unwrap(), invariants(&close(&b)).unwrap());
                assert_eq!(
                    (a.component_count, a.real_pos, a.real_neg, a.singular),
                    (c.component_count, c.real_pos, c.real_neg, c.singular),
                    "{kind:?} {orient:?}"
                );
                assert!(c.virtual_count >= a.virtual_count);
            }
        }
    }
}
