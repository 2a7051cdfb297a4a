//! Search modulo the virtual permutation group.
//!
//! A word is stored as `P0 x1 P1 ... xm Pm`: the non-virtual letters `xk` and, between
//! them, the permutation `Pk` of each run of virtual letters. Two words with the same
//! class are connected by virtual relations alone, so the search only moves between
//! classes. A found path is expanded back into elementary rewrites afterwards.

use std::collections::HashMap;

use crate::coxeter::{virtual_path, Arr, QMAX};
use crate::relations::{Dir, RelationSet};
use crate::script::ScriptBuilder;
use crate::word::Letter;

use super::engine::Space;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct QState {
    /// Length of the shortest word in the class; leads the ordering.
    len: u16,
    letters: Vec<u8>,
    segs: Vec<Arr>,
}

fn virtual_index(code: u8) -> Option<u8> {
    let l = Letter::from_code(code);
    l.is_virtual().then_some(l.index as u8)
}

/// Splits letter codes into non-virtual letters and the virtual runs around them.
fn split(codes: &[u8]) -> (Vec<u8>, Vec<Vec<u8>>) {
    let mut letters = Vec::new();
    let mut runs = vec![Vec::new()];
    for &c in codes {
        match virtual_index(c) {
            Some(i) => runs.last_mut().unwrap().push(i),
            None => {
                letters.push(c);
                runs.push(Vec::new());
            }
        }
    }
    (letters, runs)
}

impl QState {
    fn new(letters: Vec<u8>, segs: Vec<Arr>) -> QState {
        let len = letters.len() + segs.iter().map(Arr::inversions).sum::<usize>();
        QState { len: len as u16, letters, segs }
    }

    pub fn from_codes(codes: &[u8]) -> QState {
        let (letters, runs) = split(codes);
        QState::new(letters, runs.iter().map(|r| Arr::from_word(r)).collect())
    }

    /// The representative word: canonical reduced words for every run.
    pub fn canonical_codes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (k, seg) in self.segs.iter().enumerate() {
            out.extend(seg.canonical_word().iter().map(|&i| Letter::virt(i as usize).code()));
            if let Some(&c) = self.letters.get(k) {
                out.push(c);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }
}

/// One side of a rule in class form, keeping the literal virtual runs.
#[derive(Clone, Debug)]
struct QSide {
    letters: Vec<u8>,
    segs: Vec<Arr>,
    runs: Vec<Vec<u8>>,
}

impl QSide {
    fn new(codes: &[u8]) -> QSide {
        let (letters, runs) = split(codes);
        QSide { letters, segs: runs.iter().map(|r| Arr::from_word(r)).collect(), runs }
    }
}

#[derive(Clone, Debug)]
struct QRule {
    rule: usize,
    dir: Dir,
    src: QSide,
    tgt: QSide,
    /// inversions of the target's inner virtual runs, which a rewrite copies unchanged
    tgt_mid_inversions: usize,
    reverse: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct QEdge {
    rule: u32,
    /// letter offset of the match; for insertions, the run index
    at: u32,
    /// permutation absorbed on the left of the match
    left: Arr,
}

pub(crate) struct Quotient<'a> {
    rels: &'a RelationSet,
    rules: Vec<QRule>,
    by_first: HashMap<u8, Vec<usize>>,
    inserts: Vec<usize>,
    all_perms: Vec<Arr>,
    pub cap: usize,
    /// elementary virtual rewrite (source codes, target codes) -> (rule, dir)
    virtual_steps: HashMap<(Vec<u8>, Vec<u8>), (usize, Dir)>,
}

fn all_perms(n: usize) -> Vec<Arr> {
    let mut out = vec![Arr::identity()];
    // close under right multiplication by generators
    let mut seen: std::collections::HashSet<Arr> = out.iter().copied().collect();
    let mut k = 0;
    while k < out.len() {
        let cur = out[k];
        for i in 1..n as u8 {
            let mut next = cur;
            next.swap(i);
            if seen.insert(next) {
                out.push(next);
            }
        }
        k += 1;
    }
    out.sort();
    out
}

impl<'a> Quotient<'a> {
    /// Requires a relation set containing the full virtual Coxeter presentation.
    pub fn new(rels: &'a RelationSet, cap: usize) -> Quotient<'a> {
        assert!(rels.n() <= QMAX, "quotient search supports n <= {QMAX}");
        let mut rules = Vec::new();
        let mut virtual_steps = HashMap::new();
        let mut slot = HashMap::new();
        for (k, rule) in rels.rules().iter().enumerate() {
            for dir in [Dir::L2R, Dir::R2L] {
                let (src, tgt) = rule.side(dir);
                let (s, t) = (QSide::new(src), QSide::new(tgt));
                if s.letters.is_empty() && t.letters.is_empty() {
                    debug_assert_eq!(s.segs, t.segs, "virtual relation that does not hold in S_n");
                    virtual_steps.entry((src.to_vec(), tgt.to_vec())).or_insert((k, dir));
                    continue;
                }
                slot.insert((k, dir), rules.len());
                let l = t.letters.len();
                let tgt_mid_inversions =
                    if l == 0 { 0 } else { t.segs[1..l].iter().map(Arr::inversions).sum() };
                rules.push(QRule { rule: k, dir, src: s, tgt: t, tgt_mid_inversions, reverse: 0 });
            }
        }
        for q in 0..rules.len() {
            rules[q].reverse = slot[&(rules[q].rule, rules[q].dir.flip())];
        }
        let mut by_first: HashMap<u8, Vec<usize>> = HashMap::new();
        let mut inserts = Vec::new();
        for (q, r) in rules.iter().enumerate() {
            match r.src.letters.first() {
                Some(&c) => by_first.entry(c).or_default().push(q),
                None => inserts.push(q),
            }
        }
        Quotient {
            rels,
            rules,
            by_first,
            inserts,
            all_perms: all_perms(rels.n()),
            cap,
            virtual_steps,
        }
    }

    /// Replaces the window described by `r` (source absorbed into `left` and `right`),
    /// or `None` when the result would exceed the length cap. The length is worked out
    /// before anything is allocated.
    #[allow(clippy::too_many_arguments)]
    fn rewrite(
        &self,
        s: &QState,
        r: &QRule,
        letter_at: usize,
        first_seg: usize,
        last_seg: usize,
        left: Arr,
        right: Arr,
        seg_inv: &[usize],
    ) -> Option<QState> {
        let l = r.tgt.letters.len();
        let (head, tail) = if l == 0 {
            (left.then(&r.tgt.segs[0]).then(&right), Arr::identity())
        } else {
            (left.then(&r.tgt.segs[0]), r.tgt.segs[l].then(&right))
        };
        let removed: usize = seg_inv[first_seg..=last_seg].iter().sum::<usize>() + r.src.letters.len();
        let added = l + head.inversions() + tail.inversions() + r.tgt_mid_inversions;
        let len = s.len() + added - removed;
        if len > self.cap {
            return None;
        }
        let mut letters = Vec::with_capacity(s.letters.len() + l - r.src.letters.len());
        letters.extend_from_slice(&s.letters[..letter_at]);
        letters.extend_from_slice(&r.tgt.letters);
        letters.extend_from_slice(&s.letters[letter_at + r.src.letters.len()..]);
        let mut segs = Vec::with_capacity(letters.len() + 1);
        segs.extend_from_slice(&s.segs[..first_seg]);
        segs.push(head);
        if l > 0 {
            segs.extend_from_slice(&r.tgt.segs[1..l]);
            segs.push(tail);
        }
        segs.extend_from_slice(&s.segs[last_seg + 1..]);
        Some(QState { len: len as u16, letters, segs })
    }
}

impl Space for Quotient<'_> {
    type State = QState;
    type Edge = QEdge;

    fn successors(&self, s: &QState) -> Vec<(QState, QEdge)> {
        let mut out = Vec::new();
        let m = s.letters.len();
        let seg_inv: Vec<usize> = s.segs.iter().map(Arr::inversions).collect();
        for t in 0..m {
            let Some(cands) = self.by_first.get(&s.letters[t]) else { continue };
            for &q in cands {
                let r = &self.rules[q];
                let k = r.src.letters.len();
                if t + k > m || s.letters[t..t + k] != r.src.letters[..] {
                    continue;
                }
                if s.segs[t + 1..t + k] != r.src.segs[1..k] {
                    continue;
                }
                let left = s.segs[t].then(&r.src.segs[0].inverse());
                let right = r.src.segs[k].inverse().then(&s.segs[t + k]);
                if let Some(next) = self.rewrite(s, r, t, t, t + k, left, right, &seg_inv) {
                    out.push((next, QEdge { rule: q as u32, at: t as u32, left }));
                }
            }
        }
        for &q in &self.inserts {
            let r = &self.rules[q];
            let q0 = r.src.segs[0];
            for t in 0..=m {
                for &left in &self.all_perms {
                    let right = left.then(&q0).inverse().then(&s.segs[t]);
                    if let Some(next) = self.rewrite(s, r, t, t, t, left, right, &seg_inv) {
                        out.push((next, QEdge { rule: q as u32, at: t as u32, left }));
                    }
                }
            }
        }
        out
    }

    fn invert(&self, _from: &QState, edge: &QEdge, _to: &QState) -> QEdge {
        QEdge { rule: self.rules[edge.rule as usize].reverse as u32, at: edge.at, left: edge.left }
    }
}

/// (start, length) of every virtual run in a code word.
fn runs(codes: &[u8]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (p, &c) in codes.iter().enumerate() {
        if virtual_index(c).is_none() {
            out.push((start, p - start));
            start = p + 1;
        }
    }
    out.push((start, codes.len() - start));
    out
}

fn virt_codes(indices: &[u8]) -> Vec<u8> {
    indices.iter().map(|&i| Letter::virt(i as usize).code()).collect()
}

impl Quotient<'_> {
    /// Rewrites virtual run `k` of the working word into `target` by elementary steps.
    fn reshape(&self, b: &mut ScriptBuilder<'_>, k: usize, target: &[u8]) {
        let (start, len) = runs(&b.word)[k];
        let from: Vec<u8> = b.word[start..start + len].iter().map(|&c| virtual_index(c).unwrap()).collect();
        let steps = virtual_path(&from, target).expect("run and target give the same permutation");
        for step in steps {
            let (src, tgt) = step.sides();
            let key = (virt_codes(&src), virt_codes(&tgt));
            let &(rule, dir) = self
                .virtual_steps
                .get(&key)
                .expect("relation set contains every Coxeter relation");
            b.apply(rule, dir, start + step.pos());
        }
    }

    /// Brings every run of the working word to canonical form, right to left.
    pub fn normalize(&self, b: &mut ScriptBuilder<'_>) {
        let state = QState::from_codes(&b.word);
        for k in (0..state.segs.len()).rev() {
            self.reshape(b, k, &state.segs[k].canonical_word());
        }
    }

    /// Expands one class-level edge into elementary steps. The working word must be the
    /// canonical representative of `from`; it ends as the canonical representative of
    /// the target.
    pub fn replay_edge(&self, b: &mut ScriptBuilder<'_>, from: &QState, edge: &QEdge) {
        debug_assert_eq!(b.word, from.canonical_codes());
        let r = &self.rules[edge.rule as usize];
        let t = edge.at as usize;
        let k = r.src.letters.len();
        let left_word = edge.left.canonical_word();
        if k == 0 {
            let right = edge.left.then(&r.src.segs[0]).inverse().then(&from.segs[t]);
            let target = [left_word.as_slice(), &r.src.runs[0], &right.canonical_word()].concat();
            self.reshape(b, t, &target);
        } else {
            let right = r.src.segs[k].inverse().then(&from.segs[t + k]);
            let target = [r.src.runs[k].as_slice(), &right.canonical_word()].concat();
            self.reshape(b, t + k, &target);
            for s in (1..k).rev() {
                self.reshape(b, t + s, &r.src.runs[s]);
            }
            let target = [left_word.as_slice(), &r.src.runs[0]].concat();
            self.reshape(b, t, &target);
        }
        let pos = runs(&b.word)[t].0 + left_word.len();
        b.apply(r.rule, r.dir, pos);
        self.normalize(b);
    }

    pub fn relations(&self) -> &RelationSet {
        self.rels
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::BraidWord;

    #[test]
    fn class_of_word() {
        let w = BraidWord::parse("v2 v1 v2 s1 v1 v1", 3).unwrap();
        let s = QState::from_codes(&w.codes());
        assert_eq!(s.len(), 4);
        assert_eq!(
            BraidWord::from_codes(3, &s.canonical_codes()),
            BraidWord::parse("v1 v2 v1 s1", 3).unwrap()
        );
    }

    #[test]
    fn symmetric_group_size() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(1).len(), 1);
    }
}
