//! The virtual letters obey exactly the Coxeter presentation of S_n. This module holds
//! the permutation arithmetic for runs of virtual letters and turns any two words for the
//! same permutation into an explicit chain of elementary virtual rewrites.

use std::collections::{HashMap, VecDeque};

/// Largest strand count the quotient representation handles.
pub(crate) const QMAX: usize = 8;

/// Arrangement of strands after a run of virtual letters: `0[p]` is the strand (by its
/// starting position, 0-based) found at position `p`. Positions past `n` stay fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Arr(pub [u8; QMAX]);

impl Arr {
    pub fn identity() -> Arr {
        let mut a = [0u8; QMAX];
        for (p, x) in a.iter_mut().enumerate() {
            *x = p as u8;
        }
        Arr(a)
    }

    /// Arrangement reached by applying the virtual letters `indices` (1-based) in order.
    pub fn from_word(indices: &[u8]) -> Arr {
        let mut a = Arr::identity();
        for &i in indices {
            a.swap(i);
        }
        a
    }

    pub fn swap(&mut self, i: u8) {
        self.0.swap(i as usize - 1, i as usize);
    }

    /// Arrangement of `self` followed by `next`.
    pub fn then(&self, next: &Arr) -> Arr {
        Arr(next.0.map(|q| self.0[q as usize]))
    }

    pub fn inverse(&self) -> Arr {
        let mut out = [0u8; QMAX];
        for p in 0..QMAX {
            out[self.0[p] as usize] = p as u8;
        }
        Arr(out)
    }

    pub fn inversions(&self) -> usize {
        // scan right to left, counting smaller values already seen
        let mut seen = 0u32;
        let mut count = 0;
        for &x in self.0.iter().rev() {
            count += (seen & ((1 << x) - 1)).count_ones();
            seen |= 1 << x;
        }
        count as usize
    }

    #[cfg(test)]
    pub fn is_identity(&self) -> bool {
        *self == Arr::identity()
    }

    /// Arrangement of the word with letter `i` removed from the front.
    fn strip_front(&self, i: u8) -> Arr {
        let (a, b) = (i - 1, i);
        let mut out = self.0;
        for x in out.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
        Arr(out)
    }

    /// The lexicographically smallest reduced word, built by repeatedly taking the
    /// smallest left descent.
    pub fn canonical_word(&self) -> Vec<u8> {
        let mut cur = *self;
        let mut len = cur.inversions();
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let (i, next) = (1..QMAX as u8)
                .map(|i| (i, cur.strip_front(i)))
                .find(|(_, next)| next.inversions() < len)
                .expect("a non-identity permutation has a left descent");
            word.push(i);
            cur = next;
            len -= 1;
        }
        word
    }
}

/// One elementary rewrite on a run of virtual letters, located at `pos` within the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum VStep {
    /// `i i -> ε`
    Cancel { pos: usize, i: u8 },
    /// `ε -> i i`
    Insert { pos: usize, i: u8 },
    /// `i j i -> j i j` with |i-j| = 1
    Braid { pos: usize, i: u8, j: u8 },
    /// `i j -> j i` with |i-j| > 1
    Commute { pos: usize, i: u8, j: u8 },
}

impl VStep {
    pub fn inverse(self) -> VStep {
        match self {
            VStep::Cancel { pos, i } => VStep::Insert { pos, i },
            VStep::Insert { pos, i } => VStep::Cancel { pos, i },
            VStep::Braid { pos, i, j } => VStep::Braid { pos, i: j, j: i },
            VStep::Commute { pos, i, j } => VStep::Commute { pos, i: j, j: i },
        }
    }

    pub fn pos(self) -> usize {
        match self {
            VStep::Cancel { pos, .. }
            | VStep::Insert { pos, .. }
            | VStep::Braid { pos, .. }
            | VStep::Commute { pos, .. } => pos,
        }
    }

    /// The rewritten stretch as (source, target).
    pub fn sides(self) -> (Vec<u8>, Vec<u8>) {
        match self {
            VStep::Cancel { i, .. } => (vec![i, i], vec![]),
            VStep::Insert { i, .. } => (vec![], vec![i, i]),
            VStep::Braid { i, j, .. } => (vec![i, j, i], vec![j, i, j]),
            VStep::Commute { i, j, .. } => (vec![i, j], vec![j, i]),
        }
    }

    pub fn apply(self, word: &mut Vec<u8>) {
        let pos = self.pos();
        let (src, tgt) = self.sides();
        debug_assert_eq!(&word[pos..pos + src.len()], &src[..]);
        word.splice(pos..pos + src.len(), tgt);
    }
}

/// Braid and commutation moves available on a word (length preserving).
fn braid_moves(word: &[u8]) -> Vec<VStep> {
    let mut out = Vec::new();
    for pos in 0..word.len().saturating_sub(1) {
        let (i, j) = (word[pos], word[pos + 1]);
        if i.abs_diff(j) > 1 {
            out.push(VStep::Commute { pos, i, j });
        }
        if pos + 2 < word.len() && word[pos + 2] == i && i.abs_diff(j) == 1 {
            out.push(VStep::Braid { pos, i, j });
        }
    }
    out
}

/// Breadth-first search through braid and commutation moves to a word satisfying `goal`.
fn braid_path(start: &[u8], goal: impl Fn(&[u8]) -> bool) -> Vec<VStep> {
    if goal(start) {
        return Vec::new();
    }
    let mut parent: HashMap<Vec<u8>, (Vec<u8>, VStep)> = HashMap::new();
    let mut queue = VecDeque::from([start.to_vec()]);
    parent.insert(start.to_vec(), (Vec::new(), VStep::Cancel { pos: 0, i: 0 }));
    while let Some(cur) = queue.pop_front() {
        for step in braid_moves(&cur) {
            let mut next = cur.clone();
            step.apply(&mut next);
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), (cur.clone(), step));
            if goal(&next) {
                let mut steps = Vec::new();
                let mut at = next;
                while at != start {
                    let (prev, step) = parent[&at].clone();
                    steps.push(step);
                    at = prev;
                }
                steps.reverse();
                return steps;
            }
            queue.push_back(next);
        }
    }
    panic!("no braid path from {start:?}: the goal is not a reduced word of the same element");
}

/// Rewrites `word` into the canonical word of its permutation, recording every step.
fn to_canonical(word: &[u8]) -> Vec<VStep> {
    let mut w = word.to_vec();
    let mut steps = Vec::new();
    let mut push = |w: &mut Vec<u8>, step: VStep| {
        step.apply(w);
        steps.push(step);
    };
    // w[..k] is reduced
    let mut k = 0;
    while k < w.len() {
        let s = w[k];
        if Arr::from_word(&w[..=k]).inversions() == k + 1 {
            k += 1;
            continue;
        }
        // s is a right descent of the prefix, so some reduced word for it ends in s
        for step in braid_path(&w[..k], |u| u.last() == Some(&s)) {
            push(&mut w, step);
        }
        push(&mut w, VStep::Cancel { pos: k - 1, i: s });
        k -= 1;
    }
    let target = Arr::from_word(&w).canonical_word();
    for step in braid_path(&w, |u| u == target.as_slice()) {
        push(&mut w, step);
    }
    steps
}

/// Elementary virtual steps turning `from` into `to`, or `None` when the two words give
/// different permutations.
pub(crate) fn virtual_path(from: &[u8], to: &[u8]) -> Option<Vec<VStep>> {
    if Arr::from_word(from) != Arr::from_word(to) {
        return None;
    }
    let mut steps = to_canonical(from);
    steps.extend(to_canonical(to).into_iter().rev().map(VStep::inverse));
    Some(steps)
}
