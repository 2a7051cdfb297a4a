//! Bidirectional breadth-first search over an abstract space of reversible moves.

use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::exec::Exec;

pub(crate) trait Space: Sync {
    type State: Clone + Eq + Hash + Ord + Send + Sync;
    type Edge: Clone + Send + Sync;

    fn successors(&self, s: &Self::State) -> Vec<(Self::State, Self::Edge)>;

    /// The edge leading back from `to` to `from`.
    fn invert(&self, from: &Self::State, edge: &Self::Edge, to: &Self::State) -> Self::Edge;
}

pub(crate) struct Path<S, E> {
    pub states: Vec<S>,
    pub edges: Vec<E>,
}

pub(crate) struct Outcome<S, E> {
    pub path: Option<Path<S, E>>,
    pub explored: usize,
}

type Parents<S, E> = FxHashMap<S, Option<(S, E)>>;

enum Level<S> {
    Met(S),
    Continue(Vec<S>),
    OutOfStates,
}

fn expand<Sp: Space>(
    space: &Sp,
    frontier: &[Sp::State],
    mine: &mut Parents<Sp::State, Sp::Edge>,
    other: &Parents<Sp::State, Sp::Edge>,
    exec: Exec,
    explored: &mut usize,
    max_states: usize,
) -> Level<Sp::State> {
    let succ = exec.map(frontier, |s| space.successors(s));
    let mut next = Vec::new();
    // Merge in frontier order so the result does not depend on the execution mode.
    for (parent, list) in frontier.iter().zip(succ) {
        for (s, e) in list {
            if mine.contains_key(&s) {
                continue;
            }
            mine.insert(s.clone(), Some((parent.clone(), e)));
            *explored += 1;
            if other.contains_key(&s) {
                return Level::Met(s);
            }
            if *explored >= max_states {
                return Level::OutOfStates;
            }
            next.push(s);
        }
    }
    next.sort();
    Level::Continue(next)
}

/// Searches from both ends, always growing the smaller frontier (forward on ties).
pub(crate) fn bidirectional<Sp: Space>(
    space: &Sp,
    start: Sp::State,
    goal: Sp::State,
    max_states: usize,
    max_depth: usize,
    exec: Exec,
) -> Outcome<Sp::State, Sp::Edge> {
    if start == goal {
        return Outcome { path: Some(Path { states: vec![start], edges: vec![] }), explored: 1 };
    }
    let mut fwd: Parents<Sp::State, Sp::Edge> = FxHashMap::from_iter([(start.clone(), None)]);
    let mut bwd: Parents<Sp::State, Sp::Edge> = FxHashMap::from_iter([(goal.clone(), None)]);
    let mut ff = vec![start];
    let mut bf = vec![goal];
    let mut explored = 2;
    for _ in 0..max_depth {
        let forward = ff.len() <= bf.len();
        let level = if forward {
            expand(space, &ff, &mut fwd, &bwd, exec, &mut explored, max_states)
        } else {
            expand(space, &bf, &mut bwd, &fwd, exec, &mut explored, max_states)
        };
        match level {
            Level::Met(m) => {
                let path = join(space, &fwd, &bwd, m);
                return Outcome { path: Some(path), explored };
            }
            Level::OutOfStates => break,
            Level::Continue(next) if next.is_empty() => break,
            Level::Continue(next) => {
                if forward {
                    ff = next;
                } else {
                    bf = next;
                }
            }
        }
    }
    Outcome { path: None, explored }
}

fn join<Sp: Space>(
    space: &Sp,
    fwd: &Parents<Sp::State, Sp::Edge>,
    bwd: &Parents<Sp::State, Sp::Edge>,
    meet: Sp::State,
) -> Path<Sp::State, Sp::Edge> {
    let mut states = vec![meet.clone()];
    let mut edges = Vec::new();
    let mut at = meet.clone();
    while let Some(Some((prev, e))) = fwd.get(&at) {
        states.push(prev.clone());
        edges.push(e.clone());
        at = prev.clone();
    }
    states.reverse();
    edges.reverse();
    let mut at = meet;
    while let Some(Some((prev, e))) = bwd.get(&at) {
        // the backward tree stores prev -> at; walk it the other way
        edges.push(space.invert(prev, e, &at));
        states.push(prev.clone());
        at = prev.clone();
    }
    Path { states, edges }
}
