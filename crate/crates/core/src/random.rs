//! Seeded random words and the conservation-law suites built on them.
//!
//! The generator is ChaCha8 seeded from a `u64`, so a seed reproduces the same words on
//! every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{braid, close, invariants};
use crate::markov::{apply_markov, embed_right, left_shift, Direction, MarkovMove, MoveKind, Sign};
use crate::relations::relation_set;
use crate::word::{BraidWord, Letter, LetterKind};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const KINDS: [LetterKind; 4] = [LetterKind::RealPos, LetterKind::RealNeg, LetterKind::Singular, LetterKind::Virtual];

/// A word on `n` strands with between 0 and `max_len` letters, all kinds equally likely.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n.max(1));
    }
    let len = rng.gen_range(0..=max_len);
    let letters =
        (0..len).map(|_| Letter::new(KINDS[rng.gen_range(0..4)], rng.gen_range(1..n))).collect();
    BraidWord::new(n, letters).expect("indices drawn below n")
}

/// Outcome of one suite: how many cases ran and a description of each failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every relation of the full presentation, n = 2..=max_n, keeps the permutation image,
/// the τ count and the σ exponent sum.
pub fn presentation_conservation(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport { name: "presentation-conservation", cases: 0, failures: Vec::new() };
    for n in 2..=max_n {
        for id in relation_set(n) {
            report.cases += 1;
            let (l, r) = id.sides().expect("instantiated relations have sides");
            let (l, r) = (BraidWord::new(n, l).unwrap(), BraidWord::new(n, r).unwrap());
            if l.permutation_image() != r.permutation_image()
                || l.tau_count() != r.tau_count()
                || l.sigma_exponent_sum() != r.sigma_exponent_sum()
            {
                report.failures.push(format!("n={n} {id}"));
            }
        }
    }
    report
}

/// A word the move applies to, built from `w`, and the move.
fn instance(w: &BraidWord, kind: MoveKind) -> Option<(BraidWord, MarkovMove)> {
    let n = w.n();
    let prepend = |g: Letter| {
        let mut letters = vec![g];
        letters.extend_from_slice(w.letters());
        BraidWord::new(n, letters).ok()
    };
    let append = |base: BraidWord, tail: &[Letter]| {
        let mut letters = base.letters().to_vec();
        letters.extend_from_slice(tail);
        BraidWord::new(base.n(), letters).ok()
    };
    let fwd = MarkovMove::forward(kind);
    let word = match kind {
        MoveKind::ConjReal { i, sign } => prepend(Letter::new(sign.real(), i))?,
        MoveKind::ConjVirtual { i } => prepend(Letter::virt(i))?,
        MoveKind::CommuteSingular { i } => prepend(Letter::tau(i))?,
        MoveKind::DestabRight => {
            // vary the removed letter with the word
            let kind = [LetterKind::Virtual, LetterKind::RealPos, LetterKind::RealNeg][w.len() % 3];
            append(embed_right(w), &[Letter::new(kind, n)])?
        }
        MoveKind::RsThreadRight(sign) => {
            let s = Letter::new(sign.real(), n);
            append(embed_right(w), &[Letter::tau(n), Letter::virt(n - 1), s])?
        }
        MoveKind::RsThreadLeft(sign) => {
            let s = Letter::new(sign.real(), 1);
            append(left_shift(w), &[Letter::tau(1), Letter::virt(2), s])?
        }
        _ => w.clone(),
    };
    Some((word, fwd))
}

fn every_kind(n: usize) -> Vec<MoveKind> {
    let mut kinds = Vec::new();
    for i in 1..n {
        for sign in [Sign::Pos, Sign::Neg] {
            kinds.push(MoveKind::ConjReal { i, sign });
        }
        kinds.push(MoveKind::ConjVirtual { i });
        kinds.push(MoveKind::CommuteSingular { i });
    }
    for sign in [Sign::Pos, Sign::Neg] {
        kinds.push(MoveKind::StabRealRight(sign));
        kinds.push(MoveKind::RsThreadRight(sign));
        kinds.push(MoveKind::RsThreadLeft(sign));
    }
    kinds.extend([MoveKind::StabVirtualRight, MoveKind::DestabRight, MoveKind::UnderThreadRight, MoveKind::UnderThreadLeft]);
    kinds
}

/// Change of the σ exponent sum a move is allowed to make.
fn expected_sigma_change(before: &BraidWord, mv: MarkovMove) -> i64 {
    let sign = match mv.kind {
        MoveKind::StabRealRight(s) => s.value() as i64,
        // removing a trailing σ^± undoes a real stabilization
        MoveKind::DestabRight => match before.letters().last().map(|l| l.kind) {
            Some(LetterKind::RealPos) => -1,
            Some(LetterKind::RealNeg) => 1,
            _ => 0,
        },
        _ => return 0,
    };
    match (mv.kind, mv.dir) {
        (MoveKind::DestabRight, _) | (_, Direction::Forward) => sign,
        (_, Direction::Inverse) => -sign,
    }
}

fn check_move(before: &BraidWord, mv: MarkovMove, after: &BraidWord) -> Option<String> {
    if before.tau_count() != after.tau_count() {
        return Some("τ count changed".into());
    }
    if before.closure_component_count() != after.closure_component_count() {
        return Some("closure component count changed".into());
    }
    let change = after.sigma_exponent_sum() - before.sigma_exponent_sum();
    let expected = expected_sigma_change(before, mv);
    (change != expected).then(|| format!("σ exponent sum changed by {change}, expected {expected}"))
}

/// Random words against every move kind: conserved quantities hold and a forward move
/// followed by its inverse returns the word.
pub fn markov_conservation(seed: u64, count: usize) -> SuiteReport {
    let mut rng = rng(seed);
    let mut report = SuiteReport { name: "markov-conservation", cases: 0, failures: Vec::new() };
    for case in 0..count {
        let n = rng.gen_range(2..=5);
        let w = random_word(&mut rng, n, 12);
        for kind in every_kind(n) {
            let Some((word, fwd)) = instance(&w, kind) else { continue };
            let after = match apply_markov(&word, fwd) {
                Ok(x) => x,
                Err(e) => {
                    report.failures.push(format!("case {case} `{word}` n={}: {fwd}: {e}", word.n()));
                    continue;
                }
            };
            report.cases += 1;
            if let Some(why) = check_move(&word, fwd, &after) {
                report.failures.push(format!("case {case} `{word}` {fwd}: {why}"));
            }
            let back = match kind {
                MoveKind::DestabRight => MarkovMove::forward(match word.letters().last().unwrap().kind {
                    LetterKind::RealPos => MoveKind::StabRealRight(Sign::Pos),
                    LetterKind::RealNeg => MoveKind::StabRealRight(Sign::Neg),
                    _ => MoveKind::StabVirtualRight,
                }),
                _ => MarkovMove { kind, dir: Direction::Inverse },
            };
            match apply_markov(&after, back) {
                Ok(x) if x == word => {
                    if let Some(why) = check_move(&after, back, &x) {
                        report.failures.push(format!("case {case} `{after}` {back}: {why}"));
                    }
                }
                Ok(x) => report.failures.push(format!("case {case} `{word}` {fwd} then {back} gives `{x}`")),
                Err(e) => report.failures.push(format!("case {case} `{after}` {back}: {e}")),
            }
        }
    }
    report
}

/// Closures of random words braid back to words with the same crossings and components.
pub fn braiding_round_trip(seed: u64, count: usize, max_n: usize, max_len: usize) -> SuiteReport {
    let mut rng = rng(seed);
    let mut report = SuiteReport { name: "braiding-round-trip", cases: 0, failures: Vec::new() };
    for case in 0..count {
        let n = rng.gen_range(1..=max_n);
        let w = random_word(&mut rng, n, max_len);
        report.cases += 1;
        let d = close(&w);
        let result = braid(&d).and_then(|b| Ok((invariants(&d)?, invariants(&close(&b))?)));
        match result {
            Ok((a, c)) => {
                let same = (a.component_count, a.real_pos, a.real_neg, a.singular)
                    == (c.component_count, c.real_pos, c.real_neg, c.singular);
                if !same || c.virtual_count < a.virtual_count {
                    report.failures.push(format!("case {case} `{w}` n={n}: {a} became {c}"));
                }
            }
            Err(e) => report.failures.push(format!("case {case} `{w}` n={n}: {e}")),
        }
    }
    report
}

/// The suites `random-test` runs for one seed.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    vec![
        presentation_conservation(6),
        markov_conservation(seed, 500),
        braiding_round_trip(seed, 100, 4, 8),
    ]
}
