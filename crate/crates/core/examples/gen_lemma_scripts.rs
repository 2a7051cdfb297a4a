//! Regenerates `scripts/lemmas/*.json` from the waypoint chains in `scripts/chains`.
//!
//! Each chain names a lemma instance and the intermediate words of its written-out
//! derivation. The expanded lemma sides are the implicit first and last words; every gap
//! between consecutive words is filled with elementary steps by bounded search.
//!
//! Run with `cargo run --release -p vsbraid --example gen_lemma_scripts`.

use std::fs;
use std::path::Path;

use vsbraid::lemmas::{Indices, LemmaId};
use vsbraid::reduced::expand_to_reduced;
use vsbraid::{equivalent_bounded, BraidWord, EquivResult, RelationSet, RewriteScript, SearchBudget};

type Res<T> = Result<T, String>;

struct Chain {
    lemma: LemmaId,
    indices: Indices,
    n: usize,
    words: Vec<String>,
}

fn parse_chain(text: &str) -> Res<Chain> {
    let (mut lemma, mut i, mut j, mut n, mut words) = (None, None, None, None, Vec::new());
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (key, rest) = line.split_once(' ').ok_or(format!("bad line `{line}`"))?;
        let num = || rest.parse::<usize>().map_err(|e| format!("`{line}`: {e}"));
        match key {
            "lemma" => lemma = Some(rest.parse::<LemmaId>().map_err(|e| e.to_string())?),
            "i" => i = Some(num()?),
            "j" => j = Some(num()?),
            "n" => n = Some(num()?),
            "w" => words.push(rest.to_string()),
            _ => return Err(format!("unknown key `{key}`")),
        }
    }
    Ok(Chain {
        lemma: lemma.ok_or("missing lemma")?,
        indices: Indices { i: i.ok_or("missing i")?, j },
        n: n.ok_or("missing n")?,
        words,
    })
}

fn build(chain: &Chain) -> Res<RewriteScript> {
    let (start, end) = chain.lemma.reduced_sides(chain.indices, chain.n).map_err(|e| e.to_string())?;
    let mut stops = vec![start];
    for w in &chain.words {
        let w = BraidWord::parse(w, chain.n).map_err(|e| e.to_string())?;
        stops.push(expand_to_reduced(&w));
    }
    stops.push(end);
    let rels = RelationSet::reduced(chain.n);
    let mut script = RewriteScript::trivial(&stops[0]);
    for pair in stops.windows(2) {
        let budget = SearchBudget {
            max_word_length: pair[0].len().max(pair[1].len()) + 6,
            max_states: 4_000_000,
            max_depth: 40,
        };
        match equivalent_bounded(&pair[0], &pair[1], &rels, budget).map_err(|e| e.to_string())? {
            EquivResult::Equivalent(s) => script = script.then(s),
            EquivResult::NotFoundWithinBudget { states_explored } => {
                return Err(format!(
                    "no path `{}` -> `{}` ({states_explored} states)",
                    pair[0], pair[1]
                ))
            }
        }
    }
    Ok(script)
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts");
    let only: Vec<String> = std::env::args().skip(1).collect();
    let mut entries: Vec<_> = fs::read_dir(root.join("chains"))
        .expect("chains directory")
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "chain"))
        .collect();
    entries.sort();
    let mut failed = false;
    for path in entries {
        let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
        if !only.is_empty() && !only.contains(&stem) {
            continue;
        }
        let result = fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|t| parse_chain(&t))
            .and_then(|c| build(&c));
        match result {
            Ok(script) => {
                let target = root.join("lemmas").join(format!("{stem}.json"));
                fs::write(&target, script.to_json() + "\n").expect("write script");
                println!("{stem}: {} steps", script.steps.len());
            }
            Err(e) => {
                failed = true;
                println!("{stem}: FAILED {e}");
            }
        }
    }
    if failed {
        std::process::exit(1);
    }
}
