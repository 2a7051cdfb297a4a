//! The `vsb` command line, as a function from arguments and stdin to exit code and output.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad input, failed checks), 2 when a
//! bounded search ends without an answer.

use std::ffi::OsString;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use vsbraid::diagram::{self, MorseDiagram, Validity};
use vsbraid::lemmas::{self, Indices, LemmaId, LemmaMode, LemmaOutcome};
use vsbraid::markov::{self, MarkovMove, MarkovResult, MarkovStep, MarkovTrace, MoveKind};
use vsbraid::random;
use vsbraid::reduced::{expand_to_reduced, verify_shift_identity};
use vsbraid::{
    apply_relation, check_rewrite_script, equivalent_bounded, neighbors, reduced_relation_set,
    relation_set, BraidWord, Dir, EquivResult, RelRef, RelationSet, RewriteScript, RewriteStep,
    ScriptCheck, SearchBudget,
};

/// What one invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A library operation and the subcommand that reaches it, with an invocation that
/// exercises it. `stdin` feeds subcommands reading the file `-`.
#[derive(Clone, Copy, Debug)]
pub struct Operation {
    pub name: &'static str,
    pub subcommand: &'static str,
    pub example: &'static [&'static str],
    pub stdin: &'static str,
}

const UNKNOT: &str = r#"{"events": [{"kind": "cup", "pos": 1, "orient": "ccw"}, {"kind": "cap", "pos": 1}]}"#;
const CANCEL_SCRIPT: &str = r#"{"n": 2, "start": "s1 S1", "end": "1",
  "steps": [{"rel": "InvCancel", "params": [1, 1], "pos": 0, "dir": "L2R"}]}"#;

const fn op(
    name: &'static str,
    subcommand: &'static str,
    example: &'static [&'static str],
) -> Operation {
    Operation { name, subcommand, example, stdin: "" }
}

/// Every library operation, each reachable from exactly one subcommand.
pub const OPERATIONS: &[Operation] = &[
    op("parse_word", "normalize", &["normalize", "-n", "3", "s1 v2"]),
    op("compose", "normalize", &["normalize", "-n", "3", "s1", "--then", "s2"]),
    op("invert", "normalize", &["normalize", "-n", "3", "s1 v2", "--invert"]),
    op("free_reduce", "normalize", &["normalize", "-n", "2", "s1 S1 t1"]),
    op("apply_relation", "normalize", &["normalize", "-n", "3", "s1 s2 s1", "--apply", "R3[1,2]@0", "--raw"]),
    op("permutation_image", "perm", &["perm", "-n", "3", "v1 s2"]),
    op("tau_count", "perm", &["perm", "-n", "3", "t1 t2"]),
    op("sigma_exponent_sum", "perm", &["perm", "-n", "3", "s1 S2 s2"]),
    op("closure_component_count", "perm", &["perm", "-n", "4", "v1 v3"]),
    Operation { name: "validate", subcommand: "invariants", example: &["invariants", "-"], stdin: UNKNOT },
    Operation { name: "invariants", subcommand: "invariants", example: &["invariants", "-"], stdin: UNKNOT },
    op("close", "close", &["close", "-n", "2", "s1"]),
    Operation { name: "braid", subcommand: "braid", example: &["braid", "-"], stdin: UNKNOT },
    op("expand_to_reduced", "expand", &["expand", "-n", "4", "s3 t2"]),
    op("relation_set", "equiv", &["equiv", "-n", "3", "--list-relations"]),
    op("reduced_relation_set", "equiv", &["equiv", "-n", "3", "--list-relations", "--reduced"]),
    op("neighbors", "equiv", &["equiv", "-n", "3", "s1 s2 s1", "--neighbors", "--max-len", "3"]),
    op("equivalent_bounded", "equiv", &["equiv", "-n", "3", "s1 s2 s1", "s2 s1 s2"]),
    op("verify_lemma", "verify-lemmas", &["verify-lemmas", "-n", "4", "--lemma", "lemma2-sigma", "--i", "1", "--j", "3"]),
    op("verify_shift_identity", "verify-lemmas", &["verify-lemmas", "-n", "4", "--shift", "1", "3"]),
    Operation { name: "check_rewrite_script", subcommand: "check-script", example: &["check-script", "-"], stdin: CANCEL_SCRIPT },
    op("left_shift", "markov-equiv", &["markov-equiv", "-n", "2", "s1", "--left-shift"]),
    op("embed_right", "markov-equiv", &["markov-equiv", "-n", "2", "s1", "--embed-right"]),
    op("apply_markov", "markov-equiv", &["markov-equiv", "-n", "2", "s1", "--apply", "StabRealRight[1]"]),
    op("markov_neighbors", "markov-equiv", &["markov-equiv", "-n", "2", "s1", "--neighbors", "--max-len", "2"]),
    op("markov_equivalent_bounded", "markov-equiv", &["markov-equiv", "-n", "2", "s1", "-m", "1", "1"]),
];

#[derive(Parser, Debug)]
#[command(name = "vsb", version, about = "Words, relations and Markov moves in the virtual singular braid monoid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Longest intermediate word [default: longest input + 6]
    #[arg(long, value_parser = positive)]
    max_len: Option<usize>,
    /// States visited, both directions together
    #[arg(long, value_parser = positive, default_value_t = SearchBudget::DEFAULT_STATES)]
    max_states: usize,
    /// Breadth-first levels, both directions together
    #[arg(long, value_parser = positive, default_value_t = SearchBudget::DEFAULT_DEPTH)]
    max_depth: usize,
}

impl BudgetArgs {
    fn for_words(self, a: &BraidWord, b: &BraidWord) -> SearchBudget {
        let mut budget = SearchBudget::default_for(a, b);
        budget.max_states = self.max_states;
        budget.max_depth = self.max_depth;
        if let Some(l) = self.max_len {
            budget.max_word_length = l;
        }
        budget
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirArg {
    L2r,
    R2l,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Script,
    Search,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum SetArg {
    /// Reduced when any step names a reduced relation, otherwise original
    #[default]
    Auto,
    Original,
    Reduced,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a word, optionally compose, invert or rewrite it, and free-reduce the result
    Normalize {
        #[arg(short, value_parser = positive)]
        n: usize,
        word: String,
        /// Append this word
        #[arg(long)]
        then: Option<String>,
        /// Invert the word (fails on singular letters)
        #[arg(long)]
        invert: bool,
        /// Apply one relation, written `Family[p,...]@pos`
        #[arg(long)]
        apply: Option<String>,
        #[arg(long, value_enum, default_value = "l2r")]
        dir: DirArg,
        /// Skip the final free reduction
        #[arg(long)]
        raw: bool,
    },
    /// Permutation image, τ count, σ exponent sum and closure component count
    Perm {
        #[arg(short, value_parser = positive)]
        n: usize,
        word: String,
    },
    /// Validate a diagram file (`-` for stdin) and print its invariants
    Invariants { file: String },
    /// Print the closure of a braid as a diagram
    Close {
        #[arg(short, value_parser = positive)]
        n: usize,
        word: String,
    },
    /// Braid a diagram file (`-` for stdin)
    Braid { file: String },
    /// Rewrite a word in the reduced alphabet
    Expand {
        #[arg(short, value_parser = positive)]
        n: usize,
        word: String,
    },
    /// Search for a derivation between two words, or list relations or neighbors
    Equiv {
        #[arg(short, value_parser = positive)]
        n: usize,
        a: Option<String>,
        b: Option<String>,
        /// Use the reduced presentation; inputs are expanded first
        #[arg(long)]
        reduced: bool,
        /// Print the words one rewrite away from A
        #[arg(long, conflicts_with_all = ["b", "list_relations"])]
        neighbors: bool,
        /// Print the relation set
        #[arg(long, conflicts_with_all = ["a", "b"])]
        list_relations: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for a chain of relations and Markov moves, or apply single moves
    MarkovEquiv {
        /// Strands of A
        #[arg(short, value_parser = positive)]
        n: usize,
        a: String,
        /// Strands of B [default: same as A]
        #[arg(short, value_parser = positive)]
        m: Option<usize>,
        b: Option<String>,
        /// Strand cap [default: larger input + 2]
        #[arg(long, value_parser = positive)]
        max_strands: Option<usize>,
        /// Apply one move, written `Name[p,...]`
        #[arg(long, conflicts_with = "b")]
        apply: Option<String>,
        /// Apply the move in its inverse direction
        #[arg(long, requires = "apply")]
        inverse: bool,
        #[arg(long, conflicts_with = "b")]
        neighbors: bool,
        #[arg(long, conflicts_with = "b")]
        left_shift: bool,
        #[arg(long, conflicts_with = "b")]
        embed_right: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check lemma derivations over the reduced presentation
    VerifyLemmas {
        #[arg(short, value_parser = positive, default_value_t = 5)]
        n: usize,
        /// Every bundled instance that fits, each in its default mode
        #[arg(long, conflicts_with_all = ["lemma", "shift"])]
        all: bool,
        #[arg(long)]
        lemma: Option<String>,
        #[arg(long, requires = "lemma", value_parser = positive)]
        i: Option<usize>,
        #[arg(long, requires = "lemma", value_parser = positive)]
        j: Option<usize>,
        #[arg(long, requires = "lemma", value_enum)]
        mode: Option<ModeArg>,
        /// Check the virtual shift identity for I J
        #[arg(long, num_args = 2, value_names = ["I", "J"], conflicts_with = "lemma", value_parser = positive)]
        shift: Option<Vec<usize>>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Replay a rewrite script or Markov trace file (`-` for stdin)
    CheckScript {
        file: String,
        #[arg(long, value_enum, default_value_t)]
        set: SetArg,
    },
    /// Run the seeded conservation suites
    RandomTest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

enum Status {
    Done,
    Failed,
    NotFound,
}

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, T>(args: I, stdin: &[u8]) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("vsb")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 1, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, stdin, &mut out) {
        Ok(status) => {
            let code = match status {
                Status::Done => 0,
                Status::Failed => 1,
                Status::NotFound => 2,
            };
            Output { code, stdout: out, stderr: String::new() }
        }
        Err(e) => Output { code: 1, stdout: out, stderr: format!("error: {e:#}\n") },
    }
}

fn word(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, n).with_context(|| format!("cannot parse `{text}`"))
}

fn read_input(file: &str, stdin: &[u8]) -> Result<String> {
    if file == "-" {
        return String::from_utf8(stdin.to_vec()).context("stdin is not UTF-8");
    }
    std::fs::read_to_string(file).with_context(|| format!("cannot read {file}"))
}

/// Splits `Name[1,2]` (spaces allowed) into its name and parameters.
fn name_and_params(text: &str) -> Result<(&str, Vec<i32>)> {
    let Some((name, rest)) = text.split_once('[') else {
        return Ok((text.trim(), Vec::new()));
    };
    let inner = rest.strip_suffix(']').ok_or_else(|| anyhow!("missing `]` in `{text}`"))?;
    let params = inner
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i32>().with_context(|| format!("bad parameter `{p}`")))
        .collect::<Result<_>>()?;
    Ok((name.trim(), params))
}

fn diagram_from(file: &str, stdin: &[u8]) -> Result<MorseDiagram> {
    let d = MorseDiagram::from_json(&read_input(file, stdin)?)?;
    if let Validity::Invalid { row, reason } = diagram::validate(&d) {
        bail!("invalid diagram at row {row}: {reason}");
    }
    Ok(d)
}

fn dispatch(command: Command, stdin: &[u8], out: &mut String) -> Result<Status> {
    match command {
        Command::Normalize { n, word: text, then, invert, apply, dir, raw } => {
            let mut w = word(&text, n)?;
            if let Some(t) = then {
                w = w.compose(&word(&t, n)?)?;
            }
            if invert {
                w = w.invert()?;
            }
            if let Some(text) = apply {
                let (rel, pos) = text.rsplit_once('@').ok_or_else(|| anyhow!("expected `Family[p,...]@pos`"))?;
                let pos: usize = pos.trim().parse().with_context(|| format!("bad position `{pos}`"))?;
                let (name, params) = name_and_params(rel)?;
                let dir = match dir {
                    DirArg::L2r => Dir::L2R,
                    DirArg::R2l => Dir::R2L,
                };
                w = match RelRef::from_parts(name, params)? {
                    RelRef::Original(id) => apply_relation(&w, &id, pos, dir)?,
                    rel => RewriteStep { rel, pos, dir }.apply(&w)?,
                };
            }
            if !raw {
                w = w.free_reduce();
            }
            writeln!(out, "{w}")?;
        }
        Command::Perm { n, word: text } => {
            let w = word(&text, n)?;
            let p = w.permutation_image();
            let cycles: String = p
                .cycles()
                .iter()
                .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            writeln!(out, "image {p}")?;
            writeln!(out, "cycles {cycles}")?;
            writeln!(out, "tau_count {}", w.tau_count())?;
            writeln!(out, "sigma_exponent_sum {}", w.sigma_exponent_sum())?;
            writeln!(out, "closure_components {}", w.closure_component_count())?;
        }
        Command::Invariants { file } => {
            let d = diagram_from(&file, stdin)?;
            writeln!(out, "{}", diagram::invariants(&d)?)?;
        }
        Command::Close { n, word: text } => {
            writeln!(out, "{}", diagram::close(&word(&text, n)?).to_json())?;
        }
        Command::Braid { file } => {
            let b = diagram::braid(&diagram_from(&file, stdin)?)?;
            writeln!(out, "n={} {b}", b.n())?;
        }
        Command::Expand { n, word: text } => {
            writeln!(out, "{}", expand_to_reduced(&word(&text, n)?))?;
        }
        Command::Equiv { n, a, b, reduced, neighbors: list_neighbors, list_relations, budget } => {
            if list_relations {
                let ids: Vec<String> = if reduced {
                    reduced_relation_set(n).iter().map(ToString::to_string).collect()
                } else {
                    relation_set(n).iter().map(ToString::to_string).collect()
                };
                for id in ids {
                    writeln!(out, "{id}")?;
                }
                return Ok(Status::Done);
            }
            let prepare = |text: &str| -> Result<BraidWord> {
                let w = word(text, n)?;
                Ok(if reduced { expand_to_reduced(&w) } else { w })
            };
            let rels = if reduced { RelationSet::reduced(n) } else { RelationSet::original(n) };
            let a = prepare(a.as_deref().ok_or_else(|| anyhow!("word A is required"))?)?;
            if list_neighbors {
                let max_len = budget.max_len.unwrap_or(a.len() + 2);
                for (w, step) in neighbors(&a, &rels, max_len) {
                    writeln!(out, "{w}\t{} {} @{}", step.rel, step.dir, step.pos)?;
                }
                return Ok(Status::Done);
            }
            let b = prepare(b.as_deref().ok_or_else(|| anyhow!("word B is required"))?)?;
            return Ok(match equivalent_bounded(&a, &b, &rels, budget.for_words(&a, &b))? {
                EquivResult::Equivalent(script) => {
                    writeln!(out, "equivalent steps={}", script.steps.len())?;
                    writeln!(out, "{}", script.to_json())?;
                    Status::Done
                }
                EquivResult::NotFoundWithinBudget { states_explored } => {
                    writeln!(out, "not found within budget (states explored: {states_explored})")?;
                    Status::NotFound
                }
            });
        }
        Command::MarkovEquiv {
            n,
            a,
            m,
            b,
            max_strands,
            apply,
            inverse,
            neighbors: list_neighbors,
            left_shift,
            embed_right,
            budget,
        } => {
            let a = word(&a, n)?;
            if left_shift {
                writeln!(out, "n={} {}", a.n() + 1, markov::left_shift(&a))?;
            } else if embed_right {
                writeln!(out, "n={} {}", a.n() + 1, markov::embed_right(&a))?;
            } else if let Some(text) = apply {
                let (name, params) = name_and_params(&text)?;
                let kind = MoveKind::from_parts(name, &params)?;
                let mv = if inverse { MarkovMove::inverse(kind) } else { MarkovMove::forward(kind) };
                let w = markov::apply_markov(&a, mv)?;
                writeln!(out, "n={} {w}", w.n())?;
            } else if list_neighbors {
                let max_len = budget.max_len.unwrap_or(a.len() + 2);
                let cap = max_strands.unwrap_or(a.n() + 2);
                for (w, step) in markov::markov_neighbors(&a, max_len, cap) {
                    let step = match step {
                        MarkovStep::Relation(r) => format!("{} {} @{}", r.rel, r.dir, r.pos),
                        MarkovStep::Markov(mv) => mv.to_string(),
                    };
                    writeln!(out, "n={} {w}\t{step}", w.n())?;
                }
            } else {
                let b = word(b.as_deref().ok_or_else(|| anyhow!("word B is required"))?, m.unwrap_or(n))?;
                let cap = max_strands.unwrap_or_else(|| markov::default_max_strands(&a, &b));
                return Ok(match markov::markov_equivalent_bounded(&a, &b, budget.for_words(&a, &b), cap) {
                    MarkovResult::Equivalent(trace) => {
                        writeln!(out, "equivalent steps={}", trace.steps.len())?;
                        writeln!(out, "{}", trace.to_json())?;
                        Status::Done
                    }
                    MarkovResult::NotFoundWithinBudget { states_explored, obstruction } => {
                        writeln!(out, "not found within budget (states explored: {states_explored})")?;
                        if let Some(o) = obstruction {
                            writeln!(out, "never equivalent: {o}")?;
                        }
                        Status::NotFound
                    }
                });
            }
        }
        Command::VerifyLemmas { n, all, lemma, i, j, mode, shift, budget } => {
            return verify_lemmas(n, all, lemma, i, j, mode, shift, budget, out);
        }
        Command::CheckScript { file, set } => return check_script(&read_input(&file, stdin)?, set, out),
        Command::RandomTest { seed } => {
            let mut ok = true;
            for report in random::run_all(seed) {
                writeln!(out, "{} seed={seed} cases={} failures={}", report.name, report.cases, report.failures.len())?;
                for f in &report.failures {
                    writeln!(out, "  {f}")?;
                }
                ok &= report.passed();
            }
            return Ok(if ok { Status::Done } else { Status::Failed });
        }
    }
    Ok(Status::Done)
}

fn outcome_line(out: &mut String, lemma: LemmaId, indices: Indices, mode: LemmaMode, outcome: &LemmaOutcome) -> Result<bool> {
    match outcome {
        LemmaOutcome::Verified { steps, .. } => writeln!(out, "{lemma} {indices} {mode} Verified steps={steps}")?,
        LemmaOutcome::Failed(why) => writeln!(out, "{lemma} {indices} {mode} Failed: {why}")?,
    }
    Ok(outcome.is_verified())
}

#[allow(clippy::too_many_arguments)]
fn verify_lemmas(
    n: usize,
    all: bool,
    lemma: Option<String>,
    i: Option<usize>,
    j: Option<usize>,
    mode: Option<ModeArg>,
    shift: Option<Vec<usize>>,
    budget: BudgetArgs,
    out: &mut String,
) -> Result<Status> {
    let ok = if all {
        let mut ok = true;
        for r in lemmas::verify_all(n, budget.max_states, budget.max_depth) {
            ok &= outcome_line(out, r.lemma, r.indices, r.mode, &r.outcome)?;
        }
        ok
    } else if let Some(pair) = shift {
        let (i, j) = (pair[0], pair[1]);
        let dummy = BraidWord::identity(n);
        let mut b = budget.for_words(&dummy, &dummy);
        if budget.max_len.is_none() {
            b.max_word_length = 2 * i.abs_diff(j) + 1 + 6;
        }
        match verify_shift_identity(i, j, n, b)? {
            EquivResult::Equivalent(s) => {
                writeln!(out, "shift i={i} j={j} Verified steps={}", s.steps.len())?;
                true
            }
            EquivResult::NotFoundWithinBudget { states_explored } => {
                writeln!(out, "shift i={i} j={j} Failed: not found within budget ({states_explored} states explored)")?;
                false
            }
        }
    } else if let Some(name) = lemma {
        let id: LemmaId = name.parse()?;
        let i = i.ok_or_else(|| anyhow!("--i is required"))?;
        let indices = match j {
            Some(j) => Indices::pair(i, j),
            None => Indices::single(i),
        };
        let mode = match mode {
            Some(ModeArg::Script) => LemmaMode::Script,
            Some(ModeArg::Search) => LemmaMode::Search,
            None => id.default_mode(),
        };
        let (start, end) = id.reduced_sides(indices, n)?;
        let outcome = lemmas::verify_lemma(id, indices, n, mode, budget.for_words(&start, &end))?;
        outcome_line(out, id, indices, mode, &outcome)?
    } else {
        bail!("give --all, --lemma or --shift");
    };
    Ok(if ok { Status::Done } else { Status::Failed })
}

fn check_script(text: &str, set: SetArg, out: &mut String) -> Result<Status> {
    let value: serde_json::Value = serde_json::from_str(text).context("malformed JSON")?;
    if value.get("end_n").is_some() {
        let trace = MarkovTrace::from_json(text)?;
        return Ok(match trace.replay() {
            Ok(w) if w == trace.end => {
                writeln!(out, "valid steps={}", trace.steps.len())?;
                Status::Done
            }
            Ok(w) => {
                writeln!(out, "invalid step {}: replay ends at `n={} {w}`, not `n={} {}`", trace.steps.len(), w.n(), trace.end.n(), trace.end)?;
                Status::Failed
            }
            Err((k, e)) => {
                writeln!(out, "invalid step {k}: {e}")?;
                Status::Failed
            }
        });
    }
    let script = RewriteScript::from_json(text)?;
    let reduced = match set {
        SetArg::Original => false,
        SetArg::Reduced => true,
        SetArg::Auto => script.steps.iter().any(|s| matches!(s.rel, RelRef::Reduced(_))),
    };
    let rels = if reduced { RelationSet::reduced(script.n) } else { RelationSet::original(script.n) };
    Ok(match check_rewrite_script(&script, &rels) {
        ScriptCheck::Valid => {
            writeln!(out, "valid steps={}", script.steps.len())?;
            Status::Done
        }
        ScriptCheck::Invalid { step, reason } => {
            writeln!(out, "invalid step {step}: {reason}")?;
            Status::Failed
        }
    })
}
