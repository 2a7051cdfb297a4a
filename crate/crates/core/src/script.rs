//! Rewrite scripts: a start word, an end word and the relation steps between them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relations::{Dir, RelRef, RelationSet, RewriteStep};
use crate::word::{BraidWord, WordError};

#[derive(Debug, Error)]
pub enum ScriptError {
    #[error("malformed script JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// An explicit derivation `start = ... = end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteScript {
    pub n: usize,
    pub start: BraidWord,
    pub end: BraidWord,
    pub steps: Vec<RewriteStep>,
}

/// Outcome of replaying a script. `step` equal to the step count means the replay
/// succeeded but did not land on `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScriptCheck {
    Valid,
    Invalid { step: usize, reason: String },
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    rel: String,
    params: Vec<i32>,
    pos: usize,
    dir: Dir,
}

#[derive(Serialize, Deserialize)]
struct ScriptJson {
    n: usize,
    start: String,
    end: String,
    steps: Vec<StepJson>,
}

impl RewriteScript {
    /// The empty derivation of `w` from itself.
    pub fn trivial(w: &BraidWord) -> RewriteScript {
        RewriteScript { n: w.n(), start: w.clone(), end: w.clone(), steps: Vec::new() }
    }

    /// JSON with one step per line, so bundled scripts diff and review well.
    pub fn to_json(&self) -> String {
        let quote = |s: String| serde_json::to_string(&s).expect("string serializes");
        let steps: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                let step = StepJson {
                    rel: s.rel.family_name().to_string(),
                    params: s.rel.params().to_vec(),
                    pos: s.pos,
                    dir: s.dir,
                };
                format!("    {}", serde_json::to_string(&step).expect("step serializes"))
            })
            .collect();
        let body = if steps.is_empty() { String::new() } else { format!("\n{}\n  ", steps.join(",\n")) };
        format!(
            "{{\n  \"n\": {},\n  \"start\": {},\n  \"end\": {},\n  \"steps\": [{body}]\n}}",
            self.n,
            quote(self.start.to_string()),
            quote(self.end.to_string()),
        )
    }

    /// Parses a script. Unknown relation names survive parsing and are reported by
    /// [`check_rewrite_script`] at the offending step.
    pub fn from_json(text: &str) -> Result<RewriteScript, ScriptError> {
        let json: ScriptJson = serde_json::from_str(text)?;
        let start = BraidWord::parse(&json.start, json.n)?;
        let end = BraidWord::parse(&json.end, json.n)?;
        let steps = json
            .steps
            .into_iter()
            .map(|s| {
                let rel = RelRef::from_parts(&s.rel, s.params.clone()).unwrap_or_else(|_| {
                    RelRef::Unknown(s.rel.clone(), s.params.clone())
                });
                RewriteStep { rel, pos: s.pos, dir: s.dir }
            })
            .collect();
        Ok(RewriteScript { n: json.n, start, end, steps })
    }

    /// Every intermediate word, starting with `start`. Stops at the first failing step.
    pub fn words(&self) -> Vec<BraidWord> {
        let mut out = vec![self.start.clone()];
        for step in &self.steps {
            match step.apply(out.last().unwrap()) {
                Ok(next) => out.push(next),
                Err(_) => break,
            }
        }
        out
    }

    /// The same derivation read backwards.
    pub fn reversed(&self) -> RewriteScript {
        RewriteScript {
            n: self.n,
            start: self.end.clone(),
            end: self.start.clone(),
            steps: self.steps.iter().rev().map(RewriteStep::inverse).collect(),
        }
    }

    /// The same derivation viewed in VSB_{n+by}.
    pub fn widened(&self, by: usize) -> RewriteScript {
        RewriteScript {
            n: self.n + by,
            start: self.start.widened(by),
            end: self.end.widened(by),
            steps: self.steps.clone(),
        }
    }

    /// Concatenates two derivations that meet in the middle.
    pub fn then(mut self, next: RewriteScript) -> RewriteScript {
        assert_eq!(self.end, next.start, "scripts do not meet");
        self.steps.extend(next.steps);
        self.end = next.end;
        self
    }
}

/// Replays `script`, allowing only relations from `rels`.
pub fn check_rewrite_script(script: &RewriteScript, rels: &RelationSet) -> ScriptCheck {
    if script.start.n() != script.n || script.end.n() != script.n || rels.n() != script.n {
        return ScriptCheck::Invalid { step: 0, reason: "strand count mismatch".to_string() };
    }
    let mut word = script.start.clone();
    for (k, step) in script.steps.iter().enumerate() {
        if rels.index_of(&step.rel).is_none() {
            return ScriptCheck::Invalid {
                step: k,
                reason: format!("{} is not in the relation set", step.rel),
            };
        }
        match step.apply(&word) {
            Ok(next) => word = next,
            Err(e) => return ScriptCheck::Invalid { step: k, reason: e.to_string() },
        }
    }
    if word != script.end {
        return ScriptCheck::Invalid {
            step: script.steps.len(),
            reason: format!("replay ends at `{word}`, not `{}`", script.end),
        };
    }
    ScriptCheck::Valid
}

/// Records steps while applying them to a working word held as letter codes.
pub(crate) struct ScriptBuilder<'a> {
    rels: &'a RelationSet,
    pub word: Vec<u8>,
    pub steps: Vec<RewriteStep>,
}

impl<'a> ScriptBuilder<'a> {
    pub fn new(rels: &'a RelationSet, word: Vec<u8>) -> ScriptBuilder<'a> {
        ScriptBuilder { rels, word, steps: Vec::new() }
    }

    pub fn apply(&mut self, k: usize, dir: Dir, pos: usize) {
        self.word = self
            .rels
            .apply_codes(&self.word, k, dir, pos)
            .unwrap_or_else(|| panic!("internal rewrite {:?} {dir} at {pos} does not match", self.rels.rules()[k].id));
        self.steps.push(RewriteStep { rel: self.rels.rules()[k].id.clone(), pos, dir });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{Family, RelationId};

    fn r3_script() -> RewriteScript {
        let start = BraidWord::parse("s1 s2 s1", 3).unwrap();
        let end = BraidWord::parse("s2 s1 s2", 3).unwrap();
        RewriteScript {
            n: 3,
            start,
            end,
            steps: vec![RewriteStep {
                rel: RelationId::new(Family::R3, vec![1, 2]).into(),
                pos: 0,
                dir: Dir::L2R,
            }],
        }
    }

    #[test]
    fn valid_script_checks() {
        let rels = RelationSet::original(3);
        assert_eq!(check_rewrite_script(&r3_script(), &rels), ScriptCheck::Valid);
        assert_eq!(check_rewrite_script(&r3_script().reversed(), &rels), ScriptCheck::Valid);
    }

    #[test]
    fn wrong_end_is_reported_after_last_step() {
        let rels = RelationSet::original(3);
        let mut s = r3_script();
        s.end = BraidWord::parse("s1", 3).unwrap();
        assert!(matches!(check_rewrite_script(&s, &rels), ScriptCheck::Invalid { step: 1, .. }));
    }

    #[test]
    fn foreign_relation_is_rejected() {
        let rels = RelationSet::reduced(3);
        assert!(matches!(check_rewrite_script(&r3_script(), &rels), ScriptCheck::Invalid { step: 0, .. }));
    }

    #[test]
    fn json_round_trip() {
        let s = r3_script();
        let text = s.to_json();
        assert!(text.contains(r#"{"rel":"R3","params":[1,2],"pos":0,"dir":"L2R"}"#));
        assert_eq!(RewriteScript::from_json(&text).unwrap(), s);
    }

    #[test]
    fn unknown_family_fails_at_its_step() {
        let text = r#"{"n":3,"start":"s1","end":"s1","steps":[{"rel":"Bogus","params":[],"pos":0,"dir":"L2R"}]}"#;
        let s = RewriteScript::from_json(text).unwrap();
        let rels = RelationSet::original(3);
        assert!(matches!(check_rewrite_script(&s, &rels), ScriptCheck::Invalid { step: 0, .. }));
    }
}
