//! Golden cases shared by the golden and acceptance targets.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub const CASES: &[(&str, &[&str])] = &[
    ("normalize_free_reduce", &["normalize", "-n", "2", "s1 S1 t1"]),
    ("normalize_compose_invert", &["normalize", "-n", "3", "s1 v2", "--then", "S2", "--invert"]),
    ("normalize_apply", &["normalize", "-n", "3", "s1 s2 s1", "--apply", "R3[1,2]@0", "--raw"]),
    ("normalize_apply_r2l", &["normalize", "-n", "3", "v2 t1 v2", "--apply", "VS3[1,2]@0", "--dir", "r2l", "--raw"]),
    ("normalize_bad_letter", &["normalize", "-n", "2", "s5"]),
    ("perm", &["perm", "-n", "4", "v1 s2 t3 S1"]),
    ("invariants", &["invariants", "data/two_circles.json"]),
    ("invariants_open", &["invariants", "data/open.json"]),
    ("close", &["close", "-n", "3", "s1 t2 v1"]),
    ("braid", &["braid", "data/two_circles.json"]),
    ("expand", &["expand", "-n", "4", "s3 t2 v1"]),
    ("equiv_found", &["equiv", "-n", "3", "t1 s2 s1", "s2 s1 t2"]),
    ("equiv_forbidden", &["equiv", "-n", "3", "v1 s2 s1", "s2 s1 v2", "--max-len", "9", "--max-states", "1000000"]),
    ("equiv_reduced", &["equiv", "-n", "3", "--reduced", "t2 s2", "s2 t2"]),
    ("equiv_list", &["equiv", "-n", "3", "--list-relations"]),
    ("equiv_list_reduced", &["equiv", "-n", "4", "--list-relations", "--reduced"]),
    ("equiv_neighbors", &["equiv", "-n", "3", "s1 s2 s1", "--neighbors", "--max-len", "4"]),
    ("markov_found", &["markov-equiv", "-n", "2", "s1", "-m", "1", "1"]),
    ("markov_obstructed", &["markov-equiv", "-n", "2", "t1", "-m", "1", "1"]),
    ("markov_apply", &["markov-equiv", "-n", "4", "s1 s2 t3 v2 S3", "--apply", "RsThreadRight[-1]"]),
    ("markov_apply_inverse", &["markov-equiv", "-n", "2", "s1 v1", "--apply", "ConjVirtual[1]", "--inverse"]),
    ("markov_neighbors", &["markov-equiv", "-n", "2", "s1", "--neighbors", "--max-len", "2"]),
    ("markov_left_shift", &["markov-equiv", "-n", "2", "s1 t1", "--left-shift"]),
    ("markov_embed_right", &["markov-equiv", "-n", "2", "s1 t1", "--embed-right"]),
    ("verify_all", &["verify-lemmas", "--all", "-n", "5"]),
    ("verify_one", &["verify-lemmas", "-n", "4", "--lemma", "lemma5", "--i", "2", "--j", "3"]),
    ("verify_search", &["verify-lemmas", "-n", "3", "--lemma", "lemma7", "--i", "2", "--mode", "search"]),
    ("verify_shift", &["verify-lemmas", "-n", "5", "--shift", "4", "1"]),
    ("check_script", &["check-script", "data/cancel.json"]),
    ("check_script_wrong_end", &["check-script", "data/wrong_end.json"]),
    ("check_trace", &["check-script", "data/destab.json"]),
    ("random_test", &["random-test", "--seed", "7"]),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn invoke(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_vsb"))
        .args(args)
        .current_dir(tests_dir())
        .stdin(Stdio::null())
        .output()
        .expect("vsb runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap()
    )
}

/// Runs every case twice, returning a description of each case whose runs differ or whose
/// output differs from its golden file. With `update` the files are rewritten instead.
pub fn check_goldens(update: bool) -> Vec<String> {
    let mut problems = Vec::new();
    for (name, args) in CASES {
        let first = invoke(args);
        if first != invoke(args) {
            problems.push(format!("{name}: two runs differ"));
            continue;
        }
        let path = tests_dir().join("golden").join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(expected) => problems.push(format!("{name}:\n--- expected\n{expected}--- got\n{first}")),
            Err(_) => problems.push(format!("{name}: missing {}", path.display())),
        }
    }
    problems
}
