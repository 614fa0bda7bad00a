//! Running the binary and checking golden transcripts.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use surreal_nf::cli::split_words;

pub const BIN: &str = env!("CARGO_BIN_EXE_surreal");

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run(args: &[String], stdin: &str) -> (String, String, i32) {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

pub fn transcript(commands: &[String]) -> String {
    let mut text = String::new();
    for line in commands {
        let args = split_words(line).unwrap();
        let (out, err, code) = run(&args, "");
        text.push_str(&format!("> {line}\n{out}"));
        if code != 0 {
            assert_eq!(
                err.lines().count(),
                1,
                "one-line diagnostic for {line:?}: {err:?}"
            );
            text.push_str(&format!("! exit {code}: {}", err));
        } else {
            assert!(err.is_empty(), "no diagnostics on success for {line:?}");
        }
    }
    text
}

/// Compares with the stored transcript, or rewrites it when
/// `UPDATE_GOLDEN` is set.
pub fn matches_golden(path: &Path, actual: &str) -> bool {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(path, actual).unwrap();
        return true;
    }
    fs::read_to_string(path).is_ok_and(|expected| expected == actual)
}

/// Commands listed in a subcommand golden file.
pub fn golden_commands(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter_map(|l| l.strip_prefix("> "))
        .map(str::to_string)
        .collect()
}

/// The subcommand golden files, sorted by name.
pub fn subcommand_goldens() -> Vec<PathBuf> {
    let mut paths: Vec<PathBuf> = fs::read_dir(golden_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| {
            p.extension().is_some_and(|e| e == "golden") && p.file_stem().unwrap() != "repl"
        })
        .collect();
    paths.sort();
    paths
}

/// Runs `repl.in` through the REPL: standard output, then each error
/// line prefixed with `! `.
pub fn repl_transcript() -> (String, i32) {
    let input = fs::read_to_string(golden_dir().join("repl.in")).unwrap();
    let (out, err, code) = run(&["repl".to_string()], &input);
    let mut text = out;
    for line in err.lines() {
        text.push_str(&format!("! {line}\n"));
    }
    (text, code)
}
