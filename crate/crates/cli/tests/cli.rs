use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use uzlemma::{Lemmatizer, OutputRecord};

fn data(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn sample() -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/determinism_1000.txt");
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uzlemma"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn lemmatize(extra: &[&str], stdin: &[u8]) -> Output {
    let (w, a) = (data("words.tsv"), data("affixes.tsv"));
    let mut args = vec!["lemmatize", "--words", &w, "--affixes", &a];
    args.extend_from_slice(extra);
    run(&args, stdin)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn single_row_with_empty_trace_column() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("sample.txt");
    fs::write(&input, "O\u{2018}qigan.").unwrap();
    let out = lemmatize(
        &["--input", input.to_str().unwrap(), "--format", "tsv"],
        b"",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "O\u{2018}qigan\to\u{02BB}qimoq\tVERB\tresolved\t\n"
    );
    assert_eq!(stderr(&out).trim(), "tokens: 1, resolved: 1");
}

#[test]
fn reads_stdin_and_prints_traces() {
    let out = lemmatize(&["--trace"], "kitobimning xyzqwe".as_bytes());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "kitobimning\tkitob\tNOUN\tresolved\tning/GRAM;im/GRAM\nxyzqwe\txyzqwe\t-\tunresolved\t\n"
    );
    assert_eq!(stderr(&out).trim(), "tokens: 2, resolved: 1");
}

#[test]
fn empty_input_gives_no_records() {
    let out = lemmatize(&[], b"");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let out = lemmatize(&["--format", "json"], b"");
    assert_eq!(stdout(&out), "[]\n");
}

#[test]
fn tsv_and_json_carry_the_same_records() {
    let s = sample();
    let tsv = lemmatize(&["--input", &s, "--trace"], b"");
    let json = lemmatize(&["--input", &s, "--trace", "--format", "json"], b"");
    let from_tsv: Vec<OutputRecord> = stdout(&tsv)
        .lines()
        .map(|l| OutputRecord::from_tsv_row(l).unwrap())
        .collect();
    let from_json: Vec<OutputRecord> = serde_json::from_str(&stdout(&json)).unwrap();
    assert!(!from_tsv.is_empty());
    assert_eq!(from_tsv, from_json);
}

#[test]
fn library_records_match_cli_json() {
    let s = sample();
    let out = lemmatize(&["--input", &s, "--trace", "--format", "json"], b"");
    let cli: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let lz = Lemmatizer::from_paths(data("words.tsv"), data("affixes.tsv")).unwrap();
    let lib = serde_json::to_value(lz.records(&fs::read_to_string(&s).unwrap())).unwrap();
    assert_eq!(cli, lib);
}

#[test]
fn missing_words_file_names_path() {
    let a = data("affixes.tsv");
    let out = run(
        &[
            "lemmatize",
            "--words",
            "/no/such/words.tsv",
            "--affixes",
            &a,
        ],
        b"",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/no/such/words.tsv"));
    assert!(out.stdout.is_empty());
}

#[test]
fn corrupt_affix_row_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("affixes.tsv");
    fs::write(
        &bad,
        "# header\nok\tlar\tLEX\tSUF\tNOUN\t1\nbroken\tga\tGRAM\n",
    )
    .unwrap();
    let w = data("words.tsv");
    let out = run(
        &[
            "validate",
            "--words",
            &w,
            "--affixes",
            bad.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains(bad.to_str().unwrap()), "{err}");
}

#[test]
fn closed_class_with_affix_flag_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("words.tsv");
    fs::write(&words, "kitob\tNOUN\t1\nva\tCONJ\t1\n").unwrap();
    let a = data("affixes.tsv");
    let out = run(
        &[
            "validate",
            "--words",
            words.to_str().unwrap(),
            "--affixes",
            &a,
        ],
        b"",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(run(&["lemmatize", "--bogus"], b"").status.code(), Some(2));
    assert_eq!(lemmatize(&["--format", "xml"], b"").status.code(), Some(2));
    assert_eq!(run(&["lemmatize"], b"").status.code(), Some(2));
    assert_eq!(run(&[], b"").status.code(), Some(2));
}

#[test]
fn invalid_utf8_exits_3() {
    let out = lemmatize(&[], b"kitob \xff\xfe");
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("offset 6"), "{}", stderr(&out));
}

#[test]
fn validate_without_manifest_prints_counts() {
    let (w, a) = (data("words.tsv"), data("affixes.tsv"));
    let out = run(&["validate", "--words", &w, "--affixes", &a], b"");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.lines().any(|l| l == "affixes\tNOUN\tGRAM\t12 (23)"),
        "{text}"
    );
    assert!(text.lines().any(|l| l == "words\tCONJ\t5"), "{text}");
    assert!(!text.contains("manifest:"));
}

#[test]
fn validate_with_manifest_exits_4_on_seed() {
    let (w, a, m) = (
        data("words.tsv"),
        data("affixes.tsv"),
        data("reference_manifest.tsv"),
    );
    let out = run(
        &["validate", "--words", &w, "--affixes", &a, "--manifest", &m],
        b"",
    );
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out)
        .contains("VERB\tGRAM\texpected 35 (47)\tactual 10 (25)\tFAIL (deficit 25 (22))"));
}

#[test]
fn missing_manifest_exits_1() {
    let (w, a) = (data("words.tsv"), data("affixes.tsv"));
    let out = run(
        &[
            "validate",
            "--words",
            &w,
            "--affixes",
            &a,
            "--manifest",
            "/no/manifest.tsv",
        ],
        b"",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/no/manifest.tsv"));
}
