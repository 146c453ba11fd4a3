use std::io::Write;
use std::process::{Command, Output, Stdio};

fn elena(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_elena"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn count_examples() {
    for (args, expected) in [
        (["--family", "B", "--length", "6", "--end", "0"], "13\n"),
        (["--family", "A", "--length", "2", "--end", "2"], "1\n"),
        (["--family", "A", "--length", "5", "--end", "0"], "0\n"),
        (["--family", "B", "--length", "2", "--end", "-2"], "1\n"),
    ] {
        let mut all = vec!["count"];
        all.extend(args);
        let out = elena(&all, "");
        assert!(out.status.success());
        assert_eq!(stdout(&out), expected, "{args:?}");
    }
    for method in ["brute-force", "formula", "transfer-matrix"] {
        let out = elena(
            &[
                "count", "--family", "B", "--length", "6", "--end", "0", "--method", method,
            ],
            "",
        );
        assert_eq!(stdout(&out), "13\n");
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = elena(
        &["count", "--family", "C", "--length", "2", "--end", "0"],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = elena(
        &["count", "--family", "A", "--length", "2", "--end", "7"],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
    let out = elena(&["frobnicate"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_in_canonical_order() {
    let out = elena(
        &["enumerate", "--family", "B", "--length", "4", "--end", "0"],
        "",
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "UDUD\nUDDU\nDUUD\nDUDU\nDDUU\n");
}

#[test]
fn convert_examples() {
    let out = elena(&["convert", "--from", "bpath", "--to", "apath"], "DU\n");
    assert_eq!(stdout(&out), "UU\n# end 2\n");
    let out = elena(
        &["convert", "--from", "elena", "--to", "tree"],
        "a p3 a p1 p1 p4 a a p2 a\n",
    );
    assert_eq!(stdout(&out), "(((()()))(()()(()()()))()((())))\n");
    let out = elena(&["convert", "--from", "tree", "--to", "elena"], "(())\n");
    assert_eq!(stdout(&out), "a a\n");
}

#[test]
fn convert_errors_exit_one_with_stage() {
    let out = elena(&["convert", "--from", "bpath", "--to", "elena"], "UU\n");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse bpath"), "{err}");
    let out = elena(
        &["convert", "--from", "tree", "--to", "apath"],
        "((((()))))\n",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("glove"));
}

#[test]
fn convert_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("words.txt");
    std::fs::write(&file, "a a\na p1 a\n").unwrap();
    let out = elena(
        &[
            "convert",
            "--from",
            "elena",
            "--to",
            "bpath",
            "--in",
            file.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(stdout(&out), "\nDU\n");
}

#[test]
fn round_trip_through_every_representation() {
    let family = elena(
        &["enumerate", "--family", "B", "--length", "8", "--end", "0"],
        "",
    );
    let original = stdout(&family).to_string();
    let mut text = original.clone();
    for (from, to) in [
        ("bpath", "elena"),
        ("elena", "tree"),
        ("tree", "apath"),
        ("apath", "bpath"),
    ] {
        let out = elena(&["convert", "--from", from, "--to", to], &text);
        assert!(out.status.success(), "{from} -> {to}");
        text = stdout(&out).to_string();
    }
    assert_eq!(text, original);

    let odd = elena(
        &["enumerate", "--family", "B", "--length", "7", "--end", "-1"],
        "",
    );
    let original = stdout(&odd).to_string();
    let a = elena(&["convert", "--from", "bpath", "--to", "apath"], &original);
    let back = elena(&["convert", "--from", "apath", "--to", "bpath"], stdout(&a));
    assert_eq!(stdout(&back), original);
}

#[test]
fn verify_exit_status_and_stable_output() {
    let out = elena(&["verify", "--max-length", "12", "--no-timing"], "");
    assert_eq!(out.status.code(), Some(0));
    let again = elena(&["verify", "--max-length", "12", "--no-timing"], "");
    assert_eq!(out.stdout, again.stdout);
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().ends_with(", 0 failed"));
    assert!(text.lines().next().unwrap().starts_with("{\"claim\""));
    let timed = elena(&["verify", "--max-length", "2"], "");
    assert!(stdout(&timed).contains("# elapsed"));
}

#[test]
fn render_chevron() {
    let out = elena(&["render", "--kind", "path"], "UD\n");
    assert_eq!(stdout(&out), "1 |/\\\n0 |\n");
    let out = elena(&["render", "--kind", "path", "--band", "B"], "DU\n");
    assert_eq!(stdout(&out), " 0 |\\/\n-1 |\n");
    let out = elena(&["render", "--kind", "tree"], "(()())\n");
    assert_eq!(stdout(&out), "o\n  o\n  o\n");
    let out = elena(&["render", "--kind", "elena"], "a p2 a\n");
    assert_eq!(stdout(&out), "a\n  p2 o-o\na\n");
}
