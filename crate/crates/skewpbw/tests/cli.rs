//! End-to-end checks of the spbw binary: output shape, byte determinism and
//! exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn spbw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spbw"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn divide_diffusion_files() {
    let out = spbw(&[
        "divide",
        "--algebra",
        &fixture("diffusion.alg"),
        &fixture("e61_f.expr"),
        &fixture("e61_f1.expr"),
        &fixture("e61_f2.expr"),
        &fixture("e61_f3.expr"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("q1 = "));
    assert!(text.contains("\nh = "));
}

#[test]
fn divide_inline_expressions() {
    let out = spbw(&[
        "divide",
        "--algebra",
        &fixture("diffusion.alg"),
        "-e",
        "x2*D1^2",
        "-e",
        "x2*D1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "q1 = D1\nh = [0]\n");
}

#[test]
fn groebner_and_member_on_iterated() {
    let common = [
        "--algebra",
        &fixture("iterated.alg"),
        "--order",
        "gradlex",
        "--module-order",
        "top",
    ];
    let mut args = vec!["groebner"];
    args.extend_from_slice(&common);
    let files = [
        fixture("e62_f1.expr"),
        fixture("e62_f2.expr"),
        fixture("e62_f3.expr"),
        fixture("e62_f4.expr"),
    ];
    for f in &files {
        args.push(f);
    }
    let out = spbw(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 8, "published run ends with eight elements");

    let mut args = vec!["member"];
    args.extend_from_slice(&common);
    args.push(&files[0]); // f1 is trivially a member
    for f in &files {
        args.push(f);
    }
    let out = spbw(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\nmember\n"));
    assert!(text.contains("q1 = 1\n"));
}

#[test]
fn member_of_printed_v() {
    let out = spbw(&[
        "member",
        "--algebra",
        &fixture("iterated.alg"),
        &fixture("e62_v.expr"),
        &fixture("e62_f1.expr"),
        &fixture("e62_f2.expr"),
        &fixture("e62_f3.expr"),
        &fixture("e62_f4.expr"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\nmember\n"));
}

#[test]
fn not_member_with_remainder() {
    let out = spbw(&[
        "member",
        "--algebra",
        &fixture("iterated.alg"),
        "-e",
        "[1,0,0,0]",
        "-e",
        "[x,0,0,0]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("not member"));
    assert!(text.contains("h = [1, 0, 0, 0]"));
}

#[test]
fn output_is_byte_deterministic() {
    let run = || {
        spbw(&[
            "groebner",
            "--algebra",
            &fixture("iterated.alg"),
            &fixture("e62_f1.expr"),
            &fixture("e62_f2.expr"),
            &fixture("e62_f3.expr"),
            &fixture("e62_f4.expr"),
        ])
    };
    let a = run();
    let b = run();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn parse_error_exits_2() {
    let out = spbw(&[
        "divide",
        "--algebra",
        &fixture("diffusion.alg"),
        "-e",
        "x2*D1 +",
        "-e",
        "D1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_symbol_exits_2() {
    let out = spbw(&[
        "divide",
        "--algebra",
        &fixture("diffusion.alg"),
        "-e",
        "q*D1",
        "-e",
        "D1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subset_cap_exits_3() {
    let out = spbw(&[
        "groebner",
        "--algebra",
        &fixture("iterated.alg"),
        "--max-subset",
        "1",
        &fixture("e62_f1.expr"),
        &fixture("e62_f2.expr"),
        &fixture("e62_f3.expr"),
        &fixture("e62_f4.expr"),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_algebra_file_exits_2() {
    let out = spbw(&["divide", "--algebra", "/nonexistent.alg", "-e", "1", "-e", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gradlexrev_and_toprev_accepted() {
    let out = spbw(&[
        "divide",
        "--algebra",
        &fixture("iterated.alg"),
        "--order",
        "GRADLEXREV",
        "--module-order",
        "TOPREV",
        "-e",
        "[x*y, 0, 0, 0]",
        "-e",
        "[x, 0, 0, 0]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "q1 = y\nh = [0, 0, 0, 0]\n");
}
