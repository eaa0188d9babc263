use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = spindle_cli::run(
        std::iter::once("spindle").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn g2_dynkin_text() {
    let (code, out, _) = run(&[
        "dynkin", "--type", "G", "--rank", "2", "--weight", "1,0", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 + q + q^2 + q^3 + q^4 + q^5 + q^6\n");
}

#[test]
fn trivial_dynkin_json() {
    let (code, out, _) = run(&[
        "dynkin", "--type", "A", "--rank", "1", "--weight", "0", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"variable":"q","coefficients":["1"]}"#);
}

#[test]
fn sp6_f_lambda() {
    let (code, out, _) = run(&[
        "f-lambda", "--type", "C", "--rank", "3", "--weight", "0,1,0", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let coeffs: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "1", "2", "2", "3", "2", "3", "1", "1"]);
}

#[test]
fn factored_line_for_table_rows() {
    let (_, out, _) = run(&[
        "dynkin",
        "--type",
        "E",
        "--rank",
        "7",
        "--weight",
        "0,0,0,0,0,0,1",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("= (1 + q^5)(1 + q^9)"), "{}", lines[1]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["dynkin", "--type", "Q", "--rank", "2", "--weight", "1,0"]).0,
        2
    );
    assert_eq!(
        run(&["dynkin", "--type", "A", "--rank", "2", "--weight", "1"]).0,
        2
    );
    assert_eq!(
        run(&["jump", "--type", "A", "--rank", "1", "--weight", "1"]).0,
        2
    );
    assert_eq!(run(&["verify", "no-such-suite"]).0, 2);
    let (code, _, err) = run(&[
        "f-lambda",
        "--type",
        "E",
        "--rank",
        "8",
        "--weight",
        "1,0,0,0,0,0,0,0",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("--max-weyl-order"), "{err}");
    let (code, _, err) = run(&["end-alg-a", "--n", "3", "--kind", "sym:6"]);
    assert_eq!(code, 3);
    assert!(err.contains("--max-matrix-dim"), "{err}");
}

#[test]
fn deterministic_output() {
    let args = [
        "character",
        "--type",
        "B",
        "--rank",
        "3",
        "--weight",
        "1,0,1",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn jump_routes_agree() {
    let weyl = run(&["jump", "--type", "A", "--rank", "2", "--weight", "3,0"]).1;
    let explicit = run(&[
        "jump",
        "--type",
        "A",
        "--rank",
        "2",
        "--weight",
        "3,0",
        "--explicit",
    ])
    .1;
    assert_eq!(weyl, "q^3\n");
    assert_eq!(weyl, explicit);
    let (_, end, _) = run(&[
        "jump", "--type", "A", "--rank", "1", "--weight", "1", "--mu", "1",
    ]);
    assert_eq!(end, "1 + q\n");
}

#[test]
fn verify_suites_pass() {
    let (code, out, _) = run(&[
        "verify",
        "wmf-iff",
        "--max-rank",
        "3",
        "--height-bound",
        "6",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("F_λ = D_λ iff V_λ is wmf"));
    let (code, out, _) = run(&["verify", "endalg", "table1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("== endalg: 8 checks, 0 failed"));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for args in [
        &[
            "character",
            "--type",
            "E",
            "--rank",
            "7",
            "--weight",
            "0,0,0,0,0,0,1",
            "--format",
            "json",
        ][..],
        &[
            "poincare-cg",
            "--type",
            "C",
            "--rank",
            "3",
            "--weight",
            "0,1,0",
        ][..],
        &[
            "tensor-square",
            "--type",
            "G",
            "--rank",
            "2",
            "--weight",
            "1,0",
            "--format",
            "csv",
        ][..],
    ] {
        let plain = run(args).1;
        let mut with: Vec<&str> = args.to_vec();
        with.extend(["--cache-dir", d]);
        let first = run(&with).1;
        let second = run(&with).1;
        assert_eq!(plain, first);
        assert_eq!(plain, second);
    }
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 3);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "dynkin",
        "--type",
        "B",
        "--rank",
        "3",
        "--weight",
        "0,0,1",
        "--cache-dir",
        d,
    ];
    let first = run(&args).1;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    assert_eq!(run(&args).1, first);
}

#[test]
fn binary_reads_cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_spindle"))
        .args(["t-poly", "--type", "A", "--rank", "2", "--weight", "0,0"])
        .env("SPINDLE_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1 + 2q + 2q^2 + q^3\n= (1 + q)(1 + q + q^2)\n"
    );
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn binary_exit_code_on_resource_budget() {
    let out = Command::new(env!("CARGO_BIN_EXE_spindle"))
        .args([
            "character",
            "--type",
            "A",
            "--rank",
            "3",
            "--weight",
            "5,5,5",
            "--max-dimension",
            "100",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
