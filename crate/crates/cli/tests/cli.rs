use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ncschur").chain(args.iter().copied());
    let code = ncschur_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn field<'a>(porcelain: &'a str, key: &str) -> &'a str {
    porcelain
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {porcelain}"))
}

#[test]
fn info_on_s3() {
    let (code, out, _) = run(&["info", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next(),
        Some("order=6 abelian=false classes=3 c=1/2")
    );
    let (_, p, _) = run(&["--porcelain", "info", "symmetric:3"]);
    assert_eq!(field(&p, "c"), "1/2");
    assert_eq!(field(&p, "c_decimal"), "0.500000");
}

#[test]
fn cover_check_on_alternating_split() {
    // A3 is the set of elements of order 1 or 3.
    let (_, p, _) = run(&["--porcelain", "schur", "S3"]);
    let a3 = field(&p, "colour.0").to_string();
    let rest = field(&p, "colour.1").to_string();
    let path = scratch("s3.cover", &format!("cover 2 6\n{a3}\n{rest}\n"));
    let (code, out, _) = run(&["cover-check", "S3", "--cover", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "avoids=true");

    let whole = scratch("s3_whole.cover", "cover 1 6\n0 1 2 3 4 5\n");
    let (code, out, _) = run(&[
        "--porcelain",
        "cover-check",
        "S3",
        "--cover",
        whole.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "avoids"), "false");
    assert_ne!(field(&out, "xy"), field(&out, "yx"));
}

#[test]
fn corners_on_empty_pairs() {
    let path = scratch("empty.pairs", "pairs 6\n");
    let (code, out, _) = run(&["corners", "S3", "--pairs", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("S=0/216 triangles=0 bijection=ok"));
}

#[test]
fn human_and_porcelain_agree_on_numbers() {
    let (_, human, _) = run(&["cover-build", "H3"]);
    let (_, p, _) = run(&["--porcelain", "cover-build", "H3"]);
    for key in ["kappa", "s", "H", "K", "R", "cover_size", "size_bound"] {
        let v = field(&p, key);
        assert!(
            human
                .lines()
                .any(|l| l.trim_start().starts_with(&format!("{key}:")) && l.ends_with(v)),
            "{key}={v} missing from human output"
        );
    }
}

#[test]
fn cover_build_writes_a_checkable_file() {
    let out_path = PathBuf::from(env!("CARGO_TARGET_TMPDIR"))
        .join("cli")
        .join("d4.cover");
    std::fs::create_dir_all(out_path.parent().unwrap()).unwrap();
    let (code, out, err) = run(&[
        "--porcelain",
        "cover-build",
        "D4",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(field(&out, "avoids"), "true");
    let (code, out, _) = run(&["cover-check", "D4", "--cover", out_path.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "avoids=true"));
    let (_, quads, _) = run(&[
        "--porcelain",
        "quads",
        "D4",
        "--cover",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(field(&quads, "witness"), "none");
}

#[test]
fn cover_build_accepts_explicit_parameters() {
    let (code, out, _) = run(&[
        "--porcelain",
        "cover-build",
        "S3",
        "--epsilon",
        "1/3",
        "--eta",
        "1/7",
        "--nu",
        "1/3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "epsilon"), "1/3");
    assert_eq!(field(&out, "eta"), "1/7");
    // epsilon above c(G) is a domain error
    let (code, _, err) = run(&["cover-build", "S3", "--epsilon", "3/4"]);
    assert_eq!(code, 1);
    assert!(
        err.contains("exceeds the commuting probability 1/2"),
        "{err}"
    );
}

#[test]
fn witness_transcript_fields() {
    let path = scratch("q8.cover", "cover 2 8\n0 1 2 3\n4 5 6 7\n");
    let (code, out, _) = run(&[
        "--porcelain",
        "witness",
        "Q8",
        "--cover",
        path.to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "densities"), "1/2,1/2");
    for key in [
        "r",
        "shifts",
        "S_measured",
        "Z_size",
        "chosen_class",
        "quad_lower_bound",
        "verified_quads",
    ] {
        field(&out, key);
    }
    let (code, _, err) = run(&[
        "witness",
        "Q8",
        "--cover",
        path.to_str().unwrap(),
        "--shifts",
        "annealing",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown shift strategy"));
}

#[test]
fn trend_table() {
    let (code, out, _) = run(&[
        "--porcelain",
        "trend",
        "--family",
        "dihedral",
        "--range",
        "3..5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "row.4"), "8,5/8,0.625000,2,11,1");
    assert_eq!(field(&out, "consistent"), "true");
    // Non-prime parameters are skipped in a span, rejected in a list.
    let (code, out, _) = run(&["--porcelain", "trend", "--family", "H", "--range", "3..4"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "skipped"), "4");
    let (code, _, _) = run(&["trend", "--family", "heisenberg", "--range", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["info"],
        &["info", "S3", "--bogus"],
        &["schur", "S3", "--kmax", "many"],
        &["cover-build", "S3", "--epsilon", "half"],
        &["trend", "--family", "dihedral", "--range", "9..3"],
        &["--jobs", "0", "info", "S3"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(
            err.contains("Usage") || err.contains("error"),
            "{args:?}: {err}"
        );
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("cover-build"));
}

#[test]
fn domain_errors_exit_one() {
    let (code, _, err) = run(&["schur", "C6"]);
    assert_eq!(code, 1);
    assert!(err.contains("Abelian"));
    let (code, _, err) = run(&["info", "X9"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown group family"));
    let (code, _, _) = run(&["info", "S:7"]);
    assert_eq!(code, 1);
}

#[test]
fn file_errors_carry_locations() {
    let bad = scratch("bad.pairs", "pairs 6\n0 1\n2 x\n");
    let (code, _, err) = run(&["corners", "S3", "--pairs", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(
        err.contains("bad.pairs") && err.contains("line 3, column 3"),
        "{err}"
    );

    let wrong = scratch("wrong.cover", "cover 1 8\n0 1 2 3 4 5 6 7\n");
    let (code, _, err) = run(&["cover-check", "S3", "--cover", wrong.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("expected 6, found 8"), "{err}");

    let (code, _, err) = run(&["quads", "S3", "--cover", "/nonexistent/c.txt"]);
    assert_eq!(code, 1);
    assert!(err.contains("/nonexistent/c.txt"));
}

#[test]
fn group_files_are_accepted() {
    let path = scratch(
        "c3.group",
        "# cyclic of order 3\ntable 3\n0 1 2\n1 2 0\n2 0 1\n",
    );
    let (code, out, _) = run(&["--porcelain", "info", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "abelian"), "true");
    let perm = scratch("s3.group", "perm 3\ngen (0 1)\ngen (0 1 2)\n");
    let (_, out, _) = run(&["info", perm.to_str().unwrap()]);
    assert!(out.starts_with("order=6 abelian=false classes=3 c=1/2"));
}

#[test]
fn catalog_lists_families() {
    let (code, out, _) = run(&["--porcelain", "catalog"]);
    assert_eq!(code, 0);
    for name in [
        "cyclic",
        "dihedral",
        "symmetric",
        "alternating",
        "quaternion8",
        "heisenberg",
    ] {
        field(&out, name);
    }
}
