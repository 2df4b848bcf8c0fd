use std::process::{Command, Output};

use sha2::{Digest, Sha256};

fn trunclat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trunclat"))
        .args(args)
        .env_remove("TRUNCLAT_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_examples() {
    let o = trunclat(&["eval", "|x - 1|", "--bind", r#"x={"1":"2/1"}"#, "--unitize"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"e":{},"lambda":"1/1"}"#);

    let o = trunclat(&["eval", "pos(x)", "--bind", r#"x={"1":"-1/1"}"#]);
    assert_eq!(
        (o.status.code(), stdout(&o).trim().to_string()),
        (Some(0), "{}".to_string())
    );

    let o = trunclat(&[
        "eval",
        "tr(x)",
        "--space",
        "finite_pointwise(2)",
        "--bind",
        r#"x=["3/1","1/2"]"#,
    ]);
    assert_eq!(stdout(&o).trim(), r#"["1/1","1/2"]"#);
}

#[test]
fn eval_errors_exit_2() {
    assert_eq!(trunclat(&["eval", "1"]).status.code(), Some(2));
    assert_eq!(trunclat(&["eval", "x +"]).status.code(), Some(2));
    assert_eq!(trunclat(&["eval", "y"]).status.code(), Some(2));
    assert_eq!(
        trunclat(&["eval", "tr(x)", "--bind", r#"x={"1":"-1/1"}"#])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        trunclat(&["eval", "x", "--bind", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_exit_codes() {
    let o = trunclat(&[
        "check",
        "--space",
        "identity_line",
        "--trunc",
        "identity",
        "--trials",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    let tau3 = table.lines().find(|l| l.starts_with("tau3")).unwrap();
    assert!(tau3.contains("REFUTED (EXPECTED_VIOLATION)"), "{tau3}");

    let o = trunclat(&[
        "check",
        "--space",
        "sparse_seq",
        "--trunc",
        "fixture_halving",
        "--trials",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(1));

    for bad in [
        vec![
            "check",
            "--space",
            "sparse_seq",
            "--trunc",
            r#"{"kind": "meet_with_unit"}"#,
        ],
        vec!["check", "--space", r#"{"space": "finite_pointwise"}"#],
        vec!["check", "--space", "hilbert"],
        vec!["check", "--trials", "0"],
        vec!["check", "--format", "xml"],
    ] {
        assert_eq!(trunclat(&bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn check_json_and_seed_env() {
    let args = [
        "check",
        "--space",
        "lex_plane",
        "--trials",
        "40",
        "--format",
        "json",
    ];
    let a = stdout(&trunclat(&[&args[..], &["--seed", "5"]].concat()));
    let b = Command::new(env!("CARGO_BIN_EXE_trunclat"))
        .args(args)
        .env("TRUNCLAT_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(a, stdout(&b));
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["seed"], 5);
        assert!(v["law_id"].is_string() && v["trials"].is_u64());
    }
    let arch: serde_json::Value = serde_json::from_str(
        a.lines()
            .find(|l| l.contains(r#""law_id":"archimedean""#))
            .unwrap(),
    )
    .unwrap();
    assert_eq!(arch["verdict"], "refuted");
    assert_eq!(arch["expected_violation"], true);
}

#[test]
fn check_with_assertion_file() {
    let dir = std::env::temp_dir().join(format!("trunclat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.law");
    std::fs::write(&good, "sample: positive\n|tr(x) - tr(y)| <= tr(|x - y|)\n").unwrap();
    let out = dir.join("out.jsonl");
    let o = trunclat(&[
        "check",
        "--trials",
        "30",
        "--assertions",
        good.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written
        .lines()
        .last()
        .unwrap()
        .contains(r#""law_id":"assertions""#));

    let bad = dir.join("bad.law");
    std::fs::write(&bad, "law: wrong\nsample: positive\ntr(x) == x\n").unwrap();
    let o = trunclat(&[
        "check",
        "--trials",
        "30",
        "--assertions",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));

    let unit = dir.join("unit.law");
    std::fs::write(&unit, "sample: positive\ntr(x) <= 1\n").unwrap();
    let o = trunclat(&[
        "check",
        "--trials",
        "30",
        "--assertions",
        unit.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = trunclat(&[
        "check",
        "--trials",
        "30",
        "--assertions",
        unit.to_str().unwrap(),
        "--unitize",
    ]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn repro_unknown_id() {
    assert_eq!(trunclat(&["repro", "nope"]).status.code(), Some(2));
}

/// Every reproduction listed in the README exits 0 and prints exactly the output whose
/// checksum the README records.
#[test]
fn repro_outputs_match_readme_checksums() {
    let readme = include_str!("../../../README.md");
    let listed = trunclat(&["repro", "list"]);
    let ids: Vec<String> = stdout(&listed)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(ids.len(), 6);
    for id in ids {
        let row = readme
            .lines()
            .find(|l| l.starts_with(&format!("| `{id}`")))
            .unwrap_or_else(|| panic!("{id} missing from README"));
        let o = trunclat(&["repro", &id]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let digest = format!("{:x}", Sha256::digest(&o.stdout));
        assert!(
            row.contains(&digest),
            "{id}: output sha256 {digest} not in README row {row}"
        );
    }
}
