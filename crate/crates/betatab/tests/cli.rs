use std::process::Command;

fn betatab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_betatab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn list_is_sorted_and_complete() {
    let (code, out, _) = betatab(&["list"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = out
        .lines()
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(ids.len(), 80);
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(out, betatab(&["list"]).1);
}

#[test]
fn show_prints_parameters_and_citation() {
    let (code, out, _) = betatab(&["show", "3.457.3"]);
    assert_eq!(code, 0);
    assert!(out.contains("GR 3.457.3"));
    assert!(out
        .lines()
        .any(|l| l.trim_start().starts_with("a ") && l.contains("(0.3, 3]")));
    assert!(out.lines().any(|l| l.trim_start().starts_with("mu ")));
}

#[test]
fn show_unknown_id_suggests_neighbours() {
    let (code, _, err) = betatab(&["show", "3.248.9"]);
    assert_eq!(code, 2);
    assert!(err.contains("3.248.3"), "{err}");
}

#[test]
fn verify_single_entry() {
    let (code, out, _) = betatab(&[
        "verify",
        "--id",
        "3.248.3",
        "--samples",
        "5",
        "--seed",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[..5]
            .iter()
            .filter(|l| l.contains(r#""status":"pass""#))
            .count(),
        5
    );
}

#[test]
fn bad_flags_exit_with_usage_code() {
    for args in [
        &["verify", "--rtol", "-1"][..],
        &["verify", "--atol", "0"],
        &["verify", "--samples", "0"],
        &["verify", "--jobs", "0"],
        &["verify", "--id", "bogus"],
        &["verify", "--format", "xml"],
        &["verify", "--frobnicate"],
        &["frobnicate"],
        &[],
    ] {
        let (code, _, err) = betatab(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn report_and_export_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    let (code, out, _) = betatab(&[
        "verify",
        "--id",
        "3.217",
        "--id",
        "3.218",
        "--report",
        report.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("report written"));
    assert_eq!(
        std::fs::read_to_string(&report).unwrap().lines().count(),
        41
    );

    let catalog = dir.path().join("catalog.json");
    assert_eq!(
        betatab(&["export", "--out", catalog.to_str().unwrap()]).0,
        0
    );
    assert!(std::fs::metadata(&catalog).unwrap().len() > 1000);

    let missing = dir.path().join("no/such/dir/x.json");
    assert_eq!(
        betatab(&["export", "--out", missing.to_str().unwrap()]).0,
        2
    );
}

#[test]
fn text_report_is_a_table() {
    let (code, out, _) = betatab(&["verify", "--id", "3.191.3", "--id", "eq-11.5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("entry"));
    assert!(lines[1].starts_with("3.191.3") && lines[1].ends_with("ok"));
    assert!(lines[2].starts_with("eq-11.5"));
    assert!(lines[3].ends_with("PASS"));
}
