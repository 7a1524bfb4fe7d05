use betatab::report::Report;
use betatab::verify::{verify_all, RunConfig};
use serde_json::Value;

const OUTCOME_FIELDS: [&str; 10] = [
    "entry_id",
    "sample_index",
    "params",
    "numeric",
    "closed",
    "abs_err",
    "rel_err",
    "evaluations",
    "status",
    "elapsed",
];
const SUMMARY_FIELDS: [&str; 7] = [
    "entries",
    "outcomes",
    "passes",
    "failures",
    "worst_rel_err",
    "wall_ms",
    "verdict",
];

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
    k.sort();
    k
}

fn sorted(fields: &[&str]) -> Vec<String> {
    let mut k: Vec<String> = fields.iter().map(|s| s.to_string()).collect();
    k.sort();
    k
}

#[test]
fn json_lines_match_the_schema() {
    let cfg = RunConfig {
        samples_per_entry: 3,
        entry_filter: Some(vec!["3.251.5".into(), "eq-4.10".into()]),
        ..RunConfig::default()
    };
    let report = Report::new(verify_all(&cfg), None);
    let mut buf = Vec::new();
    report.write_json_lines(&mut buf).unwrap();
    let lines: Vec<Value> = String::from_utf8(buf)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 7);
    for o in &lines[..6] {
        assert_eq!(keys(o), sorted(&OUTCOME_FIELDS));
        assert!(o["elapsed"].is_null());
        assert_eq!(o["status"], "pass");
        let abs = o["abs_err"].as_f64().unwrap();
        let closed = o["closed"].as_f64().unwrap();
        let rel = o["rel_err"].as_f64().unwrap();
        assert!((rel - abs / closed.abs().max(1e-300)).abs() <= 1e-15 * rel.max(1e-300));
    }
    // integer parameters stay integers, in declaration order
    let first = lines[0]["params"].as_object().unwrap();
    assert_eq!(first.keys().collect::<Vec<_>>(), ["m", "n", "u", "v"]);
    assert!(first["m"].is_i64() && first["u"].is_f64());
    let summary = &lines[6];
    assert_eq!(keys(summary), sorted(&SUMMARY_FIELDS));
    assert_eq!(summary["outcomes"], 6);
    assert_eq!(summary["entries"], 2);
    assert_eq!(summary["verdict"], "pass");
    assert!(summary["wall_ms"].is_null());
}

#[test]
fn catalog_json_schema() {
    let doc: Value = serde_json::from_str(&betatab::export::catalog_json()).unwrap();
    let entries = doc.as_array().unwrap();
    assert_eq!(entries.len(), 80);
    for e in entries {
        assert_eq!(
            keys(e),
            sorted(&[
                "id",
                "group",
                "citation",
                "params",
                "relations",
                "tolerance_class"
            ])
        );
        for p in e["params"].as_array().unwrap() {
            assert_eq!(keys(p), sorted(&["name", "kind", "lo", "hi"]));
            match p["kind"].as_str().unwrap() {
                "integer" => assert!(p["lo"].is_i64() && p["hi"].is_i64()),
                "real" => assert!(p["lo"].is_f64() && p["hi"].is_f64()),
                k => panic!("kind {k}"),
            }
        }
        assert!(["standard", "principal_value", "combined"]
            .contains(&e["tolerance_class"].as_str().unwrap()));
    }
    let pv = entries.iter().find(|e| e["id"] == "3.313.1").unwrap();
    assert_eq!(pv["tolerance_class"], "principal_value");
    assert_eq!(pv["group"], "C");
}

#[test]
fn totals_add_up() {
    let cfg = RunConfig {
        samples_per_entry: 2,
        ..RunConfig::default()
    };
    let report = Report::new(verify_all(&cfg), None);
    assert_eq!(report.summary.outcomes, 160);
    assert_eq!(report.summary.passes + report.summary.failures, 160);
    assert_eq!(report.summary.entries, 80);
}
