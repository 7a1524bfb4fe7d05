use betatab::report::Report;
use betatab::verify::{cross_check_consistency, verify_all, RunConfig};

fn report_bytes(cfg: &RunConfig) -> Vec<u8> {
    let mut outcomes = verify_all(cfg);
    outcomes.extend(cross_check_consistency(cfg));
    let mut buf = Vec::new();
    Report::new(outcomes, None)
        .write_json_lines(&mut buf)
        .unwrap();
    buf
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let base = RunConfig {
        samples_per_entry: 3,
        seed: 11,
        ..RunConfig::default()
    };
    let one = report_bytes(&RunConfig {
        parallelism: 1,
        ..base.clone()
    });
    let four = report_bytes(&RunConfig {
        parallelism: 4,
        ..base.clone()
    });
    assert_eq!(one, four);
    assert_eq!(
        one,
        report_bytes(&RunConfig {
            parallelism: 1,
            ..base
        })
    );
}

#[test]
fn seeds_change_the_samples() {
    let cfg = |seed| RunConfig {
        samples_per_entry: 1,
        seed,
        entry_filter: Some(vec!["3.191.3".into()]),
        ..RunConfig::default()
    };
    assert_ne!(report_bytes(&cfg(1)), report_bytes(&cfg(2)));
}
