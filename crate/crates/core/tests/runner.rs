use cubic_chow::verify::{
    emit, exit_code, registry, run, run_serial, CheckResult, Format, RunConfig, Status, Suite,
};
use proptest::prelude::*;

fn find<'a>(rs: &'a [CheckResult], id: &str, n: u32) -> &'a CheckResult {
    rs.iter()
        .find(|r| r.check_id == id && r.n == n)
        .unwrap_or_else(|| panic!("{id} at n={n} missing"))
}

fn without_timing(mut rs: Vec<CheckResult>) -> Vec<CheckResult> {
    for r in &mut rs {
        r.elapsed_ms = 0;
    }
    rs
}

#[test]
fn lines_on_cubic_surface() {
    let rs = run(&RunConfig::new(2, 2, vec![Suite::Fano]).unwrap());
    let r = find(&rs, "fano.lines_count", 2);
    assert_eq!(
        (r.status, r.computed.as_str(), r.expected.as_str()),
        (Status::Pass, "27", "27")
    );
}

#[test]
fn first_betti_number_of_fano_surface() {
    let rs = run(&RunConfig::new(3, 3, vec![Suite::Hodge]).unwrap());
    let r = find(&rs, "hodge.b1_fano", 3);
    assert_eq!(
        (r.status, r.computed.as_str(), r.expected.as_str()),
        (Status::Pass, "10", "10")
    );
}

#[test]
fn out_of_range_checks_are_skipped_with_reason() {
    let rs = run(&RunConfig::new(1, 2, vec![Suite::Fano]).unwrap());
    let r = find(&rs, "fano.extra_relation", 2);
    assert_eq!(r.status, Status::Skipped);
    assert!(r.expected.contains("n >= 3"));
    assert_eq!(exit_code(&rs), 0);
}

#[test]
fn sorted_and_deterministic() {
    let config = RunConfig::new(1, 5, Suite::ALL.to_vec()).unwrap();
    let a = without_timing(run(&config));
    let b = without_timing(run(&config));
    assert_eq!(emit(&a, Format::Json), emit(&b, Format::Json));
    assert_eq!(emit(&a, Format::Text), emit(&b, Format::Text));
    let keys: Vec<_> = a.iter().map(|r| (r.check_id.clone(), r.n)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(a.len(), registry().len() * 5);
}

#[test]
fn parallel_matches_serial() {
    let config = RunConfig::new(2, 4, Suite::ALL.to_vec()).unwrap();
    assert_eq!(
        without_timing(run(&config)),
        without_timing(run_serial(&config))
    );
}

#[test]
fn text_report_is_aligned() {
    let rs = run(&RunConfig::new(2, 3, vec![Suite::Hodge]).unwrap());
    let text = emit(&rs, Format::Text);
    let lines: Vec<&str> = text.lines().collect();
    let status_col = lines[0].find("status").unwrap();
    for line in &lines[1..lines.len() - 1] {
        let rest = &line[status_col..];
        assert!(
            rest.starts_with("pass") || rest.starts_with("skipped"),
            "{line}"
        );
    }
    assert!(lines.last().unwrap().ends_with("skipped"));
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Pass),
        Just(Status::Fail),
        Just(Status::Skipped)
    ]
}

proptest! {
    #[test]
    fn json_round_trip(rows in prop::collection::vec(
        ("[a-z]{1,8}\\.[a-z_]{1,12}", 1u32..20, status(), "\\PC{0,20}", "\\PC{0,20}", any::<u64>()),
        0..8,
    )) {
        let rs: Vec<CheckResult> = rows
            .into_iter()
            .map(|(check_id, n, status, computed, expected, elapsed_ms)| CheckResult {
                check_id, n, status, computed, expected, elapsed_ms,
            })
            .collect();
        let back: Vec<CheckResult> = serde_json::from_str(&emit(&rs, Format::Json)).unwrap();
        prop_assert_eq!(back, rs);
    }

    #[test]
    fn exit_code_tracks_failures(statuses in prop::collection::vec(status(), 0..10)) {
        let rs: Vec<CheckResult> = statuses
            .iter()
            .map(|&status| CheckResult {
                check_id: "x.y".into(), n: 1, status, computed: String::new(), expected: String::new(), elapsed_ms: 0,
            })
            .collect();
        prop_assert_eq!(exit_code(&rs), i32::from(statuses.contains(&Status::Fail)));
    }
}
