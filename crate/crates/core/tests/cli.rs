mod common;

use common::run;
use dioph11::cli::{EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use dioph11::family::Certification;
use dioph11::report::ReportResult;
use dioph11::{Nat, Solution};

fn strip_elapsed(stdout: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v.to_string()
}

#[test]
fn solve_reports_base_member() {
    let r = run(&["solve", "--m", "3", "--n", "3", "--a-max", "500"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    match r.record().result {
        ReportResult::Resolution { solutions, traces } => {
            assert_eq!(solutions, vec![Solution::new(9324u32, 443u32, 3, 3)]);
            assert!(!traces.is_empty());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn search_small_has_one_hit() {
    let r = run(&["search", "--y-max", "500", "--m-max", "3", "--n-max", "10"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(
        r.record().result,
        ReportResult::Solutions(vec![Solution::new(9324u32, 443u32, 3, 3)])
    );
}

#[test]
fn search_flags_off_family_solutions() {
    let r = run(&["search", "--y-max", "500", "--m-max", "7", "--n-max", "5"]);
    assert_eq!(r.code, EXIT_VIOLATION);
    assert!(r.stderr.contains("(5324, 363, 7, 3)"));
    // the record is still emitted
    assert_eq!(r.record().command, "search");
}

#[test]
fn certify_family_identify() {
    let r = run(&["certify", "--x", "4", "--y", "3", "--m", "1", "--n", "3"]);
    assert_eq!(r.record().result, ReportResult::Certification(Certification::CertifiedBaseCase));
    let r = run(&["family", "--M", "1"]);
    assert_eq!(
        r.record().result,
        ReportResult::Solutions(vec![Solution::new(12_410_244u64, 53_603u32, 9, 3)])
    );
    let r = run(&["identify", "--x", "12410244", "--y", "53603", "--m", "9", "--n", "3"]);
    assert_eq!(r.record().result, ReportResult::Identification { family_index: Some(1) });
    let r = run(&["identify", "--x", "9324", "--y", "443", "--m", "3", "--n", "4"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn scans() {
    let r = run(&["nagell", "--x-max", "10000", "--n-max", "25"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.record().result, ReportResult::Hits(vec![]));

    let r = run(&["cohn", "--x-max", "1000", "--n-max", "20"]);
    assert_eq!(r.code, EXIT_OK);
    let ReportResult::Hits(hits) = r.record().result else { panic!() };
    assert_eq!(hits.len(), 2);

    let r = run(&["eq5", "--p", "5", "--k", "1", "--a-max", "1000"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.record().result, ReportResult::Roots(vec![]));

    let r = run(&["aux3a2", "--k-max", "20"]);
    assert_eq!(r.code, EXIT_OK);
    let ReportResult::Auxiliary(aux) = r.record().result else { panic!() };
    assert_eq!(aux.solutions.len(), 1);
    assert_eq!(aux.solutions[0].a, Nat::from(21u32));
}

#[test]
fn usage_errors_have_distinct_messages() {
    let even = run(&["solve", "--m", "4", "--n", "3"]);
    let small_n = run(&["solve", "--m", "3", "--n", "2"]);
    let unknown = run(&["frobnicate"]);
    let malformed = run(&["search", "--y-max", "lots"]);
    let bad_bounds = run(&["search", "--m-max", "8"]);
    let composite = run(&["eq5", "--p", "9", "--k", "1"]);
    let all = [&even, &small_n, &unknown, &malformed, &bad_bounds, &composite];
    for r in all {
        assert_eq!(r.code, EXIT_USAGE, "{}", r.stderr);
        assert!(r.stdout.is_empty());
    }
    let mut messages: Vec<&str> = all.iter().map(|r| r.stderr.as_str()).collect();
    messages.sort();
    messages.dedup();
    assert_eq!(messages.len(), all.len());
    assert!(even.stderr.contains("even"));
    assert!(small_n.stderr.contains("below 3"));
}

#[test]
fn output_is_deterministic_across_runs_and_jobs() {
    let args = ["search", "--y-max", "3000", "--m-max", "7", "--n-max", "8"];
    let a = run(&args);
    let b = run(&[&args[..], &["--jobs", "1"]].concat());
    let c = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(strip_elapsed(&a.stdout), strip_elapsed(&b.stdout));
    assert_eq!(strip_elapsed(&a.stdout), strip_elapsed(&c.stdout));

    let t1 = run(&["trace", "--m", "9", "--n", "6", "--a-max", "300"]);
    let t2 = run(&["trace", "--m", "9", "--n", "6", "--a-max", "300", "--jobs", "3"]);
    assert_eq!(strip_elapsed(&t1.stdout), strip_elapsed(&t2.stdout));
}

#[test]
fn config_file_supplies_bounds_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bounds.toml");
    std::fs::write(&cfg, "y_max = 500\nm_max = 3\nn_max = 10\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let r = run(&["search", "--config", cfg]);
    let rec = r.record();
    assert_eq!(rec.bounds.y_max, 500);
    assert_eq!(rec.result, ReportResult::Solutions(vec![Solution::new(9324u32, 443u32, 3, 3)]));
    let r = run(&["search", "--config", cfg, "--y-max", "400"]);
    assert_eq!(r.record().bounds.y_max, 400);
    assert_eq!(r.record().bounds.n_max, 10);

    std::fs::write(dir.path().join("bad.toml"), "y_max = \"x\"").unwrap();
    let bad = dir.path().join("bad.toml");
    let r = run(&["search", "--config", bad.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn check_trace_accepts_records_and_rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let t = run(&["trace", "--m", "7", "--n", "3", "--a-max", "300", "--x-max", "300"]);
    let s = run(&["solve", "--m", "5", "--n", "5", "--a-max", "300", "--x-max", "300"]);
    let file = dir.path().join("traces.jsonl");
    std::fs::write(&file, format!("{}{}", t.stdout, s.stdout)).unwrap();
    let r = run(&["check-trace", "--file", file.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let ReportResult::Replay { checked, failures } = r.record().result else { panic!() };
    assert!(checked > 10);
    assert!(failures.is_empty());

    let tampered = t.stdout.replacen("\"required_y2_mod_11\":\"6\"", "\"required_y2_mod_11\":\"5\"", 1);
    let tampered = if tampered == t.stdout {
        t.stdout.replacen("\"lhs_mod_8\":\"4\"", "\"lhs_mod_8\":\"0\"", 1)
    } else {
        tampered
    };
    std::fs::write(&file, tampered).unwrap();
    let r = run(&["check-trace", "--file", file.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    let ReportResult::Replay { failures, .. } = r.record().result else { panic!() };
    assert_eq!(failures.len(), 1);

    let r = run(&["check-trace", "--file", dir.path().join("missing").to_str().unwrap()]);
    assert_ne!(r.code, EXIT_OK);
}

#[test]
fn search_checkpoint_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cells.jsonl");
    let cp = cp.to_str().unwrap();
    let args = ["search", "--y-max", "800", "--m-max", "5", "--n-max", "6", "--checkpoint", cp];
    let a = run(&args);
    let cells = std::fs::read_to_string(cp).unwrap().lines().count();
    assert_eq!(cells, 2 * 4);
    let b = run(&args);
    assert_eq!(std::fs::read_to_string(cp).unwrap().lines().count(), cells);
    assert_eq!(strip_elapsed(&a.stdout), strip_elapsed(&b.stdout));
}

#[test]
fn help_exits_cleanly() {
    let r = run(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("check-trace"));
}
