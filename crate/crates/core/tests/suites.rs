//! Every named suite with its default parameters: no failures, no skips,
//! and the headline values where they are fixed by the mathematics.

use at_lab::verify::{run_suite, CaseStatus, SuiteParams, SUITES};
use at_lab::Limits;
use serde_json::json;

fn run(name: &str, params: &str) -> at_lab::verify::SuiteResult {
    run_suite(name, &SuiteParams::parse(params).unwrap(), &Limits::default()).unwrap()
}

#[test]
fn all_default_suites_pass_without_skips() {
    for name in SUITES {
        let r = run(name, "");
        assert!(!r.cases.is_empty(), "{name} has no cases");
        for c in &r.cases {
            assert_eq!(c.status, CaseStatus::Pass, "{name}: {c:?}");
        }
    }
}

#[test]
fn thm21_grid_shape() {
    let r = run("thm21", "k_max=2,n_max=3");
    assert_eq!(r.count(CaseStatus::Pass), 6);
    assert!(r.cases.iter().all(|c| c.values["at"] == json!(3) && c.values["max_indegree"] == json!(2)));
}

#[test]
fn cor32_reports_m_plus_three() {
    let r = run("cor32", "m_max=3");
    for c in &r.cases {
        let m = c.params["m"].as_u64().unwrap();
        assert_eq!(c.values["at"], json!(m + 3), "{c:?}");
    }
}

#[test]
fn remark_is_reproducible() {
    let a = run("remark", "k=1,n=3,trials=40,seed=7");
    let b = run("remark", "k=1,n=3,trials=40,seed=7");
    assert_eq!(a.cases, b.cases);
    assert_eq!(a.cases[0].values["failures"], json!(0));
}

#[test]
fn thread_count_does_not_change_results() {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = one.install(|| run("thm25", ""));
    let parallel = run("thm25", "");
    assert_eq!(serial.cases, parallel.cases);
}
