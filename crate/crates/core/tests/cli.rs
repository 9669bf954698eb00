use pqseries::cli::{run, Report, RunConfig, Summary, Timing, EXIT_CONFIG, EXIT_FAIL, EXIT_PASS};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["pqseries"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn list_prints_every_entry_and_filters() {
    let (code, out, _) = call(&["list"]);
    assert_eq!(code, EXIT_PASS);
    let heads: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(heads.len(), 43);
    let (_, out, _) = call(&["list", "dilch"]);
    let ids: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids, ["DILCH", "DILCHNEW", "DILCHCOR"]);
    let (code, out, _) = call(&["list", "NOSUCH"]);
    assert_eq!((code, out.as_str()), (EXIT_PASS, ""));
}

#[test]
fn verify_writes_a_structured_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["verify", "--id", "HAMME", "--n", "1..8", "--out", p]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 8);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["ids"][0], "HAMME");
    assert_eq!(v["summary"]["pass"], 8);
    assert_eq!(v["summary"]["fail"], 0);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 8);
    for (k, r) in results.iter().enumerate() {
        assert_eq!(r["status"], "pass");
        assert_eq!(r["instance"]["params"]["n"], k as i64 + 1);
        assert_eq!(r["residual_terms"], 0);
        assert_eq!(r["instance"]["trunc"]["q"], 40);
    }
    assert_eq!(v["timing"]["per_instance_ms"].as_array().unwrap().len(), 8);
    assert!(text.rfind("\n  \"timing\"").unwrap() > text.rfind("\n  \"summary\"").unwrap());
}

#[test]
fn reports_are_identical_apart_from_timing() {
    let args = ["verify", "--id", "PRODINGER", "--id", "RDIV", "--cap", "q=24", "--format", "structured"];
    let (c1, a, _) = call(&args);
    let (c2, b, _) = call(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!((c1, c2), (EXIT_PASS, EXIT_PASS));
    let (mut a, mut b): (Value, Value) = (serde_json::from_str(&a).unwrap(), serde_json::from_str(&b).unwrap());
    b["config"]["jobs"] = Value::Null;
    a = without_timing(a);
    b = without_timing(b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["results"][0]["instance"]["trunc"]["q"], 24);
}

#[test]
fn negative_ranges_and_caps_are_accepted() {
    let (code, out, _) = call(&["verify", "--id", "NEWNEW", "--m", "1", "--n", "2", "--r", "-2..0", "--cap", "q=20"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(out.contains("pass 3 fail 0 error 0"));
    let (code, _, _) = call(&["verify", "--all", "--cap", "q=6", "--cap", "p=4", "--cap", "x=3"]);
    assert_eq!(code, EXIT_PASS);
    // FLZ keeps its default i-range up to 3, which n = 2 does not admit.
    let (code, _, err) = call(&["verify", "--all", "--n", "2", "--cap", "q=6"]);
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.contains("FLZ"));
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        &["verify", "--id", "NEW", "--r", "9", "--m", "2"][..],
        &["verify", "--id", "NOPE"],
        &["verify"],
        &["verify", "--id", "HAMME", "--n", "5..1"],
        &["verify", "--id", "HAMME", "--m", "1"],
        &["verify", "--id", "HAMME", "--cap", "q=0"],
        &["verify", "--id", "HAMME", "--jobs", "0"],
        &["coeff", "--odd-divisor", "--q", "99"],
        &["coeff", "--q", "3"],
        &["partitions", "--n", "0", "--N", "1"],
        &["bogus"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_CONFIG, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn failing_or_erroring_results_exit_with_one() {
    let report = |fail, error| Report {
        tool_version: "0",
        config: RunConfig { ids: vec![], ranges: vec![], caps: vec![], format: pqseries::cli::Format::Text, jobs: None },
        results: vec![],
        summary: Summary { pass: 1, fail, error },
        timing: Timing { total_ms: 0.0, per_instance_ms: vec![] },
    };
    assert_eq!(report(0, 0).exit_code(), EXIT_PASS);
    assert_eq!(report(1, 0).exit_code(), EXIT_FAIL);
    assert_eq!(report(0, 1).exit_code(), EXIT_FAIL);
}

#[test]
fn coefficient_queries() {
    for (args, want) in [
        (&["coeff", "--odd-divisor", "--q", "9"][..], "3"),
        (&["coeff", "--lambert-m", "1", "--q", "4"], "7"),
        (&["coeff", "--lambert-m", "0", "--q", "1"], "1"),
        (&["coeff", "--carlitz", "3", "--t", "1", "--q", "2"], "2"),
        (&["coeff", "--eulerian", "4", "--t", "1"], "11"),
        (&["coeff", "--lambert-m", "2", "--q", "60", "--cap", "q=60"], "5460"),
    ] {
        let (code, out, _) = call(args);
        assert_eq!((code, out.trim()), (EXIT_PASS, want), "{args:?}");
    }
}

#[test]
fn partition_statistics() {
    let (code, out, _) = call(&["partitions", "--n", "9", "--N", "3"]);
    assert_eq!(code, EXIT_PASS);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "P(9,3) = {(9), (5,4), (4,3,2)}");
    assert_eq!(lines[3], "d(9,3) = 2");
    assert!(lines[4].ends_with(": pass"));
    let (code, out, _) = call(&["partitions", "--n", "1", "--N", "1"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("P(1,1) = {(1)}"));
}
