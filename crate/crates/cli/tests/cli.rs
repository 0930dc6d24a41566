use perfectnum::{run, EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("perfectnum").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn call_json(args: &[&str]) -> (i32, Value, String) {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    let (code, out, _) = call(&v);
    (code, serde_json::from_str(&out).unwrap(), out)
}

/// Every scalar in the document must be a string or a boolean.
fn assert_no_native_numbers(v: &Value) {
    match v {
        Value::Number(n) => panic!("native number {n} in JSON output"),
        Value::Array(a) => a.iter().for_each(assert_no_native_numbers),
        Value::Object(o) => o.values().for_each(assert_no_native_numbers),
        _ => {}
    }
}

#[test]
fn sigma_text() {
    assert_eq!(call(&["sigma", "45"]), (EXIT_OK, "σ(45) = 78\n".into(), String::new()));
}

#[test]
fn factor_and_abundancy() {
    let (code, out, _) = call(&["factor", "3138290325"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "3138290325 = 3^8 * 5^2 * 19^2 * 53\n");
    let (_, v, _) = call_json(&["abundancy", "2205"]);
    let r = &v["results"][0];
    assert_eq!(r["abundancy"], "494/245");
    assert_eq!(r["deficiency"], "-36");
    assert_eq!(r["closeness"], "4/245");
    assert_eq!(r["class"], "abundant");
}

#[test]
fn euclid_report_json() {
    let (code, v, _) = call_json(&["euclid-report", "--p", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["command"], "euclid-report");
    let r = &v["results"][0];
    assert_eq!(r["e4_values"], serde_json::json!(["1", "2"]));
    assert_eq!(r["lemma3"]["values"], serde_json::json!(["4", "3/7"]));
    assert_eq!(r["e7_bounds"]["attains_upper_bound"], true);
    assert_eq!(v["verdicts"]["FAIL"], "0");

    let (_, v, _) = call_json(&["euclid-report", "--p", "2"]);
    assert_eq!(v["results"][0]["e7_bounds"]["verdict"], "NOT_APPLICABLE");
    assert_eq!(v["results"][0]["lemma3"]["verdict"], "NOT_APPLICABLE");
    assert_eq!(v["verdicts"]["NOT_APPLICABLE"], "2");
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        &["euclid-report", "--max-p", "607"][..],
        &["a228059", "--limit", "3000000", "--reports"],
        &["euler-report", "3138290325"],
        &["mersenne", "--max-p", "127"],
        &["table", "--max-p", "31", "--limit", "1000000"],
    ] {
        let (code, v, raw) = call_json(args);
        assert_eq!(code, EXIT_OK, "{args:?}");
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(again, raw, "{args:?}");
        assert_no_native_numbers(&v);
        for key in ["command", "inputs", "results", "verdicts"] {
            assert!(v.get(key).is_some(), "{key} missing for {args:?}");
        }
    }
}

#[test]
fn euler_report_of_first_term_does_not_fail_run() {
    let (code, v, _) = call_json(&["euler-report", "45"]);
    assert_eq!(code, EXIT_OK);
    let r = &v["results"][0];
    assert_eq!(r["dris"]["verdict"], "FAIL");
    assert_eq!(r["dris"]["asserted"], false);
    assert_eq!(r["sorli_k"]["verdict"], "PASS");
    assert_eq!(r["acquaah_konyagin"]["verdict"], "PASS");
    assert_eq!(r["broughan_ratio"]["verdict"], "REPORTED");
    assert_eq!(r["broughan_ratio"]["value"], "9/5");
    assert_eq!(v["verdicts"]["FAIL"], "1");
    assert_eq!(v["verdicts"]["asserted_failures"], "0");
}

#[test]
fn bfile_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    let (code, _, _) = call(&["a228059", "--limit", "236925", "--bfile", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 45\n2 405\n3 2205\n4 26325\n5 236925\n");
    let (_, out, _) = call(&["a228059", "--limit", "44"]);
    assert!(out.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = call(&["sigma", "-5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("-5") || err.contains("unexpected"), "{err}");
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["a228059", "--limit", "4e9"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("4e9"));
    assert_eq!(call(&["euclid-report"]).0, EXIT_USAGE);
    assert_eq!(call(&["euclid-report", "--p", "11"]).0, EXIT_USAGE);
    assert_eq!(call(&["euler-report", "15"]).0, EXIT_USAGE);
    assert_eq!(call(&["factor", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn resource_limit_exits_three() {
    // 2^64 + 13 = 3 * 1613 * 3809 * 190609 * 10424200453; needs rho on a 64-bit cofactor
    let (code, _, err) = call(&["factor", "340282366920938463463374607431768211457", "--effort-bound", "1"]);
    assert_eq!(code, EXIT_RESOURCE, "{err}");
    assert!(err.contains("resource limit"));
}

#[test]
fn verify_suites_pass() {
    let (code, v, _) = call_json(&["verify", "--suite", "euclid"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["results"].as_array().unwrap().len(), 14);
    let (code, out, _) = call(&["verify", "--suite", "euler", "--limit", "3138290325"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sorli k = 1: 9/9   dris q^k < n: 8/9"), "{out}");
    let (code, out, _) = call(&["verify", "--suite", "oracle", "--limit", "300000"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.matches("PASS").count(), 4);
    assert!(!out.contains("FAIL"));
}

#[test]
fn table_annotations() {
    let (code, out, _) = call(&["table"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("PASS for all p in {3,…,607}; 8/7 attained at p in {3}"));
    assert!(out.contains("k = 1 for 9/9 terms"));
    assert!(out.contains("q^k < n for 8/9 terms"));
    let (_, v, _) = call_json(&["table", "--max-p", "2", "--limit", "44"]);
    for row in v["results"].as_array().unwrap() {
        for side in ["left", "right"] {
            if row[side]["statement"] != "" {
                assert_eq!(row[side]["annotation"], "no instances");
            }
        }
    }
}

#[test]
fn exit_fail_constant_is_distinct() {
    assert_eq!(EXIT_FAIL, 1);
}
