use toric_codes::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("toric-codes").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn code_report_as_json() {
    let (code, out, _) = call(&["code", "--family", "C3", "--q", "3", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 13);
    assert_eq!(v["k"], 4);
    assert_eq!(v["d_star"], 6);
    assert_eq!(v["b"], 4);
    assert_eq!(v["lcd"], false);
}

#[test]
fn mindist_in_code_report() {
    let (code, out, _) = call(&["code", "--family", "C4", "--q", "5", "--mindist", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["d_exact"], 16);
    assert_eq!(v["conjecture_consistent"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["code", "--family", "C7", "--q", "3"]).0, 2);
    assert_eq!(call(&["code", "--family", "C3", "--q", "6"]).0, 2);
    assert_eq!(call(&["code", "--family", "C9", "--q", "3"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["tables", "3", "--emit", "xml"]).0, 2);
    let (code, _, err) = call(&["--bogus"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn force_builds_outside_the_verified_range() {
    let (code, out, _) = call(&["code", "--family", "C9", "--q", "3", "--force", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verified"], false);
}

#[test]
fn large_searches_need_slow() {
    let (code, _, err) = call(&["mindist", "--family", "C9", "--q", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("--slow"));
}

#[test]
fn verify_small_tables() {
    let (code, out, _) = call(&["verify", "--suite", "tables", "--max-q", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL "));
    let (code, out, _) = call(&["verify", "--suite", "all", "--max-q", "5", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "FAIL"));
}

#[test]
fn table5_csv() {
    let (code, out, _) = call(&["tables", "5", "--emit", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("family,q,n,k,d_star,b,d_lower,d_exact,delta,lcd"));
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("C3,3,13,4,"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let (_, a, _) = call(&["--threads", "1", "tables", "6", "--emit", "csv"]);
    let (_, b, _) = call(&["--threads", "3", "tables", "6", "--emit", "csv"]);
    assert_eq!(a, b);
}

#[test]
fn elliptic_subcommands() {
    let (code, out, _) = call(&["ec", "count", "--q", "8", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 14);
    let (code, out, _) = call(&["ec", "count", "--q", "7", "--coeffs", "0,0,0,1,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("count: 8"));
    assert_eq!(call(&["ec", "count", "--q", "5", "--coeffs", "0,0,0,0,0"]).0, 2);
    let (code, out, _) = call(&["ec", "optimal", "--q", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("max_count: 10"));
    assert!(out.contains("unique_j: true"));
    let (code, out, _) = call(&["ec", "table2", "--q", "9", "--emit", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("toric-codes-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["--out", p, "tables", "2"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.contains("y^2+xy+y=x^3+1"));
}
