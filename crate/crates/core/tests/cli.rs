use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sfactor(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sfactor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stdout_line(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim()
        .to_string()
}

#[test]
fn construct_outputs_are_accepted_by_rho() {
    let out = sfactor(&["construct", "h_na", "6", "1"], None);
    assert_eq!(out.status.code(), Some(0));
    let code = stdout_line(&out);
    let rho = sfactor(&["rho", &code], None);
    assert_eq!(json(&rho)["rho"], "4.00000000000");

    let out = sfactor(
        &["--json", "construct", "t_graph", "20", "1", "2", "--stats"],
        None,
    );
    let v = json(&out);
    assert_eq!(v["min_degree"], 2);
    assert_eq!(v["order"], 20);
    assert_eq!(v["connected"], true);

    let out = sfactor(&["construct", "t_graph", "5", "1", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n >= "));
}

#[test]
fn rho_reads_stdin_and_compares() {
    let k5 = stdout_line(&sfactor(&["construct", "complete", "5"], None));
    let k4 = stdout_line(&sfactor(&["construct", "complete", "4"], None));
    let out = sfactor(
        &["--json", "rho", "--compare", &k4],
        Some(&format!("{k5}\n")),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rho"], "4.00000000000");
    assert_eq!(v["verdict"], "Greater");
    assert_eq!(sfactor(&["rho", "~~"], None).status.code(), Some(2));
    assert_eq!(sfactor(&["rho"], Some("")).status.code(), Some(2));
}

#[test]
fn factor_queries_and_witnesses() {
    // K_{1,4}: odd order, so the empty set already violates the condition
    let out = sfactor(&["factor", "D?{", "--a", "1", "--b", "3", "--odd"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["outcome"], "refuted");
    assert!(v["witness"].is_array());

    let c5 = stdout_line(&sfactor(&["construct", "circulant", "5", "1"], None));
    let v = json(&sfactor(&["factor", &c5, "--fractional"], None));
    assert_eq!(v["outcome"], "found");
    let weights = v["weights"].as_array().unwrap();
    assert_eq!(weights.len(), 5);
    assert!(weights.iter().all(|w| w[2] == "0.500000000000"));

    let c6 = stdout_line(&sfactor(&["construct", "circulant", "6", "1"], None));
    let v = json(&sfactor(&["factor", &c6, "--a", "2", "--b", "2"], None));
    assert_eq!(v["factor_edges"].as_array().unwrap().len(), 6);
    assert_eq!(
        sfactor(&["factor", &c6, "--a", "2", "--b", "4", "--odd"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        sfactor(&["verify", "thm1.1", "--two-n", "6"], None)
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        sfactor(
            &["verify", "thm1.3", "--n", "6", "--a", "1", "--b", "2"],
            None
        )
        .status
        .code(),
        Some(0)
    );
    let out = sfactor(
        &[
            "--json",
            "verify",
            "thm1.2",
            "--n",
            "20",
            "--b",
            "1",
            "--delta",
            "2",
            "--samples",
            "10000",
            "--seed",
            "7",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(json(&out)["verdict"], "sampled_no_counterexample");
    assert_eq!(
        sfactor(
            &["verify", "thm1.2", "--n", "20", "--b", "2", "--delta", "2"],
            None
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        sfactor(&["verify", "thm1.3", "--n", "7"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sfactor(&["verify", "thm1.1", "--two-n", "8"], None)
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn verify_writes_report_file_and_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = |jobs: &'static str, out: &str| {
        vec![
            "--json".to_string(),
            "verify".into(),
            "thm1.1".into(),
            "--two-n".into(),
            "8".into(),
            "--source".into(),
            fixture("graphs8.g6"),
            "--jobs".into(),
            jobs.into(),
            "--output".into(),
            out.into(),
        ]
    };
    let a: Vec<String> = args("1", path.to_str().unwrap());
    let out = sfactor(&a.iter().map(String::as_str).collect::<Vec<_>>(), None);
    assert_eq!(out.status.code(), Some(0));
    let mut one: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let path2 = dir.path().join("report2.json");
    let b: Vec<String> = args("3", path2.to_str().unwrap());
    sfactor(&b.iter().map(String::as_str).collect::<Vec<_>>(), None);
    let mut three: Value = serde_json::from_str(&std::fs::read_to_string(&path2).unwrap()).unwrap();
    one.as_object_mut().unwrap().remove("wall_time_ms");
    three.as_object_mut().unwrap().remove("wall_time_ms");
    assert_eq!(one, three);
    assert_eq!(one["checked"], 12346);
}

#[test]
fn explore_reports() {
    let out = sfactor(
        &[
            "--json",
            "explore",
            "--two-n",
            "6",
            "--k",
            "2",
            "--connected",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["mode"], "exploration");
}

#[test]
fn g6_validate_stats_and_errors() {
    let out = sfactor(&["g6", "validate", &fixture("graphs4.g6")], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], 11);

    let v = json(&sfactor(&["g6", "stats", &fixture("graphs4.g6")], None));
    assert_eq!(
        (v["n"].clone(), v["count"].clone()),
        (Value::from(4), Value::from(11))
    );

    let out = sfactor(&["g6", "validate", &fixture("malformed.g6")], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3: trailing bits nonzero"));

    let out = sfactor(
        &["g6", "validate", "--lenient", &fixture("malformed.g6")],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["invalid"][0]["line"], 3);

    let out = sfactor(&["g6", "convert", &fixture("graphs4.g6")], None);
    let lines = String::from_utf8(out.stdout).unwrap();
    assert_eq!(lines.lines().count(), 11);
    let out = sfactor(&["g6", "stats", "/nonexistent.g6"], None);
    assert_eq!(out.status.code(), Some(2));
}
