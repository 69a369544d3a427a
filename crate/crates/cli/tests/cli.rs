use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mollweide"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn batch_file(ext: &str, body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(ext).tempfile().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn solve_example_one_text() {
    let o = run(&["solve", "--case", "aas", "--alpha", "72", "--beta", "40", "--c", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("unique"), "{text}");
    assert!(text.contains("a=15.39 b=10.40"), "{text}");
    assert!(text.contains("verification: passed"), "{text}");
}

#[test]
fn solve_example_two_text() {
    let o = run(&["solve", "--case", "sas", "--a", "10", "--gamma", "40", "--b", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("alpha=119.66° beta=20.34° gamma=40.00°"), "{text}");
    assert!(text.contains("c=7.40"), "{text}");
    assert!(text.contains("passed"), "{text}");
}

#[test]
fn solve_no_solution_exits_one() {
    let o = run(&["solve", "--case", "ssa", "--a", "2", "--b", "8", "--alpha", "35"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("none"), "{text}");
    assert!(text.contains("altitude"), "{text}");
}

#[test]
fn solve_two_solutions_json() {
    let o = run(&[
        "solve", "--case", "ssa", "--a", "6", "--b", "8", "--alpha", "35", "--output", "json-lines",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["outcome"], "two");
    let betas: Vec<f64> = v["triangles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["beta"].as_f64().unwrap())
        .collect();
    assert_eq!(betas.len(), 2);
    assert!(betas[0] < betas[1]);
}

#[test]
fn text_and_json_describe_the_same_triangle() {
    let args = ["solve", "--case", "sss", "--a", "3", "--b", "4.5", "--c", "6"];
    let text = stdout(&run(&args));
    let mut json_args = args.to_vec();
    json_args.extend(["--output", "json-lines"]);
    let v: Value = serde_json::from_str(stdout(&run(&json_args)).trim()).unwrap();
    let t = &v["triangles"][0];
    let expected = format!(
        "alpha={:.2}° beta={:.2}° gamma={:.2}° a={:.2} b={:.2} c={:.2}",
        t["alpha"].as_f64().unwrap(),
        t["beta"].as_f64().unwrap(),
        t["gamma"].as_f64().unwrap(),
        t["a"].as_f64().unwrap(),
        t["b"].as_f64().unwrap(),
        t["c"].as_f64().unwrap()
    );
    assert!(text.contains(&expected), "{text}\n{expected}");
}

#[test]
fn solve_input_errors_exit_two() {
    // missing side
    let o = run(&["solve", "--case", "aas", "--alpha", "72", "--beta", "40"]);
    assert_eq!(o.status.code(), Some(2));
    // negative side
    let o = run(&["solve", "--case", "sss", "--a", "-3", "--b", "4", "--c", "5"]);
    assert_eq!(o.status.code(), Some(2));
    // unknown flag and unknown case are usage errors
    assert_eq!(run(&["solve", "--case", "xyz"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--case", "sss", "--d", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // non-numeric value
    let o = run(&["solve", "--case", "sss", "--a", "three", "--b", "4", "--c", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_finite_input_does_not_panic() {
    for value in ["NaN", "inf", "1e400"] {
        let o = run(&["solve", "--case", "sss", "--a", value, "--b", "4", "--c", "5"]);
        assert_eq!(o.status.code(), Some(2), "{value}");
    }
}

const EX1_FULL: [&str; 12] = [
    "--alpha", "72", "--beta", "40", "--gamma", "68",
    "--a", "15.386212426113486", "--b", "10.39903153814416", "--c", "15",
];

#[test]
fn verify_full_precision_example_one() {
    let mut args = vec!["verify"];
    args.extend(EX1_FULL);
    args.extend(["--tol", "1e-9"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verification: passed"));
}

#[test]
fn verify_mistyped_side_fails() {
    let mut args = vec!["verify"];
    args.extend(EX1_FULL);
    args[8] = "15.49";
    let o = run(&args);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAILED"));
}

#[test]
fn verify_bad_angle_sum_is_input_error() {
    let o = run(&[
        "verify", "--alpha", "72", "--beta", "50", "--gamma", "68", "--a", "15.39", "--b", "10.4",
        "--c", "15",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sum"));
}

#[test]
fn verify_json_output() {
    let mut args = vec!["verify"];
    args.extend(EX1_FULL);
    args.extend(["--output", "json-lines"]);
    let o = run(&args);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verification"]["passed"], true);
    assert_eq!(v["verification"]["mollweide_sin"].as_array().unwrap().len(), 3);
}

#[test]
fn batch_empty_file() {
    let f = batch_file(".jsonl", "");
    let o = run(&["batch", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "summary: records=0 unique=0 two=0 none=0 error=0"
    );
}

#[test]
fn batch_csv_in_input_order() {
    let body = "id,case,alpha,beta,gamma,a,b,c\n\
                ex2,sas,,,40,10,4,\n\
                amb,ssa,35,,,6,8,\n\
                ex1,aas,72,40,,,,15\n";
    let f = batch_file(".csv", body);
    let o = run(&["batch", "--input", f.path().to_str().unwrap(), "--output", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let ids: Vec<&str> = lines[..3].iter().map(|v| v["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["ex2", "amb", "ex1"]);
    assert_eq!(lines[1]["outcome"], "two");
    assert_eq!(lines[3]["summary"]["two"], 1);
    assert_eq!(lines[3]["summary"]["unique"], 2);
}

#[test]
fn batch_unknown_extension_warns() {
    let f = batch_file(".txt", r#"{"id":"e","case":"sss","a":1,"b":1,"c":1}"#);
    let o = run(&["batch", "--input", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn batch_missing_file_is_input_error() {
    let o = run(&["batch", "--input", "/nonexistent/records.jsonl"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn large_batch_keeps_order() {
    let mut body = String::new();
    for i in 0..2_000 {
        let a = 3.0 + (i % 7) as f64;
        body.push_str(&format!(
            "{{\"id\":\"r{i}\",\"case\":\"ssa\",\"a\":{a},\"b\":8,\"alpha\":35}}\n"
        ));
    }
    let f = batch_file(".jsonl", &body);
    let o = run(&["batch", "--input", f.path().to_str().unwrap(), "--output", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<String> = stdout(&o)
        .lines()
        .take(2_000)
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["id"].as_str().unwrap().to_string())
        .collect();
    let expected: Vec<String> = (0..2_000).map(|i| format!("r{i}")).collect();
    assert_eq!(ids, expected);
}
