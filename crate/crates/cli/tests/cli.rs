use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn all_corpus() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(corpus("")).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

fn run(args: &[&str], files: &[PathBuf]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strlink")).args(args).args(files).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn hopf() -> PathBuf {
    corpus("s1_pow2.sl")
}

#[test]
fn gassner_json_is_the_hopf_matrix() {
    let o = run(&["gassner", "--json"], &[hopf()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, json!({"n": 2, "vars": ["t1", "t2"], "entries": [["t2", "1 - t1"], ["t2 - t2^2", "1 - t2 + t1*t2"]]}));
    let (m, _) = strlink::json::matrix_from_json(&v.to_string()).unwrap();
    let g = strlink::gassner(&strlink::MorseWord::from_braid(2, &[(1, true), (1, true)]).unwrap()).unwrap();
    assert_eq!(m, g.matrix);
}

#[test]
fn verify_passes_on_hopf() {
    let o = run(&["verify", "--braid-b", "s1"], &[hopf()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn report_on_hopf() {
    let o = run(&["report", "--json"], &[hopf()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closure_polynomial"], "1");
    assert_eq!(v["torsion"], "1");
    assert_eq!(v["alexander_function"], "1");
    assert_eq!(v["closure_polynomial_one_var"], "1 - t");
    assert_eq!(v["alexander_function_one_var"], "1 - t");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let text = stdout(&run(&["report"], &[hopf()]));
    assert!(text.contains("closure polynomial") && text.contains("torsion"));
}

#[test]
fn parse_errors_exit_one_with_location() {
    let dir = std::env::temp_dir().join(format!("strlink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.sl");
    std::fs::write(&bad, "sl 2\ncolors 1 2\nx 5 +\nend\n").unwrap();
    let o = run(&["gassner"], &[bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["taylor", "--flips", "1"], &[hopf()]).status.code(), Some(1));
    assert_eq!(run(&["gassner"], &[]).status.code(), Some(1));
    assert_eq!(run(&["reduce"], &[corpus("s1_pow1.sl")]).status.code(), Some(1));
    assert_eq!(run(&["twist", "--strand", "3"], &[hopf()]).status.code(), Some(1));
    assert_eq!(run(&["gassner"], &[corpus("missing.sl")]).status.code(), Some(1));
}

#[test]
fn altsum_and_taylor() {
    let o = run(&["altsum", "--flips", "1,2", "--json"], &[corpus("s1_pow4.sl")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vanishes_below_k"], true);
    assert_eq!(v["lowest_degree"], 2);
    let o = run(&["taylor", "--order", "2", "--json"], &[hopf()]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let c = v["coefficients"].as_array().unwrap();
    let z1 = c.iter().find(|e| e["index"] == json!([1, 0])).unwrap();
    assert_eq!(z1["matrix"][0][1], "1");
}

#[test]
fn spectrum_is_unitary() {
    let o = run(&["spectrum", "--json"], &[corpus("full_twist3.sl"), corpus("random_pure3_12_2.sl")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for r in v.as_array().unwrap() {
        assert_eq!(r["result"]["unitary"], true, "{r}");
    }
}

#[test]
fn batch_over_the_corpus() {
    let files = all_corpus();
    let o = run(&["walkcheck", "--json", "--jobs", "4"], &files);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), files.len());
    assert!(arr.iter().all(|r| r["result"]["agree"] == true));
    let o = run(&["verify", "--jobs", "4"], &files);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn edge_labels_dump() {
    let o = run(&["walkcheck", "--labels", "1"], &[hopf()]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("e0\t")));
}
