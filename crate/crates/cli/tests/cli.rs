use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn mctsp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mctsp"))
        .args(args)
        .env_remove("MCTSP_ORACLE_CAP")
        .output()
        .unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

fn generate(dir: &Path, name: &str, extra: &[&str]) -> String {
    let out = path(dir, name);
    let mut args = vec!["generate", "--out", &out];
    args.extend_from_slice(extra);
    let o = mctsp(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn generate_solve_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let inst = generate(d, "i.json", &["--n", "7", "--k", "2", "--variant", "gamma_metric_undirected", "--gamma", "4/5", "--seed", "3"]);
    for alg in ["tree-doubling", "christofides", "cycle-cover"] {
        let sol = path(d, &format!("{alg}.json"));
        let o = mctsp(&["solve", "--instance", &inst, "--algorithm", alg, "--eps", "1/10", "--out", &sol]);
        assert!(o.status.success(), "{alg}: {}", String::from_utf8_lossy(&o.stderr));
        let o = mctsp(&["verify", "--instance", &inst, "--solution", &sol]);
        assert_eq!(o.status.code(), Some(0), "{alg}: {}", String::from_utf8_lossy(&o.stderr));
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(report["pass"], true);
    }
}

#[test]
fn tampered_solution_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let inst = generate(d, "i.json", &["--n", "6", "--k", "2", "--variant", "one_two_undirected", "--seed", "1"]);
    let sol = path(d, "s.json");
    assert!(mctsp(&["solve", "--instance", &inst, "--algorithm", "cycle-cover", "--out", &sol]).status.success());
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&sol).unwrap()).unwrap();
    v["items"][0]["edges"][0] = serde_json::json!([0, 0]);
    std::fs::write(&sol, v.to_string()).unwrap();
    let o = mctsp(&["verify", "--instance", &inst, "--solution", &sol]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("verification failed"));
}

#[test]
fn curves_grid_has_fifty_one_rows() {
    let o = mctsp(&["curves"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 52);
    assert!(lines[0].starts_with("gamma,tree_doubling,christofides"));
    assert!(lines[1].split(',').all(|c| c == "0.500000" || c == "1.000000"));
}

#[test]
fn christofides_refuses_directed_instances() {
    let dir = tempfile::tempdir().unwrap();
    let inst = generate(dir.path(), "d.json", &["--n", "5", "--k", "2", "--variant", "gamma_metric_directed", "--gamma", "11/20"]);
    let o = mctsp(&["solve", "--instance", &inst, "--algorithm", "christofides"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("undirected required"));
}

#[test]
fn identical_argv_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let args = ["--n", "7", "--k", "3", "--variant", "metric_closure", "--seed", "42"];
    let a = generate(d, "a.json", &args);
    let b = generate(d, "b.json", &args);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let solve = |out: &str| mctsp(&["solve", "--instance", &a, "--algorithm", "christofides", "--seed", "9", "--out", out]);
    let (sa, sb) = (path(d, "sa.json"), path(d, "sb.json"));
    assert!(solve(&sa).status.success() && solve(&sb).status.success());
    assert_eq!(std::fs::read(&sa).unwrap(), std::fs::read(&sb).unwrap());
}

#[test]
fn bench_writes_one_json_line_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let config: PathBuf = d.join("bench.json");
    std::fs::write(
        &config,
        r#"{"runs": [
            {"variant": "one_two_undirected", "n": 6, "k": 2, "algorithms": ["cycle-cover", "tree-doubling"], "eps": "0", "seeds": 3},
            {"variant": "gamma_metric_directed", "n": 5, "k": 2, "gamma": "11/20", "algorithms": ["cycle-cover"], "eps": "1/10", "seeds": 2}
        ]}"#,
    )
    .unwrap();
    let summary = path(d, "summary.json");
    let o = mctsp(&["bench", "--config", config.to_str().unwrap(), "--summary", &summary]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["pass"] == true && r["wall_ms"].is_null()));
    let s: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(s["passed"], 8);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mctsp(&["solve", "--bogus"]).status.code(), Some(2));
    assert_eq!(mctsp(&["curves", "--grid-step", "0"]).status.code(), Some(2));
    assert_eq!(mctsp(&["generate", "--n", "5", "--k", "1", "--variant", "nope"]).status.code(), Some(2));
}

#[test]
fn oracle_cap_is_read_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let inst = generate(d, "i.json", &["--n", "7", "--k", "2", "--variant", "one_two_undirected"]);
    let sol = path(d, "s.json");
    assert!(mctsp(&["solve", "--instance", &inst, "--algorithm", "tree-doubling", "--out", &sol]).status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_mctsp"))
        .args(["verify", "--instance", &inst, "--solution", &sol])
        .env("MCTSP_ORACLE_CAP", "tours=5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("exceeds cap 5"), "{err}");
}
