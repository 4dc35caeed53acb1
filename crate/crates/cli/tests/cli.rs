use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn karate() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/karate.txt")
}

fn lsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsc")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = lsc(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn centrality_writes_one_csv_per_method() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    ok(&["centrality", "--graph", karate().to_str().unwrap(), "--measures", "dc,lsc", "-o", out]);
    let dc = read(dir.path(), "dc.csv");
    assert_eq!(dc.lines().next(), Some("node,measure,score"));
    assert_eq!(dc.lines().count(), 35);
    let lsc_csv = read(dir.path(), "lsc.csv");
    assert!(lsc_csv.starts_with("rank,node\n1,33\n2,0\n"));
    assert!(!dir.path().join("ec.csv").exists());
    let json: serde_json::Value = serde_json::from_str(&read(dir.path(), "centrality.json")).unwrap();
    assert_eq!(json["lsc"]["ranking"]["ordered_nodes"][0], 33);
}

#[test]
fn truncated_low_precision_and_generated_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let g = karate();
    let args = ["centrality", "--graph", g.to_str().unwrap(), "--measures", "lsc", "--precision", "2", "--rounding", "truncate", "-o", out];
    ok(&args);
    let matrix = read(dir.path(), "lsc_matrix.csv");
    assert_eq!(matrix.lines().next(), Some("node,DC,EC,CC"));
    assert!(matrix.lines().nth(1).unwrap().split(',').nth(1).unwrap().len() == 4);

    ok(&["centrality", "--generate", "ba:300:4:42", "--measures", "gc", "-o", out, "--scalar", "f32"]);
    assert_eq!(read(dir.path(), "gc.csv").lines().count(), 301);
}

#[test]
fn sir_scores_and_curves() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let g = karate();
    ok(&["sir", "--graph", g.to_str().unwrap(), "--beta", "0", "--reps", "20", "-o", out]);
    let scores = read(dir.path(), "sir_scores.csv");
    assert_eq!(scores.lines().next(), Some("node,mean_score,std"));
    assert!(scores.lines().skip(1).all(|l| l.split(',').nth(1).unwrap().parse::<f64>().unwrap() == 1.0));

    ok(&["sir", "--graph", g.to_str().unwrap(), "--seeds-from", "lsc", "--top", "10", "--beta", "0.05", "--steps", "25", "--reps", "200", "-o", out]);
    let curve: Vec<f64> = read(dir.path(), "sir_curve.csv")
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(curve.len(), 26);
    assert_eq!(curve[0], 10.0);
    assert!(curve.windows(2).all(|w| w[0] <= w[1]));

    let err = lsc(&["sir", "--graph", g.to_str().unwrap(), "--seeds", "0,1", "-o", out]);
    assert!(!err.status.success());
}

#[test]
fn evaluate_is_byte_identical_across_thread_counts() {
    let g = karate();
    let run = |threads: &str| {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().to_str().unwrap();
        ok(&["--threads", threads, "evaluate", "--graph", g.to_str().unwrap(), "--reps", "300", "-o", out]);
        (read(dir.path(), "report.json"), read(dir.path(), "table.csv"))
    };
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("8"));
    assert!(one.1.starts_with("dataset,metric,DC,EC,CC,BC,GC,LSC\nkarate,tau,"));
}

#[test]
fn five_percent_of_ba_thousand_is_fifty() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    ok(&["evaluate", "--generate", "ba:1000:10:42", "--x-percent", "5", "--reps", "5", "--beta", "0.01", "-o", out]);
    let report: serde_json::Value = serde_json::from_str(&read(dir.path(), "report.json")).unwrap();
    assert_eq!(report["measures"][0]["top_x_k"], 50);
    assert!(dir.path().join("series_lsc.csv").exists());
}

#[test]
fn dumped_config_reproduces_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let g = karate();
    ok(&[
        "evaluate", "--graph", g.to_str().unwrap(), "--reps", "50", "--beta", "0.2", "--seed", "7",
        "--measure-order", "ec,dc", "--cc-convention", "inverse_sum", "--tau", "tau_b",
        "-o", a.to_str().unwrap(), "--dump-config", cfg.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&cfg).unwrap();
    assert!(text.contains("measure_order = [\"EC\", \"DC\"]"), "{text}");
    ok(&["evaluate", "--config", cfg.to_str().unwrap(), "-o", b.to_str().unwrap()]);
    assert_eq!(read(&a, "report.json"), read(&b, "report.json"));
}

#[test]
fn bench_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    ok(&["bench", "--generate", "ba:200:3:1", "--bench-reps", "1", "-o", out]);
    let csv = read(dir.path(), "bench.csv");
    assert!(csv.starts_with("measure,ba:200:3:1\nLSC,"));
    assert!(csv.contains("\nGC,"));
    let stats = ok(&["stats", "--graph", karate().to_str().unwrap()]);
    assert_eq!(stats, "dataset,nodes,edges,mean_degree,max_degree,density\nkarate,34,78,4.5882,17,0.1390374\n");
}

#[test]
fn failures_are_single_json_lines() {
    let out = lsc(&["stats", "--graph", "/definitely/missing.txt"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&stderr).unwrap();
    assert_eq!(v["error"], "io");

    let out = lsc(&["sir", "--generate", "ba:50:2:1", "--beta", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(v["error"], "invalid_parameter");

    let out = lsc(&["centrality", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(v["error"], "usage");
}

#[test]
fn registry_listing() {
    let list = ok(&["fetch", "--list"]);
    assert!(list.starts_with("name,nodes,edges,default_beta,source\n"));
    assert!(list.contains("karate,34,78,0.1,"));
}
