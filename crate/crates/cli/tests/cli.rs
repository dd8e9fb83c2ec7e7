use liftscope_cli::run;
use std::process::Command;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["liftscope"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(argv, &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_square() {
    let (status, out, _) = call(&["analyze", "-f", "x", "-g", "y^2"]);
    assert_eq!(status, 0);
    assert!(out.contains("theta: 1/2"), "{out}");
    assert!(out.contains("growth: ≍ B^{1/2}"), "{out}");
}

#[test]
fn census_local_obstruction_is_all_zero() {
    let (status, out, _) = call(&["census", "-f", "x", "-g", "y^2+1/2", "--max-B", "1000000"]);
    assert_eq!(status, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("B,count"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.ends_with(",0")), "{out}");
}

#[test]
fn sources_detect_cusp() {
    let (status, out, _) = call(&["sources", "detect", "-f", "x^3", "-g", "y^2"]);
    assert_eq!(status, 0);
    assert!(out.contains("alpha = 1, beta = 0, c = 0, E(u) = u"), "{out}");
    assert!(out.contains("x = t^2, y = t^3"), "{out}");
}

#[test]
fn sources_construct_then_detect() {
    let (status, out, _) = call(&[
        "sources", "construct", "--G", "z^2 - 3", "--c", "1/2", "--alpha", "-2", "--beta", "1", "--E", "u + 1",
    ]);
    assert_eq!(status, 0, "{out}");
    let f = out.lines().next().unwrap().trim_start_matches("f(x) = ").to_string();
    let g = out.lines().nth(1).unwrap().trim_start_matches("g(y) = ").to_string();
    let (status, found, _) = call(&["sources", "detect", "-f", &f, "-g", &g]);
    assert_eq!(status, 0);
    assert!(found.contains("source:"), "{found}");
}

#[test]
fn activity_decompose_and_fibers() {
    let (_, out, _) = call(&["activity", "--param", "2*t^2 + 1/2"]);
    assert!(out.contains("active: A(1/2) = 1"), "{out}");
    let (_, out, _) = call(&["decompose", "-f", "x^4", "-g", "y^4"]);
    assert_eq!(out, "h(x) = -x\nh(x) = x\n");
    let (status, out, _) = call(&["fibers", "-f", "x^4", "-g", "y^4", "--at", "-3/2"]);
    assert_eq!(status, 0);
    assert!(out.contains("= 2 = 2 (graphs) + [0] (components)"), "{out}");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(call(&["analyze", "-f", "x +", "-g", "y"]).0, 2);
    assert_eq!(call(&["analyze", "-f", "x*y", "-g", "y"]).0, 2);
    assert_eq!(call(&["analyze", "-f", "3", "-g", "y"]).0, 2);
    assert_eq!(call(&["fibers", "-f", "x^4", "-g", "y^4", "--at", "0"]).0, 2);
    assert_eq!(call(&["census", "-f", "x", "-g", "y^2", "--checkpoints", "10,5"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    let (status, _, err) = call(&["analyze", "-f", "x^(1/2)", "-g", "y"]);
    assert_eq!(status, 2);
    assert!(err.contains("position"), "{err}");
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# squares\nf = x\ng = y^2\ncheckpoints = 100,10000\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let (status, out, err) = call(&["census", "--config", cfg]);
    assert_eq!(status, 0, "{err}");
    assert_eq!(out, "B,count\n100,11\n10000,101\n");
    let (status, out, _) = call(&["census", "--config", cfg, "-g", "y^3"]);
    assert_eq!(status, 0);
    assert_eq!(out, "B,count\n100,9\n10000,43\n");
    std::fs::write(dir.path().join("bad.conf"), "param = t\n").unwrap();
    let bad = dir.path().join("bad.conf");
    assert_eq!(call(&["census", "--config", bad.to_str().unwrap(), "-f", "x", "-g", "y"]).0, 2);
}

#[test]
fn binary_reports_exit_status() {
    let bin = env!("CARGO_BIN_EXE_liftscope");
    let ok = Command::new(bin).args(["decompose", "-f", "x^2", "-g", "y"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "h(x) = x^2\n");
    let bad = Command::new(bin).args(["decompose", "-f", "x^2", "-g", "1/0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let threads = Command::new(bin)
        .env("LIFTSCOPE_THREADS", "2")
        .args(["census", "-f", "x", "-g", "y^2", "--max-B", "10000"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&threads.stdout), "B,count\n100,11\n1000,32\n10000,101\n");
}
