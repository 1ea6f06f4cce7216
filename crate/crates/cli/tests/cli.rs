use std::path::PathBuf;
use std::process::{Command, Output};

fn quiver(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("quivers").join(name).display().to_string()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kacjet")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn code(args: &[&str]) -> (i32, String) {
    let o = run(args);
    (o.status.code().unwrap(), String::from_utf8_lossy(&o.stderr).into_owned())
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["kac", "--quiver", &quiver("c3.json"), "--alpha", "1"]), "q + 2\n");
    assert_eq!(
        stdout(&["kac-gloop", "--g", "1", "--alpha", "3", "--rank", "3"]),
        "q^7 + q^6 + 3q^5 + 2q^4 + 2q^3\n"
    );
    assert_eq!(
        stdout(&["limits", "--quiver", &quiver("c3.json")]),
        "A: (q^2+4q+1)/(q-1)^2\nB: (q^2+4q+1)/q^2\n"
    );
}

#[test]
fn json_records() {
    let s = stdout(&["kac", "--quiver", &quiver("c3.json"), "--alpha", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["kind"], "kac");
    assert_eq!(v["value"]["coefficients"], serde_json::json!(["2", "1"]));
    assert_eq!(v["rank"], serde_json::json!([1, 1, 1]));
    let out = tmp("limits.json");
    stdout(&["limits", "--quiver", &quiver("c3.json"), "--out", out.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["value"]["B"]["string"], "(q^2+4q+1)/q^2");
}

#[test]
fn brute_force_commands() {
    let a2 = quiver("a2.json");
    assert_eq!(stdout(&["fiber-count", "--quiver", &a2, "--alpha", "1", "--q", "3", "--lambda", "1,-1"]), "2\n");
    assert_eq!(stdout(&["kac", "--quiver", &quiver("c3.json"), "--alpha", "1", "--q", "2"]), "4\n");
    let zeta = stdout(&["jet-series", "--zeta-of", "gloop", "--param", "2", "--q", "2", "--n-max", "2"]);
    let brute = stdout(&["jet-series", "--quiver", &quiver("two_loop.json"), "--rank", "2", "--q", "2", "--n-max", "2"]);
    assert_eq!(zeta, brute);
    let h = stdout(&["hall", "--alpha", "2", "--q", "3", "--left", "0,1", "--right", "1,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&h).unwrap();
    assert_eq!(v["value"]["(0,1)[0,0] * (1,0)[0,0]"], serde_json::json!({"(1,1)[0,0]": "1"}));
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let two = quiver("two_loop.json");
    let args = ["fiber-count", "--quiver", &two, "--alpha", "2", "--rank", "2", "--q", "2", "--format", "json"];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    assert_eq!(one, stdout(&args));
}

#[test]
fn error_paths() {
    let bad = tmp("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let (c, e) = code(&["kac", "--quiver", bad.to_str().unwrap(), "--alpha", "1"]);
    assert_eq!(c, 2);
    assert!(e.contains("parse error"));

    let disc = tmp("disconnected.json");
    std::fs::write(&disc, r#"{"vertices":["a","b"],"arrows":[]}"#).unwrap();
    let (c, e) = code(&["kac", "--quiver", disc.to_str().unwrap(), "--alpha", "1"]);
    assert_eq!(c, 2);
    assert!(e.contains("not connected"));

    let (c, e) = code(&["limits", "--quiver", &quiver("a2.json")]);
    assert_eq!(c, 2);
    assert!(e.contains("not 2-connected"));

    let (c, e) = code(&["fiber-count", "--quiver", &quiver("two_loop.json"), "--alpha", "2", "--rank", "2", "--q", "2", "--max-space-log2", "10"]);
    assert_eq!(c, 3);
    assert!(e.contains("cap"));

    let (c, _) = code(&["kac", "--alpha", "1"]);
    assert_eq!(c, 2);
    let (c, _) = code(&["kac-gloop", "--g", "1", "--alpha", "1", "--rank", "4"]);
    assert_eq!(c, 2);
    let (c, _) = code(&["kac", "--quiver", "/nonexistent.json", "--alpha", "1"]);
    assert_eq!(c, 2);
}

#[test]
fn verify_suites() {
    let s = stdout(&["verify", "--suite", "symbolic,hall"]);
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS")).count(), 5, "{s}");
    // Brute-force checks cannot run under a tiny cap; that is reported as a failed identity.
    let (c, e) = code(&["verify", "--suite", "brute", "--max-space-log2", "4"]);
    assert_eq!(c, 4);
    assert!(e.contains("identity failed"), "{e}");
}
