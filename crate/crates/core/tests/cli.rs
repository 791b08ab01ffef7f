use std::io::Write;
use std::process::{Command, Output};

fn depth2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_depth2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn instance_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn d2_on_s3_over_a3_file() {
    let f = instance_file(depth2::instance::catalog_source("s3-over-a3").unwrap());
    let o = depth2(&["d2", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("left quasibase size = 3"), "{text}");
    assert!(text.contains("right quasibase size = 3"), "{text}");
}

#[test]
fn normality_on_transposition_subgroup_fails() {
    let o = depth2(&["normality", "--catalog", "s3-over-c2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["values"]["verdicts.normal"], false);
    assert_eq!(doc["values"]["verdicts.Galois"], false);
    assert_eq!(doc["values"]["verdicts.depth two"], false);
    let consistent = doc["checks"].as_array().unwrap().iter().find(|c| c["name"] == "depth two ⇔ normal ⇔ Galois").unwrap();
    assert_eq!(consistent["passed"], true);
}

#[test]
fn weak_hopf_on_groupoid_3() {
    let o = depth2(&["weak-hopf", "--catalog", "m3-diagonal"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn input_errors_exit_2() {
    let bad = instance_file("field rational\nalgebra matrix 2\nsub\n  e11\n  e12\nend\n");
    let o = depth2(&["d2", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let no_sub = instance_file("algebra matrix 2\n");
    assert_eq!(depth2(&["d2", no_sub.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(depth2(&["frobnicate", "--catalog", "c2"]).status.code(), Some(2));
    assert_eq!(depth2(&["d2", "--catalog", "no-such-instance"]).status.code(), Some(2));
    assert_eq!(depth2(&["d2", "/no/such/file.d2"]).status.code(), Some(2));
}

#[test]
fn hopf_algebroid_over_f2_fails_on_separability() {
    let o = depth2(&["hopf-algebroid", "--catalog", "m2-f2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL symmetric separability element of B found"));
}

#[test]
fn structured_output_is_valid_json_for_every_command() {
    for cmd in ["check-algebra", "d2", "bialgebroid", "hopf-algebroid", "weak-hopf", "galois", "normality", "reconstruct", "all"] {
        let o = depth2(&[cmd, "--catalog", "s3-over-a3", "--format", "structured"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(doc["command"], cmd);
        assert_eq!(doc["passed"], true);
    }
}
