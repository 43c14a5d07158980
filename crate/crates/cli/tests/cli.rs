use std::path::Path;
use std::process::{Command, Output};

fn scmlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scmlab")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn example_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out = scmlab(&["example", "25a"]);
    assert!(out.status.success());
    let job = write(dir.path(), "25a.job", std::str::from_utf8(&out.stdout).unwrap());
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let run = scmlab(&["run", &job, "--seed", "3", "--out", path.to_str().unwrap()]);
        assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    }
    let a = std::fs::read(a).unwrap();
    assert_eq!(a, std::fs::read(b).unwrap());
    let stdout = scmlab(&["run", &job, "--seed", "3"]);
    assert_eq!(stdout.stdout, a);
    let doc: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(doc["config"]["seed"], 3);
    assert_eq!(doc["results"][0]["data"]["strongly_cm"], false);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let parse = write(dir.path(), "parse.job", "ring R = p [x, y];\nreport scm(I);\n");
    assert_eq!(scmlab(&["run", &parse]).status.code(), Some(2));
    let pre = write(dir.path(), "pre.job", "ring R = p [x, y];\nideal I = gens(x, y + 1);\n");
    assert_eq!(scmlab(&["run", &pre]).status.code(), Some(3));
    let lemma = write(
        dir.path(),
        "lemma.job",
        "ring R = p [x, y];\nideal I = gens(x^2, x*y, y^3);\nreport lemma21(I, 2, 1);\n",
    );
    assert_eq!(scmlab(&["run", &lemma]).status.code(), Some(3));
    let empty = write(dir.path(), "empty.job", "");
    let out = scmlab(&["run", &empty, "--field", "Q"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["results"], serde_json::json!([]));
    assert_eq!(scmlab(&["run", &empty, "--field", "ZZ/4"]).status.code(), Some(2));
    assert_eq!(scmlab(&["run", &empty, "--tier", "3"]).status.code(), Some(1));
    assert_eq!(scmlab(&["example", "nope"]).status.code(), Some(1));
    assert_eq!(scmlab(&["run", "/nonexistent/job"]).status.code(), Some(3));
}
