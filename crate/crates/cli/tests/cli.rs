use std::path::PathBuf;
use std::process::{Command, Output};

fn skewlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewlab"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let out = skewlab(&["check", "skew-mccoy", "instances/exp25.json", "--bounds", "1,1"]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "Fails");
    assert_eq!(report["witness"]["m"]["text"], "(1,0)*x");
    assert_eq!(report["witness"]["f"]["text"], "(1,1) + (1,0)*x");

    assert_eq!(code(&skewlab(&["check", "compatible", "instances/exp25.json"])), 1);
    assert_eq!(code(&skewlab(&["check", "mccoy", "instances/exp25_id.json", "--bounds", "2,2"])), 0);
}

#[test]
fn check_writes_the_report_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("star.json");
    let out = skewlab(&["check", "star", "instances/exp25.json", "--bounds", "1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(out.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["witness"]["residue"]["text"], "(1,0) + (1,0)*x");
}

#[test]
fn input_errors_exit_two_with_a_location() {
    let out = skewlab(&["check", "no-such-property", "instances/exp25.json"]);
    assert_eq!(code(&out), 2);

    let bad = scratch("bad_sigma.json", r#"{"name": "b", "ring": {"kind": "zmod", "n": 4}, "sigma": {"kind": "table", "images": [0, 1, 1, 3]}}"#);
    let out = skewlab(&["check", "compatible", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).starts_with("sigma:"), "{}", stderr(&out));

    let broken = scratch("broken.json", "{\"name\": \"b\",\n \"ring\": }");
    let out = skewlab(&["check", "compatible", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    assert_ne!(code(&skewlab(&["check", "compatible", "instances/exp25.json", "--bounds", "2"])), 0);
}

#[test]
fn examples_pass_and_unknown_names_are_rejected() {
    for name in ["exp-2.5", "ex-2.12", "r4-s4z2"] {
        let out = skewlab(&["example", name]);
        assert_eq!(code(&out), 0, "{name}: {}", stderr(&out));
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), format!("PASS {name}"));
    }
    assert_eq!(code(&skewlab(&["example", "nope"])), 2);
}

#[test]
fn laws_on_corpora() {
    let out = skewlab(&["laws", "corpus/zero.json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["violations"], 0);

    let corrupt = scratch(
        "corrupt.json",
        r#"[{"name": "z2", "ring": {"kind": "zmod", "n": 2}},
            {"name": "bad", "ring": {"kind": "zmod", "n": 4}, "delta": {"kind": "table", "images": [0, 1, 0, 0]}}]"#,
    );
    let out = skewlab(&["laws", corrupt.to_str().unwrap(), "--bounds", "1,1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("instances[1] (bad).delta"), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["instances"], serde_json::json!(["z2"]));
}

#[test]
fn jobs_do_not_change_the_law_report() {
    let run = |jobs: &str| {
        let out = skewlab(&["laws", "corpus/default.json", "--bounds", "1,1", "--jobs", jobs]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}
