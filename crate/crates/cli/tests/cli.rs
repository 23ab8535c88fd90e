use std::process::{Command, Output};

use serde_json::Value;

fn flagheight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagheight"))
        .args(args)
        .env_remove("FLAGHEIGHT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn projective_line() {
    let doc = json(&flagheight(&["height", "--group", "A1", "--theta", "", "--lambda", "1"]));
    assert_eq!(doc["height"]["num"], "1");
    assert_eq!(doc["height"]["den"], "2");
    assert_eq!(doc["dim"], 1);
}

#[test]
fn odd_quadric_with_all_methods() {
    let doc = json(&flagheight(&[
        "height", "--group", "B2", "--theta", "2", "--lambda", "1,0", "--method", "all",
    ]));
    assert_eq!(doc["height"]["num"], "17");
    assert_eq!(doc["height"]["den"], "3");
    assert_eq!(doc["methods_agreed"], true);
    assert_eq!(doc["coxeter"], 4);
    assert_eq!(doc["cor82_ok"], true);
    assert_eq!(doc["conjecture_ok"], true);
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "group", "theta", "lambda", "dim", "height", "methods_agreed", "coxeter", "cor82_ok",
            "conjecture_ok", "denominator_factorization", "elapsed_ms"
        ]
    );
}

#[test]
fn single_methods_and_custom_y() {
    for method in ["substitution", "fixed-point", "harmo-bott"] {
        let doc = json(&flagheight(&[
            "height", "--group", "A2", "--theta", "1", "--lambda", "0,1", "--method", method, "--y", "2,-1/3",
        ]));
        assert_eq!((doc["height"]["num"].as_str(), doc["height"]["den"].as_str()), (Some("5"), Some("4")));
    }
}

#[test]
fn output_is_deterministic_apart_from_timing() {
    let args = ["height", "--group", "C3", "--theta", "1,2", "--lambda", "0,0,1"];
    let mut a = json(&flagheight(&args));
    let mut b = json(&flagheight(&args));
    a["elapsed_ms"] = Value::Null;
    b["elapsed_ms"] = Value::Null;
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn bwb_of_minus_three() {
    let doc = json(&flagheight(&["bwb", "--group", "A1", "--lambda", "-3"]));
    assert_eq!(doc["degree"], 1);
    assert_eq!(doc["lambda0"], serde_json::json!([1]));
    assert_eq!(doc["word"], serde_json::json!([1]));
}

#[test]
fn jantzen_and_char_tables() {
    let out = flagheight(&["jantzen-rhs", "--group", "A1", "--lambda", "3", "--output", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "prime,weight,coeff\n3,-1,1\n3,1,1\n");

    let doc = json(&flagheight(&["char", "--group", "A2", "--lambda", "1,1"]));
    assert_eq!(doc["dim"], 8);
    let doc = json(&flagheight(&["dim", "--group", "G2", "--lambda", "1,0"]));
    assert_eq!(doc["dim"], "7");
}

#[test]
fn scan_lists_every_maximal_parabolic() {
    let out = flagheight(&["scan", "--group", "B2", "--output", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("group,theta,lambda,dim,height,"));
    assert!(lines.iter().any(|l| l.contains(",17/3,")));
}

#[test]
fn text_output() {
    let out = flagheight(&["height", "--group", "A1", "--lambda", "1", "--output", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["height", "1/2"]));
}

#[test]
fn exit_statuses() {
    assert_eq!(flagheight(&["height", "--group", "Q7", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(flagheight(&["height", "--group", "A2", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(flagheight(&["height", "--group", "A2", "--theta", "5", "--lambda", "1,1"]).status.code(), Some(2));
    assert_eq!(flagheight(&["height", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        flagheight(&["height", "--group", "B2", "--theta", "1", "--lambda", "1,0"]).status.code(),
        Some(3)
    );
    assert_eq!(flagheight(&["dim", "--group", "A2", "--lambda", "-1,0"]).status.code(), Some(3));
    assert_eq!(
        flagheight(&["height", "--group", "A3", "--lambda", "1,1,1", "--cap", "5"]).status.code(),
        Some(4)
    );
    let out = flagheight(&["height", "--group", "A3", "--lambda", "1,1,1", "--cap", "5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 5"));
}

#[test]
fn cache_directory_is_used_and_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_flagheight"))
            .args(["height", "--group", "D4", "--theta", "2,3,4", "--lambda", "1,0,0,0"])
            .env("FLAGHEIGHT_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = json(&run());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let path = files[0].as_ref().unwrap().path();
    std::fs::write(&path, b"not a cache").unwrap();
    let repaired = run();
    assert!(String::from_utf8_lossy(&repaired.stderr).contains("coset cache rebuilt"));
    assert_eq!(json(&repaired)["height"], first["height"]);
}

#[test]
fn numbering_tables() {
    let out = flagheight(&["--print-numbering", "--group", "G2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1  short  linked to: 2 (triple)"));
    let all = String::from_utf8(flagheight(&["--print-numbering"]).stdout).unwrap();
    assert!(all.contains("F4") && all.contains("E8"));
}
