use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qlattice"))
        .args(args)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().unwrap(), v, text)
}

fn h4_file() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/h4.json")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn shipped_h4_validates() {
    let (code, v, _) = run(&["validate", p(&h4_file())]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 4);
    let (_, info, _) = run(&["info", p(&h4_file())]);
    assert_eq!(info["cosemisimple"], false);
}

#[test]
fn jordan_holder_example_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("jh.json");
    let (code, v, _) = run(&[
        "jordan-holder",
        "corpus:kS4",
        "--chain",
        "A4,V4,C2a",
        "--chain",
        "A4,V4,C2b",
        "--certify",
        p(&cert),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["factor_dims"], serde_json::json!([2, 3, 2, 2]));
    assert_eq!(v["verified"], true);
    let (code, report, _) = run(&["verify-cert", p(&cert)]);
    assert_eq!((code, &report["valid"]), (0, &Value::Bool(true)));

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    doc["series"]["pairing"] = serde_json::json!([0, 1, 2, 2]);
    std::fs::write(&cert, doc.to_string()).unwrap();
    let (code, report, _) = run(&["verify-cert", p(&cert)]);
    assert_eq!((code, &report["valid"]), (1, &Value::Bool(false)));
}

#[test]
fn refinable_series_is_rejected_as_input() {
    let (code, v, _) = run(&[
        "jordan-holder",
        "corpus:kS4",
        "--chain",
        "A4",
        "--chain",
        "V4",
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "not-composition");
}

#[test]
fn cocommutative_maximum_of_function_algebra() {
    let (code, _, text) = run(&["cocomm-max", "corpus:k^S3"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "{\n  \"dim\": 2\n}");
}

#[test]
fn normality_witness() {
    let (code, v, _) = run(&["normal", "corpus:kS3", "--subgroup", "C2"]);
    assert_eq!(code, 0);
    assert_eq!(v["normal"], false);
    assert!(v["witness"]["x"].is_string());
    let (_, v, _) = run(&["normal", "corpus:kS3", "--subgroup", "A3"]);
    assert_eq!(
        (&v["normal"], &v["quotient_dim"]),
        (&Value::Bool(true), &Value::from(2))
    );
}

#[test]
fn theorem_commands_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, Vec<&str>); 3] = [
        (
            "second-iso",
            vec!["corpus:kS3", "--subgroup", "C2", "--subgroup", "A3"],
        ),
        (
            "third-iso",
            vec!["corpus:k^S4", "--subgroup", "V4", "--subgroup", "A4"],
        ),
        (
            "zassenhaus",
            vec![
                "corpus:kS4",
                "--subgroup",
                "A4",
                "--subgroup",
                "1",
                "--subgroup",
                "D4",
                "--subgroup",
                "1",
            ],
        ),
    ];
    for (cmd, args) in cases {
        let cert = dir.path().join(format!("{cmd}.json"));
        let mut full = vec![cmd];
        full.extend(args);
        full.extend(["--certify", p(&cert)]);
        let (code, v, _) = run(&full);
        assert_eq!(code, 0, "{cmd}: {v}");
        let (code, report, _) = run(&["verify-cert", p(&cert)]);
        assert_eq!(code, 0, "{cmd}: {report}");
    }
    let (_, v, _) = run(&[
        "second-iso",
        "corpus:k^C4",
        "--subgroup",
        "C2",
        "--subgroup",
        "C2",
    ]);
    assert_eq!(
        (&v["generation"], &v["surjective"], &v["injective"]),
        (&false.into(), &true.into(), &false.into())
    );
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec![
            "zassenhaus",
            "corpus:k^S4",
            "--subgroup",
            "A4",
            "--subgroup",
            "1",
            "--subgroup",
            "D4",
            "--subgroup",
            "1",
        ],
        vec!["refine", "corpus:kS4", "--chain", "A4", "--chain", "V4"],
        vec!["haar", "corpus:H8"],
    ] {
        assert_eq!(run(&args).2, run(&args).2);
    }
}

#[test]
fn export_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    run(&["export", "corpus:H8", "--out", p(&a)]);
    run(&["export", p(&a), "--out", p(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn malformed_and_corrupted_files_exit_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value =
        serde_json::from_str(&std::fs::read_to_string(h4_file()).unwrap()).unwrap();
    let good = doc.clone();
    doc["mult"][2].as_array_mut().unwrap().pop();
    let bad = dir.path().join("arity.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let (code, v, _) = run(&["validate", p(&bad)]);
    assert_eq!((code, &v["error"]["kind"]), (2, &Value::from("schema")));
    assert!(v["error"]["message"].as_str().unwrap().contains("mult[2]"));

    let mut doc = good;
    doc["antipode"][0][0] = Value::from("2");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let (code, v, _) = run(&["validate", p(&bad)]);
    assert_eq!((code, &v["error"]["kind"]), (2, &Value::from("axioms")));
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .to_lowercase()
        .contains("antipode"));
}

#[test]
fn subgroup_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let (_, v, _) = run(&["meet", "corpus:kS4", "--subgroup", "A4", "--subgroup", "D4"]);
    assert_eq!(v["result"]["dim"], 4);
    let f = dir.path().join("v4.json");
    std::fs::write(&f, v["result"]["space"].to_string()).unwrap();
    let (code, v, _) = run(&[
        "join",
        "corpus:kS4",
        "--subgroup",
        p(&f),
        "--subgroup",
        "C3",
    ]);
    assert_eq!((code, &v["result"]["dim"]), (0, &Value::from(12)));
}

#[test]
fn modular_law_modes() {
    let (code, v, _) = run(&[
        "modular",
        "corpus:kS4",
        "--subgroup",
        "A4",
        "--subgroup",
        "V4",
        "--subgroup",
        "S3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);
    let (code, v, _) = run(&["corpus", "--survey"]);
    assert_eq!(code, 0);
    let s4 = v["modular_survey"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "kS4")
        .unwrap();
    assert_eq!(s4["violations"], 0);
    assert!(s4["unconstrained_failures"].as_u64().unwrap() > 0);
}
