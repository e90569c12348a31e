use std::path::PathBuf;
use std::process::Command;

use gschur::cli::commands::run;
use gschur::cli::format::AlgebraFile;
use gschur::superalg::{fixtures, HeredityData};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn gschur(args: &[&str]) -> (i32, Value, String) {
    let mut argv = vec!["gschur"];
    argv.extend_from_slice(args);
    let (code, out, err) = run(argv);
    let v = if out.is_empty() { Value::Null } else { serde_json::from_str(&out).expect("json output") };
    (code, v, err)
}

#[test]
fn fixture_files_match_builtins_byte_for_byte() {
    for (name, file) in [
        ("trivial", fixtures::trivial_file()),
        ("superUT", fixtures::super_ut_file()),
        ("quiver2", fixtures::quiver2_file()),
        ("matrix11", fixtures::matrix_1_1_file()),
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(text, file.to_json(), "{name}");
        let parsed = AlgebraFile::from_json(&text, &fixture(name)).unwrap();
        let alg = HeredityData::from_file(&parsed).unwrap();
        assert_eq!(alg.to_file().to_json(), text, "{name} round trip");
    }
}

#[test]
fn verify_accepts_shipped_algebras() {
    for name in ["trivial", "superUT", "quiver2"] {
        let (code, v, _) = gschur(&["verify", "--algebra", &fixture(name), "--n", "2"]);
        assert_eq!(code, 0, "{name}: {v}");
        assert_eq!(v["axioms_passed"], true);
        assert_eq!(v["conforming"], true);
    }
}

#[test]
fn verify_flags_nonconforming_matrix_algebra() {
    let (code, v, _) = gschur(&["verify", "--algebra", &fixture("matrix11")]);
    assert_eq!(code, 1);
    assert_eq!(v["conforming"], false);
}

#[test]
fn verify_names_the_failed_axiom_on_a_corrupted_table() {
    let mut file = fixtures::super_ut_file();
    let entry = file
        .products
        .iter_mut()
        .find(|p| p.left[0] == "x" && p.right[0] == "e2")
        .unwrap();
    entry.result[0].0 = 2;
    let path = std::env::temp_dir().join(format!("gschur-corrupt-{}.json", std::process::id()));
    std::fs::write(&path, file.to_json()).unwrap();
    let (code, v, _) = gschur(&["verify", "--algebra", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    let axioms: Vec<&str> = v["failures"].as_array().unwrap().iter().map(|f| f["axiom"].as_str().unwrap()).collect();
    assert!(axioms.contains(&"a"), "{v}");
}

#[test]
fn malformed_file_is_a_usage_error_with_position() {
    let path = std::env::temp_dir().join(format!("gschur-bad-{}.json", std::process::id()));
    std::fs::write(&path, "{\n  \"name\": 3\n}\n").unwrap();
    let (code, _, err) = gschur(&["verify", "--algebra", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn char_of_trivial_two_row() {
    let (code, v, _) = gschur(&["char", "--algebra", "builtin:trivial", "--n", "2", "--lambda", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schur"], "s[2]");
    assert_eq!(v["agree"], true);
    assert_eq!(v["dim"], 3);

    let (code, v, _) = gschur(&["char", "--algebra", "builtin:trivial", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["tableau"], serde_json::json!({"z1z2": 1}));
}

#[test]
fn char_disagreement_exits_one() {
    let (code, v, _) = gschur(&["char", "--algebra", "builtin:trivial", "--n", "2", "--lambda", "1,1", "--mutate"]);
    assert_eq!(code, 1);
    assert_eq!(v["agree"], false);
}

#[test]
fn char_needs_component_for_bare_partition() {
    let (code, _, err) = gschur(&["char", "--algebra", "builtin:superUT", "--n", "1", "--lambda", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--i"), "{err}");
    let (code, v, _) = gschur(&["char", "--algebra", "builtin:superUT", "--n", "1", "--lambda", "1", "--i", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["lambda"], "((),(1))");
    assert_eq!(v["dim"], 2);
}

#[test]
fn filt_trivial_gives_two_certified_factors() {
    let (code, v, _) = gschur(&["filt", "--algebra", "builtin:trivial", "--n", "2", "--lambda", "1", "--c", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["factors"], serde_json::json!(["(2)", "(1,1)"]));
    assert_eq!(v["certified"], true);
    assert_eq!(v["tensor_dim"], 4);
}

#[test]
fn filt_degree_guard_and_truncation() {
    let (code, _, err) = gschur(&["filt", "--algebra", "builtin:trivial", "--n", "1", "--lambda", "1", "--c", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("requires d+c ≤ n"), "{err}");

    let (code, v, _) = gschur(&[
        "filt", "--algebra", "builtin:trivial", "--n", "1", "--truncate", "2", "--lambda", "1", "--c", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["factors"], serde_json::json!(["(2)"]));
    assert_eq!(v["truncated_from"], 2);
    assert_eq!(v["certified"], true);
}

#[test]
fn filt_with_mu_reports_multiplicities() {
    let (code, v, _) = gschur(&["filt", "--algebra", "builtin:trivial", "--n", "3", "--lambda", "1", "--mu", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["multiplicities"], serde_json::json!({"(1,1,1)": 1, "(2,1)": 1}));
    assert_eq!(v["lr_agree"], true);
}

#[test]
fn mul_and_coproduct_of_elements() {
    let (code, v, _) = gschur(&["mul", "--algebra", "builtin:trivial", "--n", "2", "eta[e0; 1; 2]", "eta[e0; 2; 1]"]);
    assert_eq!(code, 0);
    assert_eq!(v["product"], serde_json::json!({"eta[e0; 1; 1]": "1"}));

    let (code, v, _) = gschur(&["mul", "--algebra", "builtin:trivial", "--n", "1", "1/2*eta[e0; 1; 1]", "eta[e0;1;1]"]);
    assert_eq!(code, 0);
    assert_eq!(v["product"], serde_json::json!({"eta[e0; 1; 1]": "1/2"}));

    let (code, _, err) = gschur(&["mul", "--algebra", "builtin:trivial", "--n", "1", "eta[e0; 1; 1]", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("degree"), "{err}");

    let (code, v, _) = gschur(&["coproduct", "--algebra", "builtin:trivial", "--n", "1", "eta[e0; 1; 1]"]);
    assert_eq!(code, 0);
    assert_eq!(v["coproduct"].as_array().unwrap().len(), 2);

    let (code, _, _) = gschur(&["mul", "--algebra", "builtin:trivial", "--n", "1", "eta[zz; 1; 1]", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn text_output_is_flat() {
    let (code, out, _) = run(["gschur", "char", "--algebra", "builtin:trivial", "--n", "1", "--lambda", "1", "--text"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "schur: s[1]"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gschur");
    let ok = Command::new(bin).args(["verify", "--algebra", &fixture("trivial")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["nonsense"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let fail = Command::new(bin).args(["verify", "--algebra", &fixture("matrix11")]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
}
