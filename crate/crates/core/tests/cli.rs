use std::process::Command;

use goncarov::json::poly_from_json;
use goncarov::lattice::zeta_enumerator;
use goncarov::MultiPoly;

fn goncarov(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_goncarov")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn compute_outputs_reparse() {
    let (code, out, _) = goncarov(&["compute", "zeta", "--n", "3"]);
    assert_eq!(code, 0);
    let p = poly_from_json(out.trim()).unwrap();
    assert_eq!(p, zeta_enumerator(3).unwrap());
    assert_eq!(format!("{}\n", serde_json::to_string(&p).unwrap()), out);

    let (code, out, _) = goncarov(&["compute", "type", "--family", "cycles", "--n-max", "3"]);
    assert_eq!(code, 0);
    let seq: Vec<MultiPoly> = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(seq.len(), 4);
    assert_eq!(serde_json::to_string(&seq).unwrap(), out.trim());
}

#[test]
fn spec_examples() {
    let (_, out, _) = goncarov(&["compute", "zeta", "--n", "2", "--pretty"]);
    assert_eq!(out.trim(), "x^2 + w_2*x");
    let (_, out, _) = goncarov(&[
        "compute",
        "goncarov",
        "--family",
        "set_partitions",
        "--y",
        "all=1",
        "--grid",
        "1,2,3",
        "--n",
        "3",
        "--at",
        "x=0",
        "--negate-grid",
    ]);
    assert_eq!(poly_from_json(out.trim()).unwrap(), MultiPoly::int(29));
    let (_, out, _) =
        goncarov(&["compute", "goncarov-constant", "--basic", "monomials", "--grid", "z", "--n", "2", "--pretty"]);
    assert_eq!(out.trim(), "-z_0^2 + 2*z_0*z_1");
}

#[test]
fn custom_family_file() {
    let dir = std::env::temp_dir().join(format!("goncarov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cycles.json");
    std::fs::write(&path, r#"{"name": "c", "closed_form": "cycles", "d": {"1": 1, "2": 1, "3": 2}}"#).unwrap();
    let arg = format!("@{}", path.display());
    let (code, out, _) = goncarov(&["compute", "hand", "--family", &arg, "--n", "3", "--pretty"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x^3 + 3*x^2 + 2*x");
    std::fs::write(&path, r#"{"closed_form": "cycles", "d": {"3": 5}}"#).unwrap();
    assert_eq!(goncarov(&["compute", "hand", "--family", &arg, "--n", "3"]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_and_tables() {
    let (code, out, _) = goncarov(&["verify", "parking", "--n-max", "4", "--grid", "1,2,3,4", "--x", "6"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = goncarov(&["verify", "lattice", "--n-max", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));

    let (_, out, _) = goncarov(&["tables", "a030019", "--n-max", "5", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(out.trim()).unwrap();
    let values: Vec<&str> = rows.iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["1", "1", "4", "29", "311", "4447"]);

    let (_, out, _) = goncarov(&["tables", "paper-goldens", "--section", "two_regular", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(out.trim()).unwrap();
    for row in &rows {
        let printed: MultiPoly = serde_json::from_value(row["printed"].clone()).unwrap();
        let computed: MultiPoly = serde_json::from_value(row["computed"].clone()).unwrap();
        assert_eq!(printed == computed, row["status"] == "match");
    }
    let flagged: Vec<&str> =
        rows.iter().filter(|r| r["status"] == "erratum-candidate").map(|r| r["label"].as_str().unwrap()).collect();
    assert_eq!(flagged, ["h_4", "t_4"]);
}

#[test]
fn usage_errors() {
    let (code, _, err) = goncarov(&["compute", "zeta", "--n", "2", "--grid"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(goncarov(&["frobnicate"]).0, 2);
    assert_eq!(goncarov(&["verify", "everything"]).0, 2);
    let (code, _, err) = goncarov(&["compute", "goncarov", "--n", "4", "--grid", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("grid has 2 nodes"));
}
