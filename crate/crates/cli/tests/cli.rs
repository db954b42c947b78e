use std::fs;
use std::path::Path;

use clap::Parser;
use hyperring_lab::catalog::load;
use hyperring_lab::{execute, Cli, CliError, Output};
use serde_json::Value;

fn run(args: &[&str]) -> Result<Output, CliError> {
    let cli =
        Cli::try_parse_from(std::iter::once("hyperring-lab").chain(args.iter().copied())).unwrap();
    execute(&cli)
}

fn write_zx(dir: &Path, file: &str, m: &str, x: &str, name: &str) -> String {
    let out = run(&["define", "zx", m, x, "--name", name]).unwrap();
    let path = dir.join(file);
    fs::write(&path, out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn profile_of_h1_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let h1 = write_zx(dir.path(), "h1.json", "4", "2", "H1");
    let out = run(&["profile", &h1, "--ideal", "0,2", "--smax", "6"]).unwrap();
    let v = json(&out);
    assert_eq!(v["omega"], serde_json::json!([1, 2, 2, 2, 2, 2]));
    assert_eq!(v["Omega"][0], 1);
    assert_eq!(v["Omega"][1], "inf");
    assert_eq!(out.code, 0);
}

#[test]
fn validate_reports_axiom_failures_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let h1 = write_zx(dir.path(), "h1.json", "4", "2", "H1");
    assert_eq!(run(&["validate", &h1]).unwrap().code, 0);
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&h1).unwrap()).unwrap();
    doc["mul"][1][1] = serde_json::json!([1]);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, doc.to_string()).unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]).unwrap();
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["flags"]["is_hyperring"], false);
    let err = run(&["classify", bad.to_str().unwrap()]).unwrap_err();
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn malformed_files_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{\"name\": \"x\",\n \"order\": 2,\n \"add\": [[0,1],[1,0]],\n \"mul\": [[[0],[0]],[[0],[1,1]]]}").unwrap();
    let err = run(&["validate", path.to_str().unwrap()]).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    fs::write(
        &path,
        "{\"name\": \"x\", \"order\": 2,\n \"add\": [[0,1],[1,0]]\n \"mul\": []}",
    )
    .unwrap();
    let err = run(&["validate", path.to_str().unwrap()]).unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn ideal_specifications() {
    let dir = tempfile::tempdir().unwrap();
    let h1 = write_zx(dir.path(), "h1.json", "4", "2", "H1");
    let all = json(&run(&["classify", &h1]).unwrap());
    let members: Vec<&Value> = all["ideals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| &i["ideal"])
        .collect();
    assert_eq!(
        members,
        [
            &serde_json::json!([0]),
            &serde_json::json!([0, 2]),
            &serde_json::json!([0, 1, 2, 3])
        ]
    );
    assert_eq!(
        run(&["classify", &h1, "--ideal", "0,1"])
            .unwrap_err()
            .exit_code(),
        2
    );
    assert_eq!(
        run(&["classify", &h1, "--ideal", "0,9"])
            .unwrap_err()
            .exit_code(),
        2
    );
    assert_eq!(
        run(&["profile", &h1, "--ideal", "0,1,2,3"])
            .unwrap_err()
            .exit_code(),
        2
    );
    let profiles = json(&run(&["profile", &h1]).unwrap());
    assert_eq!(profiles.as_array().unwrap().len(), 2);
}

#[test]
fn fundamental_reports_transfer() {
    let dir = tempfile::tempdir().unwrap();
    let h1 = write_zx(dir.path(), "h1.json", "4", "2", "H1");
    let h3 = write_zx(dir.path(), "h3.json", "4", "1,3", "H3");
    let out = run(&["fundamental", &h1]).unwrap();
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["classes"].as_array().unwrap().len(), 4);
    let out = run(&["fundamental", &h3]).unwrap();
    assert_eq!(out.code, 1);
    let v = json(&out);
    assert_eq!(v["ideals"][0]["first_disagreement"]["s"], 2);
    assert_eq!(v["ideals"][0]["first_disagreement"]["n"], 1);
}

#[test]
fn zx_texts() {
    let out = run(&["zx", "105", "2,4", "12", "3"]).unwrap();
    assert!(out.stdout.ends_with("closed for all s ≤ 12: yes\n"));
    let out = run(&["zx", "4", "2", "4", "2"]).unwrap();
    assert!(out.stdout.contains("s =  3: not closed, witness residue 1"));
    assert!(out.stdout.ends_with("closed for all s ≤ 4: no\n"));
    let v = json(&run(&["zx", "390", "7,11", "12", "4", "--weakly", "--json"]).unwrap());
    assert_eq!(v["all"], true);
    assert_eq!(run(&["zx", "4", "a", "3", "3"]).unwrap_err().exit_code(), 2);
}

#[test]
fn products_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let h1 = write_zx(dir.path(), "h1.json", "4", "2", "H1");
    let h3 = write_zx(dir.path(), "h3.json", "4", "1,3", "H3");
    let out = run(&["define", "product", &h1, &h3]).unwrap();
    let v = json(&out);
    assert_eq!(v["order"], 16);
    assert_eq!(v["name"], "(H1)x(H3)");
    assert_eq!(v["mul"][5][5], serde_json::json!([9, 11]));
}

#[test]
fn catalog_reproduces_and_detects_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("catalog");
    let h1 = write_zx(dir.path(), "h1.json", "4", "2", "H1");
    let cat_s = cat.to_str().unwrap();
    let first = run(&["profile", &h1, "--ideal", "0", "--catalog", cat_s]).unwrap();
    assert!(first.stderr.contains("wrote"));
    let again = run(&["profile", &h1, "--ideal", "0", "--catalog", cat_s]).unwrap();
    assert!(again.stderr.contains("reproduced"));
    assert_eq!(first.stdout, again.stdout);
    let files: Vec<_> = fs::read_dir(&cat)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);
    let name = files[0].file_name().unwrap().to_str().unwrap().to_string();
    assert!(name.contains("-profile-"));
    let mut entry = load(&files[0]).unwrap();
    assert_eq!(entry.instance, "H1");
    assert!(name.starts_with(&entry.content_hash[..16]));
    entry.result_hash = "0".repeat(64);
    fs::write(&files[0], serde_json::to_string(&entry).unwrap()).unwrap();
    let tampered = run(&["profile", &h1, "--ideal", "0", "--catalog", cat_s]).unwrap();
    assert_eq!(tampered.code, 1);
    assert!(tampered.stderr.contains("differs"));
    run(&["profile", &h1, "--ideal", "0,2", "--catalog", cat_s]).unwrap();
    assert_eq!(fs::read_dir(&cat).unwrap().count(), 2);
}

#[test]
fn verify_subset_and_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.json");
    fs::write(&cfg, r#"{"max_m": 5, "product_factor_max": 0}"#).unwrap();
    let out = run(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--check",
        "L2_11",
        "--check",
        "T3_9",
        "--json",
    ])
    .unwrap();
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert_eq!(v["vacuous"], serde_json::json!(["T3_9"]));
    assert!(out.stderr.contains("T3_9 is vacuous"));
    assert_eq!(out.code, 0);
    let out = run(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--check",
        "T2_9",
    ])
    .unwrap();
    assert_eq!(out.code, 1);
    assert!(out
        .stdout
        .contains("T2_9: H3 ideals [{0}] elements [2] (s,n) = (2,1)"));
    fs::write(&cfg, r#"{"max_m": 5, "bogus": 1}"#).unwrap();
    assert_eq!(
        run(&["verify", "--config", cfg.to_str().unwrap()])
            .unwrap_err()
            .exit_code(),
        2
    );
    assert_eq!(
        run(&["verify", "--check", "X9"]).unwrap_err().exit_code(),
        2
    );
}

#[test]
fn clap_rejects_conflicting_formats() {
    assert!(Cli::try_parse_from([
        "hyperring-lab",
        "zx",
        "4",
        "2",
        "3",
        "3",
        "--json",
        "--table"
    ])
    .is_err());
}
