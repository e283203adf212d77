use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn cospec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cospec")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn charpoly_outputs() {
    let o = cospec(&["charpoly", "--kind", "L", &fixture("k2.g6")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("L [0, -2, 1]"));

    let o = cospec(&["--json", "charpoly", "--kind", "A", &fixture("x1.g6")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let poly = v[0]["charpoly"].as_str().unwrap();
    assert!(poly.starts_with("[-26121388032,") && poly.ends_with(", -150, 0, 1]"), "{poly}");

    let o = cospec(&["charpoly", "--kind", "N", &fixture("k2_plus_k1.g6")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("isolated"));
}

#[test]
fn check_outputs() {
    let o = cospec(&["--json", "check", &fixture("x1.g6"), "builtin:petersen", "builtin:p3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["one_walk_regular"]["pass"], true);
    assert_eq!(v[0]["srg"], serde_json::json!({ "n": 25, "k": 12, "a": 5, "c": 6 }));
    assert_eq!(v[1]["srg"], serde_json::json!({ "n": 10, "k": 3, "a": 0, "c": 1 }));
    assert_eq!(v[2]["one_walk_regular"]["pass"], false);
    assert_eq!(v[2]["one_walk_regular"]["witness"]["type"], "vertex");
}

#[test]
fn family_outputs() {
    let o = cospec(&["--json", "family", "--host", &fixture("x1.g6"), "--pattern", "K2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["classes"].as_array().unwrap().len(), 150);
    for k in ["A", "L", "N", "S"] {
        assert_eq!(v["family_charpolys"][k].as_array().unwrap().len(), 1);
    }

    let o = cospec(&["family", "--host", "builtin:latin5", "--pattern", "P3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("classes="));

    let o = cospec(&["--json", "family", "--host", &fixture("x1.g6"), "--pattern", "Y1", "--pattern2", "Y2", "--kind", "S"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["family_charpolys"]["S"].as_array().unwrap().len(), 1);

    let o = cospec(&["family", "--host", "builtin:path4", "--pattern", "K2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn family_output_independent_of_workers() {
    let run = |w: &str| stdout(&cospec(&["--json", "--workers", w, "family", "--host", "builtin:latin5", "--pattern", "Y2"]));
    assert_eq!(run("1"), run("4"));
    assert_eq!(cospec(&["--workers", "0", "table1"]).status.code(), Some(2));
}

#[test]
fn table_outputs() {
    let o = cospec(&["--json", "table1", &fixture("x1.g6"), "builtin:latin5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["counts"].as_array().unwrap().len(), 6);
    assert_eq!(v[0]["counts"][0], 150);
    assert_eq!(v[1]["counts"][0], 1);

    let dir = std::env::temp_dir().join(format!("cospec-empty-{}", std::process::id()));
    std::fs::write(&dir, "# nothing here\n").unwrap();
    let o = cospec(&["table1", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witness_outputs() {
    let o = cospec(&["--json", "witness", "--kind", "S", &fixture("y1.g6"), &fixture("y2.g6")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["q"].as_array().unwrap().len(), 5);
    for r in v["residuals"].as_array().unwrap() {
        assert!(r["value"].as_f64().unwrap() <= 1e-8 * r["scale"].as_f64().unwrap().max(1.0));
    }

    let o = cospec(&["witness", "--kind", "A", "builtin:complete3", "builtin:path3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not cospectral"));

    let o = cospec(&["--json", "witness", "--incidence", "--kind", "S", &fixture("y1.g6"), &fixture("y2.g6")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["incidence"]["q"].is_array());
}

#[test]
fn gram_witness_from_files() {
    let dir = std::env::temp_dir();
    let (b, c) = (dir.join(format!("cospec-b-{}.json", std::process::id())), dir.join(format!("cospec-c-{}.json", std::process::id())));
    // C = R B with R a rotation by 90 degrees in the first two coordinates
    std::fs::write(&b, "[[1, 2], [3, 4], [0, 1]]").unwrap();
    std::fs::write(&c, "[[-3, -4], [1, 2], [0, 1]]").unwrap();
    for method in ["svd", "reflection"] {
        let out = cospec(&["--json", "witness", "--gram", b.to_str().unwrap(), c.to_str().unwrap(), "--method", method]);
        assert_eq!(out.status.code(), Some(0), "{method}");
        let v = json(&out);
        assert_eq!(v["q"].as_array().unwrap().len(), 3);
        assert!(v["residuals"][0]["value"].as_f64().unwrap() < 1e-12);
    }
    std::fs::write(&c, "[[1, 0], [0, 1], [0, 0]]").unwrap();
    let out = cospec(&["witness", "--gram", b.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&b).unwrap();
    std::fs::remove_file(&c).unwrap();
}

#[test]
fn output_file_and_bad_input() {
    let path = std::env::temp_dir().join(format!("cospec-out-{}.txt", std::process::id()));
    let o = cospec(&["--output", path.to_str().unwrap(), "charpoly", "--kind", "A", "builtin:complete2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().contains("[-1, 0, 1]"));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(cospec(&["charpoly", "/no/such/file.g6"]).status.code(), Some(2));
    assert_eq!(cospec(&["charpoly", "--kind", "Z", "builtin:complete2"]).status.code(), Some(2));
}
