use std::path::Path;
use std::process::{Command, Output};

fn symsplit(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsplit"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let dir = tempfile::tempdir().unwrap();
    let out = symsplit(dir.path(), args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn split_json_of_two() {
    assert_eq!(
        run_ok(&["split", "2", "--json"]),
        "{\"sym\":{\"[2]\":1},\"alt\":{}}\n"
    );
}

#[test]
fn split_worked_example() {
    let text = run_ok(&["split", "3,2,2"]);
    assert!(
        text.contains("S^2[3,2,2] = [7] + [6,1] + 2[5,2] + [4,3] + 2[4,2,1] + 2[3,2,2]"),
        "{text}"
    );
    assert!(
        text.contains("A^2[3,2,2] = [5,1,1] + [4,2,1] + 2[4,1,1,1] + [3,3,1]"),
        "{text}"
    );
    assert_eq!(run_ok(&["split", "3,2^2"]), text);
}

#[test]
fn split_tsv_and_json_agree() {
    let json: serde_json::Value =
        serde_json::from_str(&run_ok(&["split", "4,4", "--json"])).unwrap();
    let tsv = run_ok(&["split", "4,4", "--tsv"]);
    let rows: Vec<&str> = tsv.lines().skip(1).collect();
    let sym = json["sym"].as_object().unwrap();
    let alt = json["alt"].as_object().unwrap();
    assert_eq!(rows.len(), sym.len() + alt.len());
    for row in rows {
        let f: Vec<&str> = row.split('\t').collect();
        let half = if f[0] == "S" { sym } else { alt };
        assert_eq!(half[f[1]].as_i64().unwrap().to_string(), f[2]);
    }
}

#[test]
fn coefficients() {
    assert_eq!(run_ok(&["coeff", "sg", "3,2,1", "3,2,1"]), "3\n");
    assert_eq!(run_ok(&["coeff", "ag", "3,2,1", "3,2,1"]), "2\n");
    assert_eq!(run_ok(&["coeff", "g", "2,1", "2,1", "1,1,1"]), "1\n");
    assert_eq!(run_ok(&["coeff", "ag", "3,3", "3,1,1,1"]), "1\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        symsplit(dir.path(), &["coeff", "sg", "3,2", "2,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        symsplit(dir.path(), &["split", "2,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        symsplit(dir.path(), &["split", "40"]).status.code(),
        Some(3)
    );
    assert_eq!(
        symsplit(dir.path(), &["--max-n", "5", "split", "4,2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        symsplit(dir.path(), &["verify", "SAXL_REFINED", "--k", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn unknown_id_lists_available() {
    let dir = tempfile::tempdir().unwrap();
    let out = symsplit(dir.path(), &["verify", "NO_SUCH_THING"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    for id in ["MW_HOOKS", "CATALAN", "EVEN_HOOKS", "SAXL_REFINED"] {
        assert!(err.contains(id), "{err}");
    }
}

#[test]
fn verify_examples() {
    assert!(run_ok(&["verify", "MW_HOOKS", "--max-n", "12"]).ends_with("0 fail, 0 skip\n"));
    let catalan = run_ok(&["verify", "CATALAN", "--max-k", "8"]);
    for c in [
        "C_k=1 ",
        "C_k=2 ",
        "C_k=5 ",
        "C_k=14 ",
        "C_k=42 ",
        "C_k=132 ",
        "C_k=429 ",
        "C_k=1430 ",
    ] {
        assert!(catalan.contains(c), "{catalan}");
    }
    let saxl = run_ok(&["verify", "SAXL_REFINED", "--k", "3"]);
    assert!(
        saxl.contains("alt_missing: [6] [5,1] [4,2] [2,2,2] [1,1,1,1,1,1]"),
        "{saxl}"
    );
    assert!(saxl.contains("SAXL_REFINED 3 CONSISTENT"), "{saxl}");
    let hstz = run_ok(&["verify", "hstz-refined"]);
    assert!(hstz.contains("[6,2,1,1,1,1] [5,3,2,1,1]"), "{hstz}");
}

#[test]
fn verify_json_reports() {
    let reports: serde_json::Value =
        serde_json::from_str(&run_ok(&["verify", "KK_SPLIT", "--k", "3", "--json"])).unwrap();
    let r = &reports[0];
    assert_eq!(r["formula_id"], "KK_SPLIT");
    assert_eq!(r["status"], "pass");
    assert!(r["diffs"].as_array().unwrap().is_empty());
    let claims: serde_json::Value =
        serde_json::from_str(&run_ok(&["verify", "HOMOGENEOUS", "--n", "6", "--json"])).unwrap();
    assert_eq!(claims[0]["status"], "CONSISTENT");
    assert_eq!(claims[0]["n_or_k"], 6);
}

#[test]
fn output_is_identical_across_thread_counts() {
    let one = run_ok(&[
        "--threads",
        "1",
        "verify",
        "NEIGHBOUR",
        "--max-n",
        "9",
        "--json",
    ]);
    let four = run_ok(&[
        "--threads",
        "4",
        "verify",
        "NEIGHBOUR",
        "--max-n",
        "9",
        "--json",
    ]);
    assert_eq!(one, four);
    assert_eq!(
        run_ok(&["--threads", "1", "split", "5,3,1", "--json"]),
        run_ok(&["--threads", "3", "split", "5,3,1", "--json"])
    );
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let cold = stdout(&symsplit(dir.path(), &["split", "4,3,2,1", "--json"]));
    let warm = stdout(&symsplit(dir.path(), &["cache", "warm", "--n", "10"]));
    assert!(warm.starts_with("n=10 rows=42 -> "), "{warm}");
    let status = stdout(&symsplit(dir.path(), &["cache", "status"]));
    assert!(status.contains("n=10 rows=42"), "{status}");
    assert_eq!(
        stdout(&symsplit(dir.path(), &["split", "4,3,2,1", "--json"])),
        cold
    );
    let cleared = stdout(&symsplit(dir.path(), &["cache", "clear"]));
    assert!(cleared.starts_with("removed 1 table(s)"), "{cleared}");
    assert!(stdout(&symsplit(dir.path(), &["cache", "status"])).contains("empty"));
    assert_eq!(
        stdout(&symsplit(dir.path(), &["split", "4,3,2,1", "--json"])),
        cold
    );
}

#[test]
fn corrupt_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    symsplit(dir.path(), &["cache", "warm", "--n", "4"]);
    std::fs::write(dir.path().join("chars-n4.json"), "{not json").unwrap();
    let out = symsplit(dir.path(), &["split", "2,2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"sym\":{\"[4]\":1,\"[2,2]\":1},\"alt\":{\"[1,1,1,1]\":1}}\n"
    );
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}
