use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn frattini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frattini")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_spec(dir: &Path, file: &str, body: &str) -> String {
    let path = dir.join(file);
    fs::write(&path, body).unwrap();
    path.display().to_string()
}

fn corpus_spec(dir: &Path, name: &str, file: &str) -> String {
    let out = frattini(&["corpus-spec", name]);
    assert!(out.status.success());
    write_spec(dir, file, &stdout(&out))
}

#[test]
fn verify_default_is_byte_identical_across_runs() {
    let first = frattini(&["verify", "--corpus", "default", "--checks", "all"]);
    let second = frattini(&["verify", "--corpus", "default", "--checks", "all"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(first.stdout, second.stdout);
    assert!(!stdout(&first).contains("FAIL"));
}

#[test]
fn verify_doerk_on_order_100_example() {
    let out = frattini(&["verify", "--corpus", "C5^2:C4", "--checks", "doerk"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("doerk"));
    assert!(stdout(&out).contains("passed 1 failed 0"));
}

#[test]
fn verify_empty_selection_succeeds() {
    let out = frattini(&["verify", "--corpus"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "total 0 passed 0 failed 0 skipped 0\n");
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let frob = corpus_spec(dir.path(), "Frob20", "frob.spec");
    let out = frattini(&["analyze", &frob]);
    assert!(out.status.success());
    let report: json_flags::Report = json_flags::parse(&stdout(&out));
    assert_eq!(report.flag("in_b"), Some(false));
    assert_eq!(report.flag("in_f"), Some(false));
    assert_eq!(report.flag("is_phi_free"), Some(true));

    let c4 = write_spec(dir.path(), "c4.spec", "name: C4\ndegree: 4\ngen: (1 2 3 4)\n");
    let text = stdout(&frattini(&["analyze", &c4]));
    assert!(text.contains("\"frattini\": {\n    \"order\": 2"));
    assert!(text.contains("\"b_residual\": {\n    \"order\": 2"));

    let trivial = write_spec(dir.path(), "t.spec", "degree: 3\n");
    let text = stdout(&frattini(&["analyze", &trivial]));
    let report = json_flags::parse(&text);
    for key in ["is_phi_free", "in_b", "in_f", "in_nc"] {
        assert_eq!(report.flag(key), Some(true), "{key}");
    }
    assert!(!text.contains("\"order\": 2") && !text.contains("\"order\": 3"));
}

#[test]
fn analyze_writes_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let spec = corpus_spec(dir.path(), "S4", "s4.spec");
    let target = dir.path().join("report.json");
    let out = frattini(&["analyze", &spec, "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    assert!(fs::read_to_string(target).unwrap().contains("\"in_nc\": true"));
}

#[test]
fn residual_and_complement() {
    let dir = tempfile::tempdir().unwrap();
    let frob = corpus_spec(dir.path(), "Frob20", "frob.spec");
    assert!(stdout(&frattini(&["residual", &frob])).starts_with("order 10\n"));

    let a6 = corpus_spec(dir.path(), "Aut(A6)", "a6.spec");
    // x ↦ x + 1, x ↦ (1+i)²x and x ↦ -1/x generate PSL(2,9)
    let out = frattini(&[
        "complement",
        &a6,
        "--gen",
        "(1 2 3)(4 5 6)(7 8 9)",
        "--gen",
        "(2 7 3 4)(5 8 9 6)",
        "--gen",
        "(1 10)(2 3)(5 8)(6 9)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "none\n");

    let out = frattini(&["complement", &frob]);
    assert!(stdout(&out).starts_with("order 20\n"));

    let out = frattini(&["complement", &frob, "--gen", "(1 2)(3 5)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not normal"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_spec(dir.path(), "bad.spec", "degree: 3\ngen: (1 4)\n");
    assert_eq!(frattini(&["analyze", &bad]).status.code(), Some(2));
    let checksum = write_spec(dir.path(), "sum.spec", "degree: 3\ngen: (1 2 3)\ngen: (1 2)\norder: 7\n");
    assert_eq!(frattini(&["analyze", &checksum]).status.code(), Some(2));
    assert_eq!(frattini(&["verify", "--checks", "bogus"]).status.code(), Some(2));
    assert_eq!(frattini(&["--lattice-cap", "0", "corpus-list"]).status.code(), Some(2));
    let s4 = corpus_spec(dir.path(), "S4", "s4.spec");
    assert_eq!(frattini(&["--enum-cap", "5", "analyze", &s4]).status.code(), Some(3));
    let out = frattini(&["--enum-cap", "5", "verify", "--corpus", "S4", "--checks", "doerk"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("skipped: cap"));
}

#[test]
fn corpus_list_is_stable() {
    let a = stdout(&frattini(&["corpus-list"]));
    let b = stdout(&frattini(&["corpus-list"]));
    assert_eq!(a, b);
    assert!(a.contains("Aut(A6)") && a.contains("order 1440"));
}

// minimal reader for the flat boolean fields of the JSON report
mod json_flags {
    pub struct Report(String);

    pub fn parse(text: &str) -> Report {
        Report(text.to_string())
    }

    impl Report {
        pub fn flag(&self, key: &str) -> Option<bool> {
            let needle = format!("\"{key}\": ");
            let rest = &self.0[self.0.find(&needle)? + needle.len()..];
            if rest.starts_with("true") {
                Some(true)
            } else if rest.starts_with("false") {
                Some(false)
            } else {
                None
            }
        }
    }
}
