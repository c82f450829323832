use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use cohom_cli::{run, DISPATCH, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use cohom_core::OPERATIONS;

fn cohom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohom"))
        .args(args)
        .env_remove("COHOM_CATALOG")
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cohom-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn every_operation_has_exactly_one_subcommand() {
    let mut owners: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (cmd, ops) in DISPATCH {
        for op in *ops {
            owners.entry(op).or_default().push(cmd);
        }
    }
    for op in OPERATIONS {
        assert_eq!(
            owners.get(op).map(Vec::len),
            Some(1),
            "{op}: {:?}",
            owners.get(op)
        );
    }
    assert_eq!(owners.len(), OPERATIONS.len(), "{:?}", owners.keys());
    for (cmd, _) in DISPATCH {
        let r = run(["cohom", cmd, "--help"]);
        assert_eq!(r.exit_code, EXIT_OK, "{cmd}");
    }
}

const INVOCATIONS: &[&[&str]] = &[
    &["brieskorn", "--m", "5", "--d", "3"],
    &["degrees", "--group", "E6"],
    &["quotient", "--embedding", "f4-in-e6"],
    &["hilbert", "--embedding", "spin8-in-f4"],
    &["gh-case", "--l-minus", "2", "--l-plus", "2", "--h", "0"],
    &["classify", "--diagram", "seven[pm=-3,qm=1,pp=5,qp=1]"],
    &["primitivity", "--diagram", "tensor-su[n=4]"],
    &[
        "mv-check",
        "--h",
        "1,0,0,2,0,0,1",
        "--k-plus",
        "1,0,0,1",
        "--k-minus",
        "1,0,0,1",
        "--n",
        "7",
    ],
    &["seven-family", "--realize", "7"],
];

#[test]
fn repeated_invocations_are_byte_identical() {
    for args in INVOCATIONS {
        let a = cohom(args);
        let b = cohom(args);
        assert!(
            a.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert!(v.is_object(), "{args:?}");
    }
}

#[test]
fn diagram_from_file_and_stdin() {
    let path = scratch("adjoint.json");
    std::fs::write(
        &path,
        r#"{"schema": 1, "name": "adjoint", "G": "SU(3)", "H": "t2-in-su3",
            "K_minus": "u2a-in-su3", "K_plus": "u2b-in-su3",
            "fiber_minus": "t2-in-u2", "fiber_plus": "t2-in-u2"}"#,
    )
    .unwrap();
    let out = cohom(&[
        "classify",
        path.to_str().unwrap(),
        "--compare-diagram",
        "adjoint-su3",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"]["kind"], "LinearSphere");
    assert_eq!(v["dimension"], 7);
    assert_eq!(v["comparison"]["equivalence"], "equal");

    let mut child = Command::new(env!("CARGO_BIN_EXE_cohom"))
        .args(["classify", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&std::fs::read(&path).unwrap())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
}

#[test]
fn invalid_diagrams_fail_the_check() {
    let path = scratch("bad.json");
    // K_minus/H is not a sphere: the fiber does not match the embeddings.
    std::fs::write(
        &path,
        r#"{"schema": 1, "name": "bad", "G": "SU(3)", "H": "t2-in-su3",
            "K_minus": "so3-in-su3", "K_plus": "u2b-in-su3",
            "fiber_minus": "t2-in-u2", "fiber_plus": "t2-in-u2"}"#,
    )
    .unwrap();
    let out = cohom(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_CHECK_FAILED));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_input_is_a_usage_error() {
    let path = scratch("malformed.json");
    std::fs::write(&path, "{ not json").unwrap();
    for args in [
        vec!["classify", path.to_str().unwrap()],
        vec!["no-such-command"],
        vec!["brieskorn", "--m", "three", "--d", "1"],
        vec![
            "seven-family",
            "--p-minus",
            "3",
            "--q-minus",
            "1",
            "--p-plus",
            "1",
            "--q-plus",
            "1",
        ],
        vec!["gh-case", "--l-minus", "2", "--l-plus", "2", "--h", "3"],
    ] {
        let out = cohom(&args);
        assert_eq!(out.status.code(), Some(EXIT_USAGE), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn catalog_path_comes_from_the_environment() {
    let path = scratch("catalog.toml");
    let shipped = include_str!("../../core/data/catalog.toml");
    assert!(shipped.contains("name = \"wu\""));
    std::fs::write(
        &path,
        shipped.replace("name = \"wu\"", "name = \"wu-renamed\""),
    )
    .unwrap();
    let run_with = |catalog: &std::path::Path, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_cohom"))
            .args(args)
            .env("COHOM_CATALOG", catalog)
            .output()
            .unwrap()
    };
    let out = run_with(&path, &["quotient", "--embedding", "g2-in-spin7"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run_with(&path, &["classify", "--diagram", "wu"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    let out = run_with(&path, &["classify", "--diagram", "wu-renamed"]);
    assert!(out.status.success());
    let out = run_with(&scratch("missing.toml"), &["degrees", "--group", "G2"]);
    assert!(out.status.success(), "degrees does not read the catalog");
    let out = run_with(&scratch("missing.toml"), &["verify-tables"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
