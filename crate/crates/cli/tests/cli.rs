use std::process::{Command, Output};

use qgrass::suites::Report;

fn qgrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_normal_forms() {
    let o = qgrass(&["eval", "--mn", "2,4", "[12][34] - q^2*[34][12]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
    let o = qgrass(&["eval", "[1,2|1,2]"]);
    assert_eq!(stdout(&o).trim(), "x[1,1]x[2,2] - q*x[1,2]x[2,1]");
    let o = qgrass(&["eval", "x[1,1]"]);
    assert_eq!(stdout(&o).trim(), "x[1,1]");
}

#[test]
fn eval_errors_exit_nonzero() {
    let o = qgrass(&["eval", "x[1,1] +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("8"));
    let o = qgrass(&["eval", "--mn", "2,2", "x[3,1]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qgrass(&["eval", "[12]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn straighten_cyclic_product() {
    let o = qgrass(&[
        "straighten",
        "--order",
        "cyclic:2",
        "--mn",
        "2,4",
        "--product",
        "[12][34]",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms: Vec<(String, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["coeff"].as_str().unwrap().to_string(),
                t["monomial"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        terms,
        vec![
            ("-1".to_string(), "[23][14]".to_string()),
            ("q".to_string(), "[24][13]".to_string())
        ]
    );
}

#[test]
fn poset_dump_is_an_edge_list() {
    let o = qgrass(&["poset", "dump", "--order", "cyclic:2", "--mn", "2,4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 6);
    assert!(edges.iter().any(|e| e[0] == "[23]" && e[1] == "[24]"));
}

#[test]
fn verify_writes_round_tripping_json() {
    let dir = std::env::temp_dir().join(format!("qgrass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = qgrass(&[
        "verify",
        "qgasl",
        "--mn",
        "2,4",
        "--order",
        "cyclic:2",
        "--degree",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.schema, 1);
    assert!(report.passed());
    assert_eq!(report.summary.total, report.records.len());
    assert_eq!(report.to_json(), text);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suites_from_the_command_line() {
    for args in [
        &["verify", "g24-table", "--mn", "2,4"][..],
        &["verify", "dhom", "--mn", "2,4", "--a", "4"],
        &["verify", "qijm", "--mn", "2,5", "--a", "2", "--t", "2"],
        &["verify", "plucker", "--mn", "3,6"],
        &[
            "verify",
            "order-iso",
            "--mn",
            "2,5",
            "--order",
            "cyclic:all",
        ],
    ] {
        let o = qgrass(args);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn json_to_stdout() {
    let o = qgrass(&["verify", "relations", "--mn", "2,2", "--json", "-"]);
    assert!(o.status.success());
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.summary.total, 6);
}

#[test]
fn bad_configs_are_rejected() {
    for args in [
        &["verify", "dhom", "--mn", "2,2"][..],
        &["verify", "qgasl", "--mn", "2,4", "--order", "cyclic:9"],
        &["verify", "relations", "--mn", "3,2"],
        &["verify", "g24-table", "--mn", "2,5"],
    ] {
        let o = qgrass(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("invalid configuration"));
    }
    let o = qgrass(&["verify", "nope", "--mn", "2,4"]);
    assert!(!o.status.success());
}
