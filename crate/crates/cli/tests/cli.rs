use std::io::Write;
use std::process::{Command, Output, Stdio};

fn annulus(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_annulus"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

const LINE_X1: &str = r#"{"kind":"line","x":{"l1":1,"l2":0,"l":0}}"#;
const LINE_MINUS_X2: &str = r#"{"kind":"line","x":{"l1":0,"l2":-1,"l":0}}"#;

#[test]
fn ext_from_flags_and_stdin() {
    let o = annulus(
        &["ext", "--p", "2", "--q", "2", "--from", LINE_X1, "--to", LINE_MINUS_X2],
        "",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1");
    let doc = format!(r#"{{"from":{LINE_X1},"to":{LINE_MINUS_X2}}}"#);
    let o = annulus(&["ext", "--p", "2", "--q", "2"], &doc);
    assert_eq!(stdout(&o), "1");
    let o = annulus(
        &["hom", "--p", "2", "--q", "2", "--from", LINE_MINUS_X2, "--to", LINE_X1],
        "",
    );
    assert_eq!(stdout(&o), "1");
}

#[test]
fn rho_example() {
    let o = annulus(&["rho", "--p", "4", "--q", "4", "--vertex", "[0,0,1,4]"], "");
    assert_eq!(stdout(&o), "[1,1,1,2]");
    let o = annulus(&["rho", "--p", "2", "--q", "3", "--vertex", "[0,1]"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lambda_graph_dot() {
    let o = annulus(
        &[
            "lambda-graph",
            "--p",
            "2",
            "--q",
            "2",
            "--c1-range",
            "-2:2",
            "--format",
            "dot",
        ],
        "",
    );
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"lambda\" {"));
    let id = |label: &str| {
        dot.lines()
            .find(|l| l.contains(&format!("[label=\"{label}\"]")))
            .and_then(|l| l.split_whitespace().next())
            .unwrap()
            .to_string()
    };
    let (a, b, c) = (id("(-1,0)"), id("(0,0)"), id("(0,1)"));
    let touching: Vec<_> = dot
        .lines()
        .filter(|l| l.contains(" -- ") && l.split([' ', ';']).any(|t| t == b))
        .collect();
    assert_eq!(touching.len(), 2);
    assert!(touching.iter().any(|l| l.contains(&a)));
    assert!(touching.iter().any(|l| l.contains(&c)));
}

#[test]
fn flip_chain_round_trips() {
    let t = stdout(&annulus(
        &["triangulate", "--p", "2", "--q", "2", "--vertex", "[0,0]"],
        "",
    ));
    let once = stdout(&annulus(&["flip", "--p", "2", "--q", "2", "--index", "0"], &t));
    let v: serde_json::Value = serde_json::from_str(&once).unwrap();
    let next = v["triangulation"].to_string();
    let added = &v["added"];
    let arcs = v["triangulation"]["arcs"].as_array().unwrap();
    let back_index = arcs.iter().position(|a| a == added).unwrap().to_string();
    let twice = stdout(&annulus(
        &["flip", "--p", "2", "--q", "2", "--index", &back_index],
        &next,
    ));
    let w: serde_json::Value = serde_json::from_str(&twice).unwrap();
    assert_eq!(w["triangulation"].to_string(), t);
}

#[test]
fn validation_and_errors() {
    let good = r#"[{"kind":"bridging","u":0,"w":0},{"kind":"bridging","u":0,"w":1}]"#;
    assert_eq!(
        stdout(&annulus(&["validate", "--p", "1", "--q", "1"], good)),
        r#"{"reason":null,"valid":true}"#
    );
    let bad = r#"[{"kind":"bridging","u":0,"w":0}]"#;
    let o = annulus(&["validate", "--p", "1", "--q", "1"], bad);
    assert!(o.status.success());
    assert!(stdout(&o).contains(r#""valid":false"#));

    let o = annulus(&["validate", "--p", "1", "--q", "1"], "{not json");
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["error"].is_string());

    let o = annulus(&["ext", "--p", "0", "--q", "1", "--from", LINE_X1, "--to", LINE_X1], "");
    assert_eq!(o.status.code(), Some(2));
    let o = annulus(&["flip", "--p", "1", "--q", "1", "--index", "5"], good);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn curves_and_sheaves() {
    let o = annulus(
        &["classify", "--p", "2", "--q", "3"],
        r#"{"kind":"bridging","u":0,"w":0}"#,
    );
    assert!(stdout(&o).contains(r#""text":"B(0,0) <-> O(0)""#));
    let pair = r#"{"alpha":{"kind":"bridging","u":0,"w":0},"beta":{"kind":"bridging","u":1,"w":-1}}"#;
    assert_eq!(stdout(&annulus(&["iplus", "--p", "2", "--q", "3"], pair)), "0");
    let o = annulus(
        &[
            "perp",
            "--p",
            "2",
            "--q",
            "3",
            "--object",
            r#"{"kind":"bridging","u":0,"w":0}"#,
        ],
        "",
    );
    assert_eq!(
        stdout(&o),
        r#"{"components":[{"category":"mod A_4","kind":"disk","marked":7}]}"#
    );
    let o = annulus(
        &[
            "ar",
            "--p",
            "3",
            "--q",
            "2",
            "--object",
            r#"{"kind":"peri_upper","s":1,"e":3}"#,
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["middle"].as_array().unwrap().len(), 1);
}

#[test]
fn bundle_commands() {
    let o = annulus(&["iota", "--p", "2", "--q", "2", "--vertex", "[0,0]"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    let o = annulus(&["reduce-to-fan", "--p", "2", "--q", "3", "--vertex", "[0,2]"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["moves"].is_array());
    let o = annulus(&["verify-lambda-iso", "--p", "2", "--q", "3", "--c1-range", "-1:1"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains(r#""equal":true"#));
    let o = annulus(
        &[
            "exchange-graph",
            "--p",
            "1",
            "--q",
            "1",
            "--vertex",
            "[0]",
            "--depth",
            "3",
        ],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 7);
    let o = annulus(
        &["act", "--p", "2", "--q", "3", "--word", "r1", "--vertex", "[0,1]"],
        "",
    );
    assert_eq!(stdout(&o), "[-2,0]");
    let almost = r#"[{"kind":"bridging","u":0,"w":0}]"#;
    let o = annulus(&["complements", "--p", "1", "--q", "1"], almost);
    assert_eq!(
        serde_json::from_str::<Vec<serde_json::Value>>(&stdout(&o))
            .unwrap()
            .len(),
        2
    );
}
