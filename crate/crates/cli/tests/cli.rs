use std::process::{Command, Output};

use pedal_cli::SceneDocument;

const T0: &str = "0,0 4,0 0,3";

fn pedal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pedal")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn close(a: [f64; 2], b: [f64; 2]) -> bool {
    (a[0] - b[0]).abs() < 1e-12 && (a[1] - b[1]).abs() < 1e-12
}

#[test]
fn verify_rejects_unknown_check() {
    let o = pedal(&["verify", "--check", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nope"));
}

#[test]
fn verify_json_single_check() {
    let o = pedal(&["verify", "--check", "T2.1", "--trials", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("\"id\":\"T2.1\""), "{out}");
}

#[test]
fn verify_with_impossible_tolerance_fails() {
    let o = pedal(&["verify", "--check", "T2.1", "--trials", "5", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn construct_reference_scene() {
    let o = pedal(&["construct", "--triangle", T0, "--point", "bevan", "--x", "0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = SceneDocument::from_json(&stdout(&o)).unwrap();
    assert!(close(doc.points["H'"], [2.0, 1.0]));
    assert!(close(doc.points["A_P"], [2.4, 1.2]));
    assert!(close(doc.p, [3.0, 2.0]));
    assert_eq!(SceneDocument::from_json(&doc.to_json()).unwrap(), doc);
}

#[test]
fn construct_degenerate_and_invalid_inputs() {
    let o = pedal(&["construct", "--triangle", T0, "--point", "bevan", "--x", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ConcentricCircles"));
    let o = pedal(&["construct", "--triangle", "0,0 1,1 2,2", "--point", "bevan", "--x", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pedal(&["construct", "--triangle", T0, "--point", "4,3", "--x", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("DegeneratePedal"));
}

#[test]
fn figure_layers_and_repeatability() {
    let dir = tempfile::tempdir().unwrap();
    let render = |name: &str, show: &str| {
        let path = dir.path().join(name);
        let o = pedal(&[
            "figure", "--triangle", T0, "--point", "bevan", "--x", "0.5", "-o",
            path.to_str().unwrap(), "--show", show,
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        std::fs::read_to_string(path).unwrap()
    };
    let bare = render("bare.svg", "");
    assert_eq!(bare.matches("<path").count(), 3);
    assert_eq!(bare.matches("<circle").count(), 0);

    let svg = render("a.svg", "circles,radical-axis");
    assert_eq!(svg.matches("<circle").count(), 2);
    assert_eq!(svg.matches("<line").count(), 1);
    assert_eq!(svg, render("b.svg", "circles,radical-axis"));
}

#[test]
fn figure_reports_unwritable_output() {
    let o = pedal(&[
        "figure", "--triangle", T0, "--point", "bevan", "--x", "0.5", "-o",
        "/nonexistent-dir/out.svg",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
