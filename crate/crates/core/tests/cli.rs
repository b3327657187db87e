use std::process::Command;

fn dchoose(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dchoose"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (
        out.status.success(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn check_class_reports_membership() {
    let (ok, out) = dchoose(&["check-class", "corpus/dodecahedron.rot"]);
    assert!(ok);
    assert!(out.starts_with("in class: yes"));
    let (_, out) = dchoose(&["check-class", "corpus/cube.rot"]);
    assert!(out.starts_with("in class: no"));
}

#[test]
fn color_prints_a_valid_coloring() {
    let (ok, out) = dchoose(&["color", "corpus/k4.rot", "--uniform", "3", "--defect", "1"]);
    assert!(ok);
    assert!(out.ends_with("valid: yes\n"));
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn color_from_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lists.txt");
    std::fs::write(&path, "1: 1 2 3\n2: 2 3 4\n3: 1 3 5\n4: 1 4 6\n5: 2 5 6\n").unwrap();
    let (ok, out) = dchoose(&[
        "color",
        "corpus/c5.rot",
        "--lists",
        path.to_str().unwrap(),
        "--recursive",
    ]);
    assert!(ok, "{out}");
    assert!(out.ends_with("valid: yes\n"));
}

#[test]
fn discharge_c5_conserves_charge() {
    let (ok, out) = dchoose(&["discharge", "corpus/c5.rot"]);
    assert!(ok);
    assert!(out.contains("total = -20/1"));
    assert!(out.contains("conserved: true"));
    assert!(out.contains("verdict: consistent"));
}

#[test]
fn choosable_spot_checks() {
    let (_, out) = dchoose(&["choosable", "corpus/k2.rot", "1", "0"]);
    assert!(out.contains("(1,0)*-choosable: false"));
    assert!(out.contains("1: 1\n2: 1"));
}

#[test]
fn girth_faces_and_configurations() {
    assert_eq!(
        dchoose(&["girth", "corpus/dodecahedron.rot"]).1,
        "girth: 5\n"
    );
    let (_, faces) = dchoose(&["faces", "corpus/cube.rot"]);
    assert_eq!(faces.lines().count(), 6);
    let (_, configs) = dchoose(&["find-config", "corpus/c5.rot"]);
    assert!(configs.lines().any(|l| l.starts_with("A1")));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.rot");
    std::fs::write(&path, "1: 2\n2: x\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dchoose"))
        .args(["girth", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn scan_passes_on_the_corpus() {
    let (ok, out) = dchoose(&["scan", "corpus", "--trials", "5"]);
    assert!(ok, "{out}");
    assert!(out.contains("failed: 0"));
}
