use std::fs;
use std::path::{Path, PathBuf};

use cwidth::formats::{self, FormatError};
use cwidth_core::amalgam::{AmalgamSpec, Factor};
use cwidth_core::{fixtures, FiniteGroup};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn same_group(a: &FiniteGroup, b: &FiniteGroup) {
    assert_eq!(a.name(), b.name());
    assert_eq!(a.element_names(), b.element_names());
    assert_eq!(a.table_rows(), b.table_rows());
}

fn same_amalgam(a: &AmalgamSpec, b: &AmalgamSpec) {
    for f in [Factor::One, Factor::Two] {
        same_group(a.group(f), b.group(f));
        assert_eq!(a.subgroup(f), b.subgroup(f));
    }
    assert_eq!(a.identification(), b.identification());
}

#[test]
fn group_files_match_builtin_fixtures() {
    same_group(
        &formats::load_group(&fixture("s3.json")).unwrap(),
        &fixtures::s3(),
    );
    same_group(
        &formats::load_group(&fixture("z4.json")).unwrap(),
        &fixtures::z4(),
    );
    same_group(
        &formats::load_group(&fixture("z6.json")).unwrap(),
        &fixtures::z6(),
    );
    same_group(
        &formats::load_group(&fixture("f21.json")).unwrap(),
        &fixtures::f21(),
    );
}

#[test]
fn amalgam_and_hnn_files_match_builtin_fixtures() {
    same_amalgam(
        &formats::load_amalgam(&fixture("f21_z6.json")).unwrap(),
        &fixtures::f21_z6(),
    );
    same_amalgam(
        &formats::load_amalgam(&fixture("s3_s3.json")).unwrap(),
        &fixtures::s3_s3(),
    );
    let h = formats::load_hnn(&fixture("z6_hnn.json")).unwrap();
    let expected = fixtures::z6_hnn();
    same_group(h.base(), expected.base());
    assert_eq!(h.a_sub(), expected.a_sub());
    assert_eq!(h.phi(), expected.phi());
}

#[test]
fn graph_files_classify() {
    let labels: Vec<&str> = ["gog_s3_loop.json", "gog_f21_z6.json", "gog_z4_z4.json"]
        .iter()
        .map(|f| formats::load_graph(&fixture(f)).unwrap().classify().label())
        .collect();
    assert_eq!(labels, ["infinite", "infinite", "finite"]);
}

#[test]
fn json_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        "{\n  \"name\": \"G\",\n  \"elements\": [\"e\",]\n}\n",
    )
    .unwrap();
    let err = formats::load_group(&path).unwrap_err();
    assert!(matches!(err, FormatError::Json { .. }));
    assert!(err.to_string().contains("line 3"), "{err}");
}

#[test]
fn semantic_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(fixture("f21.json"), dir.path().join("f21.json")).unwrap();
    fs::copy(fixture("z6.json"), dir.path().join("z6.json")).unwrap();
    let path = dir.path().join("amalgam.json");
    fs::write(
        &path,
        r#"{"g1": "f21.json", "g2": "z6.json", "h1": ["e", "y", "q"], "h2": ["e", "c2", "c4"],
            "iso": [["e", "e"], ["y", "c2"], ["y2", "c4"]]}"#,
    )
    .unwrap();
    let err = formats::load_amalgam(&path).unwrap_err().to_string();
    assert!(err.contains("h1[2]"), "{err}");

    fs::write(
        &path,
        r#"{"g1": "f21.json", "g2": "z6.json", "h1": ["e", "x"], "h2": ["e", "c3"], "iso": []}"#,
    )
    .unwrap();
    let err = formats::load_amalgam(&path).unwrap_err().to_string();
    assert!(err.contains("h1"), "{err}");
}

#[test]
fn mixed_group_formats_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    fs::write(
        &path,
        r#"{"name": "G", "degree": 2, "elements": ["e"], "table": [[0]]}"#,
    )
    .unwrap();
    assert!(matches!(
        formats::load_group(&path),
        Err(FormatError::Field { .. })
    ));
    fs::write(
        &path,
        r#"{"name": "G", "degree": 2, "permutations": {"s": [0, 0]}}"#,
    )
    .unwrap();
    assert!(matches!(
        formats::load_group(&path),
        Err(FormatError::Group { .. })
    ));
}

#[test]
fn missing_files_are_reported() {
    let err = formats::load_group(Path::new("/nonexistent/g.json")).unwrap_err();
    assert!(matches!(err, FormatError::NotFound { .. }));
}
