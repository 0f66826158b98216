mod common;

use common::{check_golden, run, run_json, run_ok};
use std::fs;

#[test]
fn catalog_json_lists_all_solids() {
    let v = run_json(&["catalog", "--format", "json"]);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 18);
    assert!(arr.iter().all(|r| r["euler"] == true));
    for key in ["name", "family", "inventory", "faces", "edges", "vertices", "roundness_ratio"] {
        assert!(arr.iter().all(|r| r.get(key).is_some()), "missing {key}");
    }
}

#[test]
fn catalog_single_solid() {
    let v = run_json(&["catalog", "--solid", "truncated-icosahedron", "--format", "json"]);
    assert!((v["roundness_ratio"].as_f64().unwrap() - 0.8674).abs() < 1e-4);
    let text = run_ok(&["catalog", "--solid", "Soccer Ball"]);
    assert!(text.contains("0.8674"));
}

#[test]
fn catalog_unknown_solid() {
    let out = run(&["catalog", "--solid", "nosuch"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nosuch") && err.contains("rhombicosidodecahedron"));
    assert!(out.stdout.is_empty());
}

#[test]
fn solve_defaults_reproduce_hand_calculation() {
    let text = run_ok(&["solve", "--diameter", "25", "--solid", "truncated-icosahedron", "--method", "surface-match"]);
    assert!(text.contains("625π"));
    assert!(text.contains("x² ≈ 27 cm²"));
    assert!(text.contains("27.04"));
    assert!(text.contains("x  ≈ 5.2 cm"));
    assert_eq!(text, run_ok(&["solve"]));
}

#[test]
fn solve_methods() {
    let v = run_json(&["solve", "--radius", "12.5", "--method", "inscribed", "--format", "json"]);
    assert!((v["side"].as_f64().unwrap() - 5.0443).abs() < 1e-4);
    assert_eq!(v["method"], "inscribed-fit");
    let v = run_json(&["solve", "--method", "compare", "--format", "json"]);
    assert!((v["side_ratio"].as_f64().unwrap() - 1.0309).abs() < 1e-4);
    for key in ["sphere", "solid", "surface_match", "inscribed_fit", "side_ratio", "flat_deficit"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn solve_json_is_golden() {
    let json = run_ok(&["solve", "--format", "json"]);
    check_golden("solve_surface_match.json", &json).unwrap();
    let json = run_ok(&["solve", "--method", "compare", "--format", "json"]);
    check_golden("solve_compare.json", &json).unwrap();
}

#[test]
fn solve_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports");
    let stdout = run_ok(&["solve", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(out.join("solve_report.json")).unwrap(), stdout);
}

#[test]
fn usage_errors() {
    for args in [
        &["solve", "--radius", "0"][..],
        &["solve", "--radius", "-3"],
        &["solve", "--radius", "5", "--diameter", "10"],
        &["template", "--radius", "0"],
        &["solve", "--method", "bogus"],
        &["mesh", "--scale-edge", "1", "--scale-radius", "2"],
    ] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn capability_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["mesh", "--solid", "octahedron", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("octahedron"));
    let out = run(&["solve", "--solid", "snub-cube", "--method", "inscribed"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unwritable_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let target = blocker.join("sub");
    let out = run(&["template", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn single_ball_template() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let v = run_json(&["template", "--balls", "1", "--out", d, "--format", "json"]);
    let mut pent = 0;
    let mut hex = 0;
    for sheet in v["sheets"].as_array().unwrap() {
        let svg = fs::read_to_string(sheet["path"].as_str().unwrap()).unwrap();
        let paths = svg.matches("<path").count();
        match sheet["color"].as_str().unwrap() {
            "black" => pent += paths,
            "white" => hex += paths,
            c => panic!("unexpected colour {c}"),
        }
    }
    assert_eq!((pent, hex), (12, 20));
    let seam: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("seam_report.json")).unwrap()).unwrap();
    assert_eq!(seam["pins_per_edge"], 22);
}

#[test]
fn cube_template_and_mesh() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let v = run_json(&["template", "--solid", "cube", "--balls", "1", "--out", d, "--format", "json"]);
    let total: u64 = v["sheets"].as_array().unwrap().iter().map(|s| s["placements"].as_u64().unwrap()).sum();
    assert_eq!(total, 6);
    let m = run_json(&["mesh", "--solid", "cube", "--scale-edge", "1", "--out", d, "--format", "json"]);
    assert_eq!((m["vertices"].as_u64(), m["faces"].as_u64(), m["edges"].as_u64()), (Some(8), Some(6), Some(12)));
}

#[test]
fn mesh_unit_edge_header() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    run_ok(&["mesh", "--scale-edge", "1", "--out", d]);
    let obj = fs::read_to_string(dir.path().join("truncated-icosahedron.obj")).unwrap();
    assert!(obj.contains("# circumradius 2.478019 cm"));
}

#[test]
fn stitch_multiplier_scales_thread() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let v = run_json(&["template", "--stitch", "3", "--thread", "2000", "--out", d, "--format", "json"]);
    let seam = &v["seam"];
    assert!((seam["seam_length"].as_f64().unwrap() - 3.0 * 936.0466).abs() < 0.01);
    assert_eq!(seam["thread_ok"], false);
}
