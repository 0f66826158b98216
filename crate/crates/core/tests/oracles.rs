//! Closed-form coefficients checked against the brute-force hull oracle, and
//! catalog-wide invariants.

use approx::assert_relative_eq;
use polysphere::catalog::{
    catalog, catalog_lookup, circumsphere_volume_ratio, derive_counts, euler_check, solid_report, solid_vertices,
    truncated_icosahedron_vertices, FaceInventory,
};
use polysphere::hull::hull_metrics_oracle;
use polysphere::mesh::{build_solid_mesh, MeshScale};
use polysphere::polygon::{regular_polygon_area, PolygonSpec};
use proptest::prelude::*;
use std::f64::consts::PI;

#[test]
fn truncated_icosahedron_hull_matches_coefficients() {
    let s5 = 5f64.sqrt();
    let hull = hull_metrics_oracle(&truncated_icosahedron_vertices(1.0).unwrap()).unwrap();
    assert_eq!(hull.faces, 32);
    assert_relative_eq!(hull.volume, (125.0 + 43.0 * s5) / 4.0, max_relative = 1e-9);
    assert_relative_eq!(hull.volume, 55.28773075812274, max_relative = 1e-9);
    assert_relative_eq!(hull.circumradius, (58.0 + 18.0 * s5).sqrt() / 4.0, max_relative = 1e-9);
    let flat = 12.0 * regular_polygon_area(PolygonSpec::new(5, 1.0).unwrap()).unwrap()
        + 20.0 * regular_polygon_area(PolygonSpec::new(6, 1.0).unwrap()).unwrap();
    assert_relative_eq!(hull.surface, flat, max_relative = 1e-9);

    let ti = catalog_lookup("truncated-icosahedron").unwrap();
    assert_relative_eq!(ti.surface_coeff.unwrap(), flat, max_relative = 1e-12);
}

#[test]
fn every_constructed_solid_matches_its_coefficients() {
    for s in catalog().iter().filter(|s| s.has_coordinates()) {
        let hull = hull_metrics_oracle(&solid_vertices(s, 1.0).unwrap()).unwrap();
        assert_eq!(hull.faces as u32, s.faces, "{}", s.name);
        assert_relative_eq!(hull.volume, s.volume_coeff.unwrap(), max_relative = 1e-9);
        assert_relative_eq!(hull.surface, s.surface_coeff.unwrap(), max_relative = 1e-9);
        assert_relative_eq!(hull.circumradius, s.circumradius_coeff.unwrap(), max_relative = 1e-9);
    }
}

#[test]
fn rhombicosidodecahedron_roundness_both_routes() {
    let rid = catalog_lookup("rhombicosidodecahedron").unwrap();
    let closed = circumsphere_volume_ratio(rid).unwrap();
    let hull = hull_metrics_oracle(&solid_vertices(rid, 1.0).unwrap()).unwrap();
    let oracle = hull.volume / (4.0 * PI / 3.0 * hull.circumradius.powi(3));
    assert!((closed - 0.8923).abs() < 1e-3);
    assert!((oracle - 0.8923).abs() < 1e-3);
    assert!((closed - 0.94).abs() > 0.04);
}

#[test]
fn cube_roundness_from_hull() {
    let cube = catalog_lookup("cube").unwrap();
    let hull = hull_metrics_oracle(&solid_vertices(cube, 1.0).unwrap()).unwrap();
    let ratio = hull.volume / (4.0 * PI / 3.0 * hull.circumradius.powi(3));
    assert!((ratio - 0.3676).abs() < 1e-4);
}

#[test]
fn mesh_volume_matches_coefficient() {
    let ti = catalog_lookup("truncated-icosahedron").unwrap();
    for x in [0.5, 1.0, 5.2002586115797795] {
        let mesh = build_solid_mesh(ti, MeshScale::ByEdge(x)).unwrap();
        let hull = hull_metrics_oracle(&mesh.vertices).unwrap();
        assert_relative_eq!(hull.volume, ti.volume_coeff.unwrap() * x.powi(3), max_relative = 1e-9);
    }
    let cube = build_solid_mesh(catalog_lookup("cube").unwrap(), MeshScale::ByEdge(1.0)).unwrap();
    assert_relative_eq!(hull_metrics_oracle(&cube.vertices).unwrap().volume, 1.0, max_relative = 1e-12);
}

#[test]
fn catalog_report_json() {
    let reports: Vec<_> = catalog().iter().map(solid_report).collect();
    let json = serde_json::to_value(&reports).unwrap();
    let arr = json.as_array().unwrap();
    assert_eq!(arr.len(), 18);
    assert!(arr.iter().all(|r| r["euler"] == true));
    let ti = arr.iter().find(|r| r["name"] == "truncated-icosahedron").unwrap();
    assert_eq!(ti["family"], "archimedean");
    assert_eq!(ti["inventory"]["5"], 12);
    assert_eq!(ti["edges"], 90);
    assert!((ti["roundness_ratio"].as_f64().unwrap() - 0.8674).abs() < 1e-4);
    let snub = arr.iter().find(|r| r["name"] == "snub-cube").unwrap();
    assert!(snub["roundness_ratio"].is_null());
    let rid = arr.iter().find(|r| r["name"] == "rhombicosidodecahedron").unwrap();
    assert!(rid["note"].as_str().unwrap().contains("94%"));
}

#[test]
fn euler_holds_for_catalog() {
    for s in catalog() {
        assert!(euler_check(s), "{}", s.name);
        assert_eq!(s.edges + 2, s.faces + s.vertices);
    }
}

proptest! {
    // Any closed inventory's derived counts satisfy Euler and the handshake sums.
    #[test]
    fn derived_counts_satisfy_euler(
        entries in proptest::collection::btree_map(3u32..=12, 1u32..=40, 1..4)
    ) {
        let inv = FaceInventory::new(entries.clone()).unwrap();
        match derive_counts(&inv) {
            Ok((f, e, v)) => {
                prop_assert_eq!(e + 2, f + v);
                prop_assert_eq!(2 * e as u64, inv.edge_incidences());
                prop_assert_eq!(f, entries.values().sum::<u32>());
            }
            Err(_) => {
                let odd = inv.edge_incidences() % 2 == 1;
                let no_vertices = inv.edge_incidences() / 2 + 2 <= entries.values().map(|&c| c as u64).sum::<u64>();
                prop_assert!(odd || no_vertices);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ratio_is_scale_free(edge in 0.01f64..100.0) {
        let ti = catalog_lookup("truncated-icosahedron").unwrap();
        let hull = hull_metrics_oracle(&truncated_icosahedron_vertices(edge).unwrap()).unwrap();
        let ratio = hull.volume / (4.0 * PI / 3.0 * hull.circumradius.powi(3));
        prop_assert!((ratio - circumsphere_volume_ratio(ti).unwrap()).abs() < 1e-9);
    }
}
