use builder::{build, Build, BuildOptions};
use gem_core::parse_gem_text;
use verify::*;

fn built(name: &str) -> Build {
    let p = format!("{}/../../fixtures/{name}.kd", env!("CARGO_MANIFEST_DIR"));
    let d = diagram::parse_kirby(&std::fs::read_to_string(p).unwrap()).unwrap();
    build(&d, &BuildOptions::default()).unwrap()
}

// {0,1,2}-residue is a torus; colors 0 and 3 coincide
const TORUS: &str = "gem 4 6\ne 0 1 0\ne 2 3 0\ne 4 5 0\ne 0 3 1\ne 2 5 1\ne 1 4 1\n\
e 0 5 2\ne 1 2 2\ne 3 4 2\ne 0 1 3\ne 2 3 3\ne 4 5 3\n";

#[test]
fn broken_residue_is_flagged() {
    let g = parse_gem_text(TORUS).unwrap();
    let r = manifold_check(&g);
    assert!(!r.surfaces_ok);
    assert!(r.singular_colors.contains(&3), "{:?}", r.singular_colors);
    assert!(!r.passes(&[]));
    assert!(surface_chi_agrees(&g));
}

#[test]
fn built_boundary_is_lambda() {
    for n in ["trefoil_p1", "hopf_10", "unknot_c3"] {
        let b = built(n);
        assert!(boundary_check(&b.gamma, &b.lambda.gem), "{n}");
        assert!(surface_chi_agrees(&b.gamma), "{n}");
    }
}

#[test]
fn other_framing_is_not_the_boundary() {
    let g = built("unknot_c3").gamma;
    assert!(!boundary_check(&g, &built("unknot_c2").lambda.gem));
    assert!(!boundary_check(&g, &built("unknot_c4").lambda.gem));
}

#[test]
fn closed_case_has_sphere_boundary() {
    let b = built("dotted_hopf");
    let r = manifold_check(&b.gamma);
    assert!(r.passes(&[]), "{:?}", r.singular_colors);
    assert!(r
        .residues
        .iter()
        .all(|x| x.status == ResidueStatus::SphereCertified));
}

#[test]
fn report_json_round_trips() {
    // +1 surgery on the trefoil is not S³, so color 4 stays singular
    let r = manifold_check(&built("trefoil_p1").gamma);
    let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(r.singular_colors, vec![4]);
}
