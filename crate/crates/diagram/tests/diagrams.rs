use diagram::*;

fn fixture(name: &str) -> KirbyDiagram {
    let p = format!("{}/../../fixtures/{name}.kd", env!("CARGO_MANIFEST_DIR"));
    parse_kirby(&std::fs::read_to_string(p).unwrap()).unwrap()
}

// closures of 2-braids; component 0 is dotted
const OVER_TWICE: &str = "X 3 1 4 2\nX 4 1 3 2\nC dotted arcs= 3,4\nC framed 0 arcs= 1,2\nouter arc=3 side=right\n";
const OOUU: &str = "X 5 3 6 2\nX 3 7 4 6\nX 4 7 1 8\nX 8 1 5 2\nC dotted arcs= 5,6,7,8\nC framed 0 arcs= 3,4,1,2\nouter arc=5 side=right\n";
const OUOU: &str = "X 2 6 3 5\nX 6 4 7 3\nX 4 8 1 7\nX 8 2 5 1\nC dotted arcs= 2,3,4,1\nC framed 0 arcs= 6,7,8,5\nouter arc=2 side=right\n";

#[test]
fn trefoil_counts() {
    let d = fixture("trefoil_p1");
    assert_eq!((d.s(), d.l(), d.m()), (3, 1, 0));
    assert_eq!(d.writhe(0), 3);
    assert!((0..3).all(|x| d.sign(x) == 1));
    let f = faces_and_chessboard(&d).unwrap();
    assert_eq!((f.faces.len(), f.m_alpha), (5, 2));
}

#[test]
fn hopf_counts() {
    let d = fixture("hopf_00");
    assert_eq!((d.s(), d.l()), (2, 2));
    assert_eq!((d.writhe(0), d.writhe(1)), (0, 0));
    assert_eq!(d.linking(0, 1).abs(), 1);
    let f = faces_and_chessboard(&d).unwrap();
    assert_eq!((f.faces.len(), f.m_alpha), (4, 2));
}

#[test]
fn unknot_special_form() {
    let d = fixture("unknot_c5");
    assert!(d.is_trivial_circle());
    let f = faces_and_chessboard(&d).unwrap();
    assert_eq!((f.faces.len(), f.m_alpha), (2, 1));
    let aug = plan_curls(&d).unwrap();
    assert_eq!(aug.curl_count(), 5);
}

#[test]
fn curl_plans() {
    let aug = plan_curls(&fixture("trefoil_p1")).unwrap();
    let all: Vec<i8> = aug.curls.values().flatten().copied().collect();
    assert_eq!(all, vec![-1, -1]);
    assert_eq!(aug.tbar, vec![2]);

    let mut c1: Vec<i8> = plan_curls(&fixture("unknot_c1")).unwrap().curls.values().flatten().copied().collect();
    c1.sort_unstable();
    assert_eq!(c1, vec![-1, 1, 1]);
    let mut c0: Vec<i8> = plan_curls(&fixture("unknot_c0")).unwrap().curls.values().flatten().copied().collect();
    c0.sort_unstable();
    assert_eq!(c0, vec![-1, -1, 1, 1]);
}

#[test]
fn splits() {
    let d = parse_kirby(OVER_TWICE).unwrap();
    let s = split_dotted(&d, 0).unwrap();
    assert_eq!((s.h_arc, s.h_prime_arc), (3, 3));

    let d = parse_kirby(OOUU).unwrap();
    let s = split_dotted(&d, 0).unwrap();
    assert_eq!((s.h_arc, s.h_prime_arc), (8, 6));

    let d = parse_kirby(OUOU).unwrap();
    assert!(matches!(split_dotted(&d, 0), Err(DiagramError::NotSeparable(0))));
}

#[test]
fn dotted_hopf_plan() {
    let d = fixture("dotted_hopf");
    assert_eq!(d.associated_framed_link(), vec![0, 0]);
    assert_eq!(d.s_bar(), 1);
    let plan = plan_markers(&plan_curls(&d).unwrap()).unwrap();
    assert_eq!(plan.u, 0);
    assert!(y_by_component(&plan).values().all(|y| y.is_empty()));
}

#[test]
fn s2xd2_plan_has_one_highlighted_component() {
    let plan = plan_markers(&plan_curls(&fixture("s2xd2")).unwrap()).unwrap();
    let lens: Vec<usize> = y_by_component(&plan).values().map(Vec::len).collect();
    assert_eq!(lens.iter().filter(|&&n| n == 0).count(), 1);
    assert_eq!(lens.iter().filter(|&&n| n > 0).count(), 1);
    assert!(plan.u <= plan.s_bar);
}

#[test]
fn framed_link_of_mixed_diagram() {
    let d = fixture("axis_s1s2");
    let c = d.associated_framed_link();
    assert_eq!(c[0], 0);
    assert_eq!(c[1], -1);
    assert_eq!(fixture("hopf_10").associated_framed_link(), vec![1, 0]);
}

#[test]
fn kd_text_round_trips_on_fixtures() {
    for n in ["trefoil_p1", "dotted_hopf", "s2xd2", "unknot_c3"] {
        let d = fixture(n);
        assert_eq!(parse_kirby(&d.to_kd_text()).unwrap(), d);
    }
}

#[test]
fn rejects_dotted_writhe() {
    // the trefoil as a dotted circle
    let t = std::fs::read_to_string(format!("{}/../../fixtures/trefoil_p1.kd", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let d = parse_kirby(&t.replace("C framed 1", "C dotted")).unwrap();
    assert!(matches!(plan_curls(&d), Err(DiagramError::DottedWrithe { writhe: 3, .. })));
}
