use num_complex::Complex64;

use super::*;
use crate::error::Error;
use crate::group_actions::{GroupElement, MoebiusC, Tag};
use crate::lattices::Lattice2;
use crate::sampling::{random_element, rng};

fn h3_translation(re: f64, im: f64) -> GroupElement {
    MoebiusC::translation(Complex64::new(re, im)).into()
}

fn elemental(id: &str, tag: Tag, cusps: Vec<(&str, [GroupElement; 2])>) -> PieceDecoration {
    PieceDecoration {
        id: id.into(),
        kind: PieceKind::Elemental {
            tag,
            cusps: cusps
                .into_iter()
                .map(|(c, generators)| CuspData { id: c.into(), generators })
                .collect(),
            holonomy_generators: Vec::new(),
        },
    }
}

fn unit_h3(id: &str) -> PieceDecoration {
    elemental(id, Tag::H3, vec![("c0", [h3_translation(1.0, 0.0), h3_translation(0.0, 1.0)])])
}

fn klein(id: &str) -> PieceDecoration {
    PieceDecoration {
        id: id.into(),
        kind: PieceKind::Klein {
            lattice: Lattice2::unit_square(),
            sigma: [[1, 0], [0, -1]],
            shift: [0.5, 0.0],
        },
    }
}

fn end(v: &str, c: Option<&str>) -> EdgeEnd {
    EdgeEnd { vertex: v.into(), cusp: c.map(Into::into) }
}

fn edge(a: EdgeEnd, b: EdgeEnd, class: [[i64; 2]; 2], slide: f64) -> EdgeData {
    EdgeData { end_a: a, end_b: b, class, slide, offset: [0.0, 0.0] }
}

fn two_piece_graph(class: [[i64; 2]; 2]) -> GeometryGraph {
    GeometryGraph {
        vertices: vec![unit_h3("v1"), unit_h3("v2")],
        edges: vec![edge(end("v1", Some("c0")), end("v2", Some("c0")), class, 0.0)],
    }
}

fn fails(report: &VerificationReport) -> Vec<String> {
    report.failures().map(|c| c.name.clone()).collect()
}

#[test]
fn unmatched_cusp_fails() {
    let g = GeometryGraph { vertices: vec![unit_h3("v1")], edges: vec![] };
    let r = validate(&g);
    assert_eq!(fails(&r), ["cusp/v1.c0/valence"]);
    assert!(r.get("cusp/v1.c0/valence").unwrap().detail.contains("unmatched"));
}

#[test]
fn two_vertices_one_edge_validates() {
    assert!(validate(&two_piece_graph([[0, 1], [1, 0]])).passed());
}

#[test]
fn det_plus_one_fails_orientation() {
    let r = validate(&two_piece_graph([[1, 0], [0, 1]]));
    assert_eq!(fails(&r), ["edge/e0/orientation"]);
    assert!(r.get("edge/e0/orientation").unwrap().detail.contains("orientation convention"));
    assert!(matches!(build(&two_piece_graph([[1, 0], [0, 1]])), Err(Error::Assembly(_))));
}

#[test]
fn structural_failures_are_located() {
    // Klein vertex used twice, plus an isolated vertex
    let g = GeometryGraph {
        vertices: vec![
            elemental(
                "v1",
                Tag::H3,
                vec![
                    ("c0", [h3_translation(1.0, 0.0), h3_translation(0.0, 1.0)]),
                    ("c1", [h3_translation(1.0, 0.0), h3_translation(0.0, 1.0)]),
                ],
            ),
            klein("k"),
            elemental("lonely", Tag::H2R, vec![]),
        ],
        edges: vec![
            edge(end("v1", Some("c0")), end("k", None), [[0, 1], [1, 0]], 0.0),
            edge(end("v1", Some("c1")), end("k", None), [[0, 1], [1, 0]], 0.0),
        ],
    };
    let r = validate(&g);
    assert_eq!(fails(&r), ["graph/connected", "klein/k/univalent"]);
}

#[test]
fn bad_references_and_cusps_fail() {
    let rot: GroupElement = MoebiusC::dilation(2.0).into();
    let g = GeometryGraph {
        vertices: vec![
            elemental("v1", Tag::H3, vec![("c0", [rot, h3_translation(0.0, 1.0)])]),
            elemental("v2", Tag::Aff, vec![]),
        ],
        edges: vec![edge(end("v1", Some("c0")), end("v2", Some("zz")), [[0, 1], [1, 0]], 0.0)],
    };
    let r = validate(&g);
    assert_eq!(
        fails(&r),
        [
            "cusp/v1.c0/standard_form",
            "cusp/v1.c0/valence",
            "edge/e0/endpoints",
            "graph/connected",
            "vertex/v2/tag"
        ]
    );
}

#[test]
fn two_piece_structure_is_a_path() {
    let s = build(&two_piece_graph([[0, 1], [1, 0]])).unwrap();
    assert_eq!(s.regions.len(), 7);
    assert_eq!(s.intersections.len(), 6);
    let mut degree = vec![0; s.regions.len()];
    for w in &s.intersections {
        assert_ne!(w.a, w.b);
        degree[w.a] += 1;
        degree[w.b] += 1;
    }
    assert_eq!(degree.iter().filter(|&&d| d == 1).count(), 2);
    assert!(degree.iter().all(|&d| d == 1 || d == 2));
    // no two walls join the same pair: only binary overlaps
    let mut pairs: Vec<_> = s.intersections.iter().map(|w| (w.a.min(w.b), w.a.max(w.b))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    assert_eq!(pairs.len(), 6);
    let report = verify(&s, 1e-9, 100, 0);
    assert!(report.passed(), "{:?}", fails(&report));
    assert!(report.max_residual() < 1e-9);
}

#[test]
fn piece_with_klein_end() {
    let g = GeometryGraph {
        vertices: vec![unit_h3("v1"), klein("k")],
        edges: vec![edge(end("v1", Some("c0")), end("k", None), [[0, 1], [1, 0]], 0.25)],
    };
    let s = build(&g).unwrap();
    let names: Vec<String> = (0..s.regions.len()).map(|i| s.region_name(i)).collect();
    assert_eq!(names, ["piece:v1", "collar:v1.c0", "klein:k", "left:e0", "middle:e0", "right:e0"]);
    assert_eq!(s.intersections.len(), 5);
    let report = verify(&s, 1e-9, 100, 0);
    assert!(report.passed(), "{:?}", fails(&report));
    assert!(report.get("klein/k/fixed_point_free").unwrap().passed());
}

#[test]
fn closed_piece_is_one_region() {
    let g = GeometryGraph { vertices: vec![elemental("m", Tag::H3, vec![])], edges: vec![] };
    assert!(validate(&g).passed());
    let s = build(&g).unwrap();
    assert_eq!(s.regions.len(), 1);
    assert!(s.intersections.is_empty());
    assert_eq!(moduli_dimension(&g), 0);
    assert!(verify(&s, 1e-9, 100, 0).passed());
}

/// Horizontal lattice moved off standard position by a random element.
fn conjugated_cusp(tag: Tag, l: &Lattice2, seed: u64) -> [GroupElement; 2] {
    let h = random_element(tag, &mut rng(seed));
    l.translations(tag).map(|t| t.conjugate_by(&h).unwrap())
}

fn mixed_graph() -> GeometryGraph {
    let l1 = Lattice2::new([1.2, 0.1], [0.3, 0.8]).unwrap();
    let l2 = Lattice2::new([0.7, 0.0], [0.2, 1.5]).unwrap();
    GeometryGraph {
        vertices: vec![
            elemental("a", Tag::H3, vec![("c0", conjugated_cusp(Tag::H3, &l1, 11))]),
            elemental(
                "b",
                Tag::H2R,
                vec![
                    ("c0", conjugated_cusp(Tag::H2R, &l2, 12)),
                    ("c1", conjugated_cusp(Tag::H2R, &l1, 13)),
                ],
            ),
            elemental("c", Tag::Sl2T, vec![("c0", conjugated_cusp(Tag::Sl2T, &l2, 14))]),
            klein("k"),
        ],
        edges: vec![
            EdgeData {
                end_a: end("a", Some("c0")),
                end_b: end("b", Some("c0")),
                class: [[1, 1], [0, -1]],
                slide: 0.7,
                offset: [0.3, -0.2],
            },
            edge(end("b", Some("c1")), end("c", Some("c0")), [[2, 1], [1, 0]], -1.5),
            // a Klein end attached from the Klein side
            edge(end("k", None), end("b", Some("c0")), [[0, 1], [1, 0]], 0.0),
        ],
    }
}

#[test]
fn mixed_tags_build_and_verify() {
    let mut g = mixed_graph();
    // c0 of b is used twice above; route the Klein end to a fresh cusp
    if let PieceKind::Elemental { cusps, .. } = &mut g.vertices[1].kind {
        let l = Lattice2::new([0.9, -0.2], [0.1, 1.1]).unwrap();
        cusps.push(CuspData { id: "c2".into(), generators: conjugated_cusp(Tag::H2R, &l, 15) });
    }
    g.edges[2].end_b = end("b", Some("c2"));
    assert!(validate(&g).passed(), "{:?}", fails(&validate(&g)));
    let s = build(&g).unwrap();
    let (cusps, edges, kleins) = (g.cusp_count(), g.edges.len(), g.klein_count());
    assert_eq!(s.regions.len(), g.elemental_count() + cusps + 3 * edges + kleins);
    assert_eq!(s.intersections.len(), 2 * cusps + 2 * edges + kleins);
    assert_eq!(moduli_dimension(&g), 9);
    let report = verify(&s, 1e-9, 100, 0);
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn double_use_of_cusp_fails() {
    let r = validate(&mixed_graph());
    assert_eq!(fails(&r), ["cusp/b.c0/valence"]);
}

#[test]
fn zero_tolerance_fails_float_checks_only() {
    let s = build(&two_piece_graph([[0, 1], [1, 0]])).unwrap();
    let g = GeometryGraph {
        vertices: vec![unit_h3("v1"), klein("k")],
        edges: vec![edge(end("v1", Some("c0")), end("k", None), [[0, 1], [1, 0]], 0.0)],
    };
    for s in [s, build(&g).unwrap()] {
        for c in &verify(&s, 0.0, 10, 0).checks {
            let exact = c.name.starts_with("klein/") && !c.name.ends_with("square_action");
            assert_eq!(c.passed(), exact, "{}", c.name);
        }
    }
}

#[test]
fn perturbed_reduction_is_caught() {
    let base = build(&two_piece_graph([[0, 1], [1, 0]])).unwrap();
    for w in 0..base.intersections.len() {
        for k in 0..base.intersections[w].reductions.len() {
            let mut s = base.clone();
            s.perturb_reduction(w, k, 1e-3).unwrap();
            let r = verify(&s, 1e-9, 100, 0);
            let c = r.get(&format!("reduction/w{w}/t{k}")).unwrap();
            assert!(!c.passed());
            assert!((1e-4..=1e-2).contains(&c.max_residual), "{}", c.max_residual);
        }
    }
    let mut s = base.clone();
    assert!(matches!(s.perturb_reduction(99, 0, 1e-3), Err(Error::Index(_))));
    assert!(matches!(s.perturb_reduction(0, 5, 1e-3), Err(Error::Index(_))));
}

#[test]
fn verify_is_deterministic() {
    let mut g = mixed_graph();
    g.edges.pop();
    g.vertices.pop();
    let s = build(&g).unwrap();
    let a = verify(&s, 1e-9, 50, 7);
    let b = verify(&s, 1e-9, 50, 7);
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
    let names: Vec<&str> = a.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
}

#[test]
fn moduli_is_additive() {
    let chain = |n: usize| {
        let vertices = (0..=n)
            .map(|i| {
                elemental(
                    &format!("v{i}"),
                    Tag::H3,
                    vec![
                        ("l", [h3_translation(1.0, 0.0), h3_translation(0.0, 1.0)]),
                        ("r", [h3_translation(1.0, 0.0), h3_translation(0.0, 1.0)]),
                    ],
                )
            })
            .collect::<Vec<_>>();
        let edges = (0..n)
            .map(|i| {
                edge(
                    end(&format!("v{i}"), Some("r")),
                    end(&format!("v{}", i + 1), Some("l")),
                    [[0, 1], [1, 0]],
                    0.0,
                )
            })
            .collect();
        GeometryGraph { vertices, edges }
    };
    for n in 0..5 {
        assert_eq!(moduli_dimension(&chain(n)), 3 * n);
        assert_eq!(moduli_parameters(&chain(n)).len(), n);
    }
}
