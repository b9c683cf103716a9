//! Golden scenarios with hand-checked answers: a hexagon with chords, two
//! small clique unions whose multiplicities are known, and the explicit
//! pair-table colorings on four and seven vertices.

mod common;

use std::collections::BTreeSet;

use chroma::bridge::{configurations_count, BridgeReport, CliqueCover};
use chroma::efl::EflInstance;
use chroma::graph::{graph_from_ideal, parse_edge_list, vertex_degree_from_ideal};
use chroma::poly::chromatic_polynomial;
use chroma::{Caps, Graph};

fn hexagon() -> Graph {
    parse_edge_list("6 8\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n2 5\n1 5\n").unwrap()
}

fn triangle_chain() -> Graph {
    parse_edge_list("6 9\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n1 5\n5 6\n1 6\n").unwrap()
}

fn bowtie() -> Graph {
    parse_edge_list("5 6\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n").unwrap()
}

fn generator_names(m: &chroma::MonomialIdeal) -> Vec<String> {
    let registry = m.registry();
    m.generators()
        .iter()
        .map(|g| {
            g.exponents()
                .iter()
                .map(|&(v, _)| registry.name(v).to_string())
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect()
}

#[test]
fn hexagon_independent_sets_are_the_known_five() {
    let g = hexagon();
    let expected: Vec<Vec<u32>> = vec![
        vec![1, 3],
        vec![1, 4],
        vec![2, 4, 6],
        vec![3, 5],
        vec![3, 6],
    ];
    assert_eq!(g.maximal_independent_sets().unwrap(), expected);
    assert_eq!(common::naive_maximal_independent_sets(&g), expected);
}

#[test]
fn hexagon_ideal_generators_in_vertex_order() {
    let m = hexagon().chromatic_ideal().unwrap();
    assert_eq!(
        generator_names(&m),
        [
            "v1*w{1,3}*w{1,4}",
            "v2*w{2,4,6}",
            "v3*w{1,3}*w{3,5}*w{3,6}",
            "v4*w{1,4}*w{2,4,6}",
            "v5*w{3,5}",
            "v6*w{2,4,6}*w{3,6}",
        ]
    );
}

#[test]
fn hexagon_degrees_are_readable_off_the_ideal() {
    let g = hexagon();
    let m = g.chromatic_ideal().unwrap();
    for v in 1..=6 {
        assert_eq!(vertex_degree_from_ideal(&m, v).unwrap(), g.degree(v).unwrap() as usize);
    }
    assert_eq!(vertex_degree_from_ideal(&m, 5).unwrap(), 4);
}

#[test]
fn hexagon_round_trips_through_its_ideal() {
    let g = hexagon();
    assert_eq!(graph_from_ideal(&g.chromatic_ideal().unwrap()).unwrap(), g);
}

#[test]
fn hexagon_multiplicity_matches_the_localization_oracle() {
    let m = hexagon().chromatic_ideal().unwrap();
    let oracle = common::hilbert_multiplicity(&m);
    assert_eq!(m.multiplicity_recursive().unwrap(), oracle);
    assert_eq!(m.multiplicity_by_realizations().unwrap(), oracle);
}

#[test]
fn hexagon_polynomial_counts_colorings() {
    let g = hexagon();
    let p = chromatic_polynomial(&g, 16).unwrap();
    for t in 0..=4 {
        assert_eq!(
            p.eval(t as i128).unwrap(),
            common::naive_coloring_count(&g, t) as i128
        );
    }
}

#[test]
fn triangle_chain_report_is_fully_determined() {
    let g = triangle_chain();
    let cover = CliqueCover {
        cliques: vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6]],
    };
    let r = BridgeReport::compute(&g, Some(cover.clone()), &Caps::default()).unwrap();
    assert_eq!(r.chi, 3);
    assert_eq!(r.codim, 3);
    assert_eq!(r.mult, Some(1));
    assert_eq!(r.mult_by_method.realizations, Some(1));
    assert_eq!(r.mult_by_method.inclusion_exclusion, Some(1));
    assert_eq!(r.mult_by_method.recursive, Some(1));
    assert_eq!(r.realizations_count, 1);
    assert_eq!(r.p_at_chi, Some(6));
    assert_eq!(configurations_count(&g, &cover).unwrap(), 1);
    let direct = chromatic_polynomial(&g, 16).unwrap().eval(3).unwrap();
    assert_eq!(direct, 6);
}

#[test]
fn triangle_chain_coloring_lands_on_the_unique_configuration() {
    let inst = EflInstance::new(3, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6]]).unwrap();
    let coloring = inst.color().unwrap();
    assert!(coloring.is_proper(inst.graph()).unwrap());
    let classes: BTreeSet<Vec<u32>> = coloring.configuration().into_iter().collect();
    let expected: BTreeSet<Vec<u32>> =
        [vec![1, 4], vec![2, 5], vec![3, 6]].into_iter().collect();
    assert_eq!(classes, expected);
}

#[test]
fn bowtie_ideal_lists_five_generators_with_a_bare_center() {
    let m = bowtie().chromatic_ideal().unwrap();
    assert_eq!(
        generator_names(&m),
        [
            "v1*w{1,4}*w{1,5}",
            "v2*w{2,4}*w{2,5}",
            "v3",
            "v4*w{1,4}*w{2,4}",
            "v5*w{1,5}*w{2,5}",
        ]
    );
}

#[test]
fn bowtie_report_counts_both_configurations() {
    let g = bowtie();
    let cover = CliqueCover {
        cliques: vec![vec![1, 2, 3], vec![3, 4, 5]],
    };
    let r = BridgeReport::compute(&g, Some(cover), &Caps::default()).unwrap();
    assert_eq!((r.chi, r.codim), (3, 3));
    assert_eq!(r.mult, Some(2));
    assert_eq!(r.realizations_count, 2);
    assert_eq!(r.p_at_chi, Some(12));
    assert_eq!(chromatic_polynomial(&g, 16).unwrap().eval(3).unwrap(), 12);
}

#[test]
fn four_clique_figure_on_seven_vertices_colors_as_tabulated() {
    // cliques pairwise sharing one vertex except the first and third;
    // vertices 1..5 are the shared ones, 6 and 7 are private
    let inst = EflInstance::new(
        3,
        vec![vec![1, 2, 6], vec![1, 3, 4], vec![3, 5, 7], vec![2, 4, 5]],
    )
    .unwrap();
    assert_eq!(inst.graph().n(), 7);
    let shared: Vec<(u32, (u32, u32))> =
        inst.shared().iter().map(|(&v, &p)| (v, p)).collect();
    assert_eq!(
        shared,
        [
            (1, (1, 2)),
            (2, (1, 4)),
            (3, (2, 3)),
            (4, (2, 4)),
            (5, (3, 4)),
        ]
    );
    let coloring = inst.color().unwrap();
    let colors: Vec<u32> = (1..=7).map(|v| coloring.color(v).unwrap()).collect();
    assert_eq!(colors, [0, 2, 2, 1, 0, 1, 1]);
    assert!(coloring.is_proper(inst.graph()).unwrap());
}

#[test]
fn all_shared_four_clique_union_is_a_six_vertex_octahedron() {
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let inst = EflInstance::generate(3, 4, &pairs, 3).unwrap();
    let g = inst.graph();
    assert_eq!(g.n(), 6);
    assert_eq!(g.num_edges(), 12);
    assert_eq!(inst.shared().len(), 6);
    assert_eq!(g.chromatic_ideal().unwrap().codimension().unwrap(), 3);
    let coloring = inst.color().unwrap();
    assert!(coloring.is_proper(g).unwrap());
    assert_eq!(coloring.num_colors(), 3);
}
