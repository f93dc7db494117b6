use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use srg_core::graph::canon::canonical_form;
use srg_core::graph::clique::{brute_clique_number, is_clique, max_clique, max_clique_with_symmetry};
use srg_core::graph::hpairs::{enumerate_h_pairs, extension_choices, naive_bipartite_certificates, partitions};
use srg_core::graph::subset::{build_subset_graph, fixed_cycle, CycleSymmetry};
use srg_core::graph::{families, graph6, Graph};

#[test]
fn srg40_fixture_is_a_generalized_quadrangle_graph() {
    let text = include_str!("../data/srg40.g6").trim();
    let g = graph6::decode(text).unwrap();
    assert_eq!(g.srg_parameters(), Some((40, 12, 2, 4)));
    assert_eq!(graph6::encode(&g), text);
    let colours = vec![0; 40];
    assert_eq!(canonical_form(&g, &colours).certificate, canonical_form(&families::symplectic_w3(), &colours).certificate);
    // the lines of the quadrangle are its maximum cliques
    assert_eq!(max_clique(&g).size, 4);
}

#[test]
fn clique_search_matches_brute_force() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let n = rng.gen_range(1..16);
        let density = rng.gen_range(0.1..0.9);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(density));
        let c = max_clique(&g);
        assert_eq!(c.size, brute_clique_number(&g));
        assert!(is_clique(&g, &c.vertices));
    }
}

#[test]
fn subset_graph_and_its_clique_number() {
    let m0 = fixed_cycle();
    let (verts, g) = build_subset_graph(&m0);
    assert_eq!(verts.len(), 906);
    assert_eq!(g.edge_count(), 176672);
    let c = max_clique_with_symmetry(&g, &CycleSymmetry::new(&verts));
    assert_eq!(c.size, 15);
    assert!(is_clique(&g, &c.vertices));
    assert!(c.vertices.iter().all(|&i| m0.iter().all(|&a| verts[i].adjacent(a))));
}

#[test]
fn h_pair_enumeration() {
    let all = enumerate_h_pairs();
    assert_eq!(all.len(), 4260);
    let certs: BTreeSet<_> = all.iter().map(|h| h.certificate.clone()).collect();
    assert_eq!(certs.len(), all.len());
    for h in &all {
        assert!(h.satisfies_degree_relation());
        assert_eq!(h.cycle_type.iter().sum::<usize>(), 20);
        assert!(h.cycle_type.windows(2).all(|w| w[0] >= w[1]));
        let inv = h.inverted();
        assert!((0..20).all(|v| inv.degree(v) == 2));
    }
    let w0: BTreeSet<_> = all.iter().filter(|h| h.w1 == 0).map(|h| h.certificate.clone()).collect();
    assert_eq!(w0, naive_bipartite_certificates());
    // inverted bipartite 2-regular graphs are unions of even cycles of length ≥ 4
    let even: Vec<_> = partitions(20, 4).into_iter().filter(|t| t.iter().all(|l| l % 2 == 0)).collect();
    assert_eq!(w0.len(), even.len());
    assert_eq!(extension_choices(3).len(), 16526);
}
