//! Recognition checked against the minor matcher and the label-pattern oracle.

use snapcut::mengerian::{self, catalog, lift_catalog_labeling, MinorName};
use snapcut::minor::{find_m_topological_minor, has_m_topological_minor};
use snapcut::oracles::canon::enumerate_multigraphs;
use snapcut::oracles::{brute_force_c, brute_force_p, SemanticOracle, PATH_LIMIT};
use snapcut::MGraph;

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matcher_accepts(g: &MGraph) -> bool {
    !MinorName::ALL
        .iter()
        .any(|&m| has_m_topological_minor(g, &catalog::pattern(m)).unwrap())
}

#[test]
fn recognition_agrees_with_the_matcher_up_to_six_vertices() {
    for g in enumerate_multigraphs(6, 8) {
        assert_eq!(mengerian::recognize(&g).mengerian, matcher_accepts(&g), "{g:?}");
    }
}

// exhaustive enumeration at seven vertices is out of reach (exact canonical
// forms try all 5040 permutations), so sample instead
#[test]
fn recognition_agrees_with_the_matcher_on_random_seven_vertex_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let g = common::random_multigraph(&mut rng, 7, 10);
        assert_eq!(mengerian::recognize(&g).mengerian, matcher_accepts(&g), "{g:?}");
    }
}

#[test]
fn recognition_agrees_with_the_oracle_up_to_four_vertices() {
    let mut oracle = SemanticOracle::new();
    for g in enumerate_multigraphs(4, 6) {
        let verdict = mengerian::recognize(&g);
        assert_eq!(verdict.mengerian, oracle.is_mengerian(&g).unwrap(), "{g:?}");
        if let Some(w) = verdict.witness {
            // the witness is a real subgraph carrying the named minor
            assert!(has_m_topological_minor(&w.subgraph, &catalog::pattern(w.minor)).unwrap());
            for ((u, v), mult) in w.subgraph.multiedges() {
                let (a, b) = (
                    g.vertex(w.subgraph.name(u)).unwrap(),
                    g.vertex(w.subgraph.name(v)).unwrap(),
                );
                assert!(g.multiplicity(a, b) >= mult);
            }
        }
    }
}

#[test]
fn every_catalog_minor_rejects_itself_and_its_subdivisions() {
    for &m in MinorName::ALL.iter() {
        let pat = catalog::pattern(m);
        assert!(!mengerian::recognize(&pat).mengerian, "{m:?}");
        let ((u, v), _) = pat.multiedges().next().unwrap();
        let sub = pat.m_subdivide(u, v).unwrap();
        let verdict = mengerian::recognize(&sub);
        assert!(!verdict.mengerian);
        let (lab, s, z) = lift_catalog_labeling(&verdict.witness.unwrap()).unwrap();
        let p = brute_force_p(&lab, s, z, PATH_LIMIT).unwrap().value;
        let c = brute_force_c(&lab, s, z, PATH_LIMIT).unwrap().value;
        assert!(p < c, "{m:?}: p={p} c={c}");
    }
}

#[test]
fn cycles_and_trees_are_mengerian() {
    let cycle = MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)]).unwrap();
    assert!(mengerian::recognize(&cycle).mengerian);
    let star = MGraph::from_multiedges(&[("c", "a", 3), ("c", "b", 2), ("c", "d", 1)]).unwrap();
    assert!(mengerian::recognize(&star).mengerian);
}

#[test]
fn embeddings_map_pattern_edges_to_disjoint_routes() {
    let host = catalog::pattern(MinorName::M1);
    let e = find_m_topological_minor(&host, &host)
        .unwrap()
        .expect("a graph contains itself");
    assert_eq!(e.image(&host).edge_count(), host.edge_count());
}
