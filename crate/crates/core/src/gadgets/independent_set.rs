use super::{require_simple, truth, Gadget, GadgetKind, Question, GROUND_TRUTH_LIMIT};
use crate::error::Result;
use crate::graph::{Label, TemporalGraph};
use crate::multigraph::MGraph;
use crate::walk::TemporalWalk;

/// One temporal `s`-`z` path `Q_u` per source vertex `u`, carrying the indices
/// of the edges at `u` (edges numbered `1..m` in sorted order). Two paths
/// share a timestep exactly when their vertices are adjacent.
///
/// A vertex of degree 0 gets a direct `s`-`z` edge at a fresh label above `m`.
/// When both ends of edge `e_i` have degree 1 their paths would be parallel
/// `s`-`z` edges with the same label, which a timefunction cannot express; the
/// second of them is routed through a middle vertex with both edges at `i`.
pub fn independent_set_instance(source: &MGraph, k: usize) -> Result<Gadget> {
    require_simple(source)?;
    let index: Vec<((usize, usize), Label)> = source
        .multiedges()
        .enumerate()
        .map(|(i, (key, _))| (key, i as Label + 1))
        .collect();
    let m = index.len() as Label;
    let mut g = TemporalGraph::new();
    let s = g.add_vertex("s");
    let z = g.add_vertex("z");
    let mut designated = Vec::new();
    let mut notes = Vec::new();
    let mut fresh = m;
    for u in 0..source.vertex_count() {
        let name = source.name(u);
        let mut labels: Vec<Label> = index
            .iter()
            .filter(|((a, b), _)| *a == u || *b == u)
            .map(|&(_, t)| t)
            .collect();
        labels.sort_unstable();
        if labels.is_empty() {
            fresh += 1;
            labels.push(fresh);
            notes.push(format!("isolated vertex {name} becomes an s-z edge at {fresh}"));
        }
        if labels.len() == 1 && g.find_edge(s, z, labels[0]).is_some() {
            labels.push(labels[0]);
            notes.push(format!(
                "Q_{name} routed through a middle vertex to avoid a parallel duplicate"
            ));
        }
        let mut vertices = vec![s];
        for j in 1..labels.len() {
            vertices.push(g.add_vertex(&format!("q{name}.{j}")));
        }
        vertices.push(z);
        let edges = labels
            .iter()
            .zip(vertices.windows(2))
            .map(|(&t, w)| g.add_edge_between(w[0], w[1], t))
            .collect::<Result<Vec<_>>>()?;
        designated.push((format!("Q_{name}"), TemporalWalk { vertices, edges }));
    }
    let truth = (source.vertex_count() <= GROUND_TRUTH_LIMIT).then(|| truth::independence_number(source) >= k);
    Ok(Gadget::new(
        GadgetKind::IndependentSet,
        source,
        k,
        None,
        g,
        Question::DisjointPaths(k),
        designated,
        truth,
        notes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{brute_force_p, PATH_LIMIT};

    #[test]
    fn triangle_gadget() {
        let k3 = MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "a", 1)]).unwrap();
        let gad = independent_set_instance(&k3, 2).unwrap();
        assert_eq!(gad.graph.edge_count(), 6);
        for (_, q) in &gad.designated {
            q.check(&gad.graph).unwrap();
            assert_eq!(q.len(), 2);
        }
        assert_eq!(brute_force_p(&gad.graph, gad.s, gad.z, PATH_LIMIT).unwrap().value, 1);
        assert_eq!(gad.manifest.ground_truth, Some(false));
    }

    #[test]
    fn isolated_vertices() {
        let g = MGraph::with_vertices(3);
        let gad = independent_set_instance(&g, 3).unwrap();
        assert_eq!(brute_force_p(&gad.graph, gad.s, gad.z, PATH_LIMIT).unwrap().value, 3);
    }

    #[test]
    fn one_edge_shares_exactly_its_index() {
        let g = MGraph::from_multiedges(&[("a", "b", 1)]).unwrap();
        let gad = independent_set_instance(&g, 1).unwrap();
        let sets: Vec<_> = gad.designated.iter().map(|(_, q)| q.label_set(&gad.graph)).collect();
        assert_eq!(sets[0].intersection(&sets[1]).copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(brute_force_p(&gad.graph, gad.s, gad.z, PATH_LIMIT).unwrap().value, 1);
    }
}
