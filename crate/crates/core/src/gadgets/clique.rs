use super::{require_simple, truth, Gadget, GadgetKind, Question, GROUND_TRUTH_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Label, TemporalGraph};
use crate::multigraph::MGraph;
use crate::walk::TemporalWalk;

/// Multicolored clique gadget for a proper coloring with classes `0..k`.
///
/// Every pair of classes `i < j` gets a gadget `F_ij` active in its own window
/// `Δ_ij = [f+1, f+m]` with `f = m · (pair index)`. The source is first padded
/// with edges between fresh degree-one vertices so that every pair of classes
/// has exactly `m >= 2` edges. Source vertices (artificial ones included) get the
/// timesteps of `Δ_V`, which starts at `m · C(k,2) + 1`.
///
/// `F_ij` is a spine `s = v0, .., v2m = z`: the first m hops have
/// multiplicity m and carry all of `Δ_ij`, hop `v(m-1+l) v(m+l)` carries
/// `f + l`. A path `P_l` of m - 1 edges labeled `Δ_ij \ {f + l}` leads from
/// `v_l` to `w_l`, which has two edges to `z` at `t_x` and `t_y` for the l-th
/// edge `xy` between the classes.
pub fn clique_instance(source: &MGraph, coloring: &[usize], k: usize) -> Result<Gadget> {
    require_simple(source)?;
    if k < 2 {
        return Err(Error::InvalidInput("k must be at least 2".into()));
    }
    if coloring.len() != source.vertex_count() {
        return Err(Error::ImproperColoring(format!(
            "{} colors for {} vertices",
            coloring.len(),
            source.vertex_count()
        )));
    }
    if let Some(v) = coloring.iter().position(|&c| c >= k) {
        return Err(Error::ImproperColoring(format!(
            "vertex `{}` has color {} >= k",
            source.name(v),
            coloring[v]
        )));
    }
    if let Some(((a, b), _)) = source.multiedges().find(|&((a, b), _)| coloring[a] == coloring[b]) {
        return Err(Error::ImproperColoring(format!(
            "edge {}-{} joins two vertices of color {}",
            source.name(a),
            source.name(b),
            coloring[a]
        )));
    }

    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut by_pair: Vec<Vec<(usize, usize)>> = pairs
        .iter()
        .map(|&(i, j)| {
            source
                .multiedges()
                .filter(|&((a, b), _)| {
                    let (ca, cb) = (coloring[a], coloring[b]);
                    (ca.min(cb), ca.max(cb)) == (i, j)
                })
                .map(|((a, b), _)| if coloring[a] == i { (a, b) } else { (b, a) })
                .collect()
        })
        .collect();
    let widest = by_pair.iter().map(Vec::len).max().unwrap_or(0);
    if widest == 0 && k == 2 {
        // padding would plant an artificial 2-clique
        return Err(Error::InvalidInput(
            "k = 2 needs at least one edge between the classes".into(),
        ));
    }
    // with m = 1 the single window timestep already cuts F_ij, so every
    // instance would have a cut of size C(k,2)
    let m = widest.max(2);

    // artificial vertices are numbered after the source ones
    let mut next_vertex = source.vertex_count();
    let mut notes = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        if by_pair[p].len() < m {
            notes.push(format!("classes {i},{j} padded from {} to {m} edges", by_pair[p].len()));
        }
        while by_pair[p].len() < m {
            by_pair[p].push((next_vertex, next_vertex + 1));
            next_vertex += 2;
        }
    }

    let mm = m as Label;
    let pair_count = pairs.len() as Label;
    let vertex_base = mm * pair_count + 1;
    let t = |v: usize| vertex_base + v as Label;

    let mut g = TemporalGraph::new();
    let s = g.add_vertex("s");
    let z = g.add_vertex("z");
    let mut designated = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        let f = mm * p as Label;
        let tag = format!("{}{}", i + 1, j + 1);
        let mut spine = vec![s];
        for l in 1..2 * m {
            spine.push(g.add_vertex(&format!("v{tag}.{l}")));
        }
        spine.push(z);
        for l in 0..m {
            for d in 1..=mm {
                g.add_edge_between(spine[l], spine[l + 1], f + d)?;
            }
        }
        for l in 1..=m {
            g.add_edge_between(spine[m - 1 + l], spine[m + l], f + l as Label)?;
        }
        for l in 1..=m {
            let labels: Vec<Label> = (1..=mm).filter(|&d| d != l as Label).map(|d| f + d).collect();
            let mut vertices = vec![spine[l]];
            for r in 1..labels.len() {
                vertices.push(g.add_vertex(&format!("p{tag}.{l}.{r}")));
            }
            let w = if labels.is_empty() {
                spine[l]
            } else {
                g.add_vertex(&format!("w{tag}.{l}"))
            };
            if !labels.is_empty() {
                vertices.push(w);
            }
            let edges = labels
                .iter()
                .zip(vertices.windows(2))
                .map(|(&lab, pair)| g.add_edge_between(pair[0], pair[1], lab))
                .collect::<Result<Vec<_>>>()?;
            designated.push((format!("P{tag}.{l}"), TemporalWalk { vertices, edges }));
            let (x, y) = by_pair[p][l - 1];
            g.add_edge_between(w, z, t(x))?;
            g.add_edge_between(w, z, t(y))?;
        }
    }
    let h = pairs.len() + k;
    let truth =
        (source.vertex_count() <= GROUND_TRUTH_LIMIT).then(|| truth::has_multicolored_clique(source, coloring, k));
    Ok(Gadget::new(
        GadgetKind::Clique,
        source,
        k,
        Some(coloring),
        g,
        Question::SnapshotCut(h),
        designated,
        truth,
        notes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::{is_snapshot_cut, snapshot_cut_at_most, CutOptions};

    fn k3() -> MGraph {
        MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("a", "c", 1)]).unwrap()
    }

    #[test]
    fn triangle_has_a_cut_of_six() {
        let gad = clique_instance(&k3(), &[0, 1, 2], 3).unwrap();
        assert_eq!(gad.question, Question::SnapshotCut(6));
        let out = snapshot_cut_at_most(&gad.graph, gad.s, gad.z, 6, CutOptions::default()).unwrap();
        assert!(is_snapshot_cut(&gad.graph, gad.s, gad.z, &out.cut.unwrap().timesteps));
        assert_eq!(gad.manifest.ground_truth, Some(true));
    }

    #[test]
    fn window_arithmetic() {
        // three edges between the two classes: m = 3, first window {1,2,3}
        let g = MGraph::from_multiedges(&[("a", "x", 1), ("a", "y", 1), ("b", "x", 1)]).unwrap();
        let coloring = [0, 1, 1, 0];
        let gad = clique_instance(&g, &coloring, 2).unwrap();
        let v = |n: &str| gad.graph.vertex(n).unwrap();
        let spine: Vec<_> = gad.graph.incident(gad.s).iter().map(|&e| gad.graph.label(e)).collect();
        assert_eq!(spine, vec![1, 2, 3]);
        for l in 1..=3u32 {
            let (_, p) = &gad.designated[l as usize - 1];
            p.check(&gad.graph).unwrap();
            let labels: Vec<_> = p.labels(&gad.graph);
            assert_eq!(labels, (1..=3).filter(|&d| d != l).collect::<Vec<_>>());
        }
        // Δ_V starts right after the single window
        let w1 = v("w12.1");
        let mut tz: Vec<_> = gad
            .graph
            .incident(w1)
            .iter()
            .map(|&e| gad.graph.label(e))
            .filter(|&t| t > 3)
            .collect();
        tz.sort_unstable();
        assert_eq!(tz, vec![4, 5]);
    }

    #[test]
    fn improper_colorings_are_refused() {
        assert!(matches!(
            clique_instance(&k3(), &[0, 0, 1], 3),
            Err(Error::ImproperColoring(_))
        ));
        assert!(matches!(
            clique_instance(&k3(), &[0, 1, 5], 3),
            Err(Error::ImproperColoring(_))
        ));
        assert!(clique_instance(&MGraph::with_vertices(2), &[0, 1], 2).is_err());
    }

    #[test]
    fn size_is_quadratic_in_k_times_m() {
        let gad = clique_instance(&k3(), &[0, 1, 2], 3).unwrap();
        // m = 2 after padding: per pair 4 + 2 spine edges, one edge on each P_l, two edges at each w_l
        assert_eq!(gad.graph.edge_count(), 3 * (4 + 2 + 2 + 4));
        assert_eq!(gad.graph.vertex_count(), 2 + 3 * (3 + 2));
        assert_eq!(gad.manifest.notes.len(), 3);
    }
}
