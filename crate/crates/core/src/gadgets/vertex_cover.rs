use super::{require_simple, truth, Gadget, GadgetKind, Question, GROUND_TRUTH_LIMIT};
use crate::error::Result;
use crate::graph::TemporalGraph;
use crate::multigraph::MGraph;

/// Lifetime-2 gadget: a path `s x1 x2 x3 x4 z` per source vertex with the
/// middle multiedge doubled (labels 1 and 2), plus `x1_v f_vw x4_w` at labels
/// 1 and 2 for each source edge `vw` with `v` before `w`.
pub fn vertex_cover_instance(source: &MGraph, k: usize) -> Result<Gadget> {
    require_simple(source)?;
    let mut g = TemporalGraph::new();
    g.add_vertex("s");
    g.add_vertex("z");
    for v in source.names() {
        g.add_edge("s", &format!("x1_{v}"), 1)?;
        g.add_edge(&format!("x1_{v}"), &format!("x2_{v}"), 1)?;
        g.add_edge("s", &format!("x2_{v}"), 2)?;
        g.add_edge(&format!("x2_{v}"), &format!("x3_{v}"), 1)?;
        g.add_edge(&format!("x2_{v}"), &format!("x3_{v}"), 2)?;
        g.add_edge(&format!("x3_{v}"), "z", 1)?;
        g.add_edge(&format!("x3_{v}"), &format!("x4_{v}"), 2)?;
        g.add_edge(&format!("x4_{v}"), "z", 2)?;
    }
    for ((a, b), _) in source.multiedges() {
        let (v, w) = (source.name(a), source.name(b));
        let f = format!("f_{v}_{w}");
        g.add_edge(&format!("x1_{v}"), &f, 1)?;
        g.add_edge(&f, &format!("x4_{w}"), 2)?;
    }
    let n = source.vertex_count();
    let truth = (n <= GROUND_TRUTH_LIMIT).then(|| truth::vertex_cover_number(source) <= k);
    Ok(Gadget::new(
        GadgetKind::VertexCover,
        source,
        k,
        None,
        g,
        Question::MultiedgeCut(n + k),
        Vec::new(),
        truth,
        Vec::new(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::{is_multiedge_cut, multiedge_cut_at_most, DEFAULT_BUDGET};
    use crate::walk::walk_from_labels;

    fn k3() -> MGraph {
        MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("a", "c", 1)]).unwrap()
    }

    #[test]
    fn single_edge_has_the_cover_cut() {
        let g = MGraph::from_multiedges(&[("v", "w", 1)]).unwrap();
        let gad = vertex_cover_instance(&g, 1).unwrap();
        assert_eq!(gad.graph.lifetime(), 2);
        assert_eq!(gad.question, Question::MultiedgeCut(3));
        let v = |n: &str| gad.graph.vertex(n).unwrap();
        let pair = |a: &str, b: &str| (v(a).min(v(b)), v(a).max(v(b)));
        let cut = [pair("s", "x1_v"), pair("x4_v", "z"), pair("x2_w", "x3_w")]
            .into_iter()
            .collect();
        assert!(is_multiedge_cut(&gad.graph, gad.s, gad.z, &cut));
        let out = multiedge_cut_at_most(&gad.graph, gad.s, gad.z, 3, DEFAULT_BUDGET).unwrap();
        assert!(out.cut.is_some());
        assert!(multiedge_cut_at_most(&gad.graph, gad.s, gad.z, 2, DEFAULT_BUDGET)
            .unwrap()
            .cut
            .is_none());
    }

    #[test]
    fn triangle_needs_two_cover_vertices() {
        let one = vertex_cover_instance(&k3(), 1).unwrap();
        assert_eq!(one.manifest.ground_truth, Some(false));
        assert!(multiedge_cut_at_most(&one.graph, one.s, one.z, 4, DEFAULT_BUDGET)
            .unwrap()
            .cut
            .is_none());
        let two = vertex_cover_instance(&k3(), 2).unwrap();
        assert!(multiedge_cut_at_most(&two.graph, two.s, two.z, 5, DEFAULT_BUDGET)
            .unwrap()
            .cut
            .is_some());
    }

    #[test]
    fn cheating_path_through_f() {
        let g = MGraph::from_multiedges(&[("v", "w", 1)]).unwrap();
        let gad = vertex_cover_instance(&g, 1).unwrap();
        walk_from_labels(&gad.graph, &["s", "x1_v", "f_v_w", "x4_w", "z"], &[1, 1, 2, 2]).unwrap();
    }
}
