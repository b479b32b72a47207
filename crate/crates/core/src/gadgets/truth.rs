//! Direct exhaustive answers for the source problems of the gadgets.

use crate::graph::Vertex;
use crate::multigraph::MGraph;

fn edges(g: &MGraph) -> Vec<(Vertex, Vertex)> {
    g.multiedges().map(|(k, _)| k).collect()
}

fn is_independent(es: &[(Vertex, Vertex)], set: u64) -> bool {
    es.iter().all(|&(a, b)| set >> a & 1 == 0 || set >> b & 1 == 0)
}

/// Size of a maximum independent set, by trying every vertex subset.
pub fn independence_number(g: &MGraph) -> usize {
    let n = g.vertex_count();
    assert!(n < 64, "exhaustive search is for small graphs");
    let es = edges(g);
    (0u64..1 << n)
        .filter(|&set| is_independent(&es, set))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Size of a minimum vertex cover, by trying every vertex subset.
pub fn vertex_cover_number(g: &MGraph) -> usize {
    let n = g.vertex_count();
    assert!(n < 64, "exhaustive search is for small graphs");
    let es = edges(g);
    (0u64..1 << n)
        .filter(|&set| es.iter().all(|&(a, b)| set >> a & 1 == 1 || set >> b & 1 == 1))
        .map(|set| set.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Whether some clique takes exactly one vertex from each of the `k` color classes.
pub fn has_multicolored_clique(g: &MGraph, coloring: &[usize], k: usize) -> bool {
    let classes: Vec<Vec<Vertex>> = (0..k)
        .map(|c| (0..g.vertex_count()).filter(|&v| coloring[v] == c).collect())
        .collect();
    fn extend(g: &MGraph, classes: &[Vec<Vertex>], chosen: &mut Vec<Vertex>) -> bool {
        let Some(class) = classes.get(chosen.len()) else {
            return true;
        };
        for &v in class {
            if chosen.iter().all(|&u| g.multiplicity(u, v) > 0) {
                chosen.push(v);
                if extend(g, classes, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(g, &classes, &mut Vec::new())
}

/// Proper colorings with exactly `k` non-empty classes, one per partition
/// (colors numbered by first appearance).
pub fn proper_colorings(g: &MGraph, k: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut color = vec![0; n];
    fn go(g: &MGraph, k: usize, v: usize, used: usize, color: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == color.len() {
            if used == k {
                out.push(color.clone());
            }
            return;
        }
        for c in 0..(used + 1).min(k) {
            if (0..v).any(|u| color[u] == c && g.multiplicity(u, v) > 0) {
                continue;
            }
            color[v] = c;
            go(g, k, v + 1, used.max(c + 1), color, out);
        }
    }
    go(g, k, 0, 0, &mut color, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> MGraph {
        MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1), ("c", "a", 1)]).unwrap()
    }

    #[test]
    fn triangle_numbers() {
        assert_eq!(independence_number(&k3()), 1);
        assert_eq!(vertex_cover_number(&k3()), 2);
        assert!(has_multicolored_clique(&k3(), &[0, 1, 2], 3));
        assert_eq!(independence_number(&MGraph::with_vertices(3)), 3);
    }

    #[test]
    fn path_has_no_triangle() {
        let p = MGraph::from_multiedges(&[("a", "b", 1), ("b", "c", 1)]).unwrap();
        assert!(!has_multicolored_clique(&p, &[0, 1, 2], 3));
    }

    #[test]
    fn coloring_census() {
        // a triangle has one partition into three classes; three isolated vertices too
        assert_eq!(proper_colorings(&k3(), 3).len(), 1);
        assert_eq!(proper_colorings(&MGraph::with_vertices(4), 3).len(), 6);
        assert!(proper_colorings(&k3(), 2).is_empty());
    }
}
