//! Seeded random graphs and random construction sequences, used by the
//! property suites and by test tooling. Everything is deterministic
//! given the RNG state.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Element, Graph, VertexId};

/// Random simple graph with at most `max_elements` elements
/// (vertices + edges). Vertex count is drawn first, then a random
/// subset of the possible edges that fits the element budget.
pub fn random_graph(rng: &mut impl Rng, max_elements: usize) -> Graph {
    assert!(max_elements >= 1);
    let p = rng.gen_range(1..=max_elements.min(8));
    let mut possible: Vec<(usize, usize)> = Vec::new();
    for a in 0..p {
        for b in a + 1..p {
            possible.push((a, b));
        }
    }
    possible.shuffle(rng);
    let budget = (max_elements - p).min(possible.len());
    let q = if budget == 0 {
        0
    } else {
        rng.gen_range(0..=budget)
    };
    Graph::build(p, &possible[..q]).expect("sampled pairs are distinct and in range")
}

/// Uniformly random valid c-sequence order: repeatedly pick among the
/// available elements (unplaced vertices plus edges with both endpoints
/// placed).
pub fn random_order(g: &Graph, rng: &mut impl Rng) -> Vec<Element> {
    let mut placed_vertex = vec![false; g.vertex_count()];
    let mut placed_edge = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.element_count());
    while order.len() < g.element_count() {
        let mut available: Vec<Element> = (0..g.vertex_count())
            .filter(|&v| !placed_vertex[v])
            .map(|v| Element::Vertex(VertexId(v)))
            .collect();
        available.extend(g.edge_ids().filter_map(|e| {
            if placed_edge[e.0] {
                return None;
            }
            let (u, w) = g.endpoints(e);
            (placed_vertex[u.0] && placed_vertex[w.0]).then_some(Element::Edge(e))
        }));
        let pick = available[rng.gen_range(0..available.len())];
        match pick {
            Element::Vertex(v) => placed_vertex[v.0] = true,
            Element::Edge(e) => placed_edge[e.0] = true,
        }
        order.push(pick);
    }
    order
}

/// A random vertex relabeling of `g`, returned with the permutation that
/// maps old labels to new ones.
pub fn random_relabeling(g: &Graph, rng: &mut impl Rng) -> (Graph, Vec<usize>) {
    let mut map: Vec<usize> = (0..g.vertex_count()).collect();
    map.shuffle(rng);
    let pairs: Vec<(usize, usize)> = g
        .edge_pairs()
        .iter()
        .map(|&(a, b)| (map[a], map[b]))
        .collect();
    let relabeled = Graph::build(g.vertex_count(), &pairs).expect("relabeling keeps validity");
    (relabeled, map)
}
