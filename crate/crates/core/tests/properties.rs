//! Randomized invariants over small graphs and sequences.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cseq::formats::GraphDocument;
use cseq::graph::{Element, Graph};
use cseq::random;
use cseq::sequence::ConstructionSequence;

/// Arbitrary labeled graph on 1..=6 vertices via an edge-mask.
fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|p| {
        let possible: Vec<(usize, usize)> = (0..p)
            .flat_map(|a| (a + 1..p).map(move |b| (a, b)))
            .collect();
        let bits = possible.len() as u32;
        (Just(possible), 0u32..(1u32 << bits)).prop_map(move |(possible, mask)| {
            let pairs: Vec<(usize, usize)> = possible
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::build(p, &pairs).unwrap()
        })
    })
}

/// Reference greedy check: when a vertex arrives, every edge that was
/// already available must have been placed.
fn greedy_by_prefix(g: &Graph, order: &[Element]) -> bool {
    let mut vertex_placed = vec![false; g.vertex_count()];
    let mut edge_placed = vec![false; g.edge_count()];
    for el in order {
        match *el {
            Element::Edge(e) => edge_placed[e.0] = true,
            Element::Vertex(v) => {
                for (i, &(a, b)) in g.edge_pairs().iter().enumerate() {
                    if vertex_placed[a] && vertex_placed[b] && !edge_placed[i] {
                        return false;
                    }
                }
                vertex_placed[v.0] = true;
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn position_identity_always_holds(g in graph_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = random::random_order(&g, &mut rng);
        let s = ConstructionSequence::validate(&g, &order).unwrap();
        prop_assert_eq!(
            s.total_cost().unwrap().total,
            s.cost_by_position_identity().unwrap()
        );
    }

    #[test]
    fn greedy_flag_matches_prefix_definition(g in graph_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = random::random_order(&g, &mut rng);
        let s = ConstructionSequence::validate(&g, &order).unwrap();
        prop_assert_eq!(s.is_greedy(), greedy_by_prefix(&g, &order));
    }

    #[test]
    fn swapping_an_edge_earlier_never_raises_cost(g in graph_strategy(), seed in any::<u64>()) {
        // moving an edge one slot earlier past a non-endpoint vertex is
        // the inverse of the +2+deg(v) exchange, so cost never increases
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = random::random_order(&g, &mut rng);
        let base = ConstructionSequence::validate(&g, &order)
            .unwrap()
            .total_cost()
            .unwrap()
            .total;
        for i in 0..order.len().saturating_sub(1) {
            if let (Element::Vertex(_), Element::Edge(_)) = (order[i], order[i + 1]) {
                let mut swapped = order.clone();
                swapped.swap(i, i + 1);
                if let Ok(s) = ConstructionSequence::validate(&g, &swapped) {
                    prop_assert!(s.total_cost().unwrap().total <= base);
                }
            }
        }
    }

    #[test]
    fn document_round_trip(g in graph_strategy()) {
        let doc = GraphDocument::from_graph(&g);
        prop_assert_eq!(GraphDocument::parse_text(&doc.to_text()).unwrap(), doc.clone());
        prop_assert_eq!(GraphDocument::parse_json(&doc.to_json()).unwrap(), doc.clone());
        let rebuilt = doc.to_graph().unwrap();
        prop_assert_eq!(rebuilt.edge_pairs(), g.edge_pairs());
    }

    #[test]
    fn truncated_orders_are_rejected(g in graph_strategy(), seed in any::<u64>()) {
        prop_assume!(g.element_count() > 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order = random::random_order(&g, &mut rng);
        order.pop();
        prop_assert!(ConstructionSequence::validate(&g, &order).is_err());
    }
}
