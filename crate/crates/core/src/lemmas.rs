//! Structural property suite, run against exhaustive enumeration on
//! small graphs:
//!
//! - every min-cost sequence is greedy
//! - every max-cost sequence is easy and places vertices in
//!   non-increasing degree order
//! - easy-sequence cost ignores edge order
//! - relabeling preserves counts and extremes
//! - deleting an edge never raises the min, nor the max on spanning
//!   subgraphs
//! - easy-sequence cost equals `q(2p + q + 1) - sum_j j d_j` over the
//!   placement order

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Element, Graph};
use crate::oracle::{self, BruteOptions};
use crate::par;
use crate::random;
use crate::sequence::ConstructionSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSuiteReport {
    pub graphs_checked: usize,
    pub violations: Vec<String>,
}

impl LemmaSuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every lemma property on one small graph (full enumeration
/// twice: once for the extremes, once to test each optimum).
pub fn check_graph(g: &Graph, rng: &mut impl Rng) -> Vec<String> {
    let mut violations = Vec::new();
    let report = oracle::brute_extremes(g, BruteOptions::default())
        .expect("lemma suite graphs stay under the enumeration cap");

    // Lemmas on optimal sequences, over *all* optima.
    oracle::for_each_csequence(g, |order, cost| {
        if cost == report.min_cost {
            let s = ConstructionSequence::validate(g, order).unwrap();
            if !s.is_greedy() {
                violations.push(format!("min-cost sequence not greedy: {order:?}"));
            }
        }
        if cost == report.max_cost {
            let s = ConstructionSequence::validate(g, order).unwrap();
            if !s.is_easy() {
                violations.push(format!("max-cost sequence not easy: {order:?}"));
            }
            let degrees: Vec<usize> = order
                .iter()
                .filter_map(|el| match el {
                    Element::Vertex(v) => Some(g.degree(*v)),
                    Element::Edge(_) => None,
                })
                .collect();
            if degrees.windows(2).any(|w| w[0] < w[1]) {
                violations.push(format!(
                    "max-cost sequence places degrees out of order: {order:?}"
                ));
            }
        }
    });

    // Edge-permutation invariance of easy sequences.
    let mut easy: Vec<Element> = g.elements().collect();
    if let Ok(s) = ConstructionSequence::validate(g, &easy) {
        let base = s.total_cost().unwrap().total;
        let p = g.vertex_count();
        easy[p..].shuffle(rng);
        let shuffled = ConstructionSequence::validate(g, &easy).unwrap();
        if shuffled.total_cost().unwrap().total != base {
            violations.push("easy-sequence cost changed under edge permutation".into());
        }
        // Degree-weighted closed form over the placement order.
        let q = g.edge_count() as u64;
        let weighted: u64 = (1..=p as u64)
            .zip(g.vertices().map(|v| g.degree(v) as u64))
            .map(|(j, d)| j * d)
            .sum();
        let expected = q * (2 * p as u64 + q + 1) - weighted;
        if base != expected {
            violations.push(format!(
                "easy-sequence cost {base} differs from degree formula {expected}"
            ));
        }
    }

    // Isomorphism invariance of the whole report.
    let (relabeled, _map) = random::random_relabeling(g, rng);
    let relabeled_report = oracle::brute_extremes(&relabeled, BruteOptions::default()).unwrap();
    if (relabeled_report.count, relabeled_report.min_cost, relabeled_report.max_cost)
        != (report.count.clone(), report.min_cost, report.max_cost)
    {
        violations.push("relabeled graph produced a different report".into());
    }

    // Subgraph monotonicity under single-edge deletion.
    for skip in 0..g.edge_count() {
        let pairs: Vec<(usize, usize)> = g
            .edge_pairs()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &e)| e)
            .collect();
        let h = Graph::build(g.vertex_count(), &pairs).unwrap();
        let sub = oracle::brute_extremes(&h, BruteOptions::default()).unwrap();
        if sub.min_cost > report.min_cost {
            violations.push(format!("deleting edge {skip} raised the min cost"));
        }
        if sub.max_cost > report.max_cost {
            violations.push(format!("deleting edge {skip} raised the max cost"));
        }
    }

    violations
}

/// All labeled graphs on at most four vertices.
pub fn all_small_graphs() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for p in 1..=4usize {
        let possible: Vec<(usize, usize)> = (0..p)
            .flat_map(|a| (a + 1..p).map(move |b| (a, b)))
            .collect();
        for mask in 0..(1u32 << possible.len()) {
            let pairs: Vec<(usize, usize)> = possible
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            graphs.push(Graph::build(p, &pairs).unwrap());
        }
    }
    graphs
}

/// Runs the full suite: all labeled graphs on <= 4 vertices plus
/// `samples` seeded random graphs with at most `max_elements` elements.
pub fn run_suite(seed: u64, samples: usize, max_elements: usize) -> LemmaSuiteReport {
    let mut targets = all_small_graphs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        targets.push(random::random_graph(&mut rng, max_elements));
    }
    let graphs_checked = targets.len();
    // one independent rng stream per graph keeps the fan-out deterministic
    let seeded: Vec<(u64, Graph)> = targets
        .into_iter()
        .enumerate()
        .map(|(i, g)| (seed ^ (i as u64).wrapping_mul(0x9e3779b97f4a7c15), g))
        .collect();
    let violations: Vec<Vec<String>> = par::map_collect(seeded, |(graph_seed, g)| {
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed);
        check_graph(&g, &mut rng)
    });
    LemmaSuiteReport {
        graphs_checked,
        violations: violations.into_iter().flatten().collect(),
    }
}

/// Exchange arithmetic: swapping an edge with the immediately
/// following non-endpoint vertex raises the total by `2 + deg(v)`.
/// Exposed for the property tests.
pub fn swap_edge_vertex(
    g: &Graph,
    order: &[Element],
    edge_at: usize,
) -> Option<(Vec<Element>, u64)> {
    let Element::Edge(e) = order[edge_at] else {
        return None;
    };
    let Element::Vertex(v) = *order.get(edge_at + 1)? else {
        return None;
    };
    let (u, w) = g.endpoints(e);
    if v == u || v == w {
        return None;
    }
    let mut swapped = order.to_vec();
    swapped.swap(edge_at, edge_at + 1);
    Some((swapped, 2 + g.degree(v) as u64))
}
