//! Exhaustive ground truth for small graphs: enumerate every
//! construction sequence, count them, and find exact extreme costs with
//! witnesses and an optional cost histogram.
//!
//! Enumeration is backtracking over the available elements (unplaced
//! vertices, plus edges whose endpoints are both placed), always tried
//! in ascending element-index order, so the stream is deterministic and
//! lexicographic.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::graph::{Element, Graph, VertexId};

/// Largest element count for full enumeration.
pub const DEFAULT_ENUM_CAP: usize = 14;
/// Largest element count for counting; counting uses a downset DP and
/// reaches further than enumeration.
pub const DEFAULT_COUNT_CAP: usize = 20;
/// Below this element count, counting just enumerates.
const COUNT_DP_THRESHOLD: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {elements} elements, exceeding the cap of {cap}")]
    CapExceeded { cap: usize, elements: usize },
}

/// Exact enumeration summary for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    /// The construction number: how many c-sequences the graph has.
    pub count: BigUint,
    pub min_cost: u64,
    pub max_cost: u64,
    /// Witness orders, capped in length; the exact optimum counts are in
    /// `min_count` / `max_count`.
    pub min_witnesses: Vec<Vec<Element>>,
    pub max_witnesses: Vec<Vec<Element>>,
    pub min_count: u64,
    pub max_count: u64,
    pub histogram: Option<BTreeMap<u64, u64>>,
}

#[derive(Debug, Clone, Copy)]
pub struct BruteOptions {
    pub want_histogram: bool,
    pub witness_cap: usize,
    pub element_cap: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            want_histogram: false,
            witness_cap: 32,
            element_cap: DEFAULT_ENUM_CAP,
        }
    }
}

struct Enumerator<'g, F> {
    graph: &'g Graph,
    order: Vec<Element>,
    vertex_pos: Vec<usize>,
    edge_placed: Vec<bool>,
    cost: u64,
    visit: F,
}

impl<'g, F: FnMut(&[Element], u64)> Enumerator<'g, F> {
    fn run(graph: &'g Graph, visit: F) {
        let mut e = Enumerator {
            graph,
            order: Vec::with_capacity(graph.element_count()),
            vertex_pos: vec![0; graph.vertex_count()],
            edge_placed: vec![false; graph.edge_count()],
            cost: 0,
            visit,
        };
        e.recurse();
    }

    fn recurse(&mut self) {
        if self.order.len() == self.graph.element_count() {
            (self.visit)(&self.order, self.cost);
            return;
        }
        let pos = self.order.len() + 1;
        for v in self.graph.vertices() {
            if self.vertex_pos[v.0] == 0 {
                self.vertex_pos[v.0] = pos;
                self.order.push(Element::Vertex(v));
                self.recurse();
                self.order.pop();
                self.vertex_pos[v.0] = 0;
            }
        }
        for e in self.graph.edge_ids() {
            if self.edge_placed[e.0] {
                continue;
            }
            let (u, w) = self.graph.endpoints(e);
            let (pu, pw) = (self.vertex_pos[u.0], self.vertex_pos[w.0]);
            if pu == 0 || pw == 0 {
                continue;
            }
            let delta = (2 * pos - pu - pw) as u64;
            self.edge_placed[e.0] = true;
            self.cost += delta;
            self.order.push(Element::Edge(e));
            self.recurse();
            self.order.pop();
            self.cost -= delta;
            self.edge_placed[e.0] = false;
        }
    }
}

/// Visits every c-sequence exactly once with its total cost. No cap;
/// callers are expected to gate on element count themselves.
pub fn for_each_csequence(g: &Graph, visit: impl FnMut(&[Element], u64)) {
    Enumerator::run(g, visit);
}

/// Collects every c-sequence. Intended for small graphs only.
pub fn enumerate_csequences(g: &Graph, cap: usize) -> Result<Vec<Vec<Element>>, OracleError> {
    check_cap(g, cap)?;
    let mut out = Vec::new();
    for_each_csequence(g, |order, _| out.push(order.to_vec()));
    Ok(out)
}

/// The construction number `C(G)`: the number of linear extensions of
/// the vertex-edge incidence order.
pub fn construction_number(g: &Graph, cap: usize) -> Result<BigUint, OracleError> {
    check_cap(g, cap)?;
    if g.element_count() < COUNT_DP_THRESHOLD {
        let mut n = BigUint::ZERO;
        for_each_csequence(g, |_, _| n += 1u32);
        return Ok(n);
    }
    Ok(count_by_downset_dp(g))
}

/// Downset DP. With `S` the set of placed vertices and `k` the number of
/// placed edges, the remaining poset depends only on `(S, k)`: edges
/// inside `S` are interchangeable maximal elements. Recurrence:
/// `f(S, k) = sum_v f(S + v, k) + (e(S) - k) * f(S, k + 1)`.
fn count_by_downset_dp(g: &Graph) -> BigUint {
    let p = g.vertex_count();
    let q = g.edge_count();
    assert!(p <= 64, "counting DP is limited to 64 vertices");
    let nbr: Vec<u64> = (0..p)
        .map(|v| {
            g.neighbors(VertexId(v))
                .fold(0u64, |acc, u| acc | (1u64 << u.0))
        })
        .collect();
    let full: u64 = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
    let mut memo: HashMap<(u64, usize), BigUint> = HashMap::new();

    fn edges_inside(nbr: &[u64], mask: u64) -> usize {
        let mut total = 0usize;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            total += (nbr[v] & mask).count_ones() as usize;
        }
        total / 2
    }

    fn go(
        mask: u64,
        k: usize,
        full: u64,
        q: usize,
        p: usize,
        nbr: &[u64],
        memo: &mut HashMap<(u64, usize), BigUint>,
    ) -> BigUint {
        if mask == full && k == q {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&(mask, k)) {
            return v.clone();
        }
        let mut total = BigUint::ZERO;
        for v in 0..p {
            if mask & (1u64 << v) == 0 {
                total += go(mask | (1u64 << v), k, full, q, p, nbr, memo);
            }
        }
        let avail = edges_inside(nbr, mask) - k;
        if avail > 0 {
            total += go(mask, k + 1, full, q, p, nbr, memo) * BigUint::from(avail);
        }
        memo.insert((mask, k), total.clone());
        total
    }

    go(0, 0, full, q, p, &nbr, &mut memo)
}

/// Exhaustive min/max cost with witnesses and optional histogram.
pub fn brute_extremes(g: &Graph, opts: BruteOptions) -> Result<EnumerationReport, OracleError> {
    check_cap(g, opts.element_cap)?;
    let mut count = BigUint::ZERO;
    let mut min_cost: Option<u64> = None;
    let mut max_cost: Option<u64> = None;
    let mut min_witnesses: Vec<Vec<Element>> = Vec::new();
    let mut max_witnesses: Vec<Vec<Element>> = Vec::new();
    let mut min_count = 0u64;
    let mut max_count = 0u64;
    let mut histogram = opts.want_histogram.then(BTreeMap::new);
    for_each_csequence(g, |order, cost| {
        count += 1u32;
        if let Some(h) = histogram.as_mut() {
            *h.entry(cost).or_insert(0u64) += 1;
        }
        if min_cost.is_none_or(|m| cost < m) {
            min_cost = Some(cost);
            min_count = 0;
            min_witnesses.clear();
        }
        if min_cost == Some(cost) {
            min_count += 1;
            if min_witnesses.len() < opts.witness_cap {
                min_witnesses.push(order.to_vec());
            }
        }
        if max_cost.is_none_or(|m| cost > m) {
            max_cost = Some(cost);
            max_count = 0;
            max_witnesses.clear();
        }
        if max_cost == Some(cost) {
            max_count += 1;
            if max_witnesses.len() < opts.witness_cap {
                max_witnesses.push(order.to_vec());
            }
        }
    });
    Ok(EnumerationReport {
        count,
        min_cost: min_cost.expect("every graph has at least one c-sequence"),
        max_cost: max_cost.expect("every graph has at least one c-sequence"),
        min_witnesses,
        max_witnesses,
        min_count,
        max_count,
        histogram,
    })
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), OracleError> {
    let elements = g.element_count();
    if elements > cap {
        return Err(OracleError::CapExceeded { cap, elements });
    }
    Ok(())
}
