//! Construction sequences: validation, cost, and classification.
//!
//! A construction sequence (c-sequence) is a permutation of a graph's
//! elements in which every edge appears after both of its endpoints. All
//! positions are 1-based so the cost arithmetic reads exactly like the
//! defining formulas:
//!
//! - cost of edge `e = uw`: `(pos(e) - pos(u)) + (pos(e) - pos(w))`
//! - cost of the sequence: sum of its edge costs
//! - equivalently `2 * sum_e pos(e) - sum_v deg(v) * pos(v)`

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Element, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("sequence has {got} elements, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("duplicate element {0}")]
    DuplicateElement(ElementDesc),
    #[error("missing element {0}")]
    MissingElement(ElementDesc),
    #[error("edge {edge} placed before its endpoint v:{endpoint}")]
    EdgeBeforeEndpoint { edge: ElementDesc, endpoint: usize },
    #[error("edge index {0} out of range")]
    UnknownEdge(usize),
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("position {i} out of range 1..={len}")]
    PositionOutOfRange { i: usize, len: usize },
    #[error("vertex map is not an isomorphism")]
    NotAnIsomorphism,
    #[error("cost arithmetic overflowed 64 bits")]
    Overflow,
}

/// Printable element identity for error messages: `v:<id>` or `e:<u>-<w>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementDesc {
    Vertex(usize),
    Edge(usize, usize),
}

impl fmt::Display for ElementDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementDesc::Vertex(v) => write!(f, "v:{v}"),
            ElementDesc::Edge(u, w) => write!(f, "e:{u}-{w}"),
        }
    }
}

fn describe(g: &Graph, el: Element) -> ElementDesc {
    match el {
        Element::Vertex(v) => ElementDesc::Vertex(v.0),
        Element::Edge(e) => {
            let (u, w) = g.endpoints(e);
            ElementDesc::Edge(u.0, w.0)
        }
    }
}

/// Per-edge delays and their total for one sequence. Every per-edge
/// delay is at least 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostBreakdown {
    /// Delay of each edge, indexed by `EdgeId`.
    pub per_edge: Vec<u64>,
    pub total: u64,
}

/// A validated c-sequence with O(1) position lookup. Immutable after
/// validation; all operations are pure.
#[derive(Debug, Clone)]
pub struct ConstructionSequence<'g> {
    graph: &'g Graph,
    order: Vec<Element>,
    vertex_pos: Vec<usize>,
    edge_pos: Vec<usize>,
}

impl<'g> ConstructionSequence<'g> {
    /// Checks that `order` is a permutation of the graph's elements in
    /// which every edge follows both endpoints. Violations are reported
    /// in scan order.
    pub fn validate(graph: &'g Graph, order: &[Element]) -> Result<Self, SequenceError> {
        let l = graph.element_count();
        if order.len() != l {
            return Err(SequenceError::LengthMismatch {
                expected: l,
                got: order.len(),
            });
        }
        let mut vertex_pos = vec![0usize; graph.vertex_count()];
        let mut edge_pos = vec![0usize; graph.edge_count()];
        for (i, &el) in order.iter().enumerate() {
            let pos = i + 1;
            match el {
                Element::Vertex(v) => {
                    if v.0 >= graph.vertex_count() {
                        return Err(SequenceError::UnknownVertex(v.0));
                    }
                    if vertex_pos[v.0] != 0 {
                        return Err(SequenceError::DuplicateElement(describe(graph, el)));
                    }
                    vertex_pos[v.0] = pos;
                }
                Element::Edge(e) => {
                    if e.0 >= graph.edge_count() {
                        return Err(SequenceError::UnknownEdge(e.0));
                    }
                    if edge_pos[e.0] != 0 {
                        return Err(SequenceError::DuplicateElement(describe(graph, el)));
                    }
                    let (u, w) = graph.endpoints(e);
                    for end in [u, w] {
                        if vertex_pos[end.0] == 0 {
                            return Err(SequenceError::EdgeBeforeEndpoint {
                                edge: describe(graph, el),
                                endpoint: end.0,
                            });
                        }
                    }
                    edge_pos[e.0] = pos;
                }
            }
        }
        if let Some(v) = vertex_pos.iter().position(|&p| p == 0) {
            return Err(SequenceError::MissingElement(ElementDesc::Vertex(v)));
        }
        if let Some(e) = edge_pos.iter().position(|&p| p == 0) {
            return Err(SequenceError::MissingElement(describe(
                graph,
                Element::Edge(EdgeId(e)),
            )));
        }
        Ok(ConstructionSequence {
            graph,
            order: order.to_vec(),
            vertex_pos,
            edge_pos,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn order(&self) -> &[Element] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 1-based position of an element.
    pub fn position(&self, el: Element) -> usize {
        match el {
            Element::Vertex(v) => self.vertex_pos[v.0],
            Element::Edge(e) => self.edge_pos[e.0],
        }
    }

    /// Delay of one edge: `(pos(e) - pos(u)) + (pos(e) - pos(w))`.
    pub fn edge_cost(&self, e: EdgeId) -> Result<u64, SequenceError> {
        if e.0 >= self.graph.edge_count() {
            return Err(SequenceError::UnknownEdge(e.0));
        }
        let (u, w) = self.graph.endpoints(e);
        let pe = self.edge_pos[e.0] as u64;
        Ok((pe - self.vertex_pos[u.0] as u64) + (pe - self.vertex_pos[w.0] as u64))
    }

    pub fn total_cost(&self) -> Result<CostBreakdown, SequenceError> {
        let mut per_edge = Vec::with_capacity(self.graph.edge_count());
        let mut total: u64 = 0;
        for e in self.graph.edge_ids() {
            let c = self.edge_cost(e)?;
            total = total.checked_add(c).ok_or(SequenceError::Overflow)?;
            per_edge.push(c);
        }
        Ok(CostBreakdown { per_edge, total })
    }

    /// `2 * sum_e pos(e) - sum_v deg(v) * pos(v)`; always equals
    /// `total_cost().total`, used as an independent cross-check.
    pub fn cost_by_position_identity(&self) -> Result<u64, SequenceError> {
        let mut acc: i64 = 0;
        for e in self.graph.edge_ids() {
            let term = 2 * self.edge_pos[e.0] as i64;
            acc = acc.checked_add(term).ok_or(SequenceError::Overflow)?;
        }
        for v in self.graph.vertices() {
            let term = (self.graph.degree(v) as i64)
                .checked_mul(self.vertex_pos[v.0] as i64)
                .ok_or(SequenceError::Overflow)?;
            acc = acc.checked_sub(term).ok_or(SequenceError::Overflow)?;
        }
        u64::try_from(acc).map_err(|_| SequenceError::Overflow)
    }

    /// Every vertex precedes every edge.
    pub fn is_easy(&self) -> bool {
        let p = self.graph.vertex_count();
        self.order[..p].iter().all(Element::is_vertex)
    }

    /// No vertex sits strictly between the later endpoint of an edge and
    /// the edge itself.
    pub fn is_greedy(&self) -> bool {
        for e in self.graph.edge_ids() {
            let (u, w) = self.graph.endpoints(e);
            let later = self.vertex_pos[u.0].max(self.vertex_pos[w.0]);
            let pe = self.edge_pos[e.0];
            for v in self.graph.vertices() {
                if v == u || v == w {
                    continue;
                }
                let pv = self.vertex_pos[v.0];
                if pv > later && pv < pe {
                    return false;
                }
            }
        }
        true
    }

    /// Every prefix-induced subgraph has at most two connected components.
    pub fn is_nearly_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.graph.vertex_count());
        let mut components = 0usize;
        for &el in &self.order {
            match el {
                Element::Vertex(_) => components += 1,
                Element::Edge(e) => {
                    let (u, w) = self.graph.endpoints(e);
                    if dsu.union(u.0, w.0) {
                        components -= 1;
                    }
                }
            }
            if components > 2 {
                return false;
            }
        }
        true
    }

    /// Graph induced by the first `i` elements, with vertices relabeled
    /// in order of appearance, plus the prefix order translated to the
    /// new labels. The translated prefix is a valid c-sequence for the
    /// returned graph.
    pub fn prefix_subgraph(&self, i: usize) -> Result<(Graph, Vec<Element>), SequenceError> {
        if i < 1 || i > self.len() {
            return Err(SequenceError::PositionOutOfRange { i, len: self.len() });
        }
        let mut vertex_map = vec![usize::MAX; self.graph.vertex_count()];
        let mut next_vertex = 0usize;
        let mut pairs = Vec::new();
        let mut order = Vec::with_capacity(i);
        for &el in &self.order[..i] {
            match el {
                Element::Vertex(v) => {
                    vertex_map[v.0] = next_vertex;
                    order.push(Element::Vertex(VertexId(next_vertex)));
                    next_vertex += 1;
                }
                Element::Edge(e) => {
                    let (u, w) = self.graph.endpoints(e);
                    order.push(Element::Edge(EdgeId(pairs.len())));
                    pairs.push((vertex_map[u.0], vertex_map[w.0]));
                }
            }
        }
        let g = Graph::build(next_vertex, &pairs).expect("prefix of a valid sequence is a graph");
        Ok((g, order))
    }

    /// Transports the sequence along a vertex bijection onto `target`.
    /// The image has an identical cost breakdown.
    pub fn map_to<'t>(
        &self,
        target: &'t Graph,
        vertex_map: &[usize],
    ) -> Result<ConstructionSequence<'t>, SequenceError> {
        if !self.graph.is_isomorphism(target, vertex_map) {
            return Err(SequenceError::NotAnIsomorphism);
        }
        let order: Vec<Element> = self
            .order
            .iter()
            .map(|&el| match el {
                Element::Vertex(v) => Element::Vertex(VertexId(vertex_map[v.0])),
                Element::Edge(e) => {
                    let (u, w) = self.graph.endpoints(e);
                    let image = target
                        .edge_between(VertexId(vertex_map[u.0]), VertexId(vertex_map[w.0]))
                        .expect("isomorphism preserves edges");
                    Element::Edge(image)
                }
            })
            .collect();
        ConstructionSequence::validate(target, &order)
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    /// Returns true when the union actually merged two components.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Family, FamilySpec};

    fn p3() -> Graph {
        FamilySpec::new(Family::Path, 3).unwrap().generate()
    }

    fn star(n: usize) -> Graph {
        FamilySpec::new(Family::Star, n).unwrap().generate()
    }

    fn v(i: usize) -> Element {
        Element::Vertex(VertexId(i))
    }

    fn e(i: usize) -> Element {
        Element::Edge(EdgeId(i))
    }

    /// P_3 is generated as 0-1-2 with edge 0 = {0,1}, edge 1 = {1,2};
    /// the comments below write sequences 1-based, e.g. (1,2,3,12,23).
    fn p3_easy() -> Vec<Element> {
        vec![v(0), v(1), v(2), e(0), e(1)]
    }

    #[test]
    fn validate_accepts_easy_p3() {
        let g = p3();
        let s = ConstructionSequence::validate(&g, &p3_easy()).unwrap();
        assert_eq!(s.position(e(0)), 4);
    }

    #[test]
    fn validate_rejects_edge_before_endpoint() {
        let g = p3();
        let err =
            ConstructionSequence::validate(&g, &[v(0), e(0), v(1), v(2), e(1)]).unwrap_err();
        assert_eq!(
            err,
            SequenceError::EdgeBeforeEndpoint {
                edge: ElementDesc::Edge(0, 1),
                endpoint: 1
            }
        );
    }

    #[test]
    fn validate_rejects_non_permutations() {
        let g = p3();
        assert!(matches!(
            ConstructionSequence::validate(&g, &[v(0), v(1), v(2), e(0)]),
            Err(SequenceError::LengthMismatch { expected: 5, got: 4 })
        ));
        assert!(matches!(
            ConstructionSequence::validate(&g, &[v(0), v(1), v(1), e(0), e(1)]),
            Err(SequenceError::DuplicateElement(_))
        ));
    }

    #[test]
    fn validate_single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        let s = ConstructionSequence::validate(&g, &[v(0)]).unwrap();
        assert!(s.is_easy());
        assert_eq!(s.total_cost().unwrap().total, 0);
    }

    #[test]
    fn p3_costs_match_worked_examples() {
        let g = p3();
        // (1,2,3,12,23) -> 10
        let s = ConstructionSequence::validate(&g, &p3_easy()).unwrap();
        assert_eq!(s.edge_cost(EdgeId(0)).unwrap(), 5);
        assert_eq!(s.total_cost().unwrap().total, 10);
        // (3,1,2,12,23) -> 9
        let y = ConstructionSequence::validate(&g, &[v(2), v(0), v(1), e(0), e(1)]).unwrap();
        assert_eq!(y.total_cost().unwrap().total, 9);
        // (2,3,1,12,23) -> 11
        let z = ConstructionSequence::validate(&g, &[v(1), v(2), v(0), e(0), e(1)]).unwrap();
        assert_eq!(z.total_cost().unwrap().total, 11);
        // greedy (1,2,12,3,23) -> 7 and (2,3,23,1,12) -> 8
        let x1 = ConstructionSequence::validate(&g, &[v(0), v(1), e(0), v(2), e(1)]).unwrap();
        assert_eq!(x1.edge_cost(EdgeId(0)).unwrap(), 3);
        assert_eq!(x1.total_cost().unwrap().total, 7);
        let y1 = ConstructionSequence::validate(&g, &[v(1), v(2), e(1), v(0), e(0)]).unwrap();
        assert_eq!(y1.total_cost().unwrap().total, 8);
    }

    #[test]
    fn classification_flags_on_p3() {
        let g = p3();
        let easy = ConstructionSequence::validate(&g, &p3_easy()).unwrap();
        assert!(easy.is_easy());
        assert!(!easy.is_greedy()); // vertex 2 sits between endpoint 1 and edge 0
        let greedy = ConstructionSequence::validate(&g, &[v(0), v(1), e(0), v(2), e(1)]).unwrap();
        assert!(greedy.is_greedy());
        assert!(!greedy.is_easy());
    }

    #[test]
    fn star_sequences_from_worked_examples() {
        // K_{1,3}: hub 0, leaves 1..3, edge j-1 = {0,j}
        let g = star(3);
        let max = ConstructionSequence::validate(
            &g,
            &[v(0), v(1), v(2), v(3), e(0), e(1), e(2)],
        )
        .unwrap();
        assert_eq!(max.total_cost().unwrap().total, 24);
        let mid = ConstructionSequence::validate(
            &g,
            &[v(1), v(2), v(3), v(0), e(0), e(1), e(2)],
        )
        .unwrap();
        assert_eq!(mid.total_cost().unwrap().total, 18);
        assert!(mid.is_easy() && mid.is_greedy());
        let min = ConstructionSequence::validate(
            &g,
            &[v(1), v(0), e(0), v(2), e(1), v(3), e(2)],
        )
        .unwrap();
        assert_eq!(min.total_cost().unwrap().total, 13);
        assert!(min.is_nearly_connected());
    }

    #[test]
    fn k14_min_sequence_not_nearly_connected() {
        let g = star(4);
        // (1,2,0,01,02,3,03,4,04)
        let order = [v(1), v(2), v(0), e(0), e(1), v(3), e(2), v(4), e(3)];
        let s = ConstructionSequence::validate(&g, &order).unwrap();
        assert_eq!(s.total_cost().unwrap().total, 21);
        assert!(!s.is_nearly_connected());
    }

    #[test]
    fn k2_sequences_nearly_connected() {
        let g = FamilySpec::new(Family::Path, 2).unwrap().generate();
        for order in [[v(0), v(1), e(0)], [v(1), v(0), e(0)]] {
            let s = ConstructionSequence::validate(&g, &order).unwrap();
            assert!(s.is_nearly_connected());
            assert_eq!(s.total_cost().unwrap().total, 3);
            assert_eq!(s.cost_by_position_identity().unwrap(), 3);
        }
    }

    #[test]
    fn identity_matches_direct_cost() {
        let g = p3();
        let s = ConstructionSequence::validate(&g, &p3_easy()).unwrap();
        assert_eq!(s.cost_by_position_identity().unwrap(), 10);
        let empty = Graph::build(3, &[]).unwrap();
        let s = ConstructionSequence::validate(&empty, &[v(0), v(1), v(2)]).unwrap();
        assert_eq!(s.cost_by_position_identity().unwrap(), 0);
    }

    #[test]
    fn prefix_subgraph_is_valid_csequence() {
        let g = p3();
        let s = ConstructionSequence::validate(&g, &[v(0), v(1), e(0), v(2), e(1)]).unwrap();
        let (h, order) = s.prefix_subgraph(3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (2, 1));
        assert!(ConstructionSequence::validate(&h, &order).is_ok());
        let (full, _) = s.prefix_subgraph(5).unwrap();
        assert_eq!(full.edge_count(), g.edge_count());
        assert!(s.prefix_subgraph(0).is_err());
        assert!(s.prefix_subgraph(6).is_err());
    }

    #[test]
    fn map_preserves_cost() {
        let g = p3();
        let s = ConstructionSequence::validate(&g, &p3_easy()).unwrap();
        // identity
        let id = s.map_to(&g, &[0, 1, 2]).unwrap();
        assert_eq!(id.order(), s.order());
        // swap the two endpoints of the path
        let m = s.map_to(&g, &[2, 1, 0]).unwrap();
        assert_eq!(m.total_cost().unwrap().total, 10);
        // non-isomorphism rejected
        let k3 = FamilySpec::new(Family::Cycle, 3).unwrap().generate();
        assert_eq!(
            s.map_to(&k3, &[0, 1, 2]).unwrap_err(),
            SequenceError::NotAnIsomorphism
        );
    }
}
