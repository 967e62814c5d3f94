//! Finite simple undirected graphs with stable vertex labels and dense
//! edge indices.
//!
//! Vertices are labeled `0..p` and edges are indexed `0..q` in insertion
//! order. A graph's elements are its `p + q` vertices and edges together;
//! construction sequences permute exactly this element set.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {p} vertices")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("loop at vertex {0} not allowed in a simple graph")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("{family} parameter {given} below minimum {min}")]
    ParameterTooSmall {
        family: &'static str,
        given: usize,
        min: usize,
    },
    #[error("tree enumeration capped at n = {cap}, requested n = {given}")]
    TreeCapExceeded { cap: usize, given: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
}

/// Index of a vertex, dense in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// Index of an edge, dense in `[0, q)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

/// A vertex or an edge; a graph has `l = p + q` elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v:{}", self.0)
    }
}

impl Element {
    pub fn is_vertex(&self) -> bool {
        matches!(self, Element::Vertex(_))
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, Element::Edge(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegreeOrder {
    Ascending,
    Descending,
}

/// Immutable simple graph. All operations are pure; values are safe to
/// share across threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    p: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `p` vertices from endpoint pairs. Edges are
    /// indexed in input order; each pair is normalized to `(min, max)`.
    pub fn build(p: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adj = vec![Vec::new(); p];
        for &(a, b) in pairs {
            if a >= p {
                return Err(GraphError::VertexOutOfRange { vertex: a, p });
            }
            if b >= p {
                return Err(GraphError::VertexOutOfRange { vertex: b, p });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let pair = (a.min(b), a.max(b));
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge(pair.0, pair.1));
            }
            let idx = edges.len();
            edges.push(pair);
            adj[pair.0].push(idx);
            adj[pair.1].push(idx);
        }
        Ok(Graph { p, edges, adj })
    }

    /// Fast path for generators whose output is valid by construction;
    /// skips the duplicate check that dominates build time on large
    /// dense families. Validity is asserted in debug builds.
    pub(crate) fn from_valid_pairs(p: usize, pairs: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); p];
        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            debug_assert!(a != b && a < p && b < p);
            let pair = (a.min(b), a.max(b));
            let idx = edges.len();
            edges.push(pair);
            adj[pair.0].push(idx);
            adj[pair.1].push(idx);
        }
        debug_assert!({
            let mut sorted = edges.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        });
        Graph { p, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn element_count(&self) -> usize {
        self.p + self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (a, b) = self.edges[e.0];
        (VertexId(a), VertexId(b))
    }

    pub fn edge_pairs(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj[v.0].iter().map(|&i| EdgeId(i))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v.0].iter().map(move |&i| {
            let (a, b) = self.edges[i];
            VertexId(if a == v.0 { b } else { a })
        })
    }

    pub fn edge_between(&self, u: VertexId, w: VertexId) -> Option<EdgeId> {
        let pair = (u.0.min(w.0), u.0.max(w.0));
        self.edges.iter().position(|&e| e == pair).map(EdgeId)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.p).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    /// All elements in canonical order: vertices by index, then edges by
    /// index.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let p = self.p;
        let q = self.edges.len();
        (0..p)
            .map(|i| Element::Vertex(VertexId(i)))
            .chain((0..q).map(|i| Element::Edge(EdgeId(i))))
    }

    pub fn degree_sequence(&self, order: DegreeOrder) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable();
        if order == DegreeOrder::Descending {
            degs.reverse();
        }
        degs
    }

    /// Relabeled union; `other`'s vertices are offset by `self.p`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut pairs: Vec<(usize, usize)> = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(a, b)| (a + self.p, b + self.p)));
        Graph::build(self.p + other.p, &pairs).expect("union of valid graphs is valid")
    }

    /// k-th power: same vertices, `uv` is an edge iff `1 <= dist(u,v) <= k`.
    pub fn power(&self, k: usize) -> Graph {
        assert!(k >= 1, "graph power requires k >= 1");
        let mut pairs = Vec::new();
        for v in 0..self.p {
            for (u, d) in self.bfs_distances(VertexId(v)) {
                if u.0 > v && d >= 1 && d <= k {
                    pairs.push((v, u.0));
                }
            }
        }
        Graph::build(self.p, &pairs).expect("power of valid graph is valid")
    }

    fn bfs_distances(&self, start: VertexId) -> Vec<(VertexId, usize)> {
        let mut dist = vec![usize::MAX; self.p];
        dist[start.0] = 0;
        let mut queue = std::collections::VecDeque::from([start.0]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(VertexId(v)).collect::<Vec<_>>() {
                if dist[u.0] == usize::MAX {
                    dist[u.0] = dist[v] + 1;
                    queue.push_back(u.0);
                }
            }
        }
        dist.iter()
            .enumerate()
            .filter(|&(_, &d)| d != usize::MAX)
            .map(|(v, &d)| (VertexId(v), d))
            .collect()
    }

    /// Connected components; isolated vertices count as components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.p];
        let mut count = 0;
        for s in 0..self.p {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(VertexId(v)).collect::<Vec<_>>() {
                    if !seen[u.0] {
                        seen[u.0] = true;
                        stack.push(u.0);
                    }
                }
            }
        }
        count
    }

    /// Checks that `map` (a vertex bijection into `target`) preserves
    /// adjacency in both directions.
    pub fn is_isomorphism(&self, target: &Graph, map: &[usize]) -> bool {
        if self.p != target.p || map.len() != self.p || self.edges.len() != target.edges.len() {
            return false;
        }
        let mut hit = vec![false; self.p];
        for &m in map {
            if m >= self.p || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        self.edges
            .iter()
            .all(|&(a, b)| target.edge_between(VertexId(map[a]), VertexId(map[b])).is_some())
    }
}
