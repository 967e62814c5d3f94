//! Enumeration of free trees, one representative per isomorphism class.
//!
//! Trees on `n` vertices are grown by attaching a leaf to every vertex of
//! every tree on `n - 1` vertices; duplicates are rejected by an AHU
//! canonical code rooted at the tree's center(s).

use crate::graph::{Graph, GraphError, VertexId};

pub const DEFAULT_TREE_CAP: usize = 10;

/// All free trees on `n` vertices up to isomorphism, in a deterministic
/// order. Errors when `n` exceeds `cap` (enumeration is exponential).
pub fn enumerate_trees(n: usize, cap: usize) -> Result<Vec<Graph>, GraphError> {
    if n > cap {
        return Err(GraphError::TreeCapExceeded { cap, given: n });
    }
    assert!(n >= 1);
    let mut level: Vec<Graph> = vec![Graph::build(1, &[]).unwrap()];
    for size in 2..=n {
        let mut next: Vec<(String, Graph)> = Vec::new();
        for tree in &level {
            for attach in 0..size - 1 {
                let mut pairs = tree.edge_pairs().to_vec();
                pairs.push((attach, size - 1));
                let candidate = Graph::build(size, &pairs).unwrap();
                let code = canonical_code(&candidate);
                if !next.iter().any(|(c, _)| *c == code) {
                    next.push((code, candidate));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

/// AHU code of a free tree: the lexicographically smallest rooted code
/// over the tree's one or two centers. Equal codes iff isomorphic.
pub fn canonical_code(tree: &Graph) -> String {
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c, None))
        .min()
        .expect("tree has at least one center")
}

fn rooted_code(tree: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut child_codes: Vec<String> = tree
        .neighbors(VertexId(root))
        .filter(|u| Some(u.0) != parent)
        .map(|u| rooted_code(tree, u.0, Some(root)))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

/// Center(s) of a tree: peel leaves until one or two vertices remain.
fn centers(tree: &Graph) -> Vec<usize> {
    let n = tree.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(VertexId(v))).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf] = true;
            remaining -= 1;
            for u in tree.neighbors(VertexId(leaf)) {
                if !removed[u.0] {
                    degree[u.0] -= 1;
                    if degree[u.0] == 1 {
                        next.push(u.0);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}
