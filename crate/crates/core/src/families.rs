//! Generators for the named graph families.
//!
//! Labeling convention, fixed so that witnesses are reproducible: hub
//! vertices get the lowest indices, then rim/peripheral vertices, then
//! subdivision vertices. The exact layout per family is documented on
//! [`FamilySpec::generate`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Hypercube,
    Wheel,
    DoubleStar,
    Gear,
    Friendship,
    SuspensionCycle,
    TwoWheelAxle,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::Wheel => "wheel",
            Family::DoubleStar => "double_star",
            Family::Gear => "gear",
            Family::Friendship => "friendship",
            Family::SuspensionCycle => "suspension_cycle",
            Family::TwoWheelAxle => "two_wheel_axle",
        }
    }

    /// Smallest parameter for which the generator is defined.
    pub fn min_parameter(&self) -> usize {
        match self {
            Family::Path | Family::Star | Family::Complete | Family::DoubleStar => 1,
            Family::Friendship | Family::CompleteBipartite => 1,
            Family::Hypercube => 0,
            Family::Cycle | Family::Wheel | Family::Gear => 3,
            Family::SuspensionCycle | Family::TwoWheelAxle => 3,
        }
    }

    pub const ALL: [Family; 12] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::Wheel,
        Family::DoubleStar,
        Family::Gear,
        Family::Friendship,
        Family::SuspensionCycle,
        Family::TwoWheelAxle,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::UnknownFamily(s.to_owned()))
    }
}

/// A named family instance. `n` is the rim size for wheels and gears,
/// the leaf count for stars, the dimension for hypercubes, and the rim
/// size of each wheel for `two_wheel_axle`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<FamilySpec, GraphError> {
        let min = family.min_parameter();
        if n < min {
            return Err(GraphError::ParameterTooSmall {
                family: family.name(),
                given: n,
                min,
            });
        }
        Ok(FamilySpec { family, n })
    }

    /// Number of vertices of the generated instance, in closed form.
    pub fn vertex_count(&self) -> usize {
        let n = self.n;
        match self.family {
            Family::Path | Family::Cycle | Family::Complete => n,
            Family::Star | Family::Wheel => n + 1,
            Family::CompleteBipartite => 2 * n,
            Family::Hypercube => 1 << n,
            Family::DoubleStar | Family::TwoWheelAxle => 2 * n + 2,
            Family::Gear | Family::Friendship => 2 * n + 1,
            Family::SuspensionCycle => n + 2,
        }
    }

    /// Streams the edge set in generation order without materializing the
    /// graph; large sweeps only need degrees, not adjacency.
    pub fn visit_edges(&self, mut f: impl FnMut(usize, usize)) {
        let n = self.n;
        match self.family {
            Family::Path => (0..n.saturating_sub(1)).for_each(|i| f(i, i + 1)),
            Family::Cycle => (0..n).for_each(|i| f(i, (i + 1) % n)),
            Family::Star => (1..=n).for_each(|i| f(0, i)),
            // The two quadratic families emit edges by diagonals: each
            // inner loop then touches every vertex at most once, which
            // keeps the n = 2000 sweeps out of serial-dependency stalls.
            Family::Complete => {
                for d in 1..n {
                    for a in 0..n - d {
                        f(a, a + d);
                    }
                }
            }
            Family::CompleteBipartite => {
                for d in 0..n {
                    for a in 0..n - d {
                        f(a, n + a + d);
                    }
                    for a in n - d..n {
                        f(a, a + d);
                    }
                }
            }
            Family::Hypercube => {
                let p = 1usize << n;
                for v in 0..p {
                    for b in 0..n {
                        let u = v ^ (1 << b);
                        if u > v {
                            f(v, u);
                        }
                    }
                }
            }
            Family::Wheel => {
                (1..=n).for_each(|i| f(0, i));
                (1..=n).for_each(|i| f(i, i % n + 1));
            }
            Family::DoubleStar => {
                f(0, 1);
                (2..=n + 1).for_each(|i| f(0, i));
                (n + 2..=2 * n + 1).for_each(|i| f(1, i));
            }
            Family::Gear => {
                (1..=n).for_each(|i| f(0, i));
                for i in 1..=n {
                    f(i, n + i);
                    f(n + i, i % n + 1);
                }
            }
            Family::Friendship => {
                for i in 0..n {
                    let (a, b) = (2 * i + 1, 2 * i + 2);
                    f(0, a);
                    f(0, b);
                    f(a, b);
                }
            }
            Family::SuspensionCycle => {
                (0..n).for_each(|i| f(2 + i, 2 + (i + 1) % n));
                for c in 2..n + 2 {
                    f(0, c);
                    f(1, c);
                }
            }
            Family::TwoWheelAxle => {
                let m = n;
                f(0, 1);
                for i in 0..m {
                    f(0, 2 + i);
                    f(2 + i, 2 + (i + 1) % m);
                }
                for i in 0..m {
                    f(1, 2 + m + i);
                    f(2 + m + i, 2 + m + (i + 1) % m);
                }
            }
        }
    }

    /// Degree sequence of the generated instance, descending, computed by
    /// streaming the edge set.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0u32; self.vertex_count()];
        self.visit_edges(|a, b| {
            deg[a] += 1;
            deg[b] += 1;
        });
        deg.sort_unstable_by(|x, y| y.cmp(x));
        deg.into_iter().map(|d| d as usize).collect()
    }

    /// Builds the canonical labeled instance.
    ///
    /// Labelings:
    /// - `path(n)`, `cycle(n)`: vertices `0..n` in path/cycle order.
    /// - `star(n)`: hub `0`, leaves `1..=n`.
    /// - `complete(n)`: vertices `0..n`.
    /// - `complete_bipartite(n)`: `K_{n,n}` with parts `0..n` and `n..2n`.
    /// - `hypercube(d)`: vertices are bit strings `0..2^d`, edges flip one bit.
    /// - `wheel(n)`: hub `0`, rim `1..=n` in cycle order.
    /// - `double_star(n)`: hubs `0`, `1` joined by an edge; leaves `2..=n+1`
    ///   on hub `0`, `n+2..=2n+1` on hub `1`.
    /// - `gear(n)`: hub `0`, rim `1..=n`, subdivision vertex `n+i` between
    ///   rim `i` and its cyclic successor.
    /// - `friendship(n)`: common vertex `0`, triangle `i` on `{0, 2i+1, 2i+2}`.
    /// - `suspension_cycle(n)`: apexes `0`, `1` (not adjacent), cycle `2..=n+1`.
    /// - `two_wheel_axle(m)`: hubs `0`, `1` joined by the axle; rims
    ///   `2..=m+1` and `m+2..=2m+1`.
    pub fn generate(&self) -> Graph {
        let mut pairs = Vec::new();
        self.visit_edges(|a, b| pairs.push((a, b)));
        Graph::from_valid_pairs(self.vertex_count(), pairs)
    }
}
