//! Costs, counts, and optimal orders for graph construction sequences.
//!
//! A construction sequence builds a graph one element at a time: every
//! vertex and every edge appears exactly once, and an edge may only
//! appear after both of its endpoints. Each edge pays a delay equal to
//! the number of positions since each endpoint appeared, summed over
//! both endpoints; the cost of the sequence is the total delay.
//!
//! The crate provides:
//!
//! - [`graph`]: simple labeled graphs and their elements.
//! - [`families`]: generators for named families (paths, wheels, gears, ...).
//! - [`trees`]: free-tree enumeration up to isomorphism.
//! - [`sequence`]: sequence validation, cost, and classification
//!   (easy / greedy / nearly connected).
//! - [`oracle`]: exhaustive enumeration and a downset-DP counter, used
//!   as the ground truth everything else is checked against.
//! - [`formulas`]: closed forms for extremal costs of the named families.
//! - [`solver`]: exact minimum cost by subset DP, with a branch-and-bound
//!   fallback for larger graphs.
//! - [`verify`]: sweeps that compare the closed forms against independent
//!   computations.
//! - [`lemmas`]: structural properties checked against full enumeration.
//! - [`formats`], [`cli`]: file formats and the `cseq` binary front end.

pub mod cli;
pub mod families;
pub mod formats;
pub mod formulas;
pub mod graph;
pub mod lemmas;
pub mod oracle;
pub(crate) mod par;
pub mod random;
pub mod sequence;
pub mod solver;
pub mod trees;
pub mod verify;

pub use families::{Family, FamilySpec};
pub use graph::{EdgeId, Element, Graph, GraphError, VertexId};
pub use sequence::{ConstructionSequence, CostBreakdown, SequenceError};
