//! Sharp bounds on the independence number of a graph in terms of its
//! order and maximum degree, together with algorithms that construct
//! independent sets attaining the lower bounds.
//!
//! For a connected graph G on n vertices with maximum degree k (and n = 2
//! when k = 1):
//!
//! * ⌈(n−1)/k⌉ ≤ α(G) ≤ n − ⌈(n−1)/k⌉;
//! * α(G) ≥ ⌈n/k⌉ unless G is complete or a cycle.
//!
//! [`augment::solve_connected`] returns an independent set meeting the
//! relevant lower bound, [`extremal`] builds graphs on which each bound is
//! attained, and [`oracle`] computes α exactly for validation.

pub mod augment;
pub mod bounds;
pub mod cli;
pub mod extremal;
pub mod graph;
pub mod greedy;
pub mod oracle;

pub use augment::{
    ascend, descend, solve_connected, solve_general, verify_certificate, Branch, Certificate,
    DescentOutcome, LevelRecord, SolveError, Terminal, Tier,
};
pub use bounds::{
    bounds_report, caro_wei_bound, degree_sum_check, lower_bound_connected, refined_lower_bound,
    upper_bound_connected, BoundsError, BoundsReport,
};
pub use graph::{ComponentPartition, Graph, GraphClass, GraphError, InducedSubgraph, Vertex};
pub use greedy::{greedy_expand, greedy_slack, GreedyTrace};
pub use oracle::{alpha_exact, is_maximal_independent, Oracle, OracleResult};
