//! Certifying independent sets of size ⌈n/Δ⌉ for connected graphs that are
//! neither complete nor cycles (and ⌈(n−1)/Δ⌉ for those two families).
//!
//! The easy cases are dispatched directly: complete graphs, cycles and
//! paths are handled by hand, and whenever Δ does not divide n − 1 or some
//! greedy increment is short, the greedy picks already suffice. What is left
//! is the tight case: every increment W_2, ..., W_m has exactly Δ vertices
//! and W_m is a clique. It is solved by a descent through working graphs
//! G_m′ = G, G_{m−1}′, ..., each obtained by restricting to V_{i−1} and
//! adding at most one edge {y_{i−1}, y′_{i−1}}, followed by an ascent that
//! adds one vertex of W_i per level on the way back up.
//!
//! Working graphs are never materialized. An added edge is tagged with the
//! level that introduced it, and adjacency in G_L′ is the adjacency of G
//! inside V_L plus the added edges tagged above L.

use std::fmt;

use thiserror::Error;

use crate::bounds::ceil_div;
use crate::graph::{Graph, GraphClass, GraphError, Vertex};
use crate::greedy::{greedy_expand, greedy_slack, GreedyError, GreedyTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Greedy(#[from] GreedyError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A step that the construction guarantees could not be carried out.
    /// This signals a bug, never a property of the input.
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
}

fn breach(msg: impl Into<String>) -> SolveError {
    SolveError::InvariantBreach(msg.into())
}

/// Which bound a certificate attains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tier {
    /// ⌈(n−1)/Δ⌉, tight for complete graphs and odd cycles.
    Baseline,
    /// ⌈n/Δ⌉, for connected graphs that are neither complete nor cycles.
    Refined,
    /// Sum of per-component guarantees plus the singleton count.
    Aggregate,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Baseline => "baseline",
            Tier::Refined => "refined",
            Tier::Aggregate => "aggregate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    PathOrCycle,
    CompleteGraph,
    NotDivisible,
    GreedySlack,
    FrontierPair,
    DescentCaseI,
    DescentCaseII,
    BaseNonComplete,
    Componentwise,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::PathOrCycle => "path-or-cycle",
            Branch::CompleteGraph => "complete-graph",
            Branch::NotDivisible => "not-divisible",
            Branch::GreedySlack => "greedy-slack",
            Branch::FrontierPair => "frontier-pair",
            Branch::DescentCaseI => "descent-case-i",
            Branch::DescentCaseII => "descent-case-ii",
            Branch::BaseNonComplete => "base-non-complete",
            Branch::Componentwise => "componentwise",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Sorted.
    pub set: Vec<Vertex>,
    pub guarantee: usize,
    pub tier: Tier,
    pub branch: Branch,
}

/// One level of the descent, taken in the working graph G_i′.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelRecord {
    pub level: usize,
    /// w_i = v_i.
    pub w: Vertex,
    /// The unique neighbor of `w` in V_{i−1}.
    pub y: Vertex,
    /// w′_i: the lowest vertex of W_i not adjacent to `y`.
    pub w_alt: Vertex,
    /// The unique neighbor of `w_alt` in V_{i−1}, or `y` if it has none.
    pub y_alt: Vertex,
    /// Whether {y, y_alt} was inserted to form G_{i−1}′.
    pub edge_added: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    /// W_{r−1} holds `x < x_alt`, non-adjacent in G_{r−1}′.
    CaseI { r: usize, x: Vertex, x_alt: Vertex },
    /// G_1′ is complete; `w_free` ∈ W_2 has no neighbor in V_1.
    CaseII { w_free: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentOutcome {
    /// From level m down.
    pub levels: Vec<LevelRecord>,
    pub terminal: Terminal,
}

impl DescentOutcome {
    pub fn level(&self, i: usize) -> Option<&LevelRecord> {
        self.levels.iter().find(|rec| rec.level == i)
    }
}

struct WorkingGraph<'a> {
    g: &'a Graph,
    trace: &'a GreedyTrace,
    /// (introducing level, u, v).
    added: Vec<(usize, Vertex, Vertex)>,
}

impl<'a> WorkingGraph<'a> {
    fn new(g: &'a Graph, trace: &'a GreedyTrace) -> Self {
        WorkingGraph {
            g,
            trace,
            added: Vec::new(),
        }
    }

    fn from_outcome(g: &'a Graph, trace: &'a GreedyTrace, outcome: &DescentOutcome) -> Self {
        let added = outcome
            .levels
            .iter()
            .filter(|rec| rec.edge_added)
            .map(|rec| (rec.level, rec.y, rec.y_alt))
            .collect();
        WorkingGraph { g, trace, added }
    }

    fn added_at(&self, level: usize) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.added
            .iter()
            .filter(move |&&(l, u, v)| {
                l > level && self.trace.in_covered(u, level) && self.trace.in_covered(v, level)
            })
            .map(|&(_, u, v)| (u, v))
    }

    /// Adjacency in G_level′.
    fn adjacent(&self, level: usize, u: Vertex, v: Vertex) -> bool {
        if !self.trace.in_covered(u, level) || !self.trace.in_covered(v, level) {
            return false;
        }
        self.g.has_edge(u, v)
            || self
                .added_at(level)
                .any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Neighbors of `v` in G_level′ that lie in V_below, sorted.
    fn neighbors_below(&self, level: usize, v: Vertex, below: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.trace.in_covered(u, below))
            .collect();
        for (a, b) in self.added_at(level) {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if self.trace.in_covered(other, below) {
                out.push(other);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn degree(&self, level: usize, v: Vertex) -> usize {
        self.neighbors_below(level, v, level).len()
    }

    /// Lexicographically smallest pair of `pool` that is non-adjacent in
    /// G_level′.
    fn first_non_adjacent_pair(&self, level: usize, pool: &[Vertex]) -> Option<(Vertex, Vertex)> {
        first_pair(pool, |a, b| !self.adjacent(level, a, b))
    }

    fn push_checked(&self, level: usize, set: &mut Vec<Vertex>, v: Vertex) -> Result<(), SolveError> {
        if let Some(&u) = set.iter().find(|&&u| u == v || self.adjacent(level, u, v)) {
            return Err(breach(format!(
                "ascent at level {level}: vertex {v} conflicts with {u}"
            )));
        }
        set.push(v);
        Ok(())
    }
}

fn first_pair(pool: &[Vertex], mut accept: impl FnMut(Vertex, Vertex) -> bool) -> Option<(Vertex, Vertex)> {
    for (i, &a) in pool.iter().enumerate() {
        for &b in &pool[i + 1..] {
            if accept(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Runs the descent on the tight case.
///
/// Requires Δ = k ≥ 3, k | n − 1, m = (n−1)/k ≥ 2, |W_i| = k for
/// 2 ≤ i ≤ m and W_m a clique of G.
pub fn descend(g: &Graph, trace: &GreedyTrace) -> Result<DescentOutcome, SolveError> {
    let n = g.order();
    let k = trace.max_degree;
    let m = trace.len();
    let pre = |msg: &str| Err(SolveError::Precondition(format!("descent: {msg}")));
    if k != g.max_degree() {
        return pre("trace does not belong to this graph");
    }
    if k < 3 {
        return pre("maximum degree must be at least 3");
    }
    if !(n - 1).is_multiple_of(k) || m != (n - 1) / k || m < 2 {
        return pre("need k | n - 1 and m = (n - 1)/k >= 2");
    }
    if (2..=m).any(|i| trace.increment(i).len() != k) {
        return pre("every increment after the first must have k vertices");
    }
    if first_pair(trace.increment(m), |a, b| !g.has_edge(a, b)).is_some() {
        return pre("last increment is not a clique");
    }

    let mut work = WorkingGraph::new(g, trace);
    let mut levels = Vec::new();
    for i in (2..=m).rev() {
        let w = trace.pick(i);
        let below = work.neighbors_below(i, w, i - 1);
        let &[y] = below.as_slice() else {
            return Err(breach(format!(
                "level {i}: v_{i} = {w} has {} neighbors below, expected 1",
                below.len()
            )));
        };
        if trace.is_chosen(y) {
            return Err(breach(format!("level {i}: y = {y} is a greedy pick")));
        }
        let w_alt = trace
            .increment(i)
            .iter()
            .copied()
            .find(|&u| u != w && !work.adjacent(i, u, y))
            .ok_or_else(|| breach(format!("level {i}: every vertex of W_{i} sees y = {y}")))?;
        let below_alt = work.neighbors_below(i, w_alt, i - 1);
        if below_alt.len() > 1 {
            return Err(breach(format!(
                "level {i}: w' = {w_alt} has {} neighbors below",
                below_alt.len()
            )));
        }
        let y_alt = below_alt.first().copied().unwrap_or(y);
        if y_alt != y && trace.is_chosen(y_alt) {
            return Err(breach(format!("level {i}: y' = {y_alt} is a greedy pick")));
        }
        let edge_added = y_alt != y && !work.adjacent(i, y, y_alt);
        if edge_added {
            work.added.push((i, y, y_alt));
        }
        levels.push(LevelRecord {
            level: i,
            w,
            y,
            w_alt,
            y_alt,
            edge_added,
        });

        let lower = i - 1;
        if let Some(&v) = trace
            .covered_by(lower)
            .iter()
            .find(|&&v| work.degree(lower, v) > k)
        {
            return Err(breach(format!(
                "level {lower}: working degree of {v} exceeds {k}"
            )));
        }
        if let Some((x, x_alt)) = work.first_non_adjacent_pair(lower, trace.increment(lower)) {
            return Ok(DescentOutcome {
                levels,
                terminal: Terminal::CaseI { r: i, x, x_alt },
            });
        }
        if lower == 1 {
            if y == y_alt {
                return Err(breach("G_1' is complete but y_1 = y_1'"));
            }
            let w_free = trace
                .increment(2)
                .iter()
                .copied()
                .find(|&u| work.neighbors_below(2, u, 1).is_empty())
                .ok_or_else(|| breach("G_1' is complete but every vertex of W_2 sees V_1"))?;
            return Ok(DescentOutcome {
                levels,
                terminal: Terminal::CaseII { w_free },
            });
        }
    }
    unreachable!("the descent terminates by level 1")
}

/// Rebuilds an independent set of size m + 1 from a descent outcome.
pub fn ascend(
    g: &Graph,
    trace: &GreedyTrace,
    outcome: &DescentOutcome,
) -> Result<Vec<Vertex>, SolveError> {
    let m = trace.len();
    let work = WorkingGraph::from_outcome(g, trace, outcome);
    let record = |i: usize| {
        outcome
            .level(i)
            .copied()
            .ok_or_else(|| SolveError::Precondition(format!("ascent: no record for level {i}")))
    };

    let (mut set, start) = match outcome.terminal {
        Terminal::CaseI { r, x, x_alt } => {
            let mut set = Vec::with_capacity(m + 1);
            for &v in trace.chosen[..r - 2].iter().chain([&x, &x_alt]) {
                work.push_checked(r - 1, &mut set, v)?;
            }
            let rec = record(r)?;
            let next = if rec.y != rec.y_alt && rec.y != x && rec.y != x_alt {
                rec.w
            } else {
                rec.w_alt
            };
            work.push_checked(r, &mut set, next)?;
            (set, r + 1)
        }
        Terminal::CaseII { w_free } => {
            let rec = record(2)?;
            let mut set = Vec::with_capacity(m + 1);
            for v in [rec.y, rec.y_alt, w_free] {
                work.push_checked(2, &mut set, v)?;
            }
            (set, 3)
        }
    };
    for i in start..=m {
        let rec = record(i)?;
        let next = if set.contains(&rec.y) { rec.w_alt } else { rec.w };
        work.push_checked(i, &mut set, next)?;
    }

    set.sort_unstable();
    if set.len() != m + 1 {
        return Err(breach(format!(
            "ascent produced {} vertices, expected {}",
            set.len(),
            m + 1
        )));
    }
    if !g.is_independent_set(&set) {
        return Err(breach("ascent output is not independent in G"));
    }
    Ok(set)
}

/// Vertices of a cycle in walking order, starting at 1 towards its lower
/// neighbor.
fn cycle_order(g: &Graph) -> Vec<Vertex> {
    let mut order = vec![1];
    let (mut prev, mut cur) = (1, g.neighbors(1)[0]);
    while cur != 1 {
        order.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&u| u != prev).unwrap();
        (prev, cur) = (cur, next);
    }
    order
}

/// Vertices of a path in order, starting at its lower endpoint.
fn path_order(g: &Graph) -> Vec<Vertex> {
    let start = g.vertices().find(|&v| g.degree(v) == 1).unwrap();
    let mut order = vec![start];
    let (mut prev, mut cur) = (0, start);
    while let Some(next) = g.neighbors(cur).iter().copied().find(|&u| u != prev) {
        order.push(next);
        (prev, cur) = (cur, next);
    }
    order
}

/// Produces a certificate for a connected graph on at least two vertices.
///
/// Branches are tried in order: complete graph, cycle, path, Δ ∤ n − 1,
/// greedy slack, n = Δ + 1, a non-adjacent pair in W_m, descent.
pub fn solve_connected(g: &Graph) -> Result<Certificate, SolveError> {
    let n = g.order();
    if n < 2 {
        return Err(GreedyError::TooSmall.into());
    }
    let class = g.classify()?;
    let k = g.max_degree();
    let cert = match class {
        GraphClass::Complete => Certificate {
            set: vec![1],
            guarantee: 1,
            tier: Tier::Baseline,
            branch: Branch::CompleteGraph,
        },
        GraphClass::Cycle => {
            let guarantee = ceil_div(n - 1, 2);
            let mut set: Vec<_> = cycle_order(g).into_iter().step_by(2).take(guarantee).collect();
            set.sort_unstable();
            Certificate {
                set,
                guarantee,
                tier: Tier::Baseline,
                branch: Branch::PathOrCycle,
            }
        }
        GraphClass::Path => {
            let mut set: Vec<_> = path_order(g).into_iter().step_by(2).collect();
            set.sort_unstable();
            Certificate {
                set,
                guarantee: ceil_div(n, 2),
                tier: Tier::Refined,
                branch: Branch::PathOrCycle,
            }
        }
        GraphClass::Other => solve_tight(g, k)?,
        GraphClass::Singleton => unreachable!("n >= 2"),
    };
    if !verify_certificate(g, &cert) {
        return Err(breach(format!(
            "{} branch produced an invalid certificate {:?}",
            cert.branch, cert.set
        )));
    }
    Ok(cert)
}

fn solve_tight(g: &Graph, k: usize) -> Result<Certificate, SolveError> {
    let n = g.order();
    let trace = greedy_expand(g)?;
    let m = trace.len();
    let guarantee = ceil_div(n, k);
    let refined = |mut set: Vec<Vertex>, branch| {
        set.sort_unstable();
        Certificate {
            set,
            guarantee,
            tier: Tier::Refined,
            branch,
        }
    };

    if !(n - 1).is_multiple_of(k) {
        return Ok(refined(trace.chosen.clone(), Branch::NotDivisible));
    }
    if greedy_slack(&trace, k) {
        return Ok(refined(trace.chosen.clone(), Branch::GreedySlack));
    }
    if m == 1 {
        let v = g
            .vertices()
            .find(|&v| g.degree(v) < k)
            .ok_or_else(|| breach("n = k + 1 and not complete, yet every degree is k"))?;
        let w = g
            .vertices()
            .find(|&w| w != v && !g.has_edge(v, w))
            .ok_or_else(|| breach("low-degree vertex has no non-neighbor"))?;
        return Ok(refined(vec![v, w], Branch::BaseNonComplete));
    }
    if let Some((x, x_alt)) = first_pair(trace.increment(m), |a, b| !g.has_edge(a, b)) {
        let mut set = trace.chosen[..m - 1].to_vec();
        set.extend([x, x_alt]);
        return Ok(refined(set, Branch::FrontierPair));
    }
    let outcome = descend(g, &trace)?;
    let set = ascend(g, &trace, &outcome)?;
    let branch = match outcome.terminal {
        Terminal::CaseI { .. } => Branch::DescentCaseI,
        Terminal::CaseII { .. } => Branch::DescentCaseII,
    };
    Ok(refined(set, branch))
}

/// Works on any graph: singletons are taken as they are and every other
/// component gets its own certificate. A connected input on at least two
/// vertices yields exactly [`solve_connected`]'s certificate.
pub fn solve_general(g: &Graph) -> Result<Certificate, SolveError> {
    if g.order() >= 2 && g.is_connected() {
        return solve_connected(g);
    }
    let partition = g.components();
    let mut set = Vec::new();
    let mut guarantee = 0;
    for part in &partition.parts {
        if part.len() == 1 {
            set.push(part[0]);
            guarantee += 1;
            continue;
        }
        let sub = g.induced_subgraph(part)?;
        let cert = solve_connected(&sub.graph)?;
        set.extend(sub.lift(&cert.set));
        guarantee += cert.guarantee;
    }
    set.sort_unstable();
    let cert = Certificate {
        set,
        guarantee,
        tier: Tier::Aggregate,
        branch: Branch::Componentwise,
    };
    if !verify_certificate(g, &cert) {
        return Err(breach("component certificates do not combine"));
    }
    Ok(cert)
}

pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    let mut distinct = cert.set.clone();
    distinct.sort_unstable();
    distinct.dedup();
    g.is_independent_set(&distinct) && distinct.len() >= cert.guarantee
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{gen_basic, gen_lower_extremal, gen_upper_extremal, BasicFamily};

    fn case_one_graph() -> Graph {
        Graph::new(
            7,
            [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (5, 6), (5, 7), (6, 7)],
        )
        .unwrap()
    }

    fn case_two_graph() -> Graph {
        Graph::new(
            7,
            [
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 4),
                (3, 4),
                (2, 5),
                (3, 6),
                (5, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn descent_case_one() {
        let g = case_one_graph();
        let trace = greedy_expand(&g).unwrap();
        let outcome = descend(&g, &trace).unwrap();
        assert_eq!(
            outcome.levels,
            vec![LevelRecord {
                level: 2,
                w: 5,
                y: 2,
                w_alt: 6,
                y_alt: 3,
                edge_added: true
            }]
        );
        assert_eq!(outcome.terminal, Terminal::CaseI { r: 2, x: 2, x_alt: 4 });
        assert_eq!(ascend(&g, &trace, &outcome).unwrap(), vec![2, 4, 6]);

        let cert = solve_connected(&g).unwrap();
        assert_eq!(cert.set, vec![2, 4, 6]);
        assert_eq!((cert.guarantee, cert.tier, cert.branch), (3, Tier::Refined, Branch::DescentCaseI));
    }

    #[test]
    fn descent_case_two() {
        let g = case_two_graph();
        let trace = greedy_expand(&g).unwrap();
        let outcome = descend(&g, &trace).unwrap();
        assert_eq!(
            outcome.levels,
            vec![LevelRecord {
                level: 2,
                w: 5,
                y: 2,
                w_alt: 6,
                y_alt: 3,
                edge_added: true
            }]
        );
        assert_eq!(outcome.terminal, Terminal::CaseII { w_free: 7 });
        assert_eq!(ascend(&g, &trace, &outcome).unwrap(), vec![2, 3, 7]);
        let cert = solve_connected(&g).unwrap();
        assert_eq!(cert.set, vec![2, 3, 7]);
        assert_eq!(cert.branch, Branch::DescentCaseII);
    }

    #[test]
    fn ascent_takes_free_vertex_when_y_repeats() {
        // Level r with y = y': the ascent must add w_r', which has no
        // neighbor below.
        let g = case_one_graph();
        let trace = greedy_expand(&g).unwrap();
        let outcome = DescentOutcome {
            levels: vec![LevelRecord {
                level: 2,
                w: 5,
                y: 2,
                w_alt: 7,
                y_alt: 2,
                edge_added: false,
            }],
            terminal: Terminal::CaseI { r: 2, x: 2, x_alt: 4 },
        };
        assert_eq!(ascend(&g, &trace, &outcome).unwrap(), vec![2, 4, 7]);
    }

    #[test]
    fn descent_rejects_non_clique_frontier() {
        let g = gen_upper_extremal(7, 3).unwrap();
        let trace = greedy_expand(&g).unwrap();
        assert!(matches!(descend(&g, &trace), Err(SolveError::Precondition(_))));
    }

    #[test]
    fn frontier_pair_branch() {
        let g = gen_upper_extremal(7, 3).unwrap();
        let cert = solve_connected(&g).unwrap();
        assert_eq!(cert.set, vec![4, 5, 6]);
        assert_eq!((cert.guarantee, cert.branch), (3, Branch::FrontierPair));
    }

    #[test]
    fn special_shapes() {
        let c9 = gen_basic(BasicFamily::Cycle, 9).unwrap();
        let cert = solve_connected(&c9).unwrap();
        assert_eq!(cert.set, vec![1, 3, 5, 7]);
        assert_eq!((cert.guarantee, cert.tier), (4, Tier::Baseline));

        let k5 = gen_basic(BasicFamily::Complete, 5).unwrap();
        let cert = solve_connected(&k5).unwrap();
        assert_eq!((cert.set.len(), cert.guarantee, cert.branch), (1, 1, Branch::CompleteGraph));

        let p5 = gen_basic(BasicFamily::Path, 5).unwrap();
        let cert = solve_connected(&p5).unwrap();
        assert_eq!(cert.set, vec![1, 3, 5]);
        assert_eq!(cert.tier, Tier::Refined);

        // A cycle and a path with shuffled labels.
        let c = Graph::new(5, [(1, 4), (4, 2), (2, 5), (5, 3), (3, 1)]).unwrap();
        assert_eq!(solve_connected(&c).unwrap().set.len(), 2);
        let p = Graph::new(4, [(3, 1), (1, 4), (4, 2)]).unwrap();
        assert_eq!(solve_connected(&p).unwrap().set, vec![1, 2]);
    }

    #[test]
    fn base_case_branch() {
        // K_4 minus an edge: n = k + 1 with k = 3.
        let g = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap();
        let cert = solve_connected(&g).unwrap();
        assert_eq!(cert.set, vec![2, 4]);
        assert_eq!(cert.branch, Branch::BaseNonComplete);
    }

    #[test]
    fn clique_chain_slack() {
        let g = gen_lower_extremal(7, 3).unwrap();
        let cert = solve_connected(&g).unwrap();
        assert_eq!(cert.set, vec![3, 5, 7]);
        assert_eq!((cert.guarantee, cert.branch), (3, Branch::GreedySlack));
    }

    #[test]
    fn general_graphs() {
        let g = gen_upper_extremal(7, 3)
            .unwrap()
            .disjoint_union(&gen_basic(BasicFamily::Complete, 3).unwrap())
            .disjoint_union(&Graph::edgeless(1).unwrap());
        let cert = solve_general(&g).unwrap();
        assert_eq!(cert.guarantee, 5);
        assert!(cert.set.len() >= 5);
        assert!(verify_certificate(&g, &cert));

        let empty = Graph::edgeless(4).unwrap();
        let cert = solve_general(&empty).unwrap();
        assert_eq!((cert.set, cert.guarantee), (vec![1, 2, 3, 4], 4));

        let edge = Graph::new(2, [(1, 2)]).unwrap();
        let cert = solve_general(&edge).unwrap();
        assert_eq!((cert.set.len(), cert.guarantee), (1, 1));
    }

    #[test]
    fn verification() {
        let c9 = gen_basic(BasicFamily::Cycle, 9).unwrap();
        let ok = Certificate {
            set: vec![1, 3, 5, 7],
            guarantee: 4,
            tier: Tier::Baseline,
            branch: Branch::PathOrCycle,
        };
        assert!(verify_certificate(&c9, &ok));
        let k4 = gen_basic(BasicFamily::Complete, 4).unwrap();
        let bad = Certificate {
            set: vec![1, 2],
            guarantee: 2,
            tier: Tier::Baseline,
            branch: Branch::CompleteGraph,
        };
        assert!(!verify_certificate(&k4, &bad));
        let l73 = gen_lower_extremal(7, 3).unwrap();
        let cert = Certificate {
            set: vec![1, 4, 7],
            guarantee: 3,
            tier: Tier::Refined,
            branch: Branch::GreedySlack,
        };
        assert!(verify_certificate(&l73, &cert));
        let short = Certificate { guarantee: 4, ..cert };
        assert!(!verify_certificate(&l73, &short));
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            solve_connected(&g),
            Err(SolveError::Graph(GraphError::Disconnected))
        );
    }
}
