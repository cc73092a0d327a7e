//! Frontier-expansion greedy for connected graphs.
//!
//! Start from a vertex of maximum degree, cover it and its neighbors, then
//! repeatedly pick an uncovered vertex adjacent to the covered region and
//! cover it together with its neighbors. Each pick is non-adjacent to every
//! earlier pick, and after the first step each pick covers at most
//! Δ new vertices (one of its neighbors is already covered), which gives
//! m ≥ (n−1)/Δ picks.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("greedy expansion needs at least two vertices")]
    TooSmall,
    #[error("greedy expansion needs a connected graph")]
    Disconnected,
}

/// Everything the expansion produced, indexed from step 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    /// Δ of the input graph.
    pub max_degree: usize,
    /// v_1, ..., v_m.
    pub chosen: Vec<Vertex>,
    /// V_1 ⊆ ... ⊆ V_m, each sorted.
    pub covered: Vec<Vec<Vertex>>,
    /// W_1 = V_1, W_i = V_i ∖ V_{i−1}, each sorted.
    pub increments: Vec<Vec<Vertex>>,
    /// p_1, ..., p_{m−1}: p_i ∈ V_i is the lowest vertex adjacent to v_{i+1}.
    pub witnesses: Vec<Vertex>,
    /// `step[v]` is the i with v ∈ W_i; entry 0 is unused.
    step: Vec<usize>,
}

impl GreedyTrace {
    /// Number of picks m.
    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    /// v_i for 1 ≤ i ≤ m.
    pub fn pick(&self, i: usize) -> Vertex {
        self.chosen[i - 1]
    }

    /// W_i for 1 ≤ i ≤ m.
    pub fn increment(&self, i: usize) -> &[Vertex] {
        &self.increments[i - 1]
    }

    /// V_i for 1 ≤ i ≤ m.
    pub fn covered_by(&self, i: usize) -> &[Vertex] {
        &self.covered[i - 1]
    }

    /// The step at which `v` was covered.
    pub fn step_of(&self, v: Vertex) -> usize {
        self.step[v]
    }

    /// v ∈ V_i.
    pub fn in_covered(&self, v: Vertex, i: usize) -> bool {
        self.step[v] <= i
    }

    pub fn is_chosen(&self, v: Vertex) -> bool {
        self.chosen[self.step[v] - 1] == v
    }
}

pub fn greedy_expand(g: &Graph) -> Result<GreedyTrace, GreedyError> {
    let n = g.order();
    if n < 2 {
        return Err(GreedyError::TooSmall);
    }
    let k = g.max_degree();
    let first = g
        .vertices()
        .find(|&v| g.degree(v) == k)
        .expect("some vertex attains the maximum degree");

    let mut step = vec![0usize; n + 1];
    let mut is_pick = vec![false; n + 1];
    let mut frontier = BTreeSet::new();
    let mut trace = GreedyTrace {
        max_degree: k,
        chosen: Vec::new(),
        covered: Vec::new(),
        increments: Vec::new(),
        witnesses: Vec::new(),
        step: Vec::new(),
    };
    let mut covered_count = 0;
    let mut next = Some(first);

    while let Some(v) = next {
        let i = trace.chosen.len() + 1;
        debug_assert!(
            g.neighbors(v).iter().all(|&u| !is_pick[u]),
            "pick {v} is adjacent to an earlier pick"
        );
        is_pick[v] = true;
        trace.chosen.push(v);

        let mut increment: Vec<Vertex> = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied())
            .filter(|&u| step[u] == 0)
            .collect();
        increment.sort_unstable();
        for &u in &increment {
            step[u] = i;
            frontier.remove(&u);
        }
        for &u in &increment {
            frontier.extend(g.neighbors(u).iter().copied().filter(|&x| step[x] == 0));
        }
        covered_count += increment.len();
        if i >= 2 {
            debug_assert!(increment.len() <= g.degree(v));
        }

        let mut covered = trace.covered.last().cloned().unwrap_or_default();
        covered.extend_from_slice(&increment);
        covered.sort_unstable();
        trace.covered.push(covered);
        trace.increments.push(increment);

        next = frontier.pop_first();
        if let Some(u) = next {
            let witness = g
                .neighbors(u)
                .iter()
                .copied()
                .find(|&x| step[x] != 0)
                .expect("frontier vertices have a covered neighbor");
            trace.witnesses.push(witness);
        }
    }

    if covered_count != n {
        return Err(GreedyError::Disconnected);
    }
    trace.step = step;
    Ok(trace)
}

/// True iff some increment W_i with i ≥ 2 has fewer than k vertices, which
/// is exactly when m > (n−1)/k.
pub fn greedy_slack(trace: &GreedyTrace, k: usize) -> bool {
    trace.increments.iter().skip(1).any(|w| w.len() < k)
}
