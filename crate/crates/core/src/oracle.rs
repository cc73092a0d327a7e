//! Exact independence number for small graphs.
//!
//! The graph is split into components and each component is solved on
//! `u64` bitsets. Components below [`EXHAUSTIVE_LIMIT`] vertices go through
//! a plain include/exclude search; larger ones use branch-and-bound, pruned
//! by the per-component bound n_H − ⌈(n_H − 1)/Δ_H⌉ of the remaining graph.

use thiserror::Error;

use crate::bounds::ceil_div;
use crate::graph::{Graph, Vertex};

pub const DEFAULT_LIMIT: usize = 40;
/// Components with fewer vertices than this skip the pruning machinery.
pub const EXHAUSTIVE_LIMIT: usize = 25;
const MAX_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("oracle limit {0} exceeds the supported maximum of 64")]
    UnsupportedLimit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub alpha: usize,
    /// A maximum independent set, sorted.
    pub witness: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_LIMIT,
        }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Result<Self, OracleError> {
        if limit > MAX_LIMIT {
            return Err(OracleError::UnsupportedLimit(limit));
        }
        Ok(Oracle { limit })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn alpha_exact(&self, g: &Graph) -> Result<OracleResult, OracleError> {
        if g.order() > self.limit {
            return Err(OracleError::TooLarge {
                n: g.order(),
                limit: self.limit,
            });
        }
        let mut witness = Vec::new();
        for part in &g.components().parts {
            let adj = local_adjacency(g, part);
            let all = full_mask(part.len());
            let best = if part.len() < EXHAUSTIVE_LIMIT {
                exhaustive(&adj, all)
            } else {
                branch_and_bound(&adj, all)
            };
            witness.extend(bits(best).map(|i| part[i]));
        }
        witness.sort_unstable();
        debug_assert!(g.is_independent_set(&witness));
        Ok(OracleResult {
            alpha: witness.len(),
            witness,
        })
    }
}

pub fn alpha_exact(g: &Graph) -> Result<OracleResult, OracleError> {
    Oracle::default().alpha_exact(g)
}

/// Independent and dominating.
pub fn is_maximal_independent(g: &Graph, set: &[Vertex]) -> bool {
    if !g.is_independent_set(set) {
        return false;
    }
    let mut member = vec![false; g.order() + 1];
    for &v in set {
        member[v] = true;
    }
    g.vertices()
        .all(|v| member[v] || g.neighbors(v).iter().any(|&u| member[u]))
}

fn full_mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Bitset adjacency of `g[part]`, indexed by position in `part`.
fn local_adjacency(g: &Graph, part: &[Vertex]) -> Vec<u64> {
    part.iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|u| part.binary_search(u).ok())
                .fold(0u64, |acc, i| acc | (1 << i))
        })
        .collect()
}

/// Either a vertex of degree at most 1 inside `mask` (which some maximum
/// independent set contains), or the lowest vertex of maximum degree.
enum Pivot {
    Forced(usize),
    Branch(usize),
}

fn pivot(adj: &[u64], mask: u64) -> Pivot {
    let mut best = (0, 0);
    for v in bits(mask) {
        let d = (adj[v] & mask).count_ones();
        if d <= 1 {
            return Pivot::Forced(v);
        }
        if d > best.1 {
            best = (v, d);
        }
    }
    Pivot::Branch(best.0)
}

fn exhaustive(adj: &[u64], mask: u64) -> u64 {
    if mask == 0 {
        return 0;
    }
    match pivot(adj, mask) {
        Pivot::Forced(v) => (1 << v) | exhaustive(adj, mask & !(adj[v] | 1 << v)),
        Pivot::Branch(v) => {
            let with = (1 << v) | exhaustive(adj, mask & !(adj[v] | 1 << v));
            let without = exhaustive(adj, mask & !(1 << v));
            if without.count_ones() > with.count_ones() {
                without
            } else {
                with
            }
        }
    }
}

/// Σ over components H of `g[mask]` of |H| − ⌈(|H| − 1)/Δ(H)⌉ (1 for
/// isolated vertices).
fn component_upper_bound(adj: &[u64], mask: u64) -> usize {
    let mut rest = mask;
    let mut total = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut grown = comp;
        loop {
            for v in bits(grown) {
                comp |= adj[v] & mask;
            }
            if comp == grown {
                break;
            }
            grown = comp;
        }
        rest &= !comp;
        let size = comp.count_ones() as usize;
        if size == 1 {
            total += 1;
            continue;
        }
        let k = bits(comp)
            .map(|v| (adj[v] & comp).count_ones() as usize)
            .max()
            .unwrap_or(0);
        total += size - ceil_div(size - 1, k);
    }
    total
}

/// Minimum-degree greedy, used as the starting incumbent.
fn greedy_incumbent(adj: &[u64], mut mask: u64) -> u64 {
    let mut set = 0;
    while mask != 0 {
        let v = bits(mask)
            .min_by_key(|&v| (adj[v] & mask).count_ones())
            .unwrap();
        set |= 1 << v;
        mask &= !(adj[v] | 1 << v);
    }
    set
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
}

impl Search<'_> {
    fn run(&mut self, mask: u64, current: u64) {
        if mask == 0 {
            if current.count_ones() > self.best.count_ones() {
                self.best = current;
            }
            return;
        }
        let size = current.count_ones() as usize;
        if size + component_upper_bound(self.adj, mask) <= self.best.count_ones() as usize {
            return;
        }
        let adj = self.adj;
        match pivot(adj, mask) {
            Pivot::Forced(v) => self.run(mask & !(adj[v] | 1 << v), current | 1 << v),
            Pivot::Branch(v) => {
                self.run(mask & !(adj[v] | 1 << v), current | 1 << v);
                self.run(mask & !(1 << v), current);
            }
        }
    }
}

fn branch_and_bound(adj: &[u64], mask: u64) -> u64 {
    let mut search = Search {
        adj,
        best: greedy_incumbent(adj, mask),
    };
    search.run(mask, 0);
    search.best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{
        gen_basic, gen_circulant_example, gen_lower_extremal, gen_upper_extremal, BasicFamily,
    };

    /// Largest independent subset by trying every subset.
    fn naive_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|mask| {
                g.edges()
                    .all(|(u, v)| mask & (1 << (u - 1)) == 0 || mask & (1 << (v - 1)) == 0)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn known_values() {
        let k4 = gen_basic(BasicFamily::Complete, 4).unwrap();
        assert_eq!(alpha_exact(&k4).unwrap().alpha, 1);
        let c9 = gen_basic(BasicFamily::Cycle, 9).unwrap();
        assert_eq!(alpha_exact(&c9).unwrap().alpha, 4);
        let u73 = gen_upper_extremal(7, 3).unwrap();
        assert_eq!(alpha_exact(&u73).unwrap().alpha, 5);
        assert_eq!(naive_alpha(&u73), 5);
        let l73 = gen_lower_extremal(7, 3).unwrap();
        assert_eq!(alpha_exact(&l73).unwrap().alpha, 3);
        assert_eq!(naive_alpha(&l73), 3);
    }

    #[test]
    fn branch_and_bound_matches_exhaustive() {
        for n in 25..=40 {
            for k in [2, 3, 5] {
                let g = gen_lower_extremal(n, k).unwrap();
                let part: Vec<_> = g.vertices().collect();
                let adj = local_adjacency(&g, &part);
                let a = branch_and_bound(&adj, full_mask(n)).count_ones();
                let b = exhaustive(&adj, full_mask(n)).count_ones();
                assert_eq!(a, b);
                assert_eq!(a as usize, ceil_div(n, k));
            }
        }
    }

    #[test]
    fn size_limit() {
        let g = Graph::edgeless(41).unwrap();
        assert_eq!(
            alpha_exact(&g),
            Err(OracleError::TooLarge { n: 41, limit: 40 })
        );
        let big = Oracle::with_limit(64).unwrap();
        assert_eq!(big.alpha_exact(&g).unwrap().alpha, 41);
        assert!(Oracle::with_limit(65).is_err());
    }

    #[test]
    fn maximality() {
        let c6 = gen_circulant_example(1).unwrap();
        assert!(is_maximal_independent(&c6, &[1, 4]));
        let c9 = gen_basic(BasicFamily::Cycle, 9).unwrap();
        assert!(is_maximal_independent(&c9, &[1, 3, 5, 7]));
        assert!(!is_maximal_independent(&c9, &[1, 3]));
        assert!(!is_maximal_independent(&c9, &[1, 2]));
    }

    #[test]
    fn disconnected_inputs_decompose() {
        let g = gen_upper_extremal(7, 3)
            .unwrap()
            .disjoint_union(&gen_basic(BasicFamily::Complete, 3).unwrap())
            .disjoint_union(&Graph::edgeless(1).unwrap());
        let result = alpha_exact(&g).unwrap();
        assert_eq!(result.alpha, 7);
        assert!(g.is_independent_set(&result.witness));
    }
}
