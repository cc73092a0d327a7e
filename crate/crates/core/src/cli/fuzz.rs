//! Random graphs and the fuzzing harness.
//!
//! Connected instances are a uniformly random labeled tree (Prüfer
//! decoding, then a random relabeling) plus every remaining pair
//! independently with a per-instance probability. Disconnected instances
//! are plain G(n, p).

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::augment::{solve_connected, solve_general, verify_certificate, Tier};
use crate::bounds::{
    bounds_report, caro_wei_ceil, degree_sum_check, lower_bound_connected, refined_lower_bound,
    upper_bound_connected,
};
use crate::graph::{Graph, GraphClass, Vertex};
use crate::oracle::alpha_exact;

/// Decodes a Prüfer sequence over `0..n` into tree edges.
fn prufer_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer step always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// A random connected graph on `1..=n`: a uniform spanning tree on a random
/// labeling plus each other pair with probability `extra`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut labels: Vec<Vertex> = (1..=n).collect();
    labels.shuffle(rng);
    let mut edges: Vec<(Vertex, Vertex)> = prufer_tree(rng, n)
        .into_iter()
        .map(|(a, b)| (labels[a], labels[b]))
        .collect();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// G(n, p) on `1..=n`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Draws an edge probability skewed towards sparse graphs, where the
/// bounds are closest to tight.
fn edge_probability<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = rng.gen();
    0.6 * u * u
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
    /// Plain random graphs (possibly disconnected) instead of connected ones.
    pub disconnected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzFailure {
    pub index: usize,
    pub graph: Graph,
    pub reason: String,
}

/// The instance sequence for a configuration; identical for equal seeds.
pub fn instances(config: &FuzzConfig) -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (lo, hi, disconnected) = (config.min_n.max(1), config.max_n, config.disconnected);
    let lo = if disconnected { lo } else { lo.max(2) };
    (0..config.count).map(move |_| {
        let n = rng.gen_range(lo..=hi.max(lo));
        let p = edge_probability(&mut rng);
        if disconnected {
            random_graph(&mut rng, n, p)
        } else {
            random_connected_graph(&mut rng, n, p)
        }
    })
}

/// Checks bounds and certificates on a connected graph against the oracle.
pub fn check_connected(g: &Graph) -> Result<(), String> {
    let n = g.order();
    let k = g.max_degree();
    let alpha = alpha_exact(g).map_err(|e| e.to_string())?;
    let lower = lower_bound_connected(n, k).map_err(|e| e.to_string())?;
    let upper = upper_bound_connected(n, k).map_err(|e| e.to_string())?;
    if alpha.alpha < lower || alpha.alpha > upper {
        return Err(format!("alpha {} outside [{lower}, {upper}]", alpha.alpha));
    }
    let class = g.classify().map_err(|e| e.to_string())?;
    let cert = solve_connected(g).map_err(|e| e.to_string())?;
    if !verify_certificate(g, &cert) {
        return Err(format!("certificate {:?} fails verification", cert.set));
    }
    if !matches!(class, GraphClass::Complete | GraphClass::Cycle) {
        let refined = refined_lower_bound(n, k).map_err(|e| e.to_string())?;
        if alpha.alpha < refined {
            return Err(format!("alpha {} below refined bound {refined}", alpha.alpha));
        }
        if cert.tier != Tier::Refined || cert.guarantee != refined {
            return Err(format!(
                "certificate tier {} guarantee {} instead of refined {refined}",
                cert.tier, cert.guarantee
            ));
        }
    }
    let check = degree_sum_check(g, &alpha.witness).map_err(|e| e.to_string())?;
    if !check.ok {
        return Err(format!("degree-sum inequality fails: {check:?}"));
    }
    if caro_wei_ceil(g) > alpha.alpha {
        return Err("Caro–Wei bound exceeds alpha".into());
    }
    Ok(())
}

/// Checks the aggregate bounds and the componentwise certificate.
pub fn check_general(g: &Graph) -> Result<(), String> {
    let alpha = alpha_exact(g).map_err(|e| e.to_string())?;
    let report = bounds_report(g);
    if alpha.alpha < report.aggregate_lower || alpha.alpha > report.aggregate_upper {
        return Err(format!(
            "alpha {} outside aggregate [{}, {}]",
            alpha.alpha, report.aggregate_lower, report.aggregate_upper
        ));
    }
    let cert = solve_general(g).map_err(|e| e.to_string())?;
    if !verify_certificate(g, &cert) {
        return Err(format!("certificate {:?} fails verification", cert.set));
    }
    if cert.set.len() > alpha.alpha {
        return Err("certificate larger than alpha".into());
    }
    let check = degree_sum_check(g, &alpha.witness).map_err(|e| e.to_string())?;
    if !check.ok {
        return Err(format!("degree-sum inequality fails: {check:?}"));
    }
    Ok(())
}

/// Runs the configured instances; stops at the first failure.
pub fn run_fuzz(config: &FuzzConfig) -> Result<usize, FuzzFailure> {
    let mut validated = 0;
    for (index, graph) in instances(config).enumerate() {
        let outcome = if config.disconnected {
            check_general(&graph)
        } else {
            check_connected(&graph)
        };
        if let Err(reason) = outcome {
            return Err(FuzzFailure {
                index,
                graph,
                reason,
            });
        }
        validated += 1;
    }
    Ok(validated)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_generator_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=30 {
            let g = random_connected_graph(&mut rng, n, 0.0);
            assert!(g.is_connected());
            assert_eq!(g.size(), n - 1);
        }
    }

    #[test]
    fn instances_are_reproducible() {
        let config = FuzzConfig {
            count: 20,
            min_n: 2,
            max_n: 15,
            seed: 3,
            disconnected: false,
        };
        let a: Vec<_> = instances(&config).collect();
        let b: Vec<_> = instances(&config).collect();
        assert_eq!(a, b);
        let other: Vec<_> = instances(&FuzzConfig { seed: 4, ..config }).collect();
        assert_ne!(a, other);
    }

    #[test]
    fn small_runs_pass() {
        let config = FuzzConfig {
            count: 50,
            min_n: 2,
            max_n: 14,
            seed: 11,
            disconnected: false,
        };
        assert_eq!(run_fuzz(&config), Ok(50));
        assert_eq!(
            run_fuzz(&FuzzConfig {
                disconnected: true,
                ..config
            }),
            Ok(50)
        );
    }
}
