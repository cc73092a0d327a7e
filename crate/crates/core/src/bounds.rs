//! Closed-form bounds on the independence number in terms of the order and
//! the maximum degree, plus the Caro–Wei sum and the degree-sum inequality
//! satisfied by every independent set.
//!
//! All rounding is done in integer arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{Graph, GraphClass, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("bound needs 1 <= k < n with n = 2 when k = 1, got n = {n}, k = {k}")]
    InvalidParameters { n: usize, k: usize },
    #[error("the refined bound needs k >= 2, got k = {0}")]
    DegreeTooSmall(usize),
    #[error("vertex set is not independent")]
    NotIndependent,
}

fn check_params(n: usize, k: usize) -> Result<(), BoundsError> {
    if k == 0 || k >= n || (k == 1 && n != 2) {
        return Err(BoundsError::InvalidParameters { n, k });
    }
    Ok(())
}

/// ⌈a / b⌉ for b > 0.
pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// ⌈(n−1)/k⌉, the lower bound for every connected graph with n vertices and
/// maximum degree k.
pub fn lower_bound_connected(n: usize, k: usize) -> Result<usize, BoundsError> {
    check_params(n, k)?;
    Ok(ceil_div(n - 1, k))
}

/// ⌈n/k⌉, the lower bound for connected graphs that are neither complete
/// nor cycles. It exceeds [`lower_bound_connected`] exactly when k divides
/// n − 1.
pub fn refined_lower_bound(n: usize, k: usize) -> Result<usize, BoundsError> {
    check_params(n, k)?;
    if k < 2 {
        return Err(BoundsError::DegreeTooSmall(k));
    }
    Ok(ceil_div(n, k))
}

/// n − ⌈(n−1)/k⌉ = ⌊((k−1)n + 1)/k⌋.
pub fn upper_bound_connected(n: usize, k: usize) -> Result<usize, BoundsError> {
    check_params(n, k)?;
    let value = n - ceil_div(n - 1, k);
    assert_eq!(
        value,
        ((k - 1) * n + 1) / k,
        "ceiling and floor forms of the upper bound disagree at n = {n}, k = {k}"
    );
    Ok(value)
}

/// Σ_v 1/(d(v) + 1), exactly.
pub fn caro_wei_bound(g: &Graph) -> BigRational {
    g.vertices().fold(BigRational::zero(), |acc, v| {
        acc + BigRational::new(BigInt::from(1), BigInt::from(g.degree(v) + 1))
    })
}

pub fn caro_wei_ceil(g: &Graph) -> usize {
    caro_wei_bound(g)
        .ceil()
        .to_integer()
        .to_usize()
        .expect("Caro–Wei sum is at most n")
}

/// Result of checking Σ_{v ∉ I} d(v) against the edge count (and against
/// n − 1 when the graph is connected).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSumCheck {
    pub sum: usize,
    pub edges: usize,
    /// `Some(sum >= n - 1)` for connected graphs.
    pub connected_ok: Option<bool>,
    pub ok: bool,
}

pub fn degree_sum_check(g: &Graph, set: &[Vertex]) -> Result<DegreeSumCheck, BoundsError> {
    if !g.is_independent_set(set) {
        return Err(BoundsError::NotIndependent);
    }
    let mut member = vec![false; g.order() + 1];
    for &v in set {
        member[v] = true;
    }
    let sum: usize = g.vertices().filter(|&v| !member[v]).map(|v| g.degree(v)).sum();
    let edges = g.size();
    let connected_ok = g.is_connected().then(|| sum + 1 >= g.order());
    Ok(DegreeSumCheck {
        sum,
        edges,
        connected_ok,
        ok: sum >= edges && connected_ok.unwrap_or(true),
    })
}

/// Bounds for one non-singleton component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBounds {
    pub vertices: Vec<Vertex>,
    pub order: usize,
    pub max_degree: usize,
    pub class: GraphClass,
    /// ⌈(n_H − 1)/Δ_H⌉.
    pub lower: usize,
    /// n_H − ⌈(n_H − 1)/Δ_H⌉.
    pub upper: usize,
    /// ⌈n_H/Δ_H⌉ when the component is neither complete nor a cycle.
    pub refined: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub order: usize,
    pub components: Vec<ComponentBounds>,
    pub singleton_count: usize,
    /// n − Σ_H ⌊((Δ_H − 1) n_H + 1)/Δ_H⌋.
    pub aggregate_lower: usize,
    /// n − Σ_H ⌈(n_H − 1)/Δ_H⌉.
    pub aggregate_upper: usize,
    pub caro_wei: BigRational,
    pub caro_wei_ceil: usize,
}

pub fn bounds_report(g: &Graph) -> BoundsReport {
    let partition = g.components();
    let mut components = Vec::new();
    let mut upper_deficit = 0;
    let mut lower_deficit = 0;
    for part in partition.non_singletons() {
        let sub = g
            .induced_subgraph(part)
            .expect("component vertex sets are nonempty and in range");
        let h = &sub.graph;
        let (order, k) = (h.order(), h.max_degree());
        assert!(
            k > 1 || order == 2,
            "a connected component with maximum degree 1 is a single edge"
        );
        let class = h.classify().expect("components are connected");
        let lower = lower_bound_connected(order, k).expect("component parameters are valid");
        let upper = upper_bound_connected(order, k).expect("component parameters are valid");
        let refined = match class {
            GraphClass::Complete | GraphClass::Cycle | GraphClass::Singleton => None,
            GraphClass::Path | GraphClass::Other => refined_lower_bound(order, k).ok(),
        };
        upper_deficit += ceil_div(order - 1, k);
        lower_deficit += ((k - 1) * order + 1) / k;
        components.push(ComponentBounds {
            vertices: part.to_vec(),
            order,
            max_degree: k,
            class,
            lower,
            upper,
            refined,
        });
    }
    let caro_wei = caro_wei_bound(g);
    let caro_wei_ceil = caro_wei
        .ceil()
        .to_integer()
        .to_usize()
        .expect("Caro–Wei sum is at most n");
    BoundsReport {
        order: g.order(),
        components,
        singleton_count: partition.singleton_count(),
        aggregate_lower: g.order() - lower_deficit,
        aggregate_upper: g.order() - upper_deficit,
        caro_wei,
        caro_wei_ceil,
    }
}
