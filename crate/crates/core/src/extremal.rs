//! Generators for the graph families that attain the bounds.
//!
//! * [`gen_upper_extremal`]: a chain of stars whose consecutive members
//!   share one leaf. Its leaves form an independent set of size
//!   n − ⌈(n−1)/k⌉.
//! * [`gen_lower_extremal`]: a chain of cliques of size k joined by single
//!   bridge edges, with independence number ⌈n/k⌉.
//! * [`gen_circulant_example`]: a circulant graph with a maximal independent
//!   set of size 2, below ⌈(n−1)/Δ⌉.

use std::fmt;

use thiserror::Error;

use crate::bounds::ceil_div;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("star chain needs 1 <= k < n with n = 2 when k = 1, got n = {n}, k = {k}")]
    UpperParameters { n: usize, k: usize },
    #[error("clique chain needs 2 <= k < n, got n = {n}, k = {k}")]
    LowerParameters { n: usize, k: usize },
    #[error("circulant example needs m >= 1")]
    CirculantParameter,
    #[error("{family} needs n >= {min}, got {n}")]
    TooSmall {
        family: BasicFamily,
        min: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicFamily {
    Complete,
    Cycle,
    Path,
}

impl BasicFamily {
    fn min_order(self) -> usize {
        match self {
            BasicFamily::Complete => 1,
            BasicFamily::Cycle => 3,
            BasicFamily::Path => 2,
        }
    }
}

impl fmt::Display for BasicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicFamily::Complete => "complete graph",
            BasicFamily::Cycle => "cycle",
            BasicFamily::Path => "path",
        })
    }
}

/// A named family member, for callers (the CLI) that pick the family at
/// run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    UpperExtremal { n: usize, k: usize },
    LowerExtremal { n: usize, k: usize },
    CirculantExample { m: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph, ExtremalError> {
        match *self {
            FamilySpec::UpperExtremal { n, k } => gen_upper_extremal(n, k),
            FamilySpec::LowerExtremal { n, k } => gen_lower_extremal(n, k),
            FamilySpec::CirculantExample { m } => gen_circulant_example(m),
            FamilySpec::Complete { n } => gen_basic(BasicFamily::Complete, n),
            FamilySpec::Cycle { n } => gen_basic(BasicFamily::Cycle, n),
            FamilySpec::Path { n } => gen_basic(BasicFamily::Path, n),
        }
    }
}

/// Parameters of the star chain on n vertices with maximum degree k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarChainLayout {
    /// Number of stars, ⌈(n−1)/k⌉.
    pub stars: usize,
    /// Missing leaves of the last star: k·stars = n − 1 + deficit.
    pub deficit: usize,
    /// Number of leaves; the leaves are `1..=leaves` and star p has
    /// center `leaves + p`.
    pub leaves: usize,
}

impl StarChainLayout {
    pub fn new(n: usize, k: usize) -> Result<Self, ExtremalError> {
        if k == 0 || k >= n || (k == 1 && n != 2) {
            return Err(ExtremalError::UpperParameters { n, k });
        }
        let stars = ceil_div(n - 1, k);
        let deficit = k * stars - (n - 1);
        let leaves = n - stars;
        assert!(deficit < k);
        assert_eq!(leaves, 1 + stars * (k - 1) - deficit);
        if stars == 1 {
            assert_eq!((n, deficit), (k + 1, 0));
        }
        Ok(StarChainLayout {
            stars,
            deficit,
            leaves,
        })
    }

    /// Center vertex of star `p` (1-based).
    pub fn center(&self, p: usize) -> Vertex {
        self.leaves + p
    }

    /// Leaves of star `p` (1-based); consecutive stars share their boundary
    /// leaf.
    pub fn star_leaves(&self, p: usize, k: usize) -> std::ops::RangeInclusive<Vertex> {
        let first = 1 + (p - 1) * (k - 1);
        let count = if p == self.stars { k - self.deficit } else { k };
        first..=first + count - 1
    }
}

pub fn gen_upper_extremal(n: usize, k: usize) -> Result<Graph, ExtremalError> {
    let layout = StarChainLayout::new(n, k)?;
    let edges = (1..=layout.stars).flat_map(|p| {
        let center = layout.center(p);
        layout.star_leaves(p, k).map(move |leaf| (leaf, center))
    });
    Ok(Graph::new(n, edges).expect("star chain edges are in range"))
}

/// The leaf set `1..=n−⌈(n−1)/k⌉` of the star chain, a maximum independent
/// set.
pub fn upper_extremal_witness(n: usize, k: usize) -> Result<Vec<Vertex>, ExtremalError> {
    let layout = StarChainLayout::new(n, k)?;
    Ok((1..=layout.leaves).collect())
}

fn check_lower(n: usize, k: usize) -> Result<(), ExtremalError> {
    if k < 2 || k >= n {
        return Err(ExtremalError::LowerParameters { n, k });
    }
    Ok(())
}

/// Clique `i` (1-based) of the clique chain: `(i−1)k+1 ..= min(ik, n)`.
fn clique_block(n: usize, k: usize, i: usize) -> std::ops::RangeInclusive<Vertex> {
    (i - 1) * k + 1..=(i * k).min(n)
}

pub fn gen_lower_extremal(n: usize, k: usize) -> Result<Graph, ExtremalError> {
    check_lower(n, k)?;
    let blocks = ceil_div(n, k);
    let mut edges = Vec::new();
    for i in 1..=blocks {
        let block = clique_block(n, k, i);
        for u in block.clone() {
            for v in u + 1..=*block.end() {
                edges.push((u, v));
            }
        }
        if i < blocks {
            edges.push((i * k, i * k + 1));
        }
    }
    Ok(Graph::new(n, edges).expect("clique chain edges are in range"))
}

/// `{(i−1)k + 1 : i ∈ [⌈n/k⌉]}`, one vertex from each clique of the chain.
pub fn lower_extremal_witness(n: usize, k: usize) -> Result<Vec<Vertex>, ExtremalError> {
    check_lower(n, k)?;
    Ok((1..=ceil_div(n, k)).map(|i| (i - 1) * k + 1).collect())
}

/// The circulant on `n = 4m + 2` vertices joining `i` to `i + j (mod n)` for
/// `j ∈ 1..=m`. Residue 0 is vertex `n`.
pub fn gen_circulant_example(m: usize) -> Result<Graph, ExtremalError> {
    if m < 1 {
        return Err(ExtremalError::CirculantParameter);
    }
    let n = 4 * m + 2;
    let edges = (1..=n).flat_map(|i| {
        (1..=m).map(move |j| {
            let target = (i + j) % n;
            (i, if target == 0 { n } else { target })
        })
    });
    Ok(Graph::new(n, edges).expect("circulant edges are in range"))
}

/// `{1, 2m + 2}`, a maximal independent set of [`gen_circulant_example`].
pub fn circulant_example_set(m: usize) -> Vec<Vertex> {
    vec![1, 2 * m + 2]
}

/// Canonical labeled instances: K_n, the cycle (1, 2, ..., n) and the path
/// ⟨1, ..., n⟩.
pub fn gen_basic(family: BasicFamily, n: usize) -> Result<Graph, ExtremalError> {
    let min = family.min_order();
    if n < min {
        return Err(ExtremalError::TooSmall { family, min, n });
    }
    let graph = match family {
        BasicFamily::Complete => {
            Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
        }
        BasicFamily::Cycle => Graph::new(n, (1..=n).map(|i| (i, i % n + 1))),
        BasicFamily::Path => Graph::new(n, (1..n).map(|i| (i, i + 1))),
    };
    Ok(graph.expect("basic family edges are in range"))
}
