//! Simple undirected graphs on the dense vertex set `1..=n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted so
//! every traversal visits vertices lowest identifier first; the greedy and
//! descent procedures rely on that order for their tie-breaking.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// A 1-based vertex identifier.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("induced subgraph needs a nonempty vertex set")]
    EmptyVertexSet,
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `adj[v - 1]` is the sorted neighbor list of `v`.
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `1..=n`. Repeated pairs (in either orientation)
    /// collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex == 0 || vertex > n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            n,
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// The graph on `1..=n` with no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    /// Δ(G); zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if !self.contains(u) || !self.contains(v) {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// G[W] with a mapping from the new identifiers `1..=|W|` back to the
    /// identifiers of `self`. `W` is sorted and deduplicated first, so the
    /// relabeling preserves the relative order of vertices.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        let mut original: Vec<Vertex> = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        if original.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(&vertex) = original.iter().find(|&&v| !self.contains(v)) {
            return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
        }
        let mut local = vec![0usize; self.n + 1];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i + 1;
        }
        let mut edges = Vec::new();
        for &u in &original {
            for &v in self.neighbors(u) {
                if v > u && local[v] != 0 {
                    edges.push((local[u], local[v]));
                }
            }
        }
        let graph = Graph::new(original.len(), edges)?;
        Ok(InducedSubgraph { graph, original })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    pub fn components(&self) -> ComponentPartition {
        let mut seen = vec![false; self.n + 1];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut part = Vec::new();
            while let Some(u) = queue.pop_front() {
                part.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        ComponentPartition { parts }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Classifies a connected graph. The shapes are tested in the order
    /// singleton, complete, cycle, path, so K_2 is `Complete` (not `Path`)
    /// and K_3 is `Complete` (not `Cycle`).
    pub fn classify(&self) -> Result<GraphClass, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        if n == 1 {
            return Ok(GraphClass::Singleton);
        }
        if self.edge_count == n * (n - 1) / 2 {
            return Ok(GraphClass::Complete);
        }
        let mut ones = 0;
        let mut twos = 0;
        for v in self.vertices() {
            match self.degree(v) {
                1 => ones += 1,
                2 => twos += 1,
                _ => return Ok(GraphClass::Other),
            }
        }
        Ok(match (ones, twos) {
            (0, t) if t == n => GraphClass::Cycle,
            (2, t) if t + 2 == n => GraphClass::Path,
            _ => GraphClass::Other,
        })
    }

    /// True iff no edge joins two members of `set`. Vertices outside
    /// `1..=n` make the set invalid.
    pub fn is_independent_set(&self, set: &[Vertex]) -> bool {
        let mut member = vec![false; self.n + 1];
        for &v in set {
            if !self.contains(v) {
                return false;
            }
            member[v] = true;
        }
        set.iter()
            .all(|&u| self.neighbors(u).iter().all(|&v| !member[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph together with the identifiers its vertices carried
/// in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i - 1]` is the parent identifier of local vertex `i`.
    pub original: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn to_original(&self, v: Vertex) -> Vertex {
        self.original[v - 1]
    }

    pub fn lift(&self, set: &[Vertex]) -> Vec<Vertex> {
        set.iter().map(|&v| self.to_original(v)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Singleton,
    Complete,
    Cycle,
    Path,
    Other,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GraphClass::Singleton => "singleton",
            GraphClass::Complete => "complete",
            GraphClass::Cycle => "cycle",
            GraphClass::Path => "path",
            GraphClass::Other => "other",
        };
        f.write_str(name)
    }
}

/// The vertex sets of the components, each sorted, ordered by their
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub parts: Vec<Vec<Vertex>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of one-vertex components.
    pub fn singleton_count(&self) -> usize {
        self.parts.iter().filter(|p| p.len() == 1).count()
    }

    pub fn non_singletons(&self) -> impl Iterator<Item = &[Vertex]> {
        self.parts
            .iter()
            .filter(|p| p.len() > 1)
            .map(Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.max_degree(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(4, [(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(1), &[2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1)]),
            Err(GraphError::VertexOutOfRange { vertex: 0, n: 3 })
        );
        assert_eq!(Graph::edgeless(0), Err(GraphError::NoVertices));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4);
        let sub = k4.induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(sub.graph.order(), 2);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);

        let c5 = cycle(5);
        let sub = c5.induced_subgraph(&[4, 1, 2]).unwrap();
        assert_eq!(sub.original, vec![1, 2, 4]);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(sub.graph.degree(3), 0);
        assert_eq!(sub.lift(&[3]), vec![4]);

        assert_eq!(c5.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn component_counts() {
        let c5 = cycle(5);
        let parts = c5.components();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.singleton_count(), 0);

        let empty = Graph::edgeless(5).unwrap();
        let parts = empty.components();
        assert_eq!(parts.len(), 5);
        assert_eq!(parts.singleton_count(), 5);
    }

    #[test]
    fn classification() {
        assert_eq!(complete(5).classify(), Ok(GraphClass::Complete));
        assert_eq!(complete(2).classify(), Ok(GraphClass::Complete));
        assert_eq!(complete(3).classify(), Ok(GraphClass::Complete));
        assert_eq!(cycle(9).classify(), Ok(GraphClass::Cycle));
        let path = Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(path.classify(), Ok(GraphClass::Path));
        assert_eq!(Graph::edgeless(1).unwrap().classify(), Ok(GraphClass::Singleton));
        let star = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.classify(), Ok(GraphClass::Other));
        let two_edges = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(two_edges.classify(), Err(GraphError::Disconnected));
    }

    #[test]
    fn independence() {
        let c9 = cycle(9);
        assert!(c9.is_independent_set(&[1, 3, 5, 7]));
        assert!(!c9.is_independent_set(&[1, 9]));
        assert!(c9.is_independent_set(&[]));
        assert!(!c9.is_independent_set(&[10]));
        assert!(!complete(4).is_independent_set(&[1, 2]));
    }

    #[test]
    fn union_shifts_labels() {
        let g = complete(3).disjoint_union(&cycle(4));
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 7);
        assert!(g.has_edge(4, 7));
        assert!(!g.has_edge(3, 4));
    }
}
