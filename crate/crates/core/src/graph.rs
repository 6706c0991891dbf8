//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`. The edge list is kept as ordered pairs `(u, v)` with
//! `u < v`, sorted lexicographically, and every adjacency list is sorted.
//! Every algorithm in this crate iterates edges in that order, which is what
//! makes reports and transformation traces deterministic.

use std::collections::VecDeque;

use thiserror::Error;

/// An undirected edge as `(smaller endpoint, larger endpoint)`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) is not present in the graph")]
    EdgeNotPresent(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a cactus: {0}")]
    NotCactus(String),
}

/// Hop count from a BFS source. `Unreachable` is its own variant so that no
/// arithmetic can silently happen on an "infinite" distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalising each pair to `(min, max)` and sorting.
    /// Rejects self-loops, repeated edges (in either orientation) and
    /// endpoints outside `0..n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adjacency,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// Star with hub `0` and leaves `1..n`.
    pub fn star(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Normalised form of `(u, v)` if it is an edge of the graph.
    pub fn require_edge(&self, u: usize, v: usize) -> Result<Edge, GraphError> {
        if self.has_edge(u, v) {
            Ok((u.min(v), u.max(v)))
        } else {
            Err(GraphError::EdgeNotPresent(u, v))
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Cyclomatic number `m - n + c`; for a connected cactus this is the
    /// number of cycles.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![Distance::Unreachable; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(d) = dist[u] else {
                unreachable!("queued vertices have finite distance")
            };
            for &w in &self.adjacency[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// BFS hop counts for a graph already known to be connected.
    pub(crate) fn connected_distances(&self, source: usize) -> Vec<usize> {
        self.bfs_distances(source)
            .expect("source in range")
            .into_iter()
            .map(|d| d.finite().expect("graph is connected"))
            .collect()
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Applies `perm` as the vertex map `v -> perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves simplicity")
    }

    /// Returns a new graph with `remove` deleted and `add` inserted.
    pub fn with_edges_replaced(&self, remove: &[Edge], add: &[Edge]) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        for &(a, b) in remove {
            let e = self.require_edge(a, b)?;
            edges.retain(|&x| x != e);
        }
        edges.extend_from_slice(add);
        Graph::new(self.n, edges)
    }

    /// Connected component of `start` in the graph with `blocked` edges
    /// removed, as (vertices, edge count). Vertices are sorted.
    pub(crate) fn component_without(&self, start: usize, blocked: &[Edge]) -> (Vec<usize>, usize) {
        let is_blocked = |a: usize, b: usize| blocked.contains(&(a.min(b), a.max(b)));
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut verts = vec![start];
        let mut twice_edges = 0;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if is_blocked(u, w) {
                    continue;
                }
                twice_edges += 1;
                if !seen[w] {
                    seen[w] = true;
                    verts.push(w);
                    stack.push(w);
                }
            }
        }
        verts.sort_unstable();
        (verts, twice_edges / 2)
    }
}
