//! Distance partitions of edges and the Wiener, Szeged, edge-Szeged and
//! edge-vertex-Szeged indices.
//!
//! For an edge `e = uv`, every vertex `w` falls into one of three classes by
//! comparing `d(u, w)` with `d(v, w)`. Edges are classified the same way
//! using the vertex-to-edge distance `d(e', w) = min(d(x, w), d(y, w))` for
//! `e' = xy`. All arithmetic is exact; the edge-vertex-Szeged index is kept
//! doubled so it stays integral.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, GraphError};

/// The six counts for one oriented edge `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgePartition {
    pub u: usize,
    pub v: usize,
    /// Vertices strictly closer to `u`.
    pub n_u: u64,
    /// Vertices strictly closer to `v`.
    pub n_v: u64,
    /// Equidistant vertices.
    pub n_0: u64,
    pub m_u: u64,
    pub m_v: u64,
    /// Equidistant edges; always includes `e` itself.
    pub m_0: u64,
}

impl EdgePartition {
    /// Same edge viewed from the other endpoint.
    pub fn swapped(&self) -> Self {
        EdgePartition {
            u: self.v,
            v: self.u,
            n_u: self.n_v,
            n_v: self.n_u,
            n_0: self.n_0,
            m_u: self.m_v,
            m_v: self.m_u,
            m_0: self.m_0,
        }
    }

    /// Contribution to the edge-Szeged index.
    pub fn edge_product(&self) -> u64 {
        self.m_u * self.m_v
    }

    /// `n_u * m_v`.
    pub fn mixed_u(&self) -> u64 {
        self.n_u * self.m_v
    }

    /// `n_v * m_u`.
    pub fn mixed_v(&self) -> u64 {
        self.n_v * self.m_u
    }

    /// Contribution to the doubled edge-vertex-Szeged index.
    pub fn mixed_sum(&self) -> u64 {
        self.mixed_u() + self.mixed_v()
    }

    /// Contribution to the Szeged index.
    pub fn vertex_product(&self) -> u64 {
        self.n_u * self.n_v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub edge_szeged: u64,
    /// Twice the edge-vertex-Szeged index.
    pub edge_vertex_szeged_x2: u64,
    /// One partition per edge, in lexicographic edge order, oriented `u < v`.
    pub per_edge: Vec<EdgePartition>,
}

impl IndexReport {
    pub fn pair(&self) -> IndexPair {
        IndexPair {
            sz_e: self.edge_szeged,
            sz_ev_x2: self.edge_vertex_szeged_x2,
        }
    }
}

/// The two indices that the cactus results are about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexPair {
    pub sz_e: u64,
    pub sz_ev_x2: u64,
}

/// `min(d(u, w), d(v, w))` for the edge `e = (u, v)`.
pub fn edge_distance(g: &Graph, e: Edge, w: usize) -> Result<usize, GraphError> {
    let (u, v) = g.require_edge(e.0, e.1)?;
    g.check_vertex(w)?;
    g.require_connected()?;
    let du = g.connected_distances(w);
    Ok(du[u].min(du[v]))
}

/// Partition counts of the oriented edge `(u, v)` from two BFS runs.
pub fn edge_partition(g: &Graph, u: usize, v: usize) -> Result<EdgePartition, GraphError> {
    g.require_edge(u, v)?;
    g.require_connected()?;
    let du = g.connected_distances(u);
    let dv = g.connected_distances(v);
    Ok(partition_from(g, u, v, &du, &dv))
}

fn partition_from(g: &Graph, u: usize, v: usize, du: &[usize], dv: &[usize]) -> EdgePartition {
    let (mut n_u, mut n_v) = (0u64, 0u64);
    for w in 0..g.vertex_count() {
        match du[w].cmp(&dv[w]) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    let (mut m_u, mut m_v) = (0u64, 0u64);
    for &(x, y) in g.edges() {
        let to_u = du[x].min(du[y]);
        let to_v = dv[x].min(dv[y]);
        match to_u.cmp(&to_v) {
            std::cmp::Ordering::Less => m_u += 1,
            std::cmp::Ordering::Greater => m_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    EdgePartition {
        u,
        v,
        n_u,
        n_v,
        n_0: g.vertex_count() as u64 - n_u - n_v,
        m_u,
        m_v,
        m_0: g.edge_count() as u64 - m_u - m_v,
    }
}

// Small graphs stay on one worker.
const PAR_CHUNK: usize = 64;

/// All four indices, using one BFS per vertex shared across edges.
pub fn compute_indices(g: &Graph) -> Result<IndexReport, GraphError> {
    g.require_connected()?;
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .with_min_len(PAR_CHUNK)
        .map(|s| g.connected_distances(s))
        .collect();
    let wiener = dist
        .iter()
        .enumerate()
        .flat_map(|(s, row)| row[s + 1..].iter())
        .map(|&d| d as u64)
        .sum();
    let per_edge: Vec<EdgePartition> = g
        .edges()
        .par_iter()
        .with_min_len(PAR_CHUNK)
        .map(|&(u, v)| partition_from(g, u, v, &dist[u], &dist[v]))
        .collect();
    Ok(IndexReport {
        n,
        m: g.edge_count(),
        wiener,
        szeged: per_edge.iter().map(EdgePartition::vertex_product).sum(),
        edge_szeged: per_edge.iter().map(EdgePartition::edge_product).sum(),
        edge_vertex_szeged_x2: per_edge.iter().map(EdgePartition::mixed_sum).sum(),
        per_edge,
    })
}

/// `(Sz_e, 2 Sz_ev)` of a connected graph.
pub fn index_pair(g: &Graph) -> Result<IndexPair, GraphError> {
    compute_indices(g).map(|r| r.pair())
}
