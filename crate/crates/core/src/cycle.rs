//! Cycle-local quantities of a graph and the closed forms for the cycle-edge
//! contributions to the edge-Szeged and edge-vertex-Szeged indices.
//!
//! Let `C = v_1 v_2 … v_l v_1` be a cycle whose edge removal leaves exactly
//! `l` components `G_1 … G_l`, with `v_i ∈ G_i`. Write `n_i = |V(G_i)|`,
//! `m_i = |E(G_i)|`, `m = Σ m_i`, and `k = ⌊l/2⌋`. The window sums are
//! `x_i = n_i + n_{i-1} + … + n_{i-k+1}` and `y_i` likewise over `m`, with
//! subscripts modulo `l`.
//!
//! Storage is 0-based: slot `i` of every per-position vector holds the value
//! for position `i + 1`, i.e. for `cycle[i]`. Because every formula only uses
//! differences of subscripts modulo `l`, the shift is harmless.

use thiserror::Error;

use crate::cactus::cycle_edges;
use crate::graph::{Edge, Graph, GraphError};
use crate::szeged::edge_partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("vertex sequence is not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("removing the cycle edges leaves {components} components instead of {length}")]
    NotABlock { length: usize, components: usize },
    #[error("cycle identity mismatch ({quantity}): direct {direct}, closed form {closed}")]
    IdentityMismatch {
        quantity: &'static str,
        direct: i64,
        closed: i64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Component sizes and window sums around one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleContext {
    pub cycle: Vec<usize>,
    /// `⌊l/2⌋`.
    pub half: usize,
    /// `n` of the whole graph.
    pub order: u64,
    /// `n_i`.
    pub comp_vertices: Vec<u64>,
    /// `m_i`.
    pub comp_edges: Vec<u64>,
    /// `x_i`.
    pub window_vertices: Vec<u64>,
    /// `y_i`.
    pub window_edges: Vec<u64>,
    /// `m = Σ m_i = |E(G)| - l`.
    pub off_cycle_edges: u64,
}

impl CycleContext {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.cycle.len() % 2 == 1
    }

    /// Index of position `i - k` (the position equidistant from both ends of
    /// edge `e_i` on an odd cycle).
    fn opposite(&self, i: usize) -> usize {
        (i + self.len() - self.half) % self.len()
    }

    /// Whether at most one component carries edges, which is exactly when
    /// both cycle sums meet their lower envelopes `f` and `g`.
    pub fn attains_envelope(&self) -> bool {
        self.comp_edges.iter().filter(|&&m| m > 0).count() <= 1
    }
}

/// Builds the [`CycleContext`] for `cycle`, given as consecutive vertices.
pub fn cycle_components(g: &Graph, cycle: &[usize]) -> Result<CycleContext, CycleError> {
    let l = cycle.len();
    if l < 3 {
        return Err(CycleError::CycleTooShort(l));
    }
    for &v in cycle {
        g.check_vertex(v)?;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(CycleError::NotACycle("repeated vertex".into()));
    }
    let edges = cycle_edges(cycle);
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
        return Err(CycleError::NotACycle(format!("missing edge ({a}, {b})")));
    }
    g.require_connected()?;

    let mut owner = vec![usize::MAX; g.vertex_count()];
    let mut comp_vertices = Vec::with_capacity(l);
    let mut comp_edges = Vec::with_capacity(l);
    for (i, &v) in cycle.iter().enumerate() {
        let (verts, m_i) = g.component_without(v, &edges);
        for w in verts.iter().copied() {
            if owner[w] != usize::MAX {
                let components = distinct_components(g, &edges);
                return Err(CycleError::NotABlock {
                    length: l,
                    components,
                });
            }
            owner[w] = i;
        }
        comp_vertices.push(verts.len() as u64);
        comp_edges.push(m_i as u64);
    }

    let half = l / 2;
    let window_vertices = rolling_window(&comp_vertices, half);
    let window_edges = rolling_window(&comp_edges, half);
    let off_cycle_edges = comp_edges.iter().sum();
    debug_assert_eq!(off_cycle_edges as usize + l, g.edge_count());
    Ok(CycleContext {
        cycle: cycle.to_vec(),
        half,
        order: g.vertex_count() as u64,
        comp_vertices,
        comp_edges,
        window_vertices,
        window_edges,
        off_cycle_edges,
    })
}

fn distinct_components(g: &Graph, blocked: &[Edge]) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut count = 0;
    for s in 0..g.vertex_count() {
        if !seen[s] {
            count += 1;
            for w in g.component_without(s, blocked).0 {
                seen[w] = true;
            }
        }
    }
    count
}

/// `out[i] = values[i] + values[i-1] + … + values[i-width+1]` (indices mod
/// `len`), by one direct sum and then `out[i] = out[i-1] + values[i] -
/// values[i-width]`.
fn rolling_window(values: &[u64], width: usize) -> Vec<u64> {
    let l = values.len();
    let mut out = Vec::with_capacity(l);
    let first: u64 = (0..width).map(|j| values[(l - j) % l]).sum();
    out.push(first);
    for i in 1..l {
        let prev = out[i - 1];
        out.push(prev + values[i] - values[(i + l - width) % l]);
    }
    out
}

/// Lower envelope of the cycle-edge sum of `m_u·m_v`:
/// `2k(k-1)(m+k-1)` for `l = 2k`, `k²(2m+2k+1)` for `l = 2k+1`.
pub fn f_closed(m: u64, l: usize) -> Result<u64, CycleError> {
    if l < 3 {
        return Err(CycleError::CycleTooShort(l));
    }
    let k = (l / 2) as u64;
    Ok(if l.is_multiple_of(2) {
        2 * k * (k - 1) * (m + k - 1)
    } else {
        k * k * (2 * m + 2 * k + 1)
    })
}

/// Lower envelope of the cycle-edge sum of `n_u·m_v + n_v·m_u`:
/// `2k²(n+m) - 2kn` for `l = 2k`, `2k²(n+m)` for `l = 2k+1`.
pub fn g_closed(n: u64, m: u64, l: usize) -> Result<u64, CycleError> {
    if l < 3 {
        return Err(CycleError::CycleTooShort(l));
    }
    let k = (l / 2) as u64;
    Ok(if l.is_multiple_of(2) {
        2 * k * k * (n + m) - 2 * k * n
    } else {
        2 * k * k * (n + m)
    })
}

/// Sums over the cycle edges `e_i = v_i v_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleEdgeSums {
    /// `Σ m_{v_i}(e_i) · m_{v_{i+1}}(e_i)`.
    pub products: u64,
    /// `Σ n_{v_i} m_{v_{i+1}} + n_{v_{i+1}} m_{v_i}`.
    pub mixed: u64,
}

/// Cycle-edge sums measured directly from distance partitions.
pub fn direct_cycle_sums(g: &Graph, ctx: &CycleContext) -> Result<CycleEdgeSums, CycleError> {
    let l = ctx.len();
    let mut sums = CycleEdgeSums {
        products: 0,
        mixed: 0,
    };
    for i in 0..l {
        let p = edge_partition(g, ctx.cycle[i], ctx.cycle[(i + 1) % l])?;
        sums.products += p.edge_product();
        sums.mixed += p.mixed_sum();
    }
    Ok(sums)
}

/// Cycle-edge sums from the context alone: the envelope plus the window
/// correction terms. Signed so that a broken context shows up as a mismatch
/// rather than an overflow.
pub fn closed_cycle_sums(ctx: &CycleContext) -> Result<(i64, i64), CycleError> {
    let l = ctx.len();
    let k = ctx.half as i64;
    let n = ctx.order as i64;
    let m = ctx.off_cycle_edges as i64;
    let f = f_closed(ctx.off_cycle_edges, l)? as i64;
    let g = g_closed(ctx.order, ctx.off_cycle_edges, l)? as i64;
    let (mut products, mut mixed) = (f, g);
    for i in 0..l {
        let x = ctx.window_vertices[i] as i64;
        let y = ctx.window_edges[i] as i64;
        // On odd cycles the component at the opposite position is equidistant.
        let (far_m, far_n) = if ctx.is_odd() {
            let j = ctx.opposite(i);
            (ctx.comp_edges[j] as i64, ctx.comp_vertices[j] as i64)
        } else {
            (0, 0)
        };
        products += y * (m - far_m - y);
        mixed += (x - k) * (m - far_m - y) + y * (n - far_n - x - k);
    }
    Ok((products, mixed))
}

/// Computes the cycle-edge sums both directly and via the closed identities
/// and fails with [`CycleError::IdentityMismatch`] if they disagree.
pub fn cycle_edge_sums(g: &Graph, ctx: &CycleContext) -> Result<CycleEdgeSums, CycleError> {
    let direct = direct_cycle_sums(g, ctx)?;
    let (products, mixed) = closed_cycle_sums(ctx)?;
    if direct.products as i64 != products {
        return Err(CycleError::IdentityMismatch {
            quantity: "edge products",
            direct: direct.products as i64,
            closed: products,
        });
    }
    if direct.mixed as i64 != mixed {
        return Err(CycleError::IdentityMismatch {
            quantity: "mixed products",
            direct: direct.mixed as i64,
            closed: mixed,
        });
    }
    Ok(direct)
}

/// Result of checking how attaching a graph at one vertex shifts the
/// partition counts of the host's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftCheck {
    pub edges_checked: usize,
    pub counterexample: Option<ShiftWitness>,
}

impl ShiftCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftWitness {
    /// Host edge, oriented so that `endpoint` is its first vertex.
    pub edge: Edge,
    pub endpoint: usize,
    pub expected: (u64, u64),
    pub found: (u64, u64),
}

/// Identifies vertex `host_vertex` of `host` with vertex `guest_vertex` of
/// `guest`. Host vertices keep their labels; the other guest vertices follow
/// in increasing order.
pub fn glue(
    host: &Graph,
    host_vertex: usize,
    guest: &Graph,
    guest_vertex: usize,
) -> Result<Graph, GraphError> {
    host.check_vertex(host_vertex)?;
    guest.check_vertex(guest_vertex)?;
    let base = host.vertex_count();
    let map = |w: usize| match w.cmp(&guest_vertex) {
        std::cmp::Ordering::Equal => host_vertex,
        std::cmp::Ordering::Less => base + w,
        std::cmp::Ordering::Greater => base + w - 1,
    };
    let n = base + guest.vertex_count() - 1;
    Graph::new(
        n,
        host.edges()
            .iter()
            .copied()
            .chain(guest.edges().iter().map(|&(a, b)| (map(a), map(b)))),
    )
}

/// For every edge `w1 w2` of the connected `host` and both of its endpoints,
/// checks that gluing `guest` at `host_vertex` raises the vertex count on
/// that side by `|V(guest)| - 1` and the edge count by `|E(guest)|` when
/// `host_vertex` is strictly closer to that endpoint, and leaves both
/// unchanged otherwise.
pub fn attachment_shift_check(
    host: &Graph,
    host_vertex: usize,
    guest: &Graph,
    guest_vertex: usize,
) -> Result<ShiftCheck, GraphError> {
    host.require_connected()?;
    guest.require_connected()?;
    let glued = glue(host, host_vertex, guest, guest_vertex)?;
    let dv = guest.vertex_count() as u64 - 1;
    let de = guest.edge_count() as u64;
    let d_host = host.connected_distances(host_vertex);
    let mut edges_checked = 0;
    for &(a, b) in host.edges() {
        edges_checked += 1;
        for (w1, w2) in [(a, b), (b, a)] {
            let before = edge_partition(host, w1, w2)?;
            let after = edge_partition(&glued, w1, w2)?;
            let delta = u64::from(d_host[w1] < d_host[w2]);
            let expected = (before.n_u + delta * dv, before.m_u + delta * de);
            let found = (after.n_u, after.m_u);
            if expected != found {
                return Ok(ShiftCheck {
                    edges_checked,
                    counterexample: Some(ShiftWitness {
                        edge: (w1, w2),
                        endpoint: w1,
                        expected,
                        found,
                    }),
                });
            }
        }
    }
    Ok(ShiftCheck {
        edges_checked,
        counterexample: None,
    })
}

/// Sums of `m_u·m_v` and `n_u·m_v + n_v·m_u` over the edges of `host`, as
/// they sit inside `glued` (host labels must be preserved, as by [`glue`]).
pub fn host_edge_sums(host: &Graph, glued: &Graph) -> Result<CycleEdgeSums, GraphError> {
    let mut sums = CycleEdgeSums {
        products: 0,
        mixed: 0,
    };
    for &(a, b) in host.edges() {
        let p = edge_partition(glued, a, b)?;
        sums.products += p.edge_product();
        sums.mixed += p.mixed_sum();
    }
    Ok(sums)
}

/// Swap invariance: gluing two guests of equal order and size at the same
/// host vertex gives identical host-edge sums. Returns both sums.
pub fn swap_invariance_check(
    host: &Graph,
    host_vertex: usize,
    first: (&Graph, usize),
    second: (&Graph, usize),
) -> Result<(CycleEdgeSums, CycleEdgeSums), GraphError> {
    let g1 = glue(host, host_vertex, first.0, first.1)?;
    let g2 = glue(host, host_vertex, second.0, second.1)?;
    Ok((host_edge_sums(host, &g1)?, host_edge_sums(host, &g2)?))
}
