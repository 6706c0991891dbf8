//! Index-decreasing rewrites of cacti and the driver that reduces any
//! cactus of order at least 5 to the triangle bundle with pendant edges.
//!
//! Each rewrite keeps the vertex count, edge count and number of cycles.
//! Every rewrite also has a closed-form decrease of `(Sz_e, 2·Sz_ev)`; the
//! driver measures the actual decrease on every step and refuses to continue
//! if the two disagree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cactus::{decompose_blocks, CycleBlock};
use crate::cycle::{cycle_components, direct_cycle_sums, f_closed, g_closed, CycleError};
use crate::graph::{Edge, Graph, GraphError};
use crate::szeged::{index_pair, IndexPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("({0}, {1}) is not a cut edge")]
    NotCutEdge(usize, usize),
    #[error("endpoint {0} of the cut edge is pendant")]
    EndpointIsPendant(usize),
    #[error("not a cycle block: {0}")]
    NotACycleBlock(CycleError),
    #[error("vertex {0} is not on the cycle")]
    TargetNotOnCycle(usize),
    #[error("cycle is not an end-block anchored at vertex {0}")]
    NotEndBlock(usize),
    #[error("cycle of length {0} is too short for this rewrite")]
    CycleTooShort(usize),
    #[error("graph of order {0} is too small (need at least 5 vertices)")]
    GraphTooSmall(usize),
    #[error("rewrite invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// Contract a cut edge with non-pendant ends and re-hang it as a pendant.
    CutEdgeContraction,
    /// Move everything hanging off a cycle onto one of its vertices.
    BranchRelocation,
    /// Shorten an end-block cycle of length at least 5 by two.
    CycleShrink,
    /// Turn an end-block 4-cycle into a triangle plus a pendant.
    C4Collapse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Site {
    Edge {
        u: usize,
        v: usize,
    },
    /// `vertices[0]` is the anchor (target or end-block hub).
    Cycle {
        vertices: Vec<usize>,
    },
}

/// Signed decrease `before - after`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Delta {
    pub sz_e: i64,
    pub sz_ev_x2: i64,
}

impl Delta {
    pub fn between(before: IndexPair, after: IndexPair) -> Self {
        Delta {
            sz_e: before.sz_e as i64 - after.sz_e as i64,
            sz_ev_x2: before.sz_ev_x2 as i64 - after.sz_ev_x2 as i64,
        }
    }

    pub fn is_strict(&self) -> bool {
        self.sz_e > 0 && self.sz_ev_x2 > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformStep {
    pub lemma: Lemma,
    pub site: Site,
    pub before: IndexPair,
    pub after: IndexPair,
    pub delta: Delta,
}

/// Contracts the cut edge `(u1, u2)` into `u1` and re-attaches `u2` as a
/// pendant vertex of `u1`.
pub fn contract_cut_edge(g: &Graph, u1: usize, u2: usize) -> Result<Graph, TransformError> {
    let e = g.require_edge(u1, u2)?;
    if g.component_without(u1, &[e]).0.binary_search(&u2).is_ok() {
        return Err(TransformError::NotCutEdge(u1, u2));
    }
    for x in [u1, u2] {
        if g.degree(x) < 2 {
            return Err(TransformError::EndpointIsPendant(x));
        }
    }
    let rewired = g.edges().iter().filter(|&&x| x != e).map(|&(a, b)| {
        let a = if a == u2 { u1 } else { a };
        let b = if b == u2 { u1 } else { b };
        (a, b)
    });
    Ok(Graph::new(
        g.vertex_count(),
        rewired.chain(std::iter::once((u1, u2))),
    )?)
}

/// Closed-form decrease for [`contract_cut_edge`]: with `G1`, `G2` the two
/// sides of the bridge, `|E1||E2|` and `(|V1|-1)|E2| + (|V2|-1)|E1|`.
pub fn contraction_delta(g: &Graph, u1: usize, u2: usize) -> Result<Delta, TransformError> {
    let e = g.require_edge(u1, u2)?;
    let (v1, e1) = g.component_without(u1, &[e]);
    let (v2, e2) = g.component_without(u2, &[e]);
    if v1.binary_search(&u2).is_ok() {
        return Err(TransformError::NotCutEdge(u1, u2));
    }
    let (n1, n2, e1, e2) = (v1.len() as i64, v2.len() as i64, e1 as i64, e2 as i64);
    Ok(Delta {
        sz_e: e1 * e2,
        sz_ev_x2: (n1 - 1) * e2 + (n2 - 1) * e1,
    })
}

/// Re-attaches every off-cycle edge at a cycle vertex other than `target`
/// to `target`, making the cycle an end-block anchored there.
pub fn relocate_branches(
    g: &Graph,
    cycle: &[usize],
    target: usize,
) -> Result<Graph, TransformError> {
    cycle_components(g, cycle).map_err(TransformError::NotACycleBlock)?;
    if !cycle.contains(&target) {
        return Err(TransformError::TargetNotOnCycle(target));
    }
    let l = cycle.len();
    let on_cycle_edge = |a: usize, b: usize| {
        (0..l).any(|i| {
            let (x, y) = (cycle[i], cycle[(i + 1) % l]);
            (x, y) == (a, b) || (y, x) == (a, b)
        })
    };
    let moved = g.edges().iter().map(|&(a, b)| {
        if on_cycle_edge(a, b) {
            (a, b)
        } else if a != target && cycle.contains(&a) {
            (target, b)
        } else if b != target && cycle.contains(&b) {
            (a, target)
        } else {
            (a, b)
        }
    });
    Ok(Graph::new(g.vertex_count(), moved)?)
}

/// Closed-form decrease for [`relocate_branches`]: the cycle-edge sums of
/// `g` minus their envelopes `f(m, l)` and `g(n, m, l)`, which is what the
/// relocated cycle attains. Edges off the cycle are unaffected.
pub fn relocation_delta(g: &Graph, cycle: &[usize]) -> Result<Delta, TransformError> {
    let ctx = cycle_components(g, cycle).map_err(TransformError::NotACycleBlock)?;
    let sums = direct_cycle_sums(g, &ctx).map_err(TransformError::NotACycleBlock)?;
    let f = f_closed(ctx.off_cycle_edges, ctx.len()).map_err(TransformError::NotACycleBlock)?;
    let gg = g_closed(ctx.order, ctx.off_cycle_edges, ctx.len())
        .map_err(TransformError::NotACycleBlock)?;
    Ok(Delta {
        sz_e: sums.products as i64 - f as i64,
        sz_ev_x2: sums.mixed as i64 - gg as i64,
    })
}

fn require_end_block(g: &Graph, cycle: &[usize]) -> Result<(), TransformError> {
    cycle_components(g, cycle).map_err(TransformError::NotACycleBlock)?;
    if cycle[1..].iter().any(|&v| g.degree(v) != 2) {
        return Err(TransformError::NotEndBlock(cycle[0]));
    }
    Ok(())
}

/// Shortens the end-block cycle `v1 v2 … vr` (hub `v1 = cycle[0]`, `r >= 5`)
/// by replacing `v2v3` and `v(r-1)vr` with `v1v3` and `v1v(r-1)`.
pub fn shrink_cycle(g: &Graph, cycle: &[usize]) -> Result<Graph, TransformError> {
    let r = cycle.len();
    if r < 5 {
        return Err(TransformError::CycleTooShort(r));
    }
    require_end_block(g, cycle)?;
    let (v1, v2, v3) = (cycle[0], cycle[1], cycle[2]);
    let (vr1, vr) = (cycle[r - 2], cycle[r - 1]);
    Ok(g.with_edges_replaced(&[(v2, v3), (vr1, vr)], &[(v1, v3), (v1, vr1)])?)
}

/// Closed-form decrease for [`shrink_cycle`] on a graph of order `n` whose
/// end-block cycle has length `r` and with `m` edges off the cycle.
pub fn shrink_delta(n: u64, m: u64, r: usize) -> Delta {
    let k = (r / 2) as i64;
    let (n, m) = (n as i64, m as i64);
    if r.is_multiple_of(2) {
        Delta {
            sz_e: 2 * (k - 1) * (2 * m + k),
            sz_ev_x2: 4 * m * (k - 1) + 2 * n * (k - 2) + 2 * k * (n - 2 * k) + 4 * k - 2,
        }
    } else {
        Delta {
            sz_e: 2 * k * k + (4 * k - 3) + 2 * m * (2 * k - 1),
            sz_ev_x2: 4 * m * (k - 1) + 2 * n * (k - 1) + 2 * k * (n - 2 * k) + 4 * k - 4,
        }
    }
}

/// Replaces `v2v3` and `v3v4` of the end-block 4-cycle `v1 v2 v3 v4` (hub
/// `v1 = cycle[0]`) with `v2v4` and `v1v3`.
pub fn collapse_c4(g: &Graph, cycle: &[usize]) -> Result<Graph, TransformError> {
    if cycle.len() != 4 {
        return Err(TransformError::NotACycleBlock(CycleError::NotACycle(
            format!("expected a 4-cycle, got length {}", cycle.len()),
        )));
    }
    if g.vertex_count() < 5 {
        return Err(TransformError::GraphTooSmall(g.vertex_count()));
    }
    require_end_block(g, cycle)?;
    let (v1, v2, v3, v4) = (cycle[0], cycle[1], cycle[2], cycle[3]);
    Ok(g.with_edges_replaced(&[(v2, v3), (v3, v4)], &[(v2, v4), (v1, v3)])?)
}

/// Closed-form decrease for [`collapse_c4`]: `2m - 1` and `2n + 5m - 5`.
pub fn collapse_delta(n: u64, m: u64) -> Delta {
    let (n, m) = (n as i64, m as i64);
    Delta {
        sz_e: 2 * m - 1,
        sz_ev_x2: 2 * n + 5 * m - 5,
    }
}

/// Rotates and orients `cycle` to start at `anchor`, continuing towards the
/// smaller of the anchor's two cycle neighbours.
pub fn anchored_cycle(cycle: &[usize], anchor: usize) -> Option<Vec<usize>> {
    let l = cycle.len();
    let pos = cycle.iter().position(|&v| v == anchor)?;
    let (next, prev) = (cycle[(pos + 1) % l], cycle[(pos + l - 1) % l]);
    Some(if next <= prev {
        (0..l).map(|i| cycle[(pos + i) % l]).collect()
    } else {
        (0..l).map(|i| cycle[(pos + l - i) % l]).collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub graph: Graph,
    pub steps: Vec<TransformStep>,
}

/// The next rewrite the driver would apply, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Contract(Edge),
    Relocate(Vec<usize>),
    Shrink(Vec<usize>),
    Collapse(Vec<usize>),
}

/// Picks the first applicable rewrite in the order contraction, relocation,
/// shrink, collapse, and within a rule the smallest site.
pub fn next_move(g: &Graph) -> Result<Option<Move>, GraphError> {
    let d = decompose_blocks(g)?;
    let heavy = |v: usize| g.degree(v) >= 2;
    if let Some((u, v)) = d.cut_edges().filter(|&(u, v)| heavy(u) && heavy(v)).min() {
        return Ok(Some(Move::Contract((u, v))));
    }
    let mut cycles: Vec<&CycleBlock> = d.cycles().collect();
    cycles.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    if let Some(c) = cycles.iter().find(|c| !c.end_block) {
        let target = relocation_target(g, &c.vertices);
        let seq = anchored_cycle(&c.vertices, target).expect("target is on the cycle");
        return Ok(Some(Move::Relocate(seq)));
    }
    let hub_first = |c: &CycleBlock| {
        let hub = c
            .vertices
            .iter()
            .copied()
            .find(|&v| g.degree(v) > 2)
            .unwrap_or(c.vertices[0]);
        anchored_cycle(&c.vertices, hub).expect("hub is on the cycle")
    };
    if let Some(c) = cycles.iter().find(|c| c.len() >= 5) {
        return Ok(Some(Move::Shrink(hub_first(c))));
    }
    if let Some(c) = cycles.iter().find(|c| c.len() == 4) {
        return Ok(Some(Move::Collapse(hub_first(c))));
    }
    Ok(None)
}

/// The cycle vertex with the most off-cycle edges, smallest label on ties.
fn relocation_target(g: &Graph, cycle: &[usize]) -> usize {
    let ctx = cycle_components(g, cycle).expect("cycle blocks of a cactus have l components");
    let best = (0..cycle.len())
        .max_by_key(|&i| (ctx.comp_edges[i], std::cmp::Reverse(cycle[i])))
        .expect("cycle is non-empty");
    cycle[best]
}

/// Applies one rewrite, measuring and cross-checking its effect.
pub fn apply_move(g: &Graph, mv: &Move) -> Result<(Graph, TransformStep), TransformError> {
    let n = g.vertex_count() as u64;
    let (lemma, site, next, expected) = match mv {
        Move::Contract((u, v)) => (
            Lemma::CutEdgeContraction,
            Site::Edge { u: *u, v: *v },
            contract_cut_edge(g, *u, *v)?,
            contraction_delta(g, *u, *v)?,
        ),
        Move::Relocate(c) => (
            Lemma::BranchRelocation,
            Site::Cycle {
                vertices: c.clone(),
            },
            relocate_branches(g, c, c[0])?,
            relocation_delta(g, c)?,
        ),
        Move::Shrink(c) => (
            Lemma::CycleShrink,
            Site::Cycle {
                vertices: c.clone(),
            },
            shrink_cycle(g, c)?,
            shrink_delta(n, (g.edge_count() - c.len()) as u64, c.len()),
        ),
        Move::Collapse(c) => (
            Lemma::C4Collapse,
            Site::Cycle {
                vertices: c.clone(),
            },
            collapse_c4(g, c)?,
            collapse_delta(n, (g.edge_count() - 4) as u64),
        ),
    };
    let before = index_pair(g)?;
    let after = index_pair(&next)?;
    let delta = Delta::between(before, after);
    if delta != expected {
        return Err(TransformError::InvariantViolated(format!(
            "{lemma:?} at {site:?}: measured {delta:?}, closed form {expected:?}"
        )));
    }
    Ok((
        next,
        TransformStep {
            lemma,
            site,
            before,
            after,
            delta,
        },
    ))
}

/// Rewrites a connected cactus with at least 5 vertices until no rule
/// applies. The result is the bundle of `k` triangles with pendant edges at
/// the hub (a star when `k = 0`).
pub fn normalize_to_extremal(g: &Graph) -> Result<Normalization, TransformError> {
    let shape = decompose_blocks(g)?;
    if g.vertex_count() < 5 {
        return Err(TransformError::GraphTooSmall(g.vertex_count()));
    }
    let (n, m, k) = (g.vertex_count(), g.edge_count(), shape.cycle_count());
    let mut current = g.clone();
    let mut steps = Vec::new();
    while let Some(mv) = next_move(&current)? {
        let (next, step) = apply_move(&current, &mv)?;
        if !step.delta.is_strict() {
            return Err(TransformError::InvariantViolated(format!(
                "{:?} did not strictly decrease both indices: {:?}",
                step.lemma, step.delta
            )));
        }
        let cycles = decompose_blocks(&next)
            .map_err(|e| TransformError::InvariantViolated(format!("result not a cactus: {e}")))?
            .cycle_count();
        if (next.vertex_count(), next.edge_count(), cycles) != (n, m, k) {
            return Err(TransformError::InvariantViolated(format!(
                "{:?} changed (n, m, k)",
                step.lemma
            )));
        }
        steps.push(step);
        current = next;
    }
    Ok(Normalization {
        graph: current,
        steps,
    })
}
