//! Isomorph-free generation of connected cacti.
//!
//! Every connected cactus arises from a smaller one by hanging a new leaf
//! block (a pendant edge or a fresh cycle) at one vertex. The generator
//! therefore grows cacti level by level, keeping one representative per
//! isomorphism class at each `(order, cycles)` state and pruning states that
//! can no longer reach the requested order and cycle count.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use super::ExtremalError;
use crate::graph::Graph;

/// Iso-classes of connected cacti of order `n` with `k` cycles, as canonical
/// forms in increasing order. Empty when no such cactus exists.
pub fn enumerate_cacti(
    n: usize,
    k: usize,
    ceiling: usize,
) -> Result<Vec<CanonicalForm>, ExtremalError> {
    if n > ceiling {
        return Err(ExtremalError::TooLarge { n, limit: ceiling });
    }
    if n == 0 || 2 * k + 1 > n {
        return Ok(Vec::new());
    }
    // A state (v, c) can still reach (n, k) iff c <= k and every missing
    // cycle gets at least two new vertices.
    let viable = |v: usize, c: usize| c <= k && v <= n && n - v >= 2 * (k - c);

    let mut levels: Vec<Vec<BTreeSet<CanonicalForm>>> = vec![vec![BTreeSet::new(); k + 1]; n + 1];
    levels[1][0].insert(canonical_form(&Graph::empty(1)));
    for v in 1..n {
        for c in 0..=k {
            if levels[v][c].is_empty() {
                continue;
            }
            let parents: Vec<CanonicalForm> = levels[v][c].iter().cloned().collect();
            let children: Vec<(usize, usize, CanonicalForm)> = parents
                .par_iter()
                .flat_map_iter(|p| grow(&p.to_graph(), c, &viable))
                .collect();
            for (cv, cc, form) in children {
                levels[cv][cc].insert(form);
            }
        }
    }
    Ok(std::mem::take(&mut levels[n][k]).into_iter().collect())
}

/// All one-block extensions of `g` (which has `cycles` cycles) that stay
/// viable, as `(order, cycles, canonical form)`.
fn grow(
    g: &Graph,
    cycles: usize,
    viable: &(impl Fn(usize, usize) -> bool + Sync),
) -> Vec<(usize, usize, CanonicalForm)> {
    let v = g.vertex_count();
    let mut out = Vec::new();
    for anchor in 0..v {
        if viable(v + 1, cycles) {
            let h = Graph::new(v + 1, g.edges().iter().copied().chain([(anchor, v)]))
                .expect("pendant extension is simple");
            out.push((v + 1, cycles, canonical_form(&h)));
        }
        for len in 3.. {
            let grown = v + len - 1;
            if !viable(grown, cycles + 1) {
                break;
            }
            let ring = std::iter::once(anchor).chain(v..grown).collect::<Vec<_>>();
            let ring_edges = (0..len).map(|i| (ring[i], ring[(i + 1) % len]));
            let h = Graph::new(grown, g.edges().iter().copied().chain(ring_edges))
                .expect("cycle extension is simple");
            out.push((grown, cycles + 1, canonical_form(&h)));
        }
    }
    out
}
