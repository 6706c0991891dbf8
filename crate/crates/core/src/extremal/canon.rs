//! Canonical forms of small graphs by colour refinement and backtracking.
//!
//! The search individualises one vertex of the first non-singleton cell at
//! each level, refines to a stable colouring, and at the leaves relabels the
//! graph by final colour. The canonical form is the smallest relabelled edge
//! list over all leaves. Twin vertices (same neighbourhood apart from each
//! other) are interchangeable by an automorphism, so only one of them is
//! tried per cell.

use std::fmt;

use crate::graph::{Edge, Graph};
use crate::io::write_graph6;

/// A graph relabelled into canonical position. Two graphs are isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<Edge>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("canonical edges are valid")
    }

    pub fn graph6(&self) -> String {
        write_graph6(&self.to_graph()).expect("small graphs fit graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

/// Canonical form plus the labelling `v -> perm[v]` that produces it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.vertex_count();
    let twin_rep = twin_representatives(g);
    let mut colors = vec![0; n];
    refine(g, &mut colors);
    let mut best: Option<(Vec<Edge>, Vec<usize>)> = None;
    search(g, colors, &twin_rep, &mut best);
    let (edges, perm) = best.unwrap_or_default();
    (CanonicalForm { n, edges }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

fn search(
    g: &Graph,
    mut colors: Vec<usize>,
    twin_rep: &[usize],
    best: &mut Option<(Vec<Edge>, Vec<usize>)>,
) {
    refine(g, &mut colors);
    let n = g.vertex_count();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let mut edges: Vec<Edge> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (colors[u], colors[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|(e, _)| edges < *e) {
            *best = Some((edges, colors));
        }
        return;
    };
    let mut tried_reps: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if tried_reps.contains(&twin_rep[v]) {
            continue;
        }
        tried_reps.push(twin_rep[v]);
        search(g, individualize(&colors, v), twin_rep, best);
    }
}

/// Splits `v` off its cell, placing it first.
fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
    next[v] = 2 * colors[v];
    compress(&mut next);
    next
}

/// Relabels colour values to ranks `0..c`, preserving their order.
fn compress(colors: &mut [usize]) {
    let mut values = colors.to_vec();
    values.sort_unstable();
    values.dedup();
    for c in colors.iter_mut() {
        *c = values.binary_search(c).expect("value present");
    }
}

/// Refines to the coarsest stable colouring below `colors`. New colours are
/// ranks of `(old colour, sorted neighbour colours)`, so the result depends
/// only on the graph structure and the input colouring.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.vertex_count();
    compress(colors);
    let mut count = colors.iter().max().map_or(0, |c| c + 1);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == count {
            return;
        }
        count = distinct.len();
        for (v, sig) in signatures.iter().enumerate() {
            colors[v] = distinct.binary_search(sig).expect("signature present");
        }
    }
}

/// Smallest vertex of each vertex's twin class, where `a` and `b` are twins
/// when `N(a) \ {b} = N(b) \ {a}`.
fn twin_representatives(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let stripped = |a: usize, b: usize| -> Vec<usize> {
        g.neighbors(a).iter().copied().filter(|&w| w != b).collect()
    };
    let mut rep: Vec<usize> = (0..n).collect();
    for b in 0..n {
        for a in 0..b {
            if rep[a] == a && g.degree(a) == g.degree(b) && stripped(a, b) == stripped(b, a) {
                rep[b] = a;
                break;
            }
        }
    }
    rep
}

/// Number of automorphisms by backtracking over the stable colouring.
pub fn automorphism_count(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let mut colors = vec![0; n];
    refine(g, &mut colors);
    // Assign vertices in BFS order so adjacency constraints bite early.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    count_extensions(g, &colors, &order, 0, &mut image, &mut used)
}

fn count_extensions(
    g: &Graph,
    colors: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if depth == order.len() {
        return 1;
    }
    let v = order[depth];
    let mut total = 0;
    for w in 0..g.vertex_count() {
        if used[w] || colors[w] != colors[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == g.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        total += count_extensions(g, colors, order, depth + 1, image, used);
        used[w] = false;
        image[v] = usize::MAX;
    }
    total
}
