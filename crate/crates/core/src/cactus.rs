//! Bridges, biconnected blocks and cactus recognition.

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph, GraphError};

/// A cycle block, stored as a vertex sequence starting at its smallest
/// vertex and continuing towards the smaller of that vertex's two cycle
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBlock {
    pub vertices: Vec<usize>,
    /// All but at most one vertex of the cycle have degree 2 in the graph.
    pub end_block: bool,
}

impl CycleBlock {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        cycle_edges(&self.vertices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    CutEdge(usize, usize),
    Cycle(CycleBlock),
}

impl Block {
    pub fn edge_count(&self) -> usize {
        match self {
            Block::CutEdge(..) => 1,
            Block::Cycle(c) => c.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusDecomposition {
    /// Blocks ordered by their smallest edge.
    pub blocks: Vec<Block>,
}

impl CactusDecomposition {
    pub fn cycle_count(&self) -> usize {
        self.cycles().count()
    }

    pub fn cycles(&self) -> impl Iterator<Item = &CycleBlock> {
        self.blocks.iter().filter_map(|b| match b {
            Block::Cycle(c) => Some(c),
            Block::CutEdge(..) => None,
        })
    }

    pub fn cut_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.blocks.iter().filter_map(|b| match *b {
            Block::CutEdge(u, v) => Some((u, v)),
            Block::Cycle(_) => None,
        })
    }

    pub fn end_block_flags(&self) -> Vec<bool> {
        self.cycles().map(|c| c.end_block).collect()
    }
}

/// Edges of the closed walk `v[0] v[1] … v[l-1] v[0]`, normalised.
pub fn cycle_edges(vertices: &[usize]) -> Vec<Edge> {
    let l = vertices.len();
    (0..l)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Edge sets of the biconnected components (bridges come out as singleton
/// blocks), via an iterative low-link DFS.
pub fn biconnected_edge_sets(g: &Graph) -> Vec<Vec<Edge>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();

    struct Frame {
        v: usize,
        parent: Option<usize>,
        next: usize,
    }

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut calls = vec![Frame {
            v: root,
            parent: None,
            next: 0,
        }];
        while let Some(frame) = calls.last_mut() {
            let v = frame.v;
            let parent = frame.parent;
            if frame.next < g.degree(v) {
                let w = g.neighbors(v)[frame.next];
                frame.next += 1;
                if Some(w) == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    calls.push(Frame {
                        v: w,
                        parent: Some(v),
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                calls.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push((a.min(b), a.max(b)));
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    blocks
}

/// Bridges of `g`: the edges whose removal increases the number of
/// components.
pub fn cut_edges(g: &Graph) -> BTreeSet<Edge> {
    biconnected_edge_sets(g)
        .into_iter()
        .filter(|b| b.len() == 1)
        .map(|b| b[0])
        .collect()
}

/// Splits a connected graph into cut edges and cycle blocks, failing if any
/// block is something else.
pub fn decompose_blocks(g: &Graph) -> Result<CactusDecomposition, GraphError> {
    g.require_connected()?;
    let mut blocks = Vec::new();
    for set in biconnected_edge_sets(g) {
        if set.len() == 1 {
            blocks.push(Block::CutEdge(set[0].0, set[0].1));
            continue;
        }
        let vertices = order_cycle(&set).ok_or_else(|| {
            GraphError::NotCactus(format!(
                "block with {} edges starting at ({}, {}) is not a cycle",
                set.len(),
                set[0].0,
                set[0].1
            ))
        })?;
        let heavy = vertices.iter().filter(|&&v| g.degree(v) > 2).count();
        blocks.push(Block::Cycle(CycleBlock {
            vertices,
            end_block: heavy <= 1,
        }));
    }
    Ok(CactusDecomposition { blocks })
}

pub fn is_cactus(g: &Graph) -> bool {
    decompose_blocks(g).is_ok()
}

/// Orders the edge set of a block as a cycle, or `None` if the edges do not
/// form a single cycle.
fn order_cycle(edges: &[Edge]) -> Option<Vec<usize>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != edges.len() {
        return None;
    }
    let idx = |v: usize| verts.binary_search(&v).expect("vertex of block");
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for &(a, b) in edges {
        nbrs[idx(a)].push(b);
        nbrs[idx(b)].push(a);
    }
    if nbrs.iter().any(|nb| nb.len() != 2) {
        return None;
    }
    let start = verts[0];
    let first = *nbrs[0].iter().min().expect("two neighbours");
    let mut seq = vec![start, first];
    while seq.len() < verts.len() {
        let (prev, cur) = (seq[seq.len() - 2], seq[seq.len() - 1]);
        let next = *nbrs[idx(cur)].iter().find(|&&w| w != prev)?;
        if next == start {
            return None;
        }
        seq.push(next);
    }
    let last = seq[seq.len() - 1];
    nbrs[idx(last)].contains(&start).then_some(seq)
}
