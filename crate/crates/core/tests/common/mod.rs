//! Helpers shared by the integration tests. Everything here is written
//! independently of the library internals it is used to check.
#![allow(dead_code)]

pub mod suites;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use szcactus::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Iso-class counts of connected cacti by `(n, k)`, from a filter over the
/// graph atlas.
pub const ISOCLASS_COUNTS: &[((usize, usize), usize)] = &[
    ((1, 0), 1),
    ((2, 0), 1),
    ((3, 0), 1),
    ((3, 1), 1),
    ((4, 0), 2),
    ((4, 1), 2),
    ((5, 0), 3),
    ((5, 1), 5),
    ((5, 2), 1),
    ((6, 0), 6),
    ((6, 1), 13),
    ((6, 2), 4),
    ((7, 0), 11),
    ((7, 1), 33),
    ((7, 2), 17),
    ((7, 3), 2),
];

/// Total iso-classes of connected cacti of order `n` (index = n), OEIS A000083.
pub const CACTI_BY_ORDER: [usize; 10] = [0, 1, 1, 2, 4, 9, 23, 63, 188, 596];

/// Free trees of order `n` (index = n).
pub const FREE_TREES: [usize; 10] = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47];

/// Labelled connected cacti on `0..n` by `(n, k)`, from the same filter
/// weighted by `n!/|Aut|`.
pub const LABELLED_COUNTS: &[((usize, usize), u64)] = &[
    ((1, 0), 1),
    ((2, 0), 1),
    ((3, 0), 3),
    ((3, 1), 1),
    ((4, 0), 16),
    ((4, 1), 15),
    ((5, 0), 125),
    ((5, 1), 222),
    ((5, 2), 15),
    ((6, 0), 1296),
    ((6, 1), 3660),
    ((6, 2), 720),
    ((7, 0), 16807),
    ((7, 1), 68295),
    ((7, 2), 26145),
    ((7, 3), 735),
];

/// Reference graph6 encoder working from an adjacency matrix.
pub fn ref_encode(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for row in adj.iter().take(j) {
            bits.push(row[j]);
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Reference graph6 decoder; returns the order and sorted `(i, j)` pairs
/// with `i < j`.
pub fn ref_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
    let b: Vec<u32> = s.bytes().map(|c| c as u32 - 63).collect();
    let (n, rest) = if b[0] != 63 {
        (b[0] as usize, &b[1..])
    } else if b[1] != 63 {
        ((b[1] << 12 | b[2] << 6 | b[3]) as usize, &b[4..])
    } else {
        let mut n = 0usize;
        for &x in &b[2..8] {
            n = n << 6 | x as usize;
        }
        (n, &b[8..])
    };
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if rest[idx / 6] >> (5 - idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    edges.sort_unstable();
    (n, edges)
}

pub fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g
        .edges()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    e.sort_unstable();
    e
}

/// Number of simple `from`-`to` paths avoiding the edge `skip`, stopping
/// early once `cap` are found.
fn count_paths(
    adj: &[Vec<usize>],
    from: usize,
    to: usize,
    skip: (usize, usize),
    cap: usize,
) -> usize {
    fn go(
        adj: &[Vec<usize>],
        at: usize,
        to: usize,
        skip: (usize, usize),
        seen: &mut Vec<bool>,
        found: &mut usize,
        cap: usize,
    ) {
        if at == to {
            *found += 1;
            return;
        }
        for &w in &adj[at] {
            if *found >= cap || seen[w] || (at, w) == skip || (w, at) == skip {
                continue;
            }
            seen[w] = true;
            go(adj, w, to, skip, seen, found, cap);
            seen[w] = false;
        }
    }
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut found = 0;
    go(adj, from, to, skip, &mut seen, &mut found, cap);
    found
}

/// A connected graph is a cactus iff no edge lies on two cycles, i.e. for
/// every edge `uv` there is at most one `u`-`v` path avoiding it.
pub fn oracle_is_cactus(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    edges
        .iter()
        .all(|&(a, b)| count_paths(&adj, a, b, (a, b), 2) <= 1)
}

/// Sum of pairwise BFS distances, from an adjacency matrix.
pub fn oracle_wiener(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut total = 0;
    for s in 0..n {
        let mut d = vec![usize::MAX; n];
        d[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if d[w] == usize::MAX {
                    d[w] = d[v] + 1;
                    q.push_back(w);
                }
            }
        }
        total += d[s + 1..].iter().map(|&x| x as u64).sum::<u64>();
    }
    total
}

/// Uniform random labelled graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Random connected graph: a random recursive tree plus `extra` random
/// non-tree edges where possible.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges).unwrap().relabel(&perm)
}

/// Random rotation and reflection of a cyclic sequence.
pub fn reorient<R: Rng>(rng: &mut R, cycle: &[usize]) -> Vec<usize> {
    let l = cycle.len();
    let start = rng.gen_range(0..l);
    let mut out: Vec<usize> = (0..l).map(|i| cycle[(start + i) % l]).collect();
    if rng.gen_bool(0.5) {
        out[1..].reverse();
    }
    out
}

/// All labelled trees on `0..n`, from Prüfer sequences.
pub fn labelled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::path(n)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            let mut degree = vec![1; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::new(n, edges).unwrap()
        })
        .collect()
}
