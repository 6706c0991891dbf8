//! The triangle bundle `C0(n, k)`, the lower bounds it attains, and
//! exhaustive verification that it is the unique minimiser of both the
//! edge-Szeged and edge-vertex-Szeged indices among cacti of order `n` with
//! `k` cycles.

mod canon;
mod enumerate;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use canon::{automorphism_count, canonical_form, canonical_labeling, CanonicalForm};
pub use enumerate::enumerate_cacti;

use crate::graph::{Graph, GraphError};
use crate::szeged::{index_pair, IndexPair};

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 16;

/// Default enumeration ceiling for command-line runs.
pub const DEFAULT_CEILING: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("no cactus of order {n} has {k} cycles (need n >= 2k + 1)")]
    InfeasibleParameters { n: usize, k: usize },
    #[error("(n, k) = ({n}, {k}) is outside the range of the lower bound (n >= 5)")]
    OutOfTheoremRange { n: usize, k: usize },
    #[error("order {n} exceeds the configured limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bundle of `k` triangles on hub `0` (triangle `i` is `0, 2i-1, 2i`) with
/// pendant vertices `2k+1 .. n-1` at the hub.
pub fn build_c0(n: usize, k: usize) -> Result<Graph, ExtremalError> {
    if n < 2 * k + 1 {
        return Err(ExtremalError::InfeasibleParameters { n, k });
    }
    let triangles = (1..=k).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    let pendants = (2 * k + 1..n).map(|p| (0, p));
    Ok(Graph::new(n, triangles.chain(pendants))?)
}

/// Lower bounds on `Sz_e` and `2·Sz_ev` over cacti of order `n` with `k`
/// cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundPair {
    pub sz_e_min: u64,
    pub sz_ev_x2_min: u64,
}

impl BoundPair {
    pub fn as_pair(&self) -> IndexPair {
        IndexPair {
            sz_e: self.sz_e_min,
            sz_ev_x2: self.sz_ev_x2_min,
        }
    }
}

/// `2kn + 2k² - 5k` and `n² - 3n + 3kn - 5k + 2`, evaluated without any
/// range check. These are the index values of `C0(n, k)`.
pub fn bound_formulas(n: usize, k: usize) -> BoundPair {
    let (n, k) = (n as i64, k as i64);
    let sz_e = 2 * k * n + 2 * k * k - 5 * k;
    let sz_ev_x2 = n * n - 3 * n + 3 * k * n - 5 * k + 2;
    BoundPair {
        sz_e_min: sz_e.max(0) as u64,
        sz_ev_x2_min: sz_ev_x2.max(0) as u64,
    }
}

/// The lower bounds for `n >= 5` and feasible `k`.
pub fn theorem_bounds(n: usize, k: usize) -> Result<BoundPair, ExtremalError> {
    if n < 2 * k + 1 {
        return Err(ExtremalError::InfeasibleParameters { n, k });
    }
    if n < 5 {
        return Err(ExtremalError::OutOfTheoremRange { n, k });
    }
    Ok(bound_formulas(n, k))
}

/// The bounds minimised over `k >= 1`, attained at `k = 1`: `2n - 3` and
/// `n² - 3`.
pub fn corollary_bounds(n: usize) -> Result<BoundPair, ExtremalError> {
    if n < 5 {
        return Err(ExtremalError::OutOfTheoremRange { n, k: 1 });
    }
    let n = n as u64;
    Ok(BoundPair {
        sz_e_min: 2 * n - 3,
        sz_ev_x2_min: n * n - 3,
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, ExtremalError> {
    for g in [a, b] {
        if g.vertex_count() > ISOMORPHISM_LIMIT {
            return Err(ExtremalError::TooLarge {
                n: g.vertex_count(),
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a) == canonical_form(b))
}

/// Where `(n, k)` sits relative to the proven statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// `n >= 5`, `k >= 1`.
    InRange,
    /// `n >= 5`, `k = 0`: the bound formulas still apply but the
    /// specialisation over `k >= 1` does not.
    NoCycles,
    /// `n < 5`, where the two minimisers can differ.
    BelowOrderFive,
}

impl Scope {
    pub fn of(n: usize, k: usize) -> Self {
        if n < 5 {
            Scope::BelowOrderFive
        } else if k == 0 {
            Scope::NoCycles
        } else {
            Scope::InRange
        }
    }
}

/// A value of one index together with the iso-classes attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attained {
    pub value: u64,
    /// graph6 of the canonical forms, in canonical order.
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub scope: Scope,
    pub count_isoclasses: usize,
    /// Number of labelled cacti on `0..n`, `Σ n!/|Aut(G)|`.
    pub labeled_count: u64,
    pub bounds: BoundPair,
    /// Canonical graph6 of `C0(n, k)`.
    pub extremal_graph: String,
    pub sz_e_min: Attained,
    pub sz_ev_x2_min: Attained,
    pub sz_e_runner_up: Option<Attained>,
    pub sz_ev_x2_runner_up: Option<Attained>,
}

impl VerificationReport {
    pub fn min_matches_bound(&self) -> bool {
        self.sz_e_min.value == self.bounds.sz_e_min
            && self.sz_ev_x2_min.value == self.bounds.sz_ev_x2_min
    }

    /// Each index has exactly one minimising class, and it is `C0(n, k)`.
    pub fn unique_minimizer(&self) -> bool {
        let only_c0 = |a: &Attained| a.graphs.len() == 1 && a.graphs[0] == self.extremal_graph;
        only_c0(&self.sz_e_min) && only_c0(&self.sz_ev_x2_min)
    }

    pub fn passed(&self) -> bool {
        self.min_matches_bound() && self.unique_minimizer()
    }
}

fn smallest_two(values: &[(u64, &CanonicalForm)]) -> (Attained, Option<Attained>) {
    let mut distinct: Vec<u64> = values.iter().map(|&(v, _)| v).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let collect = |target: u64| Attained {
        value: target,
        graphs: values
            .iter()
            .filter(|&&(v, _)| v == target)
            .map(|&(_, f)| f.graph6())
            .collect(),
    };
    (collect(distinct[0]), distinct.get(1).map(|&v| collect(v)))
}

/// Enumerates every cactus of order `n` with `k` cycles and compares the
/// observed minima and minimisers against the bounds and `C0(n, k)`.
pub fn verify_theorem(
    n: usize,
    k: usize,
    ceiling: usize,
) -> Result<VerificationReport, ExtremalError> {
    let extremal = build_c0(n, k)?;
    let classes = enumerate_cacti(n, k, ceiling)?;
    let rows: Vec<(IndexPair, u64)> = classes
        .par_iter()
        .map(|form| {
            let g = form.to_graph();
            let pair = index_pair(&g)?;
            Ok((pair, automorphism_count(&g)))
        })
        .collect::<Result<_, GraphError>>()?;
    let factorial: u64 = (1..=n as u64).product();
    let labeled_count = rows.iter().map(|&(_, aut)| factorial / aut).sum();
    let sz_e: Vec<(u64, &CanonicalForm)> = rows
        .iter()
        .zip(&classes)
        .map(|(r, f)| (r.0.sz_e, f))
        .collect();
    let sz_ev: Vec<(u64, &CanonicalForm)> = rows
        .iter()
        .zip(&classes)
        .map(|(r, f)| (r.0.sz_ev_x2, f))
        .collect();
    let (sz_e_min, sz_e_runner_up) = smallest_two(&sz_e);
    let (sz_ev_x2_min, sz_ev_x2_runner_up) = smallest_two(&sz_ev);
    Ok(VerificationReport {
        n,
        k,
        scope: Scope::of(n, k),
        count_isoclasses: classes.len(),
        labeled_count,
        bounds: bound_formulas(n, k),
        extremal_graph: canonical_form(&extremal).graph6(),
        sz_e_min,
        sz_ev_x2_min,
        sz_e_runner_up,
        sz_ev_x2_runner_up,
    })
}
