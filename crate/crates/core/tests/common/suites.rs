//! Property suites run both as ordinary tests and by the acceptance runner.
//! Each returns a one-line summary on success and the first failure
//! otherwise.

use rand::Rng;
use szcactus::cactus::{decompose_blocks, is_cactus};
use szcactus::cycle::{
    attachment_shift_check, closed_cycle_sums, cycle_components, direct_cycle_sums, f_closed,
    g_closed, glue, swap_invariance_check,
};
use szcactus::extremal::{build_c0, enumerate_cacti, is_isomorphic};
use szcactus::generate::random_cactus;
use szcactus::io::{parse_graph6, write_graph6};
use szcactus::szeged::index_pair;
use szcactus::transform::{
    collapse_c4, collapse_delta, contract_cut_edge, contraction_delta, normalize_to_extremal,
    relocate_branches, relocation_delta, shrink_cycle, shrink_delta, Delta,
};
use szcactus::Graph;

use super::{random_connected, random_graph, ref_decode, ref_encode, reorient, rng, sorted_edges};

pub type Outcome = Result<String, String>;

#[derive(Default)]
struct IdentityTally {
    blocks: usize,
    at_envelope: usize,
    above_envelope: usize,
}

fn check_cycles(
    graph: &Graph,
    orient: &mut impl FnMut(&[usize]) -> Vec<usize>,
    t: &mut IdentityTally,
) -> Result<(), String> {
    let d = decompose_blocks(graph).map_err(|e| e.to_string())?;
    let n = graph.vertex_count() as u64;
    for c in d.cycles() {
        let seq = orient(&c.vertices);
        let ctx = cycle_components(graph, &seq).map_err(|e| format!("{seq:?}: {e}"))?;
        let direct = direct_cycle_sums(graph, &ctx).map_err(|e| e.to_string())?;
        let closed = closed_cycle_sums(&ctx).map_err(|e| e.to_string())?;
        if (direct.products as i64, direct.mixed as i64) != closed {
            return Err(format!(
                "cycle {seq:?} in {graph:?}: direct {direct:?}, closed {closed:?}"
            ));
        }
        let m = ctx.off_cycle_edges;
        let f = f_closed(m, seq.len()).map_err(|e| e.to_string())?;
        let g = g_closed(n, m, seq.len()).map_err(|e| e.to_string())?;
        if direct.products < f || direct.mixed < g {
            return Err(format!("cycle {seq:?} in {graph:?} below the envelope"));
        }
        if (direct.products == f) != ctx.attains_envelope() {
            return Err(format!(
                "cycle {seq:?} in {graph:?}: products {} vs f {f}, component sizes {:?}",
                direct.products, ctx.comp_edges
            ));
        }
        t.blocks += 1;
        if direct.products == f {
            t.at_envelope += 1;
        } else {
            t.above_envelope += 1;
        }
    }
    Ok(())
}

/// Cycle-edge identities and the envelope equality condition, on every
/// cactus with `n <= exhaustive_max` and on `random` random cacti.
pub fn cycle_identities(exhaustive_max: usize, random: usize) -> Outcome {
    let mut t = IdentityTally::default();
    let mut graphs = 0;
    for n in 3..=exhaustive_max {
        for k in 1..=(n - 1) / 2 {
            for form in enumerate_cacti(n, k, exhaustive_max).map_err(|e| e.to_string())? {
                check_cycles(&form.to_graph(), &mut |c| c.to_vec(), &mut t)?;
                graphs += 1;
            }
        }
    }
    let mut r = rng(22);
    let mut spin = rng(23);
    let mut orient = |c: &[usize]| reorient(&mut spin, c);
    for _ in 0..random {
        let n = r.gen_range(3..=12);
        let k = r.gen_range(1..=(n - 1) / 2);
        let graph = random_cactus(&mut r, n, k).map_err(|e| e.to_string())?;
        check_cycles(&graph, &mut orient, &mut t)?;
        graphs += 1;
    }
    if t.at_envelope == 0 || t.above_envelope == 0 {
        return Err("equality condition not exercised in both directions".into());
    }
    Ok(format!(
        "{graphs} cacti, {} cycle blocks ({} at the envelope, {} above)",
        t.blocks, t.at_envelope, t.above_envelope
    ))
}

/// Attachment shift and swap invariance on `instances` random
/// `(host, guest1, guest2, vertex)` quadruples. The guests share order and
/// size; hosts and guests are arbitrary connected graphs.
pub fn attachment_checks(instances: usize) -> Outcome {
    let mut r = rng(51);
    let mut edges = 0;
    for i in 0..instances {
        let hn = r.gen_range(2..=9);
        let host = if i % 2 == 0 {
            let extra = r.gen_range(0..=hn);
            random_connected(&mut r, hn, extra)
        } else {
            let k = r.gen_range(0..=(hn - 1) / 2);
            random_cactus(&mut r, hn, k).map_err(|e| e.to_string())?
        };
        let gn = r.gen_range(1..=6);
        let max_extra = gn * (gn - 1) / 2 - (gn - 1);
        let extra = r.gen_range(0..=max_extra.min(gn));
        let g1 = random_connected(&mut r, gn, extra);
        let g2 = random_connected(&mut r, gn, extra);
        let u = r.gen_range(0..hn);
        let (v1, v2) = (r.gen_range(0..gn), r.gen_range(0..gn));
        for (guest, v) in [(&g1, v1), (&g2, v2)] {
            let check = attachment_shift_check(&host, u, guest, v).map_err(|e| e.to_string())?;
            if let Some(w) = check.counterexample {
                return Err(format!("shift failed on {host:?} at {u}: {w:?}"));
            }
            edges += check.edges_checked;
        }
        let (s1, s2) =
            swap_invariance_check(&host, u, (&g1, v1), (&g2, v2)).map_err(|e| e.to_string())?;
        if s1 != s2 {
            return Err(format!(
                "swap changed host sums on {host:?} at {u}: {s1:?} vs {s2:?}"
            ));
        }
    }
    Ok(format!("{instances} instances, {edges} host edges"))
}

fn conserved(before: &Graph, after: &Graph) -> bool {
    let k = |g: &Graph| decompose_blocks(g).map(|d| d.cycle_count()).ok();
    is_cactus(after)
        && before.vertex_count() == after.vertex_count()
        && before.edge_count() == after.edge_count()
        && k(before) == k(after)
}

fn measured(before: &Graph, after: &Graph) -> Result<Delta, String> {
    let a = index_pair(before).map_err(|e| e.to_string())?;
    let b = index_pair(after).map_err(|e| e.to_string())?;
    Ok(Delta::between(a, b))
}

/// Measured index decreases against the closed forms for contraction,
/// shrink and collapse on `sites` random applicable sites, plus the
/// relocation delta wherever it changes the graph.
pub fn transform_deltas(sites: usize) -> Outcome {
    let mut r = rng(77);
    let mut tally = [0usize; 4];
    let mut done = 0;
    while done < sites {
        let n = r.gen_range(2..=10);
        let k = r.gen_range(0..=(n - 1) / 2);
        let host = random_cactus(&mut r, n, k).map_err(|e| e.to_string())?;
        let (kind, graph, after, expected) = match done % 3 {
            0 => {
                let d = decompose_blocks(&host).map_err(|e| e.to_string())?;
                let inner: Vec<_> = d
                    .cut_edges()
                    .filter(|&(a, b)| host.degree(a) >= 2 && host.degree(b) >= 2)
                    .collect();
                if inner.is_empty() {
                    continue;
                }
                let (a, b) = inner[r.gen_range(0..inner.len())];
                let (a, b) = if r.gen_bool(0.5) { (a, b) } else { (b, a) };
                let after = contract_cut_edge(&host, a, b).map_err(|e| e.to_string())?;
                let expected = contraction_delta(&host, a, b).map_err(|e| e.to_string())?;
                (0, host, after, expected)
            }
            residue => {
                // Hang a fresh end-block cycle at a random vertex.
                let len = if residue == 1 { r.gen_range(5..=9) } else { 4 };
                if len == 4 && n < 2 {
                    continue;
                }
                let at = r.gen_range(0..n);
                let graph = glue(&host, at, &Graph::cycle(len), 0).map_err(|e| e.to_string())?;
                let cycle: Vec<usize> = std::iter::once(at).chain(n..n + len - 1).collect();
                let (nn, mm) = (
                    graph.vertex_count() as u64,
                    (graph.edge_count() - len) as u64,
                );
                if len == 4 {
                    let after = collapse_c4(&graph, &cycle).map_err(|e| e.to_string())?;
                    (2, graph, after, collapse_delta(nn, mm))
                } else {
                    let after = shrink_cycle(&graph, &cycle).map_err(|e| e.to_string())?;
                    (1, graph, after, shrink_delta(nn, mm, len))
                }
            }
        };
        let delta = measured(&graph, &after)?;
        if delta != expected {
            return Err(format!(
                "{graph:?}: measured {delta:?}, closed form {expected:?}"
            ));
        }
        if !delta.is_strict() {
            return Err(format!("{graph:?}: decrease {delta:?} is not strict"));
        }
        if !conserved(&graph, &after) {
            return Err(format!("{graph:?}: (n, m, k) or cactus property changed"));
        }
        tally[kind] += 1;
        done += 1;
    }
    // Relocation onto any cycle vertex lands exactly on the envelope.
    while tally[3] < sites / 4 {
        let n = r.gen_range(5..=12);
        let k = r.gen_range(1..=(n - 1) / 2);
        let graph = random_cactus(&mut r, n, k).map_err(|e| e.to_string())?;
        let d = decompose_blocks(&graph).map_err(|e| e.to_string())?;
        for c in d.cycles() {
            let target = c.vertices[r.gen_range(0..c.len())];
            let after =
                relocate_branches(&graph, &c.vertices, target).map_err(|e| e.to_string())?;
            let expected = relocation_delta(&graph, &c.vertices).map_err(|e| e.to_string())?;
            let delta = measured(&graph, &after)?;
            if delta != expected || !conserved(&graph, &after) {
                return Err(format!(
                    "relocation on {graph:?} at {target}: {delta:?} vs {expected:?}"
                ));
            }
            let ctx = cycle_components(&graph, &c.vertices).map_err(|e| e.to_string())?;
            let loaded = ctx.comp_edges.iter().filter(|&&m| m > 0).count();
            // Two or more branch-carrying vertices: strict decrease. One:
            // the result is the same cactus up to relabelling.
            if (loaded >= 2) != delta.is_strict()
                || (loaded < 2
                    && delta
                        != Delta {
                            sz_e: 0,
                            sz_ev_x2: 0,
                        })
            {
                return Err(format!(
                    "relocation on {graph:?} at {target}: unexpected {delta:?}"
                ));
            }
            if c.end_block
                && ctx.comp_edges[c.vertices.iter().position(|&v| v == target).unwrap()] > 0
                && after != graph
            {
                return Err(format!(
                    "relocation onto the anchor of an end-block changed {graph:?}"
                ));
            }
            tally[3] += 1;
        }
    }
    Ok(format!(
        "{} contractions, {} shrinks, {} C4 collapses, {} relocations",
        tally[0], tally[1], tally[2], tally[3]
    ))
}

/// Normalises every cactus of order `5..=max_n` and checks the endpoint and
/// the trace.
pub fn normalization(max_n: usize) -> Outcome {
    let mut graphs = 0;
    let mut steps = 0;
    for n in 5..=max_n {
        for k in 0..=(n - 1) / 2 {
            let target = build_c0(n, k).map_err(|e| e.to_string())?;
            for form in enumerate_cacti(n, k, max_n).map_err(|e| e.to_string())? {
                let g = form.to_graph();
                let out = normalize_to_extremal(&g).map_err(|e| format!("{form}: {e}"))?;
                if !is_isomorphic(&out.graph, &target).map_err(|e| e.to_string())? {
                    return Err(format!(
                        "{form} normalised to a graph not isomorphic to C0({n},{k})"
                    ));
                }
                let mut last = index_pair(&g).map_err(|e| e.to_string())?;
                for s in &out.steps {
                    if s.before != last
                        || s.after.sz_e >= s.before.sz_e
                        || s.after.sz_ev_x2 >= s.before.sz_ev_x2
                    {
                        return Err(format!("{form}: trace not strictly decreasing at {s:?}"));
                    }
                    last = s.after;
                }
                if last != index_pair(&out.graph).map_err(|e| e.to_string())? {
                    return Err(format!("{form}: trace does not end at the output"));
                }
                graphs += 1;
                steps += out.steps.len();
            }
        }
    }
    Ok(format!("{graphs} cacti, {steps} steps"))
}

/// `W = Sz` on every free tree up to `max_n` vertices.
pub fn tree_identity(max_n: usize) -> Outcome {
    let mut trees = 0;
    for n in 1..=max_n {
        let forms = enumerate_cacti(n, 0, max_n).map_err(|e| e.to_string())?;
        if forms.len() != super::FREE_TREES[n] {
            return Err(format!(
                "{} trees of order {n}, expected {}",
                forms.len(),
                super::FREE_TREES[n]
            ));
        }
        for f in forms {
            let r = szcactus::compute_indices(&f.to_graph()).map_err(|e| e.to_string())?;
            if r.wiener != r.szeged {
                return Err(format!("{f}: W = {} but Sz = {}", r.wiener, r.szeged));
            }
            trees += 1;
        }
    }
    Ok(format!("{trees} trees"))
}

/// graph6 round trip and agreement with the reference codec.
pub fn graph6_codec(graphs: usize) -> Outcome {
    let mut r = rng(6);
    for i in 0..graphs {
        let n = if i % 10 == 0 {
            r.gen_range(63..=100)
        } else {
            r.gen_range(0..=40)
        };
        let p = r.gen_range(0.0..1.0);
        let g = random_graph(&mut r, n, p);
        let s = write_graph6(&g).map_err(|e| e.to_string())?;
        if s != ref_encode(n, g.edges()) {
            return Err(format!("encoding of {g:?} differs from the reference"));
        }
        if ref_decode(&s) != (n, sorted_edges(&g)) {
            return Err(format!("reference decoding of {s} differs"));
        }
        if parse_graph6(s.as_bytes()).map_err(|e| e.to_string())? != g {
            return Err(format!("round trip of {s} failed"));
        }
    }
    Ok(format!("{graphs} random graphs"))
}
