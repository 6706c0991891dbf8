//! Random connected cacti with a prescribed order and number of cycles.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::extremal::ExtremalError;
use crate::graph::Graph;

/// Grows a cactus block by block from a single vertex, hanging pendant
/// edges or cycles at uniformly chosen existing vertices, then shuffles the
/// labels. Not uniform over cacti, but every cactus has positive
/// probability.
pub fn random_cactus<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
) -> Result<Graph, ExtremalError> {
    if n == 0 || n < 2 * k + 1 {
        return Err(ExtremalError::InfeasibleParameters { n, k });
    }
    let mut edges = Vec::with_capacity(n - 1 + k);
    let mut order = 1;
    let mut cycles_left = k;
    while order < n {
        let free = n - order;
        let anchor = rng.gen_range(0..order);
        // A pendant edge is allowed only if the remaining cycles still fit.
        let pendant_ok = free > 2 * cycles_left;
        let take_cycle = cycles_left > 0 && (!pendant_ok || rng.gen_bool(0.5));
        if take_cycle {
            // new vertices: at least 2, leaving 2 per remaining cycle
            let max_new = free - 2 * (cycles_left - 1);
            let new = rng.gen_range(2..=max_new);
            let mut ring = vec![anchor];
            ring.extend(order..order + new);
            for i in 0..ring.len() {
                edges.push((ring[i], ring[(i + 1) % ring.len()]));
            }
            order += new;
            cycles_left -= 1;
        } else {
            edges.push((anchor, order));
            order += 1;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Ok(Graph::new(n, edges)?.relabel(&perm))
}
