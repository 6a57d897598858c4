//! Non-induced subgraph containment for small patterns.

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::limits::Limits;

/// Whether some injective map sends every edge of `pattern` to an edge of
/// `host`. Non-edges of the pattern are unconstrained.
pub fn contains_subgraph(host: &BaseGraph, pattern: &BaseGraph) -> Result<bool> {
    contains_subgraph_with_limit(host, pattern, Limits::default().max_pattern_vertices)
}

pub fn contains_subgraph_with_limit(
    host: &BaseGraph,
    pattern: &BaseGraph,
    max_pattern: usize,
) -> Result<bool> {
    let k = pattern.vertex_count();
    if k > max_pattern {
        return Err(Error::too_large(
            "pattern vertex count",
            k as u128,
            max_pattern as u128,
        ));
    }
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(false);
    }

    // order pattern vertices: highest degree first, then most links to the placed ones
    let pdeg: Vec<usize> = (0..k)
        .map(|v| pattern.row(v).count_ones() as usize)
        .collect();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u128;
    while order.len() < k {
        let v = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (pattern.row(v) & placed).count_ones(),
                    pdeg[v],
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(v);
        placed |= 1 << v;
    }
    let hdeg: Vec<usize> = (0..host.vertex_count())
        .map(|v| host.row(v).count_ones() as usize)
        .collect();
    // host vertices able to take each pattern position, by degree
    let fits: Vec<u128> = order
        .iter()
        .map(|&pv| {
            (0..host.vertex_count())
                .filter(|&h| hdeg[h] >= pdeg[pv])
                .fold(0u128, |acc, h| acc | 1 << h)
        })
        .collect();
    // for each position, the earlier positions it must be adjacent to
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &pv)| {
            (0..i)
                .filter(|&j| pattern.row(pv) >> order[j] & 1 == 1)
                .collect()
        })
        .collect();

    let mut image = vec![0usize; k];
    Ok(extend(host, &fits, &back, &mut image, 0, 0))
}

fn extend(
    host: &BaseGraph,
    fits: &[u128],
    back: &[Vec<usize>],
    image: &mut [usize],
    pos: usize,
    used: u128,
) -> bool {
    if pos == fits.len() {
        return true;
    }
    let mut cand = fits[pos] & !used;
    for &j in &back[pos] {
        cand &= host.row(image[j]);
    }
    while cand != 0 {
        let h = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        image[pos] = h;
        if extend(host, fits, back, image, pos + 1, used | 1 << h) {
            return true;
        }
    }
    false
}
