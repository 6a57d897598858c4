//! Exact clique detection: branch and bound over bitsets with greedy
//! colouring bounds.

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::limits::Limits;

/// Whether `g` contains a clique on `l` vertices.
pub fn has_clique(g: &BaseGraph, l: usize) -> Result<bool> {
    has_clique_with_limit(g, l, Limits::default().max_clique_vertices)
}

pub fn has_clique_with_limit(g: &BaseGraph, l: usize, max_vertices: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::too_large(
            "clique search vertex count",
            n as u128,
            max_vertices as u128,
        ));
    }
    if l == 0 {
        return Ok(true);
    }
    if l > n {
        return Ok(false);
    }
    if l == 1 {
        return Ok(true);
    }
    Ok(expand(g, g.full_mask(), 0, l))
}

/// Size of a largest clique.
pub fn clique_number(g: &BaseGraph) -> usize {
    let mut k = 1;
    while k < g.vertex_count() && expand(g, g.full_mask(), 0, k + 1) {
        k += 1;
    }
    k
}

/// Greedy colouring of `cand`: vertices in colour order with their colour.
fn colour_order(g: &BaseGraph, cand: u128, order: &mut Vec<(usize, usize)>) {
    order.clear();
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !g.row(v) & !(1u128 << v);
            uncoloured &= !(1u128 << v);
            order.push((v, colour));
        }
    }
}

fn expand(g: &BaseGraph, mut cand: u128, depth: usize, target: usize) -> bool {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    colour_order(g, cand, &mut order);
    for &(v, colour) in order.iter().rev() {
        // colours bound the clique size inside what remains of cand
        if depth + colour < target {
            return false;
        }
        if depth + 1 == target {
            return true;
        }
        let next = cand & g.row(v);
        if depth + 1 + next.count_ones() as usize >= target && expand(g, next, depth + 1, target) {
            return true;
        }
        cand &= !(1u128 << v);
    }
    false
}
