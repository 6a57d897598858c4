//! Canonical labels for small graphs by exhaustive permutation search.
//!
//! The label is the lexicographically largest upper-triangle adjacency string
//! over all vertex orders that list vertices by non-increasing degree. Column
//! `k` of the string (pairs `(0,k), ..., (k-1,k)`) is fixed once the first
//! `k + 1` positions are placed, so partial orders whose prefix already falls
//! below the best string are cut.

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::limits::{Limits, MAX_CANONICAL_VERTICES};

/// Isomorphism-invariant label: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel {
    n: u8,
    bits: u128,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalLabel {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// The canonical representative: vertex `k + 1` is the vertex placed at
    /// position `k`.
    pub fn to_graph(&self) -> BaseGraph {
        let n = self.vertex_count();
        let total = pair_count(n);
        let mut g = BaseGraph::new(n).expect("label vertex count is valid");
        for k in 1..n {
            for a in 0..k {
                let q = pair_count(k) + a;
                if self.bits >> (total - 1 - q) & 1 == 1 {
                    g.add_edge(a + 1, k + 1).unwrap();
                }
            }
        }
        g
    }
}

struct Search<'a> {
    g: &'a BaseGraph,
    n: usize,
    total: usize,
    degree_at: Vec<usize>,
    degree: Vec<usize>,
    order: Vec<usize>,
    best: Option<u128>,
}

impl Search<'_> {
    fn dfs(&mut self, k: usize, used: u128, bits: u128) {
        if k == self.n {
            if self.best.is_none_or(|b| bits > b) {
                self.best = Some(bits);
            }
            return;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.degree[v] != self.degree_at[k] {
                continue;
            }
            let mut next = bits;
            let row = self.g.row(v);
            for (a, &u) in self.order.iter().enumerate().take(k) {
                if row >> u & 1 == 1 {
                    next |= 1 << (self.total - 1 - (pair_count(k) + a));
                }
            }
            if let Some(best) = self.best {
                let fixed = pair_count(k + 1);
                let mask = if fixed == 0 {
                    0
                } else {
                    (!0u128 << (self.total - fixed)) & low_mask(self.total)
                };
                if next & mask < best & mask {
                    continue;
                }
            }
            self.order.push(v);
            self.dfs(k + 1, used | 1 << v, next);
            self.order.pop();
        }
    }
}

fn low_mask(bits: usize) -> u128 {
    if bits >= 128 {
        u128::MAX
    } else {
        (1u128 << bits) - 1
    }
}

/// Canonical label with the default size guard.
pub fn canonical_form(g: &BaseGraph) -> Result<CanonicalLabel> {
    canonical_form_with_limit(g, Limits::default().max_canonical_vertices)
}

pub fn canonical_form_with_limit(g: &BaseGraph, max_vertices: usize) -> Result<CanonicalLabel> {
    let n = g.vertex_count();
    let limit = max_vertices.min(MAX_CANONICAL_VERTICES);
    if n > limit {
        return Err(Error::too_large(
            "canonical form vertex count",
            n as u128,
            limit as u128,
        ));
    }
    let degree: Vec<usize> = (0..n).map(|v| g.row(v).count_ones() as usize).collect();
    let mut degree_at = degree.clone();
    degree_at.sort_unstable_by(|a, b| b.cmp(a));
    let mut search = Search {
        g,
        n,
        total: pair_count(n),
        degree_at,
        degree,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.dfs(0, 0, 0);
    Ok(CanonicalLabel {
        n: n as u8,
        bits: search.best.unwrap_or(0),
    })
}
