//! Naive reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ramsey_stepup::{BaseGraph, TVertex};
use rand::Rng;

/// Largest 1-based index where the strings differ, read off the components.
pub fn naive_delta(a: &TVertex, b: &TVertex) -> usize {
    (1..=a.len())
        .rev()
        .find(|&i| a.bit(i) != b.bit(i))
        .expect("distinct")
}

/// Lexicographic comparison of the reversed strings, the order on vertices.
pub fn naive_less(a: &TVertex, b: &TVertex) -> bool {
    match (1..=a.len()).rev().find(|&i| a.bit(i) != b.bit(i)) {
        Some(i) => a.bit(i) < b.bit(i),
        None => false,
    }
}

/// All sequences over `1..=alphabet` of length `1..=max_len` with no two
/// consecutive entries equal.
pub fn all_sequences(max_len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (1..=alphabet).map(|a| vec![a]).collect();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for a in 1..=alphabet {
                if *s.last().unwrap() != a {
                    let mut t = s.clone();
                    t.push(a);
                    next.push(t);
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out.append(&mut frontier);
    out
}

/// Edges of `J` straight from a chain: `{delta(e_r, e_s), delta(e_s, e_t)}`
/// for every `r < s < t` with the two values different.
pub fn naive_j_from_chain(chain: &[TVertex]) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for r in 0..chain.len() {
        for s in r + 1..chain.len() {
            for t in s + 1..chain.len() {
                let a = naive_delta(&chain[r], &chain[s]);
                let b = naive_delta(&chain[s], &chain[t]);
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
    }
    edges
}

/// The graph on `n` vertices whose edge `k` (lexicographic pair order) is
/// bit `k` of `code`.
pub fn graph_from_code(n: usize, code: u64) -> BaseGraph {
    let mut g = BaseGraph::empty(n).unwrap();
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if code >> k & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

pub fn pair_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> BaseGraph {
    let mut g = BaseGraph::empty(n).unwrap();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Clique number by trying every vertex subset.
pub fn naive_clique_number(g: &BaseGraph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        if vs.len() > best
            && vs
                .iter()
                .enumerate()
                .all(|(a, &u)| vs[a + 1..].iter().all(|&w| g.has_edge(u, w)))
        {
            best = vs.len();
        }
    }
    best
}

/// Tries every injective map of pattern vertices into host vertices.
pub fn naive_contains(host: &BaseGraph, pattern: &BaseGraph) -> bool {
    fn go(host: &BaseGraph, pattern: &BaseGraph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == pattern.vertex_count() {
            return pattern
                .edges()
                .iter()
                .all(|&(a, b)| host.has_edge(map[a - 1], map[b - 1]));
        }
        for v in 1..=host.vertex_count() {
            if !map.contains(&v) {
                map.push(v);
                if go(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.vertex_count() <= host.vertex_count() && go(host, pattern, &mut Vec::new())
}
