//! Delta sequences of chains, the graph `J` on their value classes, the
//! pruned graph `J''` and the enumeration of all `J''` shapes.
//!
//! For a chain `e_1 < ... < e_{l+1}` the delta sequence is
//! `delta_i = delta(e_i, e_{i+1})`. Interval maxima of this sequence give
//! `delta(e_r, e_s)` for any `r < s`, so every object here is computed from
//! the sequence alone.

mod canon;
mod enumerate;
mod jpp;

pub use canon::{canonical_form, canonical_form_with_limit, CanonicalLabel};
pub use enumerate::{enumerate_jpp, enumerate_jpp_with_limit, JppFamily};
pub use jpp::{
    build_jpp, closed_form_lower_bound, edge_count_identity, ClosedFormBound, JppChoice, JppRegion,
    JppResult, JppRound,
};

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::stepup::{compare, delta, TVertex};
use std::cmp::Ordering;
use std::fmt;

/// A sequence of positive indices with no two consecutive values equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSequence {
    values: Vec<usize>,
    source: Option<Vec<TVertex>>,
}

impl DeltaSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSequence("sequence is empty".into()));
        }
        if values.contains(&0) {
            return Err(Error::InvalidSequence("values are 1-based indices".into()));
        }
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSequence(format!(
                "consecutive values equal ({})",
                w[0]
            )));
        }
        Ok(DeltaSequence {
            values,
            source: None,
        })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn source(&self) -> Option<&[TVertex]> {
        self.source.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Distinct values in increasing order.
    pub fn classes(&self) -> Vec<usize> {
        let mut c = self.values.clone();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Whether some chain has this delta sequence: any two equal entries must
    /// be separated by a strictly larger one.
    pub fn is_chain_realizable(&self) -> bool {
        let v = &self.values;
        for i in 0..v.len() {
            let mut between_max = 0;
            for j in i + 1..v.len() {
                if v[j] == v[i] {
                    if between_max <= v[i] {
                        return false;
                    }
                    break;
                }
                between_max = between_max.max(v[j]);
            }
        }
        true
    }

    /// A chain of `n`-bit strings starting at rank 0 whose delta sequence is
    /// this one, or `None` if no such chain exists.
    pub fn realizing_chain(&self, n: usize) -> Option<Vec<TVertex>> {
        if self.values.iter().any(|&v| v > n) || !self.is_chain_realizable() {
            return None;
        }
        let mut rank = 0u64;
        let mut chain = vec![TVertex::from_rank(n, 0).ok()?];
        for &d in &self.values {
            // keep bits above d, set bit d, clear everything below
            let keep = if d >= 64 { 0 } else { rank & (!0u64 << d) };
            rank = keep | 1 << (d - 1);
            chain.push(TVertex::from_rank(n, rank).ok()?);
        }
        Some(chain)
    }
}

impl fmt::Display for DeltaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `delta(chain[i], chain[i+1])` for a strictly increasing chain.
pub fn extract_delta_sequence(chain: &[TVertex]) -> Result<DeltaSequence> {
    if chain.len() < 2 {
        return Err(Error::NotAChain);
    }
    let mut values = Vec::with_capacity(chain.len() - 1);
    for w in chain.windows(2) {
        if compare(&w[0], &w[1])? != Ordering::Less {
            return Err(Error::NotAChain);
        }
        values.push(delta(&w[0], &w[1])?);
    }
    let mut seq = DeltaSequence::new(values)?;
    seq.source = Some(chain.to_vec());
    Ok(seq)
}

/// A graph whose vertices are value classes of a delta sequence.
///
/// Vertex `i` of the underlying [`BaseGraph`] (1-based) stands for the class
/// `classes[i - 1]`; classes are stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGraph {
    classes: Vec<usize>,
    graph: BaseGraph,
}

impl ClassGraph {
    pub(crate) fn new(classes: Vec<usize>, graph: BaseGraph) -> Self {
        debug_assert_eq!(classes.len(), graph.vertex_count());
        ClassGraph { classes, graph }
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn graph(&self) -> &BaseGraph {
        &self.graph
    }

    pub fn into_graph(self) -> BaseGraph {
        self.graph
    }

    /// Number of classes `d`.
    pub fn d(&self) -> usize {
        self.classes.len()
    }

    pub fn index_of(&self, class: usize) -> Option<usize> {
        self.classes.binary_search(&class).ok()
    }

    pub fn has_class_edge(&self, a: usize, b: usize) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.graph.has_edge(i + 1, j + 1),
            _ => false,
        }
    }

    /// Edges as pairs of class values `(smaller, larger)`, sorted.
    pub fn class_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .graph
            .edges()
            .into_iter()
            .map(|(i, j)| (self.classes[i - 1], self.classes[j - 1]))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Same class set and every edge present in `other`.
    pub fn is_subgraph_of(&self, other: &ClassGraph) -> bool {
        self.classes == other.classes && self.graph.is_subgraph_of(&other.graph)
    }
}

/// The graph `J`: `{a, b}` is an edge iff for some split `r < s <= t` the
/// maxima of positions `[r, s)` and `[s, t]` are `a` and `b`.
pub fn build_j(seq: &DeltaSequence) -> ClassGraph {
    let classes = seq.classes();
    let idx = |v: usize| classes.binary_search(&v).unwrap();
    let mut g = BaseGraph::new(classes.len())
        .expect("class count is positive and bounded by sequence length");
    let v = seq.values();
    let mut left_max = Vec::new();
    let mut right_max = Vec::new();
    for s in 1..v.len() {
        // distinct running maxima to the left of s and from s rightwards
        left_max.clear();
        let mut m = 0;
        for r in (0..s).rev() {
            if v[r] > m {
                m = v[r];
                left_max.push(m);
            }
        }
        right_max.clear();
        m = 0;
        for &x in &v[s..] {
            if x > m {
                m = x;
                right_max.push(m);
            }
        }
        for &a in &left_max {
            for &b in &right_max {
                if a != b && !g.has_edge(idx(a) + 1, idx(b) + 1) {
                    g.add_edge(idx(a) + 1, idx(b) + 1).unwrap();
                }
            }
        }
    }
    ClassGraph::new(classes, g)
}
