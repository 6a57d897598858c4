//! Simple undirected graphs on `{1, ..., n}` and their text format.
//!
//! A [`BaseGraph`] plays several roles: the base graph `G` of the step-up
//! coloring, its complement, and the pattern graphs `J` / `J''`.
//!
//! Text format (UTF-8, line oriented):
//!
//! ```text
//! # comment
//! n 3
//! e 1 2
//! e 2 3
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits::MAX_GRAPH_VERTICES;

/// Undirected simple graph with vertices `1..=n`, stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaseGraph {
    n: usize,
    // adj[v] bit u <=> {v+1, u+1} is an edge (0-based internally)
    adj: Vec<u128>,
}

impl BaseGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::too_large(
                "graph vertex count",
                n as u128,
                MAX_GRAPH_VERTICES as u128,
            ));
        }
        Ok(BaseGraph { n, adj: vec![0; n] })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        let all = g.full_mask();
        for v in 0..n {
            g.adj[v] = all & !(1u128 << v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs; rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Builds a graph from 0-based adjacency rows. Rows must be symmetric and
    /// loop-free.
    pub fn from_adjacency(rows: Vec<u128>) -> Result<Self> {
        let n = rows.len();
        let g = BaseGraph { n, adj: rows };
        Self::new(n)?;
        let mask = g.full_mask();
        for v in 0..n {
            if g.adj[v] & !mask != 0 || g.adj[v] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("bad adjacency row {}", v + 1)));
            }
            for u in 0..n {
                if (g.adj[v] >> u & 1) != (g.adj[u] >> v & 1) {
                    return Err(Error::InvalidGraph("adjacency is not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub(crate) fn full_mask(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} out of range 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Adds the edge `{i, j}` (1-based). Loops and duplicates are errors.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
        }
        if self.has_edge(i, j) {
            return Err(Error::InvalidGraph(format!("duplicate edge {{{i}, {j}}}")));
        }
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> bool {
        if !self.has_edge(i, j) {
            return false;
        }
        self.adj[i - 1] &= !(1 << (j - 1));
        self.adj[j - 1] &= !(1 << (i - 1));
        true
    }

    /// Whether `{i, j}` is an edge (1-based). Out-of-range queries return false.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return false;
        }
        self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    /// 0-based neighbourhood bit row of 0-based vertex `v`.
    pub fn row(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u128] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as sorted 1-based pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut higher = if i == 127 {
                0
            } else {
                self.adj[i] & (!0u128 << (i + 1))
            };
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                out.push((i + 1, j + 1));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Same vertex set; a pair is an edge iff it is not an edge here.
    pub fn complement(&self) -> BaseGraph {
        let mask = self.full_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, r)| !r & mask & !(1u128 << v))
            .collect();
        BaseGraph { n: self.n, adj }
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &BaseGraph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Relabels vertices: vertex `v` (0-based) moves to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> BaseGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u128; self.n];
        for (i, j) in self.edges() {
            let (a, b) = (perm[i - 1], perm[j - 1]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        BaseGraph { n: self.n, adj }
    }

    /// Serializes to the shared text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (i, j) in self.edges() {
            s.push_str(&format!("e {i} {j}\n"));
        }
        s
    }

    /// Parses the shared text format. `#` lines and blank lines are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        Self::parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
    }

    /// Parses graph lines carrying their original line numbers (used when the
    /// graph is embedded in a larger file).
    pub(crate) fn parse_lines<'a, I>(lines: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, &'a str)>,
    {
        let mut graph: Option<BaseGraph> = None;
        let mut last_line = 0;
        for (lineno, raw) in lines {
            last_line = lineno;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let nums: Vec<&str> = parts.collect();
            let parse_num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(lineno, format!("not a number: {s:?}")))
            };
            match (tag, graph.as_mut()) {
                ("n", None) => {
                    if nums.len() != 1 {
                        return Err(Error::parse(lineno, "expected `n <vertex_count>`"));
                    }
                    let n = parse_num(nums[0])?;
                    graph =
                        Some(BaseGraph::new(n).map_err(|e| Error::parse(lineno, e.to_string()))?);
                }
                ("n", Some(_)) => return Err(Error::parse(lineno, "repeated `n` line")),
                ("e", Some(g)) => {
                    if nums.len() != 2 {
                        return Err(Error::parse(lineno, "expected `e <i> <j>`"));
                    }
                    let (i, j) = (parse_num(nums[0])?, parse_num(nums[1])?);
                    if i >= j {
                        return Err(Error::parse(
                            lineno,
                            format!("edge must satisfy i < j, got {i} {j}"),
                        ));
                    }
                    g.add_edge(i, j)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                }
                ("e", None) => return Err(Error::parse(lineno, "edge before `n` line")),
                _ => return Err(Error::parse(lineno, format!("unexpected line {line:?}"))),
            }
        }
        graph.ok_or_else(|| Error::parse(last_line.max(1), "missing `n` line"))
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}
