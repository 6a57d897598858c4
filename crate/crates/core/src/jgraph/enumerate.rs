//! Every `J''` shape on `d` classes, up to isomorphism.
//!
//! The abstract process: a root is joined to all other vertices, the rest is
//! split into two (possibly empty) parts, each non-empty part gets a
//! representative joined to the rest of its part, and the parts recurse.
//! Up to isomorphism a split is determined by the two part sizes, so shapes
//! are built bottom-up by size and deduplicated by canonical label.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::canon::{canonical_form_with_limit, CanonicalLabel};
use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::limits::{Limits, MAX_CANONICAL_VERTICES};

/// All `J''` patterns on `d` vertices, one canonical representative each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JppFamily {
    d: usize,
    labels: BTreeSet<CanonicalLabel>,
    patterns: Vec<BaseGraph>,
}

impl JppFamily {
    fn from_labels(d: usize, labels: BTreeSet<CanonicalLabel>) -> Self {
        let patterns = labels.iter().map(CanonicalLabel::to_graph).collect();
        JppFamily {
            d,
            labels,
            patterns,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn patterns(&self) -> &[BaseGraph] {
        &self.patterns
    }

    pub fn labels(&self) -> &BTreeSet<CanonicalLabel> {
        &self.labels
    }

    pub fn contains_label(&self, label: &CanonicalLabel) -> bool {
        self.labels.contains(label)
    }

    /// Whether `g` is isomorphic to a member.
    pub fn contains_graph(&self, g: &BaseGraph) -> Result<bool> {
        if g.vertex_count() != self.d {
            return Ok(false);
        }
        Ok(self
            .labels
            .contains(&canonical_form_with_limit(g, MAX_CANONICAL_VERTICES)?))
    }

    /// `jpp d=<d> count=<k>` followed by the patterns separated by `---`.
    pub fn to_text(&self) -> String {
        let mut s = format!("jpp d={} count={}\n", self.d, self.len());
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                s.push_str("---\n");
            }
            s.push_str(&p.to_text());
        }
        s
    }

    /// Parses [`to_text`](Self::to_text) output; patterns are re-canonicalized.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (lineno, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'))
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let (d, count) = parse_header(header)
            .ok_or_else(|| Error::parse(lineno, "expected `jpp d=<d> count=<k>`"))?;
        let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
        for (no, line) in lines {
            if line.trim() == "---" {
                blocks.push(Vec::new());
            } else {
                blocks.last_mut().unwrap().push((no, line));
            }
        }
        let mut labels = BTreeSet::new();
        if count > 0 {
            for block in blocks {
                let first = block.first().map_or(lineno, |(n, _)| *n);
                let g = BaseGraph::parse_lines(block)?;
                if g.vertex_count() != d {
                    return Err(Error::parse(
                        first,
                        format!("pattern has {} vertices, expected {d}", g.vertex_count()),
                    ));
                }
                labels.insert(canonical_form_with_limit(&g, MAX_CANONICAL_VERTICES)?);
            }
        }
        if labels.len() != count {
            return Err(Error::parse(
                lineno,
                format!(
                    "header count {count} but {} distinct patterns",
                    labels.len()
                ),
            ));
        }
        Ok(Self::from_labels(d, labels))
    }
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    if parts.next()? != "jpp" {
        return None;
    }
    let d = parts.next()?.strip_prefix("d=")?.parse().ok()?;
    let count = parts.next()?.strip_prefix("count=")?.parse().ok()?;
    parts.next().is_none().then_some((d, count))
}

impl fmt::Display for JppFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Enumerates the family for `d` with the default guard.
pub fn enumerate_jpp(d: usize) -> Result<JppFamily> {
    enumerate_jpp_with_limit(d, Limits::default().max_jpp_d)
}

pub fn enumerate_jpp_with_limit(d: usize, max_d: usize) -> Result<JppFamily> {
    let limit = max_d.min(MAX_CANONICAL_VERTICES);
    if d > limit {
        return Err(Error::too_large(
            "enumerate_jpp d",
            d as u128,
            limit as u128,
        ));
    }
    if d == 0 {
        return Err(Error::DomainError("d must be positive".into()));
    }
    let mut by_size: BTreeMap<usize, BTreeSet<CanonicalLabel>> = BTreeMap::new();
    for k in 1..=d {
        let mut found = BTreeSet::new();
        for a in (0..k).rev() {
            let b = k - 1 - a;
            if a < b {
                break;
            }
            for left in shapes(&by_size, a) {
                for right in shapes(&by_size, b) {
                    let g = attach(k, left.as_ref(), right.as_ref());
                    found.insert(canonical_form_with_limit(&g, limit)?);
                }
            }
        }
        by_size.insert(k, found);
    }
    Ok(JppFamily::from_labels(
        d,
        by_size.remove(&d).unwrap_or_default(),
    ))
}

fn shapes(by_size: &BTreeMap<usize, BTreeSet<CanonicalLabel>>, k: usize) -> Vec<Option<BaseGraph>> {
    if k == 0 {
        return vec![None];
    }
    by_size[&k].iter().map(|l| Some(l.to_graph())).collect()
}

/// Root 1 joined to everything, `left` on vertices `2..`, `right` after it.
fn attach(k: usize, left: Option<&BaseGraph>, right: Option<&BaseGraph>) -> BaseGraph {
    let mut g = BaseGraph::new(k).unwrap();
    for v in 2..=k {
        g.add_edge(1, v).unwrap();
    }
    let mut offset = 1;
    for part in [left, right].into_iter().flatten() {
        for (i, j) in part.edges() {
            g.add_edge(i + offset, j + offset).unwrap();
        }
        offset += part.vertex_count();
    }
    g
}
