//! Random base graphs at the prescribed density, the clique and pattern
//! tests they must pass, and the search that turns a passing sample into a
//! [`Certificate`].

mod clique;
mod expected;
mod rng;
mod subgraph;

pub use clique::{clique_number, has_clique, has_clique_with_limit};
pub use expected::{expected_clique_count_log2, expected_jpp_count_log2, log2_binomial};
pub use rng::{pair_uniform, EdgeStream};
pub use subgraph::{contains_subgraph, contains_subgraph_with_limit};

use std::collections::BTreeMap;

use crate::certificate::{CertChecks, Certificate};
use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::hyperverify::verify_no_mono_clique;
use crate::jgraph::{enumerate_jpp, JppFamily};
use crate::limits::{Limits, MAX_GRAPH_VERTICES};

/// Largest admissible value of the constant `c`.
pub const MAX_C: f64 = 1.0 / 80.0;

pub fn complement(g: &BaseGraph) -> BaseGraph {
    g.complement()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    /// Forbidden clique size in the base graph.
    pub l: usize,
    pub c: f64,
    pub n_override: Option<usize>,
    pub p_override: Option<f64>,
    pub seed: u64,
    pub max_attempts: u64,
}

impl SearchParams {
    pub fn new(l: usize, c: f64, seed: u64, max_attempts: u64) -> Self {
        SearchParams {
            l,
            c,
            n_override: None,
            p_override: None,
            seed,
            max_attempts,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n_override = Some(n);
        self
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p_override = Some(p);
        self
    }

    /// The `(n, p)` pair the search samples with: overrides where given,
    /// [`sampling_params`] for the rest.
    pub fn resolve(&self) -> Result<(usize, f64)> {
        if self.l == 0 {
            return Err(Error::DomainError("l must be positive".into()));
        }
        if !(self.c > 0.0 && self.c <= MAX_C) {
            return Err(Error::DomainError(format!(
                "c = {} is outside (0, 1/80]",
                self.c
            )));
        }
        let (n, p) = match (self.n_override, self.p_override) {
            (Some(n), Some(p)) => (n, p),
            (n, p) => {
                let (pn, pp) = sampling_params(self.l, self.c)?;
                (n.unwrap_or(pn), p.unwrap_or(pp))
            }
        };
        if n == 0 {
            return Err(Error::DomainError("n must be positive".into()));
        }
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::too_large(
                "base graph vertices",
                n as u128,
                MAX_GRAPH_VERTICES as u128,
            ));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::DomainError(format!("p = {p} is outside [0, 1]")));
        }
        Ok((n, p))
    }
}

/// `n = ceil(l^(c log2 log2 l))` and `p = 1 - log2 l * log2 log2 l / l`.
pub fn sampling_params(l: usize, c: f64) -> Result<(usize, f64)> {
    if l < 5 {
        let lf = l.max(1) as f64;
        let ll = lf.log2().log2();
        let n = if ll.is_finite() {
            lf.powf(c * ll).ceil()
        } else {
            0.0
        };
        return Err(Error::DegenerateParams(format!(
            "l = {l} leaves log2 log2 l <= 1 (n would be {n})"
        )));
    }
    if !(c > 0.0 && c <= 0.25) {
        return Err(Error::DomainError(format!("c = {c} is outside (0, 1/4]")));
    }
    let lf = l as f64;
    let ll = lf.log2().log2();
    let p = 1.0 - lf.log2() * ll / lf;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DegenerateParams(format!(
            "p = {p} is outside (0, 1)"
        )));
    }
    let n = lf.powf(c * ll).ceil();
    if n < 2.0 {
        return Err(Error::DegenerateParams(format!("n = {n} is below 2")));
    }
    if n > MAX_GRAPH_VERTICES as f64 {
        return Err(Error::too_large(
            "base graph vertices",
            n as u128,
            MAX_GRAPH_VERTICES as u128,
        ));
    }
    Ok((n as usize, p))
}

/// Each pair `i < j`, in lexicographic order, is an edge when its uniform
/// draw falls below `p`. Draw `k` comes from [`pair_uniform`] keyed on
/// `(seed, attempt, k)`.
pub fn sample_graph(n: usize, p: f64, seed: u64, attempt: u64) -> Result<BaseGraph> {
    let mut g = BaseGraph::new(n)?;
    let mut stream = EdgeStream::new(seed, attempt);
    for i in 1..=n {
        for j in i + 1..=n {
            if stream.next_uniform() < p {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The pattern sizes a certificate must exclude: `ceil(log2(l+1))..=l`.
pub fn required_d_range(l: usize) -> (usize, usize) {
    let mut lo = 0;
    while (1u128 << lo) < l as u128 + 1 {
        lo += 1;
    }
    (lo.max(1), l)
}

/// Pattern families for every required `d` that fits in `n` vertices.
/// Larger patterns cannot embed and are vacuously excluded.
pub fn families_for(l: usize, n: usize) -> Result<BTreeMap<usize, JppFamily>> {
    let (lo, hi) = required_d_range(l);
    (lo..=hi.min(n))
        .map(|d| Ok((d, enumerate_jpp(d)?)))
        .collect()
}

/// Why an attempt's sample was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    CliqueFound,
    PatternFound { d: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchFailure {
    pub n: usize,
    pub p: f64,
    /// One entry per attempt, in order.
    pub rejections: Vec<RejectReason>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Certificate(Certificate),
    Failure(SearchFailure),
}

fn check_sample(
    g: &BaseGraph,
    l: usize,
    families: &[(usize, &JppFamily)],
) -> Result<Option<RejectReason>> {
    if has_clique(g, l)? {
        return Ok(Some(RejectReason::CliqueFound));
    }
    let co = g.complement();
    for &(d, fam) in families {
        for p in fam.patterns() {
            if contains_subgraph(&co, p)? {
                return Ok(Some(RejectReason::PatternFound { d }));
            }
        }
    }
    Ok(None)
}

/// Samples attempts `0..max_attempts` in order and certifies the first graph
/// with no `l`-clique whose complement avoids every pattern.
pub fn search_good_base_graph(
    params: &SearchParams,
    families: &BTreeMap<usize, JppFamily>,
) -> Result<SearchOutcome> {
    let (n, p) = params.resolve()?;
    let (lo, hi) = required_d_range(params.l);
    for d in lo..=hi.min(n) {
        if families.get(&d).is_none_or(JppFamily::is_empty) {
            return Err(Error::CoverageGap(d));
        }
    }
    let used: Vec<(usize, &JppFamily)> = families.range(lo..=hi).map(|(&d, f)| (d, f)).collect();
    let mut rejections = Vec::new();
    for attempt in 0..params.max_attempts {
        let g = sample_graph(n, p, params.seed, attempt)?;
        if let Some(reason) = check_sample(&g, params.l, &used)? {
            rejections.push(reason);
            continue;
        }
        let brute_force = if n <= Limits::from_env().max_brute_n {
            let report = verify_no_mono_clique(&g, n, params.l)?;
            if !report.passed() {
                return Err(Error::InconsistentTrace(format!(
                    "structural checks passed but brute force found a witness:\n{report}"
                )));
            }
            true
        } else {
            false
        };
        return Ok(SearchOutcome::Certificate(Certificate::new(
            params.l,
            n,
            params.c,
            params.seed,
            attempt,
            g,
            CertChecks {
                d_min: lo,
                d_max: hi,
                brute_force,
            },
        )));
    }
    Ok(SearchOutcome::Failure(SearchFailure { n, p, rejections }))
}
