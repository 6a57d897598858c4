//! Certificates: a base graph plus the parameters it was found with, in a
//! line-oriented text format. A certificate is never trusted; verification
//! re-runs every check from scratch.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::hyperverify::verify_no_mono_clique;
use crate::jgraph::enumerate_jpp;
use crate::limits::Limits;
use crate::probsearch::{contains_subgraph, has_clique, required_d_range, MAX_C};

pub const CERT_MAGIC: &str = "RAMSEY-STEPUP-CERT v1";

/// The checks a certificate records as passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertChecks {
    /// Excluded pattern sizes, `ceil(log2(l+1))..=l`.
    pub d_min: usize,
    pub d_max: usize,
    /// The step-up coloring was also checked exhaustively.
    pub brute_force: bool,
}

impl CertChecks {
    fn to_text(self) -> String {
        format!(
            "clique_free,jpp_free_d{}..d{}{}",
            self.d_min,
            self.d_max,
            if self.brute_force { ",brute_force" } else { "" }
        )
    }

    fn parse(s: &str, line: usize) -> Result<Self> {
        let bad = || Error::parse(line, format!("malformed checks list {s:?}"));
        let mut parts = s.split(',');
        if parts.next() != Some("clique_free") {
            return Err(bad());
        }
        let range = parts
            .next()
            .and_then(|r| r.strip_prefix("jpp_free_d"))
            .ok_or_else(bad)?;
        let (lo, hi) = range.split_once("..d").ok_or_else(bad)?;
        let brute_force = match parts.next() {
            None => false,
            Some("brute_force") => true,
            Some(_) => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(CertChecks {
            d_min: lo.parse().map_err(|_| bad())?,
            d_max: hi.parse().map_err(|_| bad())?,
            brute_force,
        })
    }
}

/// A base graph with no `l`-clique whose complement avoids every required
/// pattern, so the step-up coloring on `2^n` strings has no monochromatic
/// `(l+1)`-clique.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    l: usize,
    n: usize,
    c: f64,
    seed: u64,
    attempt: u64,
    graph: BaseGraph,
    checks: CertChecks,
}

/// `2^n` as a decimal integer while it fits in 128 bits, else the literal.
pub fn power_of_two_text(n: usize) -> String {
    if n <= 127 {
        (1u128 << n).to_string()
    } else {
        format!("2^{n}")
    }
}

impl Certificate {
    pub(crate) fn new(
        l: usize,
        n: usize,
        c: f64,
        seed: u64,
        attempt: u64,
        graph: BaseGraph,
        checks: CertChecks,
    ) -> Self {
        Certificate {
            l,
            n,
            c,
            seed,
            attempt,
            graph,
            checks,
        }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn attempt(&self) -> u64 {
        self.attempt
    }

    pub fn graph(&self) -> &BaseGraph {
        &self.graph
    }

    pub fn checks(&self) -> CertChecks {
        self.checks
    }

    /// `r3(l+1,l+1,l+1)>2^n`, with the power written out when it fits.
    pub fn claimed_bound(&self) -> String {
        let k = self.l + 1;
        format!("r3({k},{k},{k})>{}", power_of_two_text(self.n))
    }

    pub fn to_text(&self) -> String {
        format!(
            "{CERT_MAGIC}\nl={}\nn={}\nc={}\nseed={}\nattempt={}\nclaim={}\nchecks={}\n{}",
            self.l,
            self.n,
            self.c,
            self.seed,
            self.attempt,
            self.claimed_bound(),
            self.checks.to_text(),
            self.graph.to_text()
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, s)| (i + 1, s));
        let mut field = |key: &str| -> Result<(usize, String)> {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::parse(0, format!("missing {key} line")))?;
            if key.is_empty() {
                return Ok((no, line.to_string()));
            }
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .map(|v| (no, v.to_string()))
                .ok_or_else(|| Error::parse(no, format!("expected {key}=...")))
        };
        let (no, magic) = field("")?;
        if magic != CERT_MAGIC {
            return Err(Error::parse(no, format!("expected {CERT_MAGIC:?}")));
        }
        fn num<T: FromStr>((no, v): (usize, String), what: &str) -> Result<T> {
            v.parse()
                .map_err(|_| Error::parse(no, format!("bad {what} value {v:?}")))
        }
        let l: usize = num(field("l")?, "l")?;
        let n: usize = num(field("n")?, "n")?;
        let c: f64 = num(field("c")?, "c")?;
        let seed: u64 = num(field("seed")?, "seed")?;
        let attempt: u64 = num(field("attempt")?, "attempt")?;
        let (claim_no, claim) = field("claim")?;
        let (checks_no, checks) = field("checks")?;
        let checks = CertChecks::parse(&checks, checks_no)?;
        let graph = BaseGraph::parse_lines(lines)?;
        let cert = Certificate {
            l,
            n,
            c,
            seed,
            attempt,
            graph,
            checks,
        };
        if claim != cert.claimed_bound() {
            return Err(Error::parse(
                claim_no,
                format!(
                    "claim {claim:?} does not follow from l and n ({})",
                    cert.claimed_bound()
                ),
            ));
        }
        Ok(cert)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Certificate::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
}

/// Outcome of replaying every check a certificate claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertReport {
    pub results: Vec<CheckResult>,
}

impl CertReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == CheckStatus::Pass)
    }

    /// Names of the checks that failed.
    pub fn failures(&self) -> Vec<&str> {
        self.results
            .iter()
            .filter(|r| r.status != CheckStatus::Pass)
            .map(|r| r.name.as_str())
            .collect()
    }
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.status {
                CheckStatus::Pass => writeln!(f, "{}: pass", r.name)?,
                CheckStatus::Fail(why) => writeln!(f, "{}: FAIL ({why})", r.name)?,
            }
        }
        writeln!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Re-runs the recorded checks. With `brute` the exhaustive step-up check
/// runs even if the certificate does not list it; it is a guard error when
/// `2^n` exceeds the brute-force limit.
pub fn verify_certificate(cert: &Certificate, brute: bool) -> Result<CertReport> {
    let mut results = Vec::new();
    let mut push = |name: String, ok: bool, why: String| {
        results.push(CheckResult {
            name,
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail(why)
            },
        })
    };
    let g = &cert.graph;
    let (lo, hi) = required_d_range(cert.l);

    let params_ok = cert.l >= 1 && cert.c > 0.0 && cert.c <= MAX_C && g.vertex_count() == cert.n;
    push(
        "parameters".into(),
        params_ok,
        format!(
            "need l >= 1, c in (0, 1/80] and a graph on n = {} vertices",
            cert.n
        ),
    );
    let range_ok = cert.checks.d_min == lo && cert.checks.d_max == hi;
    push(
        "jpp_range".into(),
        range_ok,
        format!(
            "recorded d{}..d{}, required d{lo}..d{hi}",
            cert.checks.d_min, cert.checks.d_max
        ),
    );

    let clique = has_clique(g, cert.l)?;
    push(
        "clique_free".into(),
        !clique,
        format!("graph contains K{}", cert.l),
    );

    let co = g.complement();
    for d in lo..=hi {
        if d > g.vertex_count() {
            push(format!("jpp_free_d{d}"), true, String::new());
            continue;
        }
        let fam = enumerate_jpp(d)?;
        let hit = fam
            .patterns()
            .iter()
            .map(|p| contains_subgraph(&co, p))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .position(|x| x);
        push(
            format!("jpp_free_d{d}"),
            hit.is_none(),
            format!(
                "complement contains pattern #{} on {d} vertices",
                hit.unwrap_or(0) + 1
            ),
        );
    }

    if cert.checks.brute_force || brute {
        let limit = Limits::from_env().max_brute_n;
        if cert.n > limit {
            return Err(Error::too_large(
                "step-up vertex count 2^n",
                1u128 << cert.n.min(127),
                1u128 << limit,
            ));
        }
        if params_ok {
            let report = verify_no_mono_clique(g, cert.n, cert.l)?;
            let why = report
                .witness
                .as_ref()
                .map(|w| format!("monochromatic {} clique at ranks {:?}", w.color, w.ranks()))
                .unwrap_or_default();
            push("brute_force".into(), report.passed(), why);
        } else {
            push("brute_force".into(), false, "parameters invalid".into());
        }
    }
    Ok(CertReport { results })
}
