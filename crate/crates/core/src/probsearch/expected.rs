//! First-moment estimates, evaluated in log2 space.

use statrs::function::gamma::ln_gamma;
use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// `log2 C(n, k)` via log-gamma.
pub fn log2_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let (n, k) = (n as f64, k as f64);
    (ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)) / LN_2
}

/// `log2( p^C(l,2) * C(n,l) )`: expected number of `l`-cliques in `G(n, p)`.
pub fn expected_clique_count_log2(n: u64, l: u64, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DomainError(format!("p must lie in (0,1), got {p}")));
    }
    if l > n {
        return Err(Error::DomainError(format!("need l <= n, got l={l}, n={n}")));
    }
    let pairs = (l * l.saturating_sub(1) / 2) as f64;
    Ok(pairs * p.log2() + log2_binomial(n, l))
}

/// `log2( d^d (1-p)^{(d/10) loglog(l+1)} n^d )`, the displayed upper bound on
/// the expected number of `J''` copies of order `d` in the complement.
pub fn expected_jpp_count_log2(n: u64, l: u64, p: f64, d: u64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DomainError(format!("p must lie in (0,1), got {p}")));
    }
    if d == 0 || n == 0 {
        return Err(Error::DomainError("need d >= 1 and n >= 1".into()));
    }
    if l < 4 {
        return Err(Error::DomainError(format!("need l >= 4, got {l}")));
    }
    let d = d as f64;
    let loglog = ((l + 1) as f64).log2().log2();
    Ok(d * d.log2() + d / 10.0 * loglog * (1.0 - p).log2() + d * (n as f64).log2())
}
