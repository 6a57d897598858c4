//! Size guards shared by the exhaustive routines.
//!
//! Every guard is a tractability bound, not a semantic one. The defaults can
//! be raised through [`Limits`] or, for the step-up brute force, through the
//! `RAMSEY_MAX_N` environment variable.

/// Largest bit length a packed [`TVertex`](crate::TVertex) can hold.
pub const MAX_PACKED_BITS: usize = 64;
/// Largest vertex count a [`BaseGraph`](crate::BaseGraph) can hold.
pub const MAX_GRAPH_VERTICES: usize = 128;
/// Hard ceiling on `n` for the step-up brute force (2^8 = 256 vertices).
pub const MAX_BRUTE_N_HARD: usize = 8;
/// Largest vertex count a canonical label can encode.
pub const MAX_CANONICAL_VERTICES: usize = 16;

/// Environment variable overriding [`Limits::max_brute_n`].
pub const MAX_N_ENV: &str = "RAMSEY_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on `n` for `enumerate_t` (2^n vertices are materialized).
    pub max_enumerate_n: usize,
    /// Cap on `n` for the brute-force step-up clique search (2^n vertices).
    pub max_brute_n: usize,
    /// Cap on vertex count for `has_clique`.
    pub max_clique_vertices: usize,
    /// Cap on pattern size for `contains_subgraph`.
    pub max_pattern_vertices: usize,
    /// Cap on vertex count for `canonical_form`.
    pub max_canonical_vertices: usize,
    /// Cap on `d` for `enumerate_jpp`.
    pub max_jpp_d: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumerate_n: 20,
            max_brute_n: 6,
            max_clique_vertices: 128,
            max_pattern_vertices: 10,
            max_canonical_vertices: 10,
            max_jpp_d: 7,
        }
    }
}

impl Limits {
    /// Defaults, with `RAMSEY_MAX_N` applied when it holds a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            limits.max_brute_n = n.min(MAX_BRUTE_N_HARD);
            limits.max_enumerate_n = limits.max_enumerate_n.max(limits.max_brute_n);
        }
        limits
    }
}
