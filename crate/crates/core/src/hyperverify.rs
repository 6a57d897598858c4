//! Exhaustive search for monochromatic cliques in the step-up coloring, and
//! the structural check that rules them out through `G` alone.
//!
//! The brute force works on all `2^n` strings at once. For every colour `k`
//! and pair `a < b` it precomputes the set of `w > b` with `{a, b, w}` of
//! colour `k`; a clique is then grown in increasing rank order by
//! intersecting those sets, so the first clique found is the
//! lexicographically least one.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::jgraph::{extract_delta_sequence, DeltaSequence};
use crate::limits::{Limits, MAX_BRUTE_N_HARD};
use crate::probsearch::{contains_subgraph, has_clique};
use crate::stepup::{color_sorted_ranks, TVertex, TripleColor};

/// A monochromatic clique of the step-up hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    pub color: TripleColor,
    /// Strictly increasing.
    pub vertices: Vec<TVertex>,
}

impl CliqueWitness {
    pub fn ranks(&self) -> Vec<u64> {
        self.vertices.iter().map(TVertex::rank).collect()
    }

    pub fn delta_sequence(&self) -> Result<DeltaSequence> {
        extract_delta_sequence(&self.vertices)
    }
}

/// Colour structure of the step-up hypergraph on `2^n` vertices.
pub struct StepUpColoring {
    n: usize,
    size: usize,
    words: usize,
    // ext[((k * size + a) * size + b) * words ..][..words]: w > b with colour(a,b,w) = k
    ext: Vec<u64>,
    counts: [u64; 3],
}

impl StepUpColoring {
    pub fn new(g: &BaseGraph, n: usize) -> Result<Self> {
        Self::with_limit(g, n, Limits::from_env().max_brute_n)
    }

    pub fn with_limit(g: &BaseGraph, n: usize, max_n: usize) -> Result<Self> {
        let limit = max_n.min(MAX_BRUTE_N_HARD);
        if n > limit {
            return Err(Error::too_large(
                "step-up vertex count 2^n",
                1u128 << n.min(127),
                1u128 << limit,
            ));
        }
        if g.vertex_count() != n {
            return Err(Error::LengthMismatch {
                left: g.vertex_count(),
                right: n,
            });
        }
        let size = 1usize << n;
        let words = size.div_ceil(64);
        let mut ext = vec![0u64; 3 * size * size * words];
        let mut counts = [0u64; 3];
        for a in 0..size {
            for b in a + 1..size {
                for w in b + 1..size {
                    let k = color_sorted_ranks(g, a as u64, b as u64, w as u64).index();
                    counts[k] += 1;
                    ext[((k * size + a) * size + b) * words + w / 64] |= 1 << (w % 64);
                }
            }
        }
        Ok(StepUpColoring {
            n,
            size,
            words,
            ext,
            counts,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.size
    }

    /// Number of triples per colour, indexed by [`TripleColor::index`].
    pub fn triple_counts(&self) -> [u64; 3] {
        self.counts
    }

    fn ext(&self, k: usize, a: usize, b: usize) -> &[u64] {
        let at = ((k * self.size + a) * self.size + b) * self.words;
        &self.ext[at..at + self.words]
    }

    /// Lexicographically least clique of `size` vertices in colour `color`.
    pub fn find_in_color(&self, color: TripleColor, size: usize) -> Option<Vec<u64>> {
        if size < 3 || size > self.size {
            return None;
        }
        let k = color.index();
        let mut clique = Vec::with_capacity(size);
        for first in 0..self.size {
            let mut cand = vec![0u64; self.words];
            for w in first + 1..self.size {
                cand[w / 64] |= 1 << (w % 64);
            }
            clique.push(first);
            if self.grow(k, size, &mut clique, &cand) {
                return Some(clique.iter().map(|&v| v as u64).collect());
            }
            clique.pop();
        }
        None
    }

    fn grow(&self, k: usize, size: usize, clique: &mut Vec<usize>, cand: &[u64]) -> bool {
        if clique.len() == size {
            return true;
        }
        let available: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        if clique.len() + available < size {
            return false;
        }
        let mut next = vec![0u64; self.words];
        for (wi, &word) in cand.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                // keep w > v that close a colour-k triple with every clique member
                for (i, slot) in next.iter_mut().enumerate() {
                    let above = if i > v / 64 {
                        !0
                    } else if i == v / 64 {
                        if v % 64 == 63 {
                            0
                        } else {
                            !0u64 << (v % 64 + 1)
                        }
                    } else {
                        0
                    };
                    *slot = cand[i] & above;
                }
                for &a in clique.iter() {
                    for (slot, e) in next.iter_mut().zip(self.ext(k, a, v)) {
                        *slot &= e;
                    }
                }
                clique.push(v);
                if self.grow(k, size, clique, &next) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }

    fn witness(&self, color: TripleColor, ranks: Vec<u64>) -> CliqueWitness {
        CliqueWitness {
            color,
            vertices: ranks
                .into_iter()
                .map(|r| TVertex::from_rank(self.n, r).expect("rank below 2^n"))
                .collect(),
        }
    }

    /// Least witness over all colours, ordered by ranks and then colour.
    pub fn find(&self, size: usize) -> Option<CliqueWitness> {
        TripleColor::ALL
            .iter()
            .filter_map(|&c| self.find_in_color(c, size).map(|r| (r, c)))
            .min()
            .map(|(r, c)| self.witness(c, r))
    }
}

/// A monochromatic clique on `size` vertices of the step-up of `g` (on all
/// `2^n` strings), the lexicographically least one if several exist. Sets of
/// fewer than three vertices contain no triple and never count.
pub fn find_mono_clique(g: &BaseGraph, n: usize, size: usize) -> Result<Option<CliqueWitness>> {
    Ok(StepUpColoring::new(g, n)?.find(size))
}

/// As [`find_mono_clique`] restricted to one colour.
pub fn find_mono_clique_in_color(
    g: &BaseGraph,
    n: usize,
    size: usize,
    color: TripleColor,
) -> Result<Option<CliqueWitness>> {
    let col = StepUpColoring::new(g, n)?;
    Ok(col
        .find_in_color(color, size)
        .map(|r| col.witness(color, r)))
}

/// Outcome of the brute-force check for monochromatic `(l+1)`-cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub l: usize,
    pub witness: Option<CliqueWitness>,
    pub triple_counts: [u64; 3],
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn to_text(&self) -> String {
        let (color, ranks) = match &self.witness {
            Some(w) => (
                w.color.to_string(),
                w.ranks()
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            None => ("none".to_string(), "none".to_string()),
        };
        format!(
            "result: {}\nwitness_color: {}\nwitness_ranks: {}\ntriples_c1: {}\ntriples_c2: {}\ntriples_c3: {}\n",
            if self.passed() { "pass" } else { "fail" },
            color,
            ranks,
            self.triple_counts[0],
            self.triple_counts[1],
            self.triple_counts[2],
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Searches every colour class for a clique of size `l + 1`.
pub fn verify_no_mono_clique(g: &BaseGraph, n: usize, l: usize) -> Result<VerifyReport> {
    let col = StepUpColoring::new(g, n)?;
    Ok(VerifyReport {
        n,
        l,
        witness: col.find(l + 1),
        triple_counts: col.triple_counts(),
    })
}

/// Which structural condition failed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralOutcome {
    Pass,
    /// `G` has a clique on `l` vertices.
    CliqueFound,
    /// The complement contains a pattern on `d` vertices.
    PatternFound {
        d: usize,
    },
}

/// `G` has no `l`-clique and its complement contains none of `patterns`.
pub fn structural_check<'a, I>(g: &BaseGraph, l: usize, patterns: I) -> Result<StructuralOutcome>
where
    I: IntoIterator<Item = &'a BaseGraph>,
{
    if has_clique(g, l)? {
        return Ok(StructuralOutcome::CliqueFound);
    }
    let co = g.complement();
    for p in patterns {
        if contains_subgraph(&co, p)? {
            return Ok(StructuralOutcome::PatternFound {
                d: p.vertex_count(),
            });
        }
    }
    Ok(StructuralOutcome::Pass)
}

/// True certifies that the step-up coloring of `g` has no monochromatic
/// clique on `l + 1` vertices, provided `family` holds the `J''` patterns for
/// every `d` in `[ceil(log2(l+1)), l]`.
pub fn structural_verify(g: &BaseGraph, l: usize, family: &[BaseGraph]) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(structural_check(g, l, family)? == StructuralOutcome::Pass)
}
