//! Binary-string vertices, the `delta` function and the 3-coloring of triples.
//!
//! A vertex of the step-up hypergraph is a binary string `(g_1, ..., g_n)`.
//! It is stored packed by its rank `sum g_i 2^(i-1)`, so component `i` is bit
//! `i - 1` of the rank. With this packing `delta` (the largest index where two
//! strings differ) is the highest set bit of the XOR, and the order on strings
//! is the numeric order of ranks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::BaseGraph;
use crate::limits::{Limits, MAX_PACKED_BITS};

/// A binary string of length `n`, indexed from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TVertex {
    // field order matters for the derived Ord: (n, rank)
    n: u8,
    rank: u64,
}

impl TVertex {
    /// The vertex of length `n` whose rank is `rank`.
    pub fn from_rank(n: usize, rank: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainError("vertex length must be positive".into()));
        }
        if n > MAX_PACKED_BITS {
            return Err(Error::too_large(
                "vertex length",
                n as u128,
                MAX_PACKED_BITS as u128,
            ));
        }
        if n < 64 && rank >> n != 0 {
            return Err(Error::DomainError(format!(
                "rank {rank} does not fit {n} bits"
            )));
        }
        Ok(TVertex { n: n as u8, rank })
    }

    /// Builds a vertex from its components `(g_1, ..., g_n)`; each must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut rank = 0u64;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 if i < 64 => rank |= 1 << i,
                1 => {}
                _ => {
                    return Err(Error::DomainError(format!(
                        "component {} is {b}, not 0 or 1",
                        i + 1
                    )))
                }
            }
        }
        Self::from_rank(bits.len(), rank)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sum g_i 2^(i-1)`.
    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// Component `g_i`, 1-based.
    pub fn bit(&self, i: usize) -> u8 {
        assert!(
            (1..=self.len()).contains(&i),
            "component index {i} out of range"
        );
        (self.rank >> (i - 1) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (1..=self.len()).map(|i| self.bit(i)).collect()
    }

    fn same_length(&self, other: &TVertex) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for TVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 1..=self.len() {
            if i > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.bit(i))?;
        }
        write!(f, ")")
    }
}

/// Rank of a vertex.
pub fn rank(v: &TVertex) -> u64 {
    v.rank()
}

/// Highest differing position of two distinct packed ranks (1-based).
#[inline]
pub(crate) fn delta_ranks(a: u64, b: u64) -> usize {
    debug_assert_ne!(a, b);
    64 - (a ^ b).leading_zeros() as usize
}

/// Largest component at which `a` and `b` differ.
pub fn delta(a: &TVertex, b: &TVertex) -> Result<usize> {
    a.same_length(b)?;
    if a.rank == b.rank {
        return Err(Error::EqualVertices);
    }
    Ok(delta_ranks(a.rank, b.rank))
}

/// Order on strings: `a < b` iff at `delta(a, b)` the component of `a` is 0.
pub fn compare(a: &TVertex, b: &TVertex) -> Result<Ordering> {
    a.same_length(b)?;
    if a.rank == b.rank {
        return Ok(Ordering::Equal);
    }
    let d = delta_ranks(a.rank, b.rank);
    Ok(if a.bit(d) == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    })
}

/// All `2^n` strings of length `n` in increasing order, with the default cap.
pub fn enumerate_t(n: usize) -> Result<Vec<TVertex>> {
    enumerate_t_with_limit(n, Limits::from_env().max_enumerate_n)
}

pub fn enumerate_t_with_limit(n: usize, max_n: usize) -> Result<Vec<TVertex>> {
    if n > max_n {
        return Err(Error::too_large(
            "enumerate_T length",
            n as u128,
            max_n as u128,
        ));
    }
    if n == 0 {
        return Err(Error::DomainError("vertex length must be positive".into()));
    }
    if n >= 64 {
        return Err(Error::too_large("enumerate_T length", n as u128, 63u128));
    }
    (0..1u64 << n).map(|r| TVertex::from_rank(n, r)).collect()
}

/// Colour class of a triple of the step-up hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleColor {
    C1,
    C2,
    C3,
}

impl TripleColor {
    pub const ALL: [TripleColor; 3] = [TripleColor::C1, TripleColor::C2, TripleColor::C3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            TripleColor::C1 => "C1",
            TripleColor::C2 => "C2",
            TripleColor::C3 => "C3",
        }
    }
}

impl fmt::Display for TripleColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Colour from the two consecutive deltas of a sorted triple.
#[inline]
pub(crate) fn color_from_deltas(g: &BaseGraph, d1: usize, d2: usize) -> TripleColor {
    if !g.has_edge(d1, d2) {
        TripleColor::C3
    } else if d1 < d2 {
        TripleColor::C1
    } else {
        TripleColor::C2
    }
}

/// Colour of a triple given by strictly increasing ranks.
#[inline]
pub(crate) fn color_sorted_ranks(g: &BaseGraph, r1: u64, r2: u64, r3: u64) -> TripleColor {
    color_from_deltas(g, delta_ranks(r1, r2), delta_ranks(r2, r3))
}

/// Colour of `{a, b, c}`; independent of argument order.
pub fn color_triple(g: &BaseGraph, a: &TVertex, b: &TVertex, c: &TVertex) -> Result<TripleColor> {
    a.same_length(b)?;
    a.same_length(c)?;
    if g.vertex_count() != a.len() {
        return Err(Error::LengthMismatch {
            left: g.vertex_count(),
            right: a.len(),
        });
    }
    let mut r = [a.rank, b.rank, c.rank];
    r.sort_unstable();
    if r[0] == r[1] || r[1] == r[2] {
        return Err(Error::DuplicateVertex);
    }
    Ok(color_sorted_ranks(g, r[0], r[1], r[2]))
}
