//! The region-partition process that builds `J''` from a delta sequence.
//!
//! Round 1 picks the largest value. Round `i` looks at the regions cut out by
//! the positions picked in earlier rounds and picks, in each region, the
//! leftmost occurrence of the largest class not picked yet. `t_i` counts the
//! classes picked after round `i` and the process stops at the first `m`
//! with `t_m = d`.
//!
//! A class is joined to the representative of every region that encloses the
//! position at which it is eventually picked. When a class has occurrences in
//! several same-round regions only that one edge is kept. The pattern is thus
//! the ancestor closure of a binary tree whose depth-`(i-1)` nodes are the
//! round-`i` picks, and its edge count is exactly `dm - (t_1 + ... + t_m)`.
//!
//! The greedy pick can leave `J` when a region holds an already-picked class
//! larger than its pick, so the process runs as a depth-first search: the
//! greedy choice is tried first, and alternatives are explored only when a
//! pick is not `J`-adjacent to all of its ancestors or would strand a class.
//! If no `J`-embedded tree is found within the step budget the unconstrained
//! greedy run is returned with `within_j` false.

use super::{build_j, ClassGraph, DeltaSequence};
use crate::error::{Error, Result};
use crate::graph::BaseGraph;

const SEARCH_BUDGET: usize = 200_000;

/// One region `R_{i,j}` of a round, with 1-based inclusive positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JppRegion {
    pub start: usize,
    pub end: usize,
    /// Class of the representative whose region was split to form this one.
    pub parent: Option<usize>,
    pub choice: Option<JppChoice>,
}

/// The representative `Delta_{i,j}` chosen in a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JppChoice {
    /// 1-based position in the sequence.
    pub position: usize,
    pub class: usize,
    /// Classes joined to this representative (picked later inside its region).
    pub joined: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JppRound {
    /// 1-based round number `i`.
    pub index: usize,
    pub regions: Vec<JppRegion>,
    /// `t_i`.
    pub t: usize,
}

/// A `J''` pattern with its construction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JppResult {
    pub pattern: ClassGraph,
    pub d: usize,
    pub m: usize,
    pub t: Vec<usize>,
    pub rounds: Vec<JppRound>,
    /// Whether the pattern is a subgraph of `J` on the same classes.
    pub within_j: bool,
    /// Whether the search had to deviate from the greedy picks.
    pub backtracked: bool,
}

#[derive(Clone, Copy)]
struct Slot {
    start: usize,
    end: usize, // inclusive, 0-based
    parent: Option<usize>,
    ancestors: u128,
}

struct Planner<'a> {
    values: &'a [usize],
    class_of: Vec<usize>,
    class_adj: Vec<u128>,
    all: u128,
    respect_j: bool,
    steps: usize,
    exhausted: bool,
    greedy: bool,
    rounds: Vec<(Vec<Slot>, Vec<Option<usize>>)>,
}

impl Planner<'_> {
    fn slot_classes(&self, s: &Slot) -> u128 {
        (s.start..=s.end).fold(0, |acc, p| acc | 1u128 << self.class_of[p])
    }

    fn round(&mut self, slots: Vec<Slot>, chosen: u128) -> bool {
        if chosen == self.all {
            return true;
        }
        let present = slots.iter().fold(0, |acc, s| acc | self.slot_classes(s));
        if self.all & !chosen & !present != 0 {
            return false;
        }
        let mut picks = Vec::with_capacity(slots.len());
        self.pick(&slots, 0, chosen, &mut picks)
    }

    fn pick(
        &mut self,
        slots: &[Slot],
        i: usize,
        chosen: u128,
        picks: &mut Vec<Option<usize>>,
    ) -> bool {
        if i == slots.len() {
            if picks.iter().all(Option::is_none) {
                return false;
            }
            let mut next = Vec::new();
            for (slot, pick) in slots.iter().zip(picks.iter()) {
                let Some(p) = *pick else { continue };
                let c = self.class_of[p];
                let ancestors = slot.ancestors | 1u128 << c;
                if p > slot.start {
                    next.push(Slot {
                        start: slot.start,
                        end: p - 1,
                        parent: Some(c),
                        ancestors,
                    });
                }
                if p < slot.end {
                    next.push(Slot {
                        start: p + 1,
                        end: slot.end,
                        parent: Some(c),
                        ancestors,
                    });
                }
            }
            self.rounds.push((slots.to_vec(), picks.clone()));
            if self.round(next, chosen) {
                return true;
            }
            self.rounds.pop();
            return false;
        }

        let slot = slots[i];
        // candidate positions: leftmost occurrence of each eligible class, largest first
        let mut cands: Vec<usize> = Vec::new();
        let mut seen = 0u128;
        let mut greedy_first: Option<usize> = None;
        for p in slot.start..=slot.end {
            let c = self.class_of[p];
            let bit = 1u128 << c;
            if chosen & bit != 0 || seen & bit != 0 {
                continue;
            }
            seen |= bit;
            if greedy_first.is_none_or(|g| self.values[p] > self.values[g]) {
                greedy_first = Some(p);
            }
            if self.respect_j && slot.ancestors & !self.class_adj[c] != 0 {
                continue;
            }
            cands.push(p);
        }
        cands.sort_by(|&a, &b| self.values[b].cmp(&self.values[a]).then(a.cmp(&b)));
        if chosen == 0 {
            // the root is always the largest class
            cands.retain(|&p| Some(p) == greedy_first);
        }

        for p in cands {
            self.steps += 1;
            if self.steps > SEARCH_BUDGET && self.respect_j {
                self.exhausted = true;
                return false;
            }
            if Some(p) != greedy_first {
                self.greedy = false;
            }
            picks.push(Some(p));
            if self.pick(slots, i + 1, chosen | 1u128 << self.class_of[p], picks) {
                return true;
            }
            picks.pop();
            if self.exhausted {
                return false;
            }
        }
        if seen != 0 {
            self.greedy = false;
        }
        picks.push(None);
        if self.pick(slots, i + 1, chosen, picks) {
            return true;
        }
        picks.pop();
        false
    }
}

/// Runs the `J''` process on `seq`. See the module docs for the exact rules.
pub fn build_jpp(seq: &DeltaSequence) -> Result<JppResult> {
    let j = build_j(seq);
    let classes = j.classes().to_vec();
    let d = classes.len();
    if d > 128 {
        return Err(Error::too_large(
            "distinct delta values",
            d as u128,
            128u128,
        ));
    }
    let values = seq.values();
    let class_of: Vec<usize> = values.iter().map(|v| j.index_of(*v).unwrap()).collect();
    let class_adj: Vec<u128> = (0..d).map(|c| j.graph().row(c)).collect();
    let all = if d == 128 {
        u128::MAX
    } else {
        (1u128 << d) - 1
    };
    let root = Slot {
        start: 0,
        end: values.len() - 1,
        parent: None,
        ancestors: 0,
    };

    let mut planner = Planner {
        values,
        class_of,
        class_adj,
        all,
        respect_j: true,
        steps: 0,
        exhausted: false,
        greedy: true,
        rounds: Vec::new(),
    };
    let mut found = planner.round(vec![root], 0);
    if !found {
        planner.respect_j = false;
        planner.exhausted = false;
        planner.greedy = true;
        planner.rounds.clear();
        found = planner.round(vec![root], 0);
    }
    if !found {
        return Err(Error::InconsistentTrace(
            "region process did not cover every class".into(),
        ));
    }

    // ancestors of each class, from the slot in which it was picked
    let mut ancestors = vec![0u128; d];
    let mut t = Vec::with_capacity(planner.rounds.len());
    let mut chosen = 0u128;
    for (slots, picks) in &planner.rounds {
        for (slot, pick) in slots.iter().zip(picks) {
            if let Some(p) = pick {
                let c = planner.class_of[*p];
                ancestors[c] = slot.ancestors;
                chosen |= 1u128 << c;
            }
        }
        t.push(chosen.count_ones() as usize);
    }

    let mut g = BaseGraph::new(d)?;
    for (c, &anc) in ancestors.iter().enumerate() {
        let mut a = anc;
        while a != 0 {
            let x = a.trailing_zeros() as usize;
            g.add_edge(c + 1, x + 1)?;
            a &= a - 1;
        }
    }

    let rounds = planner
        .rounds
        .iter()
        .zip(&t)
        .enumerate()
        .map(|(i, ((slots, picks), &ti))| JppRound {
            index: i + 1,
            t: ti,
            regions: slots
                .iter()
                .zip(picks)
                .map(|(slot, pick)| JppRegion {
                    start: slot.start + 1,
                    end: slot.end + 1,
                    parent: slot.parent.map(|c| classes[c]),
                    choice: pick.map(|p| {
                        let c = planner.class_of[p];
                        JppChoice {
                            position: p + 1,
                            class: classes[c],
                            joined: (0..d)
                                .filter(|&x| ancestors[x] >> c & 1 == 1)
                                .map(|x| classes[x])
                                .collect(),
                        }
                    }),
                })
                .collect(),
        })
        .collect();

    let pattern = ClassGraph::new(classes, g);
    let within_j = pattern.is_subgraph_of(&j);
    Ok(JppResult {
        d,
        m: t.len(),
        t,
        rounds,
        within_j,
        backtracked: !planner.greedy,
        pattern,
    })
}

impl JppResult {
    /// `dm - sum t_i`.
    pub fn edge_bookkeeping(&self) -> i64 {
        (self.d * self.m) as i64 - self.t.iter().sum::<usize>() as i64
    }

    /// Checks the structural invariants of the trace: `t` strictly increasing
    /// from 1 to `d`, `t_i <= min(2^i - 1, d - m + i)`, the edge identity and
    /// domination by the largest class.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InconsistentTrace(msg));
        if self.t.first() != Some(&1) || self.t.last() != Some(&self.d) || self.t.len() != self.m {
            return fail(format!(
                "t = {:?} does not run from 1 to d = {}",
                self.t, self.d
            ));
        }
        if self.t.windows(2).any(|w| w[0] >= w[1]) {
            return fail(format!("t = {:?} is not strictly increasing", self.t));
        }
        for (k, &ti) in self.t.iter().enumerate() {
            let i = k + 1;
            let pow = if i >= 63 {
                usize::MAX
            } else {
                (1usize << i) - 1
            };
            if ti > pow || ti + self.m > self.d + i {
                return fail(format!("t_{i} = {ti} exceeds min(2^i - 1, d - m + i)"));
            }
        }
        edge_count_identity(self)?;
        let root = self.pattern.d() - 1;
        if self.pattern.graph().degree(root + 1) != self.d - 1 {
            return fail("largest class does not dominate the pattern".into());
        }
        Ok(())
    }
}

/// Returns `dm - (t_1 + ... + t_m)` after checking it equals the pattern's
/// edge count.
pub fn edge_count_identity(r: &JppResult) -> Result<usize> {
    let expected = r.edge_bookkeeping();
    let actual = r.pattern.edge_count() as i64;
    if expected != actual {
        return Err(Error::InconsistentTrace(format!(
            "dm - sum t = {expected} but pattern has {actual} edges"
        )));
    }
    Ok(actual as usize)
}

/// Intermediate edge lower bound `d i0 + (m-i0)(m-i0-1)/2 - 2(d-m+1)` with
/// `i0 = log2(d-m+1)`, plus the two regime forms it is later relaxed to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormBound {
    pub i0: f64,
    pub bound: f64,
    /// `d - m + 1 >= log2(l+1) / 2`.
    pub wide_regime: bool,
    /// `d (loglog(l+1) - 3)` in the wide regime, otherwise
    /// `(d + 2 - 2 loglog(l+1))(d - loglog(l+1)) / 8 - 2d`. Reporting only.
    pub asymptotic: f64,
}

pub fn closed_form_lower_bound(d: usize, m: usize, l: usize) -> Result<ClosedFormBound> {
    if m == 0 || d < m {
        return Err(Error::DomainError(format!(
            "need d >= m >= 1, got d={d}, m={m}"
        )));
    }
    if l < 2 {
        return Err(Error::DomainError(format!("need l >= 2, got {l}")));
    }
    let (df, mf) = (d as f64, m as f64);
    let slack = df - mf + 1.0;
    let i0 = slack.log2();
    let bound = df * i0 + (mf - i0) * (mf - i0 - 1.0) / 2.0 - 2.0 * slack;
    let log_l1 = ((l + 1) as f64).log2();
    let loglog = log_l1.log2();
    let wide_regime = slack >= log_l1 / 2.0;
    let asymptotic = if wide_regime {
        df * (loglog - 3.0)
    } else {
        (df + 2.0 - 2.0 * loglog) * (df - loglog) / 8.0 - 2.0 * df
    };
    Ok(ClosedFormBound {
        i0,
        bound,
        wide_regime,
        asymptotic,
    })
}
