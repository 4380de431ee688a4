//! Reconfiguration sequences under multiple token jumping (MTJ) and token
//! addition/removal (TAR): validators, independent-set enumeration, exact
//! threshold oracles, and shortest witness sequences.

mod enumerate;
mod oracle;
mod witness;

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

pub use enumerate::{count_independent_sets_by_size, independent_sets, independent_sets_of_size};
pub use oracle::{
    mtj_threshold, mtj_threshold_at, tar_threshold, tar_threshold_at, tar_threshold_at_unbounded,
    ThresholdReport,
};
pub use witness::{mtj_pair_cost, mtj_witness, tar_pair_cost, tar_witness};

/// Why a sequence fails to witness a reconfiguration. Step indices are 0-based
/// positions in the sequence.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("the sequence is empty")]
    Empty,
    #[error("source and target differ in size ({source_len} vs {target_len})")]
    EndpointSizes { source_len: usize, target_len: usize },
    #[error("the sequence does not start at the source set")]
    WrongStart,
    #[error("the sequence does not end at the target set")]
    WrongEnd,
    #[error("step {step}: vertex {vertex} is out of range")]
    OutOfRange { step: usize, vertex: usize },
    #[error("step {step}: set is not independent (edge {u}-{v})")]
    NotIndependent { step: usize, u: usize, v: usize },
    #[error("step {step}: set has size {found}, expected {expected}")]
    SizeChanged {
        step: usize,
        expected: usize,
        found: usize,
    },
    #[error("step {step}: set repeats its predecessor")]
    Stalled { step: usize },
    #[error("step {step}: symmetric difference with predecessor is {diff}, at most 1 allowed")]
    StepTooLarge { step: usize, diff: usize },
}

/// An ordered list of vertex sets `W_0, …, W_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub sets: Vec<VertexSet>,
}

/// A sequence read under the token-jumping rules.
pub type MtjSequence = Sequence;
/// A sequence read under the addition/removal rules.
pub type TarSequence = Sequence;

impl Sequence {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        Sequence { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Largest `|W_{i+1} \ W_i|` over consecutive pairs.
    pub fn max_jump(&self) -> usize {
        self.sets
            .windows(2)
            .map(|w| w[1].difference(&w[0]).len())
            .max()
            .unwrap_or(0)
    }

    /// `|W_0| − |W_i|` for every step.
    pub fn buffer_trace(&self) -> Vec<isize> {
        let start = self.sets.first().map_or(0, VertexSet::len) as isize;
        self.sets.iter().map(|w| start - w.len() as isize).collect()
    }

    /// Largest buffer over the sequence (never below 0, since `B_0 = 0`).
    pub fn max_buffer(&self) -> usize {
        self.buffer_trace().into_iter().max().unwrap_or(0).max(0) as usize
    }

    /// Expands every jump into removals followed by additions, each in
    /// increasing id order. A `k`-jump becomes `2k` steps with buffer `k`.
    pub fn jumps_to_unit_steps(&self) -> Sequence {
        let Some(first) = self.sets.first() else {
            return Sequence::new(Vec::new());
        };
        let mut cur = first.clone();
        let mut out = vec![cur.clone()];
        for next in &self.sets[1..] {
            for v in cur.difference(next).to_vec() {
                cur.remove(v);
                out.push(cur.clone());
            }
            for v in next.difference(&cur).to_vec() {
                cur.insert(v);
                out.push(cur.clone());
            }
        }
        Sequence::new(out)
    }

    /// Parses `t` followed by `t` vertex-set lines.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "missing set count"))?;
        let t: usize = header
            .parse()
            .map_err(|_| Error::parse(hl, format!("bad set count `{header}`")))?;
        let mut sets = Vec::with_capacity(t);
        for (ln, line) in lines {
            sets.push(VertexSet::parse_line(n, line, ln)?);
        }
        if sets.len() != t {
            return Err(Error::parse(hl, format!("header announces {t} sets, found {}", sets.len())));
        }
        Ok(Sequence { sets })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.sets.len());
        for w in &self.sets {
            let _ = writeln!(s, "{}", w.to_line());
        }
        s
    }
}

fn same_members(a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().eq(b.iter())
}

/// Endpoint, range and independence checks shared by both models.
fn check_common(g: &Graph, i: &VertexSet, j: &VertexSet, seq: &Sequence) -> Result<(), SequenceError> {
    if i.len() != j.len() {
        return Err(SequenceError::EndpointSizes {
            source_len: i.len(),
            target_len: j.len(),
        });
    }
    let (Some(first), Some(last)) = (seq.sets.first(), seq.sets.last()) else {
        return Err(SequenceError::Empty);
    };
    for (step, w) in seq.sets.iter().enumerate() {
        if let Some(v) = w.iter().find(|&v| v >= g.n()) {
            return Err(SequenceError::OutOfRange { step, vertex: v });
        }
        for u in w.iter() {
            if let Some(v) = g.neighbors(u).iter().find(|&v| v > u && w.contains(v)) {
                return Err(SequenceError::NotIndependent { step, u, v });
            }
        }
    }
    if !same_members(first, i) {
        return Err(SequenceError::WrongStart);
    }
    if !same_members(last, j) {
        return Err(SequenceError::WrongEnd);
    }
    Ok(())
}

/// Checks an MTJ sequence from `i` to `j` and returns its largest jump
/// `max |W_{t+1} \ W_t|`.
pub fn validate_mtj(
    g: &Graph,
    i: &VertexSet,
    j: &VertexSet,
    seq: &Sequence,
) -> Result<usize, SequenceError> {
    check_common(g, i, j, seq)?;
    let s = i.len();
    for (step, w) in seq.sets.iter().enumerate() {
        if w.len() != s {
            return Err(SequenceError::SizeChanged {
                step,
                expected: s,
                found: w.len(),
            });
        }
    }
    for (t, w) in seq.sets.windows(2).enumerate() {
        if same_members(&w[0], &w[1]) {
            return Err(SequenceError::Stalled { step: t + 1 });
        }
    }
    Ok(seq.max_jump())
}

/// Checks a TAR sequence from `i` to `j` and returns its largest buffer
/// `max (|I| − |W_t|)`. Sets larger than `I` are allowed.
pub fn validate_tar(
    g: &Graph,
    i: &VertexSet,
    j: &VertexSet,
    seq: &Sequence,
) -> Result<usize, SequenceError> {
    check_common(g, i, j, seq)?;
    for (t, w) in seq.sets.windows(2).enumerate() {
        let diff = w[0].symmetric_difference(&w[1]).len();
        if diff > 1 {
            return Err(SequenceError::StepTooLarge { step: t + 1, diff });
        }
    }
    Ok(seq.max_buffer())
}
