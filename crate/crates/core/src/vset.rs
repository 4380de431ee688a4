use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertex ids drawn from a fixed universe `0..n`.
///
/// Two sets are equal when they have the same universe and the same members.
/// The total order compares the sorted member lists lexicographically, which is
/// the order the enumerators emit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        s.bits.insert_range(..);
        s
    }

    /// Builds a set from ids; fails when an id is outside `0..n`.
    pub fn from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Result<Self> {
        let mut s = Self::new(n);
        for v in ids {
            if v >= n {
                return Err(Error::input(format!("vertex {v} out of range 0..{n}")));
            }
            s.bits.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        let mut s = Self::new(n);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            s.bits.insert(v);
        }
        s
    }

    /// The set as a bit mask; `None` if the universe is wider than 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.universe() > 64 {
            return None;
        }
        Some(self.iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.bits.len() {
            self.bits.set(v, false);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut r = self.clone();
        r.union_with(other);
        r
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut r = self.clone();
        r.bits.intersect_with(&other.bits);
        r
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut r = self.clone();
        r.bits.difference_with(&other.bits);
        r
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut r = self.clone();
        r.bits.symmetric_difference_with(&other.bits);
        r
    }

    pub fn complement(&self) -> VertexSet {
        let mut r = self.clone();
        r.bits.toggle_range(..);
        r
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Serializes as sorted space-separated ids, or `-` for the empty set.
    pub fn to_line(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        let ids: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        ids.join(" ")
    }

    /// Parses the one-line format produced by [`VertexSet::to_line`].
    pub fn parse_line(n: usize, line: &str, line_no: usize) -> Result<Self> {
        let t = line.trim();
        if t == "-" {
            return Ok(Self::new(n));
        }
        if t.is_empty() {
            return Err(Error::parse(line_no, "empty vertex-set line (use `-` for the empty set)"));
        }
        let mut s = Self::new(n);
        for tok in t.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad vertex id `{tok}`")))?;
            if v >= n {
                return Err(Error::parse(line_no, format!("vertex {v} out of range 0..{n}")));
            }
            if s.contains(v) {
                return Err(Error::parse(line_no, format!("duplicate vertex {v}")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Parses a file that holds a single vertex set, skipping `#` comments and blank lines.
    pub fn parse_text(n: usize, text: &str) -> Result<Self> {
        let mut found = None;
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if found.is_some() {
                return Err(Error::parse(i + 1, "expected a single vertex-set line"));
            }
            found = Some(Self::parse_line(n, t, i + 1)?);
        }
        found.ok_or_else(|| Error::parse(0, "no vertex-set line found"))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}
