//! Path decompositions: validation, nicification, exact pathwidth by the
//! vertex-separation subset dynamic program, and first/last bag index maps.

use std::fmt;
use std::fmt::Write as _;

use crate::bits;
use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// An ordered sequence of bags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

/// The first condition a candidate decomposition breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A bag names a vertex outside the graph.
    OutOfRange { bag: usize, vertex: usize },
    /// A vertex lies in no bag.
    Uncovered { vertex: usize },
    /// No bag holds both endpoints of an edge.
    EdgeNotCovered { u: usize, v: usize },
    /// The bags holding `vertex` skip bag `gap` (0-based) between two occurrences.
    NotContiguous { vertex: usize, gap: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { bag, vertex } => {
                write!(f, "bag {} names vertex {vertex} outside the graph", bag + 1)
            }
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} lies in no bag"),
            Violation::EdgeNotCovered { u, v } => write!(f, "edge {{{u},{v}}} lies in no bag"),
            Violation::NotContiguous { vertex, gap } => {
                write!(f, "bags holding vertex {vertex} are interrupted at bag {}", gap + 1)
            }
        }
    }
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    /// Width (largest bag size minus one, at least 0) if every vertex lies in
    /// a bag, every edge lies in a bag, and each vertex's bags are contiguous.
    ///
    /// Edges are checked in order of their larger endpoint, then smaller.
    pub fn validate(&self, g: &Graph) -> std::result::Result<usize, Violation> {
        let n = g.n();
        for (i, b) in self.bags.iter().enumerate() {
            if let Some(v) = b.iter().find(|&v| v >= n) {
                return Err(Violation::OutOfRange { bag: i, vertex: v });
            }
        }
        for v in 0..n {
            if !self.bags.iter().any(|b| b.contains(v)) {
                return Err(Violation::Uncovered { vertex: v });
            }
        }
        for v in 0..n {
            for u in g.neighbors(v).iter().filter(|&u| u < v) {
                if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                    return Err(Violation::EdgeNotCovered { u, v });
                }
            }
        }
        for v in 0..n {
            let first = self.bags.iter().position(|b| b.contains(v)).expect("covered");
            let last = self.bags.iter().rposition(|b| b.contains(v)).expect("covered");
            if let Some(gap) = (first..=last).find(|&i| !self.bags[i].contains(v)) {
                return Err(Violation::NotContiguous { vertex: v, gap });
            }
        }
        Ok(width_of(&self.bags))
    }

    /// Parses `r` followed by `r` vertex-set lines.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "missing bag count"))?;
        let r: usize = header
            .parse()
            .map_err(|_| Error::parse(hl, format!("bad bag count `{header}`")))?;
        let mut bags = Vec::with_capacity(r);
        for (ln, line) in lines {
            bags.push(VertexSet::parse_line(n, line, ln)?);
        }
        if bags.len() != r {
            return Err(Error::parse(hl, format!("header announces {r} bags, found {}", bags.len())));
        }
        Ok(PathDecomposition { bags })
    }

    pub fn to_text(&self) -> String {
        bags_to_text(&self.bags)
    }

    pub fn width(&self) -> usize {
        width_of(&self.bags)
    }
}

fn width_of(bags: &[VertexSet]) -> usize {
    bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
}

fn bags_to_text(bags: &[VertexSet]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", bags.len());
    for b in bags {
        let _ = writeln!(s, "{}", b.to_line());
    }
    s
}

/// One transition between consecutive bags of a nice decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Insert(usize),
    Delete(usize),
}

/// A decomposition whose end bags are empty and whose consecutive bags
/// differ by exactly one inserted or deleted vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicePathDecomposition {
    bags: Vec<VertexSet>,
}

impl NicePathDecomposition {
    /// Checks the shape (empty ends, single-vertex steps); input error otherwise.
    pub fn new(bags: Vec<VertexSet>) -> Result<Self> {
        check_nice(&bags)?;
        Ok(NicePathDecomposition { bags })
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn width(&self) -> usize {
        width_of(&self.bags)
    }

    /// The insert/delete annotation of each transition, in order.
    pub fn steps(&self) -> Vec<Step> {
        self.bags
            .windows(2)
            .map(|w| {
                let added = w[1].difference(&w[0]);
                match added.first() {
                    Some(v) => Step::Insert(v),
                    None => Step::Delete(w[0].difference(&w[1]).first().expect("nice step")),
                }
            })
            .collect()
    }

    pub fn as_decomposition(&self) -> PathDecomposition {
        PathDecomposition {
            bags: self.bags.clone(),
        }
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<usize, Violation> {
        self.as_decomposition().validate(g)
    }

    /// 1-based index of the first and last bag containing each vertex.
    pub fn lr_maps(&self) -> LrMaps {
        let n = self.bags.first().map_or(0, VertexSet::universe);
        let mut l = vec![None; n];
        let mut r = vec![None; n];
        for (i, b) in self.bags.iter().enumerate() {
            for v in b.iter() {
                if l[v].is_none() {
                    l[v] = Some(i + 1);
                }
                r[v] = Some(i + 1);
            }
        }
        LrMaps { l, r }
    }

    pub fn to_text(&self) -> String {
        bags_to_text(&self.bags)
    }
}

/// First (`l`) and last (`r`) 1-based bag index per vertex; `None` for
/// vertices absent from every bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrMaps {
    pub l: Vec<Option<usize>>,
    pub r: Vec<Option<usize>>,
}

/// The first/last bag maps of a bag sequence that must already be nice.
pub fn lr_maps(bags: &[VertexSet]) -> Result<LrMaps> {
    Ok(NicePathDecomposition::new(bags.to_vec())?.lr_maps())
}

fn check_nice(bags: &[VertexSet]) -> Result<()> {
    let (Some(first), Some(last)) = (bags.first(), bags.last()) else {
        return Err(Error::input("nice decomposition needs at least one bag"));
    };
    if !first.is_empty() || !last.is_empty() {
        return Err(Error::input("nice decomposition must start and end with an empty bag"));
    }
    for (i, w) in bags.windows(2).enumerate() {
        let added = w[1].difference(&w[0]);
        let removed = w[0].difference(&w[1]);
        if added.len() + removed.len() != 1 {
            return Err(Error::input(format!(
                "bags {} and {} differ by {} vertices, not exactly one",
                i + 1,
                i + 2,
                added.len() + removed.len()
            )));
        }
    }
    Ok(())
}

/// Expands a valid decomposition of `g` into a nice one of the same width:
/// between consecutive bags the leaving vertices are deleted, then the
/// entering vertices inserted, each in increasing id order.
pub fn nicify(g: &Graph, p: &PathDecomposition) -> Result<NicePathDecomposition> {
    p.validate(g)
        .map_err(|v| Error::input(format!("invalid path decomposition: {v}")))?;
    let n = g.n();
    let mut cur = VertexSet::new(n);
    let mut out = vec![cur.clone()];
    let targets = p.bags.iter().cloned().chain(std::iter::once(VertexSet::new(n)));
    for target in targets {
        let target = g.own(&target)?;
        for v in cur.difference(&target).to_vec() {
            cur.remove(v);
            out.push(cur.clone());
        }
        for v in target.difference(&cur).to_vec() {
            cur.insert(v);
            out.push(cur.clone());
        }
    }
    NicePathDecomposition::new(out)
}

/// Exact pathwidth with a nice witness decomposition, capped at `cap` vertices.
///
/// Uses the vertex separation number: the minimum over vertex orderings of
/// the largest `|N(P) \ P|` over prefixes `P`. Among optimal orderings the
/// lexicographically smallest is used, so the witness is reproducible.
pub fn exact_pathwidth(g: &Graph, cap: usize) -> Result<(usize, NicePathDecomposition)> {
    check_cap("exact pathwidth", g.n(), cap.min(30))?;
    let (width, order) = vertex_separation(g)?;
    let p = decomposition_from_ordering(g, &order);
    let nice = nicify(g, &p)?;
    debug_assert_eq!(nice.width(), width);
    Ok((width, nice))
}

/// Optimal vertex separation value and the lexicographically smallest
/// ordering attaining it.
pub fn vertex_separation(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    let adj = g.masks()?;
    let full = bits::low_bits(n) as usize;
    let size = 1usize << n;
    // closed neighborhoods of every subset, built from the lowest member
    let mut nb = vec![0u32; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        nb[s] = nb[s & (s - 1)] | adj[v] as u32;
    }
    let boundary = |s: usize| (nb[s] & !(s as u32)).count_ones() as u8;
    // rest[S]: best achievable maximum over the prefixes that extend S
    let mut rest = vec![0u8; size];
    for s in (0..full).rev() {
        let mut best = u8::MAX;
        let mut free = !s & full;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let t = s | (1 << v);
            best = best.min(boundary(t).max(rest[t]));
        }
        rest[s] = best;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = 0usize;
    while s != full {
        let v = (0..n)
            .find(|&v| s & (1 << v) == 0 && boundary(s | 1 << v).max(rest[s | 1 << v]) == rest[s])
            .expect("an optimal extension exists");
        order.push(v);
        s |= 1 << v;
    }
    Ok((rest[0] as usize, order))
}

/// Bags for an ordering `π`: walking `π` backwards, bag `i` holds the `i`-th
/// vertex plus every earlier-walked vertex that still has an unwalked neighbor.
/// The width equals the largest `|N(P) \ P|` over prefixes `P` of `π`.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> PathDecomposition {
    let n = g.n();
    let walk: Vec<usize> = order.iter().rev().copied().collect();
    let mut placed = VertexSet::new(n);
    let mut bags = Vec::with_capacity(n);
    for &v in &walk {
        let mut bag: VertexSet = placed
            .iter()
            .filter(|&u| g.neighbors(u).iter().any(|w| !placed.contains(w)))
            .fold(VertexSet::new(n), |mut acc, u| {
                acc.insert(u);
                acc
            });
        bag.insert(v);
        bags.push(bag);
        placed.insert(v);
    }
    PathDecomposition { bags }
}

/// Largest `|N(P) \ P|` over the prefixes `P` of an ordering.
pub fn ordering_cost(g: &Graph, order: &[usize]) -> usize {
    let mut prefix = g.empty_set();
    let mut worst = 0;
    for &v in order {
        prefix.insert(v);
        let b = g.neighborhood(&prefix, false).expect("ids in range").len();
        worst = worst.max(b);
    }
    worst
}
