use std::fmt::Write as _;

use crate::bits::Mask;
use crate::error::{check_cap, Error, Result};
use crate::vset::VertexSet;

/// Undirected simple graph on vertices `0..n`, stored as per-vertex neighbor sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::input(format!("edge {u}-{v} out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            // a set built for a larger universe may still only use valid ids
            if let Some(v) = s.iter().find(|&v| v >= self.n()) {
                return Err(Error::input(format!("vertex {v} out of range 0..{}", self.n())));
            }
        }
        Ok(())
    }

    /// Re-homes a set into this graph's universe, rejecting out-of-range ids.
    pub(crate) fn own(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        if s.universe() == self.n() {
            Ok(s.clone())
        } else {
            VertexSet::from_ids(self.n(), s.iter())
        }
    }

    /// Adjacency as bit masks; fails above 64 vertices.
    pub(crate) fn masks(&self) -> Result<Vec<Mask>> {
        check_cap("bit-mask search", self.n(), 64)?;
        Ok(self
            .adj
            .iter()
            .map(|a| a.to_mask().expect("universe checked"))
            .collect())
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(set.iter().all(|v| set.iter().all(|u| !self.adj[v].contains(u))))
    }

    /// Open (`N(U) \ U`) or closed (`N(U) ∪ U`) neighborhood.
    pub fn neighborhood(&self, set: &VertexSet, closed: bool) -> Result<VertexSet> {
        let set = self.own(set)?;
        let mut out = VertexSet::new(self.n());
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        if closed {
            out.union_with(&set);
        } else {
            out = out.difference(&set);
        }
        Ok(out)
    }

    /// `G[U]` with vertices renumbered `0..|U|` in increasing original order.
    /// The returned map sends new ids to original ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let set = self.own(set)?;
        let map: Vec<usize> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].iter() {
                let j = index[u];
                if j != usize::MAX && j > i {
                    h.add_edge(i, j)?;
                }
            }
        }
        Ok((h, map))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for u in self.adj[v].iter() {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
        let nums = parse_pair(header, hl)?;
        let (n, m) = nums;
        let mut g = Graph::new(n);
        let mut count = 0;
        for (ln, line) in lines {
            let (u, v) = parse_pair(line, ln)?;
            if u >= n || v >= n {
                return Err(Error::parse(ln, format!("edge {u} {v} out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::parse(ln, format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::parse(ln, format!("duplicate edge {u} {v}")));
            }
            g.add_edge(u, v)?;
            count += 1;
        }
        if count != m {
            return Err(Error::parse(hl, format!("header announces {m} edges, found {count}")));
        }
        Ok(g)
    }

    /// Serializes in the format read by [`Graph::parse`], edges sorted.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn parse_pair(line: &str, ln: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::parse(ln, "expected two integers"))?;
        tok.parse()
            .map_err(|_| Error::parse(ln, format!("bad integer `{tok}`")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(ln, "expected exactly two integers"));
    }
    Ok((a, b))
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
