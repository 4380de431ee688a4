//! Bipartite topological double minor models: validation of an explicit
//! model and the matching/half-bound structure of hosts it covers.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{bipartition, maximum_independent_sets, Bipartition, Coloring};
use crate::vset::VertexSet;

/// An explicit model of a pattern graph `H` in a bipartite host: each pattern
/// vertex maps to a host edge or even cycle (listed in cyclic order), and each
/// pattern edge to two host paths of odd length. `psi1[k]` and `psi2[k]`
/// belong to the `k`-th edge of `pattern.edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BtdModel {
    pub pattern: Graph,
    pub phi: Vec<Vec<usize>>,
    pub psi1: Vec<Vec<usize>>,
    pub psi2: Vec<Vec<usize>>,
}

/// The first condition an explicit model breaks. Pattern edges are named by
/// their endpoints; `which` is 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BtdViolation {
    /// The image of a pattern vertex is neither a host edge nor an even cycle.
    PhiShape { vertex: usize },
    /// A connector is not a simple path of odd length in the host.
    PsiShape { edge: (usize, usize), which: u8 },
    /// Images of two distinct pattern vertices share a host vertex.
    PhiOverlap { u: usize, v: usize, shared: usize },
    /// A vertex of a pattern vertex's image is interior to a connector.
    PhiInsidePsi { vertex: usize, edge: (usize, usize), which: u8, shared: usize },
    /// Two connectors share an interior vertex.
    PsiOverlap { first: ((usize, usize), u8), second: ((usize, usize), u8), shared: usize },
    /// A connector does not run between the images of its edge's endpoints.
    Endpoints { edge: (usize, usize), which: u8 },
    /// Both connectors of an edge attach to a pattern vertex's image on the
    /// same side of the host bipartition.
    SameSide { edge: (usize, usize), vertex: usize },
}

impl BtdViolation {
    /// The numbered model condition this violation breaks (0 for the shape
    /// requirements on images and connectors).
    pub fn condition(&self) -> u8 {
        match self {
            BtdViolation::PhiShape { .. } | BtdViolation::PsiShape { .. } => 0,
            BtdViolation::PhiOverlap { .. } => 1,
            BtdViolation::PhiInsidePsi { .. } => 2,
            BtdViolation::PsiOverlap { .. } => 3,
            BtdViolation::Endpoints { .. } => 4,
            BtdViolation::SameSide { .. } => 5,
        }
    }
}

impl fmt::Display for BtdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BtdViolation::PhiShape { vertex } => {
                write!(f, "image of pattern vertex {vertex} is neither an edge nor an even cycle")
            }
            BtdViolation::PsiShape { edge: (u, v), which } => {
                write!(f, "psi{which} of edge {u}-{v} is not a simple odd-length path")
            }
            BtdViolation::PhiOverlap { u, v, shared } => {
                write!(f, "condition 1: images of {u} and {v} share host vertex {shared}")
            }
            BtdViolation::PhiInsidePsi { vertex, edge: (a, b), which, shared } => write!(
                f,
                "condition 2: host vertex {shared} of the image of {vertex} is interior to psi{which} of edge {a}-{b}"
            ),
            BtdViolation::PsiOverlap { first: ((a, b), i), second: ((c, d), j), shared } => write!(
                f,
                "condition 3: psi{i} of edge {a}-{b} and psi{j} of edge {c}-{d} share interior vertex {shared}"
            ),
            BtdViolation::Endpoints { edge: (u, v), which } => {
                write!(f, "condition 4: psi{which} of edge {u}-{v} does not join the images of {u} and {v}")
            }
            BtdViolation::SameSide { edge: (u, v), vertex } => write!(
                f,
                "condition 5: both connectors of edge {u}-{v} attach to the image of {vertex} on the same side"
            ),
        }
    }
}

impl BtdModel {
    fn check_shape(&self, host: &Graph) -> Result<()> {
        let (n, m) = (self.pattern.n(), self.pattern.m());
        if self.phi.len() != n || self.psi1.len() != m || self.psi2.len() != m {
            return Err(Error::input(format!(
                "model lists {} images, {} psi1 and {} psi2 paths for a pattern with {n} vertices and {m} edges",
                self.phi.len(),
                self.psi1.len(),
                self.psi2.len()
            )));
        }
        let all = self.phi.iter().chain(&self.psi1).chain(&self.psi2);
        if let Some(&x) = all.flatten().find(|&&x| x >= host.n()) {
            return Err(Error::input(format!("model names vertex {x} outside the host")));
        }
        Ok(())
    }

    /// Connectors as `(edge, which, path)`, edges in pattern order.
    fn connectors(&self) -> Vec<((usize, usize), u8, &[usize])> {
        let edges = self.pattern.edges();
        let mut out = Vec::with_capacity(2 * edges.len());
        for (k, &e) in edges.iter().enumerate() {
            out.push((e, 1, self.psi1[k].as_slice()));
            out.push((e, 2, self.psi2[k].as_slice()));
        }
        out
    }

    /// The pieces of the model over a host with `n` vertices: every image,
    /// then every nonempty connector interior.
    pub fn pieces(&self, n: usize) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        for img in &self.phi {
            out.push(VertexSet::from_ids(n, img.iter().copied())?);
        }
        for (_, _, p) in self.connectors() {
            if p.len() > 2 {
                out.push(VertexSet::from_ids(n, p[1..p.len() - 1].iter().copied())?);
            }
        }
        Ok(out)
    }

    /// Reads the model text format: `pattern <n> <m>`, then `m` pattern edge
    /// lines `u v`, then lines `phi <v>: <ids>`, `psi1 <u> <v>: <ids>` and
    /// `psi2 <u> <v>: <ids>`. `#` comments and blank lines are ignored.
    pub fn parse(text: &str) -> Result<BtdModel> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "missing `pattern <n> <m>` line"))?;
        let nums = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["pattern", n, m] => (number(n, hl)?, number(m, hl)?),
            _ => return Err(Error::parse(hl, "expected `pattern <n> <m>`")),
        };
        let (n, m) = nums;
        let mut edge_text = format!("{n} {m}\n");
        for _ in 0..m {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| Error::parse(hl, format!("expected {m} pattern edge lines")))?;
            let _ = writeln!(edge_text, "{}", l);
            if l.contains(':') {
                return Err(Error::parse(ln, "expected a pattern edge `u v`"));
            }
        }
        let pattern = Graph::parse(&edge_text).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(hl, format!("pattern: {msg}")),
            other => other,
        })?;
        let edges = pattern.edges();
        let mut phi = vec![None; n];
        let mut psi1 = vec![None; m];
        let mut psi2 = vec![None; m];
        for (ln, l) in lines {
            let (head, body) = l
                .split_once(':')
                .ok_or_else(|| Error::parse(ln, "expected `phi ...:` or `psi1/psi2 ...:`"))?;
            let ids = body
                .split_whitespace()
                .map(|t| number(t, ln))
                .collect::<Result<Vec<usize>>>()?;
            let head: Vec<&str> = head.split_whitespace().collect();
            let slot = match head.as_slice() {
                ["phi", v] => {
                    let v = number(v, ln)?;
                    phi.get_mut(v).ok_or_else(|| Error::parse(ln, format!("pattern vertex {v} out of range")))?
                }
                [kind @ ("psi1" | "psi2"), u, v] => {
                    let (u, v) = (number(u, ln)?, number(v, ln)?);
                    let key = (u.min(v), u.max(v));
                    let k = edges
                        .binary_search(&key)
                        .map_err(|_| Error::parse(ln, format!("{u}-{v} is not a pattern edge")))?;
                    if *kind == "psi1" {
                        &mut psi1[k]
                    } else {
                        &mut psi2[k]
                    }
                }
                _ => return Err(Error::parse(ln, format!("unknown model line `{}`", head.join(" ")))),
            };
            if slot.replace(ids).is_some() {
                return Err(Error::parse(ln, "entry given twice"));
            }
        }
        let missing = |what: String| Error::input(format!("model is missing {what}"));
        Ok(BtdModel {
            phi: phi
                .into_iter()
                .enumerate()
                .map(|(v, x)| x.ok_or_else(|| missing(format!("phi {v}"))))
                .collect::<Result<_>>()?,
            psi1: psi1
                .into_iter()
                .zip(&edges)
                .map(|(x, (u, v))| x.ok_or_else(|| missing(format!("psi1 {u} {v}"))))
                .collect::<Result<_>>()?,
            psi2: psi2
                .into_iter()
                .zip(&edges)
                .map(|(x, (u, v))| x.ok_or_else(|| missing(format!("psi2 {u} {v}"))))
                .collect::<Result<_>>()?,
            pattern,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "pattern {} {}", self.pattern.n(), self.pattern.m());
        for (u, v) in self.pattern.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        let list = |ids: &[usize]| ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        for (v, img) in self.phi.iter().enumerate() {
            let _ = writeln!(s, "phi {v}: {}", list(img));
        }
        for (e, which, p) in self.connectors() {
            let _ = writeln!(s, "psi{which} {} {}: {}", e.0, e.1, list(p));
        }
        s
    }
}

fn number(t: &str, ln: usize) -> Result<usize> {
    t.parse().map_err(|_| Error::parse(ln, format!("`{t}` is not a vertex id")))
}

fn is_edge_or_even_cycle(host: &Graph, img: &[usize]) -> bool {
    let distinct = {
        let mut s = img.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == img.len()
    };
    match img.len() {
        2 => host.has_edge(img[0], img[1]),
        k if k >= 4 && k % 2 == 0 => distinct && (0..k).all(|i| host.has_edge(img[i], img[(i + 1) % k])),
        _ => false,
    }
}

fn is_odd_path(host: &Graph, p: &[usize]) -> bool {
    let mut s = p.to_vec();
    s.sort_unstable();
    s.dedup();
    p.len() >= 2 && p.len().is_multiple_of(2) && s.len() == p.len() && p.windows(2).all(|w| host.has_edge(w[0], w[1]))
}

/// Checks `model` against `host`, returning the first violated requirement:
/// image and connector shapes, then the five model conditions in order.
/// Sides are those of the host's canonical two-coloring; connectors are
/// required to be pairwise internally disjoint, including the two of a
/// single edge and same-index connectors of different edges.
pub fn validate_btd_model(host: &Graph, model: &BtdModel) -> Result<std::result::Result<(), BtdViolation>> {
    let bip = match bipartition(host) {
        Coloring::Bipartite(b) => b,
        Coloring::OddCycle(_) => return Err(Error::input("model host must be bipartite")),
    };
    model.check_shape(host)?;
    Ok(check_conditions(host, &bip, model))
}

fn check_conditions(host: &Graph, bip: &Bipartition, model: &BtdModel) -> std::result::Result<(), BtdViolation> {
    for (v, img) in model.phi.iter().enumerate() {
        if !is_edge_or_even_cycle(host, img) {
            return Err(BtdViolation::PhiShape { vertex: v });
        }
    }
    let conns = model.connectors();
    for &(edge, which, p) in &conns {
        if !is_odd_path(host, p) {
            return Err(BtdViolation::PsiShape { edge, which });
        }
    }

    let mut owner = vec![None; host.n()];
    for (v, img) in model.phi.iter().enumerate() {
        for &x in img {
            if let Some(u) = owner[x].replace(v) {
                return Err(BtdViolation::PhiOverlap { u, v, shared: x });
            }
        }
    }
    let interior = |p: &[usize]| p[1..p.len() - 1].to_vec();
    for &(edge, which, p) in &conns {
        if let Some(&x) = interior(p).iter().find(|&&x| owner[x].is_some()) {
            let vertex = owner[x].expect("checked");
            return Err(BtdViolation::PhiInsidePsi { vertex, edge, which, shared: x });
        }
    }
    let mut claimed: Vec<Option<usize>> = vec![None; host.n()];
    for (idx, &(edge, which, p)) in conns.iter().enumerate() {
        for x in interior(p) {
            if let Some(j) = claimed[x].replace(idx) {
                let (e0, w0, _) = conns[j];
                return Err(BtdViolation::PsiOverlap {
                    first: (e0, w0),
                    second: (edge, which),
                    shared: x,
                });
            }
        }
    }
    for &(edge, which, p) in &conns {
        let (a, b) = (p[0], p[p.len() - 1]);
        let (u, v) = edge;
        let joins = (owner[a] == Some(u) && owner[b] == Some(v)) || (owner[a] == Some(v) && owner[b] == Some(u));
        if !joins {
            return Err(BtdViolation::Endpoints { edge, which });
        }
    }
    for pair in conns.chunks(2) {
        let (edge, _, p1) = pair[0];
        let (_, _, p2) = pair[1];
        for vertex in [edge.0, edge.1] {
            let attach = |p: &[usize]| {
                if owner[p[0]] == Some(vertex) {
                    p[0]
                } else {
                    p[p.len() - 1]
                }
            };
            if bip.side_of(attach(p1)) == bip.side_of(attach(p2)) {
                return Err(BtdViolation::SameSide { edge, vertex });
            }
        }
    }
    Ok(())
}

/// What a covering model certifies about its host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BtdStructureReport {
    /// Images and nonempty connector interiors; they partition the host.
    pub pieces: Vec<VertexSet>,
    /// A perfect matching using only edges inside pieces.
    pub matching: Vec<(usize, usize)>,
    /// Number of maximum independent sets examined (enumeration is bounded).
    pub maximum_sets_checked: usize,
    /// Every examined maximum independent set holds exactly half of every piece.
    pub equality_holds: bool,
}

/// Certifies the structure a valid covering model forces: the pieces
/// partition the host, consecutive vertices inside each piece form a perfect
/// matching, and maximum independent sets (up to `limit` of them) take exactly
/// half of every piece.
pub fn btd_structure_checks(host: &Graph, model: &BtdModel, limit: usize) -> Result<BtdStructureReport> {
    if let Err(v) = validate_btd_model(host, model)? {
        return Err(Error::input(format!("invalid model: {v}")));
    }
    let pieces = model.pieces(host.n())?;
    let mut covered = host.empty_set();
    for p in &pieces {
        covered.union_with(p);
    }
    if let Some(x) = host.vertex_set().difference(&covered).first() {
        return Err(Error::input(format!("host vertex {x} lies in no image or connector interior")));
    }

    let mut matching = Vec::with_capacity(host.n() / 2);
    for img in &model.phi {
        matching.extend(img.chunks(2).map(|c| (c[0], c[1])));
    }
    for (_, _, p) in model.connectors() {
        matching.extend(p[1..p.len() - 1].chunks(2).map(|c| (c[0], c[1])));
    }
    debug_assert!(matching.iter().all(|&(a, b)| host.has_edge(a, b)));
    debug_assert_eq!(2 * matching.len(), host.n());

    let maximum = maximum_independent_sets(host, limit)?;
    let equality_holds = maximum
        .iter()
        .all(|w| pieces.iter().all(|p| 2 * w.intersection(p).len() == p.len()));
    Ok(BtdStructureReport {
        pieces,
        matching,
        maximum_sets_checked: maximum.len(),
        equality_holds,
    })
}

/// Whether `w` holds at most half of every piece of `model`.
pub fn half_bounds_hold(model: &BtdModel, w: &VertexSet) -> Result<bool> {
    let pieces = model.pieces(w.universe())?;
    Ok(pieces.iter().all(|p| 2 * w.intersection(p).len() <= p.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two 4-cycles 0..3 and 4..7 joined by 0-8-9-4 and 1-10-11-5. With
    /// `spare`, a path 2-12-13-6 allows a same-side reattachment.
    fn two_squares(spare: bool) -> (Graph, BtdModel) {
        let mut edges = vec![
            (0, 1), (1, 2), (2, 3), (3, 0),
            (4, 5), (5, 6), (6, 7), (7, 4),
            (0, 8), (8, 9), (9, 4),
            (1, 10), (10, 11), (11, 5),
        ];
        if spare {
            edges.extend([(2, 12), (12, 13), (13, 6)]);
        }
        let host = Graph::from_edges(if spare { 14 } else { 12 }, edges).unwrap();
        let model = BtdModel {
            pattern: Graph::from_edges(2, [(0, 1)]).unwrap(),
            phi: vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]],
            psi1: vec![vec![0, 8, 9, 4]],
            psi2: vec![vec![1, 10, 11, 5]],
        };
        (host, model)
    }

    #[test]
    fn single_vertex_pattern() {
        let host = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let model = BtdModel { pattern: Graph::new(1), phi: vec![vec![1, 2]], psi1: vec![], psi2: vec![] };
        assert_eq!(validate_btd_model(&host, &model).unwrap(), Ok(()));
    }

    #[test]
    fn accepts_and_certifies_a_valid_model() {
        let (host, model) = two_squares(false);
        assert_eq!(validate_btd_model(&host, &model).unwrap(), Ok(()));
        let report = btd_structure_checks(&host, &model, 16).unwrap();
        assert_eq!(report.pieces.len(), 4);
        assert_eq!(report.matching.len(), 6);
        assert!(report.equality_holds);
        assert!(report.maximum_sets_checked >= 2);
    }

    #[test]
    fn detects_each_condition() {
        let (host, model) = two_squares(true);
        assert_eq!(validate_btd_model(&host, &model).unwrap(), Ok(()));
        assert!(btd_structure_checks(&host, &model, 4).is_err(), "12 and 13 are uncovered");
        let same_side = BtdModel { psi2: vec![vec![2, 12, 13, 6]], ..model.clone() };
        let v = validate_btd_model(&host, &same_side).unwrap().unwrap_err();
        assert_eq!(v.condition(), 5);

        let overlap = BtdModel { phi: vec![vec![0, 1, 2, 3], vec![3, 0]], ..model.clone() };
        assert_eq!(validate_btd_model(&host, &overlap).unwrap().unwrap_err().condition(), 1);

        let through = BtdModel { psi1: vec![vec![9, 8, 0, 1]], ..model.clone() };
        assert_eq!(validate_btd_model(&host, &through).unwrap().unwrap_err().condition(), 2);

        let even = BtdModel { psi1: vec![vec![0, 8, 9]], ..model.clone() };
        assert!(matches!(
            validate_btd_model(&host, &even).unwrap(),
            Err(BtdViolation::PsiShape { which: 1, .. })
        ));

        let odd_cycle_host = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let tiny = BtdModel { pattern: Graph::new(1), phi: vec![vec![0, 1]], psi1: vec![], psi2: vec![] };
        assert!(validate_btd_model(&odd_cycle_host, &tiny).is_err());
    }

    #[test]
    fn half_bounds_on_every_independent_set() {
        let (host, model) = two_squares(false);
        for w in crate::reconfig::independent_sets(&host).unwrap() {
            assert!(half_bounds_hold(&model, &w).unwrap());
        }
    }

    #[test]
    fn text_round_trip() {
        let (_, model) = two_squares(false);
        let text = model.to_text();
        assert_eq!(BtdModel::parse(&text).unwrap(), model);
        assert!(BtdModel::parse("pattern 2 1\n0 1\nphi 0: 0 1\n").is_err());
        assert!(matches!(BtdModel::parse("pattern 1 0\nphi 3: 0 1\n"), Err(Error::Parse { line: 2, .. })));
    }
}
