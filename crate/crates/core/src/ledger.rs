//! Corpus harnesses: per-graph parameter rows checked against every proved
//! bound, and cross-validation of the constructive algorithms on pairs of
//! independent sets.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construct::{mtj_by_bistable, mtj_by_vertex_cover, mtj_forest, tar_by_fvs, tar_by_pathwidth};
use crate::cover::{min_fvs, min_vertex_cover};
use crate::detect::{bistable_rank, bound_f, pumpkin_number};
use crate::error::Result;
use crate::graph::Graph;
use crate::pathdecomp::exact_pathwidth;
use crate::reconfig::{independent_sets, mtj_threshold, tar_threshold, validate_mtj, validate_tar, Sequence};
use crate::vset::VertexSet;
use crate::Limits;

/// One graph's parameters. Bound checks are recomputed from these values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundLedgerRow {
    pub id: String,
    pub n: usize,
    pub vc: usize,
    pub fvs: usize,
    pub pw: usize,
    pub bi: usize,
    pub pum: usize,
    pub mtj: usize,
    pub tar: usize,
}

/// Column header of [`BoundLedgerRow::to_tsv`], without the leading `#`.
pub const LEDGER_COLUMNS: [&str; 10] = ["id", "n", "vc", "fvs", "pw", "bi", "pum", "mtj", "tar", "failed"];

impl BoundLedgerRow {
    /// Each bound by name with whether it holds.
    pub fn checks(&self) -> [(&'static str, bool); 7] {
        [
            ("mtj<=max(vc,1)", self.mtj <= self.vc.max(1)),
            ("tar<=fvs+1", self.tar <= self.fvs + 1),
            ("tar<=max(pw,1)", self.tar <= self.pw.max(1)),
            ("tar<=mtj", self.tar <= self.mtj),
            ("mtj=1<=>tar=1", (self.mtj == 1) == (self.tar == 1)),
            ("mtj<=bi", self.mtj <= self.bi),
            ("bi<=f(pum)", BigUint::from(self.bi) <= bound_f(self.pum as u32)),
        ]
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks().into_iter().filter(|(_, ok)| !ok).map(|(name, _)| name).collect()
    }

    pub fn passes(&self) -> bool {
        self.failed().is_empty()
    }

    /// Tab-separated row in [`LEDGER_COLUMNS`] order; the last column lists
    /// failed bounds separated by commas, or `-`.
    pub fn to_tsv(&self) -> String {
        let failed = self.failed();
        let failed = if failed.is_empty() { "-".to_string() } else { failed.join(",") };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.id, self.n, self.vc, self.fvs, self.pw, self.bi, self.pum, self.mtj, self.tar, failed
        )
    }
}

/// Computes every parameter of `g` exactly, within `limits`.
pub fn ledger_row(id: &str, g: &Graph, limits: &Limits) -> Result<BoundLedgerRow> {
    let pw = if g.n() == 0 { 0 } else { exact_pathwidth(g, limits.pathwidth)?.0 };
    Ok(BoundLedgerRow {
        id: id.to_string(),
        n: g.n(),
        vc: min_vertex_cover(g, limits.exact)?.len(),
        fvs: min_fvs(g, limits.exact)?.len(),
        pw,
        bi: bistable_rank(g, limits.detect)?.rank,
        pum: pumpkin_number(g, limits.detect)?.0,
        mtj: mtj_threshold(g, limits.oracle)?.overall,
        tar: tar_threshold(g, limits.oracle)?.overall,
    })
}

/// Rows for every graph, in input order (computed in parallel).
pub fn check_bounds(graphs: &[(String, Graph)], limits: &Limits) -> Result<Vec<BoundLedgerRow>> {
    graphs.par_iter().map(|(id, g)| ledger_row(id, g, limits)).collect()
}

/// Renders rows as the machine-readable ledger: a `#`-prefixed header line,
/// then one tab-separated line per row.
pub fn ledger_tsv(rows: &[BoundLedgerRow]) -> String {
    let mut s = format!("#{}\n", LEDGER_COLUMNS.join("\t"));
    for r in rows {
        let _ = writeln!(s, "{}", r.to_tsv());
    }
    s
}

/// A constructive algorithm exercised by [`cross_validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    VertexCover,
    Bistable,
    Forest,
    FeedbackVertexSet,
    Pathwidth,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::VertexCover => "vc",
            Method::Bistable => "bistable",
            Method::Forest => "forest",
            Method::FeedbackVertexSet => "fvs",
            Method::Pathwidth => "pw",
        }
    }
}

/// A constructor run that failed validation or exceeded its ceiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossViolation {
    pub graph: String,
    pub method: Method,
    pub source: VertexSet,
    pub target: VertexSet,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub graphs: usize,
    pub pairs: usize,
    pub runs: usize,
    pub violations: Vec<CrossViolation>,
}

/// Ordered pairs `(I, J)`, `I ≠ J`, of equal-size nonempty independent sets;
/// when there are more than `budget`, a uniform sample of `budget` of them
/// drawn with a ChaCha8 generator seeded by `seed`, kept in enumeration order.
pub fn independent_pairs(g: &Graph, budget: usize, seed: u64) -> Result<Vec<(VertexSet, VertexSet)>> {
    let mut by_size: Vec<Vec<VertexSet>> = Vec::new();
    for w in independent_sets(g)? {
        if w.is_empty() {
            continue;
        }
        if by_size.len() < w.len() {
            by_size.resize(w.len(), Vec::new());
        }
        by_size[w.len() - 1].push(w);
    }
    let total: usize = by_size.iter().map(|l| l.len() * l.len().saturating_sub(1)).sum();
    let mut chosen: Vec<usize> = if total > budget {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample(&mut rng, total, budget).into_vec()
    } else {
        (0..total).collect()
    };
    chosen.sort_unstable();
    let mut out = Vec::with_capacity(chosen.len());
    let mut offset = 0;
    let mut next = chosen.into_iter().peekable();
    for layer in &by_size {
        let k = layer.len();
        let count = k * k.saturating_sub(1);
        while let Some(&idx) = next.peek() {
            if idx >= offset + count {
                break;
            }
            let local = idx - offset;
            let (a, b) = (local / (k - 1), local % (k - 1));
            let b = if b >= a { b + 1 } else { b };
            out.push((layer[a].clone(), layer[b].clone()));
            next.next();
        }
        offset += count;
    }
    Ok(out)
}

/// Runs every applicable constructor on every pair of every graph and checks
/// that its sequence validates and stays within the proved ceiling:
/// `max(vc(G), 1)` jumps by vertex cover, `bi(G)` by bistable rank, 1 in
/// forests, `fvs(G[I Δ J]) + 1` buffer by feedback vertex set, and
/// `max(width, 1)` buffer by pathwidth.
pub fn cross_validate(graphs: &[(String, Graph)], budget: usize, seed: u64, limits: &Limits) -> Result<CrossReport> {
    let per_graph: Vec<CrossReport> = graphs
        .par_iter()
        .map(|(id, g)| cross_validate_graph(id, g, budget, seed, limits))
        .collect::<Result<_>>()?;
    let mut report = CrossReport { graphs: graphs.len(), ..CrossReport::default() };
    for r in per_graph {
        report.pairs += r.pairs;
        report.runs += r.runs;
        report.violations.extend(r.violations);
    }
    Ok(report)
}

fn cross_validate_graph(id: &str, g: &Graph, budget: usize, seed: u64, limits: &Limits) -> Result<CrossReport> {
    let pairs = independent_pairs(g, budget, seed)?;
    let vc = min_vertex_cover(g, limits.exact)?.len();
    let bi = bistable_rank(g, limits.detect)?.rank;
    let forest = g.is_forest();
    let mut report = CrossReport { graphs: 1, pairs: pairs.len(), ..CrossReport::default() };
    for (i, j) in &pairs {
        let mut record = |method: Method, outcome: Result<(usize, usize)>| {
            report.runs += 1;
            let detail = match outcome {
                Ok((cost, ceiling)) if cost <= ceiling => return,
                Ok((cost, ceiling)) => format!("step size {cost} exceeds ceiling {ceiling}"),
                Err(e) => e.to_string(),
            };
            report.violations.push(CrossViolation {
                graph: id.to_string(),
                method,
                source: i.clone(),
                target: j.clone(),
                detail,
            });
        };
        let mtj = |seq: Result<Sequence>| -> Result<usize> { Ok(validate_mtj(g, i, j, &seq?)?) };
        let tar = |seq: Result<Sequence>| -> Result<usize> { Ok(validate_tar(g, i, j, &seq?)?) };

        record(Method::VertexCover, mtj(mtj_by_vertex_cover(g, i, j)).map(|c| (c, vc.max(1))));
        record(Method::Bistable, mtj(mtj_by_bistable(g, i, j)).map(|c| (c, bi)));
        if forest {
            record(Method::Forest, mtj(mtj_forest(g, i, j)).map(|c| (c, 1)));
        }
        let fvs_bound = || -> Result<usize> {
            let (h, _) = g.induced_subgraph(&i.symmetric_difference(j))?;
            Ok(min_fvs(&h, limits.exact)?.len() + 1)
        };
        record(
            Method::FeedbackVertexSet,
            tar(tar_by_fvs(g, i, j, None, limits.exact)).and_then(|c| Ok((c, fvs_bound()?))),
        );
        let pw_run = tar_by_pathwidth(g, i, j, None, limits.pathwidth);
        let width = pw_run.as_ref().map_or(0, |r| r.width);
        record(Method::Pathwidth, tar(pw_run.map(|r| r.sequence)).map(|c| (c, width.max(1))));
    }
    Ok(report)
}
