//! End-to-end acceptance run: every criterion prints one PASS/FAIL line, and
//! the process fails if any criterion does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{adjacency, corpus, equal_size_pairs, random_bipartite_corpus, set_of};
use num_bigint::BigUint;
use num_rational::Ratio;

use reconf::bicon::is_biconnected;
use reconf::construct::{minimal_heavy_set, prefix_neighborhoods};
use reconf::detect::{
    bistable_rank, bound_f, bound_g1, btd_structure_checks, is_bistable, isoperimetric_profile, pumpkin_number,
    validate_btd_model,
};
use reconf::gen::{btd_tree_host, complete_bipartite, cycle, pumpkin, super_pumpkin};
use reconf::ledger::{check_bounds, cross_validate};
use reconf::matching::{bipartition, max_matching_bipartite, maximum_independent_sets, Coloring};
use reconf::pathdecomp::exact_pathwidth;
use reconf::reconfig::{mtj_threshold, tar_threshold};
use reconf::{Graph, Limits, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok_or<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn even_cycle_jumps() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 2..=5 {
        let start = Instant::now();
        let k = ok_or(mtj_threshold(&cycle(2 * n).unwrap(), 22), "mtj")?.overall;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(k == n, || format!("C{}: jump threshold {k}, expected {n}", 2 * n))?;
        ensure(took < Duration::from_secs(1), || format!("C{}: took {took:?}", 2 * n))?;
    }
    Ok(format!("C4..C10 need jumps 2..5; slowest run {slowest:.2?}"))
}

fn even_cycle_buffers() -> Outcome {
    for n in 2..=5 {
        let k = ok_or(tar_threshold(&cycle(2 * n).unwrap(), 22), "tar")?.overall;
        ensure(k == 2, || format!("C{}: buffer threshold {k}, expected 2", 2 * n))?;
    }
    Ok("C4..C10 all need a buffer of 2".into())
}

fn complete_bipartite_thresholds() -> Outcome {
    for n in 2..=4 {
        let g = complete_bipartite(n, n).unwrap();
        let tar = ok_or(tar_threshold(&g, 22), "tar")?.overall;
        let mtj = ok_or(mtj_threshold(&g, 22), "mtj")?.overall;
        let pw = ok_or(exact_pathwidth(&g, 20), "pathwidth")?.0;
        ensure((tar, mtj, pw) == (n, n, n), || format!("K{n},{n}: tar {tar}, mtj {mtj}, pw {pw}"))?;
    }
    Ok("K2,2..K4,4: buffer, jump and pathwidth all equal n".into())
}

fn bound_ledger() -> Outcome {
    let start = Instant::now();
    let mut graphs = corpus(7);
    let connected = graphs.len();
    graphs.extend(random_bipartite_corpus(100));
    let rows = ok_or(check_bounds(&graphs, &Limits::default()), "ledger")?;
    let failures: Vec<String> = rows
        .iter()
        .flat_map(|r| r.failed().into_iter().map(move |b| format!("{} fails {b}", r.id)))
        .collect();
    let took = start.elapsed();
    ensure(failures.is_empty(), || failures.join("; "))?;
    ensure(took <= Duration::from_secs(600), || format!("ledger took {took:?}"))?;
    Ok(format!("{connected} connected graphs (n ≤ 7) + 100 random bipartite graphs, 0 failed rows, {took:.1?}"))
}

fn constructor_soundness() -> Outcome {
    let graphs = corpus(6);
    let report = ok_or(cross_validate(&graphs, usize::MAX, 0, &Limits::default()), "cross-validation")?;
    ensure(report.violations.is_empty(), || {
        let v = &report.violations[0];
        format!(
            "{} violations, first: {} {} {} -> {}: {}",
            report.violations.len(),
            v.graph,
            v.method.name(),
            v.source.to_line(),
            v.target.to_line(),
            v.detail
        )
    })?;
    Ok(format!("{} graphs, {} pairs, {} constructor runs, 0 violations", report.graphs, report.pairs, report.runs))
}

/// Balanced two-sided graphs without isolated vertices, with their sides.
fn balanced_bipartite_graphs() -> Vec<(String, Graph, VertexSet, VertexSet)> {
    let mut out = Vec::new();
    for (id, g) in corpus(7) {
        if let Coloring::Bipartite(b) = bipartition(&g) {
            if g.n() >= 2 && b.left.len() == b.right.len() {
                out.push((id, g, b.left, b.right));
            }
        }
    }
    for (id, g) in random_bipartite_corpus(100) {
        let nl = 1 + (id[2..].parse::<usize>().unwrap() % 5);
        let left = VertexSet::from_ids(g.n(), 0..nl).unwrap();
        if 2 * nl == g.n() && (0..g.n()).all(|v| g.degree(v) > 0) {
            let right = left.complement();
            out.push((id, g, left, right));
        }
    }
    out
}

fn heavy_sets_are_bistable() -> Outcome {
    let graphs = balanced_bipartite_graphs();
    let mut checked = 0;
    for (id, g, left, right) in &graphs {
        for side in [left, right] {
            let heavy = ok_or(minimal_heavy_set(g, side), id)?;
            let (h, _) = g.induced_subgraph(&heavy.set.union(&heavy.neighborhood)).unwrap();
            let verdict = ok_or(is_bistable(&h, 22), id)?;
            ensure(verdict.is_bistable(), || format!("{id}: heavy set {} gives {verdict:?}", heavy.set.to_line()))?;
            checked += 1;
        }
    }
    Ok(format!("{} balanced bipartite graphs, {checked} minimal heavy sets, all bistable", graphs.len()))
}

fn matched_and_biconnected(id: &str, h: &Graph) -> Result<(), String> {
    let Coloring::Bipartite(bip) = bipartition(h) else {
        return Err(format!("{id}: bistable graph is not bipartite"));
    };
    ensure(max_matching_bipartite(h, &bip).len() * 2 == h.n(), || format!("{id}: no perfect matching"))?;
    ensure(h.n() <= 2 || is_biconnected(h), || format!("{id}: has a cut vertex"))
}

fn bistable_graphs_are_matched() -> Outcome {
    let mut found = 0;
    let mut graphs = corpus(7);
    graphs.extend(random_bipartite_corpus(100));
    for (id, g) in &graphs {
        if let Some(w) = ok_or(bistable_rank(g, 16), id)?.witness {
            let (h, _) = g.induced_subgraph(&w).unwrap();
            matched_and_biconnected(id, &h)?;
            found += 1;
        }
    }
    // every bistable induced subgraph of the n ≤ 6 corpus, not only the witnesses
    for (id, g) in corpus(6) {
        for mask in 1u32..1 << g.n() {
            let (h, _) = g.induced_subgraph(&set_of(g.n(), mask)).unwrap();
            if is_bistable(&h, 22).unwrap().is_bistable() {
                matched_and_biconnected(&id, &h)?;
                found += 1;
            }
        }
    }
    Ok(format!("{found} bistable graphs found in rank sweeps and subgraph scans, all matched and biconnected"))
}

fn check_prefixes(id: &str, g: &Graph, side: &VertexSet) -> Result<usize, String> {
    let (k, nice) = ok_or(exact_pathwidth(g, 20), id)?;
    let heavy = ok_or(minimal_heavy_set(g, side), id)?;
    let prefixes = ok_or(prefix_neighborhoods(g, &heavy.set, &nice), id)?;
    for &(t, size) in &prefixes {
        ensure(size < t + k, || format!("{id}: prefix {t} has {size} neighbors at width {k}"))?;
    }
    Ok(prefixes.len())
}

fn heavy_prefixes_are_small() -> Outcome {
    let mut prefixes = 0;
    let mut graphs = 0;
    // whole bipartite corpus graphs, each side that is heavy
    for (id, g) in corpus(7).into_iter().chain(random_bipartite_corpus(100)) {
        let Coloring::Bipartite(b) = bipartition(&g) else { continue };
        for side in [&b.left, &b.right] {
            if !side.is_empty() && g.neighborhood(side, false).unwrap().len() <= side.len() {
                prefixes += check_prefixes(&id, &g, side)?;
                graphs += 1;
            }
        }
    }
    // every corpus graph through its pair differences G[I ∪ J], heavy side J
    for (id, g) in corpus(6) {
        let adj = adjacency(&g);
        for (a, b) in equal_size_pairs(&adj) {
            if a & b != 0 {
                continue;
            }
            let (h, map) = g.induced_subgraph(&set_of(g.n(), a | b)).unwrap();
            let j = VertexSet::from_ids(h.n(), (0..h.n()).filter(|&x| b >> map[x] & 1 == 1)).unwrap();
            prefixes += check_prefixes(&id, &h, &j)?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} heavy-set extractions, {prefixes} prefixes, all below t + width"))
}

fn super_pumpkins() -> Outcome {
    let mut notes = Vec::new();
    for k in 1..=3u32 {
        let start = Instant::now();
        let sp = ok_or(super_pumpkin(k), "generator")?;
        let n = sp.graph.n();
        let expected = (1usize << k) + 6 * ((1usize << (k - 1)) - 1);
        ensure(n == expected, || format!("G_{k} has {n} vertices, expected {expected}"))?;
        let sets = ok_or(maximum_independent_sets(&sp.graph, 3), "enumeration")?;
        ensure(sets.len() == 2, || format!("G_{k}: {} maximum independent sets", sets.len()))?;
        ensure(sets.iter().all(|w| w.len() == n / 2), || format!("G_{k}: maximum sets are not half the graph"))?;
        ensure(sets[0].is_disjoint(&sets[1]), || format!("G_{k}: the two sets overlap"))?;
        let (s, t) = sp.terminals;
        let one_each = sets.iter().filter(|w| w.contains(s)).count() == 1
            && sets.iter().filter(|w| w.contains(t)).count() == 1
            && sets.iter().all(|w| !(w.contains(s) && w.contains(t)));
        ensure(one_each, || format!("G_{k}: terminals not split between the sets"))?;
        ensure(sets.contains(&sp.sets[0]) && sets.contains(&sp.sets[1]), || format!("G_{k}: claimed sets differ"))?;
        let took = start.elapsed();
        ensure(took <= Duration::from_secs(300), || format!("G_{k}: enumeration took {took:?}"))?;
        notes.push(format!("|G_{k}|={n}"));
        if k == 3 {
            notes.push(format!("G_3 enumeration {took:.2?}"));
        }
    }
    let g2 = super_pumpkin(2).unwrap().graph;
    let mtj = ok_or(mtj_threshold(&g2, 22), "mtj")?.overall;
    ensure(mtj == 5, || format!("G_2 jump threshold {mtj}, expected 5"))?;
    let pum = ok_or(pumpkin_number(&g2, 16), "pumpkin")?.0;
    ensure(pum <= 54, || format!("G_2 pumpkin number {pum} > 54"))?;
    notes.push(format!("mtj(G_2)=5, pum(G_2)={pum}"));
    Ok(notes.join(", "))
}

fn btd_hosts() -> Outcome {
    let mut notes = Vec::new();
    for d in 0..=3 {
        let (host, model) = ok_or(btd_tree_host(d), "generator")?;
        ok_or(validate_btd_model(&host, &model), "validation")?
            .map_err(|v| format!("d={d}: model rejected: {v}"))?;
        let report = ok_or(btd_structure_checks(&host, &model, 16), "structure")?;
        ensure(report.equality_holds && report.matching.len() * 2 == host.n(), || {
            format!("d={d}: structure checks fail")
        })?;
        notes.push(format!("d={d}: {} vertices ok", host.n()));
    }

    let mut profile_values = Vec::new();
    for depth in 2..=4u32 {
        let n = (1usize << (depth + 1)) - 1;
        let tree = Graph::from_edges(n, (1..n).map(|v| ((v - 1) / 2, v))).unwrap();
        let profile = ok_or(isoperimetric_profile(&tree), "profile")?;
        profile_values.push(profile.into_iter().max().unwrap_or(0));
    }
    ensure(profile_values.windows(2).all(|w| w[0] <= w[1]), || {
        format!("tree profile not monotone: {profile_values:?}")
    })?;
    notes.push(format!("tree profile depths 2..4 = {profile_values:?}"));

    // exact buffer thresholds of the hosts, each attempted independently
    let mut problems = Vec::new();
    let mut thresholds = Vec::new();
    for d in 0..=2 {
        let (host, _) = btd_tree_host(d).unwrap();
        match tar_threshold(&host, Limits::default().oracle) {
            Ok(r) => thresholds.push((d, r.overall)),
            Err(e) => problems.push(format!("d={d} host ({} vertices) not computed: {e}", host.n())),
        }
    }
    notes.push(format!("host buffer thresholds (d, tar) {thresholds:?}"));
    if let Some(w) = thresholds.windows(2).find(|w| w[0].1 >= w[1].1) {
        problems.push(format!("not strictly increasing from d={} to d={}", w[0].0, w[1].0));
    }
    if problems.is_empty() {
        Ok(notes.join(", "))
    } else {
        Err(format!("{}; {}", notes.join(", "), problems.join("; ")))
    }
}

fn pumpkin_half_jumps() -> Outcome {
    let mut checked = Vec::new();
    for size in [6usize, 8, 10] {
        for lengths in pumpkin_shapes(size - 2) {
            let (g, _) = ok_or(pumpkin(&lengths), "generator")?;
            ensure(g.n() == size, || format!("{lengths:?} has {} vertices", g.n()))?;
            let mtj = ok_or(mtj_threshold(&g, 22), "mtj")?.overall;
            let half = bound_g1(size as u64);
            ensure(Ratio::from_integer(mtj as u64) == half, || format!("{lengths:?}: jump {mtj}, expected {half}"))?;
            checked.push(format!("{lengths:?}"));
        }
    }
    Ok(format!("{} pumpkins of sizes 6, 8, 10 need exactly half their size", checked.len()))
}

/// Odd path lengths (nondecreasing, at least two, at most one of length 1)
/// whose interiors total `interior` vertices.
fn pumpkin_shapes(interior: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 && cur.len() >= 2 {
            out.push(cur.clone());
        }
        let mut len = min;
        while len - 1 <= left {
            if !(len == 1 && cur.contains(&1)) {
                cur.push(len);
                go(left - (len - 1), len, cur, out);
                cur.pop();
            }
            len += 2;
        }
    }
    let mut out = Vec::new();
    go(interior, 1, &mut Vec::new(), &mut out);
    out
}

/// Decimal schoolbook evaluation of `(k³ + k²)^(k² + 1) + 1`.
fn decimal_bound(k: u64) -> String {
    let base = k * k * k + k * k;
    let mut digits = vec![1u64]; // little-endian
    for _ in 0..k * k + 1 {
        let mut carry = 0;
        for d in digits.iter_mut() {
            let x = *d * base + carry;
            *d = x % 10;
            carry = x / 10;
        }
        while carry > 0 {
            digits.push(carry % 10);
            carry /= 10;
        }
    }
    let mut i = 0;
    loop {
        if i == digits.len() {
            digits.push(0);
        }
        digits[i] += 1;
        if digits[i] < 10 {
            break;
        }
        digits[i] = 0;
        i += 1;
    }
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    digits.iter().rev().map(|d| d.to_string()).collect()
}

fn formula_checks() -> Outcome {
    ensure(bound_f(0) == BigUint::from(1u32), || format!("f(0) = {}", bound_f(0)))?;
    ensure(bound_f(1) == BigUint::from(5u32), || format!("f(1) = {}", bound_f(1)))?;
    ensure(bound_f(2) == BigUint::from(248_833u32), || format!("f(2) = {}", bound_f(2)))?;
    for k in 0..=5 {
        let independent = decimal_bound(k);
        ensure(bound_f(k as u32).to_string() == independent, || format!("f({k}) = {} vs {independent}", bound_f(k as u32)))?;
    }
    ensure(bound_g1(6) == Ratio::new(3, 1), || "g1(6) != 3".into())?;
    Ok(format!("f(0)=1, f(1)=5, f(2)=248833; f(0..5) match decimal evaluation (f(5) has {} digits)", decimal_bound(5).len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("even-cycle jump thresholds", even_cycle_jumps),
        ("even-cycle buffer thresholds", even_cycle_buffers),
        ("complete bipartite thresholds and pathwidth", complete_bipartite_thresholds),
        ("bound ledger over corpora", bound_ledger),
        ("constructor soundness", constructor_soundness),
        ("minimal heavy sets induce bistable graphs", heavy_sets_are_bistable),
        ("bistable graphs are matched and biconnected", bistable_graphs_are_matched),
        ("heavy-set prefixes have small neighborhoods", heavy_prefixes_are_small),
        ("super-pumpkin family", super_pumpkins),
        ("theta-decomposition hosts", btd_hosts),
        ("pumpkins need half-size jumps", pumpkin_half_jumps),
        ("bound formula", formula_checks),
    ];
    let mut failed = Vec::new();
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>().map(String::as_str))));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{took:.2?}]", idx + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why} [{took:.2?}]", idx + 1);
                failed.push(idx + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        println!("failed: {failed:?}");
        std::process::exit(1);
    }
}
