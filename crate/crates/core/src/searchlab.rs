//! Exhaustive generation of small graphs and empirical scans of which ones
//! are minor-balanced.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canon::{canonical_form_colored, canonical_labeling, CanonicalCode};
use crate::catalog::{enumerate_b, membership, Membership};
use crate::error::{domain, Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::graph6::emit_graph6;
use crate::minor::{balance_check_with, BalanceMode, SearchConfig};
use crate::rational::{q, Rational};

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Largest order scanned without an explicit opt-in.
pub const DEFAULT_SCAN_LIMIT: usize = 8;

/// Isomorphism class counts for 1..=10 vertices.
pub const KNOWN_COUNTS: [usize; 10] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];
pub const KNOWN_CONNECTED_COUNTS: [usize; 10] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

/// Maps `f` over `items` on `jobs` threads; output order matches input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs.min(items.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("workers have finished").into_iter().map(|r| r.expect("every slot filled")).collect()
}

/// Is the new vertex `x` of `c` in the orbit of the canonically chosen
/// vertex: the maximum-degree vertex placed last by the canonical labelling?
fn is_canonical_extension(c: &Graph, x: usize) -> bool {
    let degrees = c.degrees();
    let max = *degrees.iter().max().expect("non-empty");
    if degrees[x] != max {
        return false;
    }
    let canon = canonical_labeling(c);
    let w = *canon.labeling.iter().rev().find(|&&v| degrees[v] == max).expect("a vertex has maximum degree");
    if w == x {
        return true;
    }
    // Orbits of the automorphisms found so far; a miss here is settled
    // exactly by comparing individualised codes.
    let n = c.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for perm in &canon.automorphisms {
        for (v, &img) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, img as usize));
            if a != b {
                parent[a] = b;
            }
        }
    }
    if find(&mut parent, x) == find(&mut parent, w) {
        return true;
    }
    let mark = |v: usize| -> Vec<u32> { (0..n).map(|u| u32::from(u == v)).collect() };
    canonical_form_colored(c, &mark(x)) == canonical_form_colored(c, &mark(w))
}

/// Canonical children of `p`: one new vertex joined to each subset, kept
/// when the new vertex is the canonical one, deduplicated by code.
fn children(p: &Graph) -> Vec<Graph> {
    let k = p.order();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1u64 << k) {
        let mut rows = p.rows().to_vec();
        for v in Bits(s) {
            rows[v] |= bit(k);
        }
        rows.push(s);
        let c = Graph::from_rows_unchecked(rows);
        if is_canonical_extension(&c, k) {
            let code = crate::canon::canonical_form(&c);
            if seen.insert(code) {
                out.push(c);
            }
        }
    }
    out
}

fn descend(g: &Graph, n: usize, connected_only: bool, sink: &mut dyn FnMut(Graph)) {
    if g.order() == n {
        if !connected_only || g.is_connected() {
            sink(g.clone());
        }
        return;
    }
    for c in children(g) {
        descend(&c, n, connected_only, sink);
    }
}

/// One representative per isomorphism class on `n` vertices, in a fixed
/// order that does not depend on `jobs`.
pub fn enumerate_graphs_with(n: usize, connected_only: bool, jobs: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return domain("enumeration needs n >= 1");
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit { n, limit: MAX_ENUMERATION_ORDER });
    }
    // Split the tree a few levels down so workers get balanced subtrees.
    let split = n.min(5);
    let mut frontier = vec![Graph::empty(1)?];
    while frontier[0].order() < split {
        frontier = frontier.iter().flat_map(children).collect();
    }
    let parts = par_map(&frontier, jobs, |root| {
        let mut out = Vec::new();
        descend(root, n, connected_only, &mut |g| out.push(g));
        out
    });
    Ok(parts.into_iter().flatten().collect())
}

pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n, connected_only, 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hit {
    pub graph6: String,
    pub v: usize,
    pub e: usize,
    pub rho: Rational,
    /// The density the mode compares (equal to `rho` for `t = 0`).
    pub value: Rational,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelTotal {
    pub n: usize,
    pub graphs: usize,
    pub hits: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub max_n: usize,
    pub mode: BalanceMode,
    pub hits: Vec<Hit>,
    pub totals: Vec<LevelTotal>,
    /// Graphs whose check ran out of budget.
    pub flagged: Vec<String>,
    pub partial: bool,
    /// Wall-clock time; kept out of serialized output so reports compare
    /// byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub search: SearchConfig,
    pub jobs: usize,
    /// Permits `max_n` above [`DEFAULT_SCAN_LIMIT`].
    pub allow_large: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { search: SearchConfig::default(), jobs: 1, allow_large: false }
    }
}

enum Outcome {
    Hit(Hit),
    Miss,
    Flagged(String),
}

fn classify(g: &Graph, mode: BalanceMode, cfg: &SearchConfig) -> Result<Outcome> {
    match balance_check_with(g, mode, cfg) {
        Ok(r) if r.verdict => Ok(Outcome::Hit(Hit {
            graph6: emit_graph6(g),
            v: g.order(),
            e: g.size(),
            rho: Rational::new(g.size() as i128, g.order().max(1) as i128),
            value: r.value,
            connected: g.is_connected(),
        })),
        Ok(_) => Ok(Outcome::Miss),
        Err(Error::BudgetExceeded(_)) => Ok(Outcome::Flagged(emit_graph6(g))),
        Err(e) => Err(e),
    }
}

/// Classifies the given graphs. Totals are grouped by order.
pub fn scan_graphs(graphs: &[Graph], mode: BalanceMode, opts: &ScanOptions) -> Result<ScanReport> {
    let start = Instant::now();
    // The outer pool already uses the cores; each check runs sequentially.
    let cfg = SearchConfig { jobs: 1, ..opts.search.clone() };
    let outcomes = par_map(graphs, opts.jobs, |g| classify(g, mode, &cfg));
    let mut report = ScanReport {
        max_n: graphs.iter().map(Graph::order).max().unwrap_or(0),
        mode,
        hits: Vec::new(),
        totals: Vec::new(),
        flagged: Vec::new(),
        partial: false,
        elapsed: Duration::ZERO,
    };
    for (g, outcome) in graphs.iter().zip(outcomes) {
        let n = g.order();
        let pos = match report.totals.iter().position(|t| t.n == n) {
            Some(p) => p,
            None => {
                report.totals.push(LevelTotal { n, graphs: 0, hits: 0, flagged: 0 });
                report.totals.len() - 1
            }
        };
        report.totals[pos].graphs += 1;
        match outcome? {
            Outcome::Hit(h) => {
                report.totals[pos].hits += 1;
                report.hits.push(h);
            }
            Outcome::Miss => {}
            Outcome::Flagged(s) => {
                report.totals[pos].flagged += 1;
                report.flagged.push(s);
            }
        }
    }
    report.totals.sort_by_key(|t| t.n);
    report.partial = !report.flagged.is_empty();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Every isomorphism class on `1..=max_n` vertices, classified under `mode`.
pub fn scan_balanced(max_n: usize, mode: BalanceMode, opts: &ScanOptions) -> Result<ScanReport> {
    if max_n > DEFAULT_SCAN_LIMIT && !opts.allow_large {
        return Err(Error::SizeLimit { n: max_n, limit: DEFAULT_SCAN_LIMIT });
    }
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_graphs_with(n, false, opts.jobs)?);
    }
    let mut report = scan_graphs(&graphs, mode, opts)?;
    report.max_n = max_n;
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub max_n: usize,
    pub densities_found: Vec<Rational>,
    /// Found densities below 2 that the catalog rejects.
    pub catalog_misses: Vec<Rational>,
    /// Catalog values whose witness fits in `max_n` vertices but which no
    /// scanned graph attains.
    pub witness_misses: Vec<Rational>,
    pub flagged: Vec<String>,
    pub partial: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.catalog_misses.is_empty() && self.witness_misses.is_empty() && !self.partial
    }
}

/// Compares densities of minor-balanced graphs found by scanning against
/// the catalog, in both directions.
pub fn crosscheck(max_n: usize, opts: &ScanOptions) -> Result<CrosscheckReport> {
    let scan = scan_balanced(max_n, BalanceMode::MinorBalanced, opts)?;
    crosscheck_report(&scan)
}

/// The comparison step of [`crosscheck`], on an existing minor-balanced scan.
pub fn crosscheck_report(scan: &ScanReport) -> Result<CrosscheckReport> {
    if scan.mode != BalanceMode::MinorBalanced {
        return domain("a crosscheck needs a minor_balanced scan");
    }
    let two = Rational::from_integer(2);
    let found: BTreeSet<Rational> = scan.hits.iter().map(|h| h.rho).filter(|r| *r < two).collect();
    let catalog_misses =
        found.iter().copied().filter(|r| !matches!(membership(*r), Membership::InB { .. })).collect();
    // Every witness with at most max_n vertices has its value below this.
    let hi = two - q(1, scan.max_n as i128 + 2);
    let witness_misses = enumerate_b(Rational::ZERO, hi, Some(scan.max_n))?
        .into_iter()
        .map(|e| e.beta)
        .filter(|b| !found.contains(b))
        .collect();
    Ok(CrosscheckReport {
        max_n: scan.max_n,
        densities_found: found.into_iter().collect(),
        catalog_misses,
        witness_misses,
        flagged: scan.flagged.clone(),
        partial: scan.partial,
        elapsed: scan.elapsed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::families::build_star_of_plants;
    use crate::graph6::parse_graph6;
    use crate::oracle;

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=6 {
            let all = enumerate_graphs(n, false).unwrap();
            let conn = enumerate_graphs(n, true).unwrap();
            assert_eq!(all.len(), oracle::class_count(n, false), "n = {n}");
            assert_eq!(conn.len(), oracle::class_count(n, true), "n = {n}");
            assert_eq!(all.len(), KNOWN_COUNTS[n - 1]);
            assert_eq!(conn.len(), KNOWN_CONNECTED_COUNTS[n - 1]);
            let codes: HashSet<_> = all.iter().map(canonical_form).collect();
            assert_eq!(codes.len(), all.len());
        }
    }

    #[test]
    fn counts_to_eight() {
        for n in 7..=8 {
            assert_eq!(enumerate_graphs_with(n, false, 4).unwrap().len(), KNOWN_COUNTS[n - 1]);
            assert_eq!(enumerate_graphs_with(n, true, 4).unwrap().len(), KNOWN_CONNECTED_COUNTS[n - 1]);
        }
    }

    #[test]
    fn order_does_not_depend_on_jobs() {
        assert_eq!(enumerate_graphs_with(7, false, 1).unwrap(), enumerate_graphs_with(7, false, 3).unwrap());
    }

    #[test]
    fn enumeration_limits() {
        assert!(enumerate_graphs(0, false).is_err());
        assert!(matches!(enumerate_graphs(11, false), Err(Error::SizeLimit { n: 11, limit: 10 })));
        assert_eq!(enumerate_graphs(1, false).unwrap(), vec![Graph::empty(1).unwrap()]);
    }

    fn contains_iso(report: &ScanReport, g: &Graph) -> bool {
        let code = canonical_form(g);
        report.hits.iter().any(|h| canonical_form(&parse_graph6(&h.graph6).unwrap()) == code)
    }

    #[test]
    fn strict_scan_examples() {
        let r = scan_balanced(5, BalanceMode::StrictlyMinorBalanced, &ScanOptions::default()).unwrap();
        assert!(!r.partial);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let bowtie = build_star_of_plants(2, 2, 0).unwrap();
        assert!(contains_iso(&r, &Graph::complete(5).unwrap()));
        assert!(contains_iso(&r, &diamond));
        assert!(contains_iso(&r, &bowtie));
        for n in 1..=5 {
            assert!(contains_iso(&r, &Graph::path(n).unwrap()));
        }
        // Longer cycles contract onto C3 without losing density.
        assert!(contains_iso(&r, &Graph::cycle(3).unwrap()));
        for n in 4..=5 {
            assert!(!contains_iso(&r, &Graph::cycle(n).unwrap()));
        }
        // 2-trees on five vertices: K+_{2,3}, the fan P4^+, and the
        // triangle strip.
        let two_trees = [
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap(),
        ];
        for g in &two_trees {
            assert!(contains_iso(&r, g));
        }
    }

    #[test]
    fn non_strict_scan_excludes_subdivided_k4() {
        let r = scan_balanced(5, BalanceMode::MinorBalanced, &ScanOptions::default()).unwrap();
        let sub = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)]).unwrap();
        assert!(!contains_iso(&r, &sub));
        assert!(contains_iso(&r, &Graph::complete(4).unwrap()));
        for n in 3..=5 {
            assert!(contains_iso(&r, &Graph::cycle(n).unwrap()));
        }
    }

    #[test]
    fn one_balanced_hits_are_connected() {
        let r = scan_balanced(5, BalanceMode::TMinorBalanced(1), &ScanOptions::default()).unwrap();
        assert!(!r.hits.is_empty());
        assert!(r.hits.iter().all(|h| h.connected));
    }

    #[test]
    fn scan_reports_match_across_jobs() {
        let a = scan_balanced(6, BalanceMode::MinorBalanced, &ScanOptions::default()).unwrap();
        let b = scan_balanced(6, BalanceMode::MinorBalanced, &ScanOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.totals.iter().map(|t| t.graphs).collect::<Vec<_>>(), KNOWN_COUNTS[..6].to_vec());
    }

    #[test]
    fn budget_failures_are_flagged() {
        let opts = ScanOptions { search: SearchConfig { budget: 2, ..Default::default() }, ..Default::default() };
        let r = scan_balanced(5, BalanceMode::StrictlyMinorBalanced, &opts).unwrap();
        assert!(r.partial);
        assert!(!r.flagged.is_empty());
        let total: usize = r.totals.iter().map(|t| t.graphs).sum();
        assert_eq!(total, KNOWN_COUNTS[..5].iter().sum::<usize>());
        assert!(scan_balanced(9, BalanceMode::MinorBalanced, &ScanOptions::default()).is_err());
    }

    #[test]
    fn crosscheck_small() {
        let r4 = crosscheck(4, &ScanOptions::default()).unwrap();
        assert!(r4.passed());
        let below_one: Vec<_> = r4.densities_found.iter().copied().filter(|r| *r < Rational::ONE).collect();
        assert_eq!(below_one, vec![q(0, 1), q(1, 2), q(2, 3), q(3, 4)]);

        let r5 = crosscheck(5, &ScanOptions::default()).unwrap();
        assert!(r5.passed());
        let mid: Vec<_> =
            r5.densities_found.iter().copied().filter(|r| *r > Rational::ONE && *r < q(3, 2)).collect();
        // 7/5 comes from the 5-vertex 2-trees.
        assert_eq!(mid, vec![q(6, 5), q(5, 4), q(7, 5)]);
    }

    #[test]
    fn crosscheck_seven_misses_twenty_thirteenths() {
        let r = crosscheck(7, &ScanOptions { jobs: 4, ..Default::default() }).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(!r.densities_found.contains(&q(20, 13)));
    }
}
