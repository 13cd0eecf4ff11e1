//! Minor operations and exhaustive minor searches.
//!
//! Density questions only need vertex deletions and edge contractions:
//! every minor is a spanning subgraph of such a minor on the same vertex
//! set, and dropping edges at a fixed vertex count never raises `rho_t`.
//! States are deduplicated by canonical code, and a state is cut as soon as
//! an upper bound on the t-density of everything below it cannot matter.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{bit, choose2, low_mask, t_density_counts, Bits, Graph};
use crate::rational::Rational;

/// A single minor operation. Vertex indices refer to the graph the
/// operation is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum MinorOp {
    DeleteVertex { v: usize },
    DeleteEdge { u: usize, v: usize },
    /// Merges `v` into `u`; afterwards vertices above `v` shift down by one,
    /// and the merged vertex keeps the index of `min(u, v)`.
    ContractEdge { u: usize, v: usize },
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::DeleteVertex { v } => write!(f, "delete {v}"),
            MinorOp::DeleteEdge { u, v } => write!(f, "delete {u}-{v}"),
            MinorOp::ContractEdge { u, v } => write!(f, "contract {u}-{v}"),
        }
    }
}

/// Drops bit `v` from `r`, shifting the higher bits down.
#[inline]
fn squeeze(r: u64, v: usize) -> u64 {
    let low = r & low_mask(v);
    let high = if v >= 63 { 0 } else { (r >> (v + 1)) << v };
    low | high
}

fn delete_vertex_rows(rows: &[u64], v: usize) -> Vec<u64> {
    rows.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, &r)| squeeze(r, v)).collect()
}

fn contract_rows(rows: &[u64], a: usize, b: usize) -> Vec<u64> {
    let (u, v) = if a < b { (a, b) } else { (b, a) };
    let mut tmp = rows.to_vec();
    let merged = (rows[u] | rows[v]) & !(bit(u) | bit(v));
    tmp[u] = merged;
    for w in Bits(merged) {
        tmp[w] |= bit(u);
    }
    delete_vertex_rows(&tmp, v)
}

pub fn apply_minor_op(g: &Graph, op: MinorOp) -> Result<Graph> {
    let n = g.order();
    let check = |x: usize| if x < n { Ok(()) } else { Err(Error::NoSuchVertex(x)) };
    match op {
        MinorOp::DeleteVertex { v } => {
            check(v)?;
            Ok(Graph::from_rows_unchecked(delete_vertex_rows(g.rows(), v)))
        }
        MinorOp::DeleteEdge { u, v } => {
            check(u)?;
            check(v)?;
            let mut h = g.clone();
            h.remove_edge(u, v)?;
            Ok(h)
        }
        MinorOp::ContractEdge { u, v } => {
            check(u)?;
            check(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            Ok(Graph::from_rows_unchecked(contract_rows(g.rows(), u, v)))
        }
    }
}

pub fn apply_minor_ops(g: &Graph, ops: &[MinorOp]) -> Result<Graph> {
    ops.iter().try_fold(g.clone(), |h, &op| apply_minor_op(&h, op))
}

/// Which balance notion to test. Serialized as its display name, e.g.
/// `strictly_1_minor_balanced`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BalanceMode {
    MinorBalanced,
    StrictlyMinorBalanced,
    TMinorBalanced(usize),
    StrictlyTMinorBalanced(usize),
}

impl BalanceMode {
    pub fn t(&self) -> usize {
        match *self {
            BalanceMode::MinorBalanced | BalanceMode::StrictlyMinorBalanced => 0,
            BalanceMode::TMinorBalanced(t) | BalanceMode::StrictlyTMinorBalanced(t) => t,
        }
    }

    pub fn is_strict(&self) -> bool {
        matches!(self, BalanceMode::StrictlyMinorBalanced | BalanceMode::StrictlyTMinorBalanced(_))
    }

    /// The t-modes additionally demand a positive t-density.
    pub fn needs_positive(&self) -> bool {
        matches!(self, BalanceMode::TMinorBalanced(_) | BalanceMode::StrictlyTMinorBalanced(_))
    }

    pub fn from_parts(t: Option<usize>, strict: bool) -> BalanceMode {
        match (t, strict) {
            (None, false) => BalanceMode::MinorBalanced,
            (None, true) => BalanceMode::StrictlyMinorBalanced,
            (Some(t), false) => BalanceMode::TMinorBalanced(t),
            (Some(t), true) => BalanceMode::StrictlyTMinorBalanced(t),
        }
    }
}

impl Serialize for BalanceMode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for BalanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BalanceMode::MinorBalanced => write!(f, "minor_balanced"),
            BalanceMode::StrictlyMinorBalanced => write!(f, "strictly_minor_balanced"),
            BalanceMode::TMinorBalanced(t) => write!(f, "{t}_minor_balanced"),
            BalanceMode::StrictlyTMinorBalanced(t) => write!(f, "strictly_{t}_minor_balanced"),
        }
    }
}

/// Search limits. `budget` caps the number of distinct states expanded.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub budget: u64,
    pub memo_capacity: usize,
    pub jobs: usize,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_MEMO_CAPACITY: usize = 1 << 22;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, memo_capacity: DEFAULT_MEMO_CAPACITY, jobs: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(serialize_with = "crate::export::ser_graph6")]
    pub minor: Graph,
    /// `rho_t` of the minor, for the mode's `t`.
    pub value: Rational,
    /// Operations taking the input graph to `minor`. Empty when the input
    /// itself fails the positivity requirement of a t-mode.
    pub ops: Vec<MinorOp>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub verdict: bool,
    pub mode: BalanceMode,
    /// `rho_t` of the input graph.
    pub value: Rational,
    pub counterexample: Option<Counterexample>,
    /// Distinct canonical states expanded, the input included.
    pub explored: u64,
}

/// Two-generation set: a cheap stand-in for LRU. Entries touched in the
/// old generation are promoted; when the young one fills, the old one is
/// dropped.
struct Memo {
    young: HashSet<CanonicalCode>,
    old: HashSet<CanonicalCode>,
    half: usize,
}

impl Memo {
    fn new(capacity: usize) -> Memo {
        Memo { young: HashSet::new(), old: HashSet::new(), half: (capacity / 2).max(1) }
    }

    /// True if `code` was not present.
    fn insert(&mut self, code: CanonicalCode) -> bool {
        if self.young.contains(&code) {
            return false;
        }
        let fresh = !self.old.remove(&code);
        if self.young.len() >= self.half {
            self.old = std::mem::take(&mut self.young);
        }
        self.young.insert(code);
        fresh
    }
}

struct SharedMemo {
    shards: Vec<Mutex<Memo>>,
}

impl SharedMemo {
    fn new(capacity: usize, shards: usize) -> SharedMemo {
        SharedMemo { shards: (0..shards).map(|_| Mutex::new(Memo::new(capacity / shards))).collect() }
    }

    fn insert(&self, code: CanonicalCode) -> bool {
        let i = if self.shards.len() == 1 {
            0
        } else {
            let mut h = DefaultHasher::new();
            code.hash(&mut h);
            (h.finish() % self.shards.len() as u64) as usize
        };
        self.shards[i].lock().expect("memo lock poisoned").insert(code)
    }
}

fn components(rows: &[u64]) -> usize {
    let mut left = low_mask(rows.len());
    let mut count = 0;
    while left != 0 {
        let mut seen = left & left.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= rows[v];
            }
            next &= left & !seen;
            seen |= next;
            frontier = next;
        }
        left &= !seen;
        count += 1;
    }
    count
}

fn edge_count(rows: &[u64]) -> usize {
    rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

/// Upper bound on the edge count of a deletion/contraction minor with
/// `w < v` vertices of a state with `v` vertices, `e` edges and `c`
/// components. Each operation removes a vertex, and all but at most
/// `c - 1` of them also remove an edge.
#[inline]
fn edge_bound(v: usize, e: usize, c: usize, w: usize) -> i64 {
    let by_ops = e as i64 - (v - w) as i64 + (c as i64 - 1);
    by_ops.min(choose2(w) as i64)
}

/// `a/b` against `p/q`, all positive denominators, small magnitudes.
#[inline]
fn cmp_frac(a: i64, b: i64, p: i64, q: i64) -> std::cmp::Ordering {
    (a as i128 * q as i128).cmp(&(p as i128 * b as i128))
}

/// Does some minor of the state (itself included) reach `rho_t` above
/// (`or_equal`: at least) `num/den`?
fn may_reach(v: usize, e: usize, c: usize, t: usize, num: i64, den: i64, or_equal: bool) -> bool {
    let base = choose2(t) as i64;
    let hit = |edges: i64, w: usize| {
        let top = edges - base;
        if top <= 0 {
            // rho_t is 0 here.
            return if or_equal { num <= 0 } else { false };
        }
        let o = cmp_frac(top, (w - t) as i64, num, den);
        o == std::cmp::Ordering::Greater || (or_equal && o == std::cmp::Ordering::Equal)
    };
    if v > t && hit(e as i64, v) {
        return true;
    }
    if or_equal && num <= 0 {
        return true;
    }
    (t + 1..v).any(|w| hit(edge_bound(v, e, c, w), w))
}

/// Children of a state: contractions first (they keep density high), then
/// deletions.
fn child_ops(rows: &[u64]) -> Vec<MinorOp> {
    let n = rows.len();
    let mut ops = Vec::new();
    for u in 0..n {
        for v in Bits(rows[u] & !low_mask(u + 1)) {
            ops.push(MinorOp::ContractEdge { u, v });
        }
    }
    for v in 0..n {
        ops.push(MinorOp::DeleteVertex { v });
    }
    ops
}

fn apply_rows(rows: &[u64], op: MinorOp) -> Vec<u64> {
    match op {
        MinorOp::DeleteVertex { v } => delete_vertex_rows(rows, v),
        MinorOp::ContractEdge { u, v } => contract_rows(rows, u, v),
        MinorOp::DeleteEdge { u, v } => {
            let mut r = rows.to_vec();
            r[u] &= !bit(v);
            r[v] &= !bit(u);
            r
        }
    }
}

struct BalanceSearch<'a> {
    t: usize,
    strict: bool,
    num: i64,
    den: i64,
    memo: &'a SharedMemo,
    explored: &'a AtomicU64,
    budget: u64,
    stop: &'a AtomicBool,
}

impl BalanceSearch<'_> {
    fn violates(&self, v: usize, e: usize) -> bool {
        let r = t_density_counts(v, e, self.t);
        let o = cmp_frac(r.numer() as i64, r.denom() as i64, self.num, self.den);
        o == std::cmp::Ordering::Greater || (self.strict && o == std::cmp::Ordering::Equal)
    }

    /// Handles one child; `Some` on a violation.
    fn visit(&self, rows: Vec<u64>, path: &mut Vec<MinorOp>) -> Result<Option<Counterexample>> {
        let (v, e) = (rows.len(), edge_count(&rows));
        if v == 0 {
            return Ok(None);
        }
        if self.violates(v, e) {
            return Ok(Some(Counterexample {
                minor: Graph::from_rows_unchecked(rows),
                value: t_density_counts(v, e, self.t),
                ops: path.clone(),
            }));
        }
        // The child itself does not violate, so only proper descendants matter.
        if v <= 1 || !may_reach(v, e, components(&rows), self.t, self.num, self.den, self.strict) {
            return Ok(None);
        }
        let g = Graph::from_rows_unchecked(rows);
        if !self.memo.insert(canonical_form(&g)) {
            return Ok(None);
        }
        let seen = self.explored.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        self.expand(&g, path)
    }

    fn expand(&self, g: &Graph, path: &mut Vec<MinorOp>) -> Result<Option<Counterexample>> {
        for op in child_ops(g.rows()) {
            if self.stop.load(Ordering::Relaxed) {
                return Ok(None);
            }
            path.push(op);
            let found = self.visit(apply_rows(g.rows(), op), path)?;
            path.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

pub fn balance_check(g: &Graph, mode: BalanceMode) -> Result<BalanceReport> {
    balance_check_with(g, mode, &SearchConfig::default())
}

/// Decides `mode` for `g` by exhaustive search over deletion/contraction
/// minors. With `jobs > 1` the first-level branches are shared among
/// threads over one memo; a negative or inconclusive parallel run is
/// repeated sequentially so the report never depends on scheduling.
pub fn balance_check_with(g: &Graph, mode: BalanceMode, cfg: &SearchConfig) -> Result<BalanceReport> {
    let t = mode.t();
    let value = t_density_counts(g.order(), g.size(), t);
    if g.order() == 0 {
        return Err(Error::Domain("balance of the graph with no vertices is undefined".into()));
    }
    if mode.needs_positive() && !value.is_positive() {
        return Ok(BalanceReport {
            verdict: false,
            mode,
            value,
            counterexample: Some(Counterexample { minor: g.clone(), value, ops: Vec::new() }),
            explored: 0,
        });
    }
    if cfg.jobs > 1 {
        if let Ok(report) = balance_parallel(g, mode, value, cfg) {
            if report.verdict {
                return Ok(report);
            }
        }
    }
    balance_sequential(g, mode, value, cfg)
}

fn balance_sequential(g: &Graph, mode: BalanceMode, value: Rational, cfg: &SearchConfig) -> Result<BalanceReport> {
    let memo = SharedMemo::new(cfg.memo_capacity, 1);
    let explored = AtomicU64::new(1);
    let stop = AtomicBool::new(false);
    memo.insert(canonical_form(g));
    let search = BalanceSearch {
        t: mode.t(),
        strict: mode.is_strict(),
        num: value.numer() as i64,
        den: value.denom() as i64,
        memo: &memo,
        explored: &explored,
        budget: cfg.budget,
        stop: &stop,
    };
    let cex = search.expand(g, &mut Vec::new())?;
    Ok(BalanceReport {
        verdict: cex.is_none(),
        mode,
        value,
        counterexample: cex,
        explored: explored.load(Ordering::Relaxed),
    })
}

fn balance_parallel(g: &Graph, mode: BalanceMode, value: Rational, cfg: &SearchConfig) -> Result<BalanceReport> {
    let memo = SharedMemo::new(cfg.memo_capacity, 64);
    let explored = AtomicU64::new(1);
    let stop = AtomicBool::new(false);
    memo.insert(canonical_form(g));
    let search = BalanceSearch {
        t: mode.t(),
        strict: mode.is_strict(),
        num: value.numer() as i64,
        den: value.denom() as i64,
        memo: &memo,
        explored: &explored,
        budget: cfg.budget,
        stop: &stop,
    };
    let ops = child_ops(g.rows());
    let next = AtomicUsize::new(0);
    let outcome: Mutex<Result<Option<Counterexample>>> = Mutex::new(Ok(None));
    std::thread::scope(|s| {
        for _ in 0..cfg.jobs {
            s.spawn(|| loop {
                if stop.load(Ordering::Relaxed) {
                    return;
                }
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&op) = ops.get(i) else { return };
                let mut path = vec![op];
                match search.visit(apply_rows(g.rows(), op), &mut path) {
                    Ok(None) => {}
                    other => {
                        stop.store(true, Ordering::Relaxed);
                        let mut slot = outcome.lock().expect("outcome lock poisoned");
                        if matches!(*slot, Ok(None)) {
                            *slot = other;
                        }
                        return;
                    }
                }
            });
        }
    });
    let cex = outcome.into_inner().expect("outcome lock poisoned")?;
    Ok(BalanceReport {
        verdict: cex.is_none(),
        mode,
        value,
        counterexample: cex,
        explored: explored.load(Ordering::Relaxed),
    })
}

/// A densest minor found by [`densest_minor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensestMinor {
    pub graph: Graph,
    pub density: Rational,
    pub ops: Vec<MinorOp>,
    pub explored: u64,
}

struct Incumbent {
    num: i64,
    den: i64,
    code: CanonicalCode,
    graph: Graph,
    ops: Vec<MinorOp>,
}

struct DensestSearch {
    best: Incumbent,
    memo: Memo,
    explored: u64,
    budget: u64,
}

impl DensestSearch {
    fn consider(&mut self, g: &Graph, code: &CanonicalCode, path: &[MinorOp]) {
        let (e, v) = (g.size() as i64, g.order() as i64);
        let better = match cmp_frac(e, v, self.best.num, self.best.den) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                (v, code) < (self.best.graph.order() as i64, &self.best.code)
            }
        };
        if better {
            self.best = Incumbent { num: e, den: v, code: code.clone(), graph: g.clone(), ops: path.to_vec() };
        }
    }

    fn expand(&mut self, g: &Graph, path: &mut Vec<MinorOp>) -> Result<()> {
        for op in child_ops(g.rows()) {
            let rows = apply_rows(g.rows(), op);
            let (v, e) = (rows.len(), edge_count(&rows));
            if v == 0 {
                continue;
            }
            // Ties still matter (fewer vertices win), so cut only when the
            // bound is strictly below the incumbent.
            let c = components(&rows);
            let (num, den) = (self.best.num, self.best.den);
            let reach = (1..=v).any(|w| {
                let edges = if w == v { e as i64 } else { edge_bound(v, e, c, w) };
                edges >= 0 && cmp_frac(edges, w as i64, num, den) != std::cmp::Ordering::Less
            });
            if !reach {
                continue;
            }
            let child = Graph::from_rows_unchecked(rows);
            let code = canonical_form(&child);
            if !self.memo.insert(code.clone()) {
                continue;
            }
            self.explored += 1;
            if self.explored > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            path.push(op);
            self.consider(&child, &code, path);
            self.expand(&child, path)?;
            path.pop();
        }
        Ok(())
    }
}

pub fn densest_minor(g: &Graph) -> Result<DensestMinor> {
    densest_minor_with(g, &SearchConfig::default())
}

/// A minor of maximum density; ties go to fewer vertices, then to the
/// smaller canonical code.
pub fn densest_minor_with(g: &Graph, cfg: &SearchConfig) -> Result<DensestMinor> {
    if g.order() == 0 {
        return Err(Error::Domain("densest minor of the graph with no vertices is undefined".into()));
    }
    let code = canonical_form(g);
    let mut memo = Memo::new(cfg.memo_capacity);
    memo.insert(code.clone());
    let mut search = DensestSearch {
        best: Incumbent { num: g.size() as i64, den: g.order() as i64, code, graph: g.clone(), ops: Vec::new() },
        memo,
        explored: 1,
        budget: cfg.budget,
    };
    search.expand(g, &mut Vec::new())?;
    let b = search.best;
    Ok(DensestMinor { density: Rational::new(b.num as i128, b.den as i128), graph: b.graph, ops: b.ops, explored: search.explored })
}

/// Witness that `H` is a minor of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorCertificate {
    /// `branch_sets[h]` is the connected set of `G`-vertices standing for `h`.
    pub branch_sets: Vec<Vec<usize>>,
    /// For each edge `(a, b)` of `H` with `a < b`, a `G`-edge `(x, y)` with
    /// `x` in the branch set of `a` and `y` in that of `b`.
    pub edge_witnesses: Vec<((usize, usize), (usize, usize))>,
}

impl MinorCertificate {
    /// Independent check of the certificate against `h` and `g`.
    pub fn validate(&self, h: &Graph, g: &Graph) -> bool {
        if self.branch_sets.len() != h.order() {
            return false;
        }
        let mut used = 0u64;
        for set in &self.branch_sets {
            if set.is_empty() || set.iter().any(|&x| x >= g.order()) {
                return false;
            }
            let mask = set.iter().fold(0u64, |m, &x| m | bit(x));
            if mask.count_ones() as usize != set.len() || mask & used != 0 {
                return false;
            }
            if g.reach(set[0], mask) != mask {
                return false;
            }
            used |= mask;
        }
        let edges = h.edges();
        if self.edge_witnesses.len() != edges.len() {
            return false;
        }
        for (&(a, b), &((ha, hb), (x, y))) in edges.iter().zip(&self.edge_witnesses) {
            if (a, b) != (ha, hb) || !g.has_edge(x, y) {
                return false;
            }
            if !self.branch_sets[a].contains(&x) || !self.branch_sets[b].contains(&y) {
                return false;
            }
        }
        true
    }
}

/// Injective map of `h` into `s` preserving adjacency (not necessarily
/// induced), if one exists.
fn embed(h: &Graph, s: &Graph) -> Option<Vec<usize>> {
    let nh = h.order();
    if nh > s.order() || h.size() > s.size() {
        return None;
    }
    // Order h's vertices so each one after the first of its component has
    // an earlier neighbour; start from high degrees.
    let mut order = Vec::with_capacity(nh);
    let mut placed = 0u64;
    while order.len() < nh {
        let frontier = (0..nh)
            .filter(|&x| placed & bit(x) == 0)
            .max_by_key(|&x| ((h.neighbors(x) & placed).count_ones(), h.degree(x), std::cmp::Reverse(x)))
            .expect("unplaced vertex");
        order.push(frontier);
        placed |= bit(frontier);
    }
    let sdeg: Vec<usize> = s.degrees();
    let mut map = vec![usize::MAX; nh];
    fn go(h: &Graph, s: &Graph, order: &[usize], i: usize, map: &mut [usize], used: u64, sdeg: &[usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let mut cand = s.vertex_mask() & !used;
        for y in Bits(h.neighbors(x)) {
            if map[y] != usize::MAX {
                cand &= s.neighbors(map[y]);
            }
        }
        for c in Bits(cand) {
            if sdeg[c] < h.degree(x) {
                continue;
            }
            map[x] = c;
            if go(h, s, order, i + 1, map, used | bit(c), sdeg) {
                return true;
            }
        }
        map[x] = usize::MAX;
        false
    }
    go(h, s, &order, 0, &mut map, 0, &sdeg).then_some(map)
}

/// Finds branch sets realising `h` as a minor of `g`. Only contractions
/// are explored; unused vertices are simply left out of the embedding.
pub fn is_minor(h: &Graph, g: &Graph) -> Result<Option<MinorCertificate>> {
    is_minor_with(h, g, &SearchConfig::default())
}

pub fn is_minor_with(h: &Graph, g: &Graph, cfg: &SearchConfig) -> Result<Option<MinorCertificate>> {
    if h.order() == 0 {
        return Err(Error::Domain("the graph with no vertices is not a minor target".into()));
    }
    let mut memo = Memo::new(cfg.memo_capacity);
    let mut explored = 0u64;
    let branch: Vec<u64> = (0..g.order()).map(bit).collect();
    let found = contract_search(h, g, branch, &mut memo, &mut explored, cfg.budget)?;
    Ok(found.map(|(s_branch, map)| certificate(h, g, &s_branch, &map)))
}

fn contract_search(
    h: &Graph,
    s: &Graph,
    branch: Vec<u64>,
    memo: &mut Memo,
    explored: &mut u64,
    budget: u64,
) -> Result<Option<(Vec<u64>, Vec<usize>)>> {
    if s.order() < h.order() || s.size() < h.size() {
        return Ok(None);
    }
    if !memo.insert(canonical_form(s)) {
        return Ok(None);
    }
    *explored += 1;
    if *explored > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    if let Some(map) = embed(h, s) {
        return Ok(Some((branch, map)));
    }
    if s.order() == h.order() {
        return Ok(None);
    }
    for (u, v) in s.edges() {
        let rows = contract_rows(s.rows(), u, v);
        let mut b = branch.clone();
        b[u] |= b[v];
        b.remove(v);
        let child = Graph::from_rows_unchecked(rows);
        if let Some(found) = contract_search(h, &child, b, memo, explored, budget)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn certificate(h: &Graph, g: &Graph, branch: &[u64], map: &[usize]) -> MinorCertificate {
    let sets: Vec<u64> = map.iter().map(|&x| branch[x]).collect();
    let edge_witnesses = h
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let w = Bits(sets[a])
                .find_map(|x| Bits(g.neighbors(x) & sets[b]).next().map(|y| (x, y)))
                .expect("contracted adjacency has a witness edge");
            ((a, b), w)
        })
        .collect();
    MinorCertificate { branch_sets: sets.iter().map(|&m| Bits(m).collect()).collect(), edge_witnesses }
}

/// True iff no graph of `excluded` is a minor of `g`.
pub fn in_ex_class(g: &Graph, excluded: &[Graph]) -> Result<bool> {
    in_ex_class_with(g, excluded, &SearchConfig::default())
}

pub fn in_ex_class_with(g: &Graph, excluded: &[Graph], cfg: &SearchConfig) -> Result<bool> {
    if excluded.is_empty() {
        return Err(Error::Domain("the excluded-minor list is empty".into()));
    }
    for h in excluded {
        if is_minor_with(h, g, cfg)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
