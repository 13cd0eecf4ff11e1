//! Deliberately naive reference implementations.
//!
//! Nothing here is clever: closures are explored on labelled graphs without
//! any isomorphism reduction, canonical codes are minima over all
//! permutations, plants are recognised by trying every ordering. The
//! verification suite compares the fast code paths against these.

use std::collections::HashSet;

use crate::canon::CanonicalCode;
use crate::graph::{bit, choose2, low_mask, t_density_counts, Bits, Graph};
use crate::minor::{apply_minor_op, BalanceMode, MinorOp};
use crate::rational::Rational;

/// Every minor of `g` (with at least one vertex) as a labelled graph,
/// reached by any sequence of vertex deletions, contractions and, if
/// requested, edge deletions.
pub fn minor_closure(g: &Graph, with_edge_deletions: bool) -> HashSet<Graph> {
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut stack = vec![g.clone()];
    seen.insert(g.clone());
    while let Some(s) = stack.pop() {
        let mut ops = Vec::new();
        if s.order() > 1 {
            ops.extend((0..s.order()).map(|v| MinorOp::DeleteVertex { v }));
        }
        for (u, v) in s.edges() {
            ops.push(MinorOp::ContractEdge { u, v });
            if with_edge_deletions {
                ops.push(MinorOp::DeleteEdge { u, v });
            }
        }
        for op in ops {
            let child = apply_minor_op(&s, op).expect("op drawn from the graph itself");
            if seen.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    seen
}

/// Largest density over the closure, with the fewest vertices attaining it.
pub fn max_density(closure: &HashSet<Graph>) -> (Rational, usize) {
    let mut best = (Rational::ZERO, usize::MAX);
    for h in closure {
        let r = Rational::new(h.size() as i128, h.order() as i128);
        if r > best.0 || (r == best.0 && h.order() < best.1) {
            best = (r, h.order());
        }
    }
    best
}

/// Balance verdict straight from the definition, over the full closure.
pub fn balanced(g: &Graph, mode: BalanceMode) -> bool {
    let t = mode.t();
    let value = t_density_counts(g.order(), g.size(), t);
    if mode.needs_positive() && !value.is_positive() {
        return false;
    }
    minor_closure(g, true).iter().all(|h| {
        let proper = (h.order(), h.size()) != (g.order(), g.size());
        let r = t_density_counts(h.order(), h.size(), t);
        if mode.is_strict() {
            !proper || r < value
        } else {
            r <= value
        }
    })
}

fn encode(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut bits = Vec::with_capacity(n * n / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(g.has_edge(lab[i], lab[j]));
        }
    }
    let mut out = vec![n as u8];
    for chunk in bits.chunks(8) {
        let mut b = 0u8;
        for (k, &x) in chunk.iter().enumerate() {
            if x {
                b |= 0x80 >> k;
            }
        }
        out.push(b);
    }
    out
}

/// Minimum adjacency code over all `n!` relabellings, in the same byte
/// layout as [`CanonicalCode`]. Only sensible for small `n`.
pub fn min_code(g: &Graph) -> Vec<u8> {
    fn rec(g: &Graph, lab: &mut Vec<usize>, used: u64, best: &mut Option<Vec<u8>>) {
        if lab.len() == g.order() {
            let c = encode(g, lab);
            if best.as_ref().map_or(true, |b| c < *b) {
                *best = Some(c);
            }
            return;
        }
        for v in 0..g.order() {
            if used & bit(v) == 0 {
                lab.push(v);
                rec(g, lab, used | bit(v), best);
                lab.pop();
            }
        }
    }
    let mut best = None;
    rec(g, &mut Vec::new(), 0, &mut best);
    best.expect("at least the empty labelling")
}

/// Are `a` and `b` isomorphic, by trying every bijection.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && min_code(a) == min_code(b)
}

/// Is `code` a valid code for some graph isomorphic to `g`?
pub fn code_matches(code: &CanonicalCode, g: &Graph) -> bool {
    isomorphic(&code.to_graph(), g)
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1u64 << pairs.len()).map(move |mask| {
        let mut rows = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[a] |= bit(b);
                rows[b] |= bit(a);
            }
        }
        Graph::from_rows(rows).expect("symmetric by construction")
    })
}

/// Isomorphism classes on `n` vertices, counted by grouping labelled graphs
/// under [`min_code`].
pub fn class_count(n: usize, connected_only: bool) -> usize {
    labeled_graphs(n)
        .filter(|g| !connected_only || g.is_connected())
        .map(|g| min_code(&g))
        .collect::<HashSet<_>>()
        .len()
}

/// 2-plant test by trying every vertex ordering.
pub fn is_plant(g: &Graph) -> bool {
    fn rec(g: &Graph, placed: u64, count: usize) -> bool {
        if count == g.order() {
            return true;
        }
        for v in 0..g.order() {
            if placed & bit(v) == 0 && (g.neighbors(v) & placed).count_ones() >= 2 && rec(g, placed | bit(v), count + 1) {
                return true;
            }
        }
        false
    }
    if g.order() < 2 {
        return false;
    }
    g.edges().into_iter().any(|(a, b)| rec(g, bit(a) | bit(b), 2))
}

/// Every valid plant ordering's back-degree sum, for checking that the
/// split into `=` and `+` does not depend on the ordering.
pub fn plant_back_degree_sums(g: &Graph) -> HashSet<usize> {
    fn rec(g: &Graph, placed: u64, count: usize, sum: usize, out: &mut HashSet<usize>) {
        if count == g.order() {
            out.insert(sum);
            return;
        }
        for v in 0..g.order() {
            let back = (g.neighbors(v) & placed).count_ones() as usize;
            if placed & bit(v) == 0 && back >= 2 {
                rec(g, placed | bit(v), count + 1, sum + back, out);
            }
        }
    }
    let mut out = HashSet::new();
    for (a, b) in g.edges() {
        rec(g, bit(a) | bit(b), 2, 1, &mut out);
    }
    out
}

/// Brute-force: is there a 2-plant subgraph (not necessarily induced) of
/// `g` on exactly the vertex set `mask`, containing edge `uv`, whose
/// ordering uses exactly two back-edges per vertex?
pub fn has_tight_plant_through(g: &Graph, mask: u64, u: usize, v: usize) -> bool {
    // A 2=-plant on the mask that contains uv: choose an ordering and, for
    // each later vertex, exactly two earlier neighbours.
    fn rec(g: &Graph, mask: u64, placed: u64, used_uv: bool, u: usize, v: usize) -> bool {
        if placed == mask {
            return used_uv;
        }
        for x in Bits(mask & !placed) {
            let back = g.neighbors(x) & placed;
            if back.count_ones() < 2 {
                continue;
            }
            // Pick two back-neighbours; only whether uv is among the chosen
            // edges matters.
            let via_uv = (x == u && back & bit(v) != 0) || (x == v && back & bit(u) != 0);
            if via_uv && rec(g, mask, placed | bit(x), true, u, v) {
                return true;
            }
            let others = if x == u { back & !bit(v) } else if x == v { back & !bit(u) } else { back };
            if others.count_ones() >= 2 && rec(g, mask, placed | bit(x), used_uv, u, v) {
                return true;
            }
        }
        false
    }
    let sub = mask & low_mask(g.order());
    if sub & bit(u) == 0 || sub & bit(v) == 0 || !g.has_edge(u, v) {
        return false;
    }
    for a in Bits(sub) {
        for b in Bits(g.neighbors(a) & sub & !low_mask(a + 1)) {
            let start_uv = (a, b) == (u.min(v), u.max(v));
            if rec(g, sub, bit(a) | bit(b), start_uv, u, v) {
                return true;
            }
        }
    }
    false
}

/// Maximum edges of an `n`-vertex forest of paths with at most `t`
/// vertices each, over all partitions of `n`.
pub fn path_forest_max_edges(n: usize, t: usize) -> usize {
    fn best(n: usize, largest: usize) -> usize {
        if n == 0 {
            return 0;
        }
        (1..=largest.min(n)).map(|p| p - 1 + best(n - p, p)).max().unwrap_or(0)
    }
    best(n, t)
}

/// t-density straight from the definition.
pub fn t_density_direct(g: &Graph, t: usize) -> Rational {
    let base = choose2(t);
    if g.size() <= base {
        Rational::ZERO
    } else {
        Rational::new((g.size() - base) as i128, (g.order() - t) as i128)
    }
}
