//! The [`Graph`] value type and basic structural queries.
//!
//! Vertices are `0..n` with `n <= 64`; each adjacency row is a `u64`
//! bitmask, which is what lets the minor search and canonical labelling
//! run on word operations.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::rational::Rational;

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph { rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows; symmetry and irreflexivity are checked.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        for (u, &r) in rows.iter().enumerate() {
            if r & !low_mask(n) != 0 || r & bit(u) != 0 {
                return domain(format!("row {u} is not a valid adjacency row"));
            }
            for v in Bits(r) {
                if rows[v] & bit(u) == 0 {
                    return domain(format!("adjacency is not symmetric at ({u}, {v})"));
                }
            }
        }
        Ok(Graph { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.rows[u] = low_mask(n) & !bit(u);
        }
        Ok(g)
    }

    /// Path on `n` vertices (`P_n`, with `n - 1` edges).
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return domain("a cycle needs at least 3 vertices");
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] & bit(v) != 0
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n {
            return Err(Error::NoSuchVertex(u));
        }
        if v >= n {
            return Err(Error::NoSuchVertex(v));
        }
        if u == v {
            return domain(format!("self-loop at {u}"));
        }
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
        Ok(())
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.order() >= MAX_VERTICES {
            return Err(Error::Capacity(self.order() + 1));
        }
        self.rows.push(0);
        Ok(self.order() - 1)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in Bits(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Subgraph induced on the vertices of `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        let rows = keep
            .iter()
            .map(|&u| {
                let mut r = 0u64;
                for (j, &w) in keep.iter().enumerate() {
                    if self.rows[u] & bit(w) != 0 {
                        r |= bit(j);
                    }
                }
                r
            })
            .collect();
        Graph { rows }
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0usize; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let rows = perm
            .iter()
            .map(|&old| Bits(self.rows[old]).fold(0u64, |acc, w| acc | bit(inv[w])))
            .collect();
        Graph { rows }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    /// Disjoint union, `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        if n + other.order() > MAX_VERTICES {
            return Err(Error::Capacity(n + other.order()));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        Ok(Graph { rows })
    }

    /// `rho(G) = e(G) / v(G)`.
    pub fn density(&self) -> Result<Rational> {
        density(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// `rho(G) = e(G)/v(G)`; undefined on the empty graph.
pub fn density(g: &Graph) -> Result<Rational> {
    if g.order() == 0 {
        return domain("density of the graph with no vertices is undefined");
    }
    Ok(Rational::new(g.size() as i128, g.order() as i128))
}

/// `binom(t, 2)`.
#[inline]
pub fn choose2(t: usize) -> usize {
    t * t.saturating_sub(1) / 2
}

/// t-density from raw counts: `(e - C(t,2)) / (v - t)` when `e > C(t,2)`, else 0.
pub fn t_density_counts(v: usize, e: usize, t: usize) -> Rational {
    let base = choose2(t);
    if e <= base {
        return Rational::ZERO;
    }
    debug_assert!(v > t);
    Rational::new((e - base) as i128, (v - t) as i128)
}

pub fn t_density(g: &Graph, t: usize) -> Rational {
    t_density_counts(g.order(), g.size(), t)
}

/// Complete one-vertex extension `G+`: a new vertex adjacent to everything.
pub fn extend(g: &Graph) -> Result<Graph> {
    let mut h = g.clone();
    let u = h.add_vertex()?;
    h.rows[u] = low_mask(u);
    for v in 0..u {
        h.rows[v] |= bit(u);
    }
    Ok(h)
}

/// Vertex connectivity. `K_n` gives `n - 1`, `K_1` and disconnected graphs give 0.
pub fn connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return domain("connectivity of the graph with no vertices is undefined");
    }
    if !g.is_connected() {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = n - 1;
    // Even's scheme: some vertex among the first best+1 lies outside a minimum cut.
    let mut s = 0;
    while s <= best && s < n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
        s += 1;
    }
    Ok(best)
}

/// Maximum number of internally disjoint s-t paths for non-adjacent `s, t`,
/// capped at `cap`. Unit-capacity flow on the split-vertex network.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    // Node 2v = v_in, 2v+1 = v_out. Edges v_in -> v_out (cap 1, inf for s,t),
    // and u_out -> v_in for every adjacency.
    let nodes = 2 * n;
    let mut cap_m = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap_m[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
        for w in Bits(g.neighbors(v)) {
            cap_m[2 * v + 1][2 * w] = n as i32;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if prev[y] == usize::MAX && cap_m[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap_m[x][y] -= 1;
            cap_m[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Block decomposition: maximal 2-connected subgraphs, bridges and
/// isolated vertices, each as a sorted vertex list. Blocks are sorted.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            out.push(vec![root]);
            continue;
        }
        // Iterative DFS: (vertex, parent, remaining neighbours).
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, g.neighbors(root))];
        while let Some(top) = stack.last_mut() {
            let (u, parent, rest) = *top;
            if rest != 0 {
                let w = rest.trailing_zeros() as usize;
                top.2 &= rest - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, g.neighbors(w)));
                } else if disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut mask = 0u64;
                        while let Some((a, b)) = edge_stack.pop() {
                            mask |= bit(a) | bit(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        out.push(Bits(mask).collect());
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Size of a largest clique, by branch and bound over bitsets.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return domain("clique number of the graph with no vertices is undefined");
    }
    fn expand(g: &Graph, size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 1;
    expand(g, 0, g.vertex_mask(), &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(&Graph::complete(5).unwrap()).unwrap(), q(2, 1));
        assert_eq!(density(&Graph::complete(1).unwrap()).unwrap(), q(0, 1));
        assert_eq!(density(&diamond()).unwrap(), q(5, 4));
        assert!(matches!(density(&Graph::empty(0).unwrap()), Err(Error::Domain(_))));
    }

    #[test]
    fn t_density_examples() {
        assert_eq!(t_density(&Graph::complete(4).unwrap(), 1), q(2, 1));
        assert_eq!(t_density(&Graph::complete(3).unwrap(), 1), q(3, 2));
        assert_eq!(t_density(&Graph::complete(2).unwrap(), 2), q(0, 1));
        assert_eq!(t_density(&Graph::empty(0).unwrap(), 0), q(0, 1));
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(connectivity(&Graph::complete(4).unwrap()).unwrap(), 3);
        assert_eq!(connectivity(&Graph::path(4).unwrap()).unwrap(), 1);
        assert_eq!(connectivity(&Graph::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(connectivity(&Graph::complete(1).unwrap()).unwrap(), 0);
        assert_eq!(connectivity(&Graph::empty(3).unwrap()).unwrap(), 0);
        assert_eq!(connectivity(&Graph::complete_bipartite(3, 3).unwrap()).unwrap(), 3);
        assert_eq!(connectivity(&bowtie()).unwrap(), 1);
    }

    #[test]
    fn blocks_examples() {
        assert_eq!(blocks(&bowtie()), vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(blocks(&Graph::path(3).unwrap()), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(blocks(&Graph::empty(2).unwrap()), vec![vec![0], vec![1]]);
        assert_eq!(blocks(&diamond()), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&Graph::complete(5).unwrap()).unwrap(), 5);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn extend_adds_universal_vertex() {
        let p = extend(&Graph::path(4).unwrap()).unwrap();
        assert_eq!((p.order(), p.size()), (5, 7));
        assert_eq!(extend(&Graph::complete(1).unwrap()).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn capacity_is_enforced() {
        assert_eq!(Graph::empty(65), Err(Error::Capacity(65)));
        let mut g = Graph::empty(64).unwrap();
        assert_eq!(g.add_vertex(), Err(Error::Capacity(65)));
        assert!(g.add_edge(0, 63).is_ok());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b1]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }
}
