//! Canonical labelling by individualization and refinement.
//!
//! The search tree is the usual one: refine the partition to an equitable
//! one, individualize each vertex of the first non-singleton cell, recurse.
//! Leaves give labellings; the smallest adjacency code wins. Automorphisms
//! found along the way (leaf codes that coincide, plus twin transpositions
//! known up front) prune children lying in one orbit of the stabilizer of
//! the current prefix.

use std::fmt;

use smallvec::SmallVec;

use crate::graph::{bit, Bits, Graph};

/// Isomorphism-class code: the vertex count followed by the upper
/// triangle of the canonically relabelled adjacency matrix, row-major,
/// packed most-significant-bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(SmallVec<[u8; 24]>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

fn encode(g: &Graph, lab: &[usize]) -> CanonicalCode {
    let n = lab.len();
    let mut out: SmallVec<[u8; 24]> = SmallVec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbors(lab[i]);
        for &w in &lab[i + 1..] {
            acc = (acc << 1) | ((row >> w) & 1) as u8;
            k += 1;
            if k == 8 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (8 - k));
    }
    CanonicalCode(out)
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Canon {
    pub code: CanonicalCode,
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Automorphisms discovered during the search, as images `perm[v]`.
    /// They generate a subgroup of the (colour-preserving) automorphism group.
    pub automorphisms: Vec<Vec<u8>>,
}

/// Splits every cell by the number of neighbours each vertex has in every
/// cell, until the partition is equitable. The order of the new cells
/// depends only on the counts, so the result is label-invariant.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut keyed: Vec<(SmallVec<[u8; 16]>, usize)> = Vec::new();
    loop {
        let before = cells.len();
        let mut next: Vec<u64> = Vec::with_capacity(g.order());
        for &c in cells.iter() {
            if c & (c - 1) == 0 {
                next.push(c);
                continue;
            }
            keyed.clear();
            for v in Bits(c) {
                let row = g.neighbors(v);
                let key = cells.iter().map(|&d| (row & d).count_ones() as u8).collect();
                keyed.push((key, v));
            }
            keyed.sort_unstable();
            let mut mask = 0u64;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(mask);
                    mask = 0;
                }
                mask |= bit(keyed[i].1);
            }
            next.push(mask);
        }
        *cells = next;
        if cells.len() == before {
            return;
        }
    }
}

struct UnionFind {
    parent: [u8; 64],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; 64];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u8;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(CanonicalCode, Vec<usize>)>,
    best: Option<(CanonicalCode, Vec<usize>)>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0u8; from.len()];
        for (a, b) in from.iter().zip(to) {
            perm[*a] = *b as u8;
        }
        if perm.iter().enumerate().any(|(i, &p)| p as usize != i) && !self.autos.contains(&perm) {
            self.autos.push(perm);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = encode(self.g, &lab);
        let Some((first_code, first_lab)) = &self.first else {
            self.first = Some((code.clone(), lab.clone()));
            self.best = Some((code, lab));
            return;
        };
        if code == *first_code {
            let fl = first_lab.clone();
            self.record_auto(&fl, &lab);
            return;
        }
        let (best_code, best_lab) = self.best.as_ref().expect("best is set with first");
        match code.cmp(best_code) {
            std::cmp::Ordering::Less => self.best = Some((code, lab)),
            std::cmp::Ordering::Equal => {
                let bl = best_lab.clone();
                self.record_auto(&bl, &lab);
            }
            std::cmp::Ordering::Greater => {}
        }
    }

    fn orbits(&self, prefix: &[usize], target: u64) -> UnionFind {
        let mut uf = UnionFind::new(self.g.order());
        for perm in &self.autos {
            if prefix.iter().all(|&p| perm[p] as usize == p) {
                for v in Bits(target) {
                    uf.union(v, perm[v] as usize);
                }
            }
        }
        uf
    }

    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        if cells.len() == self.g.order() {
            self.leaf(&cells);
            return;
        }
        let ti = cells.iter().position(|c| c & (c - 1) != 0).expect("a non-singleton cell exists");
        let target = cells[ti];
        let mut explored: SmallVec<[usize; 16]> = SmallVec::new();
        let mut known_autos = usize::MAX;
        let mut uf = UnionFind::new(0);
        for v in Bits(target) {
            if !explored.is_empty() {
                if known_autos != self.autos.len() {
                    uf = self.orbits(prefix, target);
                    known_autos = self.autos.len();
                }
                let rv = uf.find(v);
                if explored.iter().any(|&w| uf.find(w) == rv) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical labelling of `g` whose vertices carry `colors`; vertices may
/// only be mapped to vertices of the same colour, and colour classes are
/// placed in increasing colour order.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Canon {
    let n = g.order();
    assert_eq!(colors.len(), n, "one colour per vertex");
    if n == 0 {
        return Canon { code: encode(g, &[]), labeling: Vec::new(), automorphisms: Vec::new() };
    }
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let mut cells: Vec<u64> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).fold(0u64, |m, v| m | bit(v)))
        .collect();

    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    // Twins (same colour, same neighbourhood apart from each other) can be
    // swapped freely.
    for u in 0..n {
        for w in u + 1..n {
            if colors[u] == colors[w] && g.neighbors(u) & !bit(w) == g.neighbors(w) & !bit(u) {
                let mut perm: Vec<u8> = (0..n as u8).collect();
                perm.swap(u, w);
                search.autos.push(perm);
            }
        }
    }
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    let (code, labeling) = search.best.expect("search reaches a leaf");
    Canon { code, labeling, automorphisms: search.autos }
}

pub fn canonical_labeling(g: &Graph) -> Canon {
    canonical_labeling_colored(g, &vec![0; g.order()])
}

/// Isomorphism-invariant code of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).code
}

/// `g` relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

/// Code of `g` with vertex colours; equal codes iff there is a
/// colour-preserving isomorphism. The colour class sizes are appended so
/// codes of differently coloured graphs never collide.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalCode {
    let mut code = canonical_labeling_colored(g, colors).code;
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    let mut i = 0;
    while i < palette.len() {
        let j = palette[i..].iter().take_while(|&&c| c == palette[i]).count();
        code.0.push(j as u8);
        i += j;
    }
    code
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}
