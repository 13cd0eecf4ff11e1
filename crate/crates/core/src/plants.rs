//! 2-plants: graphs grown from an edge by repeatedly adding a vertex with at
//! least two earlier neighbours.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{bit, low_mask, Bits, Graph};

/// Default vertex limit for [`edge_plant_cover`].
pub const DEFAULT_COVER_MAX_VERTICES: usize = 16;

/// Largest subset tried for the `2+` branch of the cover test.
const PLUS_SUBSET_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlantClass {
    PlantEq,
    PlantPlus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlantCertificate {
    pub ordering: Vec<usize>,
    /// Earlier-neighbour counts for the third vertex onwards.
    pub back_degrees: Vec<usize>,
    pub classification: PlantClass,
}

impl PlantCertificate {
    /// Checks the certificate against `g` without trusting any of its fields.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.order();
        if n < 2 || self.ordering.len() != n || self.back_degrees.len() != n - 2 {
            return false;
        }
        let mut placed = 0u64;
        for &v in &self.ordering {
            if v >= n || placed & bit(v) != 0 {
                return false;
            }
            placed |= bit(v);
        }
        if !g.has_edge(self.ordering[0], self.ordering[1]) {
            return false;
        }
        let mut placed = bit(self.ordering[0]) | bit(self.ordering[1]);
        let mut plus = false;
        for (i, &v) in self.ordering.iter().enumerate().skip(2) {
            let back = (g.neighbors(v) & placed).count_ones() as usize;
            if back < 2 || back != self.back_degrees[i - 2] {
                return false;
            }
            plus |= back > 2;
            placed |= bit(v);
        }
        let class = if plus { PlantClass::PlantPlus } else { PlantClass::PlantEq };
        class == self.classification
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum PlantResult {
    NotPlant,
    PlantEq(PlantCertificate),
    PlantPlus(PlantCertificate),
}

impl PlantResult {
    pub fn is_plant(&self) -> bool {
        !matches!(self, PlantResult::NotPlant)
    }

    pub fn certificate(&self) -> Option<&PlantCertificate> {
        match self {
            PlantResult::NotPlant => None,
            PlantResult::PlantEq(c) | PlantResult::PlantPlus(c) => Some(c),
        }
    }
}

/// Absorbs vertices of `within` that have two absorbed neighbours, starting
/// from the edge `ab`, lowest index first. Returns the absorbed set and the
/// absorption order.
pub fn plant_closure(g: &Graph, a: usize, b: usize, within: u64) -> (u64, Vec<usize>) {
    let mut absorbed = bit(a) | bit(b);
    let mut order = vec![a, b];
    loop {
        let next = Bits(within & !absorbed).find(|&x| (g.neighbors(x) & absorbed).count_ones() >= 2);
        match next {
            Some(x) => {
                absorbed |= bit(x);
                order.push(x);
            }
            None => return (absorbed, order),
        }
    }
}

/// Is `g[mask]` a 2-plant? The closure is monotone, so trying every
/// starting edge inside the mask decides it.
fn induced_is_plant(g: &Graph, mask: u64) -> bool {
    Bits(mask).any(|a| Bits(g.neighbors(a) & mask & !low_mask(a + 1)).any(|b| plant_closure(g, a, b, mask).0 == mask))
}

fn edges_within(g: &Graph, mask: u64) -> usize {
    Bits(mask).map(|v| (g.neighbors(v) & mask).count_ones() as usize).sum::<usize>() / 2
}

/// Recognises 2-plants and splits them into `2=` and `2+`.
///
/// Every valid ordering has back-degree sum `e(G) - 1`, so the split only
/// depends on whether `e(G) = 2v(G) - 3`.
pub fn plant_classify(g: &Graph) -> PlantResult {
    let n = g.order();
    if n < 2 {
        return PlantResult::NotPlant;
    }
    let all = g.vertex_mask();
    for (a, b) in g.edges() {
        let (mask, ordering) = plant_closure(g, a, b, all);
        if mask != all {
            continue;
        }
        let mut placed = bit(a) | bit(b);
        let back_degrees: Vec<usize> = ordering[2..]
            .iter()
            .map(|&v| {
                let d = (g.neighbors(v) & placed).count_ones() as usize;
                placed |= bit(v);
                d
            })
            .collect();
        debug_assert_eq!(1 + back_degrees.iter().sum::<usize>(), g.size());
        let eq = g.size() == 2 * n - 3;
        let cert = PlantCertificate {
            ordering,
            back_degrees,
            classification: if eq { PlantClass::PlantEq } else { PlantClass::PlantPlus },
        };
        return if eq { PlantResult::PlantEq(cert) } else { PlantResult::PlantPlus(cert) };
    }
    PlantResult::NotPlant
}

/// Per-edge verdict of the cover test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCover {
    pub u: usize,
    pub v: usize,
    /// Lies in a `(k+1)`-vertex `2=`-plant subgraph.
    pub tight: bool,
    /// Lies in some `2+`-plant subgraph.
    pub plus: bool,
}

impl EdgeCover {
    pub fn covered(&self) -> bool {
        self.tight || self.plus
    }
}

/// For each edge in lexicographic order: is it in a `(k+1)`-vertex
/// `2=`-plant, or in some `2+`-plant? Plants are subgraphs of `g`, not
/// necessarily induced.
pub fn edge_plant_cover(g: &Graph, k: usize) -> Result<Vec<EdgeCover>> {
    edge_plant_cover_with(g, k, DEFAULT_COVER_MAX_VERTICES)
}

pub fn edge_plant_cover_with(g: &Graph, k: usize, max_vertices: usize) -> Result<Vec<EdgeCover>> {
    if k < 2 {
        return domain("the cover test needs k >= 2");
    }
    if g.order() < 2 {
        return domain("the cover test needs at least 2 vertices");
    }
    if g.order() > max_vertices {
        return Err(Error::SizeLimit { n: g.order(), limit: max_vertices });
    }
    let n = g.order();
    let plus_limit = n.min(PLUS_SUBSET_LIMIT);
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| {
            let rest = g.vertex_mask() & !bit(u) & !bit(v);
            // A 2=-plant spanning U exists inside G[U] iff G[U] is a 2-plant:
            // keep two back-edges per vertex, and uv can always be one of them.
            let tight = k + 1 <= n && subsets(rest, k - 1).any(|s| induced_is_plant(g, s | bit(u) | bit(v)));
            let plus = (4..=plus_limit).any(|size| {
                subsets(rest, size - 2).any(|s| {
                    let mask = s | bit(u) | bit(v);
                    edges_within(g, mask) > 2 * size - 3 && induced_is_plant(g, mask)
                })
            });
            EdgeCover { u, v, tight, plus }
        })
        .collect())
}

/// Subsets of `pool` with exactly `r` elements.
fn subsets(pool: u64, r: usize) -> impl Iterator<Item = u64> {
    let items: Vec<usize> = Bits(pool).collect();
    let n = items.len();
    let mut idx: Option<Vec<usize>> = if r <= n { Some((0..r).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let mask = cur.iter().fold(0u64, |m, &i| m | bit(items[i]));
        // Advance to the next combination.
        let mut i = r;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if cur[i] < n - r + i {
                cur[i] += 1;
                for j in i + 1..r {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

/// Minimum edge count of a connected `n`-vertex graph whose edges are all
/// covered, where `n = mk + 1 + t`.
pub fn plant_edge_bound(n: usize, k: usize, t: usize) -> Result<usize> {
    if k < 2 || t >= k || n < 1 + t || (n - 1 - t) % k != 0 {
        return domain(format!("{n} is not of the form mk + 1 + {t} with k = {k}"));
    }
    let m = (n - 1 - t) / k;
    let bound = 2 * n - 2 - m;
    // Same value as (2 - 1/k) n + (t+1)/k - 2, multiplied through by k.
    let (n_, k_, t_) = (n as i128, k as i128, t as i128);
    assert_eq!((2 * k_ - 1) * n_ + t_ + 1 - 2 * k_, k_ * bound as i128);
    Ok(bound)
}
