//! Explicit graph families with closed-form vertex and edge counts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{choose2, Graph};
use crate::rational::{q, Rational};

pub use crate::graph::extend;

/// A family member together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Clique `X` on `k` vertices joined to `Y` on `k(k+1)+2` vertices; `Y`
    /// spans `m` edges.
    Gkm { k: usize, m: usize },
    /// `m/3` cliques on `k+3` vertices sharing `k` vertices.
    Fkm { k: usize, m: usize },
    /// `m` copies of `K+_{2,k-1}` glued at one vertex, `t` extra vertices
    /// on the first copy.
    StarOfPlants { k: usize, m: usize, t: usize },
    /// `K_{2,a}` plus the edge inside the part of size 2.
    KPlus2 { a: usize },
    /// The fan `P_k^+` with `t` copies of `K4` on each external edge.
    FanCliques { k: usize, t: usize },
    /// `k` disjoint bowties and a universal vertex.
    BowtieStar { k: usize },
    /// `m` copies of `K_{h-1}` overlapping in `t-1` vertices.
    CliqueStar { h: usize, t: usize, m: usize },
    /// The path on `t` vertices.
    Path { t: usize },
    /// The cycle on `n` vertices.
    Cycle { n: usize },
    /// The complete graph on `n` vertices.
    Complete { n: usize },
    /// `C10` with alternate chords, plus a universal vertex (11 vertices, 25 edges).
    Witness2511,
}

/// Exact counts from the closed forms, without building the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub v: usize,
    pub e: usize,
    pub rho: Rational,
    pub rho1: Option<Rational>,
}

/// `|Y|` in `G_k(m)`.
pub fn gkm_n(k: usize) -> usize {
    k * (k + 1) + 2
}

pub fn build_gkm(k: usize, m: usize) -> Result<Graph> {
    if k < 2 {
        return domain("G_k(m) needs k >= 2");
    }
    let n = gkm_n(k);
    if m > n {
        return domain(format!("G_{k}(m) needs m <= {n}"));
    }
    let half = n / 2;
    if m > half && (m - half) % 3 != 0 {
        return domain(format!("G_{k}(m) with m > {half} needs 3 | (m - {half})"));
    }
    let mut g = Graph::complete(k)?;
    for _ in 0..n {
        g.add_vertex()?;
    }
    for x in 0..k {
        for y in k..k + n {
            g.add_edge(x, y)?;
        }
    }
    let y = |i: usize| k + i;
    if m <= half {
        for i in 0..m {
            g.add_edge(y(2 * i), y(2 * i + 1))?;
        }
    } else {
        let triangles = 2 * (m - half) / 3;
        for i in 0..triangles {
            let (a, b, c) = (y(3 * i), y(3 * i + 1), y(3 * i + 2));
            g.add_edge(a, b)?;
            g.add_edge(b, c)?;
            g.add_edge(a, c)?;
        }
        let rest = 3 * triangles;
        for i in (rest..n).step_by(2) {
            g.add_edge(y(i), y(i + 1))?;
        }
    }
    Ok(g)
}

pub fn build_fkm(k: usize, m: usize) -> Result<Graph> {
    if k < 2 {
        return domain("F_k(m) needs k >= 2");
    }
    if m < 3 || m % 3 != 0 {
        return domain("F_k(m) needs m >= 3 and 3 | m");
    }
    clique_overlap(k, 3, m / 3)
}

/// `copies` cliques, each on `shared + own` vertices, sharing `shared` of them.
fn clique_overlap(shared: usize, own: usize, copies: usize) -> Result<Graph> {
    let total = shared + own * copies;
    let mut g = Graph::empty(total)?;
    for a in 0..shared {
        for b in a + 1..shared {
            g.add_edge(a, b)?;
        }
    }
    for c in 0..copies {
        let block: Vec<usize> = (0..own).map(|i| shared + c * own + i).collect();
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                g.add_edge(a, b)?;
            }
            for s in 0..shared {
                g.add_edge(a, s)?;
            }
        }
    }
    Ok(g)
}

/// Vertex 0 is the hub. Copy `c` has its adjacent pair at `1 + c*k` and
/// `2 + c*k`, followed by its other `k-2` degree-2 vertices; the `t` extra
/// vertices come last and attach to the pair of copy 0.
pub fn build_star_of_plants(k: usize, m: usize, t: usize) -> Result<Graph> {
    if k < 2 || m < 1 || t >= k {
        return domain("star of plants needs k >= 2, m >= 1, 0 <= t <= k-1");
    }
    let n = m * k + 1 + t;
    let mut g = Graph::empty(n)?;
    for c in 0..m {
        let base = 1 + c * k;
        let (a, b) = (base, base + 1);
        g.add_edge(a, b)?;
        g.add_edge(0, a)?;
        g.add_edge(0, b)?;
        for j in 0..k - 2 {
            g.add_edge(base + 2 + j, a)?;
            g.add_edge(base + 2 + j, b)?;
        }
    }
    for j in 0..t {
        let x = m * k + 1 + j;
        g.add_edge(x, 1)?;
        g.add_edge(x, 2)?;
    }
    Ok(g)
}

/// Vertices 0 and 1 form the part of size 2.
pub fn build_k_plus_2a(a: usize) -> Result<Graph> {
    if a < 1 {
        return domain("K+_{2,a} needs a >= 1");
    }
    let mut g = Graph::complete_bipartite(2, a)?;
    g.add_edge(0, 1)?;
    Ok(g)
}

/// Path vertices `0..k`, the universal vertex `k`, then two new vertices per
/// attached `K4`.
pub fn build_fan_cliques(k: usize, t: usize) -> Result<Graph> {
    if t < 1 {
        return domain("H_{k,t} needs t >= 1");
    }
    if k == 0 {
        return Graph::complete(4);
    }
    let mut g = extend(&Graph::path(k)?)?;
    let hub = k;
    // External edges: the path edges and the two hub edges to the path
    // ends. For k = 1 the two hub edges coincide, which yields 2t copies
    // on a single edge.
    let mut external: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    external.push((hub, 0));
    external.push((hub, k - 1));
    for &(a, b) in &external {
        for _ in 0..t {
            let x = g.add_vertex()?;
            let y = g.add_vertex()?;
            for (p, r) in [(x, y), (x, a), (x, b), (y, a), (y, b)] {
                g.add_edge(p, r)?;
            }
        }
    }
    Ok(g)
}

/// Bowtie `i` uses centre `5i`, triangles `{5i, 5i+1, 5i+2}` and
/// `{5i, 5i+3, 5i+4}`; the universal vertex is last.
pub fn build_bowtie_star(k: usize) -> Result<Graph> {
    if k < 1 {
        return domain("bowtie star needs k >= 1");
    }
    let mut g = Graph::empty(5 * k)?;
    for i in 0..k {
        let c = 5 * i;
        for (a, b) in [(c, c + 1), (c, c + 2), (c + 1, c + 2), (c, c + 3), (c, c + 4), (c + 3, c + 4)] {
            g.add_edge(a, b)?;
        }
    }
    extend(&g)
}

pub fn build_clique_star(h: usize, t: usize, m: usize) -> Result<Graph> {
    if t < 1 || h < t + 1 || m < 1 {
        return domain("clique star needs h >= t+1 >= 2 and m >= 1");
    }
    clique_overlap(t - 1, h - t, m)
}

/// Vertex `i` here is vertex `i+1` of the cycle `1..10`; chords join
/// consecutive odd vertices; vertex 10 is universal.
pub fn build_witness_25_11_base() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    edges.extend((0..5).map(|i| (2 * i, (2 * i + 2) % 10)));
    Graph::from_edges(10, &edges).expect("fixed small graph")
}

pub fn build_witness_25_11() -> Graph {
    extend(&build_witness_25_11_base()).expect("fits easily")
}

fn is_clique(g: &Graph, vs: &[usize]) -> Result<bool> {
    for (i, &a) in vs.iter().enumerate() {
        if a >= g.order() {
            return Err(Error::NoSuchVertex(a));
        }
        for &b in &vs[i + 1..] {
            if a == b {
                return domain(format!("vertex {a} listed twice"));
            }
            if !g.has_edge(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Glues `h` onto `g` by identifying `map_h[i]` with `map_g[i]`; both sets
/// must induce cliques. Edges in `drop` (named by `g`'s labels, inside the
/// glued clique) are removed afterwards. `h`'s other vertices follow `g`'s
/// in increasing order.
pub fn k_sum(g: &Graph, h: &Graph, map_g: &[usize], map_h: &[usize], drop: &[(usize, usize)]) -> Result<Graph> {
    if map_g.len() != map_h.len() {
        return domain("vertex maps differ in length");
    }
    if !is_clique(g, map_g)? || !is_clique(h, map_h)? {
        return domain("glued vertex sets must induce cliques");
    }
    let mut image = vec![usize::MAX; h.order()];
    for (&a, &b) in map_g.iter().zip(map_h) {
        image[b] = a;
    }
    let mut out = g.clone();
    for x in 0..h.order() {
        if image[x] == usize::MAX {
            image[x] = out.add_vertex()?;
        }
    }
    for (a, b) in h.edges() {
        out.add_edge(image[a], image[b])?;
    }
    for &(a, b) in drop {
        if !map_g.contains(&a) || !map_g.contains(&b) || a == b {
            return domain(format!("dropped edge {a}-{b} is not inside the glued clique"));
        }
        out.remove_edge(a, b)?;
    }
    Ok(out)
}

/// `c` copies of `g` identified on the clique `s`.
pub fn overlap_copies(g: &Graph, s: &[usize], c: usize) -> Result<Graph> {
    if c < 1 {
        return domain("need at least one copy");
    }
    if !is_clique(g, s)? {
        return domain("overlap set must induce a clique");
    }
    let mut out = g.clone();
    for _ in 1..c {
        out = k_sum(&out, g, s, s, &[])?;
    }
    Ok(out)
}

/// `a_k = k - 1/2 + (k+2)/(2(k^2+2k+2))`, the density of `G_k(0)`.
pub fn a_k(k: usize) -> Rational {
    let k = k as i128;
    q(2 * k - 1, 2) + q(k + 2, 2 * (k * k + 2 * k + 2))
}

/// Parameters of the gap-closing argument for a given `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverParams {
    pub n: usize,
    /// Largest `m <= n` with `3 | (m - n/2)`.
    pub n1: usize,
    pub delta1: usize,
    /// Largest multiple of 3 that is at most `n`.
    pub n2: usize,
    pub delta2: usize,
}

pub fn cover_params(k: usize) -> Result<CoverParams> {
    if k < 2 {
        return domain("k >= 2 required");
    }
    let n = gkm_n(k);
    let half = n / 2;
    let n1 = (half..=n).rev().find(|m| (m - half) % 3 == 0).expect("m = n/2 qualifies");
    let n2 = n - n % 3;
    let p = CoverParams { n, n1, delta1: n - n1, n2, delta2: n - n2 };
    assert_eq!(p.delta1 + p.delta2, 3, "delta_1 + delta_2 = 3 fails at k = {k}");
    Ok(p)
}

/// `b_k = k + 1/2 - (k - 2 + 2 delta_1)/(2(k+n))`, the density of `G_k(n_1)`.
pub fn b_k(k: usize) -> Result<Rational> {
    let p = cover_params(k)?;
    let (k, n, d1) = (k as i128, p.n as i128, p.delta1 as i128);
    Ok(q(2 * k + 1, 2) - q(k - 2 + 2 * d1, 2 * (k + n)))
}

/// `c_k = k + 1/2 + (k-1)/(2(k^2+5k+1))`, a lower bound on `rho(F_k(n_2 + 4k))`.
pub fn c_k(k: usize) -> Rational {
    let k = k as i128;
    q(2 * k + 1, 2) + q(k - 1, 2 * (k * k + 5 * k + 1))
}

/// `rho(F_k(m)) = k + 1/2 + (m - k^2 - 2k)/(2(k+m))`.
pub fn fkm_density(k: usize, m: usize) -> Rational {
    let (k, m) = (k as i128, m as i128);
    q(2 * k + 1, 2) + q(m - k * k - 2 * k, 2 * (k + m))
}

/// `rho_1(H_{k,t}) = (5t+2)/(2t+1) - (t+1)/((2t+1)((k+1)(2t+1)-1))` for `k >= 1`.
pub fn fan_cliques_rho1(k: usize, t: usize) -> Rational {
    if k == 0 {
        return q(2, 1);
    }
    let (k, t) = (k as i128, t as i128);
    q(5 * t + 2, 2 * t + 1) - q(t + 1, (2 * t + 1) * ((k + 1) * (2 * t + 1) - 1))
}

/// `2 + (k-2)/(5k+1)`.
pub fn bowtie_star_density(k: usize) -> Rational {
    let k = k as i128;
    q(2, 1) + q(k - 2, 5 * k + 1)
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Gkm { k, m } => build_gkm(k, m),
            FamilySpec::Fkm { k, m } => build_fkm(k, m),
            FamilySpec::StarOfPlants { k, m, t } => build_star_of_plants(k, m, t),
            FamilySpec::KPlus2 { a } => build_k_plus_2a(a),
            FamilySpec::FanCliques { k, t } => build_fan_cliques(k, t),
            FamilySpec::BowtieStar { k } => build_bowtie_star(k),
            FamilySpec::CliqueStar { h, t, m } => build_clique_star(h, t, m),
            FamilySpec::Path { t } => {
                if t < 1 {
                    return domain("P_t needs t >= 1");
                }
                Graph::path(t)
            }
            FamilySpec::Cycle { n } => Graph::cycle(n),
            FamilySpec::Complete { n } => Graph::complete(n),
            FamilySpec::Witness2511 => Ok(build_witness_25_11()),
        }
    }

    /// Closed-form counts. Parameters are validated by the constructor's
    /// rules; the graph itself is not built.
    pub fn closed_form(&self) -> Result<ClosedForm> {
        self.validate()?;
        let (v, e, rho, rho1) = match *self {
            FamilySpec::Gkm { k, m } => {
                let n = gkm_n(k);
                let v = k + n;
                (v, choose2(k) + n * k + m, a_k(k) + q(m as i128, v as i128), None)
            }
            FamilySpec::Fkm { k, m } => (k + m, choose2(k) + m * (k + 1), fkm_density(k, m), None),
            FamilySpec::StarOfPlants { k, m, t } => {
                let n = m * k + 1 + t;
                let e = 2 * n - 2 - m;
                (n, e, q(e as i128, n as i128), None)
            }
            FamilySpec::KPlus2 { a } => (a + 2, 2 * a + 1, q(2 * a as i128 + 1, a as i128 + 2), None),
            FamilySpec::FanCliques { k, t } => {
                let (v, e) = if k == 0 { (4, 6) } else { ((k + 1) * (2 * t + 1), (k + 1) * (5 * t + 2) - 3) };
                (v, e, q(e as i128, v as i128), Some(fan_cliques_rho1(k, t)))
            }
            FamilySpec::BowtieStar { k } => (5 * k + 1, 11 * k, bowtie_star_density(k), None),
            FamilySpec::CliqueStar { h, t, m } => {
                let v = (h - t) * m + t - 1;
                let e = m * (choose2(h - t) + (h - t) * (t - 1)) + choose2(t - 1);
                (v, e, q(e as i128, v as i128), None)
            }
            FamilySpec::Path { t } => (t, t - 1, q(t as i128 - 1, t as i128), None),
            FamilySpec::Cycle { n } => (n, n, Rational::ONE, None),
            FamilySpec::Complete { n } => (n, choose2(n), q(n as i128 - 1, 2), None),
            FamilySpec::Witness2511 => (11, 25, q(25, 11), None),
        };
        debug_assert_eq!(rho, q(e as i128, v as i128));
        if let Some(r1) = rho1 {
            debug_assert_eq!(r1, q(e as i128, v as i128 - 1));
        }
        Ok(ClosedForm { v, e, rho, rho1 })
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Gkm { k, m } => {
                k >= 2 && m <= gkm_n(k) && (m <= gkm_n(k) / 2 || (m - gkm_n(k) / 2) % 3 == 0)
            }
            FamilySpec::Fkm { k, m } => k >= 2 && m >= 3 && m % 3 == 0,
            FamilySpec::StarOfPlants { k, m, t } => k >= 2 && m >= 1 && t < k,
            FamilySpec::KPlus2 { a } => a >= 1,
            FamilySpec::FanCliques { t, .. } => t >= 1,
            FamilySpec::BowtieStar { k } => k >= 1,
            FamilySpec::CliqueStar { h, t, m } => t >= 1 && h > t && m >= 1,
            FamilySpec::Path { t } => t >= 1,
            FamilySpec::Cycle { n } => n >= 3,
            FamilySpec::Complete { n } => n >= 1,
            FamilySpec::Witness2511 => true,
        };
        if ok {
            Ok(())
        } else {
            domain(format!("parameters out of range for {self}"))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Gkm { k, m } => write!(f, "gkm:{k},{m}"),
            FamilySpec::Fkm { k, m } => write!(f, "fkm:{k},{m}"),
            FamilySpec::StarOfPlants { k, m, t } => write!(f, "star-of-plants:{k},{m},{t}"),
            FamilySpec::KPlus2 { a } => write!(f, "k-plus-2a:{a}"),
            FamilySpec::FanCliques { k, t } => write!(f, "fan-cliques:{k},{t}"),
            FamilySpec::BowtieStar { k } => write!(f, "bowtie-star:{k}"),
            FamilySpec::CliqueStar { h, t, m } => write!(f, "clique-star:{h},{t},{m}"),
            FamilySpec::Path { t } => write!(f, "path:{t}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Witness2511 => write!(f, "witness-25-11"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `name:p1,p2,...` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<usize>().map_err(|_| Error::Domain(format!("bad parameter `{a}` in `{s}`"))))
                .collect::<Result<_>>()?
        };
        let want = |n: usize| -> Result<()> {
            if nums.len() == n {
                Ok(())
            } else {
                domain(format!("family `{name}` takes {n} parameters, got {}", nums.len()))
            }
        };
        let spec = match name.trim() {
            "gkm" => {
                want(2)?;
                FamilySpec::Gkm { k: nums[0], m: nums[1] }
            }
            "fkm" => {
                want(2)?;
                FamilySpec::Fkm { k: nums[0], m: nums[1] }
            }
            "star-of-plants" => {
                want(3)?;
                FamilySpec::StarOfPlants { k: nums[0], m: nums[1], t: nums[2] }
            }
            "k-plus-2a" => {
                want(1)?;
                FamilySpec::KPlus2 { a: nums[0] }
            }
            "fan-cliques" => {
                want(2)?;
                FamilySpec::FanCliques { k: nums[0], t: nums[1] }
            }
            "bowtie-star" => {
                want(1)?;
                FamilySpec::BowtieStar { k: nums[0] }
            }
            "clique-star" => {
                want(3)?;
                FamilySpec::CliqueStar { h: nums[0], t: nums[1], m: nums[2] }
            }
            "path" => {
                want(1)?;
                FamilySpec::Path { t: nums[0] }
            }
            "cycle" => {
                want(1)?;
                FamilySpec::Cycle { n: nums[0] }
            }
            "complete" => {
                want(1)?;
                FamilySpec::Complete { n: nums[0] }
            }
            "witness-25-11" => {
                want(0)?;
                FamilySpec::Witness2511
            }
            other => return domain(format!("unknown family `{other}`")),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::{blocks, clique_number, density, t_density};

    fn counts(g: &Graph) -> (usize, usize) {
        (g.order(), g.size())
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn gkm_examples() {
        let g0 = build_gkm(2, 0).unwrap();
        assert_eq!(counts(&g0), (10, 17));
        assert_eq!(density(&g0).unwrap(), q(17, 10));
        assert_eq!(a_k(2), q(17, 10));
        let g7 = build_gkm(2, 7).unwrap();
        assert_eq!(counts(&g7), (10, 24));
        assert_eq!(density(&g7).unwrap(), q(12, 5));
        assert_eq!(density(&build_gkm(2, 3).unwrap()).unwrap(), q(2, 1));
        assert_eq!(clique_number(&g7).unwrap(), 5);
        assert!(build_gkm(2, 6).is_err());
        assert!(build_gkm(2, 9).is_err());
        assert!(build_gkm(1, 0).is_err());
    }

    #[test]
    fn figure_one_clique_number() {
        // Y-triangles together with X give K5; the matching edges give K4.
        // Independent count over all vertex subsets of G_2(7).
        let g = build_gkm(2, 7).unwrap();
        let mut best = 0;
        for mask in 1u64..1 << 10 {
            let vs: Vec<usize> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
            if vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b))) {
                best = best.max(vs.len());
            }
        }
        assert_eq!(clique_number(&g).unwrap(), best);
    }

    #[test]
    fn fkm_examples() {
        assert_eq!(counts(&build_fkm(2, 9).unwrap()), (11, 28));
        assert_eq!(build_fkm(2, 3).unwrap(), Graph::complete(5).unwrap());
        let f36 = build_fkm(3, 6).unwrap();
        assert_eq!(counts(&f36), (9, 27));
        assert_eq!(density(&f36).unwrap(), q(3, 1));
        assert_eq!(fkm_density(3, 6), q(3, 1));
        assert_eq!(fkm_density(2, 9), q(28, 11));
        assert!(build_fkm(2, 4).is_err());
    }

    #[test]
    fn cover_parameters() {
        let p = cover_params(2).unwrap();
        assert_eq!((p.n, p.n1, p.delta1, p.n2, p.delta2), (8, 7, 1, 6, 2));
        assert_eq!(b_k(2).unwrap(), q(12, 5));
        for k in 2..=40 {
            let p = cover_params(k).unwrap();
            let e = choose2(k) + p.n * k + p.n1;
            assert_eq!(q(e as i128, (k + p.n) as i128), b_k(k).unwrap(), "k = {k}");
            // c_k bounds rho(F_k(n_2 + 4k)) from below.
            assert!(fkm_density(k, p.n2 + 4 * k) >= c_k(k));
        }
        for k in 2..=6 {
            let g = build_gkm(k, cover_params(k).unwrap().n1).unwrap();
            assert_eq!(density(&g).unwrap(), b_k(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn star_of_plants_examples() {
        let b = build_star_of_plants(2, 2, 0).unwrap();
        assert!(is_isomorphic(&b, &bowtie()));
        assert_eq!(density(&b).unwrap(), q(6, 5));
        let s = build_star_of_plants(3, 4, 0).unwrap();
        assert_eq!(counts(&s), (13, 20));
        let bl = blocks(&s);
        assert_eq!(bl.len(), 4);
        for block in bl {
            let mask = block.iter().fold(0u64, |m, &v| m | 1 << v);
            assert!(is_isomorphic(&s.induced(mask), &diamond()));
        }
        assert!(is_isomorphic(&build_star_of_plants(2, 1, 1).unwrap(), &diamond()));
        assert!(build_star_of_plants(2, 1, 2).is_err());
    }

    #[test]
    fn k_plus_examples() {
        assert_eq!(build_k_plus_2a(1).unwrap(), Graph::complete(3).unwrap());
        assert!(is_isomorphic(&build_k_plus_2a(2).unwrap(), &diamond()));
        let g = build_k_plus_2a(4).unwrap();
        assert_eq!(counts(&g), (6, 9));
        assert_eq!(density(&g).unwrap(), q(3, 2));
    }

    #[test]
    fn fan_cliques_examples() {
        assert_eq!(counts(&build_fan_cliques(3, 2).unwrap()), (20, 45));
        assert_eq!(t_density(&build_fan_cliques(3, 1).unwrap(), 1), q(25, 11));
        assert_eq!(t_density(&build_fan_cliques(3, 2).unwrap(), 1), q(45, 19));
        assert_eq!(fan_cliques_rho1(3, 2), q(45, 19));
        let h11 = build_fan_cliques(1, 1).unwrap();
        assert_eq!(counts(&h11), (6, 11));
        let two_k4 = k_sum(&Graph::complete(4).unwrap(), &Graph::complete(4).unwrap(), &[0, 1], &[0, 1], &[]).unwrap();
        assert!(is_isomorphic(&h11, &two_k4));
        assert_eq!(build_fan_cliques(0, 3).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(counts(&build_fan_cliques(1, 3).unwrap()), (14, 31));
    }

    #[test]
    fn bowtie_star_examples() {
        let g1 = build_bowtie_star(1).unwrap();
        assert_eq!(counts(&g1), (6, 11));
        assert_eq!(density(&build_bowtie_star(2).unwrap()).unwrap(), q(2, 1));
        assert_eq!(density(&build_bowtie_star(3).unwrap()).unwrap(), q(33, 16));
        for k in 1..=6 {
            assert_eq!(density(&build_bowtie_star(k).unwrap()).unwrap(), bowtie_star_density(k));
        }
        // k copies of G_1 glued at the universal vertex.
        let glued = overlap_copies(&g1, &[5], 3).unwrap();
        assert!(is_isomorphic(&glued, &build_bowtie_star(3).unwrap()));
    }

    #[test]
    fn clique_star_examples() {
        let g = build_clique_star(4, 2, 3).unwrap();
        assert_eq!(counts(&g), (7, 9));
        assert_eq!(density(&g).unwrap(), q(9, 7));
        assert!(is_isomorphic(&build_clique_star(5, 2, 1).unwrap(), &Graph::complete(4).unwrap()));
        // Density increases towards (h+t-3)/2 = 5/2 for h = 5, t = 3.
        let mut prev = Rational::ZERO;
        for m in 1..=30 {
            let r = density(&build_clique_star(5, 3, m).unwrap()).unwrap();
            assert!(r > prev && r < q(5, 2));
            prev = r;
        }
        assert!(q(5, 2) - prev < q(1, 10));
        assert_eq!(build_clique_star(3, 1, 2).unwrap().component_count(), 2);
    }

    #[test]
    fn extend_and_sums() {
        assert_eq!(extend(&Graph::complete(1).unwrap()).unwrap(), Graph::complete(2).unwrap());
        let w = build_witness_25_11();
        assert_eq!(counts(&w), (11, 25));
        assert_eq!(density(&w).unwrap(), q(25, 11));
        assert_eq!(t_density(&w, 1), q(5, 2));
        assert_eq!(density(&build_witness_25_11_base()).unwrap(), q(3, 2));
        let k3 = Graph::complete(3).unwrap();
        assert!(is_isomorphic(&k_sum(&k3, &k3, &[0], &[2], &[]).unwrap(), &bowtie()));
        assert_eq!(k_sum(&k3, &k3, &[], &[], &[]).unwrap(), k3.disjoint_union(&k3).unwrap());
        assert!(k_sum(&Graph::path(3).unwrap(), &k3, &[0, 2], &[0, 1], &[]).is_err());
        let dropped = k_sum(&k3, &k3, &[0, 1], &[0, 1], &[(0, 1)]).unwrap();
        assert!(is_isomorphic(&dropped, &Graph::cycle(4).unwrap()));
        assert!(is_isomorphic(&overlap_copies(&k3, &[0], 2).unwrap(), &bowtie()));
    }

    #[test]
    fn overlap_density_formula_for_edges() {
        for (g, c) in [(Graph::complete(4).unwrap(), 3), (build_k_plus_2a(3).unwrap(), 5), (diamond(), 4)] {
            let o = overlap_copies(&g, &[0, 1], c).unwrap();
            let (v, e, c) = (g.order() as i128, g.size() as i128, c as i128);
            assert_eq!(density(&o).unwrap(), q(1 + c * (e - 1), 2 + c * (v - 2)));
        }
    }

    #[test]
    fn closed_forms_match_builds() {
        let mut specs = Vec::new();
        for k in 2..=6 {
            let n = gkm_n(k);
            for m in 0..=n {
                if m <= n / 2 || (m - n / 2) % 3 == 0 {
                    specs.push(FamilySpec::Gkm { k, m });
                }
            }
            for m in (3..=30).step_by(3) {
                specs.push(FamilySpec::Fkm { k, m });
            }
            for m in 1..=4 {
                for t in 0..k {
                    specs.push(FamilySpec::StarOfPlants { k, m, t });
                }
            }
            specs.push(FamilySpec::BowtieStar { k });
            for t in 1..=3 {
                specs.push(FamilySpec::FanCliques { k, t });
            }
        }
        for a in 1..=10 {
            specs.push(FamilySpec::KPlus2 { a });
            specs.push(FamilySpec::Path { t: a });
        }
        for t in 1..=3 {
            specs.push(FamilySpec::FanCliques { k: 0, t });
            specs.push(FamilySpec::FanCliques { k: 1, t });
            for h in t + 1..=7 {
                for m in 1..=4 {
                    specs.push(FamilySpec::CliqueStar { h, t, m });
                }
            }
        }
        specs.push(FamilySpec::Witness2511);
        for s in specs {
            let g = s.build().unwrap();
            let cf = s.closed_form().unwrap();
            assert_eq!((cf.v, cf.e), counts(&g), "{s}");
            assert_eq!(cf.rho, density(&g).unwrap(), "{s}");
            if let Some(r1) = cf.rho1 {
                assert_eq!(r1, t_density(&g, 1), "{s}");
            }
            assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
        }
    }

    #[test]
    fn spec_parsing_rejects_garbage() {
        assert!("gkm:2".parse::<FamilySpec>().is_err());
        assert!("nope:1".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!(FamilySpec::Gkm { k: 2, m: 6 }.closed_form().is_err());
    }
}
