//! Critical densities of minor-closed classes up to 2, and the known
//! members above it.
//!
//! Below 1 the values are `(t-1)/t`. In `[2 - 1/(k-1), 2 - 1/k)` they are
//! the left endpoint together with `2 - 1/k - (2k-t-1)/(kn)` for
//! `n = mk + 1 + t`, `m >= 1`, `0 <= t < k` and `n > (2k-1-t)(k-1)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::families::{bowtie_star_density, fan_cliques_rho1, FamilySpec};
use crate::graph::Graph;
use crate::rational::{q, Rational};

/// One `(k, n, t, m)` solution of the interior formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Param {
    pub k: usize,
    pub n: usize,
    pub t: usize,
    pub m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntryKind {
    SubOne { t: usize },
    IntervalEndpoint { k: usize },
    Interior { k: usize, n: usize, t: usize, m: usize },
    Two,
}

impl EntryKind {
    pub fn name(&self) -> &'static str {
        match self {
            EntryKind::SubOne { .. } => "sub_one",
            EntryKind::IntervalEndpoint { .. } => "interval_endpoint",
            EntryKind::Interior { .. } => "interior",
            EntryKind::Two => "two",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub beta: Rational,
    pub kind: EntryKind,
    pub witness_spec: FamilySpec,
    /// Every interior solution for `beta`, sorted; empty for other kinds.
    pub parametrizations: Vec<Param>,
}

impl CatalogEntry {
    /// Vertex count of the witness graph.
    pub fn witness_order(&self) -> usize {
        match self.witness_spec.closed_form() {
            Ok(cf) => cf.v,
            Err(_) => usize::MAX,
        }
    }
}

/// Why a value above 2 is known to be a critical density.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum KnownRule {
    /// Density of `k` bowtie-plus-apex graphs glued at the apex.
    BowtieStar { k: usize },
    /// 1-density of the fan with `t` copies of `K4` on each external edge;
    /// the graph is strictly 1-minor-balanced, so this is a density of an
    /// addable class.
    FanCliques { k: usize, t: usize },
    /// Density of the 11-vertex, 25-edge strictly balanced graph.
    Witness2511,
    /// `q - 1` is a critical density, and adding 1 preserves membership.
    OnePlus { base: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownHit {
    pub rules: Vec<KnownRule>,
    /// Set when `q` is conjectured to be the least member above 2 of the
    /// named set (`"B"` or `"B2"`). Never treated as decided.
    pub conjectured_minimum_of: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Membership {
    InB { entry: CatalogEntry },
    NotInB,
    UnknownAbove2 { known_hit: Option<KnownHit> },
}

fn two() -> Rational {
    Rational::from_integer(2)
}

fn sub_one(t: usize) -> CatalogEntry {
    CatalogEntry {
        beta: q(t as i128 - 1, t as i128),
        kind: EntryKind::SubOne { t },
        witness_spec: FamilySpec::Path { t },
        parametrizations: Vec::new(),
    }
}

/// `2 - 1/(k-1)`, the left end of the `k`-th interval.
fn endpoint_value(k: usize) -> Rational {
    two() - q(1, k as i128 - 1)
}

fn endpoint(k: usize) -> CatalogEntry {
    let witness_spec = if k == 2 { FamilySpec::Cycle { n: 3 } } else { FamilySpec::KPlus2 { a: 3 * k - 5 } };
    CatalogEntry { beta: endpoint_value(k), kind: EntryKind::IntervalEndpoint { k }, witness_spec, parametrizations: Vec::new() }
}

fn two_entry() -> CatalogEntry {
    CatalogEntry { beta: two(), kind: EntryKind::Two, witness_spec: FamilySpec::Complete { n: 5 }, parametrizations: Vec::new() }
}

fn interior_value(k: usize, n: usize, t: usize) -> Rational {
    let (k, n, t) = (k as i128, n as i128, t as i128);
    two() - q(1, k) - q(2 * k - t - 1, k * n)
}

/// Smallest admissible `n` for `(k, t)`: `n > (2k-1-t)(k-1)`, `m >= 1` and
/// `n = 1 + t (mod k)`.
fn least_n(k: usize, t: usize) -> usize {
    let lower = ((2 * k - 1 - t) * (k - 1) + 1).max(k + 1 + t);
    round_up_to_class(lower, k, t)
}

/// Least `n >= lower` with `n = 1 + t (mod k)`.
fn round_up_to_class(lower: usize, k: usize, t: usize) -> usize {
    let r = (1 + t) % k;
    lower + (r + k - lower % k) % k
}

fn interior_entry(beta: Rational, mut params: Vec<Param>) -> CatalogEntry {
    params.sort();
    let p = params[0];
    CatalogEntry {
        beta,
        kind: EntryKind::Interior { k: p.k, n: p.n, t: p.t, m: p.m },
        witness_spec: FamilySpec::StarOfPlants { k: p.k, m: p.m, t: p.t },
        parametrizations: params,
    }
}

/// Index `k` of the interval `[2 - 1/(k-1), 2 - 1/k)` containing `x`, for
/// `1 <= x < 2`.
fn interval_of(x: Rational) -> usize {
    let inv = Rational::ONE / (two() - x);
    (inv.floor() + 1) as usize
}

/// All interior solutions with interval index `k` for `beta`.
fn interior_params(beta: Rational, k: usize) -> Vec<Param> {
    let d = two() - q(1, k as i128) - beta;
    if !d.is_positive() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for t in 0..k {
        let n = q((2 * k - t - 1) as i128, k as i128) / d;
        if !n.is_integer() {
            continue;
        }
        let n = n.numer() as usize;
        if n >= k + 1 + t && (n - 1 - t) % k == 0 && n > (2 * k - 1 - t) * (k - 1) {
            out.push(Param { k, n, t, m: (n - 1 - t) / k });
        }
    }
    out
}

fn decide(x: Rational) -> Option<CatalogEntry> {
    if x.numer() < 0 || x > two() {
        return None;
    }
    if x == two() {
        return Some(two_entry());
    }
    if x < Rational::ONE {
        // (t-1)/t = x  iff  1 - x = 1/t.
        let r = (Rational::ONE - x).recip()?;
        return r.is_integer().then(|| sub_one(r.numer() as usize));
    }
    let k = interval_of(x);
    if x == endpoint_value(k) {
        return Some(endpoint(k));
    }
    let params = interior_params(x, k);
    (!params.is_empty()).then(|| interior_entry(x, params))
}

/// Exact membership for `q <= 2`; lookup of documented members above 2.
pub fn membership(x: Rational) -> Membership {
    if x > two() {
        return Membership::UnknownAbove2 { known_hit: known_hit(x) };
    }
    match decide(x) {
        Some(entry) => Membership::InB { entry },
        None => Membership::NotInB,
    }
}

fn known_hit(x: Rational) -> Option<KnownHit> {
    let mut rules = Vec::new();
    if x == q(25, 11) {
        rules.push(KnownRule::Witness2511);
    }
    // 2 + (k-2)/(5k+1) = x  iff  k (11 - 5x) = x.
    let denom = q(11, 1) - q(5, 1) * x;
    if denom.numer() != 0 {
        let k = x / denom;
        if k.is_integer() && k.numer() >= 3 {
            let k = k.numer() as usize;
            debug_assert_eq!(bowtie_star_density(k), x);
            rules.push(KnownRule::BowtieStar { k });
        }
    }
    rules.extend(fan_cliques_hits(x));
    let base = x - Rational::ONE;
    if base <= two() {
        if decide(base).is_some() {
            rules.push(KnownRule::OnePlus { base });
        }
    } else if known_hit(base).is_some() {
        rules.push(KnownRule::OnePlus { base });
    }
    let conjectured_minimum_of = if x == q(33, 16) {
        Some("B")
    } else if x == q(11, 5) {
        Some("B2")
    } else {
        None
    };
    (!rules.is_empty()).then_some(KnownHit { rules, conjectured_minimum_of })
}

/// Largest `t` tried when matching fan-clique 1-densities.
const FAN_T_LIMIT: usize = 100_000;

fn fan_cliques_hits(x: Rational) -> Vec<KnownRule> {
    let mut out = Vec::new();
    if x <= two() || x >= q(5, 2) {
        return out;
    }
    // The 1-density grows with both k and t; at k = 1 it is
    // (10t+1)/(4t+1), which passes x once t > (x-1)/(10-4x).
    let t_max = ((x - Rational::ONE) / (q(10, 1) - q(4, 1) * x)).floor().max(1) as usize;
    for t in 1..=t_max.min(FAN_T_LIMIT) {
        // With K = k+1: K ((5t+2) - x(2t+1)) = 3 - x.
        let a = Rational::from(5 * t + 2) - x * Rational::from(2 * t + 1);
        if a.numer() == 0 {
            continue;
        }
        let big_k = (q(3, 1) - x) / a;
        if big_k.is_integer() && big_k.numer() >= 2 {
            let k = big_k.numer() as usize - 1;
            debug_assert_eq!(fan_cliques_rho1(k, t), x);
            out.push(KnownRule::FanCliques { k, t });
        }
    }
    out
}

/// Least member strictly above `x`, for `0 <= x < 2`.
pub fn next_above(x: Rational) -> Result<CatalogEntry> {
    if x.numer() < 0 {
        return domain("next_above needs x >= 0");
    }
    if x >= two() {
        return domain("the catalog is only characterised below 2");
    }
    if x < Rational::ONE {
        let t = (Rational::ONE / (Rational::ONE - x)).floor() as usize + 1;
        return Ok(sub_one(t));
    }
    let k = interval_of(x);
    let mut best = endpoint_value(k + 1);
    let d = two() - q(1, k as i128) - x;
    for t in 0..k {
        // Interior values increase with n; they exceed x once
        // n > (2k-t-1)/(k d).
        let bound = (q((2 * k - t - 1) as i128, k as i128) / d).floor() as usize + 1;
        let n = round_up_to_class(bound.max(least_n(k, t)), k, t);
        let v = interior_value(k, n, t);
        debug_assert!(v > x);
        best = best.min(v);
    }
    Ok(decide(best).expect("candidate values are members"))
}

/// `next_above(x) - x`.
pub fn gap(x: Rational) -> Result<Rational> {
    Ok(next_above(x)?.beta - x)
}

/// Accumulation points in `(lo, hi]` make the slice infinite.
fn slice_is_infinite(lo: Rational, hi: Rational) -> bool {
    if lo < Rational::ONE && Rational::ONE <= hi {
        return true;
    }
    let k = interval_of(lo.max(Rational::ONE));
    let limit = two() - q(1, k as i128);
    lo < limit && limit <= hi
}

/// Members in `[lo, hi)`, ascending, each once. `max_order` keeps only
/// values whose witness has at most that many vertices; it is required
/// when the slice is infinite.
pub fn enumerate_b(lo: Rational, hi: Rational, max_order: Option<usize>) -> Result<Vec<CatalogEntry>> {
    if lo.numer() < 0 {
        return domain("enumeration needs lo >= 0");
    }
    if hi >= two() {
        return domain("enumeration needs hi < 2");
    }
    if lo >= hi {
        return Ok(Vec::new());
    }
    if max_order.is_none() && slice_is_infinite(lo, hi) {
        return domain(format!("[{lo}, {hi}) holds infinitely many values; give a witness order limit"));
    }
    let cap = max_order.unwrap_or(usize::MAX);
    let mut found: BTreeMap<Rational, CatalogEntry> = BTreeMap::new();

    for t in (1..=cap).take_while(|_| lo < Rational::ONE) {
        let e = sub_one(t);
        if e.beta >= hi {
            break;
        }
        if e.beta >= lo {
            found.insert(e.beta, e);
        }
    }

    if hi > Rational::ONE {
        let k_lo = interval_of(lo.max(Rational::ONE));
        let k_hi = interval_of(hi);
        for k in k_lo..=k_hi {
            let e = endpoint(k);
            if e.beta >= lo && e.beta < hi && e.witness_order() <= cap {
                found.insert(e.beta, e);
            }
            let d_lo = two() - q(1, k as i128) - lo;
            for t in 0..k {
                let mut n = least_n(k, t);
                if d_lo.is_positive() {
                    // Skip straight to the first n whose value reaches lo.
                    let r = q((2 * k - t - 1) as i128, k as i128) / d_lo;
                    n = round_up_to_class(n.max(r.ceil() as usize), k, t);
                }
                while n <= cap {
                    let v = interior_value(k, n, t);
                    if v >= hi {
                        break;
                    }
                    if v >= lo && !found.contains_key(&v) {
                        let entry = decide(v).expect("generated values are members");
                        found.insert(v, entry);
                    }
                    n += k;
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

/// The witness graph, whose density is exactly `entry.beta`.
pub fn witness(entry: &CatalogEntry) -> Result<Graph> {
    entry.witness_spec.build()
}

/// `{2 - 1/k : 1 <= k <= k_max} ∪ {2}`: the addable-class densities in
/// `[1, 2]`.
pub fn slice_b2_upto2(k_max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=k_max).map(|k| two() - q(1, k as i128)).collect();
    out.push(two());
    out
}

/// Accumulation points of the catalog in `[1, 2]`; the same set as
/// [`slice_b2_upto2`].
pub fn slice_bprime_1_2(k_max: usize) -> Vec<Rational> {
    slice_b2_upto2(k_max)
}

/// Least two densities of classes whose excluded minors are 3-connected.
pub fn b3_least_two() -> [Rational; 2] {
    [two(), q(5, 2)]
}

/// `(h + t - 3)/2`, a lower bound on the critical density when every
/// excluded minor is `t`-connected with at least `h` vertices.
pub fn lower_bound_t_connected(h: usize, t: usize) -> Result<Rational> {
    if t < 1 || h < t + 1 {
        return domain("needs h >= t + 1 >= 2");
    }
    Ok(q(h as i128 + t as i128 - 3, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "bound", rename_all = "snake_case")]
pub enum BtBound {
    Point { value: Rational },
    Interval { lo: Rational, hi: Rational },
}

/// Where the least density with `t`-connected excluded minors lies:
/// exactly `t - 1` up to `t = 8`, else somewhere in `[t-1, 2t-2]`.
pub fn min_bt_bounds(t: usize) -> Result<BtBound> {
    if t < 1 {
        return domain("t must be at least 1");
    }
    let lo = Rational::from(t - 1);
    Ok(if t <= 8 { BtBound::Point { value: lo } } else { BtBound::Interval { lo, hi: Rational::from(2 * t - 2) } })
}

/// Most edges in an `n`-vertex forest of paths with at most `t` vertices
/// each.
pub fn max_edges_path_forest(n: usize, t: usize) -> Result<usize> {
    if n < 1 || t < 1 {
        return domain("needs n >= 1 and t >= 1");
    }
    Ok(n - n.div_ceil(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::density;
    use crate::minor::{balance_check, BalanceMode};
    use crate::oracle;

    fn values(v: &[CatalogEntry]) -> Vec<Rational> {
        v.iter().map(|e| e.beta).collect()
    }

    #[test]
    fn first_values_above_one() {
        let all = enumerate_b(q(1, 1), q(3, 2), Some(40)).unwrap();
        assert_eq!(values(&all[..5]), vec![q(1, 1), q(6, 5), q(5, 4), q(9, 7), q(4, 3)]);
        let mut x = Rational::ONE;
        let mut walk = Vec::new();
        for _ in 0..4 {
            x = next_above(x).unwrap().beta;
            walk.push(x);
        }
        assert_eq!(walk, vec![q(6, 5), q(5, 4), q(9, 7), q(4, 3)]);
    }

    #[test]
    fn below_one_is_sub_one() {
        let got = enumerate_b(Rational::ZERO, Rational::ONE, Some(100)).unwrap();
        let want: Vec<_> = (1..=100).map(|t| q(t - 1, t)).collect();
        assert_eq!(values(&got), want);
        assert!(got.iter().all(|e| matches!(e.kind, EntryKind::SubOne { .. })));
        assert_eq!(values(&enumerate_b(Rational::ZERO, q(3, 4), None).unwrap()), vec![q(0, 1), q(1, 2), q(2, 3)]);
    }

    #[test]
    fn k_two_closed_form() {
        let got = values(&enumerate_b(Rational::ONE, q(3, 2), Some(200)).unwrap());
        let mut want = vec![Rational::ONE];
        for n in 4..=200i128 {
            if n % 2 == 1 && n >= 5 {
                want.push(q(3, 2) - q(3, 2 * n));
            } else if n % 2 == 0 {
                want.push(q(3, 2) - q(1, n));
            }
        }
        want.sort();
        want.dedup();
        assert_eq!(got, want);
    }

    #[test]
    fn infinite_slices_need_a_limit() {
        assert!(enumerate_b(Rational::ZERO, q(3, 2), None).is_err());
        assert!(enumerate_b(q(1, 1), q(3, 2), None).is_err());
        assert!(enumerate_b(q(11, 10), q(3, 2), None).is_err());
        assert!(enumerate_b(q(1, 1), q(2, 1), Some(10)).is_err());
        assert!(enumerate_b(q(-1, 2), q(1, 2), None).is_err());
        assert_eq!(values(&enumerate_b(q(1, 1), q(6, 5), None).unwrap()), vec![q(1, 1)]);
        // Brute force over the k = 3 formula; n stays below 100 here.
        let mut want = vec![q(3, 2)];
        for t in 0..3i128 {
            for n in 2..100i128 {
                let v = q(5, 3) - q(5 - t, 3 * n);
                if (n - 1 - t) % 3 == 0 && n > 3 + t && n > (5 - t) * 2 && v < q(8, 5) {
                    want.push(v);
                }
            }
        }
        want.sort();
        want.dedup();
        assert_eq!(values(&enumerate_b(q(3, 2), q(8, 5), None).unwrap()), want);
    }

    #[test]
    fn membership_examples() {
        assert_eq!(membership(q(14, 11)), Membership::NotInB);
        match membership(q(20, 13)) {
            Membership::InB { entry } => {
                assert_eq!(entry.parametrizations, vec![Param { k: 3, n: 13, t: 0, m: 4 }]);
                assert_eq!(entry.kind, EntryKind::Interior { k: 3, n: 13, t: 0, m: 4 });
            }
            other => panic!("{other:?}"),
        }
        match membership(q(4, 3)) {
            Membership::InB { entry } => assert_eq!(
                entry.parametrizations,
                vec![Param { k: 2, n: 6, t: 1, m: 2 }, Param { k: 2, n: 9, t: 0, m: 4 }]
            ),
            other => panic!("{other:?}"),
        }
        match membership(q(25, 11)) {
            Membership::UnknownAbove2 { known_hit: Some(hit) } => {
                assert!(hit.rules.contains(&KnownRule::Witness2511));
                assert!(hit.rules.contains(&KnownRule::FanCliques { k: 3, t: 1 }));
            }
            other => panic!("{other:?}"),
        }
        match membership(q(11, 5)) {
            Membership::UnknownAbove2 { known_hit: Some(hit) } => {
                assert_eq!(hit.conjectured_minimum_of, Some("B2"));
                assert!(hit.rules.contains(&KnownRule::FanCliques { k: 1, t: 1 }));
                assert!(hit.rules.contains(&KnownRule::OnePlus { base: q(6, 5) }));
            }
            other => panic!("{other:?}"),
        }
        match membership(q(33, 16)) {
            Membership::UnknownAbove2 { known_hit: Some(hit) } => {
                assert_eq!(hit.rules, vec![KnownRule::BowtieStar { k: 3 }]);
                assert_eq!(hit.conjectured_minimum_of, Some("B"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(membership(q(201, 100)), Membership::UnknownAbove2 { known_hit: None });
        assert!(matches!(membership(q(2, 1)), Membership::InB { entry } if entry.kind == EntryKind::Two));
        assert!(matches!(membership(q(1, 1)), Membership::InB { entry } if entry.kind == EntryKind::IntervalEndpoint { k: 2 }));
        assert!(matches!(membership(Rational::ZERO), Membership::InB { entry } if entry.kind == EntryKind::SubOne { t: 1 }));
        assert_eq!(membership(q(-1, 2)), Membership::NotInB);
    }

    #[test]
    fn gaps() {
        assert_eq!(gap(Rational::ONE).unwrap(), q(1, 5));
        assert_eq!(gap(Rational::ZERO).unwrap(), q(1, 2));
        assert_eq!(gap(q(6, 5)).unwrap(), q(1, 20));
        assert!(gap(q(2, 1)).is_err());
        assert!(gap(q(-1, 3)).is_err());
    }

    #[test]
    fn next_above_matches_enumeration() {
        let all = enumerate_b(Rational::ZERO, q(19, 10), Some(120)).unwrap();
        // Each consecutive pair is adjacent unless the walk passes an
        // accumulation point, where the order limit cuts the tail.
        for w in all.windows(2) {
            let next = next_above(w[0].beta).unwrap();
            assert!(next.beta > w[0].beta);
            assert!(next.beta <= w[1].beta);
            if next.witness_order() <= 120 {
                assert_eq!(next.beta, w[1].beta);
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_self_consistent() {
        let all = enumerate_b(Rational::ZERO, q(19, 10), Some(60)).unwrap();
        for w in all.windows(2) {
            assert!(w[0].beta < w[1].beta);
            let mid = (w[0].beta + w[1].beta) / q(2, 1);
            if next_above(w[0].beta).unwrap().beta == w[1].beta {
                assert_eq!(membership(mid), Membership::NotInB, "{mid}");
            }
        }
        for e in &all {
            assert_eq!(membership(e.beta), Membership::InB { entry: e.clone() });
        }
    }

    #[test]
    fn interior_values_climb_to_the_interval_end() {
        for k in 2..=6 {
            let end = two() - q(1, k as i128);
            for t in 0..k {
                let mut prev = endpoint_value(k);
                let mut n = least_n(k, t);
                for _ in 0..50 {
                    let v = interior_value(k, n, t);
                    assert!(v > prev && v < end);
                    prev = v;
                    n += k;
                }
                assert!(end - prev < q(1, 10));
            }
        }
    }

    #[test]
    fn witnesses_have_the_right_density() {
        let all = enumerate_b(Rational::ZERO, q(19, 10), Some(30)).unwrap();
        for e in &all {
            let g = witness(e).unwrap();
            assert_eq!(g.order(), e.witness_order());
            assert_eq!(density(&g).unwrap(), e.beta, "{e:?}");
        }
        assert_eq!(witness(&two_entry()).unwrap(), Graph::complete(5).unwrap());
    }

    #[test]
    fn small_witnesses_are_strictly_balanced() {
        let all = enumerate_b(Rational::ZERO, q(19, 10), Some(9)).unwrap();
        for e in &all {
            let g = witness(e).unwrap();
            assert!(balance_check(&g, BalanceMode::StrictlyMinorBalanced).unwrap().verdict, "{e:?}");
        }
    }

    #[test]
    fn named_witnesses() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let w = |x| match membership(x) {
            Membership::InB { entry } => witness(&entry).unwrap(),
            other => panic!("{other:?}"),
        };
        assert!(is_isomorphic(&w(q(5, 4)), &diamond));
        assert!(is_isomorphic(&w(q(6, 5)), &bowtie));
        let k24 = w(q(3, 2));
        assert_eq!((k24.order(), k24.size()), (6, 9));
        assert_eq!(w(q(2, 1)), Graph::complete(5).unwrap());
        assert_eq!(w(Rational::ONE), Graph::cycle(3).unwrap());
    }

    #[test]
    fn slices_and_bounds() {
        assert_eq!(slice_b2_upto2(3), vec![q(1, 1), q(3, 2), q(5, 3), q(2, 1)]);
        assert!(slice_b2_upto2(10).iter().all(|v| *v >= Rational::ONE));
        assert_eq!(slice_bprime_1_2(4), slice_b2_upto2(4));
        for e in enumerate_b(Rational::ZERO, q(1, 1), Some(50)).unwrap() {
            assert!(slice_b2_upto2(50).contains(&(e.beta + Rational::ONE)));
        }
        assert_eq!(b3_least_two(), [q(2, 1), q(5, 2)]);
        assert_eq!(lower_bound_t_connected(4, 2).unwrap(), q(3, 2));
        assert_eq!(lower_bound_t_connected(5, 2).unwrap(), q(2, 1));
        assert_eq!(lower_bound_t_connected(5, 3).unwrap(), q(5, 2));
        assert!(lower_bound_t_connected(2, 2).is_err());
        assert_eq!(min_bt_bounds(4).unwrap(), BtBound::Point { value: q(3, 1) });
        assert_eq!(min_bt_bounds(9).unwrap(), BtBound::Interval { lo: q(8, 1), hi: q(16, 1) });
        assert_eq!(min_bt_bounds(1).unwrap(), BtBound::Point { value: Rational::ZERO });
    }

    #[test]
    fn path_forest_edges() {
        assert_eq!(max_edges_path_forest(7, 3).unwrap(), 4);
        for t in 1..10 {
            assert_eq!(max_edges_path_forest(t, t).unwrap(), t - 1);
        }
        assert_eq!(max_edges_path_forest(5, 1).unwrap(), 0);
        for n in 1..=14 {
            for t in 1..=8 {
                assert_eq!(max_edges_path_forest(n, t).unwrap(), oracle::path_forest_max_edges(n, t));
            }
        }
    }
}
