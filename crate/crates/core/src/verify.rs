//! Reproduction checks shared by `mdens verify` and the acceptance target.
//!
//! Numbered checks are the acceptance criteria. The `S` rows are extra
//! sweeps over properties that the criteria lean on.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::catalog::{enumerate_b, membership, next_above, witness, CatalogEntry, EntryKind, Membership, Param};
use crate::error::{Error, Result};
use crate::families::{
    a_k, b_k, bowtie_star_density, build_bowtie_star, build_fan_cliques, build_fkm, build_gkm, build_witness_25_11,
    build_witness_25_11_base, c_k, cover_params, fan_cliques_rho1, fkm_density, gkm_n,
};
use crate::graph::{blocks, connectivity, extend, t_density, t_density_counts, Graph};
use crate::minor::{apply_minor_ops, balance_check_with, densest_minor_with, BalanceMode, SearchConfig};
use crate::oracle;
use crate::plants::{edge_plant_cover, plant_classify, plant_edge_bound, PlantResult};
use crate::rational::{q, Rational};
use crate::searchlab::{crosscheck, enumerate_graphs_with, par_map, ScanOptions};

/// Order of the exhaustive sweeps.
pub const SWEEP_ORDER: usize = 7;
pub const RANDOM_GRAPHS_PER_T: usize = 500;
const RANDOM_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Adds the 11 to 16 vertex strict-balance checks.
    pub deep: bool,
    pub jobs: usize,
    pub budget: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { deep: false, jobs: 1, budget: SearchConfig::default().budget }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

type CheckFn = fn(&Ctx, &mut Check) -> Result<()>;

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    /// Wall-clock limit; exceeding it fails the row.
    pub limit: Duration,
    /// Only run with `deep`.
    pub deep_only: bool,
    run: CheckFn,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, title, limit, run| Criterion { id, title, limit, deep_only: false, run };
    let mut v = vec![
        c("1", "catalog order above 1", secs(1), c1 as CheckFn),
        c("2", "values below 1", secs(1), c2),
        c("3", "k = 2 closed form", secs(1), c3),
        c("4", "membership", secs(1), c4),
        c("5", "witness graphs", secs(600), c5),
        c("6", "G_2 family", secs(900), c6),
        c("7", "F family and mesh", secs(60), c7),
        c("8", "fan-with-K4 family", secs(600), c8),
        c("9", "25/11 witness", secs(1800), c9),
        c("10", "bowtie stars", secs(1800), c10),
        c("11", "crosscheck and connectivity", secs(1800), c11),
        c("12", "oracle equivalence", secs(600), c12),
        c("13", "t-density identities", secs(600), c13),
        c("S1", "extension keeps balance", secs(600), s1),
        c("S2", "plant edge bound", secs(600), s2),
        c("S3", "gap closure", secs(60), s3),
    ];
    v.push(Criterion { id: "S4", title: "strict balance, 11 to 16 vertices", limit: secs(3600), deep_only: true, run: s4 });
    v
}

/// Runs every applicable row, reporting each one as it finishes.
pub fn run_all(opts: &VerifyOptions, mut report: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let ctx = Ctx::new(opts.clone());
    let mut out = Vec::new();
    for c in criteria() {
        if c.deep_only && !opts.deep {
            continue;
        }
        let r = run_one(&ctx, &c);
        report(&r);
        out.push(r);
    }
    out
}

/// Runs a single row by id.
pub fn run_criterion(id: &str, opts: &VerifyOptions) -> Option<CriterionResult> {
    let ctx = Ctx::new(opts.clone());
    criteria().into_iter().find(|c| c.id == id).map(|c| run_one(&ctx, &c))
}

fn run_one(ctx: &Ctx, c: &Criterion) -> CriterionResult {
    let start = Instant::now();
    let mut check = Check::default();
    let outcome = (c.run)(ctx, &mut check);
    let elapsed = start.elapsed();
    if let Err(e) = outcome {
        check.fail(format!("error: {e}"));
    }
    if elapsed > c.limit {
        check.fail(format!("took {:.1?}, limit {:?}", elapsed, c.limit));
    }
    CriterionResult { id: c.id, title: c.title, passed: check.failures.is_empty(), detail: check.detail(), elapsed }
}

#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures.push(what);
    }

    fn note(&mut self, what: String) {
        self.notes.push(what);
    }

    fn detail(&self) -> String {
        let mut parts: Vec<String> = self.failures.iter().take(5).cloned().collect();
        if self.failures.len() > 5 {
            parts.push(format!("{} more failures", self.failures.len() - 5));
        }
        if parts.is_empty() {
            parts = self.notes.clone();
        }
        parts.join("; ")
    }
}

struct Ctx {
    opts: VerifyOptions,
    corpus: OnceLock<Result<Vec<Graph>>>,
}

impl Ctx {
    fn new(opts: VerifyOptions) -> Ctx {
        Ctx { opts, corpus: OnceLock::new() }
    }

    fn search(&self) -> SearchConfig {
        SearchConfig { budget: self.opts.budget, jobs: self.opts.jobs, ..SearchConfig::default() }
    }

    /// Every isomorphism class with 1 to `SWEEP_ORDER` vertices.
    fn corpus(&self) -> Result<&[Graph]> {
        let r = self.corpus.get_or_init(|| {
            let mut all = Vec::new();
            for n in 1..=SWEEP_ORDER {
                all.extend(enumerate_graphs_with(n, false, self.opts.jobs)?);
            }
            Ok(all)
        });
        match r {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    fn balanced(&self, g: &Graph, mode: BalanceMode) -> Result<bool> {
        Ok(balance_check_with(g, mode, &self.search())?.verdict)
    }

    /// Sequential search, for use inside parallel sweeps.
    fn balanced_seq(&self, g: &Graph, mode: BalanceMode) -> Result<bool> {
        let cfg = SearchConfig { jobs: 1, ..self.search() };
        Ok(balance_check_with(g, mode, &cfg)?.verdict)
    }
}

fn betas(entries: &[CatalogEntry]) -> Vec<Rational> {
    entries.iter().map(|e| e.beta).collect()
}

fn show(xs: &[Rational]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn entry_for(x: Rational) -> Result<CatalogEntry> {
    match membership(x) {
        Membership::InB { entry } => Ok(entry),
        other => Err(Error::Domain(format!("{x} is not a catalog value: {other:?}"))),
    }
}

fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("fixed small graph")
}

fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("fixed small graph")
}

fn rho(g: &Graph) -> Rational {
    t_density(g, 0)
}

fn c1(_: &Ctx, ck: &mut Check) -> Result<()> {
    let want = [q(6, 5), q(5, 4), q(9, 7), q(4, 3)];
    let got = betas(&enumerate_b(Rational::ONE, q(3, 2), Some(crate::graph::MAX_VERTICES))?);
    ck.expect(got.first() == Some(&Rational::ONE), || format!("slice should open with 1, got {:?}", got.first()));
    let above: Vec<Rational> = got.iter().copied().filter(|&b| b > Rational::ONE).take(4).collect();
    ck.expect(above == want, || format!("first four above 1: {}", show(&above)));
    let mut walk = Vec::new();
    let mut x = Rational::ONE;
    for _ in 0..4 {
        x = next_above(x)?.beta;
        walk.push(x);
    }
    ck.expect(walk == want, || format!("next_above walk from 1: {}", show(&walk)));
    ck.note(format!("1 < {}", show(&above).replace(", ", " < ")));
    Ok(())
}

fn c2(_: &Ctx, ck: &mut Check) -> Result<()> {
    let got = betas(&enumerate_b(Rational::ZERO, Rational::ONE, Some(100))?);
    let want: Vec<Rational> = (1..=100).map(|t| q(t - 1, t)).collect();
    ck.expect(got == want, || format!("got {} values: {} ...", got.len(), show(&got[..got.len().min(6)])));
    ck.note(format!("{} values (t-1)/t", got.len()));
    Ok(())
}

fn c3(_: &Ctx, ck: &mut Check) -> Result<()> {
    let got: BTreeSet<Rational> = betas(&enumerate_b(Rational::ONE, q(3, 2), Some(200))?).into_iter().collect();
    let mut want = BTreeSet::from([Rational::ONE]);
    for n in 4..=200i128 {
        want.insert(if n % 2 == 1 { q(3, 2) - q(3, 2 * n) } else { q(3, 2) - q(1, n) });
    }
    ck.expect(got == want, || {
        let extra: Vec<Rational> = got.difference(&want).copied().collect();
        let missing: Vec<Rational> = want.difference(&got).copied().collect();
        format!("extra [{}], missing [{}]", show(&extra), show(&missing))
    });
    ck.note(format!("{} values", got.len()));
    Ok(())
}

fn c4(_: &Ctx, ck: &mut Check) -> Result<()> {
    ck.expect(membership(q(14, 11)) == Membership::NotInB, || "14/11 should be outside B".into());
    let e = entry_for(q(20, 13))?;
    ck.expect(e.parametrizations == [Param { k: 3, n: 13, t: 0, m: 4 }], || {
        format!("20/13 parametrizations {:?}", e.parametrizations)
    });
    let e = entry_for(q(4, 3))?;
    ck.expect(e.parametrizations.len() == 2, || format!("4/3 parametrizations {:?}", e.parametrizations));
    let ps: Vec<String> = e.parametrizations.iter().map(|p| format!("({},{},{},{})", p.k, p.n, p.t, p.m)).collect();
    ck.note(format!("14/11 not in B; 20/13 = (3,13,0,4); 4/3 = {}", ps.join(" and ")));
    Ok(())
}

fn c5(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let start = Instant::now();
    for (x, want, name) in [(q(5, 4), diamond(), "diamond"), (q(6, 5), bowtie(), "bowtie")] {
        let g = witness(&entry_for(x)?)?;
        ck.expect(is_isomorphic(&g, &want), || format!("witness({x}) is not a {name}"));
        ck.expect(ctx.balanced(&g, BalanceMode::StrictlyMinorBalanced)?, || format!("witness({x}) not strict"));
    }
    let small = start.elapsed();
    ck.expect(small <= secs(10), || format!("5/4 and 6/5 took {small:.1?}"));
    let g = witness(&entry_for(q(20, 13))?)?;
    ck.expect(g.order() == 13 && g.size() == 20, || format!("witness(20/13) has v={}, e={}", g.order(), g.size()));
    let bs = blocks(&g);
    let d = diamond();
    let diamonds = bs.iter().filter(|b| is_isomorphic(&induced(&g, b), &d)).count();
    ck.expect(bs.len() == 4 && diamonds == 4, || format!("{} blocks, {diamonds} diamonds", bs.len()));
    ck.expect(ctx.balanced(&g, BalanceMode::StrictlyMinorBalanced)?, || "witness(20/13) not strict".into());
    ck.note(format!("diamond, bowtie strict in {small:.1?}; 20/13 star of 4 diamonds strict"));
    Ok(())
}

fn induced(g: &Graph, vs: &[usize]) -> Graph {
    g.induced(vs.iter().fold(0u64, |m, &v| m | 1 << v))
}

fn c6(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    for (m, want) in [(0, q(17, 10)), (3, q(2, 1)), (7, q(12, 5))] {
        let got = rho(&build_gkm(2, m)?);
        ck.expect(got == want, || format!("rho(G_2({m})) = {got}, expected {want}"));
    }
    let b2 = b_k(2)?;
    ck.expect(b2 == q(12, 5), || format!("b_2 = {b2}"));
    ck.expect(a_k(2) == q(17, 10), || format!("a_2 = {}", a_k(2)));
    let n = gkm_n(2);
    for m in 0..n / 2 {
        let step = rho(&build_gkm(2, m + 1)?) - rho(&build_gkm(2, m)?);
        ck.expect(step == q(1, 10), || format!("G_2({m}) -> G_2({}) steps by {step}", m + 1));
    }
    for m in [0, 4, 7] {
        let g = build_gkm(2, m)?;
        ck.expect(g.order() == 10, || format!("G_2({m}) has {} vertices", g.order()));
        ck.expect(ctx.balanced(&g, BalanceMode::MinorBalanced)?, || format!("G_2({m}) not minor-balanced"));
    }
    ck.note("17/10, 2, 12/5; step 1/10 for m < 4; G_2(0), G_2(4), G_2(7) balanced".into());
    Ok(())
}

fn c7(_: &Ctx, ck: &mut Check) -> Result<()> {
    let f = build_fkm(2, 9)?;
    ck.expect(f.order() == 11 && f.size() == 28, || format!("F_2(9) has v={}, e={}", f.order(), f.size()));
    let mut counted = 0;
    for k in 2..=6usize {
        for m in (3..=30).step_by(3) {
            let g = build_fkm(k, m)?;
            let got = rho(&g);
            ck.expect(got == fkm_density(k, m), || format!("F_{k}({m}): {got} vs {}", fkm_density(k, m)));
            counted += 1;
        }
    }
    for k in 2..=6usize {
        let kk = (k * k) as i128;
        let n = gkm_n(k);
        for m in 0..n / 2 {
            let step = rho(&build_gkm(k, m + 1)?) - rho(&build_gkm(k, m)?);
            ck.expect(step == q(1, kk + 2 * k as i128 + 2), || format!("G_{k} step at {m} is {step}"));
            ck.expect(step < q(3, kk), || format!("G_{k} step at {m} is {step}, not below 3/k^2"));
        }
        let p = cover_params(k)?;
        for m in (p.n2..=p.n2 + 4 * k + 30).step_by(3) {
            let step = fkm_density(k, m + 3) - fkm_density(k, m);
            ck.expect(step >= Rational::ZERO && step < q(3, 2 * kk), || format!("F_{k} step at {m} is {step}"));
        }
    }
    ck.note(format!("{counted} closed forms match; mesh holds for k = 2..6"));
    Ok(())
}

fn c8(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    for (k, t, want) in [(3, 1, q(25, 11)), (3, 2, q(45, 19))] {
        let g = build_fan_cliques(k, t)?;
        let got = t_density(&g, 1);
        ck.expect(got == want && fan_cliques_rho1(k, t) == want, || format!("rho_1(H_{{{k},{t}}}) = {got}"));
    }
    for k in 1..=2 {
        let g = build_fan_cliques(k, 1)?;
        let value = t_density(&g, 1);
        ck.expect(ctx.balanced(&g, BalanceMode::StrictlyTMinorBalanced(1))?, || {
            format!("H_{{{k},1}} not strictly 1-minor-balanced per search")
        });
        // Edge deletions lower e and keep v, so they cannot raise rho_1; the
        // deletion/contraction closure decides strictness on its own.
        let closure = oracle::minor_closure(&g, false);
        let worst = closure
            .iter()
            .filter(|h| (h.order(), h.size()) != (g.order(), g.size()))
            .map(|h| t_density(h, 1))
            .max()
            .unwrap_or(Rational::ZERO);
        ck.expect(worst < value, || format!("H_{{{k},1}} has a proper minor with rho_1 = {worst}"));
        ck.note(format!("H_{{{k},1}}: {} vertices, {} labelled minors, max {worst} < {value}", g.order(), closure.len()));
    }
    Ok(())
}

fn c9(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let base = build_witness_25_11_base();
    ck.expect(base.order() == 10 && rho(&base) == q(3, 2), || format!("base has v={}, rho={}", base.order(), rho(&base)));
    ck.expect(ctx.balanced(&base, BalanceMode::MinorBalanced)?, || "base not minor-balanced".into());
    let g = build_witness_25_11();
    ck.expect(g.order() == 11 && g.size() == 25, || format!("witness has v={}, e={}", g.order(), g.size()));
    if ctx.opts.deep {
        ck.expect(ctx.balanced(&g, BalanceMode::StrictlyMinorBalanced)?, || "witness not strict".into());
        ck.note("11 vertices, 25 edges, strict; base balanced at 3/2".into());
    } else {
        ck.note("11 vertices, 25 edges; base balanced at 3/2; strict check needs --deep".into());
    }
    Ok(())
}

fn c10(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let g = build_bowtie_star(1)?;
    ck.expect(g.order() == 6 && rho(&g) == q(11, 6), || format!("bowtie_star(1): v={}, rho={}", g.order(), rho(&g)));
    ck.expect(ctx.balanced(&g, BalanceMode::StrictlyMinorBalanced)?, || "bowtie_star(1) not strict".into());
    let g = build_bowtie_star(2)?;
    ck.expect(g.order() == 11 && rho(&g) == q(2, 1), || format!("bowtie_star(2): v={}, rho={}", g.order(), rho(&g)));
    if ctx.opts.deep {
        ck.expect(ctx.balanced(&g, BalanceMode::StrictlyMinorBalanced)?, || "bowtie_star(2) not strict".into());
    }
    for k in 1..=6 {
        let got = rho(&build_bowtie_star(k)?);
        ck.expect(got == bowtie_star_density(k), || format!("bowtie_star({k}) has rho {got}"));
    }
    ck.note(format!("11/6 strict; 2{}; formula holds for k <= 6", if ctx.opts.deep { " strict" } else { " (strict check needs --deep)" }));
    Ok(())
}

fn c11(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let opts = ScanOptions { search: SearchConfig { jobs: 1, ..ctx.search() }, jobs: ctx.opts.jobs, allow_large: false };
    let report = crosscheck(SWEEP_ORDER, &opts)?;
    ck.expect(report.catalog_misses.is_empty(), || format!("catalog misses: {}", show(&report.catalog_misses)));
    ck.expect(report.witness_misses.is_empty(), || format!("witness misses: {}", show(&report.witness_misses)));
    ck.expect(!report.partial, || format!("partial crosscheck, flagged {:?}", report.flagged));

    let connected: Vec<&Graph> = ctx.corpus()?.iter().filter(|g| g.is_connected()).collect();
    let rows = par_map(&connected, ctx.opts.jobs, |g| -> Result<[u32; 4]> {
        let mut hits = [0u32; 4];
        if ctx.balanced_seq(g, BalanceMode::TMinorBalanced(1))? {
            hits[0] = 1;
            if !ctx.balanced_seq(g, BalanceMode::StrictlyMinorBalanced)? {
                return Ok([0, 0, 0, 1]);
            }
        }
        if ctx.balanced_seq(g, BalanceMode::StrictlyTMinorBalanced(1))? {
            hits[1] = 1;
            if !(g.order() == 2 || connectivity(g)? >= 2) {
                return Ok([0, 0, 0, 2]);
            }
        }
        if g.order() >= 5 && ctx.balanced_seq(g, BalanceMode::StrictlyTMinorBalanced(2))? {
            hits[2] = 1;
            if connectivity(g)? < 3 {
                return Ok([0, 0, 0, 3]);
            }
        }
        Ok(hits)
    });
    let mut totals = [0u32; 3];
    for (g, r) in connected.iter().zip(rows) {
        let r = r?;
        match r[3] {
            0 => (0..3).for_each(|i| totals[i] += r[i]),
            1 => ck.fail(format!("{} is 1-minor-balanced but not strictly minor-balanced", crate::emit_graph6(g))),
            2 => ck.fail(format!("{} is strictly 1-minor-balanced but neither K2 nor 2-connected", crate::emit_graph6(g))),
            _ => ck.fail(format!("{} is strictly 2-minor-balanced on >= 5 vertices but not 3-connected", crate::emit_graph6(g))),
        }
    }
    // Part (a) is over every graph, connected or not.
    let disconnected: Vec<&Graph> = ctx.corpus()?.iter().filter(|g| !g.is_connected()).collect();
    let rows = par_map(&disconnected, ctx.opts.jobs, |g| ctx.balanced_seq(g, BalanceMode::TMinorBalanced(1)));
    for (g, r) in disconnected.iter().zip(rows) {
        ck.expect(!r?, || format!("{} is 1-minor-balanced but disconnected", crate::emit_graph6(g)));
    }
    ck.note(format!(
        "{} densities found, no misses; {} connected graphs: {} 1-balanced, {} strictly 1-balanced, {} strictly 2-balanced (v >= 5)",
        report.densities_found.len(),
        connected.len(),
        totals[0],
        totals[1],
        totals[2]
    ));
    Ok(())
}

fn c12(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let small: Vec<&Graph> = ctx.corpus()?.iter().filter(|g| g.order() <= 6).collect();
    let cfg = SearchConfig { jobs: 1, ..ctx.search() };
    let rows = par_map(&small, ctx.opts.jobs, |g| -> Result<Option<String>> {
        let found = densest_minor_with(g, &cfg)?;
        let (best, _) = oracle::max_density(&oracle::minor_closure(g, true));
        if found.density != best || rho(&found.graph) != best {
            return Ok(Some(format!("densest minor {} vs oracle {best}", found.density)));
        }
        if !is_isomorphic(&apply_minor_ops(g, &found.ops)?, &found.graph) {
            return Ok(Some("densest minor operations do not reproduce the graph".into()));
        }
        let plant = oracle::is_plant(g);
        let got = plant_classify(g);
        if got.is_plant() != plant {
            return Ok(Some(format!("plant verdict {} vs oracle {plant}", got.is_plant())));
        }
        if let Some(cert) = got.certificate() {
            // The first edge counts once, each later vertex twice when tight.
            let eq = oracle::plant_back_degree_sums(g).contains(&(2 * g.order() - 3));
            if !cert.validate(g) || matches!(got, PlantResult::PlantEq(_)) != eq {
                return Ok(Some("plant classification disagrees with the orderings oracle".into()));
            }
        }
        Ok(None)
    });
    let mut plants = 0;
    for (g, r) in small.iter().zip(rows) {
        if let Some(msg) = r? {
            ck.fail(format!("{}: {msg}", crate::emit_graph6(g)));
        }
        plants += usize::from(plant_classify(g).is_plant());
    }
    ck.note(format!("{} graphs agree, {plants} of them plants", small.len()));
    Ok(())
}

fn random_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Result<Graph> {
    let n = rng.gen_range(min_n..=max_n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

fn c13(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for t in 0..=2usize {
        let mut tested = 0;
        while tested < RANDOM_GRAPHS_PER_T {
            let g = random_graph(&mut rng, t + 1, 20)?;
            let rt = t_density(&g, t);
            if !rt.is_positive() {
                continue;
            }
            tested += 1;
            let lhs = t_density(&extend(&g)?, t + 1);
            ck.expect(lhs == rt + Rational::ONE, || format!("t={t}, {}: {lhs} vs {rt} + 1", crate::emit_graph6(&g)));
        }
    }
    let mut hyp = 0;
    for g in ctx.corpus()? {
        let (v, e) = (g.order(), g.size());
        for t in 2..v {
            // e >= (t-1)(v - t/2), doubled.
            if 2 * e < (t - 1) * (2 * v - t) {
                continue;
            }
            hyp += 1;
            let r: Vec<Rational> = (0..=t).map(|s| t_density_counts(v, e, s)).collect();
            let ok = r[t] >= r[t - 1] && (1..t).all(|s| r[s] > r[s - 1]);
            ck.expect(ok, || format!("{} t={t}: {}", crate::emit_graph6(g), show(&r)));
        }
    }
    ck.note(format!("{} random graphs per t; ordering holds in {hyp} (graph, t) cases", RANDOM_GRAPHS_PER_T));
    Ok(())
}

fn s1(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let small: Vec<&Graph> = ctx.corpus()?.iter().filter(|g| g.order() <= 6).collect();
    let rows = par_map(&small, ctx.opts.jobs, |g| -> Result<[bool; 2]> {
        let mut hit = [false; 2];
        for t in 0..=1 {
            if ctx.balanced_seq(g, BalanceMode::TMinorBalanced(t))? {
                hit[t] = true;
                if !ctx.balanced_seq(&extend(g)?, BalanceMode::TMinorBalanced(t + 1))? {
                    return Err(Error::Domain(format!("{} extended is not {}-minor-balanced", crate::emit_graph6(g), t + 1)));
                }
            }
        }
        Ok(hit)
    });
    let mut counts = [0; 2];
    for r in rows {
        match r {
            Ok(h) => (0..2).for_each(|t| counts[t] += usize::from(h[t])),
            Err(Error::Domain(msg)) => ck.fail(msg),
            Err(e) => return Err(e),
        }
    }
    ck.note(format!("{} 0-balanced and {} 1-balanced graphs (n <= 6) extend", counts[0], counts[1]));
    Ok(())
}

/// Connected graphs up to 8 vertices; the cover test only runs where the
/// edge count is below the bound, since elsewhere the implication holds.
fn s2(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let mut checked = 0;
    for n in 2..=8 {
        let graphs = enumerate_graphs_with(n, true, ctx.opts.jobs)?;
        let rows = par_map(&graphs, ctx.opts.jobs, |g| -> Result<(usize, Option<usize>)> {
            let mut cases = (0, None);
            for k in 2..=n {
                let t = (n - 1) % k;
                let bound = plant_edge_bound(n, k, t)?;
                cases.0 += 1;
                if g.size() >= bound {
                    continue;
                }
                if edge_plant_cover(g, k)?.iter().all(|c| c.covered()) {
                    cases.1 = Some(k);
                }
            }
            Ok(cases)
        });
        for (g, r) in graphs.iter().zip(rows) {
            let (c, k) = r?;
            checked += c;
            if let Some(k) = k {
                ck.fail(format!("{} (k = {k}) is covered with too few edges", crate::emit_graph6(g)));
            }
        }
    }
    ck.note(format!("{checked} (graph, k) pairs on connected graphs, n <= 8"));
    Ok(())
}

/// `k^2` times the gaps left by the G and F families, bounded by 3.
fn s3(_: &Ctx, ck: &mut Check) -> Result<()> {
    let c = Rational::from_integer(3);
    let mut worst = Rational::ZERO;
    for k in 2..=40usize {
        let kk = Rational::from_integer((k * k) as i128);
        let p = cover_params(k)?;
        let g1 = (fkm_density(k, p.n2) - b_k(k)?).abs() * kk;
        let g2 = (c_k(k) - a_k(k + 1)).abs() * kk;
        ck.expect(g1 <= c && g2 <= c, || format!("k = {k}: {g1}, {g2}"));
        ck.expect(fkm_density(k, p.n2 + 4 * k) >= c_k(k), || format!("rho(F_{k}(n2 + 4k)) < c_{k}"));
        worst = worst.max(g1).max(g2);
    }
    ck.note(format!("largest scaled gap {worst} <= 3 for k <= 40"));
    Ok(())
}

fn s4(ctx: &Ctx, ck: &mut Check) -> Result<()> {
    let mut graphs: Vec<(String, Graph)> = vec![("bowtie_star(3)".into(), build_bowtie_star(3)?)];
    for e in enumerate_b(q(3, 2), q(5, 3), Some(16))? {
        if let EntryKind::Interior { .. } = e.kind {
            if e.witness_order() >= 11 {
                graphs.push((format!("witness({})", e.beta), witness(&e)?));
            }
        }
    }
    for (name, g) in &graphs {
        ck.expect(ctx.balanced(g, BalanceMode::StrictlyMinorBalanced)?, || format!("{name} not strict"));
    }
    ck.note(format!("{} graphs strict: {}", graphs.len(), graphs.iter().map(|g| g.0.as_str()).collect::<Vec<_>>().join(", ")));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_rows_pass() {
        let opts = VerifyOptions::default();
        for id in ["1", "2", "3", "4", "7", "S3"] {
            let r = run_criterion(id, &opts).unwrap();
            assert!(r.passed, "{id}: {}", r.detail);
        }
    }

    #[test]
    fn unknown_row() {
        assert!(run_criterion("99", &VerifyOptions::default()).is_none());
    }
}
