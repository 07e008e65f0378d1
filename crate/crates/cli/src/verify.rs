//! The `verify all` suite: nine criteria, each a batch of exact checks against
//! independent reference data. Output is deterministic for a given seed;
//! elapsed time only feeds the boolean time-limit verdicts.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hessdeform_core::bwb::{bott_line, euler_multiset, negative_pairing_count, type_a_weight, weyl_dim, BottResult};
use hessdeform_core::filtered::{
    build_twisted_pair, deformation_table_x, deformation_table_y, enumerate_regular, enumerate_regular_shift, resolve_cohomology,
    verify_regular_table, Case,
};
use hessdeform_core::rootsys::{CartanType, Family, RootSystem, RootVector, WeightVector};
use hessdeform_core::symcoh::{
    check_conjecture, check_long, check_parabolic_a, check_short_all_alpha, chi_sym, default_conjecture_shift, demazure_chi_rules, CheckStatus,
    ChiReport, DemazureRule, NilradicalSpec,
};
use hessdeform_core::typea::random::{random_affine_config, random_affine_map, random_mobius_map, random_permutation};
use hessdeform_core::typea::{
    affine_equivalent, canonical_point, characterize_search, closed_form_chi, euler_hessenberg_linebundle, mobius_equivalent, stab_affine,
    stab_mobius, EigenConfig, Flavor, GroupClass,
};
use hessdeform_core::{Error, Result};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::expected;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Failure messages kept per criterion; the count is always exact.
const FAILURE_SAMPLE: usize = 20;

#[derive(Clone, Debug)]
pub struct Options {
    pub max_rank: usize,
    pub jobs: Option<usize>,
    pub seed: u64,
    pub cap: u128,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_rank: 8, jobs: None, seed: DEFAULT_SEED, cap: hessdeform_core::symcoh::DEFAULT_CAP }
    }
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    /// `None` when the criterion has no time limit.
    pub within_time_limit: Option<bool>,
}

impl Criterion {
    fn new(id: u8, name: &'static str) -> Criterion {
        Criterion { id, name, checks: 0, failures: Vec::new(), notes: Vec::new(), within_time_limit: None }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.within_time_limit != Some(false)
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.checks += 1;
        self.failures.push(msg);
    }

    fn absorb(&mut self, other: Criterion) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    fn timed(mut self, start: Instant, limit: Duration) -> Criterion {
        self.within_time_limit = Some(start.elapsed() < limit);
        if self.within_time_limit == Some(false) {
            self.notes.push(format!("exceeded the {} s limit", limit.as_secs()));
        }
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed(),
            "checks": self.checks,
            "failure_count": self.failures.len(),
            "failures": self.failures.iter().take(FAILURE_SAMPLE).collect::<Vec<_>>(),
            "notes": self.notes,
            "within_time_limit": self.within_time_limit,
        })
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {}: {} {} (checks {}, failures {})",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checks,
            self.failures.len()
        )
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub criteria: Vec<Criterion>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(Criterion::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({ "passed": self.passed(), "criteria": self.criteria.iter().map(Criterion::to_json).collect::<Vec<_>>() })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            out.push_str(&c.line());
            out.push('\n');
            for f in c.failures.iter().take(FAILURE_SAMPLE) {
                out.push_str(&format!("  failure: {f}\n"));
            }
            for n in &c.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        out
    }
}

pub const CRITERIA: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

pub fn run_all(opts: &Options) -> Result<VerifyReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
    let criteria = pool.install(|| CRITERIA.par_iter().map(|&id| run_criterion(id, opts)).collect());
    Ok(VerifyReport { criteria })
}

pub fn run_criterion(id: u8, opts: &Options) -> Criterion {
    let seed = opts.seed.wrapping_add(u64::from(id));
    match id {
        1 => deformation_x(opts.max_rank),
        2 => deformation_y(opts.max_rank),
        3 => vanishing(opts.max_rank),
        4 => regular_tables(opts.max_rank),
        5 => characterization(),
        6 => bwb_suite(seed),
        7 => stabilizers(seed),
        8 => chi_identities(seed, opts.cap),
        9 => consistency(seed, opts.cap),
        _ => {
            let mut c = Criterion::new(id, "unknown");
            c.fail(format!("no criterion {id}"));
            c
        }
    }
}

fn types(max_rank: usize) -> Vec<RootSystem> {
    CartanType::all_up_to(max_rank).into_iter().map(RootSystem::new).collect()
}

/// Runs `f` per type in parallel and merges in type order.
fn per_type(c: &mut Criterion, systems: &[RootSystem], f: impl Fn(&RootSystem, &mut Criterion) + Sync) {
    let parts: Vec<Criterion> = systems
        .par_iter()
        .map(|rs| {
            let mut part = Criterion::new(c.id, c.name);
            f(rs, &mut part);
            part
        })
        .collect();
    for p in parts {
        c.absorb(p);
    }
}

fn deformation_x(max_rank: usize) -> Criterion {
    let start = Instant::now();
    let mut c = Criterion::new(1, "deformation tables X");
    per_type(&mut c, &types(max_rank), |rs, c| {
        let t = rs.cartan_type();
        match deformation_table_x(rs) {
            Ok(d) => {
                let want = expected::deform_x(t);
                c.check((d.h0, d.h1) == want && d.higher_vanish, || format!("{t}: got ({}, {}), expected {want:?}", d.h0, d.h1));
            }
            Err(e) => c.fail(format!("{t}: {e}")),
        }
    });
    c.timed(start, Duration::from_secs(30))
}

fn deformation_y(max_rank: usize) -> Criterion {
    let start = Instant::now();
    let mut c = Criterion::new(2, "deformation tables Y");
    let systems: Vec<RootSystem> = types(max_rank).into_iter().filter(|rs| rs.rank() >= 2).collect();
    per_type(&mut c, &systems, |rs, c| {
        let t = rs.cartan_type();
        let want = expected::deform_y(t).expect("rank at least 2");
        match deformation_table_y(rs) {
            Ok(d) => c.check((d.h0, d.h1) == want && d.higher_vanish, || format!("{t}: got ({}, {}), expected {want:?}", d.h0, d.h1)),
            Err(e) => c.fail(format!("{t}: {e}")),
        }
    });
    c.notes.push("rank one has no partial flag variety of this kind and is not in range".into());
    c.timed(start, Duration::from_secs(30))
}

fn vanishing(max_rank: usize) -> Criterion {
    let mut c = Criterion::new(3, "vanishing theorems");
    per_type(&mut c, &types(max_rank), |rs, c| {
        let t = rs.cartan_type();
        let mut cases = vec![(Case::Borel, Some(expected::vanishing_borel(t)))];
        if rs.rank() >= 2 {
            cases.push((Case::Parabolic, expected::vanishing_parabolic(t)));
        }
        for (case, want) in cases {
            let got = build_twisted_pair(rs, case).and_then(|p| resolve_cohomology(rs, &p));
            match got {
                Ok(p) => {
                    let dims: std::collections::BTreeMap<usize, i64> = p.dims.iter().map(|(&i, d)| (i, i64::try_from(d).unwrap_or(i64::MAX))).collect();
                    c.check(p.is_exact(), || format!("{t} {case:?}: bounds only"));
                    c.check(want.as_ref() == Some(&dims), || format!("{t} {case:?}: got {dims:?}, expected {want:?}"));
                }
                Err(e) => c.fail(format!("{t} {case:?}: {e}")),
            }
        }
    });
    c
}

fn regular_tables(max_rank: usize) -> Criterion {
    let mut c = Criterion::new(4, "regular-weight tables");
    per_type(&mut c, &types(max_rank), |rs, c| {
        let t = rs.cartan_type();
        let (reg, shift) = match (enumerate_regular(rs), enumerate_regular_shift(rs)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return c.fail(format!("{t}: {e}")),
        };
        let got: BTreeSet<RootVector> = reg.rows.iter().map(|r| r.alpha.clone()).collect();
        let want = expected::regular_roots(rs);
        c.check(got == want, || format!("{t}: regular set differs from the listed one"));
        c.check(verify_regular_table(rs, &reg, false), || format!("{t}: regular table fails self-verification"));
        c.check(verify_regular_table(rs, &shift, true), || format!("{t}: shifted table fails self-verification"));
        if let Some(cmp) = expected::compare_shifted(t, rs, &shift) {
            c.check(cmp.matches, || {
                let miss: Vec<String> = cmp.missing.iter().map(|r| r.alpha.pretty()).collect();
                let extra: Vec<String> = cmp.unexpected.iter().map(|r| r.alpha.pretty()).collect();
                format!("{t}: shifted table missing [{}], unexpected [{}]", miss.join(", "), extra.join(", "))
            });
            if expected::case2_report_only(t) {
                c.notes.extend(cmp.reports.iter().map(|r| format!("{t}: {r}")));
            }
        }
    });
    c
}

fn characterization() -> Criterion {
    let start = Instant::now();
    let mut c = Criterion::new(5, "line-bundle characterization");
    for n in [4usize, 5] {
        match characterize_search(n, 3, 10) {
            Ok(hits) => {
                let labels: Vec<Option<String>> = hits.iter().map(|h| h.label.clone()).collect();
                let want = vec![Some("e1".to_string()), Some(format!("-e{n}"))];
                c.check(labels == want, || format!("n={n}: found {labels:?}"));
            }
            Err(e) => c.fail(format!("n={n}: {e}")),
        }
    }
    c.timed(start, Duration::from_secs(60))
}

/// Semistandard tableaux of shape `lambda` with entries at most `n`.
fn ssyt_count(lambda: &[usize], n: usize) -> u64 {
    fn fill(cell: usize, cells: &[(usize, usize)], grid: &mut [Vec<usize>], n: usize) -> u64 {
        let Some(&(r, col)) = cells.get(cell) else { return 1 };
        let left = if col > 0 { grid[r][col - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][col] + 1 } else { 1 };
        (left.max(above)..=n)
            .map(|v| {
                grid[r][col] = v;
                fill(cell + 1, cells, grid, n)
            })
            .sum()
    }
    let cells: Vec<(usize, usize)> = lambda.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |col| (r, col))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    fill(0, &cells, &mut grid, n)
}

fn partitions(size: usize, largest: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    (1..=size.min(largest))
        .rev()
        .flat_map(|first| {
            partitions(size - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn bwb_suite(seed: u64) -> Criterion {
    let mut c = Criterion::new(6, "BWB property suite");
    let systems = types(4);
    per_type(&mut c, &systems, |rs, c| {
        let t = rs.cartan_type();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (rs.rank() as u64) << 8 ^ t.family() as u64);
        let np = rs.num_positive();
        let two_rho = rs.rho().scale(2);
        for _ in 0..1000 {
            let lambda = WeightVector((0..rs.rank()).map(|_| rng.gen_range(-8..=8)).collect());
            let dual = &(-&lambda) - &two_rho;
            let (a, b) = (bott_line(rs, &lambda), bott_line(rs, &dual));
            let paired = match (&a, &b) {
                (BottResult::Singular, BottResult::Singular) => true,
                (BottResult::Concentrated { degree: d1, dimension: n1, .. }, BottResult::Concentrated { degree: d2, dimension: n2, .. }) => {
                    d1 + d2 == np && n1 == n2
                }
                _ => false,
            };
            c.check(paired, || format!("{t} {lambda}: Serre duality fails"));
            if let Some(d) = a.degree() {
                let count = negative_pairing_count(rs, &(&lambda + &rs.rho()));
                c.check(d == count, || format!("{t} {lambda}: degree {d}, negative pairings {count}"));
            }
        }
    });
    for n in 2..=5usize {
        let rs = RootSystem::new(CartanType::new(Family::A, n - 1).expect("rank at least 1"));
        for size in 0..=6 {
            for p in partitions(size, size).into_iter().filter(|p| p.len() <= n) {
                let mut e: Vec<i64> = p.iter().map(|&x| x as i64).collect();
                e.resize(n, 0);
                let want = BigInt::from(ssyt_count(&p, n));
                match weyl_dim(&rs, &type_a_weight(&e)) {
                    Ok(d) => c.check(d == want, || format!("A{} {p:?}: dimension {d}, tableaux {want}", n - 1)),
                    Err(e) => c.fail(format!("A{} {p:?}: {e}", n - 1)),
                }
            }
        }
    }
    c
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &s) in p.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

/// 500 finite configurations with `4 <= n <= 8`. Some are affine or Möbius
/// images of earlier ones so that both equivalence tests see positive pairs.
fn stabilizer_corpus(rng: &mut ChaCha8Rng) -> Vec<EigenConfig> {
    let mut corpus: Vec<EigenConfig> = Vec::with_capacity(500);
    while corpus.len() < 500 {
        let roll = rng.gen_range(0..6);
        if corpus.is_empty() || roll >= 3 {
            let n = rng.gen_range(4..=8);
            corpus.push(random_affine_config(rng, n));
            continue;
        }
        let base = corpus[rng.gen_range(0..corpus.len())].clone();
        let sigma = random_permutation(rng, base.len());
        let image = if roll == 0 {
            let m = random_mobius_map(rng);
            Some(base.map_mobius(&m)).filter(EigenConfig::is_affine)
        } else {
            base.map_affine(&random_affine_map(rng)).ok()
        };
        if let Some(img) = image {
            corpus.push(img.reorder(&sigma));
        }
    }
    corpus
}

fn stabilizers(seed: u64) -> Criterion {
    let mut c = Criterion::new(7, "stabilizer suite");
    match EigenConfig::from_ints(&[1, 2, 3, 4]).and_then(|cfg| stab_affine(&cfg)) {
        Ok(h) => c.check(h.classification() == Some(GroupClass::Cyclic(2)), || format!("stab_affine(1,2,3,4) is {:?}", h.classification())),
        Err(e) => c.fail(format!("stab_affine(1,2,3,4): {e}")),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus = stabilizer_corpus(&mut rng);
    // one seed per config so the parallel pass is reproducible
    let seeds: Vec<u64> = corpus.iter().map(|_| rng.gen()).collect();
    let parts: Vec<Criterion> = corpus
        .par_iter()
        .zip(&seeds)
        .map(|(cfg, &s)| {
            let mut c = Criterion::new(7, "");
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let (h, k) = match (stab_affine(cfg), stab_mobius(cfg)) {
                (Ok(h), Ok(k)) => (h, k),
                (Err(e), _) | (_, Err(e)) => {
                    c.fail(format!("{cfg}: {e}"));
                    return c;
                }
            };
            let hc = h.classification();
            let kc = k.classification();
            c.check(matches!(hc, Some(GroupClass::Trivial | GroupClass::Cyclic(_))), || format!("{cfg}: affine stabilizer {hc:?}"));
            c.check(kc.is_some(), || format!("{cfg}: Möbius stabilizer {} unclassified", k.order()));
            c.check(h.is_subgroup_of(&k), || format!("{cfg}: affine stabilizer not inside the Möbius one"));
            let sigma = random_permutation(&mut rng, cfg.len());
            match cfg.map_affine(&random_affine_map(&mut rng)).and_then(|m| stab_affine(&m.reorder(&sigma))) {
                Ok(h2) => {
                    c.check((h2.order(), h2.classification()) == (h.order(), hc), || format!("{cfg}: affine conjugate changes the stabilizer"));
                    c.check(h.conjugate(&inverse(&sigma)) == h2, || format!("{cfg}: relabelled stabilizer is not the conjugate"));
                }
                Err(e) => c.fail(format!("{cfg}: {e}")),
            }
            match stab_mobius(&cfg.map_mobius(&random_mobius_map(&mut rng)).reorder(&sigma)) {
                Ok(k2) => c.check((k2.order(), k2.classification()) == (k.order(), kc), || format!("{cfg}: Möbius conjugate changes the stabilizer")),
                Err(e) => c.fail(format!("{cfg}: {e}")),
            }
            c
        })
        .collect();
    for p in parts {
        c.absorb(p);
    }
    let canon: Vec<(EigenConfig, EigenConfig)> = corpus
        .par_iter()
        .map(|cfg| (canonical_point(cfg, Flavor::X).expect("finite config"), canonical_point(cfg, Flavor::Y).expect("config of size >= 3")))
        .collect();
    let parts: Vec<Criterion> = (0..corpus.len())
        .into_par_iter()
        .map(|i| {
            let mut c = Criterion::new(7, "");
            for j in i..corpus.len() {
                if corpus[i].len() != corpus[j].len() {
                    c.check(canon[i].0 != canon[j].0 && canon[i].1 != canon[j].1, || format!("pair {i},{j}: sizes differ but canonical points agree"));
                    continue;
                }
                let ax = affine_equivalent(&corpus[i], &corpus[j]).map(|w| w.is_some());
                let my = mobius_equivalent(&corpus[i], &corpus[j]).map(|w| w.is_some());
                match (ax, my) {
                    (Ok(ax), Ok(my)) => {
                        c.check((canon[i].0 == canon[j].0) == ax, || format!("pair {i},{j}: affine canonical points disagree with equivalence"));
                        c.check((canon[i].1 == canon[j].1) == my, || format!("pair {i},{j}: Möbius canonical points disagree with equivalence"));
                    }
                    (Err(e), _) | (_, Err(e)) => c.fail(format!("pair {i},{j}: {e}")),
                }
            }
            c
        })
        .collect();
    for p in parts {
        c.absorb(p);
    }
    c
}

fn rs_of(f: Family, r: usize) -> RootSystem {
    RootSystem::new(CartanType::new(f, r).expect("fixed admissible type"))
}

fn record(c: &mut Criterion, t: CartanType, rep: Result<ChiReport>) {
    match rep {
        Ok(r) => c.check(r.holds(), || format!("{t}: {} gives {} vs {}", r.claim, r.lhs_chi, r.rhs_chi)),
        Err(e) => c.fail(format!("{t}: {e}")),
    }
}

fn chi_identities(seed: u64, cap: u128) -> Criterion {
    let mut c = Criterion::new(8, "symmetric-power chi identities");
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::G, 2)] {
        let rs = rs_of(f, r);
        for beta in rs.positive_roots().iter().filter(|b| rs.is_short(b).unwrap_or(false)) {
            for n in 0..=4 {
                match check_short_all_alpha(&rs, beta, n, cap) {
                    Ok(reps) => reps.into_iter().for_each(|rep| record(&mut c, rs.cartan_type(), Ok(rep))),
                    Err(e) => c.fail(format!("{}: {e}", rs.cartan_type())),
                }
            }
        }
    }
    let mut skipped = 0;
    for (f, r) in [(Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::F, 4), (Family::G, 2)] {
        let rs = rs_of(f, r);
        let t = rs.cartan_type();
        let longs: Vec<RootVector> = rs.positive_roots().iter().filter(|b| !rs.is_short(b).unwrap_or(true)).cloned().collect();
        for n in 0..=4 {
            let reps: Vec<Result<ChiReport>> = longs.par_iter().map(|b| check_long(&rs, b, n, cap)).collect();
            for rep in reps {
                match rep {
                    Err(Error::Resource { .. }) if f == Family::F && n > 2 => skipped += 1,
                    other => record(&mut c, t, other),
                }
            }
        }
    }
    if skipped > 0 {
        c.notes.push(format!("F4 long-root checks above n = 2 skipped at the cap: {skipped}"));
    }
    for r in 2..=4 {
        let rs = rs_of(Family::A, r);
        for n in 0..=4 {
            record(&mut c, rs.cartan_type(), check_parabolic_a(&rs, n, cap));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::G, 2)] {
        let rs = rs_of(f, r);
        for rule in [DemazureRule::Vanish, DemazureRule::Shift, DemazureRule::Reflect] {
            match demazure_chi_rules(&rs, rule, 500, &mut rng, cap) {
                Ok(s) => {
                    c.checks += s.trials;
                    c.failures.extend(s.failures.iter().map(|r| format!("{} {rule:?}: {} gives {} vs {}", rs.cartan_type(), r.claim, r.lhs_chi, r.rhs_chi)));
                }
                Err(e) => c.fail(format!("{} {rule:?}: {e}", rs.cartan_type())),
            }
        }
    }
    for (f, r) in [(Family::G, 2), (Family::B, 3)] {
        let rs = rs_of(f, r);
        let t = rs.cartan_type();
        let shift = default_conjecture_shift(&rs);
        let mut statuses = Vec::new();
        for n in 0..=5 {
            match check_conjecture(&rs, n, shift, cap) {
                Ok(rep) => statuses.push(if rep.status == CheckStatus::ConjectureHolds { "holds" } else { "fails" }),
                Err(e) => c.fail(format!("{t} conjecture n={n}: {e}")),
            }
        }
        c.notes.push(format!("{t} conjecture, n = 0..5: {}", statuses.join(" ")));
    }
    c
}

fn consistency(seed: u64, cap: u128) -> Criterion {
    let mut c = Criterion::new(9, "cross-module consistency");
    per_type(&mut c, &types(4), |rs, c| {
        let t = rs.cartan_type();
        let theta = rs.to_weight(&rs.highest_root());
        let sym = chi_sym(rs, &NilradicalSpec::FullBorel, 1, &-theta, cap);
        let pair = build_twisted_pair(rs, Case::Borel);
        match (sym, pair) {
            (Ok(chi), Ok(p)) => {
                let want = euler_multiset(rs, &p.quotient_side);
                c.check(chi == want, || format!("{t}: symmetric power gives {chi}, filtration gives {want}"));
            }
            (Err(e), _) | (_, Err(e)) => c.fail(format!("{t}: {e}")),
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=6);
        let mut lam: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let k = rng.gen_range(1..=4);
        let Some(closed) = closed_form_chi(n, &lam, k) else { continue };
        match euler_hessenberg_linebundle(n, &lam, k) {
            Ok(chi) => c.check(chi == closed, || format!("n={n} {lam:?} k={k}: {chi} vs closed form {closed}")),
            Err(e) => c.fail(format!("n={n} {lam:?} k={k}: {e}")),
        }
        done += 1;
    }
    c
}
