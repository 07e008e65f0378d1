//! Euler characteristics of symmetric powers of nilradical duals.
//!
//! `S^n n_P^* ⊗ L(lambda)` is filtered by line bundles whose weights are
//! `lambda` plus sums of `n` weights of `n_P^*` (positive roots outside the
//! Levi), so its Euler characteristic is a sum of Bott contributions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::bwb::{euler_multiset, WeightMultiset};
use crate::error::{Error, Result};
use crate::filtered::theta_levi;
use crate::rootsys::{Family, RootSystem, RootVector, WeightVector};

/// Default bound on the number of monomials in one symmetric power.
pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilradicalSpec {
    FullBorel,
    SimpleParabolic(usize),
    /// Levi spanned by the simple roots orthogonal to `theta`.
    ThetaParabolic,
    /// Any parabolic, given by its Levi simple roots.
    Levi(Vec<usize>),
}

impl NilradicalSpec {
    /// Type-A parabolic whose Levi is every simple root except `alpha_2`.
    pub fn q_nilradical(rs: &RootSystem) -> NilradicalSpec {
        NilradicalSpec::Levi((0..rs.rank()).filter(|&i| i != 1).collect())
    }

    pub fn levi(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        match self {
            NilradicalSpec::FullBorel => Ok(Vec::new()),
            NilradicalSpec::SimpleParabolic(i) => {
                if *i >= rs.rank() {
                    return Err(Error::InvalidInput(format!("simple root index {} out of range", i + 1)));
                }
                Ok(vec![*i])
            }
            NilradicalSpec::ThetaParabolic => theta_levi(rs),
            NilradicalSpec::Levi(v) => {
                if v.iter().any(|&i| i >= rs.rank()) {
                    return Err(Error::InvalidInput("Levi index out of range".into()));
                }
                Ok(v.clone())
            }
        }
    }

    /// Positive roots not in the Levi span.
    pub fn weights(&self, rs: &RootSystem) -> Result<Vec<RootVector>> {
        let levi = self.levi(rs)?;
        Ok(rs.positive_roots().iter().filter(|a| (0..rs.rank()).any(|i| a[i] > 0 && !levi.contains(&i))).cloned().collect())
    }
}

impl fmt::Display for NilradicalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilradicalSpec::FullBorel => write!(f, "n"),
            NilradicalSpec::SimpleParabolic(i) => write!(f, "n_a{}", i + 1),
            NilradicalSpec::ThetaParabolic => write!(f, "n_P"),
            NilradicalSpec::Levi(v) => {
                let s: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "n_[{}]", s.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBundle {
    pub spec: NilradicalSpec,
    pub power: i64,
    pub twist: WeightVector,
}

/// `C(m+n-1, n)`, saturating.
pub fn monomial_count(m: usize, n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    let mut c: u128 = 1;
    for i in 1..=n as u128 {
        c = match c.checked_mul(m as u128 - 1 + i) {
            Some(x) => x / i,
            None => return u128::MAX,
        };
    }
    c
}

fn expand(rs: &RootSystem, weights: &[RootVector], n: usize, twist: &WeightVector) -> WeightMultiset {
    // layer[j]: weight sums of j-element multisets drawn from the generators seen so far
    let mut layers: Vec<HashMap<WeightVector, u64>> = vec![HashMap::new(); n + 1];
    layers[0].insert(twist.clone(), 1);
    for beta in weights {
        let bw = rs.to_weight(beta);
        for j in 1..=n {
            let prev: Vec<(WeightVector, u64)> = layers[j - 1].iter().map(|(w, &c)| (w + &bw, c)).collect();
            for (w, c) in prev {
                *layers[j].entry(w).or_insert(0) += c;
            }
        }
    }
    let mut out = WeightMultiset::new();
    for (w, c) in layers.swap_remove(n) {
        out.insert(w, c);
    }
    out
}

pub fn sym_weight_multiset(rs: &RootSystem, b: &SymBundle, cap: u128) -> Result<WeightMultiset> {
    if b.twist.len() != rs.rank() {
        return Err(Error::InvalidInput(format!("twist {} has wrong length", b.twist)));
    }
    if b.power < 0 {
        return Ok(WeightMultiset::new());
    }
    let weights = b.spec.weights(rs)?;
    let n = b.power as usize;
    let estimate = monomial_count(weights.len(), n);
    if estimate > cap {
        return Err(Error::Resource { estimate, cap });
    }
    Ok(expand(rs, &weights, n, &b.twist))
}

/// `chi(S^n n_P^* ⊗ L(twist))`; zero for negative `n`.
pub fn chi_sym(rs: &RootSystem, spec: &NilradicalSpec, n: i64, twist: &WeightVector, cap: u128) -> Result<BigInt> {
    let m = sym_weight_multiset(rs, &SymBundle { spec: spec.clone(), power: n, twist: twist.clone() }, cap)?;
    Ok(euler_multiset(rs, &m))
}

/// `h^0(S^n n_P^*)`, computed as the Euler characteristic; higher cohomology vanishes.
pub fn h0_sym(rs: &RootSystem, spec: &NilradicalSpec, n: i64, cap: u128) -> Result<BigInt> {
    chi_sym(rs, spec, n, &WeightVector::zero(rs.rank()), cap)
}

/// The doubly-laced pair: `(alpha, delta, q, varpi)` with `alpha` short, `delta`
/// long, adjacent, and `varpi = (q-1) alpha + delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarpiData {
    pub alpha: usize,
    pub delta: usize,
    pub q: i64,
    pub varpi: RootVector,
}

pub fn varpi_data(rs: &RootSystem) -> Result<VarpiData> {
    if rs.is_simply_laced() {
        return Err(Error::InvalidInput(format!("{} has a single root length", rs.cartan_type())));
    }
    let c = rs.cartan_matrix();
    let d = rs.symmetrizer();
    let r = rs.rank();
    for i in 0..r {
        for j in 0..r {
            if c[i][j] * c[j][i] >= 2 && d[i] < d[j] {
                let q = -c[i][j];
                let mut v = RootVector::zero(r);
                v.0[i] = q - 1;
                v.0[j] = 1;
                return Ok(VarpiData { alpha: i, delta: j, q, varpi: v });
            }
        }
    }
    unreachable!("two-length type without a multiple bond")
}

/// `h^0(S^n n_alpha^* ⊗ L(varpi))`, computed as the Euler characteristic.
pub fn h0_sym_twisted_varpi(rs: &RootSystem, alpha: usize, n: i64, cap: u128) -> Result<BigInt> {
    let v = varpi_data(rs)?;
    if alpha != v.alpha {
        return Err(Error::InvalidInput(format!("simple root {} is not the short root of the multiple bond (expected {})", alpha + 1, v.alpha + 1)));
    }
    chi_sym(rs, &NilradicalSpec::SimpleParabolic(alpha), n, &rs.to_weight(&v.varpi), cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Violated,
    /// Conjecture checkers only report.
    ConjectureHolds,
    ConjectureFails,
}

impl CheckStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Violated => "violated",
            CheckStatus::ConjectureHolds => "conjecture-holds",
            CheckStatus::ConjectureFails => "conjecture-fails",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub claim: String,
    pub lhs_chi: BigInt,
    pub rhs_chi: BigInt,
    pub status: CheckStatus,
}

impl ChiReport {
    fn theorem(claim: String, lhs: BigInt, rhs: BigInt) -> ChiReport {
        let status = if lhs == rhs { CheckStatus::Holds } else { CheckStatus::Violated };
        ChiReport { claim, lhs_chi: lhs, rhs_chi: rhs, status }
    }

    pub fn holds(&self) -> bool {
        self.status == CheckStatus::Holds
    }
}

fn require_positive_root(rs: &RootSystem, beta: &RootVector) -> Result<()> {
    if !rs.is_positive_root(beta) {
        return Err(Error::InvalidInput(format!("{} is not a positive root of {}", beta.pretty(), rs.cartan_type())));
    }
    Ok(())
}

/// Short simple roots, all simple roots in simply-laced types.
pub fn short_simple_roots(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank()).filter(|&i| rs.is_short(&rs.simple_root(i)).unwrap()).collect()
}

/// `chi(S^n n^* ⊗ -beta) = h0(S^{n-ht b} n^*) - h0(S^{n-ht b+1} n_alpha^*)` for short `beta`.
pub fn check_short(rs: &RootSystem, beta: &RootVector, alpha: usize, n: i64, cap: u128) -> Result<ChiReport> {
    require_positive_root(rs, beta)?;
    if !rs.is_short(beta)? {
        return Err(Error::InvalidInput(format!("{} is not short", beta.pretty())));
    }
    if alpha >= rs.rank() || !rs.is_short(&rs.simple_root(alpha))? {
        return Err(Error::InvalidInput(format!("simple root {} is not short", alpha + 1)));
    }
    let ht = beta.height();
    let lhs = chi_sym(rs, &NilradicalSpec::FullBorel, n, &-rs.to_weight(beta), cap)?;
    let rhs = h0_sym(rs, &NilradicalSpec::FullBorel, n - ht, cap)? - h0_sym(rs, &NilradicalSpec::SimpleParabolic(alpha), n - ht + 1, cap)?;
    Ok(ChiReport::theorem(format!("{} short {} alpha=a{} n={n}", rs.cartan_type(), beta.pretty(), alpha + 1), lhs, rhs))
}

/// [`check_short`] for every short simple root; the right side must not depend on the choice.
pub fn check_short_all_alpha(rs: &RootSystem, beta: &RootVector, n: i64, cap: u128) -> Result<Vec<ChiReport>> {
    short_simple_roots(rs).into_iter().map(|a| check_short(rs, beta, a, n, cap)).collect()
}

/// `chi(S^n n^* ⊗ -beta) = h0(S^{n-ht b} n^*) - h0(S^{n-ht b+1} n_alpha^*) - h0(S^{n-ht b^vee} n_alpha^* ⊗ varpi)` for long `beta`.
pub fn check_long(rs: &RootSystem, beta: &RootVector, n: i64, cap: u128) -> Result<ChiReport> {
    let v = varpi_data(rs)?;
    require_positive_root(rs, beta)?;
    if !rs.is_long(beta)? {
        return Err(Error::InvalidInput(format!("{} is not long", beta.pretty())));
    }
    let ht = beta.height();
    let htv = rs.coroot_height(beta)?;
    let lhs = chi_sym(rs, &NilradicalSpec::FullBorel, n, &-rs.to_weight(beta), cap)?;
    let rhs = h0_sym(rs, &NilradicalSpec::FullBorel, n - ht, cap)?
        - h0_sym(rs, &NilradicalSpec::SimpleParabolic(v.alpha), n - ht + 1, cap)?
        - h0_sym_twisted_varpi(rs, v.alpha, n - htv, cap)?;
    Ok(ChiReport::theorem(format!("{} long {} n={n}", rs.cartan_type(), beta.pretty()), lhs, rhs))
}

/// `h0(S^n n_delta^*) = h0(S^n n_alpha^*) + h0(S^{n-1} n_alpha^* ⊗ varpi)`.
pub fn check_subregular(rs: &RootSystem, n: i64, cap: u128) -> Result<ChiReport> {
    let v = varpi_data(rs)?;
    let lhs = h0_sym(rs, &NilradicalSpec::SimpleParabolic(v.delta), n, cap)?;
    let rhs = h0_sym(rs, &NilradicalSpec::SimpleParabolic(v.alpha), n, cap)? + h0_sym_twisted_varpi(rs, v.alpha, n - 1, cap)?;
    Ok(ChiReport::theorem(format!("{} subregular n={n}", rs.cartan_type()), lhs, rhs))
}

/// Type `A_r`: `chi(S^n n_P^* ⊗ -theta) = h0(S^{n-2} n_P^*) - h0(S^{n-1} n_Q^*)`.
pub fn check_parabolic_a(rs: &RootSystem, n: i64, cap: u128) -> Result<ChiReport> {
    let t = rs.cartan_type();
    if t.family() != Family::A || t.rank() < 2 {
        return Err(Error::InvalidInput(format!("{t} is not of type A_r with r >= 2")));
    }
    let theta = rs.to_weight(&rs.highest_root());
    let lhs = chi_sym(rs, &NilradicalSpec::ThetaParabolic, n, &-&theta, cap)?;
    let rhs = h0_sym(rs, &NilradicalSpec::ThetaParabolic, n - 2, cap)? - h0_sym(rs, &NilradicalSpec::q_nilradical(rs), n - 1, cap)?;
    Ok(ChiReport::theorem(format!("{t} parabolic n={n}"), lhs, rhs))
}

/// Compares `chi(S^n n_P^* ⊗ -theta)` with `chi(S^{n-shift} n_P^* ⊗ theta)`; reports only.
pub fn check_conjecture(rs: &RootSystem, n: i64, shift: i64, cap: u128) -> Result<ChiReport> {
    let theta = rs.to_weight(&rs.highest_root());
    let lhs = chi_sym(rs, &NilradicalSpec::ThetaParabolic, n, &-&theta, cap)?;
    let rhs = chi_sym(rs, &NilradicalSpec::ThetaParabolic, n - shift, &theta, cap)?;
    let status = if lhs == rhs { CheckStatus::ConjectureHolds } else { CheckStatus::ConjectureFails };
    Ok(ChiReport { claim: format!("{} conjecture n={n} shift={shift}", rs.cartan_type()), lhs_chi: lhs, rhs_chi: rhs, status })
}

/// Shift 2 in type C, 4 elsewhere.
pub fn default_conjecture_shift(rs: &RootSystem) -> i64 {
    if crate::filtered::is_type_c(rs) {
        2
    } else {
        4
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemazureRule {
    /// `<lambda, alpha^vee> = -1` kills `S^n n_alpha^* ⊗ lambda`.
    Vanish,
    /// `<lambda, alpha^vee> = -1`: `S^n n^* ⊗ lambda ~ S^{n-1} n^* ⊗ (lambda + alpha)`.
    Shift,
    /// `k = <lambda, alpha^vee> <= -2`: `S^n n_alpha^* ⊗ lambda ~ -(S^n n_alpha^* ⊗ (lambda + (-k-1) alpha))`.
    Reflect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureInstance {
    pub rule: DemazureRule,
    pub lambda: WeightVector,
    pub alpha: usize,
    pub n: i64,
}

/// Both sides of one Demazure rule instance.
pub fn demazure_check(rs: &RootSystem, inst: &DemazureInstance, cap: u128) -> Result<ChiReport> {
    let k = inst.lambda[inst.alpha];
    let a = rs.to_weight(&rs.simple_root(inst.alpha));
    let na = NilradicalSpec::SimpleParabolic(inst.alpha);
    let (lhs, rhs) = match inst.rule {
        DemazureRule::Vanish => {
            if k != -1 {
                return Err(Error::InvalidInput("vanish rule needs pairing -1".into()));
            }
            (chi_sym(rs, &na, inst.n, &inst.lambda, cap)?, BigInt::zero())
        }
        DemazureRule::Shift => {
            if k != -1 {
                return Err(Error::InvalidInput("shift rule needs pairing -1".into()));
            }
            let lhs = chi_sym(rs, &NilradicalSpec::FullBorel, inst.n, &inst.lambda, cap)?;
            (lhs, chi_sym(rs, &NilradicalSpec::FullBorel, inst.n - 1, &(&inst.lambda + &a), cap)?)
        }
        DemazureRule::Reflect => {
            if k > -2 {
                return Err(Error::InvalidInput("reflect rule needs pairing at most -2".into()));
            }
            let lhs = chi_sym(rs, &na, inst.n, &inst.lambda, cap)?;
            (lhs, -chi_sym(rs, &na, inst.n, &(&inst.lambda + &a.scale(-k - 1)), cap)?)
        }
    };
    Ok(ChiReport::theorem(format!("{} {:?} lambda={} a{} n={}", rs.cartan_type(), inst.rule, inst.lambda, inst.alpha + 1, inst.n), lhs, rhs))
}

/// A random valid instance: `lambda` uniform in `[-3, 3]^r` with the `alpha` coordinate forced.
pub fn random_demazure_instance<R: Rng>(rs: &RootSystem, rule: DemazureRule, rng: &mut R) -> DemazureInstance {
    let alpha = rng.gen_range(0..rs.rank());
    let mut lambda = WeightVector((0..rs.rank()).map(|_| rng.gen_range(-3..=3)).collect());
    lambda.0[alpha] = match rule {
        DemazureRule::Vanish | DemazureRule::Shift => -1,
        DemazureRule::Reflect => rng.gen_range(-5..=-2),
    };
    let n = match rule {
        DemazureRule::Shift => rng.gen_range(1..=3),
        _ => rng.gen_range(0..=3),
    };
    DemazureInstance { rule, lambda, alpha, n }
}

/// Summary of random Demazure-rule trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureSummary {
    pub rule: DemazureRule,
    pub trials: usize,
    pub failures: Vec<ChiReport>,
}

pub fn demazure_chi_rules<R: Rng>(rs: &RootSystem, rule: DemazureRule, trials: usize, rng: &mut R, cap: u128) -> Result<DemazureSummary> {
    let mut failures = Vec::new();
    for _ in 0..trials {
        let inst = random_demazure_instance(rs, rule, rng);
        let rep = demazure_check(rs, &inst, cap)?;
        if !rep.holds() {
            failures.push(rep);
        }
    }
    Ok(DemazureSummary { rule, trials, failures })
}
