//! Cohomology of the twisted tangent bundles of the flag variety `B = G/B` and
//! of `P = G/P` along a codimension-one regular semisimple Hessenberg variety.
//!
//! The tangent bundle `T = (g/b)` twisted by the ideal sheaf `I_X = L(-theta)`
//! is filtered by line bundles `L(alpha - theta)`, `alpha` in `Phi+`; the
//! subbundle `b ⊗ L(-theta)` contributes the remaining roots and `rank` copies
//! of `L(-theta)`. Every computation is on `B`, including the parabolic one.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bwb::{bott_line, dominantize, euler_multiset, is_regular_by_pairing, negative_pairing_count, BottResult, Dominantized, WeightMultiset};
use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem, RootVector, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    Borel,
    Parabolic,
}

#[derive(Clone, Debug)]
pub struct TwistedPair {
    /// Weights of `(g/h) ⊗ L(-theta)`.
    pub quotient_side: WeightMultiset,
    /// Weights of `h ⊗ L(-theta)`, torus part included.
    pub sub_side: WeightMultiset,
    pub case: Case,
}

/// The parabolic's Levi simple roots: those orthogonal to `theta`.
pub fn theta_levi(rs: &RootSystem) -> Result<Vec<usize>> {
    rs.distinguished_roots()
        .delta0
        .ok_or_else(|| Error::InvalidInput("the parabolic case needs rank at least 2".into()))
}

pub fn build_twisted_pair(rs: &RootSystem, case: Case) -> Result<TwistedPair> {
    let theta = rs.highest_root();
    let delta0 = match case {
        Case::Borel => Vec::new(),
        Case::Parabolic => theta_levi(rs)?,
    };
    let in_quotient = |a: &RootVector| match case {
        Case::Borel => rs.is_positive_root(a),
        Case::Parabolic => rs.height_p(&delta0, a) >= 1,
    };
    let mut quotient_side = WeightMultiset::new();
    let mut sub_side = WeightMultiset::new();
    for a in rs.all_roots() {
        let w = rs.to_weight(&(&a - &theta));
        if in_quotient(&a) {
            quotient_side.insert(w, 1);
        } else {
            sub_side.insert(w, 1);
        }
    }
    sub_side.insert(-rs.to_weight(&theta), rs.rank() as u64);
    Ok(TwistedPair { quotient_side, sub_side, case })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    /// Per-degree upper bounds when no rule forces the answer.
    BoundsOnly(BTreeMap<usize, BigInt>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    UniformDegree,
    EulerForcing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    /// Nonzero dimensions only.
    pub dims: BTreeMap<usize, BigInt>,
    pub exactness: Exactness,
    pub rule: Rule,
    pub euler: BigInt,
}

impl CohomologyProfile {
    pub fn h(&self, i: usize) -> BigInt {
        self.dims.get(&i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

/// Per-degree sums of Bott dimensions.
pub fn degree_sums(rs: &RootSystem, m: &WeightMultiset) -> BTreeMap<usize, BigInt> {
    let mut u: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (w, k) in m.iter() {
        if let BottResult::Concentrated { degree, dimension, .. } = bott_line(rs, w) {
            *u.entry(degree).or_insert_with(BigInt::zero) += dimension * BigInt::from(k);
        }
    }
    u
}

/// R1: a filtration whose nonsingular pieces all live in one degree.
pub fn rule_uniform_degree(rs: &RootSystem, m: &WeightMultiset) -> Option<CohomologyProfile> {
    let u = degree_sums(rs, m);
    if u.len() > 1 {
        return None;
    }
    let euler = euler_multiset(rs, m);
    Some(CohomologyProfile { dims: u.into_iter().filter(|(_, d)| !d.is_zero()).collect(), exactness: Exactness::Exact, rule: Rule::UniformDegree, euler })
}

/// R2: `g ⊗ L(-theta)` is a trivial bundle tensored with `L(-theta)`, acyclic iff `-theta+rho` is singular.
///
/// Only then is `H^i(quotient) = H^{i+1}(sub)` available.
pub fn middle_is_acyclic(rs: &RootSystem) -> bool {
    bott_line(rs, &-rs.to_weight(&rs.highest_root())).is_singular()
}

/// R3: bounds `b_i = min(u_i(E), u_{i+1}(F))` and Euler forcing.
pub fn rule_euler_forcing(rs: &RootSystem, pair: &TwistedPair) -> Result<CohomologyProfile> {
    let ue = degree_sums(rs, &pair.quotient_side);
    let uf = degree_sums(rs, &pair.sub_side);
    let euler = euler_multiset(rs, &pair.quotient_side);
    let bounds: BTreeMap<usize, BigInt> = ue
        .iter()
        .map(|(&i, e)| (i, e.clone().min(uf.get(&(i + 1)).cloned().unwrap_or_else(BigInt::zero))))
        .filter(|(_, b)| b.is_positive())
        .collect();
    match bounds.len() {
        0 => {
            if !euler.is_zero() {
                return Err(Error::Contradiction(format!("all bounds vanish but chi = {euler} in {}", rs.cartan_type())));
            }
            Ok(CohomologyProfile { dims: BTreeMap::new(), exactness: Exactness::Exact, rule: Rule::EulerForcing, euler })
        }
        1 => {
            let (&i0, b) = bounds.iter().next().unwrap();
            let d = if i0 % 2 == 0 { euler.clone() } else { -euler.clone() };
            if d.is_negative() || &d > b {
                return Err(Error::Contradiction(format!("forced h^{i0} = {d} outside [0, {b}] in {}", rs.cartan_type())));
            }
            let mut dims = BTreeMap::new();
            if !d.is_zero() {
                dims.insert(i0, d);
            }
            Ok(CohomologyProfile { dims, exactness: Exactness::Exact, rule: Rule::EulerForcing, euler })
        }
        _ => Ok(CohomologyProfile { dims: BTreeMap::new(), exactness: Exactness::BoundsOnly(bounds), rule: Rule::EulerForcing, euler }),
    }
}

/// Exact cohomology of the quotient side, or bounds when no rule forces it.
pub fn resolve_cohomology(rs: &RootSystem, pair: &TwistedPair) -> Result<CohomologyProfile> {
    if let Some(p) = rule_uniform_degree(rs, &pair.quotient_side) {
        return Ok(p);
    }
    if !middle_is_acyclic(rs) {
        return Err(Error::Unresolved(format!("g ⊗ L(-theta) is not acyclic in {}", rs.cartan_type())));
    }
    rule_euler_forcing(rs, pair)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationTable {
    pub h0: i64,
    pub h1: i64,
    pub higher_vanish: bool,
    pub normal_h0: i64,
    /// Cohomology of the twisted ambient tangent bundle that fed `h1`.
    pub twisted: CohomologyProfile,
}

fn exact_small(p: &CohomologyProfile, i: usize) -> Result<i64> {
    if !p.is_exact() {
        return Err(Error::Unresolved("resolver returned bounds only".into()));
    }
    i64::try_from(p.h(i)).map_err(|_| Error::Contradiction("cohomology dimension out of range".into()))
}

/// `h^i(X, TX)` for the Hessenberg divisor `X` in `G/B`.
///
/// `h0` is the rank except in `A1`, where `X` is two reduced points and `TX = 0`.
/// `h1 = h0 + h^0(T⊗I) - h^1(T⊗I) - 1`.
pub fn deformation_table_x(rs: &RootSystem) -> Result<DeformationTable> {
    let pair = build_twisted_pair(rs, Case::Borel)?;
    let twisted = resolve_cohomology(rs, &pair)?;
    let h0 = if rs.rank() == 1 { 0 } else { rs.rank() as i64 };
    let h1 = h0 + exact_small(&twisted, 0)? - exact_small(&twisted, 1)? - 1;
    Ok(DeformationTable { h0, h1, higher_vanish: true, normal_h0: rs.dim_group() as i64 - 1, twisted })
}

/// Root system of type `C_r`, counting `B2 = C2`.
pub fn is_type_c(rs: &RootSystem) -> bool {
    let t = rs.cartan_type();
    t.family() == Family::C || (t.family() == Family::B && t.rank() == 2)
}

/// `h^i(Y, TY)` for the Hessenberg divisor `Y` in `G/P`.
///
/// `h0` is the rank, except `r(2r-1)` in type `C_r` where `Y` is a smooth quadric
/// in `P^{2r-1}`. `h0 - h1 = dim G' - dim G + h^1(T⊗I) + 1` with `G' = SL_{2r}`
/// in type `C_r` and `G' = G` otherwise.
pub fn deformation_table_y(rs: &RootSystem) -> Result<DeformationTable> {
    let pair = build_twisted_pair(rs, Case::Parabolic)?;
    let twisted = resolve_cohomology(rs, &pair)?;
    let r = rs.rank() as i64;
    let dim_g = rs.dim_group() as i64;
    let (h0, dim_g_prime) = if is_type_c(rs) { (r * (2 * r - 1), 4 * r * r - 1) } else { (r, dim_g) };
    if exact_small(&twisted, 0)? != 0 {
        return Err(Error::Contradiction(format!("h^0(T⊗I_Y) nonzero in {}", rs.cartan_type())));
    }
    let h1 = h0 - (dim_g_prime - dim_g + exact_small(&twisted, 1)? + 1);
    Ok(DeformationTable { h0, h1, higher_vanish: true, normal_h0: dim_g - 1, twisted })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// `alpha > 0` and `<theta, alpha^vee> > 0`.
    Case1,
    /// `alpha > 0` and `<theta, alpha^vee> = 0`.
    Case2,
    /// `alpha < 0`.
    Case3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularRow {
    pub alpha: RootVector,
    pub degree: usize,
    pub dominant_weight: WeightVector,
    pub case_tag: CaseTag,
    pub ht_p: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularShiftTable {
    pub rows: Vec<RegularRow>,
}

impl RegularShiftTable {
    pub fn find(&self, alpha: &RootVector) -> Option<&RegularRow> {
        self.rows.iter().find(|r| &r.alpha == alpha)
    }
}

fn regular_scan(rs: &RootSystem, shift: bool) -> Result<Vec<RegularRow>> {
    // rank one has no parabolic; ht_P falls back to the height
    let delta0 = rs.distinguished_roots().delta0.unwrap_or_default();
    let theta = rs.highest_root();
    let theta_w = rs.to_weight(&theta);
    let rho = rs.rho();
    let mut rows = Vec::new();
    for a in rs.all_roots() {
        let aw = rs.to_weight(&a);
        let mu = if shift { &(&aw - &theta_w) + &rho } else { &aw + &rho };
        if let Dominantized::Regular { length, dominant } = dominantize(rs, &mu) {
            let case_tag = if !rs.is_positive_root(&a) {
                CaseTag::Case3
            } else if rs.pairing(&theta_w, &a)? > 0 {
                CaseTag::Case1
            } else {
                CaseTag::Case2
            };
            rows.push(RegularRow { ht_p: rs.height_p(&delta0, &a), alpha: a, degree: length, dominant_weight: &dominant - &rho, case_tag });
        }
    }
    rows.sort_by(|x, y| x.case_tag.cmp(&y.case_tag).then(x.degree.cmp(&y.degree)).then(y.alpha.height().cmp(&x.alpha.height())).then(y.alpha.cmp(&x.alpha)));
    Ok(rows)
}

/// Roots `alpha` with `alpha + rho` regular.
pub fn enumerate_regular(rs: &RootSystem) -> Result<RegularShiftTable> {
    Ok(RegularShiftTable { rows: regular_scan(rs, false)? })
}

/// Roots `alpha` with `alpha - theta + rho` regular.
pub fn enumerate_regular_shift(rs: &RootSystem) -> Result<RegularShiftTable> {
    Ok(RegularShiftTable { rows: regular_scan(rs, true)? })
}

/// Checks a table against full pairing scans: listed roots regular with the
/// right degree, unlisted roots singular.
pub fn verify_regular_table(rs: &RootSystem, table: &RegularShiftTable, shift: bool) -> bool {
    let theta_w = rs.to_weight(&rs.highest_root());
    let rho = rs.rho();
    rs.all_roots().into_iter().all(|a| {
        let aw = rs.to_weight(&a);
        let mu = if shift { &(&aw - &theta_w) + &rho } else { &aw + &rho };
        match table.find(&a) {
            Some(row) => is_regular_by_pairing(rs, &mu) && negative_pairing_count(rs, &mu) == row.degree,
            None => !is_regular_by_pairing(rs, &mu),
        }
    })
}
