//! Eigenvalue configurations up to affine and Möbius transformations.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{fmt_rational, ProjPoint, Q};
use crate::error::{Error, Result};

/// `perm[i] = j`: point `i` of the source goes to point `j` of the target.
pub type Permutation = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Configurations modulo affine maps, the full flag divisor.
    X,
    /// Configurations modulo Möbius maps, the partial flag divisor.
    Y,
}

/// Pairwise distinct points; `Infinity` allowed only in the projective flavor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigenConfig {
    points: Vec<ProjPoint>,
}

impl EigenConfig {
    pub fn new(points: Vec<ProjPoint>) -> Result<EigenConfig> {
        let set: HashSet<&ProjPoint> = points.iter().collect();
        if set.len() != points.len() {
            return Err(Error::InvalidInput("configuration has repeated points".into()));
        }
        Ok(EigenConfig { points })
    }

    pub fn affine(points: Vec<Q>) -> Result<EigenConfig> {
        EigenConfig::new(points.into_iter().map(ProjPoint::Finite).collect())
    }

    pub fn from_ints(points: &[i64]) -> Result<EigenConfig> {
        EigenConfig::new(points.iter().map(|&x| ProjPoint::int(x)).collect())
    }

    pub fn parse(list: &str) -> Result<EigenConfig> {
        let pts: Result<Vec<ProjPoint>> = list.split(',').filter(|s| !s.trim().is_empty()).map(ProjPoint::parse).collect();
        EigenConfig::new(pts?)
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_affine(&self) -> bool {
        self.points.iter().all(|p| !p.is_infinite())
    }

    fn finite_points(&self) -> Result<Vec<Q>> {
        self.points
            .iter()
            .map(|p| p.finite().cloned().ok_or_else(|| Error::InvalidInput("affine configuration contains infinity".into())))
            .collect()
    }

    fn lookup(&self) -> HashMap<&ProjPoint, usize> {
        self.points.iter().enumerate().map(|(i, p)| (p, i)).collect()
    }

    pub fn map_affine(&self, m: &AffineMap) -> Result<EigenConfig> {
        Ok(EigenConfig { points: self.finite_points()?.iter().map(|x| ProjPoint::Finite(m.apply(x))).collect() })
    }

    pub fn map_mobius(&self, m: &MobiusMap) -> EigenConfig {
        EigenConfig { points: self.points.iter().map(|p| m.apply(p)).collect() }
    }

    /// Reorders points: new index `i` holds old point `order[i]`.
    pub fn reorder(&self, order: &[usize]) -> EigenConfig {
        EigenConfig { points: order.iter().map(|&i| self.points[i].clone()).collect() }
    }

    pub fn sorted(&self) -> Vec<ProjPoint> {
        let mut v = self.points.clone();
        v.sort();
        v
    }
}

impl fmt::Display for EigenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

/// `z -> a z + b`, `a != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub a: Q,
    pub b: Q,
}

impl AffineMap {
    pub fn new(a: Q, b: Q) -> Result<AffineMap> {
        if a.is_zero() {
            return Err(Error::InvalidInput("affine map needs a != 0".into()));
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity() -> AffineMap {
        AffineMap { a: Q::one(), b: Q::zero() }
    }

    pub fn apply(&self, x: &Q) -> Q {
        &self.a * x + &self.b
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap { a: &self.a * &other.a, b: &self.a * &other.b + &self.b }
    }

    pub fn inverse(&self) -> AffineMap {
        let ai = Q::one() / &self.a;
        AffineMap { b: -(&ai * &self.b), a: ai }
    }

    pub fn to_mobius(&self) -> MobiusMap {
        MobiusMap::new([[self.a.clone(), self.b.clone()], [Q::zero(), Q::one()]]).unwrap()
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z -> ({}) z + ({})", fmt_rational(&self.a), fmt_rational(&self.b))
    }
}

/// `z -> (a z + b) / (c z + d)`, stored up to scale with first nonzero entry 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    m: [[Q; 2]; 2],
}

impl MobiusMap {
    pub fn new(m: [[Q; 2]; 2]) -> Result<MobiusMap> {
        if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
            return Err(Error::InvalidInput("Möbius matrix is singular".into()));
        }
        let lead = [&m[0][0], &m[0][1], &m[1][0], &m[1][1]].into_iter().find(|x| !x.is_zero()).unwrap().clone();
        let m = [[&m[0][0] / &lead, &m[0][1] / &lead], [&m[1][0] / &lead, &m[1][1] / &lead]];
        Ok(MobiusMap { m })
    }

    pub fn identity() -> MobiusMap {
        MobiusMap { m: [[Q::one(), Q::zero()], [Q::zero(), Q::one()]] }
    }

    pub fn matrix(&self) -> &[[Q; 2]; 2] {
        &self.m
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let (x, y) = p.hom();
        let m = &self.m;
        ProjPoint::from_hom(&m[0][0] * &x + &m[0][1] * &y, &m[1][0] * &x + &m[1][1] * &y)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let (a, b) = (&self.m, &other.m);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        MobiusMap::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]).unwrap()
    }

    pub fn inverse(&self) -> MobiusMap {
        let m = &self.m;
        MobiusMap::new([[m[1][1].clone(), -m[0][1].clone()], [-m[1][0].clone(), m[0][0].clone()]]).unwrap()
    }

    /// The map with `0 -> p0`, `1 -> p1`, `inf -> p2`.
    pub fn from_frame(p0: &ProjPoint, p1: &ProjPoint, p2: &ProjPoint) -> Result<MobiusMap> {
        let (x0, y0) = p0.hom();
        let (x1, y1) = p1.hom();
        let (x2, y2) = p2.hom();
        // columns c*P2 (image of inf) and a*P0 (image of 0) with c*P2 + a*P0 = P1
        let det = &x2 * &y0 - &x0 * &y2;
        if det.is_zero() {
            return Err(Error::InvalidInput("frame points must be distinct".into()));
        }
        let c = (&x1 * &y0 - &x0 * &y1) / &det;
        let a = (&x2 * &y1 - &x1 * &y2) / &det;
        MobiusMap::new([[&c * &x2, &a * &x0], [&c * &y2, &a * &y0]])
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "z -> (({}) z + ({})) / (({}) z + ({}))",
            fmt_rational(&m[0][0]),
            fmt_rational(&m[0][1]),
            fmt_rational(&m[1][0]),
            fmt_rational(&m[1][1])
        )
    }
}

fn check_sizes(c1: &EigenConfig, c2: &EigenConfig, min: usize) -> Result<()> {
    if c1.len() != c2.len() {
        return Err(Error::InvalidInput(format!("configurations have sizes {} and {}", c1.len(), c2.len())));
    }
    if c1.len() < min {
        return Err(Error::InvalidInput(format!("configurations need at least {min} points")));
    }
    Ok(())
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(x: &Q) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let m = |v: &BigInt| u64::try_from(((v % &p) + &p) % &p).expect("residue fits");
    let d = m(x.denom());
    (d != 0).then(|| mul_mod(m(x.numer()), pow_mod(d, PRIME - 2)))
}

/// Sorted `j`-invariants of the cross-ratios of all 4-point subsets, reduced
/// modulo a prime. Möbius-equivalent configurations have equal profiles, so a
/// mismatch rules out both equivalences. `None` when some reduction degenerates.
fn cross_ratio_profile(c: &EigenConfig) -> Option<Vec<u64>> {
    let h = reduced_hom(c)?;
    let d = |i: usize, j: usize| (mul_mod(h[i].0, h[j].1) + PRIME - mul_mod(h[j].0, h[i].1)) % PRIME;
    let n = h.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for e in b + 1..n {
                for f in e + 1..n {
                    let (num, den) = (mul_mod(d(a, e), d(b, f)), mul_mod(d(a, f), d(b, e)));
                    if num == 0 || den == 0 || num == den {
                        return None;
                    }
                    let l = mul_mod(num, pow_mod(den, PRIME - 2));
                    let lm1 = (l + PRIME - 1) % PRIME;
                    let top = (mul_mod(l, l) + PRIME - l + 1) % PRIME;
                    let bottom = mul_mod(mul_mod(l, l), mul_mod(lm1, lm1));
                    out.push(mul_mod(mul_mod(top, mul_mod(top, top)), pow_mod(bottom, PRIME - 2)));
                }
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

fn reduced_hom(c: &EigenConfig) -> Option<Vec<(u64, u64)>> {
    c.points()
        .iter()
        .map(|p| match p {
            ProjPoint::Finite(x) => reduce(x).map(|v| (v, 1)),
            ProjPoint::Infinity => Some((1, 0)),
        })
        .collect()
}

/// Cross-ratio of four reduced points, `None` if it degenerates modulo the prime.
fn cross_ratio_mod(h: &[(u64, u64)], a: usize, b: usize, e: usize, f: usize) -> Option<u64> {
    let d = |i: usize, j: usize| (mul_mod(h[i].0, h[j].1) + PRIME - mul_mod(h[j].0, h[i].1)) % PRIME;
    let den = mul_mod(d(a, f), d(b, e));
    (den != 0).then(|| mul_mod(mul_mod(d(a, e), d(b, f)), pow_mod(den, PRIME - 2)))
}

fn profiles_differ(c1: &EigenConfig, c2: &EigenConfig) -> bool {
    if c1.len() < 4 {
        return false;
    }
    matches!((cross_ratio_profile(c1), cross_ratio_profile(c2)), (Some(a), Some(b)) if a != b)
}

fn affine_candidates(c1: &EigenConfig, c2: &EigenConfig, first_only: bool) -> Result<Vec<(AffineMap, Permutation)>> {
    check_sizes(c1, c2, 2)?;
    let xs = c1.finite_points()?;
    let ys = c2.finite_points()?;
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&i, &j| xs[i].cmp(&xs[j]));
    let (x1, x2) = (&xs[order[0]], &xs[order[1]]);
    let target = c2.lookup();
    let mut out = Vec::new();
    for (j1, y1) in ys.iter().enumerate() {
        for (j2, y2) in ys.iter().enumerate() {
            if j1 == j2 {
                continue;
            }
            let a = (y2 - y1) / (x2 - x1);
            let b = y1 - &a * x1;
            let m = AffineMap { a, b };
            let perm: Option<Permutation> = xs.iter().map(|x| target.get(&ProjPoint::Finite(m.apply(x))).copied()).collect();
            if let Some(p) = perm {
                out.push((m, p));
                if first_only {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// A witness `z -> a z + b` carrying `c1` onto `c2`, with the induced permutation.
pub fn affine_equivalent(c1: &EigenConfig, c2: &EigenConfig) -> Result<Option<(AffineMap, Permutation)>> {
    check_sizes(c1, c2, 2)?;
    if c1.is_affine() && c2.is_affine() && profiles_differ(c1, c2) {
        return Ok(None);
    }
    Ok(affine_candidates(c1, c2, true)?.into_iter().next())
}

/// Every affine map preserving `c`.
pub fn affine_self_maps(c: &EigenConfig) -> Result<Vec<(AffineMap, Permutation)>> {
    affine_candidates(c, c, false)
}

fn mobius_candidates(c1: &EigenConfig, c2: &EigenConfig, first_only: bool) -> Result<Vec<(MobiusMap, Permutation)>> {
    check_sizes(c1, c2, 3)?;
    let xs = c1.points();
    let ys = c2.points();
    let from_x = MobiusMap::from_frame(&xs[0], &xs[1], &xs[2])?.inverse();
    let target = c2.lookup();
    let n = xs.len();
    // a frame can only work if the fourth point's cross-ratio is matched somewhere
    let screen = match (n >= 4).then(|| (reduced_hom(c1), reduced_hom(c2))) {
        Some((Some(hx), Some(hy))) => cross_ratio_mod(&hx, 0, 1, 2, 3).map(|t| (t, hy)),
        _ => None,
    };
    let mut out = Vec::new();
    for j0 in 0..n {
        for j1 in 0..n {
            if j1 == j0 {
                continue;
            }
            for j2 in 0..n {
                if j2 == j0 || j2 == j1 {
                    continue;
                }
                if let Some((t, hy)) = &screen {
                    let hit = (0..n)
                        .filter(|&j3| j3 != j0 && j3 != j1 && j3 != j2)
                        .any(|j3| cross_ratio_mod(hy, j0, j1, j2, j3).is_none_or(|v| v == *t));
                    if !hit {
                        continue;
                    }
                }
                let m = MobiusMap::from_frame(&ys[j0], &ys[j1], &ys[j2])?.compose(&from_x);
                let mut perm = vec![j0, j1, j2];
                let ok = xs[3..].iter().all(|x| match target.get(&m.apply(x)) {
                    Some(&j) => {
                        perm.push(j);
                        true
                    }
                    None => false,
                });
                if ok {
                    out.push((m, perm));
                    if first_only {
                        return Ok(out);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A Möbius witness carrying `c1` onto `c2`, with the induced permutation.
pub fn mobius_equivalent(c1: &EigenConfig, c2: &EigenConfig) -> Result<Option<(MobiusMap, Permutation)>> {
    check_sizes(c1, c2, 3)?;
    if profiles_differ(c1, c2) {
        return Ok(None);
    }
    Ok(mobius_candidates(c1, c2, true)?.into_iter().next())
}

/// Every Möbius map preserving `c`.
pub fn mobius_self_maps(c: &EigenConfig) -> Result<Vec<(MobiusMap, Permutation)>> {
    mobius_candidates(c, c, false)
}

/// Lexicographic minimum of the sorted normalizations sending an ordered pair
/// to `(0, 1)` (flavor X) or an ordered triple to `(0, 1, inf)` (flavor Y).
pub fn canonical_point(c: &EigenConfig, flavor: Flavor) -> Result<EigenConfig> {
    let n = c.len();
    let pts = c.points();
    let mut best: Option<Vec<ProjPoint>> = None;
    let mut offer = |cand: Vec<ProjPoint>| {
        if best.as_ref().is_none_or(|b| &cand < b) {
            best = Some(cand);
        }
    };
    match flavor {
        Flavor::X => {
            let xs = c.finite_points()?;
            if n < 2 {
                return Err(Error::InvalidInput("flavor X needs at least 2 points".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let m = AffineMap { a: Q::one() / (&xs[j] - &xs[i]), b: Q::zero() }.compose(&AffineMap { a: Q::one(), b: -xs[i].clone() });
                    let mut v: Vec<ProjPoint> = xs.iter().map(|x| ProjPoint::Finite(m.apply(x))).collect();
                    v.sort();
                    offer(v);
                }
            }
        }
        Flavor::Y => {
            if n < 3 {
                return Err(Error::InvalidInput("flavor Y needs at least 3 points".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        let m = MobiusMap::from_frame(&pts[i], &pts[j], &pts[k])?.inverse();
                        let mut v: Vec<ProjPoint> = pts.iter().map(|p| m.apply(p)).collect();
                        v.sort();
                        offer(v);
                    }
                }
            }
        }
    }
    EigenConfig::new(best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{q, qf};
    use super::*;

    fn cfg(s: &str) -> EigenConfig {
        EigenConfig::parse(s).unwrap()
    }

    #[test]
    fn affine_examples() {
        let (m, p) = affine_equivalent(&cfg("1,2,3,4"), &cfg("10,20,30,40")).unwrap().unwrap();
        assert_eq!(m, AffineMap { a: q(10), b: q(0) });
        assert_eq!(p, vec![0, 1, 2, 3]);
        assert!(affine_equivalent(&cfg("1,2,3,4"), &cfg("0,1,2,4")).unwrap().is_none());
        assert!(affine_equivalent(&cfg("1,2"), &cfg("1,2,3")).is_err());
        assert!(EigenConfig::parse("1,2,2").is_err());
    }

    #[test]
    fn mobius_examples() {
        let (m, _) = mobius_equivalent(&cfg("0,1,2,inf"), &cfg("inf,1,1/2,0")).unwrap().unwrap();
        for p in cfg("0,1,2,inf").points() {
            let expect = match p {
                ProjPoint::Infinity => ProjPoint::int(0),
                ProjPoint::Finite(x) if x.is_zero() => ProjPoint::Infinity,
                ProjPoint::Finite(x) => ProjPoint::Finite(Q::one() / x),
            };
            assert_eq!(m.apply(p), expect);
        }
        assert!(mobius_equivalent(&cfg("0,1,3,inf"), &cfg("0,1,4,inf")).unwrap().is_none());
    }

    #[test]
    fn frame_maps_standard_points() {
        let (a, b, c) = (ProjPoint::Finite(qf(1, 3)), ProjPoint::Infinity, ProjPoint::int(-2));
        let m = MobiusMap::from_frame(&a, &b, &c).unwrap();
        assert_eq!(m.apply(&ProjPoint::int(0)), a);
        assert_eq!(m.apply(&ProjPoint::int(1)), b);
        assert_eq!(m.apply(&ProjPoint::Infinity), c);
    }

    #[test]
    fn canonical_x_is_lex_min() {
        let c = canonical_point(&cfg("10,20,30,40"), Flavor::X).unwrap();
        assert_eq!(c, cfg("-2,-1,0,1"));
        assert_eq!(canonical_point(&cfg("1,2,3,4"), Flavor::X).unwrap(), c);
    }
}
