//! Seeded random configurations and maps for property suites.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use super::config::{AffineMap, EigenConfig, MobiusMap, Permutation};
use super::scalar::{q, qf, ProjPoint, Q};

fn small_rational<R: Rng>(rng: &mut R) -> Q {
    qf(rng.gen_range(-20..=20), rng.gen_range(1..=6))
}

fn nonzero_rational<R: Rng>(rng: &mut R) -> Q {
    loop {
        let x = small_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_affine_map<R: Rng>(rng: &mut R) -> AffineMap {
    AffineMap::new(nonzero_rational(rng), small_rational(rng)).expect("a is nonzero")
}

pub fn random_mobius_map<R: Rng>(rng: &mut R) -> MobiusMap {
    loop {
        let m = [[small_rational(rng), small_rational(rng)], [small_rational(rng), small_rational(rng)]];
        if let Ok(m) = MobiusMap::new(m) {
            return m;
        }
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut p: Permutation = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `n` distinct finite rationals. About half the time the points come from a
/// symmetric pattern (progression, reflection-symmetric set, geometric
/// progression) moved by a random affine map, so that stabilizers are often
/// nontrivial.
pub fn random_affine_config<R: Rng>(rng: &mut R, n: usize) -> EigenConfig {
    let base: Vec<Q> = match rng.gen_range(0..6) {
        0 => (0..n as i64).map(q).collect(),
        1 => {
            // symmetric about 0
            let mut v: Vec<Q> = Vec::new();
            let mut k = 1;
            while v.len() + 2 <= n {
                let x = q(k + rng.gen_range(0..3));
                if !v.contains(&x) {
                    v.push(x.clone());
                    v.push(-x);
                }
                k += 3;
            }
            if v.len() < n {
                v.push(Q::zero());
            }
            v
        }
        2 => (0..n as u32).map(|i| q(2i64.pow(i))).collect(),
        _ => {
            let mut v: Vec<Q> = Vec::new();
            while v.len() < n {
                let x = small_rational(rng);
                if !v.contains(&x) {
                    v.push(x);
                }
            }
            v
        }
    };
    let m = random_affine_map(rng);
    let mut pts: Vec<Q> = base.iter().map(|x| m.apply(x)).collect();
    pts.shuffle(rng);
    EigenConfig::affine(pts).expect("affine image of distinct points is distinct")
}

/// A projective configuration: an affine one, optionally with one point sent to infinity.
pub fn random_projective_config<R: Rng>(rng: &mut R, n: usize) -> EigenConfig {
    let c = random_affine_config(rng, n);
    if rng.gen_bool(0.5) {
        return c;
    }
    let mut pts: Vec<ProjPoint> = c.points().to_vec();
    let i = rng.gen_range(0..n);
    pts[i] = ProjPoint::Infinity;
    EigenConfig::new(pts).expect("replacing one point by infinity keeps points distinct")
}
