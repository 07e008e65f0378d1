//! Line bundles on the type-A Hessenberg divisor `X ⊂ Fl_n`.
//!
//! Weights are integer `n`-tuples modulo `(1, .., 1)`. `X` is cut out by a
//! section of `L(theta)`, `theta = e_1 - e_n`, so
//! `chi(X, L^k) = chi(Fl_n, k lambda) - chi(Fl_n, k lambda - theta)`.

use num_bigint::BigInt;
use num_traits::One;

use super::scalar::Q;
use crate::bwb::{bott_line, type_a_weight};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, RootSystem, WeightVector};

/// `prod_{i<j} (1 + (l_i - l_j) / (j - i))` for non-increasing `l`.
pub fn weyl_dim_a(lambda: &[i64]) -> Result<BigInt> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!("{lambda:?} is not dominant")));
    }
    let n = lambda.len();
    let mut p = Q::one();
    for i in 0..n {
        for j in i + 1..n {
            p *= Q::new(BigInt::from((j - i) as i64 + lambda[i] - lambda[j]), BigInt::from((j - i) as i64));
        }
    }
    assert!(p.is_integer());
    Ok(p.to_integer())
}

fn type_a(n: usize) -> Result<RootSystem> {
    if n < 2 {
        return Err(Error::InvalidInput("type A computations need n >= 2".into()));
    }
    Ok(RootSystem::new(CartanType::new(Family::A, n - 1)?))
}

fn check_len(n: usize, lambda: &[i64]) -> Result<()> {
    if lambda.len() != n {
        return Err(Error::InvalidInput(format!("weight has {} entries, expected {n}", lambda.len())));
    }
    Ok(())
}

/// `chi(X, L(lambda)^k)` from two Bott evaluations on `Fl_n`.
pub fn euler_hessenberg_linebundle(n: usize, lambda: &[i64], k: i64) -> Result<BigInt> {
    check_len(n, lambda)?;
    let rs = type_a(n)?;
    let mu = type_a_weight(&lambda.iter().map(|x| k * x).collect::<Vec<_>>());
    let theta = rs.to_weight(&rs.highest_root());
    Ok(bott_line(&rs, &mu).euler() - bott_line(&rs, &(&mu - &theta)).euler())
}

/// `eps_ij`: 2 at `(1, n)`, 1 on the rest of the first row and last column, else 0 (1-based).
pub fn epsilon(n: usize, i: usize, j: usize) -> i64 {
    match (i == 1, j == n) {
        (true, true) => 2,
        (true, false) | (false, true) => 1,
        _ => 0,
    }
}

/// `A(k) - B(k)` for dominant `lambda` with `l_1 > l_2` and `l_{n-1} > l_n`, `k >= 1`; `None` otherwise.
pub fn closed_form_chi(n: usize, lambda: &[i64], k: i64) -> Option<BigInt> {
    if lambda.len() != n || n < 2 || k < 1 || lambda.windows(2).any(|w| w[0] < w[1]) || lambda[0] == lambda[1] || lambda[n - 2] == lambda[n - 1] {
        return None;
    }
    let mut a = Q::one();
    let mut b = Q::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let gap = (lambda[i - 1] - lambda[j - 1]) * k;
            let d = (j - i) as i64;
            a *= Q::new(BigInt::from(d + gap), BigInt::from(d));
            b *= Q::new(BigInt::from(d + gap - epsilon(n, i, j)), BigInt::from(d));
        }
    }
    Some((a - b).to_integer())
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// A weight passing the characterization test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizedWeight {
    pub fundamental: WeightVector,
    /// Representative with last entry 0.
    pub e_form: Vec<i64>,
    /// `e1` or `-e{n}` when it is one of those.
    pub label: Option<String>,
}

/// Dominant weights with fundamental coordinates in `[0, box]` whose powers have
/// `chi(X, L^k) = C(n+k-1, k)` for `1 <= k <= kmax`.
pub fn characterize_search(n: usize, bound: i64, kmax: i64) -> Result<Vec<CharacterizedWeight>> {
    if n < 4 {
        return Err(Error::InvalidInput("the characterization needs n >= 4".into()));
    }
    if bound < 0 || kmax < 1 {
        return Err(Error::InvalidInput("box must be >= 0 and kmax >= 1".into()));
    }
    let r = n - 1;
    let mut hits = Vec::new();
    let mut coords = vec![0i64; r];
    loop {
        let mut e = vec![0i64; n];
        for i in (0..r).rev() {
            e[i] = e[i + 1] + coords[i];
        }
        let mut ok = true;
        for k in 1..=kmax {
            if euler_hessenberg_linebundle(n, &e, k)? != binomial(n as u64 + k as u64 - 1, k as u64) {
                ok = false;
                break;
            }
        }
        if ok {
            let label = if coords == unit(r, 0) {
                Some("e1".to_string())
            } else if coords == unit(r, r - 1) {
                Some(format!("-e{n}"))
            } else {
                None
            };
            hits.push(CharacterizedWeight { fundamental: WeightVector(coords.clone()), e_form: e, label });
        }
        // odometer over [0, bound]^r
        let mut i = 0;
        loop {
            if i == r {
                return Ok(hits);
            }
            coords[i] += 1;
            if coords[i] <= bound {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_dim_a_examples() {
        assert_eq!(weyl_dim_a(&[3, 0, 0, 0]).unwrap(), BigInt::from(20));
        assert_eq!(weyl_dim_a(&[0, 0, 0]).unwrap(), BigInt::one());
        assert_eq!(weyl_dim_a(&[1, 0, -1]).unwrap(), BigInt::from(8));
        assert!(weyl_dim_a(&[0, 1]).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_hessenberg_linebundle(4, &[1, 0, 0, 0], 2).unwrap(), BigInt::from(10));
        assert_eq!(euler_hessenberg_linebundle(4, &[0, 0, 0, -1], 3).unwrap(), BigInt::from(20));
        for k in 0..5 {
            assert_eq!(euler_hessenberg_linebundle(4, &[0, 0, 0, 0], k).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn empty_box() {
        assert!(characterize_search(4, 0, 3).unwrap().is_empty());
    }
}
