//! Borel-Weil-Bott for line bundles on G/B and G/P.
//!
//! `L(lambda)` has cohomology in at most one degree: zero when `lambda + rho`
//! is singular, otherwise `V(w(lambda+rho) - rho)` in degree `l(w)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominantized {
    Singular,
    Regular { length: usize, dominant: WeightVector },
}

/// Reflect at the least negative coordinate until dominant; any zero coordinate means singular.
pub fn dominantize(rs: &RootSystem, mu: &WeightVector) -> Dominantized {
    let mut w = mu.clone();
    let mut length = 0;
    loop {
        if w.0.contains(&0) {
            return Dominantized::Singular;
        }
        match w.0.iter().position(|&x| x < 0) {
            None => return Dominantized::Regular { length, dominant: w },
            Some(i) => {
                w = rs.reflect_weight(&w, i);
                length += 1;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottResult {
    Singular,
    Concentrated { degree: usize, dominant_weight: WeightVector, dimension: BigInt },
}

impl BottResult {
    pub fn is_singular(&self) -> bool {
        matches!(self, BottResult::Singular)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BottResult::Singular => None,
            BottResult::Concentrated { degree, .. } => Some(*degree),
        }
    }

    /// Dimension of the one nonzero cohomology group, 0 if singular.
    pub fn dimension(&self) -> BigInt {
        match self {
            BottResult::Singular => BigInt::zero(),
            BottResult::Concentrated { dimension, .. } => dimension.clone(),
        }
    }

    /// `(-1)^degree * dimension`.
    pub fn euler(&self) -> BigInt {
        match self {
            BottResult::Singular => BigInt::zero(),
            BottResult::Concentrated { degree, dimension, .. } => {
                if degree % 2 == 0 {
                    dimension.clone()
                } else {
                    -dimension.clone()
                }
            }
        }
    }
}

pub fn bott_line(rs: &RootSystem, lambda: &WeightVector) -> BottResult {
    let rho = rs.rho();
    match dominantize(rs, &(lambda + &rho)) {
        Dominantized::Singular => BottResult::Singular,
        Dominantized::Regular { length, dominant } => {
            let mu = &dominant - &rho;
            let dimension = weyl_dim_unchecked(rs, &mu);
            BottResult::Concentrated { degree: length, dominant_weight: mu, dimension }
        }
    }
}

/// `prod_{alpha > 0} <mu+rho, alpha^vee> / <rho, alpha^vee>`.
pub fn weyl_dim(rs: &RootSystem, mu: &WeightVector) -> Result<BigInt> {
    if mu.len() != rs.rank() {
        return Err(Error::InvalidInput(format!("weight {mu} has wrong length for {}", rs.cartan_type())));
    }
    if mu.0.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput(format!("weight {mu} is not dominant")));
    }
    Ok(weyl_dim_unchecked(rs, mu))
}

fn weyl_dim_unchecked(rs: &RootSystem, mu: &WeightVector) -> BigInt {
    let shifted = mu + &rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (k, c) in rs.positive_coroots().iter().enumerate() {
        num *= rs.pairing_positive(&shifted, k);
        den *= c.height();
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl product not integral for {mu} in {}", rs.cartan_type());
    q
}

/// `#{alpha > 0 : <mu, alpha^vee> < 0}`; equals the length of the dominantizing element when `mu` is regular.
pub fn negative_pairing_count(rs: &RootSystem, mu: &WeightVector) -> usize {
    (0..rs.num_positive()).filter(|&k| rs.pairing_positive(mu, k) < 0).count()
}

/// Regularity by a full scan over positive coroots.
pub fn is_regular_by_pairing(rs: &RootSystem, mu: &WeightVector) -> bool {
    (0..rs.num_positive()).all(|k| rs.pairing_positive(mu, k) != 0)
}

/// Same numbers as [`bott_line`] after checking P-dominance on `delta0`.
pub fn bott_parabolic(rs: &RootSystem, delta0: &[usize], lambda: &WeightVector) -> Result<BottResult> {
    if let Some(&i) = delta0.iter().find(|&&i| lambda[i] < 0) {
        return Err(Error::InvalidInput(format!(
            "weight {lambda} is not dominant for the parabolic: pairing with simple coroot {} is {}",
            i + 1,
            lambda[i]
        )));
    }
    Ok(bott_line(rs, lambda))
}

/// Type-A weight from `Z^n / <(1,..,1)>` to fundamental coordinates: `(l1-l2, .., l_{n-1}-l_n)`.
pub fn type_a_weight(e: &[i64]) -> WeightVector {
    WeightVector(e.windows(2).map(|w| w[0] - w[1]).collect())
}

/// A homogeneous bundle filtered by line bundles, as weight multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<WeightVector, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: WeightVector, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn extend(&mut self, other: &WeightMultiset) {
        for (w, &m) in &other.entries {
            self.insert(w.clone(), m);
        }
    }

    pub fn entries(&self) -> &BTreeMap<WeightVector, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }
}

impl FromIterator<WeightVector> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = WeightVector>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for w in iter {
            m.insert(w, 1);
        }
        m
    }
}

pub fn euler_multiset(rs: &RootSystem, m: &WeightMultiset) -> BigInt {
    m.iter().map(|(w, k)| bott_line(rs, w).euler() * BigInt::from(k)).sum()
}
