use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3/7"`; the denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("malformed rational '{s}'"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::new(n, d))
    } else {
        Ok(Q::from_integer(BigInt::from_str(t).map_err(|_| bad())?))
    }
}

/// `p/q` with `q > 1`, or `p`.
pub fn fmt_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A point of the projective line over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(Q),
    Infinity,
}

impl ProjPoint {
    pub fn parse(s: &str) -> Result<ProjPoint> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "oo" | "∞" => Ok(ProjPoint::Infinity),
            t => Ok(ProjPoint::Finite(parse_rational(t)?)),
        }
    }

    pub fn int(n: i64) -> ProjPoint {
        ProjPoint::Finite(q(n))
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    /// Homogeneous coordinates `[x : 1]` or `[1 : 0]`.
    pub fn hom(&self) -> (Q, Q) {
        match self {
            ProjPoint::Finite(x) => (x.clone(), Q::one()),
            ProjPoint::Infinity => (Q::one(), Q::zero()),
        }
    }

    pub fn from_hom(a: Q, b: Q) -> ProjPoint {
        if b.is_zero() {
            debug_assert!(!a.is_zero());
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(a / b)
        }
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ProjPoint::Finite(a), ProjPoint::Finite(b)) => a.cmp(b),
            (ProjPoint::Finite(_), ProjPoint::Infinity) => Ordering::Less,
            (ProjPoint::Infinity, ProjPoint::Finite(_)) => Ordering::Greater,
            (ProjPoint::Infinity, ProjPoint::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{}", fmt_rational(x)),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl From<Q> for ProjPoint {
    fn from(x: Q) -> Self {
        ProjPoint::Finite(x)
    }
}
