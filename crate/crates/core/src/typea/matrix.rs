//! Exact rational matrices: symmetrization of diagonalizable matrices and the
//! binary form `det(uA + vB)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{fmt_rational, q, Q};
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

pub fn from_ints(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn is_square(m: &Matrix) -> bool {
    m.iter().all(|r| r.len() == m.len())
}

fn require_square(m: &Matrix, what: &str) -> Result<usize> {
    if m.is_empty() || !is_square(m) {
        return Err(Error::InvalidInput(format!("{what} must be a nonempty square matrix")));
    }
    Ok(m.len())
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    (0..n).map(|i| (0..m).map(|j| (0..k).fold(Q::zero(), |s, t| s + &a[i][t] * &b[t][j])).collect()).collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn add_scaled(a: &Matrix, b: &Matrix, t: &Q) -> Matrix {
    a.iter().zip(b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + t * y).collect()).collect()
}

pub fn det(a: &Matrix) -> Q {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let p = m[col][col].clone();
        d *= &p;
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &p;
            for j in col..n {
                let v = &f * &m[col][j];
                m[i][j] -= v;
            }
        }
    }
    d
}

/// Reduced row echelon form and pivot columns.
fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &f * &m[r][j];
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let aug: Matrix = a.iter().zip(identity(n)).map(|(r, e)| r.iter().cloned().chain(e).collect()).collect();
    let (m, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A basis of the kernel.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Q>> {
    let cols = a[0].len();
    let (m, pivots) = rref(a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c_0..c_n` of the polynomial through `(t_i, y_i)`, lowest degree first.
fn interpolate(ts: &[Q], ys: &[Q]) -> Vec<Q> {
    let n = ts.len();
    let mut coeffs = vec![Q::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (t - t_j) / (t_i - t_j)
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &ts[j];
            }
            basis = next;
            denom *= &ts[i] - &ts[j];
        }
        let scale = &ys[i] / denom;
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += b * &scale;
        }
    }
    coeffs
}

/// `det(t I - s)`, lowest degree first.
pub fn charpoly(s: &Matrix) -> Vec<Q> {
    let n = s.len();
    let neg = s.iter().map(|r| r.iter().map(|x| -x).collect()).collect::<Matrix>();
    let ts: Vec<Q> = (0..=n as i64).map(q).collect();
    let ys: Vec<Q> = ts.iter().map(|t| det(&add_scaled(&neg, &identity(n), t))).collect();
    interpolate(&ts, &ys)
}

/// Scales to a primitive integer vector whose first nonzero entry is positive.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let small: u64 = n
        .to_string()
        .parse()
        .ok()
        .filter(|&x: &u64| x <= DIVISOR_LIMIT)
        .ok_or_else(|| Error::Unsupported("polynomial coefficients too large for rational-root search".into()))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots of a polynomial, lowest degree first.
pub fn rational_roots(p: &[Q]) -> Result<Vec<Q>> {
    let ints = primitive(p);
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero());
    let Some(low) = low else {
        return Err(Error::InvalidInput("zero polynomial".into()));
    };
    if low > 0 {
        roots.push(Q::zero());
    }
    let trimmed: Vec<BigInt> = ints[low..].to_vec();
    let top = trimmed.iter().rposition(|c| !c.is_zero()).unwrap();
    if top == 0 {
        return Ok(roots);
    }
    let poly: Vec<Q> = trimmed.iter().map(|c| Q::from_integer(c.clone())).collect();
    let mut cands: Vec<Q> = Vec::new();
    for a in divisors(&trimmed[0])? {
        for b in divisors(&trimmed[top])? {
            cands.push(Q::new(a.clone(), b.clone()));
            cands.push(-Q::new(a.clone(), b));
        }
    }
    cands.sort();
    cands.dedup();
    roots.extend(cands.into_iter().filter(|x| eval(&poly, x).is_zero()));
    roots.sort();
    Ok(roots)
}

/// `Q = (P P^T)^{-1}` for `s = P D P^{-1}`: symmetric, nondegenerate, `Q s = s^T Q`.
pub fn symmetrize(s: &Matrix) -> Result<Matrix> {
    let n = require_square(s, "s")?;
    let roots = rational_roots(&charpoly(s))?;
    if roots.len() != n {
        return Err(Error::Unsupported(
            "matrix does not have distinct rational eigenvalues; pass the eigenvalues as a configuration instead".into(),
        ));
    }
    let mut cols = Vec::with_capacity(n);
    for lam in &roots {
        let shifted = add_scaled(s, &identity(n), &-lam.clone());
        let mut kernel = nullspace(&shifted);
        if kernel.len() != 1 {
            return Err(Error::Contradiction(format!("eigenspace of {} has dimension {}", fmt_rational(lam), kernel.len())));
        }
        cols.push(kernel.remove(0));
    }
    let p = transpose(&cols);
    let qm = inverse(&mul(&p, &transpose(&p))).ok_or_else(|| Error::Contradiction("P P^T is singular".into()))?;
    if qm != transpose(&qm) || det(&qm).is_zero() || mul(&qm, s) != mul(&transpose(s), &qm) {
        return Err(Error::Contradiction("symmetrizer failed its identities".into()));
    }
    Ok(qm)
}

/// Coefficients of `det(uA + vB)` in the order `u^n, u^{n-1} v, .., v^n`, unnormalized.
pub fn pencil_form(a: &Matrix, b: &Matrix) -> Result<Vec<Q>> {
    let n = require_square(a, "A")?;
    if require_square(b, "B")? != n {
        return Err(Error::InvalidInput("A and B must have the same size".into()));
    }
    let ts: Vec<Q> = (0..=n as i64).map(q).collect();
    let ys: Vec<Q> = ts.iter().map(|t| det(&add_scaled(a, b, t))).collect();
    Ok(interpolate(&ts, &ys))
}

/// [`pencil_form`] as a primitive integer vector with positive leading nonzero entry.
pub fn pencil_charpoly(a: &Matrix, b: &Matrix) -> Result<Vec<BigInt>> {
    Ok(primitive(&pencil_form(a, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil_of_diagonal() {
        let a = identity(2);
        let b = from_ints(&[vec![1, 0], vec![0, 2]]);
        let expect: Vec<BigInt> = [1, 3, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(pencil_charpoly(&a, &b).unwrap(), expect);
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(symmetrize(&from_ints(&[vec![1, 0], vec![0, 3]])).unwrap(), identity(2));
        let s = from_ints(&[vec![0, 1], vec![2, 1]]);
        let qm = symmetrize(&s).unwrap();
        assert_eq!(mul(&qm, &s), mul(&transpose(&s), &qm));
        assert!(matches!(symmetrize(&from_ints(&[vec![0, 1], vec![2, 0]])), Err(Error::Unsupported(_))));
        assert!(matches!(symmetrize(&from_ints(&[vec![1, 1], vec![0, 1]])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn charpoly_and_inverse() {
        let s = from_ints(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(charpoly(&s), vec![q(3), q(-4), q(1)]);
        let inv = inverse(&s).unwrap();
        assert_eq!(mul(&s, &inv), identity(2));
        assert!(inverse(&from_ints(&[vec![1, 2], vec![2, 4]])).is_none());
    }
}
