//! Simple root systems of types A through G.
//!
//! Roots are stored in the simple-root basis, weights in the fundamental-weight
//! basis. The Cartan matrix convention is `C[i][j] = <alpha_j, alpha_i^vee>`, so
//! column `j` of `C` is `alpha_j` written in fundamental coordinates and the
//! pairing of a weight with a simple coroot is a coordinate read-off.
//!
//! Simple roots follow Bourbaki numbering. Indices in this API are 0-based, so
//! `alpha_1` of the usual tables is index 0.
//!
//! The Borel subgroup used for line bundles corresponds to the negative roots.
//! Nothing in this module depends on that choice.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidInput(format!("unknown Cartan family '{other}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// An admissible (family, rank) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidInput(format!("{family}{rank} is not an admissible Cartan type")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type with rank at most `max_rank`, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Cartan matrix with `C[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut c = vec![vec![0i64; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..r - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1);
                }
                link(r - 3, r - 1);
            }
            Family::E => {
                // 1-3-4-5-...-r with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 2..r - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self.family {
            Family::B => c[r - 1][r - 2] = -2,
            Family::C => c[r - 2][r - 1] = -2,
            Family::F => c[2][1] = -2,
            Family::G => c[0][1] = -3,
            _ => {}
        }
        c
    }

    /// `d_i = (alpha_i, alpha_i) / 2`, normalized so short roots have `d = 1`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let r = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; r],
            Family::B => (0..r).map(|i| if i == r - 1 { 1 } else { 2 }).collect(),
            Family::C => (0..r).map(|i| if i == r - 1 { 2 } else { 1 }).collect(),
            Family::F => vec![2, 2, 1, 1],
            Family::G => vec![1, 3],
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

macro_rules! int_vector {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = vec![0; rank];
                v[i] = 1;
                $name(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scale(&self, k: i64) -> Self {
                $name(self.0.iter().map(|&x| k * x).collect())
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, o: $name) -> $name {
                &self + &o
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, o: $name) -> $name {
                &self - &o
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|x| -x).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, v: &$name) -> $name {
                v.scale(self)
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_vector!(RootVector);
int_vector!(WeightVector);

impl RootVector {
    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Human-readable linear combination, 1-based: `a1+2a2+a3`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("a{}", i + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// The full combinatorial datum of a simple root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    positive: Vec<RootVector>,
    coroots: Vec<RootVector>,
    norms: Vec<i64>,
    index: HashMap<RootVector, usize>,
    max_norm: i64,
    min_norm: i64,
}

impl RootSystem {
    pub fn new(t: CartanType) -> RootSystem {
        let cartan = t.cartan_matrix();
        let sym = t.symmetrizer();
        let r = t.rank();

        // Reflection closure of the simple roots; every root is W-conjugate to a simple one.
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut queue: VecDeque<RootVector> = VecDeque::new();
        for i in 0..r {
            let a = RootVector::unit(r, i);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        while let Some(a) = queue.pop_front() {
            for i in 0..r {
                let p: i64 = (0..r).map(|j| cartan[i][j] * a[j]).sum();
                if p == 0 {
                    continue;
                }
                let mut b = a.clone();
                b.0[i] -= p;
                if seen.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
        let mut positive: Vec<RootVector> = seen.into_iter().filter(|a| a.0.iter().all(|&x| x >= 0)).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));

        let norm = |a: &RootVector| -> i64 {
            // (a, a) with (alpha_i, alpha_j) = d_i C[i][j]
            let mut s = 0;
            for i in 0..r {
                for j in 0..r {
                    s += a[i] * sym[i] * cartan[i][j] * a[j];
                }
            }
            s
        };
        let norms: Vec<i64> = positive.iter().map(norm).collect();
        let coroots = positive
            .iter()
            .zip(&norms)
            .map(|(a, &n)| {
                RootVector(
                    (0..r)
                        .map(|i| {
                            let num = 2 * a[i] * sym[i];
                            debug_assert_eq!(num % n, 0);
                            num / n
                        })
                        .collect(),
                )
            })
            .collect();
        let index = positive.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
        let max_norm = *norms.iter().max().unwrap();
        let min_norm = *norms.iter().min().unwrap();
        RootSystem { cartan_type: t, cartan, sym, positive, coroots, norms, index, max_norm, min_norm }
    }

    pub fn from_parts(family: Family, rank: usize) -> Result<RootSystem> {
        Ok(RootSystem::new(CartanType::new(family, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// Positive roots sorted by height, then reverse-lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    /// Positive roots followed by their negatives.
    pub fn all_roots(&self) -> Vec<RootVector> {
        let mut v = self.positive.clone();
        v.extend(self.positive.iter().map(|a| -a));
        v
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// `dim G = rank + |Phi|`.
    pub fn dim_group(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::unit(self.rank(), i)
    }

    pub fn rho(&self) -> WeightVector {
        WeightVector(vec![1; self.rank()])
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan_type.is_simply_laced()
    }

    pub fn positive_index(&self, a: &RootVector) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn is_root(&self, a: &RootVector) -> bool {
        a.len() == self.rank() && (self.index.contains_key(a) || self.index.contains_key(&-a))
    }

    pub fn is_positive_root(&self, a: &RootVector) -> bool {
        self.index.contains_key(a)
    }

    fn checked_root(&self, a: &RootVector) -> Result<(usize, i64)> {
        if a.len() != self.rank() {
            return Err(Error::InvalidInput(format!("vector {a} has wrong length for {}", self.cartan_type)));
        }
        if let Some(&k) = self.index.get(a) {
            Ok((k, 1))
        } else if let Some(&k) = self.index.get(&-a) {
            Ok((k, -1))
        } else {
            Err(Error::InvalidInput(format!("{} is not a root of {}", a.pretty(), self.cartan_type)))
        }
    }

    /// `(a, a)` for a root, in the normalization where short roots have norm 2.
    pub fn root_norm(&self, a: &RootVector) -> Result<i64> {
        let (k, _) = self.checked_root(a)?;
        Ok(self.norms[k])
    }

    pub fn is_long(&self, a: &RootVector) -> Result<bool> {
        Ok(self.root_norm(a)? == self.max_norm)
    }

    /// Simply-laced roots are both long and short.
    pub fn is_short(&self, a: &RootVector) -> Result<bool> {
        Ok(self.root_norm(a)? == self.min_norm)
    }

    /// Coroot of a root in simple-coroot coordinates.
    pub fn coroot(&self, a: &RootVector) -> Result<RootVector> {
        let (k, s) = self.checked_root(a)?;
        Ok(self.coroots[k].scale(s))
    }

    pub fn coroot_height(&self, a: &RootVector) -> Result<i64> {
        Ok(self.coroot(a)?.height())
    }

    /// Coroots of the positive roots, aligned with [`positive_roots`](Self::positive_roots).
    pub fn positive_coroots(&self) -> &[RootVector] {
        &self.coroots
    }

    /// `<lambda, alpha^vee>`; errors when `alpha` is not a root.
    pub fn pairing(&self, lambda: &WeightVector, alpha: &RootVector) -> Result<i64> {
        let c = self.coroot(alpha)?;
        Ok(dot(&lambda.0, &c.0))
    }

    /// Pairing against the `k`-th positive coroot, no validation.
    pub fn pairing_positive(&self, lambda: &WeightVector, k: usize) -> i64 {
        dot(&lambda.0, &self.coroots[k].0)
    }

    /// Root-lattice vector to fundamental coordinates.
    pub fn to_weight(&self, a: &RootVector) -> WeightVector {
        let r = self.rank();
        WeightVector((0..r).map(|i| (0..r).map(|j| self.cartan[i][j] * a[j]).sum()).collect())
    }

    /// Inverse of [`to_weight`](Self::to_weight) on the root lattice; `None` off the lattice.
    pub fn to_root(&self, w: &WeightVector) -> Option<RootVector> {
        let r = self.rank();
        // Solve C n = w by fraction-free elimination; r <= 12 keeps i128 safe.
        let mut m: Vec<Vec<i128>> = (0..r)
            .map(|i| {
                let mut row: Vec<i128> = self.cartan[i].iter().map(|&x| x as i128).collect();
                row.push(w[i] as i128);
                row
            })
            .collect();
        for col in 0..r {
            let piv = (col..r).find(|&i| m[i][col] != 0)?;
            m.swap(col, piv);
            for i in 0..r {
                if i != col && m[i][col] != 0 {
                    let (a, b) = (m[col][col], m[i][col]);
                    for j in 0..=r {
                        m[i][j] = m[i][j] * a - m[col][j] * b;
                    }
                    let g = m[i].iter().fold(0i128, |g, &x| gcd_i128(g, x));
                    if g > 1 {
                        for x in m[i].iter_mut() {
                            *x /= g;
                        }
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(r);
        for (i, row) in m.iter().enumerate() {
            if row[r] % row[i] != 0 {
                return None;
            }
            out.push((row[r] / row[i]) as i64);
        }
        Some(RootVector(out))
    }

    /// `s_i` acting on a weight in fundamental coordinates.
    pub fn reflect_weight(&self, w: &WeightVector, i: usize) -> WeightVector {
        let p = w[i];
        WeightVector((0..self.rank()).map(|j| w[j] - p * self.cartan[j][i]).collect())
    }

    /// `s_i` acting on a root-lattice vector.
    pub fn reflect_root(&self, a: &RootVector, i: usize) -> RootVector {
        let p: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * a[j]).sum();
        let mut b = a.clone();
        b.0[i] -= p;
        b
    }

    pub fn height(&self, a: &RootVector) -> i64 {
        a.height()
    }

    /// Sum of coefficients over simple roots outside `delta0`.
    pub fn height_p(&self, delta0: &[usize], a: &RootVector) -> i64 {
        (0..self.rank()).filter(|i| !delta0.contains(i)).map(|i| a[i]).sum()
    }

    pub fn highest_root(&self) -> RootVector {
        self.positive.last().unwrap().clone()
    }

    /// `ht(theta) + 1`.
    pub fn coxeter_number(&self) -> i64 {
        self.highest_root().height() + 1
    }

    pub fn distinguished_roots(&self) -> DistinguishedRoots {
        let theta = self.highest_root();
        if self.rank() == 1 {
            return DistinguishedRoots {
                theta,
                theta_plus: None,
                k_index: None,
                theta_plus_plus: None,
                delta0: None,
                boundary: None,
            };
        }
        let tw = self.to_weight(&theta);
        let delta0: Vec<usize> = (0..self.rank()).filter(|&i| tw[i] == 0).collect();
        let boundary: Vec<usize> = (0..self.rank()).filter(|&i| tw[i] != 0).collect();
        let (theta_plus, k_index, theta_plus_plus) = match self.short_triple(&(0..self.rank()).collect::<Vec<_>>()) {
            Some((tp, k, tpp)) => (Some(tp), Some(k), Some(tpp)),
            None => (None, None, None),
        };
        DistinguishedRoots { theta, theta_plus, k_index, theta_plus_plus, delta0: Some(delta0), boundary: Some(boundary) }
    }

    /// Positive roots supported on `subset`.
    pub fn subsystem_roots(&self, subset: &[usize]) -> Vec<RootVector> {
        self.positive
            .iter()
            .filter(|a| (0..self.rank()).all(|i| a[i] == 0 || subset.contains(&i)))
            .cloned()
            .collect()
    }

    /// Connected components of the Dynkin subdiagram on `subset`, each sorted.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut left: Vec<usize> = subset.to_vec();
        left.sort_unstable();
        left.dedup();
        let mut out = Vec::new();
        while let Some(start) = left.first().copied() {
            let mut comp = vec![start];
            let mut stack = vec![start];
            left.retain(|&x| x != start);
            while let Some(v) = stack.pop() {
                let nbrs: Vec<usize> = left.iter().copied().filter(|&u| self.cartan[v][u] != 0).collect();
                for u in nbrs {
                    left.retain(|&x| x != u);
                    comp.push(u);
                    stack.push(u);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `(theta+, k, theta++)` of the irreducible subsystem on `comp`, if it has two root lengths.
    fn short_triple(&self, comp: &[usize]) -> Option<(RootVector, usize, RootVector)> {
        let roots = self.subsystem_roots(comp);
        let norms: Vec<i64> = roots.iter().map(|a| self.norms[self.index[a]]).collect();
        let min = *norms.iter().min()?;
        let max = *norms.iter().max()?;
        if min == max {
            return None;
        }
        let tp = roots.iter().zip(&norms).filter(|(_, &n)| n == min).map(|(a, _)| a).max_by_key(|a| a.height())?.clone();
        let ks: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&k| {
                let mut b = tp.clone();
                b.0[k] += 1;
                self.index.contains_key(&b)
            })
            .collect();
        assert_eq!(ks.len(), 1, "theta+ + alpha_k must be a root for exactly one k");
        let k = ks[0];
        let mut b = tp.clone();
        b.0[k] += 1;
        let tpp = self.reflect_root(&b, k);
        Some((tp, k, tpp))
    }

    /// Distinguished roots of the subsystem spanned by `subset`, one entry per component.
    pub fn subsystem_distinguished(&self, subset: &[usize]) -> Vec<ComponentRoots> {
        self.components(subset)
            .into_iter()
            .map(|comp| {
                let theta = self.subsystem_roots(&comp).into_iter().max_by_key(|a| a.height()).unwrap();
                let (theta_plus, k_index, theta_plus_plus) = match self.short_triple(&comp) {
                    Some((a, k, b)) => (Some(a), Some(k), Some(b)),
                    None => (None, None, None),
                };
                ComponentRoots { simple: comp, theta, theta_plus, k_index, theta_plus_plus }
            })
            .collect()
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `theta`, the short-root triple, and the `theta`-orthogonal simple roots.
///
/// `theta_plus`, `k_index` and `theta_plus_plus` exist only with two root
/// lengths. `delta0` and `boundary` are absent in rank one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedRoots {
    pub theta: RootVector,
    pub theta_plus: Option<RootVector>,
    pub k_index: Option<usize>,
    pub theta_plus_plus: Option<RootVector>,
    pub delta0: Option<Vec<usize>>,
    pub boundary: Option<Vec<usize>>,
}

/// Distinguished roots of one irreducible component of a subsystem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRoots {
    pub simple: Vec<usize>,
    pub theta: RootVector,
    pub theta_plus: Option<RootVector>,
    pub k_index: Option<usize>,
    pub theta_plus_plus: Option<RootVector>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_columns_are_simple_roots() {
        for t in CartanType::all_up_to(8) {
            let rs = RootSystem::new(t);
            for j in 0..t.rank() {
                let w = rs.to_weight(&rs.simple_root(j));
                let col: Vec<i64> = (0..t.rank()).map(|i| rs.cartan_matrix()[i][j]).collect();
                assert_eq!(w.0, col);
                assert_eq!(rs.to_root(&w), Some(rs.simple_root(j)));
            }
        }
    }

    #[test]
    fn symmetrized_cartan_is_symmetric() {
        for t in CartanType::all_up_to(8) {
            let c = t.cartan_matrix();
            let d = t.symmetrizer();
            for i in 0..t.rank() {
                for j in 0..t.rank() {
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i], "{t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rejects_inadmissible() {
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::A, 0).is_err());
    }
}
