//! Stabilizer subgroups of `S_n` and their isomorphism types.
//!
//! The finite subgroups of `PGL_2` are cyclic, dihedral, `A4`, `S4` and `A5`.
//! The type is read off from (order, abelian, largest element order):
//!
//! | order | abelian | max order | type            |
//! |-------|---------|-----------|-----------------|
//! | 1     | yes     | 1         | trivial         |
//! | k     | yes     | k         | `C_k`           |
//! | 4     | yes     | 2         | `D_2` (Klein)   |
//! | 2k    | no      | k         | `D_k`, checked  |
//! | 12    | no      | 3         | `A4`            |
//! | 24    | no      | 4         | `S4`            |
//! | 60    | no      | 5         | `A5`            |
//!
//! `D_1` has order 2 and is reported as `C_2`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use super::config::{affine_self_maps, mobius_self_maps, EigenConfig, Flavor, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupClass {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    A4,
    S4,
    A5,
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupClass::Trivial => write!(f, "trivial"),
            GroupClass::Cyclic(k) => write!(f, "C{k}"),
            GroupClass::Dihedral(k) => write!(f, "D{k}"),
            GroupClass::A4 => write!(f, "A4"),
            GroupClass::S4 => write!(f, "S4"),
            GroupClass::A5 => write!(f, "A5"),
        }
    }
}

pub fn identity(n: usize) -> Permutation {
    (0..n).collect()
}

/// `(p ∘ q)(i) = p(q(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Permutation {
    q.iter().map(|&i| p[i]).collect()
}

pub fn invert(p: &Permutation) -> Permutation {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn element_order(p: &Permutation) -> usize {
    let id = identity(p.len());
    let mut q = p.clone();
    let mut k = 1;
    while q != id {
        q = compose(p, &q);
        k += 1;
    }
    k
}

/// Disjoint-cycle notation, 1-based: `(1 4)(2 3)`.
pub fn cycle_string(p: &Permutation) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut j = p[start];
        while j != start {
            cyc.push(j + 1);
            seen[j] = true;
            j = p[j];
        }
        let parts: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("({})", parts.join(" ")));
    }
    if s.is_empty() {
        s.push_str("()");
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: BTreeSet<Permutation>,
    classification: Option<GroupClass>,
}

impl PermutationGroup {
    /// Closure of `gens` under composition.
    pub fn generate(degree: usize, gens: &[Permutation]) -> PermutationGroup {
        let elements = closure(degree, gens);
        let generators = minimal_generators(degree, &elements);
        let classification = classify(&elements);
        PermutationGroup { degree, generators, elements, classification }
    }

    /// A group from a full element list; errors unless it is closed and contains the identity.
    pub fn from_elements(degree: usize, elems: Vec<Permutation>) -> Result<PermutationGroup> {
        let set: BTreeSet<Permutation> = elems.into_iter().collect();
        if !set.contains(&identity(degree)) {
            return Err(Error::Contradiction("stabilizer misses the identity".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&compose(a, b)) {
                    return Err(Error::Contradiction("stabilizer is not closed under composition".into()));
                }
            }
        }
        let generators = minimal_generators(degree, &set);
        let classification = classify(&set);
        Ok(PermutationGroup { degree, generators, elements: set, classification })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    /// `None` when the group is not a finite subgroup type of `PGL_2`.
    pub fn classification(&self) -> Option<GroupClass> {
        self.classification
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|a| self.elements.iter().all(|b| compose(a, b) == compose(b, a)))
    }

    /// Conjugate by relabeling: `sigma ∘ g ∘ sigma^{-1}`.
    pub fn conjugate(&self, sigma: &Permutation) -> PermutationGroup {
        let si = invert(sigma);
        let elems: Vec<Permutation> = self.elements.iter().map(|g| compose(sigma, &compose(g, &si))).collect();
        PermutationGroup::from_elements(self.degree, elems).expect("conjugate of a group is a group")
    }
}

fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    let id = identity(degree);
    set.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if set.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// Greedy generating set: largest element orders first.
fn minimal_generators(degree: usize, elements: &BTreeSet<Permutation>) -> Vec<Permutation> {
    let mut by_order: Vec<(usize, &Permutation)> = elements.iter().map(|p| (element_order(p), p)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(b.1)));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = closure(degree, &gens);
    for (_, p) in by_order {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(p) {
            gens.push(p.clone());
            span = closure(degree, &gens);
        }
    }
    gens
}

fn classify(elements: &BTreeSet<Permutation>) -> Option<GroupClass> {
    let order = elements.len();
    let orders: Vec<usize> = elements.iter().map(element_order).collect();
    let max = *orders.iter().max().unwrap();
    let abelian = elements.iter().all(|a| elements.iter().all(|b| compose(a, b) == compose(b, a)));
    if order == 1 {
        return Some(GroupClass::Trivial);
    }
    if abelian {
        return match (order, max) {
            (o, m) if o == m => Some(GroupClass::Cyclic(o)),
            (4, 2) => Some(GroupClass::Dihedral(2)),
            _ => None,
        };
    }
    if 2 * max == order {
        // dihedral iff everything outside a maximal cyclic subgroup is an involution
        let (idx, _) = orders.iter().enumerate().find(|(_, &o)| o == max).unwrap();
        let c = elements.iter().nth(idx).unwrap();
        let mut cyc: HashSet<Permutation> = HashSet::new();
        let mut x = c.clone();
        for _ in 0..max {
            cyc.insert(x.clone());
            x = compose(c, &x);
        }
        let dihedral = elements.iter().zip(&orders).all(|(p, &o)| cyc.contains(p) || o == 2);
        return if dihedral { Some(GroupClass::Dihedral(max)) } else { None };
    }
    match (order, max) {
        (12, 3) => Some(GroupClass::A4),
        (24, 4) => Some(GroupClass::S4),
        (60, 5) => Some(GroupClass::A5),
        _ => None,
    }
}

/// Permutations induced by affine self-maps; must be cyclic.
pub fn stab_affine(c: &EigenConfig) -> Result<PermutationGroup> {
    let perms: Vec<Permutation> = affine_self_maps(c)?.into_iter().map(|(_, p)| p).collect();
    let g = PermutationGroup::from_elements(c.len(), perms)?;
    match g.classification() {
        Some(GroupClass::Trivial) | Some(GroupClass::Cyclic(_)) => Ok(g),
        other => Err(Error::Contradiction(format!("affine stabilizer of {c} is not cyclic: {other:?}"))),
    }
}

/// Permutations induced by Möbius self-maps; must be a finite subgroup type of `PGL_2`.
pub fn stab_mobius(c: &EigenConfig) -> Result<PermutationGroup> {
    let perms: Vec<Permutation> = mobius_self_maps(c)?.into_iter().map(|(_, p)| p).collect();
    let g = PermutationGroup::from_elements(c.len(), perms)?;
    if g.classification().is_none() {
        return Err(Error::Contradiction(format!("Möbius stabilizer of {c} has order {} outside the finite PGL2 list", g.order())));
    }
    Ok(g)
}

/// Automorphism-group data of the Hessenberg divisor attached to `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutReport {
    pub flavor: Flavor,
    pub n: usize,
    /// The identity component is a torus of this dimension.
    pub torus_dim: usize,
    pub stabilizer: PermutationGroup,
    /// `2 |stabilizer|`: the stabilizer times the involution.
    pub component_group_order: usize,
    pub generators: Vec<String>,
    /// Set when `n < 4`, where the automorphism statement is not available.
    pub outside_theorem_range: bool,
}

pub fn aut_report(c: &EigenConfig, flavor: Flavor) -> Result<AutReport> {
    let stabilizer = match flavor {
        Flavor::X => stab_affine(c)?,
        Flavor::Y => stab_mobius(c)?,
    };
    let n = c.len();
    let mut generators: Vec<String> = stabilizer.generators().iter().map(cycle_string).collect();
    generators.push("iota".into());
    Ok(AutReport {
        flavor,
        n,
        torus_dim: n.saturating_sub(1),
        component_group_order: 2 * stabilizer.order(),
        stabilizer,
        generators,
        outside_theorem_range: n < 4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> EigenConfig {
        EigenConfig::parse(s).unwrap()
    }

    #[test]
    fn affine_stabilizers() {
        let g = stab_affine(&cfg("1,2,3,4")).unwrap();
        assert_eq!(g.classification(), Some(GroupClass::Cyclic(2)));
        assert_eq!(g.generators(), &[vec![3, 2, 1, 0]]);
        assert_eq!(cycle_string(&g.generators()[0]), "(1 4)(2 3)");
        assert_eq!(stab_affine(&cfg("0,1,2,4")).unwrap().classification(), Some(GroupClass::Trivial));
        assert_eq!(stab_affine(&cfg("0,1,2,3,4,5")).unwrap().classification(), Some(GroupClass::Cyclic(2)));
    }

    #[test]
    fn mobius_stabilizers() {
        let g = stab_mobius(&cfg("0,1,-1,inf")).unwrap();
        assert_eq!((g.order(), g.classification()), (8, Some(GroupClass::Dihedral(4))));
        let c = cfg("0,1,2,4");
        assert!(stab_affine(&c).unwrap().is_subgroup_of(&stab_mobius(&c).unwrap()));
    }

    #[test]
    fn aut_reports() {
        let r = aut_report(&cfg("1,2,3,4"), Flavor::X).unwrap();
        assert_eq!((r.torus_dim, r.component_group_order), (3, 4));
        assert_eq!(aut_report(&cfg("0,1,2,4"), Flavor::X).unwrap().component_group_order, 2);
        assert_eq!(aut_report(&cfg("0,1,-1,inf"), Flavor::Y).unwrap().component_group_order, 16);
        assert!(aut_report(&cfg("0,1,2"), Flavor::X).unwrap().outside_theorem_range);
    }

    #[test]
    fn classification_table() {
        let s3 = PermutationGroup::generate(3, &[vec![1, 2, 0], vec![1, 0, 2]]);
        assert_eq!(s3.classification(), Some(GroupClass::Dihedral(3)));
        let a4 = PermutationGroup::generate(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]);
        assert_eq!(a4.classification(), Some(GroupClass::A4));
        let s4 = PermutationGroup::generate(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]);
        assert_eq!(s4.classification(), Some(GroupClass::S4));
        let a5 = PermutationGroup::generate(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]);
        assert_eq!((a5.order(), a5.classification()), (60, Some(GroupClass::A5)));
        let c2c2c2 = PermutationGroup::generate(6, &[vec![1, 0, 2, 3, 4, 5], vec![0, 1, 3, 2, 4, 5], vec![0, 1, 2, 3, 5, 4]]);
        assert_eq!(c2c2c2.classification(), None);
    }
}
