use std::collections::BTreeSet;

use hessdeform_core::rootsys::{CartanType, Family, RootSystem, RootVector, WeightVector};

fn rs(f: Family, r: usize) -> RootSystem {
    RootSystem::new(CartanType::new(f, r).unwrap())
}

/// `sum c_i alpha_i` from 1-based `(index, coeff)` pairs.
fn root(r: usize, terms: &[(usize, i64)]) -> RootVector {
    let mut v = RootVector::zero(r);
    for &(i, c) in terms {
        v.0[i - 1] += c;
    }
    v
}

fn classical_count(t: CartanType) -> usize {
    let r = t.rank();
    match t.family() {
        Family::A => r * (r + 1) / 2,
        Family::B | Family::C => r * r,
        Family::D => r * (r - 1),
        Family::E => [36, 63, 120][r - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

#[test]
fn positive_root_counts() {
    for t in CartanType::all_up_to(8) {
        assert_eq!(rs(t.family(), t.rank()).num_positive(), classical_count(t), "{t}");
    }
    for r in 9..=12 {
        assert_eq!(rs(Family::A, r).num_positive(), r * (r + 1) / 2);
        assert_eq!(rs(Family::B, r).num_positive(), r * r);
        assert_eq!(rs(Family::D, r).num_positive(), r * (r - 1));
    }
}

/// Rank-two closure oracle: iterate simple reflections on `c a1 + d a2` until stable.
#[test]
fn rank_two_reflection_closure() {
    for (f, expect) in [(Family::A, 3), (Family::B, 4), (Family::C, 4), (Family::G, 6)] {
        let s = rs(f, 2);
        let c = s.cartan_matrix().to_vec();
        let mut set: BTreeSet<(i64, i64)> = [(1, 0), (0, 1)].into_iter().collect();
        loop {
            let mut next = set.clone();
            for &(a, b) in &set {
                // <v, alpha_i^vee> = sum_j C[i][j] v_j
                let p0 = c[0][0] * a + c[0][1] * b;
                let p1 = c[1][0] * a + c[1][1] * b;
                next.insert((a - p0, b));
                next.insert((a, b - p1));
            }
            if next == set {
                break;
            }
            set = next;
        }
        let pos: BTreeSet<(i64, i64)> = set.into_iter().filter(|&(a, b)| a >= 0 && b >= 0).collect();
        let got: BTreeSet<(i64, i64)> = s.positive_roots().iter().map(|v| (v[0], v[1])).collect();
        assert_eq!(pos.len(), expect);
        assert_eq!(got, pos, "{f:?}2");
    }
}

#[test]
fn root_string_closure_and_unique_maximum() {
    for t in CartanType::all_up_to(8) {
        let s = rs(t.family(), t.rank());
        let r = s.rank();
        for a in s.positive_roots() {
            let aw = s.to_weight(a);
            for i in 0..r {
                let ai = s.simple_root(i);
                if aw[i] > 0 && a != &ai {
                    assert!(s.is_positive_root(&(a - &ai)), "{t}: {} - a{}", a.pretty(), i + 1);
                }
            }
        }
        let maximal: Vec<&RootVector> = s.positive_roots().iter().filter(|a| (0..r).all(|i| !s.is_root(&(*a + &s.simple_root(i))))).collect();
        assert_eq!(maximal, vec![&s.highest_root()], "{t}");
    }
}

#[test]
fn pairings_and_heights() {
    for t in CartanType::all_up_to(8) {
        let s = rs(t.family(), t.rank());
        let rho = s.rho();
        assert_eq!(rho, WeightVector(vec![1; s.rank()]));
        for i in 0..s.rank() {
            assert_eq!(s.pairing(&rho, &s.simple_root(i)).unwrap(), 1);
            assert_eq!(s.height(&s.simple_root(i)), 1);
        }
        let theta = s.highest_root();
        assert_eq!(s.pairing(&s.to_weight(&theta), &theta).unwrap(), 2);
        // coxeter number: |Phi| / rank
        assert_eq!(s.coxeter_number() as usize, 2 * s.num_positive() / s.rank(), "{t}");
        for a in s.all_roots() {
            assert_eq!(s.to_root(&s.to_weight(&a)), Some(a.clone()));
        }
    }
    let a3 = rs(Family::A, 3);
    assert_eq!(a3.pairing(&a3.to_weight(&a3.highest_root()), &a3.simple_root(0)).unwrap(), 1);
    assert_eq!(rs(Family::G, 2).highest_root(), root(2, &[(1, 3), (2, 2)]));
    assert_eq!(rs(Family::G, 2).height(&rs(Family::G, 2).highest_root()), 5);
    assert!(a3.pairing(&a3.rho(), &root(3, &[(1, 1), (3, 1)])).is_err());
}

#[test]
fn simply_laced_heights_agree() {
    for t in CartanType::all_up_to(8).into_iter().filter(|t| t.is_simply_laced()) {
        let s = rs(t.family(), t.rank());
        for a in s.positive_roots() {
            assert_eq!(s.height(a), s.coroot_height(a).unwrap());
            assert!(s.is_long(a).unwrap() && s.is_short(a).unwrap());
        }
    }
}

#[test]
fn length_flags_are_weyl_invariant() {
    for t in CartanType::all_up_to(8) {
        let s = rs(t.family(), t.rank());
        for a in s.all_roots() {
            let short = s.is_short(&a).unwrap();
            assert!(s.is_long(&a).unwrap() || short);
            for i in 0..s.rank() {
                let b = s.reflect_root(&a, i);
                assert!(s.is_root(&b));
                assert_eq!(s.is_short(&b).unwrap(), short, "{t}");
            }
        }
    }
}

/// `i0` read from the extended Dynkin diagrams; type A uses `{1, r}`.
fn golden_boundary(t: CartanType) -> Vec<usize> {
    let r = t.rank();
    match (t.family(), r) {
        (Family::A, _) => vec![1, r],
        (Family::B, _) | (Family::D, _) => vec![2],
        (Family::C, _) => vec![1],
        (Family::E, 6) => vec![2],
        (Family::E, 7) => vec![1],
        (Family::E, 8) => vec![8],
        (Family::F, _) => vec![1],
        (Family::G, _) => vec![2],
        _ => unreachable!(),
    }
}

#[test]
fn delta0_matches_extended_diagrams() {
    for t in CartanType::all_up_to(8).into_iter().filter(|t| t.rank() >= 2) {
        let s = rs(t.family(), t.rank());
        let d = s.distinguished_roots();
        let boundary: Vec<usize> = d.boundary.clone().unwrap().iter().map(|i| i + 1).collect();
        let mut golden = golden_boundary(t);
        golden.dedup();
        assert_eq!(boundary, golden, "{t}");
        let delta0: Vec<usize> = d.delta0.unwrap().iter().map(|i| i + 1).collect();
        let expect: Vec<usize> = (1..=t.rank()).filter(|i| !golden.contains(i)).collect();
        assert_eq!(delta0, expect, "{t}");
    }
    assert!(rs(Family::A, 1).distinguished_roots().delta0.is_none());
}

#[test]
fn short_triple_rows() {
    let c3 = rs(Family::C, 3);
    let d = c3.distinguished_roots();
    assert_eq!(d.theta_plus, Some(root(3, &[(1, 1), (2, 2), (3, 1)])));
    assert_eq!(d.k_index, Some(0));
    assert_eq!(d.theta_plus_plus, Some(root(3, &[(2, 2), (3, 1)])));
    assert_eq!(c3.height(d.theta_plus.as_ref().unwrap()), 4);
    for t in CartanType::all_up_to(8) {
        let s = rs(t.family(), t.rank());
        let d = s.distinguished_roots();
        assert_eq!(d.theta_plus.is_some(), !t.is_simply_laced(), "{t}");
        if let (Some(tp), Some(k), Some(tpp)) = (d.theta_plus, d.k_index, d.theta_plus_plus) {
            let b = &tp + &s.simple_root(k);
            assert!(s.is_root(&b));
            assert_eq!(s.reflect_root(&b, k), tpp);
            assert!(s.is_short(&tp).unwrap());
        }
    }
}

/// `theta_0` as the sum of the component maxima, with `(theta_0^+, theta_0^{++})` where listed.
#[test]
fn theta0_golden_table() {
    let sum_thetas = |s: &RootSystem| {
        let d0 = s.distinguished_roots().delta0.unwrap();
        s.subsystem_distinguished(&d0).iter().fold(RootVector::zero(s.rank()), |acc, c| &acc + &c.theta)
    };
    let pluses = |s: &RootSystem| {
        let d0 = s.distinguished_roots().delta0.unwrap();
        s.subsystem_distinguished(&d0).into_iter().find_map(|c| c.theta_plus.map(|p| (p, c.theta_plus_plus.unwrap())))
    };
    for r in 3..=8 {
        let a = rs(Family::A, r);
        assert_eq!(sum_thetas(&a), root(r, &(2..r).map(|i| (i, 1)).collect::<Vec<_>>()));
        let b = rs(Family::B, r);
        let mut terms = vec![(1, 1), (3, 1)];
        terms.extend((4..=r).map(|i| (i, 2)));
        assert_eq!(sum_thetas(&b), root(r, &terms), "B{r}");
        // for B3 both components of Delta_0 have rank one and the row degenerates
        if r >= 4 {
            assert_eq!(pluses(&b), Some((root(r, &(3..=r).map(|i| (i, 1)).collect::<Vec<_>>()), root(r, &(3..r).map(|i| (i, 1)).collect::<Vec<_>>()))), "B{r}");
        }
        let c = rs(Family::C, r);
        let mut terms: Vec<(usize, i64)> = (2..r).map(|i| (i, 2)).collect();
        terms.push((r, 1));
        assert_eq!(sum_thetas(&c), root(r, &terms), "C{r}");
        let mut tp: Vec<(usize, i64)> = vec![(2, 1)];
        tp.extend((3..r).map(|i| (i, 2)));
        tp.push((r, 1));
        let mut tpp: Vec<(usize, i64)> = (3..r).map(|i| (i, 2)).collect();
        tpp.push((r, 1));
        assert_eq!(pluses(&c), Some((root(r, &tp), root(r, &tpp))), "C{r}");
        if r >= 5 {
            let d = rs(Family::D, r);
            let mut terms = vec![(1, 1), (3, 1)];
            terms.extend((4..=r - 2).map(|i| (i, 2)));
            terms.extend([(r - 1, 1), (r, 1)]);
            assert_eq!(sum_thetas(&d), root(r, &terms), "D{r}");
        }
    }
    assert_eq!(sum_thetas(&rs(Family::D, 4)), root(4, &[(1, 1), (3, 1), (4, 1)]));
    assert_eq!(sum_thetas(&rs(Family::C, 2)), root(2, &[(2, 1)]));
    assert_eq!(sum_thetas(&rs(Family::E, 6)), root(6, &[(1, 1), (3, 1), (4, 1), (5, 1), (6, 1)]));
    assert_eq!(sum_thetas(&rs(Family::E, 7)), root(7, &[(2, 1), (3, 1), (4, 2), (5, 2), (6, 2), (7, 1)]));
    assert_eq!(sum_thetas(&rs(Family::E, 8)), root(8, &[(1, 2), (2, 2), (3, 3), (4, 4), (5, 3), (6, 2), (7, 1)]));
    let f4 = rs(Family::F, 4);
    assert_eq!(sum_thetas(&f4), root(4, &[(2, 1), (3, 2), (4, 2)]));
    assert_eq!(pluses(&f4), Some((root(4, &[(2, 1), (3, 2), (4, 1)]), root(4, &[(2, 1), (3, 2)]))));
    assert_eq!(sum_thetas(&rs(Family::G, 2)), root(2, &[(1, 1)]));
}

#[test]
fn height_p_range() {
    for t in CartanType::all_up_to(8).into_iter().filter(|t| t.rank() >= 2) {
        let s = rs(t.family(), t.rank());
        let d0 = s.distinguished_roots().delta0.unwrap();
        assert_eq!(s.height_p(&d0, &s.highest_root()), 2, "{t}");
        for a in s.all_roots() {
            assert!((-2..=2).contains(&s.height_p(&d0, &a)));
        }
    }
    let a4 = rs(Family::A, 4);
    let d0 = a4.distinguished_roots().delta0.unwrap();
    assert_eq!(a4.height_p(&d0, &(&a4.highest_root() - &a4.simple_root(0))), 1);
    let c2 = rs(Family::C, 2);
    let d0 = c2.distinguished_roots().delta0.unwrap();
    assert_eq!(c2.height_p(&d0, &-c2.highest_root()), -2);
}

#[test]
fn inadmissible_types_rejected() {
    for (f, r) in [(Family::A, 0), (Family::B, 1), (Family::C, 1), (Family::D, 3), (Family::E, 5), (Family::E, 9), (Family::F, 3), (Family::G, 3)] {
        assert!(CartanType::new(f, r).is_err(), "{f:?}{r}");
    }
}
