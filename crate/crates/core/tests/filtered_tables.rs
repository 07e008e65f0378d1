use std::collections::BTreeSet;

use hessdeform_core::bwb::euler_multiset;
use hessdeform_core::filtered::{
    build_twisted_pair, deformation_table_x, deformation_table_y, degree_sums, enumerate_regular, enumerate_regular_shift, middle_is_acyclic,
    resolve_cohomology, rule_euler_forcing, rule_uniform_degree, verify_regular_table, Case, CaseTag,
};
use hessdeform_core::rootsys::{CartanType, Family, RootSystem, RootVector};
use num_bigint::BigInt;

fn all_types() -> Vec<RootSystem> {
    CartanType::all_up_to(8).into_iter().map(RootSystem::new).collect()
}

fn rs(f: Family, r: usize) -> RootSystem {
    RootSystem::new(CartanType::new(f, r).unwrap())
}

fn root(r: usize, terms: &[(usize, i64)]) -> RootVector {
    let mut v = RootVector::zero(r);
    for &(i, c) in terms {
        v.0[i - 1] += c;
    }
    v
}

#[test]
fn twisted_pair_weights() {
    for s in all_types() {
        let theta = s.to_weight(&s.highest_root());
        let mut expect: BTreeSet<_> = BTreeSet::new();
        for a in s.all_roots() {
            expect.insert(&s.to_weight(&a) - &theta);
        }
        for case in [Case::Borel, Case::Parabolic] {
            if case == Case::Parabolic && s.rank() < 2 {
                assert!(build_twisted_pair(&s, case).is_err());
                continue;
            }
            let p = build_twisted_pair(&s, case).unwrap();
            let mut union = p.quotient_side.clone();
            union.extend(&p.sub_side);
            assert_eq!(union.total() as usize, 2 * s.num_positive() + s.rank());
            assert_eq!(union.multiplicity(&-theta.clone()), s.rank() as u64);
            let distinct: BTreeSet<_> = union.iter().map(|(w, _)| w.clone()).filter(|w| w != &-theta.clone()).collect();
            let mut expect_no_torus = expect.clone();
            expect_no_torus.remove(&-theta.clone());
            assert_eq!(distinct, expect_no_torus);
        }
        let borel = build_twisted_pair(&s, Case::Borel).unwrap();
        assert_eq!(borel.quotient_side.total() as usize, s.num_positive());
    }
    let c2 = rs(Family::C, 2);
    let p = build_twisted_pair(&c2, Case::Parabolic).unwrap();
    let theta = c2.highest_root();
    let expect: BTreeSet<_> = [root(2, &[(1, 1)]), root(2, &[(1, 1), (2, 1)]), theta.clone()].iter().map(|a| c2.to_weight(&(a - &theta))).collect();
    assert_eq!(p.quotient_side.iter().map(|(w, _)| w.clone()).collect::<BTreeSet<_>>(), expect);
}

#[test]
fn vanishing_theorems() {
    for s in all_types() {
        let t = s.cartan_type();
        let borel = resolve_cohomology(&s, &build_twisted_pair(&s, Case::Borel).unwrap()).unwrap();
        assert!(borel.is_exact(), "{t}");
        let expect_b: Vec<(usize, i64)> = match (t.family(), t.rank()) {
            (Family::A, 1) => vec![(0, 1)],
            (Family::A, 2) => vec![(1, 1)],
            _ => vec![],
        };
        let got: Vec<(usize, i64)> = borel.dims.iter().map(|(&i, d)| (i, i64::try_from(d).unwrap())).collect();
        assert_eq!(got, expect_b, "{t} Borel");
        if s.rank() >= 2 {
            let par = resolve_cohomology(&s, &build_twisted_pair(&s, Case::Parabolic).unwrap()).unwrap();
            assert!(par.is_exact());
            let expect_p: Vec<(usize, i64)> = if t.family() == Family::A { vec![(1, 1)] } else { vec![] };
            let got: Vec<(usize, i64)> = par.dims.iter().map(|(&i, d)| (i, i64::try_from(d).unwrap())).collect();
            assert_eq!(got, expect_p, "{t} parabolic");
        }
    }
}

#[test]
fn resolver_soundness() {
    for s in all_types() {
        let cases: &[Case] = if s.rank() >= 2 { &[Case::Borel, Case::Parabolic] } else { &[Case::Borel] };
        for &case in cases {
            let pair = build_twisted_pair(&s, case).unwrap();
            let prof = resolve_cohomology(&s, &pair).unwrap();
            let alt: BigInt = prof.dims.iter().map(|(&i, d)| if i % 2 == 0 { d.clone() } else { -d.clone() }).sum();
            assert_eq!(alt, euler_multiset(&s, &pair.quotient_side));
            assert_eq!(prof.euler, alt);
            if let (Some(r1), Ok(r3)) = (rule_uniform_degree(&s, &pair.quotient_side), rule_euler_forcing(&s, &pair)) {
                assert_eq!(r1.dims, r3.dims, "{}", s.cartan_type());
            }
            for d in degree_sums(&s, &pair.quotient_side).values() {
                assert!(d > &BigInt::from(0));
            }
        }
        assert_eq!(middle_is_acyclic(&s), s.rank() >= 2, "{}", s.cartan_type());
    }
}

#[test]
fn deformation_tables() {
    for s in all_types() {
        let t = s.cartan_type();
        let r = s.rank() as i64;
        let x = deformation_table_x(&s).unwrap();
        let expect_x = match (t.family(), t.rank()) {
            (Family::A, 1) => (0, 0),
            (Family::A, 2) => (2, 0),
            _ => (r, r - 1),
        };
        assert_eq!((x.h0, x.h1), expect_x, "{t} X");
        assert_eq!(x.normal_h0, s.dim_group() as i64 - 1);
        assert!(x.higher_vanish);
        if s.rank() < 2 {
            continue;
        }
        let y = deformation_table_y(&s).unwrap();
        let c_type = t.family() == Family::C || (t.family() == Family::B && t.rank() == 2);
        let expect_y = if t.family() == Family::A {
            (r, r - 2)
        } else if c_type {
            (r * (2 * r - 1), 0)
        } else {
            (r, r - 1)
        };
        assert_eq!((y.h0, y.h1), expect_y, "{t} Y");
    }
    let f4 = deformation_table_x(&rs(Family::F, 4)).unwrap();
    assert_eq!((f4.h0, f4.h1, f4.normal_h0), (4, 3, 51));
}

#[test]
fn regular_weights_without_shift() {
    for s in all_types() {
        let table = enumerate_regular(&s).unwrap();
        assert!(verify_regular_table(&s, &table, false));
        let d = s.distinguished_roots();
        let mut expect: BTreeSet<RootVector> = (0..s.rank()).map(|i| -s.simple_root(i)).collect();
        expect.insert(d.theta.clone());
        expect.extend(d.theta_plus.clone());
        expect.extend(d.theta_plus_plus.clone());
        let got: BTreeSet<RootVector> = table.rows.iter().map(|r| r.alpha.clone()).collect();
        assert_eq!(got, expect, "{}", s.cartan_type());
        for row in &table.rows {
            let expect_len = if row.alpha == d.theta || Some(&row.alpha) == d.theta_plus.as_ref() { 0 } else { 1 };
            assert_eq!(row.degree, expect_len);
        }
    }
}

/// Table rows keyed by 1-based root terms: `(terms, degree, case)`.
fn expected_shift_rows(t: CartanType, s: &RootSystem) -> Option<Vec<(RootVector, usize, CaseTag)>> {
    let r = t.rank();
    let theta = s.highest_root();
    let minus = |terms: &[(usize, i64)]| &theta - &root(r, terms);
    let mut rows = vec![(theta.clone(), 0, CaseTag::Case1)];
    match (t.family(), r) {
        (Family::A, 1) => return None,
        (Family::A, _) => {
            rows.push((minus(&[(1, 1)]), 1, CaseTag::Case1));
            rows.push((minus(&[(r, 1)]), 1, CaseTag::Case1));
        }
        _ => {
            let i0 = match (t.family(), r) {
                (Family::B, _) | (Family::D, _) | (Family::G, _) | (Family::E, 6) => 2,
                (Family::C, _) | (Family::F, _) | (Family::E, 7) => 1,
                (Family::E, 8) => 8,
                _ => unreachable!(),
            };
            rows.push((minus(&[(i0, 1)]), 1, CaseTag::Case1));
        }
    }
    match (t.family(), r) {
        (Family::A, 2) => {
            rows.push((-root(2, &[(1, 1)]), 2, CaseTag::Case3));
            rows.push((-root(2, &[(2, 1)]), 2, CaseTag::Case3));
            rows.push((-theta.clone(), 3, CaseTag::Case3));
        }
        (Family::A, _) => rows.push((minus(&[(1, 1), (r, 1)]), 2, CaseTag::Case2)),
        (Family::C, 2) => {
            rows.push((-root(2, &[(1, 1)]), 2, CaseTag::Case3));
            rows.push((-theta.clone(), 3, CaseTag::Case3));
        }
        // B2 is C2 with the labels swapped
        (Family::B, 2) => {
            rows.push((-root(2, &[(2, 1)]), 2, CaseTag::Case3));
            rows.push((-theta.clone(), 3, CaseTag::Case3));
        }
        (Family::C, _) => {
            let mut tp = vec![(2, 1)];
            tp.extend((3..r).map(|i| (i, 2)));
            tp.push((r, 1));
            let mut tpp: Vec<(usize, i64)> = (3..r).map(|i| (i, 2)).collect();
            tpp.push((r, 1));
            rows.push((root(r, &tp), 2, CaseTag::Case2));
            rows.push((root(r, &tpp), 3, CaseTag::Case2));
        }
        _ => {}
    }
    Some(rows)
}

#[test]
fn regular_weights_with_shift() {
    for s in all_types() {
        let t = s.cartan_type();
        let table = enumerate_regular_shift(&s).unwrap();
        assert!(verify_regular_table(&s, &table, true), "{t}");
        let Some(expect) = expected_shift_rows(t, &s) else { continue };
        let got: BTreeSet<(RootVector, usize, CaseTag)> = table.rows.iter().map(|r| (r.alpha.clone(), r.degree, r.case_tag)).collect();
        let expect: BTreeSet<_> = expect.into_iter().collect();
        assert_eq!(got, expect, "{t}");
        let d0 = s.distinguished_roots().delta0.unwrap();
        for row in &table.rows {
            assert_eq!(row.ht_p, s.height_p(&d0, &row.alpha));
            let expect_ht = match (row.case_tag, row.degree) {
                (CaseTag::Case1, 0) => 2,
                (CaseTag::Case1, _) => 1,
                (CaseTag::Case2, _) => 0,
                (CaseTag::Case3, 2) => -1,
                (CaseTag::Case3, _) => -2,
            };
            assert_eq!(row.ht_p, expect_ht, "{t} {}", row.alpha.pretty());
            assert!(row.dominant_weight.is_zero());
        }
    }
}
