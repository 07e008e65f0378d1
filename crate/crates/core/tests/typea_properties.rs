use hessdeform_core::typea::config::{affine_equivalent, canonical_point, mobius_equivalent, EigenConfig, Flavor};
use hessdeform_core::typea::group::{aut_report, compose, stab_affine, stab_mobius, GroupClass};
use hessdeform_core::typea::hessenberg::{characterize_search, closed_form_chi, euler_hessenberg_linebundle, weyl_dim_a};
use hessdeform_core::typea::matrix::{det, from_ints, mul, pencil_charpoly, pencil_form, symmetrize, transpose, Matrix};
use hessdeform_core::typea::random::{random_affine_config, random_affine_map, random_mobius_map, random_permutation, random_projective_config};
use hessdeform_core::typea::scalar::{q, qf, ProjPoint, Q};
use hessdeform_core::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg(s: &str) -> EigenConfig {
    EigenConfig::parse(s).unwrap()
}

#[test]
fn equivalence_examples() {
    let (m, _) = affine_equivalent(&cfg("1,2,3,4"), &cfg("10,20,30,40")).unwrap().unwrap();
    assert_eq!((m.a, m.b), (q(10), q(0)));
    assert!(affine_equivalent(&cfg("1,2,3,4"), &cfg("0,1,2,4")).unwrap().is_none());
    let (m, p) = mobius_equivalent(&cfg("0,1,2,inf"), &cfg("inf,1,1/2,0")).unwrap().unwrap();
    assert_eq!(m.apply(&ProjPoint::int(2)), ProjPoint::Finite(qf(1, 2)));
    assert_eq!(cfg("0,1,2,inf").reorder(&[3, 1, 2, 0]).points(), cfg("inf,1,2,0").points());
    assert_eq!(p.len(), 4);
    assert!(mobius_equivalent(&cfg("0,1,3,inf"), &cfg("0,1,4,inf")).unwrap().is_none());
    assert!(matches!(affine_equivalent(&cfg("1,2,3"), &cfg("1,2")), Err(Error::InvalidInput(_))));
    assert!(EigenConfig::parse("1,2,2").is_err());
    assert!(EigenConfig::parse("1,x").is_err());
}

/// Random triples of mutually equivalent configurations, with composed and inverted witnesses.
#[test]
fn equivalence_relation_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(4..=7);
        let c = random_affine_config(&mut rng, n);
        let m1 = random_affine_map(&mut rng);
        let m2 = random_affine_map(&mut rng);
        let c1 = c.map_affine(&m1).unwrap().reorder(&random_permutation(&mut rng, n));
        let c2 = c1.map_affine(&m2).unwrap().reorder(&random_permutation(&mut rng, n));
        assert!(affine_equivalent(&c, &c).unwrap().is_some());
        let (w01, _) = affine_equivalent(&c, &c1).unwrap().unwrap();
        let (w12, _) = affine_equivalent(&c1, &c2).unwrap().unwrap();
        assert_eq!(c1.map_affine(&w01.inverse()).unwrap().sorted(), c.sorted());
        assert_eq!(c.map_affine(&w12.compose(&w01)).unwrap().sorted(), c2.sorted());
        assert!(affine_equivalent(&c2, &c).unwrap().is_some());

        let p = random_projective_config(&mut rng, n);
        let g1 = random_mobius_map(&mut rng);
        let g2 = random_mobius_map(&mut rng);
        let p1 = p.map_mobius(&g1);
        let p2 = p1.map_mobius(&g2).reorder(&random_permutation(&mut rng, n));
        let (v01, perm) = mobius_equivalent(&p, &p1).unwrap().unwrap();
        for (i, x) in p.points().iter().enumerate() {
            assert_eq!(&v01.apply(x), &p1.points()[perm[i]]);
        }
        let (v12, _) = mobius_equivalent(&p1, &p2).unwrap().unwrap();
        assert_eq!(p1.map_mobius(&v01.inverse()).sorted(), p.sorted());
        assert_eq!(p.map_mobius(&v12.compose(&v01)).sorted(), p2.sorted());
        assert!(mobius_equivalent(&p2, &p).unwrap().is_some());
    }
}

#[test]
fn stabilizer_examples() {
    let h = stab_affine(&cfg("1,2,3,4")).unwrap();
    assert_eq!(h.classification(), Some(GroupClass::Cyclic(2)));
    assert!(h.contains(&vec![3, 2, 1, 0]));
    assert_eq!(stab_affine(&cfg("0,1,2,4")).unwrap().classification(), Some(GroupClass::Trivial));
    assert_eq!(stab_affine(&cfg("0,1,2,3,4,5")).unwrap().classification(), Some(GroupClass::Cyclic(2)));
    let k = stab_mobius(&cfg("0,1,-1,inf")).unwrap();
    assert_eq!((k.order(), k.classification()), (8, Some(GroupClass::Dihedral(4))));
    let c = cfg("0,1,2,4");
    assert!(stab_affine(&c).unwrap().is_subgroup_of(&stab_mobius(&c).unwrap()));
    // rational stand-in for a dihedral configuration: z -> 16/z and z -> 1/z symmetry
    let geo = stab_mobius(&cfg("1,2,4,8")).unwrap();
    assert!(geo.contains(&vec![3, 2, 1, 0]));
    assert!(geo.order() >= 2);
    assert_eq!(aut_report(&cfg("1,2,3,4"), Flavor::X).unwrap().component_group_order, 4);
    assert_eq!(aut_report(&cfg("1,2,3,4"), Flavor::X).unwrap().torus_dim, 3);
    assert_eq!(aut_report(&cfg("0,1,2,4"), Flavor::X).unwrap().component_group_order, 2);
    assert_eq!(aut_report(&cfg("0,1,-1,inf"), Flavor::Y).unwrap().component_group_order, 16);
    assert!(aut_report(&cfg("0,1,2"), Flavor::X).unwrap().outside_theorem_range);
}

#[test]
fn stabilizer_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..120 {
        let n = rng.gen_range(4..=8);
        let c = random_affine_config(&mut rng, n);
        let h = stab_affine(&c).unwrap();
        let k = stab_mobius(&c).unwrap();
        assert!(matches!(h.classification(), Some(GroupClass::Trivial | GroupClass::Cyclic(_))));
        assert!(k.classification().is_some());
        assert!(h.is_subgroup_of(&k), "{c}");
        // conjugation by a relabelling and a random map
        let sigma = random_permutation(&mut rng, n);
        let moved = c.map_affine(&random_affine_map(&mut rng)).unwrap().reorder(&sigma);
        let h2 = stab_affine(&moved).unwrap();
        assert_eq!((h2.order(), h2.classification()), (h.order(), h.classification()));
        let pm = c.map_mobius(&random_mobius_map(&mut rng)).reorder(&sigma);
        let k2 = stab_mobius(&pm).unwrap();
        assert_eq!((k2.order(), k2.classification()), (k.order(), k.classification()));
        // new index i holds old point sigma[i], so old labels map by sigma^{-1}
        let mut inv = vec![0; n];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        assert_eq!(h.conjugate(&inv), h2);
        for g in h.elements() {
            assert!(h.contains(&compose(g, g)));
        }
    }
}

#[test]
fn canonical_points_match_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut corpus_x = Vec::new();
    let mut corpus_y = Vec::new();
    for _ in 0..12 {
        let c = random_affine_config(&mut rng, 5);
        corpus_x.push(c.map_affine(&random_affine_map(&mut rng)).unwrap().reorder(&random_permutation(&mut rng, 5)));
        corpus_x.push(c.clone());
        let p = random_projective_config(&mut rng, 5);
        corpus_y.push(p.map_mobius(&random_mobius_map(&mut rng)));
        corpus_y.push(p);
    }
    let canon_x: Vec<_> = corpus_x.iter().map(|c| canonical_point(c, Flavor::X).unwrap()).collect();
    let canon_y: Vec<_> = corpus_y.iter().map(|c| canonical_point(c, Flavor::Y).unwrap()).collect();
    for i in 0..corpus_x.len() {
        for j in 0..corpus_x.len() {
            assert_eq!(canon_x[i] == canon_x[j], affine_equivalent(&corpus_x[i], &corpus_x[j]).unwrap().is_some());
            assert_eq!(canon_y[i] == canon_y[j], mobius_equivalent(&corpus_y[i], &corpus_y[j]).unwrap().is_some());
        }
    }
    assert_eq!(canonical_point(&cfg("10,20,30,40"), Flavor::X).unwrap(), canonical_point(&cfg("1,2,3,4"), Flavor::X).unwrap());
    let y = canonical_point(&cfg("0,1,-1,inf"), Flavor::Y).unwrap();
    assert_eq!(y.points().last(), Some(&ProjPoint::Infinity));
}

#[test]
fn line_bundle_characterization() {
    for n in [4usize, 5] {
        let hits = characterize_search(n, 3, 10).unwrap();
        let labels: Vec<Option<String>> = hits.iter().map(|h| h.label.clone()).collect();
        assert_eq!(labels, vec![Some("e1".to_string()), Some(format!("-e{n}"))], "n={n}");
    }
    assert!(characterize_search(3, 3, 10).is_err());
}

#[test]
fn euler_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(2..=6);
        let mut lam: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let k = rng.gen_range(1..=4);
        let Some(closed) = closed_form_chi(n, &lam, k) else { continue };
        assert_eq!(euler_hessenberg_linebundle(n, &lam, k).unwrap(), closed, "n={n} {lam:?} k={k}");
        checked += 1;
    }
    assert_eq!(weyl_dim_a(&[3, 0, 0, 0]).unwrap(), BigInt::from(20));
}

fn rand_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    (0..n).map(|_| (0..n).map(|_| qf(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()).collect()
}

#[test]
fn pencil_covariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let a = rand_matrix(&mut rng, n);
        let b = rand_matrix(&mut rng, n);
        let g = rand_matrix(&mut rng, n);
        let h = rand_matrix(&mut rng, n);
        let raw = pencil_form(&a, &b).unwrap();
        let moved = pencil_form(&mul(&mul(&g, &a), &h), &mul(&mul(&g, &b), &h)).unwrap();
        let factor = det(&g) * det(&h);
        assert_eq!(moved, raw.iter().map(|c| c * &factor).collect::<Vec<Q>>());
        if !factor.is_zero() {
            assert_eq!(pencil_charpoly(&mul(&g, &a), &mul(&g, &b)).unwrap(), pencil_charpoly(&a, &b).unwrap());
        }
        // u = -t, v = 1 gives det(sB - tI) = (-1)^n charpoly
        let id = from_ints(&(0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect::<Vec<_>>());
        let coeffs = pencil_form(&id, &b).unwrap();
        let t = q(3);
        let val: Q = coeffs.iter().enumerate().map(|(i, c)| c * num_traits::pow(-t.clone(), n - i)).sum();
        let shifted: Matrix = b.iter().enumerate().map(|(i, r)| r.iter().enumerate().map(|(j, x)| if i == j { &t - x } else { -x.clone() }).collect()).collect();
        let sign = if n % 2 == 0 { Q::one() } else { -Q::one() };
        assert_eq!(val, sign * det(&shifted));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn symmetrize_contract(eigs in proptest::collection::btree_set(-6i64..=6, 1..=4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = eigs.len();
        let d: Matrix = (0..n).map(|i| (0..n).map(|j| if i == j { q(*eigs.iter().nth(i).unwrap()) } else { Q::zero() }).collect()).collect();
        let p = rand_matrix(&mut rng, n);
        prop_assume!(!det(&p).is_zero());
        let pinv = hessdeform_core::typea::matrix::inverse(&p).unwrap();
        let s = mul(&mul(&p, &d), &pinv);
        let qm = symmetrize(&s).unwrap();
        prop_assert_eq!(&qm, &transpose(&qm));
        prop_assert!(!det(&qm).is_zero());
        prop_assert_eq!(mul(&qm, &s), mul(&transpose(&s), &qm));
    }
}
