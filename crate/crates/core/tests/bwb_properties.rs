use hessdeform_core::bwb::{
    bott_line, bott_parabolic, dominantize, euler_multiset, negative_pairing_count, type_a_weight, weyl_dim, BottResult, Dominantized,
    WeightMultiset,
};
use hessdeform_core::rootsys::{CartanType, Family, RootSystem, WeightVector};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_types() -> Vec<RootSystem> {
    CartanType::all_up_to(4).into_iter().map(RootSystem::new).collect()
}

fn serre_dual(rs: &RootSystem, lambda: &WeightVector) -> WeightVector {
    &(-lambda) - &rs.rho().scale(2)
}

#[test]
fn serre_duality_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for rs in small_types() {
        let np = rs.num_positive();
        for _ in 0..1000 {
            let lambda = WeightVector((0..rs.rank()).map(|_| rng.gen_range(-6..=6)).collect());
            let a = bott_line(&rs, &lambda);
            let b = bott_line(&rs, &serre_dual(&rs, &lambda));
            match (&a, &b) {
                (BottResult::Singular, BottResult::Singular) => {}
                (BottResult::Concentrated { degree: d1, dimension: n1, .. }, BottResult::Concentrated { degree: d2, dimension: n2, .. }) => {
                    assert_eq!(d1 + d2, np, "{} {lambda}", rs.cartan_type());
                    assert_eq!(n1, n2);
                }
                _ => panic!("{} {lambda}: {a:?} vs {b:?}", rs.cartan_type()),
            }
            if let Some(d) = a.degree() {
                assert_eq!(d, negative_pairing_count(&rs, &(&lambda + &rs.rho())));
            }
        }
    }
}

fn type_and_weight() -> impl Strategy<Value = (RootSystem, WeightVector)> {
    (0..small_types().len()).prop_flat_map(|i| {
        let rs = small_types().swap_remove(i);
        let r = rs.rank();
        (Just(rs), proptest::collection::vec(-8i64..=8, r).prop_map(WeightVector))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn dominant_output_and_idempotence((rs, mu) in type_and_weight()) {
        if let Dominantized::Regular { length, dominant } = dominantize(&rs, &mu) {
            prop_assert!(dominant.coords().iter().all(|&x| x >= 1));
            prop_assert_eq!(length, negative_pairing_count(&rs, &mu));
            prop_assert_eq!(dominantize(&rs, &dominant), Dominantized::Regular { length: 0, dominant: dominant.clone() });
        } else {
            // singular means some positive coroot pairs to zero
            prop_assert!(rs.positive_roots().iter().any(|a| rs.pairing(&mu, a).unwrap() == 0));
        }
    }

    #[test]
    fn euler_is_additive((rs, mu) in type_and_weight(), k in 1u64..4, j in 1u64..4) {
        let nu = &mu - &rs.rho();
        let mut a = WeightMultiset::new();
        a.insert(mu.clone(), k);
        let mut b = WeightMultiset::new();
        b.insert(nu.clone(), j);
        let mut ab = a.clone();
        ab.extend(&b);
        prop_assert_eq!(euler_multiset(&rs, &ab), euler_multiset(&rs, &a) + euler_multiset(&rs, &b));
        prop_assert_eq!(euler_multiset(&rs, &a), bott_line(&rs, &mu).euler() * BigInt::from(k));
        prop_assert_eq!(ab.total(), k + j);
    }
}

/// Semistandard tableaux of shape `lambda` with entries in `1..=n`, by backtracking cell by cell.
fn ssyt_count(lambda: &[usize], n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = lambda.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        let Some(&(r, c)) = cells.get(i) else {
            return 1;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += go(i + 1, cells, grid, n);
        }
        total
    }
    go(0, &cells, &mut grid, n)
}

fn partitions(size: usize, max_part: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=size.min(max_part)).rev() {
        for mut rest in partitions(size - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn type_a_dimension_equals_tableaux() {
    for n in 2..=5 {
        let rs = RootSystem::new(CartanType::new(Family::A, n - 1).unwrap());
        for size in 0..=6 {
            for p in partitions(size, size).into_iter().filter(|p| p.len() <= n) {
                let mut e: Vec<i64> = p.iter().map(|&x| x as i64).collect();
                e.resize(n, 0);
                let w = type_a_weight(&e);
                assert_eq!(weyl_dim(&rs, &w).unwrap(), BigInt::from(ssyt_count(&p, n)), "n={n} {p:?}");
            }
        }
    }
}

#[test]
fn weyl_dim_basics() {
    for rs in CartanType::all_up_to(8).into_iter().map(RootSystem::new) {
        assert_eq!(weyl_dim(&rs, &WeightVector::zero(rs.rank())).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(&rs, &rs.to_weight(&rs.highest_root())).unwrap(), BigInt::from(rs.dim_group()));
        for i in 0..rs.rank() {
            assert!(weyl_dim(&rs, &WeightVector::unit(rs.rank(), i)).unwrap() > BigInt::from(1));
        }
        assert!(weyl_dim(&rs, &-rs.rho()).is_err());
    }
    let g2 = RootSystem::new(CartanType::new(Family::G, 2).unwrap());
    assert_eq!(weyl_dim(&g2, &g2.to_weight(&g2.highest_root())).unwrap(), BigInt::from(14));
    let a3 = RootSystem::new(CartanType::new(Family::A, 3).unwrap());
    for k in 0..6i64 {
        let expect = (1..=3).fold(BigInt::from(1), |acc, i| acc * BigInt::from(k + i)) / BigInt::from(6);
        assert_eq!(weyl_dim(&a3, &WeightVector(vec![k, 0, 0])).unwrap(), expect);
    }
}

#[test]
fn parabolic_agrees_with_borel() {
    for rs in CartanType::all_up_to(6).into_iter().filter(|t| t.rank() >= 2).map(RootSystem::new) {
        let d0 = rs.distinguished_roots().delta0.unwrap();
        let theta = rs.to_weight(&rs.highest_root());
        let top = bott_parabolic(&rs, &d0, &theta).unwrap();
        assert_eq!(top.degree(), Some(0));
        assert_eq!(top.dimension(), BigInt::from(rs.dim_group()));
        for a in rs.all_roots() {
            let w = rs.to_weight(&a);
            if d0.iter().all(|&i| w[i] >= 0) {
                assert_eq!(bott_parabolic(&rs, &d0, &w).unwrap(), bott_line(&rs, &w));
            } else {
                assert!(bott_parabolic(&rs, &d0, &w).is_err());
            }
        }
    }
}
