use std::collections::HashSet;

use num_bigint::BigInt;
use partition_kernels::compositions::{count, enumerate};
use partition_kernels::exactnum::{beta_even, ExactRational};
use partition_kernels::kernels::{
    hessenberg_determinant, kernel_compositions, kernel_determinant, kernel_recursive,
};
use partition_kernels::sequences::{faulhaber_check, g_bruteforce, g_closed};
use partition_kernels::specfun::{eval_digamma, eval_hurwitz_expansion, TruncationParams};
use partition_kernels::{KernelCache, KernelKind};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = KernelKind> {
    prop_oneof![Just(KernelKind::B), Just(KernelKind::E)]
}

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| ExactRational::new(p, q).unwrap())
}

/// Lower-Hessenberg matrices with arbitrary rational entries on and below
/// the superdiagonal.
fn hessenberg() -> impl Strategy<Value = Vec<Vec<ExactRational>>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(small_rational(), n), n).prop_map(move |m| {
            m.into_iter()
                .enumerate()
                .map(|(i, row)| {
                    row.into_iter()
                        .enumerate()
                        .map(|(j, v)| if j > i + 1 { ExactRational::zero() } else { v })
                        .collect()
                })
                .collect()
        })
    })
}

/// Laplace expansion along the first row.
fn cofactor_determinant(m: &[Vec<ExactRational>]) -> ExactRational {
    if m.is_empty() {
        return ExactRational::one();
    }
    let mut total = ExactRational::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<ExactRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a * &cofactor_determinant(&minor);
        if j % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compositions_are_complete_and_distinct(n in 1usize..=14) {
        let all: Vec<Vec<usize>> = enumerate(n).unwrap().map(|c| c.parts().to_vec()).collect();
        prop_assert_eq!(BigInt::from(all.len()), BigInt::from(count(n).unwrap()));
        prop_assert_eq!(all.len(), 1usize << (n - 1));
        prop_assert!(all.iter().all(|p| p.iter().sum::<usize>() == n && p.iter().all(|&b| b >= 1)));
        let distinct: HashSet<_> = all.iter().collect();
        prop_assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn beta_is_symmetric(n in 1usize..=20, m in 1usize..=20) {
        prop_assert_eq!(beta_even(n, m).unwrap(), beta_even(m, n).unwrap());
    }

    #[test]
    fn three_methods_agree(kind in kind(), n in 1usize..=14) {
        let cache = KernelCache::new(kind);
        let r = kernel_recursive(kind, n, &cache).unwrap();
        prop_assert_eq!(&r, &kernel_compositions(kind, n).unwrap());
        prop_assert_eq!(&r, &kernel_determinant(kind, n).unwrap());
    }

    #[test]
    fn kernel_sign_alternates(kind in kind(), n in 1usize..=30) {
        let cache = KernelCache::new(kind);
        let expected = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(cache.get(n).signum(), expected);
    }

    #[test]
    fn hessenberg_recurrence_matches_cofactors(m in hessenberg()) {
        prop_assert_eq!(hessenberg_determinant(&m).unwrap(), cofactor_determinant(&m));
    }

    #[test]
    fn g_routes_agree(n in 1usize..=10, m0 in 1usize..=5) {
        let cache = KernelCache::new(KernelKind::B);
        prop_assert_eq!(g_closed(n, m0, &cache).unwrap(), g_bruteforce(n, m0).unwrap());
    }

    #[test]
    fn beta_scaled_g_ignores_m0(n in 1usize..=10, m0 in 1usize..=5, m1 in 1usize..=5) {
        let cache = KernelCache::new(KernelKind::B);
        let at = |m: usize| beta_even(n, m).unwrap() * g_closed(n, m, &cache).unwrap();
        prop_assert_eq!(at(m0), at(m1));
    }

    #[test]
    fn faulhaber_sums(n in 2usize..=20, r in 1usize..=12) {
        let cache = KernelCache::new(KernelKind::B);
        prop_assert!(faulhaber_check(n, r, &cache).unwrap());
    }

    #[test]
    fn cache_file_round_trips(kind in kind(), n in 0usize..=20) {
        let cache = KernelCache::new(kind);
        cache.get(n);
        let path = std::env::temp_dir()
            .join(format!("pk-prop-{}-{}-{n}.txt", std::process::id(), kind.name()));
        cache.save(&path).unwrap();
        let loaded = KernelCache::load(kind, &path).unwrap();
        std::fs::remove_file(&path).unwrap();
        prop_assert_eq!(loaded.values_upto(n), cache.values_upto(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn digamma_within_twice_bound(half_steps in 10u32..=100, n in 1usize..=6) {
        // integers and half-integers carry closed-form references
        let x = half_steps as f64 / 2.0;
        let r = eval_digamma(x, &TruncationParams::with_terms(n).unwrap()).unwrap();
        prop_assert!(r.within_bound(2.0).unwrap(), "x = {x}, N = {n}");
    }

    #[test]
    fn hurwitz_within_twice_bound(x in 5.0f64..50.0, m0 in 1usize..=3, n in 1usize..=6) {
        let r = eval_hurwitz_expansion(m0, x, &TruncationParams::with_terms(n).unwrap()).unwrap();
        prop_assert!(r.within_bound(2.0).unwrap(), "x = {x}, m0 = {m0}, N = {n}");
    }
}
