use partition_kernels::exactnum::{beta_even, ExactRational};
use partition_kernels::oracles::{akiyama_tanigawa, euler_even};
use partition_kernels::sequences::{
    a_from_kb, a_recursive_table, bernoulli, euler, faulhaber_check, g_bruteforce, g_closed,
};
use partition_kernels::specfun::constants::EM_BERNOULLI;
use partition_kernels::{KernelCache, KernelKind};

#[test]
fn bernoulli_matches_akiyama_tanigawa() {
    let cache = KernelCache::new(KernelKind::B);
    let table = akiyama_tanigawa(60);
    for n in 1..=30 {
        assert_eq!(bernoulli(n, &cache).unwrap(), table[2 * n], "B_{}", 2 * n);
    }
}

#[test]
fn euler_matches_boustrophedon() {
    let cache = KernelCache::new(KernelKind::E);
    let table = euler_even(30);
    for n in 1..=30 {
        let e = euler(n, &cache).unwrap();
        assert!(e.is_integer(), "E_{} not an integer", 2 * n);
        assert_eq!(e, ExactRational::from(table[n].clone()), "E_{}", 2 * n);
    }
}

#[test]
fn coefficient_routes_agree() {
    let cache = KernelCache::new(KernelKind::B);
    let recursive = a_recursive_table(25).unwrap();
    let bern = akiyama_tanigawa(50);
    for n in 1..=25 {
        let from_kb = a_from_kb(n, &cache).unwrap();
        let scale = (ExactRational::one()
            - ExactRational::new(1, num_bigint::BigInt::from(1) << (2 * n - 1)).unwrap())
            * ExactRational::new(1, 2 * n as i64).unwrap();
        let from_oracle = &bern[2 * n] * &scale;
        assert_eq!(from_kb, recursive[n], "n = {n}");
        assert_eq!(from_kb, from_oracle, "n = {n}");
    }
}

#[test]
fn g_closed_matches_bruteforce() {
    let cache = KernelCache::new(KernelKind::B);
    for n in 1..=10 {
        for m0 in 1..=5 {
            assert_eq!(
                g_closed(n, m0, &cache).unwrap(),
                g_bruteforce(n, m0).unwrap(),
                "n = {n}, m0 = {m0}"
            );
        }
    }
}

#[test]
fn beta_scaled_g_is_independent_of_m0() {
    let cache = KernelCache::new(KernelKind::B);
    for n in 1..=10 {
        let a = a_from_kb(n, &cache).unwrap();
        for m0 in 1..=5 {
            let v = -(beta_even(n, m0).unwrap() * g_closed(n, m0, &cache).unwrap());
            assert_eq!(v, a, "n = {n}, m0 = {m0}");
        }
    }
}

#[test]
fn faulhaber_holds() {
    let cache = KernelCache::new(KernelKind::B);
    for n in 2..=20 {
        for r in 1..=12 {
            assert!(faulhaber_check(n, r, &cache).unwrap(), "n = {n}, r = {r}");
        }
    }
}

#[test]
fn pinned_tail_constants_are_bernoulli_numbers() {
    let table = akiyama_tanigawa(2 * EM_BERNOULLI.len());
    for (k, &(p, q)) in EM_BERNOULLI.iter().enumerate() {
        assert_eq!(table[2 * k + 2], ExactRational::new(p, q).unwrap(), "B_{}", 2 * k + 2);
    }
}
