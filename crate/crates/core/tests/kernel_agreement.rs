use partition_kernels::exactnum::{inv_factorial, ExactRational};
use partition_kernels::kernels::{
    kernel_compositions, kernel_determinant, kernel_matrix, kernel_recursive,
};
use partition_kernels::{KernelCache, KernelKind};

/// Plain Gaussian elimination over the rationals, independent of the
/// Hessenberg recurrence.
fn gaussian_determinant(mut m: Vec<Vec<ExactRational>>) -> ExactRational {
    let n = m.len();
    let mut det = ExactRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return ExactRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let factor = m[r][col].checked_div(&p).unwrap();
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= &delta;
            }
        }
    }
    det
}

#[test]
fn three_way_agreement_to_fourteen() {
    for kind in KernelKind::ALL {
        let cache = KernelCache::new(kind);
        for n in 1..=14 {
            let r = kernel_recursive(kind, n, &cache).unwrap();
            let c = kernel_compositions(kind, n).unwrap();
            let d = kernel_determinant(kind, n).unwrap();
            assert_eq!(r, c, "{kind} n = {n}: recursion vs compositions");
            assert_eq!(r, d, "{kind} n = {n}: recursion vs determinant");
        }
    }
}

#[test]
fn recursion_matches_determinant_to_sixty() {
    for kind in KernelKind::ALL {
        let cache = KernelCache::new(kind);
        for n in 15..=60 {
            assert_eq!(
                kernel_recursive(kind, n, &cache).unwrap(),
                kernel_determinant(kind, n).unwrap(),
                "{kind} n = {n}"
            );
        }
    }
}

#[test]
fn hessenberg_recurrence_matches_elimination() {
    for kind in KernelKind::ALL {
        for n in 1..=9 {
            let m = kernel_matrix(kind, n);
            let mut signed = gaussian_determinant(m);
            if n % 2 == 1 {
                signed = -signed;
            }
            assert_eq!(signed, kernel_determinant(kind, n).unwrap(), "{kind} n = {n}");
        }
    }
}

#[test]
fn signs_alternate() {
    for kind in KernelKind::ALL {
        let cache = KernelCache::new(kind);
        for n in 1..=30 {
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(cache.get(n).signum(), expected, "{kind} n = {n}");
        }
    }
}

#[test]
fn convolution_with_weights_vanishes() {
    // Σ_{k=0}^{n} K(k) w(n-k) = 0 with w(0) = 1
    for kind in KernelKind::ALL {
        let cache = KernelCache::new(kind);
        let values = cache.values_upto(30);
        for n in 1..=30 {
            let mut total = values[n].clone();
            for k in 0..n {
                total += &(&values[k] * &kind.weight(n - k));
            }
            assert!(total.is_zero(), "{kind} n = {n}");
        }
    }
    // E weights are the even inverse factorials, including w(0) = 1/0!
    let cache = KernelCache::new(KernelKind::E);
    for n in 1..=30 {
        let total: ExactRational = (0..=n)
            .map(|k| &cache.get(k) * &inv_factorial(2 * (n - k)))
            .sum();
        assert!(total.is_zero(), "n = {n}");
    }
}

#[test]
fn published_table() {
    let cache = KernelCache::new(KernelKind::B);
    let expected = [
        "-1/6",
        "7/360",
        "-31/15120",
        "127/604800",
        "-73/3421440",
        "1414477/653837184000",
    ];
    for (i, want) in expected.iter().enumerate() {
        assert_eq!(cache.get(i + 1).to_string(), *want);
    }
}
