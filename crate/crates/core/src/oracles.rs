//! Reference sequences computed by classical triangle algorithms.
//!
//! Nothing here touches the kernels; these are the independent paths the
//! kernel-derived Bernoulli and Euler numbers are checked against.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::ExactRational;

/// Bernoulli numbers `B_0..=B_max` by the Akiyama–Tanigawa transform.
///
/// The transform yields `B_1 = +1/2`; every other index agrees with the
/// usual convention.
pub fn akiyama_tanigawa(max: usize) -> Vec<ExactRational> {
    let mut row: Vec<ExactRational> = Vec::with_capacity(max + 1);
    let mut out = Vec::with_capacity(max + 1);
    for m in 0..=max {
        row.push(ExactRational::new(1, (m + 1) as i64).expect("m + 1 > 0"));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * ExactRational::from(j as i64);
        }
        out.push(row[0].clone());
    }
    out
}

/// Even-index Bernoulli number `B_{2n}` from the Akiyama–Tanigawa table.
pub fn bernoulli_even(n: usize) -> ExactRational {
    akiyama_tanigawa(2 * n).pop().expect("non-empty table")
}

/// Zigzag (up/down) numbers `A_0..=A_max` by the Seidel boustrophedon:
/// each row is the running sum of the previous row read backwards,
/// starting from zero, and the last entry of row `k` is `A_k`.
pub fn zigzag(max: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    let mut out = vec![BigInt::from(1)];
    for _ in 1..=max {
        let mut next = Vec::with_capacity(row.len() + 1);
        let mut acc = BigInt::zero();
        next.push(acc.clone());
        for v in row.iter().rev() {
            acc += v;
            next.push(acc.clone());
        }
        out.push(acc);
        row = next;
    }
    out
}

/// Euler numbers `E_{2n}` for `n = 0..=max_n` with the `1/cosh(t)` sign
/// convention: `E_{2n} = (-1)^n A_{2n}`.
pub fn euler_even(max_n: usize) -> Vec<BigInt> {
    zigzag(2 * max_n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| k % 2 == 0)
        .map(|(k, a)| if (k / 2) % 2 == 1 { -a } else { a })
        .collect()
}
