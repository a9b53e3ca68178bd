//! Bernoulli and Euler numbers, the Gamma-expansion coefficients `a_n`,
//! and the auxiliary functions `f`, `j`, `g` built from the kernels.
//!
//! `g` is indexed by `(n, m0)` and returns the coefficient that sits at
//! shifted position `n + m0` in the Hurwitz zeta expansion of
//! `ζ(2 m0, x + 1)`.

use num_bigint::BigInt;
use num_traits::Pow;

use crate::compositions::{self, Composition};
use crate::exactnum::{beta_even, binomial, factorial, pow2, ExactRational};
use crate::kernels::{KernelCache, KernelKind};
use crate::Error;

fn require_positive(name: &str, v: usize) -> Result<(), Error> {
    if v == 0 {
        return Err(Error::Domain(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn require_kind(cache: &KernelCache, kind: KernelKind) -> Result<(), Error> {
    if cache.kind() != kind {
        return Err(Error::KindMismatch {
            cache: cache.kind(),
            requested: kind,
        });
    }
    Ok(())
}

/// `f(n) = 1 / (2^{2n} (2n) (2n+1))`.
pub fn f_of(n: usize) -> Result<ExactRational, Error> {
    require_positive("n", n)?;
    let den = pow2(2 * n) * BigInt::from(2 * n) * BigInt::from(2 * n + 1);
    ExactRational::new(1, den)
}

/// `j(a, b) = -(2a+2b-1)! / (2^{2b} (2b+1)! (2a-1)!)`, i.e. `-f(b)/B(2b, 2a)`.
pub fn j_of(a: usize, b: usize) -> Result<ExactRational, Error> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    let num = -factorial(2 * a + 2 * b - 1);
    let den = pow2(2 * b) * factorial(2 * b + 1) * factorial(2 * a - 1);
    ExactRational::new(num, den)
}

/// Closed form `g(n + m0, m0) = (2n-1)! K_b(n) / (B(2n, 2m0) 2^{2n})`.
pub fn g_closed(n: usize, m0: usize, cache: &KernelCache) -> Result<ExactRational, Error> {
    require_positive("n", n)?;
    require_positive("m0", m0)?;
    require_kind(cache, KernelKind::B)?;
    let scale = ExactRational::new(factorial(2 * n - 1), pow2(2 * n))?;
    let beta = beta_even(n, m0)?;
    (scale * cache.get(n)).checked_div(&beta)
}

/// One product `T = Π_k j(a_k, b_k)` over a composition `(b_1, …, b_k)`,
/// with `a_1 = m0` and `a_k = a_{k-1} + b_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TProductTerm {
    pub m0: usize,
    pub parts: Composition,
    pub value: ExactRational,
}

impl TProductTerm {
    pub fn new(m0: usize, parts: Composition) -> Result<Self, Error> {
        require_positive("m0", m0)?;
        let mut a = m0;
        let mut value = ExactRational::one();
        for &b in parts.parts() {
            value *= &j_of(a, b)?;
            a += b;
        }
        Ok(Self { m0, parts, value })
    }

    /// The `a_k` sequence the product was formed with.
    pub fn offsets(&self) -> Vec<usize> {
        self.parts
            .parts()
            .iter()
            .scan(self.m0, |a, &b| {
                let cur = *a;
                *a += b;
                Some(cur)
            })
            .collect()
    }
}

/// Every T-product contributing to `g(n + m0, m0)`, one per composition of `n`.
pub fn t_product_terms(
    n: usize,
    m0: usize,
) -> Result<impl Iterator<Item = Result<TProductTerm, Error>>, Error> {
    require_positive("m0", m0)?;
    Ok(compositions::enumerate(n)?.map(move |c| TProductTerm::new(m0, c)))
}

/// `g(n + m0, m0)` as the sum of T-products over all compositions of `n`.
pub fn g_bruteforce(n: usize, m0: usize) -> Result<ExactRational, Error> {
    let mut acc = ExactRational::zero();
    for term in t_product_terms(n, m0)? {
        acc += &term?.value;
    }
    Ok(acc)
}

/// `a_n = -(2n-1)! K_b(n) / 2^{2n}`.
pub fn a_from_kb(n: usize, cache: &KernelCache) -> Result<ExactRational, Error> {
    require_positive("n", n)?;
    require_kind(cache, KernelKind::B)?;
    let scale = ExactRational::new(-factorial(2 * n - 1), pow2(2 * n))?;
    Ok(scale * cache.get(n))
}

/// `a_1..=a_n` by the binomial recursion
/// `a_n = f(n) - Σ_{k=1}^{n-1} C(2n-1, 2k) / (2^{2k} (2k+1)) a_{n-k}`,
/// seeded with `a_1 = f(1)`. Index 0 of the result is unused and holds zero.
pub fn a_recursive_table(n: usize) -> Result<Vec<ExactRational>, Error> {
    require_positive("n", n)?;
    let mut a = vec![ExactRational::zero()];
    for m in 1..=n {
        let mut value = f_of(m)?;
        for k in 1..m {
            let c = ExactRational::new(
                binomial(2 * m - 1, 2 * k),
                pow2(2 * k) * BigInt::from(2 * k + 1),
            )?;
            value -= &(c * &a[m - k]);
        }
        a.push(value);
    }
    Ok(a)
}

pub fn a_recursive(n: usize) -> Result<ExactRational, Error> {
    Ok(a_recursive_table(n)?.pop().expect("n >= 1 entries"))
}

/// `a_n = B_{2n} (1 - 2^{1-2n}) / (2n)`.
pub fn a_from_bernoulli(n: usize, cache: &KernelCache) -> Result<ExactRational, Error> {
    let b = bernoulli(n, cache)?;
    let half_power = ExactRational::new(1, pow2(2 * n - 1))?;
    let factor = (ExactRational::one() - half_power) * ExactRational::new(1, 2 * n as i64)?;
    Ok(b * factor)
}

/// `B_{2n} = -(2n)! K_b(n) / (2^{2n} - 2)`.
pub fn bernoulli(n: usize, cache: &KernelCache) -> Result<ExactRational, Error> {
    require_positive("n", n)?;
    require_kind(cache, KernelKind::B)?;
    let scale = ExactRational::new(-factorial(2 * n), pow2(2 * n) - 2)?;
    Ok(scale * cache.get(n))
}

/// `E_{2n} = (2n)! K_e(n)`.
pub fn euler(n: usize, cache: &KernelCache) -> Result<ExactRational, Error> {
    require_positive("n", n)?;
    require_kind(cache, KernelKind::E)?;
    Ok(ExactRational::from(factorial(2 * n)) * cache.get(n))
}

/// Bernoulli number of any index with `B_1 = -1/2` and odd indices above
/// one equal to zero; even indices come from the kernel.
pub fn bernoulli_any(k: usize, cache: &KernelCache) -> Result<ExactRational, Error> {
    match k {
        0 => Ok(ExactRational::one()),
        1 => ExactRational::new(-1, 2),
        k if k % 2 == 1 => Ok(ExactRational::zero()),
        k => bernoulli(k / 2, cache),
    }
}

/// Checks `Σ_{k=1}^{n-1} k^r = Σ_{k=0}^{r} B_k r! n^{r-k+1} / (k! (r-k+1)!)`
/// in exact arithmetic.
pub fn faulhaber_check(n: usize, r: usize, cache: &KernelCache) -> Result<bool, Error> {
    if n < 2 {
        return Err(Error::Domain("faulhaber_check needs n >= 2".to_string()));
    }
    require_positive("r", r)?;
    let direct: BigInt = (1..n).map(|k| Pow::pow(BigInt::from(k), r)).sum();
    let nn = BigInt::from(n);
    let mut rhs = ExactRational::zero();
    for k in 0..=r {
        let b = bernoulli_any(k, cache)?;
        if b.is_zero() {
            continue;
        }
        let coeff = ExactRational::new(
            factorial(r) * Pow::pow(&nn, r - k + 1),
            factorial(k) * factorial(r - k + 1),
        )?;
        rhs += &(b * coeff);
    }
    Ok(rhs == ExactRational::from(direct))
}

/// How a [`CoefficientTable`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    FromKb,
    FromRecursion,
    FromBernoulli,
}

/// `a_1..=a_N` from one of the three routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    a: Vec<ExactRational>,
    provenance: Provenance,
}

impl CoefficientTable {
    pub fn build(upto: usize, provenance: Provenance, cache: &KernelCache) -> Result<Self, Error> {
        require_positive("upto", upto)?;
        let a = match provenance {
            Provenance::FromKb => (1..=upto)
                .map(|n| a_from_kb(n, cache))
                .collect::<Result<Vec<_>, _>>()?,
            Provenance::FromRecursion => a_recursive_table(upto)?.split_off(1),
            Provenance::FromBernoulli => (1..=upto)
                .map(|n| a_from_bernoulli(n, cache))
                .collect::<Result<Vec<_>, _>>()?,
        };
        Ok(Self { a, provenance })
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `a_n` for `1 <= n <= len()`.
    pub fn get(&self, n: usize) -> Option<&ExactRational> {
        n.checked_sub(1).and_then(|i| self.a.get(i))
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.a
    }

    /// Same coefficients regardless of how they were produced.
    pub fn same_values(&self, other: &CoefficientTable) -> bool {
        self.a == other.a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    fn kb() -> KernelCache {
        KernelCache::new(KernelKind::B)
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_of(1).unwrap(), q("1/24"));
        assert_eq!(f_of(2).unwrap(), q("1/320"));
        // 1/(64·6·7)
        assert_eq!(f_of(3).unwrap(), q("1/2688"));
        assert!(f_of(0).is_err());
    }

    // Oracle: j(a, b) = -f(b) / B(2b, 2a), evaluated through beta_even.
    fn j_oracle(a: usize, b: usize) -> ExactRational {
        -(f_of(b).unwrap().checked_div(&beta_even(b, a).unwrap()).unwrap())
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_of(1, 1).unwrap(), q("-1/4"));
        // -5!/(2^4 · 5! · 1!)
        assert_eq!(j_of(1, 2).unwrap(), q("-1/16"));
        // -5!/(2^2 · 3! · 3!) = -120/144
        assert_eq!(j_of(2, 1).unwrap(), q("-5/6"));
        for a in 1..=6 {
            for b in 1..=6 {
                assert_eq!(j_of(a, b).unwrap(), j_oracle(a, b), "j({a}, {b})");
            }
        }
        assert!(j_of(0, 1).is_err());
    }

    #[test]
    fn g_examples() {
        let c = kb();
        assert_eq!(g_closed(1, 1, &c).unwrap(), q("-1/4"));
        assert_eq!(g_closed(1, 2, &c).unwrap(), q("-5/6"));
        assert_eq!(g_closed(2, 1, &c).unwrap(), q("7/48"));
        assert_eq!(g_bruteforce(1, 1).unwrap(), q("-1/4"));
        // j(1,1) j(2,1) + j(1,2) = 5/24 - 1/16
        assert_eq!(g_bruteforce(2, 1).unwrap(), q("7/48"));
        assert_eq!(g_bruteforce(3, 2).unwrap(), g_closed(3, 2, &c).unwrap());
        // pinned from an independent fractions-based enumeration
        assert_eq!(g_closed(3, 2, &c).unwrap(), q("-31/16"));
        assert!(g_closed(1, 1, &KernelCache::new(KernelKind::E)).is_err());
    }

    #[test]
    fn t_product_offsets_follow_triple_rule() {
        let t = TProductTerm::new(2, Composition::new(vec![1, 3, 2]).unwrap()).unwrap();
        assert_eq!(t.offsets(), vec![2, 3, 6]);
        let expected = j_of(2, 1).unwrap() * j_of(3, 3).unwrap() * j_of(6, 2).unwrap();
        assert_eq!(t.value, expected);
        assert_eq!(t_product_terms(4, 1).unwrap().count(), 8);
    }

    #[test]
    fn a_examples() {
        let c = kb();
        assert_eq!(a_from_kb(1, &c).unwrap(), q("1/24"));
        assert_eq!(a_from_kb(2, &c).unwrap(), q("-7/960"));
        assert_eq!(a_from_kb(3, &c).unwrap(), q("31/8064"));
        assert_eq!(a_recursive(1).unwrap(), q("1/24"));
        assert_eq!(a_recursive(2).unwrap(), q("-7/960"));
        assert_eq!(a_recursive(5).unwrap(), a_from_kb(5, &c).unwrap());
        assert!(a_recursive(0).is_err());
    }

    #[test]
    fn bernoulli_and_euler_examples() {
        let b = kb();
        let e = KernelCache::new(KernelKind::E);
        assert_eq!(bernoulli(1, &b).unwrap(), q("1/6"));
        assert_eq!(bernoulli(2, &b).unwrap(), q("-1/30"));
        assert_eq!(bernoulli(6, &b).unwrap(), q("-691/2730"));
        assert_eq!(euler(1, &e).unwrap(), q("-1"));
        assert_eq!(euler(2, &e).unwrap(), q("5"));
        assert_eq!(euler(4, &e).unwrap(), q("1385"));
        assert!(bernoulli(1, &e).is_err());
        assert!(euler(1, &b).is_err());
        assert!(bernoulli(0, &b).is_err());
    }

    #[test]
    fn faulhaber_examples() {
        let c = kb();
        assert!(faulhaber_check(5, 1, &c).unwrap());
        assert!(faulhaber_check(10, 4, &c).unwrap());
        assert!(faulhaber_check(20, 10, &c).unwrap());
        assert!(faulhaber_check(1, 3, &c).is_err());
    }

    #[test]
    fn coefficient_tables_agree() {
        let c = kb();
        let t1 = CoefficientTable::build(12, Provenance::FromKb, &c).unwrap();
        let t2 = CoefficientTable::build(12, Provenance::FromRecursion, &c).unwrap();
        let t3 = CoefficientTable::build(12, Provenance::FromBernoulli, &c).unwrap();
        assert!(t1.same_values(&t2));
        assert!(t1.same_values(&t3));
        assert_eq!(t1.get(1), Some(&q("1/24")));
        assert_eq!(t1.get(0), None);
        assert_eq!(t1.get(13), None);
        assert_eq!(t3.provenance(), Provenance::FromBernoulli);
    }
}
