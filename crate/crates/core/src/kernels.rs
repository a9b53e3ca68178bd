//! The kernels `K_b(n)` and `K_e(n)`.
//!
//! Both kinds are the signed composition sum
//!
//! ```text
//! K(n) = Σ_{λ ⊨ n} (-1)^{l(λ)} Π_i w(b_i),   K(0) = 1
//! ```
//!
//! with part weight `w(b) = 1/(2b+1)!` for [`KernelKind::B`] and
//! `w(b) = 1/(2b)!` for [`KernelKind::E`]. Three routes compute it and must
//! agree exactly: the convolution recursion `K(n) = -Σ_{k<n} K(k) w(n-k)`,
//! full enumeration of compositions, and `(-1)^n` times the determinant of
//! the unit-superdiagonal lower-Hessenberg matrix `H[i][j] = w(i-j+1)`.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::sync::RwLock;

use crate::compositions;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::{factorial, inv_factorial, ExactRational};
use crate::Error;

/// Above this size the composition sum (2^(n-1) terms) gets slow; callers
/// should ask for confirmation.
pub const BRUTE_FORCE_SOFT_LIMIT: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KernelKind {
    /// Odd factorial weights, tied to Bernoulli numbers.
    B,
    /// Even factorial weights, tied to Euler numbers.
    E,
}

impl KernelKind {
    pub const ALL: [KernelKind; 2] = [KernelKind::B, KernelKind::E];

    /// Weight of a part `b >= 1`.
    pub fn weight(self, b: usize) -> ExactRational {
        debug_assert!(b >= 1);
        match self {
            KernelKind::B => inv_factorial(2 * b + 1),
            KernelKind::E => inv_factorial(2 * b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::B => "b",
            KernelKind::E => "e",
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(KernelKind::B),
            "e" => Ok(KernelKind::E),
            _ => Err(Error::Domain(format!("unknown kernel kind {s:?}"))),
        }
    }
}

/// The three algorithms for a kernel value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Recursion,
    Compositions,
    Determinant,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Recursion, Method::Compositions, Method::Determinant];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recursion => "recursion",
            Method::Compositions => "compositions",
            Method::Determinant => "determinant",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "recursion" => Ok(Method::Recursion),
            "compositions" => Ok(Method::Compositions),
            "determinant" => Ok(Method::Determinant),
            _ => Err(Error::Domain(format!("unknown method {s:?}"))),
        }
    }
}

/// Write-once memo of `K(0..)` for one kind.
///
/// Growth happens under the write lock, so concurrent requests for the same
/// index produce exactly one write.
#[derive(Debug)]
pub struct KernelCache {
    kind: KernelKind,
    values: RwLock<Vec<ExactRational>>,
}

impl KernelCache {
    pub fn new(kind: KernelKind) -> Self {
        Self {
            kind,
            values: RwLock::new(vec![ExactRational::one()]),
        }
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    /// Number of filled entries (always at least one, for `K(0)`).
    pub fn len(&self) -> usize {
        self.values.read().expect("kernel cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `K(n)`, filling the table up to `n` if needed.
    pub fn get(&self, n: usize) -> ExactRational {
        self.get_observed(n, None)
    }

    /// Snapshot of `K(0..=n)`.
    pub fn values_upto(&self, n: usize) -> Vec<ExactRational> {
        self.get(n);
        self.values.read().expect("kernel cache poisoned")[..=n].to_vec()
    }

    fn get_observed(&self, n: usize, mut observe: Tracer<'_>) -> ExactRational {
        {
            let values = self.values.read().expect("kernel cache poisoned");
            if let Some(v) = values.get(n) {
                return v.clone();
            }
        }
        let mut values = self.values.write().expect("kernel cache poisoned");
        while values.len() <= n {
            let next = recursion_step(self.kind, &values, &mut observe);
            values.push(next);
        }
        values[n].clone()
    }

    /// Reads a table written by [`KernelCache::save`]: one `n p/q` line per
    /// index, contiguous from `n = 0` with `K(0) = 1`.
    pub fn load(kind: KernelKind, path: &Path) -> Result<Self, Error> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::CacheFile(format!("{}: {e}", path.display())))?;
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |why: &str| {
                Error::CacheFile(format!("{}:{}: {why}", path.display(), lineno + 1))
            };
            let (idx, value) = line.split_once(' ').ok_or_else(|| bad("expected `n p/q`"))?;
            let idx: usize = idx.parse().map_err(|_| bad("bad index"))?;
            if idx != values.len() {
                return Err(bad("indices must be contiguous from 0"));
            }
            let value: ExactRational = value.trim().parse().map_err(|_| bad("bad value"))?;
            values.push(value);
        }
        if values.first() != Some(&ExactRational::one()) {
            return Err(Error::CacheFile(format!(
                "{}: table must start with `0 1`",
                path.display()
            )));
        }
        Ok(Self {
            kind,
            values: RwLock::new(values),
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        let io = |e: std::io::Error| Error::CacheFile(format!("{}: {e}", path.display()));
        let values = self.values.read().expect("kernel cache poisoned");
        let mut out = Vec::new();
        for (n, v) in values.iter().enumerate() {
            writeln!(out, "{n} {v}").map_err(io)?;
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, out).map_err(io)?;
        fs::rename(&tmp, path).map_err(io)
    }
}

/// `K(n) = -Σ_{k=0}^{n-1} K(k) w(n-k)` for `n = prev.len()`.
fn recursion_step(
    kind: KernelKind,
    prev: &[ExactRational],
    observe: &mut Tracer<'_>,
) -> ExactRational {
    let n = prev.len();
    let mut acc = ExactRational::zero();
    for (k, kv) in prev.iter().enumerate() {
        acc += &(kv * &kind.weight(n - k));
        if let Some(f) = observe.as_mut() {
            f(acc.max_digits());
        }
    }
    -acc
}

fn check_kind(kind: KernelKind, cache: &KernelCache) -> Result<(), Error> {
    if cache.kind() != kind {
        return Err(Error::KindMismatch {
            cache: cache.kind(),
            requested: kind,
        });
    }
    Ok(())
}

/// `K(n)` by the convolution recursion, memoized in `cache`.
pub fn kernel_recursive(
    kind: KernelKind,
    n: usize,
    cache: &KernelCache,
) -> Result<ExactRational, Error> {
    check_kind(kind, cache)?;
    Ok(cache.get(n))
}

/// `K(n)` by summing over every composition of `n`.
pub fn kernel_compositions(kind: KernelKind, n: usize) -> Result<ExactRational, Error> {
    kernel_compositions_observed(kind, n, None)
}

fn kernel_compositions_observed(
    kind: KernelKind,
    n: usize,
    observe: Tracer<'_>,
) -> Result<ExactRational, Error> {
    let mut stream = compositions::enumerate(n)?;
    // Every prefix product Π d(b_i) of the weight denominators divides
    // (Σ d-arguments)!, which is at most (3n)! for B and (2n)! for E, so
    // each term is an exact integer over one common denominator.
    let common = factorial(match kind {
        KernelKind::B => 3 * n,
        KernelKind::E => 2 * n,
    });
    let denoms: Vec<BigInt> = (0..=n)
        .map(|b| match kind {
            KernelKind::B => factorial(2 * b + 1),
            KernelKind::E => factorial(2 * b),
        })
        .collect();
    // quotients[j] = common / Π_{i<j} d(parts[i]) for the current prefix
    let mut quotients = vec![common.clone()];
    let mut prev: Vec<usize> = Vec::new();
    let mut acc = BigInt::zero();
    let mut peak = BigInt::zero();
    while let Some(parts) = stream.next_parts() {
        let shared = prev.iter().zip(parts).take_while(|(a, b)| a == b).count();
        quotients.truncate(shared + 1);
        for &b in &parts[shared..] {
            let next = quotients.last().expect("root quotient") / &denoms[b];
            quotients.push(next);
        }
        prev.clear();
        prev.extend_from_slice(parts);
        let term = quotients.last().expect("root quotient");
        if parts.len() % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        if acc.bits() >= peak.bits() && acc.magnitude() > peak.magnitude() {
            peak = acc.clone();
        }
    }
    if let Some(f) = observe {
        f(decimal_digits(&common));
        f(decimal_digits(&peak));
    }
    ExactRational::new(acc, common)
}

fn decimal_digits(v: &BigInt) -> usize {
    v.magnitude().to_str_radix(10).len()
}

/// Optional sink for the decimal digit counts of intermediate values.
type Tracer<'a> = Option<&'a mut dyn FnMut(usize)>;

/// The `n×n` matrix whose signed determinant is `K(n)`: `w(i-j+1)` on and
/// below the diagonal, ones on the superdiagonal, zeros above it.
pub fn kernel_matrix(kind: KernelKind, n: usize) -> Vec<Vec<ExactRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j <= i {
                        kind.weight(i - j + 1)
                    } else if j == i + 1 {
                        ExactRational::one()
                    } else {
                        ExactRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant of a lower-Hessenberg matrix by the recurrence over leading
/// principal minors:
///
/// `D_k = Σ_{j=1}^{k} (-1)^{k-j} H[k][j] (Π_{i=j}^{k-1} H[i][i+1]) D_{j-1}`.
///
/// No divisions, `O(n²)` products once the superdiagonal products are
/// accumulated backwards.
pub fn hessenberg_determinant(h: &[Vec<ExactRational>]) -> Result<ExactRational, Error> {
    hessenberg_determinant_observed(h, None)
}

fn hessenberg_determinant_observed(
    h: &[Vec<ExactRational>],
    mut observe: Tracer<'_>,
) -> Result<ExactRational, Error> {
    let n = h.len();
    for (i, row) in h.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Domain("matrix must be square".to_string()));
        }
        if row.iter().skip(i + 2).any(|v| !v.is_zero()) {
            return Err(Error::Domain(format!(
                "row {i} has non-zero entries above the superdiagonal"
            )));
        }
    }
    // minors[k] = det of the leading k×k block
    let mut minors = Vec::with_capacity(n + 1);
    minors.push(ExactRational::one());
    for k in 1..=n {
        let row = &h[k - 1];
        let mut acc = ExactRational::zero();
        let mut super_prod = ExactRational::one();
        for j in (1..=k).rev() {
            let term = &(&row[j - 1] * &super_prod) * &minors[j - 1];
            if (k - j) % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
            if j >= 2 {
                super_prod *= &h[j - 2][j - 1];
            }
        }
        if let Some(f) = observe.as_mut() {
            f(acc.max_digits());
        }
        minors.push(acc);
    }
    Ok(minors.pop().expect("at least the 0×0 minor"))
}

/// `K(n) = (-1)^n det(H_n)` for `n >= 1`.
pub fn kernel_determinant(kind: KernelKind, n: usize) -> Result<ExactRational, Error> {
    kernel_determinant_observed(kind, n, None)
}

fn kernel_determinant_observed(
    kind: KernelKind,
    n: usize,
    observe: Tracer<'_>,
) -> Result<ExactRational, Error> {
    if n == 0 {
        return Err(Error::Domain(
            "the determinant form is defined for n >= 1".to_string(),
        ));
    }
    let det = hessenberg_determinant_observed(&kernel_matrix(kind, n), observe)?;
    Ok(if n % 2 == 0 { det } else { -det })
}

/// Dispatches to one of the three methods; the recursion uses a private cache.
pub fn kernel(kind: KernelKind, n: usize, method: Method) -> Result<ExactRational, Error> {
    Ok(kernel_traced(kind, n, method)?.0)
}

/// Like [`kernel`], also reporting the largest decimal digit count seen in
/// any intermediate value (partial sums, minors, cache entries).
pub fn kernel_traced(
    kind: KernelKind,
    n: usize,
    method: Method,
) -> Result<(ExactRational, usize), Error> {
    let mut peak = 1usize;
    let mut observe = |digits: usize| peak = peak.max(digits);
    let value = match method {
        Method::Recursion => KernelCache::new(kind).get_observed(n, Some(&mut observe)),
        Method::Compositions => kernel_compositions_observed(kind, n, Some(&mut observe))?,
        Method::Determinant => kernel_determinant_observed(kind, n, Some(&mut observe))?,
    };
    peak = peak.max(value.max_digits());
    Ok((value, peak))
}
