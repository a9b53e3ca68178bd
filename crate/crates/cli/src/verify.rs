use partition_kernels::exactnum::pow2;
use partition_kernels::kernels::{kernel_compositions, kernel_determinant, kernel_recursive};
use partition_kernels::oracles::{akiyama_tanigawa, euler_even};
use partition_kernels::sequences::{
    a_from_kb, a_recursive_table, bernoulli, euler, g_bruteforce, g_closed,
};
use partition_kernels::{Error, ExactRational, KernelCache, KernelKind};

use crate::commands::guard_brute;
use crate::{cache, Failure, VerifyArgs};

const G_MAX_M0: usize = 5;

/// First disagreement found by a check.
struct Mismatch {
    at: String,
    values: Vec<(&'static str, ExactRational)>,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "first difference at {}:", self.at)?;
        for (label, v) in &self.values {
            write!(f, " {label} = {v}")?;
        }
        Ok(())
    }
}

type Outcome = Result<Option<Mismatch>, Error>;

/// Compares every labelled value with the first one.
fn differs(at: String, values: Vec<(&'static str, ExactRational)>) -> Option<Mismatch> {
    let first = &values[0].1;
    if values.iter().all(|(_, v)| v == first) {
        None
    } else {
        Some(Mismatch { at, values })
    }
}

fn three_way(caches: &[KernelCache; 2], depth: usize) -> Outcome {
    for cache in caches {
        let kind = cache.kind();
        for n in 1..=depth {
            let found = differs(
                format!("kind {kind}, n = {n}"),
                vec![
                    ("recursion", kernel_recursive(kind, n, cache)?),
                    ("compositions", kernel_compositions(kind, n)?),
                    ("determinant", kernel_determinant(kind, n)?),
                ],
            );
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

fn recursion_vs_determinant(caches: &[KernelCache; 2], depth: usize) -> Outcome {
    for cache in caches {
        let kind = cache.kind();
        for n in 1..=depth {
            let found = differs(
                format!("kind {kind}, n = {n}"),
                vec![
                    ("recursion", kernel_recursive(kind, n, cache)?),
                    ("determinant", kernel_determinant(kind, n)?),
                ],
            );
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

fn coefficient_triple(kb: &KernelCache, bern: &[ExactRational], depth: usize) -> Outcome {
    let recursive = a_recursive_table(depth)?;
    for n in 1..=depth {
        let scale = (ExactRational::one() - ExactRational::new(1, pow2(2 * n - 1))?)
            * ExactRational::new(1, 2 * n as i64)?;
        let found = differs(
            format!("n = {n}"),
            vec![
                ("from K_b", a_from_kb(n, kb)?),
                ("recursion", recursive[n].clone()),
                ("from oracle B", &bern[2 * n] * &scale),
            ],
        );
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn bernoulli_oracle(kb: &KernelCache, bern: &[ExactRational], depth: usize) -> Outcome {
    for n in 1..=depth {
        let found = differs(
            format!("B_{}", 2 * n),
            vec![("kernel", bernoulli(n, kb)?), ("oracle", bern[2 * n].clone())],
        );
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn euler_oracle(ke: &KernelCache, depth: usize) -> Outcome {
    let table = euler_even(depth);
    for n in 1..=depth {
        let e = euler(n, ke)?;
        let oracle = ExactRational::from(table[n].clone());
        if !e.is_integer() {
            return Ok(Some(Mismatch {
                at: format!("E_{} (not an integer)", 2 * n),
                values: vec![("kernel", e), ("oracle", oracle)],
            }));
        }
        let found = differs(format!("E_{}", 2 * n), vec![("kernel", e), ("oracle", oracle)]);
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn g_agreement(kb: &KernelCache, depth: usize) -> Outcome {
    for n in 1..=depth {
        for m0 in 1..=G_MAX_M0 {
            let found = differs(
                format!("n = {n}, m0 = {m0}"),
                vec![
                    ("closed form", g_closed(n, m0, kb)?),
                    ("brute force", g_bruteforce(n, m0)?),
                ],
            );
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

pub fn run(a: VerifyArgs) -> Result<(), Failure> {
    if a.exact == 0 || a.brute == 0 {
        return Err(Failure::Usage("--exact and --brute must be at least 1".into()));
    }
    if a.brute > a.exact {
        return Err(Failure::Usage(format!(
            "--brute ({}) must not exceed --exact ({})",
            a.brute, a.exact
        )));
    }
    guard_brute(a.brute, a.force)?;

    let caches = [cache::open(KernelKind::B), cache::open(KernelKind::E)];
    let loaded = [caches[0].len(), caches[1].len()];
    let bern = akiyama_tanigawa(2 * a.exact);

    let checks: Vec<(String, Outcome)> = vec![
        (
            format!("kernel three-way agreement, n = 1..{}", a.brute),
            three_way(&caches, a.brute),
        ),
        (
            format!("recursion = determinant, n = 1..{}", a.exact),
            recursion_vs_determinant(&caches, a.exact),
        ),
        (
            format!("a_n triple consistency, n = 1..{}", a.exact),
            coefficient_triple(&caches[0], &bern, a.exact),
        ),
        (
            format!("Bernoulli oracle, B_2..B_{}", 2 * a.exact),
            bernoulli_oracle(&caches[0], &bern, a.exact),
        ),
        (
            format!("Euler oracle, E_2..E_{}", 2 * a.exact),
            euler_oracle(&caches[1], a.exact),
        ),
        (
            format!("g closed form = brute force, n = 1..{}, m0 = 1..{G_MAX_M0}", a.brute),
            g_agreement(&caches[0], a.brute),
        ),
    ];

    let mut ok = true;
    for (name, outcome) in checks {
        match outcome {
            Ok(None) => outln!("pass  {name}"),
            Ok(Some(m)) => {
                ok = false;
                outln!("FAIL  {name}: {m}");
            }
            Err(e) => {
                ok = false;
                outln!("FAIL  {name}: {e}");
            }
        }
    }
    // only persist tables that passed the cross-checks
    if ok {
        for (c, l) in caches.iter().zip(loaded) {
            cache::store(c, l);
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
