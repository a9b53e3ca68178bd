use std::time::Instant;

use partition_kernels::kernels::{kernel, kernel_traced, BRUTE_FORCE_SOFT_LIMIT};
use partition_kernels::{KernelKind, Method};
use serde::Serialize;

use crate::{BenchArgs, Failure, Format};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BenchRecord {
    method: &'static str,
    kind: &'static str,
    n: usize,
    wall_nanos: u64,
    max_digits: usize,
}

fn median(mut xs: Vec<u64>) -> u64 {
    xs.sort_unstable();
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2
    }
}

fn measure(kind: KernelKind, n: usize, method: Method, repeats: usize) -> Result<BenchRecord, Failure> {
    let mut times = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let start = Instant::now();
        kernel(kind, n, method)?;
        let elapsed = start.elapsed().as_nanos().min(u64::MAX as u128) as u64;
        times.push(elapsed.max(1));
    }
    // digit tracing slows the run down, so it gets its own untimed pass
    let (_, digits) = kernel_traced(kind, n, method)?;
    Ok(BenchRecord {
        method: method.name(),
        kind: kind.name(),
        n,
        wall_nanos: median(times),
        max_digits: digits.max(1),
    })
}

pub fn run(a: BenchArgs) -> Result<(), Failure> {
    if a.upto == 0 || a.repeats == 0 {
        return Err(Failure::Usage("--upto and --repeats must be at least 1".into()));
    }
    if a.format == Format::Plain {
        return Err(Failure::Usage("bench writes csv or json".into()));
    }
    let kind = KernelKind::from(a.kind);
    let mut records = Vec::new();
    for n in 1..=a.upto {
        for method in Method::ALL {
            if method == Method::Compositions && n > BRUTE_FORCE_SOFT_LIMIT {
                continue;
            }
            records.push(measure(kind, n, method, a.repeats)?);
        }
    }
    match a.format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&records)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            outln!("{text}");
        }
        _ => {
            outln!("method,kind,n,wallNanos,maxDigits");
            for r in &records {
                outln!("{},{},{},{},{}", r.method, r.kind, r.n, r.wall_nanos, r.max_digits);
            }
        }
    }
    Ok(())
}
