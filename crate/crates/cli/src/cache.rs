//! Optional on-disk kernel tables under `KERNEL_CACHE_DIR`.

use std::path::PathBuf;

use partition_kernels::{KernelCache, KernelKind};

const ENV: &str = "KERNEL_CACHE_DIR";

fn path_for(kind: KernelKind) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV).filter(|d| !d.is_empty())?;
    Some(PathBuf::from(dir).join(format!("k{}.txt", kind.name())))
}

/// A cache seeded from disk when a valid table exists; unreadable or
/// malformed files are reported and ignored.
pub fn open(kind: KernelKind) -> KernelCache {
    let Some(path) = path_for(kind) else {
        return KernelCache::new(kind);
    };
    if !path.exists() {
        return KernelCache::new(kind);
    }
    match KernelCache::load(kind, &path) {
        Ok(cache) => cache,
        Err(e) => {
            eprintln!("warning: ignoring kernel cache: {e}");
            KernelCache::new(kind)
        }
    }
}

/// Writes the cache back if a cache directory is configured and the table
/// grew. Failures only warn.
pub fn store(cache: &KernelCache, loaded_len: usize) {
    let Some(path) = path_for(cache.kind()) else {
        return;
    };
    if cache.len() <= loaded_len {
        return;
    }
    if let Some(dir) = path.parent() {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("warning: cannot create {}: {e}", dir.display());
            return;
        }
    }
    if let Err(e) = cache.save(&path) {
        eprintln!("warning: cannot write kernel cache: {e}");
    }
}
