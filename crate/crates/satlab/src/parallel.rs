//! Runs a search as independent shards on a thread pool.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use satlab_core::search::{min_count_over_saturated, shard_count, SearchConfig, SearchResult};
use satlab_core::Result;

/// Smallest depth with at least this many shards per worker.
const SHARDS_PER_JOB: usize = 8;

/// Splits `cfg` into shards and merges the results. A config that already
/// names a shard, uses edge pruning, or runs with one job is run directly.
pub fn run_parallel(
    cfg: &SearchConfig,
    jobs: usize,
    progress: Option<&(dyn Fn(usize, usize) + Sync)>,
) -> Result<SearchResult> {
    if cfg.shard.is_some() || cfg.prune_edges || jobs <= 1 || cfg.order < 4 {
        return min_count_over_saturated(cfg);
    }
    let want = jobs * SHARDS_PER_JOB;
    let mut depth = 1;
    let mut shards = shard_count(cfg, depth)?;
    while shards < want && depth + 1 < cfg.order {
        depth += 1;
        shards = shard_count(cfg, depth)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let done = AtomicUsize::new(0);
    let parts: Vec<Result<SearchResult>> = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|i| {
                let r = min_count_over_saturated(&cfg.clone().with_shard(depth, i));
                let d = done.fetch_add(1, Ordering::Relaxed) + 1;
                if let Some(p) = progress {
                    p(d, shards);
                }
                r
            })
            .collect()
    });
    let mut acc = SearchResult::default();
    for part in parts {
        acc = acc.merge(part?);
    }
    Ok(acc)
}

/// Worker count from `--jobs`, defaulting to the available parallelism.
pub fn resolve_jobs(jobs: Option<usize>) -> usize {
    jobs.filter(|&j| j > 0).unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}
