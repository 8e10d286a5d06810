//! k-bonacci tables, derived in parallel and reported in parameter order.

use std::time::Instant;

use cfconv_core::{derive_identity, kbonacci, ConvolutionError, ConvolutionSpec, IdentityResult};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    SelfConvolution,
    Cross,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Params {
    K(i64),
    Pair(i64, i64),
}

impl Params {
    pub fn label(&self) -> String {
        match self {
            Params::K(k) => format!("k = {k}"),
            Params::Pair(k1, k2) => format!("k1 = {k1}, k2 = {k2}"),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Params::K(k) => serde_json::json!({ "k": k }),
            Params::Pair(k1, k2) => serde_json::json!({ "k1": k1, "k2": k2 }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BatchEntry {
    pub params: Params,
    pub result: IdentityResult,
    pub elapsed_ms: u64,
}

/// Every entry passed guard verification; a failing entry aborts the table.
#[derive(Clone, Debug)]
pub struct BatchReport {
    pub kind: TableKind,
    pub k_max: i64,
    pub entries: Vec<BatchEntry>,
    pub total_elapsed_ms: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum BatchError {
    #[error("k_max must be at least 2, got {0}")]
    KMax(i64),
    #[error("could not build a pool of {jobs} worker threads: {message}")]
    Pool { jobs: usize, message: String },
    #[error("entry {}: {source}", params.label())]
    Entry { params: Params, source: ConvolutionError },
}

/// `k = 2..=k_max`.
pub fn self_params(k_max: i64) -> Vec<Params> {
    (2..=k_max).map(Params::K).collect()
}

/// `2 <= k1 <= k2 <= k_max`, lexicographic.
pub fn cross_params(k_max: i64) -> Vec<Params> {
    (2..=k_max).flat_map(|k1| (k1..=k_max).map(move |k2| Params::Pair(k1, k2))).collect()
}

fn spec_for(params: Params, guard: usize) -> ConvolutionSpec {
    let member = |k: i64| kbonacci(k).expect("k >= 2");
    match params {
        Params::K(k) => ConvolutionSpec::self_of(member(k)),
        Params::Pair(k1, k2) => ConvolutionSpec::cross(member(k1), member(k2)),
    }
    .with_guard(guard)
}

fn elapsed_ms(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)
}

/// Builds a table. `jobs == 0` lets the pool pick its own size; the output
/// does not depend on `jobs`.
pub fn run_table(kind: TableKind, k_max: i64, guard: usize, jobs: usize) -> Result<BatchReport, BatchError> {
    if k_max < 2 {
        return Err(BatchError::KMax(k_max));
    }
    let params = match kind {
        TableKind::SelfConvolution => self_params(k_max),
        TableKind::Cross => cross_params(k_max),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| BatchError::Pool { jobs, message: e.to_string() })?;

    let start = Instant::now();
    // One task per entry so the expensive large-k entries spread across workers.
    let outcomes: Vec<Result<BatchEntry, BatchError>> = pool.install(|| {
        params
            .par_iter()
            .with_max_len(1)
            .map(|&params| {
                let entry_start = Instant::now();
                derive_identity(&spec_for(params, guard))
                    .map(|result| BatchEntry { params, result, elapsed_ms: elapsed_ms(entry_start) })
                    .map_err(|source| BatchError::Entry { params, source })
            })
            .collect()
    });
    let entries = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(BatchReport { kind, k_max, entries, total_elapsed_ms: elapsed_ms(start) })
}
