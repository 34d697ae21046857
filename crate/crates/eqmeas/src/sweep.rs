//! Parallel verification sweeps. Results are collected in enumeration order,
//! so reports do not depend on the number of worker threads.

use eqmeas_core::edge::{check_lemma1, check_ratios, check_signed_identity, check_theorem1, RatioReports};
use eqmeas_core::partitions::enumerate_partitions;
use eqmeas_core::{Partition, VerificationReport};
use rayon::prelude::*;

/// Environment variable capping the worker pool size.
pub const THREADS_VAR: &str = "EQMEAS_THREADS";

/// Invalid thread cap.
#[derive(Debug, thiserror::Error)]
#[error("{THREADS_VAR} must be a positive integer, got {0:?}")]
pub struct ThreadsError(String);

/// Reads [`THREADS_VAR`]; `None` when unset.
pub fn threads_from_env() -> Result<Option<usize>, ThreadsError> {
    match std::env::var(THREADS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(s)) => Err(ThreadsError(s.to_string_lossy().into_owned())),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(ThreadsError(s)),
        },
    }
}

/// A worker pool with at most `threads` threads (rayon's default when `None`).
pub fn pool(threads: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

fn partitions_in(sizes: std::ops::RangeInclusive<usize>) -> Vec<Partition> {
    sizes.flat_map(enumerate_partitions).collect()
}

/// The stated identity `w_Jack = -w_MNOP` and its parity-signed correction
/// over every nonempty partition of size at most `max_n`.
pub fn edge(max_n: usize) -> (VerificationReport, VerificationReport) {
    let outcomes: Vec<_> = partitions_in(1..=max_n)
        .par_iter()
        .map(|l| (check_theorem1(l), check_signed_identity(l)))
        .collect();
    let (stated, signed): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
    let mut stated: VerificationReport = stated.into_iter().collect();
    let signed: VerificationReport = signed.into_iter().collect();
    stated
        .excluded
        .push((String::new(), "empty partition: both weights are the empty product 1"));
    (stated, signed)
}

/// Ratio products over every nonempty `λ` with `|λ| ≤ max_n` and every
/// removable corner.
pub fn ratios(max_n: usize) -> RatioReports {
    let cases: Vec<(Partition, usize)> = partitions_in(1..=max_n)
        .into_iter()
        .flat_map(|l| l.removable_corners().into_iter().map(move |k| (l.clone(), k)))
        .collect();
    let outcomes: Vec<_> = cases.par_iter().map(|(l, k)| check_ratios(l, *k)).collect();
    let mut reports = RatioReports::default();
    for o in outcomes {
        reports.record(o);
    }
    reports
}

/// Corner polynomial identity for every partition of size `0..=max_n`.
pub fn lemma1(max_n: usize) -> VerificationReport {
    let outcomes: Vec<_> = partitions_in(0..=max_n).par_iter().map(check_lemma1).collect();
    outcomes.into_iter().collect()
}
