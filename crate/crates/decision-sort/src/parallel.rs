//! Shared-memory parallel formulation: `p` workers mark disjoint input
//! blocks into local decision strings, the strings are OR-combined in a
//! binary reduction tree of `ceil(log2 p)` rounds, and each worker then
//! emits its slice of the combined string. Because slice `r` covers strictly
//! smaller keys than slice `r + 1`, concatenating the per-worker runs in
//! rank order yields the sorted output with no merge step.
//!
//! With the `parallel` feature (default) the phases run on rayon; without
//! it the same plan executes sequentially, so results are identical either
//! way.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::decision_string::DecisionString;
use crate::domain::KeyDomain;
use crate::error::SortError;
use crate::sort::mark_phase;

/// How `n` input keys and `k` domain slots are split across `workers`.
///
/// Both partitions are balanced: range sizes differ by at most one, with
/// the longer ranges first. Empty ranges are allowed when there are more
/// workers than items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelPlan {
    workers: usize,
    block_ranges: Vec<Range<usize>>,
    slice_ranges: Vec<Range<usize>>,
}

impl ParallelPlan {
    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Input block assigned to each worker, disjointly covering `0..n`.
    pub fn block_ranges(&self) -> &[Range<usize>] {
        &self.block_ranges
    }

    /// Slot slice assigned to each worker, disjointly covering `0..k`.
    pub fn slice_ranges(&self) -> &[Range<usize>] {
        &self.slice_ranges
    }

    /// Combine rounds the reduction tree needs: `ceil(log2 workers)`.
    pub fn combine_rounds(&self) -> u32 {
        self.workers.next_power_of_two().trailing_zeros()
    }
}

/// Splits `n` input keys and `k` slots across `workers` balanced ranges.
pub fn plan(n: usize, k: usize, workers: usize) -> Result<ParallelPlan, SortError> {
    if workers == 0 {
        return Err(SortError::InvalidWorkerCount);
    }
    Ok(ParallelPlan {
        workers,
        block_ranges: balanced_ranges(n, workers),
        slice_ranges: balanced_ranges(k, workers),
    })
}

fn balanced_ranges(total: usize, parts: usize) -> Vec<Range<usize>> {
    let base = total / parts;
    let extra = total % parts;
    let mut ranges = Vec::with_capacity(parts);
    let mut start = 0;
    for part in 0..parts {
        let len = base + usize::from(part < extra);
        ranges.push(start..start + len);
        start += len;
    }
    ranges
}

/// Bitwise disjunction of two decision strings over the same domain.
pub fn combine(a: &DecisionString, b: &DecisionString) -> Result<DecisionString, SortError> {
    a.combine(b)
}

/// Sorts distinct keys using `workers` data-parallel workers. The output is
/// a pure function of `(keys, domain)`: identical to
/// [`decision_sort_unique`](crate::sort::decision_sort_unique) for every
/// worker count and schedule.
pub fn parallel_decision_sort(
    keys: &[i64],
    domain: &KeyDomain,
    workers: usize,
) -> Result<Vec<i64>, SortError> {
    let plan = plan(keys.len(), domain.slots(), workers)?;

    let locals = mark_blocks(keys, domain, &plan)?;
    let (combined, _rounds) = or_reduce(locals)?;

    // Full barrier between phases: no worker emits until the reduction has
    // produced the complete string.
    let runs = emit_slices(&combined, &plan);

    let mut sorted = Vec::with_capacity(combined.count_ones() as usize);
    for run in runs {
        sorted.extend(run);
    }
    Ok(sorted)
}

#[cfg(feature = "parallel")]
fn mark_blocks(
    keys: &[i64],
    domain: &KeyDomain,
    plan: &ParallelPlan,
) -> Result<Vec<DecisionString>, SortError> {
    plan.block_ranges()
        .par_iter()
        .map(|range| mark_block(keys, domain, range))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn mark_blocks(
    keys: &[i64],
    domain: &KeyDomain,
    plan: &ParallelPlan,
) -> Result<Vec<DecisionString>, SortError> {
    plan.block_ranges()
        .iter()
        .map(|range| mark_block(keys, domain, range))
        .collect()
}

fn mark_block(
    keys: &[i64],
    domain: &KeyDomain,
    range: &Range<usize>,
) -> Result<DecisionString, SortError> {
    mark_phase(&keys[range.clone()], domain)
        .map(|(local, _)| local)
        .map_err(|err| match err {
            // Positions are block-local inside mark_phase; report them
            // against the whole input.
            SortError::KeyOutOfRange {
                key,
                position,
                lower,
                upper,
            } => SortError::KeyOutOfRange {
                key,
                position: range.start + position,
                lower,
                upper,
            },
            other => other,
        })
}

/// OR-combines the per-block strings pairwise until one remains, returning
/// the combined string and the number of rounds executed. A bit set in two
/// different block strings means the same key was marked twice, which the
/// unique-key contract forbids.
fn or_reduce(locals: Vec<DecisionString>) -> Result<(DecisionString, u32), SortError> {
    let mut slots: Vec<Option<DecisionString>> = locals.into_iter().map(Some).collect();
    let mut stride = 1;
    let mut rounds = 0;
    while stride < slots.len() {
        reduce_round(&mut slots, stride)?;
        stride *= 2;
        rounds += 1;
    }
    let combined = slots
        .into_iter()
        .next()
        .flatten()
        .expect("plan guarantees at least one worker");
    Ok((combined, rounds))
}

#[cfg(feature = "parallel")]
fn reduce_round(slots: &mut [Option<DecisionString>], stride: usize) -> Result<(), SortError> {
    slots
        .par_chunks_mut(2 * stride)
        .try_for_each(|pair| combine_pair(pair, stride))
}

#[cfg(not(feature = "parallel"))]
fn reduce_round(slots: &mut [Option<DecisionString>], stride: usize) -> Result<(), SortError> {
    slots
        .chunks_mut(2 * stride)
        .try_for_each(|pair| combine_pair(pair, stride))
}

fn combine_pair(pair: &mut [Option<DecisionString>], stride: usize) -> Result<(), SortError> {
    if pair.len() <= stride {
        return Ok(());
    }
    let (left, right) = pair.split_at_mut(stride);
    if let (Some(dst), Some(src)) = (left[0].as_mut(), right[0].take()) {
        if let Some(bit) = dst.first_overlap(&src) {
            return Err(SortError::DuplicateKey {
                key: dst.domain().key_at(bit),
            });
        }
        dst.combine_assign(&src)?;
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn emit_slices(combined: &DecisionString, plan: &ParallelPlan) -> Vec<Vec<i64>> {
    plan.slice_ranges()
        .par_iter()
        .map(|range| emit_slice(combined, range))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn emit_slices(combined: &DecisionString, plan: &ParallelPlan) -> Vec<Vec<i64>> {
    plan.slice_ranges()
        .iter()
        .map(|range| emit_slice(combined, range))
        .collect()
}

fn emit_slice(combined: &DecisionString, range: &Range<usize>) -> Vec<i64> {
    combined
        .iter_set_range(range.clone())
        .map(|index| combined.domain().key_at(index))
        .collect()
}
