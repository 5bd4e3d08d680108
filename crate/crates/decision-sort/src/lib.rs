//! Comparison-free sorting of integer keys over a known domain.
//!
//! Given every key's containing interval `[lower, upper]` up front, sorting
//! needs no comparisons between elements: one pass marks each key's presence
//! bit in a string of `k = upper - lower + 1` slots, a second pass scans the
//! slots in order and emits the present keys. The cost is exactly `n` marks
//! plus `k` scans -- fixed for a given size and domain, whatever the input
//! order -- and no element is ever swapped.
//!
//! ```
//! use decision_sort::{decision_sort_unique, KeyDomain};
//!
//! let domain = KeyDomain::from_bounds(1, 15)?;
//! let (sorted, counters) = decision_sort_unique(&[4, 2, 7, 9, 1, 13, 15], &domain)?;
//! assert_eq!(sorted, vec![1, 2, 4, 7, 9, 13, 15]);
//! assert_eq!(counters.iterations, 22); // n + k = 7 + 15
//! # Ok::<(), decision_sort::SortError>(())
//! ```
//!
//! Beyond the core sort the crate provides:
//!
//! * [`streaming`] -- ingest key batches as they arrive and snapshot a fully
//!   sorted view at any time, paying only for each batch.
//! * [`parallel`] -- a data-parallel formulation (rayon-backed with the
//!   default `parallel` feature, sequential without it) whose output is
//!   bit-identical to the sequential sort for every worker count.
//! * [`cost_model`] -- the closed-form cost and speedup formulas, for sizing
//!   a workload before running it.
//! * [`baselines`] -- instrumented bubble sort and quicksort plus a weighted
//!   cost comparison report.

pub mod baselines;
pub mod cost_model;
mod count_string;
mod counters;
mod decision_string;
mod domain;
mod error;
pub mod parallel;
mod sort;
pub mod streaming;

pub use count_string::CountString;
pub use counters::OpCounters;
pub use decision_string::{DecisionString, SetBits};
pub use domain::{KeyDomain, DEFAULT_MAX_DOMAIN_BITS};
pub use error::{ModelError, SortError};
pub use parallel::{parallel_decision_sort, ParallelPlan};
pub use sort::{
    decision_sort_multiset, decision_sort_unique, emit_phase, mark_phase, sort_records_by_key,
};
pub use streaming::IncrementalSorter;
