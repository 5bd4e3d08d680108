//! The two-phase sort: mark every key's presence bit, then scan the string
//! emitting present keys in slot order. No element is ever compared with
//! another or swapped; the cost is `n` marks plus `k` scans regardless of
//! the input ordering.

use crate::count_string::CountString;
use crate::counters::OpCounters;
use crate::decision_string::DecisionString;
use crate::domain::KeyDomain;
use crate::error::SortError;

/// First phase: set the presence bit of every key.
///
/// Keys must be unique and inside the domain; a repeated key is an error
/// because a presence bit cannot represent multiplicity (see
/// [`decision_sort_multiset`] for the counting variant).
pub fn mark_phase(
    keys: &[i64],
    domain: &KeyDomain,
) -> Result<(DecisionString, OpCounters), SortError> {
    let mut ads = DecisionString::zeroed(*domain);
    let mut counters = OpCounters::default();
    for (position, &key) in keys.iter().enumerate() {
        let index = domain
            .index_of(key)
            .ok_or_else(|| out_of_range(key, position, domain))?;
        if !ads.set(index) {
            return Err(SortError::DuplicateKey { key });
        }
        counters.mark_writes += 1;
        counters.iterations += 1;
    }
    Ok((ads, counters))
}

/// Second phase: scan every slot and emit the key of each set bit, in slot
/// order. One comparison per slot, one write per present key.
pub fn emit_phase(ads: &DecisionString) -> (Vec<i64>, OpCounters) {
    let mut sorted = Vec::with_capacity(ads.count_ones() as usize);
    sorted.extend(ads.iter_keys());
    let counters = OpCounters {
        emit_comparisons: ads.len() as u64,
        emit_writes: sorted.len() as u64,
        iterations: ads.len() as u64,
        ..OpCounters::default()
    };
    (sorted, counters)
}

/// Sorts a sequence of distinct keys into strictly increasing order.
pub fn decision_sort_unique(
    keys: &[i64],
    domain: &KeyDomain,
) -> Result<(Vec<i64>, OpCounters), SortError> {
    let (ads, mark_counters) = mark_phase(keys, domain)?;
    let (sorted, emit_counters) = emit_phase(&ads);
    Ok((sorted, mark_counters.merged(emit_counters)))
}

/// Sorts a key multiset into non-decreasing order, allowing duplicates, by
/// counting per-slot multiplicities instead of presence bits.
pub fn decision_sort_multiset(
    keys: &[i64],
    domain: &KeyDomain,
) -> Result<(Vec<i64>, OpCounters), SortError> {
    let mut counts = CountString::zeroed(*domain);
    let mut counters = OpCounters::default();
    for (position, &key) in keys.iter().enumerate() {
        let index = domain
            .index_of(key)
            .ok_or_else(|| out_of_range(key, position, domain))?;
        counts.increment(index);
        counters.mark_writes += 1;
        counters.iterations += 1;
    }
    let mut sorted = Vec::with_capacity(keys.len());
    sorted.extend(counts.iter_keys());
    counters.emit_comparisons += domain.size();
    counters.emit_writes += sorted.len() as u64;
    counters.iterations += domain.size();
    Ok((sorted, counters))
}

/// Sorts records by an integer key in the domain, stably: records with equal
/// keys keep their input order.
///
/// Uses count-then-place: one pass tallies per-slot counts, a prefix sum
/// turns them into starting offsets, and a final pass drops each record into
/// the next free position of its key's bucket.
pub fn sort_records_by_key<T, F>(
    records: Vec<T>,
    domain: &KeyDomain,
    key_of: F,
) -> Result<Vec<T>, SortError>
where
    F: Fn(&T) -> i64,
{
    let mut slot_counts = vec![0usize; domain.slots()];
    for (position, record) in records.iter().enumerate() {
        let key = key_of(record);
        let index = domain
            .index_of(key)
            .ok_or_else(|| out_of_range(key, position, domain))?;
        slot_counts[index] += 1;
    }

    let mut next_free = slot_counts;
    let mut running = 0;
    for offset in next_free.iter_mut() {
        let count = *offset;
        *offset = running;
        running += count;
    }

    let mut placed: Vec<Option<T>> = (0..records.len()).map(|_| None).collect();
    for record in records {
        let index = domain.index_of(key_of(&record)).expect("validated above");
        placed[next_free[index]] = Some(record);
        next_free[index] += 1;
    }
    Ok(placed.into_iter().map(|slot| slot.unwrap()).collect())
}

fn out_of_range(key: i64, position: usize, domain: &KeyDomain) -> SortError {
    SortError::KeyOutOfRange {
        key,
        position,
        lower: domain.lower(),
        upper: domain.upper(),
    }
}
