//! Incremental sorting for data that arrives in parts: ingest batches as
//! they come, take a fully sorted snapshot at any time. Each batch costs
//! time proportional to its own length; earlier data is never re-scanned.

use crate::count_string::CountString;
use crate::domain::{KeyDomain, DEFAULT_MAX_DOMAIN_BITS};
use crate::error::SortError;

/// Accumulates key batches over a fixed, up-front domain.
///
/// Counts rather than presence bits back the sorter, so repeated values --
/// within a batch or across batches -- are legal. Single writer: callers
/// serialize `ingest`; `snapshot` never mutates.
#[derive(Debug, Clone)]
pub struct IncrementalSorter {
    counts: CountString,
    total_ingested: u64,
    batches_seen: u64,
}

impl IncrementalSorter {
    /// An empty sorter over `domain`, enforcing the default slot limit.
    pub fn new(domain: KeyDomain) -> Result<Self, SortError> {
        Self::with_limit(domain, DEFAULT_MAX_DOMAIN_BITS)
    }

    /// An empty sorter with a caller-chosen slot limit, for domains built
    /// under a raised limit.
    pub fn with_limit(domain: KeyDomain, max_slots: u64) -> Result<Self, SortError> {
        if domain.size() > max_slots {
            return Err(SortError::RangeTooLarge {
                size: domain.size() as u128,
                max_bits: max_slots,
            });
        }
        Ok(IncrementalSorter {
            counts: CountString::zeroed(domain),
            total_ingested: 0,
            batches_seen: 0,
        })
    }

    pub fn domain(&self) -> &KeyDomain {
        self.counts.domain()
    }

    pub fn total_ingested(&self) -> u64 {
        self.total_ingested
    }

    pub fn batches_seen(&self) -> u64 {
        self.batches_seen
    }

    /// Adds a batch of keys. All-or-nothing: if any key is out of range the
    /// whole batch is rejected and the sorter is left untouched.
    pub fn ingest(&mut self, batch: &[i64]) -> Result<(), SortError> {
        let domain = *self.counts.domain();
        for (position, &key) in batch.iter().enumerate() {
            if !domain.contains(key) {
                return Err(SortError::KeyOutOfRange {
                    key,
                    position,
                    lower: domain.lower(),
                    upper: domain.upper(),
                });
            }
        }
        for &key in batch {
            let index = domain.index_of(key).expect("validated above");
            self.counts.increment(index);
        }
        self.total_ingested += batch.len() as u64;
        self.batches_seen += 1;
        Ok(())
    }

    /// The sorted multiset-union of every batch ingested so far.
    pub fn snapshot(&self) -> Vec<i64> {
        let mut sorted = Vec::with_capacity(self.total_ingested as usize);
        sorted.extend(self.counts.iter_keys());
        sorted
    }
}
