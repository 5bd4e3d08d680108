use crate::domain::KeyDomain;

/// Per-key multiplicities over a key domain: slot `i` holds how many times
/// key `domain.key_at(i)` has been ingested. This is the multiset extension
/// of the presence-bit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountString {
    counts: Vec<u64>,
    total: u64,
    domain: KeyDomain,
}

impl CountString {
    pub fn zeroed(domain: KeyDomain) -> Self {
        CountString {
            counts: vec![0; domain.slots()],
            total: 0,
            domain,
        }
    }

    pub fn domain(&self) -> &KeyDomain {
        &self.domain
    }

    pub fn increment(&mut self, index: usize) {
        self.counts[index] += 1;
        self.total += 1;
    }

    pub fn count_at(&self, index: usize) -> u64 {
        self.counts[index]
    }

    /// Sum of all counts, i.e. the number of keys ingested.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Keys in non-decreasing order, each repeated by its multiplicity.
    pub fn iter_keys(&self) -> impl Iterator<Item = i64> + '_ {
        self.counts.iter().enumerate().flat_map(move |(i, &count)| {
            let key = self.domain.key_at(i);
            std::iter::repeat_n(key, count as usize)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_track_multiplicity() {
        let domain = KeyDomain::from_bounds(1, 3).unwrap();
        let mut counts = CountString::zeroed(domain);
        counts.increment(2);
        counts.increment(0);
        counts.increment(2);
        assert_eq!(counts.total(), 3);
        assert_eq!(counts.count_at(2), 2);
        assert_eq!(counts.iter_keys().collect::<Vec<_>>(), vec![1, 3, 3]);
    }
}
