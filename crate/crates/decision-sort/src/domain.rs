use serde::Serialize;

use crate::error::SortError;

/// Default cap on the number of domain slots: 2^31 bits, i.e. a 256 MiB
/// decision string. Larger domains are a hard error unless a caller raises
/// the limit explicitly.
pub const DEFAULT_MAX_DOMAIN_BITS: u64 = 1 << 31;

/// The closed integer interval `[lower, upper]` every key must fall in.
///
/// Its size `upper - lower + 1` is the number of slots a decision or count
/// string allocates, and the `k` of every cost formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KeyDomain {
    lower: i64,
    upper: i64,
    size: u64,
}

impl KeyDomain {
    /// Builds the domain `[lower, upper]`, enforcing the default slot limit.
    pub fn from_bounds(lower: i64, upper: i64) -> Result<Self, SortError> {
        Self::from_bounds_with_limit(lower, upper, DEFAULT_MAX_DOMAIN_BITS)
    }

    /// Builds the domain `[lower, upper]` with a caller-chosen slot limit.
    pub fn from_bounds_with_limit(
        lower: i64,
        upper: i64,
        max_bits: u64,
    ) -> Result<Self, SortError> {
        if upper < lower {
            return Err(SortError::InvalidBounds { lower, upper });
        }
        let size = upper as i128 - lower as i128 + 1;
        if size as u128 > max_bits as u128 {
            return Err(SortError::RangeTooLarge {
                size: size as u128,
                max_bits,
            });
        }
        Ok(KeyDomain {
            lower,
            upper,
            size: size as u64,
        })
    }

    /// Infers the tightest domain covering `keys`.
    pub fn infer(keys: &[i64]) -> Result<Self, SortError> {
        Self::infer_with_limit(keys, DEFAULT_MAX_DOMAIN_BITS)
    }

    /// Infers the tightest domain covering `keys` under a caller-chosen limit.
    pub fn infer_with_limit(keys: &[i64], max_bits: u64) -> Result<Self, SortError> {
        let mut iter = keys.iter();
        let first = *iter.next().ok_or(SortError::EmptyInput)?;
        let (mut lower, mut upper) = (first, first);
        for &key in iter {
            lower = lower.min(key);
            upper = upper.max(key);
        }
        Self::from_bounds_with_limit(lower, upper, max_bits)
    }

    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn upper(&self) -> i64 {
        self.upper
    }

    /// Number of slots in the domain (`k`).
    pub fn size(&self) -> u64 {
        self.size
    }

    /// `size()` as a `usize`, for indexing slot arrays.
    pub fn slots(&self) -> usize {
        self.size as usize
    }

    pub fn contains(&self, key: i64) -> bool {
        key >= self.lower && key <= self.upper
    }

    /// Slot index of `key`, i.e. the key-to-string mapping. `None` when the
    /// key lies outside the domain.
    pub fn index_of(&self, key: i64) -> Option<usize> {
        if self.contains(key) {
            Some((key as i128 - self.lower as i128) as usize)
        } else {
            None
        }
    }

    /// Key stored at slot `index`, the inverse mapping of [`index_of`].
    ///
    /// [`index_of`]: KeyDomain::index_of
    pub fn key_at(&self, index: usize) -> i64 {
        debug_assert!((index as u64) < self.size);
        (self.lower as i128 + index as i128) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_of_worked_example() {
        let d = KeyDomain::from_bounds(1, 15).unwrap();
        assert_eq!(d.lower(), 1);
        assert_eq!(d.upper(), 15);
        assert_eq!(d.size(), 15);
    }

    #[test]
    fn degenerate_single_value_domain() {
        let d = KeyDomain::from_bounds(0, 0).unwrap();
        assert_eq!(d.size(), 1);
        assert_eq!(d.index_of(0), Some(0));
        assert_eq!(d.key_at(0), 0);
    }

    #[test]
    fn inverted_bounds_rejected() {
        assert_eq!(
            KeyDomain::from_bounds(5, 3),
            Err(SortError::InvalidBounds { lower: 5, upper: 3 })
        );
    }

    #[test]
    fn oversized_domain_rejected() {
        let err = KeyDomain::from_bounds_with_limit(0, 100, 50).unwrap_err();
        assert_eq!(
            err,
            SortError::RangeTooLarge {
                size: 101,
                max_bits: 50
            }
        );
        // The full i64 span must not overflow the size computation.
        let err = KeyDomain::from_bounds(i64::MIN, i64::MAX).unwrap_err();
        assert!(matches!(err, SortError::RangeTooLarge { size, .. } if size == 1 << 64));
    }

    #[test]
    fn infer_matches_extrema() {
        let d = KeyDomain::infer(&[4, 2, 7, 9, 1, 13, 15]).unwrap();
        assert_eq!((d.lower(), d.upper(), d.size()), (1, 15, 15));

        let singleton = KeyDomain::infer(&[42]).unwrap();
        assert_eq!(
            (singleton.lower(), singleton.upper(), singleton.size()),
            (42, 42, 1)
        );

        assert_eq!(KeyDomain::infer(&[]), Err(SortError::EmptyInput));
    }

    #[test]
    fn negative_lower_bound_maps_cleanly() {
        let d = KeyDomain::from_bounds(-10, 10).unwrap();
        assert_eq!(d.size(), 21);
        assert_eq!(d.index_of(-10), Some(0));
        assert_eq!(d.index_of(0), Some(10));
        assert_eq!(d.index_of(11), None);
        assert_eq!(d.key_at(20), 10);
    }
}
