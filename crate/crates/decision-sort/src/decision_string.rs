use crate::domain::KeyDomain;
use crate::error::SortError;

const WORD_BITS: usize = u64::BITS as usize;

/// Presence bits over a key domain: bit `i` is set iff key
/// `domain.key_at(i)` has been marked.
///
/// Stored as packed 64-bit words so scans can skip empty regions a word at
/// a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionString {
    words: Vec<u64>,
    domain: KeyDomain,
}

impl DecisionString {
    /// A fresh all-zero string for `domain`. Every sort call starts from one.
    pub fn zeroed(domain: KeyDomain) -> Self {
        let words = domain.slots().div_ceil(WORD_BITS);
        DecisionString {
            words: vec![0; words],
            domain,
        }
    }

    pub fn domain(&self) -> &KeyDomain {
        &self.domain
    }

    /// Length in bits, equal to the domain size.
    pub fn len(&self) -> usize {
        self.domain.slots()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len());
        self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    /// Sets bit `index`; returns `false` when it was already set.
    pub fn set(&mut self, index: usize) -> bool {
        assert!(index < self.len());
        let word = &mut self.words[index / WORD_BITS];
        let mask = 1u64 << (index % WORD_BITS);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    /// Number of set bits, i.e. distinct keys marked.
    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Bitwise disjunction into a new string. The set positions of the result
    /// are the union of both inputs' set positions.
    pub fn combine(&self, other: &DecisionString) -> Result<DecisionString, SortError> {
        let mut merged = self.clone();
        merged.combine_assign(other)?;
        Ok(merged)
    }

    /// In-place variant of [`combine`](DecisionString::combine).
    pub fn combine_assign(&mut self, other: &DecisionString) -> Result<(), SortError> {
        if self.domain != other.domain {
            return Err(SortError::DomainMismatch);
        }
        for (dst, src) in self.words.iter_mut().zip(&other.words) {
            *dst |= src;
        }
        Ok(())
    }

    /// First bit index set in both strings, if any.
    pub fn first_overlap(&self, other: &DecisionString) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & *b != 0)
            .map(|(w, (a, b))| w * WORD_BITS + (a & b).trailing_zeros() as usize)
    }

    /// Indices of set bits in increasing order, skipping zero words.
    pub fn iter_set(&self) -> SetBits<'_> {
        self.iter_set_range(0..self.len())
    }

    /// Set-bit indices within `range`, in increasing order.
    pub fn iter_set_range(&self, range: std::ops::Range<usize>) -> SetBits<'_> {
        assert!(range.end <= self.len());
        let word_index = range.start / WORD_BITS;
        let mut current = self.words.get(word_index).copied().unwrap_or(0);
        current &= !0u64 << (range.start % WORD_BITS);
        SetBits {
            words: &self.words,
            word_index,
            current,
            end: range.end,
        }
    }

    /// Marked keys in increasing order.
    pub fn iter_keys(&self) -> impl Iterator<Item = i64> + '_ {
        self.iter_set().map(|i| self.domain.key_at(i))
    }

    /// Renders the string with slot 0 leftmost, e.g. `"000100000000000"`.
    pub fn to_bit_string(&self) -> String {
        (0..self.len())
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

/// Iterator over set-bit indices of a [`DecisionString`].
pub struct SetBits<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
    end: usize,
}

impl Iterator for SetBits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index * WORD_BITS >= self.end {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.word_index * WORD_BITS + self.current.trailing_zeros() as usize;
        if bit >= self.end {
            self.current = 0;
            return None;
        }
        self.current &= self.current - 1;
        Some(bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn domain(lower: i64, upper: i64) -> KeyDomain {
        KeyDomain::from_bounds(lower, upper).unwrap()
    }

    fn with_bits(domain: KeyDomain, bits: &[usize]) -> DecisionString {
        let mut s = DecisionString::zeroed(domain);
        for &b in bits {
            assert!(s.set(b));
        }
        s
    }

    #[test]
    fn set_get_and_popcount() {
        let mut s = DecisionString::zeroed(domain(1, 15));
        assert_eq!(s.count_ones(), 0);
        assert!(s.set(3));
        assert!(!s.set(3));
        assert!(s.get(3));
        assert!(!s.get(4));
        assert_eq!(s.count_ones(), 1);
    }

    #[test]
    fn bit_string_rendering() {
        let s = with_bits(domain(1, 15), &[3]);
        assert_eq!(s.to_bit_string(), "000100000000000");
    }

    #[test]
    fn combine_is_union() {
        let d = domain(0, 3);
        let a = with_bits(d, &[1, 3]); // 0101
        let b = with_bits(d, &[2, 3]); // 0011
        assert_eq!(a.combine(&b).unwrap().to_bit_string(), "0111");

        let zeros = DecisionString::zeroed(d);
        assert_eq!(a.combine(&zeros).unwrap(), a);
    }

    #[test]
    fn combine_rejects_mismatched_domains() {
        let a = DecisionString::zeroed(domain(0, 3));
        let b = DecisionString::zeroed(domain(1, 4));
        assert_eq!(a.combine(&b), Err(SortError::DomainMismatch));
    }

    #[test]
    fn overlap_detection() {
        let d = domain(0, 200);
        let a = with_bits(d, &[5, 130]);
        let b = with_bits(d, &[6, 130]);
        assert_eq!(a.first_overlap(&b), Some(130));
        assert_eq!(a.first_overlap(&with_bits(d, &[0, 64])), None);
    }

    #[test]
    fn set_bit_iteration_spans_words() {
        let d = domain(0, 200);
        let s = with_bits(d, &[0, 63, 64, 199]);
        assert_eq!(s.iter_set().collect::<Vec<_>>(), vec![0, 63, 64, 199]);
        assert_eq!(s.iter_keys().collect::<Vec<_>>(), vec![0, 63, 64, 199]);
    }

    #[test]
    fn ranged_iteration_respects_bounds() {
        let d = domain(0, 200);
        let s = with_bits(d, &[0, 5, 63, 64, 100, 199]);
        assert_eq!(s.iter_set_range(1..64).collect::<Vec<_>>(), vec![5, 63]);
        assert_eq!(
            s.iter_set_range(64..200).collect::<Vec<_>>(),
            vec![64, 100, 199]
        );
        assert_eq!(s.iter_set_range(0..0).count(), 0);
        assert_eq!(s.iter_set_range(101..199).count(), 0);
        // Whole-range split at every word boundary covers exactly iter_set.
        let whole: Vec<usize> = s.iter_set().collect();
        let split: Vec<usize> = s
            .iter_set_range(0..77)
            .chain(s.iter_set_range(77..201))
            .collect();
        assert_eq!(split, whole);
    }
}
