//! Small helpers for `u64` vertex sets.

/// Widest side supported by the bitset representation.
pub const MAX_SIDE: usize = 64;

#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

/// The set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(set: u64, i: usize) -> bool {
    (set >> i) & 1 == 1
}

/// Iterate the members of a set in increasing order.
#[inline]
pub fn members(set: u64) -> Members {
    Members(set)
}

#[derive(Clone, Copy, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Reverse the low `width` bits, so that index 0 becomes the most significant bit.
#[inline]
pub fn reverse(v: u64, width: usize) -> u64 {
    if width == 0 {
        0
    } else {
        v.reverse_bits() >> (64 - width)
    }
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |acc, i| acc | bit(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_in_order() {
        assert_eq!(members(0b1011_0010).collect::<Vec<_>>(), vec![1, 4, 5, 7]);
        assert_eq!(members(0).count(), 0);
        assert_eq!(members(u64::MAX).len(), 64);
    }

    #[test]
    fn reverse_width() {
        assert_eq!(reverse(0b001, 3), 0b100);
        assert_eq!(reverse(0b110, 3), 0b011);
        assert_eq!(reverse(1, 64), 1 << 63);
        assert_eq!(reverse(5, 0), 0);
    }

    #[test]
    fn full_masks() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 7);
        assert_eq!(full(64), u64::MAX);
    }
}
