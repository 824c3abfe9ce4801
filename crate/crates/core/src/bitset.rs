//! Fixed-width bit vectors.
//!
//! Every exponential search in the crate (subsets of automaton states,
//! subsets of rewriting elements) stores its configurations as a `BitSet`.
//! Bits beyond `width` are always zero, so derived equality and hashing are
//! canonical.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    width: usize,
    blocks: Box<[u64]>,
}

fn block_count(width: usize) -> usize {
    width.div_ceil(64)
}

impl BitSet {
    pub fn empty(width: usize) -> Self {
        BitSet {
            width,
            blocks: vec![0; block_count(width)].into_boxed_slice(),
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = Self::empty(width);
        for i in 0..width {
            set.insert(i);
        }
        set
    }

    pub fn singleton(width: usize, index: usize) -> Self {
        let mut set = Self::empty(width);
        set.insert(index);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut set = Self::empty(width);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set of width `width <= 64` from the low bits of `mask`.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= 64, "from_mask supports widths up to 64");
        let mut set = Self::empty(width);
        if width > 0 {
            let keep = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
            set.blocks[0] = mask & keep;
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn insert(&mut self, index: usize) {
        assert!(index < self.width, "bit {index} outside width {}", self.width);
        self.blocks[index / 64] |= 1u64 << (index % 64);
    }

    #[inline]
    pub fn remove(&mut self, index: usize) {
        assert!(index < self.width, "bit {index} outside width {}", self.width);
        self.blocks[index / 64] &= !(1u64 << (index % 64));
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        index < self.width && self.blocks[index / 64] & (1u64 << (index % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a |= *b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.blocks.iter().zip(other.blocks.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.blocks.iter().zip(other.blocks.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Indices of the set bits in increasing order.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            blocks: &self.blocks,
            block: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    /// Low 64 bits as an integer; only meaningful for widths up to 64.
    pub fn to_mask(&self) -> u64 {
        self.blocks.first().copied().unwrap_or(0)
    }
}

pub struct Ones<'a> {
    blocks: &'a [u64],
    block: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.block * 64 + bit);
            }
            self.block += 1;
            if self.block >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.block];
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
