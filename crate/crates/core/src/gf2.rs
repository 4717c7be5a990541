//! Bit-packed vectors and Gaussian elimination over GF(2).
//!
//! [`BitVec`] stores bits in `u64` words, least significant bit first within
//! each word. [`Gf2Basis`] keeps a reduced row-echelon basis and remembers,
//! for every basis row, which of the originally inserted vectors it is made of,
//! so membership queries can also return the combination that reproduces the
//! query vector.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(
            bits.len(),
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Number of positions set in both vectors.
    pub fn and_count(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of positions set in either vector.
    pub fn or_count(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// GF(2) inner product.
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        self.and_count(other) % 2 == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let tz = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(wi * WORD_BITS + tz)
                }
            })
        })
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Lexicographic order on the bit sequence read from index 0 upward,
    /// with 0 < 1 at the first differing position.
    pub fn cmp_lex(&self, other: &BitVec) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                let diff = a ^ b;
                let pos = diff.trailing_zeros();
                return if (a >> pos) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

#[derive(Clone, Debug)]
struct BasisRow {
    bits: BitVec,
    pivot: usize,
    combo: BitVec,
}

/// Incrementally built reduced row-echelon basis of a GF(2) subspace.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    width: usize,
    inserted: usize,
    capacity: usize,
    rows: Vec<BasisRow>,
}

/// Outcome of reducing a vector against a [`Gf2Basis`].
#[derive(Clone, Debug)]
pub struct Reduction {
    /// What is left after eliminating every basis pivot; zero iff the vector is in the span.
    pub residual: BitVec,
    /// Indicator over inserted vectors whose sum equals `vector + residual`.
    pub combination: BitVec,
}

impl Gf2Basis {
    /// `capacity` bounds how many vectors may be inserted (it sizes the combination masks).
    pub fn new(width: usize, capacity: usize) -> Self {
        Self {
            width,
            inserted: 0,
            capacity,
            rows: Vec::new(),
        }
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a BitVec>>(width: usize, rows: I) -> Self {
        let rows: Vec<&BitVec> = rows.into_iter().collect();
        let mut basis = Self::new(width, rows.len());
        for r in rows {
            basis.insert(r);
        }
        basis
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a vector, returning true when it was independent of the current span.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        assert!(self.inserted < self.capacity, "Gf2Basis capacity exhausted");
        let mut combo = BitVec::zeros(self.capacity);
        combo.set(self.inserted, true);
        self.inserted += 1;
        let Reduction {
            residual,
            combination,
        } = self.reduce_with(v, combo);
        let Some(pivot) = residual.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.bits.get(pivot) {
                row.bits.xor_assign(&residual);
                row.combo.xor_assign(&combination);
            }
        }
        self.rows.push(BasisRow {
            bits: residual,
            pivot,
            combo: combination,
        });
        true
    }

    fn reduce_with(&self, v: &BitVec, mut combo: BitVec) -> Reduction {
        let mut residual = v.clone();
        for row in &self.rows {
            if residual.get(row.pivot) {
                residual.xor_assign(&row.bits);
                combo.xor_assign(&row.combo);
            }
        }
        Reduction {
            residual,
            combination: combo,
        }
    }

    pub fn reduce(&self, v: &BitVec) -> Reduction {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        self.reduce_with(v, BitVec::zeros(self.capacity))
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).residual.is_zero()
    }

    /// Indices of inserted vectors summing to `v`, if `v` lies in the span.
    pub fn solve(&self, v: &BitVec) -> Option<Vec<usize>> {
        let r = self.reduce(v);
        r.residual
            .is_zero()
            .then(|| r.combination.iter_ones().collect())
    }
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[BitVec]) -> usize {
    match rows.first() {
        None => 0,
        Some(first) => Gf2Basis::from_rows(first.len(), rows).rank(),
    }
}
