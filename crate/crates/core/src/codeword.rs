use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LENGTH: usize = 64;

/// A vector of `F_2^n`, `n <= 64`, packed into one machine word.
///
/// Position 0 is the leftmost character of the textual form and is stored in
/// the most significant of the `len` low bits, so integer order on `bits`
/// coincides with lexicographic order on bitstrings of equal length.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: u64,
    len: u8,
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Codeword {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LENGTH {
            return Err(Error::InvalidLength(len));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::InvalidParameters(format!(
                "bits {bits:#x} exceed length {len}"
            )));
        }
        Ok(Self { bits, len: len as u8 })
    }

    /// Masks off anything above `len`. Caller guarantees `1 <= len <= 64`.
    #[inline]
    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_LENGTH).contains(&len));
        Self {
            bits: bits & low_mask(len),
            len: len as u8,
        }
    }

    pub fn zero(len: usize) -> Result<Self> {
        Self::new(0, len)
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::new(low_mask(len), len)
    }

    /// Builds a word from bits listed left to right.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let len = bits.len();
        if len == 0 || len > MAX_LENGTH {
            return Err(Error::InvalidLength(len));
        }
        let v = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Ok(Self::from_raw(v, len))
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Bit at `pos`, counted from the left.
    #[inline]
    pub fn get(&self, pos: usize) -> bool {
        assert!(pos < self.len(), "position {pos} out of range");
        (self.bits >> (self.len() - 1 - pos)) & 1 == 1
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of positions where both words carry a one.
    pub fn overlap(&self, other: &Codeword) -> Result<usize> {
        self.check_len(other)?;
        Ok((self.bits & other.bits).count_ones() as usize)
    }

    pub fn distance(&self, other: &Codeword) -> Result<usize> {
        self.check_len(other)?;
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    pub fn xor(&self, other: &Codeword) -> Result<Codeword> {
        self.check_len(other)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            len: self.len,
        })
    }

    /// Coordinate sum mod 2.
    #[inline]
    pub fn parity(&self) -> bool {
        self.bits.count_ones() & 1 == 1
    }

    /// `self` followed by `tail`.
    pub fn concat(&self, tail: &Codeword) -> Result<Codeword> {
        let len = self.len() + tail.len();
        if len > MAX_LENGTH {
            return Err(Error::InvalidLength(len));
        }
        Ok(Self::from_raw((self.bits << tail.len()) | tail.bits, len))
    }

    /// First `k` coordinates.
    pub fn prefix(&self, k: usize) -> Result<Codeword> {
        if k == 0 || k > self.len() {
            return Err(Error::InvalidLength(k));
        }
        Ok(Self::from_raw(self.bits >> (self.len() - k), k))
    }

    /// Coordinates `k..len`.
    pub fn suffix_from(&self, k: usize) -> Result<Codeword> {
        if k >= self.len() {
            return Err(Error::InvalidLength(self.len().saturating_sub(k)));
        }
        let len = self.len() - k;
        Ok(Self::from_raw(self.bits, len))
    }

    /// Appends one coordinate on the right.
    pub fn push(&self, bit: bool) -> Result<Codeword> {
        if self.len() == MAX_LENGTH {
            return Err(Error::InvalidLength(MAX_LENGTH + 1));
        }
        Ok(Self::from_raw((self.bits << 1) | bit as u64, self.len() + 1))
    }

    /// Drops the rightmost coordinate.
    pub fn pop(&self) -> Result<Codeword> {
        if self.len() < 2 {
            return Err(Error::InvalidLength(self.len().saturating_sub(1)));
        }
        Ok(Self::from_raw(self.bits >> 1, self.len() - 1))
    }

    fn check_len(&self, other: &Codeword) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 0..self.len() {
            f.write_str(if self.get(pos) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidParameters(format!(
                    "unexpected character {other:?} in bitstring"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }
}

impl serde::Serialize for Codeword {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
