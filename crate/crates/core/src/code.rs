//! Binary codes: finite sets of equal-length codewords.

use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::codeword::{low_mask, Codeword, MAX_LENGTH};
use crate::error::{Error, Result};

/// A duplicate-free set of codewords of one length, kept in ascending order.
///
/// Single-word codes are representable (puncturing can produce them) but the
/// metric operations reject them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCode {
    length: usize,
    words: Vec<Codeword>,
}

impl BinaryCode {
    pub fn new(length: usize, words: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::InvalidLength(length));
        }
        let mut words: Vec<Codeword> = words.into_iter().collect();
        if let Some(bad) = words.iter().find(|w| w.len() != length) {
            return Err(Error::LengthMismatch {
                left: length,
                right: bad.len(),
            });
        }
        if words.is_empty() {
            return Err(Error::InvalidParameters("a code needs at least one word".into()));
        }
        words.sort_unstable();
        words.dedup();
        Ok(Self { length, words })
    }

    /// Builds a code from raw packed words, masking to `length`.
    pub fn from_raw(length: usize, raw: impl IntoIterator<Item = u64>) -> Result<Self> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::InvalidLength(length));
        }
        Self::new(length, raw.into_iter().map(|b| Codeword::from_raw(b, length)))
    }

    /// Parses whitespace-separated bitstrings.
    pub fn parse_words(text: &str) -> Result<Self> {
        let words = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Codeword>>>()?;
        let length = words.first().map(Codeword::len).unwrap_or(0);
        Self::new(length, words)
    }

    /// All of `F_2^n`.
    pub fn full_space(n: usize) -> Result<Self> {
        if n == 0 || n > 24 {
            return Err(Error::InvalidParameters(format!(
                "full space of length {n} is outside 1..=24"
            )));
        }
        Self::from_raw(n, 0..1u64 << n)
    }

    /// `{0^n, 1^n}`.
    pub fn repetition(n: usize) -> Result<Self> {
        Self::new(n, [Codeword::zero(n)?, Codeword::ones(n)?])
    }

    /// Even-weight words of length `n`: the parity-check code of `F_2^(n-1)`.
    pub fn even_weight(n: usize) -> Result<Self> {
        let full = Self::full_space(n)?;
        Self::new(n, full.words.into_iter().filter(|w| !w.parity()))
    }

    /// Row span over `F_2`.
    pub fn span(length: usize, rows: &[Codeword]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|w| w.len() != length) {
            return Err(Error::LengthMismatch {
                left: length,
                right: bad.len(),
            });
        }
        let mut basis: Vec<u64> = Vec::new();
        for row in rows {
            let mut v = row.bits();
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        if basis.len() > 24 {
            return Err(Error::InvalidParameters(format!(
                "span of rank {} is too large to list",
                basis.len()
            )));
        }
        let mut words = vec![0u64];
        for b in basis {
            let shifted: Vec<u64> = words.iter().map(|w| w ^ b).collect();
            words.extend(shifted);
        }
        Self::from_raw(length, words)
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub(crate) fn raw_words(&self) -> Vec<u64> {
        self.words.iter().map(Codeword::bits).collect()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.words[0].is_zero()
    }

    pub fn min_distance(&self) -> Result<usize> {
        if self.size() < 2 {
            return Err(Error::TooFewWords(self.size()));
        }
        let raw = self.raw_words();
        let mut best = usize::MAX;
        for (i, &a) in raw.iter().enumerate() {
            for &b in &raw[i + 1..] {
                let d = (a ^ b).count_ones() as usize;
                if d < best {
                    best = d;
                    if best == 1 {
                        return Ok(1);
                    }
                }
            }
        }
        Ok(best)
    }

    /// `W_i` for `i in 0..=n`. Defined only for codes containing zero.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        if !self.contains_zero() {
            return Err(Error::MissingZero);
        }
        let mut w = vec![0u64; self.length + 1];
        for c in &self.words {
            w[c.weight()] += 1;
        }
        Ok(w)
    }

    /// Ordered-pair counts at each distance, `i in 0..=n`.
    pub fn distance_pair_counts(&self) -> Vec<u64> {
        let raw = self.raw_words();
        let mut counts = vec![0u64; self.length + 1];
        counts[0] = raw.len() as u64;
        for (i, &a) in raw.iter().enumerate() {
            for &b in &raw[i + 1..] {
                counts[(a ^ b).count_ones() as usize] += 2;
            }
        }
        counts
    }

    /// `B_i = |{(v, w) in C^2 : d(v, w) = i}| / |C|`, exact.
    pub fn distance_distribution(&self) -> Vec<Ratio<u64>> {
        let size = self.size() as u64;
        self.distance_pair_counts()
            .into_iter()
            .map(|c| Ratio::new(c, size))
            .collect()
    }

    pub fn distribution_report(&self) -> DistributionReport {
        DistributionReport {
            length: self.length,
            size: self.size(),
            weight: self.weight_distribution().ok(),
            distance: self.distance_distribution(),
        }
    }

    /// Contains zero and is closed under XOR.
    pub fn is_linear(&self) -> bool {
        if !self.contains_zero() {
            return false;
        }
        let set: HashSet<u64> = self.words.iter().map(Codeword::bits).collect();
        let raw = self.raw_words();
        raw.iter()
            .enumerate()
            .all(|(i, &a)| raw[i + 1..].iter().all(|&b| set.contains(&(a ^ b))))
    }

    pub fn translate(&self, t: &Codeword) -> Result<Self> {
        if t.len() != self.length {
            return Err(Error::LengthMismatch {
                left: self.length,
                right: t.len(),
            });
        }
        Self::from_raw(self.length, self.words.iter().map(|w| w.bits() ^ t.bits()))
    }

    /// Drops the last coordinate of every word; collisions merge.
    pub fn puncture_last(&self) -> Result<Self> {
        if self.length < 2 {
            return Err(Error::InvalidLength(self.length - 1));
        }
        Self::from_raw(self.length - 1, self.words.iter().map(|w| w.bits() >> 1))
    }

    /// Appends the coordinate sum to every word.
    pub fn extend_parity(&self) -> Result<Self> {
        if self.length == MAX_LENGTH {
            return Err(Error::InvalidLength(MAX_LENGTH + 1));
        }
        Self::from_raw(
            self.length + 1,
            self.words
                .iter()
                .map(|w| (w.bits() << 1) | w.parity() as u64),
        )
    }

    /// True when every word's last coordinate is the parity of the others.
    pub fn has_parity_structure(&self) -> bool {
        self.length >= 2 && self.words.iter().all(|w| !w.parity())
    }

    /// Keeps only the coordinates in `0..k` (no merging check).
    pub(crate) fn projection_raw(&self, k: usize) -> Vec<u64> {
        let shift = self.length - k;
        self.words
            .iter()
            .map(|w| (w.bits() >> shift) & low_mask(k))
            .collect()
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for BinaryCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.words.iter())
    }
}

/// Weight and distance distributions of one code, side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionReport {
    pub length: usize,
    pub size: usize,
    /// `None` when the code does not contain zero.
    pub weight: Option<Vec<u64>>,
    #[serde(serialize_with = "serialize_ratios")]
    pub distance: Vec<Ratio<u64>>,
}

impl DistributionReport {
    /// `B_i == W_i` for every `i`.
    pub fn weight_matches_distance(&self) -> bool {
        match &self.weight {
            Some(w) => w
                .iter()
                .zip(&self.distance)
                .all(|(&wi, bi)| Ratio::from_integer(wi) == *bi),
            None => false,
        }
    }
}

#[derive(Serialize)]
struct RationalJson {
    num: u64,
    den: u64,
}

fn serialize_ratios<S: serde::Serializer>(
    v: &[Ratio<u64>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| RationalJson {
        num: *r.numer(),
        den: *r.denom(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> BinaryCode {
        BinaryCode::parse_words(s).unwrap()
    }

    #[test]
    fn example_pair_min_distances() {
        assert_eq!(code("00000 11001 00111").min_distance().unwrap(), 3);
        assert_eq!(code("00000 10011 11001").min_distance().unwrap(), 2);
        assert_eq!(BinaryCode::full_space(3).unwrap().min_distance().unwrap(), 1);
    }

    #[test]
    fn single_word_rejects_metric() {
        let c = code("0101");
        assert_eq!(c.min_distance(), Err(Error::TooFewWords(1)));
    }

    #[test]
    fn duplicates_merge() {
        let c = code("01 01 10");
        assert_eq!(c.size(), 2);
        assert!(BinaryCode::parse_words("01 101").is_err());
    }

    #[test]
    fn weight_distribution_needs_zero() {
        assert_eq!(code("01 10").weight_distribution(), Err(Error::MissingZero));
        assert_eq!(
            code("00000 11001 00111").weight_distribution().unwrap(),
            vec![1, 0, 0, 2, 0, 0]
        );
    }

    #[test]
    fn nonlinear_distance_distribution_is_fractional() {
        let b = code("00000 11001 00111").distance_distribution();
        assert_eq!(b[0], Ratio::from_integer(1));
        assert_eq!(b[3], Ratio::new(4, 3));
        assert_eq!(b[4], Ratio::new(2, 3));
        assert_eq!(b.iter().sum::<Ratio<u64>>(), Ratio::from_integer(3));
    }

    #[test]
    fn linearity() {
        assert!(!code("00000 11001 00111").is_linear());
        assert!(code("000 101").is_linear());
        assert!(!code("101 111").is_linear());
        let rows: [Codeword; 2] = ["01011".parse().unwrap(), "10101".parse().unwrap()];
        assert!(BinaryCode::span(5, &rows).unwrap().is_linear());
    }

    #[test]
    fn translate_moves_word_to_zero() {
        let c = code("10 11");
        let t = c.translate(&"10".parse().unwrap()).unwrap();
        assert_eq!(t, code("00 01"));
        assert_eq!(c.translate(&"00".parse().unwrap()).unwrap(), c);
        assert!(c.translate(&"100".parse().unwrap()).is_err());
    }

    #[test]
    fn puncture_and_extend() {
        assert_eq!(code("00 01").puncture_last().unwrap(), code("0"));
        assert!(code("0 1").puncture_last().is_err());
        assert_eq!(code("000").extend_parity().unwrap(), code("0000"));
        let c = code("00000 11001 00111");
        assert_eq!(c.extend_parity().unwrap().puncture_last().unwrap(), c);
        assert!(c.extend_parity().unwrap().has_parity_structure());
    }

    #[test]
    fn span_of_dependent_rows() {
        let rows: Vec<Codeword> = ["110", "011", "101"].iter().map(|s| s.parse().unwrap()).collect();
        let s = BinaryCode::span(3, &rows).unwrap();
        assert_eq!(s, BinaryCode::even_weight(3).unwrap());
    }
}
