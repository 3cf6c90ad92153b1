//! Systematic encoding tables and the small-distance characterizations.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::code::BinaryCode;
use crate::codeword::{low_mask, Codeword, MAX_LENGTH};
use crate::error::{Error, Result};

/// Largest message length for which a table is materialized.
pub const MAX_MESSAGE_BITS: usize = 24;

/// A systematic encoding function `F_2^k -> F_2^r` stored as `2^k`
/// redundancy values; entry `m` is the image of the message whose bits
/// spell `m` (leftmost bit most significant). Entry 0 is always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodingTable {
    k: usize,
    r: usize,
    table: Vec<u64>,
}

impl EncodingTable {
    pub fn new(k: usize, r: usize, table: Vec<u64>) -> Result<Self> {
        if r == 0 || k + r > MAX_LENGTH || k > MAX_MESSAGE_BITS {
            return Err(Error::InvalidParameters(format!(
                "table shape k = {k}, r = {r} outside 0 <= k <= {MAX_MESSAGE_BITS}, 1 <= r, k + r <= 64"
            )));
        }
        if table.len() != 1 << k {
            return Err(Error::InvalidParameters(format!(
                "table for k = {k} needs {} entries, got {}",
                1usize << k,
                table.len()
            )));
        }
        if table[0] != 0 {
            return Err(Error::InvalidParameters(
                "the zero message must encode to zero".into(),
            ));
        }
        if let Some(v) = table.iter().find(|&&v| v & !low_mask(r) != 0) {
            return Err(Error::InvalidParameters(format!(
                "table value {v:#x} wider than r = {r} bits"
            )));
        }
        Ok(Self { k, r, table })
    }

    pub fn from_words(k: usize, words: &[Codeword]) -> Result<Self> {
        let r = words.first().map(Codeword::len).unwrap_or(0);
        if let Some(bad) = words.iter().find(|w| w.len() != r) {
            return Err(Error::LengthMismatch {
                left: r,
                right: bad.len(),
            });
        }
        Self::new(k, r, words.iter().map(Codeword::bits).collect())
    }

    /// Reads the redundancy part of a systematic code.
    pub fn from_code(code: &BinaryCode, k: usize) -> Result<Self> {
        if !is_systematic(code, k)? {
            return Err(Error::InvalidParameters(format!(
                "code is not systematic on its first {k} coordinates"
            )));
        }
        let r = code.length() - k;
        let mut table = vec![0u64; 1 << k];
        for w in code.words() {
            table[(w.bits() >> r) as usize] = w.bits() & low_mask(r);
        }
        Self::new(k, r, table)
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.k + self.r
    }

    pub fn get(&self, message: usize) -> Codeword {
        Codeword::from_raw(self.table[message], self.r)
    }

    pub fn raw(&self) -> &[u64] {
        &self.table
    }

    /// `{(v, phi(v)) : v in F_2^k}`.
    pub fn to_code(&self) -> BinaryCode {
        code_from_table(self)
    }
}

impl fmt::Debug for EncodingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EncodingTable(k={}, r={}, [", self.k, self.r)?;
        for m in 0..self.table.len() {
            if m > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.get(m))?;
        }
        f.write_str("])")
    }
}

impl Serialize for EncodingTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq((0..self.table.len()).map(|m| self.get(m)))
    }
}

pub fn code_from_table(t: &EncodingTable) -> BinaryCode {
    let n = t.n();
    BinaryCode::from_raw(
        n,
        t.table
            .iter()
            .enumerate()
            .map(|(m, &v)| ((m as u64) << t.r) | v),
    )
    .expect("table shape validated at construction")
}

/// Contains zero and projects bijectively onto the first `k` coordinates.
pub fn is_systematic(code: &BinaryCode, k: usize) -> Result<bool> {
    if k > MAX_MESSAGE_BITS || code.size() != 1 << k {
        return Err(Error::SizeNotPowerOfTwo {
            k,
            size: code.size(),
        });
    }
    if code.length() <= k {
        return Err(Error::InvalidParameters(format!(
            "length {} must exceed k = {k}",
            code.length()
        )));
    }
    if !code.contains_zero() {
        return Ok(false);
    }
    let mut seen = vec![false; 1 << k];
    for p in code.projection_raw(k) {
        if std::mem::replace(&mut seen[p as usize], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether a one-bit table is `m -> wt(m) mod 2`.
pub fn is_parity_check_function(t: &EncodingTable) -> Result<bool> {
    if t.r != 1 {
        return Err(Error::InvalidParameters(format!(
            "parity-check test needs r = 1, got r = {}",
            t.r
        )));
    }
    Ok(t
        .table
        .iter()
        .enumerate()
        .all(|(m, &v)| v == (m.count_ones() & 1) as u64))
}

/// Number of binary systematic AMDS codes of length `n` with `d = 1`:
/// `2^(2^(n-1) - 1) - 1`.
pub fn count_d1_amds(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 2, got {n}")));
    }
    if n > MAX_MESSAGE_BITS + 1 {
        return Err(Error::InvalidParameters(format!(
            "count for n = {n} has 2^{} bits; limit is n <= {}",
            n - 1,
            MAX_MESSAGE_BITS + 1
        )));
    }
    let exponent = (1u64 << (n - 1)) - 1;
    Ok((BigUint::from(1u8) << exponent) - 1u8)
}

/// Zero at zero, and distinct values on every pair of adjacent messages.
pub fn check_d2_characterization(t: &EncodingTable) -> Result<bool> {
    if t.r != 2 || t.k < 2 {
        return Err(Error::InvalidParameters(format!(
            "characterization needs r = 2 and k >= 2, got r = {}, k = {}",
            t.r, t.k
        )));
    }
    if t.table[0] != 0 {
        return Ok(false);
    }
    for m in 0..t.table.len() {
        for bit in 0..t.k {
            let other = m ^ (1 << bit);
            if other > m && t.table[m] == t.table[other] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{0, (1, v)}` with `wt(v) = n - 2`; the two-word systematic AMDS shape.
pub fn two_word_code(v: &Codeword) -> Result<BinaryCode> {
    let head = Codeword::ones(1)?;
    let n = v.len() + 1;
    BinaryCode::new(n, [Codeword::zero(n)?, head.concat(v)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::is_amds;

    fn words(s: &str) -> Vec<Codeword> {
        s.split_whitespace().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn repetition_from_table() {
        let t = EncodingTable::from_words(1, &words("00 11")).unwrap();
        assert_eq!(t.to_code(), BinaryCode::repetition(3).unwrap());
    }

    #[test]
    fn zero_map_has_distance_one() {
        let t = EncodingTable::new(2, 1, vec![0; 4]).unwrap();
        let c = t.to_code();
        assert_eq!(c, BinaryCode::parse_words("000 010 100 110").unwrap());
        assert_eq!(c.min_distance().unwrap(), 1);
    }

    #[test]
    fn table_five_three() {
        // Rows 01011 and 10101 span the code; message bits are the first two.
        let t = EncodingTable::from_words(2, &words("000 011 101 110")).unwrap();
        let c = t.to_code();
        assert_eq!(c, BinaryCode::parse_words("00000 01011 10101 11110").unwrap());
        assert_eq!(EncodingTable::from_code(&c, 2).unwrap(), t);
    }

    #[test]
    fn table_validation() {
        assert!(EncodingTable::new(1, 2, vec![1, 0]).is_err());
        assert!(EncodingTable::new(2, 1, vec![0, 0, 0]).is_err());
        assert!(EncodingTable::new(1, 1, vec![0, 2]).is_err());
        assert!(EncodingTable::new(1, 0, vec![0, 0]).is_err());
    }

    #[test]
    fn systematic_checks() {
        let c = BinaryCode::parse_words("00000 11001 00111").unwrap();
        assert!(matches!(is_systematic(&c, 1), Err(Error::SizeNotPowerOfTwo { .. })));
        let t = EncodingTable::new(3, 2, vec![0, 1, 2, 3, 1, 2, 3, 0]).unwrap();
        assert!(is_systematic(&t.to_code(), 3).unwrap());
        // Projection onto the first coordinate is not onto.
        let c = BinaryCode::parse_words("000 011").unwrap();
        assert!(!is_systematic(&c, 1).unwrap());
        let c = BinaryCode::parse_words("100 111").unwrap();
        assert!(!is_systematic(&c, 1).unwrap());
    }

    #[test]
    fn parity_function() {
        let t = EncodingTable::new(2, 1, vec![0, 1, 1, 0]).unwrap();
        assert!(is_parity_check_function(&t).unwrap());
        let t = EncodingTable::new(2, 1, vec![0, 0, 0, 0]).unwrap();
        assert!(!is_parity_check_function(&t).unwrap());
        let t = EncodingTable::new(1, 1, vec![0, 1]).unwrap();
        assert!(is_parity_check_function(&t).unwrap());
        let t = EncodingTable::new(1, 2, vec![0, 1]).unwrap();
        assert!(is_parity_check_function(&t).is_err());
    }

    #[test]
    fn d1_counts() {
        assert_eq!(count_d1_amds(2).unwrap(), BigUint::from(1u8));
        assert_eq!(count_d1_amds(3).unwrap(), BigUint::from(7u8));
        assert_eq!(count_d1_amds(4).unwrap(), BigUint::from(127u8));
        assert_eq!(count_d1_amds(5).unwrap(), BigUint::from(32767u16));
        assert!(count_d1_amds(1).is_err());
        assert_eq!(count_d1_amds(8).unwrap().bits(), 127);
    }

    #[test]
    fn d2_condition() {
        let t = EncodingTable::new(2, 2, vec![0, 1, 2, 3]).unwrap();
        assert!(check_d2_characterization(&t).unwrap());
        let t = EncodingTable::new(2, 2, vec![0, 0, 1, 2]).unwrap();
        assert!(!check_d2_characterization(&t).unwrap());
        let t = EncodingTable::new(2, 1, vec![0, 1, 1, 0]).unwrap();
        assert!(check_d2_characterization(&t).is_err());
    }

    #[test]
    fn two_word_shape() {
        let c = two_word_code(&"110".parse().unwrap()).unwrap();
        assert!(is_amds(&c).unwrap());
        assert!(is_systematic(&c, 1).unwrap());
        let rep = two_word_code(&"111".parse().unwrap()).unwrap();
        assert!(!is_amds(&rep).unwrap());
    }
}
