//! Size bounds for codes of given length and minimum distance.
//!
//! Singleton, Hamming (sphere packing) and the AMDS dimension caps take an
//! alphabet size `q`; the binary wrappers fix `q = 2`. Plotkin is binary only.

use serde::Serialize;

use crate::code::BinaryCode;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundName {
    Singleton,
    Hamming,
    Plotkin,
    AmdsRestriction,
}

/// Upper bound on code size, or no constraint at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxSize {
    Bounded(u128),
    Unconstrained,
}

impl MaxSize {
    pub fn admits(&self, size: u128) -> bool {
        match *self {
            MaxSize::Bounded(m) => size <= m,
            MaxSize::Unconstrained => true,
        }
    }

    pub fn bounded(&self) -> Option<u128> {
        match *self {
            MaxSize::Bounded(m) => Some(m),
            MaxSize::Unconstrained => None,
        }
    }
}

impl Serialize for MaxSize {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MaxSize::Bounded(m) => s.serialize_u128(*m),
            MaxSize::Unconstrained => s.serialize_str("no constraint"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub bound: BoundName,
    pub max_size: MaxSize,
    /// Whether `size` reaches `max_size` exactly.
    pub attained: bool,
    /// Whether `size` does not exceed `max_size`.
    pub satisfied: bool,
}

fn check_nd(n: usize, d: usize) -> Result<()> {
    if d < 1 || d > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameters(format!("alphabet size q = {q} < 2")));
    }
    Ok(())
}

fn pow(q: u64, e: usize, what: &'static str) -> Result<u128> {
    u32::try_from(e)
        .ok()
        .and_then(|e| (q as u128).checked_pow(e))
        .ok_or(Error::Overflow(what))
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `q^(n-d+1)`.
pub fn singleton_max_q(n: usize, d: usize, q: u64) -> Result<u128> {
    check_nd(n, d)?;
    check_q(q)?;
    pow(q, n - d + 1, "Singleton bound")
}

pub fn singleton_max(n: usize, d: usize) -> Result<u128> {
    singleton_max_q(n, d, 2)
}

/// Volume of a Hamming ball of radius `radius` in `F_q^n`.
pub fn ball_volume(n: usize, radius: usize, q: u64) -> Result<u128> {
    let mut total: u128 = 0;
    for j in 0..=radius.min(n) {
        let term = binomial(n, j)
            .checked_mul(pow(q - 1, j, "ball volume")?)
            .ok_or(Error::Overflow("ball volume"))?;
        total = total.checked_add(term).ok_or(Error::Overflow("ball volume"))?;
    }
    Ok(total)
}

/// `floor(q^n / V)` with `V` the volume of a ball of radius `floor((d-1)/2)`.
pub fn hamming_max_q(n: usize, d: usize, q: u64) -> Result<u128> {
    check_nd(n, d)?;
    check_q(q)?;
    let space = pow(q, n, "Hamming bound")?;
    Ok(space / ball_volume(n, (d - 1) / 2, q)?)
}

pub fn hamming_max(n: usize, d: usize) -> Result<u128> {
    hamming_max_q(n, d, 2)
}

/// Binary Plotkin bound: `2 * floor(d / (2d - n))` when `2d > n`.
pub fn plotkin_max(n: usize, d: usize) -> Result<MaxSize> {
    check_nd(n, d)?;
    if 2 * d > n {
        Ok(MaxSize::Bounded(2 * (d / (2 * d - n)) as u128))
    } else {
        Ok(MaxSize::Unconstrained)
    }
}

/// Largest `k` with `q^k` words allowed for an AMDS code with `d >= 3`:
/// `q^2 + q - 2`.
pub fn amds_dimension_cap_q(d: usize, q: u64) -> Result<u64> {
    check_q(q)?;
    if d < 3 {
        return Err(Error::RestrictionUndefined(d));
    }
    Ok(q * q + q - 2)
}

pub fn amds_dimension_cap(d: usize) -> Result<u64> {
    amds_dimension_cap_q(d, 2)
}

/// Largest `k` with `q^k` words allowed for an MDS code with `d >= 3`: `q - 1`.
pub fn mds_dimension_cap_q(d: usize, q: u64) -> Result<u64> {
    check_q(q)?;
    if d < 3 {
        return Err(Error::RestrictionUndefined(d));
    }
    Ok(q - 1)
}

pub fn mds_dimension_cap(d: usize) -> Result<u64> {
    mds_dimension_cap_q(d, 2)
}

pub fn is_mds(code: &BinaryCode) -> Result<bool> {
    let d = code.min_distance()?;
    Ok(singleton_max(code.length(), d)? == code.size() as u128)
}

pub fn is_amds(code: &BinaryCode) -> Result<bool> {
    let d = code.min_distance()?;
    Ok(pow(2, code.length() - d, "AMDS size")? == code.size() as u128)
}

/// Every bound evaluated at `(n, d)` against a code of `size` words.
pub fn all_verdicts(n: usize, d: usize, size: u128) -> Result<Vec<BoundVerdict>> {
    let verdict = |bound, max_size: MaxSize| BoundVerdict {
        bound,
        max_size,
        attained: max_size.bounded() == Some(size),
        satisfied: max_size.admits(size),
    };
    let amds = match amds_dimension_cap(d) {
        Ok(k) => MaxSize::Bounded(pow(2, k as usize, "AMDS cap")?),
        Err(_) => MaxSize::Unconstrained,
    };
    Ok(vec![
        verdict(BoundName::Singleton, MaxSize::Bounded(singleton_max(n, d)?)),
        verdict(BoundName::Hamming, MaxSize::Bounded(hamming_max(n, d)?)),
        verdict(BoundName::Plotkin, plotkin_max(n, d)?),
        verdict(BoundName::AmdsRestriction, amds),
    ])
}

/// Whether `2^k` words at `(n, d)` pass Singleton, Hamming and Plotkin.
pub fn size_passes_classical_bounds(n: usize, d: usize, k: usize) -> Result<bool> {
    let size = pow(2, k, "code size")?;
    Ok(size <= singleton_max(n, d)?
        && size <= hamming_max(n, d)?
        && plotkin_max(n, d)?.admits(size))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_values() {
        assert_eq!(singleton_max(7, 3).unwrap(), 32);
        assert_eq!(singleton_max(9, 9).unwrap(), 2);
        assert_eq!(singleton_max(8, 4).unwrap() / 2, 16);
        assert!(singleton_max(3, 4).is_err());
        assert!(singleton_max(3, 0).is_err());
        assert_eq!(singleton_max_q(4, 2, 3).unwrap(), 27);
    }

    #[test]
    fn hamming_values() {
        assert_eq!(hamming_max(7, 3).unwrap(), 16);
        assert_eq!(hamming_max(9, 5).unwrap(), 11);
        assert_eq!(hamming_max(6, 1).unwrap(), 64);
        assert_eq!(hamming_max(64, 1).unwrap(), 1u128 << 64);
        assert_eq!(hamming_max_q(4, 3, 3).unwrap(), 81 / 9);
    }

    #[test]
    fn plotkin_values() {
        assert_eq!(plotkin_max(7, 5).unwrap(), MaxSize::Bounded(2));
        assert_eq!(plotkin_max(6, 3).unwrap(), MaxSize::Unconstrained);
        assert_eq!(plotkin_max(4, 3).unwrap(), MaxSize::Bounded(2));
    }

    #[test]
    fn dimension_caps() {
        assert_eq!(amds_dimension_cap(3).unwrap(), 4);
        assert_eq!(mds_dimension_cap(3).unwrap(), 1);
        assert_eq!(amds_dimension_cap(2), Err(Error::RestrictionUndefined(2)));
        assert_eq!(amds_dimension_cap_q(3, 3).unwrap(), 10);
    }

    #[test]
    fn mds_amds_predicates() {
        assert!(is_mds(&BinaryCode::repetition(3).unwrap()).unwrap());
        assert!(is_mds(&BinaryCode::full_space(4).unwrap()).unwrap());
        assert!(!is_amds(&BinaryCode::full_space(4).unwrap()).unwrap());
        let c = BinaryCode::parse_words("00000 01011 10101 11110").unwrap();
        assert!(!is_mds(&c).unwrap());
        assert!(is_amds(&c).unwrap());
        let two = BinaryCode::parse_words("00000 11110").unwrap();
        assert!(is_amds(&two).unwrap());
        assert!(is_mds(&BinaryCode::parse_words("0").unwrap()).is_err());
    }

    #[test]
    fn monotone_in_d() {
        for n in 1..=40 {
            for d in 2..=n {
                assert!(singleton_max(n, d).unwrap() <= singleton_max(n, d - 1).unwrap());
                assert!(hamming_max(n, d).unwrap() <= hamming_max(n, d - 1).unwrap());
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(15, 7), 6435);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(3, 5), 0);
    }
}
