//! Isometries of binary Hamming space, canonical forms and code equivalences.
//!
//! For `q = 2` every distance-preserving bijection of `F_2^n` is a
//! translation followed by a coordinate permutation.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::code::BinaryCode;
use crate::codeword::{low_mask, Codeword};
use crate::error::{Error, Result};

/// `w -> permute(w xor translation)`, where output position `j` takes the
/// coordinate `permutation[j]` of the translated word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    translation: Codeword,
    permutation: Vec<usize>,
}

impl Isometry {
    pub fn new(translation: Codeword, permutation: Vec<usize>) -> Result<Self> {
        let n = translation.len();
        if permutation.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: permutation.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &permutation {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters(format!(
                    "{permutation:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Self {
            translation,
            permutation,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(Codeword::zero(n)?, (0..n).collect())
    }

    pub fn translation(t: Codeword) -> Self {
        Self {
            permutation: (0..t.len()).collect(),
            translation: t,
        }
    }

    pub fn permutation(permutation: Vec<usize>) -> Result<Self> {
        Self::new(Codeword::zero(permutation.len())?, permutation)
    }

    pub fn length(&self) -> usize {
        self.translation.len()
    }

    pub fn translation_part(&self) -> &Codeword {
        &self.translation
    }

    pub fn permutation_part(&self) -> &[usize] {
        &self.permutation
    }

    fn permute_raw(&self, bits: u64) -> u64 {
        let n = self.length();
        self.permutation
            .iter()
            .fold(0u64, |acc, &src| (acc << 1) | ((bits >> (n - 1 - src)) & 1))
    }

    pub fn apply_word(&self, w: &Codeword) -> Result<Codeword> {
        let t = w.xor(&self.translation)?;
        Ok(Codeword::from_raw(self.permute_raw(t.bits()), self.length()))
    }

    pub fn apply(&self, code: &BinaryCode) -> Result<BinaryCode> {
        if code.length() != self.length() {
            return Err(Error::LengthMismatch {
                left: self.length(),
                right: code.length(),
            });
        }
        let t = self.translation.bits();
        BinaryCode::from_raw(
            self.length(),
            code.words().iter().map(|w| self.permute_raw(w.bits() ^ t)),
        )
    }

    /// `self ∘ inner`: applies `inner` first.
    pub fn compose(&self, inner: &Isometry) -> Result<Isometry> {
        let n = self.length();
        if inner.length() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: inner.length(),
            });
        }
        // self(inner(w)) = P_s(P_i(w + t_i) + t_s) = P_s P_i (w + t_i + P_i^-1 t_s)
        let mut pulled = 0u64;
        for (j, &src) in inner.permutation.iter().enumerate() {
            if self.translation.get(j) {
                pulled |= 1 << (n - 1 - src);
            }
        }
        let translation = Codeword::from_raw(inner.translation.bits() ^ pulled, n);
        let permutation = self.permutation.iter().map(|&p| inner.permutation[p]).collect();
        Isometry::new(translation, permutation)
    }
}

/// Lexicographically least sorted word list over all isometric images.
pub fn canonical_form(code: &BinaryCode) -> BinaryCode {
    canonical_form_with_isometry(code).0
}

/// The canonical form together with an isometry mapping `code` onto it.
///
/// Translations range over the words of `code`, so the image contains zero
/// and its first word is `0`. The permutation is built one output word at a
/// time: given the ordered partition of coordinates fixed so far, each
/// remaining word has a least possible image (its ones pushed to the right
/// end of every cell). The next word of the sorted list is the least of
/// these, and choosing it splits every cell into its zero and one parts.
/// Only ties branch; a branch stops once its partial list exceeds the best
/// complete list seen.
pub fn canonical_form_with_isometry(code: &BinaryCode) -> (BinaryCode, Isometry) {
    let n = code.length();
    let raw = code.raw_words();
    let mut search = CanonSearch {
        n,
        translation: 0,
        best: None,
    };
    for &t in &raw {
        search.translation = t;
        let remaining: Vec<u64> = raw.iter().map(|w| w ^ t).filter(|&w| w != 0).collect();
        search.descend(vec![(0..n).collect()], vec![0], remaining);
    }
    let best = search.best.expect("code has at least one word");
    let canon = BinaryCode::from_raw(n, best.words).expect("same length as input");
    let iso = Isometry::new(Codeword::from_raw(best.translation, n), best.permutation)
        .expect("search yields a permutation");
    (canon, iso)
}

/// Ordered partition of source coordinates. Output positions are handed out
/// block by block in cell order.
type Cells = Vec<Vec<usize>>;

struct Best {
    words: Vec<u64>,
    translation: u64,
    permutation: Vec<usize>,
}

struct CanonSearch {
    n: usize,
    translation: u64,
    best: Option<Best>,
}

impl CanonSearch {
    #[inline]
    fn bit(&self, w: u64, pos: usize) -> bool {
        (w >> (self.n - 1 - pos)) & 1 == 1
    }

    fn min_image(&self, cells: &Cells, w: u64) -> u64 {
        cells.iter().fold(0u64, |img, cell| {
            let ones = cell.iter().filter(|&&p| self.bit(w, p)).count();
            shl(img, cell.len()) | low_mask(ones)
        })
    }

    fn image(&self, perm: &[usize], w: u64) -> u64 {
        perm.iter()
            .fold(0u64, |acc, &src| (acc << 1) | self.bit(w, src) as u64)
    }

    fn refine(&self, cells: &Cells, w: u64) -> Cells {
        let mut out = Vec::with_capacity(cells.len() + 1);
        for cell in cells {
            let (ones, zeros): (Vec<usize>, Vec<usize>) =
                cell.iter().partition(|&&p| self.bit(w, p));
            if !zeros.is_empty() {
                out.push(zeros);
            }
            if !ones.is_empty() {
                out.push(ones);
            }
        }
        out
    }

    fn cmp_best(&self, placed: &[u64]) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => placed.cmp(&best.words[..placed.len()]),
        }
    }

    fn offer(&mut self, words: Vec<u64>, cells: &Cells) {
        if self.cmp_best(&words) == Ordering::Less {
            self.best = Some(Best {
                words,
                translation: self.translation,
                permutation: cells.iter().flatten().copied().collect(),
            });
        }
    }

    fn descend(&mut self, cells: Cells, mut placed: Vec<u64>, remaining: Vec<u64>) {
        if self.cmp_best(&placed) == Ordering::Greater {
            return;
        }
        if remaining.is_empty() {
            self.offer(placed, &cells);
            return;
        }
        if cells.len() == self.n {
            let perm: Vec<usize> = cells.iter().flatten().copied().collect();
            let mut rest: Vec<u64> = remaining.iter().map(|&w| self.image(&perm, w)).collect();
            rest.sort_unstable();
            placed.extend(rest);
            self.offer(placed, &cells);
            return;
        }

        let images: Vec<u64> = remaining.iter().map(|&w| self.min_image(&cells, w)).collect();
        let least = *images.iter().min().expect("non-empty");
        let mut tried: BTreeSet<Cells> = BTreeSet::new();
        placed.push(least);
        if self.cmp_best(&placed) == Ordering::Greater {
            return;
        }
        for (i, &w) in remaining.iter().enumerate() {
            if images[i] != least {
                continue;
            }
            let refined = self.refine(&cells, w);
            if !tried.insert(refined.clone()) {
                continue;
            }
            let rest: Vec<u64> = remaining
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            self.descend(refined, placed.clone(), rest);
        }
    }
}

#[inline]
fn shl(v: u64, by: usize) -> u64 {
    if by >= 64 {
        0
    } else {
        v << by
    }
}

fn check_same_length(c: &BinaryCode, d: &BinaryCode) -> Result<()> {
    if c.length() != d.length() {
        return Err(Error::LengthMismatch {
            left: c.length(),
            right: d.length(),
        });
    }
    Ok(())
}

/// For each translate by a word of the code, the sorted column weights; the
/// sorted list of these is an isometry invariant.
fn column_weight_signature(code: &BinaryCode) -> Vec<Vec<usize>> {
    let n = code.length();
    let raw = code.raw_words();
    let mut sig: Vec<Vec<usize>> = raw
        .iter()
        .map(|&t| {
            let mut cols: Vec<usize> = (0..n)
                .map(|pos| {
                    raw.iter()
                        .filter(|&&w| ((w ^ t) >> (n - 1 - pos)) & 1 == 1)
                        .count()
                })
                .collect();
            cols.sort_unstable();
            cols
        })
        .collect();
    sig.sort_unstable();
    sig
}

pub fn are_isometric(c: &BinaryCode, d: &BinaryCode) -> Result<bool> {
    check_same_length(c, d)?;
    if c.size() != d.size()
        || c.distance_pair_counts() != d.distance_pair_counts()
        || column_weight_signature(c) != column_weight_signature(d)
    {
        return Ok(false);
    }
    Ok(canonical_form(c) == canonical_form(d))
}

/// Same length and same weight distribution; both codes must contain zero.
pub fn are_w_equivalent(c: &BinaryCode, d: &BinaryCode) -> Result<bool> {
    let wc = c.weight_distribution()?;
    let wd = d.weight_distribution()?;
    Ok(c.length() == d.length() && wc == wd)
}

/// Same `[n, |C|, d]`.
pub fn are_p_equivalent(c: &BinaryCode, d: &BinaryCode) -> Result<bool> {
    let dc = c.min_distance()?;
    let dd = d.min_distance()?;
    Ok(c.length() == d.length() && c.size() == d.size() && dc == dd)
}

/// One canonical representative per isometry class, in ascending order.
pub fn dedupe_up_to_isometry(codes: &[BinaryCode]) -> Result<Vec<BinaryCode>> {
    if let Some(first) = codes.first() {
        for c in codes {
            check_same_length(first, c)?;
        }
    }
    let canon: BTreeSet<BinaryCode> = codes.par_iter().map(canonical_form).collect();
    Ok(canon.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> BinaryCode {
        BinaryCode::parse_words(s).unwrap()
    }

    #[test]
    fn identity_and_translation() {
        let c = code("00000 01011 10101 11110");
        assert_eq!(Isometry::identity(5).unwrap().apply(&c).unwrap(), c);
        let t = Isometry::translation("10101".parse().unwrap());
        assert!(t.apply(&c).unwrap().contains_zero());
    }

    #[test]
    fn column_swap_keeps_weights() {
        let c = code("00000 01011 10101 11110");
        let swap = Isometry::permutation(vec![1, 0, 2, 3, 4]).unwrap();
        let image = swap.apply(&c).unwrap();
        assert_eq!(image, code("00000 10011 01101 11110"));
        assert_eq!(image.weight_distribution(), c.weight_distribution());
    }

    #[test]
    fn rejects_bad_permutations() {
        let z = Codeword::zero(3).unwrap();
        assert!(Isometry::new(z, vec![0, 0, 1]).is_err());
        assert!(Isometry::new(z, vec![0, 1]).is_err());
        assert!(Isometry::new(z, vec![0, 1, 3]).is_err());
    }

    #[test]
    fn composition_matches_sequential_application() {
        let c = code("000000 001011 010101 100110 011110 101101 110011 111000");
        let i = Isometry::new("101100".parse().unwrap(), vec![2, 0, 5, 1, 4, 3]).unwrap();
        let j = Isometry::new("011001".parse().unwrap(), vec![4, 5, 3, 0, 2, 1]).unwrap();
        let lhs = i.compose(&j).unwrap().apply(&c).unwrap();
        let rhs = i.apply(&j.apply(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_of_single_word_and_pair() {
        assert_eq!(canonical_form(&code("1011")), code("0000"));
        assert_eq!(canonical_form(&code("1011 0110")), code("0000 0111"));
    }

    #[test]
    fn canonical_isometry_reaches_form() {
        let c = code("00000 11001 00111");
        let (canon, iso) = canonical_form_with_isometry(&c);
        assert_eq!(iso.apply(&c).unwrap(), canon);
        assert_eq!(canon, code("00000 00111 11001"));
    }

    #[test]
    fn example_pair_is_not_isometric() {
        let a = code("00000 11001 00111");
        let b = code("00000 10011 11001");
        assert_ne!(canonical_form(&a), canonical_form(&b));
        assert!(!are_isometric(&a, &b).unwrap());
        assert!(are_w_equivalent(&a, &b).unwrap());
        assert!(!are_p_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn translate_is_isometric() {
        let a = code("00000 11001 00111");
        let t = a.translate(&"10110".parse().unwrap()).unwrap();
        assert!(are_isometric(&a, &t).unwrap());
        assert!(are_isometric(&a, &code("000")).is_err());
    }

    #[test]
    fn equivalence_preconditions() {
        let no_zero = code("01 10");
        assert_eq!(are_w_equivalent(&no_zero, &no_zero), Err(Error::MissingZero));
        let one = code("01");
        assert!(matches!(are_p_equivalent(&one, &one), Err(Error::TooFewWords(1))));
    }

    #[test]
    fn dedupe_collapses_orbit() {
        let c = code("00000 01011 10101 11110");
        let t = c.translate(&"11110".parse().unwrap()).unwrap();
        let p = Isometry::permutation(vec![4, 3, 2, 1, 0]).unwrap().apply(&c).unwrap();
        let reps = dedupe_up_to_isometry(&[c, t, p]).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(dedupe_up_to_isometry(&[code("00"), code("000")]).is_err());
    }
}
