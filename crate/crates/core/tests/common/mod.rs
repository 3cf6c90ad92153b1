//! Independent oracles shared by the integration suites. Nothing here calls
//! the enumerator, the canonical-form search, or the bound formulas.

#![allow(dead_code)]

use amds_core::{BinaryCode, Codeword, Isometry};
use rand::seq::SliceRandom;
use rand::Rng;

/// `(2^r)^(2^k - 1)`: number of tables with entry 0 fixed to zero.
pub fn table_space(k: usize, r: usize) -> u128 {
    let exp = (r as u32) * ((1u32 << k) - 1);
    if exp >= 127 {
        u128::MAX
    } else {
        1u128 << exp
    }
}

/// Every table with `phi(0) = 0` whose code has minimum distance exactly `d`,
/// found by visiting all tables. Returned as raw redundancy vectors, sorted.
pub fn unpruned_tables(n: usize, d: usize) -> Vec<Vec<u64>> {
    let k = n - d;
    let r = d;
    let messages = 1usize << k;
    let radix = 1u64 << r;
    let mut table = vec![0u64; messages];
    let mut out = Vec::new();
    loop {
        let code = BinaryCode::from_raw(
            n,
            table.iter().enumerate().map(|(m, &v)| ((m as u64) << r) | v),
        )
        .unwrap();
        if code.size() == messages && code.min_distance().unwrap() == d {
            out.push(table.clone());
        }
        // odometer over entries 1..messages
        let mut i = messages - 1;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            table[i] += 1;
            if table[i] < radix {
                break;
            }
            table[i] = 0;
            i -= 1;
        }
    }
}

/// All `(n, d)` with `n <= 12` whose full table space is at most `limit`.
pub fn small_cases(limit: u128) -> Vec<(usize, usize)> {
    let mut cases = Vec::new();
    for n in 2..=12 {
        for d in 1..n {
            if table_space(n - d, d) <= limit {
                cases.push((n, d));
            }
        }
    }
    cases
}

/// Largest code in `F_2^n` with pairwise distance `>= d`, by plain
/// backtracking over words in increasing order.
pub fn brute_max_code(n: usize, d: u32) -> usize {
    fn rec(words: &mut Vec<u64>, next: u64, limit: u64, d: u32, best: &mut usize) {
        *best = (*best).max(words.len());
        for w in next..limit {
            if words.len() as u64 + (limit - w) <= *best as u64 {
                return;
            }
            if words.iter().all(|&x| (x ^ w).count_ones() >= d) {
                words.push(w);
                rec(words, w + 1, limit, d, best);
                words.pop();
            }
        }
    }
    let mut best = 0;
    // Translating puts zero in any code, so start from {0}.
    rec(&mut vec![0], 1, 1u64 << n, d, &mut best);
    best
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize) -> Codeword {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Codeword::new(rng.gen::<u64>() & mask, n).unwrap()
}

pub fn random_code<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> BinaryCode {
    let size = rng.gen_range(1..=max_size.min(1 << n));
    BinaryCode::new(n, (0..size).map(|_| random_word(rng, n))).unwrap()
}

pub fn random_isometry<R: Rng>(rng: &mut R, n: usize) -> Isometry {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Isometry::new(random_word(rng, n), perm).unwrap()
}

/// Sorted multiset of all pairwise distances.
pub fn distance_multiset(code: &BinaryCode) -> Vec<usize> {
    let w = code.words();
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            out.push(w[i].distance(&w[j]).unwrap());
        }
    }
    out.sort();
    out
}

/// Minimum over every translate-by-a-word and every coordinate permutation,
/// computed by listing all `n!` permutations. Only for small `n`.
pub fn brute_canonical(code: &BinaryCode) -> Vec<u64> {
    let n = code.length();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        for t in code.words() {
            let mut img: Vec<u64> = code
                .words()
                .iter()
                .map(|w| {
                    let x = w.bits() ^ t.bits();
                    perm.iter()
                        .fold(0u64, |acc, &src| (acc << 1) | ((x >> (n - 1 - src)) & 1))
                })
                .collect();
            img.sort();
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        }
        if !next_permutation(&mut perm) {
            return best.unwrap();
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
