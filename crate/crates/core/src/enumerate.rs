//! Depth-first enumeration of systematic codes with a distance floor.
//!
//! Table entries are assigned in message order `1, 2, ...`, each trying
//! redundancy values in ascending order, so leaves appear in lexicographic
//! table order. A branch dies as soon as the newly placed codeword sits at
//! distance `< d` from an earlier one; only the new word is compared.
//! The forest is split on the value of entry 1 for parallel runs.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::BinaryCode;
use crate::error::{Error, Result};
use crate::systematic::EncodingTable;

pub const MAX_ENUMERATION_LENGTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Keep every table found.
    Collect,
    /// Only count leaves.
    CountOnly,
    /// Stop at the first table in canonical order.
    FirstOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub n: usize,
    pub d: usize,
    pub mode: SearchMode,
    /// Codes found; for `FirstOnly` this is 0 or 1.
    pub count: u64,
    /// Empty in `CountOnly` mode.
    pub tables: Vec<EncodingTable>,
    pub nodes_explored: u64,
}

impl EnumerationResult {
    pub fn codes(&self) -> Vec<BinaryCode> {
        self.tables.iter().map(EncodingTable::to_code).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }
}

fn check_guard(n: usize, d: usize) -> Result<(usize, usize)> {
    if d < 1 || d >= n || n > MAX_ENUMERATION_LENGTH {
        return Err(Error::InvalidParameters(format!(
            "enumeration needs 1 <= d < n <= {MAX_ENUMERATION_LENGTH}, got n = {n}, d = {d}"
        )));
    }
    Ok((n - d, d))
}

/// All systematic AMDS codes of length `n` and minimum distance exactly `d`
/// that contain zero, as encoding tables with `k = n - d`, `r = d`.
///
/// Runs on the current rayon pool. Output is identical for any pool size.
pub fn enumerate_systematic_amds(n: usize, d: usize, mode: SearchMode) -> Result<EnumerationResult> {
    let (k, r) = check_guard(n, d)?;

    let branches: Vec<Branch> = (0..1u64 << r)
        .into_par_iter()
        .map(|first| {
            let mut s = Search::new(k, r, d, mode);
            s.run_branch(first);
            Branch {
                count: s.count,
                nodes: s.nodes,
                tables: s.found,
            }
        })
        .collect();

    let nodes_explored = 1 + branches.iter().map(|b| b.nodes).sum::<u64>();
    let (count, mut tables) = match mode {
        SearchMode::FirstOnly => match branches.into_iter().find(|b| b.count > 0) {
            Some(b) => (1, b.tables),
            None => (0, Vec::new()),
        },
        _ => {
            let count = branches.iter().map(|b| b.count).sum();
            (count, branches.into_iter().flat_map(|b| b.tables).collect())
        }
    };
    let tables = {
        tables.sort_unstable();
        tables
            .into_iter()
            .map(|raw| EncodingTable::new(k, r, raw))
            .collect::<Result<Vec<_>>>()?
    };

    Ok(EnumerationResult {
        n,
        d,
        mode,
        count,
        tables,
        nodes_explored,
    })
}

/// Whether any systematic AMDS code with parameters `(n, d)` exists.
pub fn exists_systematic_amds(n: usize, d: usize) -> Result<bool> {
    Ok(!enumerate_systematic_amds(n, d, SearchMode::FirstOnly)?.is_empty())
}

struct Branch {
    count: u64,
    nodes: u64,
    tables: Vec<Vec<u64>>,
}

struct Search {
    r: usize,
    d: u32,
    messages: usize,
    mode: SearchMode,
    /// Full codewords placed so far, indexed by message.
    words: Vec<u64>,
    count: u64,
    nodes: u64,
    found: Vec<Vec<u64>>,
    done: bool,
}

impl Search {
    fn new(k: usize, r: usize, d: usize, mode: SearchMode) -> Self {
        let messages = 1usize << k;
        Self {
            r,
            d: d as u32,
            messages,
            mode,
            words: vec![0; messages],
            count: 0,
            nodes: 0,
            found: Vec::new(),
            done: false,
        }
    }

    fn run_branch(&mut self, first: u64) {
        let w = (1u64 << self.r) | first;
        let dist = w.count_ones();
        if dist < self.d {
            return;
        }
        self.words[1] = w;
        self.nodes += 1;
        self.descend(2, dist);
    }

    fn descend(&mut self, message: usize, min_dist: u32) {
        if message == self.messages {
            if min_dist == self.d {
                self.record();
            }
            return;
        }
        let base = (message as u64) << self.r;
        for value in 0..1u64 << self.r {
            let w = base | value;
            let mut local = min_dist;
            let mut ok = true;
            for &p in &self.words[..message] {
                let dist = (w ^ p).count_ones();
                if dist < self.d {
                    ok = false;
                    break;
                }
                local = local.min(dist);
            }
            if !ok {
                continue;
            }
            self.words[message] = w;
            self.nodes += 1;
            self.descend(message + 1, local);
            if self.done {
                return;
            }
        }
    }

    fn record(&mut self) {
        self.count += 1;
        let mask = (1u64 << self.r) - 1;
        match self.mode {
            SearchMode::CountOnly => {}
            SearchMode::Collect => self.found.push(self.words.iter().map(|w| w & mask).collect()),
            SearchMode::FirstOnly => {
                self.found.push(self.words.iter().map(|w| w & mask).collect());
                self.done = true;
            }
        }
    }
}
