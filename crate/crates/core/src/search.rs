//! Brute-force oracles over small binary pairs.
//!
//! Sequences of length N ≤ 31 are packed into a `u32` with bit `i` set iff
//! element `i` is -1. For such a word the autocorrelation at shift τ is
//! `(N-τ) - 2 * popcount((w ^ (w >> τ)) & mask(N-τ))`, so a pair's sum is
//! zero exactly when the two popcounts add up to `N-τ`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::correlation::correlate;
use crate::error::{Error, Result};
use crate::sequence::{BinarySequence, SequencePair, Sign};
use crate::zcp::{classify, ZcpReport, ZcpType};

pub const DEFAULT_CAP: usize = 13;
pub const DEFAULT_WITNESS_LIMIT: usize = 32;
/// Longest GCP accepted by [`insertion_search`] by default.
pub const DEFAULT_INSERTION_CAP: usize = 256;
/// Environment variable overriding the exhaustive length cap.
pub const CAP_ENV: &str = "GOLAYZCP_SEARCH_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: usize,
    pub insertion_cap: usize,
    pub witness_limit: usize,
    /// Enumerate only pairs whose rows both start with +1 and scale counts
    /// by four. Negating a row never changes its autocorrelation.
    pub symmetry_reduction: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            cap: DEFAULT_CAP,
            insertion_cap: DEFAULT_INSERTION_CAP,
            witness_limit: DEFAULT_WITNESS_LIMIT,
            symmetry_reduction: true,
        }
    }
}

impl SearchConfig {
    /// Defaults, with `cap` taken from [`CAP_ENV`] when it parses. The
    /// packed representation limits the cap to 31 regardless.
    pub fn from_env() -> Self {
        let mut config = SearchConfig::default();
        if let Some(cap) = std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            config.cap = cap.min(31);
        }
        config
    }

    fn check(&self, n: usize) -> Result<()> {
        if n < 3 || n > self.cap.min(31) {
            return Err(Error::SearchCap {
                n,
                cap: self.cap.min(31),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub zcp_type: ZcpType,
    pub max_zcz: usize,
    /// Exact number of ordered pairs attaining `max_zcz`.
    pub witness_count: u64,
    /// The first witnesses in enumeration order, capped.
    pub witnesses: Vec<SequencePair>,
}

fn unpack(word: u32, n: usize) -> BinarySequence {
    BinarySequence::from_raw(
        (0..n)
            .map(|i| if word >> i & 1 == 1 { -1 } else { 1 })
            .collect(),
    )
}

/// `popcount((w ^ (w >> τ)) & mask(N-τ))` for every τ in `0..n`.
fn disagreement_table(n: usize, words: impl Iterator<Item = u32>) -> Vec<[u8; 32]> {
    words
        .map(|w| {
            let mut row = [0u8; 32];
            for (tau, slot) in row.iter_mut().enumerate().take(n) {
                let mask = (1u32 << (n - tau)) - 1;
                *slot = ((w ^ (w >> tau)) & mask).count_ones() as u8;
            }
            row
        })
        .collect()
}

struct Enumeration {
    n: usize,
    words: Vec<u32>,
    table: Vec<[u8; 32]>,
    multiplicity: u64,
}

impl Enumeration {
    fn new(n: usize, config: &SearchConfig) -> Self {
        let words: Vec<u32> = if config.symmetry_reduction {
            (0..1u32 << n).filter(|w| w & 1 == 0).collect()
        } else {
            (0..1u32 << n).collect()
        };
        let table = disagreement_table(n, words.iter().copied());
        Enumeration {
            n,
            words,
            table,
            multiplicity: if config.symmetry_reduction { 4 } else { 1 },
        }
    }

    #[inline]
    fn zero_at(&self, i: usize, j: usize, tau: usize) -> bool {
        usize::from(self.table[i][tau] + self.table[j][tau]) == self.n - tau
    }

    fn zcz(&self, i: usize, j: usize, t: ZcpType) -> usize {
        let n = self.n;
        let run = match t {
            ZcpType::Type1 => (1..n).take_while(|&tau| self.zero_at(i, j, tau)).count(),
            ZcpType::Type2 => (1..n)
                .rev()
                .take_while(|&tau| self.zero_at(i, j, tau))
                .count(),
        };
        run + 1
    }

    fn pair(&self, i: usize, j: usize) -> SequencePair {
        SequencePair::new(unpack(self.words[i], self.n), unpack(self.words[j], self.n))
            .expect("equal lengths")
    }
}

/// Exhaustively finds the largest ZCZ width over all ordered binary pairs of
/// length `n`, the number of pairs attaining it, and the first witnesses in
/// lexicographic (first row, second row) order.
pub fn exhaustive_max_zcz(
    n: usize,
    zcp_type: ZcpType,
    config: &SearchConfig,
) -> Result<SearchResult> {
    config.check(n)?;
    let e = Enumeration::new(n, config);
    let limit = config.witness_limit;

    let per_row: Vec<(usize, u64, Vec<usize>)> = (0..e.words.len())
        .into_par_iter()
        .map(|i| {
            let mut best = 0;
            let mut count = 0u64;
            let mut wit = Vec::new();
            for j in 0..e.words.len() {
                let z = e.zcz(i, j, zcp_type);
                if z > best {
                    best = z;
                    count = 0;
                    wit.clear();
                }
                if z == best {
                    count += 1;
                    if wit.len() < limit {
                        wit.push(j);
                    }
                }
            }
            (best, count, wit)
        })
        .collect();

    let max_zcz = per_row.iter().map(|r| r.0).max().unwrap_or(1);
    let mut witness_count = 0u64;
    let mut witnesses = Vec::new();
    for (i, (best, count, wit)) in per_row.iter().enumerate() {
        if *best != max_zcz {
            continue;
        }
        witness_count += count;
        for &j in wit {
            if witnesses.len() < limit {
                witnesses.push(e.pair(i, j));
            }
        }
    }

    Ok(SearchResult {
        n,
        zcp_type,
        max_zcz,
        witness_count: witness_count * e.multiplicity,
        witnesses,
    })
}

/// Counts from an exhaustive check that Z-optimal pairs never have a zero
/// autocorrelation sum outside their zone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutOfZoneFloor {
    pub n: usize,
    pub z_optimal_type1: u64,
    pub z_optimal_type2: u64,
    pub violations: u64,
}

impl OutOfZoneFloor {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

pub fn out_of_zone_floor(n: usize, config: &SearchConfig) -> Result<OutOfZoneFloor> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    config.check(n)?;
    let e = Enumeration::new(n, config);
    let z_opt = n.div_ceil(2);

    let (t1, t2, bad) = (0..e.words.len())
        .into_par_iter()
        .map(|i| {
            let (mut t1, mut t2, mut bad) = (0u64, 0u64, 0u64);
            for j in 0..e.words.len() {
                if e.zcz(i, j, ZcpType::Type1) == z_opt {
                    t1 += 1;
                    if (z_opt..n).any(|tau| e.zero_at(i, j, tau)) {
                        bad += 1;
                    }
                }
                if e.zcz(i, j, ZcpType::Type2) == z_opt {
                    t2 += 1;
                    if (1..=n - z_opt).any(|tau| e.zero_at(i, j, tau)) {
                        bad += 1;
                    }
                }
            }
            (t1, t2, bad)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));

    Ok(OutOfZoneFloor {
        n,
        z_optimal_type1: t1 * e.multiplicity,
        z_optimal_type2: t2 * e.multiplicity,
        violations: bad * e.multiplicity,
    })
}

pub fn verify_out_of_zone_floor(n: usize, config: &SearchConfig) -> Result<bool> {
    out_of_zone_floor(n, config).map(|f| f.holds())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionHit {
    pub r_first: usize,
    pub r_second: usize,
    pub x: Sign,
    pub y: Sign,
    pub zcp_type: ZcpType,
    pub report: ZcpReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionSearchResult {
    pub base: String,
    pub base_length: usize,
    pub allow_unequal_positions: bool,
    pub candidates: u64,
    pub hits: Vec<InsertionHit>,
}

impl InsertionSearchResult {
    pub fn has_hit(&self, r_first: usize, r_second: usize, x: Sign, y: Sign, t: ZcpType) -> bool {
        self.hits
            .iter()
            .any(|h| (h.r_first, h.r_second, h.x, h.y, h.zcp_type) == (r_first, r_second, x, y, t))
    }

    pub fn count(&self, t: ZcpType) -> usize {
        self.hits.iter().filter(|h| h.zcp_type == t).count()
    }
}

/// Optimality test with early exit: zero on the zone, magnitude 2 outside.
fn is_optimal(a: &[i8], b: &[i8], t: ZcpType) -> bool {
    let n = a.len();
    if n.is_multiple_of(2) {
        return false;
    }
    let z = n.div_ceil(2);
    let sum = |tau: usize| correlate(a, a, tau) + correlate(b, b, tau);
    let in_zone = |tau: usize| match t {
        ZcpType::Type1 => tau < z,
        ZcpType::Type2 => tau > n - z,
    };
    // Check the zone first; it rejects almost everything.
    let (zone, rest): (Vec<usize>, Vec<usize>) = (1..n).partition(|&tau| in_zone(tau));
    zone.into_iter().all(|tau| sum(tau) == 0) && rest.into_iter().all(|tau| sum(tau).abs() == 2)
}

/// Tries every insertion `(r_first, r_second, x, y)` into `p` and returns
/// the combinations that give an optimal Type-I or Type-II pair. With
/// `allow_unequal_positions == false` only `r_first == r_second` is tried.
pub fn insertion_search(
    p: &SequencePair,
    label: &str,
    allow_unequal_positions: bool,
    config: &SearchConfig,
) -> Result<InsertionSearchResult> {
    let n = p.len();
    if n > config.insertion_cap {
        return Err(Error::SearchCap {
            n,
            cap: config.insertion_cap,
        });
    }
    let signs = [Sign::Plus, Sign::Minus];
    let mut grid: Vec<(usize, usize, Sign, Sign)> = Vec::new();
    for ra in 0..=n {
        let rbs = if allow_unequal_positions {
            0..=n
        } else {
            ra..=ra
        };
        for rb in rbs {
            for x in signs {
                for y in signs {
                    grid.push((ra, rb, x, y));
                }
            }
        }
    }

    let hits: Vec<InsertionHit> = grid
        .par_iter()
        .flat_map_iter(|&(ra, rb, x, y)| {
            let e = p.first().insert(ra, x).expect("index within 0..=n");
            let f = p.second().insert(rb, y).expect("index within 0..=n");
            [ZcpType::Type1, ZcpType::Type2]
                .into_iter()
                .filter(|&t| is_optimal(e.as_slice(), f.as_slice(), t))
                .map(|t| {
                    let pair = SequencePair::new(e.clone(), f.clone()).expect("equal lengths");
                    InsertionHit {
                        r_first: ra,
                        r_second: rb,
                        x,
                        y,
                        zcp_type: t,
                        report: classify(&pair),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();

    Ok(InsertionSearchResult {
        base: label.to_string(),
        base_length: n,
        allow_unequal_positions,
        candidates: grid.len() as u64,
        hits,
    })
}
