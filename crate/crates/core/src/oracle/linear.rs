//! Exhaustive search over systematic linear codes `{ (v, v T) }`, one code
//! per `k x (n-k)` tail matrix `T` over a prime field.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::code::{Code, Word};
use super::{check_budget, check_prime};

/// Generator matrix `[I_k | tail]` over `Z_q`, `q` prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardFormGenerator {
    q: u8,
    k: usize,
    n: usize,
    /// Row-major `k x (n-k)`.
    tail: Vec<u8>,
}

impl StandardFormGenerator {
    pub fn new(q: u8, n: usize, tail_rows: Vec<Vec<u8>>) -> Result<Self> {
        check_prime(q as u32)?;
        let k = tail_rows.len();
        if k == 0 || k >= n {
            return Err(Error::PreconditionViolation("need 1 <= k < n"));
        }
        let m = n - k;
        let mut tail = Vec::with_capacity(k * m);
        for row in tail_rows {
            if row.len() != m {
                return Err(Error::PreconditionViolation(
                    "tail rows must have length n - k",
                ));
            }
            if let Some(&bad) = row.iter().find(|&&s| s >= q) {
                return Err(Error::SymbolOutOfRange { symbol: bad, q });
            }
            tail.extend(row);
        }
        Ok(StandardFormGenerator { q, k, n, tail })
    }

    /// The `index`-th tail matrix: entry `e` (row-major) is digit `e` of
    /// `index` in base `q`, least significant first.
    fn from_index(q: u8, n: usize, k: usize, mut index: u64) -> Self {
        let m = n - k;
        let tail = (0..k * m)
            .map(|_| {
                let digit = (index % q as u64) as u8;
                index /= q as u64;
                digit
            })
            .collect();
        StandardFormGenerator { q, k, n, tail }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tail_row(&self, row: usize) -> &[u8] {
        let m = self.n - self.k;
        &self.tail[row * m..(row + 1) * m]
    }

    pub fn encode(&self, message: &[u8]) -> Word {
        assert_eq!(message.len(), self.k);
        let m = self.n - self.k;
        let q = self.q as u32;
        let mut symbols = message.to_vec();
        symbols.extend((0..m).map(|c| {
            let acc: u32 = message
                .iter()
                .enumerate()
                .map(|(r, &v)| v as u32 * self.tail[r * m + c] as u32)
                .sum();
            (acc % q) as u8
        }));
        Word::from_raw(self.q, symbols)
    }

    /// All `q^k` codewords, messages in base-`q` counting order.
    pub fn code(&self) -> Code {
        let total = (self.q as usize).pow(self.k as u32);
        let mut message = vec![0u8; self.k];
        let words = (0..total)
            .map(|mut idx| {
                for slot in message.iter_mut() {
                    *slot = (idx % self.q as usize) as u8;
                    idx /= self.q as usize;
                }
                self.encode(&message)
            })
            .collect();
        Code::from_parts(self.q, self.n, words, Some(self.k), true)
    }
}

impl fmt::Display for StandardFormGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.k {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.k {
                write!(f, "{}", u8::from(r == c))?;
            }
            write!(f, " | ")?;
            for s in self.tail_row(r) {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

fn linear_count(n: usize, k: usize, q: u8, budget: u64) -> Result<u64> {
    check_prime(q as u32)?;
    if k == 0 || k >= n {
        return Err(Error::PreconditionViolation("need 1 <= k < n"));
    }
    check_budget(q as u32, (k * (n - k)) as u64, budget)
}

/// Deterministic stream of every standard-form generator for `(n, k, q)`.
pub fn linear_generators(
    n: usize,
    k: usize,
    q: u8,
    budget: u64,
) -> Result<impl Iterator<Item = StandardFormGenerator>> {
    let count = linear_count(n, k, q, budget)?;
    Ok((0..count).map(move |idx| StandardFormGenerator::from_index(q, n, k, idx)))
}

/// Every systematic linear code with information set on the first `k`
/// coordinates, `q^(k(n-k))` of them.
pub fn enumerate_linear_systematic(
    n: usize,
    k: usize,
    q: u8,
    budget: u64,
) -> Result<impl Iterator<Item = Code>> {
    Ok(linear_generators(n, k, q, budget)?.map(|g| g.code()))
}

/// Minimum-weight scanner shared across all tail matrices of one shape.
///
/// Codeword tails are built incrementally: message `idx` differs from
/// `idx - q^j` by one in digit `j`, its lowest nonzero digit, so its tail is
/// the parent's tail plus row `j`.
pub(crate) struct LinearScan {
    q: u8,
    k: usize,
    m: usize,
    n: usize,
    prefix_weight: Vec<u8>,
    parent: Vec<(u32, u8)>,
}

impl LinearScan {
    pub(crate) fn new(n: usize, k: usize, q: u8) -> Self {
        let total = (q as usize).pow(k as u32);
        let mut prefix_weight = vec![0u8; total];
        let mut parent = vec![(0u32, 0u8); total];
        for idx in 1..total {
            let mut rest = idx;
            let mut j = 0;
            while rest % q as usize == 0 {
                rest /= q as usize;
                j += 1;
            }
            let p = idx - (q as usize).pow(j as u32);
            parent[idx] = (p as u32, j as u8);
            let mut digits = idx;
            let mut wt = 0;
            while digits > 0 {
                wt += u8::from(digits % q as usize != 0);
                digits /= q as usize;
            }
            prefix_weight[idx] = wt;
        }
        LinearScan {
            q,
            k,
            m: n - k,
            n,
            prefix_weight,
            parent,
        }
    }

    pub(crate) fn generator(&self, index: u64) -> StandardFormGenerator {
        StandardFormGenerator::from_index(self.q, self.n, self.k, index)
    }

    /// Minimum nonzero codeword weight of code `index`, except that the scan
    /// stops at the first weight below `floor` and returns it.
    pub(crate) fn min_weight(&self, index: u64, floor: usize, scratch: &mut Vec<u8>) -> usize {
        let g = self.generator(index);
        let (m, q) = (self.m, self.q);
        scratch.clear();
        scratch.resize(self.prefix_weight.len() * m, 0);
        let mut best = usize::MAX;
        for idx in 1..self.prefix_weight.len() {
            let (p, j) = self.parent[idx];
            let (p, j) = (p as usize, j as usize);
            let mut wt = self.prefix_weight[idx] as usize;
            for t in 0..m {
                let mut s = scratch[p * m + t] + g.tail[j * m + t];
                if s >= q {
                    s -= q;
                }
                scratch[idx * m + t] = s;
                wt += usize::from(s != 0);
            }
            if wt < best {
                best = wt;
                if best < floor {
                    return best;
                }
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestLinear {
    pub d: usize,
    /// First generator in enumeration order attaining `d`.
    pub generator: StandardFormGenerator,
    pub codes_searched: u64,
}

/// Largest minimum distance among all systematic linear `(n, k, q)` codes.
pub fn best_linear_d(n: usize, k: usize, q: u8, budget: u64) -> Result<BestLinear> {
    let count = linear_count(n, k, q, budget)?;
    let scan = LinearScan::new(n, k, q);
    let best = AtomicUsize::new(0);
    let d = (0..count)
        .into_par_iter()
        .map_init(Vec::new, |scratch, idx| {
            // only a weight above the best seen so far is interesting
            let floor = best.load(Ordering::Relaxed) + 1;
            let w = scan.min_weight(idx, floor, scratch);
            best.fetch_max(w, Ordering::Relaxed);
            w
        })
        .max()
        .expect("at least one code");
    let index = (0..count)
        .into_par_iter()
        .map_init(Vec::new, |scratch, idx| {
            (idx, scan.min_weight(idx, d, scratch))
        })
        .find_first(|&(_, w)| w >= d)
        .map(|(idx, _)| idx)
        .expect("the maximum is attained");
    Ok(BestLinear {
        d,
        generator: scan.generator(index),
        codes_searched: count,
    })
}

/// First linear code (in enumeration order) with minimum distance `>= d`.
pub(crate) fn find_linear_with_distance(
    n: usize,
    k: usize,
    q: u8,
    d: usize,
    budget: u64,
) -> Result<(Option<StandardFormGenerator>, u64)> {
    let count = linear_count(n, k, q, budget)?;
    let scan = LinearScan::new(n, k, q);
    let found = (0..count)
        .into_par_iter()
        .map_init(Vec::new, |scratch, idx| {
            (idx, scan.min_weight(idx, d, scratch))
        })
        .find_first(|&(_, w)| w >= d)
        .map(|(idx, _)| scan.generator(idx));
    Ok((found, count))
}
