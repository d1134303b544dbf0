//! Every systematic code, linear or not: one code per map from the `q^k`
//! prefixes to tails in `Z_q^(n-k)`.

use crate::error::{Error, Result};

use super::check_budget;
use super::code::{Code, Word};

/// `(q^(n-k))^(q^k)`, the number of systematic `(n, k, q)` codes, if within
/// `budget`.
pub fn nonlinear_count(n: usize, k: usize, q: u8, budget: u64) -> Result<u64> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q as u32));
    }
    if k == 0 || k >= n {
        return Err(Error::PreconditionViolation("need 1 <= k < n"));
    }
    let messages = (q as u64)
        .checked_pow(k as u32)
        .filter(|&m| m <= 64)
        .ok_or_else(|| Error::EnumerationTooLarge {
            count: format!("{q}^(({n}-{k}) * {q}^{k})"),
            budget,
        })?;
    check_budget(q as u32, (n - k) as u64 * messages, budget)
}

/// Every systematic `(n, k, q)` code in a deterministic order. Code number
/// `c` maps message `m` (base-`q` counting order) to tail number
/// `digit_m(c)` in base `q^(n-k)`, tails themselves in base-`q` counting
/// order.
pub fn enumerate_systematic_nonlinear(
    n: usize,
    k: usize,
    q: u8,
    budget: u64,
) -> Result<impl Iterator<Item = Code>> {
    let count = nonlinear_count(n, k, q, budget)?;
    let m = n - k;
    let messages: Vec<Vec<u8>> = (0..(q as usize).pow(k as u32))
        .map(|idx| digits(idx as u64, q, k))
        .collect();
    let tails: Vec<Vec<u8>> = (0..(q as u64).pow(m as u32))
        .map(|idx| digits(idx, q, m))
        .collect();
    let tail_count = tails.len() as u64;
    Ok((0..count).map(move |mut c| {
        let words = messages
            .iter()
            .map(|msg| {
                let tail = &tails[(c % tail_count) as usize];
                c /= tail_count;
                let mut symbols = msg.clone();
                symbols.extend_from_slice(tail);
                Word::from_raw(q, symbols)
            })
            .collect();
        Code::from_parts(q, n, words, Some(k), false)
    }))
}

fn digits(mut idx: u64, q: u8, len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| {
            let d = (idx % q as u64) as u8;
            idx /= q as u64;
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_linear_systematic, DEFAULT_BUDGET};
    use std::collections::HashSet;

    fn count(n: usize, k: usize, q: u8) -> usize {
        enumerate_systematic_nonlinear(n, k, q, DEFAULT_BUDGET)
            .unwrap()
            .count()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count(3, 2, 2), 16);
        assert_eq!(count(4, 2, 2), 256);
        assert_eq!(count(3, 1, 3), 729);
        assert!(matches!(
            nonlinear_count(10, 5, 2, DEFAULT_BUDGET),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(matches!(
            nonlinear_count(30, 10, 2, u64::MAX),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn codes_are_distinct_and_systematic() {
        let codes: Vec<Code> = enumerate_systematic_nonlinear(4, 2, 2, DEFAULT_BUDGET)
            .unwrap()
            .collect();
        let distinct: HashSet<Vec<Word>> = codes.iter().map(|c| c.words().to_vec()).collect();
        assert_eq!(distinct.len(), codes.len());
        for c in &codes {
            let mut check = Code::new(2, 4, c.words().to_vec()).unwrap();
            check.mark_systematic(2).unwrap();
            assert!(!c.is_linear());
        }
    }

    #[test]
    fn contains_every_linear_code() {
        let all: HashSet<Vec<Word>> = enumerate_systematic_nonlinear(4, 2, 2, DEFAULT_BUDGET)
            .unwrap()
            .map(|c| c.words().to_vec())
            .collect();
        for code in enumerate_linear_systematic(4, 2, 2, DEFAULT_BUDGET).unwrap() {
            assert!(all.contains(code.words()));
        }
    }
}
