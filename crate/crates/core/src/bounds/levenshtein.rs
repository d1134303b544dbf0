//! Levenshtein's universal bound for codes in the Hamming space.
//!
//! The bound is the linear-programming value of one explicit polynomial,
//! chosen by where `d` falls among the smallest zeros of the adjacent
//! Krawtchouk families. With `K^{(N)}_k` the Krawtchouk polynomial for
//! length `N` and `T` the Christoffel-Darboux kernel
//!
//! ```text
//! T_k^{(N)}(x, d) = sum_{i<k} K_i^{(N)}(x-1) K_i^{(N)}(d-1) / (C(N, i) (q-1)^i)
//! ```
//!
//! the two shapes are
//!
//! ```text
//! degree 2k-1:  f(x) = (d - x)         T_k^{(n-1)}(x, d)^2
//! degree 2k:    f(x) = (d - x) (n - x) T_k^{(n-2)}(x, d)^2
//! ```
//!
//! Writing `z(N, k)` for `1 +` the smallest zero of `K_k^{(N)}`, degree
//! `2k-1` is used when `z(n-1, k) < d <= z(n-2, k-1)` and degree `2k` when
//! `z(n-2, k) < d <= z(n-1, k)`. The bound is then
//!
//! ```text
//! M <= f(0) q^n / sum_{x=0}^{n} C(n, x) (q-1)^x f(x)
//! ```
//!
//! and everything is evaluated over the integers after clearing the kernel's
//! denominators. For `d = 1` no polynomial applies and the trivial `q^n` is
//! returned.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact::{weight_counts, ExactNat};

use super::validate;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevenshteinBound {
    pub size: ExactNat,
    /// Degree of the polynomial used, `None` when the trivial bound was taken.
    pub degree: Option<u32>,
}

/// Values `K_k^{(N)}(y)` on a window of integer `y`, advanced one degree at a
/// time by the three-term recurrence
/// `(k+1) K_{k+1}(y) = ((N-k)(q-1) + k - q y) K_k(y) - (q-1)(N-k+1) K_{k-1}(y)`.
struct KrawtchoukSweep {
    len: i64,
    q: i64,
    y0: i64,
    degree: u32,
    prev: Vec<BigInt>,
    cur: Vec<BigInt>,
}

impl KrawtchoukSweep {
    fn new(len: i64, q: u32, y0: i64, y1: i64) -> Self {
        let width = (y1 - y0 + 1) as usize;
        KrawtchoukSweep {
            len,
            q: q as i64,
            y0,
            degree: 0,
            prev: vec![BigInt::zero(); width],
            cur: vec![BigInt::one(); width],
        }
    }

    fn at(&self, y: i64) -> &BigInt {
        &self.cur[(y - self.y0) as usize]
    }

    fn advance(&mut self) {
        let k = self.degree as i64;
        let (len, q) = (self.len, self.q);
        let back = BigInt::from((q - 1) * (len - k + 1));
        let next: Vec<BigInt> = self
            .cur
            .iter()
            .zip(&self.prev)
            .enumerate()
            .map(|(idx, (c, p))| {
                let y = self.y0 + idx as i64;
                let fwd = (len - k) * (q - 1) + k - q * y;
                let v = c * fwd - p * &back;
                debug_assert!((&v % (k + 1)).is_zero());
                v / (k + 1)
            })
            .collect();
        self.prev = std::mem::replace(&mut self.cur, next);
        self.degree += 1;
    }

    /// Whether the smallest zero of the current polynomial lies strictly
    /// below the integer `a`.
    ///
    /// The polynomial is positive at 0 and consecutive zeros are separated by
    /// at least one integer point, so the first integer where the value is
    /// not positive brackets the smallest zero.
    fn zero_below(&self, a: i64) -> bool {
        for y in 1..=a {
            let v = self.at(y);
            if !v.is_positive() {
                return y < a || v.is_negative();
            }
        }
        false
    }
}

/// Degree of the Levenshtein polynomial for `(n, d, q)`, or `None` when no
/// regime applies (`d = 1`).
pub fn levenshtein_degree(n: u32, d: u32, q: u32) -> Result<Option<u32>> {
    validate(n, d, q)?;
    if d < 2 {
        return Ok(None);
    }
    let a = d as i64 - 1;
    let n1 = n as i64 - 1;
    let n2 = n as i64 - 2;
    let mut odd = KrawtchoukSweep::new(n1, q, 0, a);
    let mut even = KrawtchoukSweep::new(n2.max(0), q, 0, a);
    // z(n-2, k-1) < d, tracked from the previous round
    let mut even_below_prev = false;
    for k in 1..=n1.max(0) as u32 {
        odd.advance();
        let odd_below = odd.zero_below(a);
        if odd_below && (k == 1 || !even_below_prev) {
            return Ok(Some(2 * k - 1));
        }
        if (k as i64) > n2 {
            break;
        }
        even.advance();
        let even_below = even.zero_below(a);
        if even_below && !odd_below {
            return Ok(Some(2 * k));
        }
        even_below_prev = even_below;
    }
    Ok(None)
}

/// LP value of the degree-`degree` Levenshtein polynomial, floored.
///
/// `None` if the polynomial is degenerate for these parameters (nonpositive
/// value at 0 or nonpositive mean).
pub(crate) fn polynomial_bound(n: u32, d: u32, q: u32, degree: u32) -> Option<ExactNat> {
    let k = degree.div_ceil(2);
    let even = degree.is_multiple_of(2);
    let len = n as i64 - 1 - even as i64;
    if k == 0 || len < 0 || k as i64 - 1 > len {
        return None;
    }

    // Common denominator of the kernel weights C(len, i) (q-1)^i, i < k.
    let norms = weight_counts(len as u32, q).ok()?;
    let lcm = norms[..k as usize]
        .iter()
        .fold(BigUint::one(), |acc, r| acc.lcm(r.as_biguint()));
    let lcm = BigInt::from(lcm);

    // kernel[x] = lcm * T_k(x, d) for x = 0..=n, i.e. y = x - 1 in -1..=n-1
    let mut sweep = KrawtchoukSweep::new(len, q, -1, n as i64 - 1);
    let mut kernel = vec![BigInt::zero(); n as usize + 1];
    let dy = d as i64 - 1;
    for i in 0..k {
        if i > 0 {
            sweep.advance();
        }
        let scale = &lcm / norms[i as usize].to_bigint() * sweep.at(dy);
        for (x, acc) in kernel.iter_mut().enumerate() {
            *acc += sweep.at(x as i64 - 1) * &scale;
        }
    }

    let value = |x: usize| -> BigInt {
        let mut v = BigInt::from(d as i64 - x as i64) * &kernel[x] * &kernel[x];
        if even {
            v *= n as i64 - x as i64;
        }
        v
    };
    let at_zero = value(0);
    if !at_zero.is_positive() {
        return None;
    }
    let mass: BigInt = weight_counts(n, q)
        .ok()?
        .iter()
        .enumerate()
        .map(|(x, w)| w.to_bigint() * value(x))
        .sum();
    if !mass.is_positive() {
        return None;
    }
    let numer = at_zero * ExactNat::power(q, n).to_bigint();
    ExactNat::from_bigint(numer.div_floor(&mass))
}

/// Levenshtein bound on the number of codewords, capped at `q^n`.
pub fn levenshtein_max_size(n: u32, d: u32, q: u32) -> Result<LevenshteinBound> {
    validate(n, d, q)?;
    let cap = ExactNat::power(q, n);
    let bound = levenshtein_degree(n, d, q)?.and_then(|m| {
        polynomial_bound(n, d, q, m).map(|size| LevenshteinBound {
            size: size.min(cap.clone()),
            degree: Some(m),
        })
    });
    Ok(bound.unwrap_or(LevenshteinBound {
        size: cap,
        degree: None,
    }))
}
