//! The classical comparison bounds: Griesmer, Singleton, Hamming, Plotkin
//! and Elias. Size bounds are capped at `q^n`, the size of the whole space.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::{weight_counts, ExactNat, ExactRatio};

use super::validate;

/// Largest `k >= 1` with `sum_{i<k} ceil(d / q^i) <= n` (linear codes).
pub fn griesmer_max_k(n: u32, d: u32, q: u32) -> Result<u32> {
    validate(n, d, q)?;
    let (n, d, q) = (n as u64, d as u64, q as u64);
    let mut total = 0u64;
    let mut k = 0u32;
    let mut pow = Some(1u64);
    loop {
        let term = match pow {
            Some(p) if p < d => d.div_ceil(p),
            // q^i >= d: every remaining term is 1
            _ => 1,
        };
        if total + term > n {
            return Ok(k);
        }
        total += term;
        k += 1;
        pow = pow.and_then(|p| p.checked_mul(q));
    }
}

/// `n - d + 1`.
pub fn singleton_max_k(n: u32, d: u32) -> u32 {
    (n + 1).saturating_sub(d)
}

pub fn singleton_max_size(n: u32, d: u32, q: u32) -> Result<ExactNat> {
    validate(n, d, q)?;
    Ok(ExactNat::power(q, singleton_max_k(n, d)))
}

/// Sphere-packing bound `floor(q^n / V_q(n, floor((d-1)/2)))`.
pub fn hamming_max_size(n: u32, d: u32, q: u32) -> Result<ExactNat> {
    validate(n, d, q)?;
    let radius = ((d - 1) / 2) as usize;
    let volume: ExactNat = weight_counts(n, q)?.into_iter().take(radius + 1).sum();
    Ok(ExactNat::power(q, n).div_floor(&volume))
}

/// `floor(d / (d - theta n))` with `theta = 1 - 1/q`, when `d > theta n`.
pub fn plotkin_max_size(n: u32, d: u32, q: u32) -> Result<Option<ExactNat>> {
    validate(n, d, q)?;
    // d - theta n = (q d - (q-1) n) / q
    let gap = q as i64 * d as i64 - (q as i64 - 1) * n as i64;
    if gap <= 0 {
        return Ok(None);
    }
    let ratio = ExactRatio::new(BigInt::from(q as i64 * d as i64), BigInt::from(gap))?;
    let size = ExactNat::from_bigint(ratio.floor()).expect("positive ratio");
    Ok(Some(size.min(ExactNat::power(q, n))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliasBound {
    pub size: ExactNat,
    /// The radius `w` at which the minimum was attained (smallest such `w`).
    pub radius: u32,
}

/// Elias bound, minimized over the integer radius.
///
/// For `0 <= w <= theta n` with `w^2 - 2 theta n w + theta n d > 0`,
///
/// ```text
/// M <= theta n d / (w^2 - 2 theta n w + theta n d) * q^n / V_q(n, w)
/// ```
///
/// The floor of each admissible value is taken and the smallest is returned.
pub fn elias_max_size(n: u32, d: u32, q: u32) -> Result<Option<EliasBound>> {
    validate(n, d, q)?;
    let int = |v: i64| ExactRatio::from_integer(BigInt::from(v));
    let theta = ExactRatio::new(BigInt::from(q - 1), BigInt::from(q))?;
    let theta_n = &theta * &int(n as i64);
    let theta_nd = &theta_n * &int(d as i64);
    let space = ExactRatio::from_nat(&ExactNat::power(q, n));

    let counts = weight_counts(n, q)?;
    let mut volume = ExactNat::zero();
    let mut best: Option<EliasBound> = None;
    for w in 0..=n {
        let wr = int(w as i64);
        if wr > theta_n {
            break;
        }
        volume += &counts[w as usize];
        let quad = &(&(&wr * &wr) - &(&(&int(2) * &theta_n) * &wr)) + &theta_nd;
        if !quad.is_positive() {
            continue;
        }
        let value = &(&(&theta_nd / &quad) * &space) / &ExactRatio::from_nat(&volume);
        let size = ExactNat::from_bigint(value.floor()).expect("positive bound");
        if best.as_ref().is_none_or(|b| size < b.size) {
            best = Some(EliasBound { size, radius: w });
        }
    }
    let cap = ExactNat::power(q, n);
    Ok(best.map(|b| EliasBound {
        size: b.size.min(cap),
        radius: b.radius,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::floor_log_q;

    fn nat(v: u64) -> ExactNat {
        ExactNat::from(v)
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_max_k(20, 4, 2).unwrap(), 16);
        assert_eq!(griesmer_max_k(10, 3, 5).unwrap(), 8);
        assert_eq!(griesmer_max_k(7, 3, 2).unwrap(), 4);
        assert_eq!(griesmer_max_k(5, 5, 3).unwrap(), 1);
        assert_eq!(
            griesmer_max_k(4, 5, 2),
            Err(Error::InvalidQuery { n: 4, d: 5 })
        );
    }

    #[test]
    fn griesmer_against_direct_sum() {
        // floor form would be the wrong reading: check against an explicit ceiling sum
        for q in [2u64, 3, 4, 5] {
            for n in 1..=80u64 {
                for d in 1..=n {
                    let g = |k: u64| {
                        (0..k)
                            .map(|i| d.div_ceil(q.saturating_pow(i as u32)))
                            .sum::<u64>()
                    };
                    let expect = (1..=n).filter(|&k| g(k) <= n).max().unwrap();
                    assert_eq!(
                        griesmer_max_k(n as u32, d as u32, q as u32).unwrap() as u64,
                        expect
                    );
                }
            }
        }
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_max_k(20, 4), 17);
        assert_eq!(singleton_max_k(9, 9), 1);
        assert_eq!(singleton_max_k(9, 1), 9);
        assert_eq!(singleton_max_size(5, 2, 3).unwrap(), nat(81));
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(
            floor_log_q(&hamming_max_size(11, 4, 2).unwrap(), 2).unwrap(),
            7
        );
        assert_eq!(
            floor_log_q(&hamming_max_size(22, 4, 2).unwrap(), 2).unwrap(),
            17
        );
        assert_eq!(hamming_max_size(3, 3, 2).unwrap(), nat(2));
        // perfect codes meet it exactly
        assert_eq!(hamming_max_size(7, 3, 2).unwrap(), nat(16));
        assert_eq!(hamming_max_size(23, 7, 2).unwrap(), nat(4096));
        assert_eq!(hamming_max_size(11, 5, 3).unwrap(), nat(729));
    }

    #[test]
    fn plotkin_examples() {
        assert_eq!(plotkin_max_size(6, 4, 2).unwrap(), Some(nat(4)));
        for q in [2, 3, 5] {
            for n in 1..20 {
                assert_eq!(plotkin_max_size(n, n, q).unwrap(), Some(nat(q as u64)));
            }
        }
        assert_eq!(plotkin_max_size(10, 3, 2).unwrap(), None);
        assert_eq!(plotkin_max_size(10, 5, 2).unwrap(), None);
    }

    #[test]
    fn elias_examples() {
        let e = elias_max_size(7, 3, 2).unwrap().unwrap();
        assert_eq!(
            e,
            EliasBound {
                size: nat(37),
                radius: 1
            }
        );
        assert_eq!(floor_log_q(&e.size, 2).unwrap(), 5);
        let e = elias_max_size(12, 3, 2).unwrap().unwrap();
        assert_eq!(floor_log_q(&e.size, 2).unwrap(), 9);
        let e = elias_max_size(16, 3, 5).unwrap().unwrap();
        assert_eq!(floor_log_q(&e.size, 5).unwrap(), 14);
    }

    /// Elias value at one radius, from integers only:
    /// (q-1) n d q^n / ((q w^2 - 2 (q-1) n w + (q-1) n d) V(n, w)).
    fn elias_at(n: u32, d: u32, q: u32, w: u32) -> Option<ExactNat> {
        let (nn, dd, qq, ww) = (n as i128, d as i128, q as i128, w as i128);
        if qq * ww > (qq - 1) * nn {
            return None;
        }
        let den = qq * ww * ww - 2 * (qq - 1) * nn * ww + (qq - 1) * nn * dd;
        if den <= 0 {
            return None;
        }
        let vol: ExactNat = weight_counts(n, q)
            .unwrap()
            .into_iter()
            .take(w as usize + 1)
            .sum();
        let num = &ExactNat::from(((qq - 1) * nn * dd) as u64) * &ExactNat::power(q, n);
        Some(num.div_floor(&(&ExactNat::from(den as u64) * &vol)))
    }

    #[test]
    fn elias_witness_validity() {
        for q in [2u32, 3, 5] {
            for n in 1..=40 {
                for d in 1..=n {
                    let e = elias_max_size(n, d, q).unwrap().unwrap();
                    let at_w = elias_at(n, d, q, e.radius).expect("witness admissible");
                    assert_eq!(at_w.clone().min(ExactNat::power(q, n)), e.size);
                    for w in 0..=n {
                        if let Some(v) = elias_at(n, d, q, w) {
                            assert!(v >= at_w, "n={n} d={d} q={q} w={w}");
                        }
                    }
                }
            }
        }
    }
}
