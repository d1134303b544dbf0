//! Brute-force ground truth at tiny scale: exhaustive enumeration of
//! systematic codes over a prime field, exact minimum distances, and checks
//! of the counting argument behind Bound A.

mod code;
mod linear;
mod proof;
mod systematic;

pub use code::{hamming_distance, weight, Code, Word};
pub use linear::{
    best_linear_d, enumerate_linear_systematic, linear_generators, BestLinear,
    StandardFormGenerator,
};
pub use proof::{
    refutation_crosscheck, translate_code, verify_injection_property, Crosscheck, InjectionCheck,
};
pub use systematic::{enumerate_systematic_nonlinear, nonlinear_count};

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Default cap on the number of codes a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub fn is_prime(q: u32) -> bool {
    q >= 2
        && (2..)
            .take_while(|p| p * p <= q)
            .all(|p| !q.is_multiple_of(p))
}

pub(crate) fn check_prime(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q));
    }
    if !is_prime(q) || q > u8::MAX as u32 {
        return Err(Error::UnsupportedAlphabet(q));
    }
    Ok(())
}

/// `base^exp` as a `u64`, or an error when it exceeds `budget`.
pub(crate) fn check_budget(base: u32, exp: u64, budget: u64) -> Result<u64> {
    let too_large = || Error::EnumerationTooLarge {
        count: format!("{base}^{exp}"),
        budget,
    };
    let exp32 = u32::try_from(exp).map_err(|_| too_large())?;
    // base >= 2, so anything past 64 bits is already out of reach
    if exp32 > 64 {
        return Err(too_large());
    }
    let count = BigUint::from(base).pow(exp32);
    match u64::try_from(&count) {
        Ok(c) if c <= budget => Ok(c),
        _ => Err(Error::EnumerationTooLarge {
            count: count.to_string(),
            budget,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u32> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(check_prime(4), Err(Error::UnsupportedAlphabet(4)));
        assert_eq!(check_prime(1), Err(Error::InvalidAlphabet(1)));
    }

    #[test]
    fn budget() {
        assert_eq!(check_budget(2, 12, DEFAULT_BUDGET), Ok(4096));
        assert_eq!(check_budget(3, 0, 1), Ok(1));
        assert_eq!(
            check_budget(2, 64, DEFAULT_BUDGET),
            Err(Error::EnumerationTooLarge {
                count: "18446744073709551616".into(),
                budget: DEFAULT_BUDGET
            })
        );
        assert!(check_budget(2, 1 << 40, DEFAULT_BUDGET).is_err());
    }
}
