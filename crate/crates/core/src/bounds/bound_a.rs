//! Bound A: a counting condition every systematic code must satisfy.
//!
//! Take a systematic `(n, k, q)` code with minimum distance `d`, translated so
//! it contains the zero word. A codeword whose first `k` symbols have weight
//! `i` must carry at least `d - i` nonzero symbols in the remaining `n - k`
//! positions, and two such codewords cannot share a tail when `d >= 2i + 1`.
//! Hence, for every `1 <= i <= (d - 1) / 2`,
//!
//! ```text
//! C(k, i) (q-1)^i  <=  sum_{j = d-i}^{n-k} C(n-k, j) (q-1)^j
//! ```
//!
//! The statement only covers `n > k > 2`.

use crate::error::{Error, Result};
use crate::exact::{binomial, weight_counts, ExactNat, RhsVariant};

use super::{max_k_of, validate, FeasibilityVerdict, Witness};

/// Test whether Bound A admits dimension `k`.
pub fn bound_a_check(
    n: u32,
    k: u32,
    d: u32,
    q: u32,
    variant: RhsVariant,
) -> Result<FeasibilityVerdict> {
    validate(n, d, q)?;
    Ok(check_unchecked(n, k, d, q, variant))
}

fn check_unchecked(n: u32, k: u32, d: u32, q: u32, variant: RhsVariant) -> FeasibilityVerdict {
    if k <= 2 || k >= n || d < 3 {
        return FeasibilityVerdict::NotApplicable;
    }
    let m = n - k;
    let top = (d - 1) / 2;
    let qm1 = ExactNat::from(q - 1);

    // suffix[j] = admissible tails of weight >= j (before any (q-1)^i factor)
    let row = match variant {
        RhsVariant::Weight => weight_counts(m, q).expect("alphabet validated"),
        RhsVariant::Literal => (0..=m).map(|j| binomial(m, j)).collect(),
    };
    let mut suffix = vec![ExactNat::zero(); m as usize + 2];
    for j in (0..=m as usize).rev() {
        suffix[j] = &suffix[j + 1] + &row[j];
    }

    // lhs_i = C(k, i) (q-1)^i, updated as a ratio
    let mut lhs = ExactNat::one();
    let mut literal_factor = ExactNat::one();
    for i in 1..=top {
        lhs = weight_step(&lhs, k, i, q);
        let lo = (d - i) as usize;
        let mut rhs = suffix.get(lo).cloned().unwrap_or_else(ExactNat::zero);
        if variant == RhsVariant::Literal {
            literal_factor = &literal_factor * &qm1;
            rhs = &rhs * &literal_factor;
        }
        if lhs > rhs {
            return FeasibilityVerdict::Refuted { i, lhs, rhs };
        }
    }
    FeasibilityVerdict::Feasible
}

/// `C(k, i) (q-1)^i` from `C(k, i-1) (q-1)^(i-1)`.
fn weight_step(prev: &ExactNat, k: u32, i: u32, q: u32) -> ExactNat {
    if i > k {
        return ExactNat::zero();
    }
    let scaled = prev * &ExactNat::from((k - i + 1) as u64 * (q - 1) as u64);
    scaled.div_floor(&ExactNat::from(i))
}

/// Largest `k` in `3..n` that Bound A does not refute.
///
/// Returns 2 when `k = 3` is already refuted: the bound says nothing about
/// `k <= 2`.
pub fn bound_a_max_k(n: u32, d: u32, q: u32, variant: RhsVariant) -> Result<u32> {
    bound_a_max_k_with_witness(n, d, q, variant).map(|(k, _)| k)
}

/// As [`bound_a_max_k`], also returning the refutation of `k_max + 1` when
/// that dimension lies inside the bound's range.
pub fn bound_a_max_k_with_witness(
    n: u32,
    d: u32,
    q: u32,
    variant: RhsVariant,
) -> Result<(u32, Option<Witness>)> {
    validate(n, d, q)?;
    if d < 3 {
        return Err(Error::NotApplicable("bound A needs d >= 3"));
    }
    if n < 4 {
        return Err(Error::NotApplicable("bound A needs n >= 4"));
    }
    // Both sides move monotonically in k (lhs grows, the tail shrinks), so
    // refutation is upward closed and bisection is exact.
    let k_max = max_k_of(3, n - 1, |k| {
        check_unchecked(n, k, d, q, variant).is_feasible()
    })?;
    let witness = match check_unchecked(n, k_max + 1, d, q, variant) {
        FeasibilityVerdict::Refuted { i, lhs, rhs } => Some(Witness::Refutation {
            k: k_max + 1,
            i,
            lhs,
            rhs,
        }),
        _ => None,
    };
    Ok((k_max, witness))
}
