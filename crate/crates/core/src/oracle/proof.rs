//! The steps of the Bound A counting argument, checked on explicit codes.

use crate::bounds::bound_a_check;
use crate::error::{Error, Result};
use crate::exact::RhsVariant;

use super::check_prime;
use super::code::{Code, Word};
use super::linear::find_linear_with_distance;
use super::systematic::{enumerate_systematic_nonlinear, nonlinear_count};

/// `{ c - t : c in code }`.
///
/// Distances are unchanged, and so is systematicity: subtracting `t` permutes
/// the prefixes. The result stays marked linear only when `t` is a codeword.
pub fn translate_code(code: &Code, t: &Word) -> Result<Code> {
    if t.q() != code.q() || t.len() != code.len() {
        return Err(Error::IncompatibleWords);
    }
    let words = code
        .words()
        .iter()
        .map(|w| w.sub(t))
        .collect::<Result<Vec<_>>>()?;
    let linear = code.is_linear() && code.contains(t);
    Ok(Code::from_parts(
        code.q(),
        code.len(),
        words,
        code.systematic_k(),
        linear,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InjectionCheck {
    Pass,
    /// The minimum distance is below `2i + 1`.
    NotApplicable,
    /// A pair of codewords breaking the property: either the zero word and a
    /// codeword with too light a tail, or two codewords sharing a tail.
    Counterexample(Word, Word),
}

/// Check, for a systematic code containing zero with minimum distance
/// `d >= 2i + 1`, that codewords with prefix weight `i` have tail weight at
/// least `d - i` and pairwise distinct tails.
pub fn verify_injection_property(code: &Code, i: usize) -> Result<InjectionCheck> {
    let k = code
        .systematic_k()
        .ok_or(Error::PreconditionViolation("code must be systematic"))?;
    if !code.contains_zero() {
        return Err(Error::PreconditionViolation(
            "code must contain the zero word",
        ));
    }
    if i == 0 {
        return Err(Error::PreconditionViolation("i must be positive"));
    }
    let d = code.min_distance()?;
    if d < 2 * i + 1 {
        return Ok(InjectionCheck::NotApplicable);
    }
    let zero = Word::zero(code.q(), code.len());
    let mut seen: Vec<&Word> = Vec::new();
    for c in code.words() {
        let prefix_weight = c.prefix(k).iter().filter(|&&s| s != 0).count();
        if prefix_weight != i {
            continue;
        }
        let tail_weight = c.tail(k).iter().filter(|&&s| s != 0).count();
        if tail_weight + i < d {
            return Ok(InjectionCheck::Counterexample(zero, c.clone()));
        }
        if let Some(prev) = seen.iter().find(|p| p.tail(k) == c.tail(k)) {
            return Ok(InjectionCheck::Counterexample((*prev).clone(), c.clone()));
        }
        seen.push(c);
    }
    Ok(InjectionCheck::Pass)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Crosscheck {
    /// No enumerated code reaches the refuted distance. `systematic_codes` is
    /// `None` when the nonlinear family was over budget and skipped.
    Confirmed {
        linear_codes: u64,
        systematic_codes: Option<u64>,
    },
    Contradiction(Code),
}

/// Confirm a Bound A refutation of `(n, k, d, q)` by exhaustive search.
///
/// All standard-form linear codes are searched; all systematic codes as well
/// when that family fits in `budget`.
pub fn refutation_crosscheck(
    n: usize,
    k: usize,
    d: usize,
    q: u8,
    variant: RhsVariant,
    budget: u64,
) -> Result<Crosscheck> {
    check_prime(q as u32)?;
    let verdict = bound_a_check(n as u32, k as u32, d as u32, q as u32, variant)?;
    if !verdict.is_refuted() {
        return Err(Error::PreconditionViolation(
            "bound A does not refute these parameters",
        ));
    }
    let (found, linear_codes) = find_linear_with_distance(n, k, q, d, budget)?;
    if let Some(g) = found {
        return Ok(Crosscheck::Contradiction(g.code()));
    }
    let systematic_codes = match nonlinear_count(n, k, q, budget) {
        Ok(count) => {
            let hit =
                enumerate_systematic_nonlinear(n, k, q, budget)?.find(|c| distance_at_least(c, d));
            if let Some(code) = hit {
                return Ok(Crosscheck::Contradiction(code));
            }
            Some(count)
        }
        Err(Error::EnumerationTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Crosscheck::Confirmed {
        linear_codes,
        systematic_codes,
    })
}

fn distance_at_least(code: &Code, d: usize) -> bool {
    let words = code.words();
    words.iter().enumerate().all(|(i, a)| {
        words[i + 1..]
            .iter()
            .all(|b| a.distance(b).expect("same code") >= d)
    })
}
