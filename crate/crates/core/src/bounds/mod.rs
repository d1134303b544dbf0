//! Upper bounds on the dimension `k` of a `q`-ary code of length `n` and
//! minimum distance `d`.
//!
//! Dimension bounds ([`bound_a`], Griesmer) are expressed directly in `k`.
//! Size bounds (Hamming, Plotkin, Elias, Levenshtein, Singleton) bound the
//! number of codewords `M`; their dimension is `floor(log_q M)`.

mod bound_a;
mod classical;
mod levenshtein;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{check_alphabet, floor_log_q, ExactNat, RhsVariant};

pub use bound_a::{bound_a_check, bound_a_max_k, bound_a_max_k_with_witness};
pub use classical::{
    elias_max_size, griesmer_max_k, hamming_max_size, plotkin_max_size, singleton_max_k,
    singleton_max_size, EliasBound,
};
pub use levenshtein::{levenshtein_degree, levenshtein_max_size, LevenshteinBound};

/// Parameters of a single bound evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundQuery {
    pub n: u32,
    pub d: u32,
    pub q: u32,
    pub variant_a: RhsVariant,
}

impl BoundQuery {
    pub fn new(n: u32, d: u32, q: u32) -> Result<Self> {
        validate(n, d, q)?;
        Ok(BoundQuery {
            n,
            d,
            q,
            variant_a: RhsVariant::Weight,
        })
    }

    pub fn with_variant(mut self, variant: RhsVariant) -> Self {
        self.variant_a = variant;
        self
    }
}

pub(crate) fn validate(n: u32, d: u32, q: u32) -> Result<()> {
    check_alphabet(q)?;
    if d == 0 || d > n {
        return Err(Error::InvalidQuery { n, d });
    }
    Ok(())
}

/// Outcome of testing one `(n, k, d, q)` against Bound A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityVerdict {
    /// Every admissible `i` satisfies the counting inequality.
    Feasible,
    /// The smallest `i` whose inequality fails, with both sides.
    Refuted {
        i: u32,
        lhs: ExactNat,
        rhs: ExactNat,
    },
    /// Outside the range where the bound says anything (`k <= 2`, `k >= n` or `d < 3`).
    NotApplicable,
}

impl FeasibilityVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityVerdict::Feasible)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, FeasibilityVerdict::Refuted { .. })
    }

    pub fn witness(&self) -> Option<u32> {
        match self {
            FeasibilityVerdict::Refuted { i, .. } => Some(*i),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    A,
    Griesmer,
    Singleton,
    Hamming,
    Plotkin,
    Elias,
    Levenshtein,
}

impl BoundId {
    pub const ALL: [BoundId; 7] = [
        BoundId::A,
        BoundId::Griesmer,
        BoundId::Singleton,
        BoundId::Hamming,
        BoundId::Plotkin,
        BoundId::Elias,
        BoundId::Levenshtein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::A => "A",
            BoundId::Griesmer => "griesmer",
            BoundId::Singleton => "singleton",
            BoundId::Hamming => "hamming",
            BoundId::Plotkin => "plotkin",
            BoundId::Elias => "elias",
            BoundId::Levenshtein => "levenshtein",
        }
    }

    /// Column label used in tables, e.g. `k_g`.
    pub fn column(self) -> &'static str {
        match self {
            BoundId::A => "k_A",
            BoundId::Griesmer => "k_g",
            BoundId::Singleton => "k_s",
            BoundId::Hamming => "k_h",
            BoundId::Plotkin => "k_p",
            BoundId::Elias => "k_e",
            BoundId::Levenshtein => "k_l",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" => BoundId::A,
            "g" | "griesmer" => BoundId::Griesmer,
            "s" | "singleton" => BoundId::Singleton,
            "h" | "hamming" => BoundId::Hamming,
            "p" | "plotkin" => BoundId::Plotkin,
            "e" | "elias" => BoundId::Elias,
            "l" | "levenshtein" => BoundId::Levenshtein,
            other => return Err(format!("unknown bound `{other}`")),
        })
    }
}

/// Parse a comma-separated bound list. `all` expands to every bound;
/// duplicates are dropped and first-mention order is kept.
pub fn parse_bound_list(s: &str) -> std::result::Result<Vec<BoundId>, String> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let ids: Vec<BoundId> = if tok.eq_ignore_ascii_case("all") {
            BoundId::ALL.to_vec()
        } else {
            vec![tok.parse()?]
        };
        for id in ids {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    if out.is_empty() {
        return Err("empty bound list".into());
    }
    Ok(out)
}

/// Extra evidence attached to a bound value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Bound A refutes dimension `k` at systematic weight `i`.
    Refutation {
        k: u32,
        i: u32,
        lhs: ExactNat,
        rhs: ExactNat,
    },
    /// Elias radius that achieved the minimum.
    EliasRadius(u32),
    /// Degree of the Levenshtein polynomial used; `None` for the trivial `q^n`.
    LevenshteinDegree(Option<u32>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Refutation { k, i, lhs, rhs } => {
                write!(f, "k={k} refuted at i={i}: lhs={lhs} > rhs={rhs}")
            }
            Witness::EliasRadius(w) => write!(f, "w={w}"),
            Witness::LevenshteinDegree(Some(m)) => write!(f, "degree={m}"),
            Witness::LevenshteinDegree(None) => write!(f, "trivial"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub bound: BoundId,
    /// `None` when the bound does not apply to the query.
    pub k_max: Option<u32>,
    pub size_max: Option<ExactNat>,
    pub witness: Option<Witness>,
}

impl BoundResult {
    fn not_applicable(bound: BoundId) -> Self {
        BoundResult {
            bound,
            k_max: None,
            size_max: None,
            witness: None,
        }
    }

    fn from_size(bound: BoundId, size: ExactNat, q: u32, witness: Option<Witness>) -> Result<Self> {
        Ok(BoundResult {
            bound,
            k_max: Some(floor_log_q(&size, q)?),
            size_max: Some(size),
            witness,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub query: BoundQuery,
    pub results: Vec<BoundResult>,
    /// Smallest `k_max` among applicable bounds.
    pub min_k: Option<u32>,
}

impl Comparison {
    pub fn get(&self, id: BoundId) -> Option<&BoundResult> {
        self.results.iter().find(|r| r.bound == id)
    }

    pub fn k(&self, id: BoundId) -> Option<u32> {
        self.get(id).and_then(|r| r.k_max)
    }
}

/// Largest `k` in `k_lo..=k_hi` accepted by an antitone predicate (once
/// rejected, rejected for every larger `k`), or `k_lo - 1` if none is.
pub fn max_k_of<F>(k_lo: u32, k_hi: u32, mut feasible: F) -> Result<u32>
where
    F: FnMut(u32) -> bool,
{
    if k_lo == 0 || k_lo > k_hi {
        return Err(Error::InvalidRange { lo: k_lo, hi: k_hi });
    }
    // invariant: everything < lo is feasible (or below range), everything > hi refuted
    let (mut lo, mut hi) = (k_lo, k_hi);
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(mid) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo - 1)
}

/// Evaluate one bound for a validated query.
pub fn evaluate(query: &BoundQuery, id: BoundId) -> Result<BoundResult> {
    let BoundQuery { n, d, q, variant_a } = *query;
    validate(n, d, q)?;
    match id {
        BoundId::A => match bound_a_max_k_with_witness(n, d, q, variant_a) {
            Ok((k, witness)) => Ok(BoundResult {
                bound: id,
                k_max: Some(k),
                size_max: None,
                witness,
            }),
            Err(Error::NotApplicable(_)) => Ok(BoundResult::not_applicable(id)),
            Err(e) => Err(e),
        },
        BoundId::Griesmer => Ok(BoundResult {
            bound: id,
            k_max: Some(griesmer_max_k(n, d, q)?),
            size_max: None,
            witness: None,
        }),
        BoundId::Singleton => BoundResult::from_size(id, singleton_max_size(n, d, q)?, q, None),
        BoundId::Hamming => BoundResult::from_size(id, hamming_max_size(n, d, q)?, q, None),
        BoundId::Plotkin => match plotkin_max_size(n, d, q)? {
            Some(size) => BoundResult::from_size(id, size, q, None),
            None => Ok(BoundResult::not_applicable(id)),
        },
        BoundId::Elias => match elias_max_size(n, d, q)? {
            Some(EliasBound { size, radius }) => {
                BoundResult::from_size(id, size, q, Some(Witness::EliasRadius(radius)))
            }
            None => Ok(BoundResult::not_applicable(id)),
        },
        BoundId::Levenshtein => {
            let LevenshteinBound { size, degree } = levenshtein_max_size(n, d, q)?;
            BoundResult::from_size(id, size, q, Some(Witness::LevenshteinDegree(degree)))
        }
    }
}

/// Evaluate every selected bound and report the tightest dimension.
///
/// A bound that does not apply yields a result with `k_max = None` instead
/// of failing the whole comparison.
pub fn best_upper_k(query: &BoundQuery, bounds: &[BoundId]) -> Result<Comparison> {
    let results = bounds
        .iter()
        .map(|&id| evaluate(query, id))
        .collect::<Result<Vec<_>>>()?;
    let min_k = results.iter().filter_map(|r| r.k_max).min();
    Ok(Comparison {
        query: *query,
        results,
        min_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_k_of_examples() {
        let got = max_k_of(3, 19, |k| {
            bound_a_check(20, k, 4, 2, RhsVariant::Weight)
                .unwrap()
                .is_feasible()
        })
        .unwrap();
        assert_eq!(got, 15);
        assert_eq!(max_k_of(3, 10, |_| true).unwrap(), 10);
        assert_eq!(max_k_of(3, 10, |_| false).unwrap(), 2);
        assert_eq!(max_k_of(5, 5, |_| true).unwrap(), 5);
        assert_eq!(
            max_k_of(6, 5, |_| true),
            Err(Error::InvalidRange { lo: 6, hi: 5 })
        );
    }

    #[test]
    fn max_k_of_agrees_with_linear_scan() {
        for lo in 1..8u32 {
            for hi in lo..20 {
                for cut in 0..22u32 {
                    let pred = |k: u32| k <= cut;
                    let scan = (lo..=hi).filter(|&k| pred(k)).max().unwrap_or(lo - 1);
                    assert_eq!(max_k_of(lo, hi, pred).unwrap(), scan);
                }
            }
        }
    }

    #[test]
    fn best_upper_k_examples() {
        let q = BoundQuery::new(20, 4, 2).unwrap();
        let c = best_upper_k(&q, &[BoundId::Griesmer, BoundId::A]).unwrap();
        assert_eq!(c.k(BoundId::Griesmer), Some(16));
        assert_eq!(c.k(BoundId::A), Some(15));
        assert_eq!(c.min_k, Some(15));

        let q = BoundQuery::new(6, 3, 3).unwrap();
        let c = best_upper_k(&q, &[BoundId::Griesmer, BoundId::A]).unwrap();
        assert_eq!(
            (c.k(BoundId::Griesmer), c.k(BoundId::A), c.min_k),
            (Some(4), Some(3), Some(3))
        );

        for n in 1..12 {
            let q = BoundQuery::new(n, 1, 3).unwrap();
            let c = best_upper_k(&q, &[BoundId::Singleton]).unwrap();
            assert_eq!(c.min_k, Some(n));
        }
    }

    #[test]
    fn not_applicable_does_not_fail_comparison() {
        let q = BoundQuery::new(10, 3, 2).unwrap();
        let c = best_upper_k(&q, &[BoundId::Plotkin, BoundId::Hamming]).unwrap();
        assert_eq!(c.get(BoundId::Plotkin).unwrap().k_max, None);
        assert_eq!(c.min_k, c.k(BoundId::Hamming));

        let q = BoundQuery::new(10, 2, 2).unwrap();
        let c = best_upper_k(&q, &[BoundId::A]).unwrap();
        assert_eq!(c.min_k, None);
    }

    #[test]
    fn query_validation() {
        assert_eq!(
            BoundQuery::new(5, 6, 2),
            Err(Error::InvalidQuery { n: 5, d: 6 })
        );
        assert_eq!(
            BoundQuery::new(5, 0, 2),
            Err(Error::InvalidQuery { n: 5, d: 0 })
        );
        assert_eq!(BoundQuery::new(5, 2, 1), Err(Error::InvalidAlphabet(1)));
    }

    #[test]
    fn bound_list_parsing() {
        assert_eq!(
            parse_bound_list("griesmer,a").unwrap(),
            vec![BoundId::Griesmer, BoundId::A]
        );
        assert_eq!(
            parse_bound_list("g,A,g").unwrap(),
            vec![BoundId::Griesmer, BoundId::A]
        );
        assert_eq!(parse_bound_list("all").unwrap(), BoundId::ALL.to_vec());
        assert!(parse_bound_list("johnson").is_err());
        assert!(parse_bound_list("").is_err());
    }
}
