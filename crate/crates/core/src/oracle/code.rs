use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A word of length `n` over `Z_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    q: u8,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(q: u8, symbols: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q as u32));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::SymbolOutOfRange { symbol: bad, q });
        }
        Ok(Word { q, symbols })
    }

    pub(crate) fn from_raw(q: u8, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < q));
        Word { q, symbols }
    }

    pub fn zero(q: u8, n: usize) -> Self {
        Word {
            q,
            symbols: vec![0; n],
        }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    fn compatible(&self, other: &Word) -> Result<()> {
        if self.q != other.q || self.len() != other.len() {
            return Err(Error::IncompatibleWords);
        }
        Ok(())
    }

    pub fn distance(&self, other: &Word) -> Result<usize> {
        self.compatible(other)?;
        Ok(self
            .symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Coordinate-wise `self - other (mod q)`.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.compatible(other)?;
        let q = self.q;
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| (a + q - b) % q)
            .collect();
        Ok(Word { q, symbols })
    }

    /// The projection onto the first `k` coordinates.
    pub fn prefix(&self, k: usize) -> &[u8] {
        &self.symbols[..k]
    }

    pub fn tail(&self, k: usize) -> &[u8] {
        &self.symbols[k..]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    u.distance(v)
}

pub fn weight(u: &Word) -> usize {
    u.weight()
}

/// A finite set of distinct words of common length and alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    q: u8,
    n: usize,
    words: Vec<Word>,
    systematic_k: Option<usize>,
    linear: bool,
}

impl Code {
    pub fn new(q: u8, n: usize, words: Vec<Word>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q as u32));
        }
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.q != q || w.len() != n {
                return Err(Error::IncompatibleWords);
            }
            if !seen.insert(w) {
                return Err(Error::DuplicateWord);
            }
        }
        Ok(Code {
            q,
            n,
            words,
            systematic_k: None,
            linear: false,
        })
    }

    /// A code whose first `k` coordinates hit every prefix exactly once.
    pub fn systematic(q: u8, n: usize, k: usize, words: Vec<Word>) -> Result<Self> {
        let mut code = Code::new(q, n, words)?;
        code.mark_systematic(k)?;
        Ok(code)
    }

    pub fn mark_systematic(&mut self, k: usize) -> Result<()> {
        if k > self.n || !prefixes_are_bijective(&self.words, self.q, k) {
            return Err(Error::NotSystematic { k });
        }
        self.systematic_k = Some(k);
        Ok(())
    }

    pub(crate) fn from_parts(
        q: u8,
        n: usize,
        words: Vec<Word>,
        systematic_k: Option<usize>,
        linear: bool,
    ) -> Self {
        Code {
            q,
            n,
            words,
            systematic_k,
            linear,
        }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn systematic_k(&self) -> Option<usize> {
        self.systematic_k
    }

    /// True only for codes produced by a generator matrix.
    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn contains_zero(&self) -> bool {
        self.words.iter().any(Word::is_zero)
    }

    /// Minimum distance. Linear codes use the minimum nonzero weight; any
    /// other code gets the full pairwise computation.
    pub fn min_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedDistance);
        }
        if self.linear {
            return Ok(self
                .words
                .iter()
                .filter(|w| !w.is_zero())
                .map(Word::weight)
                .min()
                .expect("at least one nonzero word"));
        }
        self.pairwise_min_distance()
    }

    pub fn pairwise_min_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::UndefinedDistance);
        }
        let mut best = usize::MAX;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                best = best.min(a.distance(b)?);
            }
        }
        Ok(best)
    }

    /// Sorted list of all pairwise distances.
    pub fn distance_multiset(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.words.len() * self.words.len().saturating_sub(1) / 2);
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                out.push(a.distance(b).expect("same code"));
            }
        }
        out.sort_unstable();
        out
    }
}

fn prefixes_are_bijective(words: &[Word], q: u8, k: usize) -> bool {
    let expected = (q as u64).checked_pow(k as u32);
    if expected != Some(words.len() as u64) {
        return false;
    }
    let prefixes: HashSet<&[u8]> = words.iter().map(|w| w.prefix(k)).collect();
    prefixes.len() == words.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(q: u8, s: &str) -> Word {
        Word::new(q, s.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    #[test]
    fn distance_and_weight() {
        let u = w(2, "01101");
        assert_eq!(hamming_distance(&u, &u).unwrap(), 0);
        assert_eq!(weight(&Word::zero(3, 6)), 0);
        assert_eq!(hamming_distance(&u, &w(2, "01000")).unwrap(), 2);
        assert_eq!(u.distance(&w(2, "0110")), Err(Error::IncompatibleWords));
        assert_eq!(u.distance(&w(3, "01101")), Err(Error::IncompatibleWords));
    }

    #[test]
    fn word_validation() {
        assert_eq!(
            Word::new(3, vec![0, 3]),
            Err(Error::SymbolOutOfRange { symbol: 3, q: 3 })
        );
        assert_eq!(Word::new(1, vec![0]), Err(Error::InvalidAlphabet(1)));
    }

    #[test]
    fn subtraction_wraps() {
        assert_eq!(w(5, "0134").sub(&w(5, "1234")).unwrap(), w(5, "4400"));
    }

    #[test]
    fn repetition_code_distance() {
        for q in [2u8, 3, 5] {
            for n in 1..7 {
                let words = (0..q).map(|s| Word::new(q, vec![s; n]).unwrap()).collect();
                let code = Code::systematic(q, n, 1, words).unwrap();
                assert_eq!(code.min_distance().unwrap(), n);
            }
        }
    }

    #[test]
    fn duplicates_rejected() {
        let words = vec![w(2, "011"), w(2, "101"), w(2, "011")];
        assert_eq!(Code::new(2, 3, words), Err(Error::DuplicateWord));
    }

    #[test]
    fn distance_needs_two_words() {
        let code = Code::new(2, 3, vec![w(2, "011")]).unwrap();
        assert_eq!(code.min_distance(), Err(Error::UndefinedDistance));
    }

    #[test]
    fn systematic_requires_bijective_prefixes() {
        let words = vec![w(2, "000"), w(2, "011"), w(2, "101"), w(2, "110")];
        assert!(Code::systematic(2, 3, 2, words.clone()).is_ok());
        assert_eq!(
            Code::systematic(2, 3, 1, words),
            Err(Error::NotSystematic { k: 1 })
        );
        let words = vec![w(2, "000"), w(2, "001"), w(2, "101"), w(2, "110")];
        assert_eq!(
            Code::systematic(2, 3, 2, words),
            Err(Error::NotSystematic { k: 2 })
        );
    }
}
