//! Finite sets of reduced words: products, powers and growth tables.
//!
//! A `WordSet` stores distinct words sorted in canonical order (length, then
//! letters), so equal sets compare equal and iteration order is stable.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::word::{self, Alphabet, Word};

/// Default ceiling on the number of elements a product may produce.
pub const DEFAULT_SIZE_CAP: usize = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("operands use different alphabets")]
    AlphabetMismatch,
    #[error("word {word} does not fit the rank-{rank} alphabet")]
    WordOutsideAlphabet { word: String, rank: u8 },
    #[error("product exceeds the size cap of {cap} elements")]
    SizeCapExceeded { cap: usize },
    #[error("power exceeds the size cap of {cap} elements; largest completed exponent {reached}")]
    PowerSizeCapExceeded { cap: usize, reached: u32 },
    #[error("exponent must be at least 1")]
    ZeroExponent,
}

/// A deduplicated set of reduced words over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    alphabet: Alphabet,
    words: Vec<Word>,
}

impl WordSet {
    pub fn new(alphabet: Alphabet) -> WordSet {
        WordSet { alphabet, words: Vec::new() }
    }

    /// Collects, validates, sorts and deduplicates.
    pub fn from_words<I>(alphabet: Alphabet, words: I) -> Result<WordSet, SetError>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            if w.max_generator().is_some_and(|g| g >= alphabet.rank()) {
                return Err(SetError::WordOutsideAlphabet {
                    word: w.to_string(),
                    rank: alphabet.rank(),
                });
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(WordSet { alphabet, words })
    }

    /// Wraps a vector that is already sorted, deduplicated and in-alphabet.
    pub(crate) fn from_sorted_unchecked(alphabet: Alphabet, words: Vec<Word>) -> WordSet {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(words
            .iter()
            .all(|w| w.max_generator().is_none_or(|g| g < alphabet.rank())));
        WordSet { alphabet, words }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in canonical order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn is_subset_of(&self, other: &WordSet) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }

    /// Elementwise product `{a · b}`, aborting once more than `cap` distinct
    /// elements accumulate.
    pub fn product(&self, other: &WordSet, cap: usize) -> Result<WordSet, SetError> {
        if self.alphabet != other.alphabet {
            return Err(SetError::AlphabetMismatch);
        }
        let mut out: HashSet<Word> = HashSet::new();
        for a in &self.words {
            for b in &other.words {
                out.insert(a.concat(b));
                if out.len() > cap {
                    return Err(SetError::SizeCapExceeded { cap });
                }
            }
        }
        let mut words: Vec<Word> = out.into_iter().collect();
        words.sort_unstable();
        Ok(WordSet::from_sorted_unchecked(self.alphabet, words))
    }

    /// `A^n` by balanced splitting `A^n = A^⌊n/2⌋ · A^⌈n/2⌉` with memoised
    /// intermediate powers. Equals the n-fold product.
    pub fn power(&self, n: u32, cap: usize) -> Result<WordSet, SetError> {
        if n == 0 {
            return Err(SetError::ZeroExponent);
        }
        let mut memo: HashMap<u32, WordSet> = HashMap::new();
        self.ensure_power(n, cap, &mut memo)?;
        Ok(memo.remove(&n).unwrap())
    }

    fn ensure_power(
        &self,
        n: u32,
        cap: usize,
        memo: &mut HashMap<u32, WordSet>,
    ) -> Result<(), SetError> {
        if memo.contains_key(&n) {
            return Ok(());
        }
        if n == 1 {
            memo.insert(1, self.clone());
            return Ok(());
        }
        let lo = n / 2;
        let hi = n - lo;
        self.ensure_power(lo, cap, memo)?;
        self.ensure_power(hi, cap, memo)?;
        let prod = memo[&lo].product(&memo[&hi], cap).map_err(|e| match e {
            SetError::SizeCapExceeded { cap } => SetError::PowerSizeCapExceeded {
                cap,
                reached: memo.keys().copied().max().unwrap(),
            },
            other => other,
        })?;
        memo.insert(n, prod);
        Ok(())
    }

    /// True iff `|a·b| = |a| + |b|` for every pair, i.e. no product cancels.
    /// Only the junction letters matter, so this is linear in `|A| + |B|`.
    pub fn all_products_reduced(&self, other: &WordSet) -> bool {
        let mut last = [false; 52];
        let mut first = [false; 52];
        for a in &self.words {
            if let Some(l) = a.last() {
                last[l.index()] = true;
            }
        }
        for b in &other.words {
            if let Some(l) = b.first() {
                first[l.index()] = true;
            }
        }
        !(0..52).any(|i| last[i] && first[i ^ 1])
    }

    /// The conjugated set `{u a u⁻¹}`; same size as `self`.
    pub fn conjugated_by(&self, u: &Word) -> Result<WordSet, SetError> {
        let out = WordSet::from_words(
            self.alphabet,
            self.words.iter().map(|a| a.conjugated_by(u)),
        )?;
        debug_assert_eq!(out.len(), self.len());
        Ok(out)
    }

    /// First non-commuting pair in canonical order, if any.
    pub fn find_noncommuting_pair(&self) -> Option<(&Word, &Word)> {
        word::find_noncommuting_pair(&self.words)
    }

    /// Sizes and normalised ratios of `A¹, …, A^nmax`.
    ///
    /// Row `n` reports `|Aⁿ|` and the exact rational
    /// `|Aⁿ| / |A|^⌊(n+1)/2⌋`. Rows stop early if the cap is exceeded; the
    /// first missing exponent is recorded in `truncated_at`. The empty set
    /// yields an empty table.
    pub fn growth_table(&self, nmax: u32, cap: usize) -> GrowthReport {
        let mut report = GrowthReport { rows: Vec::new(), truncated_at: None };
        if self.is_empty() {
            return report;
        }
        let base = BigInt::from(self.len());
        let mut current = self.clone();
        for n in 1..=nmax {
            if n > 1 {
                match current.product(self, cap) {
                    Ok(next) => current = next,
                    Err(_) => {
                        report.truncated_at = Some(n);
                        break;
                    }
                }
            }
            let ratio = BigRational::new(BigInt::from(current.len()), base.pow(n.div_ceil(2)));
            report.rows.push(GrowthRow { n, size: current.len() as u64, ratio });
        }
        report
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Brace-list form `{1, x, xy, …}`; sets beyond eight words are elided.
impl std::fmt::Display for WordSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().take(8).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        if self.words.len() > 8 {
            write!(f, ", … {} words", self.words.len())?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub n: u32,
    pub size: u64,
    /// `size / |A|^⌊(n+1)/2⌋`, exact.
    pub ratio: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    /// First exponent whose power exceeded the cap, when truncated.
    pub truncated_at: Option<u32>,
}
