//! Deterministic word and word-set generation: exhaustive enumeration in
//! canonical order, seeded random sampling, and the extremal family
//! `{x, y, y², …, y^k}`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::setops::WordSet;
use crate::word::{Alphabet, Letter, Word, F2};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("requested {requested} distinct words but only {available} exist in the range")]
    NotEnoughWords { requested: usize, available: u128 },
    #[error("the extremal family needs k ≥ 1")]
    EmptyFamily,
}

/// SplitMix64: the 64-bit finalizer-based generator of Steele, Lea and
/// Vigna. One u64 of state, equidistributed, and cheap enough to reseed
/// per instance, which keeps every generated test case reproducible.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` without modulo bias.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }
}

/// Parameters of one random word set.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorConfig {
    pub alphabet: Alphabet,
    pub seed: u64,
    pub set_size: usize,
    pub max_length: usize,
    /// Restrict to positive letters; any product of positive words is then
    /// automatically reduced.
    pub positive_only: bool,
}

/// Number of reduced words of length at most `max_length` (saturating).
pub fn count_words(alphabet: Alphabet, max_length: usize, positive_only: bool) -> u128 {
    let m = alphabet.rank() as u128;
    let mut total: u128 = 1;
    let mut at_len: u128 = 1;
    for l in 1..=max_length {
        at_len = if positive_only {
            at_len.saturating_mul(m)
        } else if l == 1 {
            2 * m
        } else {
            at_len.saturating_mul(2 * m - 1)
        };
        total = total.saturating_add(at_len);
    }
    total
}

/// A uniform-length random reduced word: the length is drawn uniformly from
/// `1..=max_length`, then the letters by a non-backtracking walk.
pub fn random_word(
    rng: &mut SplitMix64,
    alphabet: Alphabet,
    max_length: usize,
    positive_only: bool,
) -> Word {
    assert!(max_length >= 1, "sampled words are nonempty");
    let length = 1 + rng.next_below(max_length as u64) as usize;
    let count = alphabet.letter_count();
    let mut letters = Vec::with_capacity(length);
    let mut prev: Option<Letter> = None;
    for _ in 0..length {
        let letter = if positive_only {
            Letter::new(rng.next_below(alphabet.rank() as u64) as u8, false)
        } else {
            // draw among the letters that do not cancel the previous one
            let choices = match prev {
                Some(_) => count - 1,
                None => count,
            };
            let mut idx = rng.next_below(choices as u64) as usize;
            if let Some(p) = prev {
                if idx >= p.inverted().index() {
                    idx += 1;
                }
            }
            Letter::from_index(idx)
        };
        letters.push(letter);
        prev = Some(letter);
    }
    Word::from_reduced(&letters)
}

/// `set_size` distinct random nonempty words, selected by rejection until
/// the set fills up. Deterministic in the seed.
pub fn random_set(config: &GeneratorConfig) -> Result<WordSet, GenerateError> {
    let available = count_words(config.alphabet, config.max_length, config.positive_only) - 1;
    if config.set_size as u128 > available {
        return Err(GenerateError::NotEnoughWords {
            requested: config.set_size,
            available,
        });
    }
    let mut rng = SplitMix64::new(config.seed);
    let mut words = BTreeSet::new();
    while words.len() < config.set_size {
        words.insert(random_word(
            &mut rng,
            config.alphabet,
            config.max_length,
            config.positive_only,
        ));
    }
    Ok(WordSet::from_sorted_unchecked(
        config.alphabet,
        words.into_iter().collect(),
    ))
}

/// All reduced words of length at most `max_len`, in canonical order
/// (shorter first, equal lengths lexicographic by letter).
pub fn enumerate_words(alphabet: Alphabet, max_len: usize) -> EnumerateWords {
    EnumerateWords {
        alphabet,
        max_len,
        indices: Vec::new(),
        primed: false,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct EnumerateWords {
    alphabet: Alphabet,
    max_len: usize,
    indices: Vec<usize>,
    primed: bool,
    done: bool,
}

impl EnumerateWords {
    /// Smallest valid letter index at position `i` given the prefix.
    fn refill(&mut self, from: usize) {
        for i in from..self.indices.len() {
            let forbidden = if i == 0 { None } else { Some(self.indices[i - 1] ^ 1) };
            self.indices[i] = if forbidden == Some(0) { 1 } else { 0 };
        }
    }

    fn advance(&mut self) -> bool {
        let count = self.alphabet.letter_count();
        let mut i = self.indices.len();
        while i > 0 {
            i -= 1;
            let forbidden = if i == 0 { None } else { Some(self.indices[i - 1] ^ 1) };
            let mut cand = self.indices[i] + 1;
            if Some(cand) == forbidden {
                cand += 1;
            }
            if cand < count {
                self.indices[i] = cand;
                self.refill(i + 1);
                return true;
            }
        }
        if self.indices.len() >= self.max_len {
            return false;
        }
        let len = self.indices.len() + 1;
        self.indices = vec![0; len];
        self.refill(0);
        true
    }
}

impl Iterator for EnumerateWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if !self.primed {
            self.primed = true;
            return Some(Word::identity());
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        let letters: Vec<Letter> =
            self.indices.iter().map(|&i| Letter::from_index(i)).collect();
        Some(Word::from_reduced(&letters))
    }
}

/// The family `A_k = {x, y, y², …, y^k}` in rank 2, which realises
/// `|A_k³| = k² + 10k − 3` against `|A_k|² = (k+1)²`.
pub fn extremal_family(k: u32) -> Result<WordSet, GenerateError> {
    if k == 0 {
        return Err(GenerateError::EmptyFamily);
    }
    let x = Word::letter(Letter::new(0, false));
    let y = Word::letter(Letter::new(1, false));
    let words = std::iter::once(x).chain((1..=k).map(|i| y.pow(i)));
    Ok(WordSet::from_words(F2, words).expect("family words lie in the rank-2 alphabet"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_vector() {
        // first outputs for seed 0, per the reference implementation
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn next_below_stays_in_range() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            assert!(rng.next_below(7) < 7);
        }
        for _ in 0..10 {
            assert_eq!(rng.next_below(1), 0);
        }
    }

    #[test]
    fn enumeration_prefix_is_canonical() {
        let expected = [
            "1", "x", "X", "y", "Y", "xx", "xy", "xY", "XX", "Xy", "XY", "yx", "yX", "yy",
            "Yx", "YX", "YY",
        ];
        let words: Vec<Word> = enumerate_words(F2, 2).collect();
        assert_eq!(words.len(), 17);
        for (word, text) in words.iter().zip(expected) {
            assert_eq!(word.to_string(), text);
        }
    }

    #[test]
    fn enumeration_counts_match_the_closed_form() {
        assert_eq!(enumerate_words(F2, 0).count(), 1);
        assert_eq!(enumerate_words(F2, 1).count(), 5);
        assert_eq!(enumerate_words(F2, 3).count(), 53);
        assert_eq!(count_words(F2, 3, false), 53);
        assert_eq!(count_words(F2, 3, true), 15);
        let f1 = Alphabet::new(1).unwrap();
        assert_eq!(enumerate_words(f1, 4).count(), 9);
        assert_eq!(count_words(f1, 4, false), 9);
    }

    #[test]
    fn enumeration_is_strictly_increasing() {
        let words: Vec<Word> = enumerate_words(F2, 4).collect();
        for pair in words.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn random_words_respect_their_constraints() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..200 {
            let w = random_word(&mut rng, F2, 6, false);
            assert!(!w.is_empty() && w.len() <= 6);
        }
        let mut lengths = BTreeSet::new();
        for _ in 0..200 {
            let w = random_word(&mut rng, F2, 6, true);
            assert!(!w.is_empty() && w.len() <= 6);
            assert!(w.letters().iter().all(|l| !l.is_inverse()));
            lengths.insert(w.len());
        }
        assert!(lengths.len() > 3, "lengths should vary: {lengths:?}");
    }

    #[test]
    fn random_sets_are_deterministic_and_sized() {
        let config = GeneratorConfig {
            alphabet: F2,
            seed: 42,
            set_size: 20,
            max_length: 5,
            positive_only: true,
        };
        let a = random_set(&config).unwrap();
        let b = random_set(&config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|w| w.len() <= 5));

        let different = random_set(&GeneratorConfig { seed: 43, ..config }).unwrap();
        assert_ne!(a, different);
    }

    #[test]
    fn random_sets_report_exhaustion() {
        let config = GeneratorConfig {
            alphabet: F2,
            seed: 1,
            set_size: 3,
            max_length: 1,
            positive_only: true,
        };
        assert_eq!(
            random_set(&config),
            Err(GenerateError::NotEnoughWords { requested: 3, available: 2 })
        );
        // exactly exhausting the range must still terminate
        let full = random_set(&GeneratorConfig { set_size: 2, ..config }).unwrap();
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn random_sets_of_full_range_are_the_range() {
        // only four candidate words exist, so any seed collects them all
        let config = GeneratorConfig {
            alphabet: F2,
            seed: 3,
            set_size: 4,
            max_length: 1,
            positive_only: false,
        };
        let words: Vec<String> =
            random_set(&config).unwrap().iter().map(Word::to_string).collect();
        assert_eq!(words, ["x", "X", "y", "Y"]);
    }

    #[test]
    fn extremal_family_members() {
        let a1 = extremal_family(1).unwrap();
        assert_eq!(a1.len(), 2);
        let a3 = extremal_family(3).unwrap();
        let expected = ["x", "y", "yy", "yyy"];
        let words: Vec<String> = a3.iter().map(Word::to_string).collect();
        assert_eq!(words, expected);
        assert_eq!(extremal_family(0), Err(GenerateError::EmptyFamily));
        assert_eq!(extremal_family(30).unwrap().len(), 31);
    }
}
