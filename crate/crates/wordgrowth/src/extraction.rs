//! Extraction of a cancellation-free pair of large subsets from a word set.
//!
//! Given a set `A`, the extraction produces a conjugator `u` and subsets
//! `A₀, B₀ ⊆ uAu⁻¹` with `|A₀|, |B₀| ≥ |A| / 62` (at rank 2) such that every
//! product in `A₀B₀` and `B₀A₀` is reduced and every `B₀` word is at least as
//! long as every `A₀` word. Words are classified by their first and last
//! letters; either one class is large and not of the shape `(x, x⁻¹)`, or two
//! distinct `(x, x⁻¹)`-shaped classes are large, or almost everything lies in
//! a single `(x, x⁻¹)` class and conjugating by `x⁻¹` strictly shrinks the
//! total length, so the recursion terminates.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::setops::WordSet;
use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtractionError {
    #[error("cannot extract from an empty set")]
    EmptySet,
    #[error("extraction needs an alphabet of rank at least 2")]
    RankTooSmall,
}

/// First and last letter of a word; the empty word is filed under `(x, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub first: Letter,
    pub last: Letter,
}

impl ClassKey {
    pub fn of(w: &Word) -> ClassKey {
        match (w.first(), w.last()) {
            (Some(first), Some(last)) => ClassKey { first, last },
            _ => {
                let x = Letter::new(0, false);
                ClassKey { first: x, last: x }
            }
        }
    }

    /// True for keys of the shape `(x, x⁻¹)`.
    pub fn is_mutually_inverse(self) -> bool {
        self.last == self.first.inverted()
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.first, self.last)
    }
}

/// One step of the extraction: a conjugation, or the final case split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// The set was replaced by `l · A · l⁻¹` for this letter `l`.
    Conjugate(Letter),
    /// A single class supplied both halves.
    Case1(ClassKey),
    /// Two mutually inverse classes; the shorter-middled one supplies `A₀`.
    Case2 { short: ClassKey, long: ClassKey },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Conjugate(l) => write!(f, "conjugate by {l}"),
            Step::Case1(key) => write!(f, "case 1 on class ({key})"),
            Step::Case2 { short, long } => {
                write!(f, "case 2 on classes ({short}) and ({long})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionResult {
    /// `A₀` and `B₀` live in the conjugated set `u A u⁻¹`.
    pub conjugator: Word,
    pub a0: WordSet,
    pub b0: WordSet,
    pub trace: Vec<Step>,
}

/// Denominator `d` of the class-size test `d·|class| ≥ |A|`: one less than
/// twice the number of classes, so 31 at rank 2.
pub fn class_threshold_denominator(alphabet: Alphabet) -> usize {
    2 * alphabet.letter_count() * alphabet.letter_count() - 1
}

/// Denominator of the guaranteed output sizes `|A₀|, |B₀| ≥ |A| / d`;
/// 62 at rank 2.
pub fn size_bound_denominator(alphabet: Alphabet) -> usize {
    2 * class_threshold_denominator(alphabet)
}

/// Partitions a set by `ClassKey`. Each part keeps canonical order.
pub fn classify(a: &WordSet) -> BTreeMap<ClassKey, WordSet> {
    let mut parts: BTreeMap<ClassKey, Vec<Word>> = BTreeMap::new();
    for w in a {
        parts.entry(ClassKey::of(w)).or_default().push(w.clone());
    }
    parts
        .into_iter()
        .map(|(key, words)| (key, WordSet::from_sorted_unchecked(a.alphabet(), words)))
        .collect()
}

/// The `⌈(m+1)/2⌉` shortest and `⌊(m+1)/2⌋` longest words of a nonempty set;
/// for odd `m` the two halves share the middle word.
pub fn split_shortest_longest(s: &WordSet) -> Result<(WordSet, WordSet), ExtractionError> {
    let m = s.len();
    if m == 0 {
        return Err(ExtractionError::EmptySet);
    }
    let shortest = (m + 1).div_ceil(2);
    let longest = m.div_ceil(2);
    let a0 = WordSet::from_sorted_unchecked(s.alphabet(), s.words()[..shortest].to_vec());
    let b0 = WordSet::from_sorted_unchecked(s.alphabet(), s.words()[m - longest..].to_vec());
    Ok((a0, b0))
}

/// Length of the word both split halves touch: the `⌈(m+1)/2⌉`-th shortest.
/// Ordering two classes by this statistic keeps every `A₀` word no longer
/// than every `B₀` word when the halves come from different classes.
fn middle_length(s: &WordSet) -> usize {
    s.words()[s.len() / 2].len()
}

fn total_length(s: &WordSet) -> usize {
    s.iter().map(Word::len).sum()
}

/// Runs the classification/conjugation loop and extracts `A₀`, `B₀`.
pub fn lemma1_extract(a: &WordSet) -> Result<ExtractionResult, ExtractionError> {
    if a.is_empty() {
        return Err(ExtractionError::EmptySet);
    }
    if a.alphabet().rank() < 2 {
        return Err(ExtractionError::RankTooSmall);
    }
    let denom = class_threshold_denominator(a.alphabet());
    let size = a.len();
    let mut current = a.clone();
    let mut conjugator = Word::identity();
    let mut trace = Vec::new();
    loop {
        let classes = classify(&current);

        // Case 1: a large class that is not (x, x⁻¹)-shaped. Its words all
        // end with a letter that cannot cancel its first letter, so both
        // halves multiply without cancellation in either order.
        if let Some((&key, class)) = classes
            .iter()
            .find(|(key, class)| !key.is_mutually_inverse() && denom * class.len() >= size)
        {
            let (a0, b0) = split_shortest_longest(class)?;
            trace.push(Step::Case1(key));
            return Ok(ExtractionResult { conjugator, a0, b0, trace });
        }

        // Case 2: two large mutually inverse classes on distinct letters.
        let large: Vec<(&ClassKey, &WordSet)> = classes
            .iter()
            .filter(|(key, class)| key.is_mutually_inverse() && denom * class.len() >= size)
            .collect();
        if large.len() >= 2 {
            let (mut short, mut long) = (large[0], large[1]);
            if middle_length(long.1) < middle_length(short.1) {
                std::mem::swap(&mut short, &mut long);
            }
            let (a0, _) = split_shortest_longest(short.1)?;
            let (_, b0) = split_shortest_longest(long.1)?;
            trace.push(Step::Case2 { short: *short.0, long: *long.0 });
            return Ok(ExtractionResult { conjugator, a0, b0, trace });
        }

        // Otherwise a single (x, x⁻¹) class holds more than half of the set:
        // every other class is below the threshold, and there are 2N−1
        // thresholds of weight |A|/(2N−1) to distribute over N−1 of them.
        // Conjugating by x⁻¹ cancels two letters on that class and adds at
        // most two on the strictly smaller remainder, so total length drops.
        let (&key, _) = classes
            .iter()
            .max_by(|(ka, ca), (kb, cb)| ca.len().cmp(&cb.len()).then(kb.cmp(ka)))
            .expect("classification of a nonempty set is nonempty");
        assert!(
            key.is_mutually_inverse(),
            "largest class must be mutually inverse when neither case applies"
        );
        let by = Word::letter(key.first.inverted());
        let before = total_length(&current);
        current = current
            .conjugated_by(&by)
            .expect("conjugation by a letter stays in the alphabet");
        assert!(total_length(&current) < before, "conjugation must shrink total length");
        conjugator = by.concat(&conjugator);
        trace.push(Step::Conjugate(key.first.inverted()));
    }
}

/// Checks every promised property of an extraction directly against `a`:
/// membership of both halves in `u a u⁻¹`, cancellation-free products in
/// both orders, the length ordering, and the 1/62-style size bounds.
pub fn verify_extraction(a: &WordSet, r: &ExtractionResult) -> bool {
    let conjugated = match a.conjugated_by(&r.conjugator) {
        Ok(set) => set,
        Err(_) => return false,
    };
    if r.a0.is_empty() || r.b0.is_empty() {
        return false;
    }
    let denom = size_bound_denominator(a.alphabet());
    let max_a = r.a0.iter().map(Word::len).max().unwrap();
    let min_b = r.b0.iter().map(Word::len).min().unwrap();
    r.a0.is_subset_of(&conjugated)
        && r.b0.is_subset_of(&conjugated)
        && r.a0.all_products_reduced(&r.b0)
        && r.b0.all_products_reduced(&r.a0)
        && max_a <= min_b
        && denom * r.a0.len() >= a.len()
        && denom * r.b0.len() >= a.len()
}
