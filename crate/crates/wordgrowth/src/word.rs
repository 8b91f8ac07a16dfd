//! Letters and freely reduced words over a fixed finite alphabet.
//!
//! A word is stored as its unique freely reduced letter sequence; every
//! constructor reduces its input, so a `Word` never contains an adjacent
//! pair `g g⁻¹`. The canonical order on words compares length first, then
//! letters, with `x < x⁻¹ < y < y⁻¹ < …`.

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

use crate::periodicity;

/// Largest supported alphabet rank; bounded by the text encoding, which
/// assigns one Latin letter per generator.
pub const MAX_RANK: u8 = 26;

/// Generator characters in canonical order: `x`, `y`, `z`, then `a`..`w`.
const GENERATOR_CHARS: &[u8; 26] = b"xyzabcdefghijklmnopqrstuvw";

pub(crate) type Letters = SmallVec<[Letter; 16]>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet rank must lie in 1..={MAX_RANK}, got {0}")]
    RankOutOfRange(u32),
    #[error("the empty word has no primitive root")]
    EmptyWord,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty text; the empty word is written \"1\"")]
    Empty,
    #[error("unknown character {0:?}")]
    UnknownCharacter(char),
    #[error("'1' denotes the empty word and must stand alone")]
    MisplacedIdentity,
    #[error("letter {letter:?} lies outside the rank-{rank} alphabet")]
    OutsideAlphabet { letter: char, rank: u8 },
}

/// A free generating set `x₁, …, x_m`, identified by its rank `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    rank: u8,
}

/// The free group of rank 2, the default setting throughout.
pub const F2: Alphabet = Alphabet { rank: 2 };

impl Alphabet {
    pub fn new(rank: u32) -> Result<Alphabet, WordError> {
        if rank == 0 || rank > MAX_RANK as u32 {
            return Err(WordError::RankOutOfRange(rank));
        }
        Ok(Alphabet { rank: rank as u8 })
    }

    pub fn rank(self) -> u8 {
        self.rank
    }

    /// Number of letters, i.e. generators together with their inverses.
    pub fn letter_count(self) -> usize {
        2 * self.rank as usize
    }

    /// All letters in canonical order `x < x⁻¹ < y < y⁻¹ < …`.
    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.letter_count() as u8).map(Letter)
    }

    /// The positive letters `x, y, …` only.
    pub fn positive_letters(self) -> impl Iterator<Item = Letter> {
        (0..self.rank).map(|g| Letter::new(g, false))
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.generator() < self.rank
    }
}

/// A generator or inverse generator. Packs to one byte; the packed value
/// `2·generator + is_inverse` realises the canonical letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub fn new(generator: u8, inverse: bool) -> Letter {
        assert!(generator < MAX_RANK, "generator index out of range");
        Letter(generator * 2 + inverse as u8)
    }

    pub fn generator(self) -> u8 {
        self.0 / 2
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    /// The inverse letter; an involution.
    pub fn inverted(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    /// True when `self · other` cancels.
    pub fn cancels(self, other: Letter) -> bool {
        self.0 ^ 1 == other.0
    }

    /// Position in the canonical letter order, in `0..2·rank`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(index: usize) -> Letter {
        debug_assert!(index < 2 * MAX_RANK as usize);
        Letter(index as u8)
    }

    pub fn to_char(self) -> char {
        let c = GENERATOR_CHARS[self.generator() as usize];
        if self.is_inverse() {
            c.to_ascii_uppercase() as char
        } else {
            c as char
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        let lower = c.to_ascii_lowercase();
        let gen = GENERATOR_CHARS.iter().position(|&g| g as char == lower)?;
        Some(Letter::new(gen as u8, c.is_ascii_uppercase()))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Letters,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Word {
        Word { letters: SmallVec::new() }
    }

    pub fn letter(l: Letter) -> Word {
        let mut letters = SmallVec::new();
        letters.push(l);
        Word { letters }
    }

    /// Builds a word from an arbitrary letter sequence, cancelling adjacent
    /// inverse pairs until none remain. Single left-to-right pass.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        let mut letters: Letters = SmallVec::new();
        for l in iter {
            if letters.last().is_some_and(|&last| last.cancels(l)) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    /// Wraps a slice that is already reduced (a factor of a reduced word).
    pub(crate) fn from_reduced(letters: &[Letter]) -> Word {
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        Word { letters: SmallVec::from_slice(letters) }
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Word, ParseError> {
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        if text == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            if c == '1' {
                return Err(ParseError::MisplacedIdentity);
            }
            let letter = Letter::from_char(c).ok_or(ParseError::UnknownCharacter(c))?;
            if !alphabet.contains(letter) {
                return Err(ParseError::OutsideAlphabet { letter: c, rank: alphabet.rank() });
            }
            letters.push(letter);
        }
        Ok(Word::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Largest generator index appearing in the word.
    pub fn max_generator(&self) -> Option<u8> {
        self.letters.iter().map(|l| l.generator()).max()
    }

    /// The reduced product `self · other`. Cancellation happens only at the
    /// junction, so one pass over `other` suffices.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last().is_some_and(|&last| last.cancels(l)) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    /// The group inverse: letters reversed and individually inverted.
    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    /// The conjugate `u · self · u⁻¹`.
    pub fn conjugated_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }

    /// `self^n` for `n ≥ 0`.
    pub fn pow(&self, n: u32) -> Word {
        let mut out = Word::identity();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    pub fn commutes(&self, other: &Word) -> bool {
        self.concat(other) == other.concat(self)
    }

    /// Letter order reversed. A string operation, not the group inverse;
    /// reversal preserves reducedness.
    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.letters.len() >= prefix.letters.len()
            && self.letters[..prefix.letters.len()] == prefix.letters[..]
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.letters.len() >= suffix.letters.len()
            && self.letters[self.letters.len() - suffix.letters.len()..] == suffix.letters[..]
    }

    /// True when the word does not both start with a letter and end with its
    /// inverse. The empty word counts as cyclically reduced.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(first), Some(last)) => !last.cancels(first),
            _ => true,
        }
    }

    /// Writes `self = c · core · c⁻¹` with `core` cyclically reduced and the
    /// products cancellation-free.
    pub fn cyclic_decomposition(&self) -> (Word, Word) {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[hi - 1].cancels(self.letters[lo]) {
            lo += 1;
            hi -= 1;
        }
        (Word::from_reduced(&self.letters[..lo]), Word::from_reduced(&self.letters[lo..hi]))
    }

    /// The unique primitive `r` and maximal `t ≥ 1` with `self = r^t`.
    ///
    /// Writes `self = c · core · c⁻¹`, takes the primitive string root `z` of
    /// the cyclically reduced `core` (the shortest prefix whose length both
    /// divides `|core|` and is a string period of it), and returns
    /// `(c z c⁻¹, |core| / |z|)`.
    pub fn primitive_root(&self) -> Result<(Word, u32), WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let (conj, core) = self.cyclic_decomposition();
        debug_assert!(!core.is_empty());
        let p = periodicity::minimal_period(core.letters());
        let (root_len, exponent) = if core.len() % p == 0 {
            (p, (core.len() / p) as u32)
        } else {
            (core.len(), 1)
        };
        let mut letters: Letters = SmallVec::with_capacity(2 * conj.len() + root_len);
        letters.extend_from_slice(conj.letters());
        letters.extend_from_slice(&core.letters()[..root_len]);
        letters.extend(conj.letters().iter().rev().map(|l| l.inverted()));
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        Ok((Word { letters }, exponent))
    }

    /// True when the word is not a proper power (the empty word is not
    /// primitive).
    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_root(), Ok((_, 1)))
    }

    /// Number of maximal blocks of a single generator, e.g. `x²y⁻³x` has 3.
    pub fn syllable_count(&self) -> usize {
        let mut count = 0;
        let mut prev: Option<Letter> = None;
        for &l in &self.letters {
            if prev != Some(l) {
                count += 1;
            }
            prev = Some(l);
        }
        count
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// First pair of non-commuting words, scanning in the given order.
///
/// Returns the first non-trivial word `a` together with the first word that
/// fails to commute with it. This suffices: in a free group the centraliser
/// of a non-trivial element is the cyclic group on its primitive root, so if
/// every word commutes with `a`, all pairs commute.
pub fn find_noncommuting_pair(words: &[Word]) -> Option<(&Word, &Word)> {
    let a = words.iter().find(|w| !w.is_identity())?;
    words.iter().find(|b| !a.commutes(b)).map(|b| (a, b))
}
