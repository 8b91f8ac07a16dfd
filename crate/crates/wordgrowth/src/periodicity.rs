//! String periodicity of reduced words: border arrays, left and right
//! periods, the two-occurrence overlap argument, and suffix-run transfer.
//!
//! A word `w` is periodic when `w = z^s t` with `s ≥ 2` and `t` a proper
//! prefix of `z`; the primitive `z` is then unique and equals the prefix of
//! length `|w| − border(w)`. The mirror decomposition `w = t z^s` (with `t`
//! a proper suffix of `z`) exists exactly when the left one does.

use std::fmt;

use thiserror::Error;

use crate::word::{Letter, Word};

/// Which end of the word the period is anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// `word = period^exponent · tail` (left) or `word = tail · period^exponent`
/// (right), with `exponent ≥ 2`, the period primitive, and the tail a proper
/// prefix (left) or suffix (right) of the period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodDecomposition {
    pub side: Side,
    pub period: Word,
    pub exponent: u32,
    pub tail: Word,
}

impl PeriodDecomposition {
    /// Reassembles the decomposed word.
    pub fn reconstruct(&self) -> Word {
        match self.side {
            Side::Left => self.period.pow(self.exponent).concat(&self.tail),
            Side::Right => self.tail.concat(&self.period.pow(self.exponent)),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OverlapError {
    #[error("the two occurrences have the same offset")]
    OffsetNotPositive,
    #[error("offset {offset} exceeds half of |v| = {len}")]
    OffsetTooLarge { offset: usize, len: usize },
    #[error("u1, u2, v do not describe two occurrences of v in one word")]
    OccurrenceMismatch,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuffixTransferError {
    #[error("alpha and beta must be nonempty")]
    EmptyPeriod,
    #[error("{role} is not cyclically reduced")]
    NotCyclicallyReduced { role: &'static str },
    #[error("{role} is not primitive")]
    NotPrimitive { role: &'static str },
    #[error("|beta| must exceed |alpha|")]
    PeriodsOutOfOrder,
    #[error("{role} does not end with beta²")]
    MissingBetaSquare { role: &'static str },
    #[error("a carries no suffix run of alpha")]
    EmptyAlphaRun,
}

/// Failure function of the letter sequence: `border[i]` is the length of the
/// longest proper border (simultaneous prefix and suffix) of `w[..=i]`.
pub(crate) fn border_array(letters: &[Letter]) -> Vec<usize> {
    let mut border = vec![0; letters.len()];
    for i in 1..letters.len() {
        let mut b = border[i - 1];
        while b > 0 && letters[i] != letters[b] {
            b = border[b - 1];
        }
        if letters[i] == letters[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

/// Minimal string period `|w| − border(w)` of a nonempty sequence.
pub(crate) fn minimal_period(letters: &[Letter]) -> usize {
    assert!(!letters.is_empty());
    letters.len() - border_array(letters).last().unwrap()
}

/// The decomposition `w = z^s t`, `s ≥ 2`, `t` a proper prefix of `z`.
///
/// Absent exactly when the minimal string period `p` has `2p > |w|`; when
/// present the decomposition is unique and `z` is primitive.
pub fn left_period(w: &Word) -> Option<PeriodDecomposition> {
    let n = w.len();
    if n == 0 {
        return None;
    }
    let p = minimal_period(w.letters());
    if 2 * p > n {
        return None;
    }
    let dec = PeriodDecomposition {
        side: Side::Left,
        period: Word::from_reduced(&w.letters()[..p]),
        exponent: (n / p) as u32,
        tail: Word::from_reduced(&w.letters()[..n % p]),
    };
    debug_assert!(dec.period.is_primitive());
    debug_assert_eq!(dec.reconstruct(), *w);
    dec.into()
}

/// The mirror decomposition `w = t z^s`, `t` a proper suffix of `z`.
///
/// Exists iff the left period does, with the same period length.
pub fn right_period(w: &Word) -> Option<PeriodDecomposition> {
    let dec = left_period(&w.reversed())?;
    let dec = PeriodDecomposition {
        side: Side::Right,
        period: dec.period.reversed(),
        exponent: dec.exponent,
        tail: dec.tail.reversed(),
    };
    debug_assert_eq!(dec.reconstruct(), *w);
    dec.into()
}

/// Two occurrences of `v` in one word force periodicity.
///
/// Validates that `u1 v w1 = u2 v w2` is realisable from `(u1, u2, v)` alone:
/// the offset `d = |u2| − |u1|` must satisfy `0 < 2d ≤ |v|`, `u2` must extend
/// `u1` by the first `d` letters of `v`, and `v` must overlap itself at shift
/// `d`. Returns the left-period decomposition of `v`; on success `u2` always
/// ends with the period.
pub fn overlap_lemma(
    u1: &Word,
    u2: &Word,
    v: &Word,
) -> Result<PeriodDecomposition, OverlapError> {
    if u2.len() <= u1.len() {
        return Err(OverlapError::OffsetNotPositive);
    }
    let d = u2.len() - u1.len();
    if 2 * d > v.len() {
        return Err(OverlapError::OffsetTooLarge { offset: d, len: v.len() });
    }
    let consistent = u2.starts_with(u1)
        && u2.letters()[u1.len()..] == v.letters()[..d]
        && v.letters()[d..] == v.letters()[..v.len() - d];
    if !consistent {
        return Err(OverlapError::OccurrenceMismatch);
    }
    let dec = left_period(v).expect("a self-overlap at shift ≤ |v|/2 is a period");
    // the shift is a multiple of the minimal period, so u2 inherits it
    assert!(u2.ends_with(&dec.period));
    Ok(dec)
}

/// Maximal `s` with `word = … · alpha^s`.
pub fn suffix_run(word: &Word, alpha: &Word) -> u32 {
    if alpha.is_empty() {
        return 0;
    }
    let a = alpha.letters();
    let w = word.letters();
    let mut end = w.len();
    let mut s = 0;
    while end >= a.len() && w[end - a.len()..end] == *a {
        end -= a.len();
        s += 1;
    }
    s
}

/// Suffix-run transfer between two words sharing the suffix `beta²`.
///
/// For primitive, cyclically reduced `alpha`, `beta` with `|beta| > |alpha|`
/// and hosts `a`, `b` both ending in `beta²`: if `alpha^s` is the maximal
/// alpha-run ending `a` (required `s ≥ 1`), then `b` ends with `alpha^s` too.
/// Returns whether that conclusion holds; `false` is a falsification.
pub fn suffix_run_transfer(
    alpha: &Word,
    beta: &Word,
    a: &Word,
    b: &Word,
) -> Result<bool, SuffixTransferError> {
    if alpha.is_empty() || beta.is_empty() {
        return Err(SuffixTransferError::EmptyPeriod);
    }
    for (role, word) in [("alpha", alpha), ("beta", beta)] {
        if !word.is_cyclically_reduced() {
            return Err(SuffixTransferError::NotCyclicallyReduced { role });
        }
        if !word.is_primitive() {
            return Err(SuffixTransferError::NotPrimitive { role });
        }
    }
    if beta.len() <= alpha.len() {
        return Err(SuffixTransferError::PeriodsOutOfOrder);
    }
    let beta2 = beta.pow(2);
    for (role, word) in [("a", a), ("b", b)] {
        if !word.ends_with(&beta2) {
            return Err(SuffixTransferError::MissingBetaSquare { role });
        }
    }
    let s = suffix_run(a, alpha);
    if s == 0 {
        return Err(SuffixTransferError::EmptyAlphaRun);
    }
    Ok(suffix_run(b, alpha) >= s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{Word, F2};

    fn w(text: &str) -> Word {
        Word::parse(text, F2).unwrap()
    }

    #[test]
    fn borders_match_hand_computation() {
        let cases: &[(&str, &[usize])] = &[
            ("x", &[0]),
            ("xy", &[0, 0]),
            ("xyxyxy", &[0, 0, 1, 2, 3, 4]),
            ("xyxyx", &[0, 0, 1, 2, 3]),
            ("xxYxx", &[0, 1, 0, 1, 2]),
            ("xyxxyx", &[0, 0, 1, 1, 2, 3]),
        ];
        for (text, expected) in cases {
            assert_eq!(border_array(w(text).letters()), *expected, "word {text}");
        }
    }

    /// Oracle: smallest `p` such that `w[i] == w[i+p]` for all valid `i`.
    fn minimal_period_naive(letters: &[Letter]) -> usize {
        (1..=letters.len())
            .find(|&p| (0..letters.len() - p).all(|i| letters[i] == letters[i + p]))
            .unwrap()
    }

    #[test]
    fn minimal_period_agrees_with_naive_oracle() {
        crate::generate::enumerate_words(F2, 9)
            .filter(|v| !v.is_empty())
            .for_each(|v| {
                assert_eq!(minimal_period(v.letters()), minimal_period_naive(v.letters()));
            });
    }

    #[test]
    fn left_period_examples() {
        let dec = left_period(&w("xyxyx")).unwrap();
        assert_eq!((dec.period.clone(), dec.exponent, dec.tail.clone()), (w("xy"), 2, w("x")));
        assert_eq!(dec.reconstruct(), w("xyxyx"));

        let dec = left_period(&w("yyyy")).unwrap();
        assert_eq!((dec.period, dec.exponent, dec.tail), (w("y"), 4, w("1")));

        assert_eq!(left_period(&w("xy")), None);
        assert_eq!(left_period(&w("1")), None);
        assert_eq!(left_period(&w("x")), None);
        // period repeated exactly twice with the longest possible tail
        let dec = left_period(&w("xyxxyxxyx")).unwrap();
        assert_eq!((dec.period, dec.exponent, dec.tail), (w("xyx"), 3, w("1")));
    }

    #[test]
    fn right_period_examples() {
        let dec = right_period(&w("xyxyx")).unwrap();
        assert_eq!(dec.side, Side::Right);
        assert_eq!((dec.period.clone(), dec.exponent, dec.tail.clone()), (w("yx"), 2, w("x")));
        assert_eq!(dec.reconstruct(), w("xyxyx"));

        let dec = right_period(&w("yyy")).unwrap();
        assert_eq!((dec.period, dec.exponent, dec.tail), (w("y"), 3, w("1")));

        assert_eq!(right_period(&w("xxy")), None);
    }

    #[test]
    fn left_and_right_periods_coexist_with_equal_lengths() {
        for v in crate::generate::enumerate_words(F2, 11) {
            let l = left_period(&v);
            let r = right_period(&v);
            assert_eq!(l.is_some(), r.is_some(), "word {v}");
            if let (Some(l), Some(r)) = (l, r) {
                assert_eq!(l.period.len(), r.period.len(), "word {v}");
                assert_eq!(l.exponent, r.exponent, "word {v}");
                assert_eq!(l.reconstruct(), v);
                assert_eq!(r.reconstruct(), v);
            }
        }
    }

    #[test]
    fn overlap_from_two_occurrences() {
        // (xy)³ overlaps itself at shift 2: u1 = 1, u2 = xy
        let dec = overlap_lemma(&w("1"), &w("xy"), &w("xyxyxy")).unwrap();
        assert_eq!((dec.period.clone(), dec.exponent), (w("xy"), 3));
        // host y·(xyx)²·? with occurrences of v = xyxxyx at offsets 1 and 4
        let v = w("xyxxyx");
        let dec = overlap_lemma(&w("y"), &w("yxyx"), &v).unwrap();
        assert_eq!(dec.period, w("xyx"));
    }

    #[test]
    fn overlap_rejects_bad_offsets_and_mismatches() {
        let v = w("xyxyxy");
        assert_eq!(
            overlap_lemma(&w("xy"), &w("xy"), &v),
            Err(OverlapError::OffsetNotPositive)
        );
        assert_eq!(
            overlap_lemma(&w("x"), &w("xy"), &v).unwrap_err(),
            OverlapError::OccurrenceMismatch
        );
        assert_eq!(
            overlap_lemma(&w("1"), &w("xyxy"), &v),
            Err(OverlapError::OffsetTooLarge { offset: 4, len: 6 })
        );
        // u2 does not extend u1 by a prefix of v
        assert_eq!(
            overlap_lemma(&w("y"), &w("yY"), &v).unwrap_err(),
            OverlapError::OffsetNotPositive
        );
        assert_eq!(
            overlap_lemma(&w("y"), &w("xy"), &v).unwrap_err(),
            OverlapError::OccurrenceMismatch
        );
    }

    #[test]
    fn overlap_exhaustive_small_words() {
        // every genuine self-overlap of shift ≤ |v|/2 yields a period, and
        // u2 = v[..d] then ends with it
        let mut seen = 0u64;
        for v in crate::generate::enumerate_words(F2, 10) {
            let n = v.len();
            for d in 1..=n / 2 {
                if v.letters()[d..] != v.letters()[..n - d] {
                    continue;
                }
                let u2 = Word::from_reduced(&v.letters()[..d]);
                let dec = overlap_lemma(&Word::identity(), &u2, &v).unwrap();
                assert!(u2.ends_with(&dec.period));
                assert_eq!(dec.reconstruct(), v);
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn suffix_runs() {
        assert_eq!(suffix_run(&w("xyyy"), &w("y")), 3);
        assert_eq!(suffix_run(&w("xyxy"), &w("xy")), 2);
        assert_eq!(suffix_run(&w("xyxy"), &w("y")), 1);
        assert_eq!(suffix_run(&w("xyxy"), &w("x")), 0);
        assert_eq!(suffix_run(&w("yyyy"), &w("yy")), 2);
        assert_eq!(suffix_run(&w("x"), &w("1")), 0);
    }

    #[test]
    fn suffix_transfer_examples() {
        // a = (xy)², b = y(xy)²; the maximal y-run of a is y¹ and b carries it
        assert_eq!(suffix_run_transfer(&w("y"), &w("xy"), &w("xyxy"), &w("yxyxy")), Ok(true));
        // a = x(yx)² ends with x¹; b = (yx)² ends with x too
        assert_eq!(suffix_run_transfer(&w("x"), &w("yx"), &w("xyxyx"), &w("yxyx")), Ok(true));
        // a = (yx)² ends with x, not with y: no alpha-run to transfer
        assert_eq!(
            suffix_run_transfer(&w("y"), &w("yx"), &w("yxyx"), &w("yxyx")),
            Err(SuffixTransferError::EmptyAlphaRun)
        );
    }

    #[test]
    fn suffix_transfer_rejects_malformed_periods() {
        let host = w("xyxy");
        assert_eq!(
            suffix_run_transfer(&w("1"), &w("xy"), &host, &host),
            Err(SuffixTransferError::EmptyPeriod)
        );
        assert_eq!(
            suffix_run_transfer(&w("y"), &w("xyX"), &host, &host),
            Err(SuffixTransferError::NotCyclicallyReduced { role: "beta" })
        );
        assert_eq!(
            suffix_run_transfer(&w("y"), &w("xyxy"), &host, &host),
            Err(SuffixTransferError::NotPrimitive { role: "beta" })
        );
        assert_eq!(
            suffix_run_transfer(&w("xy"), &w("y"), &host, &host),
            Err(SuffixTransferError::PeriodsOutOfOrder)
        );
        assert_eq!(
            suffix_run_transfer(&w("y"), &w("xy"), &w("yxy"), &host),
            Err(SuffixTransferError::MissingBetaSquare { role: "a" })
        );
    }

    #[test]
    fn decompositions_are_unique_exhaustively() {
        // no second primitive period can decompose the same word
        for v in crate::generate::enumerate_words(F2, 10).filter(|v| !v.is_empty()) {
            let dec = left_period(&v);
            for p in 1..=v.len() / 2 {
                let z = Word::from_reduced(&v.letters()[..p]);
                let s = v.len() / p;
                let tail = Word::from_reduced(&v.letters()[..v.len() % p]);
                let assembles = z.pow(s as u32).concat(&tail) == v;
                if assembles && s >= 2 && z.is_primitive() {
                    let dec = dec.as_ref().expect("word admits a decomposition");
                    assert_eq!(dec.period, z, "word {v}");
                    assert_eq!(dec.exponent, s as u32);
                    assert_eq!(dec.tail, tail);
                }
            }
        }
    }
}
