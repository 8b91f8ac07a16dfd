//! Executable verifiers for the product-set bounds: representation
//! multiplicities, the size/periodicity dichotomy, the suffix-run reduction,
//! star-shaped sets, free generation, and the growth theorem itself.
//!
//! Every verifier separates *precondition violations* (the statement does not
//! apply to the input) from *falsifications* (the statement applies and
//! fails); the latter are always bugs somewhere and the test drivers treat
//! them as fatal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use thiserror::Error;

use crate::extraction::{lemma1_extract, ExtractionError, ExtractionResult};
use crate::periodicity::{left_period, suffix_run, Side};
use crate::setops::{SetError, WordSet, DEFAULT_SIZE_CAP};
use crate::word::Word;

#[derive(Debug, Error)]
pub enum BoundsError {
    /// The input violates a hypothesis; the lemma says nothing about it.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The hypotheses hold and the conclusion fails.
    #[error("falsified: {0}")]
    Falsified(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Extraction(#[from] ExtractionError),
}

/// How often each element of `UvW` arises as a product `u·v·w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    /// Element of `UvW` → number of pairs `(u, w) ∈ U×W` producing it.
    pub counts: BTreeMap<Word, usize>,
    pub max_multiplicity: usize,
    /// Whether every product had length `|u| + |v| + |w|`.
    pub all_reduced: bool,
}

impl MultiplicityReport {
    pub fn multiplicity(&self, element: &Word) -> usize {
        self.counts.get(element).copied().unwrap_or(0)
    }
}

/// Counts the representations of every element of `UvW` by brute force.
/// Reducedness of the products is observed, not assumed.
pub fn representation_multiplicity(
    u_set: &WordSet,
    v: &Word,
    w_set: &WordSet,
) -> MultiplicityReport {
    let mut counts: BTreeMap<Word, usize> = BTreeMap::new();
    let mut all_reduced = true;
    for u in u_set {
        let uv = u.concat(v);
        for w in w_set {
            let product = uv.concat(w);
            all_reduced &= product.len() == u.len() + v.len() + w.len();
            *counts.entry(product).or_insert(0) += 1;
        }
    }
    let max_multiplicity = counts.values().copied().max().unwrap_or(0);
    MultiplicityReport { counts, max_multiplicity, all_reduced }
}

fn check_reduced_products(
    u_set: &WordSet,
    v: &Word,
    w_set: &WordSet,
) -> Result<(), BoundsError> {
    for u in u_set {
        for w in w_set {
            let product = u.concat(v).concat(w);
            if product.len() != u.len() + v.len() + w.len() {
                return Err(BoundsError::Precondition(format!(
                    "product {u}·{v}·{w} is not reduced"
                )));
            }
        }
    }
    Ok(())
}

fn check_v_dominates(u_set: &WordSet, v: &Word) -> Result<(), BoundsError> {
    if let Some(u) = u_set.iter().find(|u| u.len() > v.len()) {
        return Err(BoundsError::Precondition(format!(
            "|v| = {} is shorter than |u| = {} for u = {u}",
            v.len(),
            u.len()
        )));
    }
    Ok(())
}

/// Witness extraction for the three-representations argument.
///
/// When the products are reduced and `v` is at least as long as every `u`,
/// an element with three or more representations forces `v` to be periodic,
/// and one of the representing `u`s must end with the period. Returns that
/// `(period, witness)` pair, or `None` when the multiplicity never exceeds 2.
pub fn lemma3_witness(
    u_set: &WordSet,
    v: &Word,
    w_set: &WordSet,
) -> Result<Option<(Word, Word)>, BoundsError> {
    check_reduced_products(u_set, v, w_set)?;
    check_v_dominates(u_set, v)?;
    let report = representation_multiplicity(u_set, v, w_set);
    // an element and a u determine w, so the representing u's are distinct
    let Some((element, _)) = report.counts.iter().find(|(_, &count)| count >= 3) else {
        return Ok(None);
    };
    let Some(dec) = left_period(v) else {
        return Err(BoundsError::Falsified(format!(
            "element {element} has {} representations but v = {v} is aperiodic",
            report.multiplicity(element)
        )));
    };
    for u in u_set {
        if !u.ends_with(&dec.period) {
            continue;
        }
        let completion = u.concat(v).inverse().concat(element);
        if w_set.contains(&completion) {
            return Ok(Some((dec.period, u.clone())));
        }
    }
    Err(BoundsError::Falsified(format!(
        "element {element} has {} representations but no representing u ends \
         with the period {} of v",
        report.multiplicity(element),
        dec.period
    )))
}

/// The 1/2 bound for a single middle word.
///
/// Under the hypotheses — reduced products, `|v| ≥ |u|` for every `u`, and
/// either `v` aperiodic or no `u` ending with `v`'s period — every element
/// has at most two representations, so `2·|UvW| ≥ |U|·|W|`. Returns whether
/// the bound holds; `false` is a falsification.
pub fn lemma4_bound(u_set: &WordSet, v: &Word, w_set: &WordSet) -> Result<bool, BoundsError> {
    check_reduced_products(u_set, v, w_set)?;
    check_v_dominates(u_set, v)?;
    if let Some(dec) = left_period(v) {
        if let Some(u) = u_set.iter().find(|u| u.ends_with(&dec.period)) {
            return Err(BoundsError::Precondition(format!(
                "v is periodic with period {} and u = {u} ends with it",
                dec.period
            )));
        }
    }
    let report = representation_multiplicity(u_set, v, w_set);
    Ok(2 * report.counts.len() >= u_set.len() * w_set.len())
}

/// Outcome of the size/periodicity dichotomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DichotomyOutcome {
    BoundHolds { size: usize, threshold: Ratio<u64> },
    CommonPeriod { period: Word, side: Side },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dichotomy {
    pub outcome: DichotomyOutcome,
    /// Set when the size bound holds *and* V shares a period.
    pub both: bool,
}

impl fmt::Display for DichotomyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DichotomyOutcome::BoundHolds { size, threshold } => {
                write!(f, "|UVW| = {size} ≥ {threshold}")
            }
            DichotomyOutcome::CommonPeriod { period, side } => {
                write!(f, "common {side} period {period}")
            }
        }
    }
}

fn reversed_set(s: &WordSet) -> WordSet {
    WordSet::from_words(s.alphabet(), s.iter().map(Word::reversed))
        .expect("reversal keeps words reduced and in the alphabet")
}

fn common_left_root(v_set: &WordSet) -> Option<Word> {
    let mut root: Option<Word> = None;
    for v in v_set {
        let dec = left_period(v)?;
        match &root {
            None => root = Some(dec.period),
            Some(r) if *r == dec.period => {}
            Some(_) => return None,
        }
    }
    root
}

fn lemma2_core(u_set: &WordSet, v_set: &WordSet, w_set: &WordSet) -> Result<Dichotomy, BoundsError> {
    let uvw = u_set
        .product(v_set, DEFAULT_SIZE_CAP)?
        .product(w_set, DEFAULT_SIZE_CAP)?;
    let size = uvw.len();
    let pairs = u_set.len() * w_set.len();
    let bound_holds = 6 * size >= pairs;
    let common = common_left_root(v_set);
    let both = bound_holds && common.is_some();
    if bound_holds {
        let threshold = Ratio::new(pairs as u64, 6);
        return Ok(Dichotomy { outcome: DichotomyOutcome::BoundHolds { size, threshold }, both });
    }
    match common {
        Some(period) => Ok(Dichotomy {
            outcome: DichotomyOutcome::CommonPeriod { period, side: Side::Left },
            both,
        }),
        None => Err(BoundsError::Falsified(format!(
            "6·|UVW| = {} < |U|·|W| = {pairs} and V has no common period",
            6 * size
        ))),
    }
}

/// Either `6·|UVW| ≥ |U|·|W|` or all of `V` shares one period.
///
/// `side` selects which sandwiching factor the words of `V` must dominate
/// (`|v| ≥ |u|` on the left, `|v| ≥ |w|` on the right) and which period the
/// second disjunct asserts. The right variant runs the left one on reversed
/// words with `U` and `W` swapped.
pub fn lemma2_dichotomy(
    u_set: &WordSet,
    v_set: &WordSet,
    w_set: &WordSet,
    side: Side,
) -> Result<Dichotomy, BoundsError> {
    for (name, s) in [("U", u_set), ("V", v_set), ("W", w_set)] {
        if s.is_empty() {
            return Err(BoundsError::Precondition(format!("{name} is empty")));
        }
    }
    let min_v = v_set.iter().map(Word::len).min().unwrap();
    let outer = match side {
        Side::Left => u_set,
        Side::Right => w_set,
    };
    if let Some(o) = outer.iter().find(|o| o.len() > min_v) {
        return Err(BoundsError::Precondition(format!(
            "shortest v has length {min_v}, below |{o}| = {} on the {side} side",
            o.len()
        )));
    }
    if !u_set.all_products_reduced(v_set) || !v_set.all_products_reduced(w_set) {
        return Err(BoundsError::Precondition(
            "some product u·v·w is not reduced".into(),
        ));
    }
    match side {
        Side::Left => lemma2_core(u_set, v_set, w_set),
        Side::Right => {
            let mirrored =
                lemma2_core(&reversed_set(w_set), &reversed_set(v_set), &reversed_set(u_set))?;
            let outcome = match mirrored.outcome {
                DichotomyOutcome::CommonPeriod { period, .. } => DichotomyOutcome::CommonPeriod {
                    period: period.reversed(),
                    side: Side::Right,
                },
                bound => bound,
            };
            Ok(Dichotomy { outcome, both: mirrored.both })
        }
    }
}

/// The 1/2 bound when every `u` carries exactly `q` trailing copies of `v`'s
/// period. Strips the run and delegates: with `U' = U·ṽ^{−q}` and
/// `v' = ṽ^q·v` the products are unchanged word for word, `v'` keeps the
/// period `ṽ`, and no `u'` ends with it.
pub fn lemma6_check(
    u_set: &WordSet,
    v: &Word,
    w_set: &WordSet,
    q: u32,
) -> Result<bool, BoundsError> {
    if q == 0 {
        return Err(BoundsError::Precondition("q must be positive".into()));
    }
    check_reduced_products(u_set, v, w_set)?;
    check_v_dominates(u_set, v)?;
    let Some(dec) = left_period(v) else {
        return Err(BoundsError::Precondition(format!("v = {v} is aperiodic")));
    };
    for u in u_set {
        let run = suffix_run(u, &dec.period);
        if run != q {
            return Err(BoundsError::Precondition(format!(
                "u = {u} ends with {} copies of {}, expected exactly {q}",
                run, dec.period
            )));
        }
    }
    let strip = q as usize * dec.period.len();
    let stripped = WordSet::from_words(
        u_set.alphabet(),
        u_set.iter().map(|u| Word::from_reduced(&u.letters()[..u.len() - strip])),
    )?;
    debug_assert_eq!(stripped.len(), u_set.len());
    let v_prime = dec.period.pow(q).concat(v);
    debug_assert_eq!(
        representation_multiplicity(u_set, v, w_set).counts,
        representation_multiplicity(&stripped, &v_prime, w_set).counts,
    );
    lemma4_bound(&stripped, &v_prime, w_set)
}

/// A set of the shape `{p^{n₁}t, p^{n₂}t, …}` with `nᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarForm {
    pub period: Word,
    pub tail: Word,
    pub exponents: Vec<u32>,
}

/// Recognises the star shape: every member periodic with one common period
/// and one common tail. `None` for the empty set or any aperiodic member.
pub fn star_case(b: &WordSet) -> Option<StarForm> {
    let mut form: Option<StarForm> = None;
    for word in b {
        let dec = left_period(word)?;
        match &mut form {
            None => {
                form = Some(StarForm {
                    period: dec.period,
                    tail: dec.tail,
                    exponents: vec![dec.exponent],
                })
            }
            Some(f) if f.period == dec.period && f.tail == dec.tail => {
                f.exponents.push(dec.exponent)
            }
            Some(_) => return None,
        }
    }
    form
}

/// Substitutes `x ↦ a`, `y ↦ b` in each expression and confirms that the
/// `|S|` formally distinct alternating expressions evaluate to `|S|`
/// distinct reduced words.
pub fn free_generation_check(
    a: &Word,
    b: &Word,
    syllable_bound: usize,
    exprs: &WordSet,
) -> Result<bool, BoundsError> {
    if a.commutes(b) {
        return Err(BoundsError::Precondition(format!("{a} and {b} commute")));
    }
    let images = [a.clone(), a.inverse(), b.clone(), b.inverse()];
    let mut values = BTreeSet::new();
    for expr in exprs {
        if expr.letters().iter().any(|l| l.generator() > 1) {
            return Err(BoundsError::Precondition(format!(
                "expression {expr} uses a generator beyond the second"
            )));
        }
        if expr.syllable_count() > syllable_bound {
            return Err(BoundsError::Precondition(format!(
                "expression {expr} has {} syllables, above the bound {syllable_bound}",
                expr.syllable_count()
            )));
        }
        let value = expr
            .letters()
            .iter()
            .fold(Word::identity(), |acc, l| acc.concat(&images[l.index()]));
        values.insert(value);
    }
    Ok(values.len() == exprs.len())
}

/// Which branch of the lower-bound proof the extracted `B₀` selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremBranch {
    StarEmptyTail,
    StarNonemptyTail,
    NonStarInduction,
}

impl fmt::Display for TheoremBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremBranch::StarEmptyTail => write!(f, "star, empty tail"),
            TheoremBranch::StarNonemptyTail => write!(f, "star, nonempty tail"),
            TheoremBranch::NonStarInduction => write!(f, "non-star induction"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub n: u32,
    pub power_size: u64,
    pub floor_exponent: u32,
    /// `|Aⁿ| / |A|^⌊(n+1)/2⌋`, exact.
    pub ratio: BigRational,
    pub branch: TheoremBranch,
    pub derived_constant: BigRational,
    /// `|Aⁿ| ≥ c·|A|^⌊(n+1)/2⌋`.
    pub bound_ok: bool,
}

/// The constant `cₙ` composed from the proof's branch constants: for odd
/// `n = 2k+1`, `c = (1/6)^k · (1/62)^{k+1}`; an even `n` inherits the
/// constant of `n − 1` through `a·Aⁿ⁻¹ ⊆ Aⁿ`.
pub fn derived_constant(n: u32) -> BigRational {
    assert!(n >= 1, "the bound starts at n = 1");
    let odd = if n % 2 == 1 { n } else { n - 1 };
    let k = (odd - 1) / 2;
    let denom = BigInt::from(6).pow(k) * BigInt::from(62).pow(k + 1);
    BigRational::new(BigInt::from(1), denom)
}

/// Evaluates `|Aⁿ| ≥ cₙ·|A|^⌊(n+1)/2⌋` exactly and labels the proof branch
/// the extraction of `A` selects.
pub fn theorem_check(a: &WordSet, n: u32, cap: usize) -> Result<TheoremReport, BoundsError> {
    if n == 0 {
        return Err(BoundsError::Precondition("n must be positive".into()));
    }
    if a.find_noncommuting_pair().is_none() {
        return Err(BoundsError::Precondition(
            "A lies in a cyclic subgroup: every pair commutes".into(),
        ));
    }
    let extraction: ExtractionResult = lemma1_extract(a)?;
    let branch = match star_case(&extraction.b0) {
        Some(form) if form.tail.is_empty() => TheoremBranch::StarEmptyTail,
        Some(_) => TheoremBranch::StarNonemptyTail,
        None => TheoremBranch::NonStarInduction,
    };
    let power = a.power(n, cap)?;
    let floor_exponent = n.div_ceil(2);
    let ratio = BigRational::new(
        BigInt::from(power.len()),
        BigInt::from(a.len()).pow(floor_exponent),
    );
    let derived = derived_constant(n);
    let bound_ok = ratio >= derived;
    Ok(TheoremReport {
        n,
        power_size: power.len() as u64,
        floor_exponent,
        ratio,
        branch,
        derived_constant: derived,
        bound_ok,
    })
}
