//! Batch verification drivers: exhaustive sweeps over small instances and
//! seeded random campaigns. Each driver counts the instances it ran, the
//! candidates it skipped as out of scope, and collects failure descriptions;
//! an empty failure list means every in-scope instance passed.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;

use crate::bounds::{
    lemma2_dichotomy, lemma3_witness, lemma4_bound, lemma6_check, representation_multiplicity,
    theorem_check,
};
use crate::extraction::{lemma1_extract, size_bound_denominator, verify_extraction};
use crate::generate::{
    count_words, enumerate_words, random_set, random_word, GeneratorConfig, SplitMix64,
};
use crate::periodicity::{
    left_period, overlap_lemma, right_period, suffix_run, suffix_run_transfer, Side,
};
use crate::setops::WordSet;
use crate::word::{Alphabet, Letter, Word, F2};

const FAILURE_CAP: usize = 100;

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub instances: u64,
    pub skipped: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }

    fn pass(&mut self) {
        self.instances += 1;
    }

    fn skip(&mut self, n: u64) {
        self.skipped += n;
    }

    fn fail(&mut self, message: String) {
        self.instances += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(message);
        } else if self.failures.len() == FAILURE_CAP {
            self.failures.push("… further failures suppressed".into());
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} instances, {} skipped, {} failures",
            self.instances,
            self.skipped,
            self.failures.len()
        )
    }
}

/// Nonempty positive words of length `1..=max_len` in canonical order.
fn positive_pool(alphabet: Alphabet, max_len: usize) -> Vec<Word> {
    enumerate_words(alphabet, max_len)
        .filter(|w| !w.is_empty() && w.letters().iter().all(|l| !l.is_inverse()))
        .collect()
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every subset of `pool` with `1..=max_size` elements.
fn subsets(alphabet: Alphabet, pool: &[Word], max_size: usize) -> Vec<WordSet> {
    let mut out = Vec::new();
    for size in 1..=max_size.min(pool.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let words: Vec<Word> = idx.iter().map(|&i| pool[i].clone()).collect();
            out.push(WordSet::from_sorted_unchecked(alphabet, words));
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
    }
    out
}

fn shortest(s: &WordSet) -> usize {
    s.iter().map(Word::len).min().unwrap_or(0)
}

fn longest(s: &WordSet) -> usize {
    s.iter().map(Word::len).max().unwrap_or(0)
}

/// A random positive or mixed-sign set whose size is clamped to the number
/// of candidate words, so generation always succeeds.
fn clamped_random_set(
    alphabet: Alphabet,
    seed: u64,
    set_size: usize,
    max_length: usize,
    positive_only: bool,
) -> WordSet {
    let available = count_words(alphabet, max_length, positive_only) - 1;
    let set_size = set_size.min(available.min(1 << 20) as usize).max(1);
    random_set(&GeneratorConfig { alphabet, seed, set_size, max_length, positive_only })
        .expect("size clamped to the available range")
}

/// A random positive primitive word of length `1..=max_len` (primitivity by
/// rejection; positive words are automatically cyclically reduced).
fn random_primitive(rng: &mut SplitMix64, alphabet: Alphabet, max_len: usize) -> Word {
    loop {
        let z = random_word(rng, alphabet, max_len, true);
        if z.is_primitive() {
            return z;
        }
    }
}

// ---------------------------------------------------------------------------
// Periodicity groundwork (exhaustive and random)

/// Sweeps all reduced words of length ≤ `max_len` and checks that
/// (a) words sharing both period roots share their tails — per word the left
/// tail equals the right tail, and across words the pair of roots determines
/// it — and (b) every self-overlap of shift `≤ |v|/2` realises the overlap
/// lemma with `u₂` ending in the period.
pub fn lemma0_exhaustive(alphabet: Alphabet, max_len: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let mut tails: BTreeMap<(Word, Word), Word> = BTreeMap::new();
    for v in enumerate_words(alphabet, max_len) {
        match left_period(&v) {
            None => report.skip(1),
            Some(l) => {
                let r = right_period(&v).expect("left and right periods coexist");
                if l.tail != r.tail {
                    report.fail(format!(
                        "word {v}: left tail {} differs from right tail {}",
                        l.tail, r.tail
                    ));
                } else {
                    match tails.entry((l.period.clone(), r.period.clone())) {
                        Entry::Vacant(e) => {
                            e.insert(l.tail.clone());
                            report.pass();
                        }
                        Entry::Occupied(e) if *e.get() == l.tail => report.pass(),
                        Entry::Occupied(e) => report.fail(format!(
                            "periods ({}, {}) carry tails {} and {}",
                            l.period,
                            r.period,
                            e.get(),
                            l.tail
                        )),
                    }
                }
            }
        }
        let n = v.len();
        for d in 1..=n / 2 {
            if v.letters()[d..] != v.letters()[..n - d] {
                continue;
            }
            let u2 = Word::from_reduced(&v.letters()[..d]);
            match overlap_lemma(&Word::identity(), &u2, &v) {
                Ok(dec) if u2.ends_with(&dec.period) && dec.reconstruct() == v => report.pass(),
                Ok(dec) => report.fail(format!(
                    "overlap of {v} at shift {d} gave an inconsistent period {}",
                    dec.period
                )),
                Err(e) => report.fail(format!("overlap of {v} at shift {d}: {e}")),
            }
        }
    }
    report
}

/// Random periodic words: builds `z^s t` from a random primitive `z` and
/// checks the tail agreement, plus the contrapositive — distinct tails over
/// the same left root force distinct right roots.
pub fn lemma0_random(alphabet: Alphabet, count: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::default();
    for i in 0..count {
        let mut rng = SplitMix64::new(seed.wrapping_add(i));
        let z = random_primitive(&mut rng, alphabet, 4);
        let s = 2 + rng.next_below(3) as u32;
        let t_len = rng.next_below(z.len() as u64) as usize;
        let t = Word::from_reduced(&z.letters()[..t_len]);
        let v = z.pow(s).concat(&t);

        let l = left_period(&v).expect("built periodic");
        let r = right_period(&v).expect("built periodic");
        if l.period != z || l.tail != t || r.tail != t {
            report.fail(format!("decomposition of {v} lost its construction ({z}, {s}, {t})"));
            continue;
        }
        // same left root, different tail length ⇒ different right root
        let t2_len = (t_len + 1) % z.len();
        if t2_len != t_len {
            let t2 = Word::from_reduced(&z.letters()[..t2_len]);
            let v2 = z.pow(s).concat(&t2);
            let r2 = right_period(&v2).expect("built periodic");
            if r2.period == r.period {
                report.fail(format!(
                    "{v} and {v2} share the right root {} despite distinct tails",
                    r.period
                ));
                continue;
            }
        }
        match overlap_lemma(&Word::identity(), &z, &v) {
            Ok(dec) if z.ends_with(&dec.period) => report.pass(),
            Ok(dec) => report.fail(format!("overlap of {v}: period {} not a suffix of {z}", dec.period)),
            Err(e) => report.fail(format!("overlap of {v} at shift |z|: {e}")),
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Lemma 2: the size/periodicity dichotomy

/// Exhaustive dichotomy sweep over positive-word triples, both side
/// variants. Triples that fail the length precondition are skipped, not run.
pub fn lemma2_exhaustive(alphabet: Alphabet, max_len: usize, max_size: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let pool = positive_pool(alphabet, max_len);
    let subs = subsets(alphabet, &pool, max_size);
    let lens: Vec<(usize, usize)> = subs.iter().map(|s| (shortest(s), longest(s))).collect();
    let total = (subs.len() as u64).pow(3);
    for side in [Side::Left, Side::Right] {
        let mut ran = 0u64;
        for (v, &(v_min, _)) in subs.iter().zip(&lens) {
            for (outer, &(_, outer_max)) in subs.iter().zip(&lens) {
                if outer_max > v_min {
                    continue;
                }
                for free in &subs {
                    let (u, w) = match side {
                        Side::Left => (outer, free),
                        Side::Right => (free, outer),
                    };
                    ran += 1;
                    match lemma2_dichotomy(u, v, w, side) {
                        Ok(_) => report.pass(),
                        Err(e) => report.fail(format!(
                            "dichotomy U={u} V={v} W={w} side={side}: {e}"
                        )),
                    }
                }
            }
        }
        report.skip(total - ran);
    }
    report
}

/// Random dichotomy instances built to satisfy the preconditions: positive
/// words, with the sandwiching side capped at the shortest `v`.
pub fn lemma2_random(
    alphabet: Alphabet,
    count: u64,
    seed: u64,
    max_size: usize,
    max_len: usize,
) -> CheckReport {
    let mut report = CheckReport::default();
    for i in 0..count {
        let mut rng = SplitMix64::new(seed.wrapping_add(i));
        let side = if rng.next_below(2) == 0 { Side::Left } else { Side::Right };
        let size = |rng: &mut SplitMix64| 1 + rng.next_below(max_size as u64) as usize;
        let v = clamped_random_set(alphabet, rng.next_u64(), size(&mut rng), max_len, true);
        let bound = shortest(&v);
        let constrained =
            clamped_random_set(alphabet, rng.next_u64(), size(&mut rng), bound, true);
        let loose = clamped_random_set(alphabet, rng.next_u64(), size(&mut rng), max_len, true);
        let (u, w) = match side {
            Side::Left => (&constrained, &loose),
            Side::Right => (&loose, &constrained),
        };
        match lemma2_dichotomy(u, &v, w, side) {
            Ok(_) => report.pass(),
            Err(e) => report.fail(format!("dichotomy U={u} V={v} W={w} side={side}: {e}")),
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Lemmas 3 and 4: representation multiplicities

/// Pools for the multiplicity sweeps: `U`/`W` may contain the identity,
/// the middle word is a nonempty positive word.
fn multiplicity_pools(alphabet: Alphabet, max_len: usize) -> (Vec<Word>, Vec<Word>) {
    let positives = positive_pool(alphabet, max_len);
    let mut uw = vec![Word::identity()];
    uw.extend(positives.iter().cloned());
    (uw, positives)
}

/// Exhaustive witness sweep: on every triple with `|v| ≥ max|u|`, a
/// multiplicity ≥ 3 must yield a valid `(period, witness)` pair and a
/// multiplicity ≤ 2 must yield none.
pub fn lemma3_exhaustive(alphabet: Alphabet, max_len: usize, max_size: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let (uw_pool, v_pool) = multiplicity_pools(alphabet, max_len);
    let subs = subsets(alphabet, &uw_pool, max_size);
    for v in &v_pool {
        for u_set in &subs {
            if longest(u_set) > v.len() {
                report.skip(subs.len() as u64);
                continue;
            }
            for w_set in &subs {
                validate_lemma3_instance(&mut report, u_set, v, w_set);
            }
        }
    }
    report
}

fn validate_lemma3_instance(
    report: &mut CheckReport,
    u_set: &WordSet,
    v: &Word,
    w_set: &WordSet,
) {
    let mult = representation_multiplicity(u_set, v, w_set);
    match lemma3_witness(u_set, v, w_set) {
        Ok(None) => {
            if mult.max_multiplicity <= 2 {
                report.pass();
            } else {
                report.fail(format!(
                    "U={u_set} v={v} W={w_set}: multiplicity {} but no witness reported",
                    mult.max_multiplicity
                ));
            }
        }
        Ok(Some((period, witness))) => {
            let valid = mult.max_multiplicity >= 3
                && left_period(v).is_some_and(|dec| dec.period == period)
                && u_set.contains(&witness)
                && witness.ends_with(&period);
            if valid {
                report.pass();
            } else {
                report.fail(format!(
                    "U={u_set} v={v} W={w_set}: invalid witness ({period}, {witness})"
                ));
            }
        }
        Err(e) => report.fail(format!("U={u_set} v={v} W={w_set}: {e}")),
    }
}

/// Random witness campaign. Every other instance is engineered to carry a
/// triple representation (`U = u₀·{1,z,z²}`, `v = z^s`, `W = {1,z,z²}·w₀`),
/// the rest are plain random draws; both must satisfy the lemma.
pub fn lemma3_random(alphabet: Alphabet, count: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::default();
    for i in 0..count {
        let mut rng = SplitMix64::new(seed.wrapping_add(i));
        if i % 2 == 0 {
            let z = random_primitive(&mut rng, alphabet, 3);
            let extra = rng.next_below(2) as u32;
            let s = 2 + extra + rng.next_below(2) as u32;
            let budget = (s.saturating_sub(2 + extra)) as usize * z.len();
            let u0 = if budget == 0 {
                Word::identity()
            } else {
                random_word(&mut rng, alphabet, budget, true)
            };
            let w0 = random_word(&mut rng, alphabet, 4, true);
            let v = z.pow(s);
            let u_set = WordSet::from_words(
                alphabet,
                (0..3).map(|j| u0.concat(&z.pow(j))),
            )
            .expect("positive words");
            let w_set = WordSet::from_words(
                alphabet,
                (0..3).map(|j| z.pow(j).concat(&w0)),
            )
            .expect("positive words");
            match lemma3_witness(&u_set, &v, &w_set) {
                Ok(Some((period, witness)))
                    if period == z && witness.ends_with(&z) && u_set.contains(&witness) =>
                {
                    report.pass()
                }
                Ok(found) => report.fail(format!(
                    "engineered U={u_set} v={v} W={w_set}: expected a z-witness, got {found:?}"
                )),
                Err(e) => report.fail(format!("engineered U={u_set} v={v} W={w_set}: {e}")),
            }
        } else {
            let v = random_word(&mut rng, alphabet, 6, true);
            let u_set =
                clamped_random_set(alphabet, rng.next_u64(), 3, v.len(), true);
            let w_set = clamped_random_set(alphabet, rng.next_u64(), 3, 5, true);
            validate_lemma3_instance(&mut report, &u_set, &v, &w_set);
        }
    }
    report
}

/// Exhaustive 1/2-bound sweep: under the full Lemma 4 preconditions the
/// multiplicity never exceeds 2 and `2·|UvW| ≥ |U|·|W|`.
pub fn lemma4_exhaustive(alphabet: Alphabet, max_len: usize, max_size: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let (uw_pool, v_pool) = multiplicity_pools(alphabet, max_len);
    let subs = subsets(alphabet, &uw_pool, max_size);
    for v in &v_pool {
        let root = left_period(v).map(|dec| dec.period);
        for u_set in &subs {
            let excluded = longest(u_set) > v.len()
                || root
                    .as_ref()
                    .is_some_and(|z| u_set.iter().any(|u| u.ends_with(z)));
            if excluded {
                report.skip(subs.len() as u64);
                continue;
            }
            for w_set in &subs {
                validate_lemma4_instance(&mut report, u_set, v, w_set);
            }
        }
    }
    report
}

fn validate_lemma4_instance(
    report: &mut CheckReport,
    u_set: &WordSet,
    v: &Word,
    w_set: &WordSet,
) {
    let mult = representation_multiplicity(u_set, v, w_set);
    if mult.max_multiplicity > 2 {
        report.fail(format!(
            "U={u_set} v={v} W={w_set}: multiplicity {} under Lemma 4 preconditions",
            mult.max_multiplicity
        ));
        return;
    }
    match lemma4_bound(u_set, v, w_set) {
        Ok(true) => report.pass(),
        Ok(false) => report.fail(format!(
            "U={u_set} v={v} W={w_set}: 2·|UvW| < |U|·|W|"
        )),
        Err(e) => report.fail(format!("U={u_set} v={v} W={w_set}: {e}")),
    }
}

/// Random 1/2-bound campaign; draws are filtered down to the preconditions.
pub fn lemma4_random(alphabet: Alphabet, count: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::default();
    for i in 0..count {
        let mut rng = SplitMix64::new(seed.wrapping_add(i));
        let v = random_word(&mut rng, alphabet, 8, true);
        let root = left_period(&v).map(|dec| dec.period);
        let candidates = clamped_random_set(alphabet, rng.next_u64(), 4, v.len(), true);
        let filtered: Vec<Word> = candidates
            .iter()
            .filter(|u| !root.as_ref().is_some_and(|z| u.ends_with(z)))
            .cloned()
            .collect();
        if filtered.is_empty() {
            report.skip(1);
            continue;
        }
        let u_set = WordSet::from_words(alphabet, filtered).expect("filtered subset");
        let w_set = clamped_random_set(alphabet, rng.next_u64(), 4, 6, true);
        validate_lemma4_instance(&mut report, &u_set, &v, &w_set);
    }
    report
}

// ---------------------------------------------------------------------------
// Lemma 5: suffix-run transfer

/// Exhaustive transfer sweep: for every pair of primitive cyclically reduced
/// periods `|α| < |β| ≤ max_period_len` and every host `g·β²` up to
/// `max_host_len` letters, the maximal trailing α-run is the same across
/// hosts, and the transfer call confirms it.
pub fn lemma5_exhaustive(
    alphabet: Alphabet,
    max_period_len: usize,
    max_host_len: usize,
) -> CheckReport {
    let mut report = CheckReport::default();
    let periods: Vec<Word> = enumerate_words(alphabet, max_period_len)
        .filter(|w| !w.is_empty() && w.is_cyclically_reduced() && w.is_primitive())
        .collect();
    for beta in &periods {
        let beta2 = beta.pow(2);
        if beta2.len() > max_host_len {
            continue;
        }
        for alpha in periods.iter().filter(|a| a.len() < beta.len()) {
            if suffix_run(&beta2, alpha) == 0 {
                // no host ending with β² carries an α-run at all
                report.skip(1);
                continue;
            }
            let mut bounds: Option<(u32, Word, u32, Word)> = None;
            let mut hosts = 0u64;
            for g in enumerate_words(alphabet, max_host_len - beta2.len()) {
                let host = g.concat(&beta2);
                if host.len() != g.len() + beta2.len() {
                    continue;
                }
                hosts += 1;
                let run = suffix_run(&host, alpha);
                bounds = Some(match bounds {
                    None => (run, host.clone(), run, host),
                    Some((lo, lo_h, hi, hi_h)) => {
                        let (lo, lo_h) = if run < lo { (run, host.clone()) } else { (lo, lo_h) };
                        let (hi, hi_h) = if run > hi { (run, host) } else { (hi, hi_h) };
                        (lo, lo_h, hi, hi_h)
                    }
                });
            }
            let Some((lo, lo_host, hi, hi_host)) = bounds else { continue };
            if lo != hi {
                report.fail(format!(
                    "α={alpha} β={beta}: runs differ, {lo} on {lo_host} vs {hi} on {hi_host}"
                ));
                continue;
            }
            match suffix_run_transfer(alpha, beta, &hi_host, &lo_host) {
                Ok(true) => report.instances += hosts,
                Ok(false) => report.fail(format!(
                    "α={alpha} β={beta}: transfer from {hi_host} to {lo_host} failed"
                )),
                Err(e) => report.fail(format!("α={alpha} β={beta}: {e}")),
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Lemma 6: stripping a shared period run

/// Exhaustive sweep over positive periodic `v` and `U` whose members all end
/// with exactly `q` copies of the period.
pub fn lemma6_exhaustive(alphabet: Alphabet, max_len: usize, max_size: usize) -> CheckReport {
    let mut report = CheckReport::default();
    let (uw_pool, v_pool) = multiplicity_pools(alphabet, max_len);
    let w_subs = subsets(alphabet, &uw_pool, max_size);
    for v in &v_pool {
        let Some(dec) = left_period(v) else { continue };
        for q in 1..=(v.len() / dec.period.len()) as u32 {
            let candidates: Vec<Word> = uw_pool
                .iter()
                .filter(|u| u.len() <= v.len() && suffix_run(u, &dec.period) == q)
                .cloned()
                .collect();
            if candidates.is_empty() {
                continue;
            }
            for u_set in subsets(alphabet, &candidates, max_size) {
                for w_set in &w_subs {
                    match lemma6_check(&u_set, v, w_set, q) {
                        Ok(true) => report.pass(),
                        Ok(false) => report.fail(format!(
                            "U={u_set} v={v} W={w_set} q={q}: bound failed"
                        )),
                        Err(e) => {
                            report.fail(format!("U={u_set} v={v} W={w_set} q={q}: {e}"))
                        }
                    }
                }
            }
        }
    }
    report
}

/// Random campaign: periodic `v = z^s·t` and `U = {gᵢ·z^q}` with `gᵢ` not
/// ending in `z`, so each member carries the run exactly `q` times.
pub fn lemma6_random(alphabet: Alphabet, count: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::default();
    for i in 0..count {
        let mut rng = SplitMix64::new(seed.wrapping_add(i));
        let z = random_primitive(&mut rng, alphabet, 3);
        let s = 2 + rng.next_below(3) as u32;
        let t_len = rng.next_below(z.len() as u64) as usize;
        let t = Word::from_reduced(&z.letters()[..t_len]);
        let v = z.pow(s).concat(&t);
        let q = 1 + rng.next_below(s as u64) as u32;
        let budget = v.len() - q as usize * z.len();

        let mut members = BTreeSet::new();
        for _ in 0..1 + rng.next_below(3) {
            let mut g = Word::identity();
            if budget > 0 {
                for _ in 0..5 {
                    let candidate = random_word(&mut rng, alphabet, budget, true);
                    if !candidate.ends_with(&z) {
                        g = candidate;
                        break;
                    }
                }
            }
            members.insert(g.concat(&z.pow(q)));
        }
        let u_set = WordSet::from_words(alphabet, members).expect("positive words");
        let w_set = clamped_random_set(alphabet, rng.next_u64(), 3, 5, true);
        match lemma6_check(&u_set, &v, &w_set, q) {
            Ok(true) => report.pass(),
            Ok(false) => {
                report.fail(format!("U={u_set} v={v} W={w_set} q={q}: bound failed"))
            }
            Err(e) => report.fail(format!("U={u_set} v={v} W={w_set} q={q}: {e}")),
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Extraction and theorem corpora

/// The standard extraction corpus: 1000 seeded random rank-2 sets with sizes
/// up to 50 and lengths up to 12, the full ball of radius 4, concentrated
/// conjugate families, and degenerate singletons.
pub fn extraction_corpus(seed: u64) -> Vec<WordSet> {
    let mut sets = Vec::new();
    for i in 0..1000u64 {
        let max_length = 2 + (i as usize % 11);
        let requested = 1 + ((i as usize * 7) % 50);
        let positive_only = i % 3 == 0;
        let available = count_words(F2, max_length, positive_only) - 1;
        let set_size = requested.min(available.min(1 << 20) as usize);
        sets.push(
            random_set(&GeneratorConfig {
                alphabet: F2,
                seed: seed.wrapping_add(i),
                set_size,
                max_length,
                positive_only,
            })
            .expect("size clamped to the available range"),
        );
    }
    sets.push(WordSet::from_words(F2, enumerate_words(F2, 4)).expect("ball of radius 4"));
    let x = Word::letter(Letter::new(0, false));
    let y = Word::letter(Letter::new(1, false));
    for j in 1..=3u32 {
        let family = (1..=20u32).map(|i| y.pow(i).conjugated_by(&x.pow(j)));
        sets.push(WordSet::from_words(F2, family).expect("conjugate family"));
    }
    for degenerate in [vec![Word::identity()], vec![x.clone()], vec![x.conjugated_by(&y)]] {
        sets.push(WordSet::from_words(F2, degenerate).expect("degenerate set"));
    }
    sets
}

/// Runs the extraction and its independent verifier over a corpus; the 1/62
/// size bounds are re-checked exactly.
pub fn extraction_check(sets: &[WordSet]) -> CheckReport {
    let mut report = CheckReport::default();
    for a in sets {
        match lemma1_extract(a) {
            Ok(r) => {
                let denom = size_bound_denominator(a.alphabet());
                let sized =
                    denom * r.a0.len() >= a.len() && denom * r.b0.len() >= a.len();
                if sized && verify_extraction(a, &r) {
                    report.pass();
                } else {
                    report.fail(format!("extraction of {a} fails verification"));
                }
            }
            Err(e) => report.fail(format!("extraction of {a}: {e}")),
        }
    }
    report
}

/// Evaluates the theorem bound over a corpus, skipping sets without a
/// noncommuting pair and sets larger than `max_set_size` (used to keep
/// high powers tractable). Returns the empirical minimum ratio.
pub fn theorem_sweep(
    sets: &[WordSet],
    n: u32,
    max_set_size: Option<usize>,
    cap: usize,
) -> (CheckReport, Option<BigRational>) {
    let mut report = CheckReport::default();
    let mut min_ratio: Option<BigRational> = None;
    for a in sets {
        if max_set_size.is_some_and(|m| a.len() > m) {
            report.skip(1);
            continue;
        }
        if a.find_noncommuting_pair().is_none() {
            report.skip(1);
            continue;
        }
        match theorem_check(a, n, cap) {
            Ok(rep) => {
                if rep.bound_ok {
                    report.pass();
                } else {
                    report.fail(format!(
                        "theorem bound failed on {a} at n={n}: ratio {}",
                        rep.ratio
                    ));
                }
                min_ratio = Some(match min_ratio {
                    None => rep.ratio,
                    Some(current) => current.min(rep.ratio),
                });
            }
            Err(e) => report.fail(format!("theorem check on {a} at n={n}: {e}")),
        }
    }
    (report, min_ratio)
}

/// Random theorem campaign over fresh seeded sets.
pub fn theorem_random(
    alphabet: Alphabet,
    count: u64,
    seed: u64,
    n: u32,
    cap: usize,
) -> (CheckReport, Option<BigRational>) {
    let sets: Vec<WordSet> = (0..count)
        .map(|i| {
            clamped_random_set(
                alphabet,
                seed.wrapping_add(i),
                2 + (i % 9) as usize,
                2 + (i % 5) as usize,
                i % 2 == 0,
            )
        })
        .collect();
    theorem_sweep(&sets, n, None, cap)
}
