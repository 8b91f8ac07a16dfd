//! Acceptance battery. Each test prints exactly one PASS/FAIL line; a
//! criterion with a stated runtime budget also asserts it. Tests share a
//! lock so the measured times are not distorted by parallel siblings.

use std::collections::BTreeSet;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use wordgrowth::bounds::derived_constant;
use wordgrowth::checks::{
    extraction_check, extraction_corpus, lemma0_exhaustive, lemma2_exhaustive, lemma2_random,
    lemma3_exhaustive, lemma3_random, lemma4_exhaustive, lemma4_random, lemma5_exhaustive,
    lemma6_exhaustive, lemma6_random, theorem_sweep, CheckReport,
};
use wordgrowth::generate::{count_words, extremal_family, random_set, GeneratorConfig};
use wordgrowth::setops::{WordSet, DEFAULT_SIZE_CAP};
use wordgrowth::word::F2;

static SEQUENTIAL: Mutex<()> = Mutex::new(());

fn criterion(
    name: &str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Result<String, String>,
) {
    let guard = SEQUENTIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    drop(guard);
    match outcome {
        Ok(detail) => {
            println!("PASS {name} ({elapsed:.2?}): {detail}");
            if let Some(limit) = budget {
                assert!(
                    elapsed <= limit,
                    "{name} passed but took {elapsed:.2?}, over the {limit:?} budget"
                );
            }
        }
        Err(why) => {
            println!("FAIL {name} ({elapsed:.2?}): {why}");
            panic!("{name}: {why}");
        }
    }
}

fn naive_product(a: &WordSet, b: &WordSet) -> WordSet {
    let mut out = BTreeSet::new();
    for u in a {
        for v in b {
            out.insert(u.concat(v));
        }
    }
    WordSet::from_words(a.alphabet(), out).expect("same alphabet")
}

fn report_detail(report: &CheckReport) -> Result<String, String> {
    if report.passed() {
        Ok(report.to_string())
    } else {
        Err(format!("{report}; first: {}", report.failures[0]))
    }
}

#[test]
fn extremal_cube_sizes_match_the_closed_form() {
    criterion("criterion 1: |A_k^3| = k^2 + 10k - 3", Some(Duration::from_secs(5)), || {
        for k in 1..=30u32 {
            let a = extremal_family(k).map_err(|e| e.to_string())?;
            let cube = a.power(3, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
            let expected = (k * k + 10 * k - 3) as usize;
            if cube.len() != expected {
                return Err(format!("k = {k}: |A^3| = {}, expected {expected}", cube.len()));
            }
            if k <= 6 {
                let brute = naive_product(&naive_product(&a, &a), &a);
                if brute != cube {
                    return Err(format!("k = {k}: power(3) disagrees with the triple loop"));
                }
            }
        }
        Ok("k = 1..=30, cross-checked naively for k ≤ 6".into())
    });
}

#[test]
fn normalized_growth_ratios_do_not_inflate_with_k() {
    criterion("criterion 2: ratio at k=15 within 10% of k=5", Some(Duration::from_secs(60)), || {
        let mut sizes = vec![Vec::new(); 7];
        for k in 1..=15u32 {
            let a = extremal_family(k).map_err(|e| e.to_string())?;
            for n in 1..=6u32 {
                let size = a.power(n, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?.len();
                sizes[n as usize].push(size as u128);
            }
        }
        for n in 1..=6u32 {
            let e = n.div_ceil(2);
            let s5 = sizes[n as usize][4];
            let s15 = sizes[n as usize][14];
            // s15/15^e ≤ 1.1 · s5/5^e, cleared of denominators
            let lhs = 10 * s15 * 5u128.pow(e);
            let rhs = 11 * s5 * 15u128.pow(e);
            if lhs > rhs {
                return Err(format!(
                    "n = {n}: |A_15^{n}|/15^{e} = {s15}/15^{e} exceeds |A_5^{n}|/5^{e} = {s5}/5^{e} by more than 10%"
                ));
            }
        }
        Ok("n = 1..=6 over k = 1..=15".into())
    });
}

#[test]
fn extraction_verifies_over_the_random_corpus() {
    criterion("criterion 3: extraction verified on the corpus", Some(Duration::from_secs(30)), || {
        let corpus = extraction_corpus(2026);
        let report = extraction_check(&corpus);
        if report.instances != corpus.len() as u64 {
            return Err(format!("ran {} of {} sets", report.instances, corpus.len()));
        }
        report_detail(&report).map(|d| format!("{d} over {} sets (sizes ≤ 50, lengths ≤ 12, plus the radius-4 ball)", corpus.len()))
    });
}

#[test]
fn dichotomy_holds_exhaustively_and_at_random() {
    criterion("criterion 4: dichotomy sweeps", Some(Duration::from_secs(120)), || {
        let mut report = lemma2_exhaustive(F2, 2, 3);
        report.merge(lemma2_exhaustive(F2, 3, 2));
        report.merge(lemma2_random(F2, 10_000, 4, 3, 6));
        report_detail(&report)
    });
}

#[test]
fn multiplicity_bound_and_witness_dichotomy() {
    criterion("criterion 5: multiplicity ≤ 2 or a periodic witness", None, || {
        let mut report = lemma3_exhaustive(F2, 2, 2);
        report.merge(lemma3_exhaustive(F2, 3, 2));
        report.merge(lemma4_exhaustive(F2, 2, 2));
        report.merge(lemma4_exhaustive(F2, 3, 2));
        report.merge(lemma6_exhaustive(F2, 3, 2));
        report.merge(lemma3_random(F2, 2_000, 8));
        report.merge(lemma4_random(F2, 2_000, 9));
        report.merge(lemma6_random(F2, 2_000, 10));
        report_detail(&report)
    });
}

#[test]
fn periodic_tails_and_overlaps_exhaustively() {
    criterion("criterion 6: period tails and overlaps to length 12", Some(Duration::from_secs(60)), || {
        report_detail(&lemma0_exhaustive(F2, 12))
    });
}

#[test]
fn suffix_runs_transfer_between_hosts() {
    criterion("criterion 7: suffix runs transfer (periods to 4, hosts to 14)", None, || {
        report_detail(&lemma5_exhaustive(F2, 4, 14))
    });
}

#[test]
fn cube_growth_beats_the_derived_constant() {
    criterion("criterion 8: theorem bound over the corpus", None, || {
        let corpus = extraction_corpus(2026);
        let (r3, min3) = theorem_sweep(&corpus, 3, None, DEFAULT_SIZE_CAP);
        let d3 = report_detail(&r3)?;
        let min3 = min3.ok_or("no noncommuting sets at n = 3")?;
        if min3 <= derived_constant(3) {
            return Err(format!("minimum n=3 ratio {min3} does not exceed {}", derived_constant(3)));
        }
        let (r5, min5) = theorem_sweep(&corpus, 5, Some(12), DEFAULT_SIZE_CAP);
        let d5 = report_detail(&r5)?;
        let min5 = min5.ok_or("no noncommuting sets at n = 5")?;
        if min5 <= derived_constant(5) {
            return Err(format!("minimum n=5 ratio {min5} does not exceed {}", derived_constant(5)));
        }
        Ok(format!(
            "n=3: {d3}, min ratio {min3} > 1/23064; n=5 (sizes ≤ 12): {d5}, min ratio {min5} > 1/8579808"
        ))
    });
}

#[test]
fn powers_match_the_naive_fold() {
    criterion("criterion 9: power equals the naive fold", None, || {
        for i in 0..50u64 {
            let max_length = 1 + (i as usize % 5);
            let positive_only = i % 2 == 0;
            let available = count_words(F2, max_length, positive_only) - 1;
            let set_size = (1 + (i as usize % 8)).min(available as usize);
            let a = random_set(&GeneratorConfig {
                alphabet: F2,
                seed: 77 + i,
                set_size,
                max_length,
                positive_only,
            })
            .map_err(|e| e.to_string())?;
            let n = 1 + (i % 4) as u32;
            let power = a.power(n, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
            let mut fold = a.clone();
            for _ in 1..n {
                fold = naive_product(&fold, &a);
            }
            if power != fold {
                return Err(format!("set {i} (|A| = {}), n = {n}: power differs from the fold", a.len()));
            }
        }
        Ok("50 seeded sets, n ≤ 4".into())
    });
}
