//! File formats: word lists (one word per line, `#` comments), growth
//! tables as CSV, extraction traces as JSON.

use std::fs;
use std::path::Path;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::extraction::{ExtractionResult, Step};
use crate::setops::{GrowthReport, WordSet};
use crate::word::{Alphabet, ParseError, Word};

#[derive(Debug, Error)]
pub enum WordListError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parses a word list: one word per line, `#` starts a comment line, blank
/// lines are ignored. Duplicates collapse into the set.
pub fn parse_word_set(text: &str, alphabet: Alphabet) -> Result<WordSet, WordListError> {
    let mut words = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word = Word::parse(line, alphabet)
            .map_err(|source| WordListError::Parse { line: index + 1, source })?;
        words.push(word);
    }
    Ok(WordSet::from_words(alphabet, words).expect("parsed words lie in the alphabet"))
}

pub fn read_word_set(path: &Path, alphabet: Alphabet) -> Result<WordSet, WordListError> {
    parse_word_set(&fs::read_to_string(path)?, alphabet)
}

/// One word per line in canonical order; the inverse of `parse_word_set`.
pub fn format_word_set(set: &WordSet) -> String {
    let mut out = String::new();
    for word in set {
        out.push_str(&word.to_string());
        out.push('\n');
    }
    out
}

pub fn write_word_set(path: &Path, set: &WordSet) -> std::io::Result<()> {
    fs::write(path, format_word_set(set))
}

fn ratio_decimal(ratio: &num_rational::BigRational) -> f64 {
    ratio.to_f64().unwrap_or_else(|| {
        let num = ratio.numer().to_f64().unwrap_or(f64::INFINITY);
        let den = ratio.denom().to_f64().unwrap_or(f64::INFINITY);
        num / den
    })
}

/// Renders a growth table as CSV with header `n,size,ratio_num,ratio_den,ratio`.
pub fn growth_csv(report: &GrowthReport) -> String {
    let mut out = String::from("n,size,ratio_num,ratio_den,ratio\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6}\n",
            row.n,
            row.size,
            row.ratio.numer(),
            row.ratio.denom(),
            ratio_decimal(&row.ratio)
        ));
    }
    out
}

fn step_value(step: &Step) -> Value {
    match step {
        Step::Conjugate(letter) => json!({
            "kind": "conjugate",
            "letter": letter.to_string(),
        }),
        Step::Case1(key) => json!({
            "kind": "case1",
            "class": key.to_string(),
        }),
        Step::Case2 { short, long } => json!({
            "kind": "case2",
            "short": short.to_string(),
            "long": long.to_string(),
        }),
    }
}

/// Serialises an extraction trace as JSON:
/// `{"steps": […], "u": "X", "a0": […], "b0": […]}`.
pub fn extraction_json(result: &ExtractionResult) -> String {
    let words = |set: &WordSet| -> Vec<String> { set.iter().map(Word::to_string).collect() };
    let value = json!({
        "steps": result.trace.iter().map(step_value).collect::<Vec<_>>(),
        "u": result.conjugator.to_string(),
        "a0": words(&result.a0),
        "b0": words(&result.b0),
    });
    let mut out = serde_json::to_string_pretty(&value).expect("trace serialises");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extraction::lemma1_extract;
    use crate::setops::DEFAULT_SIZE_CAP;
    use crate::word::F2;

    fn set(words: &[&str]) -> WordSet {
        WordSet::from_words(F2, words.iter().map(|t| Word::parse(t, F2).unwrap())).unwrap()
    }

    #[test]
    fn parses_lists_with_comments_and_blanks() {
        let text = "# a comment\n\n xY \nyy\n1\nxY\n";
        let parsed = parse_word_set(text, F2).unwrap();
        assert_eq!(parsed, set(&["xY", "yy", "1"]));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_word_set("x\n\nxq\n", F2).unwrap_err();
        match err {
            WordListError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other}"),
        }
        assert!(parse_word_set("z", F2).is_err()); // outside rank 2
        assert!(parse_word_set("x1", F2).is_err()); // '1' only stands alone
    }

    #[test]
    fn format_round_trips_canonically() {
        let original = set(&["yy", "x", "1", "xYx"]);
        let text = format_word_set(&original);
        assert_eq!(text, "1\nx\nyy\nxYx\n");
        assert_eq!(parse_word_set(&text, F2).unwrap(), original);
        assert_eq!(format_word_set(&WordSet::new(F2)), "");
    }

    #[test]
    fn round_trip_over_the_enumeration() {
        for word in crate::generate::enumerate_words(F2, 4) {
            let text = word.to_string();
            assert_eq!(Word::parse(&text, F2).unwrap(), word);
        }
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("words.txt");
        let original = set(&["x", "Yx", "xyxy"]);
        write_word_set(&path, &original).unwrap();
        assert_eq!(read_word_set(&path, F2).unwrap(), original);

        let missing = dir.path().join("absent.txt");
        assert!(matches!(
            read_word_set(&missing, F2),
            Err(WordListError::Io(_))
        ));
    }

    #[test]
    fn growth_csv_golden() {
        let report = set(&["x", "y"]).growth_table(3, DEFAULT_SIZE_CAP);
        let csv = growth_csv(&report);
        let expected = "n,size,ratio_num,ratio_den,ratio\n\
                        1,2,1,1,1.000000\n\
                        2,4,2,1,2.000000\n\
                        3,8,2,1,2.000000\n";
        assert_eq!(csv, expected);
    }

    #[test]
    fn extraction_trace_json_schema() {
        let a = set(&["xyX", "xyyX", "xyyyX"]);
        let result = lemma1_extract(&a).unwrap();
        let parsed: Value = serde_json::from_str(&extraction_json(&result)).unwrap();
        assert_eq!(parsed["u"], "X");
        assert_eq!(parsed["a0"], json!(["y", "yy"]));
        assert_eq!(parsed["b0"], json!(["yy", "yyy"]));
        assert_eq!(parsed["steps"][0], json!({"kind": "conjugate", "letter": "X"}));
        assert_eq!(parsed["steps"][1], json!({"kind": "case1", "class": "y,y"}));
    }
}
