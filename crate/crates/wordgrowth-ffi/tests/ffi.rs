//! Exercises the C ABI from Rust: ownership transfer, status codes and the
//! error slot behave as the header documents.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use wordgrowth_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null(), "expected an owned string");
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    wg_string_free(p);
    s
}

unsafe fn parse_word(text: &str, rank: u32) -> *mut WgWord {
    let mut out = ptr::null_mut();
    assert_eq!(wg_word_parse(c(text).as_ptr(), rank, &mut out), WgStatus::Ok);
    assert!(!out.is_null());
    out
}

unsafe fn parse_set(text: &str, rank: u32) -> *mut WgWordSet {
    let mut out = ptr::null_mut();
    assert_eq!(wg_wordset_parse(c(text).as_ptr(), rank, &mut out), WgStatus::Ok);
    assert!(!out.is_null());
    out
}

#[test]
fn words_reduce_and_format() {
    unsafe {
        let w = parse_word("xYyX", 2);
        assert!(wg_word_is_identity(w));
        assert_eq!(wg_word_length(w), 0);
        assert_eq!(take_string(wg_word_format(w)), "1");
        wg_word_free(w);

        let w = parse_word("xyX", 2);
        assert_eq!(wg_word_length(w), 3);
        assert_eq!(take_string(wg_word_format(w)), "xyX");
        wg_word_free(w);
    }
}

#[test]
fn word_arithmetic_crosses_the_boundary() {
    unsafe {
        let a = parse_word("xy", 2);
        let b = parse_word("Yx", 2);
        let mut ab = ptr::null_mut();
        assert_eq!(wg_word_concat(a, b, &mut ab), WgStatus::Ok);
        assert_eq!(take_string(wg_word_format(ab)), "xx");

        let mut inv = ptr::null_mut();
        assert_eq!(wg_word_inverse(a, &mut inv), WgStatus::Ok);
        assert_eq!(take_string(wg_word_format(inv)), "YX");

        let mut conj = ptr::null_mut();
        assert_eq!(wg_word_conjugate(a, b, &mut conj), WgStatus::Ok);
        assert_eq!(take_string(wg_word_format(conj)), "YxxyXy");

        let mut commutes = true;
        assert_eq!(wg_word_commutes(a, b, &mut commutes), WgStatus::Ok);
        assert!(!commutes);
        assert_eq!(wg_word_commutes(a, a, &mut commutes), WgStatus::Ok);
        assert!(commutes);

        for p in [a, b, ab, inv, conj] {
            wg_word_free(p);
        }
    }
}

#[test]
fn periodic_decomposition_and_the_aperiodic_status() {
    unsafe {
        let w = parse_word("xyxyx", 2);
        let mut root = ptr::null_mut();
        let mut exponent = 0u32;
        let mut tail = ptr::null_mut();
        assert_eq!(wg_word_left_period(w, &mut root, &mut exponent, &mut tail), WgStatus::Ok);
        assert_eq!(take_string(wg_word_format(root)), "xy");
        assert_eq!(exponent, 2);
        assert_eq!(take_string(wg_word_format(tail)), "x");
        wg_word_free(root);
        wg_word_free(tail);
        wg_word_free(w);

        let w = parse_word("xy", 2);
        assert_eq!(
            wg_word_left_period(w, ptr::null_mut(), ptr::null_mut(), ptr::null_mut()),
            WgStatus::NotPeriodic
        );
        let message = take_string(wg_last_error_message());
        assert!(message.contains("periodic"), "{message}");
        wg_word_free(w);
    }
}

#[test]
fn set_products_powers_and_growth() {
    unsafe {
        let a = parse_set("x\ny\n", 2);
        assert_eq!(wg_wordset_len(a), 2);

        let mut square = ptr::null_mut();
        assert_eq!(wg_wordset_product(a, a, 0, &mut square), WgStatus::Ok);
        assert_eq!(wg_wordset_len(square), 4);
        assert_eq!(take_string(wg_wordset_format(square)), "xx\nxy\nyx\nyy\n");

        let x = parse_word("x", 2);
        let xy = parse_word("xy", 2);
        assert!(!wg_wordset_contains(square, x));
        assert!(wg_wordset_contains(square, xy));

        let mut cube = ptr::null_mut();
        assert_eq!(wg_wordset_power(a, 3, 0, &mut cube), WgStatus::Ok);
        assert_eq!(wg_wordset_len(cube), 8);

        let mut capped = ptr::null_mut();
        assert_eq!(wg_wordset_power(a, 3, 5, &mut capped), WgStatus::SizeCapExceeded);
        let message = take_string(wg_last_error_message());
        assert!(message.contains("cap"), "{message}");

        let mut csv = ptr::null_mut();
        assert_eq!(wg_wordset_growth_csv(a, 2, &mut csv), WgStatus::Ok);
        assert_eq!(
            take_string(csv),
            "n,size,ratio_num,ratio_den,ratio\n1,2,1,1,1.000000\n2,4,2,1,2.000000\n"
        );

        wg_word_free(x);
        wg_word_free(xy);
        wg_wordset_free(square);
        wg_wordset_free(cube);
        wg_wordset_free(a);
    }
}

#[test]
fn alphabets_must_match_across_operands() {
    unsafe {
        let a = parse_set("x\n", 2);
        let b = parse_set("z\n", 3);
        let mut out = ptr::null_mut();
        assert_eq!(wg_wordset_product(a, b, 0, &mut out), WgStatus::AlphabetMismatch);
        wg_wordset_free(a);
        wg_wordset_free(b);
    }
}

#[test]
fn extraction_trace_round_trips_as_json() {
    unsafe {
        let a = parse_set("xyX\nxyyX\nxyyyX\n", 2);
        let mut json = ptr::null_mut();
        assert_eq!(wg_lemma1_extract_json(a, &mut json), WgStatus::Ok);
        let text = take_string(json);
        assert!(text.contains("\"u\": \"X\""), "{text}");
        assert!(text.contains("\"conjugate\""), "{text}");
        wg_wordset_free(a);

        let empty = parse_set("", 2);
        assert_eq!(wg_lemma1_extract_json(empty, &mut json), WgStatus::Precondition);
        wg_wordset_free(empty);
    }
}

#[test]
fn errors_set_the_message_slot_and_null_is_rejected() {
    unsafe {
        let mut word = ptr::null_mut();
        assert_eq!(wg_word_parse(c("qq").as_ptr(), 2, &mut word), WgStatus::ParseError);
        let message = take_string(wg_last_error_message());
        assert!(message.contains('q'), "{message}");
        // the slot is cleared once read
        assert!(wg_last_error_message().is_null());

        assert_eq!(wg_word_parse(ptr::null(), 2, &mut word), WgStatus::NullArgument);
        assert_eq!(wg_word_parse(c("x").as_ptr(), 2, ptr::null_mut()), WgStatus::NullArgument);
        assert_eq!(wg_word_parse(c("x").as_ptr(), 0, &mut word), WgStatus::ParseError);
        assert_eq!(wg_word_parse(c("x").as_ptr(), 27, &mut word), WgStatus::ParseError);

        assert!(wg_word_format(ptr::null()).is_null());
        assert_eq!(wg_word_length(ptr::null()), 0);
        wg_word_free(ptr::null_mut());
        wg_wordset_free(ptr::null_mut());
        wg_string_free(ptr::null_mut());
    }
}
