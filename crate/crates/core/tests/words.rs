mod common;

use common::{rank, word};
use fcblob::words::*;
use fcblob::Error;
use proptest::prelude::*;

#[test]
fn text_round_trip() {
    let r = rank(3);
    let w = Word::parse(r, "1,0,1").unwrap();
    assert_eq!(w.to_string(), "1,0,1");
    assert!(Word::parse(r, "").unwrap().is_empty());
    assert!(matches!(Word::parse(r, "1,4"), Err(Error::LetterOutOfRange { .. })));
    assert!(matches!(Word::parse(r, "1,x"), Err(Error::Parse(_))));
}

#[test]
fn class_cap_is_an_error() {
    let w = word(12, &[0, 2, 4, 6, 8, 10, 12]);
    assert!(matches!(commutation_class(&w, 100), Err(Error::ClassTooLarge { cap: 100 })));
    assert_eq!(commutation_class(&w, 10_000).unwrap().len(), 5040);
}

#[test]
fn braid_words_are_not_contained_in_fc_words() {
    let w = word(3, &[0, 1, 2, 1]);
    assert!(!is_reduced_fc(&w));
    let fc = word(3, &[0, 1, 2, 3]);
    let braid = word(3, &[1, 2, 1]);
    assert_eq!(contains_pattern(&fc, &braid).unwrap(), common::contains(3, fc.letters(), braid.letters()));
    assert!(!contains_factor(&fc, &braid).unwrap());
}

#[test]
fn disconnected_patterns() {
    let w = word(4, &[0, 2, 1, 4]);
    assert!(contains_factor(&w, &word(4, &[0, 4])).unwrap() == common::contains(4, &[0, 2, 1, 4], &[0, 4]));
    assert!(contains_factor(&w, &word(4, &[0, 2])).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fc_predicate_matches_oracle(n in 1usize..=4, raw in prop::collection::vec(0u8..=4, 0..10)) {
        let letters: Vec<u8> = raw.into_iter().map(|x| x % (n as u8 + 1)).collect();
        let w = word(n, &letters);
        prop_assert_eq!(is_reduced_fc(&w), common::is_reduced_fc(n, &letters));
    }

    #[test]
    fn class_invariants((n, letters) in common::fc_word(4, 12)) {
        let w = word(n, &letters);
        let canon = canonical_word(&w).unwrap();
        prop_assert_eq!(canon.letters(), &common::canonical(&letters)[..]);
        for member in common::class(&letters).into_iter().take(40) {
            let u = word(n, &member);
            prop_assert!(is_reduced_fc(&u));
            prop_assert_eq!(&canonical_word(&u).unwrap(), &canon);
            prop_assert_eq!(affine_length(&u), affine_length(&w));
        }
        prop_assert!(contains_pattern(&w, &w).unwrap());
        prop_assert!(contains_factor(&w, &w).unwrap());
    }

    #[test]
    fn class_enumeration_matches_oracle((n, letters) in common::fc_word(4, 10)) {
        let w = word(n, &letters);
        let got: std::collections::HashSet<Vec<u8>> =
            commutation_class(&w, 1_000_000).unwrap().into_iter().map(Word::into_letters).collect();
        prop_assert_eq!(got, common::class(&letters));
    }

    #[test]
    fn containment_matches_braid_oracle(
        (n, letters) in common::fc_word(4, 12),
        start in 0usize..12,
        len in 1usize..5,
        pick in 0usize..1000,
    ) {
        let w = word(n, &letters);
        // a factor of some class member, which is always contained
        let members: Vec<Vec<u8>> = common::class(&letters).into_iter().collect();
        let member = &members[pick % members.len()];
        if !member.is_empty() {
            let a = start % member.len();
            let b = (a + len).min(member.len());
            let p = word(n, &member[a..b]);
            prop_assert!(contains_factor(&w, &p).unwrap());
            prop_assert!(contains_pattern(&w, &p).unwrap());
            prop_assert!(common::contains(n, &letters, p.letters()));
        }
        // an arbitrary short fully commutative pattern
        let raw: Vec<u8> = (0..len).map(|k| ((pick / (k + 1) + start * k) % (n + 1)) as u8).collect();
        if common::is_reduced_fc(n, &raw) {
            let p = word(n, &raw);
            let expected = common::contains(n, &letters, &raw);
            prop_assert_eq!(contains_pattern(&w, &p).unwrap(), expected);
            prop_assert_eq!(contains_factor(&w, &p).unwrap(), expected);
        }
    }
}
