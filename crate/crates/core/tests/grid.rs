mod common;

use common::{rank, word};
use fcblob::grid::*;
use fcblob::normal_forms::{blocks_of_word, positive_blocks, PositiveBlocks};
use fcblob::words::{canonical_word, contains_pattern, lex_min_representative, Word};
use proptest::prelude::*;

fn all_positive(n: usize, max_s: usize) -> Vec<PositiveBlocks> {
    (0..=max_s).flat_map(|s| positive_blocks(rank(n), s)).collect()
}

#[test]
fn oblique_words_stay_in_the_class() {
    for n in 1..=5 {
        for b in all_positive(n, 5).into_iter().filter(|b| b.word().len() <= 14) {
            let g = grid_of(&b);
            let obliques = obliques_of(&g);
            for o in &obliques {
                assert!(Oblique::new(rank(n), o.generators().iter().map(|&x| x as usize).collect()).is_ok());
            }
            let ow = oblique_word(&g);
            assert_eq!(lex_min_representative(&ow), lex_min_representative(&b.word()), "{b}");
            if ow.len() <= 9 {
                assert!(common::class(b.word().letters()).contains(ow.letters()));
            }
        }
    }
}

#[test]
fn small_grids() {
    let r = rank(2);
    let empty = grid_of(&PositiveBlocks::identity(r));
    assert!(empty.is_empty() && obliques_of(&empty).is_empty());
    let row = grid_of(&PositiveBlocks::parse(r, "0:2").unwrap());
    assert_eq!(row.len(), 3);
    assert_eq!(oblique_word(&row).letters(), &[0, 1, 2]);
    assert_eq!(grid_of(&PositiveBlocks::new(r, w_i_blocks(2)).unwrap()), pattern_iji(r));
    assert_eq!(grid_of(&PositiveBlocks::new(rank(1), vec![(0, 1), (0, 0)]).unwrap()), pattern_jij(rank(1)));
}

#[test]
fn long_patterns_are_three_obliques() {
    for n in 1..=12 {
        let r = rank(n);
        let (i, j) = (oblique_i(r), oblique_j(r));
        assert_eq!(obliques_of(&pattern_iji(r)), vec![i.clone(), j.clone(), i.clone()], "n = {n}");
        assert_eq!(obliques_of(&pattern_jij(r)), vec![j.clone(), i.clone(), j], "n = {n}");
        assert_eq!(obliques_of(&pattern_i(r)), vec![i]);
    }
}

fn pattern_word(blocks: Vec<(usize, usize)>, n: usize) -> Word {
    PositiveBlocks::new(rank(n), blocks).unwrap().word()
}

#[test]
fn grid_detector_matches_word_containment() {
    for n in 1..=3 {
        let iji = pattern_word(w_i_blocks(n), n);
        let jij = pattern_word(w_j_blocks(n), n);
        for b in all_positive(n, 3) {
            let w = b.word();
            let i_free = !contains_pattern(&w, &iji).unwrap();
            let j_free = !contains_pattern(&w, &jij).unwrap();
            assert_eq!(is_i_blobbed(&b), i_free, "{b}");
            assert_eq!(is_j_blobbed(&b), j_free, "{b}");
            assert_eq!(is_blobbed(&b), i_free && j_free);
        }
    }
}

#[test]
fn blobbed_total_at_rank_two() {
    let total = (0..=4).flat_map(|s| positive_blocks(rank(2), s)).filter(is_blobbed).count();
    assert_eq!(total, 19);
    assert!(is_blobbed(&PositiveBlocks::identity(rank(2))));
    assert!(!is_blobbed(&PositiveBlocks::new(rank(2), w_i_blocks(2)).unwrap()));
}

#[test]
fn two_i_obliques_force_alternation() {
    for n in 1..=4 {
        let (i, j) = (oblique_i(rank(n)), oblique_j(rank(n)));
        for b in all_positive(n, 4) {
            let obliques = obliques_of(&grid_of(&b));
            let positions: Vec<usize> = (0..obliques.len()).filter(|&k| obliques[k] == i).collect();
            for w in positions.windows(2) {
                for (k, o) in obliques.iter().enumerate().take(w[1]).skip(w[0] + 1) {
                    let expected = if (k - w[0]) % 2 == 1 { &j } else { &i };
                    assert_eq!(o, expected, "{b}");
                }
            }
        }
    }
}

#[test]
fn factorization_exists_exactly_when_iji_occurs() {
    for n in 1..=4 {
        let r = rank(n);
        let (i, j) = (oblique_i(r), oblique_j(r));
        for b in all_positive(n, 4) {
            match oblique_factorization(&b) {
                Ok(f) => {
                    assert!(!is_i_blobbed(&b), "{b}");
                    assert!(f.k >= 1);
                    assert!(!f.prefix.contains(&i));
                    // at rank 1 every oblique is I or J
                    // a J may close the prefix or open the suffix, nowhere else
                    if n > 1 {
                        assert!(!f.suffix.contains(&i), "{b}");
                        assert!(!f.suffix.iter().skip(1).any(|o| o == &j), "{b}");
                        if let Some((_, init)) = f.prefix.split_last() {
                            assert!(!init.contains(&j));
                        }
                    }
                    let shorter = blobbed_bar(&b).unwrap();
                    assert_eq!(shorter.len() + n + 1, b.word().len());
                    assert!(blocks_of_word(&shorter).is_ok(), "bar of {b} is positive");
                }
                Err(_) => assert!(is_i_blobbed(&b), "{b}"),
            }
            if is_i_blobbed(&b) && !is_j_blobbed(&b) {
                let shorter = blobbed_tilde(&b).unwrap();
                assert_eq!(shorter.len() + n + 1, b.word().len());
                assert!(blocks_of_word(&shorter).is_ok());
            } else {
                assert!(blobbed_tilde(&b).is_err());
            }
        }
    }
}

#[test]
fn factorization_examples() {
    let r = rank(2);
    let iji = PositiveBlocks::new(r, w_i_blocks(2)).unwrap();
    let f = oblique_factorization(&iji).unwrap();
    assert_eq!((f.prefix.len(), f.k, f.suffix.len()), (0, 1, 0));
    let ijiji = blocks_of_word(&word(2, &[1, 0, 2, 1, 0, 2, 1])).unwrap();
    let f = oblique_factorization(&ijiji).unwrap();
    assert_eq!((f.prefix.len(), f.k, f.suffix.len()), (0, 2, 0));
    assert_eq!(canonical_word(&blobbed_bar(&ijiji).unwrap()).unwrap(), canonical_word(&iji.word()).unwrap());
    assert!(oblique_factorization(&PositiveBlocks::identity(r)).is_err());
}

#[test]
fn rendering_is_deterministic() {
    let b = PositiveBlocks::parse(rank(8), "7:8,4:8,3:7,1:4,0:1,0:0").unwrap();
    let g = grid_of(&b);
    assert_eq!(render(&g, RenderFormat::Svg), render(&g, RenderFormat::Svg));
    let ascii = render(&g, RenderFormat::Ascii);
    assert_eq!(ascii.matches('*').count(), 19);
    assert_eq!(ascii.lines().count(), 8);
    let widths: Vec<usize> = ascii.lines().map(str::len).collect();
    assert!(widths.windows(2).all(|w| w[0] == w[1]));
}

fn arbitrary_grid(n: usize) -> impl Strategy<Value = Grid> {
    prop::collection::vec((0i32..6, 0..=n), 0..12).prop_map(move |pts| Grid::new(rank(n), pts).unwrap())
}

proptest! {
    #[test]
    fn containment_is_reflexive_and_monotone(
        g in arbitrary_grid(4),
        p in arbitrary_grid(4),
        extra in (0i32..6, 0usize..=4),
    ) {
        prop_assert!(contains_grid(&g, &g).unwrap());
        let bigger = g.with_point(extra.0, extra.1).unwrap();
        if contains_grid(&g, &p).unwrap() {
            prop_assert!(contains_grid(&bigger, &p).unwrap());
        }
        let shifted = Grid::new(rank(4), p.points().iter().map(|&(i, j)| (i + 3, j as usize))).unwrap();
        prop_assert_eq!(contains_grid(&g, &p).unwrap(), contains_grid(&g, &shifted).unwrap());
    }
}
