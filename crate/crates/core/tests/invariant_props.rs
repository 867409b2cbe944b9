mod common;

use braidknot::diagram::closure;
use braidknot::invariants::{alexander, homfly, jones_normalized, kauffman_bracket, mfw_lower_bound};
use braidknot::{fingerprint, BraidLetter, BraidWord};
use common::{conway_to_alexander, move_pair, state_sum_bracket, word, MOVES};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_word(min_n: usize, max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (min_n..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .map(|(i, p)| {
                    if p {
                        BraidLetter::pos(i)
                    } else {
                        BraidLetter::neg(i)
                    }
                })
                .collect();
            BraidWord::new(n, letters).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn invariants_survive_moves(seed in any::<u64>(), n in 2usize..=5, len in 0usize..=12, m in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = move_pair(&mut rng, MOVES[m], n, len);
        prop_assert_eq!(jones_normalized(&a), jones_normalized(&b), "{} vs {}", a, b);
        prop_assert_eq!(alexander(&a).ok(), alexander(&b).ok());
        prop_assert_eq!(homfly(&a), homfly(&b), "{} vs {}", a, b);
    }

    #[test]
    fn bracket_matches_state_sum(w in arb_word(2, 4, 8)) {
        prop_assert_eq!(kauffman_bracket(&closure(&w)), state_sum_bracket(&w));
    }
}

proptest! {
    #[test]
    fn alexander_at_one_for_knots(w in arb_word(2, 5, 12)) {
        if closure(&w).component_count() == 1 {
            prop_assert_eq!(alexander(&w).unwrap().eval_at_one().abs(), 1);
        } else {
            prop_assert!(alexander(&w).is_err());
        }
    }

    #[test]
    fn mfw_never_exceeds_strands(w in arb_word(2, 5, 12)) {
        let m = mfw_lower_bound(&homfly(&w)).unwrap();
        prop_assert!(m >= 1);
        prop_assert!(m <= w.strands() as i64, "{}: mfw {}", w, m);
    }

    #[test]
    fn homfly_at_v_one_is_conway(w in arb_word(2, 5, 10)) {
        if closure(&w).component_count() == 1 {
            let conway = homfly(&w).at_v_one();
            prop_assert_eq!(conway_to_alexander(&conway), Some(alexander(&w).unwrap()));
        }
    }

    #[test]
    fn mirror_inverts_variables(w in arb_word(2, 4, 10)) {
        let m = w.mirror();
        prop_assert_eq!(jones_normalized(&m), jones_normalized(&w).invert_variable());
        prop_assert_eq!(homfly(&m), homfly(&w).invert_v().negate_z());
    }
}

#[test]
fn conway_specialization_on_table_knots() {
    for (w, delta) in [
        (word(2, &[1, 1, 1]), vec![(-1, 1), (0, -1), (1, 1)]),
        (word(3, &[1, -2, 1, -2]), vec![(-1, -1), (0, 3), (1, -1)]),
    ] {
        let d = braidknot::LaurentPoly1::from_terms(delta);
        assert_eq!(conway_to_alexander(&homfly(&w).at_v_one()), Some(d.clone()));
        assert_eq!(alexander(&w).unwrap(), d);
    }
}

#[test]
fn burau_braid_relation() {
    use braidknot::invariants::burau_reduced;
    let a = burau_reduced(&word(3, &[1, 2, 1])).unwrap();
    let b = burau_reduced(&word(3, &[2, 1, 2])).unwrap();
    assert_eq!(a, b);
}

#[test]
fn exhaustive_small_bracket_oracle() {
    // every word with c <= 5 on 2 and 3 strands
    for n in 2..=3usize {
        let k = 2 * (n - 1);
        for len in 0..=5u32 {
            for code in 0..k.pow(len) {
                let mut c = code;
                let letters: Vec<i64> = (0..len)
                    .map(|_| {
                        let d = c % k;
                        c /= k;
                        let i = (d / 2 + 1) as i64;
                        if d % 2 == 0 {
                            i
                        } else {
                            -i
                        }
                    })
                    .collect();
                let w = word(n, &letters);
                assert_eq!(kauffman_bracket(&closure(&w)), state_sum_bracket(&w), "{w}");
            }
        }
    }
}

#[test]
fn fingerprints_agree_across_move_kinds() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for mv in MOVES {
        for len in 0..10 {
            let (a, b) = move_pair(&mut rng, mv, 5, len);
            assert_eq!(fingerprint(&a), fingerprint(&b), "{mv:?}: {a} vs {b}");
        }
    }
}
