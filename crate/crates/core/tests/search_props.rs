mod common;

use std::collections::BTreeSet;

use braidknot::search::{
    census, crossing_budget, decide_braid_index_leq, enumerate_words, enumerate_words_parallel, Decision,
    EnumerationSpec, DEFAULT_ENUM_CAP,
};
use braidknot::{f, fingerprint, BraidWord, Fingerprint, Rational};
use common::word;

/// Every word (no reduction, no dedup) on `n` strands of length `<= len`.
fn raw_words(n: usize, len: usize) -> Vec<BraidWord> {
    let k = 2 * (n - 1);
    let mut out = vec![BraidWord::identity(n).unwrap()];
    let mut frontier = vec![Vec::<i64>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for d in 0..k {
                let i = (d / 2 + 1) as i64;
                let mut x = w.clone();
                x.push(if d % 2 == 0 { i } else { -i });
                out.push(word(n, &x));
                next.push(x);
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn dedup_keeps_every_closure() {
    for (n, len) in [(2, 6), (3, 5), (3, 6)] {
        for knot_only in [false, true] {
            let raw: BTreeSet<Fingerprint> = raw_words(n, len)
                .iter()
                .filter(|w| !knot_only || braidknot::closure(w).component_count() == 1)
                .map(fingerprint)
                .collect();
            let dedup: BTreeSet<Fingerprint> = enumerate_words(EnumerationSpec::new(n, len, knot_only))
                .map(|w| fingerprint(&w))
                .collect();
            assert_eq!(raw, dedup, "n={n} len={len} knot_only={knot_only}");
        }
    }
}

#[test]
fn larger_budgets_extend_smaller_ones() {
    let small: Vec<BraidWord> = enumerate_words(EnumerationSpec::new(3, 4, true)).collect();
    for len in 5..=7 {
        let big: Vec<BraidWord> = enumerate_words(EnumerationSpec::new(3, len, true))
            .filter(|w| w.len() <= 4)
            .collect();
        assert_eq!(big, small);
    }
    // a CertifiedNo at b' = 2 stays so when the target claims a smaller χ
    let f8 = fingerprint(&word(3, &[1, -2, 1, -2]));
    for chi in [-1, -3, -5] {
        let r = decide_braid_index_leq(&f8, chi, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.decision, Decision::CertifiedNo, "chi={chi}");
    }
}

#[test]
fn parallel_enumeration_is_deterministic() {
    let spec = EnumerationSpec::new(4, 6, true);
    let (a, sa) = enumerate_words_parallel(spec, 1);
    let (b, sb) = enumerate_words_parallel(spec, 3);
    let seq: Vec<BraidWord> = enumerate_words(spec).collect();
    assert_eq!(a, seq);
    assert_eq!(b, seq);
    assert_eq!(sa, sb);
}

#[test]
fn census_is_stable_and_within_budget() {
    for (g, n) in [(1, 2), (2, 2), (1, 3), (0, 3)] {
        let c1 = census(g, n, DEFAULT_ENUM_CAP).unwrap();
        let c2 = census(g, n, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(c1, c2);
        let bound = &f(n as i64).unwrap() * &Rational::integer(2 * g - 1 + n as i64);
        for e in c1.certified.iter().chain(&c1.residue) {
            assert!(Rational::integer(e.witness.len() as i64) <= bound);
        }
        let keys: Vec<String> = c1.certified.iter().map(|e| e.fingerprint.sort_key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for e in &c1.certified {
            assert_eq!(e.certified_genus, Some(g));
            assert_eq!(e.certified_braid_index, Some(n as i64));
        }
    }
}

#[test]
fn genus_zero_has_no_nontrivial_entries() {
    // every genus-0 knot is the unknot, braid index 1
    for n in 2..=3 {
        let c = census(0, n, DEFAULT_ENUM_CAP).unwrap();
        assert!(c.certified.is_empty());
    }
}

#[test]
fn budget_formula() {
    for b in 2..=6usize {
        for chi in -6..=0i64 {
            let expect = (&f(b as i64).unwrap() * &Rational::integer(b as i64 - chi)).floor();
            let got = crossing_budget(chi, b).unwrap().unwrap();
            assert_eq!(got.to_string(), expect.to_string());
        }
    }
}

#[test]
fn cap_is_enforced() {
    let tre = fingerprint(&word(2, &[1, 1, 1]));
    assert!(matches!(
        decide_braid_index_leq(&tre, -1, 2, 10),
        Err(braidknot::SearchError::BudgetExceeded {
            requested: 15,
            cap: 10
        })
    ));
    assert!(census(3, 4, DEFAULT_ENUM_CAP).is_err());
}
