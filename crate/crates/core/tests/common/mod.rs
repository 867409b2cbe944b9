//! Helpers shared by the integration suites: random words, Markov-type
//! moves, and an independent state-sum bracket.
#![allow(dead_code)]

use braidknot::poly::LaurentPoly1;
use braidknot::{BraidLetter, BraidWord, Sign};
use rand::Rng;

pub fn word(n: usize, letters: &[i64]) -> BraidWord {
    BraidWord::from_signed(n, letters).unwrap()
}

pub fn random_letter<R: Rng>(rng: &mut R, n: usize) -> BraidLetter {
    let i = rng.gen_range(1..n);
    if rng.gen_bool(0.5) {
        BraidLetter::pos(i)
    } else {
        BraidLetter::neg(i)
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| random_letter(rng, n)).collect();
    BraidWord::new(n, letters).unwrap()
}

/// Freely reduced word of exactly `len` letters.
pub fn random_reduced_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let mut letters: Vec<BraidLetter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, n);
        if letters.last().is_some_and(|p| p.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    BraidWord::new(n, letters).unwrap()
}

/// `α σ_{n-1}^ε β σ_{n-1}^{-ε}` with `α`, `β` in `σ_1..σ_{n-3}`; needs `n >= 4`.
pub fn random_exchange_word<R: Rng>(rng: &mut R, n: usize, max_part: usize) -> BraidWord {
    assert!(n >= 4);
    let low = |rng: &mut R| -> Vec<BraidLetter> {
        let k = rng.gen_range(0..=max_part);
        (0..k).map(|_| random_letter(rng, n - 2)).collect()
    };
    let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    let mut letters = low(rng);
    letters.push(BraidLetter::new(n - 1, sign));
    letters.extend(low(rng));
    letters.push(BraidLetter::new(n - 1, sign.flip()));
    BraidWord::new(n, letters).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    FreeReduce,
    Rotate,
    Conjugate,
    Stabilize,
    Destabilize,
    Exchange,
}

pub const MOVES: [Move; 6] = [
    Move::FreeReduce,
    Move::Rotate,
    Move::Conjugate,
    Move::Stabilize,
    Move::Destabilize,
    Move::Exchange,
];

/// A pair `(before, after)` whose closures are isotopic by one `mv`.
/// Destabilization and exchange build a word where the move applies.
pub fn move_pair<R: Rng>(rng: &mut R, mv: Move, n: usize, len: usize) -> (BraidWord, BraidWord) {
    match mv {
        Move::FreeReduce => {
            let w = random_word(rng, n, len);
            // pad with a cancelling pair so there is something to reduce
            let mut letters = w.letters().to_vec();
            let l = random_letter(rng, n);
            let at = rng.gen_range(0..=letters.len());
            letters.splice(at..at, [l, l.inverse()]);
            let padded = BraidWord::new(n, letters).unwrap();
            let reduced = padded.free_reduce();
            (padded, reduced)
        }
        Move::Rotate => {
            let w = random_word(rng, n, len);
            let k = rng.gen_range(0..=w.len());
            let r = w.rotate(k);
            (w, r)
        }
        Move::Conjugate => {
            let w = random_word(rng, n, len);
            let k = rng.gen_range(1..=3);
            let by = random_word(rng, n, k);
            let c = w.conjugate(&by).unwrap();
            (w, c)
        }
        Move::Stabilize => {
            let w = random_word(rng, n, len);
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let s = w.stabilize(sign);
            (w, s)
        }
        Move::Destabilize => {
            let base = random_word(rng, n, len);
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let s = base.stabilize(sign).rotate(rng.gen_range(0..=len));
            let d = s.destabilize().unwrap();
            (s, d)
        }
        Move::Exchange => {
            let m = n.max(4);
            let w = random_exchange_word(rng, m, len / 2);
            let moved = w.exchange_moves();
            assert!(!moved.is_empty(), "exchange pattern not detected in {w}");
            let pick = moved[rng.gen_range(0..moved.len())].clone();
            (w, pick)
        }
    }
}

/// `⟨D⟩` summed over all `2^c` smoothings, counting loops with a
/// union-find over the braid grid. A positive crossing's A-smoothing is the
/// vertical (identity) one.
pub fn state_sum_bracket(w: &BraidWord) -> LaurentPoly1 {
    let n = w.strands();
    let letters = w.letters();
    let c = letters.len();
    assert!(c <= 20);
    // point (level t, position p), level c identified with level 0
    let id = |t: usize, p: usize| (t % c.max(1)) * n + p;
    let size = c.max(1) * n;
    let delta = LaurentPoly1::from_terms([(2, -1), (-2, -1)]);
    let mut total = LaurentPoly1::zero();
    for state in 0u32..(1u32 << c) {
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        let mut a_count = 0i32;
        for (t, l) in letters.iter().enumerate() {
            let left = l.index - 1;
            for p in 0..n {
                if p != left && p != left + 1 {
                    union(id(t, p), id(t + 1, p));
                }
            }
            let vertical = state & (1 << t) == 0;
            if vertical {
                union(id(t, left), id(t + 1, left));
                union(id(t, left + 1), id(t + 1, left + 1));
            } else {
                union(id(t, left), id(t, left + 1));
                union(id(t + 1, left), id(t + 1, left + 1));
            }
            let a_smoothing = vertical == (l.sign == Sign::Pos);
            a_count += if a_smoothing { 1 } else { -1 };
        }
        // an empty word closes to n parallel circles
        let loops = if c == 0 {
            n
        } else {
            (0..size).filter(|&x| find(&mut parent, x) == x).count()
        };
        total += &(&LaurentPoly1::monomial(1, a_count) * &delta.pow(loops as u32 - 1));
    }
    total
}

/// `Δ(t)` from the Conway polynomial `∇(z)` via `z² = t - 2 + t⁻¹`.
pub fn conway_to_alexander(conway: &LaurentPoly1) -> Option<LaurentPoly1> {
    let z2 = LaurentPoly1::from_terms([(1, 1), (0, -2), (-1, 1)]);
    let mut out = LaurentPoly1::zero();
    for (k, c) in conway.terms() {
        if k < 0 || k % 2 != 0 {
            return None;
        }
        out += &z2.pow((k / 2) as u32).scale(c);
    }
    Some(out)
}
