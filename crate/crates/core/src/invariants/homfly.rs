//! HOMFLY polynomial by skein recursion on braid words.
//!
//! Convention: `v⁻¹ P(L₊) - v P(L₋) = z P(L₀)`, `P(unknot) = 1`, and `σ_i`
//! is a positive crossing.
//!
//! Each call simplifies the word (free and cyclic reduction, splitting off
//! unused generators, destabilizing at either end), then walks the closure
//! from fixed base points. A crossing first met from below is a defect; with
//! no defects the diagram is descending and the closure is an unlink.
//! Otherwise the first defect crossing is switched (same length, one defect
//! fewer) and smoothed (one letter shorter), so recursion terminates on
//! `(length, strands, defect)`. Results are memoized on the least rotation of
//! the simplified word; the recursion itself never rotates, so the measure is
//! always read in one frame.

use std::collections::HashMap;

use crate::braid::{cyclic_reduce_letters, least_rotation, BraidLetter, BraidWord, Sign};
use crate::poly::LaurentPoly2;

type Key = (usize, Vec<BraidLetter>);

/// `(v⁻¹ - v) / z`, the value of the 2-component unlink.
fn split_factor() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(-1, -1, 1), (1, -1, -1)])
}

pub fn homfly(w: &BraidWord) -> LaurentPoly2 {
    let mut memo = HomflyMemo::default();
    memo.compute(w)
}

/// Reusable memo table; values only depend on the closure, so a single
/// table can serve many words.
#[derive(Default)]
pub struct HomflyMemo {
    table: HashMap<Key, LaurentPoly2>,
}

impl HomflyMemo {
    pub fn compute(&mut self, w: &BraidWord) -> LaurentPoly2 {
        self.eval(w.strands(), w.letters().to_vec())
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    fn eval(&mut self, strands: usize, letters: Vec<BraidLetter>) -> LaurentPoly2 {
        let (n, letters) = match simplify(strands, letters) {
            Simplified::Split(a, b) => {
                let pa = self.eval(a.0, a.1);
                let pb = self.eval(b.0, b.1);
                return &(&pa * &pb) * &split_factor();
            }
            Simplified::Word(n, letters) => (n, letters),
        };
        if n == 1 {
            return LaurentPoly2::one();
        }

        let rot = least_rotation(&letters);
        let mut key_letters = letters.clone();
        key_letters.rotate_left(rot);
        let key = (n, key_letters);
        if let Some(p) = self.table.get(&key) {
            return p.clone();
        }

        let walk = walk_closure(n, &letters);
        let value = match walk.first_defect {
            None => split_factor_pow(walk.components - 1),
            Some(k) => {
                let mut switched = letters.clone();
                switched[k] = switched[k].inverse();
                let mut smoothed = letters.clone();
                smoothed.remove(k);
                let sign = letters[k].sign;
                let p_switched = self.eval(n, switched);
                let p_smoothed = self.eval(n, smoothed);
                match sign {
                    // P(L+) = v² P(L-) + v z P(L0)
                    Sign::Pos => &p_switched.mul_monomial(1, 2, 0) + &p_smoothed.mul_monomial(1, 1, 1),
                    // P(L-) = v⁻² P(L+) - v⁻¹ z P(L0)
                    Sign::Neg => &p_switched.mul_monomial(1, -2, 0) + &p_smoothed.mul_monomial(-1, -1, 1),
                }
            }
        };
        self.table.insert(key, value.clone());
        value
    }
}

fn split_factor_pow(k: usize) -> LaurentPoly2 {
    let f = split_factor();
    let mut out = LaurentPoly2::one();
    for _ in 0..k {
        out = &out * &f;
    }
    out
}

enum Simplified {
    Word(usize, Vec<BraidLetter>),
    Split((usize, Vec<BraidLetter>), (usize, Vec<BraidLetter>)),
}

fn simplify(mut n: usize, mut letters: Vec<BraidLetter>) -> Simplified {
    loop {
        letters = cyclic_reduce_letters(&letters);
        if n == 1 {
            return Simplified::Word(1, letters);
        }
        let mut counts = vec![0usize; n];
        for l in &letters {
            counts[l.index] += 1;
        }
        // an unused generator splits the closure
        if let Some(k) = (1..n).find(|&k| counts[k] == 0) {
            let low: Vec<BraidLetter> = letters.iter().copied().filter(|l| l.index < k).collect();
            let high: Vec<BraidLetter> = letters
                .iter()
                .filter(|l| l.index > k)
                .map(|l| BraidLetter::new(l.index - k, l.sign))
                .collect();
            return Simplified::Split((k, low), (n - k, high));
        }
        if counts[n - 1] == 1 {
            let p = letters.iter().position(|l| l.index == n - 1).unwrap();
            let mut next = letters[p + 1..].to_vec();
            next.extend_from_slice(&letters[..p]);
            letters = next;
            n -= 1;
            continue;
        }
        if counts[1] == 1 {
            let p = letters.iter().position(|l| l.index == 1).unwrap();
            let mut next: Vec<BraidLetter> = letters[p + 1..].to_vec();
            next.extend_from_slice(&letters[..p]);
            letters = next
                .into_iter()
                .map(|l| BraidLetter::new(l.index - 1, l.sign))
                .collect();
            n -= 1;
            continue;
        }
        return Simplified::Word(n, letters);
    }
}

struct Walk {
    components: usize,
    first_defect: Option<usize>,
}

/// Walks each component upward from its lowest start position at the base
/// of the word, components taken in order of that position. At `σ_i` the
/// strand arriving from position `i` passes over; at `σ_i⁻¹` it passes under.
fn walk_closure(n: usize, letters: &[BraidLetter]) -> Walk {
    let len = letters.len();
    let mut visited = vec![false; len];
    let mut started = vec![false; n];
    let mut components = 0;
    let mut first_defect = None;
    for start in 0..n {
        if started[start] {
            continue;
        }
        components += 1;
        let mut pos = start;
        loop {
            started[pos] = true;
            for (t, l) in letters.iter().enumerate() {
                let left = l.index - 1;
                let over = if pos == left {
                    pos = left + 1;
                    l.sign == Sign::Pos
                } else if pos == left + 1 {
                    pos = left;
                    l.sign == Sign::Neg
                } else {
                    continue;
                };
                if !visited[t] {
                    visited[t] = true;
                    if !over && first_defect.is_none() {
                        first_defect = Some(t);
                    }
                }
            }
            if pos == start {
                break;
            }
        }
    }
    Walk {
        components,
        first_defect,
    }
}

/// Morton–Franks–Williams lower bound on braid index: half the `v`-breadth
/// plus one.
pub fn mfw_lower_bound(p: &LaurentPoly2) -> Result<i64, crate::error::InvariantError> {
    let (lo, hi) = p
        .v_degrees()
        .ok_or(crate::error::InvariantError::ZeroPolynomial)?;
    let breadth = (hi - lo) as i64;
    Ok((breadth + 1) / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, l).unwrap()
    }

    fn p(terms: &[(i32, i32, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(homfly(&w(2, &[1])), LaurentPoly2::one());
        assert_eq!(homfly(&BraidWord::identity(1).unwrap()), LaurentPoly2::one());
        assert_eq!(homfly(&w(3, &[1, 2])), LaurentPoly2::one());
        assert_eq!(homfly(&BraidWord::identity(2).unwrap()), split_factor());
    }

    #[test]
    fn hopf_and_trefoil() {
        // positive Hopf link: (v - v³)/z + v z
        assert_eq!(homfly(&w(2, &[1, 1])), p(&[(1, -1, 1), (3, -1, -1), (1, 1, 1)]));
        let right = p(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)]);
        assert_eq!(homfly(&w(2, &[1, 1, 1])), right);
        assert_eq!(homfly(&w(2, &[-1, -1, -1])), right.invert_v());
    }

    #[test]
    fn figure_eight() {
        // amphichiral: v⁻² - 1 + v² - z²
        let f8 = p(&[(-2, 0, 1), (0, 0, -1), (2, 0, 1), (0, 2, -1)]);
        assert_eq!(homfly(&w(3, &[1, -2, 1, -2])), f8);
    }

    #[test]
    fn walk_detects_descending_words() {
        // positive crossing on the first strand's first pass is over
        assert!(walk_closure(2, &[BraidLetter::pos(1)]).first_defect.is_none());
        let w = walk_closure(2, &[BraidLetter::neg(1)]);
        assert_eq!(w.first_defect, Some(0));
        assert_eq!(w.components, 1);
        assert_eq!(walk_closure(3, &[]).components, 3);
    }

    #[test]
    fn mfw_examples() {
        assert_eq!(mfw_lower_bound(&LaurentPoly2::one()).unwrap(), 1);
        assert_eq!(mfw_lower_bound(&homfly(&w(2, &[1, 1, 1]))).unwrap(), 2);
        let t34 = w(3, &[1, 2, 1, 2, 1, 2, 1, 2]);
        assert_eq!(mfw_lower_bound(&homfly(&t34)).unwrap(), 3);
        assert!(mfw_lower_bound(&LaurentPoly2::zero()).is_err());
    }
}
