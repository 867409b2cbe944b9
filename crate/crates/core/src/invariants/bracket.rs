//! Kauffman bracket of a braid closure, computed in the Temperley–Lieb
//! algebra: `σ_i = A·1 + A⁻¹·e_i` and `σ_i⁻¹ = A⁻¹·1 + A·e_i`, closed up
//! with the Markov trace, loop value `δ = -A² - A⁻²`, `⟨unknot⟩ = 1`.

use std::collections::HashMap;

use crate::braid::Sign;
use crate::diagram::ClosedBraidDiagram;
use crate::poly::LaurentPoly1;

/// Noncrossing matching on `2n` boundary points: `0..n` along the bottom,
/// `n..2n` along the top, both left to right.
type Matching = Vec<u8>;

fn identity_matching(n: usize) -> Matching {
    (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect()
}

/// Stacks `e_i` (0-based position `i`) on top of `d`; returns the new
/// matching and whether a closed loop was formed.
fn attach_cup_cap(d: &Matching, n: usize, i: usize) -> (Matching, bool) {
    let (a, b) = (n + i, n + i + 1);
    let mut out = d.clone();
    let pa = d[a] as usize;
    let pb = d[b] as usize;
    let closed = pa == b;
    if !closed {
        // the cap joins the far ends of the arcs through a and b
        out[pa] = pb as u8;
        out[pb] = pa as u8;
    }
    // the cup becomes the new top pair
    out[a] = b as u8;
    out[b] = a as u8;
    (out, closed)
}

/// Number of loops after joining top point `j` to bottom point `j`.
fn closure_loops(d: &Matching, n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d[p] as usize;
            seen[q] = true;
            // step across the closure strand
            p = if q >= n { q - n } else { q + n };
            if seen[p] {
                break;
            }
        }
    }
    loops
}

fn a_mono(e: i32) -> LaurentPoly1 {
    LaurentPoly1::monomial(1, e)
}

pub fn loop_value() -> LaurentPoly1 {
    LaurentPoly1::from_terms([(2, -1), (-2, -1)])
}

pub fn kauffman_bracket(d: &ClosedBraidDiagram) -> LaurentPoly1 {
    let n = d.strands();
    let delta = loop_value();
    let mut state: HashMap<Matching, LaurentPoly1> = HashMap::new();
    state.insert(identity_matching(n), LaurentPoly1::one());

    for &(index, sign) in d.crossings() {
        let (keep, smooth) = match sign {
            Sign::Pos => (a_mono(1), a_mono(-1)),
            Sign::Neg => (a_mono(-1), a_mono(1)),
        };
        let mut next: HashMap<Matching, LaurentPoly1> = HashMap::with_capacity(state.len() * 2);
        for (m, coef) in state {
            let (em, closed) = attach_cup_cap(&m, n, index - 1);
            let mut c_smooth = &coef * &smooth;
            if closed {
                c_smooth = &c_smooth * &delta;
            }
            *next.entry(em).or_default() += &c_smooth;
            *next.entry(m).or_default() += &(&coef * &keep);
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }

    let mut powers = vec![LaurentPoly1::one()];
    let mut total = LaurentPoly1::zero();
    for (m, coef) in state {
        let loops = closure_loops(&m, n);
        while powers.len() < loops {
            let p = powers.last().unwrap() * &delta;
            powers.push(p);
        }
        total += &(&coef * &powers[loops - 1]);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::closure;

    fn bracket(n: usize, l: &[i64]) -> LaurentPoly1 {
        kauffman_bracket(&closure(&BraidWord::from_signed(n, l).unwrap()))
    }

    #[test]
    fn unknot_and_unlinks() {
        assert_eq!(bracket(1, &[]), LaurentPoly1::one());
        assert_eq!(bracket(3, &[]), loop_value().pow(2));
    }

    #[test]
    fn positive_kink() {
        assert_eq!(bracket(2, &[1]), LaurentPoly1::monomial(-1, 3));
        assert_eq!(bracket(2, &[-1]), LaurentPoly1::monomial(-1, -3));
    }

    #[test]
    fn trefoil_hand_value() {
        // A^3 δ + 3A + 3A^-1 δ + A^-3 δ^2 = -A^5 - A^-3 + A^-7
        assert_eq!(
            bracket(2, &[1, 1, 1]),
            LaurentPoly1::from_terms([(5, -1), (-3, -1), (-7, 1)])
        );
    }

    #[test]
    fn matching_helpers() {
        let id = identity_matching(3);
        assert_eq!(closure_loops(&id, 3), 3);
        let (e, closed) = attach_cup_cap(&id, 3, 0);
        assert!(!closed);
        assert_eq!(closure_loops(&e, 3), 2);
        let (ee, closed) = attach_cup_cap(&e, 3, 0);
        assert!(closed);
        assert_eq!(ee, e);
    }
}
