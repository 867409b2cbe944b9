//! Reduced Burau representation and the Alexander polynomial of a braid
//! closure.

use std::ops::Mul;

use crate::braid::{BraidWord, Sign};
use crate::diagram::closure;
use crate::error::InvariantError;
use crate::poly::LaurentPoly1;

/// Square matrix over `Z[t, t⁻¹]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<LaurentPoly1>,
}

impl PolyMatrix {
    pub fn identity(size: usize) -> Self {
        let mut m = PolyMatrix {
            size,
            entries: vec![LaurentPoly1::zero(); size * size],
        };
        for i in 0..size {
            m.entries[i * size + i] = LaurentPoly1::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly1 {
        &self.entries[r * self.size + c]
    }

    fn set(&mut self, r: usize, c: usize, v: LaurentPoly1) {
        self.entries[r * self.size + c] = v;
    }

    /// Determinant by expansion over column subsets, `O(2^m · m)` products.
    pub fn determinant(&self) -> LaurentPoly1 {
        let m = self.size;
        if m == 0 {
            return LaurentPoly1::one();
        }
        let full = (1usize << m) - 1;
        let mut dp: Vec<LaurentPoly1> = vec![LaurentPoly1::zero(); 1 << m];
        dp[0] = LaurentPoly1::one();
        for mask in 0..full {
            if dp[mask].is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            for col in 0..m {
                if mask & (1 << col) != 0 || self.get(row, col).is_zero() {
                    continue;
                }
                let above = (mask >> (col + 1)).count_ones();
                let mut term = &dp[mask] * self.get(row, col);
                if above % 2 == 1 {
                    term = -&term;
                }
                let next = mask | (1 << col);
                dp[next] += &term;
            }
        }
        dp[full].clone()
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = PolyMatrix {
            size: n,
            entries: vec![LaurentPoly1::zero(); n * n],
        };
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

/// Reduced Burau matrix of `σ_i^{±1}` in `B_n`, size `n-1`. It differs
/// from the identity only in row `i-1` (0-based), which reads
/// `(t, -t, 1)` in columns `i-2, i-1, i` for `σ_i` and
/// `(1, -t⁻¹, t⁻¹)` for `σ_i⁻¹`, clipped to the matrix.
fn generator_matrix(n: usize, index: usize, sign: Sign) -> PolyMatrix {
    let mut m = PolyMatrix::identity(n - 1);
    let row = index - 1;
    let (left, mid, right) = match sign {
        Sign::Pos => (
            LaurentPoly1::monomial(1, 1),
            LaurentPoly1::monomial(-1, 1),
            LaurentPoly1::one(),
        ),
        Sign::Neg => (
            LaurentPoly1::one(),
            LaurentPoly1::monomial(-1, -1),
            LaurentPoly1::monomial(1, -1),
        ),
    };
    if row >= 1 {
        m.set(row, row - 1, left);
    }
    m.set(row, row, mid);
    if row + 1 < n - 1 {
        m.set(row, row + 1, right);
    }
    m
}

pub fn burau_reduced(w: &BraidWord) -> Result<PolyMatrix, InvariantError> {
    let n = w.strands();
    if n < 2 {
        return Err(InvariantError::TooFewStrands(n));
    }
    let mut acc = PolyMatrix::identity(n - 1);
    for l in w.letters() {
        acc = &acc * &generator_matrix(n, l.index, l.sign);
    }
    Ok(acc)
}

/// `Δ(t) = det(I - B(w)) · (1 - t) / (1 - tⁿ)`, normalized so that
/// `Δ(t) = Δ(t⁻¹)` and `Δ(1) = 1`.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly1, InvariantError> {
    let components = closure(w).component_count();
    if components != 1 {
        return Err(InvariantError::NotAKnot(components));
    }
    let n = w.strands();
    if n == 1 {
        return Ok(LaurentPoly1::one());
    }
    let b = burau_reduced(w)?;
    let mut id_minus = PolyMatrix::identity(n - 1);
    for (slot, e) in id_minus.entries.iter_mut().zip(&b.entries) {
        *slot = &*slot - e;
    }
    let det = id_minus.determinant();
    let one_minus_t = LaurentPoly1::from_terms([(0, 1), (1, -1)]);
    let one_minus_tn = LaurentPoly1::from_terms([(0, 1), (n as i32, -1)]);
    let raw = (&det * &one_minus_t).div_exact(&one_minus_tn)?;
    normalize_alexander(&raw)
}

/// Shifts to a symmetric exponent range and fixes the sign by `Δ(1) > 0`.
pub fn normalize_alexander(p: &LaurentPoly1) -> Result<LaurentPoly1, InvariantError> {
    let (lo, hi) = match (p.min_degree(), p.max_degree()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(InvariantError::ZeroPolynomial),
    };
    if (lo + hi) % 2 != 0 {
        return Err(InvariantError::InexactDivision);
    }
    let centered = p.shift(-(lo + hi) / 2);
    Ok(if centered.eval_at_one() < 0 {
        -&centered
    } else {
        centered
    })
}

/// Half the span of a symmetric Alexander polynomial: a lower bound for the
/// knot genus.
pub fn alexander_genus_lb(delta: &LaurentPoly1) -> i64 {
    match (delta.min_degree(), delta.max_degree()) {
        (Some(lo), Some(hi)) => ((hi - lo) / 2) as i64,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, l).unwrap()
    }

    fn t(terms: &[(i32, i64)]) -> LaurentPoly1 {
        LaurentPoly1::from_terms(terms.iter().copied())
    }

    #[test]
    fn burau_small_cases() {
        assert_eq!(
            burau_reduced(&BraidWord::identity(2).unwrap()).unwrap(),
            PolyMatrix::identity(1)
        );
        let s = burau_reduced(&w(2, &[1])).unwrap();
        assert_eq!(s.get(0, 0), &LaurentPoly1::monomial(-1, 1));
        assert_eq!(
            burau_reduced(&w(3, &[1, 2, 1])).unwrap(),
            burau_reduced(&w(3, &[2, 1, 2])).unwrap()
        );
        assert_eq!(
            burau_reduced(&w(4, &[1, 3])).unwrap(),
            burau_reduced(&w(4, &[3, 1])).unwrap()
        );
        for n in 2..6 {
            for i in 1..n {
                let g = burau_reduced(&w(n, &[i as i64, -(i as i64)])).unwrap();
                assert_eq!(g, PolyMatrix::identity(n - 1));
            }
        }
        assert_eq!(
            burau_reduced(&BraidWord::identity(1).unwrap()),
            Err(InvariantError::TooFewStrands(1))
        );
    }

    #[test]
    fn alexander_table() {
        assert_eq!(alexander(&w(2, &[1])).unwrap(), LaurentPoly1::one());
        assert_eq!(
            alexander(&BraidWord::identity(1).unwrap()).unwrap(),
            LaurentPoly1::one()
        );
        assert_eq!(
            alexander(&w(2, &[1, 1, 1])).unwrap(),
            t(&[(1, 1), (0, -1), (-1, 1)])
        );
        assert_eq!(
            alexander(&w(2, &[-1, -1, -1])).unwrap(),
            t(&[(1, 1), (0, -1), (-1, 1)])
        );
        assert_eq!(
            alexander(&w(3, &[1, -2, 1, -2])).unwrap(),
            t(&[(1, -1), (0, 3), (-1, -1)])
        );
        // 5_2 and 6_1
        assert_eq!(
            alexander(&w(3, &[1, 1, 1, 2, -1, 2])).unwrap(),
            t(&[(1, 2), (0, -3), (-1, 2)])
        );
        assert_eq!(
            alexander(&w(4, &[1, 1, 2, -1, -3, 2, -3])).unwrap(),
            t(&[(1, -2), (0, 5), (-1, -2)])
        );
        assert_eq!(alexander(&w(2, &[1, 1])), Err(InvariantError::NotAKnot(2)));
    }

    #[test]
    fn genus_lower_bounds() {
        assert_eq!(alexander_genus_lb(&LaurentPoly1::one()), 0);
        assert_eq!(alexander_genus_lb(&t(&[(1, 1), (0, -1), (-1, 1)])), 1);
        assert_eq!(alexander_genus_lb(&t(&[(1, -1), (0, 3), (-1, -1)])), 1);
    }

    #[test]
    fn determinant_matches_permutation_expansion() {
        let mut m = PolyMatrix::identity(3);
        let vals = [[1, 2, 3], [0, 4, 5], [1, 0, 6]];
        for (r, row) in vals.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, LaurentPoly1::monomial(v, 0));
            }
        }
        assert_eq!(m.determinant(), LaurentPoly1::monomial(22, 0));
    }
}
