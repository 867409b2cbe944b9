//! Inputs shared by the criterion benches.

use braidknot::BraidWord;

/// `(σ1 ⋯ σ_{p-1})^q`, closing to the torus link `T(p, q)`.
pub fn torus_word(p: usize, q: usize) -> BraidWord {
    let period: Vec<i64> = (1..p as i64).collect();
    BraidWord::from_signed(p, &period.repeat(q)).expect("valid torus word")
}

/// Alternating `(σ1 σ2⁻¹ σ3 σ4⁻¹ ...)^k` on `n` strands.
pub fn alternating_word(n: usize, k: usize) -> BraidWord {
    let period: Vec<i64> = (1..n as i64).map(|i| if i % 2 == 1 { i } else { -i }).collect();
    BraidWord::from_signed(n, &period.repeat(k)).expect("valid alternating word")
}
