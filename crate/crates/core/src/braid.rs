//! Words in the Artin generators of the braid group `B_n`.
//!
//! Generators are 1-based: `σ_i` exchanges strand positions `i` and `i+1`,
//! `1 <= i <= n-1`. The text form is `B<n>: <i1> <i2> ...` with negative
//! integers standing for inverse generators, e.g. `B3: 1 -2 1 -2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// `σ_index^{sign}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(index: usize, sign: Sign) -> Self {
        BraidLetter { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        BraidLetter::new(index, Sign::Pos)
    }

    pub fn neg(index: usize) -> Self {
        BraidLetter::new(index, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        BraidLetter::new(self.index, self.sign.flip())
    }

    pub fn cancels(self, other: BraidLetter) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    /// Signed integer form used by the text format.
    pub fn to_signed(self) -> i64 {
        self.index as i64 * self.sign.as_i32() as i64
    }

    pub fn from_signed(v: i64) -> Option<Self> {
        if v == 0 {
            return None;
        }
        let sign = if v > 0 { Sign::Pos } else { Sign::Neg };
        Some(BraidLetter::new(v.unsigned_abs() as usize, sign))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::IndexOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2, 1, -2]`.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self, BraidError> {
        let letters = letters
            .iter()
            .map(|&v| {
                BraidLetter::from_signed(v).ok_or_else(|| BraidError::Parse {
                    input: format!("{letters:?}"),
                    reason: "generator 0 does not exist".into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        BraidWord::new(strands, Vec::new())
    }

    // Callers guarantee the letters are in range.
    pub(crate) fn from_parts(strands: usize, letters: Vec<BraidLetter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_parts(self.strands, letters))
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord::from_parts(self.strands, letters)
    }

    /// Mirror image of the closure: every crossing switched.
    pub fn mirror(&self) -> BraidWord {
        let letters = self.letters.iter().map(|l| l.inverse()).collect();
        BraidWord::from_parts(self.strands, letters)
    }

    pub fn free_reduce(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, free_reduce_letters(&self.letters))
    }

    /// Free reduction followed by stripping cancelling first/last pairs
    /// (a conjugation, so the closure is unchanged).
    pub fn cyclic_reduce(&self) -> BraidWord {
        BraidWord::from_parts(self.strands, cyclic_reduce_letters(&self.letters))
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(a), Some(b)) if self.letters.len() > 1 => !a.cancels(*b),
                _ => true,
            }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i32() as i64).sum()
    }

    /// Rotation `w[k..] w[..k]`; the closure is unchanged.
    pub fn rotate(&self, k: usize) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.letters.len());
        BraidWord::from_parts(self.strands, letters)
    }

    /// `c w c⁻¹`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord, BraidError> {
        by.compose(self)?.compose(&by.inverse())
    }

    /// Lexicographically least rotation, with `σ_i < σ_i⁻¹ < σ_{i+1}`.
    pub fn canonical_rotation(&self) -> BraidWord {
        let k = least_rotation(&self.letters);
        self.rotate(k)
    }

    /// `w ∈ B_n` to `w σ_n^{±1} ∈ B_{n+1}`.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(BraidLetter::new(self.strands, sign));
        BraidWord::from_parts(self.strands + 1, letters)
    }

    /// Inverse Markov move: `u σ_{n-1}^{±1} v` to `v u ∈ B_{n-1}`.
    pub fn destabilize(&self) -> Result<BraidWord, BraidError> {
        let top = self.strands.saturating_sub(1);
        let hits: Vec<usize> = (0..self.letters.len())
            .filter(|&k| self.letters[k].index == top)
            .collect();
        if self.strands < 2 || hits.len() != 1 {
            return Err(BraidError::DestabilizeInapplicable { found: hits.len() });
        }
        let p = hits[0];
        let mut letters = self.letters[p + 1..].to_vec();
        letters.extend_from_slice(&self.letters[..p]);
        Ok(BraidWord::from_parts(self.strands - 1, letters))
    }

    /// All exchange moves applicable to some cyclic rotation of the word:
    /// `α σ_{n-1}^ε β σ_{n-1}^{-ε}` becomes `α σ_{n-1}^{-ε} β σ_{n-1}^ε`
    /// where `α`, `β` only use `σ_1..σ_{n-3}`. Outputs are returned as
    /// canonical rotations, without repeats.
    pub fn exchange_moves(&self) -> Vec<BraidWord> {
        let n = self.strands;
        if n < 2 {
            return Vec::new();
        }
        let top = n - 1;
        let tops: Vec<usize> = (0..self.letters.len())
            .filter(|&k| self.letters[k].index == top)
            .collect();
        if tops.len() != 2 {
            return Vec::new();
        }
        if self.letters[tops[0]].sign == self.letters[tops[1]].sign {
            return Vec::new();
        }
        if self.letters.iter().any(|l| l.index != top && l.index + 2 >= n) {
            return Vec::new();
        }

        let mut out: Vec<BraidWord> = Vec::new();
        for &last in &tops {
            // rotate so that this σ_{n-1} letter is last
            let rotated = self.rotate(last + 1);
            let mut letters = rotated.letters;
            let first = letters.iter().position(|l| l.index == top).unwrap();
            let end = letters.len() - 1;
            letters[first] = letters[first].inverse();
            letters[end] = letters[end].inverse();
            let key = BraidWord::from_parts(n, letters).canonical_rotation();
            if !out.contains(&key) {
                out.push(key);
            }
        }
        out
    }

    /// Images of `x_1..x_n` under the Artin action, where `σ_i` sends
    /// `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes the rest.
    /// Letters act left to right as a composition of automorphisms.
    pub fn artin_action(&self) -> Vec<FreeGroupWord> {
        let n = self.strands;
        let mut images: Vec<FreeGroupWord> = (1..=n).map(|g| FreeGroupWord::generator(g as i32)).collect();
        for l in &self.letters {
            let i = l.index - 1;
            let xi = images[i].clone();
            let xj = images[i + 1].clone();
            match l.sign {
                Sign::Pos => {
                    images[i] = xi.mul(&xj).mul(&xi.inverse());
                    images[i + 1] = xi;
                }
                Sign::Neg => {
                    images[i + 1] = xj.inverse().mul(&xi).mul(&xj);
                    images[i] = xj;
                }
            }
        }
        images
    }

    /// Equality in the braid group, decided through the faithful Artin action.
    pub fn braid_eq(&self, other: &BraidWord) -> Result<bool, BraidError> {
        self.check_same_strands(other)?;
        let a = self.free_reduce();
        let b = other.free_reduce();
        if a.letters == b.letters {
            return Ok(true);
        }
        Ok(a.artin_action() == b.artin_action())
    }

    /// Underlying permutation of strand positions (0-based): the strand
    /// starting at position `p` ends at `perm[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = start
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    pub fn occurrences(&self, index: usize) -> usize {
        self.letters.iter().filter(|l| l.index == index).count()
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }
}

pub(crate) fn free_reduce_letters(letters: &[BraidLetter]) -> Vec<BraidLetter> {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

pub(crate) fn cyclic_reduce_letters(letters: &[BraidLetter]) -> Vec<BraidLetter> {
    let reduced = free_reduce_letters(letters);
    let mut lo = 0;
    let mut hi = reduced.len();
    while hi - lo >= 2 && reduced[lo].cancels(reduced[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    reduced[lo..hi].to_vec()
}

/// Start index of the lexicographically least rotation (smallest index on ties).
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let mut best = 0;
    for k in 1..n {
        let cand = s[k..].iter().chain(&s[..k]);
        let cur = s[best..].iter().chain(&s[..best]);
        if cand.lt(cur) {
            best = k;
        }
    }
    best
}

/// `σ_{i,j} = (σ_i ⋯ σ_{j-2}) σ_{j-1}^{±1} (σ_i ⋯ σ_{j-2})⁻¹` in `B_n`.
pub fn band_generator(i: usize, j: usize, sign: Sign, n: usize) -> Result<BraidWord, BraidError> {
    if !(1 <= i && i < j && j <= n) {
        return Err(BraidError::BandIndices { i, j, n });
    }
    let mut letters: Vec<BraidLetter> = (i..j - 1).map(BraidLetter::pos).collect();
    letters.push(BraidLetter::new(j - 1, sign));
    letters.extend((i..j - 1).rev().map(BraidLetter::neg));
    Ok(BraidWord::from_parts(n, letters))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TileDirection {
    /// `σ_i σ_{i+1} ⋯ σ_{j-1}`
    Ascending,
    /// `σ_{j-1} σ_{j-2} ⋯ σ_i`
    Descending,
}

/// Braid contributed by an ab-tile: `(σ_i ⋯ σ_{j-1})^{±1}` or `(σ_{j-1} ⋯ σ_i)^{±1}`.
pub fn ab_tile_word(
    i: usize,
    j: usize,
    sign: Sign,
    direction: TileDirection,
    n: usize,
) -> Result<BraidWord, BraidError> {
    if !(1 <= i && i < j && j <= n) {
        return Err(BraidError::BandIndices { i, j, n });
    }
    let mut letters: Vec<BraidLetter> = match direction {
        TileDirection::Ascending => (i..j).map(BraidLetter::pos).collect(),
        TileDirection::Descending => (i..j).rev().map(BraidLetter::pos).collect(),
    };
    if sign == Sign::Neg {
        letters = letters.iter().rev().map(|l| l.inverse()).collect();
    }
    Ok(BraidWord::from_parts(n, letters))
}

/// `δ = σ_1 σ_2 ⋯ σ_{n-1}`.
pub fn delta(n: usize) -> Result<BraidWord, BraidError> {
    BraidWord::new(n, (1..n).map(BraidLetter::pos).collect())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l.to_signed())?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| BraidError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let rest = t
            .strip_prefix('B')
            .ok_or_else(|| err("expected leading 'B<n>:'"))?;
        let (n, body) = rest.split_once(':').ok_or_else(|| err("missing ':'"))?;
        let strands: usize = n.trim().parse().map_err(|_| err("bad strand count"))?;
        let letters = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| err(&format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if letters.contains(&0) {
            return Err(err("generator 0 does not exist"));
        }
        BraidWord::from_signed(strands, &letters)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Freely reduced word in the free group on `x_1..x_n`; letters are signed
/// generator indices (`-2` is `x_2⁻¹`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord(Vec<i32>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord(Vec::new())
    }

    pub fn generator(g: i32) -> Self {
        FreeGroupWord(vec![g])
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeGroupWord::identity();
        for &l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}
