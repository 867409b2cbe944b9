//! Sparse Laurent polynomials with exact `i64` coefficients.
//!
//! Zero coefficients are never stored, so structural equality is polynomial
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::InvariantError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// `x ↦ x⁻¹`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exact division; the divisor's extreme coefficients must be `±1`
    /// whenever the quotient is not exact in the integers.
    pub fn div_exact(&self, divisor: &LaurentPoly1) -> Result<LaurentPoly1, InvariantError> {
        let (dmin, dmax) = match (divisor.min_degree(), divisor.max_degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(InvariantError::InexactDivision),
        };
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = LaurentPoly1::zero();
        while let Some(rmax) = rem.max_degree() {
            let rc = rem.coeff(rmax);
            if rc % lead != 0 || rmax - dmax < rem.min_degree().unwrap() - dmin {
                return Err(InvariantError::InexactDivision);
            }
            let q = LaurentPoly1::monomial(rc / lead, rmax - dmax);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Ok(quot)
    }

    pub fn to_json(&self, var: &str) -> serde_json::Value {
        let inner: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), serde_json::Value::from(*c)))
            .collect();
        let mut outer = serde_json::Map::new();
        outer.insert(var.to_string(), serde_json::Value::Object(inner));
        serde_json::Value::Object(outer)
    }

    /// Inverse of [`LaurentPoly1::to_json`].
    pub fn from_json(value: &serde_json::Value, var: &str) -> Option<Self> {
        let inner = value.get(var)?.as_object()?;
        let mut p = LaurentPoly1::zero();
        for (k, v) in inner {
            p.add_term(k.parse().ok()?, v.as_i64()?);
        }
        Some(p)
    }

    pub fn display(&self, var: &str) -> String {
        format_terms(self.terms.iter().rev().map(|(&e, &c)| (c, vec![(var, e)])))
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

impl Add for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly1> for LaurentPoly1 {
    fn add_assign(&mut self, rhs: &LaurentPoly1) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = LaurentPoly1::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        self.scale(-1)
    }
}

/// Laurent polynomial in two variables `v`, `z`, keyed by `(v-exp, z-exp)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, v: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(v, z, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (v, z, c) in terms {
            p.add_term(v, z, c);
        }
        p
    }

    pub fn add_term(&mut self, v: i32, z: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((v, z)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&(v, z));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i32, z: i32) -> i64 {
        self.terms.get(&(v, z)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(v, z), &c)| (v, z, c))
    }

    pub fn v_degrees(&self) -> Option<(i32, i32)> {
        let lo = self.terms.keys().map(|k| k.0).min()?;
        let hi = self.terms.keys().map(|k| k.0).max()?;
        Some((lo, hi))
    }

    /// Multiplies by `v^dv z^dz` and the integer `k`.
    pub fn mul_monomial(&self, k: i64, dv: i32, dz: i32) -> Self {
        let mut out = Self::zero();
        for (&(v, z), &c) in &self.terms {
            out.add_term(v + dv, z + dz, c * k);
        }
        out
    }

    /// `v ↦ v⁻¹`.
    pub fn invert_v(&self) -> Self {
        Self::from_terms(self.terms().map(|(v, z, c)| (-v, z, c)))
    }

    /// `z ↦ -z`.
    pub fn negate_z(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(v, z, c)| (v, z, if z % 2 == 0 { c } else { -c })),
        )
    }

    /// Substitutes `v = 1`, leaving a Laurent polynomial in `z`.
    pub fn at_v_one(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self.terms().map(|(_, z, c)| (z, c)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let triples: Vec<[i64; 3]> = self.terms().map(|(v, z, c)| [v as i64, z as i64, c]).collect();
        serde_json::json!({ "vz": triples })
    }

    pub fn display(&self) -> String {
        format_terms(self.terms().map(|(v, z, c)| (c, vec![("v", v), ("z", z)])))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(v, z), &c) in &rhs.terms {
            self.add_term(v, z, c);
        }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(v, z), &c) in &rhs.terms {
            out.add_term(v, z, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(v1, z1), &c1) in &self.terms {
            for (&(v2, z2), &c2) in &rhs.terms {
                out.add_term(v1 + v2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

fn format_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (i64, Vec<(&'a str, i32)>)>,
{
    let mut out = String::new();
    for (c, vars) in terms {
        let mono: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        let mag = c.unsigned_abs();
        let body = match (mono.is_empty(), mag) {
            (true, _) => mag.to_string(),
            (false, 1) => mono.join(" "),
            (false, _) => format!("{mag} {}", mono.join(" ")),
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
