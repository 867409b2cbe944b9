//! Exact crossing-number bounds in terms of Euler characteristic and braid
//! index, and the estimates for composite, satellite and cable knots that
//! follow from them.
//!
//! With `f(2) = 1`, `f(3) = 5/3`, `f(n) = 2n - 5` for `n >= 4`, every link
//! satisfies `-χ + b <= c <= f(b)(-χ + b)`. Everything here is exact
//! rational arithmetic.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::BoundsError;

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn recip(&self) -> Rational {
        Rational(self.0.recip())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn to_json(&self) -> serde_json::Value {
        let part = |b: &BigInt| match b.to_i64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::from(b.to_string()),
        };
        serde_json::json!({ "num": part(self.numer()), "den": part(self.denom()) })
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$tr::$m(&self.0, &rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

pub fn f(n: i64) -> Result<Rational, BoundsError> {
    match n {
        i64::MIN..=1 => Err(BoundsError::BraidIndexTooSmall(n)),
        2 => Ok(Rational::integer(1)),
        3 => Ok(Rational::new(5, 3)),
        _ => Ok(Rational::integer(2 * n - 5)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub formula: &'static str,
    pub chi: i64,
    pub b: i64,
    pub lower: i64,
    pub upper: Rational,
}

impl BoundReport {
    /// Whether `c` lies in `[lower, upper]`.
    pub fn contains(&self, c: i64) -> bool {
        self.lower <= c && Rational::integer(c) <= self.upper
    }
}

/// `-χ + b <= c <= f(b)(-χ + b)`.
pub fn theorem_bounds(chi: i64, b: i64) -> Result<BoundReport, BoundsError> {
    let fb = f(b)?;
    let lower = b - chi;
    if lower <= 0 {
        return Err(BoundsError::NonPositiveComplexity { chi, b });
    }
    Ok(BoundReport {
        formula: "-chi+b <= c <= f(b)(-chi+b)",
        chi,
        b,
        lower,
        upper: &fb * &Rational::integer(lower),
    })
}

/// Lower bounds for `c(K # K')`: the sharper `c1/f(b1) + c2/f(b2)` and the
/// uniform `(c1 + c2)/f(max(b1, b2))`.
pub fn composite_lb(c1: i64, b1: i64, c2: i64, b2: i64) -> Result<(Rational, Rational), BoundsError> {
    let f1 = f(b1)?;
    let f2 = f(b2)?;
    let fmax = f(b1.max(b2))?;
    let sharp = &(&Rational::integer(c1) / &f1) + &(&Rational::integer(c2) / &f2);
    let weak = &Rational::integer(c1 + c2) / &fmax;
    Ok((sharp, weak))
}

/// A knot of braid index `b` is `1/f(b)`-regular.
pub fn regularity(b: i64) -> Result<Rational, BoundsError> {
    Ok(f(b)?.recip())
}

/// Satellite with companion `(c0, b0)` and winding number `w`:
/// `c >= w² c0 / f(b0) - w² b0`. May be negative (vacuous).
pub fn satellite_lb(c0: i64, b0: i64, w: i64) -> Result<Rational, BoundsError> {
    let fb = f(b0)?;
    if w < 0 {
        return Err(BoundsError::NegativeWinding(w));
    }
    let w2 = Rational::integer(w * w);
    let first = &(&w2 * &Rational::integer(c0)) / &fb;
    Ok(&first - &(&w2 * &Rational::integer(b0)))
}

/// Asymptotic crossing number: `ac(K) >= c/f(b) - b`.
pub fn asymptotic_lb(c: i64, b: i64) -> Result<Rational, BoundsError> {
    let fb = f(b)?;
    Ok(&(&Rational::integer(c) / &fb) - &Rational::integer(b))
}

/// Braided `p`-cable: `c(K_p) >= p c / f(b) + (p - 1)`, plus whether
/// `p >= f(b)`, which already forces `c(K_p) >= c(K)`.
pub fn braided_cable_lb(c: i64, b: i64, p: i64) -> Result<(Rational, bool), BoundsError> {
    let fb = f(b)?;
    if p < 1 {
        return Err(BoundsError::CableParameter(p));
    }
    let bound = &(&(&Rational::integer(p) * &Rational::integer(c)) / &fb) + &Rational::integer(p - 1);
    let dominates = Rational::integer(p) >= fb;
    Ok((bound, dominates))
}

/// Any satellite of a companion `(c0, b0)`: `c >= c0 / (76 f(b0))`.
pub fn satellite_combined_lb(c0: i64, b0: i64) -> Result<Rational, BoundsError> {
    let fb = f(b0)?;
    Ok(&Rational::integer(c0) / &(&Rational::integer(76) * &fb))
}
