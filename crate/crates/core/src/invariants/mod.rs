//! Polynomial invariants of braid closures and the fingerprint built from
//! them.
//!
//! A [`Fingerprint`] is a link invariant: two words whose fingerprints differ
//! have non-isotopic closures. Equal fingerprints do not prove isotopy.

mod bracket;
mod burau;
mod homfly;

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use bracket::{kauffman_bracket, loop_value};
pub use burau::{alexander, alexander_genus_lb, burau_reduced, normalize_alexander, PolyMatrix};
pub use homfly::{homfly, mfw_lower_bound, HomflyMemo};

use crate::braid::BraidWord;
use crate::diagram::closure;
use crate::poly::LaurentPoly1;

/// `(-A)^{-3w} ⟨closure⟩` with `w` the exponent sum: the Jones polynomial in
/// the variable `A` (`t = A⁻⁴`).
pub fn jones_normalized(w: &BraidWord) -> LaurentPoly1 {
    let bracket = kauffman_bracket(&closure(w));
    let writhe = w.exponent_sum();
    let e = -3 * writhe;
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    bracket.shift(e as i32).scale(sign)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub jones: LaurentPoly1,
    /// Present only for knots.
    pub alexander: Option<LaurentPoly1>,
    pub components: usize,
}

pub fn fingerprint(w: &BraidWord) -> Fingerprint {
    let components = closure(w).component_count();
    let alexander = if components == 1 {
        Some(alexander(w).expect("knot closures always have an Alexander polynomial"))
    } else {
        None
    };
    Fingerprint {
        jones: jones_normalized(w),
        alexander,
        components,
    }
}

impl Fingerprint {
    pub fn unknot() -> Fingerprint {
        Fingerprint {
            jones: LaurentPoly1::one(),
            alexander: Some(LaurentPoly1::one()),
            components: 1,
        }
    }

    pub fn is_unknot(&self) -> bool {
        *self == Fingerprint::unknot()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "jones": self.jones.to_json("A"),
            "alexander": self.alexander.as_ref().map(|a| a.to_json("t")),
            "components": self.components,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Fingerprint> {
        let jones = LaurentPoly1::from_json(v.get("jones")?, "A")?;
        let alexander = match v.get("alexander") {
            None | Some(serde_json::Value::Null) => None,
            Some(a) => Some(LaurentPoly1::from_json(a, "t")?),
        };
        let components = v.get("components")?.as_u64()? as usize;
        Some(Fingerprint {
            jones,
            alexander,
            components,
        })
    }

    /// Serialized form used as a stable sort key.
    pub fn sort_key(&self) -> String {
        self.to_json().to_string()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V(A) = {}", self.jones.display("A"))?;
        if let Some(a) = &self.alexander {
            write!(f, "; Δ(t) = {}", a.display("t"))?;
        }
        write!(f, "; components = {}", self.components)
    }
}

impl Serialize for Fingerprint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fingerprint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Fingerprint::from_json(&v).ok_or_else(|| D::Error::custom("malformed fingerprint"))
    }
}
