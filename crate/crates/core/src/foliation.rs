//! Counting identities for braid foliations of Seifert surfaces.
//!
//! A [`FoliationCertificate`] records the census of a foliation: how many
//! elliptic points of each type `(α, β)` there are (a vertex of type
//! `(α, β)` bounds `α` a-arc 1-cells and `β` b-arc 1-cells), split by sign,
//! together with the tile counts. The checks evaluate the counting
//! identities on those numbers. They do not decide whether the certificate
//! comes from an actual surface.

use std::collections::BTreeMap;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::bounds::Rational;
use crate::braid::BraidWord;
use crate::error::BoundsError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FoliationCertificate {
    pub braid_index: i64,
    pub chi: i64,
    /// `V⁺(α, β)`.
    pub v_plus: BTreeMap<(u32, u32), u64>,
    /// `V⁻(0, β)`; negative elliptic points never bound a-arcs.
    pub v_minus: BTreeMap<u32, u64>,
    pub r_aa: u64,
    pub r_ab: u64,
    pub r_bb: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub lhs: i64,
    pub rhs: i64,
    /// Second identity when the check covers two (tile/vertex counts).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub secondary: Option<(i64, i64)>,
}

impl CheckReport {
    fn equality(name: &str, lhs: i64, rhs: i64) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: lhs == rhs,
            lhs,
            rhs,
            secondary: None,
        }
    }

    /// `lhs - rhs` of the failing identity, zero when everything passes.
    pub fn delta(&self) -> i64 {
        if self.lhs != self.rhs {
            return self.lhs - self.rhs;
        }
        self.secondary.map(|(a, b)| a - b).unwrap_or(0)
    }
}

impl FoliationCertificate {
    /// `V(α, β)`: all vertices of that type regardless of sign.
    pub fn v(&self, alpha: u32, beta: u32) -> i64 {
        let mut total = self.v_plus.get(&(alpha, beta)).copied().unwrap_or(0);
        if alpha == 0 {
            total += self.v_minus.get(&beta).copied().unwrap_or(0);
        }
        total as i64
    }

    fn all_types(&self) -> Vec<(u32, u32)> {
        let mut types: Vec<(u32, u32)> = self.v_plus.keys().copied().collect();
        types.extend(self.v_minus.keys().map(|&b| (0, b)));
        types.sort_unstable();
        types.dedup();
        types
    }

    /// `2V(1,0) + 2V(0,2) + V(0,3) + V(1,1) - 4χ
    ///   = V(2,1) + 2V(3,0) + Σ_{v≥4} Σ_α (v+α-4) V(α, v-α)`,
    /// evaluated exactly as displayed.
    pub fn check_euler_equality(&self) -> CheckReport {
        let lhs = 2 * self.v(1, 0) + 2 * self.v(0, 2) + self.v(0, 3) + self.v(1, 1) - 4 * self.chi;
        let mut rhs = self.v(2, 1) + 2 * self.v(3, 0);
        for (a, b) in self.all_types() {
            let valence = (a + b) as i64;
            if valence >= 4 {
                rhs += (valence + a as i64 - 4) * self.v(a, b);
            }
        }
        CheckReport::equality("euler", lhs, rhs)
    }

    /// `b = Σ V⁺ - Σ V⁻`.
    pub fn check_axis_count(&self) -> CheckReport {
        let plus: u64 = self.v_plus.values().sum();
        let minus: u64 = self.v_minus.values().sum();
        CheckReport::equality("axis", self.braid_index, plus as i64 - minus as i64)
    }

    /// `2R_aa + 2R_ab + 2R_bb = Σ v V⁺` and `R_ab + 2R_bb = Σ v V⁻`.
    pub fn check_tile_vertex(&self) -> CheckReport {
        let plus: i64 = self
            .v_plus
            .iter()
            .map(|(&(a, b), &c)| (a + b) as i64 * c as i64)
            .sum();
        let minus: i64 = self.v_minus.iter().map(|(&b, &c)| b as i64 * c as i64).sum();
        let lhs = 2 * (self.r_aa + self.r_ab + self.r_bb) as i64;
        let lhs2 = (self.r_ab + 2 * self.r_bb) as i64;
        CheckReport {
            name: "tile-vertex".into(),
            passed: lhs == plus && lhs2 == minus,
            lhs,
            rhs: plus,
            secondary: Some((lhs2, minus)),
        }
    }

    /// `2R_aa + R_ab = Σ α V(α, β)`: a-arc 1-cells counted from tiles and
    /// from vertices.
    pub fn check_edge_count(&self) -> CheckReport {
        let lhs = (2 * self.r_aa + self.r_ab) as i64;
        let rhs: i64 = self.v_plus.iter().map(|(&(a, _), &c)| a as i64 * c as i64).sum();
        CheckReport::equality("edge", lhs, rhs)
    }

    /// No vertices of type (1,0), (0,2), (0,3) or (1,1).
    pub fn check_bm_reduced(&self) -> bool {
        [(1, 0), (0, 2), (0, 3), (1, 1)]
            .iter()
            .all(|&(a, b)| self.v(a, b) == 0)
    }

    /// `2R_aa + R_ab <= -2χ + 2b`; `None` unless the certificate is reduced.
    pub fn check_main_inequality(&self) -> Option<CheckReport> {
        if !self.check_bm_reduced() {
            return None;
        }
        let lhs = (2 * self.r_aa + self.r_ab) as i64;
        let rhs = -2 * self.chi + 2 * self.braid_index;
        Some(CheckReport {
            name: "main-inequality".into(),
            passed: lhs <= rhs,
            lhs,
            rhs,
            secondary: None,
        })
    }

    /// Every check that applies, in a fixed order.
    pub fn check_all(&self) -> Vec<CheckReport> {
        let mut out = vec![
            self.check_euler_equality(),
            self.check_axis_count(),
            self.check_tile_vertex(),
            self.check_edge_count(),
        ];
        out.extend(self.check_main_inequality());
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let v_plus: Vec<[u64; 3]> = self
            .v_plus
            .iter()
            .map(|(&(a, b), &c)| [a as u64, b as u64, c])
            .collect();
        let v_minus: Vec<[u64; 2]> = self.v_minus.iter().map(|(&b, &c)| [b as u64, c]).collect();
        serde_json::json!({
            "b": self.braid_index,
            "chi": self.chi,
            "v_plus": v_plus,
            "v_minus": v_minus,
            "r": [self.r_aa, self.r_ab, self.r_bb],
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        #[derive(Deserialize)]
        struct Raw {
            b: i64,
            chi: i64,
            #[serde(default)]
            v_plus: Vec<[u64; 3]>,
            #[serde(default)]
            v_minus: Vec<[u64; 2]>,
            #[serde(default)]
            r: [u64; 3],
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        let mut cert = FoliationCertificate {
            braid_index: raw.b,
            chi: raw.chi,
            r_aa: raw.r[0],
            r_ab: raw.r[1],
            r_bb: raw.r[2],
            ..Default::default()
        };
        for [a, b, c] in raw.v_plus {
            *cert.v_plus.entry((a as u32, b as u32)).or_insert(0) += c;
        }
        for [b, c] in raw.v_minus {
            *cert.v_minus.entry(b as u32).or_insert(0) += c;
        }
        Ok(cert)
    }
}

/// Census of the Bennequin surface of `w` (Seifert's algorithm on the
/// closed-braid diagram): each strand is a positive elliptic point bounding
/// one a-arc per adjacent crossing, and each crossing is an aa-tile.
pub fn bennequin_certificate(w: &BraidWord) -> FoliationCertificate {
    let n = w.strands();
    let mut valence = vec![0u32; n + 1];
    for l in w.letters() {
        valence[l.index] += 1;
        valence[l.index + 1] += 1;
    }
    let mut v_plus = BTreeMap::new();
    for &a in &valence[1..] {
        *v_plus.entry((a, 0)).or_insert(0) += 1;
    }
    FoliationCertificate {
        braid_index: n as i64,
        chi: n as i64 - w.len() as i64,
        v_plus,
        v_minus: BTreeMap::new(),
        r_aa: w.len() as u64,
        r_ab: 0,
        r_bb: 0,
    }
}

/// Crossing bound carried by the tiles of a foliation on an `n`-braid.
///
/// Without ab-tiles: `R_aa` for `n = 2`, `5/3 R_aa` for `n = 3` and
/// `(2n-5) R_aa` for `n >= 4`. With ab-tiles: `(2n-5) R_aa + (n-3) R_ab`.
pub fn crossing_bound_from_tiles(n: i64, r_aa: u64, r_ab: u64) -> Result<Rational, BoundsError> {
    if n < 2 {
        return Err(BoundsError::BraidIndexTooSmall(n));
    }
    let aa = BigRational::from_integer(BigInt::from(r_aa));
    let ab = BigRational::from_integer(BigInt::from(r_ab));
    let int = |k: i64| BigRational::from_integer(BigInt::from(k));
    let value = if r_ab == 0 {
        match n {
            2 => aa,
            3 => BigRational::new(BigInt::from(5), BigInt::from(3)) * aa,
            _ => int(2 * n - 5) * aa,
        }
    } else {
        if n == 2 {
            return Err(BoundsError::AbTilesOnTwoBraid(r_ab));
        }
        int(2 * n - 5) * aa + int(n - 3) * ab
    };
    Ok(Rational::from(value))
}
