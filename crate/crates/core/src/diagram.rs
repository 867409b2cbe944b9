//! Closed-braid diagrams and Seifert-circle bookkeeping.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Sign};

/// Closure of a braid word, kept in braid-grid form: crossing `k` sits
/// between strand positions `i` and `i+1` (1-based), in word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedBraidDiagram {
    strands: usize,
    crossings: Vec<(usize, Sign)>,
    components: usize,
}

/// Counts for the surface produced by Seifert's algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub circles: usize,
    pub crossings: usize,
    pub chi: i64,
}

pub fn closure(w: &BraidWord) -> ClosedBraidDiagram {
    ClosedBraidDiagram {
        strands: w.strands(),
        crossings: w.letters().iter().map(|l| (l.index, l.sign)).collect(),
        components: count_cycles(&w.permutation()),
    }
}

impl ClosedBraidDiagram {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[(usize, Sign)] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|(_, s)| s.as_i32() as i64).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let crossings: Vec<(usize, i32)> = self.crossings.iter().map(|&(i, s)| (i, s.as_i32())).collect();
        serde_json::json!({
            "strands": self.strands,
            "crossings": crossings,
            "components": self.components,
        })
    }
}

/// In a closed-braid diagram every Seifert circle is one braid strand.
pub fn seifert(d: &ClosedBraidDiagram) -> SeifertData {
    let circles = d.strands;
    let crossings = d.crossings.len();
    SeifertData {
        circles,
        crossings,
        chi: circles as i64 - crossings as i64,
    }
}

/// Euler characteristic of the Bennequin surface of the freely reduced word,
/// `n - ℓ`. It witnesses `χ(closure) >= n - ℓ`.
pub fn bennequin_chi(w: &BraidWord) -> i64 {
    w.strands() as i64 - w.free_reduce().len() as i64
}

pub(crate) fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, l).unwrap()
    }

    #[test]
    fn closures() {
        let t = closure(&w(2, &[1, 1, 1]));
        assert_eq!((t.crossing_count(), t.component_count()), (3, 1));
        let id = closure(&BraidWord::identity(3).unwrap());
        assert_eq!((id.crossing_count(), id.component_count()), (0, 3));
        let f8 = closure(&w(3, &[1, -2, 1, -2]));
        assert_eq!((f8.crossing_count(), f8.component_count()), (4, 1));
        assert_eq!(closure(&w(2, &[1, 1])).component_count(), 2);
    }

    #[test]
    fn seifert_counts() {
        let s = seifert(&closure(&w(2, &[1, 1, 1])));
        assert_eq!(
            s,
            SeifertData {
                circles: 2,
                crossings: 3,
                chi: -1
            }
        );
        let s = seifert(&closure(&BraidWord::identity(3).unwrap()));
        assert_eq!(
            s,
            SeifertData {
                circles: 3,
                crossings: 0,
                chi: 3
            }
        );
        let s = seifert(&closure(&w(3, &[1, -2, 1, -2])));
        assert_eq!(
            s,
            SeifertData {
                circles: 3,
                crossings: 4,
                chi: -1
            }
        );
    }

    #[test]
    fn bennequin() {
        assert_eq!(bennequin_chi(&w(2, &[1, 1, 1])), -1);
        for q in 0..12i64 {
            let word = w(2, &vec![1; q as usize]);
            assert_eq!(bennequin_chi(&word), 2 - q);
        }
        assert_eq!(bennequin_chi(&w(3, &[1, 2])), 1);
        assert_eq!(bennequin_chi(&w(3, &[1, 2, -2])), 2);
    }

    #[test]
    fn diagram_json() {
        let d = closure(&w(2, &[1, -1, 1]));
        assert_eq!(
            d.to_json(),
            serde_json::json!({"strands": 2, "crossings": [[1, 1], [1, -1], [1, 1]], "components": 1})
        );
    }
}
