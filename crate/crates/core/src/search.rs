//! Exhaustive enumeration of closed-braid diagrams under a crossing budget,
//! the braid-index decision procedure built on it, and the genus/braid-index
//! census.
//!
//! Recognition is by [`Fingerprint`]: a mismatch is a proof that two
//! closures differ, a match is not a proof that they agree. So `CertifiedNo`
//! answers are rigorous (given a correct Euler characteristic for the
//! target), while `CandidateFound` answers are heuristic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{f, Rational};
use crate::braid::{BraidLetter, BraidWord, Sign};
use crate::diagram::count_cycles;
use crate::error::SearchError;
use crate::invariants::{
    alexander, alexander_genus_lb, fingerprint, homfly, jones_normalized, mfw_lower_bound, Fingerprint,
};

/// Refuse enumerations whose raw word count exceeds this unless overridden.
pub const DEFAULT_ENUM_CAP: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationSpec {
    pub strands: usize,
    pub max_length: usize,
    pub knot_only: bool,
}

impl EnumerationSpec {
    pub fn new(strands: usize, max_length: usize, knot_only: bool) -> Self {
        EnumerationSpec {
            strands,
            max_length,
            knot_only,
        }
    }

    /// Number of unreduced words of length `<= max_length`.
    pub fn raw_word_count(&self) -> u128 {
        let k = 2 * self.strands.saturating_sub(1) as u128;
        let mut total: u128 = 0;
        let mut term: u128 = 1;
        for _ in 0..=self.max_length {
            total = total.saturating_add(term);
            term = term.saturating_mul(k);
        }
        total
    }

    pub fn check_cap(&self, cap: u128) -> Result<(), SearchError> {
        let requested = self.raw_word_count();
        if requested > cap {
            return Err(SearchError::BudgetExceeded { requested, cap });
        }
        Ok(())
    }

    fn alphabet(&self) -> Vec<BraidLetter> {
        (1..self.strands)
            .flat_map(|i| [BraidLetter::new(i, Sign::Pos), BraidLetter::new(i, Sign::Neg)])
            .collect()
    }
}

/// One unit of work: either the single word `prefix`, or every emitted word
/// extending it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub prefix: Vec<BraidLetter>,
    pub extend: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    /// Freely reduced candidate words examined.
    pub visited: u64,
    /// Canonical words emitted.
    pub emitted: u64,
}

impl std::ops::AddAssign for EnumerationStats {
    fn add_assign(&mut self, rhs: Self) {
        self.visited += rhs.visited;
        self.emitted += rhs.emitted;
    }
}

/// Depth-first stream of canonical words: cyclically reduced and least
/// among their rotations. Every closure of a word of length `<= max_length`
/// is the closure of at least one emitted word; dedup is by rotation only.
/// Words come out in lexicographic order.
pub struct WordEnumerator {
    spec: EnumerationSpec,
    alphabet: Vec<BraidLetter>,
    // (word so far, next alphabet index to try as extension)
    stack: Vec<(Vec<BraidLetter>, usize, bool)>,
    // partition holds a single word, no extensions
    single: bool,
    stats: EnumerationStats,
}

impl WordEnumerator {
    pub fn new(spec: EnumerationSpec) -> Self {
        Self::for_partition(
            spec,
            &Partition {
                prefix: Vec::new(),
                extend: true,
            },
        )
    }

    pub fn for_partition(spec: EnumerationSpec, part: &Partition) -> Self {
        let fits = part.prefix.len() <= spec.max_length && spec.strands >= 1;
        WordEnumerator {
            alphabet: spec.alphabet(),
            spec,
            stack: if fits {
                vec![(part.prefix.clone(), 0, false)]
            } else {
                Vec::new()
            },
            single: !part.extend,
            stats: EnumerationStats::default(),
        }
    }

    pub fn stats(&self) -> EnumerationStats {
        self.stats
    }

    fn accepts(&self, letters: &[BraidLetter]) -> bool {
        if letters.len() > 1 && letters[0].cancels(*letters.last().unwrap()) {
            return false;
        }
        if !is_least_rotation(letters) {
            return false;
        }
        if self.spec.knot_only {
            let w = BraidWord::from_parts(self.spec.strands, letters.to_vec());
            return count_cycles(&w.permutation()) == 1;
        }
        true
    }
}

impl Iterator for WordEnumerator {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        while let Some(top) = self.stack.last_mut() {
            let (letters, next_idx, examined) = (top.0.clone(), top.1, top.2);
            if !examined {
                top.2 = true;
                self.stats.visited += 1;
                if self.accepts(&letters) {
                    self.stats.emitted += 1;
                    if self.single {
                        self.stack.clear();
                    }
                    return Some(BraidWord::from_parts(self.spec.strands, letters));
                }
                if self.single {
                    self.stack.clear();
                    return None;
                }
                continue;
            }
            if letters.len() >= self.spec.max_length || next_idx >= self.alphabet.len() {
                self.stack.pop();
                continue;
            }
            top.1 += 1;
            let l = self.alphabet[next_idx];
            if let Some(&last) = letters.last() {
                if last.cancels(l) {
                    continue;
                }
            }
            // a least rotation starts with its smallest letter
            if let Some(&first) = letters.first() {
                if l < first {
                    continue;
                }
            }
            let mut child = letters;
            child.push(l);
            self.stack.push((child, 0, false));
        }
        None
    }
}

fn is_least_rotation(letters: &[BraidLetter]) -> bool {
    let n = letters.len();
    (1..n).all(|k| {
        let rot = letters[k..].iter().chain(&letters[..k]);
        !rot.lt(letters.iter())
    })
}

pub fn enumerate_words(spec: EnumerationSpec) -> WordEnumerator {
    WordEnumerator::new(spec)
}

/// Splits the enumeration tree at `depth`: nodes shallower than `depth`
/// become single-word partitions, nodes at `depth` become subtrees. The
/// partitions are listed in lexicographic order of their prefixes.
pub fn partitions(spec: EnumerationSpec, depth: usize) -> Vec<Partition> {
    let alphabet = spec.alphabet();
    let mut out = Vec::new();
    // preorder, so the output is sorted
    fn walk(
        prefix: &mut Vec<BraidLetter>,
        depth: usize,
        spec: &EnumerationSpec,
        alphabet: &[BraidLetter],
        out: &mut Vec<Partition>,
    ) {
        if prefix.len() == depth || prefix.len() == spec.max_length {
            out.push(Partition {
                prefix: prefix.clone(),
                extend: true,
            });
            return;
        }
        out.push(Partition {
            prefix: prefix.clone(),
            extend: false,
        });
        for &l in alphabet {
            if prefix.last().is_some_and(|p| p.cancels(l)) || prefix.first().is_some_and(|&f| l < f) {
                continue;
            }
            prefix.push(l);
            walk(prefix, depth, spec, alphabet, out);
            prefix.pop();
        }
    }
    walk(&mut Vec::new(), depth, &spec, &alphabet, &mut out);
    out
}

/// Same output as [`enumerate_words`], computed over partitions in parallel
/// and merged back into lexicographic order.
pub fn enumerate_words_parallel(spec: EnumerationSpec, depth: usize) -> (Vec<BraidWord>, EnumerationStats) {
    let parts = partitions(spec, depth);
    let chunks: Vec<(Vec<BraidWord>, EnumerationStats)> = parts
        .par_iter()
        .map(|p| {
            let mut it = WordEnumerator::for_partition(spec, p);
            let words: Vec<BraidWord> = it.by_ref().collect();
            (words, it.stats())
        })
        .collect();
    let mut stats = EnumerationStats::default();
    let mut words = Vec::new();
    for (w, s) in chunks {
        words.extend(w);
        stats += s;
    }
    words.sort();
    (words, stats)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Decision {
    /// No closure within budget matches, so `b(L) > n`.
    CertifiedNo,
    /// Some closure has the target's fingerprint (heuristic).
    CandidateFound { witness: BraidWord },
    /// The target has the unknot's fingerprint; `b = 1`.
    UnknotSpecial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub strands: usize,
    pub budget: usize,
    pub raw_words: String,
    pub visited: u64,
    pub emitted: u64,
    pub fingerprinted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionResult {
    pub decision: Decision,
    pub chi: i64,
    pub n: usize,
    pub levels: Vec<LevelStats>,
}

/// Crossing budget `floor(f(b)(-χ + b))` for closed `b`-braids, or `None`
/// when `-χ + b <= 0`.
pub fn crossing_budget(chi: i64, b: usize) -> Result<Option<usize>, SearchError> {
    let complexity = b as i64 - chi;
    if complexity <= 0 {
        return Ok(None);
    }
    let fb = f(b as i64)?;
    let budget = (&fb * &Rational::integer(complexity)).floor();
    Ok(Some(budget.try_into().map_err(|_| {
        SearchError::InvalidInput("budget overflow".into())
    })?))
}

/// Does the target have a closed-braid representative on at most `n`
/// strands? `chi` must be the target's maximal Euler characteristic.
pub fn decide_braid_index_leq(
    target: &Fingerprint,
    chi: i64,
    n: usize,
    cap: u128,
) -> Result<DecisionResult, SearchError> {
    if n == 0 {
        return Err(SearchError::InvalidInput("n must be at least 1".into()));
    }
    if target.components == 0 {
        return Err(SearchError::InvalidInput("fingerprint has no components".into()));
    }
    if chi > target.components as i64 {
        return Err(SearchError::InvalidInput(format!(
            "chi = {chi} exceeds the component count {}",
            target.components
        )));
    }
    let mut result = DecisionResult {
        decision: Decision::CertifiedNo,
        chi,
        n,
        levels: Vec::new(),
    };
    if target.is_unknot() {
        result.decision = Decision::UnknotSpecial;
        return Ok(result);
    }

    for b in 2..=n {
        let Some(budget) = crossing_budget(chi, b)? else {
            continue;
        };
        let spec = EnumerationSpec::new(b, budget, target.components == 1);
        spec.check_cap(cap)?;
        let parts = partitions(spec, 2);
        let per_part: Vec<(Option<BraidWord>, EnumerationStats, u64)> = parts
            .par_iter()
            .map(|p| {
                let mut it = WordEnumerator::for_partition(spec, p);
                let mut hit = None;
                let mut fingerprinted = 0;
                for w in it.by_ref() {
                    if matches_target(&w, target, &mut fingerprinted) {
                        hit = Some(w);
                        break;
                    }
                }
                (hit, it.stats(), fingerprinted)
            })
            .collect();
        let mut level = LevelStats {
            strands: b,
            budget,
            raw_words: spec.raw_word_count().to_string(),
            visited: 0,
            emitted: 0,
            fingerprinted: 0,
        };
        let mut witness = None;
        for (hit, stats, fp) in per_part {
            level.visited += stats.visited;
            level.emitted += stats.emitted;
            level.fingerprinted += fp;
            if witness.is_none() {
                witness = hit;
            }
        }
        result.levels.push(level);
        if let Some(w) = witness {
            result.decision = Decision::CandidateFound { witness: w };
            return Ok(result);
        }
    }
    Ok(result)
}

fn matches_target(w: &BraidWord, target: &Fingerprint, counter: &mut u64) -> bool {
    if count_cycles(&w.permutation()) != target.components {
        return false;
    }
    *counter += 1;
    if jones_normalized(w) != target.jones {
        return false;
    }
    match &target.alexander {
        Some(a) => alexander(w).map(|x| &x == a).unwrap_or(false),
        None => true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub fingerprint: Fingerprint,
    pub witness: BraidWord,
    pub certified_genus: Option<i64>,
    pub certified_braid_index: Option<i64>,
    /// Alexander-degree lower bound and Bennequin-surface upper bound.
    pub genus_bounds: (i64, i64),
    pub mfw_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub genus: i64,
    pub strands: usize,
    pub budget: usize,
    pub stats: EnumerationStats,
    pub certified: Vec<CensusEntry>,
    pub residue: Vec<CensusEntry>,
}

/// Knots of genus `g` and braid index `n` found among closed `n`-braids of
/// length `<= floor(f(n)(2g - 1 + n))`. An entry is certified when the
/// Alexander genus bound meets the Bennequin genus of some word in its
/// class, and the MFW bound reaches `n`. Classes whose values are not
/// certified but might equal `(g, n)` land in the residue.
pub fn census(g: i64, n: usize, cap: u128) -> Result<CensusReport, SearchError> {
    if g < 0 || n == 0 {
        return Err(SearchError::InvalidInput(format!(
            "need g >= 0 and n >= 1, got g={g}, n={n}"
        )));
    }
    if n == 1 {
        let unknot = BraidWord::identity(1).expect("B1 exists");
        let certified = if g == 0 {
            vec![CensusEntry {
                fingerprint: fingerprint(&unknot),
                witness: unknot,
                certified_genus: Some(0),
                certified_braid_index: Some(1),
                genus_bounds: (0, 0),
                mfw_bound: 1,
            }]
        } else {
            Vec::new()
        };
        return Ok(CensusReport {
            genus: g,
            strands: 1,
            budget: 0,
            stats: EnumerationStats {
                visited: 1,
                emitted: 1,
            },
            certified,
            residue: Vec::new(),
        });
    }

    let chi = 1 - 2 * g;
    let budget = crossing_budget(chi, n)?.expect("2g - 1 + n > 0 for n >= 2");
    let spec = EnumerationSpec::new(n, budget, true);
    spec.check_cap(cap)?;
    let (words, stats) = enumerate_words_parallel(spec, 2);

    let fps: Vec<Fingerprint> = words.par_iter().map(fingerprint).collect();
    struct Class {
        fingerprint: Fingerprint,
        witness: BraidWord,
        min_len: usize,
    }
    let mut classes: BTreeMap<String, Class> = BTreeMap::new();
    for (w, fp) in words.into_iter().zip(fps) {
        let key = fp.sort_key();
        match classes.get_mut(&key) {
            Some(c) => {
                if (w.len(), &w) < (c.witness.len(), &c.witness) {
                    c.witness = w.clone();
                }
                c.min_len = c.min_len.min(w.len());
            }
            None => {
                classes.insert(
                    key,
                    Class {
                        fingerprint: fp,
                        min_len: w.len(),
                        witness: w,
                    },
                );
            }
        }
    }

    let entries: Vec<CensusEntry> = classes
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|c| {
            let delta = c.fingerprint.alexander.as_ref().expect("knot classes carry Δ");
            let lb = alexander_genus_lb(delta);
            // χ = n - ℓ for the Bennequin surface, genus (1 - χ)/2
            let ub = (1 - (n as i64 - c.min_len as i64)) / 2;
            let mfw = mfw_lower_bound(&homfly(&c.witness)).expect("HOMFLY of a knot is nonzero");
            CensusEntry {
                certified_genus: (lb == ub).then_some(lb),
                certified_braid_index: (mfw == n as i64).then_some(mfw),
                genus_bounds: (lb, ub),
                mfw_bound: mfw,
                fingerprint: c.fingerprint,
                witness: c.witness,
            }
        })
        .collect();

    let mut certified = Vec::new();
    let mut residue = Vec::new();
    for e in entries {
        let genus_possible = e.genus_bounds.0 <= g && g <= e.genus_bounds.1;
        match (e.certified_genus, e.certified_braid_index) {
            (Some(gg), Some(_)) if gg == g => certified.push(e),
            // a certified genus other than g rules the class out
            _ if genus_possible => residue.push(e),
            _ => {}
        }
    }
    certified.sort_by_key(|e| e.fingerprint.sort_key());
    residue.sort_by_key(|e| e.fingerprint.sort_key());
    Ok(CensusReport {
        genus: g,
        strands: n,
        budget,
        stats,
        certified,
        residue,
    })
}
