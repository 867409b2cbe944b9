//! Knot tables: CSV rows `name,word,chi,braid_index,crossing_number` and
//! the consistency checks run against them.

use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{theorem_bounds, BoundReport};
use crate::braid::BraidWord;
use crate::diagram::{bennequin_chi, closure};
use crate::invariants::{alexander, alexander_genus_lb, homfly, mfw_lower_bound};

/// The table shipped with the crate.
pub const BUNDLED_TABLE: &str = include_str!("../data/knot_table.csv");

#[derive(Debug, Error)]
pub enum TableError {
    #[error("row {row}: {source}")]
    Csv {
        row: usize,
        #[source]
        source: csv::Error,
    },
    #[error("row {row}, column {column}: {reason}")]
    Field {
        row: usize,
        column: &'static str,
        reason: String,
    },
    #[error("row {row} ({name}): {}", failures.join("; "))]
    Invalid {
        row: usize,
        name: String,
        failures: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
struct RawRow {
    name: String,
    word: String,
    chi: i64,
    braid_index: i64,
    crossing_number: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// 1-based data row (the header is row 0).
    pub row: usize,
    pub name: String,
    pub word: BraidWord,
    pub chi: i64,
    pub braid_index: i64,
    pub crossing_number: i64,
}

pub fn parse_table<R: Read>(reader: R) -> Result<Vec<TableRow>, TableError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut rows = Vec::new();
    for (i, rec) in rdr.deserialize::<RawRow>().enumerate() {
        let row = i + 1;
        let raw = rec.map_err(|source| TableError::Csv { row, source })?;
        let word: BraidWord = raw
            .word
            .parse()
            .map_err(|e: crate::error::BraidError| TableError::Field {
                row,
                column: "word",
                reason: e.to_string(),
            })?;
        rows.push(TableRow {
            row,
            name: raw.name,
            word,
            chi: raw.chi,
            braid_index: raw.braid_index,
            crossing_number: raw.crossing_number,
        });
    }
    Ok(rows)
}

/// Parses and validates; the first row failing [`validate_row`] is an error.
pub fn load_table<R: Read>(reader: R) -> Result<Vec<TableRow>, TableError> {
    let rows = parse_table(reader)?;
    for r in &rows {
        let rep = validate_row(r);
        if !rep.passed() {
            return Err(TableError::Invalid {
                row: r.row,
                name: r.name.clone(),
                failures: rep.failures,
            });
        }
    }
    Ok(rows)
}

pub fn bundled_table() -> Vec<TableRow> {
    load_table(BUNDLED_TABLE.as_bytes()).expect("bundled table is valid")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub name: String,
    pub row: usize,
    pub bounds: Option<BoundReport>,
    pub failures: Vec<String>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one row: the word lives on `braid_index` strands and closes to a
/// knot, the crossing number sits inside the theorem's bounds and below the
/// word length, the MFW bound does not exceed the braid index, and `chi` is
/// compatible with the Bennequin surface and the Alexander genus bound.
pub fn validate_row(r: &TableRow) -> RowReport {
    let mut failures = Vec::new();
    let w = &r.word;
    let components = closure(w).component_count();

    if w.strands() as i64 != r.braid_index {
        failures.push(format!(
            "braid_index: word has {} strands, table says {}",
            w.strands(),
            r.braid_index
        ));
    }
    if components != 1 {
        failures.push(format!(
            "word: closure has {components} components, expected a knot"
        ));
    }
    if (w.len() as i64) < r.crossing_number {
        failures.push(format!(
            "crossing_number: {} exceeds the word length {}",
            r.crossing_number,
            w.len()
        ));
    }

    let bounds = match theorem_bounds(r.chi, r.braid_index) {
        Ok(b) => {
            if !b.contains(r.crossing_number) {
                failures.push(format!(
                    "crossing_number: {} outside [{}, {}]",
                    r.crossing_number, b.lower, b.upper
                ));
            }
            Some(b)
        }
        Err(e) => {
            failures.push(format!("chi/braid_index: {e}"));
            None
        }
    };

    if components == 1 && w.strands() >= 2 {
        match mfw_lower_bound(&homfly(w)) {
            Ok(m) if m > r.braid_index => {
                failures.push(format!("braid_index: MFW bound {m} exceeds {}", r.braid_index))
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("word: {e}")),
        }
        let bchi = bennequin_chi(w);
        if r.chi < bchi {
            failures.push(format!("chi: {} below the Bennequin surface's {bchi}", r.chi));
        }
        if r.chi > 1 || (1 - r.chi) % 2 != 0 {
            failures.push(format!("chi: {} is not 1 - 2g for a knot", r.chi));
        } else {
            match alexander(w) {
                Ok(delta) => {
                    let lb = alexander_genus_lb(&delta);
                    if lb > (1 - r.chi) / 2 {
                        failures.push(format!(
                            "chi: genus {} below the Alexander bound {lb}",
                            (1 - r.chi) / 2
                        ));
                    }
                }
                Err(e) => failures.push(format!("word: {e}")),
            }
        }
    }

    RowReport {
        name: r.name.clone(),
        row: r.row,
        bounds,
        failures,
    }
}

pub fn validate_table(rows: &[TableRow]) -> Vec<RowReport> {
    rows.iter().map(validate_row).collect()
}
