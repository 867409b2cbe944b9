//! Closed braids, their polynomial invariants, braid-foliation bookkeeping
//! and exact crossing-number bounds of the form
//! `-χ + b <= c <= f(b)(-χ + b)`.
//!
//! ```
//! use braidknot::{fingerprint, theorem_bounds, BraidWord};
//!
//! let trefoil: BraidWord = "B2: 1 1 1".parse().unwrap();
//! assert_eq!(trefoil.len(), 3);
//! let r = theorem_bounds(-1, 2).unwrap();
//! assert!(r.contains(3));
//! assert_eq!(fingerprint(&trefoil).components, 1);
//! ```

pub mod bounds;
pub mod braid;
pub mod diagram;
pub mod error;
pub mod foliation;
pub mod invariants;
pub mod poly;
pub mod search;
pub mod table;

pub use bounds::{f, theorem_bounds, BoundReport, Rational};
pub use braid::{BraidLetter, BraidWord, Sign};
pub use diagram::{bennequin_chi, closure, seifert, ClosedBraidDiagram, SeifertData};
pub use error::{BoundsError, BraidError, InvariantError, SearchError};
pub use foliation::{bennequin_certificate, CheckReport, FoliationCertificate};
pub use invariants::{alexander, fingerprint, homfly, jones_normalized, kauffman_bracket, Fingerprint};
pub use poly::{LaurentPoly1, LaurentPoly2};
pub use search::{
    census, decide_braid_index_leq, Decision, DecisionResult, EnumerationSpec, DEFAULT_ENUM_CAP,
};
pub use table::{bundled_table, load_table, TableError, TableRow};
