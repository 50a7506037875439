//! Finite biracks and bikei: construction, axiom verification, and
//! counting invariants of unoriented classical and virtual links.
//!
//! The crate has four parts:
//!
//! * [`birack`] — operation tables, the standard linear and constant action
//!   families, axiom checks, classification, and derived maps (sideways
//!   map, kink map, rank, subbirack closure, column groups);
//! * [`diagram`] — braid words, Gauss codes, presentation files, framing by
//!   kink insertion, and presentation extraction;
//! * [`counting`] — labeling counts by backtracking or modular linear
//!   algebra, the integral counting invariant over all framings, and the
//!   image / writhe / column-group enhancements;
//! * [`search`] — exhaustive enumeration of small birack structures and of
//!   linear birack parameters.

pub mod birack;
pub mod counting;
pub mod diagram;
pub mod perm;
pub mod search;
pub mod zmod;

pub use birack::{
    AxiomReport, BirackError, Check, ClassificationFlags, ColumnGroup, FiniteBirack, TsrParams,
    Witness, COLUMN_GROUP_MAX,
};
pub use counting::{
    count_labelings_backtrack, count_labelings_linear, phi_column_group, phi_image, phi_integral,
    phi_writhe, CountError, CountOptions, CountResult, EnhancementPolynomial, FramingCount,
    Labeling,
};
pub use diagram::{
    parse_braid_word, parse_gauss_code, DiagramError, LinkDiagram, Presentation, Relation,
};
pub use perm::Perm;
pub use search::{enumerate_biracks, search_tsr, SearchError, SearchPredicate, TsrEntry};
