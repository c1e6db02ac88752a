//! Free categories with finite sums and products, presented by cut-free
//! proof terms.
//!
//! * [`types`] and [`terms`]: objects, terms and the typing judgment.
//! * [`syntax`] and [`program`]: the text format.
//! * [`compose`]: composition by cut elimination.
//! * [`annotate`] and [`factor`]: pointedness analysis and factoring
//!   through injections and projections.
//! * [`decide`]: the equality decision procedure for generator-free terms.
//! * [`oracle`]: exhaustive enumeration and rewriting, the ground truth.
//! * [`bench`]: a benchmark family for the decision procedure.

pub mod annotate;
pub mod bench;
pub mod compose;
pub mod decide;
pub mod error;
pub mod factor;
pub mod graph;
pub mod oracle;
pub mod program;
pub mod syntax;
pub mod terms;
pub mod types;

pub use annotate::{annotate, AnnotatedTerm, Annotation, Arena, NodeId};
pub use compose::{compose, eliminate, identity};
pub use decide::{decide_with_stats, equal, Decider, Reason, Verdict, Witness};
pub use error::{ComposeError, GraphError, LoadError, OracleError, SyntaxError, TypingError};
pub use graph::GeneratorGraph;
pub use oracle::{EqClass, Oracle};
pub use program::{load, Program};
pub use syntax::{parse_raw, parse_term, parse_type};
pub use terms::{Arrow, RawTerm, Side, Term};
pub use types::Ty;
