//! Integer additive set-labelings (IASL) and set-indexers (IASI) of finite
//! simple graphs.
//!
//! A set-labeling assigns every vertex a finite non-empty set of non-negative
//! integers; each edge `uv` inherits the sum set `f(u) + f(v)`. The crate
//! provides exact sum-set arithmetic ([`intset`]), a small graph library with
//! the operations the labeling results quantify over ([`graph`]),
//! classification of labelings ([`labeling`]), deterministic constructions
//! ([`construct`]), bounded exhaustive search ([`search`]), and an oracle that
//! checks the characterization results on finite corpora ([`oracle`]).

pub mod cli;
pub mod construct;
pub mod graph;
pub mod intset;
pub mod labeling;
pub mod oracle;
pub mod search;

pub use graph::{Edge, Graph};
pub use intset::IntegerSet;
pub use labeling::{ClassificationReport, SetLabeling};
