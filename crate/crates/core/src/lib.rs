//! Binary matroids over GF(2) and the splitting operation.
//!
//! A binary matroid is stored as a representation matrix over GF(2) with one
//! labeled column per element. Splitting on a set `X` appends the
//! characteristic row of `X`; on a pair of graph edges it splits the shared
//! vertex. The [`theorems`] module checks published statements about
//! splitting on single instances and exhaustively over small matroids.

pub mod error;
pub mod gf2;
pub mod graphs;
pub mod io;
pub mod matroid;
pub mod report;
pub mod set;
pub mod splitting;
pub mod theorems;

pub use error::{Error, ParseErrorKind, Result};
pub use gf2::{enumerate_space, minimal_supports, GF2Matrix, GF2Vector};
pub use graphs::{split_graph, split_graph_at, MultiGraph};
pub use io::{digest, parse_graph, parse_matroid, write_graph, write_matroid};
pub use matroid::{BinaryMatroid, Limits};
pub use report::{CheckReport, Verdict};
pub use set::ElementSet;
pub use splitting::{split_matroid, split_pair, split_set, SplitMode, SplitResult};
pub use theorems::{CheckOptions, EnumerationSpec, Filter, Statement};
