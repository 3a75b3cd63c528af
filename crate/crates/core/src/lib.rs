//! Soft (approximate) state reduction of fuzzy finite automata over
//! residuated lattices on `[0, 1]`.
//!
//! ```
//! use fuzzred::{format, reduction::{soft_state_reduction, Bound, ReductionConfig}, Lattice};
//!
//! let a = format::parse_dense("2 1\n1 1\n0.5 0\n0 0.5\n1 1\n")?;
//! let cfg = ReductionConfig::new(0.0, Bound::Infinite, Lattice::Product)?;
//! let report = soft_state_reduction(&a, &cfg)?;
//! assert_eq!(report.states(), 1);
//! # Ok::<(), fuzzred::Error>(())
//! ```

pub mod automaton;
pub mod cli;
pub mod error;
pub mod format;
pub mod fuzzy;
pub mod lattice;
pub mod oracle;
pub mod reduction;
pub mod sweep;

pub use automaton::{Ffa, Word};
pub use error::{Error, Result};
pub use fuzzy::{FuzzyMat, FuzzyVec};
pub use lattice::{Lattice, Value};
pub use reduction::{Bound, ReductionConfig, ReductionReport};
