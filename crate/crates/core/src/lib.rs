//! Nuclei, division sets and the Goldie nucleus on finite modular lattices.
//!
//! A finite modular lattice is an idiom. This crate enumerates its nuclei,
//! relates each nucleus `j` to the intervals it collapses (`D_j`) and the
//! intervals it leaves free (`F_j`), and builds the Goldie nucleus `ζ`, the
//! Goldman nucleus and quotient idioms on top.
//!
//! ```
//! use idiom::{corpus, AssemblyFrame};
//! use idiom::goldie::goldie_nucleus;
//!
//! let l = corpus::exa1();
//! let frame = AssemblyFrame::new(&l)?;
//! let g = goldie_nucleus(&frame)?;
//! assert_eq!(g.zeta.display(&l).to_string(), "j: 0↦0, S↦S, T↦T, U↦U, I↦R, R↦R");
//! # Ok::<(), idiom::Error>(())
//! ```
//!
//! The guide in `book/` walks through each layer. Its code blocks run as
//! doc-tests of this crate.

pub mod assembly;
pub mod corpus;
mod elements;
pub mod error;
pub mod format;
pub mod goldie;
pub mod interval;
pub mod interval_set;
pub mod lattice;
pub mod nucleus;
pub mod quotient;
pub mod report;
pub mod reproduce;

pub use assembly::{AssemblyFrame, JoinMethod};
pub use error::{Error, Result};
pub use interval::{Interval, IntervalIndex};
pub use interval_set::{Clause, ClauseFailure, IntervalSet, SetFlags};
pub use lattice::{Elem, IdiomReport, Lattice, Violation};
pub use nucleus::{Nucleus, Prenucleus};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    mod intervals {}
    #[doc = include_str!("../../../book/src/interval-sets.md")]
    mod interval_sets {}
    #[doc = include_str!("../../../book/src/nuclei.md")]
    mod nuclei {}
    #[doc = include_str!("../../../book/src/goldie.md")]
    mod goldie {}
    #[doc = include_str!("../../../book/src/quotients.md")]
    mod quotients {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
