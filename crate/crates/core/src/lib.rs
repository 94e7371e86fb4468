//! Colouring and Ramsey-type invariants of finite groups given by Cayley
//! tables: commuting probability, monochromatic quadruple counts, the
//! non-commuting Schur number, an explicit quadruple-avoiding cover built
//! from small conjugacy classes, and the corner statistic of subsets of
//! `G x G` with a constructive witness finder.

pub mod bitset;
pub mod catalog;
pub mod colouring;
pub mod corners;
pub mod error;
pub mod group;
pub mod neumann;
pub mod rational;
pub mod stats;
mod textfmt;

pub use bitset::ElementSet;
pub use catalog::{Catalog, GroupSpec};
pub use colouring::Cover;
pub use corners::PairSet;
pub use error::{Error, Result};
pub use group::{GroupTable, Limits};
pub use rational::Rational;
