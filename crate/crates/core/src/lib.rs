//! Combinatorics of skew Young diagrams, rim-hook coverings and weight
//! diagrams, with the decomposition numbers they describe.
//!
//! The modules build on one another: [`partitions`] and [`skew`] provide the
//! shapes, [`procedures`] generates diagram families with the push-down and
//! extend operators, [`arrows`] works with weight diagrams and arrow flips,
//! [`multiplicities`] assembles decomposition matrices, and [`grothendieck`]
//! checks operator relations on class vectors. [`checks`] holds the
//! exhaustive cross-checks between these descriptions, and every sweep runs
//! through [`exec::Exec`].

pub mod arrows;
pub mod checks;
pub mod error;
pub mod exec;
pub mod grothendieck;
pub mod multiplicities;
pub mod partitions;
pub mod procedures;
pub mod skew;
