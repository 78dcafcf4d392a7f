//! Cycle-based synthesis of reversible circuits.
//!
//! A permutation of the `2^n` code words is split into small cycles, each
//! small cycle group is realized by a fixed Toffoli circuit conjugated into
//! place, and the result is checked by exhaustive simulation.

pub mod blocks;
pub mod circuit;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod io;
pub mod perm;
pub mod pipeline;

pub use blocks::BuildingBlockKind;
pub use circuit::{Circuit, CostBlock, Gate};
pub use error::{Error, Result};
pub use perm::{Cycle, CycleList, Distance, Parity, Permutation};
pub use pipeline::{Category, RouterConfig, SynthesisReport};
