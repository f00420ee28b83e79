//! Prime graphs, chains, type trees, and the configuration machinery around
//! them: modular-decomposition primality queries, module/chain duality,
//! named-configuration detectors with brute-force oracles, type-tree
//! construction and homogeneous-set extraction, Ramsey-type bound
//! evaluation in exact/log2-scale arithmetic, and a traced witness-search
//! pipeline over all of it.

pub mod chains;
pub mod configs;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod magnitude;
pub mod pipeline;
pub mod ramsey;
pub mod typetree;

pub use error::{Error, Result};
