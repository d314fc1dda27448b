//! Construction and brute-force analysis of the graphs `H(n,k)`: vertices are
//! the subsets of `{1, ..., n}`, adjacent when their symmetric difference has
//! exactly `k` elements.

pub mod autsearch;
mod bignum;
pub mod counts;
pub mod error;
pub mod hgraph;
pub mod report;
pub mod subsets;
pub mod symmetries;
pub mod transitivity;

pub use error::{HnkError, Result};
pub use hgraph::{build_graph, Component, GraphParams, HGraph};
pub use subsets::SubsetId;
