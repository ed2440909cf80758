//! Graph saturation toolkit: exact subgraph counting, saturation predicates,
//! the standard extremal constructions, exact-rational bound evaluators and
//! an isomorphism-free exhaustive search.
//!
//! Graphs have at most 64 vertices and are stored as adjacency bit rows.
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod constructions;
pub mod counting;
mod error;
pub mod formulas;
pub mod graph;
pub mod saturation;
pub mod search;

/// Exact count of subgraph copies.
pub type Count = u128;

pub use canon::{canonical_code, canonical_form, is_isomorphic, CanonicalCode};
pub use counting::Pattern;
pub use error::{Error, Result};
pub use graph::{EdgePair, Graph};
pub use saturation::{Family, Member};
