//! Decision procedures and constructions for Ramsey arrowing `F → (G, H)`
//! between trees and cliques.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable [`Graph`] and [`EdgeColoring`] values; file
//! formats, reports and the command line live in the `ramseylab` crate.
//!
//! Module map:
//!
//! * [`graph`], [`subgraph`], [`params`], [`tree`]: graph representation,
//!   subgraph containment, clique and chromatic numbers, tree classes.
//! * [`canon`], [`enumerate`]: canonical forms and isomorph-free generation
//!   of small graphs.
//! * [`matching`], [`factors`]: maximum matching, k-factors and odd
//!   component certificates.
//! * [`arrowing`]: the `F → (G, H)` decision engine, Ramsey numbers,
//!   minimality and equivalence scans.
//! * [`families`]: named graphs, gadgets and their witness colorings.
//! * [`recolor`]: the alternating-walk and woven recoloring procedures.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arrowing;
pub mod bits;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod factors;
pub mod families;
pub mod graph;
pub mod matching;
pub mod params;
pub mod recolor;
pub mod subgraph;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{edge, Color, Edge, EdgeColoring, Graph};
pub use subgraph::Embedding;
