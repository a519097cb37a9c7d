//! Exact Alon-Tarsi numbers and circulation parity counts for Cartesian
//! products of graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: simple graphs with structured labels, products, joins,
//!   powers, edits and the smallest-last ordering;
//! - [`orientation`]: digraphs and the explicit product orientations;
//! - [`circulation`]: two independent even/odd circulation counters and the
//!   graph-polynomial coefficient DP;
//! - [`invariants`]: χ, col, χ_ℓ, χ_p and AT on small graphs;
//! - [`verify`]: named, reproducible verification suites;
//! - [`io`] and [`cli`]: expression language, graph6, reports and the
//!   command-line surface.

pub mod circulation;
pub mod cli;
pub mod config;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod orientation;
pub mod verify;

pub use config::Limits;
pub use error::{Error, Result};
