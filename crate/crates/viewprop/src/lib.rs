//! A finite-domain constraint propagation kernel in which propagator
//! variants are derived from a small set of core propagators through
//! views — injective value transformations wrapped around variables.
//!
//! The crate is organized bottom-up:
//! - [`kernel`]: values, ranges, canonical range sequences;
//! - [`iter`]: lazy range-iterator combinators;
//! - [`var`]: integer, Boolean and set variable store with exact events;
//! - [`view`]: view types and the operation interface they share with
//!   variables;
//! - [`engine`]: propagation spaces, scheduling, fixpoints, copying;
//! - [`prop`]: the propagator catalog and its view-derived variants;
//! - [`oracle`]: independent explicit-set semantics used to verify the
//!   derivation theory executably.

pub mod engine;
pub mod error;
pub mod iter;
pub mod kernel;
pub mod oracle;
pub mod prop;
pub mod search;
pub mod var;
pub mod view;

pub use error::{Error, Result};
