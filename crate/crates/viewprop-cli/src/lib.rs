//! Benchmark model zoo for the viewprop solver. Every model is available
//! in two modes: `views` posts the derived propagators directly, while
//! `decomposed` replaces each view-derived propagator with auxiliary
//! variables, binary link propagators and the plain core — the comparison
//! the benchmark CLI and the acceptance suite run differentially.

pub mod models;
