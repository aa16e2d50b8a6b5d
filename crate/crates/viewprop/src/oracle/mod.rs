//! The oracle suite: explicit-set reference semantics, executable
//! theorem checks over the propagator catalog, hull-property
//! classification, decomposition building, and differential runs.

pub mod cases;
pub mod decomp;
pub mod diff;
pub mod events;
pub mod explicit;
pub mod hull;
pub mod spec_apply;
pub mod theorems;

pub use cases::{catalog, DeclaredLevel, OracleCase};
pub use diff::{differential_run, DiffReport, Mode};
pub use explicit::{
    complete_propagator, dom_relax, CompletenessLevel, GVal, ODom, OKind, XConstraint,
};
pub use hull::{hull_property, HullProperty};
pub use theorems::{check_theorem, induced_constraint, Claim};
