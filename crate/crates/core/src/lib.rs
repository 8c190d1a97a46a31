//! A workbench for propositional epistemic logic programs.
//!
//! Programs are parsed from a small ASCII surface syntax ([`syntax`]),
//! evaluated over bitset interpretations ([`semantics`]), solved under
//! several semantics by exhaustive enumeration ([`solvers`]), and checked
//! for constraint monotonicity and foundedness ([`properties`]).
//! [`report`] renders results for the command-line front end.

pub mod error;
pub mod properties;
pub mod report;
pub mod semantics;
pub mod solvers;
pub mod syntax;

pub use error::{Error, Result};
pub use semantics::{Interpretation, WorldView};
pub use solvers::{SemanticsId, SolveResult};
pub use syntax::{parse_program, Program, Rule};
