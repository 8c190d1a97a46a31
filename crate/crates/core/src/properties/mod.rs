//! Checkers for constraint monotonicity, the constraint-as-query reading,
//! and unfounded sets.

mod foundedness;
mod monotonicity;

pub use foundedness::{
    find_epistemic_unfounded, find_unfounded_set, verify_witness, UnfoundedPair, UnfoundedWitness,
};
pub use monotonicity::{check_constraint_monotonicity, query_filter, split_constraint, CmReport};
