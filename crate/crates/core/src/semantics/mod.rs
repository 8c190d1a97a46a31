//! Interpretations, world views, satisfaction, reducts and minimal models.

mod interpretation;
mod models;
mod reduct;
mod satisfaction;
mod world_view;

pub use crate::syntax::EpNegLiteral;
pub use interpretation::{interpretations, literal_universe, Interpretation, Submasks, MAX_ATOMS};
pub use models::{is_minimal_model, is_model, minimal_models};
pub use reduct::{
    epistemic_reduct, epistemic_replace, epistemic_value, gl_reduct, modal_reduct, reduce_modal_by,
    PhiGuess,
};
pub use satisfaction::{
    body_holds, head_holds, sat_modal, sat_objective, sat_rule, sat_rule_objective,
};
pub use world_view::WorldView;
