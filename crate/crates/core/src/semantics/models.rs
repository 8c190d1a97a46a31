use crate::error::{Error, Result};
use crate::syntax::Program;

use super::{interpretations, sat_rule_objective, Interpretation};

fn require_positive(p: &Program) -> Result<()> {
    for (index, r) in p.rules().iter().enumerate() {
        if r.has_modal() {
            return Err(Error::NotNonEpistemic {
                index,
                rule: p.render_rule(r),
            });
        }
        if r.has_default_neg() {
            return Err(Error::NotPositive {
                index,
                rule: p.render_rule(r),
            });
        }
    }
    Ok(())
}

/// `i` satisfies every rule of a non-epistemic program.
pub fn is_model(p: &Program, i: Interpretation) -> bool {
    p.rules().iter().all(|r| sat_rule_objective(i, r))
}

/// `i` is a model of `p` and no proper subset of `i` is.
pub fn is_minimal_model(p: &Program, i: Interpretation) -> bool {
    is_model(p, i) && !i.subsets().any(|j| j != i && is_model(p, j))
}

/// All ⊆-minimal consistent models of a positive program, ascending.
///
/// Exhaustive over the literal universe of `p`; callers bound the atom count.
pub fn minimal_models(p: &Program) -> Result<Vec<Interpretation>> {
    require_positive(p)?;
    let mut minimal: Vec<Interpretation> = Vec::new();
    // Ascending order visits every subset of a model before the model itself,
    // so a model is minimal iff no minimal model found so far is below it.
    for i in interpretations(p) {
        if is_model(p, i) && !minimal.iter().any(|m| m.is_subset(i)) {
            minimal.push(i);
        }
    }
    Ok(minimal)
}
