//! GL reduct, modal reduct, and the epistemic-negation reduct.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::syntax::{
    epistemic_negations, EpNegLiteral, ExtendedLiteral, ModalLiteral, ModalOp, Program, Rule,
    SymbolTable,
};

use super::{sat_modal, Interpretation, WorldView};

/// A guessed subset of the program's epistemic negations, each assumed true.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhiGuess {
    pub chosen: BTreeSet<EpNegLiteral>,
}

impl PhiGuess {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(chosen: impl IntoIterator<Item = EpNegLiteral>) -> Self {
        PhiGuess {
            chosen: chosen.into_iter().collect(),
        }
    }

    pub fn contains(&self, e: &EpNegLiteral) -> bool {
        self.chosen.contains(e)
    }

    pub fn is_subset(&self, other: &PhiGuess) -> bool {
        self.chosen.is_subset(&other.chosen)
    }

    pub fn is_proper_subset(&self, other: &PhiGuess) -> bool {
        self.chosen.len() < other.chosen.len() && self.is_subset(other)
    }

    /// True iff every chosen element is an epistemic negation of `p`.
    pub fn is_guess_for(&self, p: &Program) -> bool {
        self.chosen.is_subset(&epistemic_negations(p))
    }

    /// Every chosen epistemic negation holds in `a`: `not l` needs a member
    /// without `l`, `not ¬l` needs a member with `l`.
    pub fn satisfied_by(&self, a: &WorldView) -> bool {
        self.chosen.iter().all(|e| {
            if e.inner_default_neg {
                a.iter().any(|i| i.contains(e.inner))
            } else {
                a.iter().any(|i| !i.contains(e.inner))
            }
        })
    }

    pub fn names(&self, symbols: &SymbolTable) -> Vec<String> {
        self.chosen.iter().map(|e| e.render(symbols)).collect()
    }

    pub fn render(&self, symbols: &SymbolTable) -> String {
        format!("{{{}}}", self.names(symbols).join(", "))
    }
}

/// Deletes every rule with a default-negated literal whose atom is in `i`,
/// then strips the remaining default-negated literals.
pub fn gl_reduct(p: &Program, i: Interpretation) -> Result<Program> {
    if let Some((index, r)) = p.rules().iter().enumerate().find(|(_, r)| r.has_modal()) {
        return Err(Error::NotNonEpistemic {
            index,
            rule: p.render_rule(r),
        });
    }
    let rules = p
        .rules()
        .iter()
        .filter(|r| {
            !r.body()
                .iter()
                .any(|b| matches!(*b, ExtendedLiteral::DefaultNeg(l) if i.contains(l)))
        })
        .map(|r| {
            let body = r
                .body()
                .iter()
                .filter(|b| matches!(b, ExtendedLiteral::Objective(_)))
                .copied()
                .collect();
            Rule::new(r.head().to_vec(), body)
        })
        .collect();
    Ok(p.with_rules(rules))
}

/// Drops every rule with a modal literal that `value` maps to false, then
/// strips the remaining modal literals.
pub fn reduce_modal_by(p: &Program, mut value: impl FnMut(ModalLiteral) -> bool) -> Program {
    let rules = p
        .rules()
        .iter()
        .filter(|r| r.modal_body().all(&mut value))
        .map(|r| {
            let body = r.body().iter().filter(|b| !b.is_modal()).copied().collect();
            Rule::new(r.head().to_vec(), body)
        })
        .collect();
    p.with_rules(rules)
}

/// Removes rules whose modal literals fail in `a`, then the modal literals themselves.
pub fn modal_reduct(p: &Program, a: &WorldView) -> Program {
    reduce_modal_by(p, |m| sat_modal(a, m))
}

/// Truth value a modal literal takes under guess `phi` for candidate `i`.
///
/// With `K l = ¬not l` and `M l = not ¬l`, a guessed epistemic negation is
/// replaced by ⊤; an unguessed one leaves a doubly default-negated literal
/// that is evaluated against `i`.
pub fn epistemic_value(m: ModalLiteral, phi: &PhiGuess, i: Interpretation) -> bool {
    if phi.contains(&EpNegLiteral::of_modal(m)) {
        match m.op {
            ModalOp::K => m.default_neg,
            ModalOp::M => !m.default_neg,
        }
    } else {
        i.contains(m.lit) != m.default_neg
    }
}

/// Replaces modal literals per [`epistemic_value`] and leaves object-level
/// default negation in place.
pub fn epistemic_replace(p: &Program, phi: &PhiGuess, i: Interpretation) -> Program {
    reduce_modal_by(p, |m| epistemic_value(m, phi, i))
}

/// The positive program obtained by [`epistemic_replace`] followed by the GL reduct w.r.t. `i`.
pub fn epistemic_reduct(p: &Program, phi: &PhiGuess, i: Interpretation) -> Program {
    gl_reduct(&epistemic_replace(p, phi, i), i).expect("modal literals were replaced")
}
