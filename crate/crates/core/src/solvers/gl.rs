use crate::error::{Error, Result};
use crate::semantics::{gl_reduct, interpretations, is_minimal_model, Interpretation};
use crate::syntax::Program;

use super::{Config, SemanticsId, Stats};

/// Answer-set semantics for non-epistemic programs, pluggable into the
/// epistemic engines.
pub trait BaseSemantics {
    fn name(&self) -> &'static str;

    /// Whether `i` is an answer set of the non-epistemic program `p`.
    fn is_answer_set(&self, p: &Program, i: Interpretation) -> bool;
}

/// Gelfond-Lifschitz semantics: `i` is a minimal model of the reduct `p^i`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Gl;

impl BaseSemantics for Gl {
    fn name(&self) -> &'static str {
        "gl"
    }

    fn is_answer_set(&self, p: &Program, i: Interpretation) -> bool {
        let reduct = gl_reduct(p, i).expect("base semantics applied to an epistemic program");
        is_minimal_model(&reduct, i)
    }
}

pub(super) fn check_cap(p: &Program, cap: usize, what: &'static str) -> Result<()> {
    if p.atom_count() > cap {
        return Err(Error::CapExceeded {
            atoms: p.atom_count(),
            cap,
            what,
        });
    }
    Ok(())
}

pub(crate) fn require_non_epistemic(p: &Program) -> Result<()> {
    match p.rules().iter().enumerate().find(|(_, r)| r.has_modal()) {
        Some((index, r)) => Err(Error::NotNonEpistemic {
            index,
            rule: p.render_rule(r),
        }),
        None => Ok(()),
    }
}

pub(super) fn answer_sets(
    p: &Program,
    base: &dyn BaseSemantics,
    cap: usize,
    stats: &mut Stats,
) -> Result<Vec<Interpretation>> {
    check_cap(p, cap, "gl")?;
    require_non_epistemic(p)?;
    Ok(enumerate(p, base, stats))
}

/// No cap or applicability checks; callers have done them.
pub(super) fn enumerate(
    p: &Program,
    base: &dyn BaseSemantics,
    stats: &mut Stats,
) -> Vec<Interpretation> {
    interpretations(p)
        .filter(|&i| {
            stats.interpretations_checked += 1;
            base.is_answer_set(p, i)
        })
        .collect()
}

/// All GL answer sets of a non-epistemic program, ascending.
pub fn gl_answer_sets(p: &Program) -> Result<Vec<Interpretation>> {
    gl_answer_sets_with(p, &Config::default())
}

pub fn gl_answer_sets_with(p: &Program, config: &Config) -> Result<Vec<Interpretation>> {
    answer_sets(p, &Gl, config.cap(SemanticsId::Gl), &mut Stats::default())
}
