//! World views via epistemic negation and knowledge minimization.
//!
//! Each modal literal abbreviates an epistemic negation (`K l = ¬not l`,
//! `M l = not ¬l`). For a guess Φ of which epistemic negations hold, the
//! candidate collection is every interpretation accepted by the base
//! semantics on the Φ-reduct. A candidate must be non-empty and satisfy
//! every member of Φ; world views are the candidates with ⊆-maximal Φ.
//!
//! This is a reconstruction of the generic construction with a pluggable
//! base semantics (GL by default), checked against the published examples.

use crate::error::Result;
use crate::semantics::{epistemic_replace, interpretations, PhiGuess, WorldView};
use crate::syntax::{epistemic_negations, Program};

use super::gl::{check_cap, BaseSemantics, Gl};
use super::{Config, SemanticsId, Stats};

fn candidate(
    p: &Program,
    phi: &PhiGuess,
    base: &dyn BaseSemantics,
    stats: &mut Stats,
) -> Option<WorldView> {
    stats.collections_checked += 1;
    let members = interpretations(p).filter(|&i| {
        stats.interpretations_checked += 1;
        base.is_answer_set(&epistemic_replace(p, phi, i), i)
    });
    WorldView::new(members).ok().filter(|a| phi.satisfied_by(a))
}

/// The candidate world view for guess `phi`, if any.
pub fn se16_candidate(p: &Program, phi: &PhiGuess, base: &dyn BaseSemantics) -> Option<WorldView> {
    candidate(p, phi, base, &mut Stats::default())
}

pub(super) fn world_views(
    p: &Program,
    base: &dyn BaseSemantics,
    cap: usize,
    stats: &mut Stats,
) -> Result<Vec<(PhiGuess, WorldView)>> {
    check_cap(p, cap, "se16")?;
    let ep: Vec<_> = epistemic_negations(p).into_iter().collect();
    let mut candidates = Vec::new();
    for mask in 0u64..1 << ep.len() {
        let phi = PhiGuess::new(
            ep.iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e),
        );
        if let Some(a) = candidate(p, &phi, base, stats) {
            candidates.push((phi, a));
        }
    }
    let mut maximal: Vec<(PhiGuess, WorldView)> = candidates
        .iter()
        .filter(|(phi, _)| {
            !candidates
                .iter()
                .any(|(other, _)| phi.is_proper_subset(other))
        })
        .cloned()
        .collect();
    maximal.sort_by(|x, y| (&x.1, &x.0).cmp(&(&y.1, &y.0)));
    Ok(maximal)
}

/// `(Φ, world view)` pairs under the GL base semantics, ordered by world view.
pub fn se16_world_views(p: &Program) -> Result<Vec<(PhiGuess, WorldView)>> {
    se16_world_views_with(p, &Gl, &Config::default())
}

pub fn se16_world_views_with(
    p: &Program,
    base: &dyn BaseSemantics,
    config: &Config,
) -> Result<Vec<(PhiGuess, WorldView)>> {
    world_views(
        p,
        base,
        config.cap(SemanticsId::Se16),
        &mut Stats::default(),
    )
}
