//! World views under Gelfond's 1991 semantics: collections that reproduce
//! themselves as the answer sets of their modal reduct.
//!
//! The modal reduct depends on a collection only through the truth values
//! of the program's modal atoms (`K l`, `M l`). The engine therefore
//! enumerates those valuations, computes the answer sets of each reduct, and
//! keeps the collections whose own valuation matches the guess. This visits
//! every collection that could possibly be a fixpoint.

use crate::error::Result;
use crate::semantics::{modal_reduct, reduce_modal_by, sat_modal, WorldView};
use crate::syntax::{ModalLiteral, Program};

use super::gl::{check_cap, enumerate, Gl};
use super::{Config, SemanticsId, Stats};

/// Distinct `(op, literal)` pairs, ignoring the default-negation flag.
fn modal_atoms(p: &Program) -> Vec<ModalLiteral> {
    let mut atoms: Vec<ModalLiteral> = p
        .rules()
        .iter()
        .flat_map(|r| r.modal_body())
        .map(|m| ModalLiteral {
            default_neg: false,
            ..m
        })
        .collect();
    atoms.sort();
    atoms.dedup();
    atoms
}

pub(super) fn world_views(p: &Program, cap: usize, stats: &mut Stats) -> Result<Vec<WorldView>> {
    check_cap(p, cap, "g91")?;
    let atoms = modal_atoms(p);
    let mut found = Vec::new();
    for guess in 0u64..1 << atoms.len() {
        stats.collections_checked += 1;
        let value = |m: ModalLiteral| {
            let k = atoms
                .binary_search(&ModalLiteral {
                    default_neg: false,
                    ..m
                })
                .expect("modal atom collected above");
            (guess >> k & 1 == 1) != m.default_neg
        };
        let reduct = reduce_modal_by(p, value);
        let Ok(a) = WorldView::new(enumerate(&reduct, &Gl, stats)) else {
            continue;
        };
        let consistent = atoms
            .iter()
            .enumerate()
            .all(|(k, &m)| sat_modal(&a, m) == (guess >> k & 1 == 1));
        if consistent {
            found.push(a);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// The fixpoint condition: `a` equals the answer sets of its modal reduct.
pub fn is_g91_world_view(p: &Program, a: &WorldView) -> bool {
    let reduct = modal_reduct(p, a);
    enumerate(&reduct, &Gl, &mut Stats::default()) == a.members()
}

pub fn g91_world_views(p: &Program) -> Result<Vec<WorldView>> {
    g91_world_views_with(p, &Config::default())
}

pub fn g91_world_views_with(p: &Program, config: &Config) -> Result<Vec<WorldView>> {
    world_views(p, config.cap(SemanticsId::G91), &mut Stats::default())
}
