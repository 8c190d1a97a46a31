use crate::error::{Error, Result};
use crate::semantics::{sat_rule, WorldView};
use crate::solvers::{solve_with, Config, SemanticsId};
use crate::syntax::{Program, Rule};

/// Outcome of comparing the world views of `p ∪ {c}` against those of `p`.
///
/// For GL the comparison is on answer sets, each wrapped as a one-member
/// collection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReport {
    pub semantics: SemanticsId,
    pub wv_with_c: Vec<WorldView>,
    pub wv_without_c: Vec<WorldView>,
    /// Members of `wv_with_c` missing from `wv_without_c`.
    pub violations: Vec<WorldView>,
    pub holds: bool,
}

fn require_constraint(p: &Program, c: &Rule) -> Result<()> {
    if c.is_constraint() {
        Ok(())
    } else {
        Err(Error::NotAConstraint {
            rule: p.render_rule(c),
        })
    }
}

/// Removes the constraint at `index` (default: the last constraint) and
/// returns the remaining program together with it.
pub fn split_constraint(p: &Program, index: Option<usize>) -> Result<(Program, Rule)> {
    let index = match index {
        Some(i) => {
            if p.rules().get(i).is_none_or(|r| !r.is_constraint()) {
                return Err(Error::BadConstraintIndex {
                    index: i,
                    len: p.rules().len(),
                });
            }
            i
        }
        None => p
            .rules()
            .iter()
            .rposition(Rule::is_constraint)
            .ok_or(Error::NoConstraint)?,
    };
    Ok((p.without_rule(index), p.rules()[index].clone()))
}

/// `c` must use atoms of `p`'s symbol table.
pub fn check_constraint_monotonicity(
    p: &Program,
    c: &Rule,
    s: SemanticsId,
    config: &Config,
) -> Result<CmReport> {
    require_constraint(p, c)?;
    let wv_without_c = solve_with(p, s, config)?.collections();
    let wv_with_c = solve_with(&p.push_rule(c.clone()), s, config)?.collections();
    let violations: Vec<WorldView> = wv_with_c
        .iter()
        .filter(|a| !wv_without_c.contains(a))
        .cloned()
        .collect();
    Ok(CmReport {
        semantics: s,
        holds: violations.is_empty(),
        wv_with_c,
        wv_without_c,
        violations,
    })
}

/// World views of `p` in which `c` holds for every member. `c` takes no
/// part in computing them.
pub fn query_filter(
    p: &Program,
    c: &Rule,
    s: SemanticsId,
    config: &Config,
) -> Result<Vec<WorldView>> {
    require_constraint(p, c)?;
    Ok(solve_with(p, s, config)?
        .collections()
        .into_iter()
        .filter(|a| a.iter().all(|i| sat_rule(a, i, c)))
        .collect())
}
