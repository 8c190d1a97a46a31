//! The constructive "pick a disjunct, close, then check" procedure used to
//! argue for intended world views.
//!
//! 1. For each choice of one disjunct per disjunctive fact, close under the
//!    single-head rules without modal literals: the possible answer sets.
//! 2. Every non-empty set of distinct possible answer sets is a candidate
//!    collection (only singletons for non-epistemic programs).
//! 3. Close each candidate under all single-head rules, evaluating modal
//!    literals in the current collection, until nothing changes.
//! 4. Keep candidates in which every rule holds for every member.
//!
//! Only a restricted fragment is accepted, see [`check_narrative_fragment`].

use crate::error::{Error, Result};
use crate::semantics::{body_holds, sat_modal, sat_rule, Interpretation, WorldView};
use crate::syntax::{ObjectLiteral, Program, Rule};

use super::gl::check_cap;
use super::{Config, SemanticsId, Stats};

/// Limit on distinct possible answer sets; candidates are all their subsets.
const MAX_POSSIBLE: usize = 16;

/// Disjunctive heads only on body-free rules, and no default negation in
/// the bodies of non-constraint rules.
pub fn check_narrative_fragment(p: &Program) -> Result<()> {
    for (index, r) in p.rules().iter().enumerate() {
        let reason = if r.head().len() > 1 && !r.body().is_empty() {
            Some("disjunctive head on a rule with a body")
        } else if !r.is_constraint() && r.has_default_neg() {
            Some("default-negated object literal in the body of a non-constraint rule")
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(Error::FragmentViolation {
                index,
                rule: p.render_rule(r),
                reason,
            });
        }
    }
    Ok(())
}

/// Forward closure of `i` under single-head rules without modal literals.
fn objective_closure(rules: &[&Rule], mut i: Interpretation) -> Option<Interpretation> {
    loop {
        let mut next = i;
        for r in rules.iter().filter(|r| !r.has_modal()) {
            if body_holds(i, r.body(), |_| unreachable!()) {
                next = next.with(r.head()[0])?;
            }
        }
        if next == i {
            return Some(i);
        }
        i = next;
    }
}

fn possible_answer_sets(p: &Program, single: &[&Rule]) -> Vec<Interpretation> {
    let disjunctive: Vec<&[ObjectLiteral]> = p
        .rules()
        .iter()
        .filter(|r| r.head().len() > 1)
        .map(|r| r.head())
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; disjunctive.len()];
    'choices: loop {
        let start = disjunctive
            .iter()
            .zip(&choice)
            .try_fold(Interpretation::EMPTY, |i, (head, &k)| i.with(head[k]));
        if let Some(i) = start.and_then(|i| objective_closure(single, i)) {
            out.push(i);
        }
        for (k, head) in disjunctive.iter().enumerate() {
            choice[k] += 1;
            if choice[k] < head.len() {
                continue 'choices;
            }
            choice[k] = 0;
        }
        break;
    }
    out.sort();
    out.dedup();
    out
}

/// Simultaneous closure of every member; modal literals are read in the
/// collection as it stood at the start of each round.
fn modal_closure(single: &[&Rule], members: Vec<Interpretation>) -> Option<WorldView> {
    let mut current = WorldView::new(members).ok()?;
    loop {
        let mut next = Vec::with_capacity(current.len());
        for i in current.iter() {
            let mut j = i;
            for r in single {
                if body_holds(i, r.body(), |m| sat_modal(&current, m)) {
                    j = j.with(r.head()[0])?;
                }
            }
            next.push(j);
        }
        let next = WorldView::new(next).ok()?;
        if next == current {
            return Some(current);
        }
        current = next;
    }
}

pub(super) fn world_views(p: &Program, cap: usize, stats: &mut Stats) -> Result<Vec<WorldView>> {
    check_cap(p, cap, "narrative")?;
    check_narrative_fragment(p)?;
    let single: Vec<&Rule> = p.rules().iter().filter(|r| r.head().len() == 1).collect();
    let possible = possible_answer_sets(p, &single);
    stats.interpretations_checked += possible.len() as u64;
    if possible.len() > MAX_POSSIBLE {
        return Err(Error::SearchTooLarge {
            what: "possible answer sets",
            size: possible.len(),
            cap: MAX_POSSIBLE,
        });
    }
    let singletons_only = p.is_non_epistemic();
    let mut found = Vec::new();
    for mask in 1u64..1 << possible.len() {
        if singletons_only && mask.count_ones() != 1 {
            continue;
        }
        stats.collections_checked += 1;
        let members = possible
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        let Some(a) = modal_closure(&single, members) else {
            continue;
        };
        if a.iter()
            .all(|i| p.rules().iter().all(|r| sat_rule(&a, i, r)))
        {
            found.push(a);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

pub fn narrative_world_views(p: &Program) -> Result<Vec<WorldView>> {
    narrative_world_views_with(p, &Config::default())
}

pub fn narrative_world_views_with(p: &Program, config: &Config) -> Result<Vec<WorldView>> {
    world_views(p, config.cap(SemanticsId::Narrative), &mut Stats::default())
}
