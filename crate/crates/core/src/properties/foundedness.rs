//! Unfounded-set witnesses.
//!
//! A pair `(X, I)` with `∅ ≠ X ⊆ I` is unfounded when every rule whose head
//! meets `X` has (a) a body false in `I`, (b) a positive body meeting `X`,
//! or (c) a head literal in `I \ X`. For collections of pairs over a world
//! view, a rule may also be discharged by (d) a positive `K l` in its body
//! with `l` in some `X` of the collection. Conditions (a)-(c) are the usual
//! disjunctive unfounded-set conditions; (d) is a witness-compatible
//! reconstruction of the epistemic generalization and only covers `K`.

use crate::error::{Error, Result};
use crate::semantics::{
    body_holds, sat_modal, sat_rule, sat_rule_objective, Interpretation, WorldView,
};
use crate::solvers::gl_require_non_epistemic;
use crate::syntax::{ExtendedLiteral, ModalOp, Program, Rule};

/// Upper bound on collections examined by the minimal-witness search.
const MAX_COLLECTIONS: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnfoundedPair {
    /// The unfounded literals `X`.
    pub unfounded: Interpretation,
    /// The interpretation `I` they are unfounded in.
    pub interpretation: Interpretation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnfoundedWitness {
    pub pairs: Vec<UnfoundedPair>,
}

impl UnfoundedWitness {
    /// `⟨{b},{a,b}⟩` or `[⟨{p},{p,q}⟩, ⟨{q},{p,q}⟩]` style.
    pub fn render(&self, p: &Program) -> String {
        let pairs: Vec<String> = self
            .pairs
            .iter()
            .map(|x| {
                format!(
                    "<{}, {}>",
                    x.unfounded.render(p.symbols()),
                    x.interpretation.render(p.symbols())
                )
            })
            .collect();
        format!("[{}]", pairs.join(", "))
    }
}

/// `support` is the union of all `X` in the collection as a literal mask;
/// it may hold both `a` and `-a` when the pairs come from different members.
fn pair_discharged(a: &WorldView, pair: UnfoundedPair, support: u64, r: &Rule) -> bool {
    let UnfoundedPair {
        unfounded: x,
        interpretation: i,
    } = pair;
    if !r.head().iter().any(|&l| x.contains(l)) {
        return true;
    }
    let body_false = !body_holds(i, r.body(), |m| sat_modal(a, m));
    let circular = r.positive_body().any(|l| x.contains(l));
    let other_head = r.head().iter().any(|&l| i.contains(l) && !x.contains(l));
    let k_on_unfounded = r.body().iter().any(|b| {
        matches!(*b, ExtendedLiteral::Modal(m)
            if m.op == ModalOp::K && !m.default_neg && support >> m.lit.slot() & 1 == 1)
    });
    body_false || circular || other_head || k_on_unfounded
}

fn pair_unfounded(p: &Program, a: &WorldView, pair: UnfoundedPair, support: u64) -> bool {
    p.rules()
        .iter()
        .all(|r| pair_discharged(a, pair, support, r))
}

fn support_of(pairs: &[UnfoundedPair]) -> u64 {
    pairs.iter().fold(0, |acc, x| acc | x.unfounded.bits())
}

fn collection_unfounded(p: &Program, a: &WorldView, pairs: &[UnfoundedPair]) -> bool {
    let support = support_of(pairs);
    pairs.iter().all(|&x| pair_unfounded(p, a, x, support))
}

/// Re-checks conditions (a)-(d) for every pair of `w` against `a`.
/// Structurally invalid witnesses are rejected.
pub fn verify_witness(p: &Program, a: &WorldView, w: &UnfoundedWitness) -> bool {
    let well_formed = !w.pairs.is_empty()
        && w.pairs.iter().enumerate().all(|(k, x)| {
            a.contains(x.interpretation)
                && !x.unfounded.is_empty()
                && x.unfounded.is_subset(x.interpretation)
                && !w.pairs[..k].contains(x)
        });
    well_formed && collection_unfounded(p, a, &w.pairs)
}

/// Smallest unfounded `X ⊆ i` (by size, then bit order), if any.
pub fn find_unfounded_set(p: &Program, i: Interpretation) -> Result<Option<UnfoundedWitness>> {
    gl_require_non_epistemic(p)?;
    if let Some((index, r)) = p
        .rules()
        .iter()
        .enumerate()
        .find(|(_, r)| !sat_rule_objective(i, r))
    {
        return Err(Error::NotAModel {
            what: i.render(p.symbols()),
            index,
            rule: p.render_rule(r),
        });
    }
    let a = WorldView::singleton(i);
    let mut subsets: Vec<Interpretation> = i.subsets().filter(|x| !x.is_empty()).collect();
    subsets.sort_by_key(|x| (x.len(), *x));
    Ok(subsets
        .into_iter()
        .map(|x| UnfoundedPair {
            unfounded: x,
            interpretation: i,
        })
        .find(|&pair| pair_unfounded(p, &a, pair, pair.unfounded.bits()))
        .map(|pair| UnfoundedWitness { pairs: vec![pair] }))
}

/// A minimal unfounded collection of pairs over `a`, if any.
///
/// Collections are searched by total size `Σ|X|`, then in canonical order
/// of their pairs. Pairs are first pruned to the greatest set that can
/// take part in any unfounded collection.
pub fn find_epistemic_unfounded(p: &Program, a: &WorldView) -> Result<Option<UnfoundedWitness>> {
    for i in a.iter() {
        if let Some((index, r)) = p
            .rules()
            .iter()
            .enumerate()
            .find(|(_, r)| !sat_rule(a, i, r))
        {
            return Err(Error::NotAModel {
                what: format!(
                    "member {} of {}",
                    i.render(p.symbols()),
                    a.render(p.symbols())
                ),
                index,
                rule: p.render_rule(r),
            });
        }
    }

    let all: Vec<UnfoundedPair> = a
        .iter()
        .flat_map(|i| {
            i.subsets()
                .filter(|x| !x.is_empty())
                .map(move |x| UnfoundedPair {
                    unfounded: x,
                    interpretation: i,
                })
        })
        .collect();

    // Condition (d) only gets easier as the support grows, so iterate down
    // from the full support to the greatest fixpoint.
    let mut support = support_of(&all);
    let candidates = loop {
        let passing: Vec<UnfoundedPair> = all
            .iter()
            .copied()
            .filter(|x| x.unfounded.bits() & !support == 0 && pair_unfounded(p, a, *x, support))
            .collect();
        let next = support_of(&passing);
        if next == support {
            break passing;
        }
        support = next;
    };
    if candidates.is_empty() {
        return Ok(None);
    }

    let total: usize = candidates.iter().map(|x| x.unfounded.len()).sum();
    let mut examined = 0u64;
    for size in 1..=total {
        let mut chosen = Vec::new();
        if let Some(found) = search(p, a, &candidates, 0, size, &mut chosen, &mut examined)? {
            return Ok(Some(UnfoundedWitness { pairs: found }));
        }
    }
    unreachable!("the pruned candidate set is itself unfounded")
}

fn search(
    p: &Program,
    a: &WorldView,
    candidates: &[UnfoundedPair],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<UnfoundedPair>,
    examined: &mut u64,
) -> Result<Option<Vec<UnfoundedPair>>> {
    if remaining == 0 {
        *examined += 1;
        if *examined > MAX_COLLECTIONS {
            return Err(Error::SearchTooLarge {
                what: "unfounded-set search",
                size: *examined as usize,
                cap: MAX_COLLECTIONS as usize,
            });
        }
        return Ok(collection_unfounded(p, a, chosen).then(|| chosen.clone()));
    }
    for k in from..candidates.len() {
        let size = candidates[k].unfounded.len();
        if size > remaining {
            continue;
        }
        chosen.push(candidates[k]);
        let hit = search(p, a, candidates, k + 1, remaining - size, chosen, examined)?;
        chosen.pop();
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}
