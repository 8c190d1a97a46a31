//! Invariant rechecks shared by the property tests and the acceptance suite.
//! Each returns `Err` with a description of the first failure.

use elp::properties::{
    check_constraint_monotonicity, find_epistemic_unfounded, find_unfounded_set, query_filter,
    verify_witness,
};
use elp::semantics::{is_model, Interpretation, PhiGuess, WorldView};
use elp::solvers::{
    g91_world_views, gl_answer_sets, is_g91_world_view, narrative_world_views, se16_candidate,
    se16_world_views, Config, Gl, SemanticsId,
};
use elp::syntax::epistemic_negations;
use elp::{Program, Rule};
use rand::Rng;

pub type Check = Result<(), String>;

fn fail(what: &str, p: &Program) -> Check {
    Err(format!("{what}\n{p}"))
}

pub fn gl_constraint_monotonicity(p: &Program, c: &Rule) -> Check {
    let with = gl_answer_sets(&p.push_rule(c.clone())).unwrap();
    let without = gl_answer_sets(p).unwrap();
    if with.iter().all(|i| without.contains(i)) {
        Ok(())
    } else {
        fail(
            &format!("adding {} introduced an answer set", p.render_rule(c)),
            p,
        )
    }
}

pub fn gl_unfounded_free(p: &Program) -> Check {
    for i in gl_answer_sets(p).unwrap() {
        if let Some(w) = find_unfounded_set(p, i).unwrap() {
            return fail(&format!("answer set has unfounded set {}", w.render(p)), p);
        }
    }
    Ok(())
}

fn antichain(sets: &[Interpretation]) -> bool {
    sets.iter()
        .all(|x| sets.iter().all(|y| x == y || !x.is_subset(*y)))
}

pub fn gl_antichain_of_models(p: &Program) -> Check {
    let sets = gl_answer_sets(p).unwrap();
    if !antichain(&sets) {
        return fail("answer sets are not an antichain", p);
    }
    if !sets.iter().all(|&i| is_model(p, i)) {
        return fail("answer set is not a model", p);
    }
    Ok(())
}

/// Every returned world view is a fixpoint; random unreturned collections are not.
pub fn g91_fixpoints(p: &Program, rng: &mut impl Rng) -> Check {
    let wvs = g91_world_views(p).unwrap();
    for a in &wvs {
        if !is_g91_world_view(p, a) {
            return fail(
                &format!("{} fails the fixpoint recheck", a.render(p.symbols())),
                p,
            );
        }
    }
    let all: Vec<Interpretation> = elp::semantics::interpretations(p).collect();
    for _ in 0..16 {
        let members: Vec<_> = all
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.4))
            .collect();
        let Ok(a) = WorldView::new(members) else {
            continue;
        };
        if !wvs.contains(&a) && is_g91_world_view(p, &a) {
            return fail(&format!("missed world view {}", a.render(p.symbols())), p);
        }
    }
    Ok(())
}

/// No strict superset of a returned guess yields a candidate.
pub fn se16_maximal(p: &Program) -> Check {
    let ep: Vec<_> = epistemic_negations(p).into_iter().collect();
    for (phi, a) in se16_world_views(p).unwrap() {
        if se16_candidate(p, &phi, &Gl).as_ref() != Some(&a) {
            return fail("world view is not the candidate of its guess", p);
        }
        for mask in 0u64..1 << ep.len() {
            let bigger = PhiGuess::new(
                ep.iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, e)| *e),
            );
            if phi.is_proper_subset(&bigger) && se16_candidate(p, &bigger, &Gl).is_some() {
                return fail(
                    &format!("guess {} is not maximal", phi.render(p.symbols())),
                    p,
                );
            }
        }
    }
    Ok(())
}

/// On non-epistemic programs G91 and SE16 reduce to the answer sets.
pub fn non_epistemic_collapse(p: &Program) -> Check {
    let sets = gl_answer_sets(p).unwrap();
    let expected: Vec<WorldView> = WorldView::new(sets).into_iter().collect();
    if g91_world_views(p).unwrap() != expected {
        return fail("g91 does not collapse to gl", p);
    }
    let se16: Vec<WorldView> = se16_world_views(p)
        .unwrap()
        .into_iter()
        .map(|(_, a)| a)
        .collect();
    if se16 != expected {
        return fail("se16 does not collapse to gl", p);
    }
    Ok(())
}

/// Witnesses returned by either finder pass `verify_witness`.
pub fn witnesses_verify(p: &Program) -> Check {
    let mut wvs = g91_world_views(p).unwrap();
    if let Ok(n) = narrative_world_views(p) {
        wvs.extend(n);
    }
    for a in &wvs {
        if !a
            .iter()
            .all(|i| p.rules().iter().all(|r| elp::semantics::sat_rule(a, i, r)))
        {
            continue;
        }
        if let Some(w) = find_epistemic_unfounded(p, a).unwrap() {
            if !verify_witness(p, a, &w) {
                return fail(&format!("witness {} rejected", w.render(p)), p);
            }
        }
        if p.is_non_epistemic() {
            for i in a.iter() {
                if let Some(w) = find_unfounded_set(p, i).unwrap() {
                    if !verify_witness(p, &WorldView::singleton(i), &w) {
                        return fail(&format!("witness {} rejected", w.render(p)), p);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Query answers are world views of `p`; for GL, and for G91 with a
/// subjective constraint, they coincide with the world views of `p ∪ {c}`.
pub fn query_within_world_views(p: &Program, c: &Rule, s: SemanticsId) -> Check {
    let config = Config::default();
    let query = query_filter(p, c, s, &config).unwrap();
    let cm = check_constraint_monotonicity(p, c, s, &config).unwrap();
    if !query.iter().all(|a| cm.wv_without_c.contains(a)) {
        return fail("query answer is not a world view", p);
    }
    let coincide = s == SemanticsId::Gl || (s == SemanticsId::G91 && c.is_subjective_constraint());
    if coincide && query != cm.wv_with_c {
        return fail(&format!("query and {} differ for {s}", p.render_rule(c)), p);
    }
    if cm.holds != cm.violations.is_empty() {
        return fail("holds flag disagrees with violations", p);
    }
    Ok(())
}

/// Narrative world views are sorted, distinct and satisfy every rule.
pub fn narrative_sound(p: &Program) -> Check {
    let Ok(wvs) = narrative_world_views(p) else {
        return Ok(());
    };
    if !wvs.windows(2).all(|w| w[0] < w[1]) {
        return fail("narrative world views not sorted and distinct", p);
    }
    for a in &wvs {
        if !a
            .iter()
            .all(|i| p.rules().iter().all(|r| elp::semantics::sat_rule(a, i, r)))
        {
            return fail(&format!("{} violates a rule", a.render(p.symbols())), p);
        }
    }
    Ok(())
}

/// The epistemic finder returns an unfounded collection of least total
/// size, or none exactly when the pair oracle finds none.
pub fn witnesses_minimal(p: &Program) -> Check {
    let mut wvs = g91_world_views(p).unwrap();
    if let Ok(n) = narrative_world_views(p) {
        wvs.extend(n);
    }
    for a in &wvs {
        if !a
            .iter()
            .all(|i| p.rules().iter().all(|r| elp::semantics::sat_rule(a, i, r)))
        {
            continue;
        }
        let masks: Vec<u64> = a.iter().map(|i| i.bits()).collect();
        if masks
            .iter()
            .map(|i| (1u64 << i.count_ones()) - 1)
            .sum::<u64>()
            > 12
        {
            continue;
        }
        let minimal = super::oracle::minimal_unfounded(p, &masks);
        let found = find_epistemic_unfounded(p, a).unwrap().map(|w| {
            let mut pairs: Vec<(u64, u64)> = w
                .pairs
                .iter()
                .map(|x| (x.unfounded.bits(), x.interpretation.bits()))
                .collect();
            pairs.sort();
            pairs
        });
        let ok = match &found {
            None => minimal.is_empty(),
            Some(pairs) => minimal.iter().any(|m| {
                let mut m = m.clone();
                m.sort();
                &m == pairs
            }),
        };
        if !ok {
            return fail(
                &format!(
                    "finder {found:?} vs oracle {minimal:?} on {}",
                    a.render(p.symbols())
                ),
                p,
            );
        }
    }
    Ok(())
}
