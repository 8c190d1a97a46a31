//! Brute-force reference semantics.
//!
//! Interpretations are plain `u64` masks over all `2·n` literal slots and
//! every check is done by exhaustive enumeration, independently of the
//! library's reducts, submask iterator and search shortcuts.

use elp::syntax::{ExtendedLiteral, ModalLiteral, ModalOp, ObjectLiteral};
use elp::Program;

pub type Mask = u64;

fn slot(l: ObjectLiteral) -> u32 {
    2 * l.atom.id() as u32 + l.strong_neg as u32
}

fn has(i: Mask, l: ObjectLiteral) -> bool {
    i & (1 << slot(l)) != 0
}

fn consistent(i: Mask) -> bool {
    (0..32).all(|a| i >> (2 * a) & 0b11 != 0b11)
}

/// Every consistent interpretation over the program's atoms. Without strong
/// negation only positive slots are used.
pub fn universe(p: &Program) -> Vec<Mask> {
    let n = p.atom_count();
    let strong = p
        .rules()
        .iter()
        .flat_map(|r| r.literals())
        .any(|l| l.strong_neg);
    (0..1u64 << (2 * n))
        .filter(|&i| consistent(i))
        .filter(|&i| strong || i & 0xAAAA_AAAA_AAAA_AAAA == 0)
        .collect()
}

/// A rule with modal literals already decided.
#[derive(Clone, Debug)]
pub struct ObjRule {
    pub head: Vec<ObjectLiteral>,
    pub pos: Vec<ObjectLiteral>,
    pub neg: Vec<ObjectLiteral>,
}

/// Drops rules with a modal literal valued false, strips the rest.
pub fn decide_modals(p: &Program, mut value: impl FnMut(ModalLiteral) -> bool) -> Vec<ObjRule> {
    let mut out = Vec::new();
    'rules: for r in p.rules() {
        let mut rule = ObjRule {
            head: r.head().to_vec(),
            pos: vec![],
            neg: vec![],
        };
        for b in r.body() {
            match *b {
                ExtendedLiteral::Objective(l) => rule.pos.push(l),
                ExtendedLiteral::DefaultNeg(l) => rule.neg.push(l),
                ExtendedLiteral::Modal(m) => {
                    if !value(m) {
                        continue 'rules;
                    }
                }
            }
        }
        out.push(rule);
    }
    out
}

fn positive_model(rules: &[(Vec<ObjectLiteral>, Vec<ObjectLiteral>)], j: Mask) -> bool {
    rules
        .iter()
        .all(|(head, pos)| !pos.iter().all(|&l| has(j, l)) || head.iter().any(|&l| has(j, l)))
}

/// GL: `i` is a minimal model of the reduct w.r.t. `i`.
pub fn is_answer_set(rules: &[ObjRule], i: Mask) -> bool {
    let reduct: Vec<_> = rules
        .iter()
        .filter(|r| !r.neg.iter().any(|&l| has(i, l)))
        .map(|r| (r.head.clone(), r.pos.clone()))
        .collect();
    if !positive_model(&reduct, i) {
        return false;
    }
    (0..i)
        .filter(|j| j & !i == 0)
        .all(|j| !positive_model(&reduct, j))
}

pub fn answer_sets(p: &Program, rules: &[ObjRule]) -> Vec<Mask> {
    universe(p)
        .into_iter()
        .filter(|&i| is_answer_set(rules, i))
        .collect()
}

pub fn gl(p: &Program) -> Vec<Mask> {
    answer_sets(p, &decide_modals(p, |_| panic!("epistemic program")))
}

/// Minimal models of a positive program by pairwise comparison.
pub fn minimal_models(p: &Program) -> Vec<Mask> {
    let rules: Vec<_> = decide_modals(p, |_| panic!("epistemic program"))
        .into_iter()
        .map(|r| {
            assert!(r.neg.is_empty());
            (r.head, r.pos)
        })
        .collect();
    let models: Vec<Mask> = universe(p)
        .into_iter()
        .filter(|&i| positive_model(&rules, i))
        .collect();
    models
        .iter()
        .copied()
        .filter(|&m| !models.iter().any(|&o| o != m && o & !m == 0))
        .collect()
}

fn modal_true(a: &[Mask], m: ModalLiteral) -> bool {
    let v = match m.op {
        ModalOp::K => a.iter().all(|&i| has(i, m.lit)),
        ModalOp::M => a.iter().any(|&i| has(i, m.lit)),
    };
    v != m.default_neg
}

fn collections(interps: &[Mask]) -> impl Iterator<Item = Vec<Mask>> + '_ {
    (1u64..1 << interps.len()).map(move |sel| {
        interps
            .iter()
            .enumerate()
            .filter(|(k, _)| sel >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect()
    })
}

/// G91 by trying every non-empty collection of interpretations.
pub fn g91(p: &Program) -> Vec<Vec<Mask>> {
    let interps = universe(p);
    assert!(
        interps.len() <= 16,
        "collection oracle limited to 16 interpretations"
    );
    let mut out: Vec<Vec<Mask>> = collections(&interps)
        .filter(|a| {
            let reduct = decide_modals(p, |m| modal_true(a, m));
            &answer_sets(p, &reduct) == a
        })
        .collect();
    out.sort();
    out
}

/// Modal formulas with an explicit epistemic negation operator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum F {
    Lit(ObjectLiteral),
    Not(Box<F>),
    EpNot(Box<F>),
    True,
}

/// `K l = ¬ not l`, `M l = not ¬ l`.
pub fn modal_formula(m: ModalLiteral) -> F {
    let lit = F::Lit(m.lit);
    let f = match m.op {
        ModalOp::K => F::Not(Box::new(F::EpNot(Box::new(lit)))),
        ModalOp::M => F::EpNot(Box::new(F::Not(Box::new(lit)))),
    };
    if m.default_neg {
        F::Not(Box::new(f))
    } else {
        f
    }
}

fn collect_epnot(f: &F, out: &mut Vec<F>) {
    match f {
        F::EpNot(g) => {
            out.push((**g).clone());
            collect_epnot(g, out);
        }
        F::Not(g) => collect_epnot(g, out),
        F::Lit(_) | F::True => {}
    }
}

/// Bodies of epistemic negations occurring in `p`, deduplicated.
pub fn epistemic_negations(p: &Program) -> Vec<F> {
    let mut out = Vec::new();
    for m in p.rules().iter().flat_map(|r| r.modal_body()) {
        collect_epnot(&modal_formula(m), &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// `not g ↦ ⊤` for guessed `g`, `not g ↦ ¬g` otherwise.
fn reduce(f: &F, phi: &[F]) -> F {
    match f {
        F::EpNot(g) if phi.contains(g) => F::True,
        F::EpNot(g) => F::Not(Box::new(reduce(g, phi))),
        F::Not(g) => F::Not(Box::new(reduce(g, phi))),
        other => other.clone(),
    }
}

fn eval(f: &F, i: Mask) -> bool {
    match f {
        F::Lit(l) => has(i, *l),
        F::Not(g) => !eval(g, i),
        F::True => true,
        F::EpNot(_) => panic!("unreduced epistemic negation"),
    }
}

/// A guess as `(literal, negated)` pairs together with its world view.
pub type Guessed = (Vec<(ObjectLiteral, bool)>, Vec<Mask>);

/// SE16 by trying every `(Φ, collection)` pair, then keeping ⊆-maximal Φ.
/// Φ is reported as `(literal, negated)` pairs: `not l` or `not ¬l`.
pub fn se16(p: &Program) -> Vec<Guessed> {
    let interps = universe(p);
    assert!(
        interps.len() <= 16,
        "collection oracle limited to 16 interpretations"
    );
    let ep = epistemic_negations(p);
    let mut candidates: Vec<(u64, Vec<Mask>)> = Vec::new();
    for sel in 0u64..1 << ep.len() {
        let phi: Vec<F> = ep
            .iter()
            .enumerate()
            .filter(|(k, _)| sel >> k & 1 == 1)
            .map(|(_, g)| g.clone())
            .collect();
        let accepted: Vec<Mask> = interps
            .iter()
            .copied()
            .filter(|&i| {
                let rules = decide_modals(p, |m| eval(&reduce(&modal_formula(m), &phi), i));
                is_answer_set(&rules, i)
            })
            .collect();
        for a in collections(&interps) {
            let holds = phi.iter().all(|g| a.iter().any(|&i| !eval(g, i)));
            if a == accepted && holds {
                candidates.push((sel, a));
            }
        }
    }
    let mut out: Vec<_> = candidates
        .iter()
        .filter(|(sel, _)| {
            !candidates
                .iter()
                .any(|(other, _)| other != sel && sel & !other == 0)
        })
        .map(|(sel, a)| {
            let phi = ep
                .iter()
                .enumerate()
                .filter(|(k, _)| sel >> k & 1 == 1)
                .map(|(_, g)| match g {
                    F::Lit(l) => (*l, false),
                    F::Not(inner) => match **inner {
                        F::Lit(l) => (l, true),
                        _ => unreachable!(),
                    },
                    _ => unreachable!(),
                })
                .collect();
            (phi, a.clone())
        })
        .collect();
    out.sort_by(|x, y| (&x.1, &x.0).cmp(&(&y.1, &y.0)));
    out
}

fn popcount(x: Mask) -> u32 {
    x.count_ones()
}

/// Every unfounded collection of `(X, I)` pairs over the world view `a`,
/// found by trying every subset of all candidate pairs.
pub fn unfounded_collections(p: &Program, a: &[Mask]) -> Vec<Vec<(Mask, Mask)>> {
    let pairs: Vec<(Mask, Mask)> = a
        .iter()
        .flat_map(|&i| (1..=i).filter(move |x| x & !i == 0).map(move |x| (x, i)))
        .collect();
    assert!(pairs.len() <= 20, "pair oracle limited to 20 pairs");
    let mut out = Vec::new();
    for sel in 1u64..1 << pairs.len() {
        let chosen: Vec<(Mask, Mask)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| sel >> k & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let support = chosen.iter().fold(0, |s, &(x, _)| s | x);
        let unfounded = chosen.iter().all(|&(x, i)| {
            p.rules().iter().all(|r| {
                if !r.head().iter().any(|&l| has(x, l)) {
                    return true;
                }
                let body_true = r.body().iter().all(|b| match *b {
                    ExtendedLiteral::Objective(l) => has(i, l),
                    ExtendedLiteral::DefaultNeg(l) => !has(i, l),
                    ExtendedLiteral::Modal(m) => modal_true(a, m),
                });
                let circular = r
                    .body()
                    .iter()
                    .any(|b| matches!(*b, ExtendedLiteral::Objective(l) if has(x, l)));
                let elsewhere = r.head().iter().any(|&l| has(i, l) && !has(x, l));
                let k_support = r.body().iter().any(|b| {
                    matches!(*b, ExtendedLiteral::Modal(m)
                        if m.op == ModalOp::K && !m.default_neg && has(support, m.lit))
                });
                !body_true || circular || elsewhere || k_support
            })
        });
        if unfounded {
            out.push(chosen);
        }
    }
    out
}

/// The unfounded collections of least total size `Σ|X|`.
pub fn minimal_unfounded(p: &Program, a: &[Mask]) -> Vec<Vec<(Mask, Mask)>> {
    let all = unfounded_collections(p, a);
    let size = |c: &Vec<(Mask, Mask)>| c.iter().map(|&(x, _)| popcount(x)).sum::<u32>();
    let least = all.iter().map(size).min();
    all.iter()
        .filter(|c| Some(size(c)) == least)
        .cloned()
        .collect()
}
