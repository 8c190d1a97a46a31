use crate::syntax::{ExtendedLiteral, ModalLiteral, ModalOp, ObjectLiteral, Rule};

use super::{Interpretation, WorldView};

/// `l` holds iff it is in `i`; `not l` holds iff it is not.
pub fn sat_objective(i: Interpretation, lit: ObjectLiteral, default_neg: bool) -> bool {
    i.contains(lit) != default_neg
}

/// `K l` holds iff `l` is in every member, `M l` iff it is in some member.
pub fn sat_modal(a: &WorldView, m: ModalLiteral) -> bool {
    let holds = match m.op {
        ModalOp::K => a.iter().all(|i| i.contains(m.lit)),
        ModalOp::M => a.iter().any(|i| i.contains(m.lit)),
    };
    holds != m.default_neg
}

/// Evaluates a conjunctive body, delegating modal literals to `modal`.
pub fn body_holds(
    i: Interpretation,
    body: &[ExtendedLiteral],
    mut modal: impl FnMut(ModalLiteral) -> bool,
) -> bool {
    body.iter().all(|b| match *b {
        ExtendedLiteral::Objective(l) => sat_objective(i, l, false),
        ExtendedLiteral::DefaultNeg(l) => sat_objective(i, l, true),
        ExtendedLiteral::Modal(m) => modal(m),
    })
}

pub fn head_holds(i: Interpretation, head: &[ObjectLiteral]) -> bool {
    head.iter().any(|&l| i.contains(l))
}

/// A rule holds in `(a, i)` iff its body fails or some head literal is in `i`.
pub fn sat_rule(a: &WorldView, i: Interpretation, r: &Rule) -> bool {
    !body_holds(i, r.body(), |m| sat_modal(a, m)) || head_holds(i, r.head())
}

/// Rule satisfaction for rules without modal literals.
///
/// Panics if the rule is epistemic.
pub fn sat_rule_objective(i: Interpretation, r: &Rule) -> bool {
    !body_holds(i, r.body(), |_| panic!("modal literal in objective rule"))
        || head_holds(i, r.head())
}
