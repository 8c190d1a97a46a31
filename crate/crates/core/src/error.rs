use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("program has {atoms} atoms, exceeding the cap of {cap} for {what}")]
    CapExceeded {
        atoms: usize,
        cap: usize,
        what: &'static str,
    },

    #[error(
        "rule {index} (`{rule}`) contains modal literals; a non-epistemic program is required"
    )]
    NotNonEpistemic { index: usize, rule: String },

    #[error("rule {index} (`{rule}`) contains default negation; a positive program is required")]
    NotPositive { index: usize, rule: String },

    #[error("rule {index} (`{rule}`) is outside the narrative fragment: {reason}")]
    FragmentViolation {
        index: usize,
        rule: String,
        reason: &'static str,
    },

    #[error("rule `{rule}` is not a constraint")]
    NotAConstraint { rule: String },

    #[error("program has no constraint")]
    NoConstraint,

    #[error("rule index {index} is not a constraint (program has {len} rules)")]
    BadConstraintIndex { index: usize, len: usize },

    #[error("{what} is not a model: rule {index} (`{rule}`) is violated")]
    NotAModel {
        what: String,
        index: usize,
        rule: String,
    },

    #[error("{what}: {size} exceeds the search limit of {cap}")]
    SearchTooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{semantics} semantics requires a non-epistemic program; rule {index} (`{rule}`) has modal literals")]
    NotApplicable {
        semantics: &'static str,
        index: usize,
        rule: String,
    },

    #[error("world view must be non-empty")]
    EmptyWorldView,
}
