//! Abstract syntax, parser and printer for propositional epistemic programs.

mod ast;
mod parser;

use std::collections::BTreeSet;

pub use ast::{
    Atom, EpNegLiteral, ExtendedLiteral, ModalLiteral, ModalOp, ObjectLiteral, Program, Rule,
    SymbolTable,
};
pub use parser::{parse_program, parse_program_with, ParseOptions, Warning};

/// Canonical surface text of a program, one rule per line.
pub fn render(p: &Program) -> String {
    p.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub non_epistemic: bool,
    pub subjective_constraints: Vec<usize>,
    pub atoms: usize,
}

pub fn classify(p: &Program) -> Classification {
    Classification {
        non_epistemic: p.is_non_epistemic(),
        subjective_constraints: p
            .rules()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_subjective_constraint())
            .map(|(i, _)| i)
            .collect(),
        atoms: p.atom_count(),
    }
}

/// The epistemic negations a program's modal literals abbreviate:
/// `not l` for every `K l`/`not K l`, `not ¬l` for every `M l`/`not M l`.
pub fn epistemic_negations(p: &Program) -> BTreeSet<EpNegLiteral> {
    p.rules()
        .iter()
        .flat_map(|r| r.modal_body())
        .map(EpNegLiteral::of_modal)
        .collect()
}
