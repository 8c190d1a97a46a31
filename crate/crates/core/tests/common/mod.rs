//! Shared test support: a seeded random program generator and brute-force
//! oracles that do not reuse the library's enumeration or reduct code.

#![allow(dead_code)]

pub mod checks;
pub mod oracle;

use elp::syntax::parse_program;
use elp::syntax::{Atom, ExtendedLiteral, ModalLiteral, ModalOp, ObjectLiteral};
use elp::{Program, Rule};
use rand::Rng;

#[derive(Clone, Copy, Debug)]
pub struct GenOptions {
    pub max_atoms: usize,
    pub max_rules: usize,
    pub epistemic: bool,
    pub strong_negation: bool,
}

const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn literal(rng: &mut impl Rng, atoms: usize, strong_negation: bool) -> String {
    let name = NAMES[rng.random_range(0..atoms)];
    if strong_negation && rng.random_bool(0.15) {
        format!("-{name}")
    } else {
        name.to_owned()
    }
}

/// Random program text in surface syntax.
pub fn random_text(rng: &mut impl Rng, opts: GenOptions) -> String {
    let atoms = rng.random_range(1..=opts.max_atoms);
    let rules = rng.random_range(1..=opts.max_rules);
    let mut out = String::new();
    for _ in 0..rules {
        let head_len = match rng.random_range(0..10) {
            0..=1 => 0,
            2..=7 => 1,
            _ => 2,
        };
        let body_len = rng.random_range(if head_len == 0 { 1 } else { 0 }..=3);
        let head: Vec<String> = (0..head_len)
            .map(|_| literal(rng, atoms, opts.strong_negation))
            .collect();
        let body: Vec<String> = (0..body_len)
            .map(|_| {
                let lit = literal(rng, atoms, opts.strong_negation);
                let kinds = if opts.epistemic { 4 } else { 2 };
                match rng.random_range(0..kinds) {
                    0 => lit,
                    1 => format!("not {lit}"),
                    _ => {
                        let op = if rng.random_bool(0.5) { "K" } else { "M" };
                        let neg = if rng.random_bool(0.4) { "not " } else { "" };
                        format!("{neg}{op} {lit}")
                    }
                }
            })
            .collect();
        match (head.is_empty(), body.is_empty()) {
            (_, true) => out.push_str(&format!("{}.\n", head.join(" | "))),
            (true, false) => out.push_str(&format!(":- {}.\n", body.join(", "))),
            (false, false) => {
                out.push_str(&format!("{} :- {}.\n", head.join(" | "), body.join(", ")))
            }
        }
    }
    out
}

pub fn random_program(rng: &mut impl Rng, opts: GenOptions) -> Program {
    parse_program(&random_text(rng, opts)).expect("generator emits valid syntax")
}

/// A random constraint over the atoms of `p` (which must have at least one).
pub fn random_constraint(rng: &mut impl Rng, p: &Program, epistemic: bool) -> Rule {
    let atoms: Vec<Atom> = p.symbols().atoms().collect();
    let len = rng.random_range(1..=2);
    let body = (0..len)
        .map(|_| {
            let lit = ObjectLiteral::pos(atoms[rng.random_range(0..atoms.len())]);
            let kinds = if epistemic { 4 } else { 2 };
            match rng.random_range(0..kinds) {
                0 => ExtendedLiteral::Objective(lit),
                1 => ExtendedLiteral::DefaultNeg(lit),
                k => ExtendedLiteral::Modal(ModalLiteral {
                    op: ModalOp::K,
                    lit,
                    default_neg: k == 3,
                }),
            }
        })
        .collect();
    Rule::constraint(body)
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
