use std::collections::HashMap;
use std::fmt;

/// Interned propositional atom. Ids are dense indices into a [`SymbolTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(u32);

impl Atom {
    pub fn new(id: usize) -> Self {
        Atom(id as u32)
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }
}

/// Bidirectional name/id map. Atoms are numbered in order of first interning.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, Atom>,
}

impl PartialEq for SymbolTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for SymbolTable {}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, name: &str) -> Atom {
        if let Some(&atom) = self.index.get(name) {
            return atom;
        }
        let atom = Atom::new(self.names.len());
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), atom);
        atom
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.index.get(name).copied()
    }

    pub fn name(&self, atom: Atom) -> &str {
        &self.names[atom.id()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        (0..self.names.len()).map(Atom::new)
    }

    /// Surface name of an object literal, `-a` for a strongly negated atom.
    pub fn literal_name(&self, lit: ObjectLiteral) -> String {
        if lit.strong_neg {
            format!("-{}", self.name(lit.atom))
        } else {
            self.name(lit.atom).to_owned()
        }
    }
}

/// An atom or its strong negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectLiteral {
    pub atom: Atom,
    pub strong_neg: bool,
}

impl ObjectLiteral {
    pub fn pos(atom: Atom) -> Self {
        ObjectLiteral {
            atom,
            strong_neg: false,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        ObjectLiteral {
            atom,
            strong_neg: true,
        }
    }

    /// Bit position in an interpretation bitset: `2·id` for `a`, `2·id+1` for `-a`.
    pub fn slot(self) -> usize {
        2 * self.atom.id() + self.strong_neg as usize
    }

    pub fn from_slot(slot: usize) -> Self {
        ObjectLiteral {
            atom: Atom::new(slot / 2),
            strong_neg: slot % 2 == 1,
        }
    }

    /// The complementary literal under strong negation.
    pub fn complement(self) -> Self {
        ObjectLiteral {
            atom: self.atom,
            strong_neg: !self.strong_neg,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModalOp {
    K,
    M,
}

impl fmt::Display for ModalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModalOp::K => f.write_str("K"),
            ModalOp::M => f.write_str("M"),
        }
    }
}

/// `K l`, `M l`, or their default negations `not K l`, `not M l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModalLiteral {
    pub op: ModalOp,
    pub lit: ObjectLiteral,
    pub default_neg: bool,
}

/// A body element of a rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedLiteral {
    Objective(ObjectLiteral),
    DefaultNeg(ObjectLiteral),
    Modal(ModalLiteral),
}

impl ExtendedLiteral {
    pub fn is_modal(&self) -> bool {
        matches!(self, ExtendedLiteral::Modal(_))
    }

    pub fn literal(&self) -> ObjectLiteral {
        match *self {
            ExtendedLiteral::Objective(l) | ExtendedLiteral::DefaultNeg(l) => l,
            ExtendedLiteral::Modal(m) => m.lit,
        }
    }
}

/// Epistemic negation `not l` (`inner_default_neg == false`) or `not ¬l`.
///
/// These are never written by the user; they arise from reading `K l` as
/// `¬not l` and `M l` as `not ¬l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpNegLiteral {
    pub inner: ObjectLiteral,
    pub inner_default_neg: bool,
}

impl EpNegLiteral {
    /// The epistemic negation a modal literal abbreviates.
    pub fn of_modal(m: ModalLiteral) -> Self {
        EpNegLiteral {
            inner: m.lit,
            inner_default_neg: m.op == ModalOp::M,
        }
    }

    pub fn render(&self, symbols: &SymbolTable) -> String {
        let name = symbols.literal_name(self.inner);
        if self.inner_default_neg {
            format!("not not {name}")
        } else {
            format!("not {name}")
        }
    }
}

/// `head_1 | ... | head_m :- body_1, ..., body_n.` An empty head is ⊥.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    head: Vec<ObjectLiteral>,
    body: Vec<ExtendedLiteral>,
}

impl Rule {
    /// Builds a rule, dropping repeated head or body literals (first occurrence wins).
    pub fn new(head: Vec<ObjectLiteral>, body: Vec<ExtendedLiteral>) -> Self {
        Rule {
            head: dedup(head),
            body: dedup(body),
        }
    }

    pub fn fact(head: Vec<ObjectLiteral>) -> Self {
        Rule::new(head, Vec::new())
    }

    pub fn constraint(body: Vec<ExtendedLiteral>) -> Self {
        Rule::new(Vec::new(), body)
    }

    pub fn head(&self) -> &[ObjectLiteral] {
        &self.head
    }

    pub fn body(&self) -> &[ExtendedLiteral] {
        &self.body
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    /// A constraint whose body is non-empty and consists only of modal literals.
    pub fn is_subjective_constraint(&self) -> bool {
        self.is_constraint() && !self.body.is_empty() && self.body.iter().all(|b| b.is_modal())
    }

    pub fn has_modal(&self) -> bool {
        self.body.iter().any(|b| b.is_modal())
    }

    pub fn has_default_neg(&self) -> bool {
        self.body
            .iter()
            .any(|b| matches!(b, ExtendedLiteral::DefaultNeg(_)))
    }

    pub fn positive_body(&self) -> impl Iterator<Item = ObjectLiteral> + '_ {
        self.body.iter().filter_map(|b| match b {
            ExtendedLiteral::Objective(l) => Some(*l),
            _ => None,
        })
    }

    pub fn modal_body(&self) -> impl Iterator<Item = ModalLiteral> + '_ {
        self.body.iter().filter_map(|b| match b {
            ExtendedLiteral::Modal(m) => Some(*m),
            _ => None,
        })
    }

    pub fn literals(&self) -> impl Iterator<Item = ObjectLiteral> + '_ {
        self.head
            .iter()
            .copied()
            .chain(self.body.iter().map(|b| b.literal()))
    }
}

fn dedup<T: PartialEq>(items: Vec<T>) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(items.len());
    for item in items {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

/// An ordered list of rules over a shared symbol table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    rules: Vec<Rule>,
    symbols: SymbolTable,
}

impl Program {
    pub fn new(symbols: SymbolTable, rules: Vec<Rule>) -> Self {
        debug_assert!(rules
            .iter()
            .flat_map(|r| r.literals())
            .all(|l| l.atom.id() < symbols.len()));
        Program { rules, symbols }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn atom_count(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_non_epistemic(&self) -> bool {
        !self.rules.iter().any(Rule::has_modal)
    }

    pub fn is_positive(&self) -> bool {
        self.is_non_epistemic() && !self.rules.iter().any(Rule::has_default_neg)
    }

    /// Same symbols, different rules. Used by reducts.
    pub fn with_rules(&self, rules: Vec<Rule>) -> Program {
        Program {
            rules,
            symbols: self.symbols.clone(),
        }
    }

    pub fn push_rule(&self, rule: Rule) -> Program {
        let mut rules = self.rules.clone();
        rules.push(rule);
        self.with_rules(rules)
    }

    pub fn without_rule(&self, index: usize) -> Program {
        let mut rules = self.rules.clone();
        rules.remove(index);
        self.with_rules(rules)
    }

    /// Appends the rules of `other`, matching atoms by name.
    pub fn union(&self, other: &Program) -> Program {
        let mut symbols = self.symbols.clone();
        let map: Vec<Atom> = other
            .symbols
            .atoms()
            .map(|a| symbols.intern(other.symbols.name(a)))
            .collect();
        let relit = |l: ObjectLiteral| ObjectLiteral {
            atom: map[l.atom.id()],
            strong_neg: l.strong_neg,
        };
        let mut rules = self.rules.clone();
        for r in &other.rules {
            let head = r.head.iter().map(|&l| relit(l)).collect();
            let body = r
                .body
                .iter()
                .map(|b| match *b {
                    ExtendedLiteral::Objective(l) => ExtendedLiteral::Objective(relit(l)),
                    ExtendedLiteral::DefaultNeg(l) => ExtendedLiteral::DefaultNeg(relit(l)),
                    ExtendedLiteral::Modal(m) => ExtendedLiteral::Modal(ModalLiteral {
                        lit: relit(m.lit),
                        ..m
                    }),
                })
                .collect();
            rules.push(Rule::new(head, body));
        }
        Program { rules, symbols }
    }

    /// Renders one rule in surface syntax, without the trailing newline.
    pub fn render_rule(&self, rule: &Rule) -> String {
        let s = &self.symbols;
        let head: Vec<String> = rule.head.iter().map(|&l| s.literal_name(l)).collect();
        let body: Vec<String> = rule
            .body
            .iter()
            .map(|b| match *b {
                ExtendedLiteral::Objective(l) => s.literal_name(l),
                ExtendedLiteral::DefaultNeg(l) => format!("not {}", s.literal_name(l)),
                ExtendedLiteral::Modal(m) => format!(
                    "{}{} {}",
                    if m.default_neg { "not " } else { "" },
                    m.op,
                    s.literal_name(m.lit)
                ),
            })
            .collect();
        match (head.is_empty(), body.is_empty()) {
            (true, true) => "false.".to_owned(),
            (false, true) => format!("{}.", head.join(" | ")),
            (true, false) => format!(":- {}.", body.join(", ")),
            (false, false) => format!("{} :- {}.", head.join(" | "), body.join(", ")),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{}", self.render_rule(rule))?;
        }
        Ok(())
    }
}
