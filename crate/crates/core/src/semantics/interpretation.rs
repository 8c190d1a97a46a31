use std::fmt;

use crate::syntax::{ObjectLiteral, Program, SymbolTable};

/// Largest atom count an [`Interpretation`] bitset can hold.
pub const MAX_ATOMS: usize = 32;

const EVEN: u64 = 0x5555_5555_5555_5555;

/// A consistent set of object literals, stored as a bitset with slot
/// `2·id` for `a` and `2·id+1` for `-a`. Ordered by bitset value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation(u64);

impl Interpretation {
    pub const EMPTY: Interpretation = Interpretation(0);

    /// `None` if the bits contain both `a` and `-a` for some atom.
    pub fn from_bits(bits: u64) -> Option<Self> {
        is_consistent(bits).then_some(Interpretation(bits))
    }

    pub fn from_literals(lits: impl IntoIterator<Item = ObjectLiteral>) -> Option<Self> {
        let bits = lits.into_iter().fold(0u64, |acc, l| acc | 1 << l.slot());
        Self::from_bits(bits)
    }

    /// Looks up atoms by name; a leading `-` selects the strong negation.
    pub fn from_names(symbols: &SymbolTable, names: &[&str]) -> Option<Self> {
        let lits: Option<Vec<_>> = names
            .iter()
            .map(|n| match n.strip_prefix('-') {
                Some(rest) => symbols.lookup(rest).map(ObjectLiteral::neg),
                None => symbols.lookup(n).map(ObjectLiteral::pos),
            })
            .collect();
        Self::from_literals(lits?)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, lit: ObjectLiteral) -> bool {
        self.0 >> lit.slot() & 1 == 1
    }

    /// Adds a literal, or `None` if that would make the set inconsistent.
    pub fn with(self, lit: ObjectLiteral) -> Option<Self> {
        Self::from_bits(self.0 | 1 << lit.slot())
    }

    pub fn without(self, lit: ObjectLiteral) -> Self {
        Interpretation(self.0 & !(1 << lit.slot()))
    }

    pub fn union(self, other: Self) -> Option<Self> {
        Self::from_bits(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Interpretation(self.0 & !other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn literals(self) -> impl Iterator<Item = ObjectLiteral> {
        let bits = self.0;
        (0..64)
            .filter(move |s| bits >> s & 1 == 1)
            .map(ObjectLiteral::from_slot)
    }

    /// Every subset of `self`, including ∅ and `self`, in ascending bit order.
    pub fn subsets(self) -> Submasks {
        Submasks::new(self.0)
    }

    /// Literal names sorted alphabetically.
    pub fn names(self, symbols: &SymbolTable) -> Vec<String> {
        let mut names: Vec<String> = self.literals().map(|l| symbols.literal_name(l)).collect();
        names.sort();
        names
    }

    pub fn render(self, symbols: &SymbolTable) -> String {
        format!("{{{}}}", self.names(symbols).join(","))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.literals().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if l.strong_neg {
                write!(f, "-")?;
            }
            write!(f, "#{}", l.atom.id())?;
        }
        write!(f, "}}")
    }
}

fn is_consistent(bits: u64) -> bool {
    bits & EVEN & (bits >> 1) == 0
}

/// Ascending enumeration of all submasks of a mask.
#[derive(Clone, Debug)]
pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Submasks {
    fn new(mask: u64) -> Self {
        Submasks {
            mask,
            next: Some(0),
        }
    }
}

impl Iterator for Submasks {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        loop {
            let cur = self.next?;
            self.next = if cur == self.mask {
                None
            } else {
                Some((cur | !self.mask).wrapping_add(1) & self.mask)
            };
            if is_consistent(cur) {
                return Some(Interpretation(cur));
            }
        }
    }
}

/// Bitset of every literal slot a program can make true: all atoms, plus
/// `-a` for each atom whose strong negation occurs somewhere.
pub fn literal_universe(p: &Program) -> u64 {
    let mut mask = 0u64;
    for a in p.symbols().atoms() {
        mask |= 1 << ObjectLiteral::pos(a).slot();
    }
    for lit in p.rules().iter().flat_map(|r| r.literals()) {
        mask |= 1 << lit.slot();
    }
    mask
}

/// All consistent interpretations over the program's literal universe, ascending.
pub fn interpretations(p: &Program) -> Submasks {
    Submasks::new(literal_universe(p))
}
