use crate::error::{Error, Result};
use crate::syntax::SymbolTable;

use super::Interpretation;

/// A non-empty set of interpretations, kept sorted and deduplicated.
/// World views compare lexicographically on their ordered members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorldView(Vec<Interpretation>);

impl WorldView {
    pub fn new(members: impl IntoIterator<Item = Interpretation>) -> Result<Self> {
        let mut members: Vec<_> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptyWorldView);
        }
        Ok(WorldView(members))
    }

    pub fn singleton(i: Interpretation) -> Self {
        WorldView(vec![i])
    }

    pub fn members(&self) -> &[Interpretation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: Interpretation) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Interpretation> + '_ {
        self.0.iter().copied()
    }

    pub fn names(&self, symbols: &SymbolTable) -> Vec<Vec<String>> {
        self.0.iter().map(|i| i.names(symbols)).collect()
    }

    /// `{ {p}, {q} }`
    pub fn render(&self, symbols: &SymbolTable) -> String {
        let inner: Vec<String> = self.0.iter().map(|i| i.render(symbols)).collect();
        format!("{{ {} }}", inner.join(", "))
    }
}
