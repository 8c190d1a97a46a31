//! Exhaustive enumeration engines for the supported semantics.
//!
//! Every engine enforces an atom cap before enumerating; see [`Config`].

mod g91;
mod gl;
mod narrative;
mod se16;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::semantics::{Interpretation, PhiGuess, WorldView, MAX_ATOMS};
use crate::syntax::Program;

pub use g91::{g91_world_views, g91_world_views_with, is_g91_world_view};
pub(crate) use gl::require_non_epistemic as gl_require_non_epistemic;
pub use gl::{gl_answer_sets, gl_answer_sets_with, BaseSemantics, Gl};
pub use narrative::{check_narrative_fragment, narrative_world_views, narrative_world_views_with};
pub use se16::{se16_candidate, se16_world_views, se16_world_views_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsId {
    Gl,
    G91,
    Se16,
    Narrative,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 4] = [
        SemanticsId::Gl,
        SemanticsId::G91,
        SemanticsId::Se16,
        SemanticsId::Narrative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsId::Gl => "gl",
            SemanticsId::G91 => "g91",
            SemanticsId::Se16 => "se16",
            SemanticsId::Narrative => "narrative",
        }
    }

    /// Default atom cap for this engine.
    pub fn default_cap(self) -> usize {
        match self {
            SemanticsId::Gl => 12,
            SemanticsId::G91 | SemanticsId::Se16 | SemanticsId::Narrative => 4,
        }
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SemanticsId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}` (expected gl, g91, se16 or narrative)"))
    }
}

/// Engine limits. `max_atoms` overrides every per-semantics default cap.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub max_atoms: Option<usize>,
}

impl Config {
    pub fn with_max_atoms(max_atoms: usize) -> Self {
        Config {
            max_atoms: Some(max_atoms),
        }
    }

    pub fn cap(&self, s: SemanticsId) -> usize {
        self.max_atoms
            .unwrap_or_else(|| s.default_cap())
            .min(MAX_ATOMS)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub interpretations_checked: u64,
    pub collections_checked: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub semantics: SemanticsId,
    /// Populated for GL only.
    pub answer_sets: Vec<Interpretation>,
    /// Canonically ordered; empty for GL.
    pub world_views: Vec<WorldView>,
    /// Populated for SE16 only: the maximal guesses yielding each world view.
    pub phi_per_world_view: BTreeMap<WorldView, BTreeSet<PhiGuess>>,
    pub stats: Stats,
}

impl SolveResult {
    /// World views, or for GL each answer set as a singleton collection.
    pub fn collections(&self) -> Vec<WorldView> {
        match self.semantics {
            SemanticsId::Gl => self
                .answer_sets
                .iter()
                .copied()
                .map(WorldView::singleton)
                .collect(),
            _ => self.world_views.clone(),
        }
    }
}

pub fn solve(p: &Program, s: SemanticsId) -> Result<SolveResult> {
    solve_with(p, s, &Config::default())
}

pub fn solve_with(p: &Program, s: SemanticsId, config: &Config) -> Result<SolveResult> {
    let start = Instant::now();
    let mut stats = Stats::default();
    let mut result = SolveResult {
        semantics: s,
        answer_sets: Vec::new(),
        world_views: Vec::new(),
        phi_per_world_view: BTreeMap::new(),
        stats,
    };
    match s {
        SemanticsId::Gl => {
            if let Some((index, r)) = p.rules().iter().enumerate().find(|(_, r)| r.has_modal()) {
                return Err(Error::NotApplicable {
                    semantics: "gl",
                    index,
                    rule: p.render_rule(r),
                });
            }
            result.answer_sets = gl::answer_sets(p, &Gl, config.cap(s), &mut stats)?;
        }
        SemanticsId::G91 => {
            result.world_views = g91::world_views(p, config.cap(s), &mut stats)?;
        }
        SemanticsId::Se16 => {
            let pairs = se16::world_views(p, &Gl, config.cap(s), &mut stats)?;
            for (phi, a) in pairs {
                result.phi_per_world_view.entry(a).or_default().insert(phi);
            }
            result.world_views = result.phi_per_world_view.keys().cloned().collect();
        }
        SemanticsId::Narrative => {
            result.world_views = narrative::world_views(p, config.cap(s), &mut stats)?;
        }
    }
    stats.elapsed = start.elapsed();
    result.stats = stats;
    Ok(result)
}
