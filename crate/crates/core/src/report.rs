//! Reports for the command-line front end, rendered as text or as JSON
//! with sorted keys.
//!
//! Reports contain no timings, so the JSON form is byte-stable across runs.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::properties::{
    check_constraint_monotonicity, find_epistemic_unfounded, find_unfounded_set, query_filter,
    split_constraint, CmReport, UnfoundedWitness,
};
use crate::semantics::{Interpretation, WorldView};
use crate::solvers::{solve_with, Config, SemanticsId, SolveResult};
use crate::syntax::{Program, SymbolTable};

pub const SPLITTING_NOTE: &str =
    "every semantics with epistemic splitting satisfies subjective constraint monotonicity, so a failure here also rules out epistemic splitting";

#[derive(Clone, Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProgramInfo {
    pub file: String,
    pub sha256: String,
    pub atoms: usize,
    pub rules: Vec<String>,
}

impl ProgramInfo {
    pub fn new(file: &str, source: &str, p: &Program) -> Self {
        ProgramInfo {
            file: file.to_owned(),
            sha256: hex::encode(Sha256::digest(source.as_bytes())),
            atoms: p.atom_count(),
            rules: p.rules().iter().map(|r| p.render_rule(r)).collect(),
        }
    }
}

type Names = Vec<String>;

#[derive(Clone, Debug, Serialize)]
pub struct GuessEntry {
    pub world_view: Vec<Names>,
    pub phi: Vec<Names>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveSection {
    pub semantics: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub answer_sets: Option<Vec<Names>>,
    pub world_views: Vec<Vec<Names>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guesses: Option<Vec<GuessEntry>>,
    pub interpretations_checked: u64,
    pub collections_checked: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CmSection {
    pub semantics: String,
    pub constraint: String,
    pub constraint_index: usize,
    pub holds: bool,
    pub with_constraint: Vec<Vec<Names>>,
    pub without_constraint: Vec<Vec<Names>>,
    pub violations: Vec<Vec<Names>>,
    pub query: Vec<Vec<Names>>,
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub unfounded: Names,
    pub interpretation: Names,
}

#[derive(Clone, Debug, Serialize)]
pub struct FoundednessEntry {
    pub world_view: Vec<Names>,
    /// `founded`, `unfounded` or `error`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<PairEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FoundednessSection {
    pub semantics: String,
    pub checker: &'static str,
    pub results: Vec<FoundednessEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareRow {
    pub semantics: String,
    /// `ok` or `error`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub foundedness: Option<FoundednessSection>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Results {
    Solve(SolveSection),
    Cm(CmSection),
    Foundedness(FoundednessSection),
    Compare(Vec<CompareRow>),
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub program: ProgramInfo,
    pub command: &'static str,
    pub results: Results,
}

fn wv_names(symbols: &SymbolTable, wvs: &[WorldView]) -> Vec<Vec<Names>> {
    wvs.iter().map(|a| a.names(symbols)).collect()
}

fn render_names(i: &Names) -> String {
    format!("{{{}}}", i.join(","))
}

fn render_wv_names(a: &[Names]) -> String {
    let inner: Vec<String> = a.iter().map(render_names).collect();
    format!("{{ {} }}", inner.join(", "))
}

fn tool() -> ToolInfo {
    ToolInfo {
        name: "elp",
        version: env!("CARGO_PKG_VERSION"),
    }
}

impl SolveSection {
    pub fn new(p: &Program, r: &SolveResult) -> Self {
        let s = p.symbols();
        SolveSection {
            semantics: r.semantics.name().to_owned(),
            answer_sets: (r.semantics == SemanticsId::Gl)
                .then(|| r.answer_sets.iter().map(|i| i.names(s)).collect()),
            world_views: wv_names(s, &r.world_views),
            guesses: (r.semantics == SemanticsId::Se16).then(|| {
                r.phi_per_world_view
                    .iter()
                    .map(|(a, phis)| GuessEntry {
                        world_view: a.names(s),
                        phi: phis.iter().map(|phi| phi.names(s)).collect(),
                    })
                    .collect()
            }),
            interpretations_checked: r.stats.interpretations_checked,
            collections_checked: r.stats.collections_checked,
        }
    }

    fn text(&self, out: &mut String) {
        if let Some(sets) = &self.answer_sets {
            if sets.is_empty() {
                out.push_str("no answer sets\n");
            }
            for i in sets {
                out.push_str(&format!("answer set: {}\n", render_names(i)));
            }
            return;
        }
        if self.world_views.is_empty() {
            out.push_str("no world views\n");
        }
        for a in &self.world_views {
            out.push_str(&format!("world view: {}\n", render_wv_names(a)));
            if let Some(g) = self.guesses.iter().flatten().find(|g| &g.world_view == a) {
                for phi in &g.phi {
                    out.push_str(&format!("  phi: {{{}}}\n", phi.join(", ")));
                }
            }
        }
    }
}

impl CmSection {
    pub fn new(p: &Program, index: usize, r: &CmReport, query: &[WorldView]) -> Self {
        let s = p.symbols();
        CmSection {
            semantics: r.semantics.name().to_owned(),
            constraint: p.render_rule(&p.rules()[index]),
            constraint_index: index,
            holds: r.holds,
            with_constraint: wv_names(s, &r.wv_with_c),
            without_constraint: wv_names(s, &r.wv_without_c),
            violations: wv_names(s, &r.violations),
            query: wv_names(s, query),
            note: SPLITTING_NOTE,
        }
    }

    fn text(&self, out: &mut String) {
        let list = |wvs: &[Vec<Names>]| {
            if wvs.is_empty() {
                "none".to_owned()
            } else {
                wvs.iter()
                    .map(|a| render_wv_names(a))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        out.push_str(&format!(
            "property: constraint monotonicity ({})\n",
            self.semantics
        ));
        out.push_str(&format!(
            "constraint: {} (rule {})\n",
            self.constraint, self.constraint_index
        ));
        out.push_str(&format!(
            "with constraint: {}\n",
            list(&self.with_constraint)
        ));
        out.push_str(&format!(
            "without constraint: {}\n",
            list(&self.without_constraint)
        ));
        out.push_str(&format!("as query: {}\n", list(&self.query)));
        for v in &self.violations {
            out.push_str(&format!("violation: {}\n", render_wv_names(v)));
        }
        out.push_str(&format!("holds: {}\n", self.holds));
        if !self.holds {
            out.push_str(&format!("note: {}\n", self.note));
        }
    }
}

impl FoundednessSection {
    fn text(&self, out: &mut String) {
        out.push_str(&format!(
            "property: foundedness ({}, {} checker)\n",
            self.semantics, self.checker
        ));
        if self.results.is_empty() {
            out.push_str("nothing to check: no world views\n");
        }
        for e in &self.results {
            out.push_str(&format!(
                "world view: {} {}\n",
                render_wv_names(&e.world_view),
                e.status
            ));
            for w in e.witnesses.iter().flatten() {
                let pairs: Vec<String> = w
                    .iter()
                    .map(|x| {
                        format!(
                            "<{}, {}>",
                            render_names(&x.unfounded),
                            render_names(&x.interpretation)
                        )
                    })
                    .collect();
                out.push_str(&format!("  witness: [{}]\n", pairs.join(", ")));
            }
            if let Some(err) = &e.error {
                out.push_str(&format!("  error: {err}\n"));
            }
        }
    }

    fn verdict(&self) -> String {
        let unfounded = self
            .results
            .iter()
            .filter(|e| e.status == "unfounded")
            .count();
        let errors = self.results.iter().filter(|e| e.status == "error").count();
        match (unfounded, errors) {
            (0, 0) if self.results.is_empty() => "-".to_owned(),
            (0, 0) => "founded".to_owned(),
            (u, 0) => format!("{u} unfounded"),
            (u, e) => format!("{u} unfounded, {e} error"),
        }
    }
}

fn witness_entry(symbols: &SymbolTable, w: &UnfoundedWitness) -> Vec<PairEntry> {
    w.pairs
        .iter()
        .map(|x| PairEntry {
            unfounded: x.unfounded.names(symbols),
            interpretation: x.interpretation.names(symbols),
        })
        .collect()
}

/// Runs the foundedness checker on every world view (or answer set) of `p`.
///
/// Non-epistemic programs are checked member by member with the plain
/// unfounded-set finder; epistemic programs with the collection finder.
pub fn foundedness(p: &Program, s: SemanticsId, config: &Config) -> Result<FoundednessSection> {
    let result = solve_with(p, s, config)?;
    let symbols = p.symbols();
    let non_epistemic = p.is_non_epistemic();
    let results = result
        .collections()
        .iter()
        .map(|a| {
            let found: Result<Vec<UnfoundedWitness>> = if non_epistemic {
                a.iter()
                    .filter_map(|i: Interpretation| find_unfounded_set(p, i).transpose())
                    .collect()
            } else {
                find_epistemic_unfounded(p, a).map(|w| w.into_iter().collect())
            };
            match found {
                Ok(ws) => FoundednessEntry {
                    world_view: a.names(symbols),
                    status: if ws.is_empty() {
                        "founded"
                    } else {
                        "unfounded"
                    },
                    witnesses: (!ws.is_empty())
                        .then(|| ws.iter().map(|w| witness_entry(symbols, w)).collect()),
                    error: None,
                },
                Err(e) => FoundednessEntry {
                    world_view: a.names(symbols),
                    status: "error",
                    witnesses: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    Ok(FoundednessSection {
        semantics: s.name().to_owned(),
        checker: if non_epistemic {
            "unfounded-set"
        } else {
            "epistemic unfounded-set (witness-compatible reconstruction)"
        },
        results,
    })
}

/// Constraint monotonicity for the constraint at `index` (default: last).
pub fn constraint_monotonicity(
    p: &Program,
    index: Option<usize>,
    s: SemanticsId,
    config: &Config,
) -> Result<CmSection> {
    let (base, c) = split_constraint(p, index)?;
    let index = match index {
        Some(i) => i,
        None => p
            .rules()
            .iter()
            .rposition(|r| r.is_constraint())
            .expect("split succeeded"),
    };
    let cm = check_constraint_monotonicity(&base, &c, s, config)?;
    let query = query_filter(&base, &c, s, config)?;
    Ok(CmSection::new(p, index, &cm, &query))
}

fn compare_row(p: &Program, s: SemanticsId, config: &Config) -> CompareRow {
    let solved = solve_with(p, s, config);
    let result = match solved {
        Ok(r) => r,
        Err(e) => {
            return CompareRow {
                semantics: s.name().to_owned(),
                status: "error",
                error: Some(e.to_string()),
                solve: None,
                cm: None,
                foundedness: None,
            }
        }
    };
    let has_constraint = p.rules().iter().any(|r| r.is_constraint());
    let cm = has_constraint.then(|| match constraint_monotonicity(p, None, s, config) {
        Ok(section) => serde_json::json!({
            "holds": section.holds,
            "violations": section.violations,
        }),
        Err(e) => serde_json::json!({ "error": e.to_string() }),
    });
    let foundedness = foundedness(p, s, config).ok();
    CompareRow {
        semantics: s.name().to_owned(),
        status: "ok",
        error: None,
        solve: Some(SolveSection::new(p, &result)),
        cm,
        foundedness,
    }
}

impl Report {
    fn new(file: &str, source: &str, p: &Program, command: &'static str, results: Results) -> Self {
        Report {
            tool: tool(),
            program: ProgramInfo::new(file, source, p),
            command,
            results,
        }
    }

    pub fn solve(
        file: &str,
        source: &str,
        p: &Program,
        s: SemanticsId,
        config: &Config,
    ) -> Result<Self> {
        let r = solve_with(p, s, config)?;
        Ok(Self::new(
            file,
            source,
            p,
            "solve",
            Results::Solve(SolveSection::new(p, &r)),
        ))
    }

    pub fn check_cm(
        file: &str,
        source: &str,
        p: &Program,
        s: SemanticsId,
        index: Option<usize>,
        config: &Config,
    ) -> Result<Self> {
        let section = constraint_monotonicity(p, index, s, config)?;
        Ok(Self::new(file, source, p, "check", Results::Cm(section)))
    }

    pub fn check_foundedness(
        file: &str,
        source: &str,
        p: &Program,
        s: SemanticsId,
        config: &Config,
    ) -> Result<Self> {
        let section = foundedness(p, s, config)?;
        Ok(Self::new(
            file,
            source,
            p,
            "check",
            Results::Foundedness(section),
        ))
    }

    /// One row per semantics; a failing row does not stop the others.
    pub fn compare(file: &str, source: &str, p: &Program, config: &Config) -> Self {
        let rows = SemanticsId::ALL
            .into_iter()
            .map(|s| compare_row(p, s, config))
            .collect();
        Self::new(file, source, p, "compare", Results::Compare(rows))
    }

    /// Pretty JSON with lexicographically sorted object keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        let mut out = serde_json::to_string_pretty(&value).expect("value is serializable");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "program: {} (sha256 {})\n",
            self.program.file,
            &self.program.sha256[..12]
        );
        match &self.results {
            Results::Solve(s) => {
                out.push_str(&format!("semantics: {}\n", s.semantics));
                s.text(&mut out);
            }
            Results::Cm(c) => c.text(&mut out),
            Results::Foundedness(f) => f.text(&mut out),
            Results::Compare(rows) => {
                for row in rows {
                    out.push_str(&format!("{:<10} ", row.semantics));
                    let Some(solve) = &row.solve else {
                        out.push_str(&format!("error: {}\n", row.error.as_deref().unwrap_or("")));
                        continue;
                    };
                    let results = match &solve.answer_sets {
                        Some(sets) if sets.is_empty() => "none".to_owned(),
                        Some(sets) => sets.iter().map(render_names).collect::<Vec<_>>().join(" "),
                        None if solve.world_views.is_empty() => "none".to_owned(),
                        None => solve
                            .world_views
                            .iter()
                            .map(|a| render_wv_names(a))
                            .collect::<Vec<_>>()
                            .join(" "),
                    };
                    let cm = match &row.cm {
                        None => "-".to_owned(),
                        Some(v) => match v.get("holds").and_then(Value::as_bool) {
                            Some(true) => "holds".to_owned(),
                            Some(false) => "fails".to_owned(),
                            None => "error".to_owned(),
                        },
                    };
                    let founded = row
                        .foundedness
                        .as_ref()
                        .map_or_else(|| "error".to_owned(), FoundednessSection::verdict);
                    out.push_str(&format!("{results} | cm: {cm} | foundedness: {founded}\n"));
                }
            }
        }
        out
    }
}

/// Exit status for a failed command: 2 for cap violations, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::SearchTooLarge { .. } => 2,
        _ => 1,
    }
}
