//! Staged machine re-verification that no SRG(76,30,8,14) exists.
//!
//! Each stage recomputes the exact values behind one step of the argument
//! and compares them with the values the argument relies on. Stages are
//! independent: any subset may run, in any order, and yields the same
//! reports. Steps that are geometric prose rather than arithmetic appear as
//! [`ClaimKind::Note`] claims and are never counted as verified.

mod heavy;
mod reduction;
mod tail;
mod value;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use heavy::{EndgameSummary, PairFilterSummary, SubsetSearch};
pub use value::Value;

/// How a claim participates in the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    /// An exact certificate the impossibility argument depends on.
    Exact,
    /// A tally reported alongside the argument (for example how many
    /// graphs a search produced); it enters the verdict but not the
    /// conclusion.
    Count,
    /// A prose step recorded for completeness; always passes.
    Note,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    /// Stable identifier, `stage/name`.
    pub key: String,
    pub desc: String,
    #[serde(serialize_with = "value::as_string")]
    pub expected: Value,
    #[serde(serialize_with = "value::as_string")]
    pub computed: Value,
    pub pass: bool,
    pub kind: ClaimKind,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageReport {
    pub id: String,
    pub anchor: String,
    pub claims: Vec<Claim>,
    pub elapsed_ms: u64,
}

impl StageReport {
    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofLog {
    pub stages: Vec<StageReport>,
    /// `pass` iff every claim of every stage passes.
    pub verdict: Verdict,
    /// True iff every exact certificate passes, ie the impossibility
    /// argument goes through even if some reported tally differs.
    pub conclusion: bool,
}

impl ProofLog {
    fn assemble(mut stages: Vec<StageReport>) -> ProofLog {
        let order = |id: &str| REGISTRY.iter().position(|s| s.id == id).unwrap_or(usize::MAX);
        stages.sort_by_key(|s| order(&s.id));
        let verdict = if stages.iter().all(StageReport::pass) { Verdict::Pass } else { Verdict::Fail };
        let conclusion = stages.iter().flat_map(|s| &s.claims).filter(|c| c.kind == ClaimKind::Exact).all(|c| c.pass);
        ProofLog { stages, verdict, conclusion }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.stages.iter().flat_map(|s| s.failures())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("proof logs serialize")
    }
}

/// Run configuration.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Replacement expected values by claim key, used to check that each
    /// embedded constant is actually tested.
    pub overrides: BTreeMap<String, Value>,
    /// Record wall-clock times; off by default so logs are reproducible.
    pub timings: bool,
}

impl RunOptions {
    pub fn with_timings(mut self) -> Self {
        self.timings = true;
        self
    }

    pub fn with_override(mut self, key: impl Into<String>, value: Value) -> Self {
        self.overrides.insert(key.into(), value);
        self
    }
}

/// Collects the claims of one stage.
pub struct Ctx<'a> {
    stage: &'static str,
    opts: &'a RunOptions,
    claims: Vec<Claim>,
}

impl Ctx<'_> {
    fn push(&mut self, name: &str, desc: &str, kind: ClaimKind, expected: Value, computed: Value) {
        let key = format!("{}/{}", self.stage, name);
        debug_assert!(self.claims.iter().all(|c| c.key != key), "duplicate claim {key}");
        let expected = self.opts.overrides.get(&key).cloned().unwrap_or(expected);
        let pass = kind == ClaimKind::Note || expected == computed;
        self.claims.push(Claim { key, desc: desc.into(), expected, computed, pass, kind });
    }

    /// An exact certificate; a computation error counts as a mismatch.
    pub fn exact(&mut self, name: &str, desc: &str, expected: impl Into<Value>, computed: Result<impl Into<Value>>) {
        self.push(name, desc, ClaimKind::Exact, expected.into(), value::from_result(computed));
    }

    pub fn count(&mut self, name: &str, desc: &str, expected: impl Into<Value>, computed: Result<impl Into<Value>>) {
        self.push(name, desc, ClaimKind::Count, expected.into(), value::from_result(computed));
    }

    /// A prose step, described by `text`.
    pub fn note(&mut self, name: &str, text: &str) {
        self.push(name, text, ClaimKind::Note, Value::Text("analytic step, not machine-checked".into()), Value::Text("not computed".into()));
    }
}

/// Cached computations a stage relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Needs {
    SubsetSearch,
    PairFilter,
    Endgame,
}

/// A registered stage.
pub struct Stage {
    pub id: &'static str,
    pub anchor: &'static str,
    run: fn(&mut Ctx),
    needs: &'static [Needs],
}

static REGISTRY: &[Stage] = &[
    Stage { id: "spectrum", anchor: "eigenvalues, multiplicities and representation dot products", run: reduction::spectrum, needs: &[] },
    Stage { id: "zonal", anchor: "zonal harmonic of degree 4 on the 17-sphere", run: reduction::zonal, needs: &[] },
    Stage { id: "k4-bound", anchor: "4-clique lower bound: every SRG(76,30,8,14) contains K4", run: reduction::k4_bound, needs: &[] },
    Stage { id: "edge-count-k4", anchor: "edge counts around an edge", run: reduction::edge_count, needs: &[] },
    Stage { id: "freq-cases", anchor: "frequency identities and their six applications", run: reduction::freq_cases, needs: &[] },
    Stage { id: "no-k5", anchor: "no K5 subgraph", run: reduction::no_k5, needs: &[] },
    Stage { id: "no-k5-minus-e", anchor: "no K5 minus an edge", run: reduction::no_k5_minus_e, needs: &[] },
    Stage { id: "degmat-g012", anchor: "equitable partition around a K4", run: reduction::degmat_g012, needs: &[] },
    Stage { id: "case1-avg-edges", anchor: "reduction, case 1: average edge count of H_x", run: reduction::case1_avg_edges, needs: &[] },
    Stage { id: "case1-kernel", anchor: "reduction, case 1: the complement of G2 is SRG(40,12,2,4)", run: reduction::case1_kernel, needs: &[] },
    Stage { id: "case1-srg40-splits", anchor: "reduction, case 1: neighbourhood splits of the SRG(40,12,2,4)", run: reduction::case1_splits, needs: &[] },
    Stage { id: "sub3111", anchor: "reduction, subcase (3,1,1,1): a K6,10", run: reduction::sub3111, needs: &[] },
    Stage { id: "sub2220", anchor: "reduction, subcase (2,2,2,0): a 16-coclique", run: reduction::sub2220, needs: &[] },
    Stage { id: "sub2211-freq", anchor: "reduction, subcase (2,2,1,1): outside neighbour counts", run: reduction::sub2211_freq, needs: &[] },
    Stage { id: "sub2211-situation-22", anchor: "reduction, subcase (2,2,1,1), y in G2, situation (2,2)", run: reduction::sub2211_situation_22, needs: &[] },
    Stage { id: "sub2211-situation-21", anchor: "reduction, subcase (2,2,1,1), y in G2, situation (2,1): a K6,10", run: reduction::sub2211_situation_21, needs: &[] },
    Stage { id: "sub2211-situation-11", anchor: "reduction, subcase (2,2,1,1), y in G2, situation (1,1): a K6,10", run: reduction::sub2211_situation_11, needs: &[] },
    Stage { id: "sub2211-y-in-g1", anchor: "reduction, subcase (2,2,1,1), y in G1", run: reduction::sub2211_y_in_g1, needs: &[] },
    Stage { id: "sub2211-branch-01", anchor: "reduction, subcase (2,2,1,1), second frequency solution: a 16-coclique", run: reduction::sub2211_branch_01, needs: &[] },
    Stage { id: "sec6-srg40", anchor: "no SRG(40,12,2,4) with 4-regular splits", run: tail::sec6_srg40, needs: &[] },
    Stage { id: "sec7-coclique", anchor: "no 16-coclique: projections and cycle structure", run: tail::sec7_coclique, needs: &[] },
    Stage { id: "sec7-clique", anchor: "no 16-coclique: clique search on 8-subsets", run: tail::sec7_clique, needs: &[Needs::SubsetSearch] },
    Stage { id: "sec8-relations", anchor: "no K6,10: neighbour counts into the two sides", run: tail::sec8_relations, needs: &[] },
    Stage { id: "sec8-projection", anchor: "no K6,10: projections onto the complement", run: tail::sec8_projection, needs: &[] },
    Stage { id: "sec8-pair-filter", anchor: "no K6,10: candidate subgraphs H1 and H2", run: tail::sec8_pair_filter, needs: &[Needs::PairFilter] },
    Stage { id: "sec8-endgame", anchor: "no K6,10: Gram filter and one-vertex extensions", run: tail::sec8_endgame, needs: &[Needs::PairFilter, Needs::Endgame] },
];

/// Stage ids in the order of the argument.
pub fn stage_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|s| s.id).collect()
}

fn find(id: &str) -> Result<&'static Stage> {
    REGISTRY.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownStage(id.into()))
}

fn execute(stage: &Stage, opts: &RunOptions) -> StageReport {
    let start = Instant::now();
    let mut ctx = Ctx { stage: stage.id, opts, claims: Vec::new() };
    (stage.run)(&mut ctx);
    let elapsed_ms = if opts.timings { start.elapsed().as_millis() as u64 } else { 0 };
    StageReport { id: stage.id.into(), anchor: stage.anchor.into(), claims: ctx.claims, elapsed_ms }
}

// Shared caches are filled up front; filling one from inside a parallel
// stage could block a worker on a cache another worker is computing.
fn warm(stages: &[&Stage]) {
    for s in stages {
        for need in s.needs {
            match need {
                Needs::SubsetSearch => {
                    heavy::subset_search();
                }
                Needs::PairFilter => {
                    heavy::pair_filter();
                }
                Needs::Endgame => {
                    heavy::endgame();
                }
            }
        }
    }
}

pub fn run_stage(id: &str) -> Result<StageReport> {
    run_stage_with(id, &RunOptions::default())
}

pub fn run_stage_with(id: &str, opts: &RunOptions) -> Result<StageReport> {
    let stage = find(id)?;
    warm(&[stage]);
    Ok(execute(stage, opts))
}

/// Run the given stages (in any order) and assemble a log in registry order.
pub fn run_stages(ids: &[&str], opts: &RunOptions) -> Result<ProofLog> {
    let stages: Vec<&Stage> = ids.iter().map(|id| find(id)).collect::<Result<_>>()?;
    warm(&stages);
    let reports: Vec<StageReport> = stages.par_iter().map(|s| execute(s, opts)).collect();
    Ok(ProofLog::assemble(reports))
}

pub fn run_all() -> ProofLog {
    run_all_with(&RunOptions::default())
}

pub fn run_all_with(opts: &RunOptions) -> ProofLog {
    run_stages(&stage_ids(), opts).expect("registered stages exist")
}

/// Run the stages whose ids match a glob pattern such as `sec7-*`.
pub fn run_filtered(pattern: &str, opts: &RunOptions) -> Result<ProofLog> {
    let pat = glob::Pattern::new(pattern).map_err(|e| Error::InvalidInput(format!("stage pattern {pattern:?}: {e}")))?;
    let ids: Vec<&str> = REGISTRY.iter().map(|s| s.id).filter(|id| pat.matches(id)).collect();
    if ids.is_empty() {
        return Err(Error::UnknownStage(pattern.into()));
    }
    run_stages(&ids, opts)
}
