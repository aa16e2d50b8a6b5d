//! Differential runs: the same model built in views mode and in
//! decomposed mode, searched identically, with solution sets and failure
//! counts compared.

use crate::engine::Space;
use crate::kernel::Val;
use crate::search::{dfs, BranchSpec, RunStats};
use crate::var::VarDom;

use super::explicit::GVal;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Views,
    Decomposed,
}

/// One solution, as the decision-variable values (sets by their final
/// greatest lower bound, which equals the set since solved set variables
/// have `glb = lub`).
pub type SolutionKey = Vec<GVal>;

pub fn solution_key(space: &Space) -> SolutionKey {
    space
        .decision_vars
        .iter()
        .map(|&x| match space.store.dom(x) {
            VarDom::Int(_) => GVal::Int(space.store.int_val(x)),
            VarDom::Bool(_) => GVal::Int(space.store.bool_val(x)),
            VarDom::Set(sd) => GVal::Set(sd.glb.values().collect()),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct DiffReport {
    pub views: RunStats,
    pub decomposed: RunStats,
    pub solutions_match: bool,
    pub failures_match: bool,
}

impl DiffReport {
    /// Propagation ratio decomposed / views.
    pub fn propagation_ratio(&self) -> f64 {
        self.decomposed.propagations as f64 / self.views.propagations.max(1) as f64
    }

    pub fn equivalent(&self) -> bool {
        self.solutions_match && self.failures_match
    }
}

/// Runs complete search on both spaces with identical branching and
/// compares outcomes. Propagation counts are recorded, not asserted:
/// decomposed ≥ views holds in aggregate, not necessarily per instance.
pub fn differential_run(
    views: Space,
    decomposed: Space,
    branch: BranchSpec,
    limit: Option<u64>,
) -> DiffReport {
    let mut sols_v: Vec<SolutionKey> = Vec::new();
    let stats_v = dfs(views, branch, limit, |s| sols_v.push(solution_key(s)));
    let mut sols_d: Vec<SolutionKey> = Vec::new();
    let stats_d = dfs(decomposed, branch, limit, |s| sols_d.push(solution_key(s)));
    sols_v.sort();
    sols_d.sort();
    DiffReport {
        solutions_match: sols_v == sols_d,
        failures_match: stats_v.failures == stats_d.failures,
        views: stats_v,
        decomposed: stats_d,
    }
}

/// Collects all solutions of one space.
pub fn all_solutions(space: Space, branch: BranchSpec) -> (Vec<SolutionKey>, RunStats) {
    let mut sols = Vec::new();
    let stats = dfs(space, branch, None, |s| sols.push(solution_key(s)));
    sols.sort();
    (sols, stats)
}

/// Convenience used by the CLI: `Val` rows for scalar models.
pub fn int_rows(sols: &[SolutionKey]) -> Vec<Vec<Val>> {
    sols.iter()
        .map(|row| row.iter().map(GVal::int).collect())
        .collect()
}
