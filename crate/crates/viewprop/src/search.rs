//! Depth-first search and branch-and-bound over copied spaces.
//!
//! Search copies the space before branching; no trailing. Branching is
//! deterministic given a [`BranchSpec`], so run statistics (except wall
//! time) are reproducible.

use std::time::Instant;

use crate::engine::{Space, SpaceStatus};
use crate::kernel::{RangeSeq, Val, VarId};
use crate::var::{BoolDom, VarDom};

/// Variable selection heuristic; value selection is always the minimum
/// value (for set variables: include the smallest undecided element
/// first).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum VarSelect {
    #[default]
    FirstUnassigned,
    MinSize,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BranchSpec {
    pub var_select: VarSelect,
}

/// Search statistics; `failures + solutions ≤ nodes`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunStats {
    pub solutions: u64,
    pub failures: u64,
    pub propagations: u64,
    pub nodes: u64,
    pub wall_ms: u128,
}

fn domain_size(s: &Space, x: VarId) -> u64 {
    match s.store.dom(x) {
        VarDom::Int(d) => d.cardinality(),
        VarDom::Bool(b) => {
            if *b == BoolDom::Both {
                2
            } else {
                1
            }
        }
        VarDom::Set(sd) => 1 + sd.lub.cardinality() - sd.glb.cardinality(),
    }
}

fn pick_var(s: &Space, b: BranchSpec) -> Option<VarId> {
    let open = s
        .decision_vars
        .iter()
        .copied()
        .filter(|&x| !s.store.is_assigned(x));
    match b.var_select {
        VarSelect::FirstUnassigned => open.take(1).next(),
        VarSelect::MinSize => open.min_by_key(|&x| (domain_size(s, x), x.0)),
    }
}

/// The two children of a branching decision on `x`, left first.
fn branch(s: &Space, x: VarId) -> (Space, Space) {
    let mut left = s.clone();
    let mut right = s.clone();
    match s.store.dom(x) {
        VarDom::Int(d) => {
            let v = d.min().unwrap();
            left.store.int_assign(x, v);
            right.store.int_exclude(x, v);
        }
        VarDom::Bool(_) => {
            left.store.bool_zero(x);
            right.store.bool_one(x);
        }
        VarDom::Set(sd) => {
            // smallest element not yet decided
            let e = crate::iter::diff(sd.lub.iter(), sd.glb.iter())
                .next()
                .unwrap()
                .lo;
            left.store.set_adjglb(x, &RangeSeq::singleton(e));
            let without = crate::iter::collect_seq(crate::iter::diff(
                sd.lub.iter(),
                RangeSeq::singleton(e).iter(),
            ));
            right.store.set_adjlub(x, &without);
        }
    }
    (left, right)
}

fn explore(
    mut s: Space,
    b: BranchSpec,
    limit: Option<u64>,
    stats: &mut RunStats,
    on_solution: &mut dyn FnMut(&Space),
) -> bool {
    if let Some(l) = limit {
        if stats.solutions >= l {
            return true;
        }
    }
    stats.nodes += 1;
    let before = s.n_propagations;
    let status = s.fixpoint();
    stats.propagations += s.n_propagations - before;
    if status == SpaceStatus::Failed {
        stats.failures += 1;
        return false;
    }
    match pick_var(&s, b) {
        None => {
            stats.solutions += 1;
            on_solution(&s);
            limit.is_some_and(|l| stats.solutions >= l)
        }
        Some(x) => {
            let (left, right) = branch(&s, x);
            drop(s);
            if explore(left, b, limit, stats, on_solution) {
                return true;
            }
            explore(right, b, limit, stats, on_solution)
        }
    }
}

/// Complete depth-first enumeration, stopping early after `limit`
/// solutions when given. The callback sees every solution space.
pub fn dfs(
    s: Space,
    b: BranchSpec,
    limit: Option<u64>,
    mut on_solution: impl FnMut(&Space),
) -> RunStats {
    let start = Instant::now();
    let mut stats = RunStats::default();
    explore(s, b, limit, &mut stats, &mut on_solution);
    stats.wall_ms = start.elapsed().as_millis();
    stats
}

fn explore_bnb(
    mut s: Space,
    b: BranchSpec,
    objective: VarId,
    best: &mut Option<(Vec<Val>, Val)>,
    stats: &mut RunStats,
) {
    stats.nodes += 1;
    // strict improvement over the incumbent
    if let Some((_, bound)) = best {
        if s.store.int_adjmax(objective, *bound - 1).is_failed() {
            stats.failures += 1;
            return;
        }
    }
    let before = s.n_propagations;
    let status = s.fixpoint();
    stats.propagations += s.n_propagations - before;
    if status == SpaceStatus::Failed {
        stats.failures += 1;
        return;
    }
    match pick_var(&s, b) {
        None => {
            stats.solutions += 1;
            *best = Some((s.solution(), s.store.int_val(objective)));
        }
        Some(x) => {
            let (left, right) = branch(&s, x);
            drop(s);
            explore_bnb(left, b, objective, best, stats);
            explore_bnb(right, b, objective, best, stats);
        }
    }
}

/// Branch and bound minimizing `objective`; returns the optimal solution
/// (decision-variable values plus objective value), if any.
pub fn branch_and_bound(
    s: Space,
    objective: VarId,
    b: BranchSpec,
) -> (Option<(Vec<Val>, Val)>, RunStats) {
    let start = Instant::now();
    let mut stats = RunStats::default();
    let mut best = None;
    explore_bnb(s, b, objective, &mut best, &mut stats);
    stats.wall_ms = start.elapsed().as_millis();
    (best, stats)
}
