//! All-different over integer views.
//!
//! Two cores: a value propagator (remove the value of every assigned
//! variable from the others) and a bounds propagator (Hall-interval
//! sweep, quadratic). With offset views either core directly yields the
//! "all different with offsets" constraint used by problems like n-queens
//! (`xᵢ + i` all different) without any new propagation code.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::kernel::{Val, VarId};
use crate::var::EventSet;
use crate::view::{IntVar, IntView, OffsetView};

use super::sub_int;

#[derive(Clone)]
pub struct AlldiffValue<V: IntView> {
    pub xs: Vec<V>,
    /// Assigned variables whose value has already been pruned elsewhere.
    done: Vec<bool>,
}

impl<V: IntView> AlldiffValue<V> {
    pub fn boxed(xs: Vec<V>) -> Box<dyn Propagator> {
        let done = vec![false; xs.len()];
        Box::new(AlldiffValue { xs, done })
    }
}

impl<V: IntView> Propagator for AlldiffValue<V> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        self.xs
            .iter()
            .filter_map(|x| sub_int(x, EventSet::VAL))
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        loop {
            let mut progressed = false;
            for i in 0..self.xs.len() {
                if self.done[i] || !self.xs[i].is_assigned(ctx.store) {
                    continue;
                }
                let v = self.xs[i].value(ctx.store);
                for j in 0..self.xs.len() {
                    if j == i {
                        continue;
                    }
                    let xj = self.xs[j].clone();
                    if xj.exclude(ctx.store, v).is_failed() {
                        return PropStatus::Failed;
                    }
                }
                self.done[i] = true;
                progressed = true;
            }
            if !progressed {
                break;
            }
        }
        if self.done.iter().filter(|d| !**d).count() <= 1 {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "alldiff_value"
    }
}

/// All-different (value propagation) on plain variables.
pub fn alldiff_value(xs: &[VarId]) -> Box<dyn Propagator> {
    AlldiffValue::boxed(xs.iter().map(|&x| IntVar(x)).collect())
}

/// All-different on `xᵢ + cᵢ`, derived through offset views.
pub fn alldiff_value_offset(xs: &[(VarId, Val)]) -> Box<dyn Propagator> {
    AlldiffValue::boxed(
        xs.iter()
            .map(|&(x, c)| OffsetView::new(IntVar(x), c))
            .collect(),
    )
}

#[derive(Clone)]
pub struct AlldiffBounds<V: IntView> {
    pub xs: Vec<V>,
}

impl<V: IntView> AlldiffBounds<V> {
    pub fn boxed(xs: Vec<V>) -> Box<dyn Propagator> {
        Box::new(AlldiffBounds { xs })
    }
}

impl<V: IntView> Propagator for AlldiffBounds<V> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        let es = EventSet::LBC | EventSet::UBC | EventSet::VAL;
        self.xs.iter().filter_map(|x| sub_int(x, es)).collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let n = self.xs.len();
        loop {
            let mins: Vec<Val> = self.xs.iter().map(|x| x.min(ctx.store)).collect();
            let maxs: Vec<Val> = self.xs.iter().map(|x| x.max(ctx.store)).collect();
            let mut changed = false;
            // Hall-interval sweep over candidate intervals [a, b] taken
            // from the current bounds.
            for &a in &mins {
                for &b in &maxs {
                    if a > b {
                        continue;
                    }
                    let width = (b as i128 - a as i128 + 1) as u64;
                    if width > n as u64 {
                        continue;
                    }
                    let inside: Vec<usize> = (0..n)
                        .filter(|&i| a <= mins[i] && maxs[i] <= b)
                        .collect();
                    if (inside.len() as u64) > width {
                        ctx.store.mark_failed();
                        return PropStatus::Failed;
                    }
                    if inside.len() as u64 == width {
                        // Hall interval: no variable outside it may take a
                        // value inside it.
                        for i in 0..n {
                            if inside.contains(&i) {
                                continue;
                            }
                            if a <= mins[i] && mins[i] <= b {
                                changed |= self.xs[i]
                                    .clone()
                                    .adjmin(ctx.store, b + 1)
                                    .changed();
                            }
                            if !ctx.store.failed() && a <= maxs[i] && maxs[i] <= b {
                                changed |= self.xs[i]
                                    .clone()
                                    .adjmax(ctx.store, a - 1)
                                    .changed();
                            }
                            if ctx.store.failed() {
                                return PropStatus::Failed;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // entailed only when the hulls are pairwise disjoint: a lone
        // unassigned variable may still contain an assigned value in its
        // interior, which bounds propagation cannot remove
        let mins: Vec<Val> = self.xs.iter().map(|x| x.min(ctx.store)).collect();
        let maxs: Vec<Val> = self.xs.iter().map(|x| x.max(ctx.store)).collect();
        let disjoint = (0..n).all(|i| {
            (i + 1..n).all(|j| maxs[i] < mins[j] || maxs[j] < mins[i])
        });
        if disjoint {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "alldiff_bounds"
    }
}

/// All-different (bounds propagation) on plain variables.
pub fn alldiff_bounds(xs: &[VarId]) -> Box<dyn Propagator> {
    AlldiffBounds::boxed(xs.iter().map(|&x| IntVar(x)).collect())
}

/// All-different (bounds propagation) on `xᵢ + cᵢ` through offset views.
pub fn alldiff_bounds_offset(xs: &[(VarId, Val)]) -> Box<dyn Propagator> {
    AlldiffBounds::boxed(
        xs.iter()
            .map(|&(x, c)| OffsetView::new(IntVar(x), c))
            .collect(),
    )
}
