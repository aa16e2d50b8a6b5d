//! Reified linear equation: `b ⇔ (Σ xᵢ = c)`.
//!
//! The dual `b ⇔ (Σ xᵢ ≠ c)` is not a separate propagator: it is this
//! core with a negation view on the control literal.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::kernel::{Val, VarId};
use crate::var::EventSet;
use crate::view::{BoolVar, BoolView, IntVar, IntView, NegBoolView};

use super::{sub_bool, sub_int};

#[derive(Clone)]
pub struct ReifiedLinearEq<B: BoolView, V: IntView> {
    pub b: B,
    pub xs: Vec<V>,
    pub c: Val,
}

impl<B: BoolView, V: IntView> ReifiedLinearEq<B, V> {
    pub fn boxed(b: B, xs: Vec<V>, c: Val) -> Box<dyn Propagator> {
        Box::new(ReifiedLinearEq { b, xs, c })
    }

    fn bounds(&self, ctx: &Ctx) -> (i128, i128) {
        let mut lo = 0i128;
        let mut hi = 0i128;
        for t in &self.xs {
            lo += t.min(ctx.store) as i128;
            hi += t.max(ctx.store) as i128;
        }
        (lo, hi)
    }
}

impl<B: BoolView, V: IntView> Propagator for ReifiedLinearEq<B, V> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        let es = EventSet::LBC | EventSet::UBC | EventSet::VAL;
        sub_bool(&self.b, EventSet::VAL)
            .into_iter()
            .chain(self.xs.iter().filter_map(|t| sub_int(t, es)))
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let c = self.c as i128;
        let (lo, hi) = self.bounds(ctx);
        if lo > c || hi < c {
            // the equation is impossible
            if self.b.set_zero(ctx.store).is_failed() {
                return PropStatus::Failed;
            }
            return PropStatus::Subsumed;
        }
        if lo == c && hi == c {
            // the equation is entailed
            if self.b.set_one(ctx.store).is_failed() {
                return PropStatus::Failed;
            }
            return PropStatus::Subsumed;
        }
        if !self.b.is_assigned(ctx.store) {
            return PropStatus::AtFixpoint;
        }
        if self.b.value(ctx.store) == 1 {
            // enforce Σ xᵢ = c by bounds
            loop {
                let (lo, hi) = self.bounds(ctx);
                if lo > c || hi < c {
                    ctx.store.mark_failed();
                    return PropStatus::Failed;
                }
                if lo == c && hi == c {
                    return PropStatus::Subsumed;
                }
                let mut changed = false;
                for i in 0..self.xs.len() {
                    let t = self.xs[i].clone();
                    let tmin = t.min(ctx.store) as i128;
                    let tmax = t.max(ctx.store) as i128;
                    let ub = c - (lo - tmin);
                    let lb = c - (hi - tmax);
                    if ub < tmax {
                        changed |= t.adjmax(ctx.store, ub as Val).changed();
                    }
                    if lb > tmin && !ctx.store.failed() {
                        changed |= t.adjmin(ctx.store, lb as Val).changed();
                    }
                    if ctx.store.failed() {
                        return PropStatus::Failed;
                    }
                }
                if !changed {
                    return PropStatus::AtFixpoint;
                }
            }
        } else {
            // enforce Σ xᵢ ≠ c: prune only when one variable remains
            let open: Vec<usize> = (0..self.xs.len())
                .filter(|&i| !self.xs[i].is_assigned(ctx.store))
                .collect();
            match open.len() {
                0 => {
                    // lo == hi ≠ c was handled above, so Σ = c here
                    ctx.store.mark_failed();
                    PropStatus::Failed
                }
                1 => {
                    let rest: i128 = (0..self.xs.len())
                        .filter(|&i| i != open[0])
                        .map(|i| self.xs[i].value(ctx.store) as i128)
                        .sum();
                    let forbidden = c - rest;
                    let t = self.xs[open[0]].clone();
                    if t.exclude(ctx.store, forbidden as Val).is_failed() {
                        return PropStatus::Failed;
                    }
                    PropStatus::Subsumed
                }
                _ => PropStatus::AtFixpoint,
            }
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "reified_linear_eq"
    }
}

/// `b ⇔ (Σ xᵢ = c)`.
pub fn reified_linear_eq(b: VarId, xs: &[VarId], c: Val) -> Box<dyn Propagator> {
    ReifiedLinearEq::boxed(BoolVar(b), xs.iter().map(|&x| IntVar(x)).collect(), c)
}

/// `b ⇔ (Σ xᵢ ≠ c)`, derived through a negation view on `b`.
pub fn reified_linear_ne(b: VarId, xs: &[VarId], c: Val) -> Box<dyn Propagator> {
    ReifiedLinearEq::boxed(
        NegBoolView::new(BoolVar(b)),
        xs.iter().map(|&x| IntVar(x)).collect(),
        c,
    )
}
