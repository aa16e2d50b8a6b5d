//! Bounds-propagating linear equation over unit terms:
//! `Σ aᵢ + Σ bⱼ = c` where every term is an integer view.
//!
//! The core handles unit coefficients only; coefficients and signs come
//! from scale and minus views on the terms. With unit (identity, offset,
//! minus) views the propagator achieves integer bounds consistency; with
//! scale views it only achieves rational bounds consistency, because the
//! transformed domains are no longer intervals of consecutive integers.
//!
//! Two independently-typed term arrays keep the propagator monomorphic
//! while still allowing differently-viewed term groups in one sum.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::kernel::{Val, VarId};
use crate::var::EventSet;
use crate::view::{IntVar, IntView, MinusView, ScaleView};

use super::sub_int;

#[derive(Clone)]
pub struct LinearEq<A: IntView, B: IntView> {
    pub a: Vec<A>,
    pub b: Vec<B>,
    pub c: Val,
}

impl<A: IntView, B: IntView> LinearEq<A, B> {
    pub fn new(a: Vec<A>, b: Vec<B>, c: Val) -> Self {
        LinearEq { a, b, c }
    }

    pub fn boxed(a: Vec<A>, b: Vec<B>, c: Val) -> Box<dyn Propagator> {
        Box::new(Self::new(a, b, c))
    }

    fn bounds(&self, ctx: &Ctx) -> (i128, i128) {
        let mut lo = 0i128;
        let mut hi = 0i128;
        for t in &self.a {
            lo += t.min(ctx.store) as i128;
            hi += t.max(ctx.store) as i128;
        }
        for t in &self.b {
            lo += t.min(ctx.store) as i128;
            hi += t.max(ctx.store) as i128;
        }
        (lo, hi)
    }
}

fn prune_term<V: IntView>(t: &V, ctx: &mut Ctx, c: i128, lo: i128, hi: i128) -> bool {
    let tmin = t.min(ctx.store) as i128;
    let tmax = t.max(ctx.store) as i128;
    // c = term + (rest) with rest ∈ [lo - tmin, hi - tmax]
    let ub = c - (lo - tmin);
    let lb = c - (hi - tmax);
    let mut changed = false;
    if ub < tmax {
        changed |= t.adjmax(ctx.store, ub as Val).changed();
    }
    if lb > tmin && !ctx.store.failed() {
        changed |= t.adjmin(ctx.store, lb as Val).changed();
    }
    changed
}

impl<A: IntView, B: IntView> Propagator for LinearEq<A, B> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        let es = EventSet::LBC | EventSet::UBC | EventSet::VAL;
        self.a
            .iter()
            .filter_map(|t| sub_int(t, es))
            .chain(self.b.iter().filter_map(|t| sub_int(t, es)))
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let c = self.c as i128;
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
            for i in 0..self.a.len() {
                let t = self.a[i].clone();
                changed |= prune_term(&t, ctx, c, lo, hi);
                if ctx.store.failed() {
                    return PropStatus::Failed;
                }
            }
            for i in 0..self.b.len() {
                let t = self.b[i].clone();
                changed |= prune_term(&t, ctx, c, lo, hi);
                if ctx.store.failed() {
                    return PropStatus::Failed;
                }
            }
            if !changed {
                return PropStatus::AtFixpoint;
            }
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "linear_eq"
    }
}

/// `Σ xᵢ = c` with identity views.
pub fn linear_eq(xs: &[VarId], c: Val) -> Box<dyn Propagator> {
    LinearEq::boxed(xs.iter().map(|&x| IntVar(x)).collect(), Vec::<IntVar>::new(), c)
}

/// `Σ posᵢ - Σ negⱼ = c`, deriving the signs through minus views.
pub fn linear_eq_signed(pos: &[VarId], neg: &[VarId], c: Val) -> Box<dyn Propagator> {
    LinearEq::boxed(
        pos.iter().map(|&x| IntVar(x)).collect(),
        neg.iter().map(|&x| MinusView::new(IntVar(x))).collect(),
        c,
    )
}

/// `Σ bᵢ = c` over Boolean variables, derived by presenting each Boolean
/// as an integer over {0, 1}.
pub fn linear_eq_bools(bs: &[VarId], c: Val) -> Box<dyn Propagator> {
    use crate::view::{BoolVar, IntOfBool};
    LinearEq::boxed(
        bs.iter().map(|&b| IntOfBool::new(BoolVar(b))).collect(),
        Vec::<IntVar>::new(),
        c,
    )
}

/// `Σ aᵢ·posᵢ - Σ bⱼ·negⱼ = c` with `aᵢ, bⱼ ≥ 1`, deriving the
/// coefficients through scale views (and minus views for the negated
/// group). Rational-bounds-complete only: see the module docs.
pub fn linear_eq_scaled(pos: &[(Val, VarId)], neg: &[(Val, VarId)], c: Val) -> Box<dyn Propagator> {
    LinearEq::boxed(
        pos.iter()
            .map(|&(a, x)| ScaleView::new(IntVar(x), a))
            .collect(),
        neg.iter()
            .map(|&(a, x)| MinusView::new(ScaleView::new(IntVar(x), a)))
            .collect(),
        c,
    )
}
