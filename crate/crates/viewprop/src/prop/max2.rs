//! Bounds-propagating binary maximum `z = max(x, y)`.
//!
//! Minimum is not a separate propagator: `z = min(x, y)` is derived as
//! `-z = max(-x, -y)` through minus views on all three positions.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::kernel::VarId;
use crate::var::EventSet;
use crate::view::{IntVar, IntView, MinusView};

use super::sub_int;

#[derive(Clone)]
pub struct Max2<X: IntView, Y: IntView, Z: IntView> {
    pub x: X,
    pub y: Y,
    pub z: Z,
}

impl<X: IntView, Y: IntView, Z: IntView> Max2<X, Y, Z> {
    pub fn boxed(x: X, y: Y, z: Z) -> Box<dyn Propagator> {
        Box::new(Max2 { x, y, z })
    }
}

impl<X: IntView, Y: IntView, Z: IntView> Propagator for Max2<X, Y, Z> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        let es = EventSet::LBC | EventSet::UBC | EventSet::VAL;
        [
            sub_int(&self.x, es),
            sub_int(&self.y, es),
            sub_int(&self.z, es),
        ]
        .into_iter()
        .flatten()
        .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        loop {
            let (xl, xu) = (self.x.min(ctx.store), self.x.max(ctx.store));
            let (yl, yu) = (self.y.min(ctx.store), self.y.max(ctx.store));
            let mut changed = false;
            changed |= self.z.adjmin(ctx.store, xl.max(yl)).changed();
            changed |= self.z.adjmax(ctx.store, xu.max(yu)).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            let (zl, zu) = (self.z.min(ctx.store), self.z.max(ctx.store));
            changed |= self.x.adjmax(ctx.store, zu).changed();
            changed |= self.y.adjmax(ctx.store, zu).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            // if one side cannot reach z's lower bound the other must
            if self.x.max(ctx.store) < zl {
                changed |= self.y.adjmin(ctx.store, zl).changed();
            }
            if !ctx.store.failed() && self.y.max(ctx.store) < zl {
                changed |= self.x.adjmin(ctx.store, zl).changed();
            }
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            if !changed {
                break;
            }
        }
        let assigned = self.x.is_assigned(ctx.store)
            && self.y.is_assigned(ctx.store)
            && self.z.is_assigned(ctx.store);
        if assigned {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "max2"
    }
}

/// `z = max(x, y)`.
pub fn max2(x: VarId, y: VarId, z: VarId) -> Box<dyn Propagator> {
    Max2::boxed(IntVar(x), IntVar(y), IntVar(z))
}

/// `z = min(x, y)`, derived as `-z = max(-x, -y)` through minus views.
pub fn min2(x: VarId, y: VarId, z: VarId) -> Box<dyn Propagator> {
    Max2::boxed(
        MinusView::new(IntVar(x)),
        MinusView::new(IntVar(y)),
        MinusView::new(IntVar(z)),
    )
}

/// N-ary maximum `z = max(x₁, …, xₙ)`, bounds-propagating.
#[derive(Clone)]
pub struct MaxN<V: IntView, Z: IntView> {
    pub xs: Vec<V>,
    pub z: Z,
}

impl<V: IntView, Z: IntView> MaxN<V, Z> {
    pub fn boxed(xs: Vec<V>, z: Z) -> Box<dyn Propagator> {
        assert!(!xs.is_empty());
        Box::new(MaxN { xs, z })
    }
}

impl<V: IntView, Z: IntView> Propagator for MaxN<V, Z> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        let es = EventSet::LBC | EventSet::UBC | EventSet::VAL;
        self.xs
            .iter()
            .filter_map(|x| sub_int(x, es))
            .chain(sub_int(&self.z, es))
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        loop {
            let mut changed = false;
            let lo = self.xs.iter().map(|x| x.min(ctx.store)).max().unwrap();
            let hi = self.xs.iter().map(|x| x.max(ctx.store)).max().unwrap();
            changed |= self.z.adjmin(ctx.store, lo).changed();
            changed |= self.z.adjmax(ctx.store, hi).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            let (zl, zu) = (self.z.min(ctx.store), self.z.max(ctx.store));
            for i in 0..self.xs.len() {
                changed |= self.xs[i].clone().adjmax(ctx.store, zu).changed();
                if ctx.store.failed() {
                    return PropStatus::Failed;
                }
            }
            // if exactly one variable can still reach z's lower bound it must
            let reach: Vec<usize> = (0..self.xs.len())
                .filter(|&i| self.xs[i].max(ctx.store) >= zl)
                .collect();
            if let [only] = reach[..] {
                changed |= self.xs[only].clone().adjmin(ctx.store, zl).changed();
                if ctx.store.failed() {
                    return PropStatus::Failed;
                }
            }
            if !changed {
                break;
            }
        }
        if self.xs.iter().all(|x| x.is_assigned(ctx.store)) && self.z.is_assigned(ctx.store) {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "max_n"
    }
}

/// `z = max(x₁, …, xₙ)`.
pub fn max_n(xs: &[VarId], z: VarId) -> Box<dyn Propagator> {
    MaxN::boxed(xs.iter().map(|&x| IntVar(x)).collect(), IntVar(z))
}

/// `z = min(x₁, …, xₙ)`, derived through minus views on every position.
pub fn min_n(xs: &[VarId], z: VarId) -> Box<dyn Propagator> {
    MaxN::boxed(
        xs.iter().map(|&x| MinusView::new(IntVar(x))).collect(),
        MinusView::new(IntVar(z)),
    )
}
