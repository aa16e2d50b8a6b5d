//! Set-interval propagators: ternary intersection, subset, and a
//! cardinality range.
//!
//! Union, difference and disjointness are all the intersection core seen
//! through complement and constant-set views; membership of an integer in
//! a set is the subset core with a singleton view on the integer.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::iter;
use crate::kernel::{Range, RangeSeq, VarId};
use crate::var::EventSet;
use crate::view::{
    ComplementView, ConstSetView, IntVar, SetVar, SetView, SingletonSetView,
};

use super::sub_set;

/// `z = x ∩ y` on set bounds.
#[derive(Clone)]
pub struct SetIntersect<X: SetView, Y: SetView, Z: SetView> {
    pub x: X,
    pub y: Y,
    pub z: Z,
}

impl<X: SetView, Y: SetView, Z: SetView> SetIntersect<X, Y, Z> {
    pub fn boxed(x: X, y: Y, z: Z) -> Box<dyn Propagator> {
        Box::new(SetIntersect { x, y, z })
    }
}

impl<X: SetView, Y: SetView, Z: SetView> Propagator for SetIntersect<X, Y, Z> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        let es = EventSet::SET_ALL;
        [
            sub_set(&self.x, es),
            sub_set(&self.y, es),
            sub_set(&self.z, es),
        ]
        .into_iter()
        .flatten()
        .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        loop {
            let gx = self.x.glb(ctx.store);
            let gy = self.y.glb(ctx.store);
            let lx = self.x.lub(ctx.store);
            let ly = self.y.lub(ctx.store);
            let gz = self.z.glb(ctx.store);
            let lz = self.z.lub(ctx.store);

            let mut changed = false;
            // z ⊇ x∩y on lower bounds, z ⊆ x∩y on upper bounds
            let glb_xy = iter::collect_seq(iter::inter(gx.iter(), gy.iter()));
            let lub_xy = iter::collect_seq(iter::inter(lx.iter(), ly.iter()));
            changed |= self.z.adjglb(ctx.store, &glb_xy).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            changed |= self.z.adjlub(ctx.store, &lub_xy).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            // every element of z is in both x and y
            changed |= self.x.adjglb(ctx.store, &gz).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            changed |= self.y.adjglb(ctx.store, &gz).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            // an element known in y but excluded from z cannot be in x,
            // and symmetrically
            let ban_x = iter::collect_seq(iter::diff(gy.iter(), lz.iter()));
            let keep_x = iter::collect_seq(iter::diff(lx.iter(), ban_x.iter()));
            changed |= self.x.adjlub(ctx.store, &keep_x).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            let ban_y = iter::collect_seq(iter::diff(gx.iter(), lz.iter()));
            let keep_y = iter::collect_seq(iter::diff(ly.iter(), ban_y.iter()));
            changed |= self.y.adjlub(ctx.store, &keep_y).changed();
            if ctx.store.failed() {
                return PropStatus::Failed;
            }
            if !changed {
                break;
            }
        }
        if self.x.is_assigned(ctx.store)
            && self.y.is_assigned(ctx.store)
            && self.z.is_assigned(ctx.store)
        {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "set_intersect"
    }
}

/// `z = x ∩ y`.
pub fn set_intersect(x: VarId, y: VarId, z: VarId) -> Box<dyn Propagator> {
    SetIntersect::boxed(SetVar(x), SetVar(y), SetVar(z))
}

/// `z = x ∪ y`, derived as `z̄ = x̄ ∩ ȳ` through complement views over
/// `universe`.
pub fn set_union(x: VarId, y: VarId, z: VarId, universe: Range) -> Box<dyn Propagator> {
    SetIntersect::boxed(
        ComplementView::new(SetVar(x), universe),
        ComplementView::new(SetVar(y), universe),
        ComplementView::new(SetVar(z), universe),
    )
}

/// `z = x \ y`, derived as `z = x ∩ ȳ`.
pub fn set_difference(x: VarId, y: VarId, z: VarId, universe: Range) -> Box<dyn Propagator> {
    SetIntersect::boxed(
        SetVar(x),
        ComplementView::new(SetVar(y), universe),
        SetVar(z),
    )
}

/// `x ∩ y = ∅`, derived with a constant empty set on the result.
pub fn set_disjoint(x: VarId, y: VarId) -> Box<dyn Propagator> {
    SetIntersect::boxed(SetVar(x), SetVar(y), ConstSetView(RangeSeq::empty()))
}

/// `x ⊆ y` on set bounds.
#[derive(Clone)]
pub struct SetSubset<X: SetView, Y: SetView> {
    pub x: X,
    pub y: Y,
}

impl<X: SetView, Y: SetView> SetSubset<X, Y> {
    pub fn boxed(x: X, y: Y) -> Box<dyn Propagator> {
        Box::new(SetSubset { x, y })
    }
}

impl<X: SetView, Y: SetView> Propagator for SetSubset<X, Y> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        [
            sub_set(&self.x, EventSet::SET_ALL),
            sub_set(&self.y, EventSet::SET_ALL),
        ]
        .into_iter()
        .flatten()
        .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        // pruning x's lub may grow x's glb (a singleton view assigning
        // its integer), so iterate to the internal fixpoint
        loop {
            let gx = self.x.glb(ctx.store);
            let ev_y = self.y.adjglb(ctx.store, &gx);
            if ev_y.is_failed() {
                return PropStatus::Failed;
            }
            let ly = self.y.lub(ctx.store);
            let ev_x = self.x.adjlub(ctx.store, &ly);
            if ev_x.is_failed() {
                return PropStatus::Failed;
            }
            if !ev_y.changed() && !ev_x.changed() {
                break;
            }
        }
        if self
            .x
            .lub(ctx.store)
            .is_subset_of(&self.y.glb(ctx.store))
        {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "set_subset"
    }
}

/// `x ⊆ y`.
pub fn set_subset(x: VarId, y: VarId) -> Box<dyn Propagator> {
    SetSubset::boxed(SetVar(x), SetVar(y))
}

/// Membership `e ∈ y` of an integer variable, derived as `{e} ⊆ y`
/// through a singleton view.
pub fn set_member(e: VarId, y: VarId) -> Box<dyn Propagator> {
    SetSubset::boxed(SingletonSetView::new(IntVar(e)), SetVar(y))
}

/// Cardinality range `lo ≤ |s| ≤ hi`.
#[derive(Clone)]
pub struct SetCardRange<S: SetView> {
    pub s: S,
    pub lo: u64,
    pub hi: u64,
}

impl<S: SetView> SetCardRange<S> {
    pub fn boxed(s: S, lo: u64, hi: u64) -> Box<dyn Propagator> {
        assert!(lo <= hi);
        Box::new(SetCardRange { s, lo, hi })
    }
}

impl<S: SetView> Propagator for SetCardRange<S> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        sub_set(&self.s, EventSet::SET_ALL).into_iter().collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let glb = self.s.glb(ctx.store);
        let lub = self.s.lub(ctx.store);
        let (ng, nl) = (glb.cardinality(), lub.cardinality());
        if ng > self.hi || nl < self.lo {
            ctx.store.mark_failed();
            return PropStatus::Failed;
        }
        if ng == self.hi && ng < nl {
            // the lower bound saturates the cardinality: fix s = glb
            if self.s.adjlub(ctx.store, &glb).is_failed() {
                return PropStatus::Failed;
            }
            return PropStatus::Subsumed;
        }
        if nl == self.lo && ng < nl {
            // the upper bound is minimal: fix s = lub
            if self.s.adjglb(ctx.store, &lub).is_failed() {
                return PropStatus::Failed;
            }
            return PropStatus::Subsumed;
        }
        if ng == nl {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "set_card_range"
    }
}

/// `lo ≤ |s| ≤ hi`.
pub fn set_card_range(s: VarId, lo: u64, hi: u64) -> Box<dyn Propagator> {
    SetCardRange::boxed(SetVar(s), lo, hi)
}
