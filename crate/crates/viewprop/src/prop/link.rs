//! View-constraint ("link") propagators used by decomposition: the
//! explicit constraint `x′ = φ(x)` between a base variable and an
//! auxiliary variable, implemented directly on variables — no views.
//!
//! A decomposed model replaces each derived propagator with auxiliary
//! variables, one link per viewed position, and the core on the
//! auxiliaries. All links are domain-complete, so the decomposition
//! reaches the same fixpoints as the view-derived propagator; it just
//! takes more propagator invocations to get there.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::iter;
use crate::kernel::{Range, RangeSeq, VarId};
use crate::var::{BoolDom, EventSet};
use crate::view::ViewSpec;

/// `y = φ(x)` for an integer-valued spec (identity, offset, minus,
/// scale, and compositions thereof), domain-complete by value
/// enumeration through the spec's value maps.
#[derive(Clone)]
pub struct LinkInt {
    pub x: VarId,
    pub y: VarId,
    pub spec: ViewSpec,
}

impl LinkInt {
    pub fn boxed(x: VarId, y: VarId, spec: ViewSpec) -> Box<dyn Propagator> {
        Box::new(LinkInt { x, y, spec })
    }
}

impl Propagator for LinkInt {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        vec![(self.x, EventSet::DMC), (self.y, EventSet::DMC)]
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let dx = ctx.store.int_dom(self.x).clone();
        let dy = ctx.store.int_dom(self.y).clone();
        let new_x = RangeSeq::from_values(dx.values().filter(|&v| {
            self.spec
                .apply_int(v)
                .map(|w| dy.contains(w))
                .unwrap_or(false)
        }));
        let new_y = RangeSeq::from_values(
            new_x
                .values()
                .map(|v| self.spec.apply_int(v).expect("link overflow")),
        );
        if new_x.is_empty() {
            ctx.store.mark_failed();
            return PropStatus::Failed;
        }
        if ctx.store.int_setdom(self.x, new_x.clone()).is_failed()
            || ctx.store.int_setdom(self.y, new_y).is_failed()
        {
            return PropStatus::Failed;
        }
        if new_x.is_singleton() {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "link_int"
    }
}

/// `y = ¬x` between two Boolean variables.
#[derive(Clone)]
pub struct LinkBoolNeg {
    pub x: VarId,
    pub y: VarId,
}

impl LinkBoolNeg {
    pub fn boxed(x: VarId, y: VarId) -> Box<dyn Propagator> {
        Box::new(LinkBoolNeg { x, y })
    }
}

impl Propagator for LinkBoolNeg {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        vec![(self.x, EventSet::VAL), (self.y, EventSet::VAL)]
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let ev = match (ctx.store.bool_dom(self.x), ctx.store.bool_dom(self.y)) {
            (BoolDom::Both, BoolDom::Both) => return PropStatus::AtFixpoint,
            (BoolDom::Zero, _) => ctx.store.bool_one(self.y),
            (BoolDom::One, _) => ctx.store.bool_zero(self.y),
            (_, BoolDom::Zero) => ctx.store.bool_one(self.x),
            (_, BoolDom::One) => ctx.store.bool_zero(self.x),
        };
        if ev.is_failed() {
            PropStatus::Failed
        } else {
            PropStatus::Subsumed
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "link_bool_neg"
    }
}

/// `y = b` between an integer variable over {0, 1} and a Boolean
/// variable.
#[derive(Clone)]
pub struct LinkIntOfBool {
    pub b: VarId,
    pub y: VarId,
}

impl LinkIntOfBool {
    pub fn boxed(b: VarId, y: VarId) -> Box<dyn Propagator> {
        Box::new(LinkIntOfBool { b, y })
    }
}

impl Propagator for LinkIntOfBool {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        vec![(self.b, EventSet::VAL), (self.y, EventSet::DMC)]
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        if ctx
            .store
            .int_adjdom(self.y, &RangeSeq::range(0, 1))
            .is_failed()
        {
            return PropStatus::Failed;
        }
        let ev = match ctx.store.bool_dom(self.b) {
            BoolDom::Zero => ctx.store.int_assign(self.y, 0),
            BoolDom::One => ctx.store.int_assign(self.y, 1),
            BoolDom::Both => {
                let dy = ctx.store.int_dom(self.y).clone();
                if dy.is_singleton() {
                    match dy.min().unwrap() {
                        0 => ctx.store.bool_zero(self.b),
                        _ => ctx.store.bool_one(self.b),
                    }
                } else {
                    return PropStatus::AtFixpoint;
                }
            }
        };
        if ev.is_failed() {
            PropStatus::Failed
        } else {
            PropStatus::Subsumed
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "link_int_of_bool"
    }
}

/// `y = universe \ x` between two set variables.
#[derive(Clone)]
pub struct LinkSetComplement {
    pub x: VarId,
    pub y: VarId,
    pub universe: Range,
}

impl LinkSetComplement {
    pub fn boxed(x: VarId, y: VarId, universe: Range) -> Box<dyn Propagator> {
        Box::new(LinkSetComplement { x, y, universe })
    }
}

impl Propagator for LinkSetComplement {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        vec![(self.x, EventSet::SET_ALL), (self.y, EventSet::SET_ALL)]
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let u = self.universe;
        let sx = ctx.store.set_dom(self.x).clone();
        let sy = ctx.store.set_dom(self.y).clone();
        // y ⊇ compl(lub x), y ⊆ compl(glb x), and symmetrically
        let glb_y = iter::collect_seq(iter::compl(sx.lub.iter(), u));
        let lub_y = iter::collect_seq(iter::compl(sx.glb.iter(), u));
        if ctx.store.set_adjglb(self.y, &glb_y).is_failed()
            || ctx.store.set_adjlub(self.y, &lub_y).is_failed()
        {
            return PropStatus::Failed;
        }
        let glb_x = iter::collect_seq(iter::compl(sy.lub.iter(), u));
        let lub_x = iter::collect_seq(iter::compl(sy.glb.iter(), u));
        if ctx.store.set_adjglb(self.x, &glb_x).is_failed()
            || ctx.store.set_adjlub(self.x, &lub_x).is_failed()
        {
            return PropStatus::Failed;
        }
        if ctx.store.is_assigned(self.x) && ctx.store.is_assigned(self.y) {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "link_set_complement"
    }
}

/// `y = x` between two Boolean variables (the equality chain an identity
/// view decomposes into).
#[derive(Clone)]
pub struct LinkBoolEq {
    pub x: VarId,
    pub y: VarId,
}

impl LinkBoolEq {
    pub fn boxed(x: VarId, y: VarId) -> Box<dyn Propagator> {
        Box::new(LinkBoolEq { x, y })
    }
}

impl Propagator for LinkBoolEq {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        vec![(self.x, EventSet::VAL), (self.y, EventSet::VAL)]
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let ev = match (ctx.store.bool_dom(self.x), ctx.store.bool_dom(self.y)) {
            (BoolDom::Both, BoolDom::Both) => return PropStatus::AtFixpoint,
            (BoolDom::Zero, _) => ctx.store.bool_zero(self.y),
            (BoolDom::One, _) => ctx.store.bool_one(self.y),
            (_, BoolDom::Zero) => ctx.store.bool_zero(self.x),
            (_, BoolDom::One) => ctx.store.bool_one(self.x),
        };
        if ev.is_failed() {
            PropStatus::Failed
        } else {
            PropStatus::Subsumed
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "link_bool_eq"
    }
}

/// `y = x` between two set variables.
#[derive(Clone)]
pub struct LinkSetEq {
    pub x: VarId,
    pub y: VarId,
}

impl LinkSetEq {
    pub fn boxed(x: VarId, y: VarId) -> Box<dyn Propagator> {
        Box::new(LinkSetEq { x, y })
    }
}

impl Propagator for LinkSetEq {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        vec![(self.x, EventSet::SET_ALL), (self.y, EventSet::SET_ALL)]
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let sx = ctx.store.set_dom(self.x).clone();
        let sy = ctx.store.set_dom(self.y).clone();
        if ctx.store.set_adjglb(self.y, &sx.glb).is_failed()
            || ctx.store.set_adjlub(self.y, &sx.lub).is_failed()
            || ctx.store.set_adjglb(self.x, &sy.glb).is_failed()
            || ctx.store.set_adjlub(self.x, &sy.lub).is_failed()
        {
            return PropStatus::Failed;
        }
        if ctx.store.is_assigned(self.x) && ctx.store.is_assigned(self.y) {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "link_set_eq"
    }
}
