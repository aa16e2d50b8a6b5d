//! Domain-complete equality `x = y` over two integer views.
//!
//! This single core yields, through views, the variants
//! `x = y + c` (offset), `x = -y` (minus), `x = a·y` (scale),
//! `x + y = c` (offset ∘ minus), and channeling between an integer and a
//! Boolean variable (int-of-bool).

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::iter;
use crate::kernel::{Val, VarId};
use crate::var::EventSet;
use crate::view::{BoolVar, IntOfBool, IntVar, IntView, MinusView, OffsetView, ScaleView};

use super::sub_int;

#[derive(Clone)]
pub struct Eq<X: IntView, Y: IntView> {
    pub x: X,
    pub y: Y,
}

impl<X: IntView, Y: IntView> Eq<X, Y> {
    pub fn new(x: X, y: Y) -> Self {
        Eq { x, y }
    }

    pub fn boxed(x: X, y: Y) -> Box<dyn Propagator> {
        Box::new(Self::new(x, y))
    }
}

impl<X: IntView, Y: IntView> Propagator for Eq<X, Y> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        [
            sub_int(&self.x, EventSet::DMC),
            sub_int(&self.y, EventSet::DMC),
        ]
        .into_iter()
        .flatten()
        .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let dx = self.x.dom(ctx.store);
        let dy = self.y.dom(ctx.store);
        let both = iter::collect_seq(iter::inter(dx.iter(), dy.iter()));
        if both.is_empty() {
            ctx.store.mark_failed();
            return PropStatus::Failed;
        }
        if self.x.setdom(ctx.store, &both).is_failed()
            || self.y.setdom(ctx.store, &both).is_failed()
        {
            return PropStatus::Failed;
        }
        if both.is_singleton() {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "eq"
    }
}

/// `x = y`.
pub fn eq(x: VarId, y: VarId) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), IntVar(y))
}

/// `x = y + c`, derived through an offset view on `y`.
pub fn eq_offset(x: VarId, y: VarId, c: Val) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), OffsetView::new(IntVar(y), c))
}

/// `x = -y`, derived through a minus view on `y`.
pub fn eq_minus(x: VarId, y: VarId) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), MinusView::new(IntVar(y)))
}

/// `x = a·y` with `a ≥ 1`, derived through a scale view on `y`.
pub fn eq_scale(x: VarId, a: Val, y: VarId) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), ScaleView::new(IntVar(y), a))
}

/// `x + y = c`, i.e. `x = c - y`: an offset view composed over a minus
/// view on `y`. Composition depth two.
pub fn plus_eq(x: VarId, y: VarId, c: Val) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), OffsetView::new(MinusView::new(IntVar(y)), c))
}

/// `x - y = c`, i.e. `x = y + c`.
pub fn minus_eq(x: VarId, y: VarId, c: Val) -> Box<dyn Propagator> {
    eq_offset(x, y, c)
}

/// `x = k`: equality against a constant view.
pub fn eq_const(x: VarId, k: Val) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), crate::view::ConstIntView(k))
}

/// Channeling `x = b` between an integer and a Boolean variable, derived
/// by presenting `b` as an integer over {0, 1}.
pub fn int_eq_bool(x: VarId, b: VarId) -> Box<dyn Propagator> {
    Eq::boxed(IntVar(x), IntOfBool::new(BoolVar(b)))
}
