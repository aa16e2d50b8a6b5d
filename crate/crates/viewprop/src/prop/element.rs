//! Element over a constant table: `r = table[i]`, domain-complete.
//!
//! Offset views on the index derive element with shifted index bases
//! (e.g. 1-based models) from the 0-based core.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::kernel::{RangeSeq, Val, VarId};
use crate::var::EventSet;
use crate::view::{IntVar, IntView, OffsetView};

use super::sub_int;

#[derive(Clone)]
pub struct ElementConst<I: IntView, R: IntView> {
    pub table: Vec<Val>,
    pub i: I,
    pub r: R,
}

impl<I: IntView, R: IntView> ElementConst<I, R> {
    pub fn boxed(table: Vec<Val>, i: I, r: R) -> Box<dyn Propagator> {
        Box::new(ElementConst { table, i, r })
    }
}

impl<I: IntView, R: IntView> Propagator for ElementConst<I, R> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        [
            sub_int(&self.i, EventSet::DMC),
            sub_int(&self.r, EventSet::DMC),
        ]
        .into_iter()
        .flatten()
        .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let di = self.i.dom(ctx.store);
        let dr = self.r.dom(ctx.store);
        // supported index/value pairs under the current domains
        let idx: Vec<Val> = di
            .values()
            .filter(|&k| {
                (0..self.table.len() as Val).contains(&k) && dr.contains(self.table[k as usize])
            })
            .collect();
        let vals = RangeSeq::from_values(idx.iter().map(|&k| self.table[k as usize]));
        let new_i = RangeSeq::from_values(idx);
        if new_i.is_empty() {
            ctx.store.mark_failed();
            return PropStatus::Failed;
        }
        if self.i.setdom(ctx.store, &new_i).is_failed()
            || self.r.adjdom(ctx.store, &vals).is_failed()
        {
            return PropStatus::Failed;
        }
        if self.i.is_assigned(ctx.store) && self.r.is_assigned(ctx.store) {
            PropStatus::Subsumed
        } else {
            PropStatus::AtFixpoint
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "element_const"
    }
}

/// `r = table[i]` with a 0-based index.
pub fn element_const(table: Vec<Val>, i: VarId, r: VarId) -> Box<dyn Propagator> {
    ElementConst::boxed(table, IntVar(i), IntVar(r))
}

/// `r = table[i - base]`: an index with an arbitrary base, derived through
/// an offset view on `i`.
pub fn element_const_based(table: Vec<Val>, i: VarId, base: Val, r: VarId) -> Box<dyn Propagator> {
    ElementConst::boxed(table, OffsetView::new(IntVar(i), -base), IntVar(r))
}
