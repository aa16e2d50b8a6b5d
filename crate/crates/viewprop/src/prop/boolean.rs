//! Boolean propagators: clause (disjunction) with two watched literals,
//! and cardinality `Σ xᵢ ≥ c` with `c + 1` watched literals.
//!
//! Negative literals and the dual constraints come from negation views:
//! a conjunction-not-all-true constraint is a clause over negation views,
//! and `Σ xᵢ ≤ c` is `Σ ¬xᵢ ≥ n - c`.
//!
//! Watches are moved at runtime through [`Ctx::resubscribe`]; only the
//! watched literals carry subscriptions.

use crate::engine::{Ctx, PropStatus, Propagator};
use crate::kernel::{Val, VarId};
use crate::var::EventSet;
use crate::view::{BoolVar, BoolView, NegBoolView};

use super::sub_bool;

/// Disjunction over two differently-viewed literal groups:
/// `pos₁ ∨ … ∨ posₘ ∨ neg₁ ∨ … ∨ negₖ` (the "neg" group is only negative
/// when instantiated with negation views; the propagator itself treats
/// both groups identically).
#[derive(Clone)]
pub struct Clause<P: BoolView, N: BoolView> {
    pub pos: Vec<P>,
    pub neg: Vec<N>,
}

impl<P: BoolView, N: BoolView> Clause<P, N> {
    pub fn boxed(pos: Vec<P>, neg: Vec<N>) -> Box<dyn Propagator> {
        Box::new(Clause { pos, neg })
    }

    fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    fn is_assigned(&self, ctx: &Ctx, i: usize) -> bool {
        if i < self.pos.len() {
            self.pos[i].is_assigned(ctx.store)
        } else {
            self.neg[i - self.pos.len()].is_assigned(ctx.store)
        }
    }

    fn value(&self, ctx: &Ctx, i: usize) -> Val {
        if i < self.pos.len() {
            self.pos[i].value(ctx.store)
        } else {
            self.neg[i - self.pos.len()].value(ctx.store)
        }
    }

    fn set_one(&self, ctx: &mut Ctx, i: usize) -> bool {
        let ev = if i < self.pos.len() {
            self.pos[i].set_one(ctx.store)
        } else {
            self.neg[i - self.pos.len()].set_one(ctx.store)
        };
        ev.is_failed()
    }

    fn base(&self, i: usize) -> Option<VarId> {
        if i < self.pos.len() {
            self.pos[i].base()
        } else {
            self.neg[i - self.pos.len()].base()
        }
    }

    fn watch_events(&self, i: usize) -> EventSet {
        if i < self.pos.len() {
            self.pos[i].transform_events(EventSet::VAL)
        } else {
            self.neg[i - self.pos.len()].transform_events(EventSet::VAL)
        }
    }

    /// Drop all subscriptions, then watch exactly the literals in `keep`.
    fn rewatch(&self, ctx: &mut Ctx, keep: &[usize]) {
        for i in 0..self.len() {
            if let Some(x) = self.base(i) {
                ctx.resubscribe(x, EventSet::NONE);
            }
        }
        for &i in keep {
            if let Some(x) = self.base(i) {
                ctx.resubscribe(x, self.watch_events(i));
            }
        }
    }
}

impl<P: BoolView, N: BoolView> Propagator for Clause<P, N> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        // initial watches: the first two literals; the first run replaces
        // them with non-false ones
        self.pos
            .iter()
            .filter_map(|l| sub_bool(l, EventSet::VAL))
            .chain(self.neg.iter().filter_map(|l| sub_bool(l, EventSet::VAL)))
            .take(2)
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let mut open = Vec::new();
        for i in 0..self.len() {
            if self.is_assigned(ctx, i) {
                if self.value(ctx, i) == 1 {
                    return PropStatus::Subsumed;
                }
            } else {
                open.push(i);
            }
        }
        match open.len() {
            0 => {
                ctx.store.mark_failed();
                PropStatus::Failed
            }
            1 => {
                if self.set_one(ctx, open[0]) {
                    PropStatus::Failed
                } else {
                    PropStatus::Subsumed
                }
            }
            _ => {
                self.rewatch(ctx, &open[..2]);
                PropStatus::AtFixpoint
            }
        }
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "bool_clause"
    }
}

/// Plain clause `x₁ ∨ … ∨ xₙ`.
pub fn clause(xs: &[VarId]) -> Box<dyn Propagator> {
    Clause::boxed(
        xs.iter().map(|&x| BoolVar(x)).collect(),
        Vec::<NegBoolView<BoolVar>>::new(),
    )
}

/// Mixed clause `∨ posᵢ ∨ ∨ ¬negⱼ`, negative literals through negation
/// views.
pub fn clause_mixed(pos: &[VarId], neg: &[VarId]) -> Box<dyn Propagator> {
    Clause::boxed(
        pos.iter().map(|&x| BoolVar(x)).collect(),
        neg.iter()
            .map(|&x| NegBoolView::new(BoolVar(x)))
            .collect(),
    )
}

/// "Not all true" `¬(x₁ ∧ … ∧ xₙ)`: a clause over negation views.
pub fn not_all(xs: &[VarId]) -> Box<dyn Propagator> {
    clause_mixed(&[], xs)
}

/// Cardinality `Σ xᵢ ≥ c` with `c + 1` watched non-false literals.
#[derive(Clone)]
pub struct BoolCardGeq<B: BoolView> {
    pub xs: Vec<B>,
    pub c: usize,
}

impl<B: BoolView> BoolCardGeq<B> {
    pub fn boxed(xs: Vec<B>, c: usize) -> Box<dyn Propagator> {
        Box::new(BoolCardGeq { xs, c })
    }
}

impl<B: BoolView> Propagator for BoolCardGeq<B> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        self.xs
            .iter()
            .filter_map(|l| sub_bool(l, EventSet::VAL))
            .take(self.c + 1)
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let mut n_true = 0usize;
        let mut open = Vec::new();
        for (i, x) in self.xs.iter().enumerate() {
            if x.is_assigned(ctx.store) {
                if x.value(ctx.store) == 1 {
                    n_true += 1;
                }
            } else {
                open.push(i);
            }
        }
        if n_true >= self.c {
            return PropStatus::Subsumed;
        }
        let need = self.c - n_true;
        if open.len() < need {
            ctx.store.mark_failed();
            return PropStatus::Failed;
        }
        if open.len() == need {
            for &i in &open {
                if self.xs[i].set_one(ctx.store).is_failed() {
                    return PropStatus::Failed;
                }
            }
            return PropStatus::Subsumed;
        }
        // watch need + 1 non-false literals: only when one of them turns
        // false can unit-style propagation become possible
        let keep: Vec<usize> = open.iter().copied().take(need + 1).collect();
        for x in &self.xs {
            if let Some(v) = x.base() {
                ctx.resubscribe(v, EventSet::NONE);
            }
        }
        for &i in &keep {
            if let Some(v) = self.xs[i].base() {
                ctx.resubscribe(v, self.xs[i].transform_events(EventSet::VAL));
            }
        }
        PropStatus::AtFixpoint
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "bool_card_geq"
    }
}

/// `Σ xᵢ ≥ c`.
pub fn card_geq(xs: &[VarId], c: usize) -> Box<dyn Propagator> {
    BoolCardGeq::boxed(xs.iter().map(|&x| BoolVar(x)).collect(), c)
}

/// Or-with-result `y = x₁ ∨ … ∨ xₙ`.
#[derive(Clone)]
pub struct OrResult<B: BoolView, Y: BoolView> {
    pub xs: Vec<B>,
    pub y: Y,
}

impl<B: BoolView, Y: BoolView> OrResult<B, Y> {
    pub fn boxed(xs: Vec<B>, y: Y) -> Box<dyn Propagator> {
        assert!(!xs.is_empty());
        Box::new(OrResult { xs, y })
    }
}

impl<B: BoolView, Y: BoolView> Propagator for OrResult<B, Y> {
    fn subscriptions(&self) -> Vec<(VarId, EventSet)> {
        self.xs
            .iter()
            .filter_map(|l| sub_bool(l, EventSet::VAL))
            .chain(sub_bool(&self.y, EventSet::VAL))
            .collect()
    }

    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus {
        let mut open = Vec::new();
        for (i, x) in self.xs.iter().enumerate() {
            if x.is_assigned(ctx.store) {
                if x.value(ctx.store) == 1 {
                    // some operand is true
                    return if self.y.set_one(ctx.store).is_failed() {
                        PropStatus::Failed
                    } else {
                        PropStatus::Subsumed
                    };
                }
            } else {
                open.push(i);
            }
        }
        if open.is_empty() {
            // all operands false
            return if self.y.set_zero(ctx.store).is_failed() {
                PropStatus::Failed
            } else {
                PropStatus::Subsumed
            };
        }
        if self.y.is_assigned(ctx.store) {
            if self.y.value(ctx.store) == 0 {
                for &i in &open {
                    if self.xs[i].set_zero(ctx.store).is_failed() {
                        return PropStatus::Failed;
                    }
                }
                return PropStatus::Subsumed;
            }
            // y = 1: unit propagation when one operand remains
            if open.len() == 1 {
                return if self.xs[open[0]].set_one(ctx.store).is_failed() {
                    PropStatus::Failed
                } else {
                    PropStatus::Subsumed
                };
            }
        }
        PropStatus::AtFixpoint
    }

    fn boxed_clone(&self) -> Box<dyn Propagator> {
        Box::new(self.clone())
    }

    fn name(&self) -> &'static str {
        "bool_or_result"
    }
}

/// `y = x₁ ∨ … ∨ xₙ`.
pub fn or_result(xs: &[VarId], y: VarId) -> Box<dyn Propagator> {
    OrResult::boxed(xs.iter().map(|&x| BoolVar(x)).collect(), BoolVar(y))
}

/// `y = x₁ ∧ … ∧ xₙ`, derived as `¬y = ¬x₁ ∨ … ∨ ¬xₙ` through negation
/// views on every position.
pub fn and_result(xs: &[VarId], y: VarId) -> Box<dyn Propagator> {
    OrResult::boxed(
        xs.iter()
            .map(|&x| NegBoolView::new(BoolVar(x)))
            .collect(),
        NegBoolView::new(BoolVar(y)),
    )
}

/// `Σ xᵢ ≤ c`, derived as `Σ ¬xᵢ ≥ n - c` through negation views.
pub fn card_leq(xs: &[VarId], c: usize) -> Box<dyn Propagator> {
    assert!(c <= xs.len());
    BoolCardGeq::boxed(
        xs.iter()
            .map(|&x| NegBoolView::new(BoolVar(x)))
            .collect(),
        xs.len() - c,
    )
}
