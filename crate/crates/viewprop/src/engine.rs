//! Propagation spaces: propagator registration, event-directed
//! scheduling, fixpoint computation, and copying for search.

use std::collections::VecDeque;

use crate::kernel::{Range, RangeSeq, Val, VarId};
use crate::var::{EventSet, VarDom, VarStore};

/// Result of one propagator invocation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PropStatus {
    /// The propagator detected that its constraint has no solution under
    /// the current domains.
    Failed,
    /// The propagator is at fixpoint: re-running it immediately would not
    /// change any domain.
    AtFixpoint,
    /// The propagator may not be at fixpoint and must be re-queued.
    NotAtFixpoint,
    /// The constraint is entailed by the current domains; the propagator
    /// is removed from the space.
    Subsumed,
}

/// Result of running propagation to mutual fixpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpaceStatus {
    Failed,
    Stable,
}

/// Execution context handed to a running propagator. Wraps the variable
/// store and lets the propagator move its own event subscriptions, which
/// watched-literal propagators use to follow their watches.
pub struct Ctx<'a> {
    pub store: &'a mut VarStore,
    subs: &'a mut Vec<Vec<(usize, EventSet)>>,
    pid: usize,
}

impl<'a> Ctx<'a> {
    /// Replaces this propagator's subscription on `x` with `es`
    /// (removing it when `es` is empty).
    pub fn resubscribe(&mut self, x: VarId, es: EventSet) {
        let list = &mut self.subs[x.0];
        list.retain(|&(p, _)| p != self.pid);
        if !es.is_empty() {
            list.push((self.pid, es));
        }
    }
}

pub trait Propagator {
    /// Static subscription list used at posting time. Entries with an
    /// empty event set (constant views) are skipped.
    fn subscriptions(&self) -> Vec<(VarId, EventSet)>;
    fn propagate(&mut self, ctx: &mut Ctx) -> PropStatus;
    fn boxed_clone(&self) -> Box<dyn Propagator>;
    fn name(&self) -> &'static str;
}

impl Clone for Box<dyn Propagator> {
    fn clone(&self) -> Self {
        self.boxed_clone()
    }
}

/// A store plus its propagators and scheduling state. Search copies the
/// whole space before branching; there is no trailing.
#[derive(Clone)]
pub struct Space {
    pub store: VarStore,
    props: Vec<Option<Box<dyn Propagator>>>,
    /// Per variable: subscribed (propagator, event set) pairs.
    subs: Vec<Vec<(usize, EventSet)>>,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
    /// Number of propagator invocations performed in this space. Copies
    /// start from the parent's value; search code diffs around fixpoints.
    pub n_propagations: u64,
    /// Variables a search should branch on.
    pub decision_vars: Vec<VarId>,
    /// Test hook: wake deliveries suppressed per (propagator, variable).
    masked: Vec<(usize, VarId)>,
}

impl Space {
    pub fn new() -> Self {
        Space {
            store: VarStore::new(),
            props: Vec::new(),
            subs: Vec::new(),
            queue: VecDeque::new(),
            queued: Vec::new(),
            n_propagations: 0,
            decision_vars: Vec::new(),
            masked: Vec::new(),
        }
    }

    pub fn new_int_var(&mut self, lo: Val, hi: Val) -> VarId {
        self.new_int_var_seq(RangeSeq::range(lo, hi))
    }

    pub fn new_int_var_seq(&mut self, dom: RangeSeq) -> VarId {
        let x = self.store.new_int(dom);
        self.subs.push(Vec::new());
        x
    }

    pub fn new_bool_var(&mut self) -> VarId {
        let x = self.store.new_bool();
        self.subs.push(Vec::new());
        x
    }

    pub fn new_set_var(&mut self, universe: Range) -> VarId {
        self.new_set_var_bounds(RangeSeq::empty(), RangeSeq::range(universe.lo, universe.hi))
    }

    pub fn new_set_var_bounds(&mut self, glb: RangeSeq, lub: RangeSeq) -> VarId {
        let x = self.store.new_set(glb, lub);
        self.subs.push(Vec::new());
        x
    }

    /// Current subscriptions of propagator `pid` (variable, event set).
    pub fn subscriptions_of(&self, pid: usize) -> Vec<(VarId, EventSet)> {
        let mut out = Vec::new();
        for (v, list) in self.subs.iter().enumerate() {
            for &(p, es) in list {
                if p == pid {
                    out.push((VarId(v), es));
                }
            }
        }
        out
    }

    /// Registers a propagator, subscribes it and schedules its first run.
    pub fn post(&mut self, p: Box<dyn Propagator>) -> usize {
        let pid = self.props.len();
        for (x, es) in p.subscriptions() {
            if !es.is_empty() {
                self.subs[x.0].push((pid, es));
            }
        }
        self.props.push(Some(p));
        self.queued.push(true);
        self.queue.push_back(pid);
        pid
    }

    /// Number of propagators still registered (not subsumed).
    pub fn active_propagators(&self) -> usize {
        self.props.iter().filter(|p| p.is_some()).count()
    }

    /// Test hook: suppress all wake deliveries from `x` to propagator
    /// `pid`, as if the subscription declaration were missing.
    pub fn mask_subscription(&mut self, pid: usize, x: VarId) {
        self.masked.push((pid, x));
    }

    fn enqueue(&mut self, pid: usize) {
        if self.props[pid].is_some() && !self.queued[pid] {
            self.queued[pid] = true;
            self.queue.push_back(pid);
        }
    }

    /// Delivers pending store events to subscribers. `skip` is the
    /// propagator that just ran and reported fixpoint; it is not re-woken
    /// by its own writes.
    fn process_pending(&mut self, skip: Option<usize>) {
        for (x, events) in self.store.take_pending() {
            for i in 0..self.subs[x.0].len() {
                let (pid, es) = self.subs[x.0][i];
                if Some(pid) == skip
                    || !es.intersects(events)
                    || self.masked.contains(&(pid, x))
                {
                    continue;
                }
                self.enqueue(pid);
            }
        }
    }

    /// Runs propagation until mutual fixpoint or failure, in FIFO order.
    pub fn fixpoint(&mut self) -> SpaceStatus {
        self.fixpoint_with_order(&mut |_| 0)
    }

    /// Like [`Space::fixpoint`] but the caller picks which queued
    /// propagator runs next: `pick(n)` returns an index below `n`. Used to
    /// test order independence of the fixpoint.
    pub fn fixpoint_with_order(&mut self, pick: &mut dyn FnMut(usize) -> usize) -> SpaceStatus {
        self.process_pending(None);
        while !self.queue.is_empty() {
            if self.store.failed() {
                self.queue.clear();
                self.queued.iter_mut().for_each(|q| *q = false);
                return SpaceStatus::Failed;
            }
            let at = pick(self.queue.len()) % self.queue.len();
            let pid = self.queue.remove(at).unwrap();
            self.queued[pid] = false;
            let Some(mut p) = self.props[pid].take() else {
                continue;
            };
            #[cfg(debug_assertions)]
            let before = self.store.snapshot();
            let status = p.propagate(&mut Ctx {
                store: &mut self.store,
                subs: &mut self.subs,
                pid,
            });
            self.n_propagations += 1;
            #[cfg(debug_assertions)]
            self.store.assert_contraction_of(&before);
            match status {
                PropStatus::Failed => {
                    debug_assert!(self.store.failed());
                    self.store.mark_failed();
                    self.queue.clear();
                    self.queued.iter_mut().for_each(|q| *q = false);
                    return SpaceStatus::Failed;
                }
                PropStatus::Subsumed => {
                    for list in &mut self.subs {
                        list.retain(|&(q, _)| q != pid);
                    }
                    self.process_pending(None);
                }
                PropStatus::AtFixpoint => {
                    self.props[pid] = Some(p);
                    self.process_pending(Some(pid));
                }
                PropStatus::NotAtFixpoint => {
                    self.props[pid] = Some(p);
                    self.process_pending(None);
                    self.enqueue(pid);
                }
            }
        }
        if self.store.failed() {
            SpaceStatus::Failed
        } else {
            SpaceStatus::Stable
        }
    }

    /// All decision variables assigned (and the space not failed).
    pub fn is_solved(&self) -> bool {
        !self.store.failed() && self.decision_vars.iter().all(|&x| self.store.is_assigned(x))
    }

    /// Current assignment of the decision variables; integer and Boolean
    /// variables only.
    pub fn solution(&self) -> Vec<Val> {
        self.decision_vars
            .iter()
            .map(|&x| match self.store.dom(x) {
                VarDom::Int(_) => self.store.int_val(x),
                VarDom::Bool(_) => self.store.bool_val(x),
                VarDom::Set(_) => panic!("set variable in scalar solution"),
            })
            .collect()
    }
}

impl Default for Space {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::eq::{eq, eq_offset, minus_eq};
    use crate::prop::linear::linear_eq;

    fn seq(ranges: &[(Val, Val)]) -> RangeSeq {
        RangeSeq::normalize(
            ranges
                .iter()
                .map(|&(lo, hi)| Range::new(lo, hi))
                .collect(),
        )
    }

    #[test]
    fn fixpoint_intersects_equal_variables() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 2);
        let y = s.new_int_var(2, 3);
        s.post(eq(x, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(2, 2)]));
        assert_eq!(s.store.int_dom(y), &seq(&[(2, 2)]));
        // both assigned equal: the propagator reported subsumed and left
        assert_eq!(s.active_propagators(), 0);
    }

    #[test]
    fn fixpoint_fails_on_contradiction() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 1);
        let y = s.new_int_var(2, 2);
        s.post(eq(x, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Failed);
        assert!(s.store.failed());
    }

    #[test]
    fn subscriptions_transform_through_views() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 5);
        let y = s.new_int_var(0, 5);
        // x - y = 1 puts an offset view on y: subscription kinds preserved
        let pid = s.post(minus_eq(x, y, 1));
        let subs = s.subscriptions_of(pid);
        assert_eq!(subs.len(), 2);
        assert!(subs.iter().any(|&(v, _)| v == x));
        assert!(subs.iter().any(|&(v, _)| v == y));
    }

    #[test]
    fn copies_are_independent() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 5);
        let y = s.new_int_var(1, 5);
        s.post(eq(x, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        let parent_count = s.n_propagations;
        let mut child = s.clone();
        // child counter starts at the parent's value
        assert_eq!(child.n_propagations, parent_count);
        child.store.int_adjmin(x, 4);
        assert_eq!(child.fixpoint(), SpaceStatus::Stable);
        assert_eq!(child.store.int_dom(y), &seq(&[(4, 5)]));
        // the parent never sees the child's pruning
        assert_eq!(s.store.int_dom(x), &seq(&[(1, 5)]));
        assert_eq!(s.store.int_dom(y), &seq(&[(1, 5)]));
    }

    #[test]
    fn copy_of_failed_space_is_failed() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 1);
        s.store.int_adjmin(x, 2);
        let c = s.clone();
        assert!(c.store.failed());
    }

    #[test]
    fn propagation_counter_counts_invocations() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 4);
        let y = s.new_int_var(1, 4);
        s.post(linear_eq(&[x, y], 4));
        assert_eq!(s.n_propagations, 0);
        s.fixpoint();
        assert!(s.n_propagations >= 1);
    }

    #[test]
    fn queue_deduplicates_membership() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 9);
        let y = s.new_int_var(1, 9);
        let z = s.new_int_var(1, 9);
        s.post(eq(x, y));
        s.post(eq(y, z));
        s.post(eq_offset(x, z, 0));
        s.fixpoint();
        let baseline = s.n_propagations;
        // many mutations before the next fixpoint still queue each
        // propagator at most once
        s.store.int_adjmin(x, 3);
        s.store.int_adjmax(x, 7);
        s.store.int_exclude(x, 5);
        let before = s.n_propagations;
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        // 3 propagators, each runs once from the mutation burst plus at
        // most one re-wake round
        assert!(s.n_propagations - before <= 6, "{} runs", s.n_propagations - before);
        assert!(baseline >= 3);
    }

    #[test]
    fn fixpoint_is_order_independent() {
        use rand::{Rng, SeedableRng};
        let build = || {
            let mut s = Space::new();
            let x = s.new_int_var(1, 9);
            let y = s.new_int_var(1, 9);
            let z = s.new_int_var(1, 9);
            s.post(linear_eq(&[x, y, z], 8));
            s.post(eq(x, y));
            s.post(minus_eq(z, x, 1));
            s.store.int_adjmax(y, 4);
            (s, [x, y, z])
        };
        let (mut fifo, vars) = build();
        assert_eq!(fifo.fixpoint(), SpaceStatus::Stable);
        let reference: Vec<RangeSeq> =
            vars.iter().map(|&v| fifo.store.int_dom(v).clone()).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let (mut s, vars) = build();
            let mut order = |n: usize| rng.gen_range(0..n);
            assert_eq!(s.fixpoint_with_order(&mut order), SpaceStatus::Stable);
            let got: Vec<RangeSeq> =
                vars.iter().map(|&v| s.store.int_dom(v).clone()).collect();
            assert_eq!(got, reference);
        }
    }

    #[test]
    fn masked_subscription_suppresses_wakeup() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 5);
        let y = s.new_int_var(1, 5);
        let pid = s.post(eq(x, y));
        s.fixpoint();
        s.mask_subscription(pid, x);
        s.store.int_adjmin(x, 3);
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        // the wakeup was suppressed: y keeps its stale minimum
        assert_eq!(s.store.int_min(y), 1);
    }
}
