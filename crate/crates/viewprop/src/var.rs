//! Variable store: integer, Boolean and set-interval domains, the bounds
//! and set-valued operations on them, and modification events.

use crate::iter;
use crate::kernel::{Range, RangeSeq, Val, VarId};

/// Event kinds used for propagator scheduling. One bit per kind; integer
/// variables use `LBC`/`UBC`/`DMC`/`VAL`, Booleans use `VAL`, set
/// variables use `GLBC`/`LUBC`/`VAL`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct EventSet(u8);

impl EventSet {
    pub const NONE: EventSet = EventSet(0);
    /// Lower bound change.
    pub const LBC: EventSet = EventSet(1);
    /// Upper bound change.
    pub const UBC: EventSet = EventSet(1 << 1);
    /// Any domain change (interior or bounds).
    pub const DMC: EventSet = EventSet(1 << 2);
    /// Variable became assigned.
    pub const VAL: EventSet = EventSet(1 << 3);
    /// Lower set bound grew.
    pub const GLBC: EventSet = EventSet(1 << 4);
    /// Upper set bound shrank.
    pub const LUBC: EventSet = EventSet(1 << 5);

    pub const INT_ALL: EventSet = EventSet(0b1111);
    pub const BOUNDS: EventSet = EventSet(0b1011);
    pub const SET_ALL: EventSet = EventSet(0b111000);

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: EventSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn contains(self, other: EventSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn union(self, other: EventSet) -> EventSet {
        EventSet(self.0 | other.0)
    }

    pub fn remove(self, other: EventSet) -> EventSet {
        EventSet(self.0 & !other.0)
    }

    /// The single-bit subsets of this set.
    pub fn bits(self) -> impl Iterator<Item = EventSet> {
        (0..6).map(|i| EventSet(1 << i)).filter(move |b| self.intersects(*b))
    }
}

impl std::ops::BitOr for EventSet {
    type Output = EventSet;
    fn bitor(self, rhs: EventSet) -> EventSet {
        self.union(rhs)
    }
}

/// Classification of one domain modification, as reported back to the
/// caller of the operation. `Failed` dominates; `Assigned` dominates the
/// bounds / interior classifications.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModEvent {
    None,
    Failed,
    Assigned,
    BoundsChanged,
    DomainChanged,
    GlbChanged,
    LubChanged,
}

impl ModEvent {
    pub fn is_failed(self) -> bool {
        self == ModEvent::Failed
    }

    pub fn changed(self) -> bool {
        !matches!(self, ModEvent::None)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoolDom {
    Zero,
    One,
    Both,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetDom {
    pub glb: RangeSeq,
    pub lub: RangeSeq,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VarDom {
    Int(RangeSeq),
    Bool(BoolDom),
    Set(SetDom),
}

/// All variable domains of one space plus the sticky failed flag and the
/// pending modification events awaiting propagator scheduling.
#[derive(Clone, Debug, Default)]
pub struct VarStore {
    doms: Vec<VarDom>,
    failed: bool,
    pending: Vec<(VarId, EventSet)>,
}

impl VarStore {
    pub fn new() -> Self {
        VarStore::default()
    }

    pub fn new_int(&mut self, dom: RangeSeq) -> VarId {
        assert!(!dom.is_empty(), "integer variable created empty");
        let id = VarId(self.doms.len());
        self.doms.push(VarDom::Int(dom));
        id
    }

    pub fn new_bool(&mut self) -> VarId {
        let id = VarId(self.doms.len());
        self.doms.push(VarDom::Bool(BoolDom::Both));
        id
    }

    pub fn new_set(&mut self, glb: RangeSeq, lub: RangeSeq) -> VarId {
        assert!(glb.is_subset_of(&lub), "set variable with glb ⊄ lub");
        let id = VarId(self.doms.len());
        self.doms.push(VarDom::Set(SetDom { glb, lub }));
        id
    }

    pub fn num_vars(&self) -> usize {
        self.doms.len()
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn mark_failed(&mut self) {
        self.failed = true;
    }

    pub fn dom(&self, x: VarId) -> &VarDom {
        &self.doms[x.0]
    }

    pub fn take_pending(&mut self) -> Vec<(VarId, EventSet)> {
        std::mem::take(&mut self.pending)
    }

    pub fn has_pending(&self) -> bool {
        !self.pending.is_empty()
    }

    fn record(&mut self, x: VarId, es: EventSet) {
        if !es.is_empty() {
            self.pending.push((x, es));
        }
    }

    pub fn is_assigned(&self, x: VarId) -> bool {
        match &self.doms[x.0] {
            VarDom::Int(d) => d.is_singleton(),
            VarDom::Bool(b) => *b != BoolDom::Both,
            VarDom::Set(s) => s.glb == s.lub,
        }
    }

    /// Snapshot of all domains, for the debug-build contraction check.
    pub fn snapshot(&self) -> Vec<VarDom> {
        self.doms.clone()
    }

    /// Asserts that every domain is a contraction of the snapshot: integer
    /// domains shrank or stayed, Boolean domains only went from unassigned
    /// to assigned, set lower bounds only grew and upper bounds only
    /// shrank. Skipped once the store is failed.
    pub fn assert_contraction_of(&self, before: &[VarDom]) {
        if self.failed {
            return;
        }
        for (i, (old, new)) in before.iter().zip(&self.doms).enumerate() {
            let ok = match (old, new) {
                (VarDom::Int(o), VarDom::Int(n)) => n.is_subset_of(o),
                (VarDom::Bool(o), VarDom::Bool(n)) => *o == BoolDom::Both || o == n,
                (VarDom::Set(o), VarDom::Set(n)) => {
                    o.glb.is_subset_of(&n.glb) && n.lub.is_subset_of(&o.lub)
                }
                _ => false,
            };
            assert!(ok, "propagator expanded domain of {:?}", VarId(i));
        }
    }

    // ---- integer operations ----

    pub fn int_dom(&self, x: VarId) -> &RangeSeq {
        match &self.doms[x.0] {
            VarDom::Int(d) => d,
            _ => panic!("{x:?} is not an integer variable"),
        }
    }

    pub fn int_min(&self, x: VarId) -> Val {
        self.int_dom(x).min().expect("empty integer domain")
    }

    pub fn int_max(&self, x: VarId) -> Val {
        self.int_dom(x).max().expect("empty integer domain")
    }

    pub fn int_val(&self, x: VarId) -> Val {
        let d = self.int_dom(x);
        assert!(d.is_singleton(), "value of unassigned variable");
        d.min().unwrap()
    }

    /// Leaves `d(x) ∩ [n, +∞)`.
    pub fn int_adjmin(&mut self, x: VarId, n: Val) -> ModEvent {
        let d = self.int_dom(x);
        if n <= self.int_min(x) {
            return ModEvent::None;
        }
        let max = self.int_max(x);
        let new = if n > max {
            RangeSeq::empty()
        } else {
            iter::collect_seq(iter::inter(d.iter(), std::iter::once(Range::new(n, max))))
        };
        self.write_int(x, new)
    }

    /// Leaves `d(x) ∩ (-∞, n]`.
    pub fn int_adjmax(&mut self, x: VarId, n: Val) -> ModEvent {
        let d = self.int_dom(x);
        if n >= self.int_max(x) {
            return ModEvent::None;
        }
        let min = self.int_min(x);
        let new = if n < min {
            RangeSeq::empty()
        } else {
            iter::collect_seq(iter::inter(d.iter(), std::iter::once(Range::new(min, n))))
        };
        self.write_int(x, new)
    }

    /// Replaces `d(x)` with `set(r)`. The caller must guarantee
    /// `set(r) ⊆ d(x)`; this is verified in debug builds.
    pub fn int_setdom(&mut self, x: VarId, r: RangeSeq) -> ModEvent {
        debug_assert!(
            r.is_subset_of(self.int_dom(x)),
            "setdom with {r:?} ⊄ {:?}",
            self.int_dom(x)
        );
        self.write_int(x, r)
    }

    /// Leaves `d(x) ∩ set(r)`.
    pub fn int_adjdom(&mut self, x: VarId, r: &RangeSeq) -> ModEvent {
        let new = iter::collect_seq(iter::inter(self.int_dom(x).iter(), r.iter()));
        self.write_int(x, new)
    }

    /// Leaves `d(x) \ set(r)`.
    pub fn int_excdom(&mut self, x: VarId, r: &RangeSeq) -> ModEvent {
        let new = iter::collect_seq(iter::diff(self.int_dom(x).iter(), r.iter()));
        self.write_int(x, new)
    }

    pub fn int_exclude(&mut self, x: VarId, v: Val) -> ModEvent {
        if !self.int_dom(x).contains(v) {
            return ModEvent::None;
        }
        self.int_excdom(x, &RangeSeq::singleton(v))
    }

    pub fn int_assign(&mut self, x: VarId, v: Val) -> ModEvent {
        if !self.int_dom(x).contains(v) {
            self.failed = true;
            self.record(x, EventSet::INT_ALL);
            return ModEvent::Failed;
        }
        self.int_setdom(x, RangeSeq::singleton(v))
    }

    fn write_int(&mut self, x: VarId, new: RangeSeq) -> ModEvent {
        let old = self.int_dom(x).clone();
        if new == old {
            return ModEvent::None;
        }
        if new.is_empty() {
            self.failed = true;
            self.record(x, EventSet::INT_ALL);
            return ModEvent::Failed;
        }
        let mut es = EventSet::DMC;
        let lbc = new.min() != old.min();
        let ubc = new.max() != old.max();
        if lbc {
            es = es | EventSet::LBC;
        }
        if ubc {
            es = es | EventSet::UBC;
        }
        let assigned = new.is_singleton();
        if assigned {
            es = es | EventSet::VAL;
        }
        self.doms[x.0] = VarDom::Int(new);
        self.record(x, es);
        if assigned {
            ModEvent::Assigned
        } else if lbc || ubc {
            ModEvent::BoundsChanged
        } else {
            ModEvent::DomainChanged
        }
    }

    // ---- Boolean operations ----

    pub fn bool_dom(&self, x: VarId) -> BoolDom {
        match &self.doms[x.0] {
            VarDom::Bool(b) => *b,
            _ => panic!("{x:?} is not a Boolean variable"),
        }
    }

    pub fn bool_val(&self, x: VarId) -> Val {
        match self.bool_dom(x) {
            BoolDom::Zero => 0,
            BoolDom::One => 1,
            BoolDom::Both => panic!("value of unassigned Boolean"),
        }
    }

    pub fn bool_zero(&mut self, x: VarId) -> ModEvent {
        match self.bool_dom(x) {
            BoolDom::Zero => ModEvent::None,
            BoolDom::One => {
                self.failed = true;
                self.record(x, EventSet::VAL);
                ModEvent::Failed
            }
            BoolDom::Both => {
                self.doms[x.0] = VarDom::Bool(BoolDom::Zero);
                self.record(x, EventSet::VAL);
                ModEvent::Assigned
            }
        }
    }

    pub fn bool_one(&mut self, x: VarId) -> ModEvent {
        match self.bool_dom(x) {
            BoolDom::One => ModEvent::None,
            BoolDom::Zero => {
                self.failed = true;
                self.record(x, EventSet::VAL);
                ModEvent::Failed
            }
            BoolDom::Both => {
                self.doms[x.0] = VarDom::Bool(BoolDom::One);
                self.record(x, EventSet::VAL);
                ModEvent::Assigned
            }
        }
    }

    // ---- set operations ----

    pub fn set_dom(&self, x: VarId) -> &SetDom {
        match &self.doms[x.0] {
            VarDom::Set(s) => s,
            _ => panic!("{x:?} is not a set variable"),
        }
    }

    /// Grows the lower bound: `glb := glb ∪ set(r)`; fails if the result
    /// is no longer contained in the upper bound.
    pub fn set_adjglb(&mut self, x: VarId, r: &RangeSeq) -> ModEvent {
        let s = self.set_dom(x);
        let new_glb = iter::collect_seq(iter::union(s.glb.iter(), r.iter()));
        if new_glb == s.glb {
            return ModEvent::None;
        }
        if !new_glb.is_subset_of(&s.lub) {
            self.failed = true;
            self.record(x, EventSet::SET_ALL);
            return ModEvent::Failed;
        }
        let lub = s.lub.clone();
        let assigned = new_glb == lub;
        self.doms[x.0] = VarDom::Set(SetDom { glb: new_glb, lub });
        let mut es = EventSet::GLBC;
        if assigned {
            es = es | EventSet::VAL;
        }
        self.record(x, es);
        if assigned {
            ModEvent::Assigned
        } else {
            ModEvent::GlbChanged
        }
    }

    /// Shrinks the upper bound: `lub := lub ∩ set(r)`; fails if the lower
    /// bound is no longer contained in the result.
    pub fn set_adjlub(&mut self, x: VarId, r: &RangeSeq) -> ModEvent {
        let s = self.set_dom(x);
        let new_lub = iter::collect_seq(iter::inter(s.lub.iter(), r.iter()));
        if new_lub == s.lub {
            return ModEvent::None;
        }
        if !s.glb.is_subset_of(&new_lub) {
            self.failed = true;
            self.record(x, EventSet::SET_ALL);
            return ModEvent::Failed;
        }
        let glb = s.glb.clone();
        let assigned = new_lub == glb;
        self.doms[x.0] = VarDom::Set(SetDom { glb, lub: new_lub });
        let mut es = EventSet::LUBC;
        if assigned {
            es = es | EventSet::VAL;
        }
        self.record(x, es);
        if assigned {
            ModEvent::Assigned
        } else {
            ModEvent::LubChanged
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(ranges: &[(Val, Val)]) -> RangeSeq {
        RangeSeq::normalize(ranges.iter().map(|&(lo, hi)| Range::new(lo, hi)).collect())
    }

    fn pending_for(s: &mut VarStore, x: VarId) -> EventSet {
        s.take_pending()
            .into_iter()
            .filter(|&(v, _)| v == x)
            .fold(EventSet::NONE, |acc, (_, es)| acc | es)
    }

    #[test]
    fn int_adjmin_classifies_bounds_change() {
        let mut s = VarStore::new();
        let x = s.new_int(seq(&[(1, 5)]));
        assert_eq!(s.int_adjmin(x, 3), ModEvent::BoundsChanged);
        assert_eq!(s.int_dom(x), &seq(&[(3, 5)]));
        let es = pending_for(&mut s, x);
        assert!(es.contains(EventSet::LBC | EventSet::DMC));
        assert!(!es.intersects(EventSet::UBC | EventSet::VAL));
        // no-op below the current minimum
        assert_eq!(s.int_adjmin(x, 2), ModEvent::None);
        assert!(!s.has_pending());
    }

    #[test]
    fn int_adjmax_to_singleton_assigns() {
        let mut s = VarStore::new();
        let x = s.new_int(seq(&[(1, 5)]));
        assert_eq!(s.int_adjmax(x, 1), ModEvent::Assigned);
        assert_eq!(s.int_val(x), 1);
        let es = pending_for(&mut s, x);
        assert!(es.contains(EventSet::UBC | EventSet::DMC | EventSet::VAL));
    }

    #[test]
    fn int_interior_removal_is_domain_change_only() {
        let mut s = VarStore::new();
        let x = s.new_int(seq(&[(1, 5)]));
        assert_eq!(s.int_exclude(x, 3), ModEvent::DomainChanged);
        assert_eq!(s.int_dom(x), &seq(&[(1, 2), (4, 5)]));
        let es = pending_for(&mut s, x);
        assert!(es.contains(EventSet::DMC));
        assert!(!es.intersects(EventSet::LBC | EventSet::UBC | EventSet::VAL));
    }

    #[test]
    fn int_emptying_fails_the_store() {
        let mut s = VarStore::new();
        let x = s.new_int(seq(&[(1, 2)]));
        assert_eq!(s.int_adjmin(x, 7), ModEvent::Failed);
        assert!(s.failed());
        // failure stays sticky
        assert!(s.failed());
    }

    #[test]
    fn int_adjdom_and_excdom() {
        let mut s = VarStore::new();
        let x = s.new_int(seq(&[(1, 6)]));
        assert_eq!(s.int_adjdom(x, &seq(&[(2, 4), (9, 9)])), ModEvent::BoundsChanged);
        assert_eq!(s.int_dom(x), &seq(&[(2, 4)]));
        assert_eq!(s.int_excdom(x, &seq(&[(3, 3)])), ModEvent::DomainChanged);
        assert_eq!(s.int_dom(x), &seq(&[(2, 2), (4, 4)]));
        assert_eq!(s.int_assign(x, 4), ModEvent::Assigned);
        assert_eq!(s.int_assign(x, 3), ModEvent::Failed);
        assert!(s.failed());
    }

    #[test]
    fn bool_transitions() {
        let mut s = VarStore::new();
        let b = s.new_bool();
        assert_eq!(s.bool_dom(b), BoolDom::Both);
        assert!(!s.is_assigned(b));
        assert_eq!(s.bool_one(b), ModEvent::Assigned);
        assert_eq!(s.bool_val(b), 1);
        assert_eq!(pending_for(&mut s, b), EventSet::VAL);
        assert_eq!(s.bool_one(b), ModEvent::None);
        assert_eq!(s.bool_zero(b), ModEvent::Failed);
        assert!(s.failed());
    }

    #[test]
    fn set_bound_adjustments() {
        let mut s = VarStore::new();
        let x = s.new_set(RangeSeq::empty(), seq(&[(1, 4)]));
        assert_eq!(s.set_adjglb(x, &seq(&[(2, 2)])), ModEvent::GlbChanged);
        assert_eq!(pending_for(&mut s, x), EventSet::GLBC);
        assert_eq!(s.set_adjlub(x, &seq(&[(1, 3)])), ModEvent::LubChanged);
        assert_eq!(pending_for(&mut s, x), EventSet::LUBC);
        // shrinking the lub down to the glb assigns
        assert_eq!(s.set_adjlub(x, &seq(&[(2, 2)])), ModEvent::Assigned);
        let es = pending_for(&mut s, x);
        assert!(es.contains(EventSet::LUBC | EventSet::VAL));
        assert!(s.is_assigned(x));
        // growing the glb past the lub fails
        assert_eq!(s.set_adjglb(x, &seq(&[(4, 4)])), ModEvent::Failed);
        assert!(s.failed());
    }

    #[test]
    fn contraction_check_accepts_shrinking_rejects_growth() {
        let mut s = VarStore::new();
        let x = s.new_int(seq(&[(1, 5)]));
        let before = s.snapshot();
        s.int_adjmin(x, 2);
        s.assert_contraction_of(&before);
    }

    #[test]
    #[should_panic(expected = "expanded domain")]
    fn contraction_check_panics_on_growth() {
        let mut s = VarStore::new();
        s.new_int(seq(&[(1, 5)]));
        let before = vec![VarDom::Int(seq(&[(2, 3)]))];
        s.assert_contraction_of(&before);
    }

    #[test]
    fn randomized_ops_match_shadow_sets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut s = VarStore::new();
            let x = s.new_int(seq(&[(-6, 6)]));
            let mut shadow: std::collections::BTreeSet<Val> = (-6..=6).collect();
            for _ in 0..12 {
                if s.failed() {
                    break;
                }
                let v = rng.gen_range(-7..=7);
                match rng.gen_range(0..4) {
                    0 => {
                        s.int_adjmin(x, v);
                        shadow.retain(|&w| w >= v);
                    }
                    1 => {
                        s.int_adjmax(x, v);
                        shadow.retain(|&w| w <= v);
                    }
                    2 => {
                        s.int_exclude(x, v);
                        shadow.remove(&v);
                    }
                    _ => {
                        let r = seq(&[(v.min(0), v.max(0))]);
                        s.int_adjdom(x, &r);
                        shadow.retain(|&w| r.contains(w));
                    }
                }
                if shadow.is_empty() {
                    assert!(s.failed());
                } else {
                    assert!(!s.failed());
                    assert_eq!(s.int_dom(x).values().collect::<Vec<_>>(),
                               shadow.iter().copied().collect::<Vec<_>>());
                }
            }
        }
    }
}
