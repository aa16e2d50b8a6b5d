//! Views: injective per-variable value transformations.
//!
//! A view wraps a variable (or another view) and exposes the identical
//! operation interface. Reads apply the value map, writes apply its
//! inverse image, and event subscriptions are transformed so that a
//! propagator wakes exactly when the transformed domain changes.
//!
//! Views are resolved by monomorphization: a derived propagator is a
//! parametric propagator instantiated with concrete view types. The
//! runtime-composed [`ViewSpec`] description exists for the oracle side
//! only.

use crate::iter;
use crate::kernel::{div_ceil, div_floor, Range, RangeSeq, Val, VarId, MAX_BOUND, MAX_COEFF};
use crate::var::{BoolDom, EventSet, ModEvent, VarStore};

/// Operation interface of an integer-valued variable or view.
pub trait IntView: Clone + 'static {
    fn min(&self, s: &VarStore) -> Val;
    fn max(&self, s: &VarStore) -> Val;
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent;
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent;
    /// The transformed domain `φ(d(x))` as a canonical sequence.
    fn dom(&self, s: &VarStore) -> RangeSeq;
    /// Overwrites the domain; requires `set(r) ⊆ dom()`.
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent;
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent;
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent;
    /// Maps an event set over this view to the event set to subscribe to
    /// on the base variable.
    fn transform_events(&self, es: EventSet) -> EventSet;
    /// Base variable, if any; constant views have none.
    fn base(&self) -> Option<VarId>;

    fn is_assigned(&self, s: &VarStore) -> bool {
        self.min(s) == self.max(s)
    }

    fn value(&self, s: &VarStore) -> Val {
        debug_assert!(self.is_assigned(s));
        self.min(s)
    }

    fn contains(&self, s: &VarStore, v: Val) -> bool {
        self.dom(s).contains(v)
    }

    fn assign(&self, s: &mut VarStore, v: Val) -> ModEvent {
        if !self.contains(s, v) {
            s.mark_failed();
            return ModEvent::Failed;
        }
        self.setdom(s, &RangeSeq::singleton(v))
    }

    fn exclude(&self, s: &mut VarStore, v: Val) -> ModEvent {
        self.excdom(s, &RangeSeq::singleton(v))
    }
}

/// A plain integer variable; the identity view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntVar(pub VarId);

impl IntView for IntVar {
    fn min(&self, s: &VarStore) -> Val {
        s.int_min(self.0)
    }
    fn max(&self, s: &VarStore) -> Val {
        s.int_max(self.0)
    }
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent {
        s.int_adjmin(self.0, n)
    }
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent {
        s.int_adjmax(self.0, n)
    }
    fn dom(&self, s: &VarStore) -> RangeSeq {
        s.int_dom(self.0).clone()
    }
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        s.int_setdom(self.0, r.clone())
    }
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        s.int_adjdom(self.0, r)
    }
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        s.int_excdom(self.0, r)
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        es
    }
    fn base(&self) -> Option<VarId> {
        Some(self.0)
    }
}

/// `φ(v) = v + o`.
#[derive(Clone, Copy, Debug)]
pub struct OffsetView<V: IntView> {
    pub inner: V,
    pub o: Val,
}

impl<V: IntView> OffsetView<V> {
    pub fn new(inner: V, o: Val) -> Self {
        assert!(o.abs() <= MAX_BOUND, "offset out of range");
        OffsetView { inner, o }
    }
}

impl<V: IntView> IntView for OffsetView<V> {
    fn min(&self, s: &VarStore) -> Val {
        self.inner.min(s) + self.o
    }
    fn max(&self, s: &VarStore) -> Val {
        self.inner.max(s) + self.o
    }
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent {
        self.inner.adjmin(s, n - self.o)
    }
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent {
        self.inner.adjmax(s, n - self.o)
    }
    fn dom(&self, s: &VarStore) -> RangeSeq {
        iter::collect_seq(iter::offset(self.inner.dom(s).iter(), self.o))
    }
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner
            .setdom(s, &iter::collect_seq(iter::offset(r.iter(), -self.o)))
    }
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner
            .adjdom(s, &iter::collect_seq(iter::offset(r.iter(), -self.o)))
    }
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner
            .excdom(s, &iter::collect_seq(iter::offset(r.iter(), -self.o)))
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        self.inner.transform_events(es)
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// `φ(v) = -v`. Bound operations swap roles; sequence reversal buffers.
#[derive(Clone, Copy, Debug)]
pub struct MinusView<V: IntView> {
    pub inner: V,
}

impl<V: IntView> MinusView<V> {
    pub fn new(inner: V) -> Self {
        MinusView { inner }
    }
}

impl<V: IntView> IntView for MinusView<V> {
    fn min(&self, s: &VarStore) -> Val {
        -self.inner.max(s)
    }
    fn max(&self, s: &VarStore) -> Val {
        -self.inner.min(s)
    }
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent {
        self.inner.adjmax(s, -n)
    }
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent {
        self.inner.adjmin(s, -n)
    }
    fn dom(&self, s: &VarStore) -> RangeSeq {
        iter::collect_seq(iter::minus(self.inner.dom(s).iter()))
    }
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner
            .setdom(s, &iter::collect_seq(iter::minus(r.iter())))
    }
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner
            .adjdom(s, &iter::collect_seq(iter::minus(r.iter())))
    }
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner
            .excdom(s, &iter::collect_seq(iter::minus(r.iter())))
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        let mut swapped = es.remove(EventSet::LBC | EventSet::UBC);
        if es.intersects(EventSet::LBC) {
            swapped = swapped | EventSet::UBC;
        }
        if es.intersects(EventSet::UBC) {
            swapped = swapped | EventSet::LBC;
        }
        self.inner.transform_events(swapped)
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// `φ(v) = a·v` for a strictly positive coefficient. Negative
/// coefficients are expressed as minus ∘ scale.
#[derive(Clone, Copy, Debug)]
pub struct ScaleView<V: IntView> {
    pub inner: V,
    pub a: Val,
}

impl<V: IntView> ScaleView<V> {
    pub fn new(inner: V, a: Val) -> Self {
        assert!((1..=MAX_COEFF).contains(&a), "scale coefficient out of range");
        ScaleView { inner, a }
    }
}

impl<V: IntView> IntView for ScaleView<V> {
    fn min(&self, s: &VarStore) -> Val {
        self.a * self.inner.min(s)
    }
    fn max(&self, s: &VarStore) -> Val {
        self.a * self.inner.max(s)
    }
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent {
        self.inner.adjmin(s, div_ceil(n, self.a))
    }
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent {
        self.inner.adjmax(s, div_floor(n, self.a))
    }
    fn dom(&self, s: &VarStore) -> RangeSeq {
        iter::collect_seq(iter::scale_up(self.inner.dom(s).iter(), self.a))
    }
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner.setdom(s, &r.scale_down(self.a))
    }
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner.adjdom(s, &r.scale_down(self.a))
    }
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner.excdom(s, &r.scale_down(self.a))
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        self.inner.transform_events(es)
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// Behaves like a variable assigned to `k`; writes only check emptiness,
/// and an emptying write fails the whole store immediately.
#[derive(Clone, Copy, Debug)]
pub struct ConstIntView(pub Val);

impl IntView for ConstIntView {
    fn min(&self, _s: &VarStore) -> Val {
        self.0
    }
    fn max(&self, _s: &VarStore) -> Val {
        self.0
    }
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent {
        if n > self.0 {
            s.mark_failed();
            ModEvent::Failed
        } else {
            ModEvent::None
        }
    }
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent {
        if n < self.0 {
            s.mark_failed();
            ModEvent::Failed
        } else {
            ModEvent::None
        }
    }
    fn dom(&self, _s: &VarStore) -> RangeSeq {
        RangeSeq::singleton(self.0)
    }
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        if r.is_empty() {
            s.mark_failed();
            ModEvent::Failed
        } else {
            debug_assert!(r.is_singleton() && r.contains(self.0));
            ModEvent::None
        }
    }
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        if r.contains(self.0) {
            ModEvent::None
        } else {
            s.mark_failed();
            ModEvent::Failed
        }
    }
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        if r.contains(self.0) {
            s.mark_failed();
            ModEvent::Failed
        } else {
            ModEvent::None
        }
    }
    fn transform_events(&self, _es: EventSet) -> EventSet {
        EventSet::NONE
    }
    fn base(&self) -> Option<VarId> {
        None
    }
}

/// Operation interface of a Boolean-valued variable or view.
pub trait BoolView: Clone + 'static {
    fn is_assigned(&self, s: &VarStore) -> bool;
    /// 0 or 1; only on assigned views.
    fn value(&self, s: &VarStore) -> Val;
    fn set_zero(&self, s: &mut VarStore) -> ModEvent;
    fn set_one(&self, s: &mut VarStore) -> ModEvent;
    fn transform_events(&self, es: EventSet) -> EventSet;
    fn base(&self) -> Option<VarId>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoolVar(pub VarId);

impl BoolView for BoolVar {
    fn is_assigned(&self, s: &VarStore) -> bool {
        s.bool_dom(self.0) != BoolDom::Both
    }
    fn value(&self, s: &VarStore) -> Val {
        s.bool_val(self.0)
    }
    fn set_zero(&self, s: &mut VarStore) -> ModEvent {
        s.bool_zero(self.0)
    }
    fn set_one(&self, s: &mut VarStore) -> ModEvent {
        s.bool_one(self.0)
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        es
    }
    fn base(&self) -> Option<VarId> {
        Some(self.0)
    }
}

/// Negation: reads swapped, `one()` performs `zero()` on the base and
/// vice versa.
#[derive(Clone, Copy, Debug)]
pub struct NegBoolView<B: BoolView> {
    pub inner: B,
}

impl<B: BoolView> NegBoolView<B> {
    pub fn new(inner: B) -> Self {
        NegBoolView { inner }
    }
}

impl<B: BoolView> BoolView for NegBoolView<B> {
    fn is_assigned(&self, s: &VarStore) -> bool {
        self.inner.is_assigned(s)
    }
    fn value(&self, s: &VarStore) -> Val {
        1 - self.inner.value(s)
    }
    fn set_zero(&self, s: &mut VarStore) -> ModEvent {
        self.inner.set_one(s)
    }
    fn set_one(&self, s: &mut VarStore) -> ModEvent {
        self.inner.set_zero(s)
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        self.inner.transform_events(es)
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// Presents a Boolean variable as an integer over {0, 1}, so that any
/// integer propagator can run on Boolean variables.
#[derive(Clone, Copy, Debug)]
pub struct IntOfBool<B: BoolView> {
    pub inner: B,
}

impl<B: BoolView> IntOfBool<B> {
    pub fn new(inner: B) -> Self {
        IntOfBool { inner }
    }
}

impl<B: BoolView> IntView for IntOfBool<B> {
    fn min(&self, s: &VarStore) -> Val {
        if self.inner.is_assigned(s) {
            self.inner.value(s)
        } else {
            0
        }
    }
    fn max(&self, s: &VarStore) -> Val {
        if self.inner.is_assigned(s) {
            self.inner.value(s)
        } else {
            1
        }
    }
    fn adjmin(&self, s: &mut VarStore, n: Val) -> ModEvent {
        if n <= self.min(s) {
            ModEvent::None
        } else if n == 1 {
            self.inner.set_one(s)
        } else {
            s.mark_failed();
            ModEvent::Failed
        }
    }
    fn adjmax(&self, s: &mut VarStore, n: Val) -> ModEvent {
        if n >= self.max(s) {
            ModEvent::None
        } else if n == 0 {
            self.inner.set_zero(s)
        } else {
            s.mark_failed();
            ModEvent::Failed
        }
    }
    fn dom(&self, s: &VarStore) -> RangeSeq {
        RangeSeq::range(self.min(s), self.max(s))
    }
    fn setdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.adjdom(s, r)
    }
    fn adjdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        match (r.contains(0), r.contains(1)) {
            (true, true) => ModEvent::None,
            (true, false) => self.adjmax(s, 0),
            (false, true) => self.adjmin(s, 1),
            (false, false) => {
                s.mark_failed();
                ModEvent::Failed
            }
        }
    }
    fn excdom(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        match (r.contains(0), r.contains(1)) {
            (false, false) => ModEvent::None,
            (true, false) => self.adjmin(s, 1),
            (false, true) => self.adjmax(s, 0),
            (true, true) => {
                s.mark_failed();
                ModEvent::Failed
            }
        }
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        if es.is_empty() {
            EventSet::NONE
        } else {
            self.inner.transform_events(EventSet::VAL)
        }
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// Operation interface of a set-interval variable or view.
pub trait SetView: Clone + 'static {
    fn glb(&self, s: &VarStore) -> RangeSeq;
    fn lub(&self, s: &VarStore) -> RangeSeq;
    fn adjglb(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent;
    fn adjlub(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent;
    fn transform_events(&self, es: EventSet) -> EventSet;
    fn base(&self) -> Option<VarId>;

    fn is_assigned(&self, s: &VarStore) -> bool {
        self.glb(s) == self.lub(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetVar(pub VarId);

impl SetView for SetVar {
    fn glb(&self, s: &VarStore) -> RangeSeq {
        s.set_dom(self.0).glb.clone()
    }
    fn lub(&self, s: &VarStore) -> RangeSeq {
        s.set_dom(self.0).lub.clone()
    }
    fn adjglb(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        s.set_adjglb(self.0, r)
    }
    fn adjlub(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        s.set_adjlub(self.0, r)
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        es
    }
    fn base(&self) -> Option<VarId> {
        Some(self.0)
    }
}

/// `φ(S) = universe \ S`; bounds swap roles and writes dualize.
#[derive(Clone, Debug)]
pub struct ComplementView<S: SetView> {
    pub inner: S,
    pub universe: Range,
}

impl<S: SetView> ComplementView<S> {
    pub fn new(inner: S, universe: Range) -> Self {
        ComplementView { inner, universe }
    }

    fn compl(&self, r: &RangeSeq) -> RangeSeq {
        iter::collect_seq(iter::compl(r.iter(), self.universe))
    }
}

impl<S: SetView> SetView for ComplementView<S> {
    fn glb(&self, s: &VarStore) -> RangeSeq {
        self.compl(&self.inner.lub(s))
    }
    fn lub(&self, s: &VarStore) -> RangeSeq {
        self.compl(&self.inner.glb(s))
    }
    fn adjglb(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner.adjlub(s, &self.compl(r))
    }
    fn adjlub(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner.adjglb(s, &self.compl(r))
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        let mut swapped = es.remove(EventSet::GLBC | EventSet::LUBC);
        if es.intersects(EventSet::GLBC) {
            swapped = swapped | EventSet::LUBC;
        }
        if es.intersects(EventSet::LUBC) {
            swapped = swapped | EventSet::GLBC;
        }
        self.inner.transform_events(swapped)
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// `φ(v) = {v}`: presents an integer variable as a set variable.
#[derive(Clone, Debug)]
pub struct SingletonSetView<V: IntView> {
    pub inner: V,
}

impl<V: IntView> SingletonSetView<V> {
    pub fn new(inner: V) -> Self {
        SingletonSetView { inner }
    }
}

impl<V: IntView> SetView for SingletonSetView<V> {
    fn glb(&self, s: &VarStore) -> RangeSeq {
        if self.inner.is_assigned(s) {
            RangeSeq::singleton(self.inner.value(s))
        } else {
            RangeSeq::empty()
        }
    }
    fn lub(&self, s: &VarStore) -> RangeSeq {
        self.inner.dom(s)
    }
    fn adjglb(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        match r.cardinality() {
            0 => ModEvent::None,
            1 => self.inner.assign(s, r.min().unwrap()),
            _ => {
                s.mark_failed();
                ModEvent::Failed
            }
        }
    }
    fn adjlub(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        self.inner.adjdom(s, r)
    }
    fn transform_events(&self, es: EventSet) -> EventSet {
        let mut out = EventSet::NONE;
        if es.intersects(EventSet::LUBC) {
            out = out | EventSet::DMC;
        }
        if es.intersects(EventSet::GLBC | EventSet::VAL) {
            out = out | EventSet::VAL;
        }
        self.inner.transform_events(out)
    }
    fn base(&self) -> Option<VarId> {
        self.inner.base()
    }
}

/// A constant set: `glb = lub = S`; writes only check consistency and
/// preserve failure.
#[derive(Clone, Debug)]
pub struct ConstSetView(pub RangeSeq);

impl SetView for ConstSetView {
    fn glb(&self, _s: &VarStore) -> RangeSeq {
        self.0.clone()
    }
    fn lub(&self, _s: &VarStore) -> RangeSeq {
        self.0.clone()
    }
    fn adjglb(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        if r.is_subset_of(&self.0) {
            ModEvent::None
        } else {
            s.mark_failed();
            ModEvent::Failed
        }
    }
    fn adjlub(&self, s: &mut VarStore, r: &RangeSeq) -> ModEvent {
        if self.0.is_subset_of(r) {
            ModEvent::None
        } else {
            s.mark_failed();
            ModEvent::Failed
        }
    }
    fn transform_events(&self, _es: EventSet) -> EventSet {
        EventSet::NONE
    }
    fn base(&self) -> Option<VarId> {
        None
    }
}

/// Runtime description of a view's value map. This is the oracle-side
/// twin of the monomorphized view types above: theorem checks compose it
/// dynamically instead of instantiating generics.
#[derive(Clone, Debug, PartialEq)]
pub enum ViewSpec {
    Identity,
    Offset(Val),
    Minus,
    Scale(Val),
    Constant(Val),
    BoolNeg,
    IntOfBool,
    SingletonSet,
    SetComplement(Range),
    ConstSet(RangeSeq),
    /// `Compose(outer, inner)`: value map is outer ∘ inner.
    Compose(Box<ViewSpec>, Box<ViewSpec>),
}

impl ViewSpec {
    pub fn compose(outer: ViewSpec, inner: ViewSpec) -> ViewSpec {
        ViewSpec::Compose(Box::new(outer), Box::new(inner))
    }

    /// Whether this spec denotes a constant (no base variable).
    pub fn is_constant(&self) -> bool {
        match self {
            ViewSpec::Constant(_) | ViewSpec::ConstSet(_) => true,
            ViewSpec::Compose(outer, inner) => outer.is_constant() || inner.is_constant(),
            _ => false,
        }
    }

    /// Forward value map `φ` for the kinds whose base and apparent values
    /// are both integers (identity, offset, minus, scale, bool_neg,
    /// int_of_bool, and their compositions). `None` on overflow or for
    /// set-valued / constant kinds.
    pub fn apply_int(&self, v: Val) -> Option<Val> {
        match self {
            ViewSpec::Identity | ViewSpec::IntOfBool => Some(v),
            ViewSpec::Offset(o) => v.checked_add(*o),
            ViewSpec::Minus => v.checked_neg(),
            ViewSpec::Scale(a) => v.checked_mul(*a),
            ViewSpec::BoolNeg => Some(1 - v),
            ViewSpec::Compose(outer, inner) => inner.apply_int(v).and_then(|w| outer.apply_int(w)),
            _ => None,
        }
    }

    /// Inverse value map `φ⁻` for the integer kinds; `None` when `w` is
    /// outside the image of `φ`.
    pub fn unapply_int(&self, w: Val) -> Option<Val> {
        match self {
            ViewSpec::Identity | ViewSpec::IntOfBool => Some(w),
            ViewSpec::Offset(o) => w.checked_sub(*o),
            ViewSpec::Minus => w.checked_neg(),
            ViewSpec::Scale(a) => {
                if w % *a == 0 {
                    Some(w / *a)
                } else {
                    None
                }
            }
            ViewSpec::BoolNeg => Some(1 - w),
            ViewSpec::Compose(outer, inner) => {
                outer.unapply_int(w).and_then(|u| inner.unapply_int(u))
            }
            _ => None,
        }
    }

    /// Event-set transformation: the event set over the view's apparent
    /// variable mapped to the base variable's event set.
    pub fn transform_events(&self, es: EventSet) -> EventSet {
        match self {
            ViewSpec::Identity | ViewSpec::Offset(_) | ViewSpec::Scale(_) => es,
            ViewSpec::Constant(_) | ViewSpec::ConstSet(_) => EventSet::NONE,
            ViewSpec::Minus => {
                let mut out = es.remove(EventSet::LBC | EventSet::UBC);
                if es.intersects(EventSet::LBC) {
                    out = out | EventSet::UBC;
                }
                if es.intersects(EventSet::UBC) {
                    out = out | EventSet::LBC;
                }
                out
            }
            ViewSpec::BoolNeg => es,
            ViewSpec::IntOfBool => {
                if es.is_empty() {
                    EventSet::NONE
                } else {
                    EventSet::VAL
                }
            }
            ViewSpec::SingletonSet => {
                let mut out = EventSet::NONE;
                if es.intersects(EventSet::LUBC) {
                    out = out | EventSet::DMC;
                }
                if es.intersects(EventSet::GLBC | EventSet::VAL) {
                    out = out | EventSet::VAL;
                }
                out
            }
            ViewSpec::SetComplement(_) => {
                let mut out = es.remove(EventSet::GLBC | EventSet::LUBC);
                if es.intersects(EventSet::GLBC) {
                    out = out | EventSet::LUBC;
                }
                if es.intersects(EventSet::LUBC) {
                    out = out | EventSet::GLBC;
                }
                out
            }
            ViewSpec::Compose(outer, inner) => inner.transform_events(outer.transform_events(es)),
        }
    }
}
