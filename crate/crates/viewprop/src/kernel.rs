//! Values, ranges, range sequences and extensional constraints: the
//! mathematical substrate everything else is built on.
//!
//! A [`RangeSeq`] is the canonical representation of a finite set of
//! integers: the shortest ordered list of disjoint, non-adjacent ranges
//! covering the set. All variable domains and all set-valued updates go
//! through this representation.

use std::fmt;

use crate::error::{Error, Result};

/// Integer value type. The semantic universe is a finite subset of this
/// range; arithmetic that would leave it is reported as
/// [`Error::Overflow`], never wrapped.
pub type Val = i64;

/// Largest magnitude accepted for a variable bound. View transformations
/// (offset, scale, minus, and their depth-2 compositions) of values within
/// this limit stay representable in [`Val`].
pub const MAX_BOUND: Val = 1 << 40;

/// Coefficient limit for scale views.
pub const MAX_COEFF: Val = 1 << 20;

pub fn checked_add(a: Val, b: Val) -> Result<Val> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn checked_neg(a: Val) -> Result<Val> {
    a.checked_neg().ok_or(Error::Overflow)
}

pub fn checked_mul(a: Val, b: Val) -> Result<Val> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Floor division for possibly negative numerators.
pub fn div_floor(a: Val, b: Val) -> Val {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a < 0 {
        q - 1
    } else {
        q
    }
}

/// Ceiling division for possibly negative numerators.
pub fn div_ceil(a: Val, b: Val) -> Val {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a > 0 {
        q + 1
    } else {
        q
    }
}

/// Dense index identifying a variable within one space.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub usize);

/// A non-empty closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Range {
    pub lo: Val,
    pub hi: Val,
}

impl Range {
    pub fn new(lo: Val, hi: Val) -> Self {
        assert!(lo <= hi, "empty range [{lo}, {hi}]");
        Range { lo, hi }
    }

    pub fn singleton(v: Val) -> Self {
        Range { lo: v, hi: v }
    }

    pub fn width(&self) -> u64 {
        // widen so that [Val::MIN, Val::MAX] does not overflow
        (self.hi as i128 - self.lo as i128 + 1) as u64
    }

    pub fn contains(&self, v: Val) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = Val> {
        self.lo..=self.hi
    }
}

/// Canonical ordered sequence of disjoint, non-adjacent ranges. The unique
/// shortest range list covering its value set.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RangeSeq {
    ranges: Vec<Range>,
}

impl RangeSeq {
    pub fn empty() -> Self {
        RangeSeq { ranges: Vec::new() }
    }

    pub fn range(lo: Val, hi: Val) -> Self {
        RangeSeq {
            ranges: vec![Range::new(lo, hi)],
        }
    }

    pub fn singleton(v: Val) -> Self {
        Self::range(v, v)
    }

    /// Canonicalizes an arbitrary list of ranges: unordered, overlapping
    /// and adjacent inputs are allowed, empty ranges are not representable
    /// in [`Range`] and thus already excluded.
    pub fn normalize(mut raw: Vec<Range>) -> Self {
        raw.sort_by_key(|r| r.lo);
        let mut out: Vec<Range> = Vec::with_capacity(raw.len());
        for r in raw {
            match out.last_mut() {
                // adjacency test in i128: `hi + 1` must not wrap
                Some(last) if (r.lo as i128) <= last.hi as i128 + 1 => {
                    last.hi = last.hi.max(r.hi);
                }
                _ => out.push(r),
            }
        }
        RangeSeq { ranges: out }
    }

    /// Builds from ranges that are already canonical; checked in debug.
    pub fn from_sorted(ranges: Vec<Range>) -> Self {
        let seq = RangeSeq { ranges };
        debug_assert!(seq.is_canonical(), "range sequence not canonical");
        seq
    }

    pub fn is_canonical(&self) -> bool {
        self.ranges
            .windows(2)
            .all(|w| (w[0].hi as i128) + 1 < w[1].lo as i128)
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }

    pub fn ranges(&self) -> &[Range] {
        &self.ranges
    }

    pub fn iter(&self) -> impl Iterator<Item = Range> + '_ {
        self.ranges.iter().copied()
    }

    pub fn min(&self) -> Option<Val> {
        self.ranges.first().map(|r| r.lo)
    }

    pub fn max(&self) -> Option<Val> {
        self.ranges.last().map(|r| r.hi)
    }

    /// Number of covered values.
    pub fn cardinality(&self) -> u64 {
        self.ranges.iter().map(Range::width).sum()
    }

    /// Convex hull `[min, max]`; empty input passes through.
    pub fn hull(&self) -> RangeSeq {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => RangeSeq::range(lo, hi),
            _ => RangeSeq::empty(),
        }
    }

    pub fn contains(&self, v: Val) -> bool {
        self.ranges
            .binary_search_by(|r| {
                if v < r.lo {
                    std::cmp::Ordering::Greater
                } else if v > r.hi {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    pub fn is_singleton(&self) -> bool {
        self.ranges.len() == 1 && self.ranges[0].lo == self.ranges[0].hi
    }

    pub fn values(&self) -> impl Iterator<Item = Val> + '_ {
        self.ranges.iter().flat_map(|r| r.values())
    }

    pub fn from_values<I: IntoIterator<Item = Val>>(vals: I) -> Self {
        Self::normalize(vals.into_iter().map(Range::singleton).collect())
    }

    /// `self ⊆ other` as sets.
    pub fn is_subset_of(&self, other: &RangeSeq) -> bool {
        crate::iter::diff(self.iter(), other.iter()).next().is_none()
    }

    /// Shifts every value by `c`; reports overflow instead of wrapping.
    pub fn try_offset(&self, c: Val) -> Result<RangeSeq> {
        let mut out = Vec::with_capacity(self.ranges.len());
        for r in &self.ranges {
            out.push(Range {
                lo: checked_add(r.lo, c)?,
                hi: checked_add(r.hi, c)?,
            });
        }
        Ok(RangeSeq { ranges: out })
    }

    /// Negates every value (reversal and sign change of the sequence).
    pub fn try_negate(&self) -> Result<RangeSeq> {
        let mut out = Vec::with_capacity(self.ranges.len());
        for r in self.ranges.iter().rev() {
            out.push(Range {
                lo: checked_neg(r.hi)?,
                hi: checked_neg(r.lo)?,
            });
        }
        Ok(RangeSeq { ranges: out })
    }

    /// Multiplies every value by `a >= 1`. For `a > 1` every output range
    /// is a singleton.
    pub fn try_scale_up(&self, a: Val) -> Result<RangeSeq> {
        assert!(a >= 1);
        if a == 1 {
            return Ok(self.clone());
        }
        let mut out = Vec::new();
        for r in &self.ranges {
            for v in r.values() {
                out.push(Range::singleton(checked_mul(v, a)?));
            }
        }
        Ok(RangeSeq { ranges: out })
    }

    /// The inverse image under multiplication by `a >= 1`:
    /// `{ v | a*v ∈ self }`. Per input range `[m, n]` this is
    /// `[⌈m/a⌉, ⌊n/a⌋]`, skipping ranges that become empty and merging
    /// ranges that become overlapping or adjacent.
    pub fn scale_down(&self, a: Val) -> RangeSeq {
        assert!(a >= 1);
        if a == 1 {
            return self.clone();
        }
        let mut raw = Vec::with_capacity(self.ranges.len());
        for r in &self.ranges {
            let lo = div_ceil(r.lo, a);
            let hi = div_floor(r.hi, a);
            if lo <= hi {
                raw.push(Range { lo, hi });
            }
        }
        Self::normalize(raw)
    }
}

impl fmt::Debug for RangeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, r) in self.ranges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{}]", r.lo, r.hi)?;
        }
        write!(f, "⟩")
    }
}

/// Total assignment over an ordered scope of variables; values are stored
/// positionally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Tuple(pub Vec<Val>);

/// Explicit finite set of assignments over a scope. The oracle-side ground
/// truth for constraints.
#[derive(Clone, Debug)]
pub struct ExtensionalConstraint {
    pub scope: Vec<VarId>,
    pub tuples: std::collections::BTreeSet<Vec<Val>>,
}

impl ExtensionalConstraint {
    pub fn new(scope: Vec<VarId>, tuples: impl IntoIterator<Item = Vec<Val>>) -> Self {
        let set: std::collections::BTreeSet<Vec<Val>> = tuples.into_iter().collect();
        for t in &set {
            assert_eq!(t.len(), scope.len(), "tuple arity mismatch");
        }
        ExtensionalConstraint { scope, tuples: set }
    }

    /// Builds the constraint from a predicate over the full cross product
    /// of `universe` per scope position.
    pub fn from_predicate(
        scope: Vec<VarId>,
        universe: &[Val],
        pred: impl Fn(&[Val]) -> bool,
    ) -> Self {
        let n = scope.len();
        let mut tuples = std::collections::BTreeSet::new();
        let mut idx = vec![0usize; n];
        'outer: loop {
            let tuple: Vec<Val> = idx.iter().map(|&i| universe[i]).collect();
            if pred(&tuple) {
                tuples.insert(tuple);
            }
            for k in (0..n).rev() {
                idx[k] += 1;
                if idx[k] < universe.len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
        ExtensionalConstraint { scope, tuples }
    }

    pub fn contains(&self, tuple: &[Val]) -> bool {
        self.tuples.contains(tuple)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(ranges: &[(Val, Val)]) -> RangeSeq {
        RangeSeq::normalize(ranges.iter().map(|&(lo, hi)| Range::new(lo, hi)).collect())
    }

    #[test]
    fn normalize_merges_overlap_and_adjacency() {
        assert_eq!(seq(&[(5, 7), (1, 6)]), RangeSeq::range(1, 7));
        assert_eq!(seq(&[(1, 2), (3, 4)]), RangeSeq::range(1, 4));
        assert_eq!(
            seq(&[(8, 9), (1, 3)]).ranges(),
            &[Range::new(1, 3), Range::new(8, 9)]
        );
        assert_eq!(seq(&[]), RangeSeq::empty());
    }

    #[test]
    fn normalize_is_idempotent() {
        for raw in [
            vec![(5, 7), (1, 6), (9, 9)],
            vec![(1, 1), (2, 2), (3, 3)],
            vec![(-4, 0), (2, 4), (-2, 1)],
        ] {
            let once = seq(&raw);
            let twice = RangeSeq::normalize(once.ranges().to_vec());
            assert_eq!(once, twice);
            assert!(once.is_canonical());
        }
    }

    #[test]
    fn hull_and_cardinality() {
        let d = seq(&[(1, 3), (7, 9)]);
        assert_eq!(d.hull(), RangeSeq::range(1, 9));
        assert_eq!(d.cardinality(), 6);
        assert_eq!(RangeSeq::empty().hull(), RangeSeq::empty());
        assert_eq!(RangeSeq::empty().cardinality(), 0);
        assert_eq!(RangeSeq::singleton(4).hull(), RangeSeq::singleton(4));
        // hull is extensive and idempotent
        assert!(d.is_subset_of(&d.hull()));
        assert_eq!(d.hull().hull(), d.hull());
    }

    #[test]
    fn contains_and_membership_queries() {
        let d = seq(&[(1, 3), (7, 9)]);
        for v in [1, 2, 3, 7, 8, 9] {
            assert!(d.contains(v));
        }
        for v in [0, 4, 5, 6, 10] {
            assert!(!d.contains(v));
        }
        assert_eq!(d.min(), Some(1));
        assert_eq!(d.max(), Some(9));
        assert!(!d.is_singleton());
        assert!(RangeSeq::singleton(-3).is_singleton());
    }

    #[test]
    fn from_values_roundtrips() {
        let vals = vec![3, 1, 2, 9, -1, 9];
        let d = RangeSeq::from_values(vals);
        assert_eq!(d.values().collect::<Vec<_>>(), vec![-1, 1, 2, 3, 9]);
        assert!(d.is_canonical());
    }

    #[test]
    fn subset_relation() {
        let small = seq(&[(1, 2), (8, 8)]);
        let big = seq(&[(1, 3), (7, 9)]);
        assert!(small.is_subset_of(&big));
        assert!(!big.is_subset_of(&small));
        assert!(RangeSeq::empty().is_subset_of(&small));
        assert!(big.is_subset_of(&big));
    }

    #[test]
    fn offset_negate_scale() {
        let d = seq(&[(1, 2), (4, 4)]);
        assert_eq!(d.try_offset(3).unwrap(), seq(&[(4, 5), (7, 7)]));
        assert_eq!(d.try_negate().unwrap(), seq(&[(-4, -4), (-2, -1)]));
        assert_eq!(
            RangeSeq::range(1, 3).try_scale_up(2).unwrap(),
            seq(&[(2, 2), (4, 4), (6, 6)])
        );
        assert_eq!(RangeSeq::range(3, 9).scale_down(2), RangeSeq::range(2, 4));
        assert_eq!(RangeSeq::singleton(3).scale_down(2), RangeSeq::empty());
        assert_eq!(
            seq(&[(2, 3), (5, 6)]).scale_down(2),
            seq(&[(1, 1), (3, 3)])
        );
    }

    #[test]
    fn scale_galois_section() {
        // scale_down(a) ∘ try_scale_up(a) = id on every small domain
        for bits in 1u32..512 {
            let d = RangeSeq::from_values((0..9).filter(|i| bits >> i & 1 == 1).map(|i| i - 4));
            for a in [1, 2, 3, 5] {
                assert_eq!(d.try_scale_up(a).unwrap().scale_down(a), d, "a={a} d={d:?}");
            }
        }
    }

    #[test]
    fn division_rounding() {
        assert_eq!(div_floor(7, 2), 3);
        assert_eq!(div_floor(-7, 2), -4);
        assert_eq!(div_floor(-8, 2), -4);
        assert_eq!(div_ceil(7, 2), 4);
        assert_eq!(div_ceil(-7, 2), -3);
        assert_eq!(div_ceil(8, 2), 4);
    }

    #[test]
    fn overflow_is_an_error_not_a_wrap() {
        let top = RangeSeq::singleton(Val::MAX);
        assert!(top.try_offset(1).is_err());
        assert!(top.try_negate().is_ok());
        assert!(RangeSeq::singleton(Val::MIN).try_negate().is_err());
        assert!(top.try_scale_up(2).is_err());
    }

    #[test]
    fn extensional_from_predicate() {
        let c = ExtensionalConstraint::from_predicate(
            vec![VarId(0), VarId(1)],
            &[1, 2, 3],
            |t| t[0] == t[1] + 1,
        );
        assert!(c.contains(&[2, 1]));
        assert!(c.contains(&[3, 2]));
        assert!(!c.contains(&[1, 1]));
        assert_eq!(c.tuples.len(), 2);
    }
}
