//! Range iterator combinators.
//!
//! All domain updates flow through iterators over [`Range`] items. Every
//! combinator consumes iterators that emit a canonical range sequence
//! (strictly increasing, non-adjacent ranges) and emits a canonical
//! sequence itself. Combinators are lazy, except where direction reversal
//! forces buffering (minus, cache).
//!
//! The value-transforming combinators (offset, minus, scale) panic on
//! arithmetic overflow; callers that need an error instead use the checked
//! sequence-level operations on [`RangeSeq`].

use std::iter::Peekable;

use crate::kernel::{div_ceil, div_floor, Range, RangeSeq, Val};

/// Intersection: `set(out) = set(a) ∩ set(b)`.
pub fn inter<A, B>(a: A, b: B) -> Inter<A, B>
where
    A: Iterator<Item = Range>,
    B: Iterator<Item = Range>,
{
    Inter {
        a: a.peekable(),
        b: b.peekable(),
    }
}

pub struct Inter<A: Iterator<Item = Range>, B: Iterator<Item = Range>> {
    a: Peekable<A>,
    b: Peekable<B>,
}

impl<A, B> Iterator for Inter<A, B>
where
    A: Iterator<Item = Range>,
    B: Iterator<Item = Range>,
{
    type Item = Range;

    fn next(&mut self) -> Option<Range> {
        loop {
            let ra = *self.a.peek()?;
            let rb = *self.b.peek()?;
            if ra.hi < rb.lo {
                self.a.next();
            } else if rb.hi < ra.lo {
                self.b.next();
            } else {
                let out = Range::new(ra.lo.max(rb.lo), ra.hi.min(rb.hi));
                if ra.hi <= rb.hi {
                    self.a.next();
                }
                if rb.hi <= ra.hi {
                    self.b.next();
                }
                return Some(out);
            }
        }
    }
}

/// Union: `set(out) = set(a) ∪ set(b)`, merging overlap and adjacency.
pub fn union<A, B>(a: A, b: B) -> Union<A, B>
where
    A: Iterator<Item = Range>,
    B: Iterator<Item = Range>,
{
    Union {
        a: a.peekable(),
        b: b.peekable(),
        pending: None,
    }
}

pub struct Union<A: Iterator<Item = Range>, B: Iterator<Item = Range>> {
    a: Peekable<A>,
    b: Peekable<B>,
    pending: Option<Range>,
}

impl<A, B> Iterator for Union<A, B>
where
    A: Iterator<Item = Range>,
    B: Iterator<Item = Range>,
{
    type Item = Range;

    fn next(&mut self) -> Option<Range> {
        loop {
            let cur = match (self.a.peek(), self.b.peek()) {
                (Some(ra), Some(rb)) => {
                    if ra.lo <= rb.lo {
                        self.a.next().unwrap()
                    } else {
                        self.b.next().unwrap()
                    }
                }
                (Some(_), None) => self.a.next().unwrap(),
                (None, Some(_)) => self.b.next().unwrap(),
                (None, None) => return self.pending.take(),
            };
            match &mut self.pending {
                None => self.pending = Some(cur),
                Some(p) => {
                    if cur.lo as i128 <= p.hi as i128 + 1 {
                        p.hi = p.hi.max(cur.hi);
                    } else {
                        let out = *p;
                        self.pending = Some(cur);
                        return Some(out);
                    }
                }
            }
        }
    }
}

/// Difference: `set(out) = set(a) \ set(b)`.
pub fn diff<A, B>(a: A, b: B) -> Diff<A, B>
where
    A: Iterator<Item = Range>,
    B: Iterator<Item = Range>,
{
    Diff {
        a,
        b: b.peekable(),
        cur: None,
    }
}

pub struct Diff<A: Iterator<Item = Range>, B: Iterator<Item = Range>> {
    a: A,
    b: Peekable<B>,
    cur: Option<Range>,
}

impl<A, B> Iterator for Diff<A, B>
where
    A: Iterator<Item = Range>,
    B: Iterator<Item = Range>,
{
    type Item = Range;

    fn next(&mut self) -> Option<Range> {
        loop {
            let c = match self.cur.take() {
                Some(c) => c,
                None => self.a.next()?,
            };
            while matches!(self.b.peek(), Some(rb) if rb.hi < c.lo) {
                self.b.next();
            }
            match self.b.peek() {
                None => return Some(c),
                Some(rb) if rb.lo > c.hi => return Some(c),
                Some(&rb) => {
                    if rb.lo > c.lo {
                        if rb.hi < c.hi {
                            self.cur = Some(Range::new(rb.hi + 1, c.hi));
                        }
                        return Some(Range::new(c.lo, rb.lo - 1));
                    }
                    // rb covers the start of c
                    if rb.hi < c.hi {
                        self.cur = Some(Range::new(rb.hi + 1, c.hi));
                    }
                    // else: c fully removed, pull the next range
                }
            }
        }
    }
}

/// Complement within a universe: `set(out) = universe \ set(r)`.
/// Requires `set(r) ⊆ universe`.
pub fn compl<R>(r: R, universe: Range) -> Diff<std::iter::Once<Range>, R>
where
    R: Iterator<Item = Range>,
{
    diff(std::iter::once(universe), r)
}

/// Offset: `set(out) = { v + c | v ∈ set(r) }`.
pub fn offset<R>(r: R, c: Val) -> impl Iterator<Item = Range>
where
    R: Iterator<Item = Range>,
{
    r.map(move |rg| {
        Range::new(
            rg.lo.checked_add(c).expect("offset overflow"),
            rg.hi.checked_add(c).expect("offset overflow"),
        )
    })
}

/// Minus: `set(out) = { -v | v ∈ set(r) }`. Direction reversal requires
/// buffering the input.
pub fn minus<R>(r: R) -> std::vec::IntoIter<Range>
where
    R: Iterator<Item = Range>,
{
    let ranges: Vec<Range> = r.collect();
    let out: Vec<Range> = ranges
        .iter()
        .rev()
        .map(|rg| {
            Range::new(
                rg.hi.checked_neg().expect("negation overflow"),
                rg.lo.checked_neg().expect("negation overflow"),
            )
        })
        .collect();
    out.into_iter()
}

/// Scale by `a >= 1`: `set(out) = { a*v | v ∈ set(r) }`. For `a > 1`
/// every output range is a singleton.
pub fn scale_up<R>(r: R, a: Val) -> ScaleUp<R>
where
    R: Iterator<Item = Range>,
{
    assert!(a >= 1);
    ScaleUp { r, a, cur: None }
}

pub struct ScaleUp<R: Iterator<Item = Range>> {
    r: R,
    a: Val,
    cur: Option<Range>,
}

impl<R: Iterator<Item = Range>> Iterator for ScaleUp<R> {
    type Item = Range;

    fn next(&mut self) -> Option<Range> {
        if self.a == 1 {
            return self.r.next();
        }
        let c = match self.cur.take() {
            Some(c) => c,
            None => self.r.next()?,
        };
        if c.lo < c.hi {
            self.cur = Some(Range::new(c.lo + 1, c.hi));
        }
        let v = c.lo.checked_mul(self.a).expect("scale overflow");
        Some(Range::singleton(v))
    }
}

/// Inverse scale by `a >= 1`: `set(out) = { v | a*v ∈ set(r) }`, skipping
/// ranges that round to empty and merging overlapping or adjacent results.
pub fn scale_down<R>(r: R, a: Val) -> ScaleDown<R>
where
    R: Iterator<Item = Range>,
{
    assert!(a >= 1);
    ScaleDown {
        r,
        a,
        pending: None,
        done: false,
    }
}

pub struct ScaleDown<R: Iterator<Item = Range>> {
    r: R,
    a: Val,
    pending: Option<Range>,
    done: bool,
}

impl<R: Iterator<Item = Range>> Iterator for ScaleDown<R> {
    type Item = Range;

    fn next(&mut self) -> Option<Range> {
        if self.done {
            return None;
        }
        loop {
            let nxt = match self.r.next() {
                Some(rg) => {
                    let lo = div_ceil(rg.lo, self.a);
                    let hi = div_floor(rg.hi, self.a);
                    if lo > hi {
                        continue;
                    }
                    Range::new(lo, hi)
                }
                None => {
                    self.done = true;
                    return self.pending.take();
                }
            };
            match &mut self.pending {
                None => self.pending = Some(nxt),
                Some(p) => {
                    if nxt.lo as i128 <= p.hi as i128 + 1 {
                        p.hi = p.hi.max(nxt.hi);
                    } else {
                        let out = *p;
                        self.pending = Some(nxt);
                        return Some(out);
                    }
                }
            }
        }
    }
}

/// Buffers the input once and supports repeated traversal via
/// [`CacheIter::reset`].
pub fn cache<R>(r: R) -> CacheIter
where
    R: Iterator<Item = Range>,
{
    CacheIter {
        ranges: r.collect(),
        pos: 0,
    }
}

#[derive(Clone, Debug)]
pub struct CacheIter {
    ranges: Vec<Range>,
    pos: usize,
}

impl CacheIter {
    pub fn reset(&mut self) {
        self.pos = 0;
    }
}

impl Iterator for CacheIter {
    type Item = Range;

    fn next(&mut self) -> Option<Range> {
        let out = self.ranges.get(self.pos).copied();
        self.pos += 1;
        out
    }
}

/// Collects a combinator output into a canonical [`RangeSeq`].
pub fn collect_seq<R: Iterator<Item = Range>>(r: R) -> RangeSeq {
    RangeSeq::from_sorted(r.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn seq(ranges: &[(Val, Val)]) -> RangeSeq {
        RangeSeq::normalize(ranges.iter().map(|&(lo, hi)| Range::new(lo, hi)).collect())
    }

    #[test]
    fn inter_example() {
        let a = seq(&[(1, 3), (7, 9)]);
        let b = seq(&[(2, 8)]);
        assert_eq!(collect_seq(inter(a.iter(), b.iter())), seq(&[(2, 3), (7, 8)]));
    }

    #[test]
    fn union_example() {
        let a = seq(&[(1, 3), (8, 9)]);
        let b = seq(&[(2, 5)]);
        assert_eq!(collect_seq(union(a.iter(), b.iter())), seq(&[(1, 5), (8, 9)]));
    }

    #[test]
    fn diff_example() {
        let a = seq(&[(1, 3), (5, 7)]);
        let b = seq(&[(2, 6)]);
        assert_eq!(collect_seq(diff(a.iter(), b.iter())), seq(&[(1, 1), (7, 7)]));
    }

    #[test]
    fn compl_example() {
        let a = seq(&[(1, 1), (3, 4)]);
        assert_eq!(
            collect_seq(compl(a.iter(), Range::new(0, 5))),
            seq(&[(0, 0), (2, 2), (5, 5)])
        );
        assert_eq!(
            collect_seq(compl(RangeSeq::empty().iter(), Range::new(0, 5))),
            seq(&[(0, 5)])
        );
    }

    #[test]
    fn offset_and_minus_examples() {
        let a = seq(&[(1, 2), (4, 4)]);
        assert_eq!(collect_seq(offset(a.iter(), 3)), seq(&[(4, 5), (7, 7)]));
        assert_eq!(collect_seq(minus(a.iter())), seq(&[(-4, -4), (-2, -1)]));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(
            collect_seq(scale_up(seq(&[(1, 3)]).iter(), 2)),
            seq(&[(2, 2), (4, 4), (6, 6)])
        );
        assert_eq!(collect_seq(scale_down(seq(&[(3, 9)]).iter(), 2)), seq(&[(2, 4)]));
        assert_eq!(
            collect_seq(scale_down(seq(&[(3, 3)]).iter(), 2)),
            RangeSeq::empty()
        );
        assert_eq!(
            collect_seq(scale_down(seq(&[(2, 3), (5, 6)]).iter(), 2)),
            seq(&[(1, 1), (3, 3)])
        );
    }

    #[test]
    fn cache_supports_repeated_traversal() {
        let a = seq(&[(1, 2), (5, 6)]);
        let mut c = cache(a.iter());
        let first: Vec<Range> = c.by_ref().collect();
        c.reset();
        let second: Vec<Range> = c.collect();
        assert_eq!(first, second);
        assert_eq!(RangeSeq::from_sorted(first), a);
    }

    #[test]
    fn minus_is_an_involution() {
        for bits in 0u32..512 {
            let d = RangeSeq::from_values((0..9).filter(|i| bits >> i & 1 == 1).map(|i| i - 4));
            assert_eq!(collect_seq(minus(minus(d.iter()))), d);
        }
    }

    #[test]
    fn combinators_match_explicit_sets() {
        // all pairs of canonical sequences drawn from a 7-value window,
        // checked against BTreeSet semantics; the full [-8,8] sweep runs
        // in the acceptance suite
        let doms: Vec<RangeSeq> = (0u32..128)
            .map(|bits| {
                RangeSeq::from_values((0..7).filter(|i| bits >> i & 1 == 1).map(|i| i - 3))
            })
            .collect();
        let set = |d: &RangeSeq| d.values().collect::<BTreeSet<Val>>();
        for a in &doms {
            for b in &doms {
                let (sa, sb) = (set(a), set(b));
                assert_eq!(
                    set(&collect_seq(inter(a.iter(), b.iter()))),
                    sa.intersection(&sb).copied().collect()
                );
                assert_eq!(
                    set(&collect_seq(union(a.iter(), b.iter()))),
                    sa.union(&sb).copied().collect()
                );
                assert_eq!(
                    set(&collect_seq(diff(a.iter(), b.iter()))),
                    sa.difference(&sb).copied().collect()
                );
            }
            let sa = set(a);
            assert_eq!(
                set(&collect_seq(compl(a.iter(), Range::new(-3, 3)))),
                (-3..=3).filter(|v| !sa.contains(v)).collect()
            );
            assert_eq!(
                set(&collect_seq(offset(a.iter(), 5))),
                sa.iter().map(|v| v + 5).collect()
            );
            assert_eq!(
                set(&collect_seq(minus(a.iter()))),
                sa.iter().map(|v| -v).collect()
            );
            for c in [1, 2, 3] {
                assert_eq!(
                    set(&collect_seq(scale_up(a.iter(), c))),
                    sa.iter().map(|v| v * c).collect()
                );
                assert_eq!(
                    set(&collect_seq(scale_down(a.iter(), c))),
                    (-3..=3).filter(|v| sa.contains(&(v * c))).collect()
                );
            }
        }
    }
}
