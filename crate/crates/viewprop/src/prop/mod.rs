//! The propagator catalog. Each core propagator is a struct generic over
//! view types; variants are derived by instantiating it with views
//! (offset, minus, scale, negation, complement, …) rather than writing
//! new propagation code.

pub mod alldiff;
pub mod boolean;
pub mod element;
pub mod eq;
pub mod linear;
pub mod link;
pub mod max2;
pub mod reified;
pub mod set;

use crate::kernel::VarId;
use crate::var::EventSet;
use crate::view::{BoolView, IntView, SetView};

/// Subscription of an integer view at event set `es`, resolved to the
/// base variable. Constant views produce no subscription.
pub(crate) fn sub_int<V: IntView>(v: &V, es: EventSet) -> Option<(VarId, EventSet)> {
    v.base().map(|x| (x, v.transform_events(es)))
}

pub(crate) fn sub_bool<B: BoolView>(v: &B, es: EventSet) -> Option<(VarId, EventSet)> {
    v.base().map(|x| (x, v.transform_events(es)))
}

pub(crate) fn sub_set<S: SetView>(v: &S, es: EventSet) -> Option<(VarId, EventSet)> {
    v.base().map(|x| (x, v.transform_events(es)))
}

#[cfg(test)]
mod tests {
    use crate::engine::{Space, SpaceStatus};
    use crate::kernel::{Range, RangeSeq, Val};
    use crate::var::BoolDom;

    use super::alldiff::{alldiff_bounds, alldiff_value, alldiff_value_offset};
    use super::boolean::{and_result, card_geq, card_leq, clause, not_all, or_result};
    use super::element::{element_const, element_const_based};
    use super::eq::{eq, eq_offset, eq_scale, int_eq_bool, plus_eq};
    use super::linear::{linear_eq, linear_eq_bools, linear_eq_scaled, linear_eq_signed};
    use super::max2::{max2, max_n, min2, min_n};
    use super::reified::{reified_linear_eq, reified_linear_ne};
    use super::set::{
        set_card_range, set_difference, set_disjoint, set_intersect, set_member, set_subset,
        set_union,
    };

    fn seq(ranges: &[(Val, Val)]) -> RangeSeq {
        RangeSeq::normalize(ranges.iter().map(|&(lo, hi)| Range::new(lo, hi)).collect())
    }

    #[test]
    fn eq_intersects_and_derives() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 5);
        let y = s.new_int_var(3, 8);
        s.post(eq(x, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(3, 5)]));
        assert_eq!(s.store.int_dom(y), &seq(&[(3, 5)]));
    }

    #[test]
    fn eq_scale_accepts_and_rejects_assignments() {
        // x = 2y: (x,y) = (2,1) accepted unchanged, (1,2) rejected
        let mut s = Space::new();
        let x = s.new_int_var(2, 2);
        let y = s.new_int_var(1, 1);
        s.post(eq_scale(x, 2, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(x), 2);

        let mut s = Space::new();
        let x = s.new_int_var(1, 1);
        let y = s.new_int_var(2, 2);
        s.post(eq_scale(x, 2, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Failed);
    }

    #[test]
    fn eq_offset_shifts() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 9);
        let y = s.new_int_var(1, 3);
        s.post(eq_offset(x, y, 2)); // x = y + 2
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(3, 5)]));
    }

    #[test]
    fn plus_eq_is_offset_of_minus() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 9);
        let y = s.new_int_var(1, 3);
        s.post(plus_eq(x, y, 4)); // x + y = 4
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(1, 3)]));
    }

    #[test]
    fn linear_units_example() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 4);
        let y = s.new_int_var(1, 4);
        s.post(linear_eq(&[x, y], 4));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(1, 3)]));
        assert_eq!(s.store.int_dom(y), &seq(&[(1, 3)]));
    }

    #[test]
    fn linear_singleton_assigns() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 9);
        s.post(linear_eq(&[x], 4));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(x), 4);
    }

    #[test]
    fn linear_scaled_example() {
        // 2x + y = 4 over [0,3]²: d(x) = [1,2], d(y) = [0,2]
        let mut s = Space::new();
        let x = s.new_int_var(0, 3);
        let y = s.new_int_var(0, 3);
        s.post(linear_eq_scaled(&[(2, x), (1, y)], &[], 4));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(1, 2)]));
        assert_eq!(s.store.int_dom(y), &seq(&[(0, 2)]));
    }

    #[test]
    fn linear_signed_difference() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 5);
        let y = s.new_int_var(0, 5);
        s.post(linear_eq_signed(&[x], &[y], 2)); // x - y = 2
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(x), &seq(&[(2, 5)]));
        assert_eq!(s.store.int_dom(y), &seq(&[(0, 3)]));
    }

    #[test]
    fn linear_over_bools() {
        // Σbᵢ = 2 over three Booleans, one already 0 → both others 1
        let mut s = Space::new();
        let a = s.new_bool_var();
        let b = s.new_bool_var();
        let c = s.new_bool_var();
        s.store.bool_zero(a);
        s.post(linear_eq_bools(&[a, b, c], 2));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(b), BoolDom::One);
        assert_eq!(s.store.bool_dom(c), BoolDom::One);
    }

    #[test]
    fn max2_and_derived_min2() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 2);
        let y = s.new_int_var(1, 3);
        let z = s.new_int_var(-5, 5);
        s.post(max2(x, y, z));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(z), &seq(&[(1, 3)]));

        let mut s = Space::new();
        let x = s.new_int_var(0, 2);
        let y = s.new_int_var(1, 3);
        let z = s.new_int_var(-5, 5);
        s.post(min2(x, y, z));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(z), &seq(&[(0, 2)]));
    }

    #[test]
    fn max2_fails_when_max_outside_z() {
        let mut s = Space::new();
        let x = s.new_int_var(5, 5);
        let y = s.new_int_var(1, 1);
        let z = s.new_int_var(0, 3);
        s.post(max2(x, y, z));
        assert_eq!(s.fixpoint(), SpaceStatus::Failed);
    }

    #[test]
    fn max_n_and_min_n() {
        let mut s = Space::new();
        let xs = [s.new_int_var(0, 2), s.new_int_var(1, 3), s.new_int_var(-2, 0)];
        let z = s.new_int_var(-9, 9);
        s.post(max_n(&xs, z));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(z), &seq(&[(1, 3)]));

        let mut s = Space::new();
        let xs = [s.new_int_var(0, 2), s.new_int_var(1, 3), s.new_int_var(-2, 0)];
        let z = s.new_int_var(-9, 9);
        s.post(min_n(&xs, z));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(z), &seq(&[(-2, 0)]));
    }

    #[test]
    fn alldiff_value_prunes_assigned() {
        let mut s = Space::new();
        let x = s.new_int_var(1, 1);
        let y = s.new_int_var(1, 2);
        s.post(alldiff_value(&[x, y]));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(y), 2);
    }

    #[test]
    fn alldiff_value_offset_example() {
        // offsets (0,1): x₁ = 1 forces x₂ + 1 ≠ 1, so x₂ = 1 from {0,1}
        let mut s = Space::new();
        let x1 = s.new_int_var(1, 1);
        let x2 = s.new_int_var(0, 1);
        s.post(alldiff_value_offset(&[(x1, 0), (x2, 1)]));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(x2), 1);
    }

    #[test]
    fn alldiff_bounds_hall_interval() {
        let mut s = Space::new();
        let x1 = s.new_int_var(1, 2);
        let x2 = s.new_int_var(1, 2);
        let x3 = s.new_int_var(1, 3);
        s.post(alldiff_bounds(&[x1, x2, x3]));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(x3), 3);
    }

    #[test]
    fn alldiff_bounds_pigeonhole_fails() {
        let mut s = Space::new();
        let xs = [s.new_int_var(1, 2), s.new_int_var(1, 2), s.new_int_var(1, 2)];
        s.post(alldiff_bounds(&xs));
        assert_eq!(s.fixpoint(), SpaceStatus::Failed);
    }

    #[test]
    fn element_example() {
        let mut s = Space::new();
        let i = s.new_int_var(0, 2);
        let r = s.new_int_var_seq(seq(&[(5, 5), (9, 9)]));
        s.post(element_const(vec![3, 5, 7], i, r));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(i), 1);
        assert_eq!(s.store.int_val(r), 5);
    }

    #[test]
    fn element_based_index() {
        // table indexed from base 1: r = table[i - 1]
        let mut s = Space::new();
        let i = s.new_int_var(1, 2);
        let r = s.new_int_var(0, 9);
        s.post(element_const_based(vec![3, 5], i, 1, r));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(r), &RangeSeq::from_values([3, 5]));
        s.store.int_assign(r, 5);
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(i), 2);
    }

    #[test]
    fn clause_unit_propagation_and_subsumption() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var(), s.new_bool_var()];
        s.store.bool_zero(xs[0]);
        s.store.bool_zero(xs[1]);
        s.post(clause(&xs));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(xs[2]), BoolDom::One);
        assert_eq!(s.active_propagators(), 0);
    }

    #[test]
    fn clause_fails_all_false() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var()];
        s.store.bool_zero(xs[0]);
        s.store.bool_zero(xs[1]);
        s.post(clause(&xs));
        assert_eq!(s.fixpoint(), SpaceStatus::Failed);
    }

    #[test]
    fn not_all_is_clause_over_negations() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var(), s.new_bool_var()];
        s.store.bool_one(xs[0]);
        s.store.bool_one(xs[1]);
        s.post(not_all(&xs));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(xs[2]), BoolDom::Zero);
    }

    #[test]
    fn card_geq_forces_remaining() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var(), s.new_bool_var()];
        s.store.bool_zero(xs[0]);
        s.post(card_geq(&xs, 2));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(xs[1]), BoolDom::One);
        assert_eq!(s.store.bool_dom(xs[2]), BoolDom::One);
    }

    #[test]
    fn card_geq_zero_is_immediately_subsumed() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var(), s.new_bool_var()];
        s.post(card_geq(&xs, 0));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.active_propagators(), 0);
    }

    #[test]
    fn card_leq_is_negated_card_geq() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var(), s.new_bool_var()];
        s.store.bool_one(xs[0]);
        s.post(card_leq(&xs, 1));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(xs[1]), BoolDom::Zero);
        assert_eq!(s.store.bool_dom(xs[2]), BoolDom::Zero);
    }

    #[test]
    fn or_and_result() {
        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var()];
        let y = s.new_bool_var();
        s.store.bool_zero(xs[0]);
        s.store.bool_zero(xs[1]);
        s.post(or_result(&xs, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(y), BoolDom::Zero);

        let mut s = Space::new();
        let xs = [s.new_bool_var(), s.new_bool_var()];
        let y = s.new_bool_var();
        s.store.bool_one(xs[0]);
        s.store.bool_one(xs[1]);
        s.post(and_result(&xs, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(y), BoolDom::One);
    }

    #[test]
    fn reified_eq_and_derived_ne() {
        // x = 3 entailed → b = 1; the ≠ derivation flips b
        let mut s = Space::new();
        let x = s.new_int_var(3, 3);
        let b = s.new_bool_var();
        s.post(reified_linear_eq(b, &[x], 3));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(b), BoolDom::One);

        let mut s = Space::new();
        let x = s.new_int_var(5, 7);
        let b = s.new_bool_var();
        s.post(reified_linear_eq(b, &[x], 3));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(b), BoolDom::Zero);

        let mut s = Space::new();
        let x = s.new_int_var(3, 3);
        let b = s.new_bool_var();
        s.post(reified_linear_ne(b, &[x], 3));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.bool_dom(b), BoolDom::Zero);
    }

    #[test]
    fn int_eq_bool_channels() {
        let mut s = Space::new();
        let x = s.new_int_var(0, 1);
        let b = s.new_bool_var();
        s.post(int_eq_bool(x, b));
        s.store.bool_one(b);
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_val(x), 1);
    }

    #[test]
    fn set_intersect_example() {
        // y and z fixed to {1}: 1 must enter glb(x)
        let mut s = Space::new();
        let x = s.new_set_var(Range::new(1, 2));
        let y = s.new_set_var_bounds(seq(&[(1, 1)]), seq(&[(1, 1)]));
        let z = s.new_set_var_bounds(seq(&[(1, 1)]), seq(&[(1, 1)]));
        s.post(set_intersect(x, y, z));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert!(s.store.set_dom(x).glb.contains(1));
    }

    #[test]
    fn set_union_via_complements() {
        let mut s = Space::new();
        let x = s.new_set_var_bounds(seq(&[(1, 1)]), seq(&[(1, 1)]));
        let y = s.new_set_var_bounds(seq(&[(2, 2)]), seq(&[(2, 2)]));
        let z = s.new_set_var(Range::new(1, 3));
        s.post(set_union(x, y, z, Range::new(1, 3)));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        let zd = s.store.set_dom(z);
        assert_eq!(zd.glb, seq(&[(1, 2)]));
        assert_eq!(zd.lub, seq(&[(1, 2)]));
    }

    #[test]
    fn set_difference_via_complement() {
        let mut s = Space::new();
        let x = s.new_set_var_bounds(seq(&[(1, 2)]), seq(&[(1, 2)]));
        let y = s.new_set_var_bounds(seq(&[(2, 2)]), seq(&[(2, 2)]));
        let z = s.new_set_var(Range::new(1, 3));
        s.post(set_difference(x, y, z, Range::new(1, 3)));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        let zd = s.store.set_dom(z);
        assert_eq!(zd.glb, seq(&[(1, 1)]));
        assert_eq!(zd.lub, seq(&[(1, 1)]));
    }

    #[test]
    fn set_disjoint_via_constant_empty() {
        let mut s = Space::new();
        let x = s.new_set_var_bounds(seq(&[(1, 1)]), seq(&[(1, 1)]));
        let y = s.new_set_var_bounds(seq(&[(1, 1)]), seq(&[(1, 2)]));
        s.post(set_disjoint(x, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Failed);
    }

    #[test]
    fn set_subset_and_membership() {
        let mut s = Space::new();
        let x = s.new_set_var_bounds(seq(&[(2, 2)]), seq(&[(1, 4)]));
        let y = s.new_set_var(Range::new(1, 3));
        s.post(set_subset(x, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert!(s.store.set_dom(y).glb.contains(2));
        assert_eq!(s.store.set_dom(x).lub, seq(&[(1, 3)]));

        // membership through a singleton view: d(e) = [1,4], lub(y) = {2,3}
        let mut s = Space::new();
        let e = s.new_int_var(1, 4);
        let y = s.new_set_var_bounds(RangeSeq::empty(), seq(&[(2, 3)]));
        s.post(set_member(e, y));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        assert_eq!(s.store.int_dom(e), &seq(&[(2, 3)]));
    }

    #[test]
    fn set_card_range_saturation() {
        let mut s = Space::new();
        let x = s.new_set_var_bounds(seq(&[(1, 2)]), seq(&[(1, 4)]));
        s.post(set_card_range(x, 0, 2));
        assert_eq!(s.fixpoint(), SpaceStatus::Stable);
        // |glb| already hits the maximum: x is fixed to its glb
        assert_eq!(s.store.set_dom(x).lub, seq(&[(1, 2)]));
    }
}
