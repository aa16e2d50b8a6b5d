//! The oracle catalog: every (core, view-spec list) derivation under
//! test, with the extensional core predicate and posting functions for
//! both the derived propagator (on base variables) and the plain core
//! (on apparent variables).

use crate::engine::Space;
use crate::kernel::{Range, RangeSeq, VarId};
use crate::prop;
use crate::view::ViewSpec;

use super::explicit::{GVal, OKind};

/// Declared completeness level of the derived propagator on its base
/// variables. `ValueOnly` marks naive value consistency, `Unclassified`
/// propagators carry no completeness claim (only the structural
/// theorems).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DeclaredLevel {
    Domain,
    BoundsZ,
    BoundsR,
    ValueOnly,
    Unclassified,
}

pub struct OracleCase {
    pub name: &'static str,
    /// Base variable kinds, in scope order.
    pub kinds: Vec<OKind>,
    /// One spec per apparent (core) position; constants included.
    pub specs: Vec<ViewSpec>,
    /// Core constraint over apparent tuples.
    pub core_pred: fn(&[GVal]) -> bool,
    /// Posts the derived propagator on the base variables.
    pub post_derived: fn(&mut Space, &[VarId]),
    /// Posts the plain core on the apparent variables.
    pub post_core: fn(&mut Space, &[VarId]),
    pub level: DeclaredLevel,
}

fn pred_eq(t: &[GVal]) -> bool {
    t[0] == t[1]
}

fn pred_sum2_is_2(t: &[GVal]) -> bool {
    t[0].int() + t[1].int() == 2
}

fn pred_sum3_is_4(t: &[GVal]) -> bool {
    t.iter().map(GVal::int).sum::<i64>() == 4
}

fn pred_sum2_is_1(t: &[GVal]) -> bool {
    t[0].int() + t[1].int() == 1
}

fn pred_sum3_is_1(t: &[GVal]) -> bool {
    t.iter().map(GVal::int).sum::<i64>() == 1
}

fn pred_sum3_is_2(t: &[GVal]) -> bool {
    t.iter().map(GVal::int).sum::<i64>() == 2
}

fn pred_max2(t: &[GVal]) -> bool {
    t[0].int().max(t[1].int()) == t[2].int()
}

fn pred_distinct(t: &[GVal]) -> bool {
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] == t[j] {
                return false;
            }
        }
    }
    true
}

const ELEM_TABLE: [i64; 4] = [3, 5, 3, 7];

fn pred_element(t: &[GVal]) -> bool {
    let (i, r) = (t[0].int(), t[1].int());
    (0..ELEM_TABLE.len() as i64).contains(&i) && ELEM_TABLE[i as usize] == r
}

fn pred_any_true(t: &[GVal]) -> bool {
    t.iter().any(|v| v.int() == 1)
}

fn pred_card_geq2(t: &[GVal]) -> bool {
    t.iter().map(GVal::int).sum::<i64>() >= 2
}

fn pred_or_result(t: &[GVal]) -> bool {
    let n = t.len();
    let any = t[..n - 1].iter().any(|v| v.int() == 1);
    (t[n - 1].int() == 1) == any
}

fn pred_reified_sum_is_1(t: &[GVal]) -> bool {
    // apparent scope: (b, x₁, …)
    let sum: i64 = t[1..].iter().map(GVal::int).sum();
    (t[0].int() == 1) == (sum == 1)
}

fn pred_set_intersect(t: &[GVal]) -> bool {
    let inter: std::collections::BTreeSet<i64> =
        t[0].set().intersection(t[1].set()).copied().collect();
    inter == *t[2].set()
}

fn pred_set_subset(t: &[GVal]) -> bool {
    t[0].set().is_subset(t[1].set())
}

fn pred_card_is_1(t: &[GVal]) -> bool {
    t[0].set().len() == 1
}

pub fn catalog() -> Vec<OracleCase> {
    use DeclaredLevel::*;
    use ViewSpec as V;

    let int4 = OKind::Int(-4, 4);
    let int2 = OKind::Int(-2, 2);
    let set2 = OKind::Set(1, 2);
    let set3 = OKind::Set(1, 3);

    vec![
        OracleCase {
            name: "eq/identity",
            kinds: vec![int4, int4],
            specs: vec![V::Identity, V::Identity],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "eq/offset",
            kinds: vec![int4, int4],
            specs: vec![V::Identity, V::Offset(2)],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::eq_offset(v[0], v[1], 2));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "eq/minus",
            kinds: vec![int4, int4],
            specs: vec![V::Identity, V::Minus],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::eq_minus(v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "eq/scale2",
            kinds: vec![int4, int2],
            specs: vec![V::Identity, V::Scale(2)],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::eq_scale(v[0], 2, v[1]));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            // x = -(y) + 3, i.e. x + y = 3: composition depth two
            name: "eq/offset-of-minus",
            kinds: vec![int4, int4],
            specs: vec![V::Identity, V::compose(V::Offset(3), V::Minus)],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::plus_eq(v[0], v[1], 3));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "eq/constant",
            kinds: vec![int4],
            specs: vec![V::Identity, V::Constant(2)],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::eq_const(v[0], 2));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "eq/int-of-bool",
            kinds: vec![int2, OKind::Bool],
            specs: vec![V::Identity, V::IntOfBool],
            core_pred: pred_eq,
            post_derived: |s, v| {
                s.post(prop::eq::int_eq_bool(v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::eq::eq(v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "linear/units-n2",
            kinds: vec![int4, int4],
            specs: vec![V::Identity, V::Identity],
            core_pred: pred_sum2_is_2,
            post_derived: |s, v| {
                s.post(prop::linear::linear_eq(v, 2));
            },
            post_core: |s, v| {
                s.post(prop::linear::linear_eq(v, 2));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "linear/units-n3",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_sum3_is_1,
            post_derived: |s, v| {
                s.post(prop::linear::linear_eq(v, 1));
            },
            post_core: |s, v| {
                s.post(prop::linear::linear_eq(v, 1));
            },
            level: BoundsZ,
        },
        OracleCase {
            // x - y = 1 via a minus view on y
            name: "linear/signed",
            kinds: vec![int4, int4],
            specs: vec![V::Identity, V::Minus],
            core_pred: pred_sum2_is_1,
            post_derived: |s, v| {
                s.post(prop::linear::linear_eq_signed(&[v[0]], &[v[1]], 1));
            },
            post_core: |s, v| {
                s.post(prop::linear::linear_eq(v, 1));
            },
            level: BoundsZ,
        },
        OracleCase {
            // 2x + 2y + z = 4 via scale views; bounds(R) only — the even
            // scaled part cannot see parity restrictions on z's hull
            name: "linear/scaled",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Scale(2), V::Scale(2), V::Identity],
            core_pred: pred_sum3_is_4,
            post_derived: |s, v| {
                s.post(prop::linear::linear_eq_scaled(
                    &[(2, v[0]), (2, v[1]), (1, v[2])],
                    &[],
                    4,
                ));
            },
            post_core: |s, v| {
                s.post(prop::linear::linear_eq(v, 4));
            },
            level: BoundsR,
        },
        OracleCase {
            name: "linear/over-bools",
            kinds: vec![OKind::Bool, OKind::Bool, OKind::Bool],
            specs: vec![V::IntOfBool, V::IntOfBool, V::IntOfBool],
            core_pred: pred_sum3_is_2,
            post_derived: |s, v| {
                s.post(prop::linear::linear_eq_bools(v, 2));
            },
            post_core: |s, v| {
                s.post(prop::linear::linear_eq(v, 2));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "max2/identity",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_max2,
            post_derived: |s, v| {
                s.post(prop::max2::max2(v[0], v[1], v[2]));
            },
            post_core: |s, v| {
                s.post(prop::max2::max2(v[0], v[1], v[2]));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "max2/min-via-minus",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Minus, V::Minus, V::Minus],
            core_pred: pred_max2,
            post_derived: |s, v| {
                s.post(prop::max2::min2(v[0], v[1], v[2]));
            },
            post_core: |s, v| {
                s.post(prop::max2::max2(v[0], v[1], v[2]));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "maxn/identity",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_max2,
            post_derived: |s, v| {
                s.post(prop::max2::max_n(&v[..2], v[2]));
            },
            post_core: |s, v| {
                s.post(prop::max2::max_n(&v[..2], v[2]));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "maxn/min-via-minus",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Minus, V::Minus, V::Minus],
            core_pred: pred_max2,
            post_derived: |s, v| {
                s.post(prop::max2::min_n(&v[..2], v[2]));
            },
            post_core: |s, v| {
                s.post(prop::max2::max_n(&v[..2], v[2]));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "alldiff-value/identity",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_distinct,
            post_derived: |s, v| {
                s.post(prop::alldiff::alldiff_value(v));
            },
            post_core: |s, v| {
                s.post(prop::alldiff::alldiff_value(v));
            },
            level: ValueOnly,
        },
        OracleCase {
            name: "alldiff-value/offsets",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Offset(0), V::Offset(1), V::Offset(2)],
            core_pred: pred_distinct,
            post_derived: |s, v| {
                s.post(prop::alldiff::alldiff_value_offset(&[
                    (v[0], 0),
                    (v[1], 1),
                    (v[2], 2),
                ]));
            },
            post_core: |s, v| {
                s.post(prop::alldiff::alldiff_value(v));
            },
            level: ValueOnly,
        },
        OracleCase {
            name: "alldiff-bounds/identity",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_distinct,
            post_derived: |s, v| {
                s.post(prop::alldiff::alldiff_bounds(v));
            },
            post_core: |s, v| {
                s.post(prop::alldiff::alldiff_bounds(v));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "alldiff-bounds/offsets",
            kinds: vec![int2, int2, int2],
            specs: vec![V::Offset(0), V::Offset(1), V::Offset(2)],
            core_pred: pred_distinct,
            post_derived: |s, v| {
                s.post(prop::alldiff::alldiff_bounds_offset(&[
                    (v[0], 0),
                    (v[1], 1),
                    (v[2], 2),
                ]));
            },
            post_core: |s, v| {
                s.post(prop::alldiff::alldiff_bounds(v));
            },
            level: BoundsZ,
        },
        OracleCase {
            name: "element/identity",
            kinds: vec![OKind::Int(-1, 4), OKind::Int(2, 8)],
            specs: vec![V::Identity, V::Identity],
            core_pred: pred_element,
            post_derived: |s, v| {
                s.post(prop::element::element_const(ELEM_TABLE.to_vec(), v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::element::element_const(ELEM_TABLE.to_vec(), v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            // index base 1: apparent index is i - 1
            name: "element/offset-index",
            kinds: vec![OKind::Int(0, 5), OKind::Int(2, 8)],
            specs: vec![V::Offset(-1), V::Identity],
            core_pred: pred_element,
            post_derived: |s, v| {
                s.post(prop::element::element_const_based(
                    ELEM_TABLE.to_vec(),
                    v[0],
                    1,
                    v[1],
                ));
            },
            post_core: |s, v| {
                s.post(prop::element::element_const(ELEM_TABLE.to_vec(), v[0], v[1]));
            },
            level: Domain,
        },
        OracleCase {
            name: "clause/identity",
            kinds: vec![OKind::Bool, OKind::Bool, OKind::Bool],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_any_true,
            post_derived: |s, v| {
                s.post(prop::boolean::clause(v));
            },
            post_core: |s, v| {
                s.post(prop::boolean::clause(v));
            },
            level: Domain,
        },
        OracleCase {
            name: "clause/not-all-via-neg",
            kinds: vec![OKind::Bool, OKind::Bool, OKind::Bool],
            specs: vec![V::BoolNeg, V::BoolNeg, V::BoolNeg],
            core_pred: pred_any_true,
            post_derived: |s, v| {
                s.post(prop::boolean::not_all(v));
            },
            post_core: |s, v| {
                s.post(prop::boolean::clause(v));
            },
            level: Domain,
        },
        OracleCase {
            name: "card-geq/identity",
            kinds: vec![OKind::Bool; 4],
            specs: vec![V::Identity; 4],
            core_pred: pred_card_geq2,
            post_derived: |s, v| {
                s.post(prop::boolean::card_geq(v, 2));
            },
            post_core: |s, v| {
                s.post(prop::boolean::card_geq(v, 2));
            },
            level: Domain,
        },
        OracleCase {
            // Σx ≤ 2 over 4 Booleans as Σ¬x ≥ 2
            name: "card-leq/via-neg",
            kinds: vec![OKind::Bool; 4],
            specs: vec![V::BoolNeg; 4],
            core_pred: pred_card_geq2,
            post_derived: |s, v| {
                s.post(prop::boolean::card_leq(v, 2));
            },
            post_core: |s, v| {
                s.post(prop::boolean::card_geq(v, 2));
            },
            level: Domain,
        },
        OracleCase {
            name: "or-result/identity",
            kinds: vec![OKind::Bool; 4],
            specs: vec![V::Identity; 4],
            core_pred: pred_or_result,
            post_derived: |s, v| {
                s.post(prop::boolean::or_result(&v[..3], v[3]));
            },
            post_core: |s, v| {
                s.post(prop::boolean::or_result(&v[..3], v[3]));
            },
            level: Domain,
        },
        OracleCase {
            name: "and-result/via-neg",
            kinds: vec![OKind::Bool; 4],
            specs: vec![V::BoolNeg; 4],
            core_pred: pred_or_result,
            post_derived: |s, v| {
                s.post(prop::boolean::and_result(&v[..3], v[3]));
            },
            post_core: |s, v| {
                s.post(prop::boolean::or_result(&v[..3], v[3]));
            },
            level: Domain,
        },
        OracleCase {
            name: "reified-eq/identity",
            kinds: vec![OKind::Bool, int2, int2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_reified_sum_is_1,
            post_derived: |s, v| {
                s.post(prop::reified::reified_linear_eq(v[0], &v[1..], 1));
            },
            post_core: |s, v| {
                s.post(prop::reified::reified_linear_eq(v[0], &v[1..], 1));
            },
            level: Unclassified,
        },
        OracleCase {
            // b ⇔ Σ ≠ 1 via a negation view on b
            name: "reified-ne/via-neg",
            kinds: vec![OKind::Bool, int2, int2],
            specs: vec![V::BoolNeg, V::Identity, V::Identity],
            core_pred: pred_reified_sum_is_1,
            post_derived: |s, v| {
                s.post(prop::reified::reified_linear_ne(v[0], &v[1..], 1));
            },
            post_core: |s, v| {
                s.post(prop::reified::reified_linear_eq(v[0], &v[1..], 1));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-intersect/identity",
            kinds: vec![set2, set2, set2],
            specs: vec![V::Identity, V::Identity, V::Identity],
            core_pred: pred_set_intersect,
            post_derived: |s, v| {
                s.post(prop::set::set_intersect(v[0], v[1], v[2]));
            },
            post_core: |s, v| {
                s.post(prop::set::set_intersect(v[0], v[1], v[2]));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-union/via-complement",
            kinds: vec![set2, set2, set2],
            specs: vec![
                V::SetComplement(Range::new(1, 2)),
                V::SetComplement(Range::new(1, 2)),
                V::SetComplement(Range::new(1, 2)),
            ],
            core_pred: pred_set_intersect,
            post_derived: |s, v| {
                s.post(prop::set::set_union(v[0], v[1], v[2], Range::new(1, 2)));
            },
            post_core: |s, v| {
                s.post(prop::set::set_intersect(v[0], v[1], v[2]));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-difference/via-complement",
            kinds: vec![set2, set2, set2],
            specs: vec![
                V::Identity,
                V::SetComplement(Range::new(1, 2)),
                V::Identity,
            ],
            core_pred: pred_set_intersect,
            post_derived: |s, v| {
                s.post(prop::set::set_difference(v[0], v[1], v[2], Range::new(1, 2)));
            },
            post_core: |s, v| {
                s.post(prop::set::set_intersect(v[0], v[1], v[2]));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-disjoint/via-const-empty",
            kinds: vec![set2, set2],
            specs: vec![
                V::Identity,
                V::Identity,
                V::ConstSet(RangeSeq::empty()),
            ],
            core_pred: pred_set_intersect,
            post_derived: |s, v| {
                s.post(prop::set::set_disjoint(v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::set::set_intersect(v[0], v[1], v[2]));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-subset/identity",
            kinds: vec![set3, set3],
            specs: vec![V::Identity, V::Identity],
            core_pred: pred_set_subset,
            post_derived: |s, v| {
                s.post(prop::set::set_subset(v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::set::set_subset(v[0], v[1]));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-member/via-singleton",
            kinds: vec![OKind::Int(1, 3), set3],
            specs: vec![V::SingletonSet, V::Identity],
            core_pred: pred_set_subset,
            post_derived: |s, v| {
                s.post(prop::set::set_member(v[0], v[1]));
            },
            post_core: |s, v| {
                s.post(prop::set::set_subset(v[0], v[1]));
            },
            level: Unclassified,
        },
        OracleCase {
            name: "set-card/identity",
            kinds: vec![OKind::Set(1, 3)],
            specs: vec![V::Identity],
            core_pred: pred_card_is_1,
            post_derived: |s, v| {
                s.post(prop::set::set_card_range(v[0], 1, 1));
            },
            post_core: |s, v| {
                s.post(prop::set::set_card_range(v[0], 1, 1));
            },
            level: Unclassified,
        },
    ]
}
