//! Hull-property classification of integer view specs by exhaustive
//! enumeration.
//!
//! A view is hull-surjective when `φ(hull(d)) = hull(φ(d))` for every
//! domain `d`, and hull-injective when `φ⁻(hull(S)) = hull(φ⁻(S))` for
//! every set `S` of apparent values drawn from the image of the universe.
//! Hull-bijective views (both properties) transfer bounds(Z)
//! completeness from the core to the derived propagator.

use std::collections::BTreeSet;

use crate::kernel::Val;
use crate::view::ViewSpec;

use super::explicit::GVal;
use super::spec_apply;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HullProperty {
    pub injective: bool,
    pub surjective: bool,
}

impl HullProperty {
    pub fn bijective(self) -> bool {
        self.injective && self.surjective
    }
}

fn apply(spec: &ViewSpec, v: Val) -> Val {
    spec_apply::apply(spec, &GVal::Int(v))
        .expect("integer view not total on universe")
        .int()
}

fn hull(s: &BTreeSet<Val>) -> BTreeSet<Val> {
    match (s.first(), s.last()) {
        (Some(&lo), Some(&hi)) => (lo..=hi).collect(),
        _ => BTreeSet::new(),
    }
}

fn subsets(ground: &[Val]) -> impl Iterator<Item = BTreeSet<Val>> + '_ {
    (1u32..(1 << ground.len())).map(move |mask| {
        ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Decides both hull properties for an integer-valued spec by exhaustive
/// check over all nonempty subsets of `[lo, hi]`.
pub fn hull_property(spec: &ViewSpec, lo: Val, hi: Val) -> HullProperty {
    let universe: Vec<Val> = (lo..=hi).collect();
    let image: Vec<Val> = {
        let s: BTreeSet<Val> = universe.iter().map(|&v| apply(spec, v)).collect();
        s.into_iter().collect()
    };

    let surjective = subsets(&universe).all(|d| {
        let mapped_hull: BTreeSet<Val> = hull(&d).iter().map(|&v| apply(spec, v)).collect();
        let hull_mapped = hull(&d.iter().map(|&v| apply(spec, v)).collect::<BTreeSet<Val>>());
        mapped_hull == hull_mapped
    });

    // φ⁻(S) = {v ∈ universe | φ(v) ∈ S}; hull(S) taken over the integers
    let preimage = |s: &BTreeSet<Val>| -> BTreeSet<Val> {
        universe
            .iter()
            .copied()
            .filter(|&v| s.contains(&apply(spec, v)))
            .collect()
    };
    let injective = subsets(&image).all(|s| preimage(&hull(&s)) == hull(&preimage(&s)));

    HullProperty {
        injective,
        surjective,
    }
}
