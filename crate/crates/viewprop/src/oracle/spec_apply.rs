//! The runtime-composed value maps of [`ViewSpec`] on ground values —
//! the oracle's independent realization of `φ` and `φ⁻`.

use std::collections::BTreeSet;

use crate::kernel::Val;
use crate::view::ViewSpec;

use super::explicit::GVal;

/// Forward map `φ`. `None` when `v` is outside the map's domain (wrong
/// kind, overflow) — constants have no forward map and always yield
/// `None`.
pub fn apply(spec: &ViewSpec, v: &GVal) -> Option<GVal> {
    match (spec, v) {
        (ViewSpec::Identity, _) => Some(v.clone()),
        (ViewSpec::Offset(o), GVal::Int(x)) => x.checked_add(*o).map(GVal::Int),
        (ViewSpec::Minus, GVal::Int(x)) => x.checked_neg().map(GVal::Int),
        (ViewSpec::Scale(a), GVal::Int(x)) => x.checked_mul(*a).map(GVal::Int),
        (ViewSpec::BoolNeg, GVal::Int(x)) if *x == 0 || *x == 1 => Some(GVal::Int(1 - x)),
        (ViewSpec::IntOfBool, GVal::Int(x)) if *x == 0 || *x == 1 => Some(GVal::Int(*x)),
        (ViewSpec::SingletonSet, GVal::Int(x)) => {
            Some(GVal::Set([*x].into_iter().collect()))
        }
        (ViewSpec::SetComplement(u), GVal::Set(s)) => {
            let compl: BTreeSet<Val> = (u.lo..=u.hi).filter(|e| !s.contains(e)).collect();
            Some(GVal::Set(compl))
        }
        (ViewSpec::Compose(outer, inner), _) => {
            apply(inner, v).and_then(|w| apply(outer, &w))
        }
        _ => None,
    }
}

/// Inverse map `φ⁻`. `None` when `w` is outside the image of `φ`.
pub fn unapply(spec: &ViewSpec, w: &GVal) -> Option<GVal> {
    match (spec, w) {
        (ViewSpec::Identity, _) => Some(w.clone()),
        (ViewSpec::Offset(o), GVal::Int(x)) => x.checked_sub(*o).map(GVal::Int),
        (ViewSpec::Minus, GVal::Int(x)) => x.checked_neg().map(GVal::Int),
        (ViewSpec::Scale(a), GVal::Int(x)) => {
            if x % *a == 0 {
                Some(GVal::Int(x / *a))
            } else {
                None
            }
        }
        (ViewSpec::BoolNeg, GVal::Int(x)) if *x == 0 || *x == 1 => Some(GVal::Int(1 - x)),
        (ViewSpec::IntOfBool, GVal::Int(x)) if *x == 0 || *x == 1 => Some(GVal::Int(*x)),
        (ViewSpec::SingletonSet, GVal::Set(s)) => {
            if s.len() == 1 {
                Some(GVal::Int(*s.first().unwrap()))
            } else {
                None
            }
        }
        (ViewSpec::SetComplement(u), GVal::Set(s)) => {
            if s.iter().all(|e| u.contains(*e)) {
                let compl: BTreeSet<Val> = (u.lo..=u.hi).filter(|e| !s.contains(e)).collect();
                Some(GVal::Set(compl))
            } else {
                None
            }
        }
        (ViewSpec::Compose(outer, inner), _) => {
            unapply(outer, w).and_then(|u| unapply(inner, &u))
        }
        _ => None,
    }
}
