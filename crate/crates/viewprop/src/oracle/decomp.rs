//! Decomposition of a view-derived propagator: one auxiliary variable
//! per apparent position, a domain-complete link propagator `x′ = φ(x)`
//! per viewed position, and the plain core posted on the auxiliaries.
//!
//! The resulting constraint graph is Berge-acyclic (each link shares
//! exactly one variable with the core and none with other links), so the
//! decomposition reaches the same fixpoints as the derived propagator —
//! it just spends more propagator invocations getting there.

use crate::engine::Space;
use crate::error::{Error, Result};
use crate::kernel::{RangeSeq, VarId};
use crate::prop::link::{
    LinkBoolEq, LinkBoolNeg, LinkInt, LinkIntOfBool, LinkSetComplement, LinkSetEq,
};
use crate::var::VarDom;
use crate::view::ViewSpec;

/// Innermost non-composed kind of a spec, for dispatching link
/// propagators; compositions of integer specs collapse to `LinkInt`.
fn is_int_spec(spec: &ViewSpec) -> bool {
    match spec {
        ViewSpec::Identity | ViewSpec::Offset(_) | ViewSpec::Minus | ViewSpec::Scale(_) => true,
        ViewSpec::Compose(outer, inner) => is_int_spec(outer) && is_int_spec(inner),
        _ => false,
    }
}

/// Adds, for one apparent position, the auxiliary variable and its link
/// propagator. `base` is `None` for constant specs, which become fixed
/// auxiliary variables without a link.
pub fn add_position(space: &mut Space, base: Option<VarId>, spec: &ViewSpec) -> Result<VarId> {
    match (base, spec) {
        (None, ViewSpec::Constant(k)) => Ok(space.new_int_var(*k, *k)),
        (None, ViewSpec::ConstSet(s)) => Ok(space.new_set_var_bounds(s.clone(), s.clone())),
        (Some(x), ViewSpec::Identity) => match space.store.dom(x).clone() {
            VarDom::Int(d) => {
                let aux = space.new_int_var_seq(d);
                space.post(LinkInt::boxed(x, aux, ViewSpec::Identity));
                Ok(aux)
            }
            VarDom::Bool(_) => {
                let aux = space.new_bool_var();
                space.post(LinkBoolEq::boxed(x, aux));
                Ok(aux)
            }
            VarDom::Set(sd) => {
                let aux = space.new_set_var_bounds(sd.glb, sd.lub);
                space.post(LinkSetEq::boxed(x, aux));
                Ok(aux)
            }
        },
        (Some(x), s) if is_int_spec(s) => {
            let dom = match space.store.dom(x) {
                VarDom::Int(d) => d.clone(),
                _ => return Err(Error::KindMismatch),
            };
            let mapped: Result<Vec<_>> = dom
                .values()
                .map(|v| s.apply_int(v).ok_or(Error::Overflow))
                .collect();
            let aux = space.new_int_var_seq(RangeSeq::from_values(mapped?));
            space.post(LinkInt::boxed(x, aux, s.clone()));
            Ok(aux)
        }
        (Some(x), ViewSpec::BoolNeg) => {
            let aux = space.new_bool_var();
            space.post(LinkBoolNeg::boxed(x, aux));
            Ok(aux)
        }
        (Some(x), ViewSpec::IntOfBool) => {
            let aux = space.new_int_var(0, 1);
            space.post(LinkIntOfBool::boxed(x, aux));
            Ok(aux)
        }
        (Some(x), ViewSpec::SetComplement(u)) => {
            let (glb, lub) = match space.store.dom(x) {
                VarDom::Set(sd) => {
                    let glb = crate::iter::collect_seq(crate::iter::compl(sd.lub.iter(), *u));
                    let lub = crate::iter::collect_seq(crate::iter::compl(sd.glb.iter(), *u));
                    (glb, lub)
                }
                _ => return Err(Error::KindMismatch),
            };
            let aux = space.new_set_var_bounds(glb, lub);
            space.post(LinkSetComplement::boxed(x, aux, *u));
            Ok(aux)
        }
        // singleton-set views relate an integer to a set variable with a
        // cardinality side condition no binary domain-complete link over
        // these representations can express; they stay view-only
        _ => Err(Error::KindMismatch),
    }
}

/// Builds the full decomposition of one derived propagator: auxiliary
/// variables for every apparent position (constants included), links,
/// and returns the auxiliary ids to post the core on.
pub fn build_decomposition(
    space: &mut Space,
    positions: &[(Option<VarId>, ViewSpec)],
) -> Result<Vec<VarId>> {
    positions
        .iter()
        .map(|(base, spec)| add_position(space, *base, spec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::cases::catalog;
    use super::super::theorems::{base_vks, for_each_dom_tuple, run_derived, run_prop, Outcome};
    use super::*;
    use crate::engine::SpaceStatus;
    use crate::view::ViewSpec as V;

    #[test]
    fn scale_decomposition_matches_derived_eq() {
        // x = 2y decomposed: aux y′, link y′ = 2y, core x = y′
        let case = catalog().into_iter().find(|c| c.name == "eq/scale2").unwrap();
        for_each_dom_tuple(&case.kinds, 3000, &mut |doms| {
            let derived = run_derived(&case, doms);
            let dec = run_prop(&base_vks(&case), doms, |sp, vars| {
                let aux =
                    build_decomposition(sp, &[(Some(vars[1]), V::Scale(2))]).unwrap();
                sp.post(crate::prop::eq::eq(vars[0], aux[0]));
            });
            match (derived.outcome == Outcome::Failed, dec.outcome == Outcome::Failed) {
                (true, true) => Ok(()),
                (false, false) if derived.doms == dec.doms => Ok(()),
                _ => Err(format!("mismatch on {:?}: {:?} vs {:?}", doms, derived, dec)),
            }
        })
        .unwrap();
    }

    #[test]
    fn identity_decomposition_is_equality_chain() {
        let mut sp = Space::new();
        let x = sp.new_int_var(1, 5);
        let aux = build_decomposition(&mut sp, &[(Some(x), V::Identity)]).unwrap();
        sp.store.int_adjmin(aux[0], 3);
        assert_eq!(sp.fixpoint(), SpaceStatus::Stable);
        assert_eq!(sp.store.int_min(x), 3);
    }

    #[test]
    fn singleton_set_views_are_not_decomposable() {
        let mut sp = Space::new();
        let e = sp.new_int_var(1, 3);
        assert!(build_decomposition(&mut sp, &[(Some(e), V::SingletonSet)]).is_err());
    }

    #[test]
    fn decomposition_fixpoints_match_derived_across_catalog() {
        for case in catalog() {
            if case
                .specs
                .iter()
                .any(|s| matches!(s, V::SingletonSet))
            {
                continue;
            }
            for_each_dom_tuple(&case.kinds, 400, &mut |doms| {
                let derived = run_derived(&case, doms);
                let dec = run_prop(&base_vks(&case), doms, |sp, vars| {
                    let mut bi = 0;
                    let positions: Vec<(Option<VarId>, ViewSpec)> = case
                        .specs
                        .iter()
                        .map(|spec| {
                            if spec.is_constant() {
                                (None, spec.clone())
                            } else {
                                let p = (Some(vars[bi]), spec.clone());
                                bi += 1;
                                p
                            }
                        })
                        .collect();
                    let aux = build_decomposition(sp, &positions).unwrap();
                    (case.post_core)(sp, &aux);
                });
                let ok = match (derived.outcome == Outcome::Failed, dec.outcome == Outcome::Failed)
                {
                    (true, true) => true,
                    (false, false) => derived.doms == dec.doms,
                    _ => false,
                };
                if !ok {
                    return Err(format!(
                        "{} decomposition mismatch on {:?}: {:?} vs {:?}",
                        case.name, doms, derived, dec
                    ));
                }
                Ok(())
            })
            .unwrap();
        }
    }

    #[test]
    fn decomposition_graph_is_berge_acyclic() {
        // each link shares exactly its auxiliary with the core and no
        // variable with any other link
        let mut sp = Space::new();
        let x = sp.new_int_var(1, 4);
        let y = sp.new_int_var(1, 4);
        let aux = build_decomposition(
            &mut sp,
            &[(Some(x), V::Offset(1)), (Some(y), V::Minus)],
        )
        .unwrap();
        assert_eq!(aux.len(), 2);
        let link0: Vec<VarId> = sp.subscriptions_of(0).into_iter().map(|(v, _)| v).collect();
        let link1: Vec<VarId> = sp.subscriptions_of(1).into_iter().map(|(v, _)| v).collect();
        assert!(link0.iter().all(|v| !link1.contains(v)));
        assert!(link0.contains(&aux[0]) && link1.contains(&aux[1]));
    }
}
