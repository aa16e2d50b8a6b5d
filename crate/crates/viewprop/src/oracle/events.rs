//! Event-transformation soundness checks.
//!
//! The scenario: run a propagator to fixpoint, apply a single external
//! domain change, deliver events, and run to fixpoint again. If the
//! subscription (with its view-transformed event sets) is sound, the
//! resulting domains are again a fixpoint of the propagator — verified by
//! posting a fresh instance on the result and checking that nothing
//! moves. A masked subscription must make this check fail for at least
//! one scenario, proving the instrumentation actually detects missed
//! wakeups.

use crate::engine::{Space, SpaceStatus};
use crate::kernel::{RangeSeq, VarId};
use crate::var::{BoolDom, VarDom};

use super::cases::OracleCase;
use super::explicit::ODom;
use super::theorems::{base_vks, for_each_dom_tuple, run_prop, Outcome, RunResult};

/// All single-step strict domain contractions of `x` applicable in `sp`,
/// as closures over a clone of the space. Mutations that would fail the
/// store are skipped.
type Mutation = Box<dyn Fn(&mut Space)>;

fn mutations(sp: &Space, x: VarId) -> Vec<Mutation> {
    let mut out: Vec<Mutation> = Vec::new();
    match sp.store.dom(x) {
        VarDom::Int(d) => {
            if d.is_singleton() {
                return out;
            }
            let lo = d.min().unwrap();
            let hi = d.max().unwrap();
            out.push(Box::new(move |s| {
                s.store.int_exclude(x, lo);
            }));
            out.push(Box::new(move |s| {
                s.store.int_exclude(x, hi);
            }));
            if let Some(mid) = d.values().find(|&v| v != lo && v != hi) {
                out.push(Box::new(move |s| {
                    s.store.int_exclude(x, mid);
                }));
            }
            out.push(Box::new(move |s| {
                s.store.int_assign(x, lo);
            }));
            out.push(Box::new(move |s| {
                s.store.int_assign(x, hi);
            }));
        }
        VarDom::Bool(BoolDom::Both) => {
            out.push(Box::new(move |s| {
                s.store.bool_zero(x);
            }));
            out.push(Box::new(move |s| {
                s.store.bool_one(x);
            }));
        }
        VarDom::Bool(_) => {}
        VarDom::Set(sd) => {
            let free: Vec<_> = crate::iter::collect_seq(crate::iter::diff(
                sd.lub.iter(),
                sd.glb.iter(),
            ))
            .values()
            .collect();
            if let (Some(&lo), Some(&hi)) = (free.first(), free.last()) {
                let glb = sd.glb.clone();
                out.push(Box::new(move |s| {
                    let bigger = crate::iter::collect_seq(crate::iter::union(
                        glb.iter(),
                        RangeSeq::singleton(lo).iter(),
                    ));
                    s.store.set_adjglb(x, &bigger);
                }));
                let lub = sd.lub.clone();
                out.push(Box::new(move |s| {
                    let smaller = crate::iter::collect_seq(crate::iter::diff(
                        lub.iter(),
                        RangeSeq::singleton(hi).iter(),
                    ));
                    s.store.set_adjlub(x, &smaller);
                }));
            }
        }
    }
    out
}

fn read_doms(sp: &Space, vars: &[VarId]) -> Vec<ODom> {
    use crate::var::BoolDom as B;
    vars.iter()
        .map(|&x| match sp.store.dom(x) {
            VarDom::Int(d) => ODom::Int(d.values().collect()),
            VarDom::Bool(b) => ODom::Int(match b {
                B::Zero => [0].into_iter().collect(),
                B::One => [1].into_iter().collect(),
                B::Both => [0, 1].into_iter().collect(),
            }),
            VarDom::Set(sd) => ODom::SetIv {
                glb: sd.glb.values().collect(),
                lub: sd.lub.values().collect(),
            },
        })
        .collect()
}

/// Whether `doms` is a fixpoint of the case's derived propagator:
/// posting a fresh instance and propagating changes nothing.
fn is_stable(case: &OracleCase, doms: &[ODom]) -> bool {
    let r: RunResult = run_prop(&base_vks(case), doms, case.post_derived);
    r.outcome != Outcome::Failed && r.doms == doms
}

/// One mutation scenario: clone, optionally mask the subscription on
/// `masked`, mutate, re-run. Returns `Some(stable?)`, or `None` when the
/// scenario is uninformative (propagation failed).
fn scenario(
    case: &OracleCase,
    sp: &Space,
    vars: &[VarId],
    masked: Option<VarId>,
    mutate: &dyn Fn(&mut Space),
) -> Option<bool> {
    let mut s2 = sp.clone();
    if let Some(x) = masked {
        s2.mask_subscription(0, x);
    }
    mutate(&mut s2);
    if s2.store.failed() || s2.fixpoint() == SpaceStatus::Failed {
        return None;
    }
    Some(is_stable(case, &read_doms(&s2, vars)))
}

/// Prepares the starting space for one base-domain tuple: variables,
/// posted derived propagator, initial fixpoint. `None` when the
/// propagator failed or was subsumed (no wakeups left to miss).
fn prepared(case: &OracleCase, doms: &[ODom]) -> Option<(Space, Vec<VarId>)> {
    let mut sp = Space::new();
    let vars: Vec<VarId> = base_vks(case)
        .iter()
        .zip(doms)
        .map(|(vk, d)| {
            use super::theorems::VK;
            match (vk, d) {
                (VK::Int, ODom::Int(s)) => {
                    sp.new_int_var_seq(RangeSeq::from_values(s.iter().copied()))
                }
                (VK::Bool, ODom::Int(s)) => {
                    let v = sp.new_bool_var();
                    if !s.contains(&1) {
                        sp.store.bool_zero(v);
                    }
                    if !s.contains(&0) {
                        sp.store.bool_one(v);
                    }
                    v
                }
                (VK::Set, ODom::SetIv { glb, lub }) => sp.new_set_var_bounds(
                    RangeSeq::from_values(glb.iter().copied()),
                    RangeSeq::from_values(lub.iter().copied()),
                ),
                _ => unreachable!(),
            }
        })
        .collect();
    (case.post_derived)(&mut sp, &vars);
    if sp.fixpoint() == SpaceStatus::Failed || sp.active_propagators() == 0 {
        return None;
    }
    Some((sp, vars))
}

/// Unmasked soundness: over sampled starting domains and all single
/// mutations of every variable, no missed wakeup occurs.
pub fn check_events(case: &OracleCase, cap: usize) -> Result<(), String> {
    for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
        let Some((sp, vars)) = prepared(case, doms) else {
            return Ok(());
        };
        for &x in &vars {
            for m in mutations(&sp, x) {
                if scenario(case, &sp, &vars, None, m.as_ref()) == Some(false) {
                    return Err(format!(
                        "{}: missed wakeup after mutating {:?} on {:?}",
                        case.name, x, doms
                    ));
                }
            }
        }
        Ok(())
    })
}

/// Masked-subscription detection: for every variable the propagator
/// declares a subscription on, suppressing its wake deliveries must make
/// some scenario unstable — unless the propagator never survives its
/// first run (then no post-fixpoint wakeup can exist at all).
pub fn check_masked(case: &OracleCase, cap: usize) -> Result<(), String> {
    let declared: Vec<VarId> = {
        let mut sp = Space::new();
        let vars: Vec<VarId> = base_vks(case)
            .iter()
            .zip(case.kinds.iter().map(|k| k.top()))
            .map(|(vk, d)| {
                use super::theorems::VK;
                match (vk, &d) {
                    (VK::Int, ODom::Int(s)) => {
                        sp.new_int_var_seq(RangeSeq::from_values(s.iter().copied()))
                    }
                    (VK::Bool, _) => sp.new_bool_var(),
                    (VK::Set, ODom::SetIv { glb, lub }) => sp.new_set_var_bounds(
                        RangeSeq::from_values(glb.iter().copied()),
                        RangeSeq::from_values(lub.iter().copied()),
                    ),
                    _ => unreachable!(),
                }
            })
            .collect();
        (case.post_derived)(&mut sp, &vars);
        sp.subscriptions_of(0).into_iter().map(|(x, _)| x).collect()
    };
    for target in declared {
        let mut saw_active = false;
        let mut found_miss = false;
        for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
            if found_miss {
                return Ok(());
            }
            let Some((sp, vars)) = prepared(case, doms) else {
                return Ok(());
            };
            saw_active = true;
            for m in mutations(&sp, target) {
                if scenario(case, &sp, &vars, Some(target), m.as_ref()) == Some(false) {
                    found_miss = true;
                    return Ok(());
                }
            }
            Ok(())
        })?;
        if saw_active && !found_miss {
            return Err(format!(
                "{}: masking the subscription on {:?} was never detected",
                case.name, target
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::cases::catalog;
    use super::*;

    #[test]
    fn catalog_events_smoke() {
        for case in catalog() {
            if let Err(e) = check_events(&case, 150) {
                panic!("{e}");
            }
            if let Err(e) = check_masked(&case, 150) {
                panic!("{e}");
            }
        }
    }

    #[test]
    fn masked_watched_literal_is_detected() {
        let case = catalog()
            .into_iter()
            .find(|c| c.name == "clause/identity")
            .unwrap();
        assert_eq!(check_events(&case, 200), Ok(()));
        assert_eq!(check_masked(&case, 200), Ok(()));
    }
}
