//! Executable theorem checking: runs each catalog derivation through the
//! engine over enumerated domains and compares against the explicit-set
//! reference semantics.
//!
//! For every catalog case the derived propagator runs on base domains and
//! the plain core runs on the corresponding apparent domains; the claims
//! verified here relate the two runs and the extensional induced
//! constraint.

use std::collections::BTreeSet;

use crate::engine::{Space, SpaceStatus};
use crate::kernel::{RangeSeq, Val, VarId};
use crate::var::{BoolDom, VarDom};
use crate::view::ViewSpec;

use super::cases::{DeclaredLevel, OracleCase};
use super::explicit::{
    complete_propagator, conc_tuples, CompletenessLevel, GVal, ODom, OKind, XConstraint,
};
use super::spec_apply;

/// Variable representation used when materializing an explicit domain in
/// the engine.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VK {
    Int,
    Bool,
    Set,
}

fn vk_of(kind: &OKind) -> VK {
    match kind {
        OKind::Int(..) => VK::Int,
        OKind::Bool => VK::Bool,
        OKind::Set(..) => VK::Set,
    }
}

/// Representation of the apparent variable a spec presents, given the
/// base variable's representation (`None` for constants).
fn apparent_vk(spec: &ViewSpec, base: Option<VK>) -> VK {
    match spec {
        ViewSpec::Identity => base.expect("identity view needs a base"),
        ViewSpec::Offset(_)
        | ViewSpec::Minus
        | ViewSpec::Scale(_)
        | ViewSpec::Constant(_)
        | ViewSpec::IntOfBool => VK::Int,
        ViewSpec::BoolNeg => VK::Bool,
        ViewSpec::SingletonSet | ViewSpec::SetComplement(_) | ViewSpec::ConstSet(_) => VK::Set,
        ViewSpec::Compose(outer, inner) => {
            let iv = apparent_vk(inner, base);
            apparent_vk(outer, Some(iv))
        }
    }
}

/// Final state of a single posted propagator after propagation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Failed,
    Subsumed,
    Active,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub outcome: Outcome,
    /// Resulting domains; empty when the run failed.
    pub doms: Vec<ODom>,
}

impl RunResult {
    fn failed() -> RunResult {
        RunResult {
            outcome: Outcome::Failed,
            doms: Vec::new(),
        }
    }
}

fn seq_of(s: &BTreeSet<Val>) -> RangeSeq {
    RangeSeq::from_values(s.iter().copied())
}

fn mk_var(sp: &mut Space, vk: VK, d: &ODom) -> VarId {
    match (vk, d) {
        (VK::Int, ODom::Int(s)) => sp.new_int_var_seq(seq_of(s)),
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
        (VK::Set, ODom::SetIv { glb, lub }) => sp.new_set_var_bounds(seq_of(glb), seq_of(lub)),
        _ => panic!("domain kind does not match variable kind"),
    }
}

fn read_dom(sp: &Space, x: VarId) -> ODom {
    match sp.store.dom(x) {
        VarDom::Int(d) => ODom::Int(d.values().collect()),
        VarDom::Bool(b) => ODom::Int(match b {
            BoolDom::Zero => [0].into_iter().collect(),
            BoolDom::One => [1].into_iter().collect(),
            BoolDom::Both => [0, 1].into_iter().collect(),
        }),
        VarDom::Set(sd) => ODom::SetIv {
            glb: sd.glb.values().collect(),
            lub: sd.lub.values().collect(),
        },
    }
}

/// Materializes `doms`, posts one propagator, runs to fixpoint and reads
/// the result back.
pub fn run_prop(
    vks: &[VK],
    doms: &[ODom],
    post: impl FnOnce(&mut Space, &[VarId]),
) -> RunResult {
    let mut sp = Space::new();
    let vars: Vec<VarId> = vks
        .iter()
        .zip(doms)
        .map(|(vk, d)| mk_var(&mut sp, *vk, d))
        .collect();
    post(&mut sp, &vars);
    if sp.fixpoint() == SpaceStatus::Failed {
        return RunResult::failed();
    }
    let outcome = if sp.active_propagators() == 0 {
        Outcome::Subsumed
    } else {
        Outcome::Active
    };
    RunResult {
        outcome,
        doms: vars.iter().map(|&x| read_dom(&sp, x)).collect(),
    }
}

pub fn base_vks(case: &OracleCase) -> Vec<VK> {
    case.kinds.iter().map(vk_of).collect()
}

/// Runs the view-derived propagator on base domains.
pub fn run_derived(case: &OracleCase, doms: &[ODom]) -> RunResult {
    run_prop(&base_vks(case), doms, case.post_derived)
}

fn const_dom(spec: &ViewSpec) -> ODom {
    match spec {
        ViewSpec::Constant(k) => ODom::Int([*k].into_iter().collect()),
        ViewSpec::ConstSet(s) => {
            let vals: BTreeSet<Val> = s.values().collect();
            ODom::SetIv {
                glb: vals.clone(),
                lub: vals,
            }
        }
        _ => panic!("not a constant spec"),
    }
}

/// Per apparent position, the representation of the apparent variable.
pub fn apparent_vks(case: &OracleCase) -> Vec<VK> {
    let base = base_vks(case);
    let mut bi = 0;
    case.specs
        .iter()
        .map(|spec| {
            if spec.is_constant() {
                apparent_vk(spec, None)
            } else {
                let vk = apparent_vk(spec, Some(base[bi]));
                bi += 1;
                vk
            }
        })
        .collect()
}

/// The apparent domains `⌈φᵢ(dᵢ)⌉` induced by the base domains; constant
/// positions get fixed domains.
pub fn apparent_doms(case: &OracleCase, base: &[ODom]) -> Vec<ODom> {
    let avks = apparent_vks(case);
    let mut bi = 0;
    case.specs
        .iter()
        .zip(&avks)
        .map(|(spec, avk)| {
            if spec.is_constant() {
                return const_dom(spec);
            }
            let d = &base[bi];
            bi += 1;
            let imgs: Vec<GVal> = d
                .conc()
                .iter()
                .filter_map(|v| spec_apply::apply(spec, v))
                .collect();
            assert!(!imgs.is_empty(), "view not total on its base domain");
            ODom::ceil(*avk == VK::Set, imgs.iter())
        })
        .collect()
}

/// Runs the plain core on the apparent domains.
pub fn run_core(case: &OracleCase, base: &[ODom]) -> RunResult {
    run_prop(&apparent_vks(case), &apparent_doms(case, base), case.post_core)
}

/// Pulls a core run back through the views:
/// `dᵢ ∩ φᵢ⁻(core result at position i)` per base variable.
pub fn pullback(case: &OracleCase, base: &[ODom], core: &RunResult) -> RunResult {
    if core.outcome == Outcome::Failed {
        return RunResult::failed();
    }
    let mut bi = 0;
    let mut out = Vec::new();
    for (ai, spec) in case.specs.iter().enumerate() {
        if spec.is_constant() {
            continue;
        }
        let d = &base[bi];
        let kept: Vec<GVal> = d
            .conc()
            .into_iter()
            .filter(|v| {
                spec_apply::apply(spec, v)
                    .map(|w| core.doms[ai].contains(&w))
                    .unwrap_or(false)
            })
            .collect();
        if kept.is_empty() {
            return RunResult::failed();
        }
        out.push(ODom::ceil(case.kinds[bi].is_set(), kept.iter()));
        bi += 1;
    }
    RunResult {
        outcome: core.outcome,
        doms: out,
    }
}

/// Whether the base tuple satisfies the constraint the derivation
/// induces: the image tuple under the specs satisfies the core predicate.
pub fn satisfies(case: &OracleCase, t: &[GVal]) -> bool {
    let mut app = Vec::with_capacity(case.specs.len());
    let mut bi = 0;
    for spec in &case.specs {
        if spec.is_constant() {
            app.push(match const_dom(spec).conc().pop() {
                Some(v) => v,
                None => return false,
            });
            continue;
        }
        match spec_apply::apply(spec, &t[bi]) {
            Some(w) => app.push(w),
            None => return false,
        }
        bi += 1;
    }
    (case.core_pred)(&app)
}

/// The constraint induced on the base variables, per the reference
/// semantics: `φ⁻(c_core)` restricted to the base universes.
pub fn induced_constraint(case: &OracleCase) -> XConstraint {
    XConstraint::from_pred(&case.kinds, |t| satisfies(case, t))
}

/// The constraint the engine's derived propagator induces, computed by
/// running it on every ground tuple: `{a | p({a}) = {a}}`. Errors if a
/// surviving ground tuple was altered (a propagator-soundness bug).
pub fn engine_induced(case: &OracleCase) -> Result<XConstraint, String> {
    let mut tuples = BTreeSet::new();
    let tops: Vec<ODom> = case.kinds.iter().map(|k| k.top()).collect();
    for t in conc_tuples(&tops) {
        let doms: Vec<ODom> = case
            .kinds
            .iter()
            .zip(&t)
            .map(|(k, v)| ODom::ceil(k.is_set(), [v.clone()].iter()))
            .collect();
        let r = run_derived(case, &doms);
        if r.outcome == Outcome::Failed {
            continue;
        }
        if r.doms != doms {
            return Err(format!(
                "{}: ground tuple {:?} altered to {:?}",
                case.name, t, r.doms
            ));
        }
        tuples.insert(t);
    }
    Ok(XConstraint { tuples })
}

/// Calls `f` on domain tuples drawn from the full product of
/// representable domains: exhaustively when the product has at most `cap`
/// tuples, otherwise with a uniform stride.
pub fn for_each_dom_tuple(
    kinds: &[OKind],
    cap: usize,
    f: &mut dyn FnMut(&[ODom]) -> Result<(), String>,
) -> Result<(), String> {
    let per: Vec<Vec<ODom>> = kinds.iter().map(|k| k.all_doms()).collect();
    let total: usize = per.iter().map(|p| p.len()).product();
    let step = if total <= cap { 1 } else { total / cap + 1 };
    let mut tuple = vec![ODom::Int(BTreeSet::new()); kinds.len()];
    let mut idx = 0usize;
    while idx < total {
        let mut rest = idx;
        for (slot, options) in tuple.iter_mut().zip(&per) {
            *slot = options[rest % options.len()].clone();
            rest /= options.len();
        }
        f(&tuple)?;
        idx += step;
    }
    Ok(())
}

/// The theorem claims checkable per catalog case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Claim {
    /// No solution admitted by the domains is ever pruned.
    Correctness,
    /// The engine propagator induces exactly `φ⁻(c_core)`.
    Induced,
    /// The result domains are always subsets of the input domains.
    Contraction,
    /// The result is a fixpoint: re-running changes nothing.
    Fixpoint,
    /// Final status transfers between derived and core runs, and a
    /// subsumed propagator's remaining domains contain only solutions.
    Subsumption,
    /// The derived run equals the core run on apparent domains, pulled
    /// back through the views.
    Derivation,
    /// Smaller input domains never yield larger results.
    Monotonic,
    /// The declared completeness level holds.
    Completeness,
}

pub const CLAIMS: [Claim; 8] = [
    Claim::Correctness,
    Claim::Induced,
    Claim::Contraction,
    Claim::Fixpoint,
    Claim::Subsumption,
    Claim::Derivation,
    Claim::Monotonic,
    Claim::Completeness,
];

fn err(case: &OracleCase, claim: Claim, doms: &[ODom], msg: &str) -> String {
    format!("{} [{:?}] on {:?}: {}", case.name, claim, doms, msg)
}

fn has_singleton_set_spec(case: &OracleCase) -> bool {
    case.specs
        .iter()
        .any(|s| matches!(s, ViewSpec::SingletonSet))
}

/// Shrunken variants of a domain tuple (one variable shrunk at a time,
/// plus one tuple with every shrinkable variable shrunk).
fn shrinks(doms: &[ODom]) -> Vec<Vec<ODom>> {
    fn shrink_one(d: &ODom) -> Vec<ODom> {
        match d {
            ODom::Int(s) if s.len() > 1 => {
                let mut no_max = s.clone();
                no_max.pop_last();
                let mut no_min = s.clone();
                no_min.pop_first();
                let only_min: BTreeSet<Val> = [*s.first().unwrap()].into_iter().collect();
                vec![ODom::Int(no_max), ODom::Int(no_min), ODom::Int(only_min)]
            }
            ODom::SetIv { glb, lub } => {
                let free: Vec<Val> = lub.difference(glb).copied().collect();
                match (free.first(), free.last()) {
                    (Some(&lo), Some(&hi)) => {
                        let mut bigger_glb = glb.clone();
                        bigger_glb.insert(lo);
                        let mut smaller_lub = lub.clone();
                        smaller_lub.remove(&hi);
                        vec![
                            ODom::SetIv {
                                glb: bigger_glb,
                                lub: lub.clone(),
                            },
                            ODom::SetIv {
                                glb: glb.clone(),
                                lub: smaller_lub,
                            },
                        ]
                    }
                    _ => Vec::new(),
                }
            }
            _ => Vec::new(),
        }
    }
    let mut out = Vec::new();
    for (i, d) in doms.iter().enumerate() {
        for v in shrink_one(d) {
            let mut t = doms.to_vec();
            t[i] = v;
            out.push(t);
        }
    }
    let all: Vec<ODom> = doms
        .iter()
        .map(|d| shrink_one(d).into_iter().next().unwrap_or_else(|| d.clone()))
        .collect();
    if all != doms {
        out.push(all);
    }
    out
}

/// Rational-interval fixpoint for `Σ aᵢxᵢ = c` over the hulls of `doms`,
/// with inward rounding to integers. `None` means the intervals became
/// empty. This is the bounds(R) reference for the scaled linear case.
fn rational_linear_fixpoint(
    coeffs: &[Val],
    c: Val,
    doms: &[ODom],
) -> Option<Vec<(Val, Val)>> {
    let mut b: Vec<(i128, i128)> = doms
        .iter()
        .map(|d| match d.hull() {
            ODom::Int(s) => (*s.first().unwrap() as i128, *s.last().unwrap() as i128),
            ODom::SetIv { .. } => panic!("integer domain expected"),
        })
        .collect();
    loop {
        let mut changed = false;
        for i in 0..b.len() {
            let a = coeffs[i] as i128;
            let mut rest_lo = 0i128;
            let mut rest_hi = 0i128;
            for (j, &(lo, hi)) in b.iter().enumerate() {
                if j != i {
                    rest_lo += coeffs[j] as i128 * lo;
                    rest_hi += coeffs[j] as i128 * hi;
                }
            }
            // a·xᵢ ∈ [c - rest_hi, c - rest_lo]
            let lo = (c as i128 - rest_hi).div_euclid(a)
                + if (c as i128 - rest_hi).rem_euclid(a) != 0 { 1 } else { 0 };
            let hi = (c as i128 - rest_lo).div_euclid(a);
            if lo > b[i].0 {
                b[i].0 = lo;
                changed = true;
            }
            if hi < b[i].1 {
                b[i].1 = hi;
                changed = true;
            }
            if b[i].0 > b[i].1 {
                return None;
            }
        }
        if !changed {
            return Some(b.iter().map(|&(lo, hi)| (lo as Val, hi as Val)).collect());
        }
    }
}

/// Named coefficient data for bounds(R) cases; the catalog keeps the
/// propagator opaque, so the rational reference is attached here.
fn rational_coeffs(case: &OracleCase) -> Option<(Vec<Val>, Val)> {
    match case.name {
        "linear/scaled" => Some((vec![2, 2, 1], 4)),
        _ => None,
    }
}

/// Value-consistency reference for the alldiff-value cases: repeatedly
/// remove the values of assigned (apparent) positions from all other
/// positions.
fn value_prune_fixpoint(mut app: Vec<BTreeSet<Val>>) -> Option<Vec<BTreeSet<Val>>> {
    loop {
        let mut changed = false;
        for i in 0..app.len() {
            if app[i].len() != 1 {
                continue;
            }
            let v = *app[i].first().unwrap();
            for (j, other) in app.iter_mut().enumerate() {
                if j != i && other.remove(&v) {
                    changed = true;
                }
            }
        }
        if app.iter().any(|s| s.is_empty()) {
            return None;
        }
        if !changed {
            return Some(app);
        }
    }
}

fn int_set(d: &ODom) -> &BTreeSet<Val> {
    match d {
        ODom::Int(s) => s,
        ODom::SetIv { .. } => panic!("integer domain expected"),
    }
}

fn check_completeness(
    case: &OracleCase,
    induced: &XConstraint,
    doms: &[ODom],
    found_boundsz_gap: &mut bool,
) -> Result<(), String> {
    let r = run_derived(case, doms);
    match case.level {
        DeclaredLevel::Unclassified => Ok(()),
        DeclaredLevel::Domain => {
            let exp = complete_propagator(induced, &case.kinds, CompletenessLevel::Domain)(doms);
            if exp.iter().any(|d| d.is_empty()) {
                if r.outcome != Outcome::Failed {
                    return Err(err(case, Claim::Completeness, doms, "should have failed"));
                }
                return Ok(());
            }
            if r.outcome == Outcome::Failed || r.doms != exp {
                return Err(err(
                    case,
                    Claim::Completeness,
                    doms,
                    &format!("domain-complete result {:?}, got {:?}", exp, r),
                ));
            }
            Ok(())
        }
        DeclaredLevel::BoundsZ => {
            let exp = complete_propagator(induced, &case.kinds, CompletenessLevel::BoundsZ)(doms);
            if exp.iter().any(|d| d.is_empty()) {
                if r.outcome != Outcome::Failed {
                    return Err(err(case, Claim::Completeness, doms, "should have failed"));
                }
                return Ok(());
            }
            if r.outcome == Outcome::Failed {
                // failing early is stronger than the bound requires, and
                // correctness separately guarantees it is sound
                return Ok(());
            }
            for (got, want) in r.doms.iter().zip(&exp) {
                if !got.subsumes(want) {
                    return Err(err(
                        case,
                        Claim::Completeness,
                        doms,
                        &format!("result {:?} exceeds boundsZ bound {:?}", r.doms, exp),
                    ));
                }
            }
            Ok(())
        }
        DeclaredLevel::BoundsR => {
            let (coeffs, c) = rational_coeffs(case)
                .expect("bounds(R) case needs rational reference coefficients");
            let exp =
                complete_propagator(induced, &case.kinds, CompletenessLevel::BoundsZ)(doms);
            let z_empty = exp.iter().any(|d| d.is_empty());
            let z_ok = !z_empty
                && r.outcome != Outcome::Failed
                && r.doms.iter().zip(&exp).all(|(got, want)| got.subsumes(want));
            if (z_empty && r.outcome != Outcome::Failed) || (!z_empty && !z_ok) {
                *found_boundsz_gap = true;
            }
            match rational_linear_fixpoint(&coeffs, c, doms) {
                None => {
                    if r.outcome != Outcome::Failed {
                        return Err(err(
                            case,
                            Claim::Completeness,
                            doms,
                            "rational bounds empty but propagator did not fail",
                        ));
                    }
                    Ok(())
                }
                Some(boxes) => {
                    if r.outcome == Outcome::Failed {
                        return Ok(());
                    }
                    for (got, &(lo, hi)) in r.doms.iter().zip(&boxes) {
                        let s = int_set(got);
                        if *s.first().unwrap() < lo || *s.last().unwrap() > hi {
                            return Err(err(
                                case,
                                Claim::Completeness,
                                doms,
                                &format!("result {:?} exceeds boundsR box {:?}", r.doms, boxes),
                            ));
                        }
                    }
                    Ok(())
                }
            }
        }
        DeclaredLevel::ValueOnly => {
            let app = apparent_doms(case, doms);
            let exp = value_prune_fixpoint(app.iter().map(|d| int_set(d).clone()).collect());
            match exp {
                None => {
                    if r.outcome != Outcome::Failed {
                        return Err(err(case, Claim::Completeness, doms, "should have failed"));
                    }
                    Ok(())
                }
                Some(exp) => {
                    if r.outcome == Outcome::Failed {
                        return Err(err(case, Claim::Completeness, doms, "failed unexpectedly"));
                    }
                    let got = apparent_doms(case, &r.doms);
                    let got: Vec<&BTreeSet<Val>> = got.iter().map(int_set).collect();
                    if got.iter().zip(&exp).any(|(g, e)| **g != *e) {
                        return Err(err(
                            case,
                            Claim::Completeness,
                            doms,
                            &format!("value-consistent result {:?}, got {:?}", exp, got),
                        ));
                    }
                    Ok(())
                }
            }
        }
    }
}

/// Exhaustively (up to `cap` sampled domain tuples) verifies one claim
/// for one catalog case. Returns the first counterexample as an error
/// string.
pub fn check_theorem(case: &OracleCase, claim: Claim, cap: usize) -> Result<(), String> {
    let induced = induced_constraint(case);
    match claim {
        Claim::Induced => {
            let got = engine_induced(case)?;
            if got != induced {
                let missing: Vec<_> = induced.tuples.difference(&got.tuples).take(3).collect();
                let extra: Vec<_> = got.tuples.difference(&induced.tuples).take(3).collect();
                return Err(format!(
                    "{} [Induced]: missing {:?}, extra {:?}",
                    case.name, missing, extra
                ));
            }
            Ok(())
        }
        Claim::Correctness => for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
            let r = run_derived(case, doms);
            let sols = induced.intersect(doms);
            if r.outcome == Outcome::Failed {
                if !sols.is_empty() {
                    return Err(err(case, claim, doms, "failed with solutions remaining"));
                }
                return Ok(());
            }
            for t in &sols {
                if t.iter().zip(&r.doms).any(|(v, d)| !d.contains(v)) {
                    return Err(err(case, claim, doms, &format!("solution {:?} pruned", t)));
                }
            }
            Ok(())
        }),
        Claim::Contraction => for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
            let r = run_derived(case, doms);
            if r.outcome == Outcome::Failed {
                return Ok(());
            }
            for (got, before) in r.doms.iter().zip(doms) {
                if !got.subsumes(before) {
                    return Err(err(case, claim, doms, &format!("grew to {:?}", r.doms)));
                }
            }
            Ok(())
        }),
        Claim::Fixpoint => for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
            let r = run_derived(case, doms);
            if r.outcome == Outcome::Failed {
                return Ok(());
            }
            let again = run_derived(case, &r.doms);
            if again.outcome == Outcome::Failed || again.doms != r.doms {
                return Err(err(
                    case,
                    claim,
                    doms,
                    &format!("result {:?} not a fixpoint: {:?}", r.doms, again),
                ));
            }
            Ok(())
        }),
        Claim::Subsumption => for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
            let r = run_derived(case, doms);
            let core = run_core(case, doms);
            if has_singleton_set_spec(case) {
                // ⌈φ(d)⌉ loses the singleton-cardinality information, so
                // only failure transfers from the core run
                if core.outcome == Outcome::Failed && r.outcome != Outcome::Failed {
                    return Err(err(case, claim, doms, "core failed, derived did not"));
                }
            } else if core.outcome != r.outcome {
                return Err(err(
                    case,
                    claim,
                    doms,
                    &format!("derived {:?} vs core {:?}", r.outcome, core.outcome),
                ));
            }
            if r.outcome == Outcome::Subsumed {
                for t in conc_tuples(&r.doms) {
                    if !satisfies(case, &t) {
                        return Err(err(
                            case,
                            claim,
                            doms,
                            &format!("subsumed but {:?} is no solution", t),
                        ));
                    }
                }
            }
            Ok(())
        }),
        Claim::Derivation => for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
            let r = run_derived(case, doms);
            let pb = pullback(case, doms, &run_core(case, doms));
            if has_singleton_set_spec(case) {
                // derived may be strictly stronger (see Subsumption)
                if pb.outcome == Outcome::Failed && r.outcome != Outcome::Failed {
                    return Err(err(case, claim, doms, "pullback empty, derived survived"));
                }
                if r.outcome != Outcome::Failed {
                    for (got, bound) in r.doms.iter().zip(&pb.doms) {
                        if !got.subsumes(bound) {
                            return Err(err(
                                case,
                                claim,
                                doms,
                                &format!("derived {:?} exceeds pullback {:?}", r.doms, pb.doms),
                            ));
                        }
                    }
                }
                return Ok(());
            }
            match (r.outcome == Outcome::Failed, pb.outcome == Outcome::Failed) {
                (true, true) => Ok(()),
                (false, false) if r.doms == pb.doms => Ok(()),
                _ => Err(err(
                    case,
                    claim,
                    doms,
                    &format!("derived {:?} vs pullback {:?}", r, pb),
                )),
            }
        }),
        Claim::Monotonic => for_each_dom_tuple(&case.kinds, cap / 4 + 1, &mut |doms| {
            let r1 = run_derived(case, doms);
            for smaller in shrinks(doms) {
                let r2 = run_derived(case, &smaller);
                if r1.outcome == Outcome::Failed {
                    if r2.outcome != Outcome::Failed {
                        return Err(err(case, claim, doms, "larger input failed, smaller not"));
                    }
                    continue;
                }
                if r2.outcome == Outcome::Failed {
                    continue;
                }
                for (small, large) in r2.doms.iter().zip(&r1.doms) {
                    if !small.subsumes(large) {
                        return Err(err(
                            case,
                            claim,
                            doms,
                            &format!("shrunk {:?} gave larger {:?} vs {:?}", smaller, r2, r1),
                        ));
                    }
                }
            }
            Ok(())
        }),
        Claim::Completeness => {
            let mut found_gap = false;
            for_each_dom_tuple(&case.kinds, cap, &mut |doms| {
                check_completeness(case, &induced, doms, &mut found_gap)
            })?;
            if case.level == DeclaredLevel::BoundsR && !found_gap {
                return Err(format!(
                    "{} [Completeness]: no boundsZ counterexample found, \
                     bounds(R) classification unsupported",
                    case.name
                ));
            }
            Ok(())
        }
    }
}

/// All claims for one case.
pub fn check_case(case: &OracleCase, cap: usize) -> Result<(), String> {
    for claim in CLAIMS {
        check_theorem(case, claim, cap)?;
    }
    Ok(())
}
