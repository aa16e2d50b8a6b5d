//! Explicit-set reference semantics.
//!
//! Everything here works on plain `BTreeSet` values and shares no code
//! with the engine's range-sequence paths: it is the independent ground
//! truth the engine is checked against. Integer (and Boolean) domains are
//! explicit value sets; set-variable domains are intervals `[glb, lub]`
//! in the subset lattice, mirroring what the engine can represent.

use std::collections::BTreeSet;

use crate::kernel::Val;

/// A ground value: an integer (Booleans are 0/1) or a finite set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum GVal {
    Int(Val),
    Set(BTreeSet<Val>),
}

impl GVal {
    pub fn int(&self) -> Val {
        match self {
            GVal::Int(v) => *v,
            GVal::Set(_) => panic!("expected integer value"),
        }
    }

    pub fn set(&self) -> &BTreeSet<Val> {
        match self {
            GVal::Set(s) => s,
            GVal::Int(_) => panic!("expected set value"),
        }
    }
}

/// Ground type of a base or apparent variable: the finite universe a
/// domain lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OKind {
    /// Integer over `[lo, hi]`.
    Int(Val, Val),
    /// Boolean (integer over {0, 1}).
    Bool,
    /// Set over the ground range `[lo, hi]`.
    Set(Val, Val),
}

impl OKind {
    pub fn is_set(&self) -> bool {
        matches!(self, OKind::Set(..))
    }

    fn ground(&self) -> Vec<Val> {
        match *self {
            OKind::Int(lo, hi) => (lo..=hi).collect(),
            OKind::Bool => vec![0, 1],
            OKind::Set(lo, hi) => (lo..=hi).collect(),
        }
    }

    /// Every ground value of this kind.
    pub fn universe(&self) -> Vec<GVal> {
        match self {
            OKind::Int(..) | OKind::Bool => self.ground().into_iter().map(GVal::Int).collect(),
            OKind::Set(..) => subsets(&self.ground()).into_iter().map(GVal::Set).collect(),
        }
    }

    /// The unconstrained domain of this kind.
    pub fn top(&self) -> ODom {
        match self {
            OKind::Int(..) | OKind::Bool => ODom::Int(self.ground().into_iter().collect()),
            OKind::Set(..) => ODom::SetIv {
                glb: BTreeSet::new(),
                lub: self.ground().into_iter().collect(),
            },
        }
    }

    /// Every representable domain of this kind (nonempty for integers;
    /// `glb ⊆ lub` pairs for sets).
    pub fn all_doms(&self) -> Vec<ODom> {
        match self {
            OKind::Int(..) | OKind::Bool => {
                let g = self.ground();
                let mut out = Vec::new();
                for mask in 1u32..(1 << g.len()) {
                    out.push(ODom::Int(
                        g.iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, &v)| v)
                            .collect(),
                    ));
                }
                out
            }
            OKind::Set(..) => {
                let g = self.ground();
                // each ground element is out of lub, in lub only, or in glb
                let mut out = Vec::new();
                let n = g.len() as u32;
                for code in 0..3u32.pow(n) {
                    let mut glb = BTreeSet::new();
                    let mut lub = BTreeSet::new();
                    let mut c = code;
                    for &e in &g {
                        match c % 3 {
                            1 => {
                                lub.insert(e);
                            }
                            2 => {
                                glb.insert(e);
                                lub.insert(e);
                            }
                            _ => {}
                        }
                        c /= 3;
                    }
                    out.push(ODom::SetIv { glb, lub });
                }
                out
            }
        }
    }
}

fn subsets(ground: &[Val]) -> Vec<BTreeSet<Val>> {
    let mut out = Vec::with_capacity(1 << ground.len());
    for mask in 0u32..(1 << ground.len()) {
        out.push(
            ground
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    out
}

/// Explicit domain of one variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ODom {
    Int(BTreeSet<Val>),
    SetIv { glb: BTreeSet<Val>, lub: BTreeSet<Val> },
}

impl ODom {
    pub fn is_empty(&self) -> bool {
        match self {
            ODom::Int(s) => s.is_empty(),
            ODom::SetIv { glb, lub } => !glb.is_subset(lub),
        }
    }

    /// The concrete values this domain admits.
    pub fn conc(&self) -> Vec<GVal> {
        match self {
            ODom::Int(s) => s.iter().map(|&v| GVal::Int(v)).collect(),
            ODom::SetIv { glb, lub } => {
                if !glb.is_subset(lub) {
                    return Vec::new();
                }
                let free: Vec<Val> = lub.difference(glb).copied().collect();
                subsets(&free)
                    .into_iter()
                    .map(|extra| GVal::Set(glb.union(&extra).copied().collect()))
                    .collect()
            }
        }
    }

    pub fn contains(&self, v: &GVal) -> bool {
        match (self, v) {
            (ODom::Int(s), GVal::Int(x)) => s.contains(x),
            (ODom::SetIv { glb, lub }, GVal::Set(x)) => glb.is_subset(x) && x.is_subset(lub),
            _ => false,
        }
    }

    /// The smallest representable domain containing `values` — identity
    /// for integer domains, the bounds interval for set domains. An empty
    /// input yields an empty domain.
    pub fn ceil<'a>(is_set: bool, values: impl IntoIterator<Item = &'a GVal>) -> ODom {
        if !is_set {
            return ODom::Int(values.into_iter().map(|v| v.int()).collect());
        }
        let mut it = values.into_iter();
        match it.next() {
            None => ODom::SetIv {
                glb: [0].into_iter().collect(),
                lub: BTreeSet::new(),
            },
            Some(first) => {
                let mut glb = first.set().clone();
                let mut lub = first.set().clone();
                for v in it {
                    glb = glb.intersection(v.set()).copied().collect();
                    lub = lub.union(v.set()).copied().collect();
                }
                ODom::SetIv { glb, lub }
            }
        }
    }

    /// `self ⊆ other` pointwise on concrete values.
    pub fn subsumes(&self, weaker: &ODom) -> bool {
        self.conc().iter().all(|v| weaker.contains(v))
    }

    /// Integer hull: interval closure for integer domains; identity for
    /// set-interval domains (they are already convex).
    pub fn hull(&self) -> ODom {
        match self {
            ODom::Int(s) => match (s.first(), s.last()) {
                (Some(&lo), Some(&hi)) => ODom::Int((lo..=hi).collect()),
                _ => ODom::Int(BTreeSet::new()),
            },
            ODom::SetIv { .. } => self.clone(),
        }
    }
}

/// Cartesian product of the per-variable concrete values.
pub fn conc_tuples(doms: &[ODom]) -> Vec<Vec<GVal>> {
    let per: Vec<Vec<GVal>> = doms.iter().map(|d| d.conc()).collect();
    if per.iter().any(|p| p.is_empty()) {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for vals in &per {
        let mut next = Vec::with_capacity(out.len() * vals.len());
        for t in &out {
            for v in vals {
                let mut t2 = t.clone();
                t2.push(v.clone());
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Extensional constraint over ground values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XConstraint {
    pub tuples: BTreeSet<Vec<GVal>>,
}

impl XConstraint {
    pub fn from_pred(kinds: &[OKind], pred: impl Fn(&[GVal]) -> bool) -> XConstraint {
        let tops: Vec<ODom> = kinds.iter().map(|k| k.top()).collect();
        XConstraint {
            tuples: conc_tuples(&tops).into_iter().filter(|t| pred(t)).collect(),
        }
    }

    pub fn contains(&self, t: &[GVal]) -> bool {
        self.tuples.contains(t)
    }

    /// The tuples admitted by both the constraint and the domains.
    pub fn intersect(&self, doms: &[ODom]) -> Vec<Vec<GVal>> {
        self.tuples
            .iter()
            .filter(|t| t.iter().zip(doms).all(|(v, d)| d.contains(v)))
            .cloned()
            .collect()
    }
}

/// Completeness levels of the oracle's reference propagators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompletenessLevel {
    Domain,
    Range,
    BoundsD,
    BoundsZ,
}

/// Domain relaxation `⌈c⌉`: per variable, the values occurring in some
/// tuple. Set variables get their bounds interval.
pub fn dom_relax(c: &XConstraint, kinds: &[OKind]) -> Vec<ODom> {
    let tuples: Vec<&Vec<GVal>> = c.tuples.iter().collect();
    kinds
        .iter()
        .enumerate()
        .map(|(i, k)| ODom::ceil(k.is_set(), tuples.iter().map(|t| &t[i])))
        .collect()
}

/// The complete propagator at a given level: the function
/// `d ↦ ⌈c ∩ d⌉` (domain), `hull(⌈c ∩ d⌉)` (boundsD), `⌈c ∩ hull(d)⌉`
/// (range), `hull(⌈c ∩ hull(d)⌉)` (boundsZ). An empty result at any
/// variable means failure.
pub fn complete_propagator<'a>(
    c: &'a XConstraint,
    kinds: &[OKind],
    level: CompletenessLevel,
) -> impl Fn(&[ODom]) -> Vec<ODom> + 'a {
    let kinds = kinds.to_vec();
    move |doms: &[ODom]| {
        let input: Vec<ODom> = match level {
            CompletenessLevel::Domain | CompletenessLevel::BoundsD => doms.to_vec(),
            CompletenessLevel::Range | CompletenessLevel::BoundsZ => {
                doms.iter().map(|d| d.hull()).collect()
            }
        };
        let sols = c.intersect(&input);
        let relaxed: Vec<ODom> = kinds
            .iter()
            .enumerate()
            .map(|(i, k)| ODom::ceil(k.is_set(), sols.iter().map(|t| &t[i])))
            .collect();
        match level {
            CompletenessLevel::Domain | CompletenessLevel::Range => relaxed,
            CompletenessLevel::BoundsD | CompletenessLevel::BoundsZ => {
                relaxed.iter().map(|d| d.hull()).collect()
            }
        }
    }
}
