//! The benchmark models: n-queens, a reduced alpha-style linear system,
//! Golomb rulers, BIBD(7,3,1) and Steiner triple systems.
//!
//! Each model builder posts the view-derived propagators in `views` mode
//! and the equivalent auxiliary-variable decomposition in `decomposed`
//! mode; everything else (variables, identity-view propagators, branching
//! order) is byte-for-byte identical so that paired runs compare only the
//! derivation strategy.

use viewprop::engine::Space;
use viewprop::kernel::{Range, RangeSeq, Val, VarId};
use viewprop::oracle::decomp::build_decomposition;
use viewprop::prop::alldiff::{alldiff_bounds, alldiff_bounds_offset, alldiff_value};
use viewprop::prop::boolean::{and_result, card_geq, card_leq, or_result};
use viewprop::prop::linear::{linear_eq, linear_eq_scaled, linear_eq_signed};
use viewprop::prop::set::{set_card_range, set_intersect, set_union};
use viewprop::view::ViewSpec;

/// Whether derived constraints are posted through views or decomposed
/// into auxiliary variables plus link propagators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Views,
    Decomposed,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "views" => Ok(Mode::Views),
            "decomposed" => Ok(Mode::Decomposed),
            other => Err(format!("unknown mode '{other}' (views|decomposed)")),
        }
    }
}

pub struct Model {
    pub space: Space,
    /// Variable to minimize, for models solved by branch and bound.
    pub objective: Option<VarId>,
}

/// Builds a zoo model. Errors on an unknown name or an unusable size.
pub fn build(name: &str, size: usize, mode: Mode) -> Result<Model, String> {
    match name {
        "queens" => queens(size, mode),
        "alpha" => alpha(mode),
        "golomb" => golomb(size, mode),
        "bibd" => bibd(size, mode),
        "steiner" => steiner(size, mode),
        other => Err(format!("unknown model '{other}'")),
    }
}

/// n-queens: one column variable per row, all-different on the columns
/// and on both diagonals. The diagonals are the plain bounds all-different
/// seen through offset views `qᵢ + i` and `qᵢ - i`.
pub fn queens(n: usize, mode: Mode) -> Result<Model, String> {
    if n < 1 {
        return Err("queens needs size >= 1".into());
    }
    let mut sp = Space::new();
    let q: Vec<VarId> = (0..n).map(|_| sp.new_int_var(0, n as Val - 1)).collect();
    sp.post(alldiff_bounds(&q));
    for sign in [1, -1] {
        let offs: Vec<(VarId, Val)> = q
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, sign * i as Val))
            .collect();
        match mode {
            Mode::Views => {
                sp.post(alldiff_bounds_offset(&offs));
            }
            Mode::Decomposed => {
                let positions: Vec<(Option<VarId>, ViewSpec)> = offs
                    .iter()
                    .map(|&(x, c)| (Some(x), ViewSpec::Offset(c)))
                    .collect();
                let aux = build_decomposition(&mut sp, &positions)
                    .map_err(|e| format!("decomposition failed: {e}"))?;
                sp.post(alldiff_bounds(&aux));
            }
        }
    }
    sp.decision_vars = q;
    Ok(Model { space: sp, objective: None })
}

/// Coefficiented equations of the reduced alpha-style model:
/// `Σ aᵢ·xᵢ = c` per row, over ten all-different letters in [1,10].
const ALPHA_EQS: [(&[(Val, usize)], Val); 5] = [
    (&[(1, 0), (2, 1), (3, 2)], 14),
    (&[(2, 3), (1, 4), (2, 5)], 25),
    (&[(3, 6), (1, 7), (1, 8)], 38),
    (&[(1, 9), (2, 0), (1, 3)], 16),
    (&[(2, 2), (3, 5), (1, 7)], 32),
];

/// Reduced alpha: ten letters, five linear equations with coefficients.
/// The coefficients enter through scale views (`views` mode) or as
/// auxiliary `x′ = a·x` variables (`decomposed` mode).
pub fn alpha(mode: Mode) -> Result<Model, String> {
    let mut sp = Space::new();
    let xs: Vec<VarId> = (0..10).map(|_| sp.new_int_var(1, 10)).collect();
    sp.post(alldiff_value(&xs));
    for (terms, c) in ALPHA_EQS {
        match mode {
            Mode::Views => {
                let pos: Vec<(Val, VarId)> = terms.iter().map(|&(a, i)| (a, xs[i])).collect();
                sp.post(linear_eq_scaled(&pos, &[], c));
            }
            Mode::Decomposed => {
                let positions: Vec<(Option<VarId>, ViewSpec)> = terms
                    .iter()
                    .map(|&(a, i)| (Some(xs[i]), ViewSpec::Scale(a)))
                    .collect();
                let aux = build_decomposition(&mut sp, &positions)
                    .map_err(|e| format!("decomposition failed: {e}"))?;
                sp.post(linear_eq(&aux, c));
            }
        }
    }
    sp.decision_vars = xs;
    Ok(Model { space: sp, objective: None })
}

fn tri(k: Val) -> Val {
    k * (k + 1) / 2
}

/// Golomb ruler with `n` marks: `m₀ = 0`, marks increasing, all pairwise
/// differences distinct, minimize the last mark. Each difference is tied
/// to its marks by `mⱼ - mᵢ - dᵢⱼ = 0`, whose minus signs are views.
pub fn golomb(n: usize, mode: Mode) -> Result<Model, String> {
    if n < 2 {
        return Err("golomb needs size >= 2".into());
    }
    let ub = (n * n) as Val;
    let mut sp = Space::new();
    let m: Vec<VarId> = (0..n)
        .map(|i| {
            if i == 0 {
                sp.new_int_var(0, 0)
            } else {
                // at least i distinct positive differences below mᵢ
                sp.new_int_var(tri(i as Val), ub)
            }
        })
        .collect();
    let mut diffs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // the difference spans j-i distinct positive gaps
            let d = sp.new_int_var(tri((j - i) as Val), ub);
            match mode {
                Mode::Views => {
                    sp.post(linear_eq_signed(&[m[j]], &[m[i], d], 0));
                }
                Mode::Decomposed => {
                    let positions = [
                        (Some(m[j]), ViewSpec::Identity),
                        (Some(m[i]), ViewSpec::Minus),
                        (Some(d), ViewSpec::Minus),
                    ];
                    let aux = build_decomposition(&mut sp, &positions)
                        .map_err(|e| format!("decomposition failed: {e}"))?;
                    sp.post(linear_eq(&aux, 0));
                }
            }
            diffs.push(((i, j), d));
        }
    }
    let ds: Vec<VarId> = diffs.iter().map(|&(_, d)| d).collect();
    sp.post(alldiff_bounds(&ds));
    // mirror symmetry: first gap no longer than the last gap,
    // d₀₁ + slack = d₍ₙ₋₂₎₍ₙ₋₁₎
    if n >= 3 {
        let first = diffs.iter().find(|&&((i, j), _)| (i, j) == (0, 1)).unwrap().1;
        let last = diffs
            .iter()
            .find(|&&((i, j), _)| (i, j) == (n - 2, n - 1))
            .unwrap()
            .1;
        let slack = sp.new_int_var(0, ub);
        match mode {
            Mode::Views => {
                sp.post(linear_eq_signed(&[last], &[first, slack], 0));
            }
            Mode::Decomposed => {
                let positions = [
                    (Some(last), ViewSpec::Identity),
                    (Some(first), ViewSpec::Minus),
                    (Some(slack), ViewSpec::Minus),
                ];
                let aux = build_decomposition(&mut sp, &positions)
                    .map_err(|e| format!("decomposition failed: {e}"))?;
                sp.post(linear_eq(&aux, 0));
            }
        }
    }
    let objective = *m.last().unwrap();
    sp.decision_vars = m;
    Ok(Model { space: sp, objective: Some(objective) })
}

/// BIBD(v, 3, 1) as a Boolean incidence matrix: every block has three
/// points, every point lies in (v-1)/2 blocks, every point pair shares
/// exactly one block. Conjunctions and the ≤-side of each cardinality are
/// negation-view derivations of the clause/cardinality cores.
pub fn bibd(v: usize, mode: Mode) -> Result<Model, String> {
    if v < 7 || v % 6 != 1 && v % 6 != 3 {
        return Err("bibd needs size ≡ 1 or 3 (mod 6), size >= 7".into());
    }
    let b = v * (v - 1) / 6;
    let r = (v - 1) / 2;
    let mut sp = Space::new();
    let x: Vec<Vec<VarId>> = (0..v)
        .map(|_| (0..b).map(|_| sp.new_bool_var()).collect())
        .collect();

    let exactly = |sp: &mut Space, vars: &[VarId], c: usize| -> Result<(), String> {
        sp.post(card_geq(vars, c));
        match mode {
            Mode::Views => {
                sp.post(card_leq(vars, c));
            }
            Mode::Decomposed => {
                let positions: Vec<(Option<VarId>, ViewSpec)> =
                    vars.iter().map(|&y| (Some(y), ViewSpec::BoolNeg)).collect();
                let aux = build_decomposition(sp, &positions)
                    .map_err(|e| format!("decomposition failed: {e}"))?;
                sp.post(card_geq(&aux, vars.len() - c));
            }
        }
        Ok(())
    };

    for blk in 0..b {
        let col: Vec<VarId> = x.iter().map(|row| row[blk]).collect();
        exactly(&mut sp, &col, 3)?;
    }
    for row in &x {
        exactly(&mut sp, row, r)?;
    }
    for p in 0..v {
        for q in p + 1..v {
            let mut meets = Vec::with_capacity(b);
            let pairs: Vec<(VarId, VarId)> =
                x[p].iter().copied().zip(x[q].iter().copied()).collect();
            for (xp, xq) in pairs {
                let y = sp.new_bool_var();
                match mode {
                    Mode::Views => {
                        sp.post(and_result(&[xp, xq], y));
                    }
                    Mode::Decomposed => {
                        let positions = [
                            (Some(xp), ViewSpec::BoolNeg),
                            (Some(xq), ViewSpec::BoolNeg),
                            (Some(y), ViewSpec::BoolNeg),
                        ];
                        let aux = build_decomposition(&mut sp, &positions)
                            .map_err(|e| format!("decomposition failed: {e}"))?;
                        sp.post(or_result(&aux[..2], aux[2]));
                    }
                }
                meets.push(y);
            }
            exactly(&mut sp, &meets, 1)?;
        }
    }
    // symmetry seed: the first block is {0, 1, 2}
    for (p, row) in x.iter().enumerate() {
        if p < 3 {
            sp.store.bool_one(row[0]);
        } else {
            sp.store.bool_zero(row[0]);
        }
    }
    sp.decision_vars = x.into_iter().flatten().collect();
    Ok(Model { space: sp, objective: None })
}

/// Membership seeds pinning block roles in the Steiner(7) model; the
/// acceptance oracle applies the same seeds, so counts stay comparable.
pub const STEINER7_SEEDS: [(usize, [Val; 2]); 7] = [
    (0, [1, 2]),
    (1, [1, 4]),
    (2, [1, 6]),
    (3, [2, 4]),
    (4, [2, 5]),
    (5, [3, 4]),
    (6, [3, 5]),
];

/// Steiner triple system on `n` points: `n(n-1)/6` blocks of cardinality
/// three, pairwise sharing at most one point. The pairwise condition is
/// `|bᵢ ∪ bⱼ| ≥ 5`, and the union is the intersection core through
/// complement views.
pub fn steiner(n: usize, mode: Mode) -> Result<Model, String> {
    if n < 3 || n % 6 != 1 && n % 6 != 3 {
        return Err("steiner needs size ≡ 1 or 3 (mod 6), size >= 3".into());
    }
    let b = n * (n - 1) / 6;
    let universe = Range::new(1, n as Val);
    let mut sp = Space::new();
    let blocks: Vec<VarId> = (0..b).map(|_| sp.new_set_var(universe)).collect();
    for &blk in &blocks {
        sp.post(set_card_range(blk, 3, 3));
    }
    for i in 0..b {
        for j in i + 1..b {
            let u = sp.new_set_var(universe);
            match mode {
                Mode::Views => {
                    sp.post(set_union(blocks[i], blocks[j], u, universe));
                }
                Mode::Decomposed => {
                    let positions = [
                        (Some(blocks[i]), ViewSpec::SetComplement(universe)),
                        (Some(blocks[j]), ViewSpec::SetComplement(universe)),
                        (Some(u), ViewSpec::SetComplement(universe)),
                    ];
                    let aux = build_decomposition(&mut sp, &positions)
                        .map_err(|e| format!("decomposition failed: {e}"))?;
                    sp.post(set_intersect(aux[0], aux[1], aux[2]));
                }
            }
            sp.post(set_card_range(u, 5, n as u64));
        }
    }
    if n == 7 {
        for (blk, pair) in STEINER7_SEEDS {
            sp.store
                .set_adjglb(blocks[blk], &RangeSeq::from_values(pair));
        }
    }
    sp.decision_vars = blocks;
    Ok(Model { space: sp, objective: None })
}
