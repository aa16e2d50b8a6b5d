//! Acceptance gate: one test per acceptance criterion, each printing a
//! single `criterion N (<label>): pass` line on success. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use viewprop::iter;
use viewprop::kernel::{Range, RangeSeq, Val};
use viewprop::oracle::cases::DeclaredLevel;
use viewprop::oracle::events::{check_events, check_masked};
use viewprop::oracle::theorems::{for_each_dom_tuple, run_derived, Outcome};
use viewprop::oracle::{
    catalog, complete_propagator, differential_run, hull_property, induced_constraint,
    check_theorem, Claim, CompletenessLevel,
};
use viewprop::search::{branch_and_bound, dfs, BranchSpec};
use viewprop::view::ViewSpec;
use viewprop_cli::models::{self, Mode};

fn pass(n: u32, label: &str) {
    println!("criterion {n} ({label}): pass");
}

fn fail(n: u32, label: &str, why: &str) -> ! {
    println!("criterion {n} ({label}): fail — {why}");
    panic!("criterion {n} ({label}) failed: {why}");
}

/// Criterion 1: the structural theorem claims hold for every catalog
/// case over its full enumeration universe.
#[test]
fn criterion_1_theorem_suite() {
    const LABEL: &str = "theorem suite";
    // large enough that every catalog universe is enumerated exhaustively
    // (the largest, two ints over [-4,4], has 511² ≈ 261k tuples)
    const CAP: usize = 300_000;
    let claims = [
        Claim::Correctness,
        Claim::Induced,
        Claim::Contraction,
        Claim::Fixpoint,
        Claim::Subsumption,
    ];
    for case in catalog() {
        for claim in claims {
            if let Err(e) = check_theorem(&case, claim, CAP) {
                fail(1, LABEL, &e);
            }
        }
    }
    pass(1, LABEL);
}

/// Criterion 2: completeness transfers along hull-bijective views;
/// scaled linear equations drop to bounds(R), witnessed by a recorded
/// bounds(Z) counterexample.
#[test]
fn criterion_2_completeness_transfer() {
    const LABEL: &str = "completeness transfer";
    const CAP: usize = 300_000;
    for case in catalog() {
        if case.level == DeclaredLevel::Unclassified {
            continue;
        }
        if let Err(e) = check_theorem(&case, Claim::Completeness, CAP) {
            fail(2, LABEL, &e);
        }
    }
    // exhibit one concrete bounds(Z) counterexample of the scaled case
    let case = catalog()
        .into_iter()
        .find(|c| c.name == "linear/scaled")
        .expect("scaled linear case present");
    let induced = induced_constraint(&case);
    let complete = complete_propagator(&induced, &case.kinds, CompletenessLevel::BoundsZ);
    let mut witness: Option<String> = None;
    for_each_dom_tuple(&case.kinds, CAP, &mut |doms| {
        if witness.is_some() {
            return Ok(());
        }
        let exp = complete(doms);
        let r = run_derived(&case, doms);
        if r.outcome == Outcome::Failed {
            return Ok(());
        }
        // strictly weaker than the bounds(Z)-complete function
        let z_empty = exp.iter().any(|d| d.is_empty());
        if z_empty || !r.doms.iter().zip(&exp).all(|(got, want)| got.subsumes(want)) {
            witness = Some(format!(
                "input {:?}: propagator left {:?}, bounds(Z) requires {:?}",
                doms, r.doms, exp
            ));
        }
        Ok(())
    })
    .unwrap();
    match witness {
        Some(w) => println!("  bounds(Z) counterexample for 2x+2y+z=4: {w}"),
        None => fail(2, LABEL, "no bounds(Z) counterexample found for the scaled case"),
    }
    pass(2, LABEL);
}

/// Criterion 3: hull classification of the integer view specs.
#[test]
fn criterion_3_hull_classification() {
    const LABEL: &str = "hull classification";
    let expect = [
        (ViewSpec::Identity, true, true),
        (ViewSpec::Offset(3), true, true),
        (ViewSpec::Offset(-2), true, true),
        (ViewSpec::Minus, true, true),
        (ViewSpec::Scale(2), true, false),
        (ViewSpec::Scale(3), true, false),
    ];
    for (spec, inj, sur) in expect {
        let p = hull_property(&spec, -4, 4);
        if (p.injective, p.surjective) != (inj, sur) {
            fail(
                3,
                LABEL,
                &format!(
                    "{spec:?} classified injective={} surjective={}, expected ({inj},{sur})",
                    p.injective, p.surjective
                ),
            );
        }
    }
    pass(3, LABEL);
}

fn seq_from_mask(window: &[Val], mask: u32) -> RangeSeq {
    RangeSeq::from_values(
        window
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v),
    )
}

fn set_from_seq(r: &RangeSeq) -> BTreeSet<Val> {
    r.values().collect()
}

/// Checks every combinator on one pair against BTreeSet semantics.
fn check_pair(a: &RangeSeq, b: &RangeSeq, universe: Range) -> Result<(), String> {
    let sa = set_from_seq(a);
    let sb = set_from_seq(b);
    let err = |op: &str, got: &RangeSeq, want: &BTreeSet<Val>| {
        Err(format!("{op} on {a:?}, {b:?}: got {got:?}, want {want:?}"))
    };
    let got = iter::collect_seq(iter::inter(a.iter(), b.iter()));
    let want: BTreeSet<Val> = sa.intersection(&sb).copied().collect();
    if set_from_seq(&got) != want {
        return err("inter", &got, &want);
    }
    let got = iter::collect_seq(iter::union(a.iter(), b.iter()));
    let want: BTreeSet<Val> = sa.union(&sb).copied().collect();
    if set_from_seq(&got) != want {
        return err("union", &got, &want);
    }
    let got = iter::collect_seq(iter::diff(a.iter(), b.iter()));
    let want: BTreeSet<Val> = sa.difference(&sb).copied().collect();
    if set_from_seq(&got) != want {
        return err("diff", &got, &want);
    }
    // unary combinators on the first operand
    let got = iter::collect_seq(iter::compl(a.iter(), universe));
    let want: BTreeSet<Val> = (universe.lo..=universe.hi).filter(|v| !sa.contains(v)).collect();
    if set_from_seq(&got) != want {
        return err("compl", &got, &want);
    }
    let got = iter::collect_seq(iter::offset(a.iter(), 3));
    let want: BTreeSet<Val> = sa.iter().map(|v| v + 3).collect();
    if set_from_seq(&got) != want {
        return err("offset", &got, &want);
    }
    let got = iter::collect_seq(iter::minus(a.iter()));
    let want: BTreeSet<Val> = sa.iter().map(|v| -v).collect();
    if set_from_seq(&got) != want {
        return err("minus", &got, &want);
    }
    for s in [2, 3] {
        let got = iter::collect_seq(iter::scale_up(a.iter(), s));
        let want: BTreeSet<Val> = sa.iter().map(|v| v * s).collect();
        if set_from_seq(&got) != want {
            return err("scale_up", &got, &want);
        }
        let got = iter::collect_seq(iter::scale_down(a.iter(), s));
        let want: BTreeSet<Val> = sa
            .iter()
            .filter(|&&v| v.rem_euclid(s) == 0)
            .map(|&v| v / s)
            .collect();
        if set_from_seq(&got) != want {
            return err("scale_down", &got, &want);
        }
    }
    Ok(())
}

/// Criterion 4: range-iterator combinators agree with explicit-set
/// semantics, and the algebraic view laws hold universally.
#[test]
fn criterion_4_iterator_laws() {
    const LABEL: &str = "iterator laws";
    // exhaustive over every pair of canonical sequences in a window small
    // enough to enumerate all pairs; the full [-8,8] window is covered by
    // the universal unary laws below plus a seeded random pair sample
    let small: Vec<Val> = (-4..=4).collect();
    let small_u = Range::new(-4, 4);
    let seqs: Vec<RangeSeq> = (0u32..1 << small.len())
        .map(|m| seq_from_mask(&small, m))
        .collect();
    for a in &seqs {
        for b in &seqs {
            if let Err(e) = check_pair(a, b, small_u) {
                fail(4, LABEL, &e);
            }
        }
    }
    // seeded random pairs across the full window
    let wide: Vec<Val> = (-8..=8).collect();
    let wide_u = Range::new(-8, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20_000 {
        let a = seq_from_mask(&wide, rng.gen_range(0..1u32 << 17));
        let b = seq_from_mask(&wide, rng.gen_range(0..1u32 << 17));
        if let Err(e) = check_pair(&a, &b, wide_u) {
            fail(4, LABEL, &e);
        }
    }
    // universal unary laws over every canonical sequence in [-8,8]:
    // minus is an involution, scale_down is a section of scale_up
    for m in 0u32..1 << 17 {
        let r = seq_from_mask(&wide, m);
        let back = iter::collect_seq(iter::minus(iter::minus(r.iter())));
        if back != r {
            fail(4, LABEL, &format!("minus∘minus changed {r:?} to {back:?}"));
        }
        for a in [1, 2, 3] {
            let up = iter::collect_seq(iter::scale_up(r.iter(), a));
            let down = iter::collect_seq(iter::scale_down(up.iter(), a));
            if down != r {
                fail(
                    4,
                    LABEL,
                    &format!("scale_down(scale_up({r:?},{a}),{a}) = {down:?}"),
                );
            }
        }
    }
    pass(4, LABEL);
}

/// Criterion 5: view-derived and decomposed models are search-equivalent
/// and the decomposition propagates strictly more.
#[test]
fn criterion_5_decomposition_equivalence() {
    const LABEL: &str = "decomposition equivalence";
    let branch = BranchSpec::default();
    let mut alpha_ratio = 0.0;
    for (name, size) in [("queens", 6), ("alpha", 10), ("steiner", 7)] {
        let v = models::build(name, size, Mode::Views).unwrap();
        let d = models::build(name, size, Mode::Decomposed).unwrap();
        let report = differential_run(v.space, d.space, branch, None);
        if !report.solutions_match {
            fail(5, LABEL, &format!("{name}: solution sets differ"));
        }
        if !report.failures_match {
            fail(
                5,
                LABEL,
                &format!(
                    "{name}: failure counts differ ({} vs {})",
                    report.views.failures, report.decomposed.failures
                ),
            );
        }
        if name == "alpha" {
            alpha_ratio = report.propagation_ratio();
        }
        println!(
            "  {name}({size}): {} solutions, {} failures, propagation ratio {:.2}",
            report.views.solutions,
            report.views.failures,
            report.propagation_ratio()
        );
    }
    if alpha_ratio <= 1.0 {
        fail(
            5,
            LABEL,
            &format!("alpha propagation ratio {alpha_ratio:.3} not above 1.0"),
        );
    }
    pass(5, LABEL);
}

/// Brute-force n-queens by permutation enumeration.
fn queens_by_permutations(n: usize) -> u64 {
    fn rec(n: usize, row: usize, used: &mut Vec<bool>, cols: &mut Vec<usize>) -> u64 {
        if row == n {
            return 1;
        }
        let mut count = 0;
        for c in 0..n {
            if used[c] {
                continue;
            }
            if cols
                .iter()
                .enumerate()
                .any(|(r, &pc)| (row - r) == c.abs_diff(pc))
            {
                continue;
            }
            used[c] = true;
            cols.push(c);
            count += rec(n, row + 1, used, cols);
            cols.pop();
            used[c] = false;
        }
        count
    }
    rec(n, 0, &mut vec![false; n], &mut Vec::new())
}

fn queens_solution_valid(sol: &[Val]) -> bool {
    let n = sol.len();
    for i in 0..n {
        for j in i + 1..n {
            if sol[i] == sol[j] || (sol[i] - sol[j]).unsigned_abs() == (j - i) as u64 {
                return false;
            }
        }
    }
    true
}

/// Independent optimal Golomb ruler search: smallest last mark for `n`
/// marks, by iterative deepening over the ruler length with a difference
/// bitmask.
fn golomb_optimum(n: usize) -> Val {
    fn search(marks: &mut Vec<Val>, diffs: u128, n: usize, len: Val) -> bool {
        if marks.len() == n {
            return true;
        }
        let remaining = (n - marks.len()) as Val;
        let last = *marks.last().unwrap();
        let hi = len - remaining * (remaining - 1) / 2;
        for m in last + 1..=hi {
            let mut nd = diffs;
            let mut ok = true;
            for &p in marks.iter() {
                let bit = 1u128 << (m - p);
                if nd & bit != 0 {
                    ok = false;
                    break;
                }
                nd |= bit;
            }
            if !ok {
                continue;
            }
            marks.push(m);
            if search(marks, nd, n, len) {
                return true;
            }
            marks.pop();
        }
        false
    }
    let lower = (n * (n - 1) / 2) as Val;
    let mut len = lower;
    loop {
        let mut marks = vec![0];
        if search(&mut marks, 0, n, len) {
            return len;
        }
        len += 1;
    }
}

fn golomb_solution_valid(marks: &[Val]) -> bool {
    let mut diffs = BTreeSet::new();
    for i in 0..marks.len() {
        for j in i + 1..marks.len() {
            let d = marks[j] - marks[i];
            if d <= 0 || !diffs.insert(d) {
                return false;
            }
        }
    }
    true
}

/// Criterion 6: reference solution counts and optima, cross-checked
/// against independent brute-force oracles, with extensional
/// re-validation of every reported solution.
#[test]
fn criterion_6_reference_solutions() {
    const LABEL: &str = "reference solutions";
    let branch = BranchSpec::default();
    for n in [4usize, 8] {
        let model = models::build("queens", n, Mode::Views).unwrap();
        let mut sols: Vec<Vec<Val>> = Vec::new();
        let stats = dfs(model.space, branch, None, |s| sols.push(s.solution()));
        let expected = queens_by_permutations(n);
        if stats.solutions != expected {
            fail(
                6,
                LABEL,
                &format!("queens({n}): {} solutions, oracle says {expected}", stats.solutions),
            );
        }
        for sol in &sols {
            if !queens_solution_valid(sol) {
                fail(6, LABEL, &format!("queens({n}): invalid solution {sol:?}"));
            }
        }
        println!("  queens({n}): {} solutions (oracle {expected})", stats.solutions);
    }
    for (n, known) in [(6usize, 17), (8, 34)] {
        let model = models::build("golomb", n, Mode::Views).unwrap();
        let obj = model.objective.unwrap();
        let (best, _) = branch_and_bound(model.space, obj, branch);
        let Some((marks, length)) = best else {
            fail(6, LABEL, &format!("golomb({n}): no solution found"));
        };
        let oracle = golomb_optimum(n);
        if length != known || oracle != known {
            fail(
                6,
                LABEL,
                &format!("golomb({n}): solver {length}, oracle {oracle}, expected {known}"),
            );
        }
        if !golomb_solution_valid(&marks) || *marks.last().unwrap() != length {
            fail(6, LABEL, &format!("golomb({n}): invalid ruler {marks:?}"));
        }
        println!("  golomb({n}): optimum {length} with ruler {marks:?} (oracle {oracle})");
    }
    pass(6, LABEL);
}

/// Criterion 7: no missed wakeups with declared subscriptions, and
/// masking any declared subscription is detected.
#[test]
fn criterion_7_event_soundness() {
    const LABEL: &str = "event soundness";
    // exhausts every catalog universe with at most one Boolean times two
    // small-int variables (2,883 tuples); larger universes are strided
    const CAP: usize = 3_000;
    for case in catalog() {
        if let Err(e) = check_events(&case, CAP) {
            fail(7, LABEL, &e);
        }
        if let Err(e) = check_masked(&case, CAP) {
            fail(7, LABEL, &e);
        }
    }
    pass(7, LABEL);
}
