//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. Built with `harness = false` so the lines always reach stdout.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use pdetlab::complex::CellComplex;
use pdetlab::families::{diminished_trapezohedron, polygon, pyramid, simplex, simplex_skeleton};
use pdetlab::linalg::{charpoly_signed, charpoly_unsigned, pdet};
use pdetlab::orientation::{
    dirac_operator, pair_middle_boundary, sign_solve, simplex_symmetric_boundary, verify_square_root_theorem,
};
use pdetlab::poly::{weighted_pdet, Monomial, MultiPoly, UniPoly};
use pdetlab::selfdual::{perfect_square_check, verify_tree_duality, SelfDual};
use pdetlab::trees::{
    enumerate_trees, laplacian_pdet, pair_torsion_check, tau, tau_via_pdet_chain, verify_factorization, weigh_trees,
    DEFAULT_BUDGET,
};
use pdetlab::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    err.to_string()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn simplex_counts() -> Outcome {
    for (n, k, expected) in [(3usize, 1i32, 3u64), (5, 2, 125)] {
        let s = simplex(n).map_err(e)?;
        let by_enum = tau(s.complex(), k, DEFAULT_BUDGET).map_err(e)?.value;
        let by_chain = tau_via_pdet_chain(s.complex(), k).map_err(e)?;
        ensure(by_enum == expected.into() && by_chain == expected.into(), || {
            format!("simplex{n}: τ{k} enumerated {by_enum}, chain {by_chain}, expected {expected}")
        })?;
    }
    let s = simplex(7).map_err(e)?;
    let started = Instant::now();
    let big = tau_via_pdet_chain(s.complex(), 3).map_err(e)?;
    let took = started.elapsed();
    let expected = BigInt::from(7).pow(10);
    ensure(big == expected, || format!("τ3(simplex7) = {big}, expected 7¹⁰"))?;
    ensure(took < Duration::from_secs(10), || format!("chain took {}", secs(took)))?;
    Ok(format!("τ = 3, 125 (enumeration and chain), 282475249 (chain, {})", secs(took)))
}

/// `(Σ xᵢ)(Σᵢ Πⱼ≠ᵢ yⱼ)` built term by term, `x` = vars `0..n`, `y` = `n..2n`.
fn polygon_expected(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for i in 0..n {
        for j in 0..n {
            let vars = std::iter::once(i).chain((0..n).filter(|&l| l != j).map(|l| n + l));
            p.add_term(Monomial::from_vars(vars).unwrap(), BigInt::from(1));
        }
    }
    p
}

fn polygons() -> Outcome {
    for n in 3..=10usize {
        let s = polygon(n).map_err(e)?;
        let c = s.complex();
        let b = c.boundary_matrix(1).map_err(e)?;
        let nn = BigInt::from(n);
        let p = laplacian_pdet(&b);
        ensure(p == &nn * &nn, || format!("polygon{n}: pdet(∂₁∂₁ᵗ) = {p}"))?;
        for i in 0..=1 {
            let en = tau(c, i, DEFAULT_BUDGET).map_err(e)?.value;
            let ch = tau_via_pdet_chain(c, i).map_err(e)?;
            ensure(en == nn && ch == nn, || format!("polygon{n}: τ{i} = {en} / {ch}"))?;
        }
        let x: Vec<usize> = (0..n).collect();
        let y: Vec<usize> = (n..2 * n).collect();
        let w = weighted_pdet(&b, &x, &y).map_err(e)?;
        let expected = polygon_expected(n);
        ensure(w.complement_transform(&x) == expected, || {
            format!("polygon{n}: complemented weighted pdet {}", w.complement_transform(&x))
        })?;
        // and the uncomplemented form against the enumerators
        let t0 = weigh_trees(&enumerate_trees(c, 0, DEFAULT_BUDGET).map_err(e)?, &x).map_err(e)?;
        let y_local: Vec<usize> = y.clone();
        let t1 = weigh_trees(&enumerate_trees(c, 1, DEFAULT_BUDGET).map_err(e)?, &y_local).map_err(e)?;
        let rhs = t0.complement_transform(&x).try_mul(&t1).map_err(e)?;
        ensure(w == rhs, || format!("polygon{n}: weighted pdet ≠ x^[n]τ₀(x⁻¹)τ₁(y)"))?;
    }
    Ok("n = 3..10: pdet = n², τ₀ = τ₁ = n, weighted pdet matches (Σx)(Σŷ) after x-complement".into())
}

fn square_roots() -> Outcome {
    let mut signs = Vec::new();
    let mut cases: Vec<(String, SelfDual, u64, bool)> = Vec::new();
    for n in [3usize, 5, 7, 9] {
        cases.push((format!("polygon{n}"), polygon(n).map_err(e)?, n as u64, n == 5));
    }
    cases.push(("simplex3".into(), simplex(3).map_err(e)?, 3, false));
    cases.push(("simplex5".into(), simplex(5).map_err(e)?, 125, true));
    for (name, s, expected, weighted) in &cases {
        let paired = pair_middle_boundary(s).map_err(e)?;
        let eps = sign_solve(&paired).map_err(|why| format!("{name}: sign_solve infeasible: {why}"))?;
        let r = verify_square_root_theorem(s, &eps, *weighted, DEFAULT_BUDGET).map_err(e)?;
        ensure(r.parity_holds, || format!("{name}: solved matrix lacks the symmetry"))?;
        ensure(r.pdet.abs() == BigInt::from(*expected), || format!("{name}: |pdet(∂)| = {}", r.pdet.abs()))?;
        ensure(r.tau_k == BigInt::from(*expected) && r.tau_below == r.tau_k, || {
            format!("{name}: τk = {}, τk−1 = {}", r.tau_k, r.tau_below)
        })?;
        if let Some(w) = &r.weighted {
            ensure(w.holds(), || format!("{name}: weighted square root fails"))?;
            if w.sign > 0 {
                ensure(w.y_lhs == w.y_rhs && w.x_lhs == w.x_rhs, || format!("{name}: weighted forms differ"))?;
            }
        }
        signs.push(format!("{name} {}", r.pdet));
    }
    for n in [4usize, 6] {
        let paired = pair_middle_boundary(&polygon(n).map_err(e)?).map_err(e)?;
        ensure(sign_solve(&paired).is_err(), || format!("polygon{n}: sign_solve unexpectedly succeeded"))?;
    }
    Ok(format!(
        "|pdet(∂)| = τk = τk−1; polygon4, polygon6 infeasible as predicted; weighted forms equal up to sgn pdet(∂); signed pdet: {}",
        signs.join(", ")
    ))
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn spectrum() -> Outcome {
    let mut took = Duration::ZERO;
    for (k, bc) in [(1u64, (1u64, 2u64)), (2, (4, 6)), (3, (15, 20))] {
        let n = 2 * k + 1;
        let (b, c) = (binom(n - 1, k + 1), binom(n - 1, k));
        ensure((b, c) == bc, || format!("k={k}: (B, C) = ({b}, {c})"))?;
        let started = Instant::now();
        let p = simplex_symmetric_boundary(k as usize).map_err(e)?;
        let lap = charpoly_unsigned(&p.matrix.gram()).map_err(e)?;
        let signed = charpoly_signed(&p.matrix).map_err(e)?;
        took = started.elapsed();
        let tb = UniPoly::monomial(b as usize);
        let want_lap = &tb * &UniPoly::linear(n as i64).pow(c as u32);
        let t2 = UniPoly::monomial(2);
        let shift = if k % 2 == 1 { n as i64 } else { -(n as i64) };
        let want_signed = &tb * &(&t2 + &UniPoly::constant(shift.into())).pow((c / 2) as u32);
        ensure(lap == want_lap, || format!("k={k}: det(t+∂∂ᵗ) = {lap}"))?;
        ensure(signed == want_signed, || format!("k={k}: det(t−∂) = {signed}"))?;
        ensure(p.matrix.trace() == BigInt::from(0), || format!("k={k}: nonzero trace"))?;
    }
    ensure(took < Duration::from_secs(30), || format!("k=3 took {}", secs(took)))?;
    Ok(format!("k = 1, 2, 3 match tᴮ(t+n)ᶜ and tᴮ(t²±n)^(C/2); k=3 in {}", secs(took)))
}

fn linalg_properties() -> Outcome {
    const SAMPLES: usize = 250;
    let results = common::linalg_suite(20_240_611, SAMPLES);
    let failed: Vec<String> = results
        .iter()
        .filter(|(_, f, _)| *f > 0)
        .map(|(name, f, first)| format!("{name}: {f} failures, e.g. {}", first.as_deref().unwrap_or("?")))
        .collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} properties × {SAMPLES} instances, 0 failures", results.len()))
}

fn factorizations() -> Outcome {
    let mut complexes: Vec<(String, CellComplex)> = Vec::new();
    for n in 3..=7 {
        complexes.push((format!("polygon{n}"), polygon(n).map_err(e)?.into_complex()));
    }
    for n in 4..=5 {
        complexes.push((format!("simplex{n}"), simplex(n).map_err(e)?.into_complex()));
    }
    complexes.push(("pyramid-polygon5".into(), pyramid(&polygon(5).map_err(e)?).map_err(e)?.into_complex()));
    let mut checked = 0;
    for (name, c) in &complexes {
        for i in 0..=c.dim() {
            let f = verify_factorization(c, i, true, DEFAULT_BUDGET).map_err(|x| format!("{name} ∂{i}: {x}"))?;
            ensure(f.holds, || format!("{name} ∂{i}: pdet {} ≠ {}·{}", f.pdet, f.tau_below, f.tau))?;
            ensure(f.weighted.as_ref().is_some_and(|w| w.holds), || format!("{name} ∂{i}: weighted form fails"))?;
            let p = pair_torsion_check(c, i, 50, 7, DEFAULT_BUDGET).map_err(e)?;
            ensure(p.holds(), || format!("{name} ∂{i}: {}", p.failures.join("; ")))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (complex, dim) cases, unweighted and weighted, with pair torsion on ≤ 50 pairs each"))
}

fn self_dual_structures() -> Result<Vec<(String, SelfDual)>, String> {
    let mut out = Vec::new();
    for n in 3..=10 {
        out.push((format!("polygon{n}"), polygon(n).map_err(e)?));
    }
    for n in 1..=7 {
        out.push((format!("simplex{n}"), simplex(n).map_err(e)?));
    }
    for n in 3..=7 {
        out.push((format!("pyramid-polygon{n}"), pyramid(&polygon(n).map_err(e)?).map_err(e)?));
    }
    for n in 2..=4 {
        out.push((format!("pyramid-simplex{n}"), pyramid(&simplex(n).map_err(e)?).map_err(e)?));
    }
    let p3 = pyramid(&polygon(3).map_err(e)?).map_err(e)?;
    out.push(("pyramid-pyramid-polygon3".into(), pyramid(&p3).map_err(e)?));
    for m in 3..=6 {
        out.push((format!("trapezohedron{m}"), diminished_trapezohedron(m).map_err(e)?));
    }
    Ok(out)
}

fn duality() -> Outcome {
    let structures = self_dual_structures()?;
    let (mut pairs, mut skipped, mut squares) = (0, 0, 0);
    for (name, s) in &structures {
        let d = s.ball_dim();
        for i in 0..d {
            match verify_tree_duality(s, i, DEFAULT_BUDGET) {
                Ok(r) => {
                    ensure(r.holds(), || {
                        format!("{name} i={i}: τ {} vs {}, {} tree failures", r.tau_i, r.tau_j, r.failures.len())
                    })?;
                    pairs += 1;
                }
                Err(Error::BudgetExceeded { .. }) => skipped += 1,
                Err(x) => return Err(format!("{name} i={i}: {x}")),
            }
        }
        if d > 0 && d % 2 == 0 {
            let small = s.complex().f(d / 2) <= 12;
            let r = perfect_square_check(s, small, DEFAULT_BUDGET).map_err(e)?;
            ensure(r.holds(), || format!("{name}: pdet {} root {:?} τk {}", r.pdet, r.root, r.tau_k))?;
            squares += 1;
        }
    }
    Ok(format!(
        "{} structures: {pairs} duality checks, {skipped} over budget, {squares} perfect squares",
        structures.len()
    ))
}

fn torsion() -> Outcome {
    let c = simplex_skeleton(6, 2).map_err(e)?;
    let trees = enumerate_trees(&c, 2, DEFAULT_BUDGET).map_err(e)?;
    let two = BigInt::from(2);
    let with_two = trees.iter().filter(|t| t.torsion == two).count();
    let sum: BigInt = trees.iter().map(|t| &t.torsion * &t.torsion).sum();
    let chain = tau_via_pdet_chain(&c, 2).map_err(e)?;
    ensure(with_two > 0, || "no tree with torsion 2".into())?;
    ensure(sum == chain, || format!("Σ|H̃₁|² = {sum}, chain {chain}"))?;
    Ok(format!("{} trees, {with_two} with torsion 2, Σ|H̃₁|² = {sum} = chain", trees.len()))
}

fn dirac() -> Outcome {
    let mut complexes: Vec<(String, CellComplex)> = self_dual_structures()?
        .into_iter()
        .map(|(n, s)| (n, s.into_complex()))
        .collect();
    for (n, k) in [(4, 1), (5, 1), (5, 2), (6, 2), (6, 3)] {
        complexes.push((format!("simplex{n}-skel{k}"), simplex_skeleton(n, k).map_err(e)?));
    }
    for (name, c) in &complexes {
        let b = c.total_boundary();
        let dp = pdet(&dirac_operator(c)).map_err(e)?;
        let lp = pdet(&b.gram()).map_err(e)?;
        ensure(&dp * &dp == &lp * &lp, || format!("{name}: pdet(∂+∂ᵗ) = {dp}, pdet(∂∂ᵗ) = {lp}"))?;
    }
    let v = CellComplex::builder().cell("v", 0, &[]).build().map_err(e)?;
    let single = pdet(&dirac_operator(&v)).map_err(e)?;
    ensure(single == BigInt::from(-1), || format!("single vertex: {single}"))?;
    Ok(format!("{} complexes; single vertex gives -1", complexes.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("simplex tree counts", simplex_counts),
        ("polygon identities", polygons),
        ("antipodal square root", square_roots),
        ("simplex spectrum", spectrum),
        ("linear-algebra property suite", linalg_properties),
        ("matrix-tree factorization", factorizations),
        ("duality suite", duality),
        ("torsion sensitivity", torsion),
        ("Dirac suite", dirac),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = secs(started.elapsed());
        match outcome {
            Ok(detail) => println!("criterion {} [PRIMARY] {name}: PASS ({t}) {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} [PRIMARY] {name}: FAIL ({t}) {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
