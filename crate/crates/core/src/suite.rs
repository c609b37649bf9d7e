//! Verification suites that run every applicable identity on one complex and
//! collect the outcomes in a [`RunReport`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::families::Structure;
use crate::linalg::{binet_cauchy_pdet, binomial, pdet, rank, IntMatrix};
use crate::orientation::{dirac_pdet_pair, dirac_squares_to_laplacian, pair_middle_boundary, sign_solve, verify_square_root_theorem};
use crate::report::{RunReport, Status};
use crate::selfdual::{perfect_square_check, verify_tree_duality, SelfDual};
use crate::trees::{pair_torsion_check, tau, tau_chain, verify_factorization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Linalg,
    MatrixTree,
    Duality,
    Antipodal,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Linalg => "linalg",
            Suite::MatrixTree => "matrix-tree",
            Suite::Duality => "duality",
            Suite::Antipodal => "antipodal",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "linalg" => Suite::Linalg,
            "matrix-tree" => Suite::MatrixTree,
            "duality" => Suite::Duality,
            "antipodal" => Suite::Antipodal,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub budget: u128,
    pub pair_samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            budget: crate::trees::DEFAULT_BUDGET,
            pair_samples: 50,
            seed: 0,
        }
    }
}

/// Runs the requested suite, appending to `report`.
pub fn run_suite(s: &Structure, suite: Suite, opts: &SuiteOptions, report: &mut RunReport) -> Result<()> {
    let c = s.complex();
    report.result("f-vector", format!("{:?}", c.f_vector()));
    if suite.includes(Suite::Linalg) {
        linalg_suite(c, opts, report)?;
    }
    if suite.includes(Suite::MatrixTree) {
        matrix_tree_suite(c, opts, report)?;
    }
    let needs_alpha = |report: &mut RunReport, what: &str| {
        report.skip(format!("{what} suite"), "α present", "input has no self-dual structure");
    };
    if suite.includes(Suite::Duality) {
        match s.self_dual() {
            Some(sd) => duality_suite(sd, opts, report)?,
            None => needs_alpha(report, "duality"),
        }
    }
    if suite.includes(Suite::Antipodal) {
        match s.self_dual() {
            Some(sd) => antipodal_suite(sd, opts, report)?,
            None => needs_alpha(report, "antipodal"),
        }
    }
    Ok(())
}

/// Number of minors a Binet–Cauchy style double loop over `b` visits.
fn minor_pairs(b: &IntMatrix) -> u128 {
    let r = rank(b);
    binomial(b.rows(), r).saturating_mul(binomial(b.cols(), r))
}

fn linalg_suite(c: &CellComplex, opts: &SuiteOptions, report: &mut RunReport) -> Result<()> {
    let total = c.total_boundary();
    report.compare("∂∂ = 0", "∂² = 0", true, (&total * &total).is_zero());
    for i in 0..=c.dim() {
        let b = c.boundary_matrix(i)?;
        let left = pdet(&b.gram())?;
        report.compare(format!("pdet(∂{i}∂{i}ᵗ) = pdet(∂{i}ᵗ∂{i})"), "pdet(AB) = pdet(BA)", &left, pdet(&b.transpose().gram())?);
        let name = format!("Binet–Cauchy ∂{i}");
        let anchor = "pdet(BBᵗ) = Σ det(B[I,J])²";
        if minor_pairs(&b) <= opts.budget {
            report.compare(name, anchor, &left, binet_cauchy_pdet(&b));
        } else {
            report.skip(name, anchor, "minor count exceeds budget");
        }
    }
    report.compare("Dirac square", "(∂+∂ᵗ)² = ∂∂ᵗ + ∂ᵗ∂", true, dirac_squares_to_laplacian(c));
    let (dirac, lap) = dirac_pdet_pair(c)?;
    report.result("pdet(∂+∂ᵗ)", &dirac);
    report.compare("Dirac pdet", "pdet(∂+∂ᵗ)² = pdet(∂∂ᵗ)²", &lap * &lap, &dirac * &dirac);
    Ok(())
}

/// Skips the check instead of failing when the work is over budget or the
/// dimension is not acyclic enough.
fn skippable<T>(report: &mut RunReport, name: &str, anchor: &str, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::BudgetExceeded { .. } | Error::NotAcyclic { .. })) => {
            report.skip(name, anchor, e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn matrix_tree_suite(c: &CellComplex, opts: &SuiteOptions, report: &mut RunReport) -> Result<()> {
    for i in 0..=c.dim() {
        let chain = match skippable(report, &format!("τ{i} chain"), "τᵢ = pdet(∂ᵢ∂ᵢᵗ)/τᵢ₋₁", tau_chain(c, i))? {
            Some(ch) => ch,
            None => continue,
        };
        let by_chain = chain.last().expect("chain is nonempty").clone();
        report.result(format!("τ{i}"), &by_chain);
        let name = format!("τ{i} enumeration = chain");
        let anchor = "Σ_T |H̃ᵢ₋₁(T)|² = pdet(∂ᵢ∂ᵢᵗ)/τᵢ₋₁";
        if let Some(t) = skippable(report, &name, anchor, tau(c, i, opts.budget))? {
            report.compare(name, anchor, &by_chain, &t.value);
        } else {
            continue;
        }

        let b = c.boundary_matrix(i)?;
        let weights = minor_pairs(&b) <= opts.budget;
        let name = format!("factorization ∂{i}");
        let anchor = "pdet(∂ᵢ∂ᵢᵗ) = τᵢ₋₁(S)·τᵢ(S)";
        if let Some(f) = skippable(report, &name, anchor, verify_factorization(c, i, weights, opts.budget))? {
            report.compare(name, anchor, &f.pdet, &f.tau_below * &f.tau);
            let name = format!("weighted factorization ∂{i}");
            let anchor = "pdet(X∂ᵢY∂ᵢᵗ) = x^[n]τᵢ₋₁(S,x⁻¹)·τᵢ(S,y)";
            match f.weighted {
                Some(w) => {
                    let lhs = w.lhs.render(&w.vars);
                    report.compare(name, anchor, w.rhs.render(&w.vars), lhs);
                }
                None => report.skip(name, anchor, "minor count exceeds budget"),
            }
        }

        let name = format!("pair torsion ∂{i}");
        let anchor = "|det ∂[I,J]| = |H̃ᵢ₋₁(T,T′)| = |H̃ᵢ₋₁(T)|·|H̃ᵢ₋₂(T′)|";
        let r = pair_torsion_check(c, i, opts.pair_samples, opts.seed, opts.budget);
        if let Some(p) = skippable(report, &name, anchor, r)? {
            let note = Some(format!("{} of {} pairs", p.pairs_checked, p.total_pairs));
            let actual = if p.holds() { "0 failures".to_string() } else { p.failures.join("; ") };
            let status = if p.holds() { Status::Pass } else { Status::Fail };
            report.push(name, anchor, "0 failures", actual, status, note);
        }
    }
    Ok(())
}

fn duality_suite(s: &SelfDual, opts: &SuiteOptions, report: &mut RunReport) -> Result<()> {
    let d = s.ball_dim();
    for i in 0..d {
        let j = d - 1 - i;
        let name = format!("duality τ{i} ↔ τ{j}");
        let anchor = "τᵢ(S) = τ_{d−1−i}(S)";
        let Some(r) = skippable(report, &name, anchor, verify_tree_duality(s, i, opts.budget))? else {
            continue;
        };
        report.compare(name, anchor, &r.tau_i, &r.tau_j);
        let actual = if r.failures.is_empty() { "0 failures".to_string() } else { r.failures.join("; ") };
        report.compare(
            format!("dual of each {i}-tree"),
            "T∨ is a j-tree, |H̃(T)| = |H̃(T∨)|, (T∨)∨ = α⁻²(T)",
            "0 failures",
            actual,
        );
        report.compare(format!("weighted duality τ{i}"), "τᵢ(S,x) = x^[n]·τⱼ(S,x⁻¹)", true, r.weighted_holds);
    }
    if d % 2 == 0 && d > 0 {
        let k = d / 2;
        let b = s.complex().boundary_matrix(k)?;
        let weights = minor_pairs(&b) <= opts.budget;
        let name = format!("perfect square ∂{k}");
        let anchor = "pdet(∂ₖ∂ₖᵗ) = τₖ(S)²";
        if let Some(r) = skippable(report, &name, anchor, perfect_square_check(s, weights, opts.budget))? {
            let root = r.root.as_ref().map_or("not a square".to_string(), BigInt::to_string);
            report.compare(name, anchor, &r.tau_k, root);
            if let Some(w) = r.weighted {
                report.compare(
                    format!("weighted perfect square ∂{k}"),
                    "pdet(X∂ₖY∂ₖᵗ) = τₖ(S,x)·τₖ(S,y)",
                    w.rhs.render(&w.vars),
                    w.lhs.render(&w.vars),
                );
            }
        }
    } else {
        report.skip("perfect square", "pdet(∂ₖ∂ₖᵗ) = τₖ(S)²", format!("ball dimension {d} is odd"));
    }
    Ok(())
}

fn antipodal_suite(s: &SelfDual, opts: &SuiteOptions, report: &mut RunReport) -> Result<()> {
    let d = s.ball_dim();
    let anchor = "∂ₖᵗ = (−1)ᵏ∂ₖ after reorienting k-cells";
    if d % 2 != 0 || d == 0 {
        report.skip("sign_solve", anchor, format!("ball dimension {d} is not a positive even number"));
        return Ok(());
    }
    let paired = pair_middle_boundary(s)?;
    let k = paired.k;
    let signs = match sign_solve(&paired) {
        Ok(v) => v,
        Err(why) => {
            report.push("sign_solve", anchor, "solvable", "infeasible", Status::ExpectedNegative, Some(why.to_string()));
            return Ok(());
        }
    };
    report.push("sign_solve", anchor, "solvable", "solvable", Status::Pass, None);
    report.result("signs", serde_json::to_string(&signs)?);

    let m = paired.signed(&signs)?;
    let weights = minor_pairs(&m) <= opts.budget && paired.size() <= 24;
    let r = skippable(report, "square root", "pdet(∂) = τₖ(S) = τₖ₋₁(S)", verify_square_root_theorem(s, &signs, weights, opts.budget))?;
    let Some(r) = r else { return Ok(()) };
    report.result("pdet(∂) signed", &r.pdet);
    report.compare("paired symmetry", anchor, true, r.parity_holds);
    report.compare(format!("|pdet(∂{k})| = τ{k}"), "pdet(∂) = τₖ(S)", &r.tau_k, r.pdet.abs());
    report.compare(format!("τ{k} = τ{}", k - 1), "τₖ(S) = τₖ₋₁(S)", &r.tau_below, &r.tau_k);
    report.compare(format!("pdet(∂{k}∂{k}ᵗ) = pdet(∂{k})²"), "pdet(∂∂ᵗ) = pdet(∂)²", &r.pdet * &r.pdet, &r.laplacian_pdet);
    match r.weighted {
        Some(w) => {
            let sign = BigInt::from(w.sign);
            let note = Some(format!("right side multiplied by sign of pdet(∂) = {}", w.sign));
            let mut cmp = |name: &str, anchor: &str, lhs: String, rhs: String| {
                let status = if lhs == rhs { Status::Pass } else { Status::Fail };
                report.push(name, anchor, rhs, lhs, status, note.clone());
            };
            cmp(
                "weighted root y",
                "pdet(Y∂ᵗ) = τₖ(S,y)",
                w.y_lhs.render(&w.y_vars),
                w.y_rhs.scale(&sign).render(&w.y_vars),
            );
            cmp(
                "weighted root x",
                "pdet(X∂) = x^[n]·τₖ₋₁(S,x⁻¹)",
                w.x_lhs.render(&w.x_vars),
                w.x_rhs.scale(&sign).render(&w.x_vars),
            );
        }
        None => report.skip("weighted root", "pdet(Y∂ᵗ) = τₖ(S,y)", "matrix too large for subset expansion"),
    }
    Ok(())
}
